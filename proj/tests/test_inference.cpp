#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "depthlab/depth.hpp"
#include "depthlab/estimators.hpp"
#include "depthlab/geometry.hpp"
#include "depthlab/inference.hpp"
#include "support.hpp"

using namespace depthlab;
using testing_support::gaussian_sample;

namespace {

// Exact null distribution of the rank sum of m out of {1..N} by enumeration.
std::vector<double> exact_rank_sums(std::size_t m, std::size_t N) {
  std::vector<double> sums;
  std::vector<bool> pick(N, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(m), true);
  do {
    double s = 0;
    for (std::size_t i = 0; i < N; ++i) {
      if (pick[i]) s += static_cast<double>(i + 1);
    }
    sums.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return sums;
}

DataMatrix scaled(const DataMatrix& X, double factor, double shift) {
  std::vector<double> v(X.values().begin(), X.values().end());
  for (double& x : v) x = factor * x + shift;
  return DataMatrix(X.rows(), X.cols(), v);
}

}  // namespace

TEST_CASE("rank sum moments and p-values against exact enumeration") {
  for (std::size_t m = 2; m <= 6; ++m) {
    for (std::size_t n = 2; n + m <= 12; ++n) {
      const auto sums = exact_rank_sums(m, m + n);
      const double count = static_cast<double>(sums.size());
      const double mean = std::accumulate(sums.begin(), sums.end(), 0.0) / count;
      double var = 0.0;
      for (double s : sums) var += (s - mean) * (s - mean);
      var /= count;
      const auto r = wilcoxon_from_ranks(mean, m, n, Alternative::Greater);
      CHECK(r.mean == doctest::Approx(mean).epsilon(1e-12));
      CHECK(r.variance == doctest::Approx(var).epsilon(1e-12));
      if (m >= 4 && n >= 4) {
        for (double s = std::ceil(mean); s <= mean + 2.5 * std::sqrt(var); s += 1.0) {
          const double exact = static_cast<double>(std::count_if(sums.begin(), sums.end(), [s](double v) { return v >= s; })) / count;
          CHECK(std::abs(wilcoxon_from_ranks(s, m, n, Alternative::Greater).p_value - exact) <= 0.03);
        }
      }
    }
  }
  const auto two = wilcoxon_from_ranks(21.0, 3, 3, Alternative::TwoSided);
  CHECK(two.p_value >= 0.0);
  CHECK(two.p_value <= 1.0);
  CHECK(wilcoxon_from_ranks(10.5, 3, 3, Alternative::TwoSided).p_value == 1.0);
  const auto lo = wilcoxon_from_ranks(6.0, 3, 3, Alternative::Less);
  const auto hi = wilcoxon_from_ranks(15.0, 3, 3, Alternative::Greater);
  CHECK(lo.p_value == doctest::Approx(hi.p_value));
}

TEST_CASE("ranks by depth") {
  const std::vector<double> d = {0.3, 0.1, 0.3, 0.9};
  const std::vector<std::size_t> sub = {0, 1, 2, 3};
  CHECK(rank_by_depth(d, sub) == std::vector<std::size_t>{3, 1, 3, 4});
  const std::vector<std::size_t> bad = {4};
  CHECK_THROWS_AS(rank_by_depth(d, bad), std::out_of_range);
  CHECK(parse_alternative("two.sided") == Alternative::TwoSided);
  CHECK_THROWS_AS(parse_alternative("bigger"), std::invalid_argument);
}

TEST_CASE("multivariate Wilcoxon test detects a scale difference") {
  const auto X = gaussian_sample(40, 2, 1);
  const auto Y = scaled(gaussian_sample(40, 2, 2), 3.0, 0.0);
  MethodDescriptor m;
  m.kind = DepthMethod::Mahalanobis;
  const auto r = m_wilcoxon_test(X, Y, m, Alternative::Greater);
  CHECK(r.p_value < 0.01);
  CHECK(m_wilcoxon_test(X, Y, m, Alternative::Less).p_value > 0.99);

  const auto Z = gaussian_sample(80, 2, 1);
  const auto depth = compute_depth(Z, Z, m).values;
  CHECK(depth.size() == 80);
  CHECK_THROWS_AS(m_wilcoxon_test(X, DataMatrix::from_rows({{0, 0}}), m), std::invalid_argument);
}

TEST_CASE("DD-plots") {
  const auto X = gaussian_sample(30, 2, 3);
  MethodDescriptor m;
  m.kind = DepthMethod::Mahalanobis;
  const auto same = dd_plot(X, X, m);
  CHECK(same.depth_x == same.depth_y);
  CHECK(same.labels.size() == 60);
  CHECK(same.labels[29] == SampleLabel::X);
  CHECK(same.labels[30] == SampleLabel::Y);

  const auto shifted = dd_plot(X, scaled(X, 1.0, 5.0), m, true);
  for (std::size_t i = 0; i < 60; ++i) CHECK(shifted.depth_x[i] == doctest::Approx(shifted.depth_y[i]));

  const auto norm = dd_mvnorm(X, 50, false, 0.05, 7, m);
  CHECK(norm.depth_x.size() == 80);
  CHECK(norm.depth_x == dd_mvnorm(X, 50, false, 0.05, 7, m).depth_x);
  const auto robust = dd_mvnorm(X, 50, true, 0.05, 7, m);
  CHECK(robust.depth_y.size() == 80);
  CHECK_THROWS_AS(dd_mvnorm(X, 0, false, 0.05, 7, m), std::invalid_argument);
}

TEST_CASE("scale and asymmetry curves") {
  const auto X = gaussian_sample(120, 2, 5);
  MethodDescriptor m;
  m.kind = DepthMethod::Projection;
  m.nproj = 200;
  const auto alphas = default_alpha_grid();
  CHECK(alphas.size() == 101);
  const auto sc = scale_curve(X, alphas, m);
  for (std::size_t k = 1; k < sc.values.size(); ++k) CHECK(sc.values[k] <= sc.values[k - 1]);
  std::vector<Vec2> all;
  for (std::size_t i = 0; i < X.rows(); ++i) all.push_back({X(i, 0), X(i, 1)});
  CHECK(sc.values[0] == polygon_area(convex_hull(all)));
  CHECK(sc.values.back() == 0.0);

  const auto asym = asymmetry_curve(X, alphas, m);
  CHECK(asym.alphas.size() == asym.values.size());
  CHECK(asym.alphas.size() < alphas.size());  // the deepest levels hold too few points
  for (double v : asym.values) CHECK(v >= 0.0);
  const auto moving = asymmetry_curve(X, alphas, m, true);
  CHECK(moving.alphas == asym.alphas);
  CHECK_THROWS_AS(scale_curve(gaussian_sample(20, 3, 1), alphas, m), std::invalid_argument);
}
