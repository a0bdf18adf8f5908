// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <Eigen/Dense>
#include <chrono>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "depthlab/depth.hpp"
#include "depthlab/estimators.hpp"
#include "depthlab/inference.hpp"
#include "depthlab/local_depth.hpp"
#include "depthlab/location_scale.hpp"
#include "depthlab/parallel.hpp"
#include "depthlab/regression.hpp"
#include "depthlab/serialize.hpp"
#include "support.hpp"

using namespace depthlab;
using testing_support::gaussian_sample;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

const std::string kDataDir = DEPTHLAB_DATA_DIR;

std::pair<std::vector<double>, std::vector<double>> stars() {
  const auto m = load_matrix_file(kDataDir + "/starsCYG.csv", true);
  return {m.column(0), m.column(1)};
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome deepest_regression_stars() {
  const auto [x, y] = stars();
  const auto fit = deepest_regression(x, y);
  const bool ok = std::abs(fit.intercept - -7.903043) <= 1e-3 && std::abs(fit.slope - 2.913043) <= 1e-3;
  return {ok, fmt("coef (%.6f, %.6f)", fit.intercept, fit.slope)};
}

Outcome trimmed_regression_stars() {
  const auto [x, y] = stars();
  const auto fit = trim_proj_reg(x, y, 0.1);
  const bool ok = std::abs(fit.intercept - -7.403531) <= 2e-2 && std::abs(fit.slope - 2.802837) <= 2e-2;
  return {ok, fmt("coef (%.6f, %.6f)", fit.intercept, fit.slope)};
}

Outcome wilcoxon_moments() {
  const std::size_t m = 20, n = 30, N = m + n, perms = 2000;
  const auto Z = gaussian_sample(N, 2, 314);
  const auto depth = compute_depth(Z, Z, MethodDescriptor{}).values;
  std::vector<std::size_t> all(N);
  std::iota(all.begin(), all.end(), std::size_t{0});
  const auto ranks = rank_by_depth(depth, all);

  CounterRng rng(2718, streams::kUser);
  std::vector<std::size_t> perm = all;
  std::vector<double> S(perms);
  for (std::size_t p = 0; p < perms; ++p) {
    for (std::size_t i = N - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    double s = 0;
    for (std::size_t i = 0; i < m; ++i) s += static_cast<double>(ranks[perm[i]]);
    S[p] = s;
  }
  const double mean = std::accumulate(S.begin(), S.end(), 0.0) / perms;
  double var = 0;
  for (double s : S) var += (s - mean) * (s - mean);
  var /= perms - 1;
  const auto theory = wilcoxon_from_ranks(0.0, m, n, Alternative::Greater);
  const double se = std::sqrt(var / perms);
  const bool ok = std::abs(mean - theory.mean) <= 2 * se && std::abs(var / theory.variance - 1.0) <= 0.10;
  return {ok, fmt("E(S) %.2f vs %.1f (2 se %.2f); ", mean, theory.mean, 2 * se) +
                  fmt("Var(S) %.1f vs %.1f (ratio %.4f)", var, theory.variance, var / theory.variance)};
}

Outcome approximation_soundness() {
  MethodDescriptor m;
  m.kind = DepthMethod::Tukey;
  m.nproj = 1000;
  double over = 0.0;
  std::size_t count = 0, violations = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto X = gaussian_sample(100, 2, 1000 + seed);
    const auto approx = compute_depth(X, X, m).values;
    for (std::size_t i = 0; i < X.rows(); ++i) {
      const double exact = depth_tukey_exact_2d(X.row(i), X);
      if (approx[i] < exact) ++violations;
      over += approx[i] - exact;
      ++count;
    }
  }
  const double mean_over = over / static_cast<double>(count);
  return {violations == 0 && mean_over <= 0.05,
          fmt("%.0f violations, mean overestimate %.5f", static_cast<double>(violations), mean_over)};
}

Outcome local_reduction() {
  std::size_t mismatches = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto X = gaussian_sample(40, 2 + seed % 2, 2000 + seed);
    for (auto base : {DepthMethod::Euclidean, DepthMethod::Mahalanobis, DepthMethod::Projection, DepthMethod::Tukey,
                      DepthMethod::Zonoid, DepthMethod::LP}) {
      MethodDescriptor global;
      global.kind = base;
      MethodDescriptor local = global;
      local.kind = DepthMethod::Local;
      local.local_base = base;
      local.beta = 1.0;
      const auto g = compute_depth(X, X, global).values;
      const auto l = compute_depth(X, X, local).values;
      for (std::size_t i = 0; i < g.size(); ++i) {
        ++total;
        if (std::memcmp(&g[i], &l[i], sizeof(double)) != 0) ++mismatches;
      }
    }
  }
  return {mismatches == 0, fmt("%.0f of %.0f values differ", static_cast<double>(mismatches), static_cast<double>(total))};
}

Outcome depth_axioms() {
  std::ostringstream detail;
  bool ok = true;

  // T1: affine invariance.
  double worst_mahal = 0.0;
  std::size_t tukey_diffs = 0;
  CounterRng rng(99, streams::kUser);
  const auto X = gaussian_sample(50, 2, 3000);
  for (int map = 0; map < 100; ++map) {
    double A[4], det;
    do {
      for (double& a : A) a = 2.0 * rng.normal();
      det = A[0] * A[3] - A[1] * A[2];
    } while (std::abs(det) < 0.1);
    const double b0 = 5 * rng.normal(), b1 = 5 * rng.normal();
    std::vector<double> v;
    for (std::size_t i = 0; i < X.rows(); ++i) {
      v.push_back(A[0] * X(i, 0) + A[1] * X(i, 1) + b0);
      v.push_back(A[2] * X(i, 0) + A[3] * X(i, 1) + b1);
    }
    const DataMatrix Y(X.rows(), 2, v);
    for (std::size_t i = 0; i < X.rows(); ++i) {
      worst_mahal = std::max(worst_mahal, std::abs(depth_mahalanobis(Y.row(i), Y) - depth_mahalanobis(X.row(i), X)));
      tukey_diffs += depth_tukey_exact_2d(Y.row(i), Y) != depth_tukey_exact_2d(X.row(i), X);
    }
  }
  const bool t1 = worst_mahal <= 1e-10 && tukey_diffs == 0;
  detail << "T1 " << (t1 ? "ok" : "FAIL") << fmt(" (max |dMahal| %.2e, halfspace diffs %.0f)", worst_mahal, static_cast<double>(tukey_diffs));
  ok &= t1;

  // T2: vanishing at infinity.
  double diameter = 0.0;
  for (std::size_t i = 0; i < X.rows(); ++i) {
    for (std::size_t j = 0; j < X.rows(); ++j) diameter = std::max(diameter, std::hypot(X(i, 0) - X(j, 0), X(i, 1) - X(j, 1)));
  }
  const auto mean = X.mean();
  double worst_far = 0.0;
  for (auto kind : {DepthMethod::Euclidean, DepthMethod::Mahalanobis, DepthMethod::Projection, DepthMethod::Tukey,
                    DepthMethod::Zonoid, DepthMethod::LP, DepthMethod::Local}) {
    MethodDescriptor m;
    m.kind = kind;
    const auto ev = make_evaluator(X, m);
    for (double angle : {0.3, 2.0, 4.1}) {
      const std::vector<double> far = {mean[0] + 1e6 * diameter * std::cos(angle), mean[1] + 1e6 * diameter * std::sin(angle)};
      worst_far = std::max(worst_far, ev->depth(far));
    }
  }
  const std::vector<double> far = {mean[0] + 1e6 * diameter, mean[1]};
  worst_far = std::max(worst_far, depth_tukey_exact_2d(far, X));
  const bool t2 = worst_far < 1e-3;
  detail << "; T2 " << (t2 ? "ok" : "FAIL") << fmt(" (max far depth %.2e)", worst_far);
  ok &= t2;

  // T4: monotone along rays from the centre.
  std::size_t increases = 0;
  for (auto kind : {DepthMethod::Euclidean, DepthMethod::Mahalanobis}) {
    MethodDescriptor m;
    m.kind = kind;
    const auto ev = make_evaluator(X, m);
    for (int r = 0; r < 64; ++r) {
      const double t = 2 * std::numbers::pi * r / 64;
      double prev = ev->depth(mean);
      for (int s = 1; s <= 50; ++s) {
        const std::vector<double> p = {mean[0] + 0.1 * s * std::cos(t), mean[1] + 0.1 * s * std::sin(t)};
        const double d = ev->depth(p);
        increases += d > prev;
        prev = d;
      }
    }
  }
  detail << "; T4 " << (increases == 0 ? "ok" : "FAIL") << fmt(" (%.0f increases)", static_cast<double>(increases));
  ok &= increases == 0;

  // Z5: nested trimmed regions give a non-increasing scale curve.
  std::size_t scale_increases = 0;
  for (auto kind : {DepthMethod::Mahalanobis, DepthMethod::Projection, DepthMethod::Tukey, DepthMethod::Zonoid}) {
    MethodDescriptor m;
    m.kind = kind;
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto c = scale_curve(gaussian_sample(100, 2, 3100 + seed), default_alpha_grid(), m);
      for (std::size_t k = 1; k < c.values.size(); ++k) scale_increases += c.values[k] > c.values[k - 1];
    }
  }
  detail << "; Z5 " << (scale_increases == 0 ? "ok" : "FAIL");
  ok &= scale_increases == 0;
  return {ok, detail.str()};
}

Outcome oracle_equivalence() {
  std::size_t rd_mismatch = 0, ls_fail = 0;
  double worst_ls = 0.0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    CounterRng rng(seed, streams::kUser + 7);
    const std::size_t n = 2 + rng.below(11);
    std::vector<long> xi(n), yi(n);
    for (std::size_t i = 0; i < n; ++i) {
      xi[i] = static_cast<long>(rng.below(8));
      yi[i] = static_cast<long>(rng.below(10));
    }
    const std::size_t a = rng.below(n), b = (a + 1 + rng.below(n - 1)) % n;
    if (xi[a] == xi[b]) xi[b] = xi[a] + 1;
    const testing_support::ExactLine line{xi[a], yi[a], xi[b], yi[b]};
    std::vector<int> sign(n);
    for (std::size_t i = 0; i < n; ++i) sign[i] = line.sign(xi[i], yi[i]);
    const std::vector<double> x(xi.begin(), xi.end()), y(yi.begin(), yi.end());
    const double got = regression_depth(line.fit(), x, y) * static_cast<double>(n);
    rd_mismatch += std::llround(got) != static_cast<long long>(testing_support::nonfit_oracle(xi, sign));
  }
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    CounterRng rng(seed, streams::kUser + 8);
    const std::size_t n = 5 + rng.below(26);
    std::vector<double> y(n);
    for (double& v : y) v = rng.normal() * (1 + rng.below(3));
    const LSFit fit{rng.normal(), 0.2 + 2 * rng.uniform(), 1.0 + static_cast<double>(rng.below(4))};
    const double exact = ls_depth(fit, y);
    const double brute = testing_support::ls_depth_brute(fit, y, 100000);
    const double diff = std::abs(exact - brute);
    worst_ls = std::max(worst_ls, diff * static_cast<double>(n));
    ls_fail += diff > 1.0 / static_cast<double>(n) + 1e-12;
  }
  return {rd_mismatch == 0 && ls_fail == 0,
          fmt("regression depth mismatches %.0f/500; Student depth failures %.0f/500 (max |diff| %.2f/n)",
              static_cast<double>(rd_mismatch), static_cast<double>(ls_fail), worst_ls)};
}

Outcome covlp_checks() {
  const auto X = gaussian_sample(300, 3, 4000);
  const auto plain = cov_lp(X, 1.0, 1.0, 0.0);
  const auto mean = X.mean();
  double worst = 0.0;
  for (std::size_t j = 0; j < 3; ++j) {
    worst = std::max(worst, std::abs(plain.location(static_cast<Eigen::Index>(j)) - mean[j]));
    for (std::size_t k = 0; k < 3; ++k) {
      double c = 0.0;
      for (std::size_t i = 0; i < X.rows(); ++i) c += (X(i, j) - mean[j]) * (X(i, k) - mean[k]);
      c /= static_cast<double>(X.rows());
      worst = std::max(worst, std::abs(plain.scatter(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) - c));
    }
  }
  const auto G = gaussian_sample(5000, 2, 4001);
  const auto est = cov_lp(G);
  const double loc = est.location.cwiseAbs().maxCoeff();
  const double scat = (est.scatter - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff();
  return {worst <= 1e-12 && loc <= 0.08 && scat <= 0.1,
          fmt("b=0 max dev %.2e; Gaussian location %.4f, scatter %.4f", worst, loc, scat)};
}

Outcome cli_determinism() {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "depthlab_acceptance";
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const DataMatrix& m) {
    const auto path = (dir / name).string();
    std::ofstream f(path);
    save_matrix(f, m);
    return path;
  };
  const auto a = write("a.csv", gaussian_sample(60, 2, 5000));
  const auto b = write("b.csv", gaussian_sample(50, 2, 5001));
  std::vector<double> w(120);
  CounterRng rng(5002, streams::kUser);
  for (double& v : w) v = rng.normal();
  const auto u = write("u.csv", DataMatrix::from_column(w));
  const std::string stars = kDataDir + "/starsCYG.csv";

  const std::vector<std::vector<std::string>> commands = {
      {"depth", "--in", a, "--method", "tukey"},
      {"depth", "--in", b, "--ref", a, "--method", "local", "--beta", "0.5"},
      {"median", "--in", a, "--method", "zonoid"},
      {"contour", "--in", a, "--grid", "20"},
      {"contour", "--in", a, "--grid", "20", "--format", "svg"},
      {"lscontour", "--in", u, "--grid", "20"},
      {"lsmedian", "--in", u},
      {"ddplot", "--x", a, "--y", b, "--format", "csv"},
      {"ddnorm", "--in", a, "--robust"},
      {"wilcoxon", "--x", a, "--y", b, "--alternative", "two-sided"},
      {"scalecurve", "--in", a},
      {"asymcurve", "--in", a, "--format", "svg"},
      {"deepreg", "--in", stars},
      {"trimreg", "--in", stars},
      {"covlp", "--in", a},
      {"binning", "--in", u, "--nbins", "6", "--remove-borders"},
      {"bootmedian", "--in", a, "--bootstrap", "100", "--method", "mahalanobis"},
  };
  std::size_t differing = 0, failed = 0;
  std::string first_bad;
  for (const auto& cmd : commands) {
    std::vector<std::string> outputs;
    for (const char* threads : {"1", "-10", "1", "3"}) {
      auto args = cmd;
      args.push_back("--threads");
      args.push_back(threads);
      std::ostringstream out, err;
      if (cli::run(args, out, err) != 0) {
        ++failed;
        if (first_bad.empty()) first_bad = cmd[0] + ": " + err.str();
      }
      outputs.push_back(out.str());
    }
    for (const auto& o : outputs) {
      if (o != outputs[0]) {
        ++differing;
        if (first_bad.empty()) first_bad = cmd[0];
        break;
      }
    }
  }
  std::string detail = fmt("%.0f commands x 4 thread settings; %.0f differ, %.0f failed",
                           static_cast<double>(commands.size()), static_cast<double>(differing),
                           static_cast<double>(failed));
  if (!first_bad.empty()) detail += " (first: " + first_bad + ")";
  return {differing == 0 && failed == 0, detail};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria = {
      {1, "starsCYG deepest regression", 1.0, deepest_regression_stars},
      {2, "starsCYG trimmed projection regression", 1.0, trimmed_regression_stars},
      {3, "Wilcoxon permutation moments", 30.0, wilcoxon_moments},
      {4, "projection approximation soundness", 60.0, approximation_soundness},
      {5, "local depth reduction at beta = 1", 30.0, local_reduction},
      {6, "depth axiom suite", 60.0, depth_axioms},
      {7, "oracle equivalence", 300.0, oracle_equivalence},
      {8, "CovLP degenerate and Gaussian checks", 10.0, covlp_checks},
      {9, "CLI determinism", 120.0, cli_determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    set_thread_count(0);
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("%s criterion %d: %s: %s [%.2fs, limit %.0fs%s]\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, c.limit_s, in_time ? "" : ", TOO SLOW");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
