#include <doctest.h>

#include <cstring>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "depthlab/serialize.hpp"
#include "depthlab/svg.hpp"
#include "support.hpp"

using namespace depthlab;
using testing_support::gaussian_sample;

namespace {

std::size_t occurrences(const std::string& s, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++count;
  return count;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

Json reparse(const Json& j) { return Json::parse(j.dump(2)); }

}  // namespace

TEST_CASE("JSON round trips are bitwise") {
  MethodDescriptor m;
  m.kind = DepthMethod::LP;
  m.p = std::numeric_limits<double>::infinity();
  m.seed = 0xfedcba9876543210ULL;
  m.weight = WeightFunction{WeightFlavor::Power, 0.1, 0.2, 1.0 / 3.0};
  const DepthVector v{{0.1, 1.0 / 3.0, 2.0 / 7.0, 5e-320}, m};
  const auto v2 = depth_vector_from_json(reparse(to_json(v)));
  CHECK(same_bits(v2.values, v.values));
  CHECK(v2.method.p == m.p);
  CHECK(v2.method.seed == m.seed);
  CHECK(v2.method.weight.exponent == m.weight.exponent);
  CHECK(v2.method.weight.flavor == WeightFlavor::Power);

  const DepthGrid g{{0.1, 0.2}, {-1.0 / 3.0}, {{0.7, 0.9}}, "Tukey"};
  const auto g2 = grid_from_json(reparse(to_json(g)));
  CHECK(same_bits(g2.xs, g.xs));
  CHECK(same_bits(g2.z[0], g.z[0]));
  CHECK(g2.label == "Tukey");

  const SimpleFit f{-7.903043478260845, 2.913043478260864, 21.0 / 47.0};
  const auto f2 = fit_from_json(reparse(to_json(f)));
  CHECK(f2.intercept == f.intercept);
  CHECK(f2.slope == f.slope);
  CHECK(*f2.depth == *f.depth);
  CHECK_FALSE(fit_from_json(reparse(to_json(SimpleFit{1, 2, {}}))).depth.has_value());

  const auto e = cov_lp(gaussian_sample(30, 3, 1));
  const auto e2 = location_scatter_from_json(reparse(to_json(e)));
  CHECK(e2.location == e.location);
  CHECK(e2.scatter == e.scatter);

  WilcoxonResult w{123.0, 0.0123456789, 100.0, 333.3333333333333, 10, 9};
  const auto w2 = wilcoxon_from_json(reparse(to_json(w, Alternative::Less)));
  CHECK(w2.p_value == w.p_value);
  CHECK(w2.variance == w.variance);

  const CurveData c{{0.0, 0.5}, {3.25, 0.1}, CurveKind::Asymmetry, "Zonoid"};
  const auto c2 = curve_from_json(reparse(to_json(c)));
  CHECK(same_bits(c2.values, c.values));
  CHECK(c2.kind == CurveKind::Asymmetry);

  const DDPlotData d{{0.25, 0.5}, {0.125, 1.0 / 3.0}, {SampleLabel::X, SampleLabel::Y}, "Euclidean"};
  const auto d2 = ddplot_from_json(reparse(to_json(d)));
  CHECK(same_bits(d2.depth_y, d.depth_y));
  CHECK(d2.labels == d.labels);

  const auto b = binning_depth_2d(gaussian_sample(50, 2, 3), 3, 0.9);
  const auto b2 = bins_from_json(reparse(to_json(b)));
  CHECK(same_bits(b2.breaks, b.breaks));
  CHECK(b2.counts == b.counts);
  CHECK(b2.midpoints == b.midpoints);

  const LSMaxDepthResult r{{0.1, 0.7, 2.0}, 0.45};
  const auto r2 = ls_result_from_json(reparse(to_json(r)));
  CHECK(r2.fit.sigma == r.fit.sigma);
  CHECK(r2.depth == r.depth);
}

TEST_CASE("CSV writers") {
  std::ostringstream s;
  write_csv(s, DepthGrid{{0, 1}, {2}, {{0.5, 0.25}}, "x"});
  CHECK(s.str() == "x,y,depth\n0,2,0.5\n1,2,0.25\n");
  std::ostringstream w;
  write_csv(w, WilcoxonResult{10, 0.5, 0, 0, 2, 2});
  CHECK(w.str() == "S,p\n10,0.5\n");
  CHECK(format_double(0.1) == "0.1");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("SVG rendering") {
  const DepthGrid g{{0, 1}, {0, 1}, {{0.1, 0.2}, {0.3, 0.4}}, "Projection"};
  const auto grid_svg = render_grid_svg(g);
  CHECK(grid_svg.find("viewBox=\"0 0 800 600\"") != std::string::npos);
  const auto cells = grid_svg.substr(grid_svg.find("<g class=\"cells\""));
  CHECK(occurrences(cells.substr(0, cells.find("</g>")), "<rect") == 4);
  CHECK(grid_svg.find("Projection") != std::string::npos);
  CHECK(occurrences(grid_svg, "<path data-level") == 9);

  const CurveData c{{0.1, 0.5, 0.9}, {3.0, 2.0, 0.5}, CurveKind::Scale, "Tukey"};
  const auto curve_svg = render_curve_svg(c);
  const auto points = curve_svg.substr(curve_svg.find("points=\""));
  const auto list = points.substr(8, points.find('"', 8) - 8);
  CHECK(occurrences(list, ",") == 3);

  const DDPlotData d{{0.2, 0.4}, {0.3, 0.1}, {SampleLabel::X, SampleLabel::Y}, "LP"};
  const auto dd_svg = render_ddplot_svg(d);
  CHECK(dd_svg.find("class=\"diagonal\"") != std::string::npos);
  CHECK(occurrences(dd_svg, "<circle") == 2);

  const std::vector<double> x = {1, 2, 3}, y = {2, 4, 7};
  const std::vector<LabelledFit> fits = {{SimpleFit{0, 2, {}}, "line"}};
  CHECK(occurrences(render_fits_svg(x, y, fits), "<circle") == 3);
  CHECK(render_grid_svg(g) == grid_svg);

  CHECK_THROWS_AS(render_grid_svg(DepthGrid{}), std::invalid_argument);
  CHECK_THROWS_AS(render_curve_svg(CurveData{}), std::invalid_argument);
  CHECK_THROWS_AS(render_ddplot_svg(DDPlotData{}), std::invalid_argument);
  CHECK_THROWS_AS(render_fits_svg({}, {}, fits), std::invalid_argument);
  CHECK_THROWS_AS(render_bins_svg(BinGrid2D{}), std::invalid_argument);
}
