#include "depthlab/serialize.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace depthlab {

namespace {

Json matrix_json(const DataMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(std::vector<double>(m.row(i).begin(), m.row(i).end()));
  return rows;
}

Json eigen_matrix_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string_view curve_kind_name(CurveKind k) { return k == CurveKind::Scale ? "scale" : "asymmetry"; }

void write_row(std::ostream& out, std::span<const double> values) {
  for (std::size_t j = 0; j < values.size(); ++j) out << (j ? "," : "") << format_double(values[j]);
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json to_json(const MethodDescriptor& m) {
  Json j;
  j["kind"] = std::string(to_string(m.kind));
  if (std::isinf(m.p)) {
    j["p"] = "inf";
  } else {
    j["p"] = m.p;
  }
  j["beta"] = m.beta;
  j["nproj"] = m.nproj;
  j["seed"] = m.seed;
  j["weightFlavor"] = m.weight.flavor == WeightFlavor::Affine ? "affine" : "power";
  j["weightA"] = m.weight.a;
  j["weightB"] = m.weight.b;
  j["weightExponent"] = m.weight.exponent;
  j["localBase"] = std::string(to_string(m.local_base));
  return j;
}

MethodDescriptor method_from_json(const Json& j) {
  MethodDescriptor m;
  m.kind = parse_depth_method(j.at("kind").get<std::string>());
  m.p = j.at("p").is_string() ? std::numeric_limits<double>::infinity() : j.at("p").get<double>();
  m.beta = j.at("beta").get<double>();
  m.nproj = j.at("nproj").get<std::size_t>();
  m.seed = j.at("seed").get<std::uint64_t>();
  m.weight.flavor = j.at("weightFlavor").get<std::string>() == "power" ? WeightFlavor::Power : WeightFlavor::Affine;
  m.weight.a = j.at("weightA").get<double>();
  m.weight.b = j.at("weightB").get<double>();
  m.weight.exponent = j.at("weightExponent").get<double>();
  m.local_base = parse_depth_method(j.at("localBase").get<std::string>());
  return m;
}

Json to_json(const DepthVector& v) {
  Json j;
  j["values"] = v.values;
  j["method"] = to_json(v.method);
  return j;
}

DepthVector depth_vector_from_json(const Json& j) {
  return {j.at("values").get<std::vector<double>>(), method_from_json(j.at("method"))};
}

Json to_json(const DepthGrid& g) {
  Json j;
  j["xs"] = g.xs;
  j["ys"] = g.ys;
  j["z"] = g.z;
  j["label"] = g.label;
  return j;
}

DepthGrid grid_from_json(const Json& j) {
  DepthGrid g;
  g.xs = j.at("xs").get<std::vector<double>>();
  g.ys = j.at("ys").get<std::vector<double>>();
  g.z = j.at("z").get<std::vector<std::vector<double>>>();
  g.label = j.at("label").get<std::string>();
  return g;
}

Json to_json(const SimpleFit& f) {
  Json j;
  j["intercept"] = f.intercept;
  j["slope"] = f.slope;
  if (f.depth) {
    j["depth"] = *f.depth;
  } else {
    j["depth"] = nullptr;
  }
  return j;
}

SimpleFit fit_from_json(const Json& j) {
  SimpleFit f;
  f.intercept = j.at("intercept").get<double>();
  f.slope = j.at("slope").get<double>();
  if (j.contains("depth") && !j.at("depth").is_null()) f.depth = j.at("depth").get<double>();
  return f;
}

Json to_json(const WeightedLocationScatter& e) {
  Json j;
  j["location"] = std::vector<double>(e.location.data(), e.location.data() + e.location.size());
  j["scatter"] = eigen_matrix_json(e.scatter);
  j["weights"] = e.weights;
  return j;
}

WeightedLocationScatter location_scatter_from_json(const Json& j) {
  WeightedLocationScatter e;
  const auto loc = j.at("location").get<std::vector<double>>();
  e.location = Eigen::Map<const Eigen::VectorXd>(loc.data(), static_cast<Eigen::Index>(loc.size()));
  const auto sc = j.at("scatter").get<std::vector<std::vector<double>>>();
  const auto d = static_cast<Eigen::Index>(sc.size());
  e.scatter.resize(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    if (sc[static_cast<std::size_t>(r)].size() != sc.size()) throw std::invalid_argument("scatter is not square");
    for (Eigen::Index c = 0; c < d; ++c) e.scatter(r, c) = sc[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  e.weights = j.at("weights").get<std::vector<double>>();
  return e;
}

Json to_json(const WilcoxonResult& r, Alternative alternative) {
  Json j;
  j["S"] = r.statistic;
  j["p"] = r.p_value;
  j["mean"] = r.mean;
  j["variance"] = r.variance;
  j["m"] = r.m;
  j["n"] = r.n;
  j["alternative"] = std::string(to_string(alternative));
  return j;
}

WilcoxonResult wilcoxon_from_json(const Json& j) {
  WilcoxonResult r;
  r.statistic = j.at("S").get<double>();
  r.p_value = j.at("p").get<double>();
  r.mean = j.at("mean").get<double>();
  r.variance = j.at("variance").get<double>();
  r.m = j.at("m").get<std::size_t>();
  r.n = j.at("n").get<std::size_t>();
  return r;
}

Json to_json(const CurveData& c) {
  Json j;
  j["kind"] = std::string(curve_kind_name(c.kind));
  j["alphas"] = c.alphas;
  j["values"] = c.values;
  j["method"] = c.method_label;
  return j;
}

CurveData curve_from_json(const Json& j) {
  CurveData c;
  c.kind = j.at("kind").get<std::string>() == "scale" ? CurveKind::Scale : CurveKind::Asymmetry;
  c.alphas = j.at("alphas").get<std::vector<double>>();
  c.values = j.at("values").get<std::vector<double>>();
  c.method_label = j.at("method").get<std::string>();
  return c;
}

Json to_json(const DDPlotData& d) {
  Json j;
  j["dx"] = d.depth_x;
  j["dy"] = d.depth_y;
  Json labels = Json::array();
  for (SampleLabel l : d.labels) labels.push_back(l == SampleLabel::X ? "X" : "Y");
  j["label"] = std::move(labels);
  j["method"] = d.method_label;
  return j;
}

DDPlotData ddplot_from_json(const Json& j) {
  DDPlotData d;
  d.depth_x = j.at("dx").get<std::vector<double>>();
  d.depth_y = j.at("dy").get<std::vector<double>>();
  for (const auto& l : j.at("label")) d.labels.push_back(l.get<std::string>() == "X" ? SampleLabel::X : SampleLabel::Y);
  d.method_label = j.at("method").get<std::string>();
  return d;
}

Json to_json(const BinGrid2D& b) {
  Json j;
  j["breaksX"] = b.breaks;
  j["breaksY"] = b.breaks;
  j["counts"] = b.counts;
  Json mids = Json::array();
  for (const auto& m : b.midpoints) mids.push_back(std::vector<double>{m[0], m[1]});
  j["midpointsRetained"] = std::move(mids);
  j["countsRetained"] = b.counts_retained;
  j["bordersRemoved"] = b.borders_removed;
  return j;
}

BinGrid2D bins_from_json(const Json& j) {
  BinGrid2D b;
  b.breaks = j.at("breaksX").get<std::vector<double>>();
  b.counts = j.at("counts").get<std::vector<std::vector<std::size_t>>>();
  for (const auto& m : j.at("midpointsRetained")) b.midpoints.push_back({m.at(0).get<double>(), m.at(1).get<double>()});
  b.counts_retained = j.at("countsRetained").get<std::vector<std::size_t>>();
  b.borders_removed = j.at("bordersRemoved").get<bool>();
  return b;
}

Json to_json(const LSMaxDepthResult& r) {
  Json j;
  j["mu"] = r.fit.mu;
  j["sigma"] = r.fit.sigma;
  j["nu"] = r.fit.nu;
  j["depth"] = r.depth;
  return j;
}

LSMaxDepthResult ls_result_from_json(const Json& j) {
  LSMaxDepthResult r;
  r.fit.mu = j.at("mu").get<double>();
  r.fit.sigma = j.at("sigma").get<double>();
  r.fit.nu = j.at("nu").get<double>();
  r.depth = j.at("depth").get<double>();
  return r;
}

Json to_json(const MedianRegion& r) {
  Json j;
  j["medians"] = matrix_json(r.medians);
  j["region"] = matrix_json(r.region);
  Json hull = Json::array();
  for (const Vec2& v : r.hull) hull.push_back(std::vector<double>{v[0], v[1]});
  j["hull"] = std::move(hull);
  return j;
}

Json point_to_json(std::span<const double> point) {
  Json j;
  j["median"] = std::vector<double>(point.begin(), point.end());
  return j;
}

void write_csv(std::ostream& out, const DepthVector& v) {
  out << "depth\n";
  for (double d : v.values) out << format_double(d) << '\n';
}

void write_csv(std::ostream& out, const DepthGrid& g) {
  out << "x,y,depth\n";
  for (std::size_t iy = 0; iy < g.ys.size(); ++iy) {
    for (std::size_t ix = 0; ix < g.xs.size(); ++ix) {
      out << format_double(g.xs[ix]) << ',' << format_double(g.ys[iy]) << ',' << format_double(g.z[iy][ix]) << '\n';
    }
  }
}

void write_csv(std::ostream& out, const SimpleFit& f) {
  out << "intercept,slope,depth\n"
      << format_double(f.intercept) << ',' << format_double(f.slope) << ',' << (f.depth ? format_double(*f.depth) : "")
      << '\n';
}

void write_csv(std::ostream& out, const WeightedLocationScatter& e) {
  const auto d = static_cast<std::size_t>(e.location.size());
  out << "kind,row";
  for (std::size_t j = 0; j < d; ++j) out << ",v" << j + 1;
  out << "\nlocation,0,";
  write_row(out, std::span<const double>(e.location.data(), d));
  out << '\n';
  for (std::size_t i = 0; i < d; ++i) {
    out << "scatter," << i + 1 << ',';
    std::vector<double> row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = e.scatter(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    write_row(out, row);
    out << '\n';
  }
}

void write_csv(std::ostream& out, const WilcoxonResult& r) {
  out << "S,p\n" << format_double(r.statistic) << ',' << format_double(r.p_value) << '\n';
}

void write_csv(std::ostream& out, const CurveData& c) {
  out << "alpha,value\n";
  for (std::size_t k = 0; k < c.alphas.size(); ++k) out << format_double(c.alphas[k]) << ',' << format_double(c.values[k]) << '\n';
}

void write_csv(std::ostream& out, const DDPlotData& d) {
  out << "dx,dy,label\n";
  for (std::size_t i = 0; i < d.depth_x.size(); ++i) {
    out << format_double(d.depth_x[i]) << ',' << format_double(d.depth_y[i]) << ','
        << (d.labels[i] == SampleLabel::X ? 'X' : 'Y') << '\n';
  }
}

void write_csv(std::ostream& out, const BinGrid2D& b) {
  out << "cell_x_mid,cell_y_mid,count\n";
  for (std::size_t k = 0; k < b.midpoints.size(); ++k) {
    out << format_double(b.midpoints[k][0]) << ',' << format_double(b.midpoints[k][1]) << ',' << b.counts_retained[k]
        << '\n';
  }
}

void write_csv(std::ostream& out, const LSMaxDepthResult& r) {
  out << "mu,sigma,nu,depth\n"
      << format_double(r.fit.mu) << ',' << format_double(r.fit.sigma) << ',' << format_double(r.fit.nu) << ','
      << format_double(r.depth) << '\n';
}

void write_csv(std::ostream& out, const MedianRegion& r) {
  out << "set";
  for (std::size_t j = 0; j < r.medians.cols(); ++j) out << ",x" << j + 1;
  out << '\n';
  for (std::size_t i = 0; i < r.medians.rows(); ++i) {
    out << "median,";
    write_row(out, r.medians.row(i));
    out << '\n';
  }
  for (std::size_t i = 0; i < r.region.rows(); ++i) {
    out << "region,";
    write_row(out, r.region.row(i));
    out << '\n';
  }
  for (const Vec2& v : r.hull) {
    out << "hull,";
    write_row(out, v);
    out << '\n';
  }
}

void write_point_csv(std::ostream& out, std::span<const double> point) {
  for (std::size_t j = 0; j < point.size(); ++j) out << (j ? "," : "") << 'x' << j + 1;
  out << '\n';
  write_row(out, point);
  out << '\n';
}

}  // namespace depthlab
