#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>

#include "depthlab/binning.hpp"
#include "depthlab/depth.hpp"
#include "depthlab/errors.hpp"
#include "depthlab/estimators.hpp"
#include "depthlab/grid.hpp"
#include "depthlab/inference.hpp"
#include "depthlab/location_scale.hpp"
#include "depthlab/parallel.hpp"
#include "depthlab/regression.hpp"
#include "depthlab/serialize.hpp"
#include "depthlab/svg.hpp"

namespace depthlab::cli {

namespace {

// Flag problems detected after CLI11 parsing; reported as usage errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Svg };

struct Options {
  std::string in, x, y, ref, out;
  std::string method = "projection";
  std::string base = "projection";
  std::string format = "json";
  std::string alternative = "greater";
  std::string p = "2";
  double beta = 0.5;
  double nu = 1.0;
  double alpha = 0.1;
  double confidence = 0.95;
  double trim = 0.05;
  double weight_a = 0.0;
  double weight_b = 1.0;
  std::size_t nbins = 8;
  std::size_t lag = 1;
  std::size_t projections = kDefaultProjections;
  std::size_t grid = 50;
  std::size_t size = 0;
  std::size_t bootstrap = 200;
  std::uint64_t seed = kDefaultSeed;
  int threads = 0;
  bool header = false;
  bool robust = false;
  bool center = false;
  bool remove_borders = false;
  bool moving_median = false;
};

double parse_p(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "INF") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) throw UsageError("--p must be a number >= 1 or 'inf', got '" + s + "'");
  return v;
}

MethodDescriptor method_from(const Options& o) {
  MethodDescriptor m;
  try {
    m.kind = parse_depth_method(o.method);
    m.local_base = parse_depth_method(o.base);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  m.p = parse_p(o.p);
  m.beta = o.beta;
  m.nproj = o.projections;
  m.seed = o.seed;
  m.weight.a = o.weight_a;
  m.weight.b = o.weight_b;
  try {
    m.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return m;
}

// A first line whose fields are all non-numeric is taken as a header even
// without --header.
DataMatrix read_matrix(const std::string& path, bool header, const char* flag) {
  if (path.empty()) throw UsageError(std::string("missing required input ") + flag);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DepthError("cannot open " + path + " (" + flag + ")");
  std::stringstream buf;
  buf << f.rdbuf();
  std::string text = buf.str();
  if (!header) {
    std::istringstream lines(text);
    std::string first;
    while (std::getline(lines, first)) {
      if (!first.empty() && first.back() == '\r') first.pop_back();
      if (first.find_first_not_of(" \t") != std::string::npos) break;
    }
    bool any_numeric = false;
    std::istringstream fields(first);
    std::string cell;
    while (std::getline(fields, cell, ',')) {
      char* end = nullptr;
      const auto lo = cell.find_first_not_of(" \t");
      if (lo == std::string::npos) continue;
      const std::string trimmed = cell.substr(lo, cell.find_last_not_of(" \t") - lo + 1);
      std::strtod(trimmed.c_str(), &end);
      if (end != trimmed.c_str() && *end == '\0') any_numeric = true;
    }
    header = !first.empty() && !any_numeric;
  }
  std::istringstream in(text);
  try {
    return load_matrix(in, header);
  } catch (const ParseError& e) {
    throw DepthError(path + ": " + e.what());
  }
}

std::vector<double> first_column(const DataMatrix& m, const char* what) {
  if (m.cols() != 1) throw DepthError(std::string(what) + " expects a single column, got " + std::to_string(m.cols()));
  return m.column(0);
}

Format format_from(const Options& o, std::initializer_list<Format> allowed) {
  Format f;
  if (o.format == "json") {
    f = Format::Json;
  } else if (o.format == "csv") {
    f = Format::Csv;
  } else if (o.format == "svg") {
    f = Format::Svg;
  } else {
    throw UsageError("--format must be json, csv or svg");
  }
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
    throw UsageError("--format " + o.format + " is not available for this subcommand");
  }
  return f;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

template <class T>
std::string csv_of(const T& v) {
  std::ostringstream s;
  write_csv(s, v);
  return s.str();
}

void add_io(CLI::App* sub, Options& o) {
  sub->add_option("--out", o.out, "Output path (default stdout)");
  sub->add_option("--format", o.format, "json, csv or svg")->capture_default_str();
  sub->add_flag("--header", o.header, "Input files start with a header line");
  sub->add_option("--threads", o.threads, "Worker threads; < 1 means all cores (env DEPTHLAB_THREADS)");
}

void add_method(CLI::App* sub, Options& o) {
  sub->add_option("--method", o.method,
                  "euclidean, mahalanobis, projection, tukey, zonoid, lp or local")
      ->capture_default_str();
  sub->add_option("--base", o.base, "Depth localized by --method local")->capture_default_str();
  sub->add_option("--p", o.p, "L^p exponent (>= 1 or inf)")->capture_default_str();
  sub->add_option("--beta", o.beta, "Locality parameter in (0, 1]")->capture_default_str();
  sub->add_option("--weight-a", o.weight_a, "L^p weight w(x) = a + b x: a")->capture_default_str();
  sub->add_option("--weight-b", o.weight_b, "L^p weight w(x) = a + b x: b")->capture_default_str();
  sub->add_option("--projections", o.projections, "Random directions for projection methods")->capture_default_str();
  sub->add_option("--seed", o.seed, "Seed for every random draw")->capture_default_str();
}

using Handler = std::function<std::string(const Options&)>;

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Statistical depth toolkit", "depthlab"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::pair<CLI::App*, Handler>> handlers;
  auto command = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_io(sub, o);
    handlers.emplace_back(sub, std::move(h));
    return sub;
  };

  auto* depth = command("depth", "Depth of points w.r.t. a reference sample", [](const Options& o) {
    const Format f = format_from(o, {Format::Json, Format::Csv});
    const auto method = method_from(o);
    const DataMatrix ref = read_matrix(o.ref.empty() ? o.in : o.ref, o.header, o.ref.empty() ? "--in" : "--ref");
    const DataMatrix pts = read_matrix(o.in, o.header, "--in");
    const auto v = compute_depth(pts, ref, method);
    return f == Format::Json ? dump(to_json(v)) : csv_of(v);
  });
  add_method(depth, o);
  depth->add_option("--in", o.in, "Points (CSV)");
  depth->add_option("--ref", o.ref, "Reference sample (CSV, default --in)");

  auto* median = command("median", "Depth median", [](const Options& o) {
    const Format f = format_from(o, {Format::Json, Format::Csv});
    const auto method = method_from(o);
    const auto m = depth_median(read_matrix(o.in, o.header, "--in"), method);
    if (f == Format::Csv) {
      std::ostringstream s;
      write_point_csv(s, m);
      return s.str();
    }
    Json j = point_to_json(m);
    j["method"] = to_json(method);
    return dump(j);
  });
  add_method(median, o);
  median->add_option("--in", o.in, "Sample (CSV)");

  auto* contour = command("contour", "Depth values on a grid over a bivariate sample", [](const Options& o) {
    const Format f = format_from(o, {Format::Json, Format::Csv, Format::Svg});
    const auto method = method_from(o);
    const auto g = contour_grid(read_matrix(o.in, o.header, "--in"), o.grid, method);
    return f == Format::Json ? dump(to_json(g)) : f == Format::Csv ? csv_of(g) : render_grid_svg(g);
  });
  add_method(contour, o);
  contour->add_option("--in", o.in, "Bivariate sample (CSV)");
  contour->add_option("--grid", o.grid, "Grid points per axis")->capture_default_str();

  auto* lscontour = command("lscontour", "Student depth over a (mu, sigma) grid", [](const Options& o) {
    const Format f = format_from(o, {Format::Json, Format::Csv, Format::Svg});
    const auto y = first_column(read_matrix(o.in, o.header, "--in"), "lscontour");
    const auto [mus, sigmas] = ls_default_grids(y, o.grid);
    const auto g = ls_depth_contour(y, mus, sigmas, o.nu);
    return f == Format::Json ? dump(to_json(g)) : f == Format::Csv ? csv_of(g) : render_grid_svg(g);
  });
  lscontour->add_option("--in", o.in, "Univariate sample (CSV)");
  lscontour->add_option("--nu", o.nu, "Student degrees of freedom")->capture_default_str();
  lscontour->add_option("--grid", o.grid, "Grid points per axis")->capture_default_str();

  auto* lsmedian = command("lsmedian", "Student median (maximal Student depth fit)", [](const Options& o) {
    const Format f = format_from(o, {Format::Json, Format::Csv});
    const auto r = ls_max_depth(first_column(read_matrix(o.in, o.header, "--in"), "lsmedian"), o.nu);
    return f == Format::Json ? dump(to_json(r)) : csv_of(r);
  });
  lsmedian->add_option("--in", o.in, "Univariate sample (CSV)");
  lsmedian->add_option("--nu", o.nu, "Student degrees of freedom")->capture_default_str();

  auto* ddplot = command("ddplot", "DD-plot of two samples", [](const Options& o) {
    const Format f = format_from(o, {Format::Json, Format::Csv, Format::Svg});
    const auto method = method_from(o);
    const auto d = dd_plot(read_matrix(o.x, o.header, "--x"), read_matrix(o.y, o.header, "--y"), method, o.center);
    return f == Format::Json ? dump(to_json(d)) : f == Format::Csv ? csv_of(d) : render_ddplot_svg(d);
  });
  add_method(ddplot, o);
  ddplot->add_option("--x", o.x, "First sample (CSV)");
  ddplot->add_option("--y", o.y, "Second sample (CSV)");
  ddplot->add_flag("--center", o.center, "Shift both samples to put their depth medians at the origin");

  auto* ddnorm = command("ddnorm", "DD-plot against a fitted normal sample", [](const Options& o) {
    const Format f = format_from(o, {Format::Json, Format::Csv, Format::Svg});
    const auto method = method_from(o);
    const DataMatrix X = read_matrix(o.in, o.header, "--in");
    const auto d = dd_mvnorm(X, o.size == 0 ? X.rows() : o.size, o.robust, o.trim, o.seed, method);
    return f == Format::Json ? dump(to_json(d)) : f == Format::Csv ? csv_of(d) : render_ddplot_svg(d);
  });
  add_method(ddnorm, o);
  ddnorm->add_option("--in", o.in, "Sample (CSV)");
  ddnorm->add_option("--size", o.size, "Normal draws (default: rows of --in)");
  ddnorm->add_flag("--robust", o.robust, "Fit the normal with depth-weighted CovLP estimates");
  ddnorm->add_option("--trim", o.trim, "Fraction of least deep rows given zero weight by --robust")
      ->capture_default_str();

  auto* wilcoxon = command("wilcoxon", "Depth-based Wilcoxon rank-sum test", [](const Options& o) {
    const Format f = format_from(o, {Format::Json, Format::Csv});
    const auto method = method_from(o);
    Alternative alt;
    try {
      alt = parse_alternative(o.alternative);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const auto r = m_wilcoxon_test(read_matrix(o.x, o.header, "--x"), read_matrix(o.y, o.header, "--y"), method, alt);
    return f == Format::Json ? dump(to_json(r, alt)) : csv_of(r);
  });
  add_method(wilcoxon, o);
  wilcoxon->add_option("--x", o.x, "First sample (CSV)");
  wilcoxon->add_option("--y", o.y, "Second sample (CSV)");
  wilcoxon->add_option("--alternative", o.alternative, "greater, less or two-sided")->capture_default_str();

  auto* scalecurve = command("scalecurve", "Scale curve of a bivariate sample", [](const Options& o) {
    const Format f = format_from(o, {Format::Json, Format::Csv, Format::Svg});
    const auto method = method_from(o);
    const auto c = scale_curve(read_matrix(o.in, o.header, "--in"), default_alpha_grid(), method);
    return f == Format::Json ? dump(to_json(c)) : f == Format::Csv ? csv_of(c) : render_curve_svg(c);
  });
  add_method(scalecurve, o);
  scalecurve->add_option("--in", o.in, "Bivariate sample (CSV)");

  auto* asymcurve = command("asymcurve", "Asymmetry curve of a bivariate sample", [](const Options& o) {
    const Format f = format_from(o, {Format::Json, Format::Csv, Format::Svg});
    const auto method = method_from(o);
    const auto c = asymmetry_curve(read_matrix(o.in, o.header, "--in"), default_alpha_grid(), method, o.moving_median);
    return f == Format::Json ? dump(to_json(c)) : f == Format::Csv ? csv_of(c) : render_curve_svg(c);
  });
  add_method(asymcurve, o);
  asymcurve->add_option("--in", o.in, "Bivariate sample (CSV)");
  asymcurve->add_flag("--moving-median", o.moving_median, "Centre each region on its own depth median");

  auto regression_input = [](const Options& o, std::vector<double>& x, std::vector<double>& y) {
    const DataMatrix m = read_matrix(o.in, o.header, "--in");
    if (m.cols() != 2) throw DepthError("regression input needs two columns (x, y), got " + std::to_string(m.cols()));
    x = m.column(0);
    y = m.column(1);
  };

  auto* deepreg = command("deepreg", "Deepest regression line", [regression_input](const Options& o) {
    const Format f = format_from(o, {Format::Json, Format::Csv, Format::Svg});
    std::vector<double> x, y;
    regression_input(o, x, y);
    const auto fit = deepest_regression(x, y);
    if (f == Format::Svg) {
      const std::vector<LabelledFit> fits = {{fit, "deepest regression"}, {least_squares(x, y), "least squares"}};
      return render_fits_svg(x, y, fits);
    }
    return f == Format::Json ? dump(to_json(fit)) : csv_of(fit);
  });
  deepreg->add_option("--in", o.in, "Two columns x, y (CSV)");

  auto* trimreg = command("trimreg", "Projection-depth trimmed regression", [regression_input](const Options& o) {
    const Format f = format_from(o, {Format::Json, Format::Csv, Format::Svg});
    std::vector<double> x, y;
    regression_input(o, x, y);
    MethodDescriptor proj;
    proj.nproj = o.projections;
    proj.seed = o.seed;
    if (!(o.alpha >= 0.0 && o.alpha < 1.0)) throw UsageError("--alpha must lie in [0, 1)");
    const auto fit = trim_proj_reg(x, y, o.alpha, proj);
    if (f == Format::Svg) {
      const std::vector<LabelledFit> fits = {{fit, "trimmed regression"}, {least_squares(x, y), "least squares"}};
      return render_fits_svg(x, y, fits);
    }
    return f == Format::Json ? dump(to_json(fit)) : csv_of(fit);
  });
  trimreg->add_option("--in", o.in, "Two columns x, y (CSV)");
  trimreg->add_option("--alpha", o.alpha, "Fraction of least deep observations removed")->capture_default_str();
  trimreg->add_option("--projections", o.projections, "Random directions")->capture_default_str();
  trimreg->add_option("--seed", o.seed, "Seed for the directions")->capture_default_str();

  std::string covlp_p = "1";
  double covlp_a = 1.0, covlp_b = 1.0;
  auto* covlp = command("covlp", "Depth-weighted location and scatter", [&](const Options& o) {
    const Format f = format_from(o, {Format::Json, Format::Csv});
    const double p = parse_p(covlp_p);
    if (!(p >= 1.0)) throw UsageError("--p must be >= 1");
    const auto e = cov_lp(read_matrix(o.in, o.header, "--in"), p, covlp_a, covlp_b);
    return f == Format::Json ? dump(to_json(e)) : csv_of(e);
  });
  covlp->add_option("--in", o.in, "Sample (CSV)");
  covlp->add_option("--p", covlp_p, "L^p exponent of the depth")->capture_default_str();
  covlp->add_option("--weight-a", covlp_a, "Weight a + b D: a")->capture_default_str();
  covlp->add_option("--weight-b", covlp_b, "Weight a + b D: b")->capture_default_str();

  std::string bin_p = "2";
  double bin_beta = 0.9;
  auto* binning = command("binning", "Depth-based 2D binning", [&](const Options& o) {
    const Format f = format_from(o, {Format::Json, Format::Csv, Format::Svg});
    MethodDescriptor lp;
    lp.kind = DepthMethod::LP;
    lp.p = parse_p(bin_p);
    if (!(lp.p >= 1.0)) throw UsageError("--p must be >= 1");
    if (!(bin_beta > 0.0 && bin_beta <= 1.0)) throw UsageError("--beta must lie in (0, 1]");
    const DataMatrix m = read_matrix(o.in, o.header, "--in");
    const DataMatrix Z = m.cols() == 1 ? lag_pairs(m.column(0), o.lag) : m;
    const auto b = binning_depth_2d(Z, o.nbins, bin_beta, o.remove_borders, lp);
    return f == Format::Json ? dump(to_json(b)) : f == Format::Csv ? csv_of(b) : render_bins_svg(b);
  });
  binning->add_option("--in", o.in, "Window (one column, lagged by --lag) or pairs (two columns)");
  binning->add_option("--nbins", o.nbins, "Interior classes per axis")->capture_default_str();
  binning->add_option("--lag", o.lag, "Lag k for a one-column window")->capture_default_str();
  binning->add_option("--beta", bin_beta, "Fraction of central points covered by the grid")->capture_default_str();
  binning->add_option("--p", bin_p, "L^p exponent of the depth")->capture_default_str();
  binning->add_flag("--remove-borders", o.remove_borders, "Report interior classes only");

  auto* bootmedian = command("bootmedian", "Bootstrap confidence region for the depth median", [](const Options& o) {
    const Format f = format_from(o, {Format::Json, Format::Csv});
    const auto method = method_from(o);
    if (o.bootstrap < 100) throw UsageError("--bootstrap must be >= 100");
    if (!(o.confidence > 0.0 && o.confidence < 1.0)) throw UsageError("--confidence must lie in (0, 1)");
    const auto r = bootstrap_median_region(read_matrix(o.in, o.header, "--in"), method, o.bootstrap, o.confidence);
    return f == Format::Json ? dump(to_json(r)) : csv_of(r);
  });
  add_method(bootmedian, o);
  bootmedian->add_option("--in", o.in, "Sample (CSV)");
  bootmedian->add_option("--bootstrap", o.bootstrap, "Resamples B")->capture_default_str();
  bootmedian->add_option("--confidence", o.confidence, "Coverage of the region")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << " (see --help)\n";
    return kExitUsage;
  }

  // An explicit --threads wins over the environment.
  int threads = 0;
  if (const char* env = std::getenv("DEPTHLAB_THREADS")) threads = std::atoi(env);
  for (const auto& [sub, handler] : handlers) {
    if (!sub->parsed()) continue;
    if (sub->count("--threads") > 0) threads = o.threads;
    set_thread_count(threads);
    std::string result;
    try {
      result = handler(o);
    } catch (const UsageError& e) {
      err << "usage error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const std::exception& e) {
      err << "data error: " << e.what() << '\n';
      return kExitData;
    }
    if (o.out.empty()) {
      out << result;
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!(f << result)) {
        err << "data error: cannot write " << o.out << '\n';
        return kExitData;
      }
    }
    return kExitOk;
  }
  err << "usage error: no subcommand given (see --help)\n";
  return kExitUsage;
}

}  // namespace depthlab::cli
