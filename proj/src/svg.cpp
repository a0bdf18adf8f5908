#include "depthlab/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace depthlab {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 620.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 550.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  return s == "-0.00" ? "0.00" : s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

// Maps a data box onto the plot area; degenerate ranges are widened.
struct Frame {
  double x0, x1, y0, y1;

  Frame(double xa, double xb, double ya, double yb) : x0(xa), x1(xb), y0(ya), y1(yb) {
    if (!(x1 > x0)) {
      x0 -= 0.5;
      x1 += 0.5;
    }
    if (!(y1 > y0)) {
      y0 -= 0.5;
      y1 += 0.5;
    }
  }
  double px(double x) const { return kLeft + (x - x0) / (x1 - x0) * (kRight - kLeft); }
  double py(double y) const { return kBottom - (y - y0) / (y1 - y0) * (kBottom - kTop); }
};

Frame padded(double xa, double xb, double ya, double yb) {
  const double dx = 0.05 * (xb - xa), dy = 0.05 * (yb - ya);
  return Frame(xa - dx, xb + dx, ya - dy, yb + dy);
}

class Document {
 public:
  Document() {
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n"
         << "<rect x=\"0\" y=\"0\" width=\"" << num(kWidth) << "\" height=\"" << num(kHeight)
         << "\" fill=\"white\"/>\n";
  }

  std::ostringstream& raw() { return out_; }

  void axes(const Frame& f, const std::string& xlabel, const std::string& ylabel) {
    out_ << "<g class=\"axes\" stroke=\"black\" fill=\"none\">\n"
         << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(kRight - kLeft)
         << "\" height=\"" << num(kBottom - kTop) << "\"/>\n</g>\n";
    out_ << "<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
    for (int k = 0; k <= 4; ++k) {
      const double tx = f.x0 + (f.x1 - f.x0) * k / 4.0;
      const double ty = f.y0 + (f.y1 - f.y0) * k / 4.0;
      out_ << "<text x=\"" << num(f.px(tx)) << "\" y=\"" << num(kBottom + 16) << "\" text-anchor=\"middle\">"
           << tick(tx) << "</text>\n";
      out_ << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(f.py(ty) + 4) << "\" text-anchor=\"end\">"
           << tick(ty) << "</text>\n";
    }
    out_ << "<text x=\"" << num(0.5 * (kLeft + kRight)) << "\" y=\"" << num(kBottom + 38)
         << "\" text-anchor=\"middle\">" << escape(xlabel) << "</text>\n";
    out_ << "<text x=\"16\" y=\"" << num(0.5 * (kTop + kBottom)) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
         << num(0.5 * (kTop + kBottom)) << ")\">" << escape(ylabel) << "</text>\n</g>\n";
  }

  void legend(const std::vector<std::pair<std::string, std::string>>& entries, const std::string& title) {
    out_ << "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n"
         << "<text x=\"640\" y=\"" << num(kTop + 12) << "\" font-weight=\"bold\">" << escape(title) << "</text>\n";
    double y = kTop + 30;
    for (const auto& [colour, label] : entries) {
      out_ << "<rect x=\"640\" y=\"" << num(y - 10) << "\" width=\"14\" height=\"12\" fill=\"" << colour
           << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n"
           << "<text x=\"660\" y=\"" << num(y) << "\">" << escape(label) << "</text>\n";
      y += 18;
    }
    out_ << "</g>\n";
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  static std::string tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", std::abs(v) < 1e-12 ? 0.0 : v);
    return buf;
  }

  std::ostringstream out_;
};

// Sequential palette, light (shallow) to dark (deep).
std::string band_colour(std::size_t band) {
  static constexpr std::array<const char*, 10> kPalette = {"#f7fbff", "#deebf7", "#c6dbef", "#9ecae1", "#6baed6",
                                                           "#4292c6", "#2171b5", "#08519c", "#08306b", "#041a3d"};
  return kPalette[std::min<std::size_t>(band, kPalette.size() - 1)];
}

// Cell edges for lattice nodes: midpoints between neighbours, half a spacing
// beyond the outer nodes.
std::vector<double> cell_edges(const std::vector<double>& nodes) {
  std::vector<double> e(nodes.size() + 1);
  if (nodes.size() == 1) {
    e[0] = nodes[0] - 0.5;
    e[1] = nodes[0] + 0.5;
    return e;
  }
  for (std::size_t i = 1; i < nodes.size(); ++i) e[i] = 0.5 * (nodes[i - 1] + nodes[i]);
  e.front() = nodes.front() - 0.5 * (nodes[1] - nodes[0]);
  e.back() = nodes.back() + 0.5 * (nodes.back() - nodes[nodes.size() - 2]);
  return e;
}

// Marching-squares segments of {z = level} on one lattice cell.
void isoline_cell(std::ostringstream& path, const Frame& f, const DepthGrid& g, std::size_t ix, std::size_t iy,
                  double level) {
  const std::array<double, 4> x = {g.xs[ix], g.xs[ix + 1], g.xs[ix + 1], g.xs[ix]};
  const std::array<double, 4> y = {g.ys[iy], g.ys[iy], g.ys[iy + 1], g.ys[iy + 1]};
  const std::array<double, 4> z = {g.z[iy][ix], g.z[iy][ix + 1], g.z[iy + 1][ix + 1], g.z[iy + 1][ix]};
  std::array<std::array<double, 2>, 4> cross{};
  std::array<bool, 4> hit{};
  for (std::size_t e = 0; e < 4; ++e) {
    const std::size_t a = e, b = (e + 1) % 4;
    const bool above_a = z[a] >= level, above_b = z[b] >= level;
    if (above_a == above_b) continue;
    const double t = (level - z[a]) / (z[b] - z[a]);
    cross[e] = {x[a] + t * (x[b] - x[a]), y[a] + t * (y[b] - y[a])};
    hit[e] = true;
  }
  std::vector<std::size_t> edges;
  for (std::size_t e = 0; e < 4; ++e) {
    if (hit[e]) edges.push_back(e);
  }
  auto segment = [&](std::size_t a, std::size_t b) {
    path << 'M' << num(f.px(cross[a][0])) << ' ' << num(f.py(cross[a][1])) << 'L' << num(f.px(cross[b][0])) << ' '
         << num(f.py(cross[b][1]));
  };
  if (edges.size() == 2) {
    segment(edges[0], edges[1]);
  } else if (edges.size() == 4) {
    // Saddle: the cell mean decides which corners connect.
    const double centre = 0.25 * (z[0] + z[1] + z[2] + z[3]);
    if ((centre >= level) == (z[0] >= level)) {
      segment(0, 1);
      segment(2, 3);
    } else {
      segment(0, 3);
      segment(1, 2);
    }
  }
}

}  // namespace

std::string render_grid_svg(const DepthGrid& grid) {
  if (grid.xs.empty() || grid.ys.empty() || grid.z.size() != grid.ys.size()) {
    throw std::invalid_argument("cannot render an empty depth grid");
  }
  for (const auto& row : grid.z) {
    if (row.size() != grid.xs.size()) throw std::invalid_argument("depth grid rows do not match xs");
  }
  double zmin = grid.z[0][0], zmax = zmin;
  for (const auto& row : grid.z) {
    for (double v : row) {
      zmin = std::min(zmin, v);
      zmax = std::max(zmax, v);
    }
  }
  std::array<double, 9> levels{};
  for (std::size_t k = 0; k < levels.size(); ++k) levels[k] = zmin + (zmax - zmin) * static_cast<double>(k + 1) / 10.0;
  auto band = [&](double v) {
    return static_cast<std::size_t>(std::upper_bound(levels.begin(), levels.end(), v) - levels.begin());
  };

  const auto ex = cell_edges(grid.xs), ey = cell_edges(grid.ys);
  const Frame f(ex.front(), ex.back(), ey.front(), ey.back());
  Document doc;
  auto& out = doc.raw();
  out << "<g class=\"cells\" stroke=\"none\">\n";
  for (std::size_t iy = 0; iy < grid.ys.size(); ++iy) {
    for (std::size_t ix = 0; ix < grid.xs.size(); ++ix) {
      const double x = f.px(ex[ix]), w = f.px(ex[ix + 1]) - x;
      const double y = f.py(ey[iy + 1]), h = f.py(ey[iy]) - y;
      out << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(w) << "\" height=\"" << num(h)
          << "\" fill=\"" << band_colour(band(grid.z[iy][ix])) << "\"/>\n";
    }
  }
  out << "</g>\n";

  if (zmax > zmin && grid.xs.size() > 1 && grid.ys.size() > 1) {
    out << "<g class=\"contours\" fill=\"none\" stroke=\"black\" stroke-width=\"0.8\">\n";
    for (double level : levels) {
      std::ostringstream path;
      for (std::size_t iy = 0; iy + 1 < grid.ys.size(); ++iy) {
        for (std::size_t ix = 0; ix + 1 < grid.xs.size(); ++ix) isoline_cell(path, f, grid, ix, iy, level);
      }
      if (!path.str().empty()) out << "<path data-level=\"" << num(level) << "\" d=\"" << path.str() << "\"/>\n";
    }
    out << "</g>\n";
  }

  doc.axes(f, "x", "y");
  std::vector<std::pair<std::string, std::string>> entries;
  for (std::size_t k = 0; k < 10; ++k) {
    const double lo = k == 0 ? zmin : levels[k - 1];
    const double hi = k == 9 ? zmax : levels[k];
    entries.emplace_back(band_colour(k), num(lo) + " - " + num(hi));
  }
  doc.legend(entries, grid.label.empty() ? "depth" : grid.label);
  return doc.finish();
}

std::string render_curve_svg(const CurveData& curve) {
  if (curve.alphas.empty() || curve.alphas.size() != curve.values.size()) {
    throw std::invalid_argument("cannot render an empty curve");
  }
  const auto [vlo, vhi] = std::minmax_element(curve.values.begin(), curve.values.end());
  const auto [alo, ahi] = std::minmax_element(curve.alphas.begin(), curve.alphas.end());
  const Frame f = padded(*alo, *ahi, std::min(0.0, *vlo), *vhi);
  Document doc;
  auto& out = doc.raw();
  out << "<polyline class=\"curve\" fill=\"none\" stroke=\"#08519c\" stroke-width=\"2\" points=\"";
  for (std::size_t k = 0; k < curve.alphas.size(); ++k) {
    out << (k ? " " : "") << num(f.px(curve.alphas[k])) << ',' << num(f.py(curve.values[k]));
  }
  out << "\"/>\n";
  const std::string kind = curve.kind == CurveKind::Scale ? "scale curve" : "asymmetry curve";
  doc.axes(f, "alpha", kind);
  doc.legend({{"#08519c", kind}}, curve.method_label);
  return doc.finish();
}

std::string render_ddplot_svg(const DDPlotData& dd) {
  if (dd.depth_x.empty() || dd.depth_x.size() != dd.depth_y.size() || dd.labels.size() != dd.depth_x.size()) {
    throw std::invalid_argument("cannot render an empty DD-plot");
  }
  double lo = std::min(*std::min_element(dd.depth_x.begin(), dd.depth_x.end()),
                       *std::min_element(dd.depth_y.begin(), dd.depth_y.end()));
  double hi = std::max(*std::max_element(dd.depth_x.begin(), dd.depth_x.end()),
                       *std::max_element(dd.depth_y.begin(), dd.depth_y.end()));
  const Frame f = padded(lo, hi, lo, hi);
  Document doc;
  auto& out = doc.raw();
  out << "<line class=\"diagonal\" x1=\"" << num(f.px(lo)) << "\" y1=\"" << num(f.py(lo)) << "\" x2=\""
      << num(f.px(hi)) << "\" y2=\"" << num(f.py(hi)) << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  out << "<g class=\"points\">\n";
  for (std::size_t i = 0; i < dd.depth_x.size(); ++i) {
    out << "<circle cx=\"" << num(f.px(dd.depth_x[i])) << "\" cy=\"" << num(f.py(dd.depth_y[i]))
        << "\" r=\"3\" fill=\"" << (dd.labels[i] == SampleLabel::X ? "#2171b5" : "#cb181d") << "\"/>\n";
  }
  out << "</g>\n";
  doc.axes(f, "depth w.r.t. X", "depth w.r.t. Y");
  doc.legend({{"#2171b5", "X"}, {"#cb181d", "Y"}}, dd.method_label);
  return doc.finish();
}

std::string render_fits_svg(std::span<const double> x, std::span<const double> y, std::span<const LabelledFit> fits) {
  if (x.empty() || x.size() != y.size()) throw std::invalid_argument("cannot render an empty scatter");
  const auto [xlo, xhi] = std::minmax_element(x.begin(), x.end());
  const auto [ylo, yhi] = std::minmax_element(y.begin(), y.end());
  const Frame f = padded(*xlo, *xhi, *ylo, *yhi);
  static constexpr std::array<const char*, 4> kLineColours = {"#cb181d", "#238b45", "#6a51a3", "#d94801"};
  Document doc;
  auto& out = doc.raw();
  out << "<defs><clipPath id=\"plot\"><rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\""
      << num(kRight - kLeft) << "\" height=\"" << num(kBottom - kTop) << "\"/></clipPath></defs>\n";
  out << "<g class=\"points\">\n";
  for (std::size_t i = 0; i < x.size(); ++i) {
    out << "<circle cx=\"" << num(f.px(x[i])) << "\" cy=\"" << num(f.py(y[i])) << "\" r=\"3\" fill=\"black\"/>\n";
  }
  out << "</g>\n<g class=\"fits\" clip-path=\"url(#plot)\" stroke-width=\"2\">\n";
  std::vector<std::pair<std::string, std::string>> entries;
  for (std::size_t k = 0; k < fits.size(); ++k) {
    const std::string colour = kLineColours[k % kLineColours.size()];
    const auto& fit = fits[k].fit;
    out << "<line x1=\"" << num(f.px(f.x0)) << "\" y1=\"" << num(f.py(fit.intercept + fit.slope * f.x0)) << "\" x2=\""
        << num(f.px(f.x1)) << "\" y2=\"" << num(f.py(fit.intercept + fit.slope * f.x1)) << "\" stroke=\"" << colour
        << "\"/>\n";
    entries.emplace_back(colour, fits[k].label);
  }
  out << "</g>\n";
  doc.axes(f, "x", "y");
  doc.legend(entries, "fits");
  return doc.finish();
}

std::string render_bins_svg(const BinGrid2D& bins) {
  if (bins.breaks.size() < 2 || bins.midpoints.empty()) throw std::invalid_argument("cannot render an empty binning");
  const double lo = bins.breaks.front(), hi = bins.breaks.back();
  const Frame f = padded(lo, hi, lo, hi);
  const std::size_t top = *std::max_element(bins.counts_retained.begin(), bins.counts_retained.end());
  const double cell = f.px(bins.breaks[1]) - f.px(bins.breaks[0]);
  Document doc;
  auto& out = doc.raw();
  out << "<g class=\"breaks\" stroke=\"#bdbdbd\" stroke-width=\"0.8\">\n";
  for (double b : bins.breaks) {
    out << "<line x1=\"" << num(f.px(b)) << "\" y1=\"" << num(f.py(lo)) << "\" x2=\"" << num(f.px(b)) << "\" y2=\""
        << num(f.py(hi)) << "\"/>\n"
        << "<line x1=\"" << num(f.px(lo)) << "\" y1=\"" << num(f.py(b)) << "\" x2=\"" << num(f.px(hi)) << "\" y2=\""
        << num(f.py(b)) << "\"/>\n";
  }
  out << "</g>\n<g class=\"midpoints\" fill=\"#08519c\">\n";
  for (std::size_t k = 0; k < bins.midpoints.size(); ++k) {
    if (bins.counts_retained[k] == 0) continue;
    const double side = 0.9 * cell * std::sqrt(static_cast<double>(bins.counts_retained[k]) / static_cast<double>(top));
    out << "<rect x=\"" << num(f.px(bins.midpoints[k][0]) - 0.5 * side) << "\" y=\""
        << num(f.py(bins.midpoints[k][1]) - 0.5 * side) << "\" width=\"" << num(side) << "\" height=\"" << num(side)
        << "\"/>\n";
  }
  out << "</g>\n";
  doc.axes(f, "x[t-k]", "x[t]");
  doc.legend({{"#08519c", "max count " + std::to_string(top)}}, "binning");
  return doc.finish();
}

}  // namespace depthlab
