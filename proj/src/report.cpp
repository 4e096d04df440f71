#include "rct/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace rct {

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw std::runtime_error("failed to format double");
  return std::string(buf, end);
}

void write_experiment_csv(const ExperimentResult& result, std::ostream& out) {
  out << kExperimentCsvHeader << '\n';
  for (const auto& r : result.rows) {
    out << to_string(r.model) << ',' << r.m << ',' << r.n << ',' << r.R << ',' << r.metric << ','
        << format_double(r.mean) << ',' << format_double(r.std_error) << ',' << r.seed << '\n';
  }
}

std::string experiment_json(const ExperimentResult& result) {
  nlohmann::ordered_json doc;
  doc["version"] = result.version;
  doc["base_seed"] = result.base_seed;
  doc["notes"] = result.notes;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : result.rows) {
    nlohmann::ordered_json row;
    row["model"] = std::string(to_string(r.model));
    row["m"] = r.m;
    row["n"] = r.n;
    row["R"] = r.R;
    row["metric"] = r.metric;
    row["mean"] = r.mean;
    row["stderr"] = r.std_error;
    row["seed"] = r.seed;
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2);
}

void write_lorenz_csv(const LorenzCurve& curve, std::ostream& out) {
  out << kLorenzCsvHeader << '\n';
  for (const auto& p : curve.points) {
    out << format_double(p.population_share) << ',' << format_double(p.wealth_share) << '\n';
  }
}

void PlotSpec::validate() const {
  if (series.empty()) throw DomainError("plot needs at least one series");
  for (double v : {x_min, x_max, y_min, y_max}) {
    if (!std::isfinite(v)) throw DomainError("plot axes must be finite");
  }
  if (!(x_max > x_min) || !(y_max > y_min)) throw DomainError("plot axes must be non-empty");
}

PlotSpec gini_vs_m_plot(const ExperimentResult& result) {
  PlotSpec spec;
  spec.kind = PlotKind::GiniVsM;
  spec.x_label = "m";
  spec.y_label = "mean";
  std::map<std::string, PlotSeries> by_model;
  std::vector<std::string> order;
  double xmax = 0.0, ymax = 0.0;
  for (const auto& r : result.rows) {
    const std::string key(to_string(r.model));
    if (!by_model.count(key)) {
      order.push_back(key);
      by_model[key].label = key;
    }
    by_model[key].points.emplace_back(static_cast<double>(r.m), r.mean);
    xmax = std::max(xmax, static_cast<double>(r.m));
    ymax = std::max(ymax, r.mean);
    spec.title = r.metric + " vs m (n = " + std::to_string(r.n) + ", R = " + std::to_string(r.R) + ")";
  }
  for (const auto& k : order) spec.series.push_back(by_model[k]);
  spec.x_max = xmax > 0.0 ? xmax : 1.0;
  spec.y_max = ymax > 0.0 ? std::ceil(ymax * 10.0 + 1e-9) / 10.0 : 1.0;
  return spec;
}

PlotSpec lorenz_plot(std::span<const LorenzBatchEntry> entries, count_t m, LorenzView view) {
  PlotSpec spec;
  spec.kind = PlotKind::Lorenz;
  spec.title = std::string(view == LorenzView::Depth ? "depth" : "leaf-count") +
               " Lorenz curves, m = " + std::to_string(m);
  spec.x_label = "population share";
  spec.y_label = "wealth share";
  for (const auto& e : entries) {
    if (e.m != m) continue;
    PlotSeries s;
    s.label = std::string(to_string(e.model));
    const auto& curve = view == LorenzView::Depth ? e.depth_curve : e.leaf_curve;
    s.points.reserve(curve.points.size());
    for (const auto& p : curve.points) s.points.emplace_back(p.population_share, p.wealth_share);
    spec.series.push_back(std::move(s));
  }
  if (spec.series.empty()) throw DomainError("no Lorenz curves for m = " + std::to_string(m));
  return spec;
}

namespace {

constexpr double kWidth = 640, kHeight = 480;
constexpr double kLeft = 70, kRight = 150, kTop = 40, kBottom = 60;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string fixed(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  spec.validate();
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - spec.x_min) / (spec.x_max - spec.x_min) * pw; };
  auto sy = [&](double y) { return kTop + ph - (y - spec.y_min) / (spec.y_max - spec.y_min) * ph; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << fixed(kLeft + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
      << escape(spec.title) << "</text>\n";
  svg << "<rect x=\"" << fixed(kLeft) << "\" y=\"" << fixed(kTop) << "\" width=\"" << fixed(pw)
      << "\" height=\"" << fixed(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int t = 0; t <= 5; ++t) {
    const double xv = spec.x_min + (spec.x_max - spec.x_min) * t / 5.0;
    const double yv = spec.y_min + (spec.y_max - spec.y_min) * t / 5.0;
    svg << "<text x=\"" << fixed(sx(xv)) << "\" y=\"" << fixed(kTop + ph + 18)
        << "\" text-anchor=\"middle\" font-size=\"11\">" << fixed(xv, spec.kind == PlotKind::Lorenz ? 1 : 0)
        << "</text>\n";
    svg << "<text x=\"" << fixed(kLeft - 8) << "\" y=\"" << fixed(sy(yv) + 4)
        << "\" text-anchor=\"end\" font-size=\"11\">" << fixed(yv) << "</text>\n";
  }
  svg << "<text x=\"" << fixed(kLeft + pw / 2) << "\" y=\"" << fixed(kHeight - 16)
      << "\" text-anchor=\"middle\" font-size=\"13\">" << escape(spec.x_label) << "</text>\n";
  svg << "<text x=\"18\" y=\"" << fixed(kTop + ph / 2) << "\" text-anchor=\"middle\" font-size=\"13\""
      << " transform=\"rotate(-90 18 " << fixed(kTop + ph / 2) << ")\">" << escape(spec.y_label)
      << "</text>\n";

  if (spec.kind == PlotKind::Lorenz) {
    svg << "<line x1=\"" << fixed(sx(0)) << "\" y1=\"" << fixed(sy(0)) << "\" x2=\"" << fixed(sx(1))
        << "\" y2=\"" << fixed(sy(1)) << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  }

  for (std::size_t s = 0; s < spec.series.size(); ++s) {
    const char* colour = kPalette[s % std::size(kPalette)];
    svg << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < spec.series[s].points.size(); ++k) {
      const auto& [x, y] = spec.series[s].points[k];
      svg << (k ? " " : "") << fixed(sx(x)) << ',' << fixed(sy(y));
    }
    svg << "\"/>\n";
    if (spec.kind == PlotKind::GiniVsM) {
      for (const auto& [x, y] : spec.series[s].points) {
        svg << "<circle cx=\"" << fixed(sx(x)) << "\" cy=\"" << fixed(sy(y)) << "\" r=\"2.5\" fill=\""
            << colour << "\"/>\n";
      }
    }
    const double ly = kTop + 20 + 20.0 * static_cast<double>(s);
    svg << "<line x1=\"" << fixed(kLeft + pw + 12) << "\" y1=\"" << fixed(ly) << "\" x2=\""
        << fixed(kLeft + pw + 36) << "\" y2=\"" << fixed(ly) << "\" stroke=\"" << colour
        << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << fixed(kLeft + pw + 42) << "\" y=\"" << fixed(ly + 4) << "\" font-size=\"12\">"
        << escape(spec.series[s].label) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
  return ss.str();
}

}  // namespace rct
