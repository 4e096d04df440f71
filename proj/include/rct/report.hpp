// File formats: experiment CSV/JSON, Lorenz CSV and SVG plots.
//
// Experiment CSV columns are fixed: model,m,n,R,metric,mean,stderr,seed.
// Lorenz CSV columns: population_share,wealth_share.
// Floating-point values are written in shortest round-trip form.
#ifndef RCT_REPORT_HPP
#define RCT_REPORT_HPP

#include <filesystem>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rct/gini.hpp"
#include "rct/montecarlo.hpp"

namespace rct {

inline constexpr std::string_view kExperimentCsvHeader = "model,m,n,R,metric,mean,stderr,seed";
inline constexpr std::string_view kLorenzCsvHeader = "population_share,wealth_share";

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_double(double x);

void write_experiment_csv(const ExperimentResult& result, std::ostream& out);
std::string experiment_json(const ExperimentResult& result);
void write_lorenz_csv(const LorenzCurve& curve, std::ostream& out);

enum class PlotKind { GiniVsM, Lorenz };

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

struct PlotSpec {
  PlotKind kind = PlotKind::GiniVsM;
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
  double x_min = 0.0, x_max = 1.0;
  double y_min = 0.0, y_max = 1.0;

  // At least one series and finite axes with max > min.
  void validate() const;
};

// x = m, y = mean, one series per model.
PlotSpec gini_vs_m_plot(const ExperimentResult& result);
// Overlaid mean curves (one per model) for a single m, plus the diagonal.
PlotSpec lorenz_plot(std::span<const LorenzBatchEntry> entries, count_t m, LorenzView view);

std::string render_svg(const PlotSpec& spec);

// Writes text to path, throwing IoError naming the path on failure.
void write_file(const std::filesystem::path& path, std::string_view text);
std::string read_file(const std::filesystem::path& path);

}  // namespace rct

#endif  // RCT_REPORT_HPP
