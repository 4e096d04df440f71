// rct: simulate random caterpillar trees, evaluate exact degree laws and
// Gini indices, and run replicated experiments.
//
// Exit codes: 0 success, 2 usage error, 3 precondition/domain error,
// 4 I/O error.
#include <charconv>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rct/exact.hpp"
#include "rct/gini.hpp"
#include "rct/montecarlo.hpp"
#include "rct/report.hpp"
#include "rct/simulate.hpp"
#include "rct/tree.hpp"
#include "rct/tree_io.hpp"

namespace {

using rct::count_t;
using json = nlohmann::ordered_json;

constexpr int kUsage = 2;
constexpr int kDomain = 3;
constexpr int kIo = 4;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

count_t parse_count(std::string_view token) {
  count_t v = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw UsageError("malformed integer '" + std::string(token) + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

// "2,0,1"
std::vector<count_t> parse_counts(const std::string& text) {
  if (text.empty()) throw UsageError("empty count vector");
  std::vector<count_t> out;
  for (const auto& tok : split(text, ',')) out.push_back(parse_count(tok));
  return out;
}

// "5,10,20" or "5:200:5" (inclusive range), or a mix separated by commas.
std::vector<count_t> parse_m_list(const std::string& text) {
  std::vector<count_t> out;
  for (const auto& tok : split(text, ',')) {
    const auto parts = split(tok, ':');
    if (parts.size() == 1) {
      out.push_back(parse_count(parts[0]));
    } else if (parts.size() == 3) {
      const count_t lo = parse_count(parts[0]), hi = parse_count(parts[1]), step = parse_count(parts[2]);
      if (step <= 0 || hi < lo) throw UsageError("bad m range '" + tok + "'");
      for (count_t m = lo; m <= hi; m += step) out.push_back(m);
    } else {
      throw UsageError("bad m-list entry '" + tok + "'");
    }
  }
  return out;
}

std::vector<double> to_std(const rct::VectorX<double>& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

json matrix_json(const rct::MatrixX<double>& a) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    rct::write_file(out_path, text);
  }
}

std::filesystem::path with_suffix(const std::filesystem::path& p, const std::string& suffix) {
  auto out = p;
  out.replace_filename(p.stem().string() + suffix + p.extension().string());
  return out;
}

// -- subcommands -------------------------------------------------------------

struct SimulateArgs {
  std::string model;
  count_t m = 0;
  count_t n = 0;
  std::uint64_t seed = 0;
  std::string out;
};

void run_simulate(const SimulateArgs& a) {
  const auto tree = rct::grow(rct::parse_model(a.model), a.m, a.n, rct::SeedSpec{a.seed, {}});
  emit(rct::serialize(tree) + "\n", a.out);
}

struct ExactArgs {
  std::string what;
  std::string model = "pa";
  count_t m = 0;
  count_t n = -1;
  std::string counts;
};

void run_exact(const ExactArgs& a) {
  const auto model = rct::parse_model(a.model);
  const bool pa = model == rct::GrowthModel::PreferentialAttachment;
  json doc;
  doc["model"] = std::string(rct::to_string(model));
  doc["m"] = a.m;

  auto need_n = [&] {
    if (a.n < 0) throw UsageError("--n is required for '" + a.what + "'");
    return a.n;
  };

  if (a.what == "mean" || a.what == "cov") {
    const count_t n = need_n();
    doc["n"] = n;
    const auto moments = pa ? rct::pa_moments<double>(a.m, n) : rct::uniform_moments<double>(a.m, n);
    if (a.what == "mean") {
      doc["mean"] = to_std(moments.mean);
    } else {
      doc["cov"] = matrix_json(moments.cov);
      if (!pa) doc["asymptotic_cov"] = matrix_json(rct::uniform_asymptotic_cov<double>(a.m).cov);
    }
  } else if (a.what == "pmf") {
    if (a.counts.empty()) throw UsageError("--s is required for 'pmf'");
    const auto s = parse_counts(a.counts);
    count_t total = 0;
    for (count_t c : s) total += c;
    if (a.n >= 0 && a.n != total) throw rct::DomainError("--n does not match the sum of --s");
    doc["n"] = total;
    doc["s"] = s;
    if (pa) {
      const double lp = rct::pa_joint_log_pmf(a.m, s);
      doc["probability"] = std::exp(lp);
      doc["log_probability"] = lp;
    } else {
      // s holds leaf counts; the degree formula is evaluated at s + offsets.
      const double lp = rct::uniform_leaf_log_pmf(a.m, s);
      auto d = rct::spine_offsets(a.m);
      for (std::size_t i = 0; i < d.size(); ++i) d[i] += s[i];
      const double degree_formula = rct::uniform_degree_pmf(a.m, d);
      doc["probability"] = std::exp(lp);
      doc["log_probability"] = lp;
      doc["degree_formula_probability"] = degree_formula;
      doc["degree_formula_matches"] =
          std::abs(degree_formula - std::exp(lp)) <= 1e-12 * std::max(1.0, std::exp(lp));
    }
  } else if (a.what == "limit") {
    json limits = json::array();
    for (const auto& lv : rct::gini1_limit(model, a.m)) {
      limits.push_back({{"label", lv.label}, {"value", lv.value}});
    }
    doc["gini1_limit"] = std::move(limits);
    if (a.n >= 0) {
      doc["n"] = a.n;
      if (pa) {
        doc["gini1_closed_form"] = rct::gini1_hat_pa_closed<double>(a.m, a.n);
      } else {
        const auto forms = rct::gini1_hat_uniform_closed<double>(a.m, a.n);
        doc["gini1_closed_form"] = forms.expanded;
        doc["gini1_closed_form_factored"] = forms.factored;
      }
    }
    doc["dirichlet_alpha"] = rct::dirichlet_limit_params(a.m).alpha;
  } else {
    throw UsageError("unknown exact query '" + a.what + "'");
  }
  std::cout << doc.dump() << "\n";
}

struct GiniArgs {
  int type = 2;
  std::string tree_path;
  bool lorenz = false;
  std::string lorenz_out;
};

void run_gini(const GiniArgs& a) {
  const auto tree = rct::parse_tree(rct::read_file(a.tree_path));
  const double g = a.type == 1 ? rct::gini_type1(tree) : rct::gini_type2(tree);
  std::cout << rct::format_double(g) << "\n";
  if (a.lorenz || !a.lorenz_out.empty()) {
    const auto curve = a.type == 1 ? rct::lorenz(rct::depths(tree).values()) : rct::lorenz(tree.leaves());
    std::ostringstream csv;
    rct::write_lorenz_csv(curve, csv);
    emit(csv.str(), a.lorenz_out);
  }
}

struct ExperimentArgs {
  std::string metric;
  std::string models = "uniform,pa";
  std::string m_list;
  count_t n = 500;
  count_t R = 500;
  std::uint64_t seed = 1;
  std::string out;
  std::string json_out;
  std::string svg;
  std::string lorenz_dir = ".";
  int view = 1;
  count_t vertex = 1;
  unsigned threads = 0;
};

void run_experiment_cmd(const ExperimentArgs& a) {
  rct::ExperimentConfig config;
  config.metric = rct::parse_metric(a.metric);
  for (const auto& name : split(a.models, ',')) config.models.push_back(rct::parse_model(name));
  config.m_values = parse_m_list(a.m_list);
  config.n = a.n;
  config.R = a.R;
  config.base_seed = a.seed;
  config.vertex = a.vertex;
  config.view = a.view == 1 ? rct::LorenzView::Depth : rct::LorenzView::Leaves;
  config.threads = a.threads;
  config.validate();

  rct::ExperimentResult result;
  if (config.metric == rct::Metric::Lorenz) {
    const auto entries = rct::run_lorenz_batch(config);
    result = rct::summarize_lorenz(entries, config);
    const std::filesystem::path dir(a.lorenz_dir);
    for (const auto& e : entries) {
      std::ostringstream csv;
      rct::write_lorenz_csv(config.view == rct::LorenzView::Depth ? e.depth_curve : e.leaf_curve, csv);
      rct::write_file(dir / ("lorenz" + std::to_string(a.view) + "_" + std::string(rct::to_string(e.model)) +
                             "_m" + std::to_string(e.m) + ".csv"),
                      csv.str());
    }
    if (!a.svg.empty()) {
      for (count_t m : config.m_values) {
        const auto spec = rct::lorenz_plot(entries, m, config.view);
        rct::write_file(with_suffix(a.svg, "_m" + std::to_string(m)), rct::render_svg(spec));
      }
    }
  } else {
    result = rct::run_experiment(config);
    if (!a.svg.empty()) rct::write_file(a.svg, rct::render_svg(rct::gini_vs_m_plot(result)));
  }

  std::ostringstream csv;
  rct::write_experiment_csv(result, csv);
  emit(csv.str(), a.out);
  if (!a.json_out.empty()) rct::write_file(a.json_out, rct::experiment_json(result) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random caterpillar tree toolkit"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Grow one tree and print it as JSON");
  simulate->add_option("--model", sim.model, "uniform | pa")->required()->check(CLI::IsMember({"uniform", "pa"}));
  simulate->add_option("--m", sim.m, "spine length (>= 2)")->required();
  simulate->add_option("--n", sim.n, "number of leaves to attach")->required();
  simulate->add_option("--seed", sim.seed, "64-bit seed")->required();
  simulate->add_option("--out", sim.out, "output path (default stdout)");

  ExactArgs ex;
  auto* exact = app.add_subcommand("exact", "Exact moments, PMFs and limits");
  exact->add_option("what", ex.what, "mean | cov | pmf | limit")
      ->required()
      ->check(CLI::IsMember({"mean", "cov", "pmf", "limit"}));
  exact->add_option("--model", ex.model, "uniform | pa")->check(CLI::IsMember({"uniform", "pa"}));
  exact->add_option("--m", ex.m, "spine length (>= 2)")->required();
  exact->add_option("--n", ex.n, "time step");
  exact->add_option("--s", ex.counts, "comma-separated counts per spine vertex (pmf)");

  GiniArgs gi;
  auto* gini = app.add_subcommand("gini", "Gini index of a tree file");
  gini->add_option("--type", gi.type, "1 (depths) | 2 (leaf counts)")->required()->check(CLI::IsMember({1, 2}));
  gini->add_option("--tree", gi.tree_path, "tree JSON file")->required();
  gini->add_flag("--lorenz", gi.lorenz, "also print the Lorenz curve CSV");
  gini->add_option("--lorenz-out", gi.lorenz_out, "write the Lorenz curve CSV to a file");

  ExperimentArgs xa;
  auto* experiment = app.add_subcommand("experiment", "Replicated Monte-Carlo experiment");
  experiment->add_option("--metric", xa.metric, "gini1 | gini2 | lorenz | moments | marginal")
      ->required()
      ->check(CLI::IsMember({"gini1", "gini2", "lorenz", "moments", "marginal"}));
  experiment->add_option("--models", xa.models, "comma-separated models");
  experiment->add_option("--m-list", xa.m_list, "m values, e.g. 5,50 or 5:200:5")->required();
  experiment->add_option("--n", xa.n, "time step");
  experiment->add_option("--R", xa.R, "replications");
  experiment->add_option("--seed", xa.seed, "base seed");
  experiment->add_option("--out", xa.out, "CSV output path (default stdout)");
  experiment->add_option("--json", xa.json_out, "also write the result as JSON");
  experiment->add_option("--svg", xa.svg, "SVG plot path (lorenz: one file per m)");
  experiment->add_option("--lorenz-dir", xa.lorenz_dir, "directory for per-(model, m) Lorenz CSVs");
  experiment->add_option("--view", xa.view, "lorenz wealth: 1 depths | 2 leaf counts")->check(CLI::IsMember({1, 2}));
  experiment->add_option("--vertex", xa.vertex, "spine vertex for the marginal check");
  experiment->add_option("--threads", xa.threads, "worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*simulate) run_simulate(sim);
    if (*exact) run_exact(ex);
    if (*gini) run_gini(gi);
    if (*experiment) run_experiment_cmd(xa);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const rct::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const rct::TreeFormatError& e) {
    std::cerr << "malformed tree document: " << e.what() << "\n";
    return kDomain;
  } catch (const rct::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return 0;
}
