#include "allocrate/figures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "allocrate/csv.hpp"
#include "allocrate/optimizer.hpp"
#include "allocrate/version.hpp"

namespace allocrate {

namespace {

struct Series {
  std::string label;
  int nodes;
  int redundancy;
  AccessModel access;
};

// One panel: a metric of one sweep per series, capped at alpha_cap rows.
std::string render_panel(const std::string& figure_id, const std::string& description,
                         const std::string& metric_note,
                         const std::vector<Series>& series, const ServiceModel& service,
                         bool use_recovery, int alpha_cap) {
  std::ostringstream out;
  out << "# command: figures " << figure_id << "\n";
  out << "# version: " << kVersion << "\n";
  out << "# figure: " << description << "\n";
  out << "# metric: " << metric_note << "\n";
  out << "alpha,series_label,value\n";
  for (const auto& s : series) {
    const SweepTable table = sweep_alpha(s.nodes, s.redundancy, s.access, service);
    for (const auto& row : table.rows) {
      if (alpha_cap > 0 && row.alpha > alpha_cap) break;
      const double value = use_recovery ? row.p_s : row.mu_s;
      out << row.alpha << "," << s.label << "," << format_value(value) << "\n";
    }
  }
  return out.str();
}

std::vector<FigureCsv> render_fixed_figure(const std::string& id,
                                           const std::string& description,
                                           const std::vector<Series>& series) {
  const ServiceModel scaled = ScaledExponential{1.0};
  const ServiceModel shifted = ShiftedExponential{1.0, 3.0};
  return {
      {id + "_scaled.csv",
       render_panel(id, description, "service rate, scaled exponential (mu=1)", series,
                    scaled, false, 0)},
      {id + "_shifted.csv",
       render_panel(id, description, "service rate, shifted exponential (mu=1, delta=3)",
                    series, shifted, false, 0)},
      {id + "_recovery.csv",
       render_panel(id, description, "recovery probability", series, scaled, true, 0)},
  };
}

std::vector<Series> prob_series(const std::vector<std::pair<std::string, double>>& points,
                                int redundancy, int alpha_cap) {
  // N = alpha_cap * m keeps the feasible range exactly [1, alpha_cap];
  // probabilistic rates do not depend on N beyond feasibility.
  std::vector<Series> out;
  for (const auto& [label, p] : points) {
    out.push_back({label, alpha_cap * redundancy, redundancy, ProbabilisticAccess{p}});
  }
  return out;
}

}  // namespace

std::vector<std::string> figure_ids() { return {"fig2", "fig3", "fig4", "fig5", "fig6"}; }

bool is_known_figure(const std::string& id) {
  for (const auto& known : figure_ids()) {
    if (known == id) return true;
  }
  return false;
}

std::vector<FigureCsv> render_figure(const std::string& id) {
  if (id == "fig2") {
    std::vector<Series> series;
    for (int m : {3, 4, 5, 6}) {
      series.push_back({"m=" + std::to_string(m), 30, m, FixedSizeAccess{5}});
    }
    return render_fixed_figure(id, "fixed-size access, N=30, r=5, m in {3,4,5,6}", series);
  }
  if (id == "fig3") {
    std::vector<Series> series;
    for (int r : {6, 7, 8, 9}) {
      series.push_back({"r=" + std::to_string(r), 30, 3, FixedSizeAccess{r}});
    }
    return render_fixed_figure(id, "fixed-size access, N=30, m=3, r in {6,7,8,9}", series);
  }
  if (id == "fig4") {
    std::vector<Series> series;
    for (int m : {1, 2, 3, 4}) {
      series.push_back({"m=" + std::to_string(m), 10 * m, m, ProbabilisticAccess{0.3}});
    }
    const std::string description = "probabilistic access, p=0.3, m in {1,2,3,4}, alpha in [1,10]";
    const ServiceModel scaled = ScaledExponential{1.0};
    const ServiceModel shifted = ShiftedExponential{1.0, 3.0};
    return {
        {"fig4_scaled.csv",
         render_panel(id, description, "service rate, scaled exponential (mu=1)", series,
                      scaled, false, 10)},
        {"fig4_shifted.csv",
         render_panel(id, description, "service rate, shifted exponential (mu=1, delta=3)",
                      series, shifted, false, 10)},
        {"fig4_recovery.csv",
         render_panel(id, description, "recovery probability", series, scaled, true, 10)},
    };
  }
  if (id == "fig5") {
    const auto series = prob_series(
        {{"p=0.51", 0.51}, {"p=0.61", 0.61}, {"p=0.71", 0.71}}, 2, 10);
    const std::string description =
        "probabilistic access, m=2, p in {0.51,0.61,0.71} (evenly spaced), alpha in [1,10]";
    const ServiceModel scaled = ScaledExponential{1.0};
    return {
        {"fig5_scaled.csv",
         render_panel(id, description, "service rate, scaled exponential (mu=1)", series,
                      scaled, false, 10)},
        {"fig5_recovery.csv",
         render_panel(id, description, "recovery probability", series, scaled, true, 10)},
    };
  }
  if (id == "fig6") {
    const auto series =
        prob_series({{"p=0.3", 0.3}, {"p=0.5", 0.5}, {"p=0.7", 0.7}}, 2, 10);
    const std::string description =
        "probabilistic access, m=2, p in {0.3,0.5,0.7}, alpha in [1,10]";
    const ServiceModel shifted = ShiftedExponential{1.0, 3.0};
    return {
        {"fig6_shifted.csv",
         render_panel(id, description, "service rate, shifted exponential (mu=1, delta=3)",
                      series, shifted, false, 10)},
        {"fig6_recovery.csv",
         render_panel(id, description, "recovery probability", series, shifted, true, 10)},
    };
  }
  throw std::invalid_argument("unknown figure id '" + id + "'");
}

std::vector<std::string> write_figure(const std::string& id,
                                      const std::filesystem::path& directory) {
  const auto panels = render_figure(id);
  std::filesystem::create_directories(directory);
  std::vector<std::string> paths;
  for (const auto& panel : panels) {
    const auto path = directory / panel.filename;
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + path.string());
    file << panel.content;
    paths.push_back(path.string());
  }
  return paths;
}

}  // namespace allocrate
