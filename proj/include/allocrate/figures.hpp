// Canned parameter studies rendered as CSV, one file per panel. Each file
// has the header `alpha,series_label,value`, rows ordered by series then
// alpha, and `#` metadata comments.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace allocrate {

struct FigureCsv {
  std::string filename;
  std::string content;
};

std::vector<std::string> figure_ids();
bool is_known_figure(const std::string& id);

/// Renders every panel of a figure in memory. Throws std::invalid_argument
/// for unknown ids.
std::vector<FigureCsv> render_figure(const std::string& id);

/// Renders and writes the panels into `directory`; returns the paths written.
std::vector<std::string> write_figure(const std::string& id,
                                      const std::filesystem::path& directory);

}  // namespace allocrate
