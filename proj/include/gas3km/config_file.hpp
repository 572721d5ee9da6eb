#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "gas3km/harness.hpp"

namespace gas3km {

/// Grid settings keyed by the `grid` subcommand's long flag names:
/// functions, algorithms, dims, pop-sizes, pcs, rs, runs, seed, max-fes,
/// target. Lists are comma separated; integer lists also accept `lo..hi`;
/// `functions = all` selects the whole catalog.
using GridSettings = std::map<std::string, std::string, std::less<>>;

/// Parses `key = value` lines; `#` starts a comment. Throws
/// std::invalid_argument on malformed lines or unknown keys.
GridSettings parse_grid_settings(std::string_view text);

/// Applies settings on top of `base`. Throws std::invalid_argument on bad values.
ExperimentGrid apply_grid_settings(const GridSettings& settings, ExperimentGrid base = {});

/// Text of a bundled config (`paper_tables`, `paper_vs_n`, `paper_vs_r`).
std::optional<std::string_view> builtin_grid_config(std::string_view name);

/// Loads a bundled config by name, otherwise reads the file.
ExperimentGrid load_grid_config(const std::string& name_or_path);

}  // namespace gas3km
