#pragma once

#include <iosfwd>
#include <string>

#include "nsalg/specfile.hpp"
#include "nsalg/split.hpp"

namespace nsalg::cli {

/// Exit codes: 0 pass, 1 a mathematical identity or hypothesis failed,
/// 2 malformed input or usage error.
inline constexpr int kPass = 0;
inline constexpr int kViolated = 1;
inline constexpr int kMalformed = 2;

/// Maps library errors onto the exit-code contract.
int exit_code_for(ErrorCode code);

enum class Format { Text, Json, Tex };

struct SplitOptions {
  Format format = Format::Text;
  bool reduce_anticommutative = false;
  bool fold_star = false;
};

std::string render_split(const SplitRelationSet& set, const SplitOptions& opts);

/// Writes one spec file per bundled example into `dir` and returns their names.
std::vector<std::string> export_specs(const std::string& dir);
/// Bundled spec files keyed by file stem.
std::vector<std::pair<std::string, SpecFile>> bundled_specs();

/// Entry point of the nsalg tool; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nsalg::cli
