#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sallylab/claims.hpp"
#include "sallylab/search.hpp"
#include "sallylab/spec.hpp"

namespace sallylab {

using Json = nlohmann::ordered_json;

enum class Format { Json, Markdown, Csv };
/// "json", "md" or "csv". Throws std::invalid_argument.
Format parse_format(const std::string& text);

/// The per-ideal subcommands; Analyze emits every section.
enum class Command { Analyze, Hilbert, Sally, Classify, Closure, Reduction };
std::string to_string(Command command);
Command parse_command(const std::string& text);

struct Report {
  Json doc;
  /// 0 when nothing failed, 1 on a failed assertion or a library error.
  int exit_code = 0;
};

inline constexpr const char* kAnalysisSchema = "sallylab/analysis/1";
inline constexpr const char* kSearchSchema = "sallylab/search/1";
inline constexpr const char* kClaimsSchema = "sallylab/claims/1";

/// Library errors are caught and reported under "error" with exit code 1.
Report run_command(Command command, const IdealSpec& spec, std::optional<std::size_t> window);
Report search_report(const SearchReport& report);
Report claims_report(const std::vector<ClaimResult>& results);

/// Renders any of the three documents; the text ends with a newline.
std::string render(const Json& doc, Format format);

}  // namespace sallylab
