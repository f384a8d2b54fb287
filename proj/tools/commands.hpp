#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace matchkit::cli {

// Stable exit codes of every subcommand.
inline constexpr int kExitBoth = 0;          // both properties hold / success
inline constexpr int kExitNotBoth = 1;       // verdict negative
inline constexpr int kExitInputError = 2;    // parse, parameter, or precondition
inline constexpr int kExitBudget = 3;        // search truncated
inline constexpr int kExitDisagreement = 4;  // structural and oracle clash

struct CommandResult {
  nlohmann::json report;
  int exit_code = kExitBoth;
};

CommandResult cmd_decide(const std::string& graph_path, const std::string& mode,
                         bool no_witness, std::size_t budget);

struct GenerateSpec {
  std::string family;  // k2_multi k33 k4_multi odd_wheel prism moebius_ladder
                       // truncated_biwheel staircase petersen k4_splice_k33
                       // murty p_brick
  int k = 0;
  int order = 0;
  int extra = 0;
  int multiplicity = 1;
  std::vector<int> spoke_mults;
  std::vector<int> k4_mults;
};

CommandResult cmd_generate(const GenerateSpec& spec, const std::string& out_path);

CommandResult cmd_decompose(const std::string& graph_path);

CommandResult cmd_reduce(const std::string& graph_path);

CommandResult cmd_skeleton(const std::string& graph_path, std::size_t budget);

/// Exhaustive structural-versus-oracle comparison over all simple
/// connected even-order matching covered graphs up to max_order (or
/// over graphs streamed in mcg format), plus seeded multigraph
/// perturbations of the named family members.
CommandResult cmd_crossval(int max_order, std::uint64_t seed, std::size_t budget,
                           int perturbations, std::istream* graph_stream);

/// Re-validates the certificates of a previously emitted decide report
/// against the graph file, in a fresh process.
CommandResult cmd_validate(const std::string& graph_path,
                           const std::string& report_path);

}  // namespace matchkit::cli
