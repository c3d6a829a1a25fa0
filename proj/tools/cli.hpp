#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace binact::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kPass = 0,
  kInputError = 1,
  kRefuted = 2,
  kBudgetExceeded = 3,
};

/// Runs one `binact` invocation. `args[0]` is the program name. The JSON
/// report goes to `out`, a human summary to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Step report for dihedral_conjugation_space(m) at the point s, one entry
/// per m: {"m", "carrier", "chain_sizes", "orbit_size", "step"}.
nlohmann::json dihedral_family(std::span<const std::size_t> ms);

}  // namespace binact::cli
