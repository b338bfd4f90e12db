#pragma once

/**
 * @file cli.hpp
 * @brief The `ringmat` command line front end.
 *
 *   ringmat det|adjoint|charpoly|check [options] <file>
 *   ringmat perm parity|invert|decompose <p>
 *   ringmat perm compose <p> <q>
 *
 * Exit status: 0 success, 1 computation error (a precondition such as a
 * non-square input or the enumeration cap), 2 parse or usage error,
 * 3 a failed check (law check, --cross-check or adjoint --verify).
 */

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ringmat/laws.hpp"

namespace ringmat::cli {

enum class ExitCode : int { ok = 0, computation_error = 1, parse_error = 2, check_failed = 3 };

enum class Algorithm { leibniz, cofactor, expand_row, expand_col };
enum class OutputFormat { plain, machine };

struct JobSpec {
  std::string command;
  std::string input_path;
  Algorithm algorithm = Algorithm::cofactor;
  std::size_t algorithm_index = 0;  // row or column for the expansions
  std::optional<std::size_t> cap_override;
  std::uint64_t seed = 0;
  std::size_t samples = 8;
  bool cross_check = false;
  bool verify = false;
  bool verbose = false;
  OutputFormat format = OutputFormat::plain;
  std::vector<std::string> permutations;  // perm operands
};

/// Substitutes the determinant that `det` reports and `check` tests, so a
/// corrupted implementation can be pushed through the front end in mutation
/// tests. The cross-check references are never substituted.
struct Hooks {
  DeterminantFn determinant;
};

/// `args` is the full argument vector including the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks = {});

}  // namespace ringmat::cli
