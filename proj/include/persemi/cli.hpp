#pragma once

// Command-line front end. `run` is the whole program minus process setup,
// so the same code path serves the binary and the tests.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "persemi/core.hpp"
#include "persemi/families.hpp"
#include "persemi/permblock.hpp"
#include "persemi/search.hpp"

namespace persemi::cli {

enum class OutputFormat { Text, Json, Csv };

enum ExitCode : int {
  kSuccess = 0,
  kCheckedFalse = 1,
  kUsageError = 2,
  kInternalError = 3,
};

/// Raised when a result fails an independent re-check.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

OutputFormat parse_format(std::string_view text);

/// Comma-separated positive integers; whitespace tolerated, duplicates
/// rejected, returned ascending. Throws std::invalid_argument.
std::vector<Int> parse_generators(std::string_view text);

/// Worker count from PERSEMI_WORKERS, or 1.
unsigned default_workers();

void render_check(std::ostream& out, GeneratorSet const& gens, PermutationReport const& report,
                  OutputFormat format);
void render_info(std::ostream& out, Semigroup const& semigroup, OutputFormat format);
void render_enumeration(std::ostream& out, EnumerationResult const& result, OutputFormat format);
void render_conjecture(std::ostream& out, ConjectureReport const& report, OutputFormat format);

/// args excludes the program name. Returns the process exit code.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace persemi::cli
