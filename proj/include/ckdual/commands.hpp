#pragma once

#include <cstdint>
#include <string>

#include "ckdual/fgab.hpp"
#include "ckdual/io.hpp"

namespace ckdual {

struct CommandResult {
    int exit_code = 0;
    std::string output;
};

struct CommandOptions {
    bool json = false;
    PointedIsoOptions iso;
};

/// Exit 0, or 2 on validation failure (thrown as ValidationError upstream).
CommandResult cmd_invariants(const MatrixDocument& doc, bool transpose, const CommandOptions& opts);

/// Exit 0 iff the full strong-duality report passes, 1 otherwise.
CommandResult cmd_verify(const MatrixDocument& doc, const CommandOptions& opts);

/// Exit 0 = Yes, 1 = No, 3 = Unknown.
CommandResult cmd_iso(const MatrixDocument& a, const MatrixDocument& b, const std::string& question,
                      const CommandOptions& opts);

/// Reproduces the worked examples of the source tables line by line;
/// exit 0 iff every line matches. `corrupt_table` is a test hook that
/// deliberately flips one expected value.
CommandResult cmd_paper_examples(const CommandOptions& opts, bool corrupt_table = false);

/// Exhaustive for size <= 3, sampled otherwise; verifies every matrix and
/// cross-checks transpose consistency on sampled pairs. Exit 0 iff all pass.
CommandResult cmd_enumerate(std::size_t size, std::size_t limit, std::uint64_t seed,
                            const CommandOptions& opts);

}  // namespace ckdual
