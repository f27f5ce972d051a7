#pragma once

namespace axo::cli {

/// Command-line entry point.
///
/// Exit codes: 0 when the analysis ran (verdicts may be negative or the
/// hypotheses unmet), 2 on input or usage errors, 3 on internal numerical
/// failure.
int run(int argc, const char* const* argv);

}  // namespace axo::cli
