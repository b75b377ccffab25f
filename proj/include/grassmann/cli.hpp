#pragma once

#include <ostream>

#include "grassmann/hom_solver.hpp"

namespace grassmann::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failed = 1;        // a verified fact failed, or replay mismatch
inline constexpr int invalid = 2;       // bad parameters or usage
inline constexpr int integrity = 3;     // corrupted cache or unreadable certificate
inline constexpr int unverified = 4;    // hypotheses of the rigidity statement fail
inline constexpr int inconclusive = 5;  // solver budget or method limit
inline constexpr int witness = 6;       // nonzero homomorphism found
inline constexpr int internal = 70;     // unexpected error (a bug)
}  // namespace exit_code

int exit_code_for(Conclusion c);
int exit_code_for(Outcome o);

/// Runs one command line. Output goes to out, diagnostics to err; the
/// return value is the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace grassmann::cli
