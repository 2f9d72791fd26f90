#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ftsp::cli {

// Exit codes: 0 pass, 1 mismatch, 2 usage error, 3 capacity/budget.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

// Runs one command. Structured output goes to `out`; diagnostics and wall
// times go to `err` so stdout stays byte-stable across reruns.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

int run_main(int argc, char** argv);

}  // namespace ftsp::cli
