#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "revinv/netlist.hpp"

namespace revinv {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitInvalid = 2, kExitPartial = 3 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Random Toffoli network used by the bench command.
Circuit random_toffoli_circuit(std::size_t wires, std::size_t gates, std::uint64_t seed);

inline constexpr std::uint64_t kDefaultBenchSeed = 20240601;

}
