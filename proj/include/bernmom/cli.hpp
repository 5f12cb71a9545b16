#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bernmom
{

// Exit codes: 0 success or conjecture pass, 1 conjecture fail, 2 usage or
// input error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_conjecture_failed = 1;
inline constexpr int exit_usage = 2;

// args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
int run_cli(int argc, char **argv);

} // namespace bernmom
