#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace efl::cli {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 success / property holds, 1 property fails or search
// exhausted, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace efl::cli
