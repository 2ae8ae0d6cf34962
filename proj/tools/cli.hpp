#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

// Command-line front end. JSON in (file or stdin), JSON out on `out`,
// diagnostics on `err`.
//
// Exit codes: 0 success, 1 a verification suite reported failures,
// 2 malformed arguments or input (the payload names the error code).
namespace subres::cli {

inline constexpr std::uint64_t kDefaultSeed = 1;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace subres::cli
