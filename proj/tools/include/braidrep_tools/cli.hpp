#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidrep::cli {

// exit codes
inline constexpr int kOk = 0;
inline constexpr int kResidual = 1;  // some checked residual is nonzero
inline constexpr int kInput = 2;     // malformed input or failed validation

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidrep::cli
