#pragma once
// Command-line surface. run_cli takes the argument tokens (without the
// program name) and returns the process exit code:
//   0  success
//   1  verification failure (some suite failed)
//   2  usage error (unknown flag, unparsable value)
//   3  numeric or I/O error (continuation cap hit, point outside the
//      representable region, unwritable output, non-finite samples)

#include <string>
#include <vector>

namespace helix {

int run_cli(const std::vector<std::string>& args);

} // namespace helix
