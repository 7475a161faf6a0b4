#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mds/numeric.hpp"

namespace mds::cli {

enum class Format { Json, Text };

struct Config {
  Format format = Format::Text;
  BigInt max_g{0};      // 0: unbounded
  BigInt max_param{0};  // 0: unbounded
  std::vector<BigInt> scales{BigInt(1), BigInt(2), BigInt(3)};
};

/// Runs one command line (without the program name). Exit codes: 0 success
/// or true, 1 rejection or false, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Comma-separated integers, e.g. "7,15,26".
std::vector<BigInt> parse_list(const std::string& text);

}  // namespace mds::cli
