#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thuekit::cli {

  inline constexpr char kJsonSchema[] = "thuekit/1";

  // Exit codes.
  inline constexpr int kOk      = 0;
  inline constexpr int kRefuted = 1;  // a check failed or a search came up empty
  inline constexpr int kUsage   = 2;  // bad arguments or unparsable input

  // Runs one command line; args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace thuekit::cli
