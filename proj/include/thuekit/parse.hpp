#pragma once

#include <string>
#include <string_view>

#include "thuekit/system.hpp"
#include "thuekit/word.hpp"

namespace thuekit {

  // Words are written densely ("aaacac"), as runs ("a^3 c a c"), or mixed.
  // An exponent is a decimal literal or a parenthesised constant expression
  // such as a^(2^(15)-2). The empty word is "" or a blank string.
  Word parse_word(std::string_view text);
  Word parse_word(std::string_view text, Alphabet const& alphabet);

  // Same syntax, with n allowed in exponents: "a^(2^(n+1)-1) c a^n c".
  Pattern parse_pattern(std::string_view text);

  // System file:
  //
  //   alphabet: a b c 0
  //   # comment
  //   BA: ba -> aab
  //   ACAC: a^(2^(n+1)-1) c a^n c -> 0 for n>=0
  //
  // The "ID:" label is optional; unlabelled rules are named r1, r2, ... and
  // unlabelled schemas s1, s2, ... in file order.
  RewritingSystem parse_system(std::string_view text, std::string name = "");

  RewritingSystem load_system_file(std::string const& path);

  // Inverse of parse_system for systems whose rules use printable exponents.
  std::string format_system(RewritingSystem const& system);

}  // namespace thuekit
