#include "thuekit/builtin.hpp"

#include "thuekit/parse.hpp"
#include "thuekit/rewriting.hpp"

namespace thuekit {

  namespace {

    constexpr std::string_view kZeroRules = R"(
ZL_a: a0 -> 0
ZL_b: b0 -> 0
ZL_c: c0 -> 0
ZL_0: 00 -> 0
ZR_a: 0a -> 0
ZR_b: 0b -> 0
ZR_c: 0c -> 0
ZR_0: 00 -> 0
)";

    std::string const kR = std::string(R"(alphabet: a b c 0
BA: ba -> aab
BC: bc -> aca
ACC: acc -> 0)") + std::string(kZeroRules);

    std::string const kS = std::string(R"(alphabet: a b c 0
BA: ba -> aab
BC: bc -> aca)") + std::string(kZeroRules)
                           + "ACAC: a^(2^(n+1)-1) c a^n c -> 0 for n>=0\n";

    std::string const kT = R"(alphabet: a b c
BC: bc -> aca
AAB: aab -> ba
)";

    std::string const kU = kT + "BAC: b a^n c -> a^(2n+1) c a for n>=0\n";

  }  // namespace

  std::string_view builtin_system_text(SystemId id) {
    switch (id) {
      case SystemId::R:
        return kR;
      case SystemId::S:
        return kS;
      case SystemId::T:
        return kT;
      case SystemId::U:
        return kU;
    }
    return {};
  }

  RewritingSystem const& builtin_system(SystemId id) {
    static RewritingSystem const r = parse_system(kR, "R");
    static RewritingSystem const s = parse_system(kS, "S");
    static RewritingSystem const t = parse_system(kT, "T");
    static RewritingSystem const u = parse_system(kU, "U");
    switch (id) {
      case SystemId::R:
        return r;
      case SystemId::S:
        return s;
      case SystemId::T:
        return t;
      case SystemId::U:
        break;
    }
    return u;
  }

  std::optional<SystemId> parse_system_id(std::string_view name) {
    if (name == "R") {
      return SystemId::R;
    }
    if (name == "S") {
      return SystemId::S;
    }
    if (name == "T") {
      return SystemId::T;
    }
    if (name == "U") {
      return SystemId::U;
    }
    return std::nullopt;
  }

  Word nf_S(Word const& w) {
    return normal_form(builtin_system(SystemId::S), w);
  }

  Word nf_U(Word const& w) {
    return normal_form(builtin_system(SystemId::U), w);
  }

}  // namespace thuekit
