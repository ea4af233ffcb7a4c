#pragma once

#include <optional>
#include <string_view>

#include "thuekit/system.hpp"

namespace thuekit {

  // R: BA, BC, ACC and the zero rules x0 -> 0, 0x -> 0 (ids ZL_x, ZR_x).
  // S: R without ACC, plus the schema ACAC (ACC is its n = 0 instance).
  // T: BC and AAB over {a, b, c}.
  // U: T plus the schema BAC (BC is its n = 0 instance).
  enum class SystemId { R, S, T, U };

  RewritingSystem const& builtin_system(SystemId id);

  // System-file text of a builtin, as parsed by builtin_system.
  std::string_view builtin_system_text(SystemId id);

  std::optional<SystemId> parse_system_id(std::string_view name);

  // Shorthands for the normal forms used throughout.
  Word nf_S(Word const& w);
  Word nf_U(Word const& w);

}  // namespace thuekit
