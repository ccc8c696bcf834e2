#pragma once

#include <string>

#include "satgame/errors.hpp"

namespace satgame {

enum class PlayerRole { Max, Min };

inline PlayerRole other(PlayerRole r) {
  return r == PlayerRole::Max ? PlayerRole::Min : PlayerRole::Max;
}

/// Who moves at a position with the given number of edges already played.
inline PlayerRole mover_at(PlayerRole first, int edges_played) {
  return edges_played % 2 == 0 ? first : other(first);
}

inline std::string to_string(PlayerRole r) { return r == PlayerRole::Max ? "max" : "min"; }

inline PlayerRole parse_role(const std::string& s) {
  if (s == "max" || s == "Max") return PlayerRole::Max;
  if (s == "min" || s == "Min") return PlayerRole::Min;
  throw ParseError("bad player role: " + s);
}

}  // namespace satgame
