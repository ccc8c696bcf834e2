#pragma once

#include <string>
#include <vector>

#include "satgame/family.hpp"
#include "satgame/graph.hpp"

namespace satgame {

/// Canonical key of a position under host automorphisms: equal bytes iff some
/// host automorphism maps one edge set onto the other. The byte layout is
/// internal and versioned, not a stability contract.
struct Certificate {
  std::string bytes;

  auto operator<=>(const Certificate&) const = default;
  std::string hex() const;
};

Certificate certificate(const GameGraph& g);

/// One class of legal moves leading to the same child position up to host
/// automorphism. The representative is the lex-least member.
struct MoveOrbit {
  Edge representative;
  int multiplicity = 0;
  Certificate child;
};

/// Groups legal_moves(f, g) by the certificate of the resulting child.
std::vector<MoveOrbit> legal_move_orbit_groups(const ForbiddenFamily& f, const GameGraph& g);

/// Orbit representatives only, sorted by edge.
std::vector<Edge> legal_move_orbits(const ForbiddenFamily& f, const GameGraph& g);

}  // namespace satgame
