#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satgame/graph.hpp"
#include "satgame/role.hpp"

namespace satgame {

/// Exact rational with 64-bit numerator/denominator, normalized, den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n) {}
  Rational(std::int64_t n, std::int64_t d);

  static Rational parse(const std::string& text);  // "p/q" or "p"
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  bool operator==(const Rational&) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;
};

/// r * sqrt(s) with r, s rational; s == 1 means the value is rational.
/// Covers every constant the bound machinery needs (e.g. d = 1/sqrt(3)).
struct RootScalar {
  Rational r{1};
  Rational s{1};

  static RootScalar parse(const std::string& text);  // "p/q", "sqrt(p/q)", "p/q*sqrt(p/q)"
  bool rational() const { return s == Rational(1); }
  double to_double() const;
  std::string to_string() const;
};

enum class TheoremId {
  OddCycles,      // game value k^2 on K_{2k}
  Trees,          // C(n-2,2)+1 with the two small exceptions
  Claw,           // K_{1,3} piecewise
  P4Kn,           // interval bounds
  P4Kmn,          // exact piecewise values
  SatP4Kmn,       // min{m,n}
  ExOdd,          // k^2
  ExTrees,        // C(n-1,2)
  ExStar,         // floor(rn/2)
  StarConjecture, // floor((rn-1)/2), verified by computer only for n <= 8
};

TheoremId parse_theorem(const std::string& text);
std::string to_string(TheoremId id);

struct ClosedFormQuery {
  TheoremId id;
  int n = 0;
  int m = 0;
  int k = 0;
  int r = 0;
  PlayerRole first = PlayerRole::Max;
};

struct ClosedFormValue {
  long long lo = 0;
  long long hi = 0;
  bool conjectured = false;

  bool exact() const { return lo == hi; }
};

/// Theorem value (or interval, for the P_4-on-K_n bounds). Throws
/// OutOfTheoremRange outside the stated parameter ranges.
ClosedFormValue closed_form(const ClosedFormQuery& q);

struct MatchReport {
  int alpha_prime = 0;
  int bound = 0;  // m + n - alpha'
  int edges = 0;
  bool equality = false;
  bool full = false;  // contains both an X-star and a Y-star
};

MatchReport match_bound_report(const GameGraph& g);

struct EssentialPathReport {
  int s_x = 0;
  int s_y = 0;
  long long nonadjacent_cross_pairs = 0;  // pairs in S_X x S_Y with no edge
  long long p4_joined_pairs = 0;          // of those, joined by some P_4
  int max_s_neighbors = 0;                // max over v of |N(v) ∩ S|
  long long max_central_essential = 0;    // max essential paths sharing a central edge
  int high_degree_count = 0;              // vertices with degree >= n^{5/12}
};

EssentialPathReport essential_path_report(const GameGraph& g, const std::vector<Vertex>& s);

struct C4BoundParams {
  Rational c;
  RootScalar d;
};

struct C4Bound {
  double a = 0;
  std::optional<Rational> a_exact;  // set when the selected branch is rational
  double b = 0;                     // (c^2 / 2d^2)^{2/3}
  bool min_is_second_branch = false;
  long long bound = 0;  // floor(a * n^{13/12})
};

/// a = min{ (1/2)(c^2/2d^2)^{2/3}, c^2/2d }. Branch selection is exact
/// (a = c^2/2d iff c^2 d <= 1/4); values that are not rational are reported
/// as doubles with a documented 1e-12 comparison tolerance.
C4Bound c4_bound_constant(const C4BoundParams& p, long long n);

/// CSV table for a sweep of closed-form queries.
/// Header: theorem,first,n,m,k,r,lo,hi,conjectured
std::string closed_form_csv(const std::vector<ClosedFormQuery>& queries);

}  // namespace satgame
