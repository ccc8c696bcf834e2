#include "satgame/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

namespace satgame {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw Error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::parse(const std::string& text) {
  long long p = 0, q = 1;
  if (std::sscanf(text.c_str(), "%lld/%lld", &p, &q) == 2) return Rational(p, q);
  if (std::sscanf(text.c_str(), "%lld", &p) == 1) return Rational(p);
  throw ParseError("bad rational: " + text);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num * o.num, den * o.den);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num == 0) throw Error("rational division by zero");
  return Rational(num * o.den, den * o.num);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  __int128 lhs = static_cast<__int128>(num) * o.den;
  __int128 rhs = static_cast<__int128>(o.num) * den;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

RootScalar RootScalar::parse(const std::string& text) {
  auto star = text.find("*sqrt(");
  if (star != std::string::npos && text.back() == ')') {
    RootScalar v;
    v.r = Rational::parse(text.substr(0, star));
    v.s = Rational::parse(text.substr(star + 6, text.size() - star - 7));
    return v;
  }
  if (text.rfind("sqrt(", 0) == 0 && text.back() == ')') {
    RootScalar v;
    v.s = Rational::parse(text.substr(5, text.size() - 6));
    return v;
  }
  RootScalar v;
  v.r = Rational::parse(text);
  return v;
}

double RootScalar::to_double() const { return r.to_double() * std::sqrt(s.to_double()); }

std::string RootScalar::to_string() const {
  if (rational()) return r.to_string();
  if (r == Rational(1)) return "sqrt(" + s.to_string() + ")";
  return r.to_string() + "*sqrt(" + s.to_string() + ")";
}

TheoremId parse_theorem(const std::string& text) {
  if (text == "odd-cycles") return TheoremId::OddCycles;
  if (text == "trees") return TheoremId::Trees;
  if (text == "claw") return TheoremId::Claw;
  if (text == "p4-kn") return TheoremId::P4Kn;
  if (text == "p4-kmn") return TheoremId::P4Kmn;
  if (text == "sat-p4-kmn") return TheoremId::SatP4Kmn;
  if (text == "ex-odd") return TheoremId::ExOdd;
  if (text == "ex-trees") return TheoremId::ExTrees;
  if (text == "ex-star") return TheoremId::ExStar;
  if (text == "star-conjecture") return TheoremId::StarConjecture;
  throw ParseError("unknown theorem id: " + text);
}

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::OddCycles: return "odd-cycles";
    case TheoremId::Trees: return "trees";
    case TheoremId::Claw: return "claw";
    case TheoremId::P4Kn: return "p4-kn";
    case TheoremId::P4Kmn: return "p4-kmn";
    case TheoremId::SatP4Kmn: return "sat-p4-kmn";
    case TheoremId::ExOdd: return "ex-odd";
    case TheoremId::ExTrees: return "ex-trees";
    case TheoremId::ExStar: return "ex-star";
    case TheoremId::StarConjecture: return "star-conjecture";
  }
  return "?";
}

namespace {

long long choose2(long long n) { return n * (n - 1) / 2; }

ClosedFormValue point(long long v) { return {v, v, false}; }

ClosedFormValue claw_value(int n, PlayerRole first) {
  if (n < 1) throw OutOfTheoremRange("claw needs n >= 1");
  // On K_1 and K_2 the game trivially fills the host.
  if (n <= 2) return point(n - 1);
  bool even = n % 2 == 0;
  if (first == PlayerRole::Max) {
    bool full = n == 3 || n == 7 || (even && n != 2);
    return point(full ? n : n - 1);
  }
  bool short_game = even && n != 4;
  return point(short_game ? n - 1 : n);
}

}  // namespace

ClosedFormValue closed_form(const ClosedFormQuery& q) {
  switch (q.id) {
    case TheoremId::OddCycles:
      if (q.k < 1) throw OutOfTheoremRange("odd-cycles needs k >= 1");
      return point(static_cast<long long>(q.k) * q.k);
    case TheoremId::Trees: {
      if (q.n < 3) throw OutOfTheoremRange("trees needs n >= 3");
      if (q.first == PlayerRole::Max && q.n == 5) return point(6);
      if (q.first == PlayerRole::Min && q.n == 4) return point(3);
      return point(choose2(q.n - 2) + 1);
    }
    case TheoremId::Claw:
      return claw_value(q.n, q.first);
    case TheoremId::P4Kn: {
      if (q.n < 4) throw OutOfTheoremRange("p4-kn needs n >= 4");
      long long n = q.n;
      if (q.first == PlayerRole::Max)
        return {(4 * n - 6 + 4) / 5, (4 * n + 4) / 5, false};  // ceil, floor
      return {(4 * n - 3 + 4) / 5, (4 * n + 3) / 5, false};
    }
    case TheoremId::P4Kmn: {
      int m = q.m, n = q.n;
      if (m < n) std::swap(m, n);
      if (n < 1) throw OutOfTheoremRange("p4-kmn needs m >= n >= 1");
      if (q.first == PlayerRole::Max) {
        if (n % 2 == 0) return point(n);
        if (m % 2 == 0) return point(m);
        return point(m + n / 2);
      }
      if (n <= 2) return point(m);
      if ((m % 2) * (n % 2) == 0) return point(m + n / 2);
      return point(m + n / 2 - 1);
    }
    case TheoremId::SatP4Kmn: {
      if (q.m < 1 || q.n < 1) throw OutOfTheoremRange("sat-p4-kmn needs m, n >= 1");
      return point(std::min(q.m, q.n));
    }
    case TheoremId::ExOdd:
      if (q.k < 1) throw OutOfTheoremRange("ex-odd needs k >= 1");
      return point(static_cast<long long>(q.k) * q.k);
    case TheoremId::ExTrees:
      if (q.n < 2) throw OutOfTheoremRange("ex-trees needs n >= 2");
      return point(choose2(q.n - 1));
    case TheoremId::ExStar:
      if (q.r < 1 || q.n < 1) throw OutOfTheoremRange("ex-star needs r, n >= 1");
      return point(static_cast<long long>(q.r) * q.n / 2);
    case TheoremId::StarConjecture: {
      if (!(q.n > q.r && q.r > 2)) throw OutOfTheoremRange("star-conjecture needs n > r > 2");
      ClosedFormValue v = point((static_cast<long long>(q.r) * q.n - 1) / 2);
      v.conjectured = q.n > 8;
      return v;
    }
  }
  throw OutOfTheoremRange("unknown theorem");
}

MatchReport match_bound_report(const GameGraph& g) {
  if (!g.host().is_bipartite()) throw HostNotBipartite("match_bound_report needs K_{m,n}");
  MatchReport r;
  r.alpha_prime = max_matching(g);
  r.bound = g.host().part_x() + g.host().part_y() - r.alpha_prime;
  r.edges = g.edge_count();
  r.equality = r.edges == r.bound;
  bool has_x = false, has_y = false;
  for (const auto& c : components(g)) {
    // a star with >= 2 leaves: K_{1,2} is classified as Path(3)
    Vertex center = -1;
    if (c.cls == ComponentClass::Star) center = c.star_center;
    if (c.cls == ComponentClass::Path && c.path_len == 3)
      for (Vertex v : c.vertices)
        if (g.degree(v) == 2) center = v;
    if (center < 0) continue;
    if (g.host().in_part_y(center))
      has_x = true;  // leaves are in X
    else
      has_y = true;
  }
  r.full = has_x && has_y;
  return r;
}

EssentialPathReport essential_path_report(const GameGraph& g, const std::vector<Vertex>& s) {
  if (!g.host().is_bipartite()) throw HostNotBipartite("essential_path_report needs K_{m,n}");
  EssentialPathReport rep;
  int m = g.host().part_x();
  std::vector<char> in_s(static_cast<size_t>(g.order()), 0);
  std::vector<Vertex> sx, sy;
  for (Vertex v : s) {
    if (v < 0 || v >= g.order()) throw Error("essential_path_report: vertex out of range");
    if (in_s[static_cast<size_t>(v)]) continue;
    in_s[static_cast<size_t>(v)] = 1;
    (g.host().in_part_y(v) ? sy : sx).push_back(v);
  }
  rep.s_x = static_cast<int>(sx.size());
  rep.s_y = static_cast<int>(sy.size());

  for (Vertex x : sx) {
    for (Vertex y : sy) {
      if (g.adjacent(x, y)) continue;
      ++rep.nonadjacent_cross_pairs;
      if (p4_between(g, x, y)) ++rep.p4_joined_pairs;
    }
  }

  for (Vertex v = 0; v < g.order(); ++v) {
    int cnt = 0;
    for (Vertex w : g.neighbors(v))
      if (in_s[static_cast<size_t>(w)]) ++cnt;
    rep.max_s_neighbors = std::max(rep.max_s_neighbors, cnt);
  }

  // essential paths x-a-b-y (x in S_X, y in S_Y) with central edge (a, b)
  for (Edge e : g.edges()) {
    Vertex a = g.host().in_part_y(e.u) ? e.u : e.v;  // Y side of the central edge
    Vertex b = g.host().in_part_y(e.u) ? e.v : e.u;  // X side
    long long xs = 0, ys = 0;
    for (Vertex x : g.neighbors(a))
      if (in_s[static_cast<size_t>(x)] && x != b) ++xs;
    for (Vertex y : g.neighbors(b))
      if (in_s[static_cast<size_t>(y)] && y != a) ++ys;
    rep.max_central_essential = std::max(rep.max_central_essential, xs * ys);
  }

  double threshold = std::pow(static_cast<double>(m), 5.0 / 12.0);
  for (Vertex v = 0; v < g.order(); ++v)
    if (static_cast<double>(g.degree(v)) >= threshold) ++rep.high_degree_count;
  return rep;
}

C4Bound c4_bound_constant(const C4BoundParams& p, long long n) {
  if (!(p.c > Rational(0)) || !(p.d.r > Rational(0)) || !(p.d.s > Rational(0)))
    throw Error("c4_bound_constant needs positive c and d");
  C4Bound out;
  Rational c2 = p.c * p.c;
  Rational d2 = p.d.r * p.d.r * p.d.s;  // d^2 is rational by construction
  double base = (c2 / (d2 * Rational(2))).to_double();
  out.b = std::pow(base, 2.0 / 3.0);
  double first_branch = 0.5 * out.b;
  double second_branch = c2.to_double() / (2.0 * p.d.to_double());

  // a = c^2/2d exactly when c^2 d <= 1/4: compare (c^2 d)^2 with 1/16
  Rational c2d_sq = c2 * c2 * d2;
  out.min_is_second_branch = c2d_sq <= Rational(1, 16);
  if (out.min_is_second_branch) {
    out.a = second_branch;
    if (p.d.rational()) out.a_exact = c2 / (p.d.r * Rational(2));
  } else {
    out.a = first_branch;
  }
  long double bound = static_cast<long double>(out.a) *
                      std::pow(static_cast<long double>(n), 13.0L / 12.0L);
  out.bound = static_cast<long long>(std::floor(bound));
  return out;
}

std::string closed_form_csv(const std::vector<ClosedFormQuery>& queries) {
  std::string out = "theorem,first,n,m,k,r,lo,hi,conjectured\n";
  for (const auto& q : queries) {
    ClosedFormValue v = closed_form(q);
    out += to_string(q.id) + "," + to_string(q.first) + "," + std::to_string(q.n) + "," +
           std::to_string(q.m) + "," + std::to_string(q.k) + "," + std::to_string(q.r) + "," +
           std::to_string(v.lo) + "," + std::to_string(v.hi) + "," +
           (v.conjectured ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace satgame
