#include "satgame/canonical.hpp"

#include <algorithm>
#include <map>

namespace satgame {

std::string Certificate::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

namespace {

// Canonical labeling of one component: iterative neighborhood refinement,
// then backtracking over the remaining color classes, taking the
// lexicographically least encoding (part bits in canonical order, then the
// packed upper-triangle adjacency).
class ComponentCanon {
 public:
  ComponentCanon(const GameGraph& g, const std::vector<Vertex>& verts, bool flip_parts)
      : s_(static_cast<int>(verts.size())) {
    adj_.assign(static_cast<size_t>(s_), {});
    init_color_.assign(static_cast<size_t>(s_), 0);
    std::map<Vertex, int> local;
    for (int i = 0; i < s_; ++i) local[verts[static_cast<size_t>(i)]] = i;
    for (int i = 0; i < s_; ++i) {
      Vertex v = verts[static_cast<size_t>(i)];
      if (g.host().is_bipartite()) {
        int part = g.host().in_part_y(v) ? 1 : 0;
        init_color_[static_cast<size_t>(i)] = flip_parts ? 1 - part : part;
      }
      for (Vertex w : g.neighbors(v)) adj_[static_cast<size_t>(i)].push_back(local.at(w));
    }
  }

  std::string run() {
    best_.clear();
    search(init_color_);
    return best_;
  }

 private:
  static std::vector<int> rerank(std::vector<std::vector<int>> keys) {
    std::vector<std::vector<int>> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(keys.size());
    for (size_t v = 0; v < keys.size(); ++v) {
      out[v] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
    }
    return out;
  }

  void refine(std::vector<int>& colors) const {
    for (;;) {
      std::vector<std::vector<int>> keys(static_cast<size_t>(s_));
      for (int v = 0; v < s_; ++v) {
        std::vector<int> nbr;
        nbr.reserve(adj_[static_cast<size_t>(v)].size());
        for (int w : adj_[static_cast<size_t>(v)]) nbr.push_back(colors[static_cast<size_t>(w)]);
        std::sort(nbr.begin(), nbr.end());
        keys[static_cast<size_t>(v)].push_back(colors[static_cast<size_t>(v)]);
        keys[static_cast<size_t>(v)].insert(keys[static_cast<size_t>(v)].end(), nbr.begin(),
                                            nbr.end());
      }
      std::vector<int> next = rerank(std::move(keys));
      if (next == colors) return;
      colors = std::move(next);
    }
  }

  bool discrete(const std::vector<int>& colors) const {
    int mx = 0;
    for (int c : colors) mx = std::max(mx, c);
    return mx == s_ - 1;
  }

  std::string encode(const std::vector<int>& colors) const {
    std::vector<int> vertex_at(static_cast<size_t>(s_));
    for (int v = 0; v < s_; ++v) vertex_at[static_cast<size_t>(colors[static_cast<size_t>(v)])] = v;
    std::string out;
    int part_bytes = (s_ + 7) / 8;
    int adj_bytes = (s_ * (s_ - 1) / 2 + 7) / 8;
    out.assign(static_cast<size_t>(2 + part_bytes + adj_bytes), '\0');
    out[0] = static_cast<char>(s_ & 0xff);
    out[1] = static_cast<char>((s_ >> 8) & 0xff);
    for (int i = 0; i < s_; ++i) {
      if (init_color_[static_cast<size_t>(vertex_at[static_cast<size_t>(i)])])
        out[static_cast<size_t>(2 + i / 8)] |= static_cast<char>(1 << (i % 8));
    }
    std::vector<char> isadj(static_cast<size_t>(s_) * s_, 0);
    for (int v = 0; v < s_; ++v)
      for (int w : adj_[static_cast<size_t>(v)]) isadj[static_cast<size_t>(v) * s_ + w] = 1;
    int bit = 0;
    for (int i = 0; i < s_; ++i) {
      for (int j = i + 1; j < s_; ++j, ++bit) {
        int a = vertex_at[static_cast<size_t>(i)];
        int b = vertex_at[static_cast<size_t>(j)];
        if (isadj[static_cast<size_t>(a) * s_ + b])
          out[static_cast<size_t>(2 + part_bytes + bit / 8)] |= static_cast<char>(1 << (bit % 8));
      }
    }
    return out;
  }

  void search(std::vector<int> colors) {
    refine(colors);
    if (discrete(colors)) {
      std::string enc = encode(colors);
      if (best_.empty() || enc < best_) best_ = enc;
      return;
    }
    // first non-singleton class in color order
    std::vector<int> class_size(static_cast<size_t>(s_), 0);
    for (int c : colors) ++class_size[static_cast<size_t>(c)];
    int target = 0;
    while (class_size[static_cast<size_t>(target)] < 2) ++target;
    for (int v = 0; v < s_; ++v) {
      if (colors[static_cast<size_t>(v)] != target) continue;
      std::vector<std::vector<int>> keys(static_cast<size_t>(s_));
      for (int u = 0; u < s_; ++u) {
        keys[static_cast<size_t>(u)] = {colors[static_cast<size_t>(u)] * 2 + (u == v ? 0 : 1)};
      }
      search(rerank(std::move(keys)));
    }
  }

  int s_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> init_color_;
  std::string best_;
};

std::string body_for_orientation(const GameGraph& g, const std::vector<ComponentSummary>& comps,
                                 bool flip_parts) {
  std::vector<std::string> encodings;
  encodings.reserve(comps.size());
  for (const auto& c : comps) encodings.push_back(ComponentCanon(g, c.vertices, flip_parts).run());
  std::sort(encodings.begin(), encodings.end());
  std::string body;
  for (const auto& e : encodings) {
    std::uint32_t len = static_cast<std::uint32_t>(e.size());
    for (int i = 0; i < 4; ++i) body.push_back(static_cast<char>((len >> (8 * i)) & 0xff));
    body += e;
  }
  return body;
}

}  // namespace

Certificate certificate(const GameGraph& g) {
  const HostGraph& h = g.host();
  std::string header;
  if (h.is_bipartite()) {
    header.push_back('B');
    int m = h.part_x(), n = h.part_y();
    header.push_back(static_cast<char>(m & 0xff));
    header.push_back(static_cast<char>((m >> 8) & 0xff));
    header.push_back(static_cast<char>(n & 0xff));
    header.push_back(static_cast<char>((n >> 8) & 0xff));
  } else {
    header.push_back('K');
    int n = h.order();
    header.push_back(static_cast<char>(n & 0xff));
    header.push_back(static_cast<char>((n >> 8) & 0xff));
  }
  auto comps = components(g);
  std::string body = body_for_orientation(g, comps, false);
  if (h.is_bipartite() && h.part_x() == h.part_y()) {
    std::string flipped = body_for_orientation(g, comps, true);
    if (flipped < body) body = std::move(flipped);
  }
  return Certificate{header + body};
}

std::vector<MoveOrbit> legal_move_orbit_groups(const ForbiddenFamily& f, const GameGraph& g) {
  auto moves = legal_moves(f, g);  // throws PositionNotFree when g is not free
  std::map<std::string, MoveOrbit> groups;
  for (Edge e : moves) {
    Certificate c = certificate(add_edge(g, e));
    auto [it, inserted] = groups.try_emplace(c.bytes);
    if (inserted) {
      it->second.representative = e;  // moves are lex-sorted: first hit is least
      it->second.child = std::move(c);
    }
    ++it->second.multiplicity;
  }
  std::vector<MoveOrbit> out;
  out.reserve(groups.size());
  for (auto& [_, orbit] : groups) out.push_back(std::move(orbit));
  std::sort(out.begin(), out.end(),
            [](const MoveOrbit& a, const MoveOrbit& b) { return a.representative < b.representative; });
  return out;
}

std::vector<Edge> legal_move_orbits(const ForbiddenFamily& f, const GameGraph& g) {
  std::vector<Edge> out;
  for (const auto& orbit : legal_move_orbit_groups(f, g)) out.push_back(orbit.representative);
  return out;
}

}  // namespace satgame
