#include "octa/hybrid_map.hpp"

#include <algorithm>
#include <numeric>

#include "octa/errors.hpp"
#include "octa/random.hpp"

namespace octa {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), classes_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[a] = b;
      --classes_;
    }
  }
  int classes() const { return classes_; }

 private:
  std::vector<int> parent_;
  int classes_;
};

void normalize(std::vector<std::vector<int>>& blacks) {
  for (auto& rotation : blacks) {
    if (rotation.empty()) continue;
    std::rotate(rotation.begin(), std::min_element(rotation.begin(), rotation.end()),
                rotation.end());
  }
  std::sort(blacks.begin(), blacks.end(), [](const auto& a, const auto& b) {
    if (a.empty() || b.empty()) return a.empty() && !b.empty();
    return a.front() < b.front();
  });
}

// The two bonds of a TwoTwoBonds square, as slot pairs.
std::array<std::array<int, 2>, 2> bond_slots(int inner_color) {
  if (inner_color == 1) return {{{0, 1}, {2, 3}}};
  return {{{0, 3}, {1, 2}}};
}

}  // namespace

HybridMap::HybridMap(int squares, std::vector<std::vector<int>> blacks)
    : squares_(squares), blacks_(std::move(blacks)) {
  if (squares_ < 0) throw InvalidInput("square count must be nonnegative");
  if (blacks_.empty()) throw InvalidInput("a hybrid map needs at least one black vertex");
  const int n = kSlots * squares_;
  black_of_.assign(n, -1);
  for (const auto& rotation : blacks_) {
    if (rotation.empty() && squares_ > 0)
      throw InvalidInput("only the zero-square map may have an isolated black vertex");
    for (int e : rotation) {
      if (e < 0 || e >= n) throw InvalidInput("edge label out of range: " + std::to_string(e));
      if (black_of_[e] >= 0) throw InvalidInput("edge listed twice: " + std::to_string(e));
      black_of_[e] = 0;
    }
  }
  if (squares_ == 0 && blacks_.size() != 1)
    throw InvalidInput("the zero-square map has exactly one black vertex");
  for (int e = 0; e < n; ++e)
    if (black_of_[e] < 0) throw InvalidInput("square slot not attached: " + std::to_string(e));

  normalize(blacks_);
  next_.assign(n, -1);
  prev_.assign(n, -1);
  UnionFind uf(n);
  for (int v = 0; v < black_count(); ++v) {
    const auto& rotation = blacks_[v];
    const int deg = static_cast<int>(rotation.size());
    for (int i = 0; i < deg; ++i) {
      const int e = rotation[i], f = rotation[(i + 1) % deg];
      black_of_[e] = v;
      next_[e] = f;
      prev_[f] = e;
      uf.unite(e, f);
    }
  }
  for (int e = 0; e < n; ++e) {
    uf.unite(e, bubble_tau(1, e));
    uf.unite(e, bubble_tau(2, e));
  }
  connected_ = squares_ == 0 || uf.classes() == 1;
}

HybridMap HybridMap::empty() { return HybridMap(0, {{}}); }

const char* to_string(BondKind kind) {
  switch (kind) {
    case BondKind::FourBridges: return "four-bridges";
    case BondKind::TwoTwoBonds: return "two-2-bonds";
    case BondKind::OppositeTwoBonds: return "opposite-2-bonds";
    case BondKind::FourBond: return "4-bond";
    case BondKind::Mixed: return "mixed";
  }
  return "?";
}

HybridMap from_colored_graph(const ColoredGraph& g) {
  if (!g.connected()) throw PreconditionError("bijection requires a connected graph");
  std::vector<std::vector<int>> blacks;
  std::vector<char> seen(g.labels(), 0);
  for (int x = 0; x < g.labels(); ++x) {
    if (seen[x]) continue;
    std::vector<int> cycle;
    for (int y = x; !seen[y]; y = g.sigma0(y)) {
      seen[y] = 1;
      cycle.push_back(y);
    }
    blacks.push_back(std::move(cycle));
  }
  return HybridMap(g.bubbles(), std::move(blacks));
}

std::vector<int> rotation_permutation(const HybridMap& m) {
  std::vector<int> sigma(m.edges());
  for (int e = 0; e < m.edges(); ++e) sigma[e] = m.next(e);
  return sigma;
}

ColoredGraph to_colored_graph(const HybridMap& m) {
  if (m.squares() == 0) throw PreconditionError("the zero-square map has no colored graph");
  if (!m.connected()) throw PreconditionError("bijection requires a connected map");
  return ColoredGraph(m.squares(), rotation_permutation(m));
}

SubmapFaceCount count_faces(const HybridMap& m) {
  SubmapFaceCount out;
  out.blacks = m.black_count();
  const int n = m.edges();
  int isolated = 0;
  for (const auto& rotation : m.blacks()) isolated += rotation.empty() ? 1 : 0;
  std::vector<char> seen(n);
  for (int color = 1; color <= 2; ++color) {
    std::fill(seen.begin(), seen.end(), 0);
    int count = isolated;
    for (int e = 0; e < n; ++e) {
      if (seen[e]) continue;
      ++count;
      // Cross the square by its color-c inner edge, then turn clockwise.
      for (int x = e; !seen[x]; x = m.next(bubble_tau(color, x))) seen[x] = 1;
    }
    (color == 1 ? out.faces1 : out.faces2) = count;
  }
  out.total = out.faces1 + out.faces2 + out.blacks;
  return out;
}

IncidentColors incident_face_set(const HybridMap& m, int edge) {
  if (edge < 0 || edge >= m.edges()) throw InvalidInput("edge out of range");
  IncidentColors out;
  for (int color = 1; color <= 2; ++color) {
    const int partner = bubble_tau(color, edge);
    bool same_face = false;
    int x = edge;
    do {
      if (x == partner) {
        same_face = true;
        break;
      }
      x = m.next(bubble_tau(color, x));
    } while (x != edge);
    (color == 1 ? out.color1 : out.color2) = !same_face;
  }
  return out;
}

int components_after_unhooking(const HybridMap& m, std::span<const int> edges) {
  const int n = m.edges();
  if (n == 0) return 1;
  std::vector<char> cut(n, 0);
  for (int e : edges) {
    if (e < 0 || e >= n) throw InvalidInput("edge out of range");
    cut[e] = 1;
  }
  UnionFind uf(n);
  int emptied = 0;
  for (const auto& rotation : m.blacks()) {
    int first = -1;
    for (int e : rotation) {
      if (cut[e]) continue;
      if (first < 0) first = e;
      else uf.unite(first, e);
    }
    if (first < 0) ++emptied;
  }
  for (int e = 0; e < n; ++e) {
    uf.unite(e, bubble_tau(1, e));
    uf.unite(e, bubble_tau(2, e));
  }
  return uf.classes() + emptied;
}

bool is_bridge(const HybridMap& m, int edge) {
  const std::array<int, 1> one{edge};
  return components_after_unhooking(m, one) > 1;
}

HybridMap unhook(const HybridMap& m, int edge) {
  if (edge < 0 || edge >= m.edges()) throw InvalidInput("edge out of range");
  if (is_bridge(m, edge)) throw PreconditionError("cannot unhook a bridge");
  auto blacks = m.blacks();
  auto& rotation = blacks[m.black_of(edge)];
  rotation.erase(std::find(rotation.begin(), rotation.end(), edge));
  blacks.push_back({edge});
  return HybridMap(m.squares(), std::move(blacks));
}

BondClass classify_bonds(const HybridMap& m, int square) {
  if (square < 0 || square >= m.squares()) throw InvalidInput("square out of range");
  const int base = kSlots * square;
  // Component counts after unhooking each nonempty subset of the four slots.
  std::array<int, 16> comps{};
  for (int mask = 1; mask < 16; ++mask) {
    std::vector<int> subset;
    for (int s = 0; s < kSlots; ++s)
      if (mask & (1 << s)) subset.push_back(base + s);
    comps[mask] = components_after_unhooking(m, subset);
  }
  auto separates = [&](int mask) { return comps[mask] > 1; };
  auto is_bond = [&](int mask) {
    if (comps[mask] != 2) return false;
    for (int sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask)
      if (separates(sub)) return false;
    return true;
  };

  int bridges = 0;
  for (int s = 0; s < kSlots; ++s) bridges += separates(1 << s) ? 1 : 0;
  if (bridges == kSlots) return {BondKind::FourBridges, 0};
  if (bridges == 0) {
    // Complementary slot pairs: {0,1}|{2,3} color 1, {0,3}|{1,2} color 2,
    // {0,2}|{1,3} opposite.
    if (is_bond(0b0011) && is_bond(0b1100)) return {BondKind::TwoTwoBonds, 1};
    if (is_bond(0b1001) && is_bond(0b0110)) return {BondKind::TwoTwoBonds, 2};
    if (is_bond(0b0101) && is_bond(0b1010)) return {BondKind::OppositeTwoBonds, 0};
    if (is_bond(0b1111)) return {BondKind::FourBond, 0};
  }
  return {BondKind::Mixed, 0};
}

int genus(std::span<const int> word) {
  const int darts = static_cast<int>(word.size());
  if (darts % 2 != 0) throw InvalidInput("a one-vertex map word has even length");
  std::vector<int> partner(darts, -1);
  for (int i = 0; i < darts; ++i) {
    int count = 0;
    for (int j = 0; j < darts; ++j) {
      if (j != i && word[j] == word[i]) {
        partner[i] = j;
        ++count;
      }
    }
    if (count != 1) throw InvalidInput("every loop must occur exactly twice in the word");
  }
  std::vector<int> face(darts);
  for (int i = 0; i < darts; ++i) face[i] = (partner[i] + 1) % darts;
  const int loops = darts / 2;
  const int face_count = darts == 0 ? 1 : cycle_count(face);
  const int euler = 1 - loops + face_count;
  return (2 - euler) / 2;
}

int genus(const OneVertexMap& map) { return genus(map.word); }

std::vector<OneVertexMap> vertical_cut(const HybridMap& m) {
  std::vector<int> color(m.squares());
  for (int sq = 0; sq < m.squares(); ++sq) {
    const BondClass bc = classify_bonds(m, sq);
    if (bc.kind != BondKind::TwoTwoBonds)
      throw PreconditionError("vertical cut: square " + std::to_string(sq) + " is " +
                              to_string(bc.kind));
    for (const auto& bond : bond_slots(bc.inner_color)) {
      if (m.black_of(kSlots * sq + bond[0]) != m.black_of(kSlots * sq + bond[1]))
        throw PreconditionError("vertical cut: a 2-bond of square " + std::to_string(sq) +
                                " spans two black vertices");
    }
    color[sq] = bc.inner_color;
  }
  std::vector<OneVertexMap> out;
  for (int v = 0; v < m.black_count(); ++v) {
    OneVertexMap comp;
    comp.black = v;
    for (int e : m.blacks()[v]) {
      comp.word.push_back(std::min(e, bond_partner(e, color[e / kSlots])));
    }
    out.push_back(std::move(comp));
  }
  return out;
}

const char* to_string(Violation v) {
  switch (v) {
    case Violation::None: return "none";
    case Violation::BondShape: return "bond-shape";
    case Violation::BondSpread: return "bond-spread";
    case Violation::NonPlanar: return "non-planar";
  }
  return "?";
}

DominanceReport is_dominant(const HybridMap& m) {
  if (!m.connected()) throw PreconditionError("dominance is defined for connected maps");
  DominanceReport r;
  r.bonds.resize(m.squares());
  for (int sq = 0; sq < m.squares(); ++sq) {
    r.bonds[sq] = classify_bonds(m, sq);
    if (r.bonds[sq].forbidden()) {
      r.violated = Violation::BondShape;
      r.where = sq;
      r.diagnostic = "square " + std::to_string(sq) + " has a forbidden bond pattern (" +
                     to_string(r.bonds[sq].kind) + ")";
      return r;
    }
  }
  for (int sq = 0; sq < m.squares(); ++sq) {
    if (r.bonds[sq].kind != BondKind::TwoTwoBonds) continue;
    for (const auto& bond : bond_slots(r.bonds[sq].inner_color)) {
      if (m.black_of(kSlots * sq + bond[0]) != m.black_of(kSlots * sq + bond[1])) {
        r.violated = Violation::BondSpread;
        r.where = sq;
        r.diagnostic = "a 2-bond of square " + std::to_string(sq) +
                       " meets two different black vertices";
        return r;
      }
    }
  }
  // Bridges are dropped from each rotation; what remains at a black vertex is
  // the one-vertex map of its 2-bond loops.
  for (int v = 0; v < m.black_count(); ++v) {
    std::vector<int> word;
    for (int e : m.blacks()[v]) {
      const BondClass& bc = r.bonds[e / kSlots];
      if (bc.kind != BondKind::TwoTwoBonds) continue;
      word.push_back(std::min(e, bond_partner(e, bc.inner_color)));
    }
    if (genus(word) != 0) {
      r.violated = Violation::NonPlanar;
      r.where = v;
      r.diagnostic = "vertical-cut component at black vertex " + std::to_string(v) +
                     " is not planar";
      return r;
    }
  }
  r.dominant = true;
  return r;
}

std::vector<int> corners(const HybridMap& m) {
  if (m.squares() == 0) return {-1};
  std::vector<int> out(m.edges());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

HybridMap insert_square(const HybridMap& m, int corner_edge, InsertMode mode) {
  if (m.squares() == 0 ? corner_edge != -1 : (corner_edge < 0 || corner_edge >= m.edges()))
    throw InvalidInput("invalid corner " + std::to_string(corner_edge));
  if (mode.kind == InsertMode::Kind::TwoBond && mode.color != 1 && mode.color != 2)
    throw InvalidInput("2-bond insertion color must be 1 or 2");

  auto blacks = m.blacks();
  const int base = kSlots * m.squares();
  std::vector<int>& rotation = m.squares() == 0 ? blacks.front() : blacks[m.black_of(corner_edge)];
  auto at = m.squares() == 0 ? rotation.end()
                             : std::find(rotation.begin(), rotation.end(), corner_edge);
  if (mode.kind == InsertMode::Kind::Bridge) {
    rotation.insert(at, base);
    for (int s = 1; s < kSlots; ++s) blacks.push_back({base + s});
  } else {
    const int partner = bond_partner(base, mode.color);
    rotation.insert(at, {base, partner});
    blacks.push_back({base ^ 2, partner ^ 2});
  }
  return HybridMap(m.squares() + 1, std::move(blacks));
}

HybridMap random_insertion_map(int squares, std::mt19937_64& rng) {
  if (squares < 0) throw InvalidInput("square count must be nonnegative");
  HybridMap m = HybridMap::empty();
  for (int k = 0; k < squares; ++k) {
    const std::vector<int> cs = corners(m);
    const int corner = cs[uniform_below(rng, cs.size())];
    const auto mode = uniform_below(rng, 3);
    m = insert_square(m, corner,
                      mode == 0 ? InsertMode::bridge() : InsertMode::two_bond(static_cast<int>(mode)));
  }
  return m;
}

HybridMap rewire(const HybridMap& m, int swaps, std::mt19937_64& rng) {
  if (m.squares() == 0 || swaps <= 0) return m;
  std::vector<int> sigma = rotation_permutation(m);
  const auto n = static_cast<std::uint64_t>(m.edges());
  for (int done = 0; done < swaps;) {
    const auto i = static_cast<int>(uniform_below(rng, n));
    const auto j = static_cast<int>(uniform_below(rng, n));
    if (i == j) continue;
    std::swap(sigma[i], sigma[j]);
    if (is_connected(sigma)) {
      ++done;
    } else {
      std::swap(sigma[i], sigma[j]);
    }
  }
  return from_colored_graph(ColoredGraph(m.squares(), std::move(sigma)));
}

HybridMap relabel(const HybridMap& m, const Relabeling& gamma) {
  auto blacks = m.blacks();
  for (auto& rotation : blacks)
    for (int& e : rotation) e = gamma(e);
  return HybridMap(m.squares(), std::move(blacks));
}

RootedMap canonical_rooted(const RootedMap& rooted) {
  const HybridMap& m = rooted.map;
  if (m.squares() == 0) {
    if (rooted.root != -1) throw InvalidInput("the zero-square map has root -1");
    return rooted;
  }
  if (rooted.root < 0 || rooted.root >= m.edges()) throw InvalidInput("root edge out of range");
  if (!m.connected()) throw PreconditionError("rooted canonical form requires a connected map");
  const Relabeling gamma = relabeling_from(rotation_permutation(m), rooted.root);
  return RootedMap{relabel(m, gamma), 0};
}

}  // namespace octa
