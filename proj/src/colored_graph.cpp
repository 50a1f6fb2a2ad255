#include "octa/colored_graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "octa/errors.hpp"
#include "octa/random.hpp"

namespace octa {

namespace {

// Union-find over bubbles; bubbles are internally connected by colors 1,2,3.
bool bubbles_connected(std::span<const int> sigma0) {
  const int b = static_cast<int>(sigma0.size()) / kSlots;
  std::vector<int> parent(b);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = b;
  for (int x = 0; x < static_cast<int>(sigma0.size()); ++x) {
    int u = find(x / kSlots), v = find(sigma0[x] / kSlots);
    if (u != v) {
      parent[u] = v;
      --components;
    }
  }
  return components == 1;
}

// Branch-and-bound for the lexicographically least conjugate. Positions are
// filled in order; a block whose bubble is not yet reached (only possible when
// the graph is disconnected) branches over every unreached bubble and key.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(std::span<const int> sigma0)
      : sigma_(sigma0), n_(static_cast<int>(sigma0.size())), b_(n_ / kSlots) {}

  std::vector<int> run() {
    State st;
    st.new_index.assign(b_, -1);
    st.old_of.assign(b_, -1);
    st.key.assign(b_, 0);
    st.image.assign(n_, 0);
    extend(std::move(st), 0, 0);
    return best_;
  }

 private:
  struct State {
    std::vector<int> new_index;
    std::vector<int> old_of;
    std::vector<int> key;
    std::vector<int> image;
    int next = 0;
  };

  void extend(State st, int y, int cmp) {
    for (; y < n_; ++y) {
      const int block = y / kSlots;
      if (st.old_of[block] < 0) {
        for (int n = 0; n < b_; ++n) {
          if (st.new_index[n] >= 0) continue;
          for (int k = 0; k < kSlots; ++k) {
            State branch = st;
            branch.new_index[n] = branch.next;
            branch.old_of[branch.next] = n;
            branch.key[n] = k;
            ++branch.next;
            extend(std::move(branch), y, cmp);
          }
        }
        return;
      }
      const int old_bubble = st.old_of[block];
      const int old = kSlots * old_bubble + ((y % kSlots) ^ st.key[old_bubble]);
      const int t = sigma_[old];
      const int tb = t / kSlots;
      if (st.new_index[tb] < 0) {
        st.new_index[tb] = st.next;
        st.old_of[st.next] = tb;
        st.key[tb] = t % kSlots;
        ++st.next;
      }
      const int value = kSlots * st.new_index[tb] + ((t % kSlots) ^ st.key[tb]);
      st.image[y] = value;
      if (have_best_ && cmp == 0) {
        if (value > best_[y]) return;
        if (value < best_[y]) cmp = -1;
      }
    }
    if (!have_best_ || cmp < 0) {
      best_ = std::move(st.image);
      have_best_ = true;
    }
  }

  std::span<const int> sigma_;
  int n_;
  int b_;
  std::vector<int> best_;
  bool have_best_ = false;
};

}  // namespace

ColoredGraph::ColoredGraph(int bubbles, std::vector<int> sigma0)
    : bubbles_(bubbles), sigma0_(std::move(sigma0)) {
  if (bubbles_ < 1) throw InvalidInput("bubble count must be positive");
  if (static_cast<int>(sigma0_.size()) != kSlots * bubbles_)
    throw InvalidInput("sigma0 must have " + std::to_string(kSlots * bubbles_) +
                       " entries, got " + std::to_string(sigma0_.size()));
  if (!is_permutation_of_range(sigma0_))
    throw InvalidInput("sigma0 is not a permutation of [0, 4b)");
  connected_ = bubbles_connected(sigma0_);
}

ColoredGraph ColoredGraph::identity(int bubbles) {
  std::vector<int> id(kSlots * std::max(bubbles, 0));
  std::iota(id.begin(), id.end(), 0);
  return ColoredGraph(bubbles, std::move(id));
}

Relabeling Relabeling::identity(int bubbles) {
  Relabeling r;
  r.bubble_perm.resize(bubbles);
  std::iota(r.bubble_perm.begin(), r.bubble_perm.end(), 0);
  r.keys.assign(bubbles, 0);
  return r;
}

Relabeling Relabeling::random(int bubbles, std::mt19937_64& rng) {
  Relabeling r = identity(bubbles);
  shuffle_in_place(r.bubble_perm, rng);
  for (int& k : r.keys) k = static_cast<int>(uniform_below(rng, kSlots));
  return r;
}

Relabeling Relabeling::inverse() const {
  const int b = static_cast<int>(bubble_perm.size());
  Relabeling r = identity(b);
  for (int n = 0; n < b; ++n) {
    r.bubble_perm[bubble_perm[n]] = n;
    r.keys[bubble_perm[n]] = keys[n];
  }
  return r;
}

int cycle_count(std::span<const int> perm) {
  std::vector<char> seen(perm.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = 1;
  }
  return cycles;
}

bool is_permutation_of_range(std::span<const int> values) {
  std::vector<char> hit(values.size(), 0);
  for (int v : values) {
    if (v < 0 || v >= static_cast<int>(values.size()) || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

bool is_connected(std::span<const int> sigma0) {
  if (sigma0.empty() || sigma0.size() % kSlots != 0) return false;
  return bubbles_connected(sigma0);
}

FaceCensus faces(const ColoredGraph& g) {
  const int n = g.labels();
  FaceCensus census;
  std::vector<int> product(n);
  for (int color = 1; color <= 3; ++color) {
    // sigma0 composed with the inverse of tau(color); tau is an involution.
    for (int x = 0; x < n; ++x) product[x] = g.sigma0(bubble_tau(color, x));
    const int c = cycle_count(product);
    (color == 1 ? census.f1 : color == 2 ? census.f2 : census.f3) = c;
  }
  census.f_total = census.f1 + census.f2 + census.f3;
  census.tetrahedra = 8 * g.bubbles();
  census.e0 = census.f_total;
  census.e_total = census.e0 + 6 * g.bubbles();
  return census;
}

DegreeReport degrees(const ColoredGraph& g) {
  if (!g.connected()) throw PreconditionError("degrees require a connected graph");
  const FaceCensus c = faces(g);
  const Rational t(c.tetrahedra), e(c.e_total), e0(c.e0);
  constexpr int p = 4;  // an octahedron is 2p = 8 tetrahedra
  DegreeReport r;
  r.gurau = Rational(3, 2) * t + 3 - e;
  r.gurau_bubble = Rational(p - 1, p) * t + 3 - e0;
  r.modified = Rational(5, 8) * t + 3 - e0;
  if (r.gurau != r.gurau_bubble)
    throw std::logic_error("Gurau degree and bubble-adapted degree disagree");
  return r;
}

ColoredGraph conjugate(const ColoredGraph& g, const Relabeling& gamma) {
  std::vector<int> out(g.labels());
  for (int x = 0; x < g.labels(); ++x) out[gamma(x)] = gamma(g.sigma0(x));
  return ColoredGraph(g.bubbles(), std::move(out));
}

Relabeling relabeling_from(std::span<const int> sigma0, int start) {
  const int n = static_cast<int>(sigma0.size());
  const int b = n / kSlots;
  Relabeling r;
  r.bubble_perm.assign(b, -1);
  r.keys.assign(b, 0);
  std::vector<int> old_of(b, -1);
  r.bubble_perm[start / kSlots] = 0;
  r.keys[start / kSlots] = start % kSlots;
  old_of[0] = start / kSlots;
  int next = 1;
  for (int y = 0; y < n; ++y) {
    const int ob = old_of[y / kSlots];
    if (ob < 0) throw PreconditionError("relabel_from requires a connected pairing");
    const int t = sigma0[kSlots * ob + ((y % kSlots) ^ r.keys[ob])];
    const int tb = t / kSlots;
    if (r.bubble_perm[tb] < 0) {
      r.bubble_perm[tb] = next;
      r.keys[tb] = t % kSlots;
      old_of[next++] = tb;
    }
  }
  return r;
}

std::vector<int> relabel_from(std::span<const int> sigma0, int start) {
  const Relabeling r = relabeling_from(sigma0, start);
  std::vector<int> out(sigma0.size());
  for (int x = 0; x < static_cast<int>(sigma0.size()); ++x) out[r(x)] = r(sigma0[x]);
  return out;
}

ColoredGraph canonical_form(const ColoredGraph& g) {
  if (g.connected()) {
    std::vector<int> best;
    for (int x = 0; x < g.labels(); ++x) {
      std::vector<int> c = relabel_from(g.sigma0(), x);
      if (best.empty() || c < best) best = std::move(c);
    }
    return ColoredGraph(g.bubbles(), std::move(best));
  }
  return ColoredGraph(g.bubbles(), CanonicalSearch(g.sigma0()).run());
}

bool is_canonical(std::span<const int> sigma0) {
  const int n = static_cast<int>(sigma0.size());
  const int b = n / kSlots;
  if (!is_connected(sigma0)) {
    return CanonicalSearch(sigma0).run() == std::vector<int>(sigma0.begin(), sigma0.end());
  }
  std::vector<int> new_index(b), old_of(b), key(b);
  for (int start = 0; start < n; ++start) {
    std::fill(new_index.begin(), new_index.end(), -1);
    new_index[start / kSlots] = 0;
    key[start / kSlots] = start % kSlots;
    old_of[0] = start / kSlots;
    int next = 1;
    for (int y = 0; y < n; ++y) {
      const int ob = old_of[y / kSlots];
      const int t = sigma0[kSlots * ob + ((y % kSlots) ^ key[ob])];
      const int tb = t / kSlots;
      if (new_index[tb] < 0) {
        new_index[tb] = next;
        key[tb] = t % kSlots;
        old_of[next++] = tb;
      }
      const int value = kSlots * new_index[tb] + ((t % kSlots) ^ key[tb]);
      if (value < sigma0[y]) return false;
      if (value > sigma0[y]) break;
    }
  }
  return true;
}

std::uint64_t relabeling_group_order(int bubbles) {
  std::uint64_t order = 1;
  for (int i = 1; i <= bubbles; ++i) {
    const std::uint64_t factor = 4ull * static_cast<std::uint64_t>(i);
    if (order > std::numeric_limits<std::uint64_t>::max() / factor)
      throw std::overflow_error("relabeling group order overflows 64 bits");
    order *= factor;
  }
  return order;
}

std::uint64_t automorphism_count(const ColoredGraph& g) {
  // Direct stabilizer scan while the group is small.
  if (g.bubbles() <= 5 || !g.connected()) {
    std::uint64_t count = 0;
    const auto sigma = g.sigma0();
    for_each_relabeling(g.bubbles(), [&](const Relabeling& gamma) {
      for (int x = 0; x < g.labels(); ++x)
        if (gamma(sigma[x]) != sigma[gamma(x)]) return;
      ++count;
    });
    return count;
  }
  // Connected: an automorphism is fixed by the image of one label, so it
  // corresponds to a start label whose forced relabeling matches start 0.
  const std::vector<int> reference = relabel_from(g.sigma0(), 0);
  std::uint64_t count = 0;
  for (int x = 0; x < g.labels(); ++x)
    if (relabel_from(g.sigma0(), x) == reference) ++count;
  return count;
}

Jacket jacket_genus(const ColoredGraph& g, std::array<int, 4> color_cycle) {
  {
    std::array<int, 4> sorted = color_cycle;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 4>{0, 1, 2, 3})
      throw InvalidInput("jacket color cycle must order the colors 0,1,2,3");
  }
  if (!g.connected()) throw PreconditionError("jacket genus requires a connected graph");

  const int n = g.labels();
  std::array<int, 4> next_color{}, prev_color{};
  for (int i = 0; i < 4; ++i) {
    next_color[color_cycle[i]] = color_cycle[(i + 1) % 4];
    prev_color[color_cycle[i]] = color_cycle[(i + 3) % 4];
  }
  std::vector<int> sigma_inv(n);
  for (int x = 0; x < n; ++x) sigma_inv[g.sigma0(x)] = x;

  // Darts are (vertex, color); whites are 0..n-1, blacks n..2n-1.
  auto dart = [](int vertex, int color) { return 4 * vertex + color; };
  auto across = [&](int vertex, int color) {
    if (vertex < n) {
      const int black = color == 0 ? g.sigma0(vertex) : bubble_tau(color, vertex);
      return n + black;
    }
    const int y = vertex - n;
    return color == 0 ? sigma_inv[y] : bubble_tau(color, y);
  };
  std::vector<int> face_perm(8 * n);
  for (int v = 0; v < 2 * n; ++v) {
    for (int c = 0; c < 4; ++c) {
      const int u = across(v, c);
      const int turned = u < n ? next_color[c] : prev_color[c];
      face_perm[dart(v, c)] = dart(u, turned);
    }
  }
  const int vertices = 2 * n;  // 8b
  const int edges = 4 * n;     // 16b
  const int face_count = cycle_count(face_perm);
  const int euler = vertices - edges + face_count;
  Jacket j;
  j.color_cycle = color_cycle;
  j.genus = (2 - euler) / 2;
  if ((2 - euler) % 2 != 0 || j.genus < 0)
    throw std::logic_error("jacket Euler characteristic is inconsistent");
  return j;
}

bool sphere_certificate(const ColoredGraph& g) {
  if (!g.connected()) throw PreconditionError("sphere certificate requires a connected graph");
  return std::any_of(kJacketCycles.begin(), kJacketCycles.end(),
                     [&](const auto& cycle) { return jacket_genus(g, cycle).genus == 0; });
}

}  // namespace octa
