#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <boost/rational.hpp>

namespace octa {

// Labels are flat indices 4*bubble + slot. Slot s stands for the vertex pair
// (s+1)_white / (s+1)_black of the standard labeling; color 3 joins the pair,
// color 1 joins slots {0,1},{2,3} and color 2 joins slots {0,3},{1,2}.
inline constexpr int kSlots = 4;

struct HalfLabel {
  int bubble = 0;
  int slot = 0;

  constexpr int flat() const { return kSlots * bubble + slot; }
  static constexpr HalfLabel from_flat(int x) { return {x / kSlots, x % kSlots}; }
  friend constexpr bool operator==(HalfLabel, HalfLabel) = default;
};

/// The fixed bubble permutation of color c in {1,2,3}; all are involutions.
constexpr int bubble_tau(int color, int x) {
  switch (color) {
    case 1: return x ^ 1;
    case 2: return x ^ 3;
    default: return x;
  }
}

/// A gluing of b octahedral bubbles, determined by its color-0 pairing.
/// Immutable after construction.
class ColoredGraph {
 public:
  /// Throws InvalidInput when b < 1 or sigma0 is not a permutation of [0, 4b).
  ColoredGraph(int bubbles, std::vector<int> sigma0);

  static ColoredGraph identity(int bubbles);

  int bubbles() const { return bubbles_; }
  int labels() const { return kSlots * bubbles_; }
  std::span<const int> sigma0() const { return sigma0_; }
  int sigma0(int x) const { return sigma0_[x]; }
  bool connected() const { return connected_; }

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.bubbles_ == b.bubbles_ && a.sigma0_ == b.sigma0_;
  }
  friend bool operator<(const ColoredGraph& a, const ColoredGraph& b) {
    if (a.bubbles_ != b.bubbles_) return a.bubbles_ < b.bubbles_;
    return a.sigma0_ < b.sigma0_;
  }

 private:
  int bubbles_;
  std::vector<int> sigma0_;
  bool connected_;
};

struct FaceCensus {
  int f1 = 0;
  int f2 = 0;
  int f3 = 0;
  int f_total = 0;
  int tetrahedra = 0;
  int e0 = 0;
  int e_total = 0;

  int by_color(int c) const { return c == 1 ? f1 : c == 2 ? f2 : f3; }
  friend bool operator==(const FaceCensus&, const FaceCensus&) = default;
};

using Rational = boost::rational<std::int64_t>;

struct DegreeReport {
  Rational gurau;
  Rational gurau_bubble;
  Rational modified;
};

struct Jacket {
  std::array<int, 4> color_cycle{};
  int genus = 0;
};

/// The three jackets up to rotation and reflection.
inline constexpr std::array<std::array<int, 4>, 3> kJacketCycles{{
    {0, 1, 2, 3},
    {0, 1, 3, 2},
    {0, 2, 1, 3},
}};

/// An element of the relabeling group generated by bubble permutations and
/// the per-bubble Klein four-group. Acts on labels by
/// 4n + s  ->  4 perm[n] + (s xor key[n]).
struct Relabeling {
  std::vector<int> bubble_perm;
  std::vector<int> keys;

  static Relabeling identity(int bubbles);
  static Relabeling random(int bubbles, std::mt19937_64& rng);
  int operator()(int x) const {
    return kSlots * bubble_perm[x / kSlots] + ((x % kSlots) ^ keys[x / kSlots]);
  }
  Relabeling inverse() const;
};

/// Number of cycles of a permutation given in one-line form.
int cycle_count(std::span<const int> perm);

bool is_permutation_of_range(std::span<const int> values);

/// Transitivity of <sigma0, tau1, tau2> on the labels.
bool is_connected(std::span<const int> sigma0);
inline bool is_connected(const ColoredGraph& g) { return g.connected(); }

FaceCensus faces(const ColoredGraph& g);

/// Throws PreconditionError on a disconnected graph.
DegreeReport degrees(const ColoredGraph& g);

/// gamma sigma0 gamma^-1.
ColoredGraph conjugate(const ColoredGraph& g, const Relabeling& gamma);

/// Calls fn on every element of the relabeling group (4^b b! elements).
template <class Fn>
void for_each_relabeling(int bubbles, Fn&& fn);

/// Lexicographically minimal sigma0 over the relabeling orbit.
ColoredGraph canonical_form(const ColoredGraph& g);

/// True when sigma0 equals its own canonical form. Early-exits on the first
/// smaller conjugate; used by the orderly enumeration.
bool is_canonical(std::span<const int> sigma0);

/// Relabels a connected sigma0 so that label `start` becomes 0 and every
/// newly reached bubble gets the next free index with the reached slot at 0.
/// This is the lexicographically least conjugate that sends start to 0.
std::vector<int> relabel_from(std::span<const int> sigma0, int start);

/// Same relabeling, returned as the group element itself.
Relabeling relabeling_from(std::span<const int> sigma0, int start);

/// Size of the stabilizer of sigma0 in the relabeling group (direct scan).
std::uint64_t automorphism_count(const ColoredGraph& g);

/// 4^b * b!, the order of the relabeling group. Throws when it overflows.
std::uint64_t relabeling_group_order(int bubbles);

/// Genus of the jacket induced by color_cycle at white vertices and its
/// reverse at black vertices. Throws PreconditionError when disconnected
/// and InvalidInput when color_cycle is not an ordering of {0,1,2,3}.
Jacket jacket_genus(const ColoredGraph& g, std::array<int, 4> color_cycle);

/// A genus-0 jacket certifies the 3-sphere; false is inconclusive.
bool sphere_certificate(const ColoredGraph& g);

template <class Fn>
void for_each_relabeling(int bubbles, Fn&& fn) {
  Relabeling r = Relabeling::identity(bubbles);
  std::vector<int> perm(bubbles);
  for (int i = 0; i < bubbles; ++i) perm[i] = i;
  do {
    r.bubble_perm = perm;
    std::vector<int> keys(bubbles, 0);
    while (true) {
      r.keys = keys;
      fn(static_cast<const Relabeling&>(r));
      int i = 0;
      while (i < bubbles && keys[i] == 3) keys[i++] = 0;
      if (i == bubbles) break;
      ++keys[i];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace octa
