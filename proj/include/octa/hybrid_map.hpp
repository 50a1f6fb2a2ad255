#pragma once

#include <array>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "octa/colored_graph.hpp"

namespace octa {

// Square-vertices and black vertices. Square n owns the four edges
// 4n..4n+3 (same flat labels as ColoredGraph); slot 0 is joined to slot 1 by
// an inner edge of color 1 and to slot 3 by an inner edge of color 2. Each
// black vertex lists its incident edges in clockwise order.
//
// The stored form is normalized: each rotation starts at its smallest label
// and black vertices are sorted by that label. The only black vertex allowed
// to be empty is the lone vertex of the zero-square map.
class HybridMap {
 public:
  HybridMap(int squares, std::vector<std::vector<int>> blacks);

  /// The zero-square map: a single black vertex, no edges.
  static HybridMap empty();

  int squares() const { return squares_; }
  int edges() const { return kSlots * squares_; }
  int black_count() const { return static_cast<int>(blacks_.size()); }
  const std::vector<std::vector<int>>& blacks() const { return blacks_; }

  int black_of(int edge) const { return black_of_[edge]; }
  /// Next edge clockwise around the black vertex of `edge`.
  int next(int edge) const { return next_[edge]; }
  int prev(int edge) const { return prev_[edge]; }

  bool connected() const { return connected_; }

  friend bool operator==(const HybridMap& a, const HybridMap& b) {
    return a.squares_ == b.squares_ && a.blacks_ == b.blacks_;
  }

 private:
  int squares_;
  std::vector<std::vector<int>> blacks_;
  std::vector<int> black_of_;
  std::vector<int> next_;
  std::vector<int> prev_;
  bool connected_;
};

/// A map with a distinguished corner, named by the edge that follows it
/// clockwise. root is -1 exactly for the zero-square map.
struct RootedMap {
  HybridMap map = HybridMap::empty();
  int root = -1;

  friend bool operator==(const RootedMap&, const RootedMap&) = default;
};

struct SubmapFaceCount {
  int faces1 = 0;
  int faces2 = 0;
  int blacks = 0;
  int total = 0;
  friend bool operator==(const SubmapFaceCount&, const SubmapFaceCount&) = default;
};

/// Colors c in {1,2} for which an edge borders two distinct faces of M^(c).
struct IncidentColors {
  bool color1 = false;
  bool color2 = false;
  int size() const { return int{color1} + int{color2}; }
  friend bool operator==(const IncidentColors&, const IncidentColors&) = default;
};

enum class BondKind { FourBridges, TwoTwoBonds, OppositeTwoBonds, FourBond, Mixed };

struct BondClass {
  BondKind kind = BondKind::Mixed;
  /// TwoTwoBonds only: color of the inner edges joining the two edges of each
  /// bond (1 pairs slots {0,1},{2,3}; 2 pairs slots {0,3},{1,2}).
  int inner_color = 0;

  bool forbidden() const {
    return kind != BondKind::FourBridges && kind != BondKind::TwoTwoBonds;
  }
  friend bool operator==(const BondClass&, const BondClass&) = default;
};

const char* to_string(BondKind kind);

/// Graph to map: black vertices are the cycles of sigma0.
/// Throws PreconditionError when g is disconnected.
HybridMap from_colored_graph(const ColoredGraph& g);

/// Inverse direction. Throws PreconditionError on a disconnected or
/// zero-square map.
ColoredGraph to_colored_graph(const HybridMap& m);

/// The rotation of m as a permutation of the edges (sigma_M).
std::vector<int> rotation_permutation(const HybridMap& m);

SubmapFaceCount count_faces(const HybridMap& m);

IncidentColors incident_face_set(const HybridMap& m, int edge);

/// Number of connected components after unhooking every edge in `edges`.
int components_after_unhooking(const HybridMap& m, std::span<const int> edges);

bool is_bridge(const HybridMap& m, int edge);

/// Detaches `edge` from its black vertex onto a new degree-1 black vertex.
/// Throws PreconditionError when the edge is a bridge.
HybridMap unhook(const HybridMap& m, int edge);

BondClass classify_bonds(const HybridMap& m, int square);

/// The edge of square-vertex `edge/4` that forms a 2-bond with `edge`, for a
/// square classified TwoTwoBonds with the given inner color.
inline int bond_partner(int edge, int inner_color) {
  return edge ^ (inner_color == 1 ? 1 : 3);
}

/// A one-vertex map as its rotation word: every loop id occurs exactly twice.
struct OneVertexMap {
  int black = -1;
  std::vector<int> word;

  int loops() const { return static_cast<int>(word.size()) / 2; }
};

/// Genus from V - E + F = 2 - 2g, faces traced through the rotation.
/// Throws InvalidInput when a loop id does not occur exactly twice.
int genus(const OneVertexMap& map);
int genus(std::span<const int> word);

/// Vertical cut of a bridgeless map whose squares all carry two 2-bonds at
/// single black vertices: one component per black vertex, each loop named by
/// the smaller edge of its bond. Throws PreconditionError otherwise.
std::vector<OneVertexMap> vertical_cut(const HybridMap& m);

/// The dominance conditions, in the order they are checked.
enum class Violation {
  None,
  BondShape,   // a square is neither four bridges nor two 2-bonds
  BondSpread,  // a 2-bond meets two different black vertices
  NonPlanar,   // a vertical-cut component has positive genus
};

const char* to_string(Violation v);

struct DominanceReport {
  bool dominant = false;
  Violation violated = Violation::None;
  /// Square (BondShape, BondSpread) or black vertex (NonPlanar).
  int where = -1;
  std::string diagnostic;
  std::vector<BondClass> bonds;
};

/// Throws PreconditionError when m is disconnected.
DominanceReport is_dominant(const HybridMap& m);

struct InsertMode {
  enum class Kind { Bridge, TwoBond };
  Kind kind = Kind::Bridge;
  int color = 0;  // TwoBond only: 1 or 2

  static InsertMode bridge() { return {Kind::Bridge, 0}; }
  static InsertMode two_bond(int color) { return {Kind::TwoBond, color}; }
};

/// Inserts a new square-vertex into the corner preceding `corner_edge`
/// (or the lone corner of the zero-square map when corner_edge is -1). The
/// new square gets index squares(). Bridge mode hangs three new leaves off
/// it; TwoBond(a) attaches a 2-bond joined by color a at the corner and the
/// other 2-bond to a new degree-2 black vertex. Dominance of the input is not
/// re-verified. Throws InvalidInput on a bad corner or color.
HybridMap insert_square(const HybridMap& m, int corner_edge, InsertMode mode);

/// Every corner of m, as accepted by insert_square.
std::vector<int> corners(const HybridMap& m);

/// Canonical representative of a rooted map: the root becomes edge 0 and the
/// remaining squares are numbered in order of first reach.
RootedMap canonical_rooted(const RootedMap& rooted);

/// A dominant map grown from the zero-square map by `squares` insertions,
/// each at a uniform corner in a uniform mode (bridge, 2-bond 1, 2-bond 2).
HybridMap random_insertion_map(int squares, std::mt19937_64& rng);

/// Composes the color-0 pairing of m with `swaps` random transpositions,
/// redrawing any swap that would disconnect the map. Generally not dominant.
HybridMap rewire(const HybridMap& m, int swaps, std::mt19937_64& rng);

/// Applies a relabeling of the squares and their slots.
HybridMap relabel(const HybridMap& m, const Relabeling& gamma);

}  // namespace octa
