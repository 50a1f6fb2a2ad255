#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "octa/hybrid_map.hpp"

namespace octa {

// A rooted dominant map as a forest of plane trees, one tree per black
// vertex. Tree nodes are the angular regions of the vertex's 2-bond loops;
// a 2-bond becomes an edge colored by the inner color joining its two edges,
// a bridge becomes a leaf edge of the bridge color.
//
// Links tie the edges of one square-vertex together. Position 0 is the edge
// met first by the walk from the root; the other positions are "entry" edges,
// each the last child of the root node of the tree it opens. A bridge link has
// positions 0..3 (position k is the edge of slot (slot of position 0) xor k);
// a 2-bond link has positions 0 and 1, and the entry edge's child holds the
// region after it.
//
// Canonical numbering (what encode produces and the parser normalizes to):
// nodes, edges, trees and links are numbered in order of creation by a
// depth-first walk that descends into a 2-bond's inner region before opening
// the partner tree, and opens bridge partners in slot-xor order.
enum class CodeColor { Bridge, Bond1, Bond2 };

struct CodeEdge {
  CodeColor color = CodeColor::Bridge;
  int child = -1;  // node index; bridges have none
  int link = -1;
  int link_pos = 0;
  friend bool operator==(const CodeEdge&, const CodeEdge&) = default;
};

struct CodeNode {
  std::vector<int> edges;  // children in clockwise order
  friend bool operator==(const CodeNode&, const CodeNode&) = default;
};

struct DominantTree {
  std::vector<CodeNode> nodes;
  std::vector<CodeEdge> edges;
  std::vector<int> tree_roots;  // tree_roots[0] is the root vertex's tree

  int trees() const { return static_cast<int>(tree_roots.size()); }
  int squares() const;
  friend bool operator==(const DominantTree&, const DominantTree&) = default;
};

/// Throws PreconditionError when the map is not dominant, InvalidInput when
/// the root is not an edge of the map.
DominantTree encode(const RootedMap& rooted);

/// Returns the canonical rooted representative (see canonical_rooted).
/// Throws InvalidInput when the forest breaks a link or shape rule.
RootedMap decode(const DominantTree& code);

/// Validates and renumbers into canonical order.
DominantTree canonicalize(const DominantTree& code);

/// Text form, trees separated by ';':
///   code := tree (';' tree)*      tree := node
///   node := '(' edge* ')'
///   edge := 'B' link | ('X' | 'Y') link node
///   link := id ':' position
/// X marks 2-bonds joined by inner color 1, Y by inner color 2.
/// Example (one square, two 2-bonds joined by color 1): "(X0:0());(X0:1())".
std::string to_text(const DominantTree& code);

/// Parses, validates and canonicalizes. Whitespace is ignored.
DominantTree parse_tree_code(std::string_view text);

/// Every valid code with b squares, generated from the grammar
/// Map = Seq(Item), Item = Bridge(Map,Map,Map) | Bond_a(Map,Map,Map).
std::vector<DominantTree> all_codes(int b);

}  // namespace octa
