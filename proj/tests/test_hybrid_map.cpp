#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "octa/errors.hpp"
#include "octa/hybrid_map.hpp"
#include "octa/random.hpp"
#include "oracles.hpp"

using namespace octa;

namespace {

const HybridMap kTree(1, {{0}, {1}, {2}, {3}});
const HybridMap kMiddle(1, {{0, 1}, {2, 3}});    // two 2-bonds joined by color 1
const HybridMap kSixFaces(1, {{0}, {1, 2, 3}});  // an edge plus a loop in both submaps
const HybridMap kFourBond(1, {{0, 1, 2, 3}});

int total_faces(const HybridMap& m) { return count_faces(m).total; }

}  // namespace

TEST_CASE("constructor validates and normalizes") {
  CHECK_THROWS_AS(HybridMap(1, {{0, 0}, {2, 3}}), InvalidInput);
  CHECK_THROWS_AS(HybridMap(1, {{0, 1}, {2, 4}}), InvalidInput);
  CHECK_THROWS_AS(HybridMap(1, {{0, 1}, {2}}), InvalidInput);
  CHECK_THROWS_AS(HybridMap(1, {{0, 1}, {2, 3}, {}}), InvalidInput);
  const HybridMap m(1, {{3, 2}, {1, 0}});
  CHECK(m == HybridMap(1, {{0, 1}, {2, 3}}));
  CHECK(m.next(2) == 3);
  CHECK(m.prev(0) == 1);
  CHECK(HybridMap::empty().black_count() == 1);
}

TEST_CASE("graph-to-map conversion of the single-bubble maximizers") {
  CHECK(from_colored_graph(ColoredGraph::identity(1)) == kTree);
  CHECK(from_colored_graph(ColoredGraph(1, {1, 0, 3, 2})) == kMiddle);
  const SubmapFaceCount middle = count_faces(kMiddle);
  CHECK(middle == SubmapFaceCount{4, 2, 2, 8});
  CHECK(count_faces(kTree) == SubmapFaceCount{2, 2, 4, 8});
  CHECK(to_colored_graph(kMiddle) == ColoredGraph(1, {1, 0, 3, 2}));
  CHECK_THROWS_AS(from_colored_graph(ColoredGraph::identity(2)), PreconditionError);
  CHECK_THROWS_AS(to_colored_graph(HybridMap::empty()), PreconditionError);
}

TEST_CASE("per-color faces survive the conversion for every b <= 2 graph") {
  for (int b = 1; b <= 2; ++b) {
    oracle::for_each_pairing(b, [&](const std::vector<int>& s) {
      if (!oracle::connected(s)) return;
      const ColoredGraph g(b, s);
      const HybridMap m = from_colored_graph(g);
      const auto census = oracle::face_census(s);
      const SubmapFaceCount fc = count_faces(m);
      REQUIRE(std::array<int, 3>{fc.faces1, fc.faces2, fc.blacks} == census);
      REQUIRE(canonical_form(to_colored_graph(m)) == canonical_form(g));
    });
  }
}

TEST_CASE("face counts") {
  CHECK(total_faces(kSixFaces) == 6);
  CHECK(total_faces(HybridMap::empty()) == 3);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int b = 1 + static_cast<int>(uniform_below(rng, 15));
    HybridMap m = HybridMap::empty();
    for (int k = 0; k < b; ++k) {
      const auto cs = corners(m);
      m = insert_square(m, cs[uniform_below(rng, cs.size())], InsertMode::bridge());
    }
    REQUIRE(total_faces(m) == 5 * b + 3);
  }
}

TEST_CASE("incident face sets") {
  for (int e = 0; e < 4; ++e) CHECK(incident_face_set(kTree, e).size() == 0);
  // Each edge of the middle map sits on a loop of M^(1) and on one of the two
  // parallel edges of M^(2): two distinct faces on either side in both.
  for (int e = 0; e < 4; ++e) CHECK(incident_face_set(kMiddle, e) == IncidentColors{true, true});
  // After unhooking edge 0, edge 1 is a pendant path in M^(2).
  CHECK(incident_face_set(unhook(kMiddle, 0), 1) == IncidentColors{false, false});
  CHECK_THROWS_AS(incident_face_set(kTree, 4), InvalidInput);
}

TEST_CASE("unhooking") {
  CHECK_THROWS_AS(unhook(kTree, 0), PreconditionError);
  const HybridMap u = unhook(kMiddle, 0);
  CHECK(u.black_count() == 3);
  CHECK(u.connected());
  CHECK(total_faces(u) - total_faces(kMiddle) == 3 - 2 * 2);

  std::mt19937_64 rng(17);
  std::array<int, 3> seen{0, 0, 0};  // by |I_2(e)|
  for (int trial = 0; trial < 400; ++trial) {
    const int b = 1 + static_cast<int>(uniform_below(rng, 8));
    HybridMap m = random_insertion_map(b, rng);
    if (trial % 2) m = rewire(m, 2, rng);
    const int before = total_faces(m);
    for (int e = 0; e < m.edges(); ++e) {
      if (is_bridge(m, e)) continue;
      const int k = incident_face_set(m, e).size();
      ++seen[k];
      const HybridMap after = unhook(m, e);
      REQUIRE(after.connected());
      REQUIRE(after.squares() == m.squares());
      REQUIRE(total_faces(after) - before == 3 - 2 * k);
    }
  }
  for (int k = 0; k < 3; ++k) CHECK(seen[k] > 0);
}

TEST_CASE("bond classification") {
  CHECK(classify_bonds(kTree, 0).kind == BondKind::FourBridges);
  CHECK(classify_bonds(kMiddle, 0) == BondClass{BondKind::TwoTwoBonds, 1});
  CHECK(classify_bonds(HybridMap(1, {{0, 3}, {1, 2}}), 0) == BondClass{BondKind::TwoTwoBonds, 2});
  CHECK(classify_bonds(kFourBond, 0).kind == BondKind::FourBond);
  CHECK(classify_bonds(HybridMap(1, {{0, 2}, {1, 3}}), 0).kind == BondKind::OppositeTwoBonds);
  CHECK(classify_bonds(kSixFaces, 0).kind == BondKind::Mixed);
  CHECK(bond_partner(4, 1) == 5);
  CHECK(bond_partner(4, 2) == 7);
}

TEST_CASE("genus of one-vertex maps") {
  CHECK(genus(std::vector<int>{}) == 0);
  CHECK(genus(std::vector<int>{0, 1, 0, 1}) == 1);
  CHECK(genus(std::vector<int>{0, 0, 1, 1}) == 0);
  CHECK_THROWS_AS(genus(std::vector<int>{0, 1, 1}), InvalidInput);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int loops = 1 + static_cast<int>(uniform_below(rng, 7));
    std::vector<int> word;
    for (int i = 0; i < loops; ++i) word.insert(word.end(), {i, i});
    shuffle_in_place(word, rng);
    const int g = genus(word);
    REQUIRE(g == oracle::one_vertex_genus(word));
    std::rotate(word.begin(), word.begin() + 1, word.end());
    REQUIRE(genus(word) == g);
  }
}

TEST_CASE("vertical cut of the bridgeless dominant maps with two squares") {
  // Derived by exhaustive search: the bridgeless dominant maps at b = 2 all
  // have three black vertices, hence three components.
  int bridgeless = 0;
  oracle::for_each_pairing(2, [&](const std::vector<int>& s) {
    if (!oracle::connected(s)) return;
    const HybridMap m = from_colored_graph(ColoredGraph(2, s));
    if (count_faces(m).total != 13) return;
    for (int e = 0; e < m.edges(); ++e)
      if (is_bridge(m, e)) return;
    ++bridgeless;
    const auto parts = vertical_cut(m);
    REQUIRE(static_cast<int>(parts.size()) == m.black_count());
    REQUIRE(m.black_count() == 3);
    for (const auto& part : parts) {
      REQUIRE(part.word.size() == m.blacks()[part.black].size());
      REQUIRE(genus(part) == 0);
    }
  });
  CHECK(bridgeless > 0);
  CHECK_THROWS_AS(vertical_cut(kTree), PreconditionError);
  CHECK_THROWS_AS(vertical_cut(kFourBond), PreconditionError);
}

TEST_CASE("dominance predicate") {
  CHECK(is_dominant(kTree).dominant);
  CHECK(is_dominant(kMiddle).dominant);
  const DominanceReport four = is_dominant(kFourBond);
  CHECK_FALSE(four.dominant);
  CHECK(four.violated == Violation::BondShape);
  CHECK(four.where == 0);

  std::map<Violation, int> violations;
  for (int b = 1; b <= 2; ++b) {
    oracle::for_each_pairing(b, [&](const std::vector<int>& s) {
      if (!oracle::connected(s)) return;
      const HybridMap m = from_colored_graph(ColoredGraph(b, s));
      const DominanceReport r = is_dominant(m);
      REQUIRE(r.dominant == (count_faces(m).total == 5 * b + 3));
      ++violations[r.violated];
    });
  }
  // Every condition is exercised at b = 2.
  CHECK(violations[Violation::BondShape] > 0);
  CHECK(violations[Violation::BondSpread] > 0);
  CHECK(violations[Violation::NonPlanar] > 0);
}

TEST_CASE("square insertion") {
  const HybridMap empty = HybridMap::empty();
  CHECK(insert_square(empty, -1, InsertMode::bridge()) == kTree);
  CHECK(insert_square(empty, -1, InsertMode::two_bond(1)) == kMiddle);
  CHECK(insert_square(empty, -1, InsertMode::two_bond(2)) == HybridMap(1, {{0, 3}, {1, 2}}));
  CHECK_THROWS_AS(insert_square(empty, 0, InsertMode::bridge()), InvalidInput);
  CHECK_THROWS_AS(insert_square(kTree, 4, InsertMode::bridge()), InvalidInput);
  CHECK_THROWS_AS(insert_square(kTree, 0, InsertMode::two_bond(3)), InvalidInput);

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = static_cast<int>(uniform_below(rng, 20));
    const HybridMap m = random_insertion_map(k, rng);
    REQUIRE(m.squares() == k);
    REQUIRE(total_faces(m) == 5 * k + 3);
    if (k > 0) REQUIRE(is_dominant(m).dominant);
  }
}

TEST_CASE("rooted canonical form ignores labels") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int b = 1 + static_cast<int>(uniform_below(rng, 10));
    const HybridMap m = random_insertion_map(b, rng);
    const int root = static_cast<int>(uniform_below(rng, m.edges()));
    const RootedMap c = canonical_rooted({m, root});
    CHECK(c.root == 0);
    const Relabeling gamma = Relabeling::random(b, rng);
    CHECK(canonical_rooted({relabel(m, gamma), gamma(root)}) == c);
  }
}
