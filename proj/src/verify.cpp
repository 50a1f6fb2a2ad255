#include "octa/verify.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "octa/colored_graph.hpp"
#include "octa/enumeration.hpp"
#include "octa/hybrid_map.hpp"
#include "octa/random.hpp"
#include "octa/series.hpp"
#include "octa/tree_codec.hpp"

namespace octa {

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Sizes {
  int exhaustive_b;
  int samples;
  int sample_max_b;
  int code_max_b;
  int series_n;
};

template <class Fn>
void for_each_pairing(int b, Fn&& fn) {
  std::vector<int> sigma(kSlots * b);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    fn(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

Outcome fail(std::string why) { return {false, std::move(why)}; }

Outcome check_series(const Sizes& s) {
  const SeriesTable small = series(3);
  const std::vector<BigInt> expected{1, 3, 36, 594};
  if (small.coefficients != expected) return fail("a_0..a_3 differ from 1 3 36 594");
  series(s.series_n);  // throws if the two routes disagree
  std::ostringstream out;
  out << "1 3 36 594; quartic and fixed-point routes agree to n = " << s.series_n;
  return {true, out.str()};
}

Outcome check_degrees(const Sizes& s) {
  std::uint64_t graphs = 0;
  for (int b = 1; b <= s.exhaustive_b; ++b) {
    int max_faces = 0;
    for_each_pairing(b, [&](const std::vector<int>& sigma) {
      if (!is_connected(sigma)) return;
      const ColoredGraph g(b, sigma);
      max_faces = std::max(max_faces, faces(g).f_total);
    });
    bool ok = max_faces == 5 * b + 3;
    for_each_pairing(b, [&](const std::vector<int>& sigma) {
      if (!ok || !is_connected(sigma)) return;
      const ColoredGraph g(b, sigma);
      const DegreeReport d = degrees(g);
      const int f = faces(g).f_total;
      ok = d.modified.denominator() == 1 && d.modified >= Rational(0) && (d.modified == Rational(0)) == (f == max_faces) &&
           d.gurau == d.gurau_bubble;
      ++graphs;
    });
    if (!ok) return fail("degree law broken at b = " + std::to_string(b));
  }
  return {true, std::to_string(graphs) + " connected graphs, modified degree integral and >= 0"};
}

Outcome check_bijection(const Sizes& s) {
  std::uint64_t graphs = 0;
  for (int b = 1; b <= s.exhaustive_b; ++b) {
    bool ok = true;
    for_each_pairing(b, [&](const std::vector<int>& sigma) {
      if (!ok || !is_connected(sigma)) return;
      const ColoredGraph g(b, sigma);
      const FaceCensus fc = faces(g);
      const HybridMap m = from_colored_graph(g);
      const SubmapFaceCount mc = count_faces(m);
      ok = mc.faces1 == fc.f1 && mc.faces2 == fc.f2 && mc.blacks == fc.f3 &&
           canonical_form(to_colored_graph(m)) == canonical_form(g);
      ++graphs;
    });
    if (!ok) return fail("bijection mismatch at b = " + std::to_string(b));
  }
  return {true, std::to_string(graphs) + " graphs, per-color faces preserved"};
}

Outcome check_dominance(const Sizes& s) {
  for (int b = 1; b <= s.exhaustive_b; ++b) {
    std::set<ColoredGraph> by_faces, by_predicate;
    bool ok = true;
    for_each_pairing(b, [&](const std::vector<int>& sigma) {
      if (!ok || !is_connected(sigma)) return;
      const ColoredGraph g(b, sigma);
      const bool max = faces(g).f_total == 5 * b + 3;
      const bool dom = is_dominant(from_colored_graph(g)).dominant;
      if (max != dom) ok = false;
      if (max) by_faces.insert(canonical_form(g));
      if (dom) by_predicate.insert(canonical_form(g));
      if (dom && !sphere_certificate(g)) ok = false;
    });
    if (!ok) return fail("predicate, face count or sphere certificate disagree at b = " + std::to_string(b));
    const auto closure = insertion_closure(b);
    const std::set<ColoredGraph> reached(closure.begin(), closure.end());
    if (by_faces != by_predicate || by_faces != reached)
      return fail("dominant set differs from the insertion closure at b = " + std::to_string(b));
  }
  return {true, "is_dominant = max faces = insertion closure, all dominants have a planar jacket"};
}

Outcome check_rooted(const Sizes& s) {
  const SeriesTable a = series(s.exhaustive_b);
  std::ostringstream out;
  for (int b = 1; b <= s.exhaustive_b; ++b) {
    const auto count = rooted_count(b);
    if (BigInt(static_cast<unsigned long>(count)) != a[b])
      return fail("rooted count " + std::to_string(count) + " != a_" + std::to_string(b));
    out << "b=" << b << ": " << count << ' ';
  }
  return {true, out.str()};
}

HybridMap sample_map(std::mt19937_64& rng, int max_b, bool rewired) {
  const int b = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_b)));
  HybridMap m = random_insertion_map(b, rng);
  if (rewired) m = rewire(m, 1 + static_cast<int>(uniform_below(rng, 3)), rng);
  return m;
}

Outcome check_unhook(const Sizes& s) {
  std::mt19937_64 rng(20240601);
  std::uint64_t edges = 0;
  for (int i = 0; i < s.samples; ++i) {
    const HybridMap m = sample_map(rng, s.sample_max_b, i % 2 == 1);
    const int before = count_faces(m).total;
    for (int e = 0; e < m.edges(); ++e) {
      if (is_bridge(m, e)) continue;
      const int delta = count_faces(unhook(m, e)).total - before;
      if (delta != 3 - 2 * incident_face_set(m, e).size())
        return fail("unhook law broken on sample " + std::to_string(i) + ", edge " + std::to_string(e));
      ++edges;
    }
  }
  return {true, std::to_string(s.samples) + " maps, " + std::to_string(edges) + " non-bridge edges"};
}

Outcome check_codec(const Sizes& s) {
  const SeriesTable a = series(s.code_max_b);
  for (int b = 0; b <= s.code_max_b; ++b) {
    const auto codes = all_codes(b);
    if (BigInt(static_cast<unsigned long>(codes.size())) != a[b])
      return fail("code count at b = " + std::to_string(b));
    std::set<std::vector<std::vector<int>>> maps;
    for (const auto& code : codes) {
      const RootedMap r = decode(code);
      if (b > 0 && !is_dominant(r.map).dominant) return fail("decoded map is not dominant");
      if (encode(r) != code) return fail("encode(decode(T)) != T at b = " + std::to_string(b));
      maps.insert(r.map.blacks());
    }
    if (maps.size() != codes.size()) return fail("decode is not injective at b = " + std::to_string(b));
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < s.samples; ++i) {
    const HybridMap m = sample_map(rng, s.sample_max_b, false);
    const int root = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(m.edges())));
    const RootedMap r = canonical_rooted(RootedMap{m, root});
    if (decode(encode(r)) != r) return fail("decode(encode(M)) != M on sample " + std::to_string(i));
  }
  return {true, "code counts match a_b for b <= " + std::to_string(s.code_max_b) + ", " +
                    std::to_string(s.samples) + " random round trips"};
}

Outcome check_singularity() {
  const SingularityResult r = singularity();
  using boost::multiprecision::abs;
  const HighPrecision tol("1e-12");
  if (abs(r.a_c - HighPrecision(4) / 3) > tol || abs(r.z_c - HighPrecision(9) / 256) > tol)
    return fail("critical point off (4/3, 9/256)");
  if (phi_exact(ExactRational(4, 3), ExactRational(9, 256)) != 0 ||
      phi_a_exact(ExactRational(4, 3), ExactRational(9, 256)) != 0)
    return fail("exact substitution does not vanish");
  return {true, "A_c = 4/3, z_c = 9/256"};
}

Outcome check_asymptotics(int n) {
  const SeriesTable t = series(n);
  const double ratio = coefficient_ratio(t, 500);
  const double rel = std::abs(ratio / (256.0 / 9.0) - 1.0);
  const double slope = exponent_check(t);
  std::ostringstream out;
  out << "ratio(500) rel. error " << rel << ", exponent " << slope;
  return {rel < 0.01 && std::abs(slope + 1.5) <= 0.05, out.str()};
}

}  // namespace

bool VerifyReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

VerifyReport run_verification(VerifyLevel level, const std::function<void(const CheckResult&)>& on_check) {
  const bool full = level == VerifyLevel::Full;
  const Sizes s = full ? Sizes{2, 10000, 20, 3, 2000} : Sizes{1, 300, 8, 2, 200};
  VerifyReport report;
  auto run = [&](const std::string& name, const std::function<Outcome()>& fn) {
    CheckResult c;
    c.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = fn();
      c.passed = o.passed;
      c.detail = o.detail;
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_check) on_check(c);
    report.checks.push_back(std::move(c));
  };
  run("series", [&] { return check_series(s); });
  run("degrees", [&] { return check_degrees(s); });
  run("bijection", [&] { return check_bijection(s); });
  run("dominance", [&] { return check_dominance(s); });
  run("rooted-count", [&] { return check_rooted(s); });
  run("unhook", [&] { return check_unhook(s); });
  run("tree-codec", [&] { return check_codec(s); });
  if (full) {
    run("singularity", [] { return check_singularity(); });
    run("asymptotics", [&] { return check_asymptotics(s.series_n); });
  }
  return report;
}

}  // namespace octa
