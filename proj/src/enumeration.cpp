#include "octa/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "octa/errors.hpp"
#include "octa/hybrid_map.hpp"

namespace octa {

namespace {

struct PrefixResult {
  std::uint64_t total = 0;
  std::uint64_t connected = 0;
  int max_faces = -1;
  std::vector<std::vector<int>> at_max;  // connected pairings attaining max_faces
  std::vector<IsoClass> classes;         // canonical pairings in the stream
};

int face_total(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  int total = 0;
  for (int mask : {1, 3, 0}) {
    std::uint64_t seen = 0;
    for (int x = 0; x < n; ++x) {
      if (seen >> x & 1u) continue;
      ++total;
      for (int y = x; !(seen >> y & 1u); y = sigma[y ^ mask]) seen |= std::uint64_t{1} << y;
    }
  }
  return total;
}

PrefixResult run_prefix(int b, int first, const EnumerationOptions& options) {
  const int n = kSlots * b;
  PrefixResult r;
  std::vector<int> sigma(n);
  sigma[0] = first;
  {
    int k = 1;
    for (int v = 0; v < n; ++v)
      if (v != first) sigma[k++] = v;
  }
  const bool want_all_classes = !options.dominant_only;
  do {
    ++r.total;
    const bool connected = is_connected(sigma);
    if (!connected && options.connected_only) continue;
    const int f = face_total(sigma);
    if (connected) {
      ++r.connected;
      if (f > r.max_faces) {
        r.max_faces = f;
        r.at_max.clear();
      }
      if (f == r.max_faces) r.at_max.push_back(sigma);
    }
    if (want_all_classes && is_canonical(sigma)) {
      ColoredGraph g(b, sigma);
      std::uint64_t aut = connected ? automorphism_count(g) : 0;
      r.classes.push_back(IsoClass{std::move(g), f, aut});
    }
  } while (std::next_permutation(sigma.begin() + 1, sigma.end()));
  return r;
}

}  // namespace

EnumerationReport enumerate(int b, const EnumerationOptions& options) {
  if (b < 1) throw InvalidInput("enumeration needs at least one bubble");
  if (b > kLongRunningBubbleLimit)
    throw BudgetExceeded("b = " + std::to_string(b) + " is beyond the exhaustive budget (b <= " +
                         std::to_string(kLongRunningBubbleLimit) + ")");
  if (b > kQuickBubbleLimit && !options.long_running)
    throw BudgetExceeded("b = " + std::to_string(b) + " requires the long-running flag");

  const int n = kSlots * b;
  std::vector<PrefixResult> results(n);
  std::atomic<int> next{0};
  std::atomic<int> done{0};
  std::mutex progress_mutex;
  unsigned workers = options.workers ? options.workers : std::thread::hardware_concurrency();
  workers = std::clamp(workers, 1u, static_cast<unsigned>(n));
  auto work = [&] {
    for (int p; (p = next.fetch_add(1)) < n;) {
      results[p] = run_prefix(b, p, options);
      const int finished = ++done;
      if (options.progress) {
        std::lock_guard<std::mutex> lock(progress_mutex);
        options.progress(finished, n);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  EnumerationReport report;
  report.bubbles = b;
  report.max_faces = -1;
  for (const auto& r : results) {
    report.total_pairings += r.total;
    report.total_connected_pairings += r.connected;
    report.max_faces = std::max(report.max_faces, r.max_faces);
  }
  std::set<std::vector<int>> dominant;
  for (const auto& r : results) {
    if (r.max_faces != report.max_faces) continue;
    report.dominant_labeled_pairings += r.at_max.size();
    for (const auto& sigma : r.at_max) {
      const ColoredGraph canon = canonical_form(ColoredGraph(b, sigma));
      dominant.insert({canon.sigma0().begin(), canon.sigma0().end()});
    }
  }
  report.dominant_iso_classes = dominant.size();

  std::vector<IsoClass> dominant_classes;
  std::uint64_t rooted = 0;
  for (const auto& sigma : dominant) {
    ColoredGraph g(b, sigma);
    const std::uint64_t aut = automorphism_count(g);
    if (static_cast<std::uint64_t>(n) % aut != 0)
      throw std::logic_error("automorphism group does not act freely on the labels");
    rooted += static_cast<std::uint64_t>(n) / aut;
    report.automorphism_sizes.push_back(aut);
    dominant_classes.push_back(IsoClass{std::move(g), report.max_faces, aut});
  }
  report.rooted_count = rooted;
  // Orbit-stabilizer: the labeled count must give the same rooted count.
  if (report.dominant_labeled_pairings * static_cast<std::uint64_t>(n) !=
      rooted * relabeling_group_order(b))
    throw std::logic_error("rooted count disagrees with the labeled dominant count");

  if (options.dominant_only) {
    report.classes = std::move(dominant_classes);
  } else {
    for (auto& r : results)
      for (auto& c : r.classes) report.classes.push_back(std::move(c));
  }
  return report;
}

std::uint64_t rooted_count(int b, bool long_running) {
  EnumerationOptions options;
  options.dominant_only = true;
  options.long_running = long_running;
  return enumerate(b, options).rooted_count;
}

std::vector<ColoredGraph> insertion_closure(int b) {
  if (b < 1) throw InvalidInput("insertion closure needs b >= 1");
  std::vector<HybridMap> level{HybridMap::empty()};
  std::map<std::vector<int>, HybridMap> next_level;
  for (int step = 1; step <= b; ++step) {
    next_level.clear();
    for (const HybridMap& m : level) {
      for (int corner : corners(m)) {
        for (InsertMode mode : {InsertMode::bridge(), InsertMode::two_bond(1), InsertMode::two_bond(2)}) {
          HybridMap grown = insert_square(m, corner, mode);
          const ColoredGraph canon = canonical_form(to_colored_graph(grown));
          std::vector<int> key(canon.sigma0().begin(), canon.sigma0().end());
          if (!next_level.count(key)) next_level.emplace(std::move(key), from_colored_graph(canon));
        }
      }
    }
    level.clear();
    for (auto& [key, m] : next_level) level.push_back(m);
  }
  std::vector<ColoredGraph> out;
  for (const auto& [key, m] : next_level) out.emplace_back(b, key);
  return out;
}

}  // namespace octa
