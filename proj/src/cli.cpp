#include "octa/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "octa/colored_graph.hpp"
#include "octa/enumeration.hpp"
#include "octa/errors.hpp"
#include "octa/hybrid_map.hpp"
#include "octa/io.hpp"
#include "octa/random.hpp"
#include "octa/series.hpp"
#include "octa/tree_codec.hpp"
#include "octa/verify.hpp"

namespace octa::cli {

namespace {

std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json rational_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return rational_text(r);
}

std::string cycle_text(const std::array<int, 4>& c) {
  std::string s = "(";
  for (int x : c) s += static_cast<char>('0' + x);
  return s + ")";
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

ColoredGraph load_graph(const std::string& path) {
  const Json doc = parse_json(read_file(path));
  if (is_map_document(doc)) return to_colored_graph(map_from_json(doc).map);
  return graph_from_json(doc);
}

// ---- series --------------------------------------------------------------

int cmd_series(int n, bool csv, bool json, std::ostream& out) {
  if (n < 0) throw InvalidInput("-n must be nonnegative");
  const SeriesTable t = series(csv ? n + 1 : n);
  if (json) {
    Json doc;
    doc["n_max"] = n;
    Json coeffs = Json::array();
    for (int k = 0; k <= n; ++k) coeffs.push_back(t[k].get_str());
    doc["coefficients"] = coeffs;
    emit(out, doc);
  } else if (csv) {
    out << "n,a_n,ratio\n";
    for (int k = 0; k <= n; ++k) {
      out << k << ',' << t[k].get_str() << ',' << std::setprecision(17) << coefficient_ratio(t, k) << '\n';
    }
  } else {
    for (int k = 0; k <= n; ++k) out << t[k].get_str() << '\n';
  }
  return kExitOk;
}

// ---- enumerate -----------------------------------------------------------

Json class_json(const IsoClass& c) {
  Json doc = graph_to_json(c.graph);
  doc["faces"] = c.faces;
  doc["automorphisms"] = c.automorphisms;
  return doc;
}

int cmd_enumerate(int b, bool dominant, bool long_running, const std::string& out_path, bool json,
                  std::ostream& out, std::ostream& err) {
  EnumerationOptions options;
  options.dominant_only = dominant;
  options.long_running = long_running;
  if (long_running) {
    options.progress = [&err](int done, int total) {
      err << "progress " << done << '/' << total << '\n' << std::flush;
    };
  }
  const EnumerationReport r = enumerate(b, options);

  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw InvalidInput("cannot write " + out_path);
    for (const auto& c : r.classes) file << class_json(c).dump() << '\n';
  }
  if (json) {
    Json doc;
    doc["bubbles"] = r.bubbles;
    doc["total_pairings"] = r.total_pairings;
    doc["total_connected_pairings"] = r.total_connected_pairings;
    doc["max_faces"] = r.max_faces;
    doc["dominant_labeled_pairings"] = r.dominant_labeled_pairings;
    doc["dominant_iso_classes"] = r.dominant_iso_classes;
    doc["rooted_count"] = r.rooted_count;
    doc["automorphism_sizes"] = r.automorphism_sizes;
    doc["stream_size"] = r.classes.size();
    if (out_path.empty()) {
      Json classes = Json::array();
      for (const auto& c : r.classes) classes.push_back(class_json(c));
      doc["classes"] = classes;
    }
    emit(out, doc);
    return kExitOk;
  }
  out << "bubbles                    " << r.bubbles << '\n'
      << "total pairings             " << r.total_pairings << '\n'
      << "connected pairings         " << r.total_connected_pairings << '\n'
      << "max faces                  " << r.max_faces << '\n'
      << "dominant labeled pairings  " << r.dominant_labeled_pairings << '\n'
      << "dominant iso classes       " << r.dominant_iso_classes << '\n'
      << "rooted count               " << r.rooted_count << '\n'
      << "automorphism sizes        ";
  for (auto a : r.automorphism_sizes) out << ' ' << a;
  out << '\n';
  if (out_path.empty()) {
    out << "classes (" << r.classes.size() << "): sigma0 | faces | automorphisms\n";
    for (const auto& c : r.classes) {
      for (int x : c.graph.sigma0()) out << x << ' ';
      out << "| " << c.faces << " | " << c.automorphisms << '\n';
    }
  }
  return kExitOk;
}

// ---- analyze -------------------------------------------------------------

int cmd_analyze(const std::string& path, bool json, std::ostream& out) {
  const ColoredGraph g = load_graph(path);
  const FaceCensus fc = faces(g);
  Json doc;
  doc["bubbles"] = g.bubbles();
  doc["connected"] = g.connected();
  doc["faces"] = {{"f1", fc.f1}, {"f2", fc.f2}, {"f3", fc.f3}, {"total", fc.f_total}};
  doc["tetrahedra"] = fc.tetrahedra;
  doc["e0"] = fc.e0;
  doc["e_total"] = fc.e_total;
  if (g.connected()) {
    const DegreeReport d = degrees(g);
    doc["degrees"] = {{"gurau", rational_json(d.gurau)},
                      {"gurau_bubble", rational_json(d.gurau_bubble)},
                      {"modified", rational_json(d.modified)}};
    const DominanceReport dom = is_dominant(from_colored_graph(g));
    doc["dominant"] = dom.dominant;
    doc["dominance_violation"] = to_string(dom.violated);
    doc["dominance_diagnostic"] = dom.dominant ? Json(nullptr) : Json(dom.diagnostic);
    Json jackets = Json::array();
    for (const auto& cycle : kJacketCycles)
      jackets.push_back({{"cycle", cycle_text(cycle)}, {"genus", jacket_genus(g, cycle).genus}});
    doc["jackets"] = jackets;
    doc["sphere_certificate"] = sphere_certificate(g);
  } else {
    for (const char* key : {"degrees", "dominant", "dominance_violation", "dominance_diagnostic", "jackets", "sphere_certificate"})
      doc[key] = nullptr;
  }
  if (json) {
    emit(out, doc);
    return kExitOk;
  }
  out << "bubbles             " << g.bubbles() << '\n'
      << "connected           " << (g.connected() ? "yes" : "no") << '\n'
      << "faces (f1 f2 f3)    " << fc.f1 << ' ' << fc.f2 << ' ' << fc.f3 << "  total " << fc.f_total << '\n'
      << "tetrahedra          " << fc.tetrahedra << '\n'
      << "edges e0 / total    " << fc.e0 << " / " << fc.e_total << '\n';
  if (!g.connected()) {
    out << "degrees, dominance and jackets need a connected graph\n";
    return kExitOk;
  }
  const DegreeReport d = degrees(g);
  out << "degree omega        " << rational_text(d.gurau) << '\n'
      << "degree omega_B      " << rational_text(d.gurau_bubble) << '\n'
      << "modified degree     " << rational_text(d.modified) << '\n'
      << "dominant            " << (doc["dominant"].get<bool>() ? "yes" : "no");
  if (!doc["dominant"].get<bool>()) out << " (" << doc["dominance_diagnostic"].get<std::string>() << ')';
  out << '\n';
  for (const auto& j : doc["jackets"])
    out << "jacket " << j["cycle"].get<std::string>() << "       genus " << j["genus"].get<int>() << '\n';
  out << "sphere certificate  " << (doc["sphere_certificate"].get<bool>() ? "yes" : "inconclusive") << '\n';
  return kExitOk;
}

// ---- bijection / codec ---------------------------------------------------

int cmd_bijection(const std::string& path, bool to_map, bool to_graph, std::ostream& out) {
  if (to_map == to_graph) throw UsageError("bijection needs exactly one of --to-map, --to-graph");
  const Json doc = parse_json(read_file(path));
  if (to_map) {
    if (is_map_document(doc)) throw InvalidInput("input is already a map document");
    emit(out, map_to_json(from_colored_graph(graph_from_json(doc))));
  } else {
    if (!is_map_document(doc)) throw InvalidInput("input is not a map document");
    emit(out, graph_to_json(to_colored_graph(map_from_json(doc).map)));
  }
  return kExitOk;
}

int cmd_encode(const std::string& path, int root, bool json, std::ostream& out) {
  const Json doc = parse_json(read_file(path));
  const HybridMap m = is_map_document(doc) ? map_from_json(doc).map : from_colored_graph(graph_from_json(doc));
  const DominantTree code = encode(RootedMap{m, root});
  if (json) {
    emit(out, Json{{"squares", code.squares()}, {"trees", code.trees()}, {"code", to_text(code)}});
  } else {
    out << to_text(code) << '\n';
  }
  return kExitOk;
}

int cmd_decode(const std::string& path, std::ostream& out) {
  std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const Json doc = parse_json(text);
    if (!doc.contains("code") || !doc["code"].is_string()) throw InvalidInput("missing string field 'code'");
    text = doc["code"].get<std::string>();
  }
  emit(out, map_to_json(decode(parse_tree_code(text))));
  return kExitOk;
}

// ---- verify / sample -----------------------------------------------------

int cmd_verify(const std::string& level, bool json, std::ostream& out) {
  const VerifyLevel lv = level == "full" ? VerifyLevel::Full : VerifyLevel::Quick;
  Json checks = Json::array();
  const VerifyReport report = run_verification(lv, [&](const CheckResult& c) {
    if (json) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    } else {
      out << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(14) << c.name << c.detail << '\n'
          << std::flush;
    }
  });
  if (json) emit(out, Json{{"level", level}, {"passed", report.passed()}, {"checks", checks}});
  return report.passed() ? kExitOk : kExitInvalid;
}

int cmd_sample(int b, std::uint64_t seed, int k, bool json, std::ostream& out) {
  if (b < 1) throw InvalidInput("-b must be positive");
  if (k < 0) throw InvalidInput("-k must be nonnegative");
  std::mt19937_64 rng(seed);
  Json samples = Json::array();
  int connected = 0;
  long face_sum = 0;
  std::map<long, int> histogram;  // modified degree -> count, connected only
  std::ostringstream rows;
  for (int i = 0; i < k; ++i) {
    std::vector<int> sigma(kSlots * b);
    std::iota(sigma.begin(), sigma.end(), 0);
    shuffle_in_place(sigma, rng);
    const ColoredGraph g(b, sigma);
    const FaceCensus fc = faces(g);
    face_sum += fc.f_total;
    Json row{{"index", i}, {"connected", g.connected()}, {"f1", fc.f1}, {"f2", fc.f2}, {"f3", fc.f3},
             {"faces", fc.f_total}};
    rows << i << '\t' << (g.connected() ? "yes" : "no") << '\t' << fc.f1 << ' ' << fc.f2 << ' ' << fc.f3
         << '\t' << fc.f_total << '\t';
    if (g.connected()) {
      ++connected;
      const long mod = degrees(g).modified.numerator();
      ++histogram[mod];
      row["modified"] = mod;
      rows << mod << '\n';
    } else {
      row["modified"] = nullptr;
      rows << "-\n";
    }
    samples.push_back(row);
  }
  const double mean = k ? static_cast<double>(face_sum) / k : 0.0;
  if (json) {
    Json hist = Json::object();
    for (const auto& [deg, count] : histogram) hist[std::to_string(deg)] = count;
    emit(out, Json{{"bubbles", b}, {"seed", seed}, {"samples", k}, {"connected", connected},
                   {"mean_faces", mean}, {"modified_histogram", hist}, {"pairings", samples}});
    return kExitOk;
  }
  out << "index\tconn\tf1 f2 f3\tfaces\tmodified\n" << rows.str();
  out << "samples " << k << ", connected " << connected << ", mean faces " << std::setprecision(6) << mean
      << '\n';
  out << "modified degree histogram (connected):";
  for (const auto& [deg, count] : histogram) out << ' ' << deg << ':' << count;
  out << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Octahedral colored triangulations: faces, dominance, enumeration, tree codes"};
  app.name("octahedra");
  app.require_subcommand(1);

  int n = 0;
  bool csv = false;
  bool json = false;
  auto* series_cmd = app.add_subcommand("series", "Coefficients of A(z) = 1 + 3z A(z)^4");
  series_cmd->add_option("-n", n, "Largest index")->required();
  series_cmd->add_flag("--csv", csv, "Emit n,a_n,a_{n+1}/a_n rows");

  int b = 0;
  bool dominant = false, long_running = false;
  std::string out_path;
  auto* enum_cmd = app.add_subcommand("enumerate", "Exhaustive search over color-0 pairings");
  enum_cmd->add_option("-b", b, "Bubble count")->required();
  enum_cmd->add_flag("--dominant", dominant, "Stream only face-maximizing classes");
  enum_cmd->add_flag("--long-running", long_running, "Allow b = 3");
  enum_cmd->add_option("--out", out_path, "Write the class stream here (JSON lines)");

  std::string file;
  auto* analyze_cmd = app.add_subcommand("analyze", "Faces, degrees, dominance and jackets of a graph");
  analyze_cmd->add_option("file", file, "Graph or map JSON file")->required();

  bool to_map = false, to_graph = false;
  auto* bij_cmd = app.add_subcommand("bijection", "Convert between colored graphs and hybrid maps");
  bij_cmd->add_option("file", file, "Input JSON file")->required();
  bij_cmd->add_flag("--to-map", to_map, "Graph to map");
  bij_cmd->add_flag("--to-graph", to_graph, "Map to graph");

  int root = -1;
  auto* enc_cmd = app.add_subcommand("encode", "Tree code of a rooted dominant map");
  enc_cmd->add_option("file", file, "Map or graph JSON file")->required();
  enc_cmd->add_option("--root", root, "Root corner, named by the edge following it")->required();

  auto* dec_cmd = app.add_subcommand("decode", "Rooted map of a tree code");
  dec_cmd->add_option("file", file, "Tree code text (or JSON with a 'code' field)")->required();

  std::string level = "quick";
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suites");
  verify_cmd->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));

  std::uint64_t seed = 0;
  int k = 0;
  auto* sample_cmd = app.add_subcommand("sample", "Uniformly random pairings with face statistics");
  sample_cmd->add_option("-b", b, "Bubble count")->required();
  sample_cmd->add_option("--seed", seed, "mt19937_64 seed")->required();
  sample_cmd->add_option("-k", k, "Number of pairings")->required();

  for (auto* sub : app.get_subcommands({}))
    sub->add_flag("--json", json, "Machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*series_cmd) return cmd_series(n, csv, json, out);
    if (*enum_cmd) return cmd_enumerate(b, dominant, long_running, out_path, json, out, err);
    if (*analyze_cmd) return cmd_analyze(file, json, out);
    if (*bij_cmd) return cmd_bijection(file, to_map, to_graph, out);
    if (*enc_cmd) return cmd_encode(file, root, json, out);
    if (*dec_cmd) return cmd_decode(file, out);
    if (*verify_cmd) return cmd_verify(level, json, out);
    if (*sample_cmd) return cmd_sample(b, seed, k, json, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return kExitInvalid;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace octa::cli
