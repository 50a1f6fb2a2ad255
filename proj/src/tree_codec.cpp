#include "octa/tree_codec.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "octa/errors.hpp"

namespace octa {

namespace {

// The recursive decomposition behind the forest: a region is a sequence of
// items; a bridge carries the three regions hanging off the other slots, a
// 2-bond carries (inner region, region after f, region after g).
struct CodeItem;
struct CodeTerm {
  std::vector<CodeItem> items;
};
struct CodeItem {
  CodeColor color = CodeColor::Bridge;
  std::vector<CodeTerm> sub;  // always three
};

int bond_color_of(CodeColor c) { return c == CodeColor::Bond1 ? 1 : 2; }
CodeColor code_color(int inner_color) {
  return inner_color == 1 ? CodeColor::Bond1 : CodeColor::Bond2;
}

// ---- map -> term ---------------------------------------------------------

class Encoder {
 public:
  Encoder(const HybridMap& m, std::vector<BondClass> bonds)
      : m_(m), bonds_(std::move(bonds)), visited_(m.black_count(), 0) {}

  CodeTerm run(int root) {
    const int v = m_.black_of(root);
    visit(v);
    CodeTerm t = region(around(root, -1));
    for (char seen : visited_)
      if (!seen) throw PreconditionError("encode: walk did not reach every black vertex");
    return t;
  }

 private:
  void visit(int v) {
    if (visited_[v]) throw PreconditionError("encode: black vertex reached twice");
    visited_[v] = 1;
  }

  // Edges clockwise from `from`, stopping before `stop` (or a full turn).
  std::vector<int> around(int from, int stop) const {
    std::vector<int> out;
    int e = from;
    do {
      if (e == stop) break;
      out.push_back(e);
      e = m_.next(e);
    } while (e != from);
    return out;
  }

  CodeTerm region(const std::vector<int>& edges) {
    CodeTerm t;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const int d = edges[i];
      const BondClass& bc = bonds_[d / kSlots];
      CodeItem item;
      if (bc.kind == BondKind::FourBridges) {
        item.color = CodeColor::Bridge;
        for (int k = 1; k < kSlots; ++k) {
          const int e = d ^ k;
          visit(m_.black_of(e));
          item.sub.push_back(m_.next(e) == e ? CodeTerm{} : region(around(m_.next(e), e)));
        }
      } else {
        const int p = bond_partner(d, bc.inner_color);
        const auto it = std::find(edges.begin() + static_cast<long>(i) + 1, edges.end(), p);
        if (it == edges.end()) throw PreconditionError("encode: crossing 2-bond loops");
        const std::size_t j = static_cast<std::size_t>(it - edges.begin());
        item.color = code_color(bc.inner_color);
        item.sub.push_back(region({edges.begin() + static_cast<long>(i) + 1, it}));
        const int f = d ^ (bc.inner_color == 1 ? 3 : 1);
        const int g = d ^ 2;
        const int w = m_.black_of(f);
        if (m_.black_of(g) != w) throw PreconditionError("encode: 2-bond spans two black vertices");
        visit(w);
        const std::vector<int> rest = around(m_.next(f), f);
        const auto gi = std::find(rest.begin(), rest.end(), g);
        item.sub.push_back(region({rest.begin(), gi}));
        item.sub.push_back(region({gi + 1, rest.end()}));
        i = j;
      }
      t.items.push_back(std::move(item));
    }
    return t;
  }

  const HybridMap& m_;
  std::vector<BondClass> bonds_;
  std::vector<char> visited_;
};

// ---- term -> forest ------------------------------------------------------

class Flattener {
 public:
  DominantTree run(const CodeTerm& root) {
    out_.tree_roots.push_back(-1);
    out_.tree_roots[0] = node(root);
    return std::move(out_);
  }

 private:
  int new_node() {
    out_.nodes.emplace_back();
    return static_cast<int>(out_.nodes.size()) - 1;
  }
  int new_edge(int owner, CodeColor color, int link, int pos) {
    out_.edges.push_back(CodeEdge{color, -1, link, pos});
    const int e = static_cast<int>(out_.edges.size()) - 1;
    out_.nodes[owner].edges.push_back(e);
    return e;
  }

  int node(const CodeTerm& t) {
    const int id = new_node();
    fill(id, t);
    return id;
  }

  void fill(int id, const CodeTerm& t) {
    for (const CodeItem& item : t.items) {
      const int link = next_link_++;
      const int e = new_edge(id, item.color, link, 0);
      if (item.color == CodeColor::Bridge) {
        for (int k = 0; k < 3; ++k) {
          const int root = open_tree();
          fill(root, item.sub[k]);
          new_edge(root, CodeColor::Bridge, link, k + 1);
        }
      } else {
        const int child = node(item.sub[0]);
        out_.edges[e].child = child;
        const int root = open_tree();
        fill(root, item.sub[1]);
        const int entry = new_edge(root, item.color, link, 1);
        const int after = node(item.sub[2]);
        out_.edges[entry].child = after;
      }
    }
  }

  int open_tree() {
    const int root = new_node();
    out_.tree_roots.push_back(root);
    return root;
  }

  DominantTree out_;
  int next_link_ = 0;
};

// ---- forest -> term (validating) -----------------------------------------

class Reader {
 public:
  explicit Reader(const DominantTree& t) : t_(t) {}

  CodeTerm run() {
    const int nodes = static_cast<int>(t_.nodes.size());
    const int edges = static_cast<int>(t_.edges.size());
    if (t_.tree_roots.empty()) throw InvalidInput("tree code has no trees");
    node_seen_.assign(nodes, 0);
    owner_.assign(edges, -1);
    is_tree_root_.assign(nodes, -1);
    for (int i = 0; i < t_.trees(); ++i) {
      const int r = t_.tree_roots[i];
      if (r < 0 || r >= nodes || is_tree_root_[r] >= 0) throw InvalidInput("bad tree root");
      is_tree_root_[r] = i;
    }
    for (int n = 0; n < nodes; ++n) {
      for (int e : t_.nodes[n].edges) {
        if (e < 0 || e >= edges || owner_[e] >= 0) throw InvalidInput("edge listed twice or out of range");
        owner_[e] = n;
      }
    }
    for (int e = 0; e < edges; ++e) {
      if (owner_[e] < 0) throw InvalidInput("edge without a parent node");
      const CodeEdge& edge = t_.edges[e];
      const bool bridge = edge.color == CodeColor::Bridge;
      if (bridge != (edge.child < 0)) throw InvalidInput("bridge edges are leaves; 2-bond edges have a child");
      if (edge.child >= nodes || (edge.child >= 0 && is_tree_root_[edge.child] >= 0))
        throw InvalidInput("edge child is not an inner node");
      const int arity = bridge ? 4 : 2;
      if (edge.link < 0 || edge.link_pos < 0 || edge.link_pos >= arity) throw InvalidInput("bad link position");
      auto& slots = links_[edge.link];
      slots.resize(arity, -1);
      if (static_cast<int>(slots.size()) != arity || slots[edge.link_pos] >= 0)
        throw InvalidInput("link " + std::to_string(edge.link) + " is malformed");
      slots[edge.link_pos] = e;
    }
    for (const auto& [id, slots] : links_) {
      for (int e : slots)
        if (e < 0) throw InvalidInput("link " + std::to_string(id) + " is incomplete");
      const CodeColor c = t_.edges[slots[0]].color;
      for (int e : slots)
        if (t_.edges[e].color != c) throw InvalidInput("link " + std::to_string(id) + " mixes colors");
      // Entries close the root node of a non-root tree.
      for (std::size_t k = 1; k < slots.size(); ++k) {
        const int n = owner_[slots[k]];
        if (is_tree_root_[n] <= 0 || t_.nodes[n].edges.back() != slots[k])
          throw InvalidInput("entry edge of link " + std::to_string(id) + " is misplaced");
      }
    }
    CodeTerm root = read(t_.tree_roots[0], false);
    for (int n = 0; n < nodes; ++n)
      if (!node_seen_[n]) throw InvalidInput("tree code has unreachable nodes");
    return root;
  }

 private:
  CodeTerm read(int n, bool skip_entry) {
    if (node_seen_[n]) throw InvalidInput("tree code links form a cycle");
    node_seen_[n] = 1;
    const auto& list = t_.nodes[n].edges;
    std::size_t count = list.size();
    if (skip_entry) {
      if (count == 0) throw InvalidInput("non-root tree without an entry edge");
      --count;
    }
    CodeTerm t;
    for (std::size_t i = 0; i < count; ++i) {
      const CodeEdge& e = t_.edges[list[i]];
      if (e.link_pos != 0) throw InvalidInput("entry edge outside a tree-root position");
      const auto& slots = links_.at(e.link);
      CodeItem item;
      item.color = e.color;
      if (e.color == CodeColor::Bridge) {
        for (int k = 1; k < 4; ++k) item.sub.push_back(read(owner_[slots[k]], true));
      } else {
        item.sub.push_back(read(e.child, false));
        const int entry = slots[1];
        item.sub.push_back(read(owner_[entry], true));
        item.sub.push_back(read(t_.edges[entry].child, false));
      }
      t.items.push_back(std::move(item));
    }
    return t;
  }

  const DominantTree& t_;
  std::vector<char> node_seen_;
  std::vector<int> owner_;
  std::vector<int> is_tree_root_;
  std::map<int, std::vector<int>> links_;
};

// ---- term -> map ---------------------------------------------------------

class Builder {
 public:
  RootedMap run(const CodeTerm& root) {
    std::vector<int> rotation;
    fill(root, rotation);
    const int root_edge = rotation.empty() ? -1 : rotation.front();
    blacks_.push_back(std::move(rotation));
    return canonical_rooted(RootedMap{HybridMap(squares_, std::move(blacks_)), root_edge});
  }

 private:
  void fill(const CodeTerm& t, std::vector<int>& rotation) {
    for (const CodeItem& item : t.items) {
      const int d = kSlots * squares_++;
      rotation.push_back(d);
      if (item.color == CodeColor::Bridge) {
        for (int k = 1; k < kSlots; ++k) {
          std::vector<int> other;
          fill(item.sub[k - 1], other);
          other.push_back(d ^ k);
          blacks_.push_back(std::move(other));
        }
      } else {
        const int color = bond_color_of(item.color);
        fill(item.sub[0], rotation);
        rotation.push_back(bond_partner(d, color));
        const int f = d ^ (color == 1 ? 3 : 1);
        const int g = d ^ 2;
        std::vector<int> other;
        fill(item.sub[1], other);
        other.push_back(g);
        fill(item.sub[2], other);
        other.push_back(f);
        blacks_.push_back(std::move(other));
      }
    }
  }

  int squares_ = 0;
  std::vector<std::vector<int>> blacks_;
};

// ---- grammar enumeration -------------------------------------------------

class Generator {
 public:
  const std::vector<CodeTerm>& terms(int size) {
    if (auto it = terms_.find(size); it != terms_.end()) return it->second;
    std::vector<CodeTerm> out;
    if (size == 0) {
      out.emplace_back();
    } else {
      // First item of size k, then any sequence of size - k.
      for (int k = 1; k <= size; ++k) {
        const std::vector<CodeItem> firsts = items(k);
        const std::vector<CodeTerm>& rests = terms(size - k);
        for (const CodeItem& first : firsts) {
          for (const CodeTerm& rest : rests) {
            CodeTerm t;
            t.items.push_back(first);
            t.items.insert(t.items.end(), rest.items.begin(), rest.items.end());
            out.push_back(std::move(t));
          }
        }
      }
    }
    return terms_.emplace(size, std::move(out)).first->second;
  }

 private:
  std::vector<CodeItem> items(int size) {
    std::vector<CodeItem> out;
    for (int s0 = 0; s0 <= size - 1; ++s0) {
      for (int s1 = 0; s0 + s1 <= size - 1; ++s1) {
        const int s2 = size - 1 - s0 - s1;
        // Copies: the memo map may rehash while recursing.
        const std::vector<CodeTerm> t0 = terms(s0), t1 = terms(s1), t2 = terms(s2);
        for (CodeColor color : {CodeColor::Bridge, CodeColor::Bond1, CodeColor::Bond2})
          for (const auto& a : t0)
            for (const auto& b : t1)
              for (const auto& c : t2) out.push_back(CodeItem{color, {a, b, c}});
      }
    }
    return out;
  }

  std::map<int, std::vector<CodeTerm>> terms_;
};

char color_letter(CodeColor c) {
  switch (c) {
    case CodeColor::Bridge: return 'B';
    case CodeColor::Bond1: return 'X';
    case CodeColor::Bond2: return 'Y';
  }
  return '?';
}

void write_node(const DominantTree& t, int n, std::string& out) {
  out += '(';
  for (int e : t.nodes[n].edges) {
    const CodeEdge& edge = t.edges[e];
    out += color_letter(edge.color);
    out += std::to_string(edge.link);
    out += ':';
    out += std::to_string(edge.link_pos);
    if (edge.child >= 0) write_node(t, edge.child, out);
  }
  out += ')';
}

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) src_ += c;
  }

  DominantTree run() {
    DominantTree t;
    t.tree_roots.push_back(node(t));
    while (pos_ < src_.size()) {
      expect(';');
      t.tree_roots.push_back(node(t));
    }
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("tree code: " + what + " at offset " + std::to_string(pos_));
  }
  void expect(char c) {
    if (pos_ >= src_.size() || src_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int number() {
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      value = value * 10 + (src_[pos_++] - '0');
      if (value > 1'000'000'000) fail("number too large");
    }
    if (pos_ == start) fail("expected a number");
    return static_cast<int>(value);
  }
  int node(DominantTree& t) {
    expect('(');
    const int id = static_cast<int>(t.nodes.size());
    t.nodes.emplace_back();
    while (pos_ < src_.size() && src_[pos_] != ')') {
      CodeEdge edge;
      switch (src_[pos_]) {
        case 'B': edge.color = CodeColor::Bridge; break;
        case 'X': edge.color = CodeColor::Bond1; break;
        case 'Y': edge.color = CodeColor::Bond2; break;
        default: fail("unknown edge color");
      }
      ++pos_;
      edge.link = number();
      expect(':');
      edge.link_pos = number();
      const int e = static_cast<int>(t.edges.size());
      t.edges.push_back(edge);
      t.nodes[id].edges.push_back(e);
      if (edge.color != CodeColor::Bridge) {
        const int child = node(t);
        t.edges[e].child = child;
      }
    }
    expect(')');
    return id;
  }

  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

int DominantTree::squares() const {
  int links = 0;
  for (const CodeEdge& e : edges)
    if (e.link_pos == 0) ++links;
  return links;
}

DominantTree encode(const RootedMap& rooted) {
  const HybridMap& m = rooted.map;
  if (m.squares() == 0) {
    if (rooted.root != -1) throw InvalidInput("the zero-square map is rooted at -1");
    return Flattener().run(CodeTerm{});
  }
  if (rooted.root < 0 || rooted.root >= m.edges()) throw InvalidInput("root edge out of range");
  DominanceReport report = is_dominant(m);
  if (!report.dominant) throw PreconditionError("encode needs a dominant map: " + report.diagnostic);
  return Flattener().run(Encoder(m, std::move(report.bonds)).run(rooted.root));
}

RootedMap decode(const DominantTree& code) { return Builder().run(Reader(code).run()); }

DominantTree canonicalize(const DominantTree& code) {
  return Flattener().run(Reader(code).run());
}

std::string to_text(const DominantTree& code) {
  std::string out;
  for (int i = 0; i < code.trees(); ++i) {
    if (i) out += ';';
    write_node(code, code.tree_roots[i], out);
  }
  return out;
}

DominantTree parse_tree_code(std::string_view text) {
  return canonicalize(Parser(text).run());
}

std::vector<DominantTree> all_codes(int b) {
  if (b < 0) throw InvalidInput("square count must be nonnegative");
  Generator gen;
  std::vector<DominantTree> out;
  for (const CodeTerm& t : gen.terms(b)) out.push_back(Flattener().run(t));
  return out;
}

}  // namespace octa
