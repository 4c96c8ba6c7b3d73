#include "bforge/stallings.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace bforge {

std::size_t CoreGraph::edge_count() const {
  std::size_t e = 0;
  for (const auto& row : out_)
    for (int v : row)
      if (v >= 0) ++e;
  return e;
}

long CoreGraph::rank() const {
  return static_cast<long>(edge_count()) - static_cast<long>(vertex_count()) + 1;
}

int CoreGraph::out_edge(std::size_t v, int label) const {
  return out_[v][static_cast<std::size_t>(label - 1)];
}

int CoreGraph::in_edge(std::size_t v, int label) const {
  return in_[v][static_cast<std::size_t>(label - 1)];
}

bool CoreGraph::membership(const FreeWord& w) const {
  long cur = 0;
  for (int l : w.letters()) {
    int nxt = l > 0 ? out_edge(static_cast<std::size_t>(cur), l)
                    : in_edge(static_cast<std::size_t>(cur), -l);
    if (nxt < 0) return false;
    cur = nxt;
  }
  return cur == 0;
}

std::string CoreGraph::canonical_hash() const {
  std::vector<long> order(vertex_count(), -1);
  std::vector<std::size_t> bfs{0};
  order[0] = 0;
  long next = 1;
  for (std::size_t q = 0; q < bfs.size(); ++q) {
    std::size_t v = bfs[q];
    for (int l = 1; l <= alphabet_; ++l) {
      for (int w : {out_edge(v, l), in_edge(v, l)}) {
        if (w >= 0 && order[static_cast<std::size_t>(w)] < 0) {
          order[static_cast<std::size_t>(w)] = next++;
          bfs.push_back(static_cast<std::size_t>(w));
        }
      }
    }
  }
  std::stringstream ss;
  ss << vertex_count() << ";";
  std::vector<std::string> lines;
  for (std::size_t v = 0; v < vertex_count(); ++v)
    for (int l = 1; l <= alphabet_; ++l)
      if (out_edge(v, l) >= 0) {
        lines.push_back(std::to_string(order[v]) + "-" + std::to_string(l) + ">" +
                        std::to_string(order[static_cast<std::size_t>(out_edge(v, l))]));
      }
  std::sort(lines.begin(), lines.end());
  for (const auto& s : lines) ss << s << ";";
  return ss.str();
}

std::string CoreGraph::to_json_string() const {
  std::stringstream ss;
  ss << "{\"alphabet\":" << alphabet_ << ",\"vertices\":" << vertex_count()
     << ",\"base\":0,\"edges\":[";
  bool first = true;
  for (std::size_t v = 0; v < vertex_count(); ++v)
    for (int l = 1; l <= alphabet_; ++l)
      if (out_edge(v, l) >= 0) {
        if (!first) ss << ",";
        first = false;
        ss << "[" << v << "," << l << "," << out_edge(v, l) << "]";
      }
  ss << "],\"rank\":" << rank() << "}";
  return ss.str();
}

namespace {

struct RawEdge {
  std::size_t u, v;
  int label;
};

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

CoreGraph fold_words(const std::vector<FreeWord>& gens, int alphabet) {
  if (alphabet < 1) throw Error("alphabet must be positive");
  std::vector<RawEdge> edges;
  std::size_t nv = 1;  // base
  for (const auto& w : gens) {
    if (w.empty()) continue;
    std::size_t prev = 0;
    const auto& ls = w.letters();
    for (std::size_t j = 0; j < ls.size(); ++j) {
      int l = ls[j];
      if (l == 0 || l > alphabet || l < -alphabet)
        throw Error("letter outside the alphabet");
      std::size_t nxt = (j + 1 == ls.size()) ? 0 : nv++;
      if (l > 0)
        edges.push_back({prev, nxt, l});
      else
        edges.push_back({nxt, prev, -l});
      prev = nxt;
    }
  }
  UnionFind uf(nv);
  // fold until no vertex has two equal-label edges in the same direction
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<std::size_t, int>, std::size_t> out_seen, in_seen;
    for (const auto& e : edges) {
      std::size_t u = uf.find(e.u), v = uf.find(e.v);
      auto ko = std::make_pair(u, e.label);
      auto it = out_seen.find(ko);
      if (it == out_seen.end()) {
        out_seen[ko] = v;
      } else if (it->second != v) {
        uf.unite(it->second, v);
        changed = true;
        break;
      }
      auto ki = std::make_pair(v, e.label);
      auto jt = in_seen.find(ki);
      if (jt == in_seen.end()) {
        in_seen[ki] = u;
      } else if (jt->second != u) {
        uf.unite(jt->second, u);
        changed = true;
        break;
      }
    }
  }
  // contract to classes, dedupe parallel edges
  std::map<std::size_t, std::size_t> relabel;
  auto cls = [&](std::size_t x) {
    std::size_t r = uf.find(x);
    auto it = relabel.find(r);
    if (it != relabel.end()) return it->second;
    std::size_t id = relabel.size();
    relabel[r] = id;
    return id;
  };
  cls(uf.find(0));  // base first
  std::set<std::tuple<std::size_t, std::size_t, int>> dedup;
  for (const auto& e : edges) dedup.insert({cls(e.u), cls(e.v), e.label});
  std::size_t n = relabel.size();
  std::vector<std::vector<int>> out(n, std::vector<int>(alphabet, -1));
  std::vector<std::vector<int>> in(n, std::vector<int>(alphabet, -1));
  for (const auto& [u, v, l] : dedup) {
    out[u][static_cast<std::size_t>(l - 1)] = static_cast<int>(v);
    in[v][static_cast<std::size_t>(l - 1)] = static_cast<int>(u);
  }
  // trim valence-1 vertices except the base
  bool trimmed = true;
  std::vector<bool> dead(n, false);
  while (trimmed) {
    trimmed = false;
    for (std::size_t v = 1; v < n; ++v) {
      if (dead[v]) continue;
      int deg = 0;
      for (int l = 1; l <= alphabet; ++l) {
        if (out[v][l - 1] >= 0) ++deg;
        if (in[v][l - 1] >= 0) ++deg;
      }
      if (deg <= 1) {
        dead[v] = true;
        trimmed = true;
        for (std::size_t u = 0; u < n; ++u)
          for (int l = 1; l <= alphabet; ++l) {
            if (out[u][l - 1] == static_cast<int>(v)) out[u][l - 1] = -1;
            if (in[u][l - 1] == static_cast<int>(v)) in[u][l - 1] = -1;
          }
        for (int l = 1; l <= alphabet; ++l) {
          out[v][l - 1] = -1;
          in[v][l - 1] = -1;
        }
      }
    }
  }
  // compact
  std::vector<long> newid(n, -1);
  long cnt = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (!dead[v]) newid[v] = cnt++;
  CoreGraph g;
  g.alphabet_ = alphabet;
  g.out_.assign(static_cast<std::size_t>(cnt), std::vector<int>(alphabet, -1));
  g.in_.assign(static_cast<std::size_t>(cnt), std::vector<int>(alphabet, -1));
  for (std::size_t v = 0; v < n; ++v) {
    if (dead[v]) continue;
    for (int l = 1; l <= alphabet; ++l) {
      int w = out[v][l - 1];
      if (w >= 0 && !dead[static_cast<std::size_t>(w)]) {
        g.out_[static_cast<std::size_t>(newid[v])][l - 1] =
            static_cast<int>(newid[static_cast<std::size_t>(w)]);
        g.in_[static_cast<std::size_t>(newid[static_cast<std::size_t>(w)])][l - 1] =
            static_cast<int>(newid[v]);
      }
    }
  }
  return g;
}

long f_quotient_value(const std::vector<std::pair<NamedGen, long>>& word) {
  long acc = 0;
  for (const auto& [g, e] : word)
    acc += (g == NamedGen::D1 || g == NamedGen::D2) ? -2 * e : e;
  return acc;
}

namespace {

const char* kLWordsDG[9] = {
    "d2 g1^2",  "d1 g1^2",  "g1 d1 g1", "g2^-1 g1", "g1 g2^-1",
    "g3^-1 g1", "g1 g3^-1", "g4^-1 g1", "g1 g4^-1",
};

const char* kAWordsL[9] = {
    "l2 l1^-1 l2 l1^-1 l2 l1^-1 l9 l3 l8^-1 l3^-1",
    "l2 l1^-1 l7^-1 l1 l6^-1 l2 l1^-1 l5^-1 l3 l4^-1 l1 l2 l6 l1^-1 l7 l2 l1^-2",
    "l2 l1^-1 l7^-1 l1 l6^-1 l1 l2^-1 l1^-1",
    "l1 l2 l1^-1 l8 l3^-1 l9 l6 l1^-1 l7 l2 l1^-2",
    "l1 l2 l1^-1 l2 l1^-1 l8 l3^-1 l1 l3^-2 l1^-1 l9 l1 l2^-1 l1^-1 l2 l1^-1 l9^-1 "
    "l3 l8^-1 l1 l2",
    "l1 l2 l1^-1 l8 l3^-1 l1 l3^-2 l1^-1 l9 l1 l2^-2 l6 l1^-1 l7 l1 l2^-1",
    "l1^2 l2^-1 l7^-1 l1 l6",
    "l1 l4 l3^-1 l5 l1 l2 l1 l2^-1",
    "l1^2 l2^-1 l1 l2^-1 l1 l2 l1^-1 l9^-1 l3 l8^-1 l1 l2^-1 l1^-1",
};

NamedGen named_of(const std::string& s) {
  if (s == "d1") return NamedGen::D1;
  if (s == "d2") return NamedGen::D2;
  if (s == "g1") return NamedGen::G1;
  if (s == "g2") return NamedGen::G2;
  if (s == "g3") return NamedGen::G3;
  if (s == "g4") return NamedGen::G4;
  throw Error("unknown generator name: " + s);
}

std::vector<std::pair<NamedGen, long>> parse_dg(const std::string& text) {
  std::vector<std::pair<NamedGen, long>> out;
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    long e = 1;
    std::string head = tok;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      head = tok.substr(0, caret);
      e = std::stol(tok.substr(caret + 1));
    }
    out.push_back({named_of(head), e});
  }
  return out;
}

FreeWord parse_l(const std::string& text) {
  FreeWord w;
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    long e = 1;
    std::string head = tok;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      head = tok.substr(0, caret);
      e = std::stol(tok.substr(caret + 1));
    }
    if (head.size() < 2 || head[0] != 'l') throw Error("bad l-letter: " + tok);
    int idx = std::stoi(head.substr(1));
    long k = e < 0 ? -e : e;
    for (long j = 0; j < k; ++j) w.push(e < 0 ? -idx : idx);
  }
  return w;
}

}  // namespace

const std::vector<std::pair<NamedGen, long>>& l_word_dg(int j) {
  if (j < 1 || j > 9) throw Error("l-word index out of range");
  static std::vector<std::vector<std::pair<NamedGen, long>>>* cache = [] {
    auto* v = new std::vector<std::vector<std::pair<NamedGen, long>>>();
    for (int k = 0; k < 9; ++k) v->push_back(parse_dg(kLWordsDG[k]));
    return v;
  }();
  return (*cache)[static_cast<std::size_t>(j - 1)];
}

FreeWord a_word_in_l(int j) {
  if (j < 1 || j > 9) throw Error("generator index out of range");
  return parse_l(kAWordsL[j - 1]);
}

std::vector<std::pair<NamedGen, long>> expand_l_word(const FreeWord& w) {
  std::vector<std::pair<NamedGen, long>> out;
  for (int l : w.letters()) {
    int idx = l > 0 ? l : -l;
    const auto& def = l_word_dg(idx);
    if (l > 0) {
      for (const auto& p : def) out.push_back(p);
    } else {
      for (auto it = def.rbegin(); it != def.rend(); ++it)
        out.push_back({it->first, -it->second});
    }
  }
  return out;
}


namespace {

// conjugation by the height-1 transversal letter on the kernel basis; each
// substitution is matrix-verified once at startup
struct ConjTables {
  std::map<int, FreeWord> fwd, bwd;
  ConjTables() {
    auto W = [](std::initializer_list<int> ls) {
      FreeWord w;
      for (int l : ls) w.push(l);
      return w;
    };
    fwd[1] = W({1});
    fwd[2] = W({3});
    fwd[3] = W({1, 2, -1});
    fwd[4] = W({5});
    fwd[5] = W({1, 2, -1, 4, -3});
    fwd[6] = W({7});
    fwd[7] = W({1, 6, -1});
    fwd[8] = W({9});
    fwd[9] = W({1, 2, -1, 8, -3});
    bwd[1] = W({1});
    bwd[2] = W({-1, 3, 1});
    bwd[3] = W({2});
    bwd[4] = W({-3, 5, 2});
    bwd[5] = W({4});
    bwd[6] = W({-1, 7, 1});
    bwd[7] = W({6});
    bwd[8] = W({-3, 9, 2});
    bwd[9] = W({8});
    const Field* F = Field::gaussian();
    std::vector<ProjMat> L, Li;
    for (int k = 1; k <= 9; ++k) {
      ProjMat acc = ProjMat::identity(3, F);
      for (const auto& [g, e] : l_word_dg(k)) acc = acc * named_gen(g, F).pow(e);
      L.push_back(acc);
      Li.push_back(acc.inv());
    }
    auto wmat = [&](const FreeWord& w) {
      ProjMat m = ProjMat::identity(3, F);
      for (int l : w.letters()) m = m * (l > 0 ? L[l - 1] : Li[-l - 1]);
      return m;
    };
    ProjMat g1 = named_gen(NamedGen::G1, F);
    for (int k = 1; k <= 9; ++k) {
      if (wmat(fwd[k]) != g1 * L[k - 1] * g1.inv())
        throw Error("conjugation table is wrong (fwd)");
      if (wmat(bwd[k]) != g1.inv() * L[k - 1] * g1)
        throw Error("conjugation table is wrong (bwd)");
    }
  }
};

const ConjTables& conj_tables() {
  static ConjTables* t = new ConjTables();
  return *t;
}

FreeWord apply_conj(const FreeWord& w, int dir) {
  const ConjTables& t = conj_tables();
  FreeWord out;
  for (int l : w.letters()) {
    int idx = l > 0 ? l : -l;
    const FreeWord& img = dir > 0 ? t.fwd.at(idx) : t.bwd.at(idx);
    FreeWord piece = l > 0 ? img : img.inverse();
    for (int x : piece.letters()) out.push(x);
  }
  return out;
}

}  // namespace

FreeWord derived_a_word_in_l(int j) {
  if (j < 1 || j > 9) throw Error("generator index out of range");
  // Schreier rewriting over the weight quotient with transversal powers of g1
  FreeWord word;
  long h = 0;
  for (const auto& [g, e] : a_word_dg(j)) {
    long cnt = e < 0 ? -e : e;
    int sgn = e < 0 ? -1 : 1;
    for (long rpt = 0; rpt < cnt; ++rpt) {
      if (g == NamedGen::G1) {
        h += sgn;
        continue;
      }
      long wt = (g == NamedGen::D1 || g == NamedGen::D2) ? -2 : 1;
      int base = g == NamedGen::D1   ? 2
                 : g == NamedGen::D2 ? 1
                 : g == NamedGen::G2 ? -5
                 : g == NamedGen::G3 ? -7
                                     : -9;
      long hh = sgn > 0 ? h : h - wt;
      FreeWord u;
      u.push(base);
      for (long s = hh; s > 0; --s) u = apply_conj(u, +1);
      for (long s = hh; s < 0; ++s) u = apply_conj(u, -1);
      FreeWord piece = sgn > 0 ? u : u.inverse();
      for (int x : piece.letters()) word.push(x);
      h += sgn * wt;
    }
  }
  return word;
}

namespace {

ProjMat l_word_matrix(const FreeWord& w, const Field* F) {
  ProjMat acc = ProjMat::identity(3, F);
  for (int l : w.letters()) {
    int idx = l > 0 ? l : -l;
    ProjMat m = ProjMat::identity(3, F);
    for (const auto& [g, e] : l_word_dg(idx)) m = m * named_gen(g, F).pow(e);
    acc = acc * (l > 0 ? m : m.inv());
  }
  return acc;
}

}  // namespace

bool verify_l_derived(int j) {
  const Field* F = Field::gaussian();
  return l_word_matrix(derived_a_word_in_l(j), F) == a_generator_dg(j, F);
}

bool verify_l_derived_all() {
  for (int j = 1; j <= 9; ++j)
    if (!verify_l_derived(j)) return false;
  return true;
}

long rank_of_derived_a_words() {
  std::vector<FreeWord> gens;
  for (int j = 1; j <= 9; ++j) gens.push_back(derived_a_word_in_l(j));
  return fold_words(gens, 9).rank();
}

bool verify_l_consistency(int j) {
  const Field* F = Field::gaussian();
  std::vector<std::pair<NamedGen, long>> dg = expand_l_word(a_word_in_l(j));
  ProjMat acc = ProjMat::identity(3, F);
  for (const auto& [g, e] : dg) acc = acc * named_gen(g, F).pow(e);
  return acc == a_generator_dg(j, F);
}

bool verify_l_consistency_all() {
  for (int j = 1; j <= 9; ++j)
    if (!verify_l_consistency(j)) return false;
  return true;
}

long f_quotient_a(int j) { return f_quotient_value(a_word_dg(j)); }

long rank_of_a_words() {
  std::vector<FreeWord> gens;
  for (int j = 1; j <= 9; ++j) gens.push_back(a_word_in_l(j));
  return fold_words(gens, 9).rank();
}

}  // namespace bforge
