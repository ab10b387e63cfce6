#include "gmf/moy.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

#include "gmf/symfun.hpp"

namespace gmf {

namespace {

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::map<std::string, std::string> outer_marks(const MOYGraph& g) {
  std::map<std::string, std::string> m;
  for (auto& [v, a] : g.outer) m[v] = a;
  return m;
}

// marked points of an edge, including the marks of outer endpoints
std::vector<std::string> edge_points(const MOYEdge& e, const std::map<std::string, std::string>& outer) {
  std::vector<std::string> pts = e.marks;
  if (auto it = outer.find(e.tail); it != outer.end() && (pts.empty() || pts.front() != it->second))
    pts.insert(pts.begin(), it->second);
  if (auto it = outer.find(e.head); it != outer.end() && (pts.empty() || pts.back() != it->second))
    pts.push_back(it->second);
  return pts;
}

}  // namespace

GraphError::GraphError(std::vector<std::string> p)
    : std::invalid_argument("invalid MOY graph: " + join(p, "; ")), problems(std::move(p)) {}

std::vector<std::string> alphabet_generators(const std::string& name, int size) {
  if (size == 1) return {name};
  std::vector<std::string> g;
  for (int l = 1; l <= size; ++l) g.push_back(name + "_" + std::to_string(l));
  return g;
}

std::string to_string(BlockKind k) {
  switch (k) {
    case BlockKind::strand: return "strand";
    case BlockKind::splitter: return "splitter";
    case BlockKind::merger: return "merger";
    case BlockKind::vertex: return "vertex";
  }
  return "?";
}

Report validate_graph(const MOYGraph& g) {
  Report r;
  std::set<std::string> inner(g.vertices.begin(), g.vertices.end());
  std::map<std::string, std::string> outer;
  std::set<std::string> seen;
  for (auto& v : g.vertices)
    if (!seen.insert(v).second) r.fail("duplicate vertex " + v);
  for (auto& [v, a] : g.outer) {
    if (!seen.insert(v).second) r.fail("duplicate vertex " + v);
    if (a.empty()) r.fail("outer vertex " + v + " is unmarked");
    outer[v] = a;
  }
  std::map<std::string, int> in_w, out_w, degree;
  for (auto& e : g.edges) {
    std::string label = "edge " + e.tail + " -> " + e.head;
    for (auto* v : {&e.tail, &e.head})
      if (!seen.count(*v)) r.fail(label + ": undeclared vertex " + *v);
    if (e.weight < 1) r.fail(label + ": weight must be positive");
    out_w[e.tail] += e.weight;
    in_w[e.head] += e.weight;
    ++degree[e.tail];
    ++degree[e.head];
    if (edge_points(e, outer).empty()) r.fail("unmarked " + label);
  }
  for (auto& [v, a] : g.outer)
    if (degree[v] != 1) r.fail("outer vertex " + v + " must have exactly one edge");
  for (auto& v : g.vertices) {
    if (degree[v] == 0) {
      r.fail("isolated vertex " + v);
      continue;
    }
    if (in_w[v] != out_w[v])
      r.fail("flow violation at vertex " + v + ": in-weight " + std::to_string(in_w[v]) + ", out-weight " +
             std::to_string(out_w[v]));
  }
  // marked points: pairwise disjoint alphabets of the edge's size
  std::map<std::string, int> size_of;
  std::map<std::string, int> uses;
  for (auto& e : g.edges)
    for (auto& p : edge_points(e, outer)) {
      ++uses[p];
      auto [it, fresh] = size_of.emplace(p, e.weight);
      if (!fresh && it->second != e.weight)
        r.fail("alphabet size mismatch: " + p + " has sizes " + std::to_string(it->second) + " and " +
               std::to_string(e.weight));
      else if (!fresh)
        r.fail("alphabets not disjoint: " + p + " marks more than one point");
    }
  for (auto& [v, a] : g.outer)
    if (!uses.count(a) && degree[v] == 1) r.fail("outer mark " + a + " is not on an edge");
  std::map<std::string, std::string> gens;
  for (auto& [a, k] : size_of)
    for (auto& gname : alphabet_generators(a, k)) {
      auto [it, fresh] = gens.emplace(gname, a);
      if (!fresh) r.fail("generator name clash: " + gname + " (alphabets " + it->second + ", " + a + ")");
    }
  return r;
}

MOYGraph parse_graph(const std::string& text) {
  MOYGraph g;
  std::vector<std::string> problems;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    std::string where = "line " + std::to_string(lineno) + ": ";
    if (tok[0] == "vertex") {
      if (tok.size() != 2) {
        problems.push_back(where + "expected 'vertex NAME'");
        continue;
      }
      g.vertices.push_back(tok[1]);
    } else if (tok[0] == "outer") {
      if (tok.size() != 4 || tok[2] != "mark") {
        problems.push_back(where + "expected 'outer NAME mark ALPHABET'");
        continue;
      }
      g.outer.push_back({tok[1], tok[3]});
    } else if (tok[0] == "edge") {
      if (tok.size() < 4 || tok[2] != "->") {
        problems.push_back(where + "expected 'edge A -> B [weight K] [mark X ...]'");
        continue;
      }
      MOYEdge e{tok[1], tok[3], 1, {}};
      bool ok = true;
      for (size_t i = 4; i < tok.size() && ok;) {
        if (tok[i] == "weight" && i + 1 < tok.size()) {
          try {
            size_t used = 0;
            e.weight = std::stoi(tok[i + 1], &used);
            if (used != tok[i + 1].size()) throw std::invalid_argument("");
          } catch (const std::exception&) {
            problems.push_back(where + "bad weight '" + tok[i + 1] + "'");
            ok = false;
          }
          i += 2;
        } else if (tok[i] == "mark") {
          ++i;
          while (i < tok.size() && tok[i] != "weight") e.marks.push_back(tok[i++]);
        } else {
          problems.push_back(where + "unexpected token '" + tok[i] + "'");
          ok = false;
        }
      }
      if (ok) g.edges.push_back(e);
    } else {
      problems.push_back(where + "unknown directive '" + tok[0] + "'");
    }
  }
  if (problems.empty()) {
    Report r = validate_graph(g);
    problems = r.problems;
  }
  if (!problems.empty()) throw GraphError(problems);
  return g;
}

std::string graph_to_string(const MOYGraph& g) {
  std::ostringstream os;
  for (auto& v : g.vertices) os << "vertex " << v << "\n";
  for (auto& [v, a] : g.outer) os << "outer " << v << " mark " << a << "\n";
  for (auto& e : g.edges) {
    os << "edge " << e.tail << " -> " << e.head << " weight " << e.weight;
    if (!e.marks.empty()) os << " mark " << join(e.marks, " ");
    os << "\n";
  }
  return os.str();
}

Decomposition decompose_to_blocks(const MOYGraph& g) {
  Report rep = validate_graph(g);
  if (!rep.ok) throw GraphError(rep.problems);
  auto outer = outer_marks(g);

  // oriented cycles on the vertex graph
  {
    std::map<std::string, std::vector<std::string>> succ;
    std::map<std::string, int> indeg;
    for (auto& v : g.vertices) indeg[v] = 0;
    for (auto& [v, a] : g.outer) indeg[v] = 0;
    for (auto& e : g.edges) {
      succ[e.tail].push_back(e.head);
      ++indeg[e.head];
    }
    std::vector<std::string> ready;
    for (auto& [v, d] : indeg)
      if (d == 0) ready.push_back(v);
    size_t done = 0;
    while (!ready.empty()) {
      std::string v = ready.back();
      ready.pop_back();
      ++done;
      for (auto& w : succ[v])
        if (--indeg[w] == 0) ready.push_back(w);
    }
    if (done != indeg.size()) {
      std::vector<std::string> left;
      for (auto& [v, d] : indeg)
        if (d > 0) left.push_back(v);
      throw CyclicGraphError("oriented cycle through vertices " + join(left, ", "));
    }
  }

  Decomposition dec;
  std::vector<BuildingBlock> raw;
  std::vector<std::vector<std::string>> pts;
  for (auto& e : g.edges) pts.push_back(edge_points(e, outer));
  for (size_t i = 0; i < g.edges.size(); ++i)
    for (auto& p : pts[i]) dec.sizes[p] = g.edges[i].weight;

  for (auto& v : g.vertices) {
    BuildingBlock b;
    b.origin = "vertex " + v;
    for (size_t i = 0; i < g.edges.size(); ++i) {
      if (g.edges[i].head == v) {
        b.in.push_back(pts[i].back());
        b.in_weights.push_back(g.edges[i].weight);
      }
      if (g.edges[i].tail == v) {
        b.out.push_back(pts[i].front());
        b.out_weights.push_back(g.edges[i].weight);
      }
    }
    if (b.in.size() == 1 && b.out.size() == 1)
      b.kind = BlockKind::strand;
    else if (b.in.size() == 1)
      b.kind = BlockKind::splitter;
    else if (b.out.size() == 1)
      b.kind = BlockKind::merger;
    else
      b.kind = BlockKind::vertex;
    for (size_t i = 0; i < b.out_weights.size(); ++i)
      for (size_t j = i + 1; j < b.out_weights.size(); ++j) b.shift += b.out_weights[i] * b.out_weights[j];
    raw.push_back(b);
  }
  for (size_t i = 0; i < g.edges.size(); ++i)
    for (size_t k = 0; k + 1 < pts[i].size(); ++k) {
      BuildingBlock b;
      b.kind = BlockKind::strand;
      b.in = {pts[i][k]};
      b.out = {pts[i][k + 1]};
      b.in_weights = b.out_weights = {g.edges[i].weight};
      b.origin = "edge " + g.edges[i].tail + " -> " + g.edges[i].head;
      raw.push_back(b);
    }

  // topological order of blocks, smallest creation index first
  std::map<std::string, size_t> producer;
  for (size_t i = 0; i < raw.size(); ++i)
    for (auto& a : raw[i].out) producer[a] = i;
  std::vector<std::vector<size_t>> succ(raw.size());
  std::vector<int> indeg(raw.size(), 0);
  for (size_t j = 0; j < raw.size(); ++j)
    for (auto& a : raw[j].in)
      if (auto it = producer.find(a); it != producer.end()) {
        succ[it->second].push_back(j);
        ++indeg[j];
      }
  std::priority_queue<size_t, std::vector<size_t>, std::greater<>> ready;
  for (size_t i = 0; i < raw.size(); ++i)
    if (indeg[i] == 0) ready.push(i);
  while (!ready.empty()) {
    size_t i = ready.top();
    ready.pop();
    dec.blocks.push_back(raw[i]);
    for (size_t j : succ[i])
      if (--indeg[j] == 0) ready.push(j);
  }
  if (dec.blocks.size() != raw.size()) throw CyclicGraphError("oriented cycle among building blocks");
  for (size_t i = 0; i < dec.blocks.size(); ++i) {
    for (auto& a : dec.blocks[i].in) dec.incidence[a].push_back(i);
    for (auto& a : dec.blocks[i].out) dec.incidence[a].push_back(i);
  }
  for (auto& e : g.edges) {
    if (outer.count(e.tail)) dec.sources.push_back(outer.at(e.tail));
    if (outer.count(e.head)) dec.sinks.push_back(outer.at(e.head));
  }
  return dec;
}

// ---------------------------------------------------------------- compilation

namespace {

std::vector<Poly> gens_of(const RingPtr& r, const std::string& alph, int size) {
  std::vector<Poly> v;
  for (auto& n : alphabet_generators(alph, size)) v.push_back(Poly::var(r, n));
  return v;
}

bool uses_var(const Poly& p, int v) { return p.max_exponent(v) > 0; }

// coefficient c when p = c v + (terms free of v)
std::optional<Q> linear_coefficient(const Poly& p, int v) {
  std::optional<Q> c;
  for (auto& [e, q] : p.terms()) {
    if (e[v] == 0) continue;
    if (e[v] > 1) return std::nullopt;
    for (size_t i = 0; i < e.size(); ++i)
      if (static_cast<int>(i) != v && e[i] != 0) return std::nullopt;
    c = q;
  }
  return c;
}

// degree in v when the leading coefficient in v is a nonzero constant
std::optional<int> monic_degree(const Poly& p, int v) {
  int D = p.max_exponent(v);
  if (D == 0) return std::nullopt;
  for (auto& [e, q] : p.terms()) {
    if (e[v] != D) continue;
    for (size_t i = 0; i < e.size(); ++i)
      if (static_cast<int>(i) != v && e[i] != 0) return std::nullopt;
  }
  return D;
}

RingPtr merged_ring(const RingPtr& a, const RingPtr& b) {
  std::vector<std::string> names = a->names;
  std::vector<int> degs = a->degrees;
  for (size_t i = 0; i < b->nvars(); ++i) {
    int j = a->index(b->names[i]);
    if (j >= 0) {
      if (a->degrees[j] != b->degrees[i]) throw std::invalid_argument("glue: degree clash for " + b->names[i]);
      continue;
    }
    names.push_back(b->names[i]);
    degs.push_back(b->degrees[i]);
  }
  return make_ring(names, degs);
}

std::vector<std::string> free_generators(const CompiledMF& c) {
  std::vector<std::string> g;
  for (auto* side : {&c.top, &c.bottom})
    for (auto& a : *side)
      for (auto& n : alphabet_generators(a, c.sizes.at(a))) g.push_back(n);
  return g;
}

// drop variables that are neither free generators nor tower variables
void prune_ring(CompiledMF& c) {
  std::set<std::string> keep;
  for (auto& n : free_generators(c)) keep.insert(n);
  for (auto& t : c.tower) keep.insert(t);
  std::vector<std::string> names;
  std::vector<int> degs;
  for (size_t i = 0; i < c.ring->nvars(); ++i)
    if (keep.count(c.ring->names[i])) {
      names.push_back(c.ring->names[i]);
      degs.push_back(c.ring->degrees[i]);
    }
  RingPtr r = make_ring(names, degs);
  for (auto* v : {&c.a, &c.b, &c.tower_rel})
    for (auto& p : *v) p = p.embed(r);
  c.ring = r;
}

void check_tower(const CompiledMF& c, const std::set<int>& bound) {
  for (size_t k = 0; k < c.tower.size(); ++k) {
    int v = c.ring->index(c.tower[k]);
    const Poly& rel = c.tower_rel[k];
    if (!monic_degree(rel, v)) throw std::logic_error("glue: tower relation lost its constant leading coefficient");
    for (size_t j = k + 1; j < c.tower.size(); ++j)
      if (uses_var(rel, c.ring->index(c.tower[j]))) throw std::logic_error("glue: tower is not triangular");
    for (int b : bound)
      if (uses_var(rel, b)) throw std::logic_error("glue: tower relation involves a bound generator");
  }
}

void exclude(CompiledMF& c, std::vector<int> bound) {
  const RingPtr& r = c.ring;
  auto in_tower_rels = [&](int v) {
    for (auto& p : c.tower_rel)
      if (uses_var(p, v)) return true;
    return false;
  };
  auto uses_tower = [&](const Poly& p) {
    for (auto& t : c.tower)
      if (uses_var(p, r->index(t))) return true;
    return false;
  };
  auto normalize = [&]() {
    for (auto* v : {&c.a, &c.b})
      for (auto& p : *v) p = tower_normal_form(c, p);
  };
  auto erase_pair = [&](size_t i) {
    c.a.erase(c.a.begin() + i);
    c.b.erase(c.b.begin() + i);
    c.a_deg.erase(c.a_deg.begin() + i);
  };
  while (!bound.empty()) {
    bool progress = false;
    // linear pivots: substitute
    for (size_t i = 0; i < c.a.size() && !progress; ++i)
      for (size_t bi = 0; bi < bound.size(); ++bi) {
        int v = bound[bi];
        auto coef = linear_coefficient(c.a[i], v);
        if (!coef) continue;
        Exp e(r->nvars(), 0);
        e[v] = 1;
        Poly rest = c.a[i] - Poly::monomial(r, e, *coef);
        if (uses_tower(rest) && in_tower_rels(v)) continue;
        Poly value = rest * (Q(-1) / *coef);
        erase_pair(i);
        for (auto* vec : {&c.a, &c.b, &c.tower_rel})
          for (auto& p : *vec) p = p.substitute_var(v, value);
        bound.erase(bound.begin() + bi);
        progress = true;
        break;
      }
    // monic pivots: pass to the quotient
    for (size_t i = 0; i < c.a.size() && !progress; ++i)
      for (size_t bi = 0; bi < bound.size(); ++bi) {
        int v = bound[bi];
        if (!uses_var(c.a[i], v) || in_tower_rels(v)) continue;
        bool others = false;
        for (int w : bound)
          if (w != v && uses_var(c.a[i], w)) others = true;
        if (others || !monic_degree(c.a[i], v)) continue;
        c.tower.push_back(r->names[v]);
        c.tower_rel.push_back(c.a[i]);
        erase_pair(i);
        bound.erase(bound.begin() + bi);
        progress = true;
        break;
      }
    if (!progress) {
      std::vector<std::string> left;
      for (int v : bound) left.push_back(r->names[v]);
      throw std::runtime_error("glue: cannot exclude generators " + join(left, ", "));
    }
    normalize();
  }
  check_tower(c, {});
}

}  // namespace

Poly graph_potential(const RingPtr& ring, const std::vector<std::string>& top, const std::vector<std::string>& bottom,
                     const std::map<std::string, int>& sizes, int n) {
  Poly w(ring);
  for (auto& a : top) w += power_sum_elem(gens_of(ring, a, sizes.at(a)), n);
  for (auto& a : bottom) w -= power_sum_elem(gens_of(ring, a, sizes.at(a)), n);
  return w;
}

CompiledMF compile_block_data(const BuildingBlock& b, int n, int unit) {
  CompiledMF c;
  c.n = n;
  c.unit = unit;
  std::vector<std::string> names;
  std::vector<int> degs;
  auto add = [&](const std::vector<std::string>& alph, const std::vector<int>& ws) {
    for (size_t i = 0; i < alph.size(); ++i) {
      c.sizes[alph[i]] = ws[i];
      auto g = alphabet_generators(alph[i], ws[i]);
      for (size_t l = 0; l < g.size(); ++l) {
        names.push_back(g[l]);
        degs.push_back(unit * static_cast<int>(l + 1));
      }
    }
  };
  add(b.out, b.out_weights);
  add(b.in, b.in_weights);
  c.ring = make_ring(names, degs);
  c.top = b.out;
  c.bottom = b.in;
  int m = 0, m2 = 0;
  for (int w : b.out_weights) m += w;
  for (int w : b.in_weights) m2 += w;
  if (m != m2) throw std::invalid_argument("compile_block: weights do not balance");
  std::vector<std::vector<Poly>> xp, yp;
  for (auto& a : b.out) xp.push_back(gens_of(c.ring, a, c.sizes[a]));
  for (auto& a : b.in) yp.push_back(gens_of(c.ring, a, c.sizes[a]));
  std::vector<Poly> X, Y;
  for (int i = 1; i <= m; ++i) {
    X.push_back(elementary_of_union(xp, i, c.ring));
    Y.push_back(elementary_of_union(yp, i, c.ring));
  }
  c.b = star_coefficients(X, Y, n);
  for (int i = 0; i < m; ++i) {
    c.a.push_back(X[i] - Y[i]);
    c.a_deg.push_back(unit * (i + 1));
  }
  c.shift = b.shift;
  return c;
}

MF compile_block(const BuildingBlock& b, int n, int unit) { return to_mf(compile_block_data(b, n, unit)); }

CompiledMF glue(const CompiledMF& A, const CompiledMF& B, const std::vector<std::string>& shared) {
  if (A.n != B.n || A.unit != B.unit) throw std::invalid_argument("glue: n or grading unit differ");
  auto has = [](const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
  };
  std::set<std::string> z(shared.begin(), shared.end());
  for (auto& a : shared) {
    bool ok = (has(A.top, a) && has(B.bottom, a)) || (has(A.bottom, a) && has(B.top, a));
    if (!ok) throw std::invalid_argument("glue: alphabet " + a + " is not shared");
    if (A.sizes.at(a) != B.sizes.at(a)) throw std::invalid_argument("glue: size mismatch for " + a);
  }
  for (auto* side : {&A.top, &A.bottom})
    for (auto& a : *side)
      if (!z.count(a) && (has(B.top, a) || has(B.bottom, a)))
        throw std::invalid_argument("glue: alphabet " + a + " occurs in both but is not glued");
  std::set<std::string> a_names(A.ring->names.begin(), A.ring->names.end());
  std::set<std::string> z_gens;
  for (auto& a : shared)
    for (auto& g : alphabet_generators(a, A.sizes.at(a))) z_gens.insert(g);
  for (auto& nm : B.ring->names)
    if (a_names.count(nm) && !z_gens.count(nm)) throw std::invalid_argument("glue: generator name clash " + nm);

  CompiledMF c;
  c.n = A.n;
  c.unit = A.unit;
  c.ring = merged_ring(A.ring, B.ring);
  for (auto* src : {&A, &B}) {
    for (auto& p : src->a) c.a.push_back(p.embed(c.ring));
    for (auto& p : src->b) c.b.push_back(p.embed(c.ring));
    for (auto& p : src->tower_rel) c.tower_rel.push_back(p.embed(c.ring));
    c.a_deg.insert(c.a_deg.end(), src->a_deg.begin(), src->a_deg.end());
    c.tower.insert(c.tower.end(), src->tower.begin(), src->tower.end());
    c.shift += src->shift;
    for (auto& [k, v] : src->sizes) c.sizes[k] = v;
    for (auto& a : src->top)
      if (!z.count(a)) c.top.push_back(a);
    for (auto& a : src->bottom)
      if (!z.count(a)) c.bottom.push_back(a);
  }
  std::vector<int> bound;
  for (auto& a : shared)
    for (auto& g : alphabet_generators(a, c.sizes.at(a))) bound.push_back(c.ring->index(g));
  exclude(c, bound);
  for (auto& a : shared) c.sizes.erase(a);
  prune_ring(c);
  return c;
}

Poly tower_normal_form(const CompiledMF& c, const Poly& p) {
  Poly r = p;
  for (size_t k = c.tower.size(); k-- > 0;) {
    int v = c.ring->index(c.tower[k]);
    if (r.max_exponent(v) >= c.tower_rel[k].max_exponent(v)) r = r.reduce_univariate(c.tower_rel[k], v);
  }
  return r;
}

MF to_mf(const CompiledMF& c, const std::vector<std::string>& alphabet_order) {
  if (c.a.empty()) throw std::invalid_argument("to_mf: no Koszul factors");
  std::vector<std::string> order = alphabet_order;
  if (order.empty()) {
    order = c.top;
    order.insert(order.end(), c.bottom.begin(), c.bottom.end());
  }
  {
    std::set<std::string> want(c.top.begin(), c.top.end());
    want.insert(c.bottom.begin(), c.bottom.end());
    std::set<std::string> got(order.begin(), order.end());
    if (want != got || got.size() != order.size())
      throw std::invalid_argument("to_mf: alphabet order must list every free alphabet once");
  }
  std::vector<std::string> names;
  std::vector<int> degs;
  for (auto& a : order) {
    auto g = alphabet_generators(a, c.sizes.at(a));
    for (size_t l = 0; l < g.size(); ++l) {
      names.push_back(g[l]);
      degs.push_back(c.unit * static_cast<int>(l + 1));
    }
  }
  RingPtr R = make_ring(names, degs);
  int d = c.unit * (c.n + 1);

  // Koszul factorization over the tower ring, entries not yet reduced
  MF k;
  for (size_t i = 0; i < c.a.size(); ++i) {
    MF f;
    f.ring = c.ring;
    f.d = d;
    f.w = Poly(c.ring);
    f.m0 = {c.ring, {0}};
    f.m1 = {c.ring, {-c.a_deg[i]}};
    f.f = Mat(1, 1, c.ring);
    f.g = Mat(1, 1, c.ring);
    f.f(0, 0) = c.b[i];
    f.g(0, 0) = c.a[i];
    k = i == 0 ? f : tensor_mf(k, f);
  }

  // monomial basis of the tower algebra over R
  std::vector<int> tv, tdeg;
  for (size_t j = 0; j < c.tower.size(); ++j) {
    int v = c.ring->index(c.tower[j]);
    tv.push_back(v);
    tdeg.push_back(c.tower_rel[j].max_exponent(v));
  }
  std::vector<Exp> basis{Exp(c.ring->nvars(), 0)};
  for (size_t j = 0; j < tv.size(); ++j) {
    std::vector<Exp> next;
    for (auto& e : basis)
      for (int p = 0; p < tdeg[j]; ++p) {
        Exp f = e;
        f[tv[j]] = p;
        next.push_back(f);
      }
    basis = next;
  }
  std::map<Exp, size_t> basis_index;
  for (size_t i = 0; i < basis.size(); ++i) basis_index[basis[i]] = i;
  const size_t nb = basis.size();

  auto expand_module = [&](const GradedFreeModule& m) {
    GradedFreeModule out{R, {}};
    for (int s : m.shifts)
      for (auto& e : basis) out.shifts.push_back(s - c.ring->exp_degree(e));
    return out;
  };
  std::vector<int> rmap(c.ring->nvars(), -1);
  for (size_t i = 0; i < c.ring->nvars(); ++i) rmap[i] = R->index(c.ring->names[i]);
  auto expand_mat = [&](const Mat& m) {
    Mat out(m.rows * nb, m.cols * nb, R);
    for (size_t i = 0; i < m.rows; ++i)
      for (size_t j = 0; j < m.cols; ++j) {
        if (m(i, j).is_zero()) continue;
        for (size_t col = 0; col < nb; ++col) {
          Poly prod = tower_normal_form(c, m(i, j) * Poly::monomial(c.ring, basis[col]));
          for (auto& [e, q] : prod.terms()) {
            Exp tpart(c.ring->nvars(), 0), rpart(R->nvars(), 0);
            for (size_t v = 0; v < e.size(); ++v) {
              if (!e[v]) continue;
              if (rmap[v] >= 0)
                rpart[rmap[v]] = e[v];
              else
                tpart[v] = e[v];
            }
            size_t row = basis_index.at(tpart);
            out(i * nb + row, j * nb + col) += Poly::monomial(R, rpart, q);
          }
        }
      }
    return out;
  };

  MF m;
  m.ring = R;
  m.d = d;
  m.w = graph_potential(R, c.top, c.bottom, c.sizes, c.n);
  m.m0 = expand_module(k.m0);
  m.m1 = expand_module(k.m1);
  m.f = expand_mat(k.f);
  m.g = expand_mat(k.g);
  m = shift_mf(m, 0, c.shift);
  require_valid(m, "to_mf");
  return m;
}

CompiledMF compile_graph_data(const MOYGraph& g, int n, int unit) {
  Decomposition dec = decompose_to_blocks(g);
  if (dec.blocks.empty()) throw std::invalid_argument("compile_graph: graph has no building blocks");
  CompiledMF acc = compile_block_data(dec.blocks[0], n, unit);
  for (size_t i = 1; i < dec.blocks.size(); ++i) {
    CompiledMF next = compile_block_data(dec.blocks[i], n, unit);
    std::vector<std::string> shared;
    for (auto* side : {&next.top, &next.bottom})
      for (auto& a : *side)
        if (std::find(acc.top.begin(), acc.top.end(), a) != acc.top.end() ||
            std::find(acc.bottom.begin(), acc.bottom.end(), a) != acc.bottom.end())
          shared.push_back(a);
    acc = glue(acc, next, shared);
  }
  return acc;
}

MF compile_graph(const MOYGraph& g, int n, int unit) {
  CompiledMF c = compile_graph_data(g, n, unit);
  std::vector<std::string> order;
  for (auto& [v, a] : g.outer) order.push_back(a);
  return to_mf(c, order);
}

// ---------------------------------------------------------------- braids

BraidWord parse_braid(const std::string& text) {
  BraidWord w;
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  std::string body = colon == std::string::npos ? "" : text.substr(colon + 1);
  head.erase(std::remove_if(head.begin(), head.end(), ::isspace), head.end());
  if (head.rfind("m=", 0) != 0) throw std::invalid_argument("braid: expected 'm=<strands>: s1 s2 ...'");
  try {
    size_t used = 0;
    w.m = std::stoi(head.substr(2), &used);
    if (used != head.size() - 2) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("braid: bad strand count '" + head.substr(2) + "'");
  }
  std::istringstream in(body);
  for (std::string t; in >> t;) {
    if (t.size() < 2 || t[0] != 's') throw std::invalid_argument("braid: bad letter '" + t + "'");
    size_t used = 0;
    int i = 0;
    try {
      i = std::stoi(t.substr(1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size() - 1) throw std::invalid_argument("braid: bad letter '" + t + "'");
    w.letters.push_back(i);
  }
  if (w.m < 1) throw std::invalid_argument("braid: need at least one strand");
  for (int i : w.letters)
    if (i < 1 || i > w.m - 1) throw std::invalid_argument("braid: letter s" + std::to_string(i) + " out of range");
  return w;
}

std::string braid_to_string(const BraidWord& w) {
  std::string s = "m=" + std::to_string(w.m) + ":";
  for (int i : w.letters) s += " s" + std::to_string(i);
  return s;
}

MOYGraph braid_to_graph(const BraidWord& w) {
  if (w.m < 1) throw std::invalid_argument("braid_to_graph: need at least one strand");
  for (int i : w.letters)
    if (i < 1 || i > w.m - 1) throw std::invalid_argument("braid_to_graph: letter out of range");
  MOYGraph g;
  const int L = static_cast<int>(w.letters.size());
  for (int j = 1; j <= w.m; ++j) g.outer.push_back({"x" + std::to_string(j), "x" + std::to_string(j)});
  for (int j = 1; j <= w.m; ++j) g.outer.push_back({"y" + std::to_string(j), "y" + std::to_string(j)});
  struct Open {
    std::string tail;
    std::vector<std::string> marks;
  };
  std::vector<Open> open;
  for (int j = 1; j <= w.m; ++j) open.push_back({"y" + std::to_string(j), {"y" + std::to_string(j)}});
  // letter p sits between level p (above) and level p+1 (below); level 0 is the top
  for (int p = L - 1; p >= 0; --p) {
    int i = w.letters[p] - 1;
    std::string mv = "m" + std::to_string(p), sv = "s" + std::to_string(p);
    g.vertices.push_back(mv);
    g.vertices.push_back(sv);
    for (int j : {i, i + 1}) {
      g.edges.push_back({open[j].tail, mv, 1, open[j].marks});
      open[j] = {sv, {}};
    }
    g.edges.push_back({mv, sv, 2, {"w" + std::to_string(p)}});
    if (p > 0)
      for (int j = 0; j < w.m; ++j) open[j].marks.push_back("c" + std::to_string(p) + "_" + std::to_string(j + 1));
  }
  for (int j = 0; j < w.m; ++j) {
    open[j].marks.push_back("x" + std::to_string(j + 1));
    g.edges.push_back({open[j].tail, "x" + std::to_string(j + 1), 1, open[j].marks});
  }
  return g;
}

// ---------------------------------------------------------------- closure

ClosureData closure_data(const std::vector<int>& labels) {
  ClosureData c;
  c.labels = labels;
  for (int i : labels) {
    if (i < 1) throw std::invalid_argument("closure_data: labels must be positive");
    c.N += i;
    c.k += i * (i + 1) / 2;
  }
  return c;
}

MF identity_stabilization(const RingPtr& ring, const std::vector<std::pair<std::string, std::string>>& strands,
                          const std::map<std::string, int>& sizes, int n, bool reversed) {
  std::vector<Poly> xs, ys;
  for (auto& [top, bottom] : strands) {
    int k = sizes.at(top);
    if (sizes.at(bottom) != k) throw std::invalid_argument("identity_stabilization: strand size mismatch");
    auto X = gens_of(ring, top, k), Y = gens_of(ring, bottom, k);
    if (reversed) std::swap(X, Y);
    auto st = star_coefficients(X, Y, n);
    for (int l = 0; l < k; ++l) {
      xs.push_back(X[l] - Y[l]);
      ys.push_back(st[l]);
    }
  }
  MF m = koszul_factorization(xs, ys);
  require_valid(m, "identity_stabilization");
  return m;
}

namespace {

bool window_certified(const ClosureResult& r) {
  for (int e : {r.lo, r.lo + 1, r.lo + 2, r.hi - 2, r.hi - 1, r.hi})
    if (r.H0.at(e) != 0 || r.H1.at(e) != 0) return false;
  return r.hi - r.lo >= 5;
}

template <class F>
ClosureResult run_window(ClosureResult base, int lo, int hi, const ClosureOptions& opt, F&& compute) {
  int ext = 0;
  for (;;) {
    ClosureResult r = base;
    r.lo = lo;
    r.hi = hi;
    compute(r);
    r.certified = window_certified(r);
    if (r.certified || opt.window || ext >= opt.max_extensions) return r;
    int grow = std::max(3, (hi - lo + 1) / 2);
    lo -= grow;
    hi += grow;
    ++ext;
  }
}

std::pair<int, int> default_window(const ClosureData& cd, int n, int unit) {
  return {-2 * cd.k * unit, (2 * cd.k + n * cd.N) * unit};
}

struct BraidClosureSetup {
  MF b;
  std::vector<std::pair<std::string, std::string>> strands;
  std::map<std::string, int> sizes;
};

BraidClosureSetup braid_setup(const BraidWord& w, int n, int unit) {
  if (w.m < 1) throw std::invalid_argument("close_braid: need at least one strand");
  BraidClosureSetup s;
  s.b = compile_graph(braid_to_graph(w), n, unit);
  for (int j = 1; j <= w.m; ++j) {
    s.strands.push_back({"x" + std::to_string(j), "y" + std::to_string(j)});
    s.sizes["x" + std::to_string(j)] = s.sizes["y" + std::to_string(j)] = 1;
  }
  return s;
}

}  // namespace

ClosureResult close_graph(const MF& b, const std::vector<std::pair<std::string, std::string>>& strands,
                          const std::map<std::string, int>& sizes, int n, const ClosureOptions& opt) {
  std::vector<int> labels;
  for (auto& [t, bt] : strands) labels.push_back(sizes.at(t));
  ClosureResult base;
  base.data = closure_data(labels);
  MF id = identity_stabilization(b.ring, strands, sizes, n, false);
  if (id.w != b.w) throw std::invalid_argument("close_graph: potential of the identity does not match");
  int N = base.data.N, k = base.data.k * opt.unit;
  // H^l = H^0 hom(Id<k>[l-N], B)
  MF hom0 = hom_factorization(shift_mf(id, -N, k), b);
  MF hom1 = hom_factorization(shift_mf(id, 1 - N, k), b);
  auto [lo, hi] = opt.window ? *opt.window : default_window(base.data, n, opt.unit);
  return run_window(base, lo, hi, opt, [&](ClosureResult& r) {
    r.H0 = folded_cohomology(hom0, r.lo, r.hi).H0;
    r.H1 = folded_cohomology(hom1, r.lo, r.hi).H0;
  });
}

ClosureResult close_braid(const BraidWord& w, int n, const ClosureOptions& opt) {
  BraidClosureSetup s = braid_setup(w, n, opt.unit);
  return close_graph(s.b, s.strands, s.sizes, n, opt);
}

ClosureResult close_braid_direct(const BraidWord& w, int n, const ClosureOptions& opt) {
  BraidClosureSetup s = braid_setup(w, n, opt.unit);
  ClosureResult base;
  base.data = closure_data(std::vector<int>(w.m, 1));
  MF id = identity_stabilization(s.b.ring, s.strands, s.sizes, n, true);
  MF t = tensor_mf(id, s.b);
  auto [lo, hi] = opt.window ? *opt.window : default_window(base.data, n, opt.unit);
  return run_window(base, lo, hi, opt, [&](ClosureResult& r) {
    auto fc = folded_cohomology(t, r.lo, r.hi);
    r.H0 = fc.H0;
    r.H1 = fc.H1;
  });
}

ClosureResult close_braid_excluded(const BraidWord& w, int n, const ClosureOptions& opt) {
  BraidClosureSetup s = braid_setup(w, n, opt.unit);
  ClosureResult base;
  base.data = closure_data(std::vector<int>(w.m, 1));
  std::vector<std::string> names;
  std::vector<int> degs;
  for (int j = 1; j <= w.m; ++j) {
    names.push_back("x" + std::to_string(j));
    degs.push_back(opt.unit);
  }
  RingPtr r = make_ring(names, degs);
  std::vector<Poly> images;
  for (auto& nm : s.b.ring->names) images.push_back(Poly::var(r, nm[0] == 'y' ? "x" + nm.substr(1) : nm));
  auto sub = [&](const Mat& m) { return m.map([&](const Poly& p) { return p.substitute(images, r); }); };
  MF t;
  t.ring = r;
  t.d = s.b.d;
  t.w = Poly(r);
  t.m0 = {r, s.b.m0.shifts};
  t.m1 = {r, s.b.m1.shifts};
  t.f = sub(s.b.f);
  t.g = sub(s.b.g);
  require_valid(t, "close_braid_excluded");
  t = reduce_mf(t);
  auto [lo, hi] = opt.window ? *opt.window : default_window(base.data, n, opt.unit);
  return run_window(base, lo, hi, opt, [&](ClosureResult& res) {
    auto fc = folded_cohomology(t, res.lo, res.hi);
    res.H0 = fc.H0;
    res.H1 = fc.H1;
  });
}

}  // namespace gmf
