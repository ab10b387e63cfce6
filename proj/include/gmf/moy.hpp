#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gmf/mf.hpp"

namespace gmf {

// Edges are oriented from the bottom alphabets (tails) to the top ones (heads).
struct MOYEdge {
  std::string tail, head;
  int weight = 1;
  std::vector<std::string> marks;  // marked points from tail to head
};

struct MOYGraph {
  std::vector<std::string> vertices;                       // inner vertices
  std::vector<std::pair<std::string, std::string>> outer;  // (vertex, alphabet)
  std::vector<MOYEdge> edges;
};

struct GraphError : std::invalid_argument {
  std::vector<std::string> problems;
  explicit GraphError(std::vector<std::string> p);
};
struct CyclicGraphError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Line format: "vertex v", "outer v mark Y", "edge a -> b weight k mark X [Z ...]";
// '#' starts a comment. Throws GraphError listing every violated rule.
MOYGraph parse_graph(const std::string& text);
Report validate_graph(const MOYGraph& g);
std::string graph_to_string(const MOYGraph& g);

// Generators of Sym of an alphabet: the name itself for size 1, name_1..name_k otherwise.
std::vector<std::string> alphabet_generators(const std::string& name, int size);

enum class BlockKind { strand, splitter, merger, vertex };
std::string to_string(BlockKind k);

// Gamma^{m_1..m_k}_{n_1..n_l}: in = Y (bottom, weights n), out = X (top, weights m).
struct BuildingBlock {
  BlockKind kind = BlockKind::strand;
  std::vector<std::string> in, out;
  std::vector<int> in_weights, out_weights;
  int shift = 0;  // r = sum_{i<j} m_i m_j; 0 for strands
  std::string origin;
};

struct Decomposition {
  std::vector<BuildingBlock> blocks;  // topological order, bottom first
  std::map<std::string, int> sizes;
  std::vector<std::string> sources, sinks;  // outer alphabets at tails / heads
  std::map<std::string, std::vector<size_t>> incidence;
};
// Throws CyclicGraphError on an oriented cycle, GraphError on an invalid graph.
Decomposition decompose_to_blocks(const MOYGraph& g);

// A factorization tensor_i {a_i, b_i}<shift> over A = R[u_1..u_t]/(p_1..p_t),
// where R is generated by the free alphabets and each p_j is monic in u_j with
// coefficients in R[u_1..u_{j-1}]. A is free over R on the monomials u^e with
// e_j < deg p_j.
struct CompiledMF {
  RingPtr ring;  // free generators and tower variables
  int n = 2, unit = 2;
  std::vector<Poly> a, b;
  std::vector<int> a_deg;
  int shift = 0;
  std::vector<std::string> top, bottom;  // free alphabets, potential sum P(top) - sum P(bottom)
  std::map<std::string, int> sizes;
  std::vector<std::string> tower;
  std::vector<Poly> tower_rel;
};

CompiledMF compile_block_data(const BuildingBlock& b, int n, int unit = 2);
// stabilization of Sym(X|Y)/(X_i - Y_i)<r>: tensor_i {X_i - Y_i, *_i}<r>
MF compile_block(const BuildingBlock& b, int n, int unit = 2);

// Tensor over Sym of the shared alphabets, then exclusion of their generators:
// first by linear pivots (substitution), then by monic pivots (quotient tower).
// An empty list gives the external tensor product. Throws std::invalid_argument
// when a listed alphabet is not shared with opposite orientations, and
// std::runtime_error when the generators cannot be excluded.
CompiledMF glue(const CompiledMF& a, const CompiledMF& b, const std::vector<std::string>& shared);

// Normal form modulo the quotient tower.
Poly tower_normal_form(const CompiledMF& c, const Poly& p);
// Expand into a matrix factorization over the free generators. The ring lists
// the given alphabets first (default: top then bottom), each by its generators.
MF to_mf(const CompiledMF& c, const std::vector<std::string>& alphabet_order = {});
Poly graph_potential(const RingPtr& ring, const std::vector<std::string>& top, const std::vector<std::string>& bottom,
                     const std::map<std::string, int>& sizes, int n);

// Fold of glue over the blocks in order; the ring lists the outer alphabets in
// declaration order.
CompiledMF compile_graph_data(const MOYGraph& g, int n, int unit = 2);
MF compile_graph(const MOYGraph& g, int n, int unit = 2);

struct BraidWord {
  int m = 0;
  std::vector<int> letters;  // s_i, 1 <= i <= m-1, read top to bottom
};
BraidWord parse_braid(const std::string& text);  // "m=3: s1 s2 s1"
std::string braid_to_string(const BraidWord& w);
// Top endpoints x1..xm, bottom y1..ym, fresh weight-1 alphabets c<level>_<strand>
// between letters and a weight-2 alphabet w<p> on the wide edge of letter p.
MOYGraph braid_to_graph(const BraidWord& w);

struct ClosureData {
  std::vector<int> labels;
  int N = 0, k = 0;
};
ClosureData closure_data(const std::vector<int>& labels);

struct ClosureOptions {
  std::optional<std::pair<int, int>> window;  // fixed window, no extension
  int unit = 1;
  int max_extensions = 4;
};

struct ClosureResult {
  PoincareSeries H0, H1;
  ClosureData data;
  int lo = 0, hi = 0;
  bool certified = false;  // three empty degrees at both ends of the window
};

// Id stabilized on pairs (top X_j, bottom Y_j) of the compiled factorization.
MF identity_stabilization(const RingPtr& ring, const std::vector<std::pair<std::string, std::string>>& strands,
                          const std::map<std::string, int>& sizes, int n, bool reversed);

// H^l = HMF(Id<k>[l-N], B) with Id stabilized for sum P(X) - sum P(Y).
ClosureResult close_graph(const MF& b, const std::vector<std::pair<std::string, std::string>>& strands,
                          const std::map<std::string, int>& sizes, int n, const ClosureOptions& opt = {});
ClosureResult close_braid(const BraidWord& w, int n, const ClosureOptions& opt = {});
// Cohomology of Id stabilized for sum P(Y) - sum P(X), tensored with B.
ClosureResult close_braid_direct(const BraidWord& w, int n, const ClosureOptions& opt = {});
// Same complex after excluding each y_j through its Koszul factor {y_j - x_j, *}:
// B with y_j := x_j, over x_1..x_m only.
ClosureResult close_braid_excluded(const BraidWord& w, int n, const ClosureOptions& opt = {});

}  // namespace gmf
