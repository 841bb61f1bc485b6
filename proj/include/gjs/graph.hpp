#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gjs/scalar.hpp"

namespace gjs {

// Input-format or invariant failure while loading a graph file. line = 0
// means the problem concerns the file as a whole.
struct graph_error : std::runtime_error {
  graph_error(const std::string& what, int line_, int column_)
      : std::runtime_error(what), line(line_), column(column_) {}
  int line = 0;
  int column = 0;
};

// A pointed weighted multigraph: vertices with optional weights, undirected
// edges with multiplicities (loops allowed), a base vertex, and a modulus.
// Weights can be exact (rational functions of d) and/or numeric; a vertex at
// a truncation boundary is flagged provisional.
class WeightedGraph {
 public:
  struct Vertex {
    std::string name;
    std::optional<Scalar> weight_sym;
    std::optional<double> weight_num;
    bool provisional = false;
  };
  struct Edge {
    int a = 0, b = 0, mult = 1;
  };

  // Line-oriented format: `star NAME`, `vertex NAME [WEIGHT]`,
  // `edge A B [MULT]`, `delta generic|NUMBER|cos:M`, `#` comments.
  static WeightedGraph parse_text(const std::string& text);
  static WeightedGraph parse_file(const std::string& path);
  std::string format() const;

  int add_vertex(const std::string& name);
  void add_edge(int a, int b, int mult = 1);
  void set_star(int v) { star_ = v; }
  void set_delta(const DeltaSpec& d) { delta_ = d; }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const Vertex& vertex(int i) const { return vertices_.at(i); }
  Vertex& vertex(int i) { return vertices_.at(i); }
  int find_vertex(const std::string& name) const;  // -1 when absent
  int star() const { return star_; }
  const DeltaSpec& delta() const { return delta_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Total multiplicity between a and b (loops reported once).
  int multiplicity(int a, int b) const;
  bool connected() const;
  // Numeric modulus value; nullopt for a generic DeltaSpec.
  std::optional<double> delta_value() const;
  bool all_weights_symbolic() const;
  bool all_weights_numeric() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, int> index_;
  int star_ = -1;
  DeltaSpec delta_ = DeltaSpec::generic();
};

// Directed double of the graph: each non-loop edge copy becomes a pair of
// opposite edges swapped by `op`; each loop copy one op-fixed self-edge.
struct DirectedGraph {
  struct Edge {
    int source = 0, target = 0;
    int op = 0;  // index of the op-partner edge
  };
  int vertex_count = 0;
  std::vector<Edge> edges;
};
DirectedGraph build_directed(const WeightedGraph& g);

// BFS distances from the base vertex; -1 never occurs (graph connected).
std::vector<int> vertex_depths(const WeightedGraph& g);
int graph_depth(const WeightedGraph& g);

// -------- Frobenius-Perron weights --------

struct FPReport {
  bool ok = false;
  bool exact = false;          // exact verification (symbolic weights)
  double max_residual = 0.0;   // numeric mode
  std::vector<std::string> notes;
};

// Computes the Perron weights normalized to the base vertex and installs
// them (and the Perron modulus) on a copy of the graph. Star-ended simple
// paths are solved exactly with quantum-integer weights; everything else
// numerically.
WeightedGraph fp_solve(const WeightedGraph& g);

// Checks sum_{b ~ a} mult(a,b) mu(b) = delta mu(a) at every vertex, exactly
// when the weights are symbolic and the modulus is generic or a root case,
// else numerically within tol. Provisional vertices are skipped with a note.
FPReport fp_verify(const WeightedGraph& g, double tol = 1e-9);

// -------- K-theory classes --------

// Formal integer combination of vertex projections, keyed by vertex index.
using K0Class = std::map<int, long long>;

// Class of the identity 1_k: coefficient of p_a = number of length-k walks
// from the base vertex to a.
K0Class identity_class(const WeightedGraph& g, int k);

std::string format_class(const WeightedGraph& g, const K0Class& x);
// `NAME:COEFF,NAME:COEFF` (exit-2-style graph_error on unknown names).
K0Class parse_class(const WeightedGraph& g, const std::string& text);

struct TraceValue {
  std::optional<Scalar> sym;  // present when all needed weights are exact
  std::optional<double> num;  // present when the modulus has a value
  std::string str() const;
};
TraceValue class_trace(const WeightedGraph& g, const K0Class& x);

struct ScaleVerdict {
  bool positive = false;
  bool in_scale = false;
  TraceValue trace;
  std::string note;  // comparison against the base projection
};
ScaleVerdict cone_scale_verdict(const WeightedGraph& g, const K0Class& x,
                                double tol = 1e-9);

struct ProjectionlessVerdict {
  bool projectionless = false;
  bool dense_scale = false;
  std::string note;
};
ProjectionlessVerdict projectionless_verdict(const WeightedGraph& g,
                                             double tol = 1e-9);

// Minimal natural number strictly greater than delta^2 (exact at the integer
// root cases, numeric otherwise). Requires a modulus with a value > 1.
long pp_bound(const DeltaSpec& delta, double tol = 1e-9);

// Depth-2 K-theoretic obstruction report ([1_2] vs delta^2 [1_0]).
std::string crossed_product_obstruction(const WeightedGraph& g,
                                        double tol = 1e-9);

// -------- Simplicity trichotomy --------

struct SimplicityReport {
  int case_id = 0;  // 1, 2, 3, or 0 when outside the trichotomy
  std::string theorem;  // SimpleTrace1 / SimpleTrace2 / none
  std::vector<std::string> lines;
};
SimplicityReport simplicity_report(const WeightedGraph& g);

// -------- Building-block classification --------

struct BlockDescriptor {
  WeightedGraph::Edge edge;
  enum class Kind { Loop, UnequalWeights, EqualWeights } kind;
  std::string describe(const WeightedGraph& g) const;
};
std::vector<BlockDescriptor> block_descriptors(const WeightedGraph& g,
                                               double tol = 1e-9);

// -------- TL principal graphs --------

// Root case cos:m -> the chain with m-1 vertices; modulus >= 2 -> the chain
// truncated after `cutoff` edges with the last vertex provisional. Numeric
// moduli in (1,2) must match some 2cos(pi/m) within tol.
WeightedGraph tl_principal_graph(const DeltaSpec& delta, int cutoff,
                                 double tol = 1e-9);

}  // namespace gjs
