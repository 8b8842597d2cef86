#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "linalg.hpp"
#include "numeric.hpp"
#include "partitions.hpp"
#include "type_b.hpp"
#include "type_d.hpp"

namespace weylsig {

// Simple roots are numbered 1..rank throughout this module.
struct CoxeterData {
  int rank = 0;
  std::vector<std::vector<int>> m;  // m[i][j] = order of s_{i+1} s_{j+1}
  char family = 0;                  // 'A', 'B', 'D', 'G', 'F'; 0 if unnamed

  static CoxeterData from_matrix(std::vector<std::vector<int>> m);
  // "A3", "B3" (or "C3"), "D4", "G2", "F4". Bourbaki numbering.
  static CoxeterData parse(const std::string& type);

  bool classical() const { return family == 'A' || family == 'B' || family == 'D'; }
  std::string name() const;
  // Integer Cartan matrix a[i][j] = <alpha_j, alpha_i^vee> realizing m.
  std::vector<std::vector<int>> cartan() const;
};

using RootSet = std::set<int>;

struct WeakWGraph {
  std::vector<int> ids;  // printed names of the vertices
  std::vector<RootSet> tau;
  std::map<std::pair<int, int>, Rational> m;  // (u, v) -> m(u, v); absent means 0

  int size() const { return static_cast<int>(tau.size()); }
  Rational edge(int u, int v) const;
};

struct TauSignature {
  std::set<RootSet> subsets;
  auto operator<=>(const TauSignature&) const = default;
};

// V = simple roots, tau(alpha) = {alpha}, m = Cartan entries.
WeakWGraph coxeter_graph(const CoxeterData& cox);

RatMatrix simple_reflection_matrix(const WeakWGraph& g, int alpha);

struct Validation {
  bool ok = true;
  std::string violation;
};
Validation validate(const WeakWGraph& g, const CoxeterData& cox);

struct VertexPartition {
  std::vector<int> minus, zero, plus;
};
// A vertex with A ⊆ tau(v) goes to minus even when A is empty.
VertexPartition vertex_partition(const WeakWGraph& g, const RootSet& A);

// Averages over W(A) of g and of sign(g) g.
RatMatrix projector_Q(const WeakWGraph& g, const CoxeterData& cox, const RootSet& A);
RatMatrix projector_R(const WeakWGraph& g, const CoxeterData& cox, const RootSet& A);

struct TauRealization {
  int count = 0;       // #{v : tau(v) = A}
  int rank = 0;        // rank of Q(Δ−A) R(A); always equals count
  Rational trace = 0;  // trace of Q(Δ−A) R(A); generally not count
};
TauRealization tau_subset_realized(const WeakWGraph& g, const CoxeterData& cox, const RootSet& A);

TauSignature tau_signature(const WeakWGraph& g);

struct WCellFile {
  std::vector<WeakWGraph> cells;
  std::vector<std::vector<int>> induced;  // induced[i]: cells reached from cell i
};

struct ParseError : DomainError {
  ParseError(int line, const std::string& what);
  int line;
};

// Vertex lines: `<local>[<global>]: {<roots>}` then optionally ` --> <targets>`.
// A target may carry an edge label as `t(k)`; unlabeled arrows have m = 1.
WCellFile parse_wcell(const std::string& text);

using ClassicalLabel = std::variant<Partition, IrrepB, IrrepD>;
std::string label_text(const ClassicalLabel& label);

// The irreducible whose sign signature support is every A contained in some
// tau(v) of the cell. Classical types only.
ClassicalLabel identify_special(const TauSignature& sig, const CoxeterData& cox);

// All subsets of roots in 1..rank, ordered by size then lexicographically.
std::vector<RootSet> all_subsets(int rank);
std::string to_string(const RootSet& s);
std::string to_string(const TauSignature& s);

}  // namespace weylsig
