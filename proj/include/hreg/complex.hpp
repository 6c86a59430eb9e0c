#ifndef HREG_COMPLEX_HPP
#define HREG_COMPLEX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hreg/hypergraph.hpp"

namespace hreg {

// Colored pattern against a host graph: s-bounded, exactly h vertices per
// part, every edge either invisible or carrying a local color bound to a host
// color of the same index set.  Invisibility is upward closed: a visible edge
// must have all its subedges visible.
//
// Edges live on the pattern's own vertex grid ([h] per part); colorings are
// flat arrays in the same lexicographic tuple order as Hypergraph.
class SimplicialComplex {
public:
  static constexpr int kInvisible = -1;

  SimplicialComplex() = default;
  SimplicialComplex(int r, int s, int h);

  int r() const { return r_; }
  int s() const { return s_; }
  int h() const { return h_; }

  const std::vector<IndexSet>& index_sets() const { return index_sets_; }
  int ordinal(IndexSet I) const;
  std::int64_t edge_count(int ord) const { return static_cast<std::int64_t>(local_[ord].size()); }

  // local color id at an edge, kInvisible if invisible
  int local_at(int ord, std::int64_t off) const { return local_[ord][off]; }
  void set_local(int ord, std::int64_t off, int local) { local_[ord][off] = local; }

  const std::vector<ColorId>& binding(int ord) const { return binding_[ord]; }
  void set_binding(int ord, std::vector<ColorId> hosts) { binding_[ord] = std::move(hosts); }

  bool visible(int ord, std::int64_t off) const { return local_[ord][off] != kInvisible; }
  // host color of a visible edge
  ColorId host_color(int ord, std::int64_t off) const { return binding_[ord][local_[ord][off]]; }

  std::int64_t offset_of(int ord, const std::vector<int>& verts) const;
  std::vector<int> tuple_of(int ord, std::int64_t off) const;

  // Sets a visible edge's color directly as a host color (identity binding
  // extended on demand).
  void set_host_color(int ord, std::int64_t off, ColorId host);

  std::string str() const;

private:
  int r_ = 0, s_ = 0, h_ = 0;
  std::vector<IndexSet> index_sets_;
  std::vector<int> ord_by_bits_;
  std::vector<std::vector<std::int64_t>> strides_;
  std::vector<std::vector<int>> local_;
  std::vector<std::vector<ColorId>> binding_;
};

// One edge of a complex with its index ordinal and tuple; enumeration helper.
struct PatternEdge {
  int ord = 0;
  std::int64_t off = 0;
  IndexSet index;
  std::vector<int> tuple;
};

// All visible edges, canonical index-set order then tuple order.  With
// max_size < s() this cuts off larger edges (e.g. everything below the top).
std::vector<PatternEdge> visible_edges(const SimplicialComplex& S, int max_size);
inline std::vector<PatternEdge> visible_edges(const SimplicialComplex& S) {
  return visible_edges(S, S.s());
}

// Host total color of a visible pattern edge: entries are the bound host
// colors of its subedges (closure makes them visible).
TotalColor pattern_total_color(const SimplicialComplex& S, const Hypergraph& G,
                               const PatternEdge& e);

struct ComplexViolation {
  std::string kind;  // "closure" | "binding" | "range" | "shape"
  std::string detail;
};

// Validation against a host: shape match, binding injective and in range,
// invisibility upward closed.  Empty result means valid.
std::vector<ComplexViolation> validate_complex(const SimplicialComplex& S, const Hypergraph& G);

// Pattern induced by a vertex assignment: all edges visible, colored by the
// host colors at the mapped tuples.  assign[i] lists h host vertices for part
// i (repeats allowed).
SimplicialComplex induced_complex(const Hypergraph& G, const std::vector<std::vector<int>>& assign,
                                  int s);

// Every complex over host colors (identity bindings) with the given s and h,
// upward-closed invisibility enforced.  Throws BudgetExceeded if more than
// `budget` complexes would be produced.
std::vector<SimplicialComplex> enumerate_complexes(const Hypergraph& G, int s, int h,
                                                   std::int64_t budget);

}  // namespace hreg

#endif
