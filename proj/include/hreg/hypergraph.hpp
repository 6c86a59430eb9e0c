#ifndef HREG_HYPERGRAPH_HPP
#define HREG_HYPERGRAPH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hreg/errors.hpp"
#include "hreg/index_set.hpp"
#include "hreg/rng.hpp"

namespace hreg {

using ColorId = std::int32_t;

// Edge of index set I: one vertex per part of I, listed by ascending part.
// Vertices are 0-based within their part.
struct Edge {
  IndexSet index;
  std::vector<int> verts;
};

// Colors of every nonempty subedge of one edge, in canonical subset order;
// the full index set is the last entry.  Dropping the last entry gives the
// frame (the boundary colors).
struct TotalColor {
  IndexSet index;
  std::vector<ColorId> entries;

  ColorId top() const { return entries.back(); }
  std::vector<ColorId> frame() const { return {entries.begin(), entries.end() - 1}; }

  bool operator==(const TotalColor& o) const { return index == o.index && entries == o.entries; }
  bool operator<(const TotalColor& o) const {
    if (index != o.index) return canonical_less(index, o.index);
    return entries < o.entries;
  }
  std::string str() const;
};

// k-bounded r-partite colored hypergraph with dense storage: every edge of
// every index set of size <= k carries a color id into that index set's
// table.  Colorings are flat arrays over vertex tuples in lexicographic
// order (first listed part most significant).
//
// Validated construction (build) additionally requires same-size index sets
// to have equally sized tables; regularization outputs intern only realized
// trace classes and may be ragged, which max_colors() reports per size.
class Hypergraph {
public:
  Hypergraph() = default;

  static Hypergraph build(int r, int k, std::vector<int> part_sizes,
                          std::vector<std::vector<std::string>> tables,
                          std::vector<std::vector<ColorId>> colorings);

  // No b-uniformity check; table/coloring shapes are still validated.
  static Hypergraph raw(int r, int k, std::vector<int> part_sizes,
                        std::vector<std::vector<std::string>> tables,
                        std::vector<std::vector<ColorId>> colorings);

  int r() const { return r_; }
  int k() const { return k_; }
  const std::vector<int>& part_sizes() const { return part_sizes_; }

  // All index sets of size 1..k over [0, r), canonical order.
  const std::vector<IndexSet>& index_sets() const { return index_sets_; }
  int ordinal(IndexSet I) const;

  std::int64_t edge_count(int ord) const { return static_cast<std::int64_t>(coloring_[ord].size()); }
  const std::vector<ColorId>& coloring(int ord) const { return coloring_[ord]; }
  const std::vector<std::string>& table(int ord) const { return tables_[ord]; }
  int table_size(int ord) const { return static_cast<int>(tables_[ord].size()); }

  // max over index sets of that size of the table size (c_s of the graph).
  int max_colors(int size) const;

  ColorId color_at(int ord, std::int64_t off) const { return coloring_[ord][off]; }
  ColorId color_of(const Edge& e) const;

  // Per member position, most significant first; last position has stride 1.
  const std::vector<std::int64_t>& strides(int ord) const { return strides_[ord]; }

  std::int64_t offset_of(int ord, const std::vector<int>& verts) const;
  std::vector<int> tuple_of(int ord, std::int64_t off) const;

  // Offset of the subedge tuple|_J inside ordinal of J; J must be a subset of
  // the index set of `ord`.
  std::int64_t project_offset(int ord, const std::vector<int>& tuple, IndexSet J) const;

  // Entries over all nonempty subsets of the index set of `ord`, canonical
  // order (the total color of the edge at `tuple`).
  std::vector<ColorId> total_entries_at(int ord, const std::vector<int>& tuple) const;

  void set_color(int ord, std::int64_t off, ColorId c) { coloring_[ord][off] = c; }

private:
  void init_shape(int r, int k, std::vector<int> part_sizes);
  void validate_tables() const;

  int r_ = 0, k_ = 0;
  std::vector<int> part_sizes_;
  std::vector<IndexSet> index_sets_;
  std::vector<int> ord_by_bits_;                    // bits -> ordinal, -1 absent
  std::vector<std::vector<std::int64_t>> strides_;  // per ordinal, per member position
  std::vector<std::vector<std::string>> tables_;
  std::vector<std::vector<ColorId>> coloring_;
  // per ordinal, per canonical nonempty subset: (subset ordinal, per-position
  // (position in parent tuple, stride in subset tuple))
  struct Projector {
    int sub_ord;
    std::vector<std::pair<int, std::int64_t>> pos_stride;
  };
  std::vector<std::vector<Projector>> projectors_;
};

Edge restrict_edge(const Edge& e, IndexSet J);

TotalColor total_color(const Hypergraph& G, const Edge& e);
TotalColor total_color_at(const Hypergraph& G, int ord, const std::vector<int>& tuple);

// Sub-total-color over J <= c.index: entries of c at subsets of J.
TotalColor restrict_total_color(const TotalColor& c, IndexSet J);

// Deterministic scan of all edges of one index set in lexicographic tuple
// order; fn(offset, tuple).
template <typename Fn>
void for_each_edge(const Hypergraph& G, int ord, Fn&& fn) {
  std::int64_t n = G.edge_count(ord);
  auto members = G.index_sets()[ord].members();
  std::vector<int> tuple(members.size(), 0);
  for (std::int64_t off = 0; off < n; ++off) {
    fn(off, tuple);
    for (int pos = static_cast<int>(members.size()) - 1; pos >= 0; --pos) {
      if (++tuple[pos] < G.part_sizes()[members[pos]]) break;
      tuple[pos] = 0;
    }
  }
}

// Realized total colors of one index set with their edge counts.
std::map<TotalColor, std::int64_t> total_color_census(const Hypergraph& G, int ord);

// Labels edges of ordinal `ord` by their frame (proper-subset colors); edges
// of size 1 all share label 0.  Returns labels and sets n_classes.
std::vector<int> frame_class_labels(const Hypergraph& G, int ord, int* n_classes);

// Class labels of the coloring itself, relabeled by first occurrence, so two
// colorings induce the same partition iff these vectors are equal.
std::vector<int> canonical_class_labels(const std::vector<ColorId>& coloring);

// True iff every fine class is contained in one coarse class.
bool partition_refines(const std::vector<int>& fine, const std::vector<int>& coarse);

// Uniform iid coloring; b[s-1] colors ("c0","c1",...) for every index set of
// size s.  Deterministic in rng.
Hypergraph random_hypergraph(int r, int k, const std::vector<int>& part_sizes,
                             const std::vector<int>& b, Rng& rng);

}  // namespace hreg

#endif
