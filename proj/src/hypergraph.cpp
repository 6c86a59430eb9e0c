#include "hreg/hypergraph.hpp"

#include <algorithm>

namespace hreg {

std::string TotalColor::str() const {
  std::string s = "{" + index.str() + ":";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries[i]);
  }
  return s + "}";
}

void Hypergraph::init_shape(int r, int k, std::vector<int> part_sizes) {
  if (r < 1 || r > 30) throw ValidationError("r must be in [1,30], got " + std::to_string(r));
  if (k < 1 || k > r) throw ValidationError("k must be in [1,r], got k=" + std::to_string(k));
  if (static_cast<int>(part_sizes.size()) != r)
    throw ValidationError("expected " + std::to_string(r) + " part sizes");
  for (int i = 0; i < r; ++i)
    if (part_sizes[i] < 1)
      throw ValidationError("part " + std::to_string(i) + " must be nonempty");
  r_ = r;
  k_ = k;
  part_sizes_ = std::move(part_sizes);
  index_sets_ = canonical_subsets(IndexSet::full(r), k);
  ord_by_bits_.assign(1u << r, -1);
  for (size_t i = 0; i < index_sets_.size(); ++i) ord_by_bits_[index_sets_[i].bits] = static_cast<int>(i);

  strides_.resize(index_sets_.size());
  projectors_.resize(index_sets_.size());
  for (size_t o = 0; o < index_sets_.size(); ++o) {
    auto members = index_sets_[o].members();
    int t = static_cast<int>(members.size());
    strides_[o].assign(t, 1);
    for (int pos = t - 2; pos >= 0; --pos)
      strides_[o][pos] = strides_[o][pos + 1] * part_sizes_[members[pos + 1]];
    for (const IndexSet& J : canonical_subsets(index_sets_[o], t)) {
      Projector p;
      p.sub_ord = ord_by_bits_[J.bits];
      auto sub_members = J.members();
      for (size_t sp = 0; sp < sub_members.size(); ++sp) {
        int pos = static_cast<int>(std::lower_bound(members.begin(), members.end(), sub_members[sp]) -
                                   members.begin());
        p.pos_stride.emplace_back(pos, strides_[p.sub_ord][sp]);
      }
      projectors_[o].push_back(std::move(p));
    }
  }
}

void Hypergraph::validate_tables() const {
  if (tables_.size() != index_sets_.size() || coloring_.size() != index_sets_.size())
    throw ValidationError("expected one table and one coloring per index set");
  for (size_t o = 0; o < index_sets_.size(); ++o) {
    const IndexSet& I = index_sets_[o];
    if (tables_[o].empty()) throw ValidationError("index set {" + I.str() + "}: empty color table");
    std::int64_t want = 1;
    for (int m : I.members()) want *= part_sizes_[m];
    if (static_cast<std::int64_t>(coloring_[o].size()) != want)
      throw ValidationError("index set {" + I.str() + "}: coloring has " +
                            std::to_string(coloring_[o].size()) + " entries, expected " +
                            std::to_string(want));
    int b = static_cast<int>(tables_[o].size());
    for (std::int64_t off = 0; off < want; ++off) {
      ColorId c = coloring_[o][off];
      if (c < 0 || c >= b) {
        auto tuple = tuple_of(static_cast<int>(o), off);
        std::string ts;
        for (size_t i = 0; i < tuple.size(); ++i) ts += (i ? "," : "") + std::to_string(tuple[i]);
        throw ValidationError("index set {" + I.str() + "}, tuple (" + ts + "): color id " +
                              std::to_string(c) + " out of range [0," + std::to_string(b) + ")");
      }
    }
  }
}

Hypergraph Hypergraph::raw(int r, int k, std::vector<int> part_sizes,
                           std::vector<std::vector<std::string>> tables,
                           std::vector<std::vector<ColorId>> colorings) {
  Hypergraph G;
  G.init_shape(r, k, std::move(part_sizes));
  G.tables_ = std::move(tables);
  G.coloring_ = std::move(colorings);
  G.validate_tables();
  return G;
}

Hypergraph Hypergraph::build(int r, int k, std::vector<int> part_sizes,
                             std::vector<std::vector<std::string>> tables,
                             std::vector<std::vector<ColorId>> colorings) {
  Hypergraph G = raw(r, k, std::move(part_sizes), std::move(tables), std::move(colorings));
  std::vector<int> b_by_size(k + 1, -1);
  for (size_t o = 0; o < G.index_sets_.size(); ++o) {
    int s = G.index_sets_[o].size();
    int b = G.table_size(static_cast<int>(o));
    if (b_by_size[s] == -1) b_by_size[s] = b;
    if (b_by_size[s] != b)
      throw ValidationError("index set {" + G.index_sets_[o].str() + "}: table size " +
                            std::to_string(b) + " differs from other size-" + std::to_string(s) +
                            " index sets (" + std::to_string(b_by_size[s]) + ")");
  }
  return G;
}

int Hypergraph::ordinal(IndexSet I) const {
  if (I.bits == 0 || I.bits >= ord_by_bits_.size()) return -1;
  return ord_by_bits_[I.bits];
}

int Hypergraph::max_colors(int size) const {
  int best = 0;
  for (size_t o = 0; o < index_sets_.size(); ++o)
    if (index_sets_[o].size() == size) best = std::max(best, table_size(static_cast<int>(o)));
  return best;
}

ColorId Hypergraph::color_of(const Edge& e) const {
  int o = ordinal(e.index);
  if (o < 0) throw ValidationError("edge index set {" + e.index.str() + "} not in graph");
  return coloring_[o][offset_of(o, e.verts)];
}

std::int64_t Hypergraph::offset_of(int ord, const std::vector<int>& verts) const {
  const auto& st = strides_[ord];
  if (verts.size() != st.size()) throw ValidationError("edge arity mismatch");
  std::int64_t off = 0;
  auto members = index_sets_[ord].members();
  for (size_t pos = 0; pos < st.size(); ++pos) {
    if (verts[pos] < 0 || verts[pos] >= part_sizes_[members[pos]])
      throw ValidationError("vertex " + std::to_string(verts[pos]) + " out of range in part " +
                            std::to_string(members[pos]));
    off += verts[pos] * st[pos];
  }
  return off;
}

std::vector<int> Hypergraph::tuple_of(int ord, std::int64_t off) const {
  const auto& st = strides_[ord];
  std::vector<int> tuple(st.size());
  for (size_t pos = 0; pos < st.size(); ++pos) {
    tuple[pos] = static_cast<int>(off / st[pos]);
    off %= st[pos];
  }
  return tuple;
}

std::int64_t Hypergraph::project_offset(int ord, const std::vector<int>& tuple, IndexSet J) const {
  const auto& projs = projectors_[ord];
  for (const auto& p : projs) {
    if (index_sets_[p.sub_ord] == J) {
      std::int64_t off = 0;
      for (const auto& [pos, stride] : p.pos_stride) off += tuple[pos] * stride;
      return off;
    }
  }
  throw ValidationError("subset {" + J.str() + "} not under this index set");
}

std::vector<ColorId> Hypergraph::total_entries_at(int ord, const std::vector<int>& tuple) const {
  const auto& projs = projectors_[ord];
  std::vector<ColorId> entries;
  entries.reserve(projs.size());
  for (const auto& p : projs) {
    std::int64_t off = 0;
    for (const auto& [pos, stride] : p.pos_stride) off += tuple[pos] * stride;
    entries.push_back(coloring_[p.sub_ord][off]);
  }
  return entries;
}

Edge restrict_edge(const Edge& e, IndexSet J) {
  if (!J.subset_of(e.index) || J.empty())
    throw ValidationError("restriction target must be a nonempty subset of the edge's index set");
  auto members = e.index.members();
  Edge out;
  out.index = J;
  for (size_t pos = 0; pos < members.size(); ++pos)
    if (J.contains(members[pos])) out.verts.push_back(e.verts[pos]);
  return out;
}

TotalColor total_color(const Hypergraph& G, const Edge& e) {
  int o = G.ordinal(e.index);
  if (o < 0) throw ValidationError("edge index set {" + e.index.str() + "} not in graph");
  G.offset_of(o, e.verts);  // range validation
  return total_color_at(G, o, e.verts);
}

TotalColor total_color_at(const Hypergraph& G, int ord, const std::vector<int>& tuple) {
  TotalColor c;
  c.index = G.index_sets()[ord];
  c.entries = G.total_entries_at(ord, tuple);
  return c;
}

TotalColor restrict_total_color(const TotalColor& c, IndexSet J) {
  if (!J.subset_of(c.index) || J.empty())
    throw ValidationError("restriction target must be a nonempty subset of the color's index set");
  auto subs = canonical_subsets(c.index, c.index.size());
  auto keep = canonical_subsets(J, J.size());
  TotalColor out;
  out.index = J;
  for (const IndexSet& s : keep) {
    auto it = std::find(subs.begin(), subs.end(), s);
    out.entries.push_back(c.entries[it - subs.begin()]);
  }
  return out;
}

std::map<TotalColor, std::int64_t> total_color_census(const Hypergraph& G, int ord) {
  std::map<TotalColor, std::int64_t> census;
  for_each_edge(G, ord, [&](std::int64_t, const std::vector<int>& tuple) {
    TotalColor c;
    c.index = G.index_sets()[ord];
    c.entries = G.total_entries_at(ord, tuple);
    ++census[c];
  });
  return census;
}

std::vector<int> frame_class_labels(const Hypergraph& G, int ord, int* n_classes) {
  std::int64_t n = G.edge_count(ord);
  std::vector<int> labels(n);
  std::map<std::vector<ColorId>, int> seen;
  for_each_edge(G, ord, [&](std::int64_t off, const std::vector<int>& tuple) {
    auto entries = G.total_entries_at(ord, tuple);
    entries.pop_back();  // drop the full set: frame only
    auto [it, fresh] = seen.emplace(std::move(entries), static_cast<int>(seen.size()));
    labels[off] = it->second;
  });
  if (n_classes) *n_classes = static_cast<int>(seen.size());
  return labels;
}

std::vector<int> canonical_class_labels(const std::vector<ColorId>& coloring) {
  std::vector<int> labels(coloring.size());
  std::map<ColorId, int> relabel;
  for (size_t i = 0; i < coloring.size(); ++i) {
    auto [it, fresh] = relabel.emplace(coloring[i], static_cast<int>(relabel.size()));
    labels[i] = it->second;
  }
  return labels;
}

bool partition_refines(const std::vector<int>& fine, const std::vector<int>& coarse) {
  if (fine.size() != coarse.size()) return false;
  std::map<int, int> image;
  for (size_t i = 0; i < fine.size(); ++i) {
    auto [it, fresh] = image.emplace(fine[i], coarse[i]);
    if (!fresh && it->second != coarse[i]) return false;
  }
  return true;
}

Hypergraph random_hypergraph(int r, int k, const std::vector<int>& part_sizes,
                             const std::vector<int>& b, Rng& rng) {
  if (static_cast<int>(b.size()) != k) throw ValidationError("need one color count per size 1..k");
  auto sets = canonical_subsets(IndexSet::full(r), k);
  std::vector<std::vector<std::string>> tables;
  std::vector<std::vector<ColorId>> colorings;
  for (const IndexSet& I : sets) {
    int bs = b[I.size() - 1];
    if (bs < 1) throw ValidationError("color counts must be >= 1");
    std::vector<std::string> names;
    for (int c = 0; c < bs; ++c) names.push_back("c" + std::to_string(c));
    std::int64_t n = 1;
    for (int m : I.members()) n *= part_sizes[m];
    std::vector<ColorId> col(n);
    for (std::int64_t off = 0; off < n; ++off) col[off] = rng.uniform_int(bs);
    tables.push_back(std::move(names));
    colorings.push_back(std::move(col));
  }
  return Hypergraph::build(r, k, part_sizes, std::move(tables), std::move(colorings));
}

}  // namespace hreg
