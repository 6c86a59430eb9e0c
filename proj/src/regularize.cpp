#include "hreg/regularize.hpp"

#include <algorithm>
#include <map>

namespace hreg {

namespace {

// Per-ordinal recoloring at level s: computes the trace of every edge of the
// ordinal and interns trace classes in first-occurrence order.
struct OrdinalRecolor {
  std::vector<ColorId> coloring;
  int classes = 0;
};

OrdinalRecolor recolor_ordinal(const Hypergraph& G, int s, const PartitionwiseMap& phi, int ord,
                               KernelMode mode) {
  const IndexSet I = G.index_sets()[ord];
  const auto members = I.members();
  const int arity = static_cast<int>(members.size());

  // Component blocks: J = {} first (old color), then nonempty J subsets of
  // the complement with |J| <= s+1-|I|, canonical order.
  struct Block {
    int u_ord;                                  // ordinal of I u J
    std::vector<std::int64_t> stride_of_I_pos;  // contribution of the edge tuple
    std::vector<int> f_parts;                   // J's members ascending
    std::vector<std::int64_t> f_strides;        // stride in I u J per J member
    std::vector<int> f_counts;                  // samples available per J member
    std::int64_t f_total = 1;
  };
  std::vector<Block> blocks;
  IndexSet complement = IndexSet::full(G.r()).minus(I);
  std::int64_t trace_len = 1;  // the {} component
  if (!complement.empty()) {
    for (const IndexSet& J : canonical_subsets(complement, s + 1 - arity)) {
      Block b;
      IndexSet U = I.unite(J);
      b.u_ord = G.ordinal(U);
      auto u_members = U.members();
      auto u_strides = [&] {
        std::vector<std::int64_t> st(u_members.size(), 1);
        for (int pos = static_cast<int>(u_members.size()) - 2; pos >= 0; --pos)
          st[pos] = st[pos + 1] * G.part_sizes()[u_members[pos + 1]];
        return st;
      }();
      b.stride_of_I_pos.resize(arity);
      for (int pos = 0; pos < arity; ++pos) {
        int upos = static_cast<int>(std::lower_bound(u_members.begin(), u_members.end(),
                                                     members[pos]) -
                                    u_members.begin());
        b.stride_of_I_pos[pos] = u_strides[upos];
      }
      for (int j : J.members()) {
        int upos = static_cast<int>(std::lower_bound(u_members.begin(), u_members.end(), j) -
                                    u_members.begin());
        b.f_parts.push_back(j);
        b.f_strides.push_back(u_strides[upos]);
        b.f_counts.push_back(static_cast<int>(phi.samples[j].size()));
        b.f_total *= phi.samples[j].size();
      }
      if (b.f_total == 0) continue;  // no sampled vertices in some part of J
      trace_len += b.f_total;
      blocks.push_back(std::move(b));
    }
  }

  const std::int64_t n = G.edge_count(ord);
  std::vector<ColorId> traces(static_cast<size_t>(n) * trace_len);

  for_each_stripe(n, mode, [&](int, std::int64_t begin, std::int64_t end) {
    std::vector<int> tuple = G.tuple_of(ord, begin);
    for (std::int64_t off = begin; off < end; ++off) {
      ColorId* t = traces.data() + off * trace_len;
      *t++ = G.color_at(ord, off);
      for (const Block& b : blocks) {
        std::int64_t base = 0;
        for (int pos = 0; pos < arity; ++pos) base += tuple[pos] * b.stride_of_I_pos[pos];
        int fa = static_cast<int>(b.f_parts.size());
        std::vector<int> p(fa, 0);
        for (std::int64_t c = 0; c < b.f_total; ++c) {
          std::int64_t u_off = base;
          for (int j = 0; j < fa; ++j) u_off += phi.samples[b.f_parts[j]][p[j]] * b.f_strides[j];
          *t++ = G.color_at(b.u_ord, u_off);
          for (int j = fa - 1; j >= 0; --j) {
            if (++p[j] < b.f_counts[j]) break;
            p[j] = 0;
          }
        }
      }
      // advance the edge tuple
      for (int pos = arity - 1; pos >= 0; --pos) {
        if (++tuple[pos] < G.part_sizes()[members[pos]]) break;
        tuple[pos] = 0;
      }
    }
  });

  OrdinalRecolor out;
  out.coloring.resize(n);
  std::map<std::vector<ColorId>, ColorId> intern;
  std::vector<ColorId> key(trace_len);
  for (std::int64_t off = 0; off < n; ++off) {
    key.assign(traces.begin() + off * trace_len, traces.begin() + (off + 1) * trace_len);
    auto [it, fresh] = intern.emplace(key, static_cast<ColorId>(intern.size()));
    out.coloring[off] = it->second;
  }
  out.classes = static_cast<int>(intern.size());
  return out;
}

}  // namespace

Hypergraph s_regularize(const Hypergraph& G, int s, const PartitionwiseMap& phi, KernelMode mode) {
  if (s < 1 || s > G.k() - 1)
    throw ValidationError("regularization level must be in [1,k-1], got " + std::to_string(s));
  if (phi.parts() != G.r()) throw ValidationError("map has wrong number of parts");
  for (int i = 0; i < G.r(); ++i)
    for (int v : phi.samples[i])
      if (v < 0 || v >= G.part_sizes()[i])
        throw ValidationError("sampled vertex " + std::to_string(v) + " out of range in part " +
                              std::to_string(i));

  std::vector<std::vector<std::string>> tables;
  std::vector<std::vector<ColorId>> colorings;
  for (size_t o = 0; o < G.index_sets().size(); ++o) {
    if (G.index_sets()[o].size() > s) {
      tables.push_back(G.table(static_cast<int>(o)));
      colorings.push_back(G.coloring(static_cast<int>(o)));
      continue;
    }
    OrdinalRecolor rec = recolor_ordinal(G, s, phi, static_cast<int>(o), mode);
    std::vector<std::string> names;
    names.reserve(rec.classes);
    for (int c = 0; c < rec.classes; ++c) names.push_back("t" + std::to_string(c));
    tables.push_back(std::move(names));
    colorings.push_back(std::move(rec.coloring));
  }
  return Hypergraph::raw(G.r(), G.k(), G.part_sizes(), std::move(tables), std::move(colorings));
}

Hypergraph regularize(const Hypergraph& G, const std::vector<PartitionwiseMap>& phis,
                      KernelMode mode) {
  if (static_cast<int>(phis.size()) != G.k() - 1)
    throw ValidationError("need k-1 maps, one per level 1..k-1");
  Hypergraph out = G;
  for (int s = G.k() - 1; s >= 1; --s) out = s_regularize(out, s, phis[s - 1], mode);
  return out;
}

BigInt color_bound(int r, const std::vector<BigInt>& b, const BigInt& m, int i,
                   std::int64_t max_bits) {
  int k = static_cast<int>(b.size());
  if (i < 1 || i > k) throw ValidationError("color bound: size out of range");
  BigInt out = 1;
  for (int j = 0; j <= k - i; ++j) {
    if (b[i + j - 1] == 1) continue;
    BigInt exp = binomial(r - i, j) * boost::multiprecision::pow(m, j);
    if (exp == 0) continue;
    std::int64_t base_bits = static_cast<std::int64_t>(msb(b[i + j - 1])) + 1;
    if (exp > max_bits)
      throw BudgetExceeded("color bound would exceed " + std::to_string(max_bits) + " bits");
    std::int64_t e = exp.convert_to<std::int64_t>();
    if (e * base_bits > max_bits)
      throw BudgetExceeded("color bound would exceed " + std::to_string(max_bits) + " bits");
    out *= boost::multiprecision::pow(b[i + j - 1], static_cast<unsigned>(e));
  }
  return out;
}

std::vector<int> color_classes(const Hypergraph& G, IndexSet I) {
  int o = G.ordinal(I);
  if (o < 0) throw ValidationError("index set {" + I.str() + "} not in graph");
  return canonical_class_labels(G.coloring(o));
}

std::vector<int> regularized_frame_labels(const Hypergraph& G, int ord, const PartitionwiseMap& phi,
                                          int* n_classes, KernelMode mode) {
  const IndexSet I = G.index_sets()[ord];
  if (G.k() < 2) throw ValidationError("frame labels need k >= 2");
  auto proper = canonical_proper_subsets(I);
  std::map<std::uint32_t, OrdinalRecolor> recolored;
  for (const IndexSet& J : proper)
    recolored.emplace(J.bits, recolor_ordinal(G, G.k() - 1, phi, G.ordinal(J), mode));

  std::int64_t n = G.edge_count(ord);
  std::vector<int> labels(n);
  std::map<std::vector<ColorId>, int> seen;
  for_each_edge(G, ord, [&](std::int64_t off, const std::vector<int>& tuple) {
    std::vector<ColorId> frame;
    frame.reserve(proper.size());
    for (const IndexSet& J : proper)
      frame.push_back(recolored.at(J.bits).coloring[G.project_offset(ord, tuple, J)]);
    auto [it, fresh] = seen.emplace(std::move(frame), static_cast<int>(seen.size()));
    labels[off] = it->second;
  });
  if (n_classes) *n_classes = static_cast<int>(seen.size());
  return labels;
}

}  // namespace hreg
