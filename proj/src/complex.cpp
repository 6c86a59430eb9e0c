#include "hreg/complex.hpp"

#include <algorithm>

namespace hreg {

SimplicialComplex::SimplicialComplex(int r, int s, int h) : r_(r), s_(s), h_(h) {
  if (r < 1 || r > 30) throw ValidationError("complex: r must be in [1,30]");
  if (s < 1 || s > r) throw ValidationError("complex: s must be in [1,r]");
  if (h < 1) throw ValidationError("complex: h must be >= 1");
  index_sets_ = canonical_subsets(IndexSet::full(r), s);
  ord_by_bits_.assign(1u << r, -1);
  for (size_t i = 0; i < index_sets_.size(); ++i) ord_by_bits_[index_sets_[i].bits] = static_cast<int>(i);
  strides_.resize(index_sets_.size());
  local_.resize(index_sets_.size());
  binding_.resize(index_sets_.size());
  for (size_t o = 0; o < index_sets_.size(); ++o) {
    int t = index_sets_[o].size();
    strides_[o].assign(t, 1);
    for (int pos = t - 2; pos >= 0; --pos) strides_[o][pos] = strides_[o][pos + 1] * h;
    std::int64_t n = 1;
    for (int j = 0; j < t; ++j) n *= h;
    local_[o].assign(n, kInvisible);
  }
}

int SimplicialComplex::ordinal(IndexSet I) const {
  if (I.bits == 0 || I.bits >= ord_by_bits_.size()) return -1;
  return ord_by_bits_[I.bits];
}

std::int64_t SimplicialComplex::offset_of(int ord, const std::vector<int>& verts) const {
  std::int64_t off = 0;
  for (size_t pos = 0; pos < strides_[ord].size(); ++pos) {
    if (verts[pos] < 0 || verts[pos] >= h_)
      throw ValidationError("pattern vertex out of range [0,h)");
    off += verts[pos] * strides_[ord][pos];
  }
  return off;
}

std::vector<int> SimplicialComplex::tuple_of(int ord, std::int64_t off) const {
  std::vector<int> tuple(strides_[ord].size());
  for (size_t pos = 0; pos < strides_[ord].size(); ++pos) {
    tuple[pos] = static_cast<int>(off / strides_[ord][pos]);
    off %= strides_[ord][pos];
  }
  return tuple;
}

void SimplicialComplex::set_host_color(int ord, std::int64_t off, ColorId host) {
  auto& bind = binding_[ord];
  auto it = std::find(bind.begin(), bind.end(), host);
  int local;
  if (it == bind.end()) {
    local = static_cast<int>(bind.size());
    bind.push_back(host);
  } else {
    local = static_cast<int>(it - bind.begin());
  }
  local_[ord][off] = local;
}

std::string SimplicialComplex::str() const {
  std::string s;
  for (size_t o = 0; o < index_sets_.size(); ++o) {
    s += "{" + index_sets_[o].str() + "}:";
    for (size_t i = 0; i < local_[o].size(); ++i) {
      int l = local_[o][i];
      s += l == kInvisible ? "." : std::to_string(binding_[o][l]);
      s += i + 1 < local_[o].size() ? "," : "";
    }
    s += "; ";
  }
  return s;
}

std::vector<PatternEdge> visible_edges(const SimplicialComplex& S, int max_size) {
  std::vector<PatternEdge> out;
  for (size_t o = 0; o < S.index_sets().size(); ++o) {
    const IndexSet& I = S.index_sets()[o];
    if (I.size() > max_size) continue;
    for (std::int64_t off = 0; off < S.edge_count(static_cast<int>(o)); ++off) {
      if (!S.visible(static_cast<int>(o), off)) continue;
      PatternEdge e;
      e.ord = static_cast<int>(o);
      e.off = off;
      e.index = I;
      e.tuple = S.tuple_of(e.ord, off);
      out.push_back(std::move(e));
    }
  }
  return out;
}

TotalColor pattern_total_color(const SimplicialComplex& S, const Hypergraph& G,
                               const PatternEdge& e) {
  TotalColor c;
  c.index = e.index;
  auto members = e.index.members();
  for (const IndexSet& J : canonical_subsets(e.index, e.index.size())) {
    std::vector<int> sub;
    for (size_t pos = 0; pos < members.size(); ++pos)
      if (J.contains(members[pos])) sub.push_back(e.tuple[pos]);
    int so = S.ordinal(J);
    std::int64_t soff = S.offset_of(so, sub);
    if (!S.visible(so, soff))
      throw ValidationError("total color requested below an invisible subedge (closure violated)");
    c.entries.push_back(S.host_color(so, soff));
  }
  (void)G;
  return c;
}

std::vector<ComplexViolation> validate_complex(const SimplicialComplex& S, const Hypergraph& G) {
  std::vector<ComplexViolation> out;
  if (S.r() != G.r())
    out.push_back({"shape", "complex has r=" + std::to_string(S.r()) + ", host has r=" +
                                std::to_string(G.r())});
  if (S.s() > G.k())
    out.push_back({"shape", "complex is " + std::to_string(S.s()) + "-bounded, host only " +
                                std::to_string(G.k())});
  if (!out.empty()) return out;

  for (size_t o = 0; o < S.index_sets().size(); ++o) {
    const IndexSet& I = S.index_sets()[o];
    int go = G.ordinal(I);
    const auto& bind = S.binding(static_cast<int>(o));
    // binding range + injectivity
    std::vector<ColorId> seen;
    for (size_t local = 0; local < bind.size(); ++local) {
      if (bind[local] < 0 || bind[local] >= G.table_size(go))
        out.push_back({"range", "index set {" + I.str() + "}: local color " +
                                    std::to_string(local) + " bound to host color " +
                                    std::to_string(bind[local]) + " outside [0," +
                                    std::to_string(G.table_size(go)) + ")"});
      if (std::find(seen.begin(), seen.end(), bind[local]) != seen.end())
        out.push_back({"binding", "index set {" + I.str() + "}: two local colors bound to host color " +
                                      std::to_string(bind[local])});
      seen.push_back(bind[local]);
    }
    // closure: visible edge => visible subedges
    for (std::int64_t off = 0; off < S.edge_count(static_cast<int>(o)); ++off) {
      if (!S.visible(static_cast<int>(o), off)) continue;
      auto tuple = S.tuple_of(static_cast<int>(o), off);
      auto members = I.members();
      for (const IndexSet& J : canonical_proper_subsets(I)) {
        std::vector<int> sub;
        for (size_t pos = 0; pos < members.size(); ++pos)
          if (J.contains(members[pos])) sub.push_back(tuple[pos]);
        int so = S.ordinal(J);
        if (!S.visible(so, S.offset_of(so, sub))) {
          std::string ts;
          for (size_t i = 0; i < tuple.size(); ++i) ts += (i ? "," : "") + std::to_string(tuple[i]);
          out.push_back({"closure", "visible edge {" + I.str() + "}(" + ts +
                                        ") has an invisible subedge on {" + J.str() + "}"});
        }
      }
    }
  }
  return out;
}

SimplicialComplex induced_complex(const Hypergraph& G, const std::vector<std::vector<int>>& assign,
                                  int s) {
  if (static_cast<int>(assign.size()) != G.r())
    throw ValidationError("induced complex: need one vertex list per part");
  int h = static_cast<int>(assign[0].size());
  for (const auto& a : assign)
    if (static_cast<int>(a.size()) != h)
      throw ValidationError("induced complex: vertex lists must share one length");
  SimplicialComplex S(G.r(), s, h);
  for (size_t o = 0; o < S.index_sets().size(); ++o) {
    const IndexSet& I = S.index_sets()[o];
    int go = G.ordinal(I);
    S.set_binding(static_cast<int>(o), [&] {
      std::vector<ColorId> identity(G.table_size(go));
      for (size_t c = 0; c < identity.size(); ++c) identity[c] = static_cast<ColorId>(c);
      return identity;
    }());
    auto members = I.members();
    for (std::int64_t off = 0; off < S.edge_count(static_cast<int>(o)); ++off) {
      auto tuple = S.tuple_of(static_cast<int>(o), off);
      std::vector<int> host(tuple.size());
      for (size_t pos = 0; pos < tuple.size(); ++pos) host[pos] = assign[members[pos]][tuple[pos]];
      S.set_local(static_cast<int>(o), off, G.color_at(go, G.offset_of(go, host)));
    }
  }
  return S;
}

namespace {

void enumerate_rec(const Hypergraph& G, SimplicialComplex& S,
                   const std::vector<std::pair<int, std::int64_t>>& cells, size_t at,
                   std::int64_t budget, std::vector<SimplicialComplex>& out) {
  if (at == cells.size()) {
    if (static_cast<std::int64_t>(out.size()) >= budget)
      throw BudgetExceeded("complex family larger than budget " + std::to_string(budget));
    out.push_back(S);
    return;
  }
  auto [ord, off] = cells[at];
  const IndexSet& I = S.index_sets()[ord];
  // invisible always allowed
  S.set_local(ord, off, SimplicialComplex::kInvisible);
  enumerate_rec(G, S, cells, at + 1, budget, out);
  // visible only if all proper subedges (already assigned: smaller ordinals
  // come first in canonical order) are visible
  bool closed = true;
  auto tuple = S.tuple_of(ord, off);
  auto members = I.members();
  for (const IndexSet& J : canonical_proper_subsets(I)) {
    std::vector<int> sub;
    for (size_t pos = 0; pos < members.size(); ++pos)
      if (J.contains(members[pos])) sub.push_back(tuple[pos]);
    int so = S.ordinal(J);
    if (!S.visible(so, S.offset_of(so, sub))) {
      closed = false;
      break;
    }
  }
  if (closed) {
    int go = G.ordinal(I);
    for (ColorId c = 0; c < G.table_size(go); ++c) {
      S.set_local(ord, off, c);
      enumerate_rec(G, S, cells, at + 1, budget, out);
    }
  }
  S.set_local(ord, off, SimplicialComplex::kInvisible);
}

}  // namespace

std::vector<SimplicialComplex> enumerate_complexes(const Hypergraph& G, int s, int h,
                                                   std::int64_t budget) {
  SimplicialComplex S(G.r(), s, h);
  std::vector<std::pair<int, std::int64_t>> cells;
  for (size_t o = 0; o < S.index_sets().size(); ++o) {
    int go = G.ordinal(S.index_sets()[o]);
    std::vector<ColorId> identity(G.table_size(go));
    for (size_t c = 0; c < identity.size(); ++c) identity[c] = static_cast<ColorId>(c);
    S.set_binding(static_cast<int>(o), std::move(identity));
    for (std::int64_t off = 0; off < S.edge_count(static_cast<int>(o)); ++off)
      cells.emplace_back(static_cast<int>(o), off);
  }
  std::vector<SimplicialComplex> out;
  enumerate_rec(G, S, cells, 0, budget, out);
  return out;
}

}  // namespace hreg
