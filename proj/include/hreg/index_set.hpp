#ifndef HREG_INDEX_SET_HPP
#define HREG_INDEX_SET_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hreg {

// Nonempty subset of the part indices [0, r), r <= 30.  Canonical order over
// index sets is (size, lexicographic member list); every table, loop and
// serialization in the library follows it.
struct IndexSet {
  std::uint32_t bits = 0;

  IndexSet() = default;
  explicit IndexSet(std::uint32_t b) : bits(b) {}
  static IndexSet of(std::initializer_list<int> parts) {
    IndexSet s;
    for (int p : parts) s.bits |= (1u << p);
    return s;
  }
  static IndexSet of(const std::vector<int>& parts) {
    IndexSet s;
    for (int p : parts) s.bits |= (1u << p);
    return s;
  }
  static IndexSet full(int r) { return IndexSet((1u << r) - 1); }

  int size() const { return __builtin_popcount(bits); }
  bool empty() const { return bits == 0; }
  bool contains(int part) const { return (bits >> part) & 1u; }
  bool subset_of(const IndexSet& o) const { return (bits & ~o.bits) == 0; }
  bool proper_subset_of(const IndexSet& o) const { return subset_of(o) && bits != o.bits; }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint32_t b = bits; b;) {
      int p = __builtin_ctz(b);
      out.push_back(p);
      b &= b - 1;
    }
    return out;  // ascending
  }

  IndexSet unite(const IndexSet& o) const { return IndexSet(bits | o.bits); }
  IndexSet minus(const IndexSet& o) const { return IndexSet(bits & ~o.bits); }

  bool operator==(const IndexSet& o) const { return bits == o.bits; }
  bool operator!=(const IndexSet& o) const { return bits != o.bits; }

  std::string str() const {
    std::string s;
    for (int p : members()) {
      if (!s.empty()) s += ",";
      s += std::to_string(p);
    }
    return s;
  }
};

// (size, lex member list) comparator.
inline bool canonical_less(const IndexSet& a, const IndexSet& b) {
  int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  auto ma = a.members(), mb = b.members();
  return ma < mb;
}

// All nonempty subsets of `ground` with size in [1, max_size], canonical order.
std::vector<IndexSet> canonical_subsets(IndexSet ground, int max_size);

// All nonempty proper subsets of I, canonical order.
std::vector<IndexSet> canonical_proper_subsets(IndexSet I);

}  // namespace hreg

#endif
