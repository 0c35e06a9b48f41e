#pragma once

// Finite sets and relations. A morphism X -> Y is a boolean matrix indexed
// tgt x src, the dagger is transposition, and the kernel of R is the
// inclusion of the set of points R relates to nothing.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace dagkern {

struct BoolMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> bits;  // row-major, rows*cols entries

  BoolMatrix() = default;
  BoolMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), bits(r * c, 0) {}

  static BoolMatrix ident(std::size_t n) {
    BoolMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  bool at(std::size_t r, std::size_t c) const { return bits[r * cols + c] != 0; }
  void set(std::size_t r, std::size_t c, bool v) { bits[r * cols + c] = v ? 1 : 0; }

  BoolMatrix transposed() const {
    BoolMatrix t(cols, rows);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (at(r, c)) t.set(c, r, true);
    return t;
  }

  friend bool operator==(const BoolMatrix& a, const BoolMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.bits == b.bits;
  }
};

// (a: m x k) . (b: k x n) over the boolean semiring.
inline BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.cols != b.rows) throw ObjectMismatch("bool_product: inner dimensions differ");
  BoolMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k)
      if (a.at(i, k))
        for (std::size_t j = 0; j < b.cols; ++j)
          if (b.at(k, j)) out.set(i, j, true);
  return out;
}

class FinRel {
 public:
  struct Object {
    std::vector<std::string> labels;  // sorted, distinct
  };

  struct Mor {
    Object src;
    Object tgt;
    BoolMatrix rel;  // rel(t, s) <=> s related to t
  };

  static constexpr bool enumerable = true;
  static constexpr bool boolean_category = true;
  static constexpr bool has_opclassifier = true;

  std::string name() const { return "finrel"; }

  static Object make_object(std::vector<std::string> labels) {
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
      throw InvalidMorphism("finrel object: duplicate labels");
    return Object{std::move(labels)};
  }

  std::size_t obj_size(const Object& x) const { return x.labels.size(); }
  bool obj_eq(const Object& a, const Object& b) const { return a.labels == b.labels; }
  bool objects_isomorphic(const Object& a, const Object& b) const {
    return a.labels.size() == b.labels.size();
  }

  Object zero_object() const { return Object{}; }
  bool is_zero_object(const Object& x) const { return x.labels.empty(); }
  Object unit_object() const { return Object{{"*"}}; }

  const Object& src(const Mor& f) const { return f.src; }
  const Object& tgt(const Mor& f) const { return f.tgt; }

  Mor make_mor(Object x, Object y, BoolMatrix rel) const {
    if (rel.rows != y.labels.size() || rel.cols != x.labels.size())
      throw InvalidMorphism("finrel morphism: matrix shape does not match objects");
    return Mor{std::move(x), std::move(y), std::move(rel)};
  }

  // Relation literal from (src label, tgt label) pairs.
  Mor from_pairs(const Object& x, const Object& y,
                 const std::vector<std::pair<std::string, std::string>>& pairs) const {
    BoolMatrix rel(y.labels.size(), x.labels.size());
    for (const auto& [s, t] : pairs) {
      const auto si = index_of(x, s);
      const auto ti = index_of(y, t);
      rel.set(ti, si, true);
    }
    return Mor{x, y, std::move(rel)};
  }

  Mor identity(const Object& x) const {
    return Mor{x, x, BoolMatrix::ident(x.labels.size())};
  }

  Mor zero_mor(const Object& x, const Object& y) const {
    return Mor{x, y, BoolMatrix(y.labels.size(), x.labels.size())};
  }

  Mor compose(const Mor& g, const Mor& f) const {
    if (!obj_eq(f.tgt, g.src)) throw ObjectMismatch("finrel compose: object mismatch");
    return Mor{f.src, g.tgt, bool_product(g.rel, f.rel)};
  }

  Mor dagger(const Mor& f) const { return Mor{f.tgt, f.src, f.rel.transposed()}; }

  bool mor_eq(const Mor& f, const Mor& g) const {
    return obj_eq(f.src, g.src) && obj_eq(f.tgt, g.tgt) && f.rel == g.rel;
  }

  // ker(R) is the inclusion of the subset of source points with empty image.
  Mor kernel(const Mor& f) const {
    std::vector<std::size_t> keep;
    for (std::size_t s = 0; s < f.src.labels.size(); ++s) {
      bool hit = false;
      for (std::size_t t = 0; t < f.tgt.labels.size() && !hit; ++t) hit = f.rel.at(t, s);
      if (!hit) keep.push_back(s);
    }
    return inclusion(f.src, keep);
  }

  // --- enumeration -------------------------------------------------------

  std::vector<Mor> enumerate_homset(const Object& x, const Object& y,
                                    std::size_t guard = kEnumerationGuard) const {
    const std::size_t bits = x.labels.size() * y.labels.size();
    if (bits >= 64 || (std::size_t{1} << bits) > guard)
      throw EnumerationGuard("finrel homset exceeds enumeration guard");
    std::vector<Mor> out;
    out.reserve(std::size_t{1} << bits);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
      BoolMatrix rel(y.labels.size(), x.labels.size());
      for (std::size_t b = 0; b < bits; ++b)
        if (mask & (std::uint64_t{1} << b)) rel.bits[b] = 1;
      out.push_back(Mor{x, y, std::move(rel)});
    }
    return out;
  }

  // Canonical kernel representatives: one subset inclusion per subset,
  // in bitmask order (bottom first, top last).
  std::vector<Mor> enumerate_ksub(const Object& x) const {
    const std::size_t n = x.labels.size();
    if (n >= 20) throw EnumerationGuard("finrel subobject enumeration too large");
    std::vector<Mor> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) keep.push_back(i);
      out.push_back(inclusion(x, keep));
    }
    return out;
  }

  // All unitary isos a -> b (graphs of bijections), lexicographic.
  std::vector<Mor> enumerate_dagger_isos(const Object& a, const Object& b) const {
    std::vector<Mor> out;
    if (a.labels.size() != b.labels.size()) return out;
    const std::size_t n = a.labels.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      BoolMatrix rel(n, n);
      for (std::size_t s = 0; s < n; ++s) rel.set(perm[s], s, true);
      out.push_back(Mor{a, b, std::move(rel)});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }

  // Subobject classifier into the one-point object: a subset M of X becomes
  // the relation * -> X hitting exactly M.
  Mor char_mor(const Mor& inclusion_mor) const {
    const Object one = unit_object();
    BoolMatrix rel(inclusion_mor.tgt.labels.size(), 1);
    for (std::size_t c = 0; c < inclusion_mor.rel.cols; ++c)
      for (std::size_t r = 0; r < inclusion_mor.rel.rows; ++r)
        if (inclusion_mor.rel.at(r, c)) rel.set(r, 0, true);
    return Mor{one, inclusion_mor.tgt, std::move(rel)};
  }

  std::string show_obj(const Object& x) const {
    std::string s = "{";
    for (std::size_t i = 0; i < x.labels.size(); ++i) {
      if (i) s += ",";
      s += x.labels[i];
    }
    return s + "}";
  }

  std::string show(const Mor& f) const {
    std::string s = "{";
    bool first = true;
    for (std::size_t c = 0; c < f.rel.cols; ++c)
      for (std::size_t r = 0; r < f.rel.rows; ++r)
        if (f.rel.at(r, c)) {
          if (!first) s += ",";
          first = false;
          s += "(" + f.src.labels[c] + "," + f.tgt.labels[r] + ")";
        }
    return s + "} : " + show_obj(f.src) + " -> " + show_obj(f.tgt);
  }

 private:
  static std::size_t index_of(const Object& x, const std::string& label) {
    const auto it = std::lower_bound(x.labels.begin(), x.labels.end(), label);
    if (it == x.labels.end() || *it != label)
      throw InvalidMorphism("finrel: unknown label '" + label + "'");
    return static_cast<std::size_t>(it - x.labels.begin());
  }

  Mor inclusion(const Object& x, const std::vector<std::size_t>& keep) const {
    Object sub;
    sub.labels.reserve(keep.size());
    for (auto i : keep) sub.labels.push_back(x.labels[i]);
    BoolMatrix rel(x.labels.size(), keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j) rel.set(keep[j], j, true);
    return Mor{std::move(sub), x, std::move(rel)};
  }
};

}  // namespace dagkern
