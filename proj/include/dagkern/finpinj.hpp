#pragma once

// Finite sets and partial injections. A morphism is a table sending each
// source index to at most one target index, no two sources sharing a target.
// The dagger is the relational converse (again a partial injection), and the
// kernel of f is the inclusion of the complement of f's domain of definition.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace dagkern {

class FinPInj {
 public:
  struct Object {
    std::vector<std::string> labels;  // sorted, distinct
  };

  struct Mor {
    Object src;
    Object tgt;
    std::vector<std::optional<std::size_t>> table;  // |src| entries into tgt
  };

  static constexpr bool enumerable = true;
  static constexpr bool boolean_category = true;
  static constexpr bool has_opclassifier = false;

  std::string name() const { return "finpinj"; }

  static Object make_object(std::vector<std::string> labels) {
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
      throw InvalidMorphism("finpinj object: duplicate labels");
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

  Mor make_mor(Object x, Object y, std::vector<std::optional<std::size_t>> table) const {
    if (table.size() != x.labels.size())
      throw InvalidMorphism("finpinj morphism: table size does not match source");
    std::vector<std::uint8_t> used(y.labels.size(), 0);
    for (const auto& v : table) {
      if (!v) continue;
      if (*v >= y.labels.size()) throw InvalidMorphism("finpinj morphism: target index out of range");
      if (used[*v]++) throw InvalidMorphism("finpinj morphism: not injective");
    }
    return Mor{std::move(x), std::move(y), std::move(table)};
  }

  Mor from_map(const Object& x, const Object& y,
               const std::map<std::string, std::string>& entries) const {
    std::vector<std::optional<std::size_t>> table(x.labels.size());
    for (const auto& [s, t] : entries) table[index_of(x, s)] = index_of(y, t);
    return make_mor(x, y, std::move(table));
  }

  Mor identity(const Object& x) const {
    std::vector<std::optional<std::size_t>> table(x.labels.size());
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = i;
    return Mor{x, x, std::move(table)};
  }

  Mor zero_mor(const Object& x, const Object& y) const {
    return Mor{x, y, std::vector<std::optional<std::size_t>>(x.labels.size())};
  }

  Mor compose(const Mor& g, const Mor& f) const {
    if (!obj_eq(f.tgt, g.src)) throw ObjectMismatch("finpinj compose: object mismatch");
    std::vector<std::optional<std::size_t>> table(f.src.labels.size());
    for (std::size_t s = 0; s < table.size(); ++s)
      if (f.table[s]) table[s] = g.table[*f.table[s]];
    return Mor{f.src, g.tgt, std::move(table)};
  }

  Mor dagger(const Mor& f) const {
    std::vector<std::optional<std::size_t>> table(f.tgt.labels.size());
    for (std::size_t s = 0; s < f.table.size(); ++s)
      if (f.table[s]) table[*f.table[s]] = s;
    return Mor{f.tgt, f.src, std::move(table)};
  }

  bool mor_eq(const Mor& f, const Mor& g) const {
    return obj_eq(f.src, g.src) && obj_eq(f.tgt, g.tgt) && f.table == g.table;
  }

  Mor kernel(const Mor& f) const {
    std::vector<std::size_t> keep;
    for (std::size_t s = 0; s < f.table.size(); ++s)
      if (!f.table[s]) keep.push_back(s);
    return inclusion(f.src, keep);
  }

  // --- enumeration -------------------------------------------------------

  std::vector<Mor> enumerate_homset(const Object& x, const Object& y,
                                    std::size_t guard = kEnumerationGuard) const {
    std::vector<Mor> out;
    std::vector<std::optional<std::size_t>> table(x.labels.size());
    std::vector<std::uint8_t> used(y.labels.size(), 0);
    emit(x, y, 0, table, used, out, guard);
    return out;
  }

  std::vector<Mor> enumerate_ksub(const Object& x) const {
    const std::size_t n = x.labels.size();
    if (n >= 20) throw EnumerationGuard("finpinj subobject enumeration too large");
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

  std::vector<Mor> enumerate_dagger_isos(const Object& a, const Object& b) const {
    std::vector<Mor> out;
    if (a.labels.size() != b.labels.size()) return out;
    const std::size_t n = a.labels.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::optional<std::size_t>> table(n);
      for (std::size_t s = 0; s < n; ++s) table[s] = perm[s];
      out.push_back(Mor{a, b, std::move(table)});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
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
    for (std::size_t i = 0; i < f.table.size(); ++i) {
      if (!f.table[i]) continue;
      if (!first) s += ",";
      first = false;
      s += f.src.labels[i] + "->" + f.tgt.labels[*f.table[i]];
    }
    return s + "} : " + show_obj(f.src) + " -> " + show_obj(f.tgt);
  }

 private:
  static std::size_t index_of(const Object& x, const std::string& label) {
    const auto it = std::lower_bound(x.labels.begin(), x.labels.end(), label);
    if (it == x.labels.end() || *it != label)
      throw InvalidMorphism("finpinj: unknown label '" + label + "'");
    return static_cast<std::size_t>(it - x.labels.begin());
  }

  Mor inclusion(const Object& x, const std::vector<std::size_t>& keep) const {
    Object sub;
    sub.labels.reserve(keep.size());
    for (auto i : keep) sub.labels.push_back(x.labels[i]);
    std::vector<std::optional<std::size_t>> table(keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j) table[j] = keep[j];
    return Mor{std::move(sub), x, std::move(table)};
  }

  void emit(const Object& x, const Object& y, std::size_t s,
            std::vector<std::optional<std::size_t>>& table,
            std::vector<std::uint8_t>& used, std::vector<Mor>& out,
            std::size_t guard) const {
    if (s == table.size()) {
      if (out.size() >= guard) throw EnumerationGuard("finpinj homset exceeds enumeration guard");
      out.push_back(Mor{x, y, table});
      return;
    }
    table[s] = std::nullopt;
    emit(x, y, s + 1, table, used, out, guard);
    for (std::size_t t = 0; t < y.labels.size(); ++t) {
      if (used[t]) continue;
      used[t] = 1;
      table[s] = t;
      emit(x, y, s + 1, table, used, out, guard);
      table[s] = std::nullopt;
      used[t] = 0;
    }
  }
};

}  // namespace dagkern
