#pragma once

// The one-object-per-element category of a finite Boolean algebra: objects
// are elements x of the algebra, morphisms x -> y are elements f <= x /\ y,
// composition is meet, and the dagger does nothing but swap endpoints.
// The kernel of f: x -> y is the complement-in-x of f.
//
// The algebra is the powerset of a named atom list, elements are bitmasks.

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace dagkern {

class BoolHat {
 public:
  using Mask = std::uint32_t;

  struct Object {
    Mask elem = 0;
  };

  struct Mor {
    Object src;
    Object tgt;
    Mask f = 0;  // f <= src.elem & tgt.elem
  };

  static constexpr bool enumerable = true;
  static constexpr bool boolean_category = true;
  static constexpr bool has_opclassifier = true;

  explicit BoolHat(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.size() > 20) throw EnumerationGuard("boolhat: atom count too large");
  }

  std::string name() const { return "boolhat"; }
  const std::vector<std::string>& atoms() const { return atoms_; }
  Mask full() const { return (Mask{1} << atoms_.size()) - 1; }

  Object make_object(Mask elem) const {
    if (elem & ~full()) throw InvalidMorphism("boolhat object: element outside the algebra");
    return Object{elem};
  }

  Mask mask_of(const std::vector<std::string>& names) const {
    Mask m = 0;
    for (const auto& n : names) {
      std::size_t i = 0;
      while (i < atoms_.size() && atoms_[i] != n) ++i;
      if (i == atoms_.size()) throw InvalidMorphism("boolhat: unknown atom '" + n + "'");
      m |= Mask{1} << i;
    }
    return m;
  }

  std::size_t obj_size(const Object& x) const {
    return static_cast<std::size_t>(std::popcount(x.elem));
  }
  bool obj_eq(const Object& a, const Object& b) const { return a.elem == b.elem; }
  // x ~= y forces x = y here: an iso f has f /\ f = x and f /\ f = y.
  bool objects_isomorphic(const Object& a, const Object& b) const { return a.elem == b.elem; }

  Object zero_object() const { return Object{0}; }
  bool is_zero_object(const Object& x) const { return x.elem == 0; }
  Object unit_object() const { return Object{full()}; }

  const Object& src(const Mor& f) const { return f.src; }
  const Object& tgt(const Mor& f) const { return f.tgt; }

  Mor make_mor(Object x, Object y, Mask f) const {
    if (f & ~(x.elem & y.elem))
      throw InvalidMorphism("boolhat morphism: element not below src /\\ tgt");
    return Mor{x, y, f};
  }

  Mor identity(const Object& x) const { return Mor{x, x, x.elem}; }
  Mor zero_mor(const Object& x, const Object& y) const { return Mor{x, y, 0}; }

  Mor compose(const Mor& g, const Mor& f) const {
    if (f.tgt.elem != g.src.elem) throw ObjectMismatch("boolhat compose: object mismatch");
    return Mor{f.src, g.tgt, static_cast<Mask>(f.f & g.f)};
  }

  Mor dagger(const Mor& f) const { return Mor{f.tgt, f.src, f.f}; }

  bool mor_eq(const Mor& f, const Mor& g) const {
    return f.src.elem == g.src.elem && f.tgt.elem == g.tgt.elem && f.f == g.f;
  }

  Mor kernel(const Mor& f) const {
    const Mask k = ~f.f & f.src.elem;
    return Mor{Object{k}, f.src, k};
  }

  // --- enumeration -------------------------------------------------------

  std::vector<Mor> enumerate_homset(const Object& x, const Object& y,
                                    std::size_t guard = kEnumerationGuard) const {
    const Mask m = x.elem & y.elem;
    std::vector<Mor> out;
    if ((std::size_t{1} << std::popcount(m)) > guard)
      throw EnumerationGuard("boolhat homset exceeds enumeration guard");
    // submasks of m, ascending
    for (Mask v = 0;; v = (v - m) & m) {
      out.push_back(Mor{x, y, v});
      if (v == m) break;
    }
    return out;
  }

  std::vector<Mor> enumerate_ksub(const Object& x) const {
    std::vector<Mor> out;
    for (Mask v = 0;; v = (v - x.elem) & x.elem) {
      out.push_back(Mor{Object{v}, x, v});
      if (v == x.elem) break;
    }
    return out;
  }

  std::vector<Mor> enumerate_dagger_isos(const Object& a, const Object& b) const {
    if (a.elem != b.elem) return {};
    return {identity(a)};
  }

  // A subobject m <= x classified as the morphism m: 1 -> x.
  Mor char_mor(const Mor& inclusion_mor) const {
    return Mor{unit_object(), inclusion_mor.tgt, inclusion_mor.f};
  }

  std::string show_mask(Mask m) const {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (m & (Mask{1} << i)) {
        if (!first) s += ",";
        first = false;
        s += atoms_[i];
      }
    return s + "}";
  }

  std::string show_obj(const Object& x) const { return show_mask(x.elem); }

  std::string show(const Mor& f) const {
    return show_mask(f.f) + " : " + show_obj(f.src) + " -> " + show_obj(f.tgt);
  }

 private:
  std::vector<std::string> atoms_;
};

}  // namespace dagkern
