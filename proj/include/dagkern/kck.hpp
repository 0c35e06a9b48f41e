#pragma once

// Category of cokernel-kernel pairs over a Boolean base instance: a morphism
// X -> Y is a cokernel X ->> M followed by a kernel M >-> Y, stored with the
// kernel leg in canonical form so equality is componentwise. The adapter
// KckCategory models the same instance surface as the concrete categories, so
// every generic construction and law check runs on it unchanged.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace dagkern {

template <typename C>
struct KckMorphism {
  Mor_t<C> coker_part;  // X ->> M
  Mor_t<C> ker_part;    // M >-> Y, canonical
};

namespace detail {

// Roll the mediating iso into the cokernel leg so the kernel leg is canonical.
template <typename C>
KckMorphism<C> kck_normalize(const C& cat, Mor_t<C> c, Mor_t<C> k) {
  const Mor_t<C> k0 = canonical_kernel_rep(cat, k);
  const Mor_t<C> link = cat.compose(cat.dagger(k0), k);
  return KckMorphism<C>{cat.compose(link, std::move(c)), k0};
}

}  // namespace detail

template <typename C>
KckMorphism<C> make_kck(const C& cat, const Mor_t<C>& coker_part, const Mor_t<C>& ker_part) {
  if (!cat.obj_eq(cat.tgt(coker_part), cat.src(ker_part)))
    throw ObjectMismatch("cokernel-kernel pair: legs do not meet");
  if (!is_kernel_mor(cat, cat.dagger(coker_part)))
    throw InvalidMorphism("cokernel-kernel pair: first leg is not a cokernel");
  if (!is_kernel_mor(cat, ker_part))
    throw InvalidMorphism("cokernel-kernel pair: second leg is not a kernel");
  return detail::kck_normalize(cat, coker_part, ker_part);
}

template <typename C>
KckMorphism<C> kck_compose(const C& cat, const KckMorphism<C>& after,
                           const KckMorphism<C>& before) {
  if (!cat.obj_eq(cat.tgt(before.ker_part), cat.src(after.coker_part)))
    throw ObjectMismatch("cokernel-kernel pair composition: objects do not match");
  // Restrict the middle of `before` to the part that `after` does not kill:
  // pull the kernel dagger(d) back along k, where k ends where d starts.
  const Mor_t<C>& k = before.ker_part;
  const KernelSub<C> dom_after{cat.dagger(after.coker_part)};
  const PullbackSquare<C> sq = pullback_square(cat, k, dom_after);
  const Mor_t<C>& into_mid = sq.left.mor;  // P >-> M
  const Mor_t<C>& across = sq.top;         // P >-> N
  return detail::kck_normalize(cat,
                               cat.compose(cat.dagger(into_mid), before.coker_part),
                               cat.compose(after.ker_part, across));
}

template <typename C>
KckMorphism<C> kck_dagger(const C& cat, const KckMorphism<C>& f) {
  return detail::kck_normalize(cat, cat.dagger(f.ker_part), cat.dagger(f.coker_part));
}

template <typename C>
bool kck_eq(const C& cat, const KckMorphism<C>& f, const KckMorphism<C>& g) {
  return cat.mor_eq(f.coker_part, g.coker_part) && cat.mor_eq(f.ker_part, g.ker_part);
}

// A base morphism embeds as a pair exactly when its middle factor is a dagger
// iso; then the pair is (middle after coimage, image).
template <typename C>
bool kck_embeddable(const C& cat, const Mor_t<C>& f) {
  const Factorisation<C> fact = full_factorise(cat, f);
  const Mor_t<C>& m = fact.middle;
  return cat.mor_eq(cat.compose(cat.dagger(m), m), cat.identity(cat.src(m))) &&
         cat.mor_eq(cat.compose(m, cat.dagger(m)), cat.identity(cat.tgt(m)));
}

template <typename C>
KckMorphism<C> kck_embed(const C& cat, const Mor_t<C>& f) {
  const Factorisation<C> fact = full_factorise(cat, f);
  const Mor_t<C>& m = fact.middle;
  if (!cat.mor_eq(cat.compose(cat.dagger(m), m), cat.identity(cat.src(m))) ||
      !cat.mor_eq(cat.compose(m, cat.dagger(m)), cat.identity(cat.tgt(m))))
    throw InvalidMorphism("pair embedding undefined: middle factor is not a dagger iso");
  return detail::kck_normalize(cat, cat.compose(m, fact.coimage), fact.image.mor);
}

// Collapse a pair back to the base category.
template <typename C>
Mor_t<C> kck_project(const C& cat, const KckMorphism<C>& f) {
  return cat.compose(f.ker_part, f.coker_part);
}

// ---- the pair category as a full instance -----------------------------------

template <typename C>
class KckCategory {
  static_assert(C::boolean_category,
                "cokernel-kernel pair category requires a Boolean base instance");
  static_assert(C::enumerable,
                "cokernel-kernel pair category is built over enumerable instances");

 public:
  using Object = typename C::Object;
  using Mor = KckMorphism<C>;

  static constexpr bool enumerable = true;
  static constexpr bool boolean_category = true;
  static constexpr bool has_opclassifier = false;

  explicit KckCategory(C base) : base_(std::move(base)) {}

  std::string name() const { return base_.name() + "-kck"; }
  const C& base() const { return base_; }

  // objects: shared with the base instance
  bool obj_eq(const Object& a, const Object& b) const { return base_.obj_eq(a, b); }
  std::size_t obj_size(const Object& x) const { return base_.obj_size(x); }
  bool objects_isomorphic(const Object& a, const Object& b) const {
    return base_.objects_isomorphic(a, b);
  }
  Object zero_object() const { return base_.zero_object(); }
  bool is_zero_object(const Object& x) const { return base_.is_zero_object(x); }
  Object unit_object() const { return base_.unit_object(); }

  // morphisms
  const Object& src(const Mor& f) const { return base_.src(f.coker_part); }
  const Object& tgt(const Mor& f) const { return base_.tgt(f.ker_part); }

  Mor identity(const Object& x) const { return Mor{base_.identity(x), base_.identity(x)}; }

  Mor zero_mor(const Object& x, const Object& y) const {
    return Mor{base_.dagger(base_.kernel(base_.identity(x))),
               base_.kernel(base_.identity(y))};
  }

  Mor compose(const Mor& g, const Mor& f) const { return kck_compose(base_, g, f); }
  Mor dagger(const Mor& f) const { return kck_dagger(base_, f); }
  bool mor_eq(const Mor& f, const Mor& g) const { return kck_eq(base_, f, g); }

  Mor kernel(const Mor& f) const {
    const Mor_t<C> k = base_.kernel(f.coker_part);
    return Mor{base_.identity(base_.src(k)), k};
  }

  std::vector<Mor> enumerate_homset(const Object& x, const Object& y,
                                    std::size_t guard = kEnumerationGuard) const {
    std::vector<Mor> out;
    for (const auto& k : base_.enumerate_ksub(y)) {
      const Object& mid = base_.src(k);
      for (const auto& m : base_.enumerate_ksub(x)) {
        if (!base_.objects_isomorphic(base_.src(m), mid)) continue;
        for (const auto& u : base_.enumerate_dagger_isos(base_.src(m), mid)) {
          out.push_back(Mor{base_.compose(u, base_.dagger(m)), k});
          if (out.size() > guard)
            throw EnumerationGuard("pair homset enumeration exceeds guard");
        }
      }
    }
    return out;
  }

  std::vector<Mor> enumerate_ksub(const Object& x) const {
    std::vector<Mor> out;
    for (const auto& m : base_.enumerate_ksub(x))
      out.push_back(Mor{base_.identity(base_.src(m)), m});
    return out;
  }

  std::vector<Mor> enumerate_dagger_isos(const Object& x, const Object& y) const {
    std::vector<Mor> out;
    for (const auto& u : base_.enumerate_dagger_isos(x, y))
      out.push_back(Mor{u, base_.identity(y)});
    return out;
  }

  std::string show_obj(const Object& x) const { return base_.show_obj(x); }

  std::string show(const Mor& f) const {
    return "(" + base_.show(f.coker_part) + " ; " + base_.show(f.ker_part) + ")";
  }

 private:
  C base_;
};

}  // namespace dagkern
