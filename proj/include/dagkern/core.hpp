#pragma once

// Generic constructions over any dagger kernel instance.
//
// An instance type C supplies: Object, Mor, obj_eq, objects_isomorphic,
// zero_object, is_zero_object, src, tgt, identity, zero_mor, compose, dagger,
// kernel (canonical dagger-monic representative), mor_eq, show/show_obj, and
// for enumerable instances enumerate_homset / enumerate_ksub /
// enumerate_dagger_isos. Everything below is derived from that surface:
// cokernels are daggers of kernels of daggers, orthocomplements are kernels
// of daggers, images are kernels of cokernels, and so on.

#include <string>
#include <utility>

#include "common.hpp"

namespace dagkern {

template <typename C>
using Mor_t = typename C::Mor;
template <typename C>
using Obj_t = typename C::Object;

// A kernel subobject: a canonical dagger-monic kernel representative.
// The codomain is the object the subobject lives over.
template <typename C>
struct KernelSub {
  Mor_t<C> mor;
};

template <typename C>
const Obj_t<C>& codomain(const C& cat, const KernelSub<C>& m) {
  return cat.tgt(m.mor);
}

template <typename C>
bool is_zero_mor(const C& cat, const Mor_t<C>& f) {
  return cat.mor_eq(f, cat.zero_mor(cat.src(f), cat.tgt(f)));
}

template <typename C>
KernelSub<C> kernel_sub(const C& cat, const Mor_t<C>& f) {
  return KernelSub<C>{cat.kernel(f)};
}

// coker(f) = ker(f+)+ , a canonical dagger epi out of tgt(f).
template <typename C>
Mor_t<C> cokernel(const C& cat, const Mor_t<C>& f) {
  return cat.dagger(cat.kernel(cat.dagger(f)));
}

// m-perp = ker(m+).
template <typename C>
KernelSub<C> ortho(const C& cat, const KernelSub<C>& m) {
  return KernelSub<C>{cat.kernel(cat.dagger(m.mor))};
}

// The canonical representative of the subobject of an arbitrary kernel
// representative: ker(coker(m)). Lands in the instance's canonical form.
template <typename C>
Mor_t<C> canonical_kernel_rep(const C& cat, const Mor_t<C>& m) {
  return cat.kernel(cokernel(cat, m));
}

// Inverse image f^-1(n) = ker(coker(n) . f), a subobject of src(f).
template <typename C>
KernelSub<C> pullback_kernel(const C& cat, const Mor_t<C>& f, const KernelSub<C>& n) {
  if (!cat.obj_eq(cat.tgt(f), codomain(cat, n)))
    throw ObjectMismatch("pullback_kernel: n is not a subobject of tgt(f)");
  return KernelSub<C>{cat.kernel(cat.compose(cokernel(cat, n.mor), f))};
}

// The full pullback square of a kernel n along f: left leg f^-1(n) into
// src(f), top map into the domain of n, with n . top = f . left.
template <typename C>
struct PullbackSquare {
  KernelSub<C> left;
  Mor_t<C> top;
};

template <typename C>
PullbackSquare<C> pullback_square(const C& cat, const Mor_t<C>& f, const KernelSub<C>& n) {
  KernelSub<C> left = pullback_kernel(cat, f, n);
  // n is dagger monic, so the mediating map is forced:
  Mor_t<C> top = cat.compose(cat.dagger(n.mor), cat.compose(f, left.mor));
  return PullbackSquare<C>{std::move(left), std::move(top)};
}

// ---- classification -------------------------------------------------------

struct MorClass {
  bool is_zero = false;
  bool is_dagger_mono = false;
  bool is_dagger_epi = false;
  bool is_zero_mono = false;
  bool is_zero_epi = false;
  bool is_kernel = false;
  bool is_cokernel = false;
};

// g factors through the dagger mono m iff m . (m+ . g) = g.
template <typename C>
bool factors_through(const C& cat, const Mor_t<C>& g, const Mor_t<C>& m) {
  return cat.mor_eq(cat.compose(m, cat.compose(cat.dagger(m), g)), g);
}

template <typename C>
bool is_kernel_mor(const C& cat, const Mor_t<C>& f) {
  const auto fd = cat.dagger(f);
  if (!cat.mor_eq(cat.compose(fd, f), cat.identity(cat.src(f)))) return false;
  // f is a kernel iff it is mutually bounded with ker(coker(f)).
  const auto k = canonical_kernel_rep(cat, f);
  return factors_through(cat, k, f) && factors_through(cat, f, k);
}

template <typename C>
MorClass classify(const C& cat, const Mor_t<C>& f) {
  MorClass c;
  const auto fd = cat.dagger(f);
  c.is_zero = is_zero_mor(cat, f);
  c.is_dagger_mono = cat.mor_eq(cat.compose(fd, f), cat.identity(cat.src(f)));
  c.is_dagger_epi = cat.mor_eq(cat.compose(f, fd), cat.identity(cat.tgt(f)));
  c.is_zero_mono = cat.is_zero_object(cat.src(cat.kernel(f)));
  c.is_zero_epi = cat.is_zero_object(cat.tgt(cokernel(cat, f)));
  c.is_kernel = c.is_dagger_mono && is_kernel_mor(cat, f);
  c.is_cokernel = c.is_dagger_epi && is_kernel_mor(cat, fd);
  return c;
}

// ---- subobject order -------------------------------------------------------

template <typename C>
bool subobject_leq(const C& cat, const KernelSub<C>& m, const KernelSub<C>& n) {
  if (!cat.obj_eq(codomain(cat, m), codomain(cat, n)))
    throw ObjectMismatch("subobject_leq: different codomains");
  return is_zero_mor(cat, cat.compose(cokernel(cat, n.mor), m.mor));
}

template <typename C>
bool subobject_eq(const C& cat, const KernelSub<C>& m, const KernelSub<C>& n) {
  return subobject_leq(cat, m, n) && subobject_leq(cat, n, m);
}

// For m <= n the mediating mono is forced: n+ . m.
template <typename C>
Mor_t<C> mediating_mor(const C& cat, const KernelSub<C>& m, const KernelSub<C>& n) {
  if (!subobject_leq(cat, m, n))
    throw LogicError("mediating_mor: first subobject is not below the second");
  return cat.compose(cat.dagger(n.mor), m.mor);
}

// ---- factorisation ---------------------------------------------------------

// f = i_f . e_f with i_f = ker(coker f) and e_f = i_f+ . f zero-epic.
template <typename C>
struct ImageFactorisation {
  Mor_t<C> zero_epi_part;  // e_f : src(f) -> Im(f)
  KernelSub<C> image;      // i_f : Im(f) >-> tgt(f)
};

template <typename C>
ImageFactorisation<C> image_factorise(const C& cat, const Mor_t<C>& f) {
  KernelSub<C> im{cat.kernel(cokernel(cat, f))};
  Mor_t<C> e = cat.compose(cat.dagger(im.mor), f);
  return ImageFactorisation<C>{std::move(e), std::move(im)};
}

// f = image . middle . coimage, where coimage is the dagger of the image of
// f+ (a cokernel out of src(f)), and middle = i_f+ . f . i_{f+} is both
// zero-monic and zero-epic. The mid objects are Im(f+) and Im(f).
template <typename C>
struct Factorisation {
  Mor_t<C> coimage;      // src(f) ->> Im(f+)
  Mor_t<C> middle;       // Im(f+) -> Im(f), zero-epi and zero-mono
  KernelSub<C> image;    // Im(f) >-> tgt(f)
  Mor_t<C> zero_epi_part;  // e_f = middle . coimage
};

template <typename C>
Factorisation<C> full_factorise(const C& cat, const Mor_t<C>& f) {
  KernelSub<C> im{cat.kernel(cokernel(cat, f))};
  KernelSub<C> im_dag{cat.kernel(cokernel(cat, cat.dagger(f)))};
  Mor_t<C> coim = cat.dagger(im_dag.mor);
  Mor_t<C> middle = cat.compose(cat.dagger(im.mor), cat.compose(f, im_dag.mor));
  Mor_t<C> e = cat.compose(cat.dagger(im.mor), f);
  return Factorisation<C>{std::move(coim), std::move(middle), std::move(im), std::move(e)};
}

// Unique diagonal for a commuting square  m . f = g . e  with e zero-epic and
// m a kernel: d = m+ . g, with both triangles verified.
template <typename C>
Mor_t<C> diagonal_fill_in(const C& cat, const Mor_t<C>& e, const KernelSub<C>& m,
                          const Mor_t<C>& f, const Mor_t<C>& g) {
  if (!cat.is_zero_object(cat.tgt(cokernel(cat, e))))
    throw LogicError("diagonal_fill_in: e is not zero-epic");
  if (!is_kernel_mor(cat, m.mor))
    throw LogicError("diagonal_fill_in: m is not a kernel");
  if (!cat.mor_eq(cat.compose(m.mor, f), cat.compose(g, e)))
    throw LogicError("diagonal_fill_in: square does not commute");
  Mor_t<C> d = cat.compose(cat.dagger(m.mor), g);
  if (!cat.mor_eq(cat.compose(d, e), f) || !cat.mor_eq(cat.compose(m.mor, d), g))
    throw LogicError("diagonal_fill_in: no diagonal satisfies both triangles");
  return d;
}

// Dom(f) = ker(f)-perp, the canonical subobject f does not kill.
template <typename C>
KernelSub<C> domain_of(const C& cat, const Mor_t<C>& f) {
  return ortho(cat, kernel_sub(cat, f));
}

}  // namespace dagkern
