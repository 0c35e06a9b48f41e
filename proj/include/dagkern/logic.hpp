#pragma once

// Logical structure over kernel subobjects: existential image and its
// adjunction, Beck-Chevalley, Sasaki connectives (each computed two ways and
// cross-checked), effects, Booleanness, atoms, simple objects, generators,
// and the subobject opclassifier where an instance has one.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "lattice.hpp"

namespace dagkern {

// ---- effects ---------------------------------------------------------------

template <typename C>
struct Effect {
  Mor_t<C> endo;  // self-adjoint idempotent on the codomain
};

template <typename C>
Effect<C> effect_of(const C& cat, const KernelSub<C>& m) {
  return Effect<C>{cat.compose(m.mor, cat.dagger(m.mor))};
}

template <typename C>
bool is_self_adjoint_idempotent(const C& cat, const Mor_t<C>& p) {
  if (!cat.obj_eq(cat.src(p), cat.tgt(p))) return false;
  return cat.mor_eq(cat.dagger(p), p) && cat.mor_eq(cat.compose(p, p), p);
}

template <typename C>
KernelSub<C> effect_to_kernel(const C& cat, const Effect<C>& p) {
  if (!is_self_adjoint_idempotent(cat, p.endo))
    throw LogicError("effect_to_kernel: not a self-adjoint idempotent");
  return KernelSub<C>{canonical_kernel_rep(cat, p.endo)};
}

// ---- existential image -------------------------------------------------------

// Image route and orthocomplement route for the left adjoint of pullback.
template <typename C>
std::pair<KernelSub<C>, KernelSub<C>> exists_along_routes(const C& cat, const Mor_t<C>& f,
                                                          const KernelSub<C>& m) {
  if (!cat.obj_eq(codomain(cat, m), cat.src(f)))
    throw ObjectMismatch("exists_along: m is not a subobject of src(f)");
  KernelSub<C> via_image{canonical_kernel_rep(cat, cat.compose(f, m.mor))};
  KernelSub<C> via_ortho =
      ortho(cat, pullback_kernel(cat, cat.dagger(f), ortho(cat, m)));
  return {std::move(via_image), std::move(via_ortho)};
}

template <typename C>
KernelSub<C> exists_along(const C& cat, const Mor_t<C>& f, const KernelSub<C>& m) {
  auto [a, b] = exists_along_routes(cat, f, m);
  if (!subobject_eq(cat, a, b))
    throw LogicError("exists_along: image route and ortho route disagree");
  return a;
}

// ---- Sasaki connectives ------------------------------------------------------

// hook m > n : pullback along the effect of m, versus m-perp v (m ^ n).
template <typename C>
std::pair<KernelSub<C>, KernelSub<C>> sasaki_hook_routes(const C& cat, const KernelSub<C>& m,
                                                         const KernelSub<C>& n) {
  KernelSub<C> via_pullback = pullback_kernel(cat, effect_of(cat, m).endo, n);
  KernelSub<C> via_lattice = join_ks(cat, ortho(cat, m), meet_ks(cat, m, n));
  return {std::move(via_pullback), std::move(via_lattice)};
}

template <typename C>
KernelSub<C> sasaki_hook(const C& cat, const KernelSub<C>& m, const KernelSub<C>& n) {
  auto [a, b] = sasaki_hook_routes(cat, m, n);
  if (!subobject_eq(cat, a, b))
    throw LogicError("sasaki_hook: pullback route and lattice route disagree");
  return a;
}

// and-then k & m : existential image along the effect of m, versus
// m ^ (m-perp v k).
template <typename C>
std::pair<KernelSub<C>, KernelSub<C>> and_then_routes(const C& cat, const KernelSub<C>& k,
                                                      const KernelSub<C>& m) {
  KernelSub<C> via_exists{
      canonical_kernel_rep(cat, cat.compose(effect_of(cat, m).endo, k.mor))};
  KernelSub<C> via_lattice = meet_ks(cat, m, join_ks(cat, ortho(cat, m), k));
  return {std::move(via_exists), std::move(via_lattice)};
}

template <typename C>
KernelSub<C> and_then(const C& cat, const KernelSub<C>& k, const KernelSub<C>& m) {
  auto [a, b] = and_then_routes(cat, k, m);
  if (!subobject_eq(cat, a, b))
    throw LogicError("and_then: exists route and lattice route disagree");
  return a;
}

// ---- Beck-Chevalley ----------------------------------------------------------

// For kernels f: X >-> Z and g: Y >-> Z, pull g back along f to the square
//   P --q--> Y
//   p|        |g      and check  f^-1(exists_g(k)) = exists_p(q^-1(k))
//   X --f--> Z        for every k among the supplied subobjects of Y.
template <typename C>
struct BeckChevalleyReport {
  bool pass = true;
  std::optional<KernelSub<C>> failing_k;
};

template <typename C>
BeckChevalleyReport<C> check_beck_chevalley(const C& cat, const KernelSub<C>& f,
                                            const KernelSub<C>& g,
                                            const std::vector<KernelSub<C>>& ksub_of_y) {
  if (!cat.obj_eq(codomain(cat, f), codomain(cat, g)))
    throw ObjectMismatch("beck-chevalley: kernels have different codomains");
  if (!is_kernel_mor(cat, f.mor) || !is_kernel_mor(cat, g.mor))
    throw LogicError("beck-chevalley: inputs must be kernels");
  const PullbackSquare<C> sq = pullback_square(cat, f.mor, g);
  const KernelSub<C>& p = sq.left;  // P >-> X
  const Mor_t<C>& q = sq.top;       // P -> Y
  BeckChevalleyReport<C> rep;
  for (const auto& k : ksub_of_y) {
    const KernelSub<C> lhs = pullback_kernel(cat, f.mor, exists_along(cat, g.mor, k));
    const KernelSub<C> rhs{
        canonical_kernel_rep(cat, cat.compose(p.mor, pullback_kernel(cat, q, k).mor))};
    if (!subobject_eq(cat, lhs, rhs)) {
      rep.pass = false;
      rep.failing_k = k;
      return rep;
    }
  }
  return rep;
}

// ---- Booleanness -------------------------------------------------------------

// Disjointness implies orthogonality on a supplied element list.
template <typename C>
struct BooleanReport {
  bool pass = true;
  std::optional<std::pair<KernelSub<C>, KernelSub<C>>> witness;
};

template <typename C>
BooleanReport<C> check_boolean_on(const C& cat, const Obj_t<C>& x,
                                  const std::vector<KernelSub<C>>& elems) {
  BooleanReport<C> rep;
  const KernelSub<C> bot = bottom_ks(cat, x);
  for (const auto& m : elems)
    for (const auto& n : elems) {
      const bool disjoint = subobject_eq(cat, meet_ks(cat, m, n), bot);
      const bool orthogonal =
          is_zero_mor(cat, cat.compose(cat.dagger(m.mor), n.mor));
      if (disjoint && !orthogonal) {
        rep.pass = false;
        rep.witness = {m, n};
        return rep;
      }
    }
  return rep;
}

template <typename C>
BooleanReport<C> check_boolean(const C& cat, const Obj_t<C>& x) {
  static_assert(C::enumerable, "check_boolean over full KSub needs an enumerable instance");
  std::vector<KernelSub<C>> elems;
  for (auto& m : cat.enumerate_ksub(x)) elems.push_back(KernelSub<C>{std::move(m)});
  return check_boolean_on(cat, x, elems);
}

// ---- atoms, simple objects, generators ----------------------------------------

template <typename C>
bool is_ksub_simple(const C& cat, const Obj_t<C>& i) {
  static_assert(C::enumerable, "is_ksub_simple needs an enumerable instance");
  if (cat.is_zero_object(i)) return false;
  return cat.enumerate_ksub(i).size() == 2;
}

// f.x = g.x for every kernel x with domain isomorphic to i forces f = g,
// over all parallel pairs between the probe objects.
template <typename C>
bool is_ksub_generator(const C& cat, const Obj_t<C>& i,
                       const std::vector<Obj_t<C>>& probes,
                       std::size_t guard = kEnumerationGuard) {
  static_assert(C::enumerable, "is_ksub_generator needs an enumerable instance");
  for (const auto& x : probes) {
    std::vector<Mor_t<C>> points;
    for (auto& m : cat.enumerate_ksub(x))
      if (cat.objects_isomorphic(cat.src(m), i)) points.push_back(std::move(m));
    for (const auto& y : probes) {
      const auto homset = cat.enumerate_homset(x, y, guard);
      for (std::size_t a = 0; a < homset.size(); ++a)
        for (std::size_t b = a + 1; b < homset.size(); ++b) {
          bool separated = false;
          for (const auto& pt : points)
            if (!cat.mor_eq(cat.compose(homset[a], pt), cat.compose(homset[b], pt))) {
              separated = true;
              break;
            }
          if (!separated) return false;
        }
    }
  }
  return true;
}

// The three equivalent simplicity conditions, cross-checkable in tests:
// identity an atom in KSub(i); KSub(i) two-element; every kernel out of i
// into a probe is an atom there.
template <typename C>
std::array<bool, 3> ksub_simple_conditions(const C& cat, const Obj_t<C>& i,
                                           const std::vector<Obj_t<C>>& probes) {
  static_assert(C::enumerable);
  const KSubLattice<C> li = build_lattice(cat, i);
  const auto atoms_i = lattice_atoms(li);
  bool id_atom = false;
  for (int a : atoms_i)
    if (a == li.top) id_atom = true;
  const bool two_elem = li.size() == 2 && !cat.is_zero_object(i);

  bool kernels_atomic = !cat.is_zero_object(i);
  for (const auto& x : probes) {
    const KSubLattice<C> lx = build_lattice(cat, x);
    const auto atoms_x = lattice_atoms(lx);
    for (const auto& m : cat.enumerate_ksub(x)) {
      if (!cat.objects_isomorphic(cat.src(m), i)) continue;
      if (cat.is_zero_object(cat.src(m))) continue;
      const int idx = lattice_index_of(cat, lx, KernelSub<C>{m});
      bool is_atom = false;
      for (int a : atoms_x)
        if (a == idx) is_atom = true;
      if (!is_atom) kernels_atomic = false;
    }
  }
  return {id_atom, two_elem, kernels_atomic};
}

// ---- opclassifier --------------------------------------------------------------

template <typename C>
Mor_t<C> opclassifier_char(const C& cat, const KernelSub<C>& m) {
  static_assert(C::has_opclassifier, "this instance has no kernel opclassifier");
  return cat.char_mor(m.mor);
}

}  // namespace dagkern
