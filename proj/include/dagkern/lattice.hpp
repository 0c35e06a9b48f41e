#pragma once

// Kernel subobject lattices. Meets come from pullbacks (composing the two
// kernels), joins from De Morgan over the orthocomplement, and a built
// lattice precomputes order/meet/join/ortho tables so law sweeps are O(1)
// per probe.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace dagkern {

// meet(m, n) = m . (m^-1(n)), canonicalised. Kernels compose, so the result
// is a kernel subobject again.
template <typename C>
KernelSub<C> meet_ks(const C& cat, const KernelSub<C>& m, const KernelSub<C>& n) {
  if (!cat.obj_eq(codomain(cat, m), codomain(cat, n)))
    throw ObjectMismatch("meet: different codomains");
  const KernelSub<C> pulled = pullback_kernel(cat, m.mor, n);
  return KernelSub<C>{canonical_kernel_rep(cat, cat.compose(m.mor, pulled.mor))};
}

template <typename C>
KernelSub<C> join_ks(const C& cat, const KernelSub<C>& m, const KernelSub<C>& n) {
  return ortho(cat, meet_ks(cat, ortho(cat, m), ortho(cat, n)));
}

template <typename C>
KernelSub<C> bottom_ks(const C& cat, const Obj_t<C>& x) {
  return KernelSub<C>{cat.kernel(cat.identity(x))};
}

template <typename C>
KernelSub<C> top_ks(const C& cat, const Obj_t<C>& x) {
  return KernelSub<C>{cat.kernel(cat.zero_mor(x, x))};
}

template <typename C>
struct KSubLattice {
  Obj_t<C> codomain_obj;
  std::vector<KernelSub<C>> elems;
  std::vector<std::vector<std::uint8_t>> leq;  // leq[i][j] : elems[i] <= elems[j]
  std::vector<std::vector<int>> meet_t;
  std::vector<std::vector<int>> join_t;
  std::vector<int> ortho_t;
  int bottom = -1;
  int top = -1;

  std::size_t size() const { return elems.size(); }
  bool leq_at(int i, int j) const {
    return leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0;
  }
};

template <typename C>
int lattice_index_of(const C& cat, const KSubLattice<C>& lat, const KernelSub<C>& m) {
  for (std::size_t i = 0; i < lat.elems.size(); ++i)
    if (cat.mor_eq(lat.elems[i].mor, m.mor)) return static_cast<int>(i);
  for (std::size_t i = 0; i < lat.elems.size(); ++i)
    if (subobject_eq(cat, lat.elems[i], m)) return static_cast<int>(i);
  return -1;
}

// Build the full lattice structure over a given (closed) element list.
// Throws if the list is not closed under meet/join/ortho or misses 0/1.
template <typename C>
KSubLattice<C> build_lattice_from_elements(const C& cat, const Obj_t<C>& x,
                                           std::vector<KernelSub<C>> elems) {
  KSubLattice<C> lat;
  lat.codomain_obj = x;
  lat.elems = std::move(elems);
  const std::size_t n = lat.elems.size();
  lat.leq.assign(n, std::vector<std::uint8_t>(n, 0));
  lat.meet_t.assign(n, std::vector<int>(n, -1));
  lat.join_t.assign(n, std::vector<int>(n, -1));
  lat.ortho_t.assign(n, -1);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      lat.leq[i][j] = subobject_leq(cat, lat.elems[i], lat.elems[j]) ? 1 : 0;

  lat.bottom = lattice_index_of(cat, lat, bottom_ks(cat, x));
  lat.top = lattice_index_of(cat, lat, top_ks(cat, x));
  if (lat.bottom < 0 || lat.top < 0)
    throw LogicError("lattice: element list is missing bottom or top");

  for (std::size_t i = 0; i < n; ++i) {
    const int oi = lattice_index_of(cat, lat, ortho(cat, lat.elems[i]));
    if (oi < 0) throw LogicError("lattice: element list not closed under ortho");
    lat.ortho_t[i] = oi;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int mij = lattice_index_of(cat, lat, meet_ks(cat, lat.elems[i], lat.elems[j]));
      const int jij = lattice_index_of(cat, lat, join_ks(cat, lat.elems[i], lat.elems[j]));
      if (mij < 0 || jij < 0)
        throw LogicError("lattice: element list not closed under meet/join");
      lat.meet_t[i][j] = mij;
      lat.join_t[i][j] = jij;
    }
  return lat;
}

// Full KSub(X) for enumerable instances.
template <typename C>
KSubLattice<C> build_lattice(const C& cat, const Obj_t<C>& x) {
  static_assert(C::enumerable, "build_lattice needs an enumerable instance");
  std::vector<KernelSub<C>> elems;
  for (auto& m : cat.enumerate_ksub(x)) elems.push_back(KernelSub<C>{std::move(m)});
  return build_lattice_from_elements(cat, x, std::move(elems));
}

// Close a seed set of subobjects of x under ortho, meet and join, then build.
// Intended for instances whose full KSub is not enumerable.
template <typename C>
KSubLattice<C> generate_sublattice(const C& cat, const Obj_t<C>& x,
                                   const std::vector<KernelSub<C>>& seeds,
                                   std::size_t cap = 64) {
  std::vector<KernelSub<C>> elems;
  auto push_unique = [&](const KernelSub<C>& m) {
    for (const auto& e : elems)
      if (subobject_eq(cat, e, m)) return false;
    elems.push_back(KernelSub<C>{canonical_kernel_rep(cat, m.mor)});
    return true;
  };
  push_unique(bottom_ks(cat, x));
  push_unique(top_ks(cat, x));
  for (const auto& s : seeds) {
    if (!cat.obj_eq(codomain(cat, s), x))
      throw ObjectMismatch("generate_sublattice: seed has wrong codomain");
    push_unique(s);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t n = elems.size();
    if (n > cap) throw LogicError("generate_sublattice: closure exceeds cap; supply a closed element list");
    for (std::size_t i = 0; i < n && !grew; ++i)
      grew = push_unique(ortho(cat, elems[i]));
    for (std::size_t i = 0; i < n && !grew; ++i)
      for (std::size_t j = i; j < n && !grew; ++j) {
        grew = push_unique(meet_ks(cat, elems[i], elems[j])) ||
               push_unique(join_ks(cat, elems[i], elems[j]));
      }
  }
  return build_lattice_from_elements(cat, x, std::move(elems));
}

// ---- order-theoretic probes -------------------------------------------------

template <typename C>
std::vector<int> lattice_atoms(const KSubLattice<C>& lat) {
  std::vector<int> out;
  const int n = static_cast<int>(lat.size());
  for (int a = 0; a < n; ++a) {
    if (a == lat.bottom) continue;
    bool atom = true;
    for (int b = 0; b < n && atom; ++b)
      if (b != lat.bottom && b != a && lat.leq[b][a]) atom = false;
    if (atom) out.push_back(a);
  }
  return out;
}

template <typename C>
bool lattice_is_atomic(const KSubLattice<C>& lat) {
  const auto atoms = lattice_atoms(lat);
  const int n = static_cast<int>(lat.size());
  for (int x = 0; x < n; ++x) {
    if (x == lat.bottom) continue;
    bool found = false;
    for (int a : atoms)
      if (lat.leq[a][x]) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

template <typename C>
bool lattice_is_atomistic(const KSubLattice<C>& lat) {
  const auto atoms = lattice_atoms(lat);
  const int n = static_cast<int>(lat.size());
  for (int x = 0; x < n; ++x) {
    int acc = lat.bottom;
    for (int a : atoms)
      if (lat.leq[a][x]) acc = lat.join_t[acc][a];
    if (acc != x) return false;
  }
  return true;
}

}  // namespace dagkern
