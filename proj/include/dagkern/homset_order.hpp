#pragma once

// Partial order on each homset, decided through the four-way factorisation:
// f <= g when the images and coimages of f embed into those of g by
// connecting maps that commute with the middle parts.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace dagkern {

template <typename C>
struct OrderWitness {
  bool leq = false;
  // Connecting maps between the factorisations, kept for inspection.
  Mor_t<C> image_link;    // dom(i_f) -> dom(i_g)
  Mor_t<C> coimage_link;  // dom(i_{f dagger}) -> dom(i_{g dagger})
  std::string failed_equation;  // empty when leq
};

template <typename C>
OrderWitness<C> homset_order_witness(const C& cat, const Mor_t<C>& f, const Mor_t<C>& g) {
  if (!cat.obj_eq(cat.src(f), cat.src(g)) || !cat.obj_eq(cat.tgt(f), cat.tgt(g)))
    throw ObjectMismatch("homset order: morphisms are not parallel");
  const Factorisation<C> ff = full_factorise(cat, f);
  const Factorisation<C> fg = full_factorise(cat, g);
  const Mor_t<C> i_f = ff.image.mor;
  const Mor_t<C> i_g = fg.image.mor;
  const Mor_t<C> i_fd = cat.dagger(ff.coimage);  // image of f dagger
  const Mor_t<C> i_gd = cat.dagger(fg.coimage);

  OrderWitness<C> w;
  w.image_link = cat.compose(cat.dagger(i_g), i_f);
  w.coimage_link = cat.compose(cat.dagger(i_gd), i_fd);
  const Mor_t<C>& phi = w.image_link;
  const Mor_t<C>& psi = w.coimage_link;

  if (!cat.mor_eq(cat.compose(cat.dagger(psi), fg.coimage), ff.coimage)) {
    w.failed_equation = "coimage embedding";
    return w;
  }
  if (!cat.mor_eq(cat.compose(phi, ff.middle), cat.compose(fg.middle, psi))) {
    w.failed_equation = "middle square";
    return w;
  }
  if (!cat.mor_eq(cat.compose(cat.dagger(phi), fg.middle),
                  cat.compose(ff.middle, cat.dagger(psi)))) {
    w.failed_equation = "middle square dagger";
    return w;
  }
  if (!cat.mor_eq(cat.compose(i_g, phi), i_f)) {
    w.failed_equation = "image embedding";
    return w;
  }
  w.leq = true;
  return w;
}

template <typename C>
bool homset_leq(const C& cat, const Mor_t<C>& f, const Mor_t<C>& g) {
  return homset_order_witness(cat, f, g).leq;
}

// Composition on either side, dagger, and kernel pullback are monotone; these
// helpers report the first violating pair over supplied morphism lists.
template <typename C>
struct MonotonicityReport {
  bool pass = true;
  std::optional<std::pair<Mor_t<C>, Mor_t<C>>> witness;  // the ordered pair broken
  std::string context;
};

template <typename C, typename Map>
MonotonicityReport<C> check_order_preservation(const C& cat,
                                               const std::vector<Mor_t<C>>& homset,
                                               Map&& apply, std::string context) {
  MonotonicityReport<C> rep;
  rep.context = std::move(context);
  for (const auto& f : homset)
    for (const auto& g : homset) {
      if (!homset_leq(cat, f, g)) continue;
      if (!homset_leq(cat, apply(f), apply(g))) {
        rep.pass = false;
        rep.witness = {f, g};
        return rep;
      }
    }
  return rep;
}

}  // namespace dagkern
