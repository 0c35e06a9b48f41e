#pragma once

// Structure-preserving passages between the concrete instances: graphs of
// total functions inside the relational instance, partial injections viewed
// as relations, and the square-summable-sequence embedding of partial
// injections into finite-dimensional Hilbert spaces.

#include <cstddef>
#include <utility>
#include <vector>

#include "fdhilb.hpp"
#include "finpinj.hpp"
#include "finrel.hpp"

namespace dagkern {

// A total function between finite label sets, the raw material for graphs.
struct FinFunMor {
  FinRel::Object src;
  FinRel::Object tgt;
  std::vector<std::size_t> map;  // map[i] = index in tgt of the image of src[i]
};

inline FinFunMor finfun_identity(const FinRel::Object& x) {
  FinFunMor f{x, x, {}};
  f.map.resize(x.labels.size());
  for (std::size_t i = 0; i < f.map.size(); ++i) f.map[i] = i;
  return f;
}

inline FinFunMor finfun_compose(const FinFunMor& g, const FinFunMor& f) {
  if (!(f.tgt.labels == g.src.labels))
    throw ObjectMismatch("function composition: objects do not match");
  FinFunMor out{f.src, g.tgt, {}};
  out.map.reserve(f.map.size());
  for (std::size_t v : f.map) out.map.push_back(g.map.at(v));
  return out;
}

// The graph of a total function, as a relation.
inline FinRel::Mor graph_of(const FinRel& rel, const FinFunMor& f) {
  if (f.map.size() != f.src.labels.size())
    throw InvalidMorphism("graph: map length does not match the source");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i) {
    if (f.map[i] >= f.tgt.labels.size())
      throw InvalidMorphism("graph: map value out of range");
    pairs.emplace_back(i, f.map[i]);
  }
  FinRel::Mor out = rel.zero_mor(f.src, f.tgt);
  for (auto [s, t] : pairs) out.rel.set(t, s, true);
  return out;
}

// A partial injection seen as a relation.
inline FinRel::Mor pinj_to_rel(const FinRel& rel, const FinPInj::Mor& f) {
  FinRel::Mor out = rel.zero_mor(FinRel::Object{f.src.labels}, FinRel::Object{f.tgt.labels});
  for (std::size_t s = 0; s < f.table.size(); ++s)
    if (f.table[s]) out.rel.set(*f.table[s], s, true);
  return out;
}

// The square-summable embedding: a finite set becomes the space of tuples
// indexed by it, a partial injection becomes the 0/1 matrix routing basis
// vectors and killing undefined points.
inline FdHilb::Object l2_object(const FinPInj::Object& x) {
  return FdHilb::Object{x.labels.size()};
}

inline FdHilb::Mor l2_mor(const FdHilb& hilb, const FinPInj::Mor& f) {
  FdHilb::Mor out = hilb.zero_mor(l2_object(f.src), l2_object(f.tgt));
  for (std::size_t s = 0; s < f.table.size(); ++s)
    if (f.table[s])
      out.mat(static_cast<Eigen::Index>(*f.table[s]), static_cast<Eigen::Index>(s)) = 1.0;
  return out;
}

}  // namespace dagkern
