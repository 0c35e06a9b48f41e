#include "test_support.hpp"

using namespace dagkern;
using namespace testsup;

namespace {

FinRel rel;
FinPInj pinj;

const FinRel::Object O1 = rel_obj({"0"});
const FinRel::Object X2 = rel_obj({"0", "1"});
const FinRel::Object Y2 = rel_obj({"a", "b"});

// Is a relation single-valued and injective, i.e. a partial injection?
bool is_pinj_relation(const FinRel::Mor& r) {
  const std::size_t rows = r.tgt.labels.size();
  const std::size_t cols = r.src.labels.size();
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t hits = 0;
    for (std::size_t t = 0; t < rows; ++t)
      if (r.rel.at(t, c)) ++hits;
    if (hits > 1) return false;
  }
  for (std::size_t t = 0; t < rows; ++t) {
    std::size_t hits = 0;
    for (std::size_t c = 0; c < cols; ++c)
      if (r.rel.at(t, c)) ++hits;
    if (hits > 1) return false;
  }
  return true;
}

bool pair_is_normalized(const FinRel& cat, const KckMorphism<FinRel>& f) {
  return cat.mor_eq(f.ker_part, canonical_kernel_rep(cat, f.ker_part)) &&
         is_kernel_mor(cat, cat.dagger(f.coker_part)) &&
         is_kernel_mor(cat, f.ker_part);
}

}  // namespace

TEST_CASE("pair construction validates both legs", "[kck]") {
  const auto A = rel_obj({"a"});
  const auto collapse = rel.from_pairs(X2, A, {{"0", "a"}, {"1", "a"}});
  const auto keep0 = rel.from_pairs(X2, O1, {{"0", "0"}});
  const auto fork = rel.from_pairs(O1, Y2, {{"0", "a"}, {"0", "b"}});

  REQUIRE_THROWS_AS(make_kck(rel, keep0, rel.identity(X2)), ObjectMismatch);
  REQUIRE_THROWS_AS(make_kck(rel, collapse, rel.identity(A)), InvalidMorphism);
  REQUIRE_THROWS_AS(make_kck(rel, rel.identity(O1), fork), InvalidMorphism);

  SECTION("a valid pair comes out with a canonical kernel leg") {
    const auto f = make_kck(rel, keep0, rel.from_pairs(O1, A, {{"0", "a"}}));
    REQUIRE(pair_is_normalized(rel, f));
    // the relabeling got rolled into the surjection leg
    REQUIRE(rel_pairs(f.coker_part) == std::set<LabelPair>{{"0", "a"}});
    REQUIRE(rel_pairs(f.ker_part) == std::set<LabelPair>{{"a", "a"}});
  }
}

TEST_CASE("pair composition restricts to the shared middle", "[kck]") {
  const auto A = rel_obj({"a"});
  const auto Z = rel_obj({"z"});
  const auto f = make_kck(rel, rel.from_pairs(X2, O1, {{"0", "0"}}),
                          rel.from_pairs(O1, A, {{"0", "a"}}));
  const auto g = make_kck(rel, rel.identity(A), rel.from_pairs(A, Z, {{"a", "z"}}));
  const auto gf = kck_compose(rel, g, f);

  REQUIRE(pair_is_normalized(rel, gf));
  REQUIRE(rel.obj_eq(rel.tgt(gf.coker_part), Z));  // one point survives
  REQUIRE(rel_pairs(gf.coker_part) == std::set<LabelPair>{{"0", "z"}});
  REQUIRE(rel_pairs(kck_project(rel, gf)) == std::set<LabelPair>{{"0", "z"}});

  SECTION("composition through disjoint middles is the zero pair") {
    const KckCategory<FinRel> kck(rel);
    const auto keep0 = make_kck(rel, rel.from_pairs(X2, O1, {{"0", "0"}}),
                                rel.from_pairs(O1, X2, {{"0", "0"}}));
    const auto keep1_obj = rel_obj({"1"});
    const auto keep1 = make_kck(rel, rel.from_pairs(X2, keep1_obj, {{"1", "1"}}),
                                rel.from_pairs(keep1_obj, X2, {{"1", "1"}}));
    const auto z = kck_compose(rel, keep1, keep0);
    REQUIRE(kck_eq(rel, z, kck.zero_mor(X2, X2)));
  }
}

TEST_CASE("the pair category satisfies the instance laws", "[kck]") {
  const KckCategory<FinRel> kck(rel);
  REQUIRE(kck.name() == "finrel-kck");
  const std::vector<FinRel::Object> objs{rel.zero_object(), O1, X2};

  SECTION("homset sizes match the partial injection counts") {
    REQUIRE(kck.enumerate_homset(O1, O1).size() == 2);
    REQUIRE(kck.enumerate_homset(O1, X2).size() == 3);
    REQUIRE(kck.enumerate_homset(X2, O1).size() == 3);
    REQUIRE(kck.enumerate_homset(X2, X2).size() == 7);
    for (std::size_t n = 0; n <= 2; ++n)
      for (std::size_t m = 0; m <= 2; ++m)
        REQUIRE(kck.enumerate_homset(objs[n], objs[m]).size() == pinj_count(n, m));
  }

  SECTION("identities, involution, contravariance, zero absorption") {
    Violations v;
    for (const auto& x : objs)
      for (const auto& y : objs) {
        for (const auto& f : kck.enumerate_homset(x, y)) {
          v.expect(pair_is_normalized(rel, f), "enumerated pair not normalized");
          v.expect(kck.mor_eq(kck.compose(f, kck.identity(x)), f), "right identity");
          v.expect(kck.mor_eq(kck.compose(kck.identity(y), f), f), "left identity");
          v.expect(kck.mor_eq(kck.dagger(kck.dagger(f)), f), "involution");
          v.expect(is_zero_mor(kck, kck.compose(f, kck.zero_mor(x, x))),
                   "zero absorption on the right");
          v.expect(is_zero_mor(kck, kck.compose(kck.zero_mor(y, y), f)),
                   "zero absorption on the left");
          for (const auto& g : kck.enumerate_homset(y, x))
            v.expect(kck.mor_eq(kck.dagger(kck.compose(g, f)),
                                kck.compose(kck.dagger(f), kck.dagger(g))),
                     "contravariance");
        }
      }
    INFO(v.summary());
    REQUIRE(v.ok());
  }

  SECTION("composition is associative") {
    Violations v;
    const std::vector<FinRel::Object> small{O1, X2};
    for (const auto& x : small)
      for (const auto& y : small)
        for (const auto& z : small)
          for (const auto& w : small)
            for (const auto& f : kck.enumerate_homset(x, y))
              for (const auto& g : kck.enumerate_homset(y, z))
                for (const auto& h : kck.enumerate_homset(z, w))
                  v.expect(kck.mor_eq(kck.compose(kck.compose(h, g), f),
                                      kck.compose(h, kck.compose(g, f))),
                           "associativity");
    INFO(v.summary());
    REQUIRE(v.ok());
  }

  SECTION("kernels are dagger monos, annihilate, and are universal") {
    Violations v;
    for (const auto& x : objs)
      for (const auto& y : objs)
        for (const auto& f : kck.enumerate_homset(x, y)) {
          const auto k = kck.kernel(f);
          const auto& kx = kck.src(k);
          v.expect(kck.mor_eq(kck.compose(kck.dagger(k), k), kck.identity(kx)),
                   "kernel not a dagger mono");
          v.expect(is_zero_mor(kck, kck.compose(f, k)), "kernel does not annihilate");
          for (const auto& w : objs)
            for (const auto& g : kck.enumerate_homset(w, x)) {
              if (!is_zero_mor(kck, kck.compose(f, g))) continue;
              std::size_t mediators = 0;
              for (const auto& u : kck.enumerate_homset(w, kx))
                if (kck.mor_eq(kck.compose(k, u), g)) ++mediators;
              v.expect(mediators == 1, "killed morphism needs exactly one mediator");
            }
        }
    INFO(v.summary());
    REQUIRE(v.ok());
  }

  SECTION("the kernel of a surjection leg is what the leg drops") {
    const auto f = make_kck(rel, rel.from_pairs(X2, O1, {{"0", "0"}}),
                            rel.identity(O1));
    const KckCategory<FinRel>::Mor k = kck.kernel(f);
    REQUIRE(rel_pairs(k.ker_part) == std::set<LabelPair>{{"1", "1"}});
    REQUIRE(rel.mor_eq(k.coker_part, rel.identity(rel.src(k.ker_part))));
  }

  SECTION("every morphism class collapses to the kernel class") {
    Violations v;
    for (const auto& x : objs)
      for (const auto& y : objs)
        for (const auto& f : kck.enumerate_homset(x, y)) {
          const MorClass c = classify(kck, f);
          v.expect(c.is_dagger_mono == c.is_kernel, "dagger mono vs kernel");
          v.expect(c.is_zero_mono == c.is_dagger_mono, "zero mono vs dagger mono");
          v.expect(probe_mono(kck, f, objs) == c.is_zero_mono, "mono vs zero mono");
          v.expect(c.is_dagger_epi == c.is_cokernel, "dagger epi vs cokernel");
          v.expect(c.is_zero_epi == c.is_dagger_epi, "zero epi vs dagger epi");
        }
    INFO(v.summary());
    REQUIRE(v.ok());
  }

  SECTION("kernel subobjects restrict to the base lattice") {
    const auto base_subs = all_ksubs(rel, X2);
    const auto pair_subs = kck.enumerate_ksub(X2);
    REQUIRE(pair_subs.size() == base_subs.size());
    for (std::size_t i = 0; i < pair_subs.size(); ++i)
      for (std::size_t j = 0; j < pair_subs.size(); ++j) {
        const KernelSub<KckCategory<FinRel>> mi{pair_subs[i]};
        const KernelSub<KckCategory<FinRel>> mj{pair_subs[j]};
        const KernelSub<FinRel> bi{pair_subs[i].ker_part};
        const KernelSub<FinRel> bj{pair_subs[j].ker_part};
        REQUIRE(subobject_leq(kck, mi, mj) == subobject_leq(rel, bi, bj));
      }
  }
}

TEST_CASE("embedding base morphisms as pairs", "[kck]") {
  SECTION("a relation embeds exactly when it is a partial injection") {
    for (const auto& r : rel.enumerate_homset(X2, Y2)) {
      REQUIRE(kck_embeddable(rel, r) == is_pinj_relation(r));
      if (is_pinj_relation(r)) {
        const auto f = kck_embed(rel, r);
        REQUIRE(pair_is_normalized(rel, f));
        REQUIRE(rel.mor_eq(kck_project(rel, f), r));
      } else {
        REQUIRE_THROWS_AS(kck_embed(rel, r), InvalidMorphism);
      }
    }
  }

  SECTION("the two-point fork is the named counterexample") {
    const auto fork = rel.from_pairs(O1, Y2, {{"0", "a"}, {"0", "b"}});
    REQUIRE_FALSE(kck_embeddable(rel, fork));
  }

  SECTION("every partial injection embeds, via its relation") {
    const auto px = pinj_obj({"0", "1"});
    const auto py = pinj_obj({"a", "b"});
    for (const auto& q : pinj.enumerate_homset(px, py)) {
      const auto r = pinj_to_rel(rel, q);
      REQUIRE(kck_embeddable(rel, r));
      REQUIRE(rel.mor_eq(kck_project(rel, kck_embed(rel, r)), r));
    }
  }
}

TEST_CASE("pairs over relations are partial injections in disguise", "[kck]") {
  const KckCategory<FinRel> kck(rel);
  const auto px = pinj_obj({"0", "1"});
  const auto py = pinj_obj({"a", "b"});

  SECTION("projection is a bijection onto partial injection relations") {
    const auto pairs = kck.enumerate_homset(X2, Y2);
    std::set<std::set<LabelPair>> projected;
    for (const auto& f : pairs) {
      const auto r = kck_project(rel, f);
      REQUIRE(is_pinj_relation(r));
      projected.insert(rel_pairs(r));
    }
    REQUIRE(projected.size() == pairs.size());

    std::set<std::set<LabelPair>> from_pinj;
    for (const auto& q : pinj.enumerate_homset(px, py))
      from_pinj.insert(rel_pairs(pinj_to_rel(rel, q)));
    REQUIRE(projected == from_pinj);
  }

  SECTION("projection respects composition, dagger, and kernels") {
    Violations v;
    const std::vector<FinRel::Object> objs{O1, X2};
    for (const auto& x : objs)
      for (const auto& y : objs)
        for (const auto& z : objs)
          for (const auto& f : kck.enumerate_homset(x, y)) {
            v.expect(rel.mor_eq(kck_project(rel, kck.dagger(f)),
                                rel.dagger(kck_project(rel, f))),
                     "projection vs dagger");
            const auto kf = kck.kernel(f);
            v.expect(rel.mor_eq(kck_project(rel, kf),
                                rel.kernel(kck_project(rel, f))),
                     "projection vs kernel");
            for (const auto& g : kck.enumerate_homset(y, z))
              v.expect(rel.mor_eq(kck_project(rel, kck.compose(g, f)),
                                  rel.compose(kck_project(rel, g), kck_project(rel, f))),
                       "projection vs composition");
          }
    INFO(v.summary());
    REQUIRE(v.ok());
  }

  SECTION("round trip from the partial injection side is the identity") {
    for (const auto& q : pinj.enumerate_homset(px, px)) {
      const auto f = kck_embed(rel, pinj_to_rel(rel, q));
      REQUIRE(rel.mor_eq(kck_project(rel, f), pinj_to_rel(rel, q)));
    }
  }
}

TEST_CASE("the pair construction also runs over partial injections", "[kck]") {
  const KckCategory<FinPInj> kck(pinj);
  const auto x = pinj_obj({"0", "1"});
  Violations v;
  for (const auto& f : kck.enumerate_homset(x, x)) {
    v.expect(kck.mor_eq(kck.dagger(kck.dagger(f)), f), "involution");
    const auto k = kck.kernel(f);
    v.expect(is_zero_mor(kck, kck.compose(f, k)), "kernel annihilates");
    for (const auto& g : kck.enumerate_homset(x, x))
      v.expect(kck.mor_eq(kck.dagger(kck.compose(g, f)),
                          kck.compose(kck.dagger(f), kck.dagger(g))),
               "contravariance");
  }
  REQUIRE(kck.enumerate_homset(x, x).size() == pinj.enumerate_homset(x, x).size());
  INFO(v.summary());
  REQUIRE(v.ok());
}
