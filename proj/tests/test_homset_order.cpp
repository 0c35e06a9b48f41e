#include "test_support.hpp"

using namespace dagkern;
using namespace testsup;

namespace {

FinRel rel;
FinPInj pinj;
FdHilb hilb;

const FinRel::Object X2 = rel_obj({"0", "1"});
const FinRel::Object Y2 = rel_obj({"a", "b"});

// Extension order on partial injections: g agrees with f wherever f is defined.
bool extends(const FinPInj::Mor& f, const FinPInj::Mor& g) {
  for (std::size_t i = 0; i < f.table.size(); ++i)
    if (f.table[i] && (!g.table[i] || *g.table[i] != *f.table[i])) return false;
  return true;
}

// An ordered pair in the plane order: f supported on the first axis, then a
// perturbation supported on the orthogonal complement of both image and
// coimage, so their sum dominates f.
std::pair<FdHilb::Mor, FdHilb::Mor> ordered_pair_dim3(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Cmat f = Cmat::Zero(3, 3);
  f(0, 0) = {gauss(rng), gauss(rng)};
  Cmat g = f;
  for (int i = 1; i < 3; ++i)
    for (int j = 1; j < 3; ++j) g(i, j) = {gauss(rng), gauss(rng)};
  const FdHilb::Object c3{3};
  return {FdHilb::Mor{c3, c3, f}, FdHilb::Mor{c3, c3, g}};
}

}  // namespace

TEST_CASE("the homset order is a poset with zero at the bottom", "[order]") {
  const auto homset = rel.enumerate_homset(X2, Y2);
  REQUIRE(homset.size() == 16);
  std::vector<std::vector<bool>> leq(16, std::vector<bool>(16));
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j)
      leq[i][j] = homset_leq(rel, homset[i], homset[j]);

  Violations v;
  for (std::size_t i = 0; i < 16; ++i) {
    v.expect(leq[i][i], "reflexivity");
    v.expect(homset_leq(rel, rel.zero_mor(X2, Y2), homset[i]), "zero is least");
    for (std::size_t j = 0; j < 16; ++j) {
      if (leq[i][j] && leq[j][i])
        v.expect(rel.mor_eq(homset[i], homset[j]), "antisymmetry");
      for (std::size_t k = 0; k < 16; ++k)
        if (leq[i][j] && leq[j][k]) v.expect(leq[i][k], "transitivity");
    }
  }
  INFO(v.summary());
  REQUIRE(v.ok());
}

namespace {

// r <= s iff s adds pairs only on rows and columns that r leaves untouched:
// s = r plus extra pairs whose sources avoid every source of r and whose
// targets avoid every target of r.  Plain inclusion is weaker: it would
// let s enlarge a row r already uses, which breaks the middle square of
// the factorisation comparison.
bool grows_on_fresh_axes(const FinRel::Mor& r, const FinRel::Mor& s) {
  const auto rp = rel_pairs(r);
  const auto sp = rel_pairs(s);
  if (!std::includes(sp.begin(), sp.end(), rp.begin(), rp.end())) return false;
  std::set<std::string> rows, cols;
  for (const auto& p : rp) {
    rows.insert(p.first);
    cols.insert(p.second);
  }
  for (const auto& p : sp)
    if (!std::binary_search(rp.begin(), rp.end(), p))
      if (rows.count(p.first) || cols.count(p.second)) return false;
  return true;
}

}  // namespace

TEST_CASE("relations are ordered by growth on fresh rows and columns", "[order]") {
  Violations v;
  for (const auto& r : rel.enumerate_homset(X2, Y2))
    for (const auto& s : rel.enumerate_homset(X2, Y2)) {
      const bool leq = homset_leq(rel, r, s);
      v.expect(leq == grows_on_fresh_axes(r, s),
               "order vs fresh-axis growth for " + rel.show(r) + " vs " + rel.show(s));
      if (leq) {
        const auto rp = rel_pairs(r);
        const auto sp = rel_pairs(s);
        v.expect(std::includes(sp.begin(), sp.end(), rp.begin(), rp.end()),
                 "the order implies inclusion");
      }
    }
  INFO(v.summary());
  REQUIRE(v.ok());

  // A pair on a fresh row and column extends; reusing a row or column does
  // not, even though both candidates include the smaller relation.
  const auto base = rel.from_pairs(X2, Y2, {{"0", "a"}});
  const auto fresh = rel.from_pairs(X2, Y2, {{"0", "a"}, {"1", "b"}});
  const auto same_col = rel.from_pairs(X2, Y2, {{"0", "a"}, {"1", "a"}});
  const auto same_row = rel.from_pairs(X2, Y2, {{"0", "a"}, {"0", "b"}});
  REQUIRE(homset_leq(rel, base, fresh));
  REQUIRE_FALSE(homset_leq(rel, base, same_col));
  REQUIRE_FALSE(homset_leq(rel, base, same_row));
}

TEST_CASE("partial injections are ordered by extension", "[order]") {
  const auto px = pinj_obj({"0", "1"});
  const auto py = pinj_obj({"a", "b"});
  Violations v;
  for (const auto& f : pinj.enumerate_homset(px, py))
    for (const auto& g : pinj.enumerate_homset(px, py))
      v.expect(homset_leq(pinj, f, g) == extends(f, g), "order vs extension");
  for (const auto& f : pinj.enumerate_homset(px, px))
    for (const auto& g : pinj.enumerate_homset(px, px))
      v.expect(homset_leq(pinj, f, g) == extends(f, g), "endo order vs extension");
  INFO(v.summary());
  REQUIRE(v.ok());
}

TEST_CASE("operator order on the plane", "[order]") {
  const FdHilb::Object c2{2};
  const auto diag10 = hmor(hilb, 2, 2, {1.0, 0.0, 0.0, 0.0});
  const auto eye = hilb.identity(c2);

  SECTION("a coordinate projection sits below the identity") {
    REQUIRE(homset_leq(hilb, diag10, eye));
    REQUIRE_FALSE(homset_leq(hilb, eye, diag10));
  }

  SECTION("adding a lower-left entry does not dominate the projection") {
    const auto skew = hmor(hilb, 2, 2, {1.0, 0.0, 1.0, 0.0});
    const auto w = homset_order_witness(hilb, diag10, skew);
    REQUIRE_FALSE(w.leq);
    REQUIRE_FALSE(w.failed_equation.empty());
  }

  SECTION("scaling the complement keeps the projection below") {
    const auto diag1h = hmor(hilb, 2, 2, {1.0, 0.0, 0.0, 0.5});
    REQUIRE(homset_leq(hilb, diag10, diag1h));
  }

  SECTION("block perturbations dominate, rank-one overlaps do not") {
    std::mt19937_64 rng(57);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const FdHilb::Object c3{3};
    for (int trial = 0; trial < 40; ++trial) {
      const auto [f, g] = ordered_pair_dim3(rng);
      REQUIRE(homset_leq(hilb, f, g));
      REQUIRE(homset_leq(hilb, hilb.dagger(f), hilb.dagger(g)));

      // overlap in the coimage: the perturbation reuses the source axis
      Cmat bad = f.mat;
      Eigen::VectorXcd v(3);
      v << 0.0, std::complex<double>(gauss(rng), gauss(rng)),
          std::complex<double>(gauss(rng), gauss(rng));
      v.normalize();
      bad.col(0) += v;
      REQUIRE_FALSE(homset_leq(hilb, f, FdHilb::Mor{c3, c3, bad}));
    }
  }

  SECTION("a small operator family is still a poset") {
    std::mt19937_64 rng(59);
    const auto [f, g] = ordered_pair_dim3(rng);
    const FdHilb::Object c3{3};
    const std::vector<FdHilb::Mor> fam{hilb.zero_mor(c3, c3), f, g, hilb.identity(c3)};
    std::vector<std::vector<bool>> leq(4, std::vector<bool>(4));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        leq[i][j] = homset_leq(hilb, fam[i], fam[j]);
    for (std::size_t i = 0; i < 4; ++i) {
      REQUIRE(leq[i][i]);
      REQUIRE(leq[0][i]);
      for (std::size_t j = 0; j < 4; ++j) {
        if (leq[i][j] && leq[j][i]) REQUIRE(hilb.mor_eq(fam[i], fam[j]));
        for (std::size_t k = 0; k < 4; ++k)
          if (leq[i][j] && leq[j][k]) REQUIRE(leq[i][k]);
      }
    }
  }
}

TEST_CASE("monotone and non-monotone operations on the order", "[order]") {
  const auto homset = rel.enumerate_homset(X2, Y2);

  SECTION("dagger preserves the order") {
    const auto rep = check_order_preservation(
        rel, homset, [&](const FinRel::Mor& f) { return rel.dagger(f); }, "dagger");
    REQUIRE(rep.pass);
  }

  SECTION("kernels and cokernels compose monotonically, arbitrary relations need not") {
    const auto Y3 = rel_obj({"a", "b", "c"});
    const auto incl = rel.from_pairs(Y2, Y3, {{"a", "a"}, {"b", "b"}});
    const auto rep_post = check_order_preservation(
        rel, homset, [&](const FinRel::Mor& f) { return rel.compose(incl, f); },
        "post-compose with a kernel");
    REQUIRE(rep_post.pass);

    const auto X3 = rel_obj({"0", "1", "2"});
    const auto proj = rel.dagger(rel.from_pairs(X2, X3, {{"0", "0"}, {"1", "1"}}));
    const auto rep_pre = check_order_preservation(
        rel, homset, [&](const FinRel::Mor& f) { return rel.compose(f, proj); },
        "pre-compose with a cokernel");
    REQUIRE(rep_pre.pass);

    // An arbitrary relation is not monotone: smearing a onto {a,b} makes the
    // composite reuse a column that the smaller composite already occupies.
    const auto smear = rel.from_pairs(Y2, Y2, {{"a", "a"}, {"a", "b"}, {"b", "b"}});
    const auto rep_any = check_order_preservation(
        rel, homset, [&](const FinRel::Mor& f) { return rel.compose(smear, f); },
        "post-compose with an arbitrary relation");
    REQUIRE_FALSE(rep_any.pass);
    REQUIRE(rep_any.witness.has_value());
    REQUIRE(homset_leq(rel, rep_any.witness->first, rep_any.witness->second));
    REQUIRE_FALSE(homset_leq(rel, rel.compose(smear, rep_any.witness->first),
                             rel.compose(smear, rep_any.witness->second)));
  }

  SECTION("operator composition is not monotone") {
    const auto diag10 = hmor(hilb, 2, 2, {1.0, 0.0, 0.0, 0.0});
    const auto eye = hilb.identity(FdHilb::Object{2});
    const auto h = hmor(hilb, 2, 2, {1.0, 1.0, 0.0, 0.0});
    REQUIRE(homset_leq(hilb, diag10, eye));
    REQUIRE_FALSE(homset_leq(hilb, hilb.compose(h, diag10), hilb.compose(h, eye)));

    const std::vector<FdHilb::Mor> fam{diag10, eye};
    const auto rep = check_order_preservation(
        hilb, fam, [&](const FdHilb::Mor& f) { return hilb.compose(h, f); },
        "post-compose with a non-isometry");
    REQUIRE_FALSE(rep.pass);
    REQUIRE(rep.witness.has_value());
    REQUIRE(hilb.mor_eq(rep.witness->first, diag10));
    REQUIRE(hilb.mor_eq(rep.witness->second, eye));
    REQUIRE(rep.context == "post-compose with a non-isometry");
  }

  SECTION("isometric composition stays monotone for operators") {
    std::mt19937_64 rng(61);
    const auto iso = hilb.sample_isometry(FdHilb::Object{4}, 3, rng);
    for (int trial = 0; trial < 20; ++trial) {
      const auto [f, g] = ordered_pair_dim3(rng);
      REQUIRE(homset_leq(hilb, hilb.compose(iso, f), hilb.compose(iso, g)));
    }
  }
}

TEST_CASE("effects mirror the subobject order", "[order]") {
  const auto x3 = rel_obj({"0", "1", "2"});
  Violations v;
  for (const auto& m : all_ksubs(rel, x3)) {
    v.expect(homset_leq(rel, effect_of(rel, m).endo, rel.identity(x3)),
             "effect exceeds the identity");
    for (const auto& n : all_ksubs(rel, x3))
      v.expect(subobject_leq(rel, m, n) ==
                   homset_leq(rel, effect_of(rel, m).endo, effect_of(rel, n).endo),
               "effect order mismatch");
  }
  INFO(v.summary());
  REQUIRE(v.ok());

  SECTION("projection order on the plane witness lattice") {
    const FdHilb::Object c2{2};
    const KernelSub<FdHilb> k1{hvec(hilb, 2, {1.0, 0.0})};
    const KernelSub<FdHilb> k2{hvec(hilb, 2, {0.0, 1.0})};
    const double s = 1.0 / std::sqrt(2.0);
    const KernelSub<FdHilb> diag{hvec(hilb, 2, {s, s})};
    const auto lat = generate_sublattice(hilb, c2, {k1, k2, diag});
    for (const auto& m : lat.elems)
      for (const auto& n : lat.elems)
        REQUIRE(subobject_leq(hilb, m, n) ==
                homset_leq(hilb, effect_of(hilb, m).endo, effect_of(hilb, n).endo));
  }
}

TEST_CASE("order comparison requires parallel morphisms", "[order]") {
  const auto incl = rel.from_pairs(rel_obj({"0"}), X2, {{"0", "0"}});
  REQUIRE_THROWS_AS(homset_order_witness(rel, rel.identity(X2), incl), ObjectMismatch);
}
