#pragma once

// Law sweeps shared by the command-line `check` subcommand and the test
// suite. Each driver walks the named objects and morphisms of an input file,
// probes a law exhaustively (enumerable instances) or on seeded samples
// (Hilbert spaces), and reports one result per (object, law) with a
// replayable witness for any failure.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "homset_order.hpp"
#include "kck.hpp"
#include "lattice.hpp"
#include "logic.hpp"

namespace dagkern {

struct LawResult {
  std::string instance;
  std::string object;
  std::string law;
  bool pass = true;
  nlohmann::json witness;  // empty object when pass
};

struct LawConfig {
  std::size_t max_size = 3;    // object-size cap for exhaustive sweeps
  std::uint64_t seed = 0;      // rng seed for sampled instances
  std::size_t samples = 200;   // sampled morphisms per shape (non-enumerable)
  std::size_t sampled_subobjects_per_rank = 3;
  std::size_t guard = kEnumerationGuard;
};

inline const std::vector<std::string>& all_law_keys() {
  static const std::vector<std::string> keys = {"omod", "bool",  "dist",  "sasaki", "adjoint",
                                                "bc",   "order", "effect", "kck"};
  return keys;
}

// Comma-separated law keys, or "all".
inline std::set<std::string> parse_law_keys(const std::string& csv) {
  std::set<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    if (cur == "all") {
      for (const auto& k : all_law_keys()) out.insert(k);
    } else {
      bool known = false;
      for (const auto& k : all_law_keys()) known = known || k == cur;
      if (!known) throw ParseError("unknown law key '" + cur + "'");
      out.insert(cur);
    }
    cur.clear();
  };
  for (char ch : csv) {
    if (ch == ',')
      flush();
    else
      cur.push_back(ch);
  }
  flush();
  if (out.empty()) throw ParseError("empty law selection");
  return out;
}

template <typename C>
class LawSweep {
 public:
  LawSweep(const C& cat, const std::vector<std::pair<std::string, Obj_t<C>>>& objects,
           const std::vector<std::pair<std::string, Mor_t<C>>>& morphisms,
           const LawConfig& cfg)
      : cat_(cat), objects_(objects), morphisms_(morphisms), cfg_(cfg) {}

  std::vector<LawResult> run(const std::set<std::string>& keys) {
    results_.clear();
    for (const auto& [name, x] : objects_) {
      (void)name;
      const auto elems = element_set(x);
      if (elems.empty()) continue;  // beyond the size cap for this sweep
      if (keys.count("omod")) orthomodularity(x, elems);
      if (keys.count("dist")) distributivity(x, elems);
      if (keys.count("bool")) boolean_laws(x, elems);
      if (keys.count("sasaki")) sasaki(x, elems);
      if (keys.count("bc")) beck_chevalley(x, elems);
      if (keys.count("effect")) effects(x, elems);
    }
    if (keys.count("adjoint")) exists_adjoint();
    if (keys.count("order")) homset_order();
    if (keys.count("kck")) kck_laws();
    return std::move(results_);
  }

  // The subobject probe set over x: full KSub for enumerable instances within
  // the size cap, otherwise kernels and images of the file's morphisms plus
  // seeded random subspaces of every intermediate rank.
  std::vector<KernelSub<C>> element_set(const Obj_t<C>& x) {
    std::vector<KernelSub<C>> elems;
    if constexpr (C::enumerable) {
      if (cat_.obj_size(x) > cfg_.max_size) return elems;
      for (auto& m : cat_.enumerate_ksub(x)) elems.push_back(KernelSub<C>{std::move(m)});
    } else {
      auto push_unique = [&](KernelSub<C> m) {
        for (const auto& e : elems)
          if (subobject_eq(cat_, e, m)) return;
        elems.push_back(std::move(m));
      };
      push_unique(bottom_ks(cat_, x));
      push_unique(top_ks(cat_, x));
      for (const auto& [name, f] : morphisms_) {
        (void)name;
        if (cat_.obj_eq(cat_.src(f), x)) push_unique(kernel_sub(cat_, f));
        if (cat_.obj_eq(cat_.tgt(f), x))
          push_unique(KernelSub<C>{canonical_kernel_rep(cat_, f)});
      }
      std::mt19937_64 rng(cfg_.seed ^ (0x9e3779b97f4a7c15ULL * (cat_.obj_size(x) + 1)));
      for (std::size_t k = 1; k < cat_.obj_size(x); ++k)
        for (std::size_t s = 0; s < cfg_.sampled_subobjects_per_rank; ++s)
          push_unique(KernelSub<C>{
              canonical_kernel_rep(cat_, cat_.sample_isometry(x, k, rng))});
    }
    return elems;
  }

 private:
  // ---- per-object lattice laws ----------------------------------------------

  void orthomodularity(const Obj_t<C>& x, const std::vector<KernelSub<C>>& elems) {
    for (const auto& m : elems)
      for (const auto& n : elems) {
        if (!subobject_leq(cat_, m, n)) continue;
        const KernelSub<C> rhs = join_ks(cat_, m, meet_ks(cat_, n, ortho(cat_, m)));
        if (!subobject_eq(cat_, n, rhs))
          return fail(x, "orthomodularity",
                      {{"m", show(m.mor)}, {"n", show(n.mor)}, {"rebuilt", show(rhs.mor)}});
      }
    pass(x, "orthomodularity");
  }

  void distributivity(const Obj_t<C>& x, const std::vector<KernelSub<C>>& elems) {
    bool dist_ok = true;
    for (std::size_t i = 0; i < elems.size() && dist_ok; ++i)
      for (std::size_t j = 0; j < elems.size() && dist_ok; ++j)
        for (std::size_t l = 0; l < elems.size(); ++l) {
          const auto& m = elems[i];
          const auto& n = elems[j];
          const auto& k = elems[l];
          const KernelSub<C> lhs = meet_ks(cat_, m, join_ks(cat_, n, k));
          const KernelSub<C> rhs =
              join_ks(cat_, meet_ks(cat_, m, n), meet_ks(cat_, m, k));
          if (!subobject_eq(cat_, lhs, rhs)) {
            fail(x, "distributivity",
                 {{"m", show(m.mor)},
                  {"n", show(n.mor)},
                  {"k", show(k.mor)},
                  {"lhs", show(lhs.mor)},
                  {"rhs", show(rhs.mor)}});
            dist_ok = false;
            break;
          }
        }
    if (dist_ok) pass(x, "distributivity");

    for (const auto& m : elems)
      for (const auto& n : elems) {
        const KernelSub<C> lhs = ortho(cat_, join_ks(cat_, m, n));
        const KernelSub<C> rhs = meet_ks(cat_, ortho(cat_, m), ortho(cat_, n));
        if (!subobject_eq(cat_, lhs, rhs))
          return fail(x, "de-morgan", {{"m", show(m.mor)}, {"n", show(n.mor)}});
      }
    pass(x, "de-morgan");
  }

  void boolean_laws(const Obj_t<C>& x, const std::vector<KernelSub<C>>& elems) {
    const auto rep = check_boolean_on(cat_, x, elems);
    if (!rep.pass)
      fail(x, "boolean-orthogonality",
           {{"m", show(rep.witness->first.mor)}, {"n", show(rep.witness->second.mor)}});
    else
      pass(x, "boolean-orthogonality");

    // n+ . m computed through the kernel pullback square of n along m.
    bool strong_ok = true;
    for (const auto& m : elems) {
      for (const auto& n : elems) {
        const PullbackSquare<C> sq = pullback_square(cat_, m.mor, n);
        const Mor_t<C> lhs = cat_.compose(cat_.dagger(n.mor), m.mor);
        const Mor_t<C> rhs = cat_.compose(sq.top, cat_.dagger(sq.left.mor));
        if (!cat_.mor_eq(lhs, rhs)) {
          fail(x, "boolean-strengthened", {{"m", show(m.mor)}, {"n", show(n.mor)}});
          strong_ok = false;
          break;
        }
      }
      if (!strong_ok) break;
    }
    if (strong_ok) pass(x, "boolean-strengthened");

    // k => l := k-perp v (k ^ l) is a Heyting implication on Boolean lattices.
    for (const auto& m : elems)
      for (const auto& k : elems)
        for (const auto& l : elems) {
          const bool below = subobject_leq(cat_, meet_ks(cat_, m, k), l);
          const bool hey = subobject_leq(
              cat_, m, join_ks(cat_, ortho(cat_, k), meet_ks(cat_, k, l)));
          if (below != hey)
            return fail(x, "heyting-adjunction",
                        {{"m", show(m.mor)},
                         {"k", show(k.mor)},
                         {"l", show(l.mor)},
                         {"meet-below", below}});
        }
    pass(x, "heyting-adjunction");
  }

  void sasaki(const Obj_t<C>& x, const std::vector<KernelSub<C>>& elems) {
    for (const auto& m : elems)
      for (const auto& n : elems) {
        const auto [h1, h2] = sasaki_hook_routes(cat_, m, n);
        if (!subobject_eq(cat_, h1, h2))
          return fail(x, "sasaki-hook",
                      {{"m", show(m.mor)},
                       {"n", show(n.mor)},
                       {"pullback-route", show(h1.mor)},
                       {"lattice-route", show(h2.mor)}});
        const auto [a1, a2] = and_then_routes(cat_, n, m);
        if (!subobject_eq(cat_, a1, a2))
          return fail(x, "sasaki-and-then",
                      {{"k", show(n.mor)},
                       {"m", show(m.mor)},
                       {"exists-route", show(a1.mor)},
                       {"lattice-route", show(a2.mor)}});
      }
    pass(x, "sasaki-hook");
    pass(x, "sasaki-and-then");

    for (const auto& k : elems)
      for (const auto& m : elems) {
        const KernelSub<C> kam = and_then(cat_, k, m);
        for (const auto& n : elems) {
          const bool lhs = subobject_leq(cat_, kam, n);
          const bool rhs = subobject_leq(cat_, k, sasaki_hook(cat_, m, n));
          if (lhs != rhs)
            return fail(x, "sasaki-adjunction",
                        {{"k", show(k.mor)},
                         {"m", show(m.mor)},
                         {"n", show(n.mor)},
                         {"and-then-below", lhs}});
        }
      }
    pass(x, "sasaki-adjunction");
  }

  void beck_chevalley(const Obj_t<C>& x, const std::vector<KernelSub<C>>& elems) {
    if constexpr (!C::enumerable) {
      (void)x;
      (void)elems;
    } else {
      for (const auto& f : elems)
        for (const auto& g : elems) {
          std::vector<KernelSub<C>> ksub_y;
          for (auto& k : cat_.enumerate_ksub(cat_.src(g.mor)))
            ksub_y.push_back(KernelSub<C>{std::move(k)});
          const auto rep = check_beck_chevalley(cat_, f, g, ksub_y);
          if (!rep.pass)
            return fail(x, "beck-chevalley",
                        {{"f", show(f.mor)},
                         {"g", show(g.mor)},
                         {"k", show(rep.failing_k->mor)}});
        }
      if (!elems.empty()) pass(x, "beck-chevalley");
    }
  }

  void effects(const Obj_t<C>& x, const std::vector<KernelSub<C>>& elems) {
    for (const auto& m : elems) {
      const Effect<C> p = effect_of(cat_, m);
      if (!is_self_adjoint_idempotent(cat_, p.endo))
        return fail(x, "effect-roundtrip", {{"m", show(m.mor)}, {"reason", "not a projection"}});
      const KernelSub<C> back = effect_to_kernel(cat_, p);
      if (!subobject_eq(cat_, back, m))
        return fail(x, "effect-roundtrip",
                    {{"m", show(m.mor)}, {"back", show(back.mor)}});
    }
    // Distinct subobjects must give distinct projections, and for enumerable
    // instances every projection below the identity must arise.
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = i + 1; j < elems.size(); ++j)
        if (cat_.mor_eq(effect_of(cat_, elems[i]).endo, effect_of(cat_, elems[j]).endo) &&
            !subobject_eq(cat_, elems[i], elems[j]))
          return fail(x, "effect-roundtrip",
                      {{"m", show(elems[i].mor)},
                       {"n", show(elems[j].mor)},
                       {"reason", "projections collide"}});
    if constexpr (C::enumerable) {
      if (cat_.obj_size(x) <= cfg_.max_size) {
        const Mor_t<C> one = cat_.identity(x);
        for (const auto& p : cat_.enumerate_homset(x, x, cfg_.guard)) {
          if (!is_self_adjoint_idempotent(cat_, p)) continue;
          if (!homset_leq(cat_, p, one)) continue;
          bool hit = false;
          for (const auto& m : elems)
            if (cat_.mor_eq(effect_of(cat_, m).endo, p)) {
              hit = true;
              break;
            }
          if (!hit)
            return fail(x, "effect-roundtrip",
                        {{"projection", show(p)}, {"reason", "not the effect of any subobject"}});
        }
      }
    }
    pass(x, "effect-roundtrip");

    for (const auto& m : elems)
      for (const auto& n : elems) {
        const bool sub = subobject_leq(cat_, m, n);
        const bool eff = homset_leq(cat_, effect_of(cat_, m).endo, effect_of(cat_, n).endo);
        if (sub != eff)
          return fail(x, "effect-order",
                      {{"m", show(m.mor)}, {"n", show(n.mor)}, {"subobject-below", sub}});
      }
    pass(x, "effect-order");
  }

  // ---- cross-object laws -----------------------------------------------------

  void exists_adjoint() {
    if constexpr (C::enumerable) {
      for (const auto& [xn, x] : objects_) {
        (void)xn;
        if (cat_.obj_size(x) > cfg_.max_size) continue;
        const auto ksub_x = element_set(x);
        for (const auto& [yn, y] : objects_) {
          (void)yn;
          if (cat_.obj_size(y) > cfg_.max_size) continue;
          const auto ksub_y = element_set(y);
          const std::string where = cat_.show_obj(x) + " -> " + cat_.show_obj(y);
          for (const auto& f : cat_.enumerate_homset(x, y, cfg_.guard)) {
            for (const auto& m : ksub_x) {
              const auto [r1, r2] = exists_along_routes(cat_, f, m);
              if (!subobject_eq(cat_, r1, r2))
                return fail_at(where, "exists-routes",
                               {{"f", show(f)},
                                {"m", show(m.mor)},
                                {"image-route", show(r1.mor)},
                                {"ortho-route", show(r2.mor)}});
              for (const auto& n : ksub_y) {
                const bool lhs = subobject_leq(cat_, r1, n);
                const bool rhs = subobject_leq(cat_, m, pullback_kernel(cat_, f, n));
                if (lhs != rhs)
                  return fail_at(where, "exists-adjunction",
                                 {{"f", show(f)},
                                  {"m", show(m.mor)},
                                  {"n", show(n.mor)},
                                  {"exists-below", lhs}});
              }
            }
          }
          pass_at(where, "exists-routes");
          pass_at(where, "exists-adjunction");
        }
      }
    }
  }

  void homset_order() {
    if constexpr (C::enumerable) {
      const std::size_t cap = std::min<std::size_t>(cfg_.max_size, 2);
      for (const auto& [xn, x] : objects_) {
        (void)xn;
        if (cat_.obj_size(x) > cap) continue;
        for (const auto& [yn, y] : objects_) {
          (void)yn;
          if (cat_.obj_size(y) > cap) continue;
          const std::string where = cat_.show_obj(x) + " -> " + cat_.show_obj(y);
          const auto homset = cat_.enumerate_homset(x, y, cfg_.guard);
          const std::size_t n = homset.size();
          std::vector<std::vector<std::uint8_t>> leq(n, std::vector<std::uint8_t>(n, 0));
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
              leq[i][j] = homset_leq(cat_, homset[i], homset[j]) ? 1 : 0;

          const Mor_t<C> zero = cat_.zero_mor(x, y);
          for (std::size_t i = 0; i < n; ++i) {
            if (!leq[i][i])
              return fail_at(where, "order-poset", {{"f", show(homset[i])}, {"reason", "not reflexive"}});
            if (!homset_leq(cat_, zero, homset[i]))
              return fail_at(where, "order-poset", {{"f", show(homset[i])}, {"reason", "zero not least"}});
          }
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
              if (leq[i][j] && leq[j][i] && !cat_.mor_eq(homset[i], homset[j]))
                return fail_at(where, "order-poset",
                               {{"f", show(homset[i])}, {"g", show(homset[j])}, {"reason", "not antisymmetric"}});
              if (!leq[i][j]) continue;
              for (std::size_t k = 0; k < n; ++k)
                if (leq[j][k] && !leq[i][k])
                  return fail_at(where, "order-poset",
                                 {{"f", show(homset[i])},
                                  {"g", show(homset[j])},
                                  {"h", show(homset[k])},
                                  {"reason", "not transitive"}});
            }
          pass_at(where, "order-poset");

          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
              if (leq[i][j] &&
                  !homset_leq(cat_, cat_.dagger(homset[i]), cat_.dagger(homset[j])))
                return fail_at(where, "order-dagger",
                               {{"f", show(homset[i])}, {"g", show(homset[j])}});
          pass_at(where, "order-dagger");
        }
      }
    }
  }

  void kck_laws() {
    if constexpr (C::enumerable && C::boolean_category) {
      const KckCategory<C> kc(cat_);
      // The pair category over objects of size <= 2 from the file.
      std::vector<Obj_t<C>> xs;
      for (const auto& [name, x] : objects_) {
        (void)name;
        if (cat_.obj_size(x) <= 2) xs.push_back(x);
      }
      for (const auto& x : xs)
        for (const auto& y : xs) {
          const std::string where = cat_.show_obj(x) + " -> " + cat_.show_obj(y);
          const auto pairs = kc.enumerate_homset(x, y, cfg_.guard);
          for (const auto& a : pairs) {
            if (!kc.mor_eq(kc.dagger(kc.dagger(a)), a))
              return fail_at(where, "kck-axioms", {{"a", kc.show(a)}, {"reason", "dagger not involutive"}});
            if (!kc.mor_eq(kc.compose(a, kc.identity(x)), a) ||
                !kc.mor_eq(kc.compose(kc.identity(y), a), a))
              return fail_at(where, "kck-axioms", {{"a", kc.show(a)}, {"reason", "identity not neutral"}});
            const auto k = kc.kernel(a);
            if (!kc.mor_eq(kc.compose(kc.dagger(k), k), kc.identity(kc.src(k))))
              return fail_at(where, "kck-axioms", {{"a", kc.show(a)}, {"reason", "kernel not dagger monic"}});
            if (!is_zero_mor(kc, kc.compose(a, k)))
              return fail_at(where, "kck-axioms", {{"a", kc.show(a)}, {"reason", "kernel composite nonzero"}});
          }
          pass_at(where, "kck-axioms");

          // Collapse commutes with dagger and composition, and the collapse of
          // a pair embeds back to the same pair.
          for (const auto& a : pairs) {
            const Mor_t<C> flat = kck_project(cat_, a);
            if (!cat_.mor_eq(kck_project(cat_, kc.dagger(a)), cat_.dagger(flat)))
              return fail_at(where, "kck-collapse", {{"a", kc.show(a)}, {"reason", "dagger mismatch"}});
            if (!kck_embeddable(cat_, flat) ||
                !kc.mor_eq(kck_embed(cat_, flat), a))
              return fail_at(where, "kck-collapse", {{"a", kc.show(a)}, {"reason", "embed does not invert collapse"}});
          }
          for (const auto& z : xs) {
            const auto next = kc.enumerate_homset(y, z, cfg_.guard);
            for (const auto& a : pairs)
              for (const auto& b : next) {
                const Mor_t<C> lhs = kck_project(cat_, kc.compose(b, a));
                const Mor_t<C> rhs =
                    cat_.compose(kck_project(cat_, b), kck_project(cat_, a));
                if (!cat_.mor_eq(lhs, rhs))
                  return fail_at(where, "kck-collapse",
                                 {{"a", kc.show(a)}, {"b", kc.show(b)}, {"reason", "composition mismatch"}});
              }
          }
          pass_at(where, "kck-collapse");
        }
    }
  }

  // ---- reporting -------------------------------------------------------------

  std::string show(const Mor_t<C>& m) const { return cat_.show(m); }

  void pass(const Obj_t<C>& x, const char* law) { pass_at(cat_.show_obj(x), law); }
  void fail(const Obj_t<C>& x, const char* law, nlohmann::json witness) {
    fail_at(cat_.show_obj(x), law, std::move(witness));
  }
  void pass_at(const std::string& where, const char* law) {
    results_.push_back(LawResult{cat_.name(), where, law, true, nlohmann::json::object()});
  }
  void fail_at(const std::string& where, const char* law, nlohmann::json witness) {
    results_.push_back(LawResult{cat_.name(), where, law, false, std::move(witness)});
  }

  const C& cat_;
  const std::vector<std::pair<std::string, Obj_t<C>>>& objects_;
  const std::vector<std::pair<std::string, Mor_t<C>>>& morphisms_;
  LawConfig cfg_;
  std::vector<LawResult> results_;
};

template <typename C>
std::vector<LawResult> run_law_sweep(const C& cat,
                                     const std::vector<std::pair<std::string, Obj_t<C>>>& objects,
                                     const std::vector<std::pair<std::string, Mor_t<C>>>& morphisms,
                                     const std::set<std::string>& keys, const LawConfig& cfg) {
  LawSweep<C> sweep(cat, objects, morphisms, cfg);
  return sweep.run(keys);
}

}  // namespace dagkern
