// Command-line front end: load an instance file, then export subobject
// lattices, run law sweeps, print factorisations, or compose cokernel-kernel
// pairs. Exit codes: 0 success, 1 law or construction failure, 2 usage or
// parse error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <type_traits>
#include <vector>

#include <CLI11.hpp>

#include <dagkern/dagkern.hpp>

namespace {

using namespace dagkern;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write output file '" + path + "'");
  out << content;
}

std::string class_flags(const MorClass& c) {
  std::string s;
  auto add = [&](const char* name, bool v) {
    if (!v) return;
    if (!s.empty()) s += ", ";
    s += name;
  };
  add("zero", c.is_zero);
  add("dagger-mono", c.is_dagger_mono);
  add("dagger-epi", c.is_dagger_epi);
  add("zero-mono", c.is_zero_mono);
  add("zero-epi", c.is_zero_epi);
  add("kernel", c.is_kernel);
  add("cokernel", c.is_cokernel);
  return s.empty() ? "(none)" : s;
}

int cmd_lattice(const std::string& path, const std::string& object_name,
                const std::string& dot_path, const std::string& json_path,
                const std::vector<std::string>& element_names) {
  const AnyInstance any = load_instance_file(path);
  return std::visit(
      [&](const auto& file) -> int {
        using C = std::decay_t<decltype(file.cat)>;
        const auto& x = file.obj(object_name);
        std::vector<KernelSub<C>> seeds;
        for (const auto& n : element_names) {
          const auto& f = file.mor(n);
          if (!file.cat.obj_eq(file.cat.tgt(f), x))
            throw ParseError("--elements morphism '" + n +
                             "' does not land in object '" + object_name + "'");
          seeds.push_back(KernelSub<C>{canonical_kernel_rep(file.cat, f)});
        }
        const KSubLattice<C> lat = [&] {
          if constexpr (C::enumerable) {
            if (!seeds.empty()) return generate_sublattice(file.cat, x, seeds);
            return build_lattice(file.cat, x);
          } else {
            if (seeds.empty()) throw ParseError("lattice not enumerable; supply --elements");
            return generate_sublattice(file.cat, x, seeds);
          }
        }();
        if (!dot_path.empty()) write_file(dot_path, lattice_to_dot(file.cat, lat));
        if (!json_path.empty())
          write_file(json_path, lattice_to_json(file.cat, lat).dump(2) + "\n");
        const auto atoms = lattice_atoms(lat);
        std::cout << "KSub(" << file.cat.show_obj(x) << "): " << lat.size()
                  << " elements, " << atoms.size() << " atoms, "
                  << (lattice_is_atomic(lat) ? "atomic" : "not atomic") << ", "
                  << (lattice_is_atomistic(lat) ? "atomistic" : "not atomistic") << "\n";
        for (std::size_t i = 0; i < lat.size(); ++i)
          std::cout << "  [" << i << "] " << file.cat.show(lat.elems[i].mor) << "\n";
        return 0;
      },
      any);
}

int cmd_check(const std::string& path, const std::string& laws_csv, std::size_t max_size,
              bool seed_given, std::uint64_t seed, std::size_t samples,
              const std::string& format) {
  const auto keys = parse_law_keys(laws_csv);
  const AnyInstance any = load_instance_file(path);
  if (suite_needs_seed(any) && !seed_given)
    throw ParseError("this instance runs randomized sweeps; --seed is mandatory");
  LawConfig cfg;
  cfg.max_size = max_size;
  cfg.seed = seed;
  cfg.samples = samples;
  const SuiteOutcome outcome = run_suite_any(any, keys, cfg);
  if (outcome.results.empty())
    throw ParseError(
        "the selected laws ran no checks on this instance; laws that sweep "
        "homsets need an enumerable instance");
  if (format == "json")
    std::cout << suite_report_json(outcome, cfg).dump(2) << "\n";
  else
    std::cout << suite_report_text(outcome);
  return outcome.all_pass ? 0 : 1;
}

int cmd_factor(const std::string& path, const std::string& mor_name) {
  const AnyInstance any = load_instance_file(path);
  return std::visit(
      [&](const auto& file) -> int {
        const auto& cat = file.cat;
        const auto& f = file.mor(mor_name);
        const auto fact = full_factorise(cat, f);
        std::cout << "morphism " << mor_name << " = " << cat.show(f) << "\n";
        std::cout << "  classification: " << class_flags(classify(cat, f)) << "\n";
        std::cout << "  coimage = " << cat.show(fact.coimage) << "\n";
        std::cout << "    " << class_flags(classify(cat, fact.coimage)) << "\n";
        std::cout << "  middle  = " << cat.show(fact.middle) << "\n";
        std::cout << "    " << class_flags(classify(cat, fact.middle)) << "\n";
        std::cout << "  image   = " << cat.show(fact.image.mor) << "\n";
        std::cout << "    " << class_flags(classify(cat, fact.image.mor)) << "\n";
        const auto rebuilt =
            cat.compose(fact.image.mor, cat.compose(fact.middle, fact.coimage));
        const bool ok = cat.mor_eq(rebuilt, f);
        std::cout << "  reassembly image . middle . coimage == morphism: "
                  << (ok ? "ok" : "FAILED") << "\n";
        return ok ? 0 : 1;
      },
      any);
}

int cmd_kck(const std::string& path, const std::vector<std::string>& names) {
  const AnyInstance any = load_instance_file(path);
  return std::visit(
      [&](const auto& file) -> int {
        using C = std::decay_t<decltype(file.cat)>;
        if constexpr (C::boolean_category && C::enumerable) {
          const auto& cat = file.cat;
          const auto& f = file.mor(names[0]);
          const auto& g = file.mor(names[1]);
          if (!cat.obj_eq(cat.tgt(f), cat.src(g)))
            throw ParseError("--compose: target of '" + names[0] +
                             "' must equal source of '" + names[1] + "'");
          const KckMorphism<C> pf = kck_embed(cat, f);
          const KckMorphism<C> pg = kck_embed(cat, g);
          const KckMorphism<C> comp = kck_compose(cat, pg, pf);
          auto print_pair = [&](const std::string& label, const KckMorphism<C>& p) {
            std::cout << label << ":\n"
                      << "  cokernel part = " << cat.show(p.coker_part) << "\n"
                      << "  kernel part   = " << cat.show(p.ker_part) << "\n"
                      << "  mid object    = " << cat.show_obj(cat.tgt(p.coker_part)) << "\n";
          };
          print_pair(names[0] + " as pair", pf);
          print_pair(names[1] + " as pair", pg);
          print_pair(names[1] + " . " + names[0] + " as pair", comp);
          std::cout << "collapsed composite = " << cat.show(kck_project(cat, comp)) << "\n";
          return 0;
        } else {
          throw ParseError("the pair category needs a Boolean instance (finrel, finpinj, or boolhat)");
        }
      },
      any);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computations in dagger kernel categories"};
  app.require_subcommand(1);

  std::string file_path;
  std::string object_name;
  std::string dot_path;
  std::string json_path;
  std::vector<std::string> element_names;
  auto* lat = app.add_subcommand("lattice", "export the kernel subobject lattice of an object");
  lat->add_option("file", file_path, "instance JSON file")->required();
  lat->add_option("--object", object_name, "object name from the file")->required();
  lat->add_option("--dot", dot_path, "write a Hasse diagram in DOT format");
  lat->add_option("--json", json_path, "write order/meet/join/ortho tables as JSON");
  lat->add_option("--elements", element_names,
                  "morphism names whose images seed a generated sublattice")
      ->delimiter(',');

  std::string laws_csv = "all";
  std::size_t max_size = 3;
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  std::string format = "text";
  auto* chk = app.add_subcommand("check", "run law sweeps over the file's objects");
  chk->add_option("file", file_path, "instance JSON file")->required();
  chk->add_option("--laws", laws_csv,
                  "all or a comma list of omod,bool,dist,sasaki,adjoint,bc,order,effect,kck");
  chk->add_option("--max-size", max_size, "object size cap for exhaustive sweeps");
  auto* seed_opt = chk->add_option("--seed", seed, "seed for randomized sweeps");
  chk->add_option("--samples", samples, "sample count per shape for randomized sweeps");
  chk->add_option("--format", format, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string mor_name;
  auto* fac = app.add_subcommand("factor", "print the four-way factorisation of a morphism");
  fac->add_option("file", file_path, "instance JSON file")->required();
  fac->add_option("--morphism", mor_name, "morphism name from the file")->required();

  std::vector<std::string> compose_names;
  auto* kck = app.add_subcommand("kck", "work in the category of cokernel-kernel pairs");
  kck->add_option("file", file_path, "instance JSON file")->required();
  kck->add_option("--compose", compose_names,
                  "two morphism names f g, composed in diagram order (f first)")
      ->expected(2)
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (lat->parsed())
      return cmd_lattice(file_path, object_name, dot_path, json_path, element_names);
    if (chk->parsed())
      return cmd_check(file_path, laws_csv, max_size, seed_opt->count() > 0, seed, samples,
                       format);
    if (fac->parsed()) return cmd_factor(file_path, mor_name);
    if (kck->parsed()) return cmd_kck(file_path, compose_names);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
