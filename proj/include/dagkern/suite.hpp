#pragma once

// Glue between parsed instance files and the law sweeps: run the selected
// laws, sort the report by object then law, and render it as JSON or text.

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "io.hpp"
#include "laws.hpp"

namespace dagkern {

struct SuiteOutcome {
  std::vector<LawResult> results;
  bool all_pass = true;
};

template <typename C>
SuiteOutcome run_suite(const InstanceFile<C>& file, const std::set<std::string>& keys,
                       const LawConfig& cfg) {
  SuiteOutcome out;
  out.results = run_law_sweep(file.cat, file.objects, file.morphisms, keys, cfg);
  std::stable_sort(out.results.begin(), out.results.end(),
                   [](const LawResult& a, const LawResult& b) {
                     return std::tie(a.object, a.law) < std::tie(b.object, b.law);
                   });
  for (const auto& r : out.results) out.all_pass = out.all_pass && r.pass;
  return out;
}

inline SuiteOutcome run_suite_any(const AnyInstance& any, const std::set<std::string>& keys,
                                  const LawConfig& cfg) {
  return std::visit([&](const auto& file) { return run_suite(file, keys, cfg); }, any);
}

inline bool suite_needs_seed(const AnyInstance& any) {
  return std::holds_alternative<InstanceFile<FdHilb>>(any);
}

inline json suite_report_json(const SuiteOutcome& outcome, const LawConfig& cfg) {
  json rep;
  rep["all_pass"] = outcome.all_pass;
  rep["config"] = {{"max_size", cfg.max_size}, {"seed", cfg.seed}, {"samples", cfg.samples}};
  json rows = json::array();
  for (const auto& r : outcome.results) {
    json row = {{"instance", r.instance}, {"object", r.object}, {"law", r.law}, {"pass", r.pass}};
    if (!r.pass) row["witness"] = r.witness;
    rows.push_back(std::move(row));
  }
  rep["results"] = std::move(rows);
  return rep;
}

inline std::string suite_report_text(const SuiteOutcome& outcome) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& r : outcome.results) {
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.law << "  @ " << r.object << "\n";
    if (!r.pass) {
      ++failed;
      os << "      witness: " << r.witness.dump() << "\n";
    }
  }
  os << (outcome.all_pass ? "all laws hold" : std::to_string(failed) + " law(s) violated")
     << " (" << outcome.results.size() << " checks)\n";
  return os.str();
}

}  // namespace dagkern
