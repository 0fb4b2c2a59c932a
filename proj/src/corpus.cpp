#include "artifact/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "artifact/fixtures.hpp"

namespace artifact {

namespace {
const std::map<std::string, std::string>& descriptions() {
  static const std::map<std::string, std::string> d{
      {"fig1_counterexample", "period-8 cycle of critical annuli; not approximable"},
      {"fig3_two_cycles", "two critical cycles of periods 3 and 5"},
      {"fig_exmil", "Per_2(-3) at a = 1 with the period-3 cycle marked"},
      {"fig_exmil_forgotten", "fig_exmil without the two-cycle a1, a2 in X"},
      {"fig_exmilnor2", "Per_2(-3) at a = 1, parabolic period-2 spheres"},
      {"rotation_pair_balanced", "degree-1 annulus with multipliers -1 and -1"},
      {"rotation_pair_unbalanced", "degree-1 annulus with multipliers -1 and -1/2"},
      {"single_square", "one sphere with z^2"},
      {"fig5_A1", "configuration skeleton: w0 not fixed"},
      {"fig5_B", "configuration skeleton: both critical points on fixed points"},
      {"fig5_C2", "configuration skeleton: critical v0 fixed, polynomial with a double fixed point"},
      {"fig5_Parb", "configuration skeleton: critical v0 fixed, parabolic"},
      {"fig5_Pol", "configuration skeleton: one critical point on a fixed point"},
      {"fig5_Triv", "configuration skeleton: no degeneration"},
      {"milnor_family", "f_a = (1+3a)(z-a)/((1-a)(3az+z^2)), a -> 1"},
      {"milnor_k1", "f_a as a -> 1 (degenerate limit)"},
      {"milnor_k2", "f_a^2 as a -> 1"},
      {"milnor_k3", "f_a^3 conjugated by 3a -> inf, -a -> 0, p3_a -> 1/2"},
      {"milnor_k3_period2", "milnor_k3 with a period-2 point tracked instead of p3_a"},
      {"milnor_k3_target1", "milnor_k3 with p3_a -> 1"},
  };
  return d;
}
}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> all = [] {
    std::vector<CorpusEntry> out;
    auto desc = [](const std::string& n) {
      auto it = descriptions().find(n);
      return it == descriptions().end() ? std::string() : it->second;
    };
    for (const auto& list : {fixtures::system_fixtures(), fixtures::skeleton_fixtures()})
      for (const auto& fx : list) {
        auto build = fx.build;
        out.push_back({fx.name, desc(fx.name), [build] { return io::make_document(build()); }});
      }
    out.push_back({"milnor_family", desc("milnor_family"), [] { return io::make_document(milnor_family_spec()); }});
    for (const auto& job : builtin_jobs()) {
      auto build = job.build;
      out.push_back({job.name, desc(job.name), [build] { return io::make_document(build()); }});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return out;
  }();
  return all;
}

const CorpusEntry* find_corpus_entry(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return &e;
  return nullptr;
}

std::string fixture_dir() {
  if (const char* env = std::getenv("ARTIFACT_FIXTURE_DIR"); env && *env) return env;
  return ARTIFACT_FIXTURE_DIR;
}

}  // namespace artifact
