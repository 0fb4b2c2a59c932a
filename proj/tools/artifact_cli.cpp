// Command-line front end: validate, analyze, admissible, classify, rescale, fixtures.
// Every command prints one JSON report on stdout.  Exit codes: 0 clean,
// 1 violations or a negative verdict, 2 usage or input errors.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "artifact/corpus.hpp"
#include "artifact/fixtures.hpp"
#include "artifact/format.hpp"

using namespace artifact;
using io::Json;

namespace {

constexpr int kClean = 0, kFindings = 1, kUsage = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A path, or the name of a document in the fixture directory.
std::string read_input(const std::string& arg) {
  namespace fs = std::filesystem;
  fs::path p(arg);
  if (!fs::is_regular_file(p)) {
    fs::path q = fs::path(fixture_dir()) / (arg + ".json");
    if (!fs::is_regular_file(q)) throw InputError("no such file or fixture: " + arg);
    p = q;
  }
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(const std::string& command, Json payload, int code) {
  std::cout << io::canonical(io::report(command, std::move(payload)));
  return code;
}

int error(const std::string& command, const std::string& cls, const std::string& msg, Json extra = Json::object()) {
  Json j = {{"error", cls}, {"message", msg}};
  for (auto& [k, v] : extra.items()) j[k] = v;
  std::cerr << "error: " << msg << "\n";
  return emit(command, j, kUsage);
}

template <class T>
const T& expect(const io::Document& d, const std::string& kind) {
  if (!std::holds_alternative<T>(d.payload)) throw InputError("expected a " + kind + " document, got " + d.kind);
  return std::get<T>(d.payload);
}

Json system_summary(const DynamicalTreeSystem& S) {
  Json orbits = Json::array();
  const int kmax = (int)S.treeX.tree.internal_vertices().size() + 1;
  for (const auto& x : S.treeX.tree.internal_vertices()) {
    auto o = vertex_orbit(S, x, kmax);
    orbits.push_back({{"vertex", x},
                      {"orbit", o.orbit},
                      {"forgottenAt", o.forgotten_at ? Json(*o.forgotten_at) : Json(nullptr)},
                      {"preperiod", o.preperiod ? Json(*o.preperiod) : Json(nullptr)},
                      {"period", o.period ? Json(*o.period) : Json(nullptr)}});
  }
  Json cycles = Json::array();
  for (const auto& c : sphere_cycles(S)) {
    Json cj = {{"vertices", c.vertices}, {"period", c.period}, {"degree", c.cycle_degree}, {"critical", c.critical()}};
    bool maps = true;
    for (const auto& v : c.vertices) maps = maps && S.cover.has_map(S.in_Y(v));
    if (maps) cj["cover"] = to_string(cycle_cover(S, c));
    cycles.push_back(cj);
  }
  return {{"orbits", orbits}, {"cycles", cycles}};
}

Json branch_summary(const CoverBetweenTrees& C) {
  Json out = Json::array();
  const CombTree& T = C.source.tree;
  for (const auto& v : T.internal_vertices())
    for (const auto& nb : T.neighbors(v)) {
      auto b = map_branch(C, v, nb);
      Json j = {{"vertex", v}, {"star", nb}, {"applicable", b.applicable}};
      if (b.applicable) {
        j["imageVertex"] = b.image_vertex;
        j["degree"] = b.degree;
        j["onto"] = b.onto;
        j["bijective"] = b.bijective;
      } else {
        j["note"] = b.note;
      }
      out.push_back(j);
    }
  return out;
}

Json annulus_summary(const CoverBetweenTrees& C) {
  Json out = Json::array();
  auto in = C.source.tree.internal_vertices();
  for (size_t i = 0; i < in.size(); ++i)
    for (size_t j = i + 1; j < in.size(); ++j) {
      auto a = map_annulus(C, in[i], in[j]);
      Json r = {{"vertices", {in[i], in[j]}}, {"applicable", a.applicable}};
      if (a.applicable) {
        r["degree"] = a.degree;
        r["spineDegreeOne"] = a.spine_degree_one;
        r["bijectiveOnClosure"] = a.bijective_on_closure;
      } else {
        r["note"] = a.note;
      }
      out.push_back(r);
    }
  return out;
}

Json rh_json(const RHSuiteReport& r) {
  return {{"branches", r.branches}, {"annuli", r.annuli}, {"components", r.components}, {"failures", r.failures}};
}

int cmd_validate(const std::string& file) {
  auto doc = io::parse_document(read_input(file), io::Checks::Structural);
  std::vector<Violation> vs = std::visit(
      [](const auto& x) -> std::vector<Violation> {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Portrait>) return validate_portrait(x);
        else if constexpr (std::is_same_v<T, TreeOfSpheres>) return x.validate();
        else if constexpr (std::is_same_v<T, CoverBetweenTrees>) return validate_cover(x);
        else if constexpr (std::is_same_v<T, DynamicalTreeSystem>) return validate_system(x);
        else return {};
      },
      doc.payload);
  if (std::holds_alternative<Family>(doc.payload) || std::holds_alternative<RescalingJob>(doc.payload)) {
    // Families and jobs have no structural-only mode; the full parse reports their violations.
    try {
      io::parse_document(read_input(file), io::Checks::Full);
    } catch (const io::ConstructionError& e) {
      vs = e.violations;
    }
  }
  Json payload = {{"kind", doc.kind}, {"valid", vs.empty()}, {"violations", io::violations_json(vs)}};
  return emit("validate", payload, vs.empty() ? kClean : kFindings);
}

int cmd_analyze(const std::string& file) {
  auto doc = io::parse_document(read_input(file), io::Checks::Structural);
  const CoverBetweenTrees* C = nullptr;
  Json payload = {{"kind", doc.kind}};
  std::vector<Violation> vs;
  if (auto* S = std::get_if<DynamicalTreeSystem>(&doc.payload)) {
    vs = validate_system(*S);
    C = &S->cover;
    if (vs.empty()) payload["dynamics"] = system_summary(*S);
  } else {
    C = &expect<CoverBetweenTrees>(doc, "cover or system");
    vs = validate_cover(*C);
  }
  payload["violations"] = io::violations_json(vs);
  payload["skeleton"] = C->is_skeleton();
  bool rh_ok = true;
  if (vs.empty()) {
    payload["degree"] = global_degree(*C);
    auto rh = rh_suite(*C);
    rh_ok = rh.ok();
    payload["riemannHurwitz"] = rh_json(rh);
    payload["branches"] = branch_summary(*C);
    payload["annuli"] = annulus_summary(*C);
  }
  return emit("analyze", payload, vs.empty() && rh_ok ? kClean : kFindings);
}

int cmd_admissible(const std::string& file, std::optional<int> kmax) {
  auto doc = io::parse_document(read_input(file), io::Checks::Full);
  const auto& S = expect<DynamicalTreeSystem>(doc, "system");
  if (S.cover.is_skeleton()) throw InputError("admissibility needs sphere maps; this is a skeleton");
  if (kmax && *kmax < 1) throw InputError("--kmax must be positive");
  auto v = admissibility_report(S, kmax);
  return emit("admissible", io::verdict_json(v),
              v.status == AdmissibilityStatus::NotApproximable ? kFindings : kClean);
}

int cmd_classify(const std::string& file) {
  auto doc = io::parse_document(read_input(file), io::Checks::Full);
  const auto& S = expect<DynamicalTreeSystem>(doc, "system");
  try {
    auto c = classify(S);
    return emit("classify", io::classification_json(c), c.kind == CaseKind::TheoremContradiction ? kFindings : kClean);
  } catch (const StructuralViolation& e) {
    return emit("classify", {{"case", "StructuralViolation"}, {"notes", {e.what()}}}, kFindings);
  }
}

std::vector<Rational> parse_samples(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(io::parse_rational(tok));
    } catch (const io::SchemaError&) {
      throw InputError("bad sample '" + tok + "'");
    }
  }
  if (out.empty()) throw InputError("--samples is empty");
  return out;
}

int cmd_rescale(const std::string& file, bool exact, bool numeric, std::optional<int> digits,
                const std::optional<std::string>& samples) {
  auto doc = io::parse_document(read_input(file), io::Checks::Full);
  RescalingJob job = expect<RescalingJob>(doc, "job");
  if (digits) job.digits = *digits;
  if (samples) job.samples = parse_samples(*samples);
  bool use_exact = exact || (!numeric && job.conjugator.exact());
  try {
    LimitResult r = use_exact ? exact_limit(job) : numeric_limit(job);
    return emit("rescale", io::limit_json(job, r), r.status == LimitStatus::Converged ? kClean : kFindings);
  } catch (const JobError& e) {
    throw InputError(e.what());
  } catch (const DegenerateLimit& e) {
    return emit("rescale", {{"job", job.name}, {"status", "DegenerateLimit"}, {"message", e.what()}}, kFindings);
  } catch (const AmbiguousTracking& e) {
    Json c = Json::array();
    for (const auto& p : e.candidates) c.push_back(to_string(p, 20));
    return emit("rescale", {{"job", job.name}, {"status", "AmbiguousTracking"}, {"message", e.what()}, {"candidates", c}},
                kFindings);
  } catch (const TrackingFailure& e) {
    return emit("rescale", {{"job", job.name}, {"status", "TrackingFailure"}, {"message", e.what()}}, kFindings);
  }
}

int cmd_fixtures_list() {
  Json list = Json::array();
  for (const auto& e : corpus()) list.push_back({{"name", e.name}, {"description", e.description}});
  return emit("fixtures", {{"directory", fixture_dir()}, {"fixtures", list}}, kClean);
}

int cmd_fixtures_emit(const std::string& name) {
  const CorpusEntry* e = find_corpus_entry(name);
  if (!e) throw InputError("unknown fixture: " + name);
  std::cout << io::serialize(e->build());
  return kClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trees of spheres, admissibility, classification and rescaling limits"};
  app.require_subcommand(1);

  std::string file;
  std::optional<int> kmax, digits;
  std::optional<std::string> samples;
  bool exact = false, numeric = false;
  std::string fixture;

  auto* validate = app.add_subcommand("validate", "check a document's invariants");
  validate->add_option("file", file, "document path or fixture name")->required();
  auto* analyze = app.add_subcommand("analyze", "branches, annuli, cycles and Riemann-Hurwitz summary");
  analyze->add_option("file", file, "document path or fixture name")->required();
  auto* admissible = app.add_subcommand("admissible", "Branches and Annuli lemma checks");
  admissible->add_option("file", file, "system document path or fixture name")->required();
  admissible->add_option("--kmax", kmax, "largest iterate tested by the Annuli lemma");
  auto* cls = app.add_subcommand("classify", "classification of a bicritical system");
  cls->add_option("file", file, "system document path or fixture name")->required();
  auto* rescale = app.add_subcommand("rescale", "rescaling limit of a job");
  rescale->add_option("--job", file, "job document path or fixture name")->required();
  auto* fe = rescale->add_flag("--exact", exact, "exact computation over Q(a)");
  auto* fn = rescale->add_flag("--numeric", numeric, "numeric extrapolation");
  fe->excludes(fn);
  rescale->add_option("--digits", digits, "working precision in decimal digits");
  rescale->add_option("--samples", samples, "comma-separated parameter samples, e.g. 999/1000,9999/10000");
  auto* fx = app.add_subcommand("fixtures", "list or emit the fixture corpus");
  fx->require_subcommand(1);
  auto* fl = fx->add_subcommand("list", "names of the corpus documents");
  auto* femit = fx->add_subcommand("emit", "print a corpus document built from its builder");
  femit->add_option("name", fixture, "fixture name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kClean;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    if (validate->parsed()) return cmd_validate(file);
    if (analyze->parsed()) return cmd_analyze(file);
    if (admissible->parsed()) return cmd_admissible(file, kmax);
    if (cls->parsed()) return cmd_classify(file);
    if (rescale->parsed()) return cmd_rescale(file, exact, numeric, digits, samples);
    if (fl->parsed()) return cmd_fixtures_list();
    if (femit->parsed()) return cmd_fixtures_emit(fixture);
  } catch (const io::SyntaxError& e) {
    return error(command, "SyntaxError", e.what(), {{"line", e.line}, {"column", e.column}});
  } catch (const io::UnknownKind& e) {
    return error(command, "UnknownKind", e.what());
  } catch (const io::SchemaError& e) {
    return error(command, "SchemaError", e.what());
  } catch (const io::ConstructionError& e) {
    return error(command, "ConstructionError", e.what(), {{"violations", io::violations_json(e.violations)}});
  } catch (const InputError& e) {
    return error(command, "InputError", e.what());
  }
  return kUsage;
}
