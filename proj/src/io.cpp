#include "artifact/io.hpp"

#include <regex>
#include <set>

#include "artifact/format.hpp"

namespace artifact::io {

SyntaxError::SyntaxError(const std::string& msg, int l, int c)
    : FormatError("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg), line(l), column(c) {}

ConstructionError::ConstructionError(const std::string& msg, std::vector<Violation> v)
    : FormatError(msg), violations(std::move(v)) {}

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& msg) { throw SchemaError(path + ": " + msg); }

// Object reader that rejects fields nobody asked for.
class Fields {
 public:
  Fields(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j.is_object()) schema(path_, "expected an object");
  }
  const Json& req(const std::string& k) {
    auto it = j_.find(k);
    if (it == j_.end()) schema(path_, "missing field '" + k + "'");
    used_.insert(k);
    return *it;
  }
  const Json* opt(const std::string& k) {
    auto it = j_.find(k);
    if (it == j_.end()) return nullptr;
    used_.insert(k);
    return &*it;
  }
  std::string path(const std::string& k) const { return path_ + "." + k; }
  void done() const {
    for (const auto& [k, v] : j_.items())
      if (!used_.count(k)) schema(path_, "unknown field '" + k + "'");
  }

 private:
  const Json& j_;
  std::string path_;
  std::set<std::string> used_;
};

std::string get_string(const Json& j, const std::string& path) {
  if (!j.is_string()) schema(path, "expected a string");
  return j.get<std::string>();
}

int get_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema(path, "expected an integer");
  auto v = j.get<long long>();
  if (v < -1000000000LL || v > 1000000000LL) schema(path, "integer out of range");
  return (int)v;
}

const Json& get_array(const Json& j, const std::string& path, std::optional<size_t> size = std::nullopt) {
  if (!j.is_array()) schema(path, "expected an array");
  if (size && j.size() != *size) schema(path, "expected " + std::to_string(*size) + " entries");
  return j;
}

std::string idx(const std::string& path, size_t i) { return path + "[" + std::to_string(i) + "]"; }

Rational rational_from(const Json& j, const std::string& path) {
  static const std::regex re("-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?");
  std::string s = get_string(j, path);
  if (!std::regex_match(s, re)) schema(path, "malformed rational '" + s + "'");
  Rational q(s);
  q.canonicalize();
  return q;
}

Scalar scalar_from(const Json& j, const std::string& path) {
  if (!j.is_array() || (j.size() != 2 && j.size() != 4)) schema(path, "expected [re, im] or [re, im, re_sqrt3, im_sqrt3]");
  std::vector<Rational> q;
  for (size_t i = 0; i < j.size(); ++i) q.push_back(rational_from(j[i], idx(path, i)));
  q.resize(4, Rational(0));
  return Scalar(GaussianRational(q[0], q[1]), GaussianRational(q[2], q[3]));
}

Point point_from(const Json& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") schema(path, "expected \"inf\" or [re, im]");
    return Point::infinity();
  }
  return Point::finite(scalar_from(j, path));
}

template <class K, class F>
Poly<K> poly_from(const Json& j, const std::string& path, F coeff) {
  get_array(j, path);
  std::vector<K> c;
  for (size_t i = 0; i < j.size(); ++i) c.push_back(coeff(j[i], idx(path, i)));
  return Poly<K>(std::move(c));
}

template <class K, class F>
RatFunc<K> ratfunc_from(const Json& j, const std::string& path, F coeff) {
  Fields f(j, path);
  auto num = poly_from<K>(f.req("num"), f.path("num"), coeff);
  auto den = poly_from<K>(f.req("den"), f.path("den"), coeff);
  f.done();
  if (den.degree() < 0) throw ConstructionError(path + ": zero denominator");
  try {
    return RatFunc<K>(std::move(num), std::move(den));
  } catch (const AlgebraError& e) {
    throw ConstructionError(path + ": " + e.what());
  }
}

RationalFunction map_from(const Json& j, const std::string& path) { return ratfunc_from<Scalar>(j, path, scalar_from); }
ParamCoeff param_coeff_from(const Json& j, const std::string& path) {
  return ratfunc_from<Rational>(j, path, rational_from);
}
ParamRationalFunction param_map_from(const Json& j, const std::string& path) {
  return ratfunc_from<ParamCoeff>(j, path, param_coeff_from);
}

std::vector<std::string> string_list(const Json& j, const std::string& path, bool unique) {
  get_array(j, path);
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(get_string(j[i], idx(path, i)));
    if (unique && !seen.insert(out.back()).second) schema(idx(path, i), "duplicate entry '" + out.back() + "'");
  }
  return out;
}

std::map<std::string, std::string> string_map(const Json& j, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) out[k] = get_string(v, path + "." + k);
  return out;
}

template <class T, class F>
Json list(const std::vector<T>& xs, F f) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(f(x));
  return a;
}

template <class K>
Json poly_json(const Poly<K>& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

void require_clean(const std::string& what, const std::vector<Violation>& vs) {
  if (vs.empty()) return;
  std::string msg = what + " violates its invariants: " + vs.front().kind + ": " + vs.front().detail;
  if (vs.size() > 1) msg += " (and " + std::to_string(vs.size() - 1) + " more)";
  throw ConstructionError(msg, vs);
}

std::string real_str(const Real& x) { return to_string(x, 20); }
Json cx_json(const Cx& z) { return Json::array({real_str(z.re), real_str(z.im)}); }
Json cx_point_json(const CxPoint& p) { return p.inf ? Json("inf") : cx_json(p.z); }

Json point_or_null(const std::optional<Point>& p) { return p ? to_json(*p) : Json(nullptr); }

}  // namespace

Rational parse_rational(const std::string& s) { return rational_from(Json(s), "rational"); }

std::string canonical(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Rational& q) { return q.get_str(); }

Json to_json(const Scalar& s) {
  Json a = Json::array({to_json(s.a.a), to_json(s.a.b)});
  if (!is_zero(s.b)) {
    a.push_back(to_json(s.b.a));
    a.push_back(to_json(s.b.b));
  }
  return a;
}

Json to_json(const Point& p) { return p.inf ? Json("inf") : to_json(p.z); }

Json to_json(const RationalFunction& f) { return {{"num", poly_json(f.num())}, {"den", poly_json(f.den())}}; }
Json to_json(const ParamCoeff& c) { return {{"num", poly_json(c.num())}, {"den", poly_json(c.den())}}; }
Json to_json(const ParamRationalFunction& f) { return {{"num", poly_json(f.num())}, {"den", poly_json(f.den())}}; }

Json to_json(const Portrait& P) {
  Json deg = Json::object();
  for (const auto& [y, k] : P.deg) deg[y] = k;
  return {{"d", P.d},
          {"Y", Json(std::vector<std::string>(P.Y.begin(), P.Y.end()))},
          {"Z", Json(std::vector<std::string>(P.Z.begin(), P.Z.end()))},
          {"X", Json(std::vector<std::string>(P.X.begin(), P.X.end()))},
          {"F", Json(P.F)},
          {"deg", deg}};
}

Json to_json(const TreeOfSpheres& T) {
  Json edges = Json::array();
  for (const auto& [u, v] : T.tree.edges()) edges.push_back({u, v});
  Json j = {{"vertices", Json(T.tree.vertices())}, {"edges", edges}, {"leaves", Json(T.tree.leaves())}};
  if (!T.combinatorial()) {
    Json att = Json::object();
    for (const auto& [v, m] : T.attach)
      for (const auto& [nb, p] : m) att[v][nb] = to_json(p);
    j["attach"] = att;
  }
  return j;
}

Json to_json(const CoverBetweenTrees& C) {
  Json maps = Json::object();
  for (const auto& [v, f] : C.maps) maps[v] = to_json(f);
  Json j = {{"portrait", to_json(C.portrait)},
            {"treeY", to_json(C.source)},
            {"treeZ", to_json(C.target)},
            {"F", Json(C.F)},
            {"maps", maps}};
  if (!C.skeleton_degree.empty() || !C.skeleton_edge_degree.empty()) {
    Json deg = Json::object(), edeg = Json::array();
    for (const auto& [v, k] : C.skeleton_degree) deg[v] = k;
    for (const auto& [e, k] : C.skeleton_edge_degree) edeg.push_back({e.first, e.second, k});
    j["skeleton"] = {{"degree", deg}, {"edgeDegree", edeg}};
  }
  return j;
}

Json to_json(const DynamicalTreeSystem& S) {
  Json shared = Json::object();
  for (const auto& [x, yz] : S.shared) shared[x] = {yz.first, yz.second};
  return {{"cover", to_json(S.cover)}, {"treeX", to_json(S.treeX)}, {"sharedVertices", shared}};
}

Json to_json(const Family& f) {
  return {{"name", f.name}, {"param", f.param}, {"a0", to_json(f.a0)}, {"f", to_json(f.f)}};
}

namespace {
Json param_point_json(const ParamPoint& p) { return p.inf ? Json("inf") : to_json(p.z); }

Json marked_json(const MarkedPoint& m) {
  if (m.kind == MarkedPoint::Kind::Exact) return {{"exact", param_point_json(m.exact)}};
  return {{"periodic", {{"period", m.tracked.period}, {"target", to_json(m.tracked.target)}}}};
}

Json conjugator_json(const Conjugator& c) {
  if (c.type == Conjugator::Type::ExplicitMoebius) {
    const auto& m = c.moebius;
    return {{"type", "moebius"}, {"moebius", Json::array({to_json(m.a), to_json(m.b), to_json(m.c), to_json(m.d)})}};
  }
  Json pts = Json::array(), tg = Json::array();
  for (const auto& p : c.points) pts.push_back(marked_json(p));
  for (const auto& t : c.targets) tg.push_back(to_json(t));
  return {{"type", "triple"}, {"points", pts}, {"targets", tg}};
}
}  // namespace

Json to_json(const RescalingJob& job) {
  return {{"name", job.name},
          {"family", to_json(job.family)},
          {"k", job.k},
          {"conjugator", conjugator_json(job.conjugator)},
          {"samples", list(job.samples, [](const Rational& q) { return to_json(q); })},
          {"precision", job.digits},
          {"direction", job.direction}};
}

Portrait portrait_from_json(const Json& j, const std::string& path) {
  Fields f(j, path);
  Portrait P;
  P.d = get_int(f.req("d"), f.path("d"));
  for (const char* key : {"Y", "Z", "X"}) {
    auto xs = string_list(f.req(key), f.path(key), true);
    std::set<Label>& s = key[0] == 'Y' ? P.Y : key[0] == 'Z' ? P.Z : P.X;
    s.insert(xs.begin(), xs.end());
  }
  P.F = string_map(f.req("F"), f.path("F"));
  const Json& deg = f.req("deg");
  if (!deg.is_object()) schema(f.path("deg"), "expected an object");
  for (const auto& [y, k] : deg.items()) P.deg[y] = get_int(k, f.path("deg") + "." + y);
  f.done();
  return P;
}

TreeOfSpheres tree_from_json(const Json& j, const std::string& path) {
  Fields f(j, path);
  auto vertices = string_list(f.req("vertices"), f.path("vertices"), true);
  const Json& ej = get_array(f.req("edges"), f.path("edges"));
  std::vector<Edge> edges;
  for (size_t i = 0; i < ej.size(); ++i) {
    auto uv = string_list(get_array(ej[i], idx(f.path("edges"), i), 2), idx(f.path("edges"), i), false);
    edges.push_back(make_edge(uv[0], uv[1]));
  }
  auto leaves = string_map(f.req("leaves"), f.path("leaves"));
  TreeOfSpheres T;
  try {
    T.tree = CombTree(vertices, edges, leaves);
  } catch (const TreeError& e) {
    throw ConstructionError(path + ": " + e.what());
  }
  if (const Json* att = f.opt("attach")) {
    if (!att->is_object()) schema(f.path("attach"), "expected an object");
    for (const auto& [v, m] : att->items()) {
      std::string p = f.path("attach") + "." + v;
      if (!m.is_object()) schema(p, "expected an object");
      for (const auto& [nb, pt] : m.items()) T.attach[v][nb] = point_from(pt, p + "." + nb);
    }
    if (T.attach.empty()) schema(f.path("attach"), "empty; omit the field for a skeleton tree");
  }
  f.done();
  return T;
}

CoverBetweenTrees cover_from_json(const Json& j, const std::string& path) {
  Fields f(j, path);
  CoverBetweenTrees C;
  C.portrait = portrait_from_json(f.req("portrait"), f.path("portrait"));
  C.source = tree_from_json(f.req("treeY"), f.path("treeY"));
  C.target = tree_from_json(f.req("treeZ"), f.path("treeZ"));
  C.F = string_map(f.req("F"), f.path("F"));
  const Json& maps = f.req("maps");
  if (!maps.is_object()) schema(f.path("maps"), "expected an object");
  for (const auto& [v, m] : maps.items()) C.maps[v] = map_from(m, f.path("maps") + "." + v);
  if (const Json* sk = f.opt("skeleton")) {
    Fields s(*sk, f.path("skeleton"));
    const Json& deg = s.req("degree");
    if (!deg.is_object()) schema(s.path("degree"), "expected an object");
    for (const auto& [v, k] : deg.items()) C.skeleton_degree[v] = get_int(k, s.path("degree") + "." + v);
    const Json& ed = get_array(s.req("edgeDegree"), s.path("edgeDegree"));
    for (size_t i = 0; i < ed.size(); ++i) {
      std::string p = idx(s.path("edgeDegree"), i);
      get_array(ed[i], p, 3);
      C.skeleton_edge_degree[make_edge(get_string(ed[i][0], p), get_string(ed[i][1], p))] = get_int(ed[i][2], p);
    }
    s.done();
  }
  f.done();
  return C;
}

DynamicalTreeSystem system_from_json(const Json& j, const std::string& path) {
  Fields f(j, path);
  DynamicalTreeSystem S;
  S.cover = cover_from_json(f.req("cover"), f.path("cover"));
  S.treeX = tree_from_json(f.req("treeX"), f.path("treeX"));
  const Json& sh = f.req("sharedVertices");
  if (!sh.is_object()) schema(f.path("sharedVertices"), "expected an object");
  for (const auto& [x, yz] : sh.items()) {
    auto v = string_list(get_array(yz, f.path("sharedVertices") + "." + x, 2), f.path("sharedVertices") + "." + x, false);
    S.shared[x] = {v[0], v[1]};
  }
  f.done();
  return S;
}

Family family_from_json(const Json& j, const std::string& path) {
  Fields f(j, path);
  Family fam;
  fam.name = get_string(f.req("name"), f.path("name"));
  fam.param = get_string(f.req("param"), f.path("param"));
  fam.a0 = rational_from(f.req("a0"), f.path("a0"));
  fam.f = param_map_from(f.req("f"), f.path("f"));
  f.done();
  return fam;
}

namespace {
MarkedPoint marked_from(const Json& j, const std::string& path) {
  Fields f(j, path);
  const Json* ex = f.opt("exact");
  const Json* pe = f.opt("periodic");
  f.done();
  if ((ex != nullptr) == (pe != nullptr)) schema(path, "expected exactly one of 'exact', 'periodic'");
  if (ex) {
    if (ex->is_string()) {
      if (ex->get<std::string>() != "inf") schema(path + ".exact", "expected \"inf\" or {num, den}");
      return MarkedPoint::of(ParamPoint::infinity());
    }
    return MarkedPoint::of(ParamPoint::finite(param_coeff_from(*ex, path + ".exact")));
  }
  Fields p(*pe, path + ".periodic");
  int n = get_int(p.req("period"), p.path("period"));
  Point t = point_from(p.req("target"), p.path("target"));
  p.done();
  return MarkedPoint::periodic(n, t);
}

Conjugator conjugator_from(const Json& j, const std::string& path) {
  Fields f(j, path);
  std::string type = get_string(f.req("type"), f.path("type"));
  Conjugator c;
  if (type == "moebius") {
    c.type = Conjugator::Type::ExplicitMoebius;
    const Json& m = get_array(f.req("moebius"), f.path("moebius"), 4);
    std::array<ParamCoeff, 4> k;
    for (size_t i = 0; i < 4; ++i) k[i] = param_coeff_from(m[i], idx(f.path("moebius"), i));
    try {
      c.moebius = ParamMoebius(k[0], k[1], k[2], k[3]);
    } catch (const AlgebraError& e) {
      throw ConstructionError(path + ": " + e.what());
    }
  } else if (type == "triple") {
    c.type = Conjugator::Type::MarkedTriple;
    const Json& pts = get_array(f.req("points"), f.path("points"), 3);
    for (size_t i = 0; i < 3; ++i) c.points[i] = marked_from(pts[i], idx(f.path("points"), i));
    const Json& tg = get_array(f.req("targets"), f.path("targets"), 3);
    for (size_t i = 0; i < 3; ++i) c.targets[i] = point_from(tg[i], idx(f.path("targets"), i));
  } else {
    schema(f.path("type"), "unknown conjugator type '" + type + "'");
  }
  f.done();
  return c;
}
}  // namespace

RescalingJob job_from_json(const Json& j, const std::string& path) {
  Fields f(j, path);
  RescalingJob job;
  job.name = get_string(f.req("name"), f.path("name"));
  job.family = family_from_json(f.req("family"), f.path("family"));
  job.k = get_int(f.req("k"), f.path("k"));
  job.conjugator = conjugator_from(f.req("conjugator"), f.path("conjugator"));
  const Json& s = get_array(f.req("samples"), f.path("samples"));
  for (size_t i = 0; i < s.size(); ++i) job.samples.push_back(rational_from(s[i], idx(f.path("samples"), i)));
  job.digits = get_int(f.req("precision"), f.path("precision"));
  job.direction = get_int(f.req("direction"), f.path("direction"));
  f.done();
  return job;
}

namespace {
std::vector<Violation> family_violations(const Family& fam) {
  std::vector<Violation> out;
  if (fam.f.degree() < 1) out.push_back({"family", "f is constant in z"});
  if (fam.param.empty()) out.push_back({"family", "empty parameter name"});
  return out;
}

std::vector<Violation> job_violations(const RescalingJob& job) {
  std::vector<Violation> out = family_violations(job.family);
  if (job.k < 1) out.push_back({"job", "k = " + std::to_string(job.k) + " < 1"});
  if (job.digits < 1) out.push_back({"job", "precision must be positive"});
  if (job.direction != 1 && job.direction != -1) out.push_back({"job", "direction must be 1 or -1"});
  std::set<Rational> seen;
  for (const auto& a : job.samples) {
    if (a == job.family.a0) out.push_back({"job", "sample at a0"});
    if (!seen.insert(a).second) out.push_back({"job", "repeated sample " + a.get_str()});
  }
  if (job.conjugator.type == Conjugator::Type::MarkedTriple) {
    const auto& t = job.conjugator.targets;
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) out.push_back({"conjugator", "targets are not distinct"});
    for (const auto& p : job.conjugator.points)
      if (p.kind == MarkedPoint::Kind::Tracked && p.tracked.period < 1) out.push_back({"conjugator", "period < 1"});
  }
  return out;
}

// Rejects repeated keys, which the JSON library would otherwise merge.
nlohmann::json::parser_callback_t duplicate_guard(std::vector<std::set<std::string>>& stack) {
  return [&stack](int, nlohmann::json::parse_event_t ev, Json& parsed) {
    using E = nlohmann::json::parse_event_t;
    if (ev == E::object_start) stack.emplace_back();
    else if (ev == E::object_end) stack.pop_back();
    else if (ev == E::key && !stack.back().insert(parsed.get<std::string>()).second)
      throw SchemaError("duplicate key '" + parsed.get<std::string>() + "'");
    return true;
  };
}
}  // namespace

std::string kind_of(const Payload& p) {
  static const char* names[] = {"portrait", "tree", "cover", "system", "family", "job"};
  return names[p.index()];
}

Document make_document(Payload p) {
  Document d;
  d.kind = kind_of(p);
  d.payload = std::move(p);
  return d;
}

Document parse_document(const std::string& text, Checks checks) {
  Json j;
  std::vector<std::set<std::string>> stack;
  try {
    j = Json::parse(text, duplicate_guard(stack));
  } catch (const nlohmann::json::parse_error& e) {
    size_t pos = e.byte == 0 ? 0 : std::min<size_t>(e.byte - 1, text.size());
    int line = 1, col = 1;
    for (size_t i = 0; i < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    auto cut = msg.find("syntax error");
    throw SyntaxError(cut == std::string::npos ? msg : msg.substr(cut), line, col);
  }
  Fields f(j, "document");
  Document doc;
  doc.kind = get_string(f.req("kind"), "document.kind");
  doc.version = get_string(f.req("version"), "document.version");
  if (doc.version != kFormatVersion) schema("document.version", "unsupported version '" + doc.version + "'");
  const Json& p = f.req("payload");
  f.done();
  const bool full = checks == Checks::Full;
  if (doc.kind == "portrait") {
    auto P = portrait_from_json(p, "payload");
    if (full) require_clean("portrait", validate_portrait(P));
    doc.payload = std::move(P);
  } else if (doc.kind == "tree") {
    auto T = tree_from_json(p, "payload");
    if (full) require_clean("tree", T.validate());
    doc.payload = std::move(T);
  } else if (doc.kind == "cover") {
    auto C = cover_from_json(p, "payload");
    if (full) require_clean("cover", validate_cover(C));
    doc.payload = std::move(C);
  } else if (doc.kind == "system") {
    auto S = system_from_json(p, "payload");
    if (full) require_clean("system", validate_system(S));
    doc.payload = std::move(S);
  } else if (doc.kind == "family") {
    auto F = family_from_json(p, "payload");
    if (full) require_clean("family", family_violations(F));
    doc.payload = std::move(F);
  } else if (doc.kind == "job") {
    auto J = job_from_json(p, "payload");
    if (full) require_clean("job", job_violations(J));
    doc.payload = std::move(J);
  } else {
    throw UnknownKind("unknown document kind '" + doc.kind + "'");
  }
  return doc;
}

std::string serialize(const Document& doc) {
  Json payload = std::visit([](const auto& x) { return to_json(x); }, doc.payload);
  return canonical({{"kind", doc.kind}, {"version", doc.version}, {"payload", payload}});
}

Json violations_json(const std::vector<Violation>& vs) {
  return list(vs, [](const Violation& v) { return Json{{"kind", v.kind}, {"detail", v.detail}}; });
}

Json verdict_json(const AdmissibilityVerdict& v) {
  return {{"status", status_name(v.status)},
          {"witnesses", list(v.witnesses,
                             [](const AdmissibilityWitness& w) {
                               return Json{{"lemma", w.lemma},
                                           {"vertices", w.vertices},
                                           {"k0", w.k0},
                                           {"detail", w.detail},
                                           {"values", w.values}};
                             })},
          {"untested", list(v.untested,
                            [](const UntestedInstance& u) {
                              return Json{{"vertices", u.vertices}, {"k", u.k}, {"reason", u.reason}};
                            })},
          {"notes", v.notes}};
}

namespace {
std::string case_label(CaseKind k) {
  switch (k) {
    case CaseKind::ForgottenPolynomial: return "1";
    case CaseKind::ParabolicOnly: return "2a";
    case CaseKind::ParabolicAndPolynomial: return "2b";
    default: return "";
  }
}

std::string tristate(Tristate t) { return t == Tristate::True ? "yes" : t == Tristate::False ? "no" : "unknown"; }
}  // namespace

Json classification_json(const BicriticalClassification& c) {
  Json cycles = Json::array();
  for (const auto& cd : c.cycles) {
    Json diag = {{"cover", to_string(cd.cover)},
                 {"parabolicPoint", point_or_null(cd.parabolic_point)},
                 {"criticalFixedPoint", point_or_null(cd.critical_fixed_point)},
                 {"criticalOrbitToParabolic", cd.critical_orbit_to_parabolic},
                 {"postCriticallyFinite", tristate(cd.pcf)}};
    if (cd.critical_fixed_point) {
      auto inv = quadratic_polynomial_invariant(cd.cover, *cd.critical_fixed_point);
      diag["quadraticInvariant"] = inv ? to_json(*inv) : Json(nullptr);
    }
    cycles.push_back({{"period", cd.cycle.period},
                      {"degree", cd.cycle.cycle_degree},
                      {"basepoint", cd.cycle.vertices.front()},
                      {"vertices", cd.cycle.vertices},
                      {"diagnostics", diag}});
  }
  Json j = {{"case", case_name(c.kind)},
            {"caseLabel", case_label(c.kind)},
            {"k0", c.k0},
            {"w0", c.w0 ? Json(*c.w0) : Json(nullptr)},
            {"v0", c.v0 ? Json(*c.v0) : Json(nullptr)},
            {"criticalPath", c.critical_path},
            {"cycles", cycles},
            {"notes", c.notes}};
  if (c.k0_prime > 0) j["k0prime"] = c.k0_prime;
  return j;
}

Json limit_json(const RescalingJob& job, const LimitResult& r) {
  auto reals = [](const std::vector<Real>& v) { return list(v, real_str); };
  Json samples = Json::array();
  for (const auto& s : r.samples)
    samples.push_back({{"a", to_json(s.a)},
                       {"tracked", list(s.tracked, cx_point_json)},
                       {"residuals", reals(s.tracked_residuals)},
                       {"nodeSpread", real_str(s.node_spread)}});
  Json targets = Json::array();
  for (const auto& t : job.conjugator.targets) targets.push_back(to_json(t));
  Json j = {{"job", job.name},
            {"k", job.k},
            {"a0", to_json(job.family.a0)},
            {"conjugatorType", job.conjugator.type == Conjugator::Type::ExplicitMoebius ? "moebius" : "triple"},
            {"mode", r.mode == LimitMode::Exact ? "exact" : "numeric"},
            {"status", status_name(r.status)},
            {"message", r.message},
            {"genericDegree", r.generic_degree},
            {"limitDegree", r.limit_degree},
            {"exactMap", r.exact_map ? Json(to_string(*r.exact_map)) : Json(nullptr)},
            {"exactMapFragment", r.exact_map ? to_json(*r.exact_map) : Json(nullptr)},
            {"cancelledOrder", r.cancelled_order},
            {"notes", r.notes}};
  if (job.conjugator.type == Conjugator::Type::MarkedTriple) j["conjugatorTargets"] = targets;
  if (r.mode == LimitMode::Numeric) {
    j["exactMapIsCandidate"] = true;
    j["numeric"] = {{"num", list(r.num, cx_json)},
                    {"den", list(r.den, cx_json)},
                    {"numErr", reals(r.num_err)},
                    {"denErr", reals(r.den_err)}};
    j["extrapolationOrder"] = r.extrapolation_order;
    j["samples"] = samples;
    Real worst = 0;
    for (const auto& e : r.node_errors) worst = std::max(worst, e);
    j["maxNodeError"] = real_str(worst);
    j["holes"] = r.holes;
    j["growthRate"] = r.growth_rate ? Json(real_str(*r.growth_rate)) : Json(nullptr);
  }
  return j;
}

Json report(const std::string& command, Json payload) {
  return {{"report", command}, {"version", kFormatVersion}, {"payload", std::move(payload)}};
}

}  // namespace artifact::io
