#include "artifact/fixtures.hpp"

#include <sstream>

namespace artifact {

namespace {
Rational parse_rational(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}
}  // namespace

Scalar parse_scalar_spec(const std::string& s) {
  std::vector<Rational> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) parts.push_back(parse_rational(tok));
  if (parts.empty() || parts.size() == 3 || parts.size() > 4) throw std::invalid_argument("bad scalar spec: " + s);
  parts.resize(4, Rational(0));
  return Scalar(GaussianRational(parts[0], parts[1]), GaussianRational(parts[2], parts[3]));
}

Point parse_point_spec(const std::string& s) {
  if (s == "inf") return Point::infinity();
  return Point::finite(parse_scalar_spec(s));
}

namespace fixtures {

TreeOfSpheres make_tree(const std::vector<SphereSpec>& spheres) {
  std::set<VertexId> internal;
  for (const auto& s : spheres) internal.insert(s.v);
  std::set<VertexId> verts = internal;
  std::set<Edge> edges;
  std::map<std::string, VertexId> leaves;
  TreeOfSpheres T;
  for (const auto& s : spheres) {
    for (const auto& [nb, p] : s.nbrs) {
      verts.insert(nb);
      edges.insert(make_edge(s.v, nb));
      if (!internal.count(nb)) leaves[nb] = nb;
      T.attach[s.v][nb] = parse_point_spec(p);
    }
  }
  T.tree = CombTree(std::vector<VertexId>(verts.begin(), verts.end()), std::vector<Edge>(edges.begin(), edges.end()),
                    leaves);
  return T;
}

static RationalFunction make_map(const MapSpec& m) {
  std::vector<Scalar> n, d;
  for (const auto& c : m.num) n.push_back(parse_scalar_spec(c));
  for (const auto& c : m.den) d.push_back(parse_scalar_spec(c));
  return RationalFunction(Poly<Scalar>(n), Poly<Scalar>(d));
}

CoverBetweenTrees make_cover(Portrait P, TreeOfSpheres Y, TreeOfSpheres Z, const std::vector<MapSpec>& maps) {
  CoverBetweenTrees C;
  for (const auto& [y, z] : P.F)
    if (Y.tree.has_label(y) && Z.tree.has_label(z)) C.F[Y.tree.leaf(y)] = Z.tree.leaf(z);
  for (const auto& m : maps) {
    C.F[m.from] = m.to;
    C.maps[m.from] = make_map(m);
  }
  C.portrait = std::move(P);
  C.source = std::move(Y);
  C.target = std::move(Z);
  return C;
}

DynamicalTreeSystem make_system(CoverBetweenTrees C, TreeOfSpheres X) {
  DynamicalTreeSystem S;
  for (const auto& x : X.tree.internal_vertices()) S.shared[x] = {x, x};
  S.cover = std::move(C);
  S.treeX = std::move(X);
  return S;
}

Portrait make_portrait(int d, const std::vector<std::tuple<Label, Label, int>>& F, const std::vector<Label>& X) {
  Portrait P;
  P.d = d;
  for (const auto& [y, z, k] : F) {
    P.Y.insert(y);
    P.Z.insert(z);
    P.F[y] = z;
    if (k != 1) P.deg[y] = k;
  }
  P.X.insert(X.begin(), X.end());
  return P;
}

DynamicalTreeSystem fig_exmilnor2() {
  Portrait P = make_portrait(2,
                             {{"alpha", "alpha", 1}, {"t_alpha", "alpha", 1}, {"beta", "beta", 1}, {"t_beta", "beta", 1},
                              {"gamma", "gamma", 1}, {"gt", "gamma", 1}, {"a1", "a2", 1}, {"t_a2", "a2", 1},
                              {"a2", "a1", 1}, {"t_a1", "a1", 1}, {"t_gt", "gt", 1}, {"t_gtb", "gt", 1},
                              {"c", "fc", 2}, {"cp", "fcp", 2}},
                             {"alpha", "beta", "gamma", "a1", "a2", "gt"});
  auto Y = make_tree({
      {"S1", {{"gt", "1"}, {"W0", "0"}, {"a2", "inf"}}},
      {"W0", {{"alpha", "1"}, {"beta", "-1"}, {"S", "0"}, {"S1", "inf"}}},
      {"S", {{"t_a2", "-3"}, {"cp", "3"}, {"CQ", "-1"}, {"a1", "0"}, {"P", "1"}, {"W0", "inf"}}},
      {"CQ", {{"t_gtb", "-1"}, {"t_gt", "1"}, {"c", "0"}, {"S", "inf"}}},
      {"P", {{"t_alpha", "-1"}, {"t_beta", "1"}, {"R", "0"}, {"S", "inf"}}},
      {"R", {{"gamma", "0"}, {"t_a1", "1"}, {"P", "inf"}}},
  });
  auto Z = make_tree({
      {"S1", {{"Q", "1"}, {"fcp", "1/9"}, {"W0", "0"}, {"a2", "inf"}}},
      {"Q", {{"gt", "0"}, {"fc", "1"}, {"S1", "inf"}}},
      {"W0", {{"alpha", "1"}, {"beta", "-1"}, {"S", "0"}, {"S1", "inf"}}},
      {"S", {{"a1", "0"}, {"gamma", "1"}, {"W0", "inf"}}},
  });
  auto X = make_tree({
      {"S1", {{"gt", "1"}, {"W0", "0"}, {"a2", "inf"}}},
      {"W0", {{"alpha", "1"}, {"beta", "-1"}, {"S", "0"}, {"S1", "inf"}}},
      {"S", {{"a1", "0"}, {"gamma", "1"}, {"W0", "inf"}}},
  });
  auto C = make_cover(std::move(P), std::move(Y), std::move(Z),
                      {
                          {"R", "S", {"1", "-1"}, {"1"}},
                          {"CQ", "Q", {"1", "0", "-1"}, {"1"}},
                          {"P", "W0", {"0", "-1"}, {"1"}},
                          {"S", "S1", {"-1", "1"}, {"0", "3", "1"}},
                          {"W0", "W0", {"1"}, {"0", "1"}},
                          {"S1", "S", {"1"}, {"0", "1"}},
                      });
  return make_system(std::move(C), std::move(X));
}

namespace {
std::vector<std::tuple<Label, Label, int>> exmil_portrait_map() {
  return {{"alpha", "alpha", 1}, {"t_alpha", "alpha", 1}, {"beta", "beta", 1}, {"t_beta", "beta", 1},
          {"gamma", "gamma", 1}, {"gt", "gamma", 1},      {"a1", "a2", 1},     {"t_a2", "a2", 1},
          {"a2", "a1", 1},       {"t_a1", "a1", 1},       {"c", "fc", 2},      {"cp", "fcp", 2},
          {"p1", "p2", 1},       {"t_p2", "p2", 1},       {"p2", "p3", 1},     {"t_p3", "p3", 1},
          {"p3", "p1", 1},       {"t_p1", "p1", 1},       {"q1", "q3", 1},     {"t_q3", "q3", 1},
          {"q3", "q5", 1},       {"t_q5", "q5", 1},       {"q5", "q2", 1},     {"t_q2", "q2", 1},
          {"q2", "q4", 1},       {"t_q4", "q4", 1},       {"q4", "q6", 1},     {"t_q6", "q6", 1},
          {"q6", "q1", 1},       {"t_q1", "q1", 1}};
}

CoverBetweenTrees exmil_cover(Portrait P) {
  auto Y = make_tree({
      {"ROOT", {{"TQ", "-1"}, {"QS", "1"}, {"W0", "0"}, {"a2", "inf"}}},
      {"QS", {{"gt", "1"}, {"R2", "0"}, {"ROOT", "inf"}}},
      {"R2", {{"q4", "0,-1"}, {"p1", "0"}, {"q3", "1"}, {"QS", "inf"}}},
      {"TQ", {{"t_q2", "0"}, {"t_p3", "1"}, {"t_q1", "1,1"}, {"ROOT", "inf"}}},
      {"W0", {{"beta", "-1"}, {"alpha", "1"}, {"S", "0"}, {"ROOT", "inf"}}},
      {"S", {{"t_a2", "-3"}, {"cp", "3"}, {"R1", "-1"}, {"a1", "0"}, {"P", "1"}, {"W0", "inf"}}},
      {"R1",
       {{"t_q4", "1/2,-1/2"},
        {"t_q3", "-1/2,1/2"},
        {"q2", "0,1"},
        {"q1", "1"},
        {"p3", "0"},
        {"t_p1", "1/2,1/2"},
        {"c", "1/4,1/4"},
        {"S", "inf"}}},
      {"P", {{"t_alpha", "-1"}, {"t_beta", "1"}, {"Rg", "0"}, {"S", "inf"}}},
      {"Rg", {{"Rgg", "0"}, {"t_a1", "1/2"}, {"R3", "1"}, {"P", "inf"}}},
      {"Rgg", {{"gamma", "0"}, {"Rt", "1"}, {"Rg", "inf"}}},
      {"Rt", {{"t_q6", "0"}, {"t_p2", "1"}, {"t_q5", "1,-1"}, {"Rgg", "inf"}}},
      {"R3", {{"q5", "1"}, {"p2", "0"}, {"q6", "0,-1"}, {"Rg", "inf"}}},
  });
  auto Z = make_tree({
      {"ROOT", {{"R2", "1"}, {"fcp", "1/9"}, {"W0", "0"}, {"a2", "inf"}}},
      {"W0", {{"beta", "-1"}, {"alpha", "1"}, {"S", "0"}, {"ROOT", "inf"}}},
      {"S", {{"R1", "-1"}, {"a1", "0"}, {"Rg", "1"}, {"W0", "inf"}}},
      {"R1", {{"q2", "0,1"}, {"p3", "0"}, {"q1", "1"}, {"S", "inf"}}},
      {"R2", {{"q4", "0,-1"}, {"p1", "0"}, {"q3", "1"}, {"fc", "1/8,-1/8"}, {"ROOT", "inf"}}},
      {"Rg", {{"gamma", "0"}, {"R3", "1"}, {"S", "inf"}}},
      {"R3", {{"q6", "0,-1"}, {"p2", "0"}, {"q5", "1"}, {"Rg", "inf"}}},
  });
  return make_cover(std::move(P), std::move(Y), std::move(Z),
                    {
                        {"Rt", "R3", {"0,-1", "0,1"}, {"1"}},
                        {"Rgg", "Rg", {"0", "1"}, {"1"}},
                        {"R3", "R1", {"0", "0,1"}, {"1"}},
                        {"Rg", "S", {"1", "-2"}, {"1"}},
                        {"R1", "R2", {"0", "0,-1", "1,1"}, {"1"}},
                        {"R2", "R3", {"0", "1"}, {"1"}},
                        {"P", "W0", {"0", "-1"}, {"1"}},
                        {"S", "ROOT", {"-1", "1"}, {"0", "3", "1"}},
                        {"QS", "Rg", {"1", "-1"}, {"1"}},
                        {"TQ", "R1", {"0,1", "0,-1"}, {"1"}},
                        {"W0", "W0", {"1"}, {"0", "1"}},
                        {"ROOT", "S", {"1"}, {"0", "1"}},
                    });
}
}  // namespace

DynamicalTreeSystem fig_exmil() {
  Portrait P = make_portrait(2, exmil_portrait_map(),
                             {"alpha", "beta", "gamma", "a1", "a2", "p1", "p2", "p3", "q1", "q2", "q3", "q4", "q5", "q6"});
  auto X = make_tree({
      {"ROOT", {{"R2", "1"}, {"W0", "0"}, {"a2", "inf"}}},
      {"W0", {{"beta", "-1"}, {"alpha", "1"}, {"S", "0"}, {"ROOT", "inf"}}},
      {"S", {{"R1", "-1"}, {"a1", "0"}, {"Rg", "1"}, {"W0", "inf"}}},
      {"R1", {{"q2", "0,1"}, {"p3", "0"}, {"q1", "1"}, {"S", "inf"}}},
      {"R2", {{"q4", "0,-1"}, {"p1", "0"}, {"q3", "1"}, {"ROOT", "inf"}}},
      {"Rg", {{"gamma", "0"}, {"R3", "1"}, {"S", "inf"}}},
      {"R3", {{"q6", "0,-1"}, {"p2", "0"}, {"q5", "1"}, {"Rg", "inf"}}},
  });
  return make_system(exmil_cover(std::move(P)), std::move(X));
}

DynamicalTreeSystem fig_exmil_forgotten() {
  Portrait P = make_portrait(2, exmil_portrait_map(),
                             {"alpha", "beta", "gamma", "p1", "p2", "p3", "q1", "q2", "q3", "q4", "q5", "q6"});
  auto X = make_tree({
      {"W0", {{"beta", "-1"}, {"alpha", "1"}, {"S", "0"}, {"R2", "inf"}}},
      {"S", {{"R1", "-1"}, {"Rg", "1"}, {"W0", "inf"}}},
      {"R1", {{"q2", "0,1"}, {"p3", "0"}, {"q1", "1"}, {"S", "inf"}}},
      {"R2", {{"q4", "0,-1"}, {"p1", "0"}, {"q3", "1"}, {"W0", "inf"}}},
      {"Rg", {{"gamma", "0"}, {"R3", "1"}, {"S", "inf"}}},
      {"R3", {{"q6", "0,-1"}, {"p2", "0"}, {"q5", "1"}, {"Rg", "inf"}}},
  });
  return make_system(exmil_cover(std::move(P)), std::move(X));
}

DynamicalTreeSystem fig1_counterexample() {
  std::vector<std::tuple<Label, Label, int>> F{{"cp", "cp", 2}, {"c0", "c1", 2}};
  std::vector<Label> X{"cp"};
  for (int k = 0; k < 8; ++k) {
    std::string n = std::to_string((k + 1) % 8), s = std::to_string(k);
    if (k > 0) F.push_back({"c" + s, "c" + n, 1});
    F.push_back({"a" + s, "a" + n, 1});
    F.push_back({"t_a" + s, "a" + s, 1});
    if (k != 1) F.push_back({"t_c" + s, "c" + s, 1});
    X.push_back("c" + s);
    X.push_back("a" + s);
  }
  Portrait P = make_portrait(2, F, X);

  auto red = [](int k) { return "red" + std::to_string(k); };
  auto black = [](int k) { return "black" + std::to_string(k); };
  std::vector<SphereSpec> base{
      {"blue1", {{"black1", "-1"}, {"black3", "0"}, {"G", "inf"}}},
      {"black1", {{red(1), "-1"}, {red(5), "0"}, {"blue1", "inf"}}},
      {"black2", {{red(2), "-1"}, {red(6), "0"}, {"blue0", "inf"}}},
      {"black3", {{red(3), "-1"}, {red(7), "0"}, {"blue1", "inf"}}},
  };
  for (int k = 1; k < 8; ++k)
    base.push_back({red(k), {{"c" + std::to_string(k), "0"}, {"a" + std::to_string(k), "1"}, {black(k % 4), "inf"}}});

  std::vector<SphereSpec> xs = base;
  xs.push_back({"G", {{"cp", "inf"}, {"blue0", "0"}, {"blue1", "-1"}}});
  xs.push_back({"blue0", {{"black0", "0"}, {"black2", "-1"}, {"G", "inf"}}});
  xs.push_back({"black0", {{red(0), "0"}, {red(4), "-1"}, {"blue0", "inf"}}});
  xs.push_back({red(0), {{"c0", "0"}, {"a0", "1"}, {"black0", "inf"}}});

  // Extra preimage spheres: "redj~" is a second copy of red j, mapping to red j+1.
  auto copy = [](int j) { return "red" + std::to_string(j) + "~"; };
  std::vector<SphereSpec> ys = base;
  ys.push_back({"G", {{"cp", "inf"}, {"blue0", "0"}, {"blue1", "-1"}, {"B~", "1"}}});
  ys.push_back({"blue0", {{"black0", "0"}, {"black2", "-1"}, {"black3~", "1"}, {"G", "inf"}}});
  ys.push_back({"black0", {{red(0), "0"}, {red(4), "-1"}, {copy(4), "1"}, {"blue0", "inf"}}});
  ys.push_back({red(0), {{"c0", "0"}, {"a0", "1"}, {"t_a1", "-1"}, {"black0", "inf"}}});
  ys.push_back({"B~", {{"K0~", "0"}, {"K2~", "-1"}, {"G", "inf"}}});
  ys.push_back({"K0~", {{copy(7), "0"}, {copy(3), "-1"}, {"B~", "inf"}}});
  ys.push_back({"K2~", {{copy(1), "-1"}, {copy(5), "0"}, {"B~", "inf"}}});
  ys.push_back({"black3~", {{copy(2), "-1"}, {copy(6), "0"}, {"blue0", "inf"}}});
  const std::map<int, VertexId> copy_parent{{4, "black0"}, {7, "K0~"}, {3, "K0~"}, {1, "K2~"},
                                            {5, "K2~"},    {2, "black3~"}, {6, "black3~"}};
  for (const auto& [j, par] : copy_parent) {
    std::string n = std::to_string((j + 1) % 8);
    ys.push_back({copy(j), {{"t_c" + n, "0"}, {"t_a" + n, "1"}, {par, "inf"}}});
  }

  std::vector<MapSpec> maps{
      {"G", "G", {"-1", "0", "1"}, {"1"}},          {"blue0", "blue1", {"-1", "0", "1"}, {"1"}},
      {"blue1", "blue0", {"0", "1"}, {"1"}},        {"B~", "blue0", {"0", "1"}, {"1"}},
      {"black0", "black1", {"-1", "0", "1"}, {"1"}}, {"black1", "black2", {"0", "1"}, {"1"}},
      {"black2", "black3", {"0", "1"}, {"1"}},      {"black3", "black0", {"0", "1"}, {"1"}},
      {"K0~", "black0", {"0", "1"}, {"1"}},         {"K2~", "black2", {"0", "1"}, {"1"}},
      {"black3~", "black3", {"0", "1"}, {"1"}},     {red(0), red(1), {"0", "0", "1"}, {"1"}},
  };
  for (int k = 1; k < 8; ++k) maps.push_back({red(k), red((k + 1) % 8), {"0", "1"}, {"1"}});
  for (const auto& [j, par] : copy_parent) maps.push_back({copy(j), red((j + 1) % 8), {"0", "1"}, {"1"}});

  auto C = make_cover(std::move(P), make_tree(ys), make_tree(xs), maps);
  return make_system(std::move(C), make_tree(xs));
}

DynamicalTreeSystem fig3_two_cycles() {
  std::vector<std::tuple<Label, Label, int>> F{
      {"alpha", "alpha", 1}, {"t_alpha", "alpha", 1}, {"beta", "beta", 1}, {"t_beta", "beta", 1},
      {"gamma", "gamma", 1}, {"t_gamma", "gamma", 1}, {"c", "o1", 2},      {"cp", "fcp", 2},
      {"o1", "o2", 1},       {"o2", "o3", 1},         {"t_o2", "o2", 1},   {"o3", "o4", 1},
      {"t_o3", "o3", 1},     {"o4", "c", 1},          {"t_o4", "o4", 1},   {"t_c", "c", 1},
      {"p1", "p2", 1},       {"t_p2", "p2", 1},       {"p2", "p3", 1},     {"t_p3", "p3", 1},
      {"p3", "p1", 1},       {"t_p1", "p1", 1}};
  std::vector<Label> X{"alpha", "beta", "gamma", "c", "o1", "o2", "o3", "o4", "p1", "p2", "p3"};
  for (int k = 0; k < 5; ++k) {
    std::string s = std::to_string(k), n = std::to_string((k + 1) % 5);
    F.push_back({"r" + s, "r" + n, 1});
    F.push_back({"t_r" + s, "r" + s, 1});
    X.push_back("r" + s);
  }
  Portrait P = make_portrait(2, F, X);

  const std::string om = "1/2,0,0,1/2", omb = "1/2,0,0,-1/2";
  std::vector<SphereSpec> common{
      {"R1", {{"o1", "0"}, {"r1", "1"}, {"VB", "inf"}}},
      {"R4", {{"o4", "0"}, {"r4", "1"}, {"VC", "inf"}}},
      {"W", {{"VB", "0"}, {"VC", "1"}, {"alpha", om}, {"beta", omb}, {"VA", "inf"}}},
  };
  auto xs = common;
  xs.push_back({"ROOT", {{"VA", "0"}, {"R3", "1"}, {"gamma", "inf"}}});
  xs.push_back({"VA", {{"p1", "-1"}, {"R0", "0"}, {"W", "1"}, {"ROOT", "inf"}}});
  xs.push_back({"VC", {{"R2", "0"}, {"p3", "1/2"}, {"R4", "1"}, {"W", "inf"}}});
  xs.push_back({"R0", {{"c", "0"}, {"r0", "1"}, {"VA", "inf"}}});
  xs.push_back({"R2", {{"o2", "0"}, {"r2", "1"}, {"VC", "inf"}}});
  xs.push_back({"R3", {{"o3", "0"}, {"r3", "1"}, {"ROOT", "inf"}}});
  auto zs = xs;
  xs.push_back({"VB", {{"R1", "0"}, {"p2", "1"}, {"W", "inf"}}});
  zs.push_back({"VB", {{"R1", "0"}, {"p2", "1"}, {"fcp", "-8"}, {"W", "inf"}}});

  auto ys = common;
  ys.push_back({"N3", {{"N2", "0"}, {"T3", "1"}, {"gamma", "inf"}}});
  ys.push_back({"N2", {{"ROOT", "0"}, {"T0", "1"}, {"t_p1", "2"}, {"N3", "inf"}}});
  ys.push_back({"ROOT", {{"VA", "0"}, {"K", "1"}, {"t_alpha", om}, {"t_beta", omb}, {"N2", "inf"}}});
  ys.push_back({"K", {{"R3", "0"}, {"t_p3", "1/2"}, {"T2", "1"}, {"ROOT", "inf"}}});
  ys.push_back({"VA", {{"p1", "-1"}, {"R0", "0"}, {"t_p2", "1/2"}, {"W", "1"}, {"cp", "2"}, {"ROOT", "inf"}}});
  ys.push_back({"VB", {{"R1", "0"}, {"p2", "1"}, {"T4", "2"}, {"W", "inf"}}});
  ys.push_back({"VC", {{"G2", "0"}, {"p3", "1/2"}, {"R4", "1"}, {"W", "inf"}}});
  ys.push_back({"G2", {{"R2", "0"}, {"t_gamma", "1"}, {"VC", "inf"}}});
  ys.push_back({"R0", {{"t_r1", "-1"}, {"c", "0"}, {"r0", "1"}, {"VA", "inf"}}});
  ys.push_back({"R2", {{"o2", "0"}, {"r2", "1"}, {"G2", "inf"}}});
  ys.push_back({"R3", {{"o3", "0"}, {"r3", "1"}, {"K", "inf"}}});
  ys.push_back({"T0", {{"t_r0", "0"}, {"t_c", "1"}, {"N2", "inf"}}});
  ys.push_back({"T2", {{"t_o2", "0"}, {"t_r2", "1"}, {"K", "inf"}}});
  ys.push_back({"T3", {{"t_r3", "0"}, {"t_o3", "1"}, {"N3", "inf"}}});
  ys.push_back({"T4", {{"t_r4", "0"}, {"t_o4", "1"}, {"VB", "inf"}}});

  auto C = make_cover(std::move(P), make_tree(ys), make_tree(zs),
                      {
                          {"N3", "ROOT", {"0", "1"}, {"1"}},
                          {"N2", "VA", {"1", "-1"}, {"1"}},
                          {"ROOT", "W", {"0", "1"}, {"1"}},
                          {"K", "VC", {"1", "-1"}, {"1"}},
                          {"VA", "VB", {"0", "0", "-2"}, {"-1", "1"}},
                          {"VB", "VC", {"0", "1/2"}, {"1"}},
                          {"VC", "VA", {"-1", "1"}, {"0", "1"}},
                          {"W", "W", {"1"}, {"1", "-1"}},
                          {"G2", "ROOT", {"1"}, {"1", "-1"}},
                          {"R0", "R1", {"0", "0", "1"}, {"1"}},
                          {"R1", "R2", {"0", "1"}, {"1"}},
                          {"R2", "R3", {"0", "1"}, {"1"}},
                          {"R3", "R4", {"0", "1"}, {"1"}},
                          {"R4", "R0", {"0", "1"}, {"1"}},
                          {"T0", "R0", {"1", "-1"}, {"1"}},
                          {"T2", "R2", {"0", "1"}, {"1"}},
                          {"T3", "R3", {"1", "-1"}, {"1"}},
                          {"T4", "R4", {"1", "-1"}, {"1"}},
                      });
  return make_system(std::move(C), make_tree(xs));
}

DynamicalTreeSystem single_square() {
  Portrait P = make_portrait(2, {{"zero", "zero", 2}, {"inf", "inf", 2}, {"one", "one", 1}, {"t_one", "one", 1}},
                             {"zero", "inf", "one"});
  auto Y = make_tree({{"V", {{"zero", "0"}, {"inf", "inf"}, {"one", "1"}, {"t_one", "-1"}}}});
  auto Z = make_tree({{"V", {{"zero", "0"}, {"inf", "inf"}, {"one", "1"}}}});
  auto X = Z;
  auto C = make_cover(std::move(P), std::move(Y), std::move(Z), {{"V", "V", {"0", "0", "1"}, {"1"}}});
  return make_system(std::move(C), std::move(X));
}

namespace {
// Two fixed spheres: V near 0 with f = -z, and W at a larger scale with
// f = mu w + w^2 (limit of -z + z^2/n). The attaching points have
// multipliers -1 and mu.
DynamicalTreeSystem rotation_pair(const std::string& mu, const std::string& crit, const std::string& crit_value,
                                  const std::string& fixed, const std::string& other_zero) {
  Portrait P = make_portrait(2,
                             {{"zero", "zero", 1}, {"zero2", "zero", 1}, {"p", "q", 1}, {"p2", "q", 1},
                              {"q", "p", 1}, {"q2", "p", 1}, {"inf", "inf", 2}, {"c", "c1", 2},
                              {"fix", "fix", 1}, {"fix2", "fix", 1}},
                             {"zero", "p", "q", "inf", "fix"});
  auto Y = make_tree({
      {"V", {{"zero", "0"}, {"p", "1"}, {"q", "-1"}, {"W", "inf"}}},
      {"V2", {{"zero2", "0"}, {"p2", "1"}, {"q2", "-1"}, {"W", "inf"}}},
      {"W", {{"V", "0"}, {"V2", other_zero}, {"inf", "inf"}, {"c", crit}, {"fix", fixed}, {"fix2", "-1"}}},
  });
  auto Z = make_tree({
      {"V", {{"zero", "0"}, {"p", "1"}, {"q", "-1"}, {"W", "inf"}}},
      {"W", {{"V", "0"}, {"inf", "inf"}, {"c1", crit_value}, {"fix", fixed}}},
  });
  auto X = make_tree({
      {"V", {{"zero", "0"}, {"p", "1"}, {"q", "-1"}, {"W", "inf"}}},
      {"W", {{"V", "0"}, {"inf", "inf"}, {"fix", fixed}}},
  });
  auto C = make_cover(std::move(P), std::move(Y), std::move(Z),
                      {{"V", "V", {"0", "-1"}, {"1"}}, {"V2", "V", {"0", "-1"}, {"1"}}, {"W", "W", {"0", mu, "1"}, {"1"}}});
  return make_system(std::move(C), std::move(X));
}
}  // namespace

DynamicalTreeSystem rotation_pair_balanced() { return rotation_pair("-1", "1/2", "-1/4", "2", "1"); }
DynamicalTreeSystem rotation_pair_unbalanced() { return rotation_pair("-1/2", "1/4", "-1/16", "3/2", "1/2"); }

DynamicalTreeSystem make_fixed_point_skeleton(const SkeletonSpec& spec) {
  Portrait P = make_portrait(2,
                             {{"alpha", "alpha", 1}, {"alpha1", "alpha", 1}, {"beta", "beta", 1}, {"beta1", "beta", 1},
                              {"gamma", "gamma", 1}, {"gamma1", "gamma", 1}, {"c", "v", 2}, {"c1", "v1", 2}},
                             {"alpha", "beta", "gamma"});
  auto build = [](const std::vector<std::pair<VertexId, std::vector<std::string>>>& adj) {
    std::set<VertexId> internal, verts;
    std::set<Edge> edges;
    std::map<std::string, VertexId> leaves;
    for (const auto& [v, nbs] : adj) internal.insert(v);
    for (const auto& [v, nbs] : adj) {
      verts.insert(v);
      for (const auto& nb : nbs) {
        verts.insert(nb);
        edges.insert(make_edge(v, nb));
        if (!internal.count(nb)) leaves[nb] = nb;
      }
    }
    TreeOfSpheres T;
    T.tree = CombTree(std::vector<VertexId>(verts.begin(), verts.end()), std::vector<Edge>(edges.begin(), edges.end()),
                      leaves);
    return T;
  };
  CoverBetweenTrees C;
  C.source = build(spec.Y);
  C.target = build(spec.Z);
  for (const auto& [y, z] : P.F) C.F[y] = z;
  for (const auto& [v, w] : spec.F) C.F[v] = w;
  C.skeleton_degree = spec.degree;
  for (const auto& [u, v, k] : spec.edge_degree) C.skeleton_edge_degree[make_edge(u, v)] = k;
  C.portrait = std::move(P);
  return make_system(std::move(C), build({{"w0", {"alpha", "beta", "gamma"}}}));
}

DynamicalTreeSystem fig5_triv() {
  return make_fixed_point_skeleton({{{"w0", {"alpha", "alpha1", "beta", "beta1", "gamma", "gamma1", "c", "c1"}}},
                                    {{"w0", {"alpha", "beta", "gamma", "v", "v1"}}},
                                    {{"w0", "w0"}},
                                    {{"w0", 2}},
                                    {}});
}

DynamicalTreeSystem fig5_pol() {
  return make_fixed_point_skeleton({{{"w0", {"y1", "beta", "beta1", "gamma", "gamma1", "c1"}}, {"y1", {"alpha", "alpha1", "c"}}},
                                    {{"w0", {"z1", "beta", "gamma", "v1"}}, {"z1", {"alpha", "v"}}},
                                    {{"w0", "w0"}, {"y1", "z1"}},
                                    {{"w0", 2}, {"y1", 2}},
                                    {{"w0", "y1", 2}}});
}

DynamicalTreeSystem fig5_b() {
  return make_fixed_point_skeleton(
      {{{"w0", {"y1", "y2", "gamma", "gamma1"}}, {"y1", {"alpha", "alpha1", "c"}}, {"y2", {"beta", "beta1", "c1"}}},
       {{"w0", {"z1", "z2", "gamma"}}, {"z1", {"alpha", "v"}}, {"z2", {"beta", "v1"}}},
       {{"w0", "w0"}, {"y1", "z1"}, {"y2", "z2"}},
       {{"w0", 2}, {"y1", 2}, {"y2", 2}},
       {{"w0", "y1", 2}, {"w0", "y2", 2}}});
}

DynamicalTreeSystem fig5_c2() {
  return make_fixed_point_skeleton({{{"w0", {"beta", "gamma", "v0"}},
                                     {"v0", {"y1", "y3", "c"}},
                                     {"y1", {"alpha", "alpha1", "c1"}},
                                     {"y3", {"beta1", "gamma1"}}},
                                    {{"w0", {"beta", "gamma", "v0"}}, {"v0", {"z1", "v"}}, {"z1", {"alpha", "v1"}}},
                                    {{"w0", "w0"}, {"v0", "v0"}, {"y1", "z1"}, {"y3", "w0"}},
                                    {{"v0", 2}, {"y1", 2}},
                                    {{"v0", "y1", 2}}});
}

DynamicalTreeSystem fig5_parb() {
  return make_fixed_point_skeleton(
      {{{"w0", {"beta", "gamma", "v0"}}, {"v0", {"y3", "alpha", "alpha1", "c", "c1"}}, {"y3", {"beta1", "gamma1"}}},
       {{"w0", {"beta", "gamma", "v0"}}, {"v0", {"alpha", "v", "v1"}}},
       {{"w0", "w0"}, {"v0", "v0"}, {"y3", "w0"}},
       {{"v0", 2}},
       {}});
}

DynamicalTreeSystem fig5_a1() {
  return make_fixed_point_skeleton(
      {{{"w0", {"alpha", "alpha1", "c", "c1", "yb", "yg"}}, {"yb", {"beta", "gamma1"}}, {"yg", {"beta1", "gamma"}}},
       {{"w0", {"beta", "gamma", "z1"}}, {"z1", {"alpha", "v", "v1"}}},
       {{"w0", "z1"}, {"yb", "w0"}, {"yg", "w0"}},
       {{"w0", 2}},
       {}});
}

const std::vector<SystemFixture>& skeleton_fixtures() {
  static const std::vector<SystemFixture> all{
      {"fig5_A1", fig5_a1}, {"fig5_B", fig5_b},       {"fig5_C2", fig5_c2},
      {"fig5_Parb", fig5_parb}, {"fig5_Pol", fig5_pol}, {"fig5_Triv", fig5_triv},
  };
  return all;
}

const std::vector<SystemFixture>& system_fixtures() {
  static const std::vector<SystemFixture> all{
      {"fig1_counterexample", fig1_counterexample}, {"fig3_two_cycles", fig3_two_cycles},
      {"fig_exmil", fig_exmil},                     {"fig_exmil_forgotten", fig_exmil_forgotten},
      {"fig_exmilnor2", fig_exmilnor2},             {"rotation_pair_balanced", rotation_pair_balanced},
      {"rotation_pair_unbalanced", rotation_pair_unbalanced}, {"single_square", single_square},
  };
  return all;
}

}  // namespace fixtures
}  // namespace artifact
