#include "artifact/portrait.hpp"

namespace artifact {

std::vector<Label> Portrait::critical() const {
  std::vector<Label> out;
  for (const auto& y : Y)
    if (degree_of(y) > 1) out.push_back(y);
  return out;
}

std::vector<Label> Portrait::fixed_in_X() const {
  std::vector<Label> out;
  for (const auto& x : X) {
    auto it = F.find(x);
    if (it != F.end() && it->second == x) out.push_back(x);
  }
  return out;
}

std::vector<Violation> validate_portrait(const Portrait& P) {
  std::vector<Violation> out;
  if (P.d < 1) out.push_back({"degree", "declared degree " + std::to_string(P.d) + " < 1"});
  for (const auto& y : P.Y) {
    auto it = P.F.find(y);
    if (it == P.F.end()) {
      out.push_back({"F_map", "no image for " + y});
      continue;
    }
    if (!P.Z.count(it->second)) out.push_back({"F_map", "image " + it->second + " of " + y + " not in Z"});
    if (P.degree_of(y) < 1) out.push_back({"deg_map", "deg(" + y + ") < 1"});
  }
  for (const auto& [y, z] : P.F)
    if (!P.Y.count(y)) out.push_back({"F_map", "F defined on " + y + " outside Y"});
  for (const auto& [y, k] : P.deg)
    if (!P.Y.count(y)) out.push_back({"deg_map", "deg defined on " + y + " outside Y"});
  long crit = 0;
  for (const auto& y : P.Y) crit += P.degree_of(y) - 1;
  if (crit != 2L * P.d - 2)
    out.push_back({"riemann_hurwitz", "critical sum = " + std::to_string(crit) + " != 2d-2 = " + std::to_string(2 * P.d - 2)});
  std::map<Label, int> fiber;
  for (const auto& [y, z] : P.F)
    if (P.Y.count(y)) fiber[z] += P.degree_of(y);
  for (const auto& z : P.Z)
    if (fiber[z] != P.d)
      out.push_back({"fiber", "fiber over " + z + " has total degree " + std::to_string(fiber[z]) + " != d = " + std::to_string(P.d)});
  for (const auto& x : P.X)
    if (!P.Y.count(x) || !P.Z.count(x)) out.push_back({"marking", x + " in X but not in Y and Z"});
  return out;
}

}  // namespace artifact
