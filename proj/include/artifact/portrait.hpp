#pragma once
// Portraits: the finite data (F: Y -> Z, deg) a cover must realize.

#include <map>
#include <set>
#include <string>
#include <vector>

namespace artifact {

using Label = std::string;

struct Portrait {
  int d = 1;
  std::set<Label> Y, Z, X;
  std::map<Label, Label> F;
  std::map<Label, int> deg;

  int degree_of(const Label& y) const {
    auto it = deg.find(y);
    return it == deg.end() ? 1 : it->second;
  }
  // Labels y with deg(y) > 1.
  std::vector<Label> critical() const;
  // Labels x in X with F(x) = x.
  std::vector<Label> fixed_in_X() const;
};

struct Violation {
  std::string kind;
  std::string detail;
};

std::vector<Violation> validate_portrait(const Portrait& P);

}  // namespace artifact
