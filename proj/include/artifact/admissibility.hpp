#pragma once
// Necessary conditions for a dynamical system of trees of spheres to be a
// limit of dynamically marked rational maps: the Branches and Annuli lemmas.

#include <optional>
#include <string>
#include <vector>

#include "artifact/dynamics.hpp"

namespace artifact {

struct AdmissibilityWitness {
  std::string lemma;  // "branches", "annuli-critical", "annuli-noncritical"
  std::vector<VertexId> vertices;
  int k0 = 0;
  std::string detail;
  std::vector<std::string> values;
};
bool operator<(const AdmissibilityWitness& a, const AdmissibilityWitness& b);

struct UntestedInstance {
  std::vector<VertexId> vertices;
  int k = 0;  // first iterate that left T^X
  std::string reason;
};

std::vector<AdmissibilityWitness> check_branches_lemma(const DynamicalTreeSystem& S);

struct AnnuliCheck {
  std::vector<AdmissibilityWitness> witnesses;
  std::vector<UntestedInstance> untested;
};
AnnuliCheck check_annuli_lemma(const DynamicalTreeSystem& S, int kmax);

// Default kmax: number of internal T^X vertices.
int default_kmax(const DynamicalTreeSystem& S);

enum class AdmissibilityStatus { ConsistentWithNecessaryConditions, NotApproximable };
std::string status_name(AdmissibilityStatus s);

struct AdmissibilityVerdict {
  AdmissibilityStatus status = AdmissibilityStatus::ConsistentWithNecessaryConditions;
  std::vector<AdmissibilityWitness> witnesses;  // sorted
  std::vector<UntestedInstance> untested;
  std::vector<std::string> notes;
};

AdmissibilityVerdict admissibility_report(const DynamicalTreeSystem& S, std::optional<int> kmax = std::nullopt);

}  // namespace artifact
