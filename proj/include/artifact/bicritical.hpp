#pragma once
// Classification of bicritical dynamical systems of trees of spheres.

#include <optional>
#include <string>
#include <variant>

#include "artifact/dynamics.hpp"

namespace artifact {

struct StructuralViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Path [c, c'] in T^Y between the two critical leaves; checks that its
// internal vertices are exactly the critical vertices.
std::vector<VertexId> critical_path(const CoverBetweenTrees& C);
std::vector<VertexId> critical_path(const DynamicalTreeSystem& S);

struct W0V0 {
  VertexId w0;  // T^X vertex
  int k0 = 0;
  VertexId v0;  // T^Y vertex
};
struct NoRescalingCertificate {
  std::string reason;
};
std::variant<W0V0, NoRescalingCertificate> locate_w0_v0(const DynamicalTreeSystem& S, int order_bound = 64);

enum class CaseKind { ParabolicOnly, ParabolicAndPolynomial, ForgottenPolynomial, NoRescalingCertificate, TheoremContradiction };
std::string case_name(CaseKind k);

struct CycleDiagnostics {
  SphereCycle cycle;
  RationalFunction cover;
  std::optional<Point> parabolic_point;       // multiplier exactly 1
  std::optional<Point> critical_fixed_point;  // fixed, local degree d
  std::string critical_orbit_to_parabolic;    // "yes", "no", "unverified" or ""
  Tristate pcf = Tristate::Unknown;
};

struct BicriticalClassification {
  CaseKind kind = CaseKind::TheoremContradiction;
  std::vector<VertexId> critical_path;
  std::optional<VertexId> w0, v0;
  int k0 = 0;
  int k0_prime = 0;
  std::vector<CycleDiagnostics> cycles;
  std::vector<std::string> notes;
};

BicriticalClassification classify(const DynamicalTreeSystem& S, int iteration_cap = 32, int order_bound = 64);

// For a quadratic map with a fixed critical point of local degree 2: the
// constant c with g Moebius-conjugate to z^2 + c.
std::optional<Scalar> quadratic_polynomial_invariant(const RationalFunction& g, const Point& superattracting);

}  // namespace artifact
