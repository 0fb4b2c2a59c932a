#pragma once
// Maps whose coefficients lie in Q(a), and their specialization at a = a0.

#include <string>

#include "artifact/ratfunc.hpp"

namespace artifact {

struct DegenerateLimit : AlgebraError {
  using AlgebraError::AlgebraError;
};
struct CoefficientPole : AlgebraError {
  using AlgebraError::AlgebraError;
};

inline Scalar to_scalar(const Rational& q) { return Scalar(GaussianRational(q)); }

// The parameter a as an element of Q(a).
inline ParamCoeff param_a() { return ParamCoeff(Poly<Rational>::x()); }

// Value of a parameter coefficient at a0; throws CoefficientPole at a pole.
Rational specialize(const ParamCoeff& c, const Rational& a0);
RationalFunction specialize(const ParamRationalFunction& f, const Rational& a0);

struct LimitInfo {
  RationalFunction map;
  int cancelled_order = 0;  // power of (a - a0) removed from num and den
  int generic_degree = 0;
  int limit_degree = 0;
};

// Limit of f_a as a -> a0: clear parameter denominators, cancel the shared
// (a - a0) content, specialize, reduce.
LimitInfo limit_at_param(const ParamRationalFunction& f, const Rational& a0);

// f_a = (1+3a)(z-a) / ((1-a)(3az+z^2))
ParamRationalFunction milnor_family();

}  // namespace artifact
