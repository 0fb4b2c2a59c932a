#pragma once
// Human-readable forms of polynomials and maps, e.g. "(z^2 + 3*z)/(z - 1)".

#include <string>

#include "artifact/ratfunc.hpp"

namespace artifact {

std::string to_string(const Poly<Rational>& p, const std::string& var = "a");
std::string to_string(const ParamCoeff& c, const std::string& var = "a");
std::string to_string(const Poly<Scalar>& p, const std::string& var = "z");
std::string to_string(const RationalFunction& f, const std::string& var = "z");
std::string to_string(const ParamRationalFunction& f, const std::string& var = "z");
std::string to_string(const Point& p);

}  // namespace artifact
