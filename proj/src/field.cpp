#include "artifact/field.hpp"

namespace artifact {

namespace {
std::string paren(const std::string& s) {
  return s.find_first_of("+-", 1) == std::string::npos ? s : "(" + s + ")";
}
}  // namespace

std::string to_string(const GaussianRational& x) {
  if (is_zero(x.b)) return x.a.get_str();
  std::string im = x.b == 1 ? "i" : x.b == -1 ? "-i" : x.b.get_str() + "i";
  if (is_zero(x.a)) return im;
  return x.a.get_str() + (im[0] == '-' ? "" : "+") + im;
}

std::string to_string(const Scalar& x) {
  if (is_zero(x.b)) return to_string(x.a);
  std::string s = paren(to_string(x.b)) + "*sqrt3";
  if (is_zero(x.a)) return s;
  return to_string(x.a) + "+" + s;
}

}  // namespace artifact
