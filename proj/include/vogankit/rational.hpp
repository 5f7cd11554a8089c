#ifndef VOGANKIT_RATIONAL_HPP
#define VOGANKIT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace vgk {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct shape_error : error {
  using error::error;
};
struct rank_error : error {
  using error::error;
};
struct not_affine_error : error {
  using error::error;
};
struct inconsistent_system_error : error {
  using error::error;
};
struct lattice_error : error {
  using error::error;
};
struct painting_error : error {
  using error::error;
};
struct coverage_error : error {
  using error::error;
};
struct order_error : error {
  using error::error;
};
struct decomposition_error : error {
  using error::error;
};
struct context_error : error {
  using error::error;
};
struct parse_error : error {
  using error::error;
};

/// Canonical string form: "p" for integers, "p/q" otherwise.
inline std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw parse_error("zero denominator in rational: " + s);
    return Rat(num, den);
  } catch (const std::exception& e) {
    throw parse_error("bad rational literal '" + s + "': " + e.what());
  }
}

}  // namespace vgk

#endif
