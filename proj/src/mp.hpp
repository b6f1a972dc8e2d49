#pragma once

// Multiprecision scratch type for the handful of alternating sums whose
// cancellation exceeds what double can carry (F_k series at large argument,
// the trigonometric joint-moment form near |cos beta| << 1, WZ sums at
// large p). Keep this header out of public interfaces: boost headers are
// heavy, so only .cpp files include it.

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace cuelab {

using mp50 = boost::multiprecision::cpp_bin_float_50;

inline double to_double(const mp50& x) { return static_cast<double>(x); }

}  // namespace cuelab
