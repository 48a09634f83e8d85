#pragma once

#include <array>
#include <complex>
#include <functional>
#include <numbers>

#include "subord/error.hpp"

namespace test_support {

inline bool throws_kind(const std::function<void()>& fn, subord::ErrorKind kind) {
  try {
    fn();
  } catch (const subord::Error& e) {
    return e.kind() == kind;
  }
  return false;
}

// Derivatives 0..2 of an analytic g at z by the trapezoid rule on the
// Cauchy integral over |ζ - z| = rho. Converges geometrically as long as
// the circle keeps away from singularities of g.
template <class G>
std::array<std::complex<double>, 3> cauchy_derivatives(G&& g, std::complex<double> z, double rho, int n = 64) {
  std::array<std::complex<double>, 3> out{};
  for (int j = 0; j < n; ++j) {
    const std::complex<double> u = std::polar(1.0, 2.0 * std::numbers::pi * j / n);
    const std::complex<double> v = g(z + rho * u);
    out[0] += v;
    out[1] += v / u;
    out[2] += v / (u * u);
  }
  out[0] /= static_cast<double>(n);
  out[1] /= n * rho;
  out[2] *= 2.0 / (n * rho * rho);
  return out;
}

}  // namespace test_support

// Only meaningful inside doctest translation units.
#define CHECK_THROWS_KIND(expr, kind) CHECK(test_support::throws_kind([&] { (void)(expr); }, kind))
