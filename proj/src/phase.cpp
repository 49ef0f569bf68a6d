#include "csm/phase.hpp"

#include <cmath>
#include <limits>

namespace csm {

namespace {

long double modulus_defect(double re, double im) {
  const long double r = re;
  const long double i = im;
  return std::fabs(r * r + i * i - 1.0L);
}

}  // namespace

Complex unit_phase(double angle) noexcept {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double cs[3] = {c, std::nextafter(c, -inf), std::nextafter(c, inf)};
  const double ss[3] = {s, std::nextafter(s, -inf), std::nextafter(s, inf)};
  double best_c = c, best_s = s;
  long double best = modulus_defect(c, s);
  for (double cc : cs) {
    for (double sc : ss) {
      const long double d = modulus_defect(cc, sc);
      if (d < best) {
        best = d;
        best_c = cc;
        best_s = sc;
      }
    }
  }
  return {best_c, best_s};
}

}  // namespace csm
