#include "gieseking/lobachevsky.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace gieseking {

namespace {

constexpr int kZetaTerms = 40;

// zeta(2), zeta(4), ... from the convolution recurrence
//   (2n+1) zeta(2n) = 2 * sum_{j=1}^{n-1} zeta(2j) zeta(2n-2j),  n >= 2,
// which is exact and involves only positive terms.
std::array<double, kZetaTerms + 1> make_even_zeta_table() {
  std::array<double, kZetaTerms + 1> z{};
  z[1] = std::numbers::pi * std::numbers::pi / 6.0;
  for (int n = 2; n <= kZetaTerms; ++n) {
    double s = 0.0;
    for (int j = 1; j < n; ++j) s += z[j] * z[n - j];
    z[n] = 2.0 * s / (2.0 * n + 1.0);
  }
  return z;
}

const std::array<double, kZetaTerms + 1> kEvenZeta = make_even_zeta_table();

}  // namespace

double lobachevsky(double theta) {
  // Reduce by pi-periodicity to r in [-pi/2, pi/2]; the expansion below is
  // odd in r, so the sign takes care of itself.
  const double r = std::remainder(theta, std::numbers::pi);
  const double a = std::abs(r);
  if (a == 0.0) return 0.0;

  // L(r) = r - r ln(2r) + sum_{n>=1} zeta(2n) r^(2n+1) / (n (2n+1) pi^(2n))
  // for 0 < r < pi; at |r| <= pi/2 the terms decay like 4^-n.
  double sum = a * (1.0 - std::log(2.0 * a));
  const double ratio = (a / std::numbers::pi) * (a / std::numbers::pi);
  double power = a;
  for (int n = 1; n <= kZetaTerms; ++n) {
    power *= ratio;
    const double term = kEvenZeta[n] * power / (n * (2.0 * n + 1.0));
    sum += term;
    if (term < 1e-18 * (1.0 + std::abs(sum))) break;
  }
  return r > 0.0 ? sum : -sum;
}

}  // namespace gieseking
