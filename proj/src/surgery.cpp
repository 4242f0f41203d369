#include "gieseking/surgery.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gieseking/lobachevsky.hpp"

namespace gieseking {

namespace {

using std::numbers::pi;

void require_k(int k) {
  if (k < 2)
    throw std::domain_error(
        "k must be an integer >= 2 (k = 1 is the splitting surgery, which "
        "replaces the cusp by a solid Klein bottle and is not hyperbolic)");
}

/// The printed closed form of each series, with the principal square root.
Complex closed_form(Branch branch, int k) {
  const Complex s = std::polar(1.0, pi / k);
  const Complex sb = std::conj(s);
  switch (branch) {
    case Branch::Gies1: return 1.0 + 0.5 * s * (1.0 + std::sqrt(1.0 + 4.0 * sb));
    case Branch::Gies2: return 1.0 + 0.5 * sb * (1.0 - std::sqrt(1.0 + 4.0 * s));
    case Branch::Gies3: return 1.0 - 0.5 * sb * (1.0 + std::sqrt(1.0 - 4.0 * s));
    case Branch::Gies4: return 1.0 - 0.5 * s * (1.0 - std::sqrt(1.0 - 4.0 * sb));
  }
  throw std::logic_error("unreachable branch");
}

bool admissible(Complex z) {
  return z.imag() > 0.0 && region_of(z) != ConstraintRegion::None;
}

}  // namespace

std::string branch_name(Branch b) {
  switch (b) {
    case Branch::Gies1: return "gies1";
    case Branch::Gies2: return "gies2";
    case Branch::Gies3: return "gies3";
    case Branch::Gies4: return "gies4";
  }
  throw std::logic_error("unreachable branch");
}

Branch branch_from_string(const std::string& name) {
  std::string s;
  for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "gies1") return Branch::Gies1;
  if (s == "gies2") return Branch::Gies2;
  if (s == "gies3") return Branch::Gies3;
  if (s == "gies4") return Branch::Gies4;
  throw std::invalid_argument("unknown branch '" + name + "' (expected gies1..gies4)");
}

Branch half_turn_partner(Branch b) {
  switch (b) {
    case Branch::Gies1: return Branch::Gies2;
    case Branch::Gies2: return Branch::Gies1;
    case Branch::Gies3: return Branch::Gies4;
    case Branch::Gies4: return Branch::Gies3;
  }
  throw std::logic_error("unreachable branch");
}

std::string classification_name(Classification c) {
  return c == Classification::Orbifold ? "orbifold" : "cone_manifold";
}

ConstraintRegion region_of(Complex z) {
  const double az = std::abs(z);
  const double az1 = std::abs(z - 1.0);
  if (1.0 < az1 && az1 < az) return ConstraintRegion::A;
  if (az < az1 && az1 < 1.0) return ConstraintRegion::B;
  return ConstraintRegion::None;
}

std::string region_name(ConstraintRegion r) {
  switch (r) {
    case ConstraintRegion::A: return "A";
    case ConstraintRegion::B: return "B";
    case ConstraintRegion::None: return "none";
  }
  throw std::logic_error("unreachable region");
}

std::pair<Complex, Complex> solve_general(Complex w) {
  if (std::abs(std::abs(w) - 1.0) > 1e-12)
    throw std::invalid_argument("surgery parameter w must be unimodular");
  // w z^2 - (2w+1) z + w = 0; discriminant (2w+1)^2 - 4 w^2 = 4w + 1.
  const Complex B = -(2.0 * w + 1.0);
  Complex disc = std::sqrt(4.0 * w + 1.0);
  if (std::real(std::conj(B) * disc) > 0.0) disc = -disc;
  const Complex q = -0.5 * (B + disc);
  if (std::abs(q) <= 1e-300)
    throw std::invalid_argument("degenerate surgery parameter");
  return {q / w, w / q};
}

double surgery_angle(Complex z) {
  if (std::abs(z) < 1e-12 || std::abs(z - 1.0) < 1e-12)
    throw std::domain_error("surgery angle undefined at z = 0 or z = 1");
  return principal_angle(2.0 * std::arg(z) - 4.0 * std::arg(1.0 - z));
}

Complex fixed_point_v(Complex z) {
  const double az = std::abs(z);
  if (std::abs(az - 1.0) < 1e-12)
    throw std::domain_error("|z| = 1: v escapes to infinity, no finite fixed point");
  return z / (1.0 - az);
}

std::pair<Classification, double> classify(Branch branch, int k) {
  require_k(k);
  switch (branch) {
    case Branch::Gies1:
    case Branch::Gies2: {
      const double cone = 2.0 * pi * (k - 1) / k;
      return {k == 2 ? Classification::Orbifold : Classification::ConeManifold, cone};
    }
    case Branch::Gies3:
    case Branch::Gies4:
      return {Classification::Orbifold, 2.0 * pi / k};
  }
  throw std::logic_error("unreachable branch");
}

SurgerySolution solve(Branch branch, int k) {
  require_k(k);
  Complex z = closed_form(branch, k);
  if (!admissible(z)) {
    // Substitute the other root of the quadratic the closed form solves.
    const Complex w = z / ((1.0 - z) * (1.0 - z));
    const auto [r1, r2] = solve_general(w / std::abs(w));
    const Complex other = std::abs(r1 - z) > std::abs(r2 - z) ? r1 : r2;
    if (!admissible(other))
      throw std::logic_error("no admissible root for " + branch_name(branch) +
                             ", k = " + std::to_string(k));
    z = other;
  }

  SurgerySolution sol;
  sol.branch = branch;
  sol.k = k;
  sol.z = z;
  const IdealSimplexParam param(z);
  sol.angles = dihedral_angles(param);
  sol.volume = gieseking::volume(param);
  sol.v = fixed_point_v(z);
  sol.phi = surgery_angle(z);
  auto [cls, cone] = classify(branch, k);
  sol.classification = cls;
  sol.cone_angle = cone;
  return sol;
}

BranchLimit limit(Branch branch) {
  const double s5 = std::sqrt(5.0);
  switch (branch) {
    case Branch::Gies1:
      return {Complex((3.0 + s5) / 2.0, 0.0),
              BoundaryPoint::finite(Complex(-(1.0 + s5) / 2.0, 0.0)),
              {0.0, 0.0, pi},
              0.0};
    case Branch::Gies2:
      return {Complex((3.0 - s5) / 2.0, 0.0),
              BoundaryPoint::finite(Complex((3.0 - s5) / (s5 - 1.0), 0.0)),
              {0.0, pi, 0.0},
              0.0};
    case Branch::Gies3:
    case Branch::Gies4:
      return {Complex(0.5, std::sqrt(3.0) / 2.0),
              BoundaryPoint::infinity(),
              {pi / 3.0, pi / 3.0, pi / 3.0},
              3.0 * lobachevsky(pi / 3.0)};
  }
  throw std::logic_error("unreachable branch");
}

}  // namespace gieseking
