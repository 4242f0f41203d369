#include "gieseking/ideal_simplex.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gieseking/lobachevsky.hpp"

namespace gieseking {

IdealSimplexParam::IdealSimplexParam(Complex z) : z_(z) {
  if (std::abs(z.imag()) < 1e-12)
    throw std::domain_error("flat simplex: shape parameter on the real axis");
  if (z.imag() < 0.0)
    throw std::domain_error("shape parameter must have Im z > 0");
  if (std::abs(z) < 1e-12 || std::abs(z - 1.0) < 1e-12)
    throw std::domain_error("degenerate simplex: z too close to 0 or 1");
}

DihedralAngles dihedral_angles(const IdealSimplexParam& s) {
  const Complex z = s.z();
  DihedralAngles a;
  a.alpha1 = std::arg(z);
  a.alpha2 = std::arg((z - 1.0) / z);
  a.alpha3 = std::arg(1.0 / (1.0 - z));
  // Im z > 0 puts each principal argument in (0, pi); anything else means the
  // parameter slipped out of the upper half plane.
  for (double alpha : {a.alpha1, a.alpha2, a.alpha3})
    if (!(alpha > 0.0 && alpha < std::numbers::pi))
      throw std::domain_error("dihedral angle outside (0, pi)");
  return a;
}

double gieseking_residual(const IdealSimplexParam& s) {
  const Complex z = s.z();
  return std::abs(std::norm(z - 1.0) - std::abs(z));
}

double volume(const IdealSimplexParam& s) {
  const DihedralAngles a = dihedral_angles(s);
  return lobachevsky(a.alpha1) + lobachevsky(a.alpha2) + lobachevsky(a.alpha3);
}

}  // namespace gieseking
