#pragma once

// Shape data of the ideal simplex with vertices 0, 1, z, infinity.

#include "gieseking/moebius.hpp"

namespace gieseking {

/// Shape parameter z with Im z > 0, z not in {0, 1}. Construction rejects
/// parameters within 1e-12 of the degenerate set (arg is ill-conditioned there).
class IdealSimplexParam {
 public:
  explicit IdealSimplexParam(Complex z);
  Complex z() const { return z_; }

 private:
  Complex z_;
};

/// Dihedral angles at the three opposite-edge pairs:
///   alpha1 at {inf0, z1},  alpha2 at {inf z, 10},  alpha3 at {inf1, z0}.
struct DihedralAngles {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double alpha3 = 0.0;
};

/// alpha1 = arg z, alpha2 = arg((z-1)/z), alpha3 = arg(1/(1-z)), each in
/// (0, pi) (obtuse values are legal); the three sum to pi.
DihedralAngles dihedral_angles(const IdealSimplexParam& s);

/// | |z-1|^2 - |z| |  -- zero exactly on the constraint curve where the
/// edge-cycle relation of the face pairing closes up.
double gieseking_residual(const IdealSimplexParam& s);

/// Hyperbolic volume L(alpha1) + L(alpha2) + L(alpha3).
double volume(const IdealSimplexParam& s);

}  // namespace gieseking
