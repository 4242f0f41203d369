#pragma once

// Closed-form solutions of the surgery equation z/(1-z)^2 = +-exp(+-i pi/k)
// for integer k >= 2, along the four root series Gies.1 - Gies.4, with the
// derived geometry of each deformed simplex: dihedral angles, the second
// fixed point v of the similarity stabilizer, the rotation angle of the
// surgery transform, the volume and the orbifold / cone-manifold label.

#include <array>
#include <string>
#include <utility>

#include "gieseking/ideal_simplex.hpp"
#include "gieseking/moebius.hpp"

namespace gieseking {

enum class Branch { Gies1, Gies2, Gies3, Gies4 };

std::string branch_name(Branch b);
/// Accepts "gies1".."gies4" (case-insensitive); throws on anything else.
Branch branch_from_string(const std::string& name);
/// The half-turn symmetry of the ideal simplex pairs Gies1<->Gies2 and
/// Gies3<->Gies4 (equal volumes and angle multisets).
Branch half_turn_partner(Branch b);

enum class Classification { Orbifold, ConeManifold };
std::string classification_name(Classification c);

struct SurgerySolution {
  Branch branch;
  int k;
  Complex z;
  DihedralAngles angles;
  Complex v;        // finite fixed point z/(1-|z|)
  double phi;       // surgery rotation angle, principal value in (-pi, pi]
  double volume;
  Classification classification;
  double cone_angle;
};

/// Membership in the constraint regions of the surgery equation:
///   A: 1 < |z-1| < |z|,   B: |z| < |z-1| < 1.
/// Strict comparisons; boundary points report None.
enum class ConstraintRegion { A, B, None };
ConstraintRegion region_of(Complex z);
std::string region_name(ConstraintRegion r);

/// Solve the branch's closed form for k >= 2. The printed formula is
/// evaluated with the principal square root; if that candidate violates
/// Im z > 0 or the region constraint, the other root of the underlying
/// quadratic is substituted. Exactly one candidate passes.
SurgerySolution solve(Branch branch, int k);

/// Both roots of w z^2 - (2w+1) z + w = 0 for unimodular w (the rearranged
/// surgery equation), computed with a cancellation-safe quadratic formula.
/// Throws unless ||w| - 1| <= 1e-12.
std::pair<Complex, Complex> solve_general(Complex w);

/// Rotation angle of the surgery transform about the axis v-infinity:
/// principal value of 2 arg z - 4 arg(1 - z) (mod 2 pi).
double surgery_angle(Complex z);

/// Second fixed point v = z/(1-|z|) of the similarity stabilizer.
/// Throws for |z| = 1 (cusped case: v escapes to infinity).
Complex fixed_point_v(Complex z);

/// Rule-based classification: Gies1/Gies2 carry cone angle 2 pi (k-1)/k and
/// are orbifolds only for k = 2; Gies3/Gies4 carry cone angle 2 pi / k and
/// are orbifolds for every k >= 2.
std::pair<Classification, double> classify(Branch branch, int k);

struct BranchLimit {
  Complex z_limit;
  BoundaryPoint v_limit;                 // infinity for Gies3/Gies4
  std::array<double, 3> angle_limits;
  double volume_limit;
};

/// Closed-form k -> infinity limits of each series.
BranchLimit limit(Branch branch);

}  // namespace gieseking
