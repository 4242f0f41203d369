#pragma once

// Extended Moebius group acting on the complex projective line C_inf.
//
// Conventions (fixed throughout the library):
//   * points are row vectors:  (u,1) -> sigma(u,1) * m,  so with
//     m = [[a,b],[c,d]] the action on C_inf is  u -> (a*u' + c)/(b*u' + d),
//     where u' = conj(u) when the transformation is orientation-reversing
//     (sigma = entrywise conjugation) and u' = u otherwise.
//   * words act left to right: the first letter is applied first.
//   * matrices are identified projectively; no determinant normalization.

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace gieseking {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;

/// A point of C_inf = C u {inf}; infinity is a tag, never a large float.
class BoundaryPoint {
 public:
  BoundaryPoint() = default;
  static BoundaryPoint finite(Complex u) { return BoundaryPoint(u, false); }
  static BoundaryPoint infinity() { return BoundaryPoint(Complex(0, 0), true); }

  bool is_infinity() const { return infinite_; }
  /// Finite value; calling this on infinity is a logic error (throws).
  Complex value() const;

 private:
  BoundaryPoint(Complex u, bool inf) : value_(u), infinite_(inf) {}
  Complex value_{0.0, 0.0};
  bool infinite_ = false;
};

/// Chordal metric on C_inf: d(u,v) = 2|u-v| / sqrt((1+|u|^2)(1+|v|^2)),
/// extended continuously to infinity. Makes tolerances meaningful near inf.
double chordal_distance(const BoundaryPoint& u, const BoundaryPoint& v);

/// One element of the extended Moebius group: a 2x2 complex matrix acting on
/// row vectors, together with an orientation-reversing flag.
struct ExtendedMoebius {
  Matrix2c m = Matrix2c::Identity();
  bool reversing = false;

  static ExtendedMoebius identity() { return {}; }
  /// Checked constructors; reject |det| <= 1e-300.
  static ExtendedMoebius holomorphic(const Matrix2c& m);
  static ExtendedMoebius antiholomorphic(const Matrix2c& m);
};

/// Scale so the largest entry modulus is 1 (projective representative).
ExtendedMoebius normalized(const ExtendedMoebius& t);

/// Apply t1 first, then t2. result.m = sigma2(t1.m) * t2.m with sigma2 the
/// conjugation iff t2 reverses; result.reversing = XOR of the flags.
ExtendedMoebius compose(const ExtendedMoebius& t1, const ExtendedMoebius& t2);

/// Group inverse; for a reversing map this is the conjugated adjugate.
/// Throws std::domain_error("degenerate transformation") if singular.
ExtendedMoebius inverse(const ExtendedMoebius& t);

/// Evaluate the action on a boundary point (infinity handled projectively).
BoundaryPoint apply(const ExtendedMoebius& t, const BoundaryPoint& u);
inline BoundaryPoint apply(const ExtendedMoebius& t, Complex u) {
  return apply(t, BoundaryPoint::finite(u));
}

/// Max-norm distance from the identity of the projective representative
/// normalized by the largest-modulus diagonal entry. +inf for reversing maps
/// (an orientation-reversing map is never the identity).
double projective_deviation(const ExtendedMoebius& t);

bool is_projective_identity(const ExtendedMoebius& t, double tol = 1e-10);

/// Deviation between two transformations as projective_deviation of t1^-1 t2;
/// +inf when the reversing flags differ.
double projective_distance(const ExtendedMoebius& t1, const ExtendedMoebius& t2);

bool projectively_equal(const ExtendedMoebius& t1, const ExtendedMoebius& t2,
                        double tol = 1e-10);

/// Rotation angle of an orientation-preserving similarity fixing infinity
/// (entry b must vanish relative to the matrix scale): arg(a/d) in (-pi, pi].
/// Throws std::domain_error("not a similarity fixing infinity") otherwise.
double rotation_angle_fixing_infinity(const ExtendedMoebius& t);

struct FixedPointSet {
  std::vector<BoundaryPoint> points;
  /// True for reversing input: fixed sets of antiholomorphic maps are
  /// circles/lines and are not computed here.
  bool antiholomorphic_unsupported = false;
};

/// Fixed points on C_inf of a non-identity transformation (1 or 2 points for
/// orientation-preserving maps; infinity included when b = 0).
FixedPointSet fixed_points(const ExtendedMoebius& t);

// ---------------------------------------------------------------------------
// Group words

struct GroupLetter {
  std::string symbol;
  int exponent = 1;  // +1 or -1
  bool operator==(const GroupLetter&) const = default;
};

using GroupWord = std::vector<GroupLetter>;
using GeneratorMap = std::map<std::string, ExtendedMoebius>;

/// Parse a whitespace-separated word such as "z1 z2 z1^-1".
GroupWord parse_word(const std::string& text);

std::string word_to_string(const GroupWord& w);

GroupWord inverse_word(const GroupWord& w);

/// Cancel adjacent letters x x^-1 until no cancellation remains.
GroupWord free_reduce(const GroupWord& w);

/// Replace every letter whose symbol appears in `table` by its expansion
/// (inverted for exponent -1); other letters are kept.
GroupWord substitute(const GroupWord& w, const std::map<std::string, GroupWord>& table);

GroupWord word_power(const GroupWord& w, int n);

/// Left-to-right evaluation of a word; the accumulator is renormalized after
/// each letter so arbitrarily long words cannot overflow.
/// Throws std::invalid_argument naming any unknown symbol.
ExtendedMoebius evaluate_word(const GeneratorMap& gens, const GroupWord& w);

// ---------------------------------------------------------------------------
// Angles

/// Principal representative of an angle in (-pi, pi].
double principal_angle(double theta);

/// |a - b| on the circle R/2piZ, mapped to [0, pi].
double circular_distance(double a, double b);

}  // namespace gieseking
