#pragma once

// Generator matrices of the face-pairing group for a shape parameter z, the
// stabilizer generators of the fixed ideal vertex, and numerical-projective
// verification of the defining relations of the holonomy/monodromy
// presentations. Verification is matrix-level, never symbolic; free
// reduction is applied only to expose words that are trivially empty.

#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gieseking/moebius.hpp"

namespace gieseking {

/// Named transformations derived from one shape parameter. generators()
/// fills z1, z2; stabilizer_generators() adds p, z2*, q.
struct GeneratorSet {
  Complex z;
  GeneratorMap gens;

  const ExtendedMoebius& at(const std::string& name) const;
  bool has(const std::string& name) const { return gens.count(name) != 0; }
};

/// Thrown when two constructions of the same stabilizer generator disagree;
/// carries both matrices for diagnosis.
class GeneratorConsistencyError : public std::runtime_error {
 public:
  GeneratorConsistencyError(const std::string& what, ExtendedMoebius word_built,
                            ExtendedMoebius closed_form, double deviation)
      : std::runtime_error(what),
        word_built(std::move(word_built)),
        closed_form(std::move(closed_form)),
        deviation(deviation) {}
  ExtendedMoebius word_built;
  ExtendedMoebius closed_form;
  double deviation;
};

/// Face pairings of the ideal simplex 0,1,z,inf as glide reflections:
///   z1 = [[1,0],[-1,cz-1]],  z2 = [[z,1],[0,-cz(1-z)]]   (cz = conj z),
/// both orientation-reversing, acting in the row-vector convention.
GeneratorSet generators(Complex z);

/// Closed matrix of the stabilizer glide reflection z2*:
///   [[z(1-cz)^2, 0], [|z|^2(|z|(cz-1)-(|z|+1)), -cz(1-z)]],
/// valid on the constraint curve |z-1|^2 = |z|.
ExtendedMoebius z2star_closed_matrix(Complex z);

/// Adds p, z2*, q. Each of p and z2* is built two independent ways: as a
/// word in z1, z2 and in closed form; the two must agree projectively
/// within `consistency_tol`; otherwise a GeneratorConsistencyError carrying
/// both matrices is thrown. The agreement genuinely requires the constraint
/// |z-1|^2 = |z|, so off-curve parameters fail here by design of the group.
GeneratorSet stabilizer_generators(const GeneratorSet& g,
                                   double consistency_tol = 1e-10);

// ---------------------------------------------------------------------------
// Relator verification reports

struct RelatorCheck {
  std::string name;
  std::string word;        // letters actually evaluated (after substitution)
  double deviation = 0.0;  // projective deviation from the identity
  double deviation_reversed =
      std::numeric_limits<double>::quiet_NaN();  // set when the forward word failed
  bool passed = false;
  /// True when the letter sequence has odd orientation-reversal parity: such
  /// a word evaluates to an orientation-reversing map and can never close up,
  /// for any parameter, a defect of the recorded word itself, reported and
  /// excluded from pass/fail gating.
  bool structural_issue = false;
  /// For this check the deviation must stay ABOVE tol (used by the rotation
  /// order strictness check, where closing early would be the failure).
  bool require_nonidentity = false;
};

struct VerificationReport {
  double tol = 1e-10;
  std::vector<RelatorCheck> checks;

  /// Every non-structural check passed.
  bool all_passed() const;
  void append(const VerificationReport& other);
};

/// The edge-cycle relator z1 z1 z2 z2 z1^-1 z2^-1; closes up exactly when
/// |z-1|^2 = |z|.
RelatorCheck verify_edge_cycle(Complex z, double tol = 1e-10);

/// Defining relators of the monodromy presentation: the edge cycle and the
/// k-th power of the surgery word z1 z2 z2 z1 z2 z1^-1 z2^-2.
VerificationReport verify_presentation(Complex z, int k, double tol = 1e-10);

/// Relators of the compact fundamental-domain presentation in z1, z2*, p, q,
/// evaluated after substituting p = z1^2, z2* = z2^2 z1 z2 z1^-1 z2^-2,
/// q = z1^-1 z2^-1. Freely trivial relators must pass at machine precision.
/// Words that cannot close for parity reasons are flagged, and the reversed
/// word is always tried before declaring a failure.
VerificationReport verify_compact_relations(Complex z, int k, double tol = 1e-10);

/// (z1 z2*)^j must stay away from the identity for 1 <= j < k and reach it
/// at j = k (the surgery transform is an exact rotation of order k).
VerificationReport verify_rotation_order(Complex z, int k, double tol = 1e-10);

/// Cross-construction agreement of the stabilizer generators (word vs closed
/// form) as a report entry instead of an exception.
VerificationReport verify_stabilizer_consistency(Complex z, double tol = 1e-10);

/// Everything above in one report (what the CLI `verify` command runs).
VerificationReport full_verification(Complex z, int k, double tol = 1e-10);

}  // namespace gieseking
