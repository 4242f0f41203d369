#include "gieseking/holonomy.hpp"

#include <cmath>

namespace gieseking {

namespace {

const std::map<std::string, GroupWord>& compact_substitutions() {
  static const std::map<std::string, GroupWord> table = {
      {"p", parse_word("z1 z1")},
      {"z2*", parse_word("z2 z2 z1 z2 z1^-1 z2^-1 z2^-1")},
      {"q", parse_word("z1^-1 z2^-1")},
  };
  return table;
}

/// Every letter in a z1/z2 word is orientation-reversing, so the evaluated
/// map reverses iff the reduced word has odd length.
bool odd_parity(const GroupWord& w) { return w.size() % 2 != 0; }

ExtendedMoebius word_power_transform(const GeneratorMap& gens, const GroupWord& base,
                                     int k) {
  const ExtendedMoebius b = evaluate_word(gens, base);
  ExtendedMoebius acc = ExtendedMoebius::identity();
  for (int i = 0; i < k; ++i) acc = normalized(compose(acc, b));
  return acc;
}

RelatorCheck check_word(const GeneratorMap& gens, const std::string& name,
                        const GroupWord& raw, double tol) {
  RelatorCheck c;
  c.name = name;
  const GroupWord w = free_reduce(raw);
  c.word = word_to_string(w);
  c.deviation = projective_deviation(evaluate_word(gens, w));
  c.structural_issue = odd_parity(w);
  c.passed = c.deviation <= tol;
  if (!c.passed) {
    GroupWord rev(w.rbegin(), w.rend());
    c.deviation_reversed = projective_deviation(evaluate_word(gens, rev));
  }
  return c;
}

}  // namespace

const ExtendedMoebius& GeneratorSet::at(const std::string& name) const {
  auto it = gens.find(name);
  if (it == gens.end())
    throw std::invalid_argument("generator set has no element named '" + name + "'");
  return it->second;
}

GeneratorSet generators(Complex z) {
  if (std::abs(z) < 1e-12 || std::abs(z - 1.0) < 1e-12)
    throw std::domain_error("degenerate shape parameter (z = 0 or z = 1)");
  const Complex cz = std::conj(z);
  Matrix2c m1, m2;
  m1 << 1.0, 0.0, -1.0, cz - 1.0;
  m2 << z, 1.0, 0.0, -cz * (1.0 - z);
  GeneratorSet g;
  g.z = z;
  g.gens.emplace("z1", ExtendedMoebius::antiholomorphic(m1));
  g.gens.emplace("z2", ExtendedMoebius::antiholomorphic(m2));
  return g;
}

ExtendedMoebius z2star_closed_matrix(Complex z) {
  const Complex cz = std::conj(z);
  const double az = std::abs(z);
  Matrix2c m;
  m << z * (1.0 - cz) * (1.0 - cz), 0.0,
      az * az * (az * (cz - 1.0) - (az + 1.0)), -cz * (1.0 - z);
  return ExtendedMoebius::antiholomorphic(m);
}

GeneratorSet stabilizer_generators(const GeneratorSet& g, double consistency_tol) {
  const ExtendedMoebius p_word =
      evaluate_word(g.gens, parse_word("z2 z1 z2^-1 z2^-1"));
  const ExtendedMoebius p_square = compose(g.at("z1"), g.at("z1"));
  const double dev_p = projective_distance(p_word, p_square);
  if (!(dev_p <= consistency_tol))
    throw GeneratorConsistencyError(
        "p is inconsistent: the conjugated word and z1^2 differ by " +
            std::to_string(dev_p) + " (parameter off the constraint curve?)",
        p_word, p_square, dev_p);

  const ExtendedMoebius star_word =
      evaluate_word(g.gens, parse_word("z2 z2 z1 z2 z1^-1 z2^-1 z2^-1"));
  const ExtendedMoebius star_closed = z2star_closed_matrix(g.z);
  const double dev_star = projective_distance(star_word, star_closed);
  if (!(dev_star <= consistency_tol))
    throw GeneratorConsistencyError(
        "z2* is inconsistent: the word and the closed matrix differ by " +
            std::to_string(dev_star) + " (parameter off the constraint curve?)",
        star_word, star_closed, dev_star);

  GeneratorSet out = g;
  out.gens.emplace("p", p_square);
  out.gens.emplace("z2*", star_closed);
  out.gens.emplace("q", compose(inverse(g.at("z1")), inverse(g.at("z2"))));
  return out;
}

bool VerificationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.structural_issue && !c.passed) return false;
  return true;
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

RelatorCheck verify_edge_cycle(Complex z, double tol) {
  const GeneratorSet g = generators(z);
  return check_word(g.gens, "edge cycle", parse_word("z1 z1 z2 z2 z1^-1 z2^-1"), tol);
}

VerificationReport verify_presentation(Complex z, int k, double tol) {
  if (k < 2) throw std::domain_error("presentation verification requires k >= 2");
  const GeneratorSet g = generators(z);
  VerificationReport r;
  r.tol = tol;
  r.checks.push_back(verify_edge_cycle(z, tol));

  const GroupWord base = parse_word("z1 z2 z2 z1 z2 z1^-1 z2^-1 z2^-1");
  RelatorCheck c;
  c.name = "surgery word power ^" + std::to_string(k);
  c.word = "(" + word_to_string(base) + ")^" + std::to_string(k);
  c.deviation = projective_deviation(word_power_transform(g.gens, base, k));
  c.passed = c.deviation <= tol;
  if (!c.passed) {
    GroupWord rev(base.rbegin(), base.rend());
    c.deviation_reversed = projective_deviation(word_power_transform(g.gens, rev, k));
  }
  r.checks.push_back(c);
  return r;
}

VerificationReport verify_compact_relations(Complex z, int k, double tol) {
  if (k < 2) throw std::domain_error("relator verification requires k >= 2");
  const GeneratorSet g = generators(z);
  const auto& sub = compact_substitutions();
  VerificationReport r;
  r.tol = tol;

  const std::vector<std::pair<std::string, std::string>> relators = {
      {"compact relator 1", "z1 z1 p^-1"},
      {"compact relator 2", "z2* z2* p"},
      {"compact relator 3", "q z2*^-1 q^-1 p q^-1 p^-1"},
      {"compact relator 4", "z1 q q p^-1 q^-1"},
  };
  for (const auto& [name, text] : relators)
    r.checks.push_back(
        check_word(g.gens, name, substitute(parse_word(text), sub), tol));

  const GroupWord base = free_reduce(substitute(parse_word("z1 z2*"), sub));
  RelatorCheck c;
  c.name = "compact relator 5: (z1 z2*)^" + std::to_string(k);
  c.word = "(" + word_to_string(base) + ")^" + std::to_string(k);
  c.deviation = projective_deviation(word_power_transform(g.gens, base, k));
  c.structural_issue = (base.size() * k) % 2 != 0;
  c.passed = c.deviation <= tol;
  r.checks.push_back(c);
  return r;
}

VerificationReport verify_rotation_order(Complex z, int k, double tol) {
  if (k < 2) throw std::domain_error("rotation order verification requires k >= 2");
  const GeneratorSet g = generators(z);
  const GroupWord base =
      free_reduce(substitute(parse_word("z1 z2*"), compact_substitutions()));
  const ExtendedMoebius b = evaluate_word(g.gens, base);

  ExtendedMoebius acc = ExtendedMoebius::identity();
  double min_below = std::numeric_limits<double>::infinity();
  for (int j = 1; j < k; ++j) {
    acc = normalized(compose(acc, b));
    min_below = std::min(min_below, projective_deviation(acc));
  }
  acc = normalized(compose(acc, b));
  const double dev_at_k = projective_deviation(acc);

  VerificationReport r;
  r.tol = tol;
  RelatorCheck strict;
  strict.name = "rotation order strictness: (z1 z2*)^j != 1 for j < " + std::to_string(k);
  strict.word = word_to_string(base);
  strict.deviation = min_below;
  strict.require_nonidentity = true;
  strict.passed = min_below > tol;
  r.checks.push_back(strict);

  RelatorCheck close;
  close.name = "rotation order closure: (z1 z2*)^" + std::to_string(k);
  close.word = "(" + word_to_string(base) + ")^" + std::to_string(k);
  close.deviation = dev_at_k;
  close.passed = dev_at_k <= tol;
  r.checks.push_back(close);
  return r;
}

VerificationReport verify_stabilizer_consistency(Complex z, double tol) {
  const GeneratorSet g = generators(z);
  VerificationReport r;
  r.tol = tol;

  RelatorCheck p;
  p.name = "stabilizer consistency: p word vs z1^2";
  p.word = "z2 z1 z2^-1 z2^-1 == z1 z1";
  p.deviation = projective_distance(
      evaluate_word(g.gens, parse_word("z2 z1 z2^-1 z2^-1")),
      compose(g.at("z1"), g.at("z1")));
  p.passed = p.deviation <= tol;
  r.checks.push_back(p);

  RelatorCheck s;
  s.name = "stabilizer consistency: z2* word vs closed matrix";
  s.word = "z2 z2 z1 z2 z1^-1 z2^-1 z2^-1 == closed form";
  s.deviation = projective_distance(
      evaluate_word(g.gens, parse_word("z2 z2 z1 z2 z1^-1 z2^-1 z2^-1")),
      z2star_closed_matrix(z));
  s.passed = s.deviation <= tol;
  r.checks.push_back(s);
  return r;
}

VerificationReport full_verification(Complex z, int k, double tol) {
  VerificationReport r;
  r.tol = tol;
  r.append(verify_stabilizer_consistency(z, tol));
  r.append(verify_presentation(z, k, tol));
  r.append(verify_compact_relations(z, k, tol));
  r.append(verify_rotation_order(z, k, tol));
  return r;
}

}  // namespace gieseking
