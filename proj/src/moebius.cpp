#include "gieseking/moebius.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace gieseking {

namespace {

constexpr double kDetFloor = 1e-300;
constexpr double kInf = std::numeric_limits<double>::infinity();

Complex det(const Matrix2c& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

double max_modulus(const Matrix2c& m) { return m.cwiseAbs().maxCoeff(); }

ExtendedMoebius checked(const Matrix2c& m, bool reversing) {
  if (std::abs(det(m)) <= kDetFloor)
    throw std::domain_error("degenerate transformation (zero determinant)");
  return {m, reversing};
}

}  // namespace

Complex BoundaryPoint::value() const {
  if (infinite_) throw std::logic_error("value() called on the point at infinity");
  return value_;
}

double chordal_distance(const BoundaryPoint& u, const BoundaryPoint& v) {
  if (u.is_infinity() && v.is_infinity()) return 0.0;
  if (u.is_infinity()) return 2.0 / std::sqrt(1.0 + std::norm(v.value()));
  if (v.is_infinity()) return 2.0 / std::sqrt(1.0 + std::norm(u.value()));
  const Complex a = u.value(), b = v.value();
  return 2.0 * std::abs(a - b) / std::sqrt((1.0 + std::norm(a)) * (1.0 + std::norm(b)));
}

ExtendedMoebius ExtendedMoebius::holomorphic(const Matrix2c& m) {
  return checked(m, false);
}

ExtendedMoebius ExtendedMoebius::antiholomorphic(const Matrix2c& m) {
  return checked(m, true);
}

ExtendedMoebius normalized(const ExtendedMoebius& t) {
  const double s = max_modulus(t.m);
  if (s == 0.0) throw std::domain_error("degenerate transformation (zero matrix)");
  return {t.m / s, t.reversing};
}

ExtendedMoebius compose(const ExtendedMoebius& t1, const ExtendedMoebius& t2) {
  ExtendedMoebius r;
  r.m = (t2.reversing ? Matrix2c(t1.m.conjugate()) : t1.m) * t2.m;
  r.reversing = t1.reversing != t2.reversing;
  return r;
}

ExtendedMoebius inverse(const ExtendedMoebius& t) {
  if (std::abs(det(t.m)) <= kDetFloor * max_modulus(t.m) * max_modulus(t.m))
    throw std::domain_error("degenerate transformation");
  Matrix2c adj;
  adj << t.m(1, 1), -t.m(0, 1), -t.m(1, 0), t.m(0, 0);
  if (t.reversing) adj = adj.conjugate();
  return {adj, t.reversing};
}

BoundaryPoint apply(const ExtendedMoebius& t, const BoundaryPoint& u) {
  const Complex a = t.m(0, 0), b = t.m(0, 1), c = t.m(1, 0), d = t.m(1, 1);
  if (u.is_infinity()) {
    // conj(inf) = inf; the image is a/b, or inf when b = 0.
    if (b == Complex(0, 0)) return BoundaryPoint::infinity();
    return BoundaryPoint::finite(a / b);
  }
  const Complex up = t.reversing ? std::conj(u.value()) : u.value();
  const Complex num = a * up + c;
  const Complex den = b * up + d;
  if (den == Complex(0, 0)) return BoundaryPoint::infinity();
  return BoundaryPoint::finite(num / den);
}

double projective_deviation(const ExtendedMoebius& t) {
  if (t.reversing) return kInf;
  const Complex a = t.m(0, 0), d = t.m(1, 1);
  const Complex lambda = std::abs(a) >= std::abs(d) ? a : d;
  const double scale = max_modulus(t.m);
  if (scale == 0.0 || std::abs(lambda) <= kDetFloor * scale) return kInf;
  const Matrix2c n = t.m / lambda;
  double dev = 0.0;
  dev = std::max(dev, std::abs(n(0, 0) - 1.0));
  dev = std::max(dev, std::abs(n(0, 1)));
  dev = std::max(dev, std::abs(n(1, 0)));
  dev = std::max(dev, std::abs(n(1, 1) - 1.0));
  return dev;
}

bool is_projective_identity(const ExtendedMoebius& t, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
  return projective_deviation(t) <= tol;
}

double projective_distance(const ExtendedMoebius& t1, const ExtendedMoebius& t2) {
  if (t1.reversing != t2.reversing) return kInf;
  return projective_deviation(compose(inverse(t1), t2));
}

bool projectively_equal(const ExtendedMoebius& t1, const ExtendedMoebius& t2,
                        double tol) {
  return projective_distance(t1, t2) <= tol;
}

double rotation_angle_fixing_infinity(const ExtendedMoebius& t) {
  if (t.reversing)
    throw std::domain_error("not a similarity fixing infinity (orientation-reversing)");
  const double scale = max_modulus(t.m);
  if (scale == 0.0 || std::abs(t.m(0, 1)) > 1e-12 * scale)
    throw std::domain_error("not a similarity fixing infinity (b entry nonzero)");
  return std::arg(t.m(0, 0) / t.m(1, 1));
}

FixedPointSet fixed_points(const ExtendedMoebius& t) {
  if (is_projective_identity(t, 1e-12))
    throw std::domain_error("fixed points of the identity are all of C_inf");
  if (t.reversing) return {{}, true};

  const Complex a = t.m(0, 0), b = t.m(0, 1), c = t.m(1, 0), d = t.m(1, 1);
  FixedPointSet out;
  const double scale = max_modulus(t.m);
  if (std::abs(b) <= 1e-12 * scale) {
    // Similarity u -> (a u + c)/d: fixes infinity, and c/(d-a) when a != d.
    out.points.push_back(BoundaryPoint::infinity());
    if (std::abs(d - a) > 1e-14 * scale)
      out.points.push_back(BoundaryPoint::finite(c / (d - a)));
    return out;
  }
  // u = (a u + c)/(b u + d)  <=>  b u^2 + (d - a) u - c = 0.
  const Complex B = d - a;
  const Complex disc = std::sqrt(B * B + 4.0 * b * c);
  // Sign choice avoiding cancellation in B + disc.
  const Complex s = (std::real(std::conj(B) * disc) >= 0.0) ? disc : -disc;
  const Complex q = -0.5 * (B + s);
  if (std::abs(q) <= 1e-300) {
    // B = 0 and disc = 0: double root at 0.
    out.points.push_back(BoundaryPoint::finite(Complex(0, 0)));
    return out;
  }
  const Complex u1 = q / b;
  const Complex u2 = -c / q;
  out.points.push_back(BoundaryPoint::finite(u1));
  if (std::abs(u1 - u2) > 1e-12 * (1.0 + std::abs(u1)))
    out.points.push_back(BoundaryPoint::finite(u2));
  return out;
}

// ---------------------------------------------------------------------------
// Group words

GroupWord parse_word(const std::string& text) {
  GroupWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int exp = 1;
    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      exp = -1;
      tok.resize(tok.size() - 3);
    }
    if (tok.empty()) throw std::invalid_argument("empty symbol in word");
    w.push_back({tok, exp});
  }
  return w;
}

std::string word_to_string(const GroupWord& w) {
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += ' ';
    s += l.symbol;
    if (l.exponent == -1) s += "^-1";
  }
  return s.empty() ? "<empty>" : s;
}

GroupWord inverse_word(const GroupWord& w) {
  GroupWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->symbol, -it->exponent});
  return out;
}

GroupWord free_reduce(const GroupWord& w) {
  GroupWord out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().symbol == l.symbol &&
        out.back().exponent == -l.exponent)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

GroupWord substitute(const GroupWord& w, const std::map<std::string, GroupWord>& table) {
  GroupWord out;
  for (const auto& l : w) {
    auto it = table.find(l.symbol);
    if (it == table.end()) {
      out.push_back(l);
    } else {
      const GroupWord rep = l.exponent == 1 ? it->second : inverse_word(it->second);
      out.insert(out.end(), rep.begin(), rep.end());
    }
  }
  return out;
}

GroupWord word_power(const GroupWord& w, int n) {
  if (n < 0) return word_power(inverse_word(w), -n);
  GroupWord out;
  out.reserve(w.size() * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

ExtendedMoebius evaluate_word(const GeneratorMap& gens, const GroupWord& w) {
  ExtendedMoebius acc = ExtendedMoebius::identity();
  for (const auto& l : w) {
    auto it = gens.find(l.symbol);
    if (it == gens.end())
      throw std::invalid_argument("unknown generator symbol: " + l.symbol);
    const ExtendedMoebius& g = it->second;
    acc = compose(acc, l.exponent == 1 ? g : inverse(g));
    acc = normalized(acc);
  }
  return acc;
}

// ---------------------------------------------------------------------------

double principal_angle(double theta) {
  double r = std::remainder(theta, 2.0 * std::numbers::pi);
  if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
  return r;
}

double circular_distance(double a, double b) {
  return std::abs(principal_angle(a - b));
}

}  // namespace gieseking
