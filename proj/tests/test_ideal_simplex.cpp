#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "gieseking/ideal_simplex.hpp"
#include "gieseking/surgery.hpp"

using namespace gieseking;
using std::numbers::pi;

TEST_CASE("dihedral angles at reference parameters") {
  SUBCASE("first-series k=2 root") {
    const IdealSimplexParam s({1.624810533844, 1.300242590220});
    const DihedralAngles a = dihedral_angles(s);
    CHECK(a.alpha1 == doctest::Approx(0.674888845586).epsilon(1e-10));
    CHECK(a.alpha2 == doctest::Approx(0.447953740604).epsilon(1e-10));
    CHECK(a.alpha3 == doctest::Approx(2.018750067399).epsilon(1e-10));  // obtuse is legal
    CHECK(a.alpha1 + a.alpha2 + a.alpha3 == doctest::Approx(pi).epsilon(1e-14));
  }
  SUBCASE("regular simplex") {
    const DihedralAngles a = dihedral_angles(IdealSimplexParam({0.5, std::sqrt(3.0) / 2.0}));
    CHECK(std::abs(a.alpha1 - pi / 3.0) < 1e-14);
    CHECK(std::abs(a.alpha2 - pi / 3.0) < 1e-14);
    CHECK(std::abs(a.alpha3 - pi / 3.0) < 1e-14);
  }
  SUBCASE("z = i") {
    const DihedralAngles a = dihedral_angles(IdealSimplexParam({0.0, 1.0}));
    CHECK(std::abs(a.alpha1 - pi / 2.0) < 1e-14);
    CHECK(std::abs(a.alpha2 - pi / 4.0) < 1e-14);
    CHECK(std::abs(a.alpha3 - pi / 4.0) < 1e-14);
  }
}

TEST_CASE("angle sum is pi across the upper half plane") {
  std::mt19937 rng(31415);
  std::uniform_real_distribution<double> re(-4.0, 5.0), im(1e-3, 4.0);
  for (int i = 0; i < 300; ++i) {
    const Complex z(re(rng), im(rng));
    if (std::abs(z) < 1e-2 || std::abs(z - 1.0) < 1e-2) continue;
    const DihedralAngles a = dihedral_angles(IdealSimplexParam(z));
    CHECK(std::abs(a.alpha1 + a.alpha2 + a.alpha3 - pi) < 1e-12);
  }
}

TEST_CASE("constraint residual") {
  CHECK(gieseking_residual(IdealSimplexParam({0.5, std::sqrt(3.0) / 2.0})) < 1e-15);
  CHECK(gieseking_residual(IdealSimplexParam(solve(Branch::Gies1, 2).z)) < 1e-10);
  CHECK(gieseking_residual(IdealSimplexParam({0.0, 2.0})) == doctest::Approx(3.0));
}

TEST_CASE("volumes match the reference values") {
  CHECK(volume(IdealSimplexParam(solve(Branch::Gies1, 2).z)) ==
        doctest::Approx(0.696701139104).epsilon(1e-10));
  CHECK(volume(IdealSimplexParam(solve(Branch::Gies1, 50).z)) ==
        doctest::Approx(0.030231732869).epsilon(1e-9));
  CHECK(volume(IdealSimplexParam({0.5, std::sqrt(3.0) / 2.0})) ==
        doctest::Approx(1.014941606409).epsilon(1e-10));
}

TEST_CASE("volume is invariant under the shape parameter 3-cycle") {
  // z -> 1/(1-z) -> (z-1)/z permutes the dihedral angles.
  std::mt19937 rng(2718);
  std::uniform_real_distribution<double> re(-3.0, 4.0), im(5e-2, 3.0);
  for (int i = 0; i < 100; ++i) {
    const Complex z(re(rng), im(rng));
    if (std::abs(z) < 5e-2 || std::abs(z - 1.0) < 5e-2) continue;
    const double v0 = volume(IdealSimplexParam(z));
    const double v1 = volume(IdealSimplexParam(1.0 / (1.0 - z)));
    const double v2 = volume(IdealSimplexParam((z - 1.0) / z));
    CHECK(std::abs(v0 - v1) < 1e-12);
    CHECK(std::abs(v0 - v2) < 1e-12);
  }
}

TEST_CASE("degenerate parameters are rejected") {
  CHECK_THROWS_WITH_AS(IdealSimplexParam({0.7, 0.0}),
                       "flat simplex: shape parameter on the real axis",
                       std::domain_error);
  CHECK_THROWS_AS(IdealSimplexParam({0.5, -0.5}), std::domain_error);
  CHECK_THROWS_AS(IdealSimplexParam({1e-14, 1e-14}), std::domain_error);
  CHECK_THROWS_AS(IdealSimplexParam({1.0 + 1e-14, 1e-14}), std::domain_error);
}
