#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "koebe/objective.hpp"
#include "oracles.hpp"

using Catch::Matchers::WithinAbs;

namespace {

// 50-digit reference values, frozen.
struct Frozen {
  int fold;
  double a0, b0, r;
};
constexpr Frozen frozen[] = {
    {1, 0.894427190999916, 0.276393202250021, 0.381966011250105},
    {2, 0.560660171779821, 0.146446609406726, 0.585786437626905},
    {3, 0.407070158465869, 0.097348690575299, 0.690278532109430},
    {4, 0.319271145512476, 0.072291541795009, 0.753020396282533},
    {7, 0.193642187290250, 0.040281543060516, 0.846639355770266},
};

}  // namespace

TEST_CASE("extremal coefficients and radius match the frozen references", "[objective]") {
  for (const Frozen& f : frozen) {
    const auto [a0, b0] = koebe::extremal_coeffs(f.fold);
    REQUIRE_THAT(a0, WithinAbs(f.a0, 1e-14));
    REQUIRE_THAT(b0, WithinAbs(f.b0, 1e-14));
    REQUIRE_THAT(koebe::koebe_radius(f.fold), WithinAbs(f.r, 1e-14));
  }
  for (int fold = 1; fold <= 12; ++fold) {
    const auto [a0, b0] = koebe::extremal_coeffs(fold);
    const auto [oa, ob] = oracle::extremal(fold);
    REQUIRE_THAT(a0, WithinAbs(oa, 1e-14));
    REQUIRE_THAT(b0, WithinAbs(ob, 1e-14));
    REQUIRE_THAT(koebe::koebe_radius(fold), WithinAbs(oracle::radius(fold), 1e-14));
    REQUIRE_THAT(koebe::koebe_radius(koebe::AlphaParam::from_fold(fold)), WithinAbs(oracle::radius(fold), 1e-14));
  }
  REQUIRE_THAT(koebe::koebe_radius(2), WithinAbs(2.0 - std::sqrt(2.0), 1e-15));
  REQUIRE_THROWS_AS(koebe::koebe_radius(0), std::invalid_argument);
  REQUIRE_THROWS_AS(koebe::extremal_coeffs(-1), std::invalid_argument);
}

TEST_CASE("Suffridge radius", "[objective]") {
  REQUIRE_THAT(koebe::suffridge_radius(koebe::AlphaParam::from_fold(3)), WithinAbs(0.6991180, 5e-8));
  for (int fold = 1; fold <= 10; ++fold) {
    REQUIRE_THAT(koebe::suffridge_radius(koebe::AlphaParam::from_fold(fold)),
                 WithinAbs(oracle::suffridge_radius(oracle::alpha(fold)), 1e-14));
  }
  // T = 1: b = 1/3 and the special direction gives R^2 = b(1-b)^2 = 4/27.
  REQUIRE_THAT(koebe::suffridge_radius(koebe::AlphaParam::from_fold(1)), WithinAbs(std::sqrt(4.0 / 27.0), 1e-14));
}

TEST_CASE("Phi is the squared modulus on the circle", "[objective]") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ua(-1.5, 1.5), ub(-0.8, 0.8), up(-10.0, 10.0);
  for (int i = 0; i < 2000; ++i) {
    const int fold = 1 + i % 7;
    const double a = ua(rng), b = ub(rng), ph = up(rng);
    const koebe::Trinomial f{fold, a, b};
    REQUIRE_THAT(koebe::phi(fold, a, b, ph), WithinAbs(std::norm(koebe::eval_trinomial(f, std::polar(1.0, ph))), 1e-12));
  }
  REQUIRE_THAT(koebe::main_value(0.3, 0.1), WithinAbs(0.64, 1e-15));
  REQUIRE_THAT(koebe::phi(3, 0.3, 0.1, std::numbers::pi / 3), WithinAbs(0.64, 1e-14));
}

TEST_CASE("derivative of the trinomial", "[objective]") {
  const koebe::Trinomial f{3, 0.4, 0.1};
  const std::complex<double> z = std::polar(0.7, 0.9), h = 1e-6;
  const auto fd = (koebe::eval_trinomial(f, z + h) - koebe::eval_trinomial(f, z - h)) / (2.0 * h);
  REQUIRE(std::abs(koebe::eval_trinomial_derivative(f, z) - fd) < 1e-8);
}

TEST_CASE("mu is undefined on b = 0", "[objective]") {
  REQUIRE_THROWS_AS(koebe::mu(0.3, 0.0), std::domain_error);
  REQUIRE_THAT(koebe::mu(0.4, 0.25), WithinAbs(0.5, 1e-15));
  const auto prof = koebe::direction_profile({2, 0.3, 0.0});
  REQUIRE_FALSE(prof.mu.has_value());
  REQUIRE_FALSE(prof.special.has_value());
}

TEST_CASE("special direction is stationary and strictly below H", "[objective]") {
  const koebe::Trinomial f{3, 0.2, 0.15};
  const auto prof = koebe::direction_profile(f);
  REQUIRE(prof.special.has_value());
  const auto& s = *prof.special;
  REQUIRE_THAT(s.value, WithinAbs(koebe::phi(3, f.a, f.b, s.phi_hat), 1e-10));
  const double h = 1e-6;
  const double slope = (koebe::phi(3, f.a, f.b, s.phi_hat + h) - koebe::phi(3, f.a, f.b, s.phi_hat - h)) / (2 * h);
  REQUIRE(std::abs(slope) < 1e-7);
  REQUIRE(s.value < prof.main);
  REQUIRE(s.phi_hat >= 0.0);
  REQUIRE(s.phi_hat < std::numbers::pi / 3);
}

TEST_CASE("no special direction at the extremal trinomial", "[objective]") {
  for (int fold = 1; fold <= 8; ++fold) {
    const auto [a0, b0] = koebe::extremal_coeffs(fold);
    const auto prof = koebe::direction_profile({fold, a0, b0});
    REQUIRE(*prof.mu > 1.0);
    REQUIRE_FALSE(prof.special.has_value());
  }
}

TEST_CASE("special value never reaches H", "[objective]") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ua(-1.0, 1.0), ub(-0.5, 0.5);
  int seen = 0;
  for (int i = 0; i < 20000; ++i) {
    const auto prof = koebe::direction_profile({1 + i % 5, ua(rng), ub(rng)});
    if (prof.special) {
      ++seen;
      REQUIRE(prof.special->value < prof.main);
    }
  }
  REQUIRE(seen > 100);
  // b < 0: stationary point is a maximum.
  REQUIRE_FALSE(koebe::direction_profile({2, 0.1, -0.2}).special.has_value());
  // mu = -1 puts the special direction on the axis.
  const auto axis = koebe::direction_profile({2, -1.0, 1.0 / 3.0});
  REQUIRE(axis.special.has_value());
  REQUIRE(axis.special->on_axis);
}
