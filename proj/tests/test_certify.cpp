#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "koebe/certify.hpp"
#include "oracles.hpp"

using Catch::Matchers::WithinAbs;
using koebe::CertifiedBound;
using koebe::ExactPolynomial;
using koebe::Rational;

TEST_CASE("sign variations skip zeros", "[certify]") {
  REQUIRE(koebe::sign_variations(std::vector<int>{1, -1, 1}) == 2);
  REQUIRE(koebe::sign_variations(std::vector<int>{1, 0, -2, -3}) == 1);
  REQUIRE(koebe::sign_variations(std::vector<int>{}) == 0);
  REQUIRE(koebe::sign_variations(std::vector<int>{0, 0}) == 0);
  REQUIRE(koebe::sign_variations(koebe::hat_poly(CertifiedBound::mu_at_extremal).coeffs()) == 7);
}

TEST_CASE("exact polynomial arithmetic", "[certify]") {
  const ExactPolynomial p({Rational(-1, 4), Rational(0), Rational(1)});  // x^2 - 1/4
  REQUIRE(p.degree() == 2);
  REQUIRE(p(Rational(1, 2)) == 0);
  REQUIRE(p.derivative()(Rational(3)) == 6);
  REQUIRE(ExactPolynomial({Rational(0), Rational(0)}).degree() == -1);
}

TEST_CASE("Budan counts detect a root and certify its absence", "[certify]") {
  const ExactPolynomial p({Rational(-1, 4), Rational(0), Rational(1)});
  const auto with_root = koebe::budan_certificate(p, Rational(0), Rational(1));
  REQUIRE(with_root.variations_lo - with_root.variations_hi == 1);
  REQUIRE_FALSE(with_root.root_free);
  REQUIRE_FALSE(with_root.positive_on_interval);

  const ExactPolynomial q({Rational(2), Rational(-2), Rational(1)});  // (x-1)^2 + 1
  const auto c = koebe::budan_certificate(q, Rational(0), Rational(1, 2));
  REQUIRE(c.root_free);
  REQUIRE(c.positive_on_interval);

  REQUIRE_THROWS_AS(koebe::budan_certificate(q, Rational(1), Rational(1)), std::invalid_argument);
  REQUIRE_THROWS_AS(koebe::budan_certificate(q, Rational(1), Rational(0)), std::invalid_argument);
}

TEST_CASE("truncated polynomials", "[certify]") {
  const auto l2 = koebe::hat_poly(CertifiedBound::suffridge_gap);
  REQUIRE(l2.degree() == 12);
  REQUIRE(l2[0] == Rational(942, 100));
  const auto l4 = koebe::hat_poly(CertifiedBound::mu_at_extremal);
  REQUIRE(l4.degree() == 7);
  REQUIRE(l4[0] == Rational(343, 100));
  const auto l6 = koebe::hat_poly(CertifiedBound::large_fold);
  REQUIRE(l6.degree() == 12);
  REQUIRE(l6[0] == Rational(335, 100));
  REQUIRE(koebe::certified_bound_from_lemma(6) == CertifiedBound::large_fold);
  REQUIRE_THROWS_AS(koebe::certified_bound_from_lemma(3), std::invalid_argument);
}

TEST_CASE("certificates for the three bounds", "[certify]") {
  const int expected[] = {11, 7, 9};
  int i = 0;
  for (CertifiedBound b : koebe::all_certified_bounds) {
    const auto c = koebe::certify(b);
    REQUIRE(c.variations_lo == expected[i]);
    REQUIRE(c.variations_hi == expected[i]);
    REQUIRE(c.root_free);
    REQUIRE(c.positive_on_interval);
    ++i;
  }
  REQUIRE(koebe::certify(CertifiedBound::large_fold).hi == Rational(1, 8));
}

TEST_CASE("certificate JSON round trip", "[certify]") {
  for (CertifiedBound b : koebe::all_certified_bounds) {
    const auto c = koebe::certify(b);
    const auto j = koebe::to_json(c, koebe::lemma_id(b));
    REQUIRE(j.at("lemma") == koebe::lemma_id(b));
    REQUIRE(j.at("interval").at(0) == "0");
    const auto back = koebe::certificate_from_json(nlohmann::json::parse(j.dump()));
    REQUIRE(back.poly.coeffs() == c.poly.coeffs());
    REQUIRE(back.variations_lo == c.variations_lo);
    REQUIRE(back.positive_on_interval);
  }
  const auto j4 = koebe::to_json(koebe::certify(CertifiedBound::mu_at_extremal), 4);
  REQUIRE(j4.at("coeffs").at(0) == "3.43");
  REQUIRE(j4.at("coeffs").at(1) == "-15.44");
  REQUIRE(j4.at("interval").at(1) == "1/2");
  REQUIRE(koebe::exact_decimal(Rational(-72, 100)) == "-0.72");
  REQUIRE(koebe::exact_decimal(Rational(5)) == "5");
  REQUIRE_THROWS_AS(koebe::exact_decimal(Rational(1, 3)), std::invalid_argument);
  REQUIRE(koebe::parse_exact_decimal("-0.03") == Rational(-3, 100));
  REQUIRE_THROWS_AS(koebe::parse_exact_decimal("1e3"), std::invalid_argument);
}

TEST_CASE("bound functions enclose their targets", "[certify]") {
  // The Taylor tails shrink like alpha^8 near zero, below double resolution,
  // so both sides are evaluated in 50 digits.
  using X = koebe::Extended;
  const X pi = oracle::pi();
  for (int i = 1; i <= 500; ++i) {
    const X al = X(i) / 1000;
    const X c = cos(pi / (3 - al));
    const X s = sin(pi * al / 2);
    REQUIRE(koebe::cos2_upper(al) > c * c);
    REQUIRE(koebe::sin2_lower(al) < 1 - c * c);
    REQUIRE(koebe::sin2_half_upper(al) > s * s);
    REQUIRE(koebe::sin_half_upper(al) > s);
  }
  // Taylor tails: tight near zero.
  REQUIRE(koebe::cos2_upper(0.01) - std::pow(std::cos(std::numbers::pi / 2.99), 2) < 1e-3);
  REQUIRE(koebe::sin_half_upper(0.01) - std::sin(std::numbers::pi * 0.005) < 1e-3);
}

TEST_CASE("reconstructed polynomials dominate the truncations", "[certify]") {
  for (CertifiedBound b : koebe::all_certified_bounds) {
    const auto r = koebe::reconstruct_poly(b);
    REQUIRE(r.degree() == koebe::reconstructed_degree(b));
    for (double gap : koebe::coefficient_gaps(r, koebe::hat_poly(b))) {
      REQUIRE(gap >= 0.0);
      REQUIRE(gap < 0.011);
    }
    // reconstruction reproduces the defining expression away from the nodes
    for (double al : {0.013, 0.2, 0.377}) {
      REQUIRE_THAT(r.evaluate(al), WithinAbs(koebe::defining_polynomial_value<double>(b, al), 1e-9));
    }
  }
}

TEST_CASE("curve lemmas on grids", "[certify]") {
  for (auto lemma : {koebe::NumericLemma::curve_monotonicity, koebe::NumericLemma::mu_decreasing,
                     koebe::NumericLemma::ratio_bound}) {
    const auto rep = koebe::verify_lemma_numeric(lemma, 400);
    REQUIRE(rep.pass);
    REQUIRE(rep.failures.empty());
  }
  REQUIRE_THROWS_AS(koebe::verify_lemma_numeric(koebe::NumericLemma::ratio_bound, 99), std::invalid_argument);
  // B/A at the top corner for alpha = 1/2.
  const auto [a, b] = oracle::gamma3(0.5, std::numbers::pi / 2);
  REQUIRE_THAT(b / a, WithinAbs(0.3535534, 1e-7));
  REQUIRE(b / a <= 1.0 / (2.0 * std::sqrt(2.0)) + 1e-15);
}

TEST_CASE("four-step algorithm for T = 3..6", "[certify]") {
  // Values computed from the 50-digit quotients, frozen.
  struct Row {
    int fold;
    double delta0, mu0, delta;
  };
  const Row rows[] = {{3, 2.2970e-5, 0.95049, 0.0019825},
                      {4, 5.3066e-5, 0.92164, 0.0070495},
                      {5, 1.8942e-5, 0.89040, 0.010285},
                      {6, 2.1465e-6, 0.85758, 0.012228}};
  for (const Row& r : rows) {
    const auto s = koebe::step_algorithm(r.fold);
    REQUIRE_THAT(s.delta0, WithinAbs(r.delta0, 5e-4 * r.delta0));
    REQUIRE_THAT(s.mu0, WithinAbs(r.mu0, 1e-5));
    REQUIRE_THAT(s.endpoint_margin, WithinAbs(r.delta, 5e-4 * r.delta));
    REQUIRE(s.monotone_decreasing);
    REQUIRE(s.pass);
    REQUIRE(s.alpha == Rational(1, 1 + r.fold));
    const auto t0 = koebe::solve_t0(r.fold);
    REQUIRE(t0.has_value());
    REQUIRE(t0->slack > 0.0);
  }
  REQUIRE_THROWS_AS(koebe::step_algorithm(7), std::invalid_argument);
  // A t0 past the root makes delta0 negative and the step fails.
  REQUIRE_FALSE(koebe::step_algorithm(3, 1.5).pass);
}

TEST_CASE("bound chain for T >= 7", "[certify]") {
  for (int fold : {7, 8, 9, 20, 100}) {
    const auto c = koebe::verify_large_fold_chain(koebe::AlphaParam::from_fold(fold));
    REQUIRE(c.pass());
    REQUIRE(c.endpoint_value > c.radius_squared);
  }
  REQUIRE(koebe::verify_large_fold_chain(koebe::AlphaParam::from_alpha(0.1)).pass());
  REQUIRE_THROWS_AS(koebe::verify_large_fold_chain(koebe::AlphaParam::from_alpha(0.25)), std::invalid_argument);
}

TEST_CASE("ellipse reductions for T = 1, 2", "[certify]") {
  const auto e = koebe::verify_ellipse_cases();
  REQUIRE(e.pass);
  REQUIRE(e.fold1_max_residual < 1e-11);
  REQUIRE(e.fold2_max_residual < 1e-11);
  REQUIRE(e.fold2_critical_point > 0.20);
  REQUIRE(e.fold2_critical_point < 0.22);
  // b = 1/4 on a^2 + 4(b - 1/2)^2 = 1
  const double b = 0.25, a = std::sqrt(1.0 - 4.0 * (b - 0.5) * (b - 0.5));
  REQUIRE_THAT(koebe::special_value(a, b), WithinAbs(0.140625, 1e-15));
  REQUIRE_THAT(koebe::special_value(std::sqrt(1.0 - 4.0 / 36.0), 1.0 / 3.0), WithinAbs(4.0 / 27.0, 1e-15));
}
