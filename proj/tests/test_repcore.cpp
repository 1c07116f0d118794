#include <doctest.h>

#include <cmath>

#include "leafcoh/errors.hpp"
#include "leafcoh/ladder.hpp"
#include "leafcoh/sampling.hpp"

using namespace leafcoh;

namespace {

/// Table rows enumerated directly, independent of weight_set_contains.
bool table_membership(const ReprClass& c, Weight m) {
  const double x = m.value();
  auto is_int = [](double v) { return std::floor(v) == v; };
  switch (c.family) {
    case Family::Principal:
      return is_int(x - 0.5 * c.twice_j);
    case Family::MockPlus:
      for (int k = 0; k <= 40; ++k)
        if (x == 0.5 + k) return true;
      return false;
    case Family::MockMinus:
      for (int k = 0; k <= 40; ++k)
        if (x == -0.5 - k) return true;
      return false;
    case Family::Discrete: {
      const double n = 0.5 * std::abs(c.twice_n);
      for (int k = 0; k <= 40; ++k)
        if (x == (c.twice_n > 0 ? -n - k : n + k)) return true;
      return false;
    }
    case Family::Complementary:
      return is_int(x);
    case Family::Trivial:
      return x == 0.0;
  }
  return false;
}

}  // namespace

TEST_CASE("q from the classification table") {
  CHECK(q_of(ReprClass::trivial()) == 0.0);
  CHECK(q_of(ReprClass::discrete(-2)) == 0.0);
  CHECK(q_of(ReprClass::principal(0, 1.0)) == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(q_of(ReprClass::mock_plus()) == 0.25);
  CHECK(q_of(ReprClass::discrete(3)) == doctest::Approx(-0.75));
  CHECK(q_of(ReprClass::complementary(0.75)) == doctest::Approx(0.1875));
}

TEST_CASE("parameter ranges are enforced") {
  CHECK_THROWS_AS(ReprClass::principal(1, 0.0), DomainError);
  CHECK_THROWS_AS(ReprClass::principal(2, 1.0), DomainError);
  CHECK_THROWS_AS(ReprClass::principal(0, -0.1), DomainError);
  CHECK_THROWS_AS(ReprClass::discrete(1), DomainError);
  CHECK_THROWS_AS(ReprClass::discrete(0), DomainError);
  CHECK_THROWS_AS(ReprClass::complementary(0.5), DomainError);
  CHECK_THROWS_AS(ReprClass::complementary(1.0), DomainError);
  CHECK_NOTHROW(ReprClass::principal(0, 0.0));

  ReprClass bad;
  bad.family = Family::Complementary;
  bad.sigma = 1.2;
  CHECK_THROWS_AS(q_of(bad), DomainError);
}

TEST_CASE("weight set membership") {
  const auto u_minus_1 = ReprClass::discrete(-2);
  CHECK(weight_set_contains(u_minus_1, Weight::integral(1)));
  CHECK_FALSE(weight_set_contains(u_minus_1, Weight::integral(0)));
  CHECK(weight_set_contains(ReprClass::trivial(), Weight(0)));
  CHECK_FALSE(weight_set_contains(ReprClass::trivial(), Weight::integral(1)));
  CHECK(weight_set_contains(ReprClass::mock_minus(), Weight(-1)));
  CHECK_FALSE(weight_set_contains(ReprClass::mock_minus(), Weight(1)));

  for (const ReprClass& c : class_grid())
    for (int t = -40; t <= 40; ++t) {
      CAPTURE(display_name(c));
      CAPTURE(t);
      CHECK(weight_set_contains(c, Weight(t)) == table_membership(c, Weight(t)));
    }
}

TEST_CASE("ladder coefficients at module boundaries") {
  const auto u = ReprClass::discrete(-2);
  CHECK(beta(u, Weight::integral(1)) == 0.0);
  CHECK(alpha(u, Weight::integral(1)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(alpha(ReprClass::trivial(), Weight(0)) == 0.0);
  CHECK(beta(ReprClass::trivial(), Weight(0)) == 0.0);
  CHECK_THROWS_AS(alpha(u, Weight(0)), DomainError);
  CHECK(beta(ReprClass::mock_plus(), Weight(1)) == 0.0);
  CHECK(alpha(ReprClass::mock_minus(), Weight(-1)) == 0.0);
  CHECK(alpha(ReprClass::discrete(3), Weight(-3)) == 0.0);
}

TEST_CASE("ladder invariants over the class grid") {
  for (const ReprClass& c : class_grid()) {
    const double q = q_of(c);
    for (const Weight m : weights_within(c, 20)) {
      CAPTURE(display_name(c));
      CAPTURE(m.twice);
      CHECK(q + m.m_m_plus_1() >= -1e-12);
      CHECK(q + m.m_m_minus_1() >= -1e-12);
      if (weight_set_contains(c, m.next())) {
        CHECK(std::abs(beta(c, m.next()) - alpha(c, m)) <= 1e-12 * (1 + alpha(c, m)));
        // Interior coefficients follow the square-root formula.
        CHECK(alpha(c, m) == doctest::Approx(std::sqrt(std::max(0.0, q + m.m_m_plus_1()))));
      } else {
        CHECK(alpha(c, m) == 0.0);
        CHECK(std::abs(q + m.m_m_plus_1()) <= 1e-12);
      }
      if (!weight_set_contains(c, m.prev())) {
        CHECK(beta(c, m) == 0.0);
        CHECK(std::abs(q + m.m_m_minus_1()) <= 1e-12);
      }
    }
  }
}

TEST_CASE("operator words") {
  const auto u = ReprClass::discrete(-2);
  const CoeffSeq phi1 = CoeffSeq::basis(u, Weight::integral(1));

  SUBCASE("H is diagonal") {
    for (const ReprClass& c : class_grid())
      for (const Weight m : weights_within(c, 5)) {
        const CoeffSeq out = apply_operator({Symbol::H}, CoeffSeq::basis(c, m));
        CHECK(approx_equal(out, Complex(m.value()) * CoeffSeq::basis(c, m), 1e-15));
      }
  }
  SUBCASE("constants are annihilated") {
    const CoeffSeq one = CoeffSeq::basis(ReprClass::trivial(), Weight(0));
    for (Symbol s : {Symbol::H, Symbol::E, Symbol::F, Symbol::X0, Symbol::X1, Symbol::X2, Symbol::Y})
      CHECK(apply(s, one).is_zero());
  }
  SUBCASE("FE acts by alpha_m^2") {
    const CoeffSeq out = apply_operator({Symbol::F, Symbol::E}, phi1);
    CHECK(approx_equal(out, Complex(2.0) * phi1, 1e-14));
    // The rightmost symbol acts first: E after F kills the lowest weight.
    CHECK(apply_operator({Symbol::E, Symbol::F}, phi1).is_zero());
  }
  SUBCASE("EF and FE scalars") {
    for (const ReprClass& c : class_grid()) {
      const double q = q_of(c);
      for (const Weight m : weights_within(c, 10)) {
        const CoeffSeq phi = CoeffSeq::basis(c, m);
        if (weight_set_contains(c, m.prev()))
          CHECK(apply_operator({Symbol::E, Symbol::F}, phi)[m].real() ==
                doctest::Approx(q + m.m_m_minus_1()).epsilon(1e-12));
        if (weight_set_contains(c, m.next()))
          CHECK(apply_operator({Symbol::F, Symbol::E}, phi)[m].real() ==
                doctest::Approx(q + m.m_m_plus_1()).epsilon(1e-12));
      }
    }
  }
  SUBCASE("commutator [E, F] = -2H") {
    for (const ReprClass& c : class_grid())
      for (const Weight m : weights_within(c, 6)) {
        const CoeffSeq phi = CoeffSeq::basis(c, m);
        const CoeffSeq comm = apply_operator({Symbol::E, Symbol::F}, phi) -
                              apply_operator({Symbol::F, Symbol::E}, phi);
        CHECK(approx_equal(comm, Complex(-2.0 * m.value()) * phi, 1e-12));
      }
  }
}

TEST_CASE("class spec strings") {
  CHECK(parse_spec_string("I") == ReprClass::trivial());
  CHECK(parse_spec_string("U:-1") == ReprClass::discrete(-2));
  CHECK(parse_spec_string("U:1.5") == ReprClass::discrete(3));
  CHECK(parse_spec_string("Vp:0.5,2") == ReprClass::principal(1, 2.0));
  CHECK(parse_spec_string("Vm:-") == ReprClass::mock_minus());
  CHECK(parse_spec_string("Vc:0.75") == ReprClass::complementary(0.75));
  CHECK_THROWS_AS(parse_spec_string("U:0.75"), DomainError);
  CHECK_THROWS_AS(parse_spec_string("Vc:1.2"), DomainError);
  CHECK_THROWS_AS(parse_spec_string("W:1"), ParseError);
  for (const ReprClass& c : class_grid()) CHECK(parse_spec_string(to_spec_string(c)) == c);
}
