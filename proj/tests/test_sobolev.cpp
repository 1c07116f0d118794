#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "leafcoh/errors.hpp"
#include "leafcoh/ladder.hpp"
#include "leafcoh/sampling.hpp"
#include "leafcoh/sobolev.hpp"

using namespace leafcoh;

TEST_CASE("order-0 and trivial norms") {
  const ReprClass t = ReprClass::trivial();
  for (int k = 0; k <= kMaxSobolevOrder; ++k)
    CHECK(sobolev_norm(CoeffSeq::basis(t, Weight(0)), k) == doctest::Approx(1.0));

  const ReprClass p = ReprClass::principal(0, 2.0);
  const CoeffSeq v = Complex(0.6) * CoeffSeq::basis(p, Weight::integral(-3)) +
                     Complex(0.8) * CoeffSeq::basis(p, Weight::integral(5));
  CHECK(sobolev_norm(v, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(sobolev_norm(v, kMaxSobolevOrder + 1), OrderError);
  CHECK_THROWS_AS(sobolev_norm(v, -1), OrderError);
}

TEST_CASE("order-1 closed form against the word expansion") {
  for (const ReprClass& c : class_grid()) {
    const double q = q_of(c);
    for (const Weight m : weights_within(c, 8)) {
      if (!weight_set_contains(c, m.next()) || !weight_set_contains(c, m.prev())) continue;
      const CoeffSeq phi = CoeffSeq::basis(c, m);
      double words = 1.0;
      for (Symbol s : {Symbol::X0, Symbol::X1, Symbol::X2}) {
        const double n = apply_operator({s}, phi).norm();
        words += n * n;
      }
      const double closed = 1.0 + 3.0 * m.value() * m.value() + q;
      const double norm = sobolev_norm(phi, 1);
      CAPTURE(display_name(c));
      CAPTURE(m.twice);
      CHECK(std::abs(norm * norm - closed) <= 1e-10 * closed);
      CHECK(std::abs(words - closed) <= 1e-10 * closed);
    }
  }
}

TEST_CASE("norm monotonicity and homogeneity") {
  std::mt19937_64 rng(3);
  for (const ReprClass& c : class_grid()) {
    const CoeffSeq v = random_coeffs(c, rng, 5, 6);
    const Complex s(-1.5, 0.25);
    for (int k = 0; k < 4; ++k) {
      const double a = sobolev_norm(v, k);
      CHECK(a <= sobolev_norm(v, k + 1) * (1 + 1e-14));
      CHECK(sobolev_norm(s * v, k) == doctest::Approx(std::abs(s) * a).epsilon(1e-12));
    }
  }
}

TEST_CASE("empirical rapid decay") {
  const ReprClass u = ReprClass::discrete(-2);
  const WeightInterval window{Weight::integral(1), Weight::integral(64)};

  SUBCASE("finitely supported") {
    CoeffSeq v(u);
    for (int m = 1; m <= 6; ++m) v.set(Weight::integral(m), Complex(1.0 / m, m));
    for (int d = 0; d <= 8; ++d) CHECK(is_rapidly_decreasing(v, d, window).rapidly_decreasing);
    CHECK(std::isinf(is_rapidly_decreasing(v, 3, window).margin));
  }
  SUBCASE("factorial tail") {
    CoeffSeq v(u);
    double f = 1.0;
    for (int m = 1; m <= 64; ++m) {
      f *= m;
      v.set(Weight::integral(m), 1.0 / f);
    }
    const DecayReport r = is_rapidly_decreasing(v, 4, window);
    CHECK(r.rapidly_decreasing);
    CHECK(r.margin > 20.0);
    CHECK(std::string(r.kind) == "empirical");
  }
  SUBCASE("harmonic tail") {
    CoeffSeq v(u);
    for (int m = 1; m <= 64; ++m) v.set(Weight::integral(m), 1.0 / m);
    CHECK_FALSE(is_rapidly_decreasing(v, 2, window).rapidly_decreasing);
    CHECK(is_rapidly_decreasing(v, 2, window).margin < 0.0);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(is_rapidly_decreasing(CoeffSeq(u), 2, {Weight::integral(1), Weight::integral(7)}),
                    WindowError);
    CHECK_THROWS_AS(is_rapidly_decreasing(CoeffSeq(u), -1, window), DomainError);
  }
}

TEST_CASE("Laplacian eigenvalues") {
  CHECK(laplace_check(ReprClass::trivial(), Weight(0)).eigenvalue == 0.0);
  // U^{-1}, m = 1: m^2 from -X0^2 plus (EF + FE)/2 = q + m^2.
  CHECK(laplace_check(ReprClass::discrete(-2), Weight::integral(1)).eigenvalue ==
        doctest::Approx(2.0));

  std::vector<double> values;
  for (const ReprClass& c : class_grid()) {
    const double q = q_of(c);
    std::set<double> per_class;
    for (const Weight m : weights_within(c, 10)) {
      const LaplaceReport r = laplace_check(c, m);
      CAPTURE(display_name(c));
      CAPTURE(m.twice);
      CHECK(r.off_diagonal <= 1e-10);
      CHECK(std::abs(r.imaginary_part) <= 1e-12);
      CHECK(r.eigenvalue == doctest::Approx(q + 2 * m.value() * m.value()).epsilon(1e-12));
      per_class.insert(r.eigenvalue);
      values.push_back(r.eigenvalue);
    }
    if (weights_within(c, 10).size() > 1) CHECK(per_class.size() > 1);
  }
  // Values either coincide up to rounding or are separated by more than 1e-9.
  std::sort(values.begin(), values.end());
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const double gap = values[i + 1] - values[i];
    CHECK((gap <= 1e-12 * (1 + std::abs(values[i])) || gap > 1e-9));
  }
}
