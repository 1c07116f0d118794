#include "leafcoh/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "leafcoh/blocksolve.hpp"
#include "leafcoh/cohomology.hpp"
#include "leafcoh/errors.hpp"
#include "leafcoh/ladder.hpp"
#include "leafcoh/leafdiff.hpp"
#include "leafcoh/sampling.hpp"
#include "leafcoh/sobolev.hpp"

namespace leafcoh {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

  void check(const std::string& name, bool ok, const std::string& detail = {}) {
    out_.push_back({suite_, name, ok, detail});
  }

  /// Runs `body` and records a failure if it throws.
  void guarded(const std::string& name, const std::function<std::string()>& body) {
    try {
      const std::string failure = body();
      check(name, failure.empty(), failure);
    } catch (const std::exception& e) {
      check(name, false, std::string("threw: ") + e.what());
    }
  }

  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::string suite_;
  std::vector<CheckResult> out_;
};

std::string describe(const ReprClass& cls, Weight m) {
  return display_name(cls) + " at m=" + to_string(m);
}

/// Leibniz expansion over all 24 permutations.
double leibniz_det(const Eigen::Matrix<Complex, 4, 4>& a) {
  std::array<int, 4> p{0, 1, 2, 3};
  Complex total = 0.0;
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[i] > p[j]) ++inversions;
    Complex term = (inversions % 2) ? -1.0 : 1.0;
    for (int i = 0; i < 4; ++i) term *= a(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total.real();
}

std::vector<CheckResult> repcore_suite(std::uint64_t) {
  Recorder rec("repcore");
  for (const ReprClass& cls : class_grid()) {
    rec.guarded("ladder " + display_name(cls), [&]() -> std::string {
      const double q = q_of(cls);
      for (const Weight m : weights_within(cls, 20)) {
        const double a = alpha(cls, m), b = beta(cls, m);
        if (q + m.m_m_plus_1() < -kRadicandClamp || q + m.m_m_minus_1() < -kRadicandClamp)
          return "negative radicand " + describe(cls, m);
        if (weight_set_contains(cls, m.next()) && std::abs(beta(cls, m.next()) - a) > 1e-12 * (1 + a))
          return "beta_{m+1} != alpha_m " + describe(cls, m);
        if (!weight_set_contains(cls, m.next()) && a != 0.0) return "alpha nonzero at top " + describe(cls, m);
        if (!weight_set_contains(cls, m.prev()) && b != 0.0) return "beta nonzero at bottom " + describe(cls, m);
        const CoeffSeq phi = CoeffSeq::basis(cls, m);
        const CoeffSeq ef = apply_operator({Symbol::E, Symbol::F}, phi);
        const CoeffSeq fe = apply_operator({Symbol::F, Symbol::E}, phi);
        if (std::abs(ef[m] - Complex(b * b)) > 1e-10 * (1 + b * b)) return "EF scalar " + describe(cls, m);
        if (std::abs(fe[m] - Complex(a * a)) > 1e-10 * (1 + a * a)) return "FE scalar " + describe(cls, m);
        if (weight_set_contains(cls, m.prev()) && std::abs(ef[m] - (q + m.m_m_minus_1())) > 1e-10 * (1 + std::abs(q) + m.value() * m.value()))
          return "EF != q + m(m-1) " + describe(cls, m);
        if (weight_set_contains(cls, m.next()) && std::abs(fe[m] - (q + m.m_m_plus_1())) > 1e-10 * (1 + std::abs(q) + m.value() * m.value()))
          return "FE != q + m(m+1) " + describe(cls, m);
      }
      return {};
    });
  }
  return rec.take();
}

std::vector<CheckResult> leafdiff_suite(std::uint64_t seed) {
  Recorder rec("leafdiff");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  for (const ReprClass& cls : class_grid()) {
    rec.guarded("oracle/gauge/linearity " + display_name(cls), [&]() -> std::string {
      for (int trial = 0; trial < 200; ++trial) {
        const TwoFormCoeffs w(random_coeffs(cls, rng, 6, 8), random_coeffs(cls, rng, 6, 8), Gauge::Raw);
        const CoeffSeq raw = d2_raw(w).g;
        if (!approx_equal(raw, d2_via_vector_fields(w).g, 1e-12)) return "vector-field route disagrees";
        if (!approx_equal(raw, d2_rescaled(rescale(w)).g, 1e-12)) return "rescaled route disagrees";
        const TwoFormCoeffs w2(random_coeffs(cls, rng, 6, 8), random_coeffs(cls, rng, 6, 8), Gauge::Raw);
        const Complex a(normal(rng), normal(rng)), b(normal(rng), normal(rng));
        const TwoFormCoeffs combo(a * w.f1 + b * w2.f1, a * w.f2 + b * w2.f2, Gauge::Raw);
        if (!approx_equal(d2_raw(combo).g, a * raw + b * d2_raw(w2).g, 1e-12)) return "not linear";
        for (const Weight m : raw.support()) {
          bool near = false;
          for (int s = -1; s <= 1; ++s) near = near || w.f1[m.shifted(s)] != Complex{} || w.f2[m.shifted(s)] != Complex{};
          if (!near) return "support leaks to " + to_string(m);
        }
        if (cls.family == Family::Trivial && !raw.is_zero()) return "nonzero on trivial class";
      }
      return {};
    });
  }
  return rec.take();
}

std::vector<CheckResult> blocksolve_suite(std::uint64_t seed) {
  Recorder rec("blocksolve");
  std::mt19937_64 rng(seed);
  rec.guarded("determinant identity grid", [&]() -> std::string {
    std::uniform_int_distribution<int> tm(-100, 100);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
      const Weight m(tm(rng));
      const double lo = std::max(0.0, -m.m_m_plus_1()) + 0.01;
      const double q = lo + (100.0 - lo) * u(rng);
      const double g = gamma(m, q);
      const double det = leibniz_det(window_block<Complex>(m, q));
      if (std::abs(g - det) > 1e-9 * (1 + std::abs(g))) {
        std::ostringstream os;
        os << "m=" << to_string(m) << " q=" << q << " gamma=" << g << " det=" << det;
        return os.str();
      }
      const double factored = -4.0 * q * std::sqrt(q + m.m_m_plus_1()) * std::sqrt(q + m.shifted(2).m_m_plus_1());
      if (std::abs(g - factored) > 1e-12 * (1 + std::abs(g))) return "factorization mismatch";
    }
    return {};
  });
  for (const ReprClass& cls : class_grid()) {
    if (cls.family == Family::Trivial) continue;
    rec.guarded("block det == gamma " + display_name(cls), [&]() -> std::string {
      const double q = q_of(cls);
      for (const Weight m : weights_within(cls, 12)) {
        if (!weight_set_contains(cls, m.shifted(3))) continue;
        const BlockSystem s = block_system(cls, m);
        const double g = gamma(m, q);
        if (std::abs(s.matrix.determinant() - g) > 1e-9 * (1 + std::abs(g))) return "det mismatch " + describe(cls, m);
        if (!is_degenerate_class(cls) && g == 0.0) return "gamma vanishes " + describe(cls, m);
      }
      return {};
    });
    rec.guarded("surjectivity " + display_name(cls), [&]() -> std::string {
      const SurjectivityReport r = surjectivity_certificate(cls, default_probe_weights(cls));
      if (!r.granted) return "certificate not granted";
      for (const auto& p : r.probes) {
        const double again = (d2_rescaled(p.result.w).g - CoeffSeq::basis(cls, p.m)).norm();
        if (std::abs(again - p.result.residual) > 1e-12) return "reported residual differs from recomputation";
      }
      return {};
    });
  }
  return rec.take();
}

std::vector<CheckResult> cohomology_suite(std::uint64_t seed) {
  Recorder rec("cohomology");
  for (const ReprClass& cls : class_grid()) {
    rec.guarded("h3 " + display_name(cls), [&]() -> std::string {
      const int expected = cls.family == Family::Trivial ? 1 : 0;
      const H3Report r = h3_restricted(cls);
      return r.dim == expected ? std::string{} : "dim " + std::to_string(r.dim);
    });
  }
  for (std::uint64_t s = seed; s < seed + 3; ++s) {
    rec.guarded("h3_global seed " + std::to_string(s), [&]() -> std::string {
      const int h = h3_global(generate(s, 8));
      return h == 1 ? std::string{} : "h3_global = " + std::to_string(h);
    });
  }
  for (int genus = 2; genus <= 6; ++genus) {
    rec.guarded("exact sequence genus " + std::to_string(genus), [&]() -> std::string {
      const long g2 = 2L * genus;
      const std::vector<long> expected{0, 1, 1, 0, g2, g2 + 1, 1, g2, g2, 1, 1, 0};
      const ExactResolution res = propagate_exact(les_inputs(genus, 1));
      if (!res.determined()) return "underdetermined";
      for (std::size_t k = 0; k < expected.size(); ++k)
        if (*res.dims[k] != expected[k]) return "dim mismatch at term " + std::to_string(k);
      if (alternating_sum(res) != 0) return "alternating sum nonzero";
      const ExactResolution cut = propagate_exact(les_inputs(genus, 1, {"invariant-currents"}));
      if (cut.determined()) return "determined without the invariant-currents input";
      return {};
    });
  }
  return rec.take();
}

std::vector<CheckResult> sobolev_suite(std::uint64_t seed) {
  Recorder rec("sobolev");
  std::mt19937_64 rng(seed);
  for (const ReprClass& cls : class_grid()) {
    rec.guarded("order-1 closed form " + display_name(cls), [&]() -> std::string {
      const double q = q_of(cls);
      for (const Weight m : weights_within(cls, 6)) {
        if (!weight_set_contains(cls, m.next()) || !weight_set_contains(cls, m.prev())) continue;
        const double n = sobolev_norm(CoeffSeq::basis(cls, m), 1);
        const double expected = 1 + 3 * m.value() * m.value() + q;
        if (std::abs(n * n - expected) > 1e-10 * expected) return "mismatch " + describe(cls, m);
      }
      return {};
    });
    rec.guarded("laplacian eigenvectors " + display_name(cls), [&]() -> std::string {
      for (const Weight m : weights_within(cls, 8)) laplace_check(cls, m);
      return {};
    });
    rec.guarded("norm monotone and homogeneous " + display_name(cls), [&]() -> std::string {
      const CoeffSeq v = random_coeffs(cls, rng, 4, 5);
      const Complex c(0.3, -1.7);
      for (int k = 0; k < 3; ++k) {
        const double a = sobolev_norm(v, k);
        if (a > sobolev_norm(v, k + 1) * (1 + 1e-14)) return "not monotone at k=" + std::to_string(k);
        if (std::abs(sobolev_norm(c * v, k) - std::abs(c) * a) > 1e-12 * (1 + std::abs(c) * a)) return "not homogeneous";
      }
      return {};
    });
  }
  return rec.take();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"repcore", "leafdiff", "blocksolve", "cohomology",
                                              "sobolev"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "all") {
    std::vector<CheckResult> all;
    for (const auto& n : suite_names()) {
      auto part = run_suite(n, seed);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  if (name == "repcore") return repcore_suite(seed);
  if (name == "leafdiff") return leafdiff_suite(seed);
  if (name == "blocksolve") return blocksolve_suite(seed);
  if (name == "cohomology") return cohomology_suite(seed);
  if (name == "sobolev") return sobolev_suite(seed);
  throw DomainError("unknown verify suite '" + name + "'");
}

}  // namespace leafcoh
