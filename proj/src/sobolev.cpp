#include "leafcoh/sobolev.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "leafcoh/errors.hpp"
#include "leafcoh/ladder.hpp"

namespace leafcoh {

double sobolev_norm(const CoeffSeq& v, int k, int max_order) {
  if (k < 0 || k > max_order)
    throw OrderError("Sobolev order " + std::to_string(k) + " outside [0, " +
                     std::to_string(max_order) + "]");
  double total = v.norm() * v.norm();
  std::vector<CoeffSeq> level{v};
  for (int len = 1; len <= k; ++len) {
    std::vector<CoeffSeq> next;
    next.reserve(level.size() * 3);
    for (const CoeffSeq& u : level)
      for (Symbol s : {Symbol::X0, Symbol::X1, Symbol::X2}) {
        CoeffSeq w = apply(s, u);
        const double n = w.norm();
        total += n * n;
        next.push_back(std::move(w));
      }
    level = std::move(next);
  }
  return std::sqrt(total);
}

DecayReport is_rapidly_decreasing(const CoeffSeq& v, int degree, WeightInterval window) {
  if (degree < 0) throw DomainError("decay degree must be non-negative");
  if (window.count() < 8) throw WindowError("decay window needs at least 8 weights");

  std::vector<Weight> weights;
  for (Weight m = window.lo; m <= window.hi; m = m.next()) weights.push_back(m);
  std::stable_sort(weights.begin(), weights.end(),
                   [](Weight a, Weight b) { return std::abs(a.twice) < std::abs(b.twice); });
  const std::size_t half = weights.size() / 2;

  auto weighted = [&](Weight m) {
    return std::pow(std::abs(m.value()), degree) * std::abs(v[m]);
  };
  DecayReport r;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    double& sup = i < half ? r.inner_sup : r.outer_sup;
    sup = std::max(sup, weighted(weights[i]));
  }
  if (r.outer_sup == 0.0) {
    r.rapidly_decreasing = true;
    r.margin = std::numeric_limits<double>::infinity();
  } else {
    r.rapidly_decreasing = r.outer_sup < r.inner_sup;
    r.margin = r.inner_sup == 0.0 ? -std::numeric_limits<double>::infinity()
                                  : std::log10(r.inner_sup / r.outer_sup);
  }
  return r;
}

LaplaceReport laplace_check(const ReprClass& cls, Weight m, double tol) {
  const CoeffSeq phi = CoeffSeq::basis(cls, m);
  CoeffSeq out = Complex(-1.0) * apply_operator({Symbol::X0, Symbol::X0}, phi);
  out -= apply_operator({Symbol::X1, Symbol::X1}, phi);
  out -= apply_operator({Symbol::Y, Symbol::Y}, phi);

  LaplaceReport r;
  const Complex diag = out[m];
  r.eigenvalue = diag.real();
  r.imaginary_part = diag.imag();
  CoeffSeq rest = out;
  rest.accumulate(m, -diag);
  r.off_diagonal = rest.norm();
  const double scale = std::max(1.0, std::abs(diag));
  if (r.off_diagonal > tol * scale || std::abs(r.imaginary_part) > tol * scale)
    throw EigenvectorError("phi_" + to_string(m) + " is not an eigenvector of the Laplacian in " +
                           display_name(cls));
  return r;
}

}  // namespace leafcoh
