#include "leafcoh/blocksolve.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace leafcoh {

double gamma(Weight m, double q) {
  double r1 = q + m.m_m_plus_1();
  double r2 = q + m.shifted(2).m_m_plus_1();  // m^2+5m+6+q
  if (std::abs(r1) <= kRadicandClamp) r1 = 0.0;
  if (std::abs(r2) <= kRadicandClamp) r2 = 0.0;
  if (r1 < 0.0 || r2 < 0.0) {
    std::ostringstream os;
    os << "gamma: negative radicand at m = " << to_string(m) << ", q = " << q;
    throw DomainError(os.str());
  }
  return -4.0 * q * std::sqrt(r1) * std::sqrt(r2);
}

double block_determinant(Weight m, double q) {
  return window_block<Complex>(m, q).determinant().real();
}

BlockSystem block_system(const ReprClass& cls, Weight m) {
  if (!weight_set_contains(cls, m) || !weight_set_contains(cls, m.shifted(3)))
    throw WindowError("block window [" + to_string(m) + ", " + to_string(m.shifted(3)) +
                      "] leaves the weight set of " + display_name(cls));
  const Weight m1 = m.next(), m2 = m.shifted(2);
  const double b1 = beta(cls, m1), b2 = beta(cls, m2);
  const double a1 = alpha(cls, m1), a2 = alpha(cls, m2);
  BlockSystem s;
  s.m = m;
  s.q = q_of(cls);
  s.matrix << b1, -b1, 0, 0,
              -2.0 * m1.value(), 0, b2, -b2,
              a1, a1, -2.0 * m2.value(), 0,
              0, 0, a2, a2;
  return s;
}

std::vector<Weight> delta_scan_weights(const ReprClass& cls) {
  const double q = q_of(cls);
  const int cutoff = std::max(static_cast<int>(std::ceil(std::sqrt(std::abs(q)))) + 3, 10);
  std::set<Weight> starts;
  for (int t = -2 * cutoff; t <= 2 * cutoff; ++t) starts.insert(Weight(t));
  const WeightBounds b = weight_bounds(cls);
  if (b.has_lower) starts.insert(b.lower);
  if (b.has_upper) starts.insert(b.upper.shifted(-3));
  std::vector<Weight> out;
  for (const Weight m : starts)
    if (weight_set_contains(cls, m) && weight_set_contains(cls, m.shifted(3))) out.push_back(m);
  return out;
}

DeltaReport gamma_lower_bound(const Spectrum& spec) {
  for (const auto& e : spec.entries)
    if (is_degenerate_class(e.cls))
      throw HypothesisError("uniform gamma bound excludes I, U^{1} and U^{-1}; spectrum contains " +
                            display_name(e.cls));
  const ValidationReport report = validate(spec);
  if (!report.ok())
    throw DomainError("spectrum fails validation: " + report.violations.front().message);

  DeltaReport best;
  best.delta = std::numeric_limits<double>::infinity();
  for (const auto& e : spec.entries) {
    const double q = q_of(e.cls);
    for (const Weight m : delta_scan_weights(e.cls)) {
      const double g = std::abs(gamma(m, q));
      ++best.windows_scanned;
      if (g == 0.0) {
        throw DegenerateSpectrumError("gamma vanishes for " + display_name(e.cls) + " at m = " +
                                          to_string(m),
                                      m.twice, q);
      }
      if (g < best.delta) {
        best.delta = g;
        best.witness = e.cls;
        best.witness_m = m;
        best.witness_q = q;
      }
    }
  }
  if (best.windows_scanned == 0) throw HypothesisError("spectrum has no admissible block windows");
  return best;
}

namespace {

using SpMat = Eigen::SparseMatrix<double>;

std::vector<Weight> module_weights_in(const ReprClass& cls, WeightInterval window) {
  std::vector<Weight> out;
  for (Weight m = window.lo; m <= window.hi; m = m.next())
    if (weight_set_contains(cls, m)) out.push_back(m);
  return out;
}

struct LeastSquares {
  Eigen::MatrixXd x;  // columns: real part, imaginary part
  double conditioning = 0.0;
};

LeastSquares dense_min_norm(const SpMat& A, const Eigen::MatrixXd& rhs) {
  const Eigen::MatrixXd dense(A);
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(dense);
  LeastSquares out;
  out.x = cod.solve(rhs);
  const Eigen::Index r = cod.rank();
  out.conditioning = r > 0 ? std::abs(cod.matrixT()(r - 1, r - 1)) : 0.0;
  if (r < std::min(dense.rows(), dense.cols())) out.conditioning = 0.0;
  return out;
}

/// Minimum-norm solution of A x = rhs through the banded normal equations
/// (A A^T) y = rhs, x = A^T y. Falls back to a dense complete orthogonal
/// decomposition when A A^T is numerically singular and small enough.
LeastSquares min_norm_solve(const SpMat& A, const Eigen::MatrixXd& rhs) {
  const SpMat normal = A * A.transpose();
  Eigen::SimplicialLDLT<SpMat> ldlt(normal);
  if (ldlt.info() == Eigen::Success) {
    const Eigen::VectorXd d = ldlt.vectorD();
    const double dmax = d.cwiseAbs().maxCoeff();
    const double dmin = d.minCoeff();
    if (dmin > 1e-13 * std::max(dmax, 1.0)) {
      LeastSquares out;
      out.x = A.transpose() * ldlt.solve(rhs);
      out.conditioning = std::sqrt(dmin);
      return out;
    }
  }
  if (A.cols() <= 2048) return dense_min_norm(A, rhs);
  LeastSquares out;
  out.x = Eigen::MatrixXd::Zero(A.cols(), rhs.cols());
  out.conditioning = 0.0;
  return out;
}

void check_support(const CoeffSeq& g, WeightInterval window) {
  for (const Weight m : g.support())
    if (!window.contains(m))
      throw DomainError("right-hand side has weight " + to_string(m) + " outside window [" +
                        to_string(window.lo) + ", " + to_string(window.hi) + "]");
}

}  // namespace

PreimageResult solve_fixed_window(const ReprClass& cls, const CoeffSeq& g, WeightInterval window) {
  if (!(g.repr() == cls)) throw DomainError("right-hand side belongs to a different class");
  check_support(g, window);

  const std::vector<Weight> unknowns = module_weights_in(cls, window);
  std::map<Weight, Eigen::Index> row_of;
  for (const Weight u : unknowns)
    for (int s = -1; s <= 1; ++s)
      if (weight_set_contains(cls, u.shifted(s))) row_of.emplace(u.shifted(s), 0);
  for (const Weight m : g.support()) row_of.emplace(m, 0);
  Eigen::Index next_row = 0;
  for (auto& [m, row] : row_of) row = next_row++;

  // Column 2k is f1 at unknowns[k], column 2k+1 is f2. The coefficient at u
  // enters g_{u+1} through alpha_u, g_u through -2u, g_{u-1} through beta_u.
  std::vector<Eigen::Triplet<double>> triplets;
  for (std::size_t k = 0; k < unknowns.size(); ++k) {
    const Weight u = unknowns[k];
    const auto c1 = static_cast<Eigen::Index>(2 * k), c2 = c1 + 1;
    const double a = alpha(cls, u), b = beta(cls, u);
    if (a != 0.0) {
      const Eigen::Index r = row_of.at(u.next());
      triplets.emplace_back(r, c1, a);
      triplets.emplace_back(r, c2, a);
    }
    if (u.twice != 0) triplets.emplace_back(row_of.at(u), c1, -2.0 * u.value());
    if (b != 0.0) {
      const Eigen::Index r = row_of.at(u.prev());
      triplets.emplace_back(r, c1, b);
      triplets.emplace_back(r, c2, -b);
    }
  }
  SpMat A(next_row, static_cast<Eigen::Index>(2 * unknowns.size()));
  A.setFromTriplets(triplets.begin(), triplets.end());

  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(next_row, 2);
  for (const auto& [m, row] : row_of) {
    rhs(row, 0) = g[m].real();
    rhs(row, 1) = g[m].imag();
  }

  PreimageResult result{TwoFormCoeffs(cls, Gauge::Rescaled), 0.0, window, 0.0, 0};
  if (!unknowns.empty()) {
    const LeastSquares ls = min_norm_solve(A, rhs);
    result.conditioning = ls.conditioning;
    for (std::size_t k = 0; k < unknowns.size(); ++k) {
      const auto c = static_cast<Eigen::Index>(2 * k);
      result.w.f1.set(unknowns[k], Complex(ls.x(c, 0), ls.x(c, 1)));
      result.w.f2.set(unknowns[k], Complex(ls.x(c + 1, 0), ls.x(c + 1, 1)));
    }
  }
  result.residual = (d2_rescaled(result.w).g - g).norm();
  return result;
}

PreimageResult solve_preimage(const ReprClass& cls, const CoeffSeq& g, WeightInterval window,
                              const SolverOptions& opts) {
  if (cls.family == Family::Trivial)
    throw HypothesisError("the differential vanishes identically on the trivial class");
  if (!(opts.tol > 0.0)) throw DomainError("solver tolerance must be positive");
  if (opts.window_cap < 1) throw DomainError("window cap must be positive");
  check_support(g, window);

  PreimageResult best = solve_fixed_window(cls, g, window);
  int expansions = 0;
  while (best.residual > opts.tol && window.count() < opts.window_cap) {
    const int grow = std::max(1, window.count() / 2);
    const int room = opts.window_cap - window.count();
    const int lo_steps = std::min(grow, room / 2);
    const int hi_steps = std::min(grow, room - lo_steps);
    window = WeightInterval{window.lo.shifted(-lo_steps), window.hi.shifted(hi_steps)};
    ++expansions;
    PreimageResult next = solve_fixed_window(cls, g, window);
    if (next.residual <= best.residual) best = std::move(next);
  }
  best.expansions = expansions;
  if (best.residual > opts.tol) {
    std::ostringstream os;
    os << "no preimage certificate for " << display_name(cls) << ": best residual "
       << best.residual << " > tolerance " << opts.tol << " at window cap " << opts.window_cap;
    throw NoCertificateError(os.str(), best.residual, best.conditioning);
  }
  return best;
}

PreimageResult solve_preimage(const ReprClass& cls, const CoeffSeq& g, const SolverOptions& opts) {
  const std::vector<Weight> supp = g.support();
  if (supp.empty()) {
    const Weight m = nearest_weight(cls, Weight(0));
    return solve_preimage(cls, g, WeightInterval{m, m}, opts);
  }
  return solve_preimage(cls, g, WeightInterval{supp.front().shifted(-2), supp.back().shifted(2)},
                        opts);
}

SurjectivityReport surjectivity_certificate(const ReprClass& cls, const std::vector<Weight>& probes,
                                            const SolverOptions& opts) {
  if (cls.family == Family::Trivial)
    throw HypothesisError("the differential vanishes identically on the trivial class");
  SurjectivityReport report;
  report.cls = cls;
  report.tol = opts.tol;
  report.granted = true;
  for (const Weight m : probes) {
    const CoeffSeq g = CoeffSeq::basis(cls, m);
    PreimageResult r = solve_preimage(cls, g, opts);
    report.worst_residual = std::max(report.worst_residual, r.residual);
    report.granted = report.granted && r.residual <= opts.tol;
    report.probes.push_back({m, std::move(r)});
  }
  return report;
}

}  // namespace leafcoh
