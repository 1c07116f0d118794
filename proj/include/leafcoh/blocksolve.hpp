#pragma once

#include <cmath>
#include <complex>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>

#include "leafcoh/errors.hpp"
#include "leafcoh/leafdiff.hpp"
#include "leafcoh/spectrum.hpp"

namespace leafcoh {

namespace detail {

template <typename Scalar>
Scalar ladder_root(double radicand) {
  if constexpr (std::is_floating_point_v<Scalar>) {
    if (std::abs(radicand) <= kRadicandClamp) return Scalar(0);
    if (radicand < 0) throw DomainError("negative radicand in block matrix");
    return std::sqrt(Scalar(radicand));
  } else {
    if (std::abs(radicand) <= kRadicandClamp) return Scalar(0);
    return std::sqrt(Scalar(radicand));
  }
}

}  // namespace detail

/// The 4x4 block of the rescaled differential mapping
///   (f1_{m+1}, f2_{m+1}, f1_{m+2}, f2_{m+2}) -> (g_m, g_{m+1}, g_{m+2}, g_{m+3})
/// built from the ladder formulas at parameter q, without reference to any
/// weight set. With a real Scalar a negative radicand throws DomainError; with
/// a complex Scalar the principal square root is used, so the matrix is
/// defined for every (m, q).
template <typename Scalar>
Eigen::Matrix<Scalar, 4, 4> window_block(Weight m, double q) {
  const Weight m1 = m.next(), m2 = m.shifted(2);
  const Scalar b1 = detail::ladder_root<Scalar>(q + m1.m_m_minus_1());
  const Scalar b2 = detail::ladder_root<Scalar>(q + m2.m_m_minus_1());
  const Scalar a1 = detail::ladder_root<Scalar>(q + m1.m_m_plus_1());
  const Scalar a2 = detail::ladder_root<Scalar>(q + m2.m_m_plus_1());
  const Scalar c1 = Scalar(-2.0 * m1.value());
  const Scalar c2 = Scalar(-2.0 * m2.value());
  const Scalar z(0);
  Eigen::Matrix<Scalar, 4, 4> A;
  A << b1, -b1, z, z,
       c1, z, b2, -b2,
       a1, a1, c2, z,
       z, z, a2, a2;
  return A;
}

/// Closed-form block determinant -4q sqrt(m^2+m+q) sqrt(m^2+5m+6+q).
/// Throws DomainError when either radicand is negative.
double gamma(Weight m, double q);

/// det(window_block<complex>(m, q)) evaluated by Eigen; real up to rounding.
double block_determinant(Weight m, double q);

struct BlockSystem {
  Weight m;
  double q = 0.0;
  Eigen::Matrix4d matrix;
};

/// Block of d restricted to a class; requires m and m+3 in 𝕄 (WindowError).
BlockSystem block_system(const ReprClass& cls, Weight m);

struct DeltaReport {
  double delta = 0.0;
  ReprClass witness;
  Weight witness_m;
  double witness_q = 0.0;
  long windows_scanned = 0;
};

/// Window starts m with m, m+3 in 𝕄 that the finite scan for the minimum of
/// |gamma| has to visit: all |m| <= max(ceil(sqrt|q|) + 3, 10) plus the window
/// touching a module boundary. Beyond that |gamma| grows monotonically.
std::vector<Weight> delta_scan_weights(const ReprClass& cls);

/// Uniform lower bound of |gamma| over all admissible windows of every class
/// in the spectrum. Throws HypothesisError if the spectrum contains I or
/// U^{±1}, DomainError if it fails validation, DegenerateSpectrumError on a
/// vanishing determinant.
DeltaReport gamma_lower_bound(const Spectrum& spec);

struct SolverOptions {
  double tol = 1e-8;
  int window_cap = 4096;
};

struct PreimageResult {
  TwoFormCoeffs w;
  /// |d2_rescaled(w) - g| over every weight, recomputed after the solve.
  double residual = 0.0;
  WeightInterval window;
  /// sqrt of the smallest pivot of the normal equations, a proxy for the
  /// smallest singular value of the truncated operator.
  double conditioning = 0.0;
  int expansions = 0;
};

/// Minimum-norm least-squares solve of d2_rescaled(w) = g with w supported on
/// window ∩ 𝕄 and every equation the unknowns touch included. No tolerance
/// check and no window growth.
PreimageResult solve_fixed_window(const ReprClass& cls, const CoeffSeq& g, WeightInterval window);

/// Solves on `window`, doubling it until the residual is at most opts.tol or
/// the window holds opts.window_cap weights. Throws HypothesisError for the
/// trivial class, NoCertificateError when the cap is reached.
PreimageResult solve_preimage(const ReprClass& cls, const CoeffSeq& g, WeightInterval window,
                              const SolverOptions& opts = {});
/// Same, starting from the support of g widened by two weights on each side.
PreimageResult solve_preimage(const ReprClass& cls, const CoeffSeq& g,
                              const SolverOptions& opts = {});

struct ProbeResult {
  Weight m;
  PreimageResult result;
};

struct SurjectivityReport {
  ReprClass cls;
  std::vector<ProbeResult> probes;
  double tol = 0.0;
  bool granted = false;
  double worst_residual = 0.0;
};

/// Solves d w = phi_m for each probe weight.
SurjectivityReport surjectivity_certificate(const ReprClass& cls, const std::vector<Weight>& probes,
                                            const SolverOptions& opts = {});

}  // namespace leafcoh
