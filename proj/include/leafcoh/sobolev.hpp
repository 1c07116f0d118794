#pragma once

#include "leafcoh/coeff_seq.hpp"

namespace leafcoh {

inline constexpr int kMaxSobolevOrder = 6;

/// Order-k norm built from the frame X0, X1, X2:
///   |v|_k^2 = sum over all words w of length <= k of |w v|_{L^2}^2,
/// the empty word included. Order 0 is the coefficient l^2 norm.
/// Throws OrderError if k < 0 or k > max_order.
double sobolev_norm(const CoeffSeq& v, int k, int max_order = kMaxSobolevOrder);

struct DecayReport {
  bool rapidly_decreasing = false;
  /// log10(inner_sup / outer_sup); +inf when the outer half vanishes.
  double margin = 0.0;
  double inner_sup = 0.0;
  double outer_sup = 0.0;
  /// Always "empirical": a window comparison, not a proof of decay.
  const char* kind = "empirical";
};

/// Compares sup |m|^degree |v_m| over the half of the window farther from
/// m = 0 with the same sup over the nearer half. Decreasing when the outer
/// sup is strictly smaller (or both vanish). Throws DomainError for negative
/// degree and WindowError for windows with fewer than 8 weights.
DecayReport is_rapidly_decreasing(const CoeffSeq& v, int degree, WeightInterval window);

struct LaplaceReport {
  double eigenvalue = 0.0;
  /// Norm of the part of (-X0^2 - X1^2 - Y^2) phi_m orthogonal to phi_m.
  double off_diagonal = 0.0;
  double imaginary_part = 0.0;
};

/// Applies -X0^2 - X1^2 - Y^2 to phi_m. Throws EigenvectorError when the
/// result is not a real multiple of phi_m within `tol`.
LaplaceReport laplace_check(const ReprClass& cls, Weight m, double tol = 1e-10);

}  // namespace leafcoh
