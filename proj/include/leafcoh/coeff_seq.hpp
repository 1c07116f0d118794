#pragma once

#include <complex>
#include <map>
#include <vector>

#include "leafcoh/repr_class.hpp"

namespace leafcoh {

using Complex = std::complex<double>;

/// Finitely supported Fourier coefficients of a vector of one irreducible
/// class, in the orthonormal weight basis {phi_m}.
class CoeffSeq {
 public:
  using Map = std::map<Weight, Complex>;

  explicit CoeffSeq(ReprClass cls = ReprClass::trivial()) : cls_(cls) {}

  /// phi_m; throws DomainError if m is not in 𝕄.
  static CoeffSeq basis(const ReprClass& cls, Weight m);

  const ReprClass& repr() const { return cls_; }
  const Map& entries() const { return entries_; }

  /// Coefficient at m, zero when absent or outside 𝕄.
  Complex operator[](Weight m) const;

  /// Sets a coefficient; throws DomainError if m is not in 𝕄.
  void set(Weight m, Complex value);
  /// Adds to a coefficient, silently dropping contributions outside 𝕄.
  void accumulate(Weight m, Complex value);

  /// Weights carrying a nonzero coefficient, ascending.
  std::vector<Weight> support() const;
  bool is_zero() const;

  double norm() const;
  double max_abs() const;

  CoeffSeq& operator+=(const CoeffSeq& other);
  CoeffSeq& operator-=(const CoeffSeq& other);
  CoeffSeq& operator*=(Complex s);

  friend CoeffSeq operator+(CoeffSeq a, const CoeffSeq& b) { return a += b; }
  friend CoeffSeq operator-(CoeffSeq a, const CoeffSeq& b) { return a -= b; }
  friend CoeffSeq operator*(Complex s, CoeffSeq a) { return a *= s; }

 private:
  void check_same_class(const CoeffSeq& other) const;

  ReprClass cls_;
  Map entries_;
};

/// max over weights of |a_m - b_m|.
double max_abs_difference(const CoeffSeq& a, const CoeffSeq& b);

/// True when a and b agree coefficientwise to rel * max(1, |a|_inf, |b|_inf).
bool approx_equal(const CoeffSeq& a, const CoeffSeq& b, double rel);

}  // namespace leafcoh
