#pragma once

#include "leafcoh/coeff_seq.hpp"

namespace leafcoh {

/// Coordinate convention for the coefficients of a 2-form
/// f1 w0^w1 + f2 w0^w2 of the ideal complex.
///
/// `Raw` stores the Fourier coefficients of f1, f2 themselves. `Rescaled`
/// stores f1' = f1 / (2i), f2' = -f2 / 2, in which the differential has the
/// real banded form
///   g_m = (f1'+f2')_{m-1} alpha_{m-1} - 2m f1'_m + (f1'-f2')_{m+1} beta_{m+1}.
enum class Gauge { Raw, Rescaled };

struct TwoFormCoeffs {
  CoeffSeq f1;
  CoeffSeq f2;
  Gauge gauge = Gauge::Rescaled;

  TwoFormCoeffs(CoeffSeq f1_, CoeffSeq f2_, Gauge gauge_);
  explicit TwoFormCoeffs(const ReprClass& cls, Gauge gauge_ = Gauge::Rescaled)
      : TwoFormCoeffs(CoeffSeq(cls), CoeffSeq(cls), gauge_) {}

  const ReprClass& repr() const { return f1.repr(); }
};

/// Coefficient g of the 3-form g w0^w1^w2.
struct ThreeFormCoeffs {
  CoeffSeq g;
};

/// Differential in rescaled coordinates. Throws GaugeError for raw input.
ThreeFormCoeffs d2_rescaled(const TwoFormCoeffs& w);

/// Differential in raw coordinates:
///   g_m = -((i f1 + f2)_{m-1} / 2) alpha_{m-1} + i m f1_m - ((i f1 - f2)_{m+1} / 2) beta_{m+1}.
ThreeFormCoeffs d2_raw(const TwoFormCoeffs& w);

/// g = -(X1 f2 - X2 f1), composed from the ladder action. Independent of
/// d2_raw and used to cross-check it.
ThreeFormCoeffs d2_via_vector_fields(const TwoFormCoeffs& w);

/// Raw -> rescaled: f1 -> f1 / (2i), f2 -> -f2 / 2.
TwoFormCoeffs rescale(const TwoFormCoeffs& w);
/// Rescaled -> raw: f1 -> 2i f1, f2 -> -2 f2.
TwoFormCoeffs unrescale(const TwoFormCoeffs& w);

}  // namespace leafcoh
