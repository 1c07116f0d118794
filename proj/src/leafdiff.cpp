#include "leafcoh/leafdiff.hpp"

#include <set>

#include "leafcoh/errors.hpp"
#include "leafcoh/ladder.hpp"

namespace leafcoh {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_gauge(const TwoFormCoeffs& w, Gauge expected, const char* op) {
  if (w.gauge != expected)
    throw GaugeError(std::string(op) + ": expected " +
                     (expected == Gauge::Raw ? "raw" : "rescaled") + " coefficients");
}

/// Weights of 𝕄 within distance one of supp(f1) ∪ supp(f2).
std::set<Weight> output_weights(const TwoFormCoeffs& w) {
  std::set<Weight> out;
  for (const CoeffSeq* f : {&w.f1, &w.f2})
    for (const auto& entry : f->entries())
      for (int s = -1; s <= 1; ++s) {
        const Weight m = entry.first.shifted(s);
        if (weight_set_contains(w.repr(), m)) out.insert(m);
      }
  return out;
}

double alpha_or_zero(const ReprClass& cls, Weight m) {
  return weight_set_contains(cls, m) ? alpha(cls, m) : 0.0;
}

double beta_or_zero(const ReprClass& cls, Weight m) {
  return weight_set_contains(cls, m) ? beta(cls, m) : 0.0;
}

}  // namespace

TwoFormCoeffs::TwoFormCoeffs(CoeffSeq f1_, CoeffSeq f2_, Gauge gauge_)
    : f1(std::move(f1_)), f2(std::move(f2_)), gauge(gauge_) {
  if (!(f1.repr() == f2.repr()))
    throw DomainError("two-form components belong to different classes");
}

ThreeFormCoeffs d2_rescaled(const TwoFormCoeffs& w) {
  require_gauge(w, Gauge::Rescaled, "d2_rescaled");
  const ReprClass& cls = w.repr();
  CoeffSeq g(cls);
  for (const Weight m : output_weights(w)) {
    const Weight lo = m.prev(), hi = m.next();
    const Complex value = (w.f1[lo] + w.f2[lo]) * alpha_or_zero(cls, lo) -
                          2.0 * m.value() * w.f1[m] +
                          (w.f1[hi] - w.f2[hi]) * beta_or_zero(cls, hi);
    g.set(m, value);
  }
  return {std::move(g)};
}

ThreeFormCoeffs d2_raw(const TwoFormCoeffs& w) {
  require_gauge(w, Gauge::Raw, "d2_raw");
  const ReprClass& cls = w.repr();
  CoeffSeq g(cls);
  for (const Weight m : output_weights(w)) {
    const Weight lo = m.prev(), hi = m.next();
    const Complex value = -0.5 * (kI * w.f1[lo] + w.f2[lo]) * alpha_or_zero(cls, lo) +
                          kI * m.value() * w.f1[m] -
                          0.5 * (kI * w.f1[hi] - w.f2[hi]) * beta_or_zero(cls, hi);
    g.set(m, value);
  }
  return {std::move(g)};
}

ThreeFormCoeffs d2_via_vector_fields(const TwoFormCoeffs& w) {
  require_gauge(w, Gauge::Raw, "d2_via_vector_fields");
  CoeffSeq g = apply_operator({Symbol::X2}, w.f1) - apply_operator({Symbol::X1}, w.f2);
  return {std::move(g)};
}

TwoFormCoeffs rescale(const TwoFormCoeffs& w) {
  require_gauge(w, Gauge::Raw, "rescale");
  return TwoFormCoeffs((-0.5 * kI) * w.f1, Complex(-0.5) * w.f2, Gauge::Rescaled);
}

TwoFormCoeffs unrescale(const TwoFormCoeffs& w) {
  require_gauge(w, Gauge::Rescaled, "unrescale");
  return TwoFormCoeffs((2.0 * kI) * w.f1, Complex(-2.0) * w.f2, Gauge::Raw);
}

}  // namespace leafcoh
