#include "leafcoh/coeff_seq.hpp"

#include <algorithm>
#include <cmath>

#include "leafcoh/errors.hpp"

namespace leafcoh {

CoeffSeq CoeffSeq::basis(const ReprClass& cls, Weight m) {
  CoeffSeq v(cls);
  v.set(m, 1.0);
  return v;
}

Complex CoeffSeq::operator[](Weight m) const {
  const auto it = entries_.find(m);
  return it == entries_.end() ? Complex{} : it->second;
}

void CoeffSeq::set(Weight m, Complex value) {
  if (!weight_set_contains(cls_, m))
    throw DomainError("weight " + to_string(m) + " is outside the weight set of " +
                      display_name(cls_));
  entries_[m] = value;
}

void CoeffSeq::accumulate(Weight m, Complex value) {
  if (!weight_set_contains(cls_, m)) return;
  entries_[m] += value;
}

std::vector<Weight> CoeffSeq::support() const {
  std::vector<Weight> out;
  for (const auto& [m, c] : entries_)
    if (c != Complex{}) out.push_back(m);
  return out;
}

bool CoeffSeq::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const auto& e) { return e.second == Complex{}; });
}

double CoeffSeq::norm() const {
  double s = 0.0;
  for (const auto& e : entries_) s += std::norm(e.second);
  return std::sqrt(s);
}

double CoeffSeq::max_abs() const {
  double s = 0.0;
  for (const auto& e : entries_) s = std::max(s, std::abs(e.second));
  return s;
}

void CoeffSeq::check_same_class(const CoeffSeq& other) const {
  if (!(cls_ == other.cls_))
    throw DomainError("coefficient sequences belong to different classes: " +
                      display_name(cls_) + " vs " + display_name(other.cls_));
}

CoeffSeq& CoeffSeq::operator+=(const CoeffSeq& other) {
  check_same_class(other);
  for (const auto& [m, c] : other.entries_) entries_[m] += c;
  return *this;
}

CoeffSeq& CoeffSeq::operator-=(const CoeffSeq& other) {
  check_same_class(other);
  for (const auto& [m, c] : other.entries_) entries_[m] -= c;
  return *this;
}

CoeffSeq& CoeffSeq::operator*=(Complex s) {
  for (auto& e : entries_) e.second *= s;
  return *this;
}

double max_abs_difference(const CoeffSeq& a, const CoeffSeq& b) {
  double d = 0.0;
  for (const auto& [m, c] : a.entries()) d = std::max(d, std::abs(c - b[m]));
  for (const auto& [m, c] : b.entries()) d = std::max(d, std::abs(a[m] - c));
  return d;
}

bool approx_equal(const CoeffSeq& a, const CoeffSeq& b, double rel) {
  const double scale = std::max({1.0, a.max_abs(), b.max_abs()});
  return max_abs_difference(a, b) <= rel * scale;
}

}  // namespace leafcoh
