#pragma once

#include <string>

#include "leafcoh/weight.hpp"

namespace leafcoh {

/// Families of irreducible unitary representations of SL(2,R).
enum class Family {
  Principal,      ///< V^{j,s}, s = 1/2 + i nu
  MockPlus,       ///< V^{1/2,1/2}_+
  MockMinus,      ///< V^{1/2,1/2}_-
  Discrete,       ///< U^{n} (n > 0) and U^{-n}
  Complementary,  ///< V^sigma
  Trivial,        ///< I
};

/// One irreducible class with its parameters. Only the fields relevant to
/// `family` are meaningful; the named constructors validate them.
struct ReprClass {
  Family family = Family::Trivial;
  int twice_j = 0;      // Principal: 0 or 1
  double nu = 0.0;      // Principal: >= 0
  int twice_n = 0;      // Discrete: signed 2n, |n| >= 1; negative means U^{-n}
  double sigma = 0.0;   // Complementary: (1/2, 1)

  static ReprClass trivial();
  static ReprClass principal(int twice_j, double nu);
  static ReprClass mock_plus();
  static ReprClass mock_minus();
  /// U^{n} for twice_n > 0 (weights -n - N), U^{-n} for twice_n < 0 (weights n + N).
  static ReprClass discrete(int twice_n);
  static ReprClass complementary(double sigma);

  friend bool operator==(const ReprClass&, const ReprClass&) = default;
};

/// Throws DomainError when the parameters are outside the admissible ranges.
void check_params(const ReprClass& cls);

/// Casimir-type parameter q of the class.
double q_of(const ReprClass& cls);

bool weight_set_contains(const ReprClass& cls, Weight m);

/// Lowest weight for lowest-weight modules, highest weight for highest-weight
/// modules; empty for two-sided modules.
struct WeightBounds {
  bool has_lower = false;
  bool has_upper = false;
  Weight lower;
  Weight upper;
};
WeightBounds weight_bounds(const ReprClass& cls);

/// Some weight of 𝕄 closest to zero.
Weight nearest_weight(const ReprClass& cls, Weight target);

/// True for I, U^{1}, U^{-1}: the classes where the block determinant vanishes.
bool is_degenerate_class(const ReprClass& cls);

/// Radicands within this distance of zero are clamped to exactly zero.
inline constexpr double kRadicandClamp = 1e-12;

/// E phi_m = alpha_m phi_{m+1}. Throws DomainError if m is not in 𝕄.
double alpha(const ReprClass& cls, Weight m);
/// F phi_m = beta_m phi_{m-1}. Throws DomainError if m is not in 𝕄.
double beta(const ReprClass& cls, Weight m);

/// Compact textual form: "I", "U:-1", "U:1.5", "Vp:0,1", "Vp:0.5,2", "Vm:+", "Vm:-", "Vc:0.75".
std::string to_spec_string(const ReprClass& cls);
/// Parses the compact form; throws ParseError or DomainError.
ReprClass parse_spec_string(const std::string& text);

/// Human-readable name such as "U^{-1}" or "V^{0,1/2+1i}".
std::string display_name(const ReprClass& cls);

}  // namespace leafcoh
