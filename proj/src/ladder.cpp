#include "leafcoh/ladder.hpp"

#include "leafcoh/errors.hpp"

namespace leafcoh {

namespace {

constexpr Complex kI{0.0, 1.0};

CoeffSeq apply_h(const CoeffSeq& v) {
  CoeffSeq out(v.repr());
  for (const auto& [m, c] : v.entries()) out.accumulate(m, m.value() * c);
  return out;
}

CoeffSeq apply_e(const CoeffSeq& v) {
  CoeffSeq out(v.repr());
  for (const auto& [m, c] : v.entries()) {
    const double a = alpha(v.repr(), m);
    if (a != 0.0) out.accumulate(m.next(), a * c);
  }
  return out;
}

CoeffSeq apply_f(const CoeffSeq& v) {
  CoeffSeq out(v.repr());
  for (const auto& [m, c] : v.entries()) {
    const double b = beta(v.repr(), m);
    if (b != 0.0) out.accumulate(m.prev(), b * c);
  }
  return out;
}

}  // namespace

std::string to_string(Symbol s) {
  switch (s) {
    case Symbol::H: return "H";
    case Symbol::E: return "E";
    case Symbol::F: return "F";
    case Symbol::X0: return "X0";
    case Symbol::X1: return "X1";
    case Symbol::X2: return "X2";
    case Symbol::Y: return "Y";
  }
  return "?";
}

Symbol parse_symbol(const std::string& text) {
  for (Symbol s : {Symbol::H, Symbol::E, Symbol::F, Symbol::X0, Symbol::X1, Symbol::X2, Symbol::Y})
    if (to_string(s) == text) return s;
  throw ParseError("unknown operator symbol '" + text + "'");
}

CoeffSeq apply(Symbol s, const CoeffSeq& v) {
  switch (s) {
    case Symbol::H:
      return apply_h(v);
    case Symbol::E:
      return apply_e(v);
    case Symbol::F:
      return apply_f(v);
    case Symbol::X0:
      return kI * apply_h(v);
    case Symbol::X1:
      return 0.5 * (apply_e(v) - apply_f(v));
    case Symbol::Y:
      return (-0.5 * kI) * (apply_e(v) + apply_f(v));
    case Symbol::X2:
      return (-0.5 * kI) * (apply_e(v) + apply_f(v)) + kI * apply_h(v);
  }
  return v;
}

CoeffSeq apply_operator(std::span<const Symbol> word, const CoeffSeq& v) {
  CoeffSeq out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = apply(*it, out);
  return out;
}

}  // namespace leafcoh
