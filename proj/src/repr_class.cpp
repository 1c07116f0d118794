#include "leafcoh/repr_class.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "leafcoh/errors.hpp"

namespace leafcoh {

std::string to_string(Weight m) {
  if (m.is_integral()) return std::to_string(m.twice / 2);
  return std::to_string(m.twice) + "/2";
}

ReprClass ReprClass::trivial() { return ReprClass{}; }

ReprClass ReprClass::principal(int twice_j, double nu) {
  ReprClass c;
  c.family = Family::Principal;
  c.twice_j = twice_j;
  c.nu = nu;
  check_params(c);
  return c;
}

ReprClass ReprClass::mock_plus() {
  ReprClass c;
  c.family = Family::MockPlus;
  return c;
}

ReprClass ReprClass::mock_minus() {
  ReprClass c;
  c.family = Family::MockMinus;
  return c;
}

ReprClass ReprClass::discrete(int twice_n) {
  ReprClass c;
  c.family = Family::Discrete;
  c.twice_n = twice_n;
  check_params(c);
  return c;
}

ReprClass ReprClass::complementary(double sigma) {
  ReprClass c;
  c.family = Family::Complementary;
  c.sigma = sigma;
  check_params(c);
  return c;
}

void check_params(const ReprClass& cls) {
  switch (cls.family) {
    case Family::Principal:
      if (cls.twice_j != 0 && cls.twice_j != 1)
        throw DomainError("principal series: j must be 0 or 1/2");
      if (!std::isfinite(cls.nu) || cls.nu < 0.0)
        throw DomainError("principal series: nu must be a finite real >= 0");
      if (cls.twice_j == 1 && cls.nu == 0.0)
        throw DomainError("principal series: (j, nu) = (1/2, 0) is excluded");
      return;
    case Family::Discrete:
      if (std::abs(cls.twice_n) < 2)
        throw DomainError("discrete series: n must be a half-integer with n >= 1");
      return;
    case Family::Complementary:
      if (!(cls.sigma > 0.5 && cls.sigma < 1.0))
        throw DomainError("complementary series: sigma must lie in the open interval (1/2, 1)");
      return;
    case Family::MockPlus:
    case Family::MockMinus:
    case Family::Trivial:
      return;
  }
}

double q_of(const ReprClass& cls) {
  check_params(cls);
  switch (cls.family) {
    case Family::Principal:
      // s(1-s) with s = 1/2 + i nu
      return 0.25 + cls.nu * cls.nu;
    case Family::MockPlus:
    case Family::MockMinus:
      return 0.25;
    case Family::Discrete: {
      const double n = 0.5 * std::abs(cls.twice_n);
      return n * (1.0 - n);
    }
    case Family::Complementary:
      return cls.sigma * (1.0 - cls.sigma);
    case Family::Trivial:
      return 0.0;
  }
  return 0.0;
}

namespace {

bool same_parity(int a, int b) { return ((a - b) % 2) == 0; }

}  // namespace

bool weight_set_contains(const ReprClass& cls, Weight m) {
  const int t = m.twice;
  switch (cls.family) {
    case Family::Principal:
      return same_parity(t, cls.twice_j);
    case Family::MockPlus:
      return t >= 1 && !same_parity(t, 0);
    case Family::MockMinus:
      return t <= -1 && !same_parity(t, 0);
    case Family::Discrete: {
      const int tn = std::abs(cls.twice_n);
      if (cls.twice_n > 0) return t <= -tn && same_parity(t, tn);  // U^{n}: -n - N
      return t >= tn && same_parity(t, tn);                         // U^{-n}: n + N
    }
    case Family::Complementary:
      return same_parity(t, 0);
    case Family::Trivial:
      return t == 0;
  }
  return false;
}

WeightBounds weight_bounds(const ReprClass& cls) {
  WeightBounds b;
  switch (cls.family) {
    case Family::MockPlus:
      b.has_lower = true;
      b.lower = Weight(1);
      break;
    case Family::MockMinus:
      b.has_upper = true;
      b.upper = Weight(-1);
      break;
    case Family::Discrete:
      if (cls.twice_n > 0) {
        b.has_upper = true;
        b.upper = Weight(-cls.twice_n);
      } else {
        b.has_lower = true;
        b.lower = Weight(-cls.twice_n);
      }
      break;
    case Family::Trivial:
      b.has_lower = b.has_upper = true;
      break;
    case Family::Principal:
    case Family::Complementary:
      break;
  }
  return b;
}

Weight nearest_weight(const ReprClass& cls, Weight target) {
  const WeightBounds b = weight_bounds(cls);
  if (b.has_lower && target < b.lower) return b.lower;
  if (b.has_upper && target > b.upper) return b.upper;
  if (weight_set_contains(cls, target)) return target;
  // Off by one half: step toward zero, staying inside the bounds.
  const Weight down(target.twice - 1), up(target.twice + 1);
  if (weight_set_contains(cls, down) && (target.twice > 0 || !weight_set_contains(cls, up)))
    return down;
  return up;
}

bool is_degenerate_class(const ReprClass& cls) {
  return cls.family == Family::Trivial ||
         (cls.family == Family::Discrete && std::abs(cls.twice_n) == 2);
}

namespace {

double ladder_coefficient(const ReprClass& cls, Weight m, Weight target, double mm) {
  if (!weight_set_contains(cls, m))
    throw DomainError("ladder coefficient requested at weight " + to_string(m) +
                      " outside the weight set of " + display_name(cls));
  if (!weight_set_contains(cls, target)) return 0.0;
  const double radicand = q_of(cls) + mm;
  if (std::abs(radicand) <= kRadicandClamp) return 0.0;
  if (radicand < 0.0)
    throw DomainError("negative ladder radicand at weight " + to_string(m));
  return std::sqrt(radicand);
}

}  // namespace

double alpha(const ReprClass& cls, Weight m) {
  return ladder_coefficient(cls, m, m.next(), m.m_m_plus_1());
}

double beta(const ReprClass& cls, Weight m) {
  return ladder_coefficient(cls, m, m.prev(), m.m_m_minus_1());
}

namespace {

std::string format_half(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  std::ostringstream os;
  os << 0.5 * twice;
  return os.str();
}

std::string format_real(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

double parse_real(const std::string& s, const std::string& what) {
  if (s.empty()) throw ParseError("missing value for " + what);
  char* end = nullptr;
  const double x = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(x))
    throw ParseError("cannot parse '" + s + "' as a real number for " + what);
  return x;
}

int parse_twice_half_integer(const std::string& s, const std::string& what) {
  const double x = parse_real(s, what);
  const double twice = 2.0 * x;
  if (std::nearbyint(twice) != twice || std::abs(twice) > 1e8)
    throw DomainError(what + " must be a half-integer, got '" + s + "'");
  return static_cast<int>(twice);
}

}  // namespace

std::string to_spec_string(const ReprClass& cls) {
  switch (cls.family) {
    case Family::Trivial:
      return "I";
    case Family::MockPlus:
      return "Vm:+";
    case Family::MockMinus:
      return "Vm:-";
    case Family::Discrete:
      return "U:" + format_half(cls.twice_n);
    case Family::Principal:
      return "Vp:" + format_half(cls.twice_j) + "," + format_real(cls.nu);
    case Family::Complementary:
      return "Vc:" + format_real(cls.sigma);
  }
  return "?";
}

ReprClass parse_spec_string(const std::string& text) {
  if (text == "I") return ReprClass::trivial();
  if (text == "Vm:+") return ReprClass::mock_plus();
  if (text == "Vm:-") return ReprClass::mock_minus();
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("unrecognized class '" + text + "'");
  const std::string head = text.substr(0, colon);
  const std::string body = text.substr(colon + 1);
  if (head == "U") return ReprClass::discrete(parse_twice_half_integer(body, "n"));
  if (head == "Vc" || head == "Vcomp") return ReprClass::complementary(parse_real(body, "sigma"));
  if (head == "Vp") {
    const auto comma = body.find(',');
    if (comma == std::string::npos) throw ParseError("expected 'Vp:j,nu', got '" + text + "'");
    const int twice_j = parse_twice_half_integer(body.substr(0, comma), "j");
    return ReprClass::principal(twice_j, parse_real(body.substr(comma + 1), "nu"));
  }
  throw ParseError("unrecognized class '" + text + "'");
}

std::string display_name(const ReprClass& cls) {
  switch (cls.family) {
    case Family::Trivial:
      return "I";
    case Family::MockPlus:
      return "V^{1/2,1/2}_+";
    case Family::MockMinus:
      return "V^{1/2,1/2}_-";
    case Family::Discrete: {
      const int t = cls.twice_n;
      const std::string n = (t % 2 == 0) ? std::to_string(t / 2) : std::to_string(t) + "/2";
      return "U^{" + n + "}";
    }
    case Family::Principal:
      return "V^{" + std::string(cls.twice_j ? "1/2" : "0") + ",1/2+" + format_real(cls.nu) + "i}";
    case Family::Complementary:
      return "V^{" + format_real(cls.sigma) + "}";
  }
  return "?";
}

}  // namespace leafcoh
