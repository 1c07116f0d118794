#include "leafcoh/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "leafcoh/errors.hpp"

namespace leafcoh {

using nlohmann::json;

namespace {

bool same_q(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)); }

std::string entry_label(const Spectrum& spec, std::size_t i) {
  return "entry " + std::to_string(i) + " (" + display_name(spec.entries[i].cls) + ")";
}

}  // namespace

ValidationReport validate(const Spectrum& spec, ValidationOptions opts) {
  ValidationReport report;
  auto add = [&](std::string kind, std::string message, std::vector<std::size_t> idx) {
    report.violations.push_back({std::move(kind), std::move(message), std::move(idx)});
  };

  if (!(spec.q_gap > 0.0) || !std::isfinite(spec.q_gap))
    add("gap-declaration", "declared q gap must be a finite positive number", {});

  std::vector<std::pair<double, std::size_t>> qs;
  for (std::size_t i = 0; i < spec.entries.size(); ++i) {
    const auto& e = spec.entries[i];
    if (e.multiplicity < 1)
      add("multiplicity", entry_label(spec, i) + ": multiplicity must be a positive integer", {i});
    try {
      qs.emplace_back(q_of(e.cls), i);
    } catch (const DomainError& err) {
      add("parameter", entry_label(spec, i) + ": " + err.what(), {i});
    }
    for (std::size_t k = 0; k < i; ++k)
      if (spec.entries[k].cls == e.cls)
        add("duplicate",
            entry_label(spec, i) + " repeats entry " + std::to_string(k) +
                "; merge them into one multiplicity",
            {k, i});
  }

  if (spec.q_gap > 0.0) {
    std::sort(qs.begin(), qs.end());
    for (std::size_t a = 0; a + 1 < qs.size(); ++a) {
      const auto& [qa, ia] = qs[a];
      const auto& [qb, ib] = qs[a + 1];
      if (same_q(qa, qb)) continue;
      if (qb - qa < spec.q_gap) {
        std::ostringstream os;
        os.precision(12);
        os << "q values " << qa << " and " << qb << " are closer than the declared gap "
           << spec.q_gap;
        add("q-gap", os.str(), {std::min(ia, ib), std::max(ia, ib)});
      }
    }
  }

  if (opts.require_full) {
    std::vector<std::size_t> trivial;
    for (std::size_t i = 0; i < spec.entries.size(); ++i)
      if (spec.entries[i].cls.family == Family::Trivial) trivial.push_back(i);
    if (trivial.size() != 1)
      add("full", "a full spectrum needs exactly one trivial entry, found " +
                      std::to_string(trivial.size()),
          trivial);
    else if (spec.entries[trivial.front()].multiplicity != 1)
      add("full", "the trivial class must have multiplicity 1 in a full spectrum", trivial);
  }
  return report;
}

namespace {

/// Uniform double in [0, 1) from the top 53 bits; stable across standard libraries.
double uniform01(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

ReprClass random_class(std::mt19937_64& rng) {
  switch (uniform_int(rng, 0, 5)) {
    case 0:
    case 1: {
      const int twice_n = uniform_int(rng, 2, 12);
      return ReprClass::discrete(uniform_int(rng, 0, 1) ? twice_n : -twice_n);
    }
    case 2:
    case 3: {
      const double nu = std::round(uniform01(rng) * 4000.0) / 1000.0;
      const int twice_j = (nu == 0.0) ? 0 : uniform_int(rng, 0, 1);
      return ReprClass::principal(twice_j, nu);
    }
    case 4:
      return ReprClass::complementary(0.5 + double(uniform_int(rng, 1, 499)) / 1000.0);
    default:
      return uniform_int(rng, 0, 1) ? ReprClass::mock_plus() : ReprClass::mock_minus();
  }
}

}  // namespace

Spectrum generate(std::uint64_t seed, int size) {
  if (size < 1) throw DomainError("spectrum size must be at least 1");
  Spectrum spec;
  spec.label = "generated seed=" + std::to_string(seed) + " size=" + std::to_string(size);
  spec.q_gap = 0.05;
  spec.entries.push_back({ReprClass::trivial(), 1});

  std::mt19937_64 rng(seed);
  long attempts = 0;
  while (static_cast<int>(spec.entries.size()) < size) {
    if (++attempts > 100000L * size) throw Error("spectrum generator failed to converge");
    const ReprClass cls = random_class(rng);
    const int mult = uniform_int(rng, 1, 4);
    const double q = q_of(cls);
    const bool fits = std::none_of(spec.entries.begin(), spec.entries.end(), [&](const auto& e) {
      const double qe = q_of(e.cls);
      return e.cls == cls || (!same_q(q, qe) && std::abs(q - qe) < spec.q_gap);
    });
    if (fits) spec.entries.push_back({cls, mult});
  }
  return spec;
}

Spectrum without_degenerate_classes(const Spectrum& spec) {
  Spectrum out = spec;
  std::erase_if(out.entries, [](const SpectrumEntry& e) { return is_degenerate_class(e.cls); });
  return out;
}

namespace {

[[noreturn]] void field_error(const std::string& where, const std::string& msg) {
  throw ParseError(where + ": " + msg);
}

double number_field(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) field_error(where, std::string("missing field '") + key + "'");
  if (!it->is_number()) field_error(where + "." + key, "expected a number");
  return it->get<double>();
}

int integer_field(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) field_error(where, std::string("missing field '") + key + "'");
  if (it->is_number_integer()) return it->get<int>();
  if (it->is_number_float()) {
    const double x = it->get<double>();
    if (std::nearbyint(x) == x) return static_cast<int>(x);
  }
  field_error(where + "." + key, "expected an integer (twice-values are integers), got " +
                                     it->dump());
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) field_error(where, "unknown field '" + key + "'");
}

ReprClass parse_entry_class(const json& e, const std::string& where) {
  if (!e.contains("class") || !e["class"].is_string())
    field_error(where, "missing string field 'class'");
  const std::string tag = e["class"].get<std::string>();
  try {
    if (tag == "I") {
      reject_unknown(e, {"class", "mult"}, where);
      return ReprClass::trivial();
    }
    if (tag == "Vmock+") {
      reject_unknown(e, {"class", "mult"}, where);
      return ReprClass::mock_plus();
    }
    if (tag == "Vmock-") {
      reject_unknown(e, {"class", "mult"}, where);
      return ReprClass::mock_minus();
    }
    if (tag == "U") {
      reject_unknown(e, {"class", "n", "mult"}, where);
      return ReprClass::discrete(integer_field(e, "n", where));
    }
    if (tag == "Vprincipal") {
      reject_unknown(e, {"class", "j", "nu", "mult"}, where);
      return ReprClass::principal(integer_field(e, "j", where), number_field(e, "nu", where));
    }
    if (tag == "Vcomp") {
      reject_unknown(e, {"class", "sigma", "mult"}, where);
      return ReprClass::complementary(number_field(e, "sigma", where));
    }
  } catch (const DomainError& err) {
    field_error(where, std::string("parameter out of range: ") + err.what());
  }
  field_error(where + ".class", "unknown class tag '" + tag + "'");
}

json entry_to_json(const SpectrumEntry& e) {
  json j;
  const ReprClass& c = e.cls;
  switch (c.family) {
    case Family::Trivial:
      j["class"] = "I";
      break;
    case Family::MockPlus:
      j["class"] = "Vmock+";
      break;
    case Family::MockMinus:
      j["class"] = "Vmock-";
      break;
    case Family::Discrete:
      j["class"] = "U";
      j["n"] = c.twice_n;
      break;
    case Family::Principal:
      j["class"] = "Vprincipal";
      j["j"] = c.twice_j;
      j["nu"] = c.nu;
      break;
    case Family::Complementary:
      j["class"] = "Vcomp";
      j["sigma"] = c.sigma;
      break;
  }
  j["mult"] = e.multiplicity;
  return j;
}

}  // namespace

Spectrum parse_spectrum_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("malformed spectrum JSON: ") + err.what());
  }
  if (!doc.is_object()) throw ParseError("spectrum: top level must be an object");
  reject_unknown(doc, {"label", "q_gap", "entries"}, "spectrum");
  Spectrum spec;
  if (!doc.contains("label") || !doc["label"].is_string())
    field_error("spectrum", "missing string field 'label'");
  spec.label = doc["label"].get<std::string>();
  spec.q_gap = number_field(doc, "q_gap", "spectrum");
  if (!doc.contains("entries") || !doc["entries"].is_array())
    field_error("spectrum", "missing array field 'entries'");
  const json& entries = doc["entries"];
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string where = "entries[" + std::to_string(i) + "]";
    const json& e = entries[i];
    if (!e.is_object()) field_error(where, "expected an object");
    SpectrumEntry entry;
    entry.cls = parse_entry_class(e, where);
    entry.multiplicity = integer_field(e, "mult", where);
    spec.entries.push_back(entry);
  }
  return spec;
}

std::string spectrum_to_json(const Spectrum& spec) {
  json doc;
  doc["label"] = spec.label;
  doc["q_gap"] = spec.q_gap;
  doc["entries"] = json::array();
  for (const auto& e : spec.entries) doc["entries"].push_back(entry_to_json(e));
  return doc.dump(2) + "\n";
}

Spectrum read_spectrum(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open spectrum file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_spectrum_json(buf.str());
  } catch (const ParseError& err) {
    throw ParseError(path.string() + ": " + err.what());
  }
}

void write_spectrum(const Spectrum& spec, const std::filesystem::path& path) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << spectrum_to_json(spec);
    if (!out.flush()) throw Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace leafcoh
