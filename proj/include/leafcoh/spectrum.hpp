#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "leafcoh/repr_class.hpp"

namespace leafcoh {

struct SpectrumEntry {
  ReprClass cls;
  int multiplicity = 1;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Finite model of the decomposition of L^2(Γ\G) into irreducibles.
/// Distinct q values must be at least `q_gap` apart; this is the finite
/// stand-in for "the set of q values has no accumulation points".
struct Spectrum {
  std::string label;
  double q_gap = 0.05;
  std::vector<SpectrumEntry> entries;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

struct ValidationOptions {
  /// Require exactly one trivial entry with multiplicity one (constants on a
  /// connected quotient).
  bool require_full = false;
};

struct Violation {
  std::string kind;  // "parameter", "multiplicity", "q-gap", "duplicate", "gap-declaration", "full"
  std::string message;
  std::vector<std::size_t> entries;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const Spectrum& spec, ValidationOptions opts = {});

/// Deterministic synthetic spectrum of `size` entries: the trivial class plus
/// random classes whose q values keep a gap of at least 0.05.
Spectrum generate(std::uint64_t seed, int size);

/// Drops I, U^{1} and U^{-1}.
Spectrum without_degenerate_classes(const Spectrum& spec);

Spectrum read_spectrum(const std::filesystem::path& path);
/// Writes through a temporary file and renames it into place.
void write_spectrum(const Spectrum& spec, const std::filesystem::path& path);

/// Parses/serializes the JSON document form; see README for the schema.
Spectrum parse_spectrum_json(const std::string& text);
std::string spectrum_to_json(const Spectrum& spec);

}  // namespace leafcoh
