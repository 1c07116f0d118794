#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leafcoh/blocksolve.hpp"
#include "leafcoh/spectrum.hpp"

namespace leafcoh {

/// dim H^3 of the ideal complex restricted to one class.
struct H3Report {
  ReprClass cls;
  int dim = 0;
  /// "vanishing-differential" for I, "surjectivity-certificate" otherwise.
  std::string evidence;
  std::optional<SurjectivityReport> certificate;
};

/// Weights of 𝕄 with |m| <= 4, or the five weights nearest zero when fewer
/// than three qualify.
std::vector<Weight> default_probe_weights(const ReprClass& cls);

/// Throws InconclusiveError when a non-trivial class fails its certificate.
H3Report h3_restricted(const ReprClass& cls, const SolverOptions& opts = {});

/// Sum of multiplicity * dim over the spectrum. Throws SpectrumShapeError
/// unless the spectrum carries the trivial class exactly once with
/// multiplicity one.
int h3_global(const Spectrum& spec, const SolverOptions& opts = {});

// ---------------------------------------------------------------------------
// Exact sequences

enum class MapFact { Zero, Injective, Surjective, Iso, Rank };

struct ExactTerm {
  std::string name;
  std::optional<long> dim;
  /// Where a known dimension comes from; empty when unknown.
  std::string source;
};

struct ExactFact {
  std::size_t map = 0;  // map i goes from term i to term i+1
  MapFact fact = MapFact::Zero;
  long rank = 0;        // used when fact == Rank
  std::string source;
};

/// A finite exact sequence 0 -> T_0 -> T_1 -> ... -> T_{N-1} -> 0.
struct ExactSeq {
  std::vector<ExactTerm> terms;
  std::vector<std::string> map_names;  // size terms.size() - 1
  std::vector<ExactFact> facts;
};

struct ExactResolution {
  std::vector<std::optional<long>> dims;
  std::vector<std::optional<long>> ranks;
  /// Names of terms and maps left undetermined.
  std::vector<std::string> free;
  int iterations = 0;

  bool determined() const { return free.empty(); }
};

/// Fixed-point propagation of dim T_k = rank(in_k) + rank(out_k) and the map
/// facts. Throws ContradictionError naming the violated constraint.
ExactResolution propagate_exact(const ExactSeq& seq);

/// Alternating sum of dims; requires a fully determined resolution.
long alternating_sum(const ExactResolution& res);

/// Inputs of the twelve-term sequence H^k(I) -> H^k_dR -> H^k(F) -> H^{k+1}(I).
/// Named inputs may be left out to test which ones the deduction needs:
/// "ideal-degree-0", "minimality", "first-leafwise", "thom-gysin",
/// "restriction-injective", "invariant-currents", "leaf-dimension", "h3-ideal".
ExactSeq les_inputs(int genus, int h3_ideal, const std::vector<std::string>& omit = {});

struct LesResult {
  int genus = 0;
  int h3_ideal = 0;
  ExactSeq inputs;
  ExactResolution resolution;
};

/// Computes dim H^3(I) over the spectrum with h3_global, then propagates.
/// Throws DomainError for genus < 2.
LesResult les_table(int genus, const Spectrum& spec, const SolverOptions& opts = {},
                              const std::vector<std::string>& omit = {});

/// Four-row layout of the resolved sequence, ranks listed below.
std::string format_les_text(const LesResult& result);

}  // namespace leafcoh
