#include "leafcoh/cohomology.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace leafcoh {

std::vector<Weight> default_probe_weights(const ReprClass& cls) {
  std::vector<Weight> out;
  for (int t = -8; t <= 8; ++t)
    if (weight_set_contains(cls, Weight(t))) out.push_back(Weight(t));
  if (out.size() >= 3) return out;
  out.clear();
  const WeightBounds b = weight_bounds(cls);
  if (b.has_lower && !b.has_upper)
    for (int k = 0; k < 5; ++k) out.push_back(b.lower.shifted(k));
  else if (b.has_upper && !b.has_lower)
    for (int k = 4; k >= 0; --k) out.push_back(b.upper.shifted(-k));
  else
    for (int t = -8; t <= 8; ++t)
      if (weight_set_contains(cls, Weight(t))) out.push_back(Weight(t));
  return out;
}

H3Report h3_restricted(const ReprClass& cls, const SolverOptions& opts) {
  check_params(cls);
  if (!(opts.tol > 0.0)) throw DomainError("tolerance must be positive");
  H3Report report;
  report.cls = cls;
  if (cls.family == Family::Trivial) {
    report.dim = 1;
    report.evidence = "vanishing-differential";
    return report;
  }
  try {
    SurjectivityReport cert = surjectivity_certificate(cls, default_probe_weights(cls), opts);
    if (!cert.granted)
      throw InconclusiveError("surjectivity certificate not granted for " + display_name(cls));
    report.dim = 0;
    report.evidence = "surjectivity-certificate";
    report.certificate = std::move(cert);
  } catch (const NoCertificateError& err) {
    throw InconclusiveError(std::string("H^3 inconclusive: ") + err.what());
  }
  return report;
}

int h3_global(const Spectrum& spec, const SolverOptions& opts) {
  std::size_t trivial = 0;
  for (const auto& e : spec.entries)
    if (e.cls.family == Family::Trivial) {
      ++trivial;
      if (e.multiplicity != 1)
        throw SpectrumShapeError("the trivial class must occur with multiplicity 1");
    }
  if (trivial != 1)
    throw SpectrumShapeError("spectrum must contain the trivial class exactly once, found " +
                             std::to_string(trivial));
  const ValidationReport v = validate(spec, {.require_full = true});
  if (!v.ok()) throw DomainError("spectrum fails validation: " + v.violations.front().message);

  int total = 0;
  for (const auto& e : spec.entries) total += e.multiplicity * h3_restricted(e.cls, opts).dim;
  return total;
}

// ---------------------------------------------------------------------------

namespace {

/// sum coef * var = rhs over dims (index < N) and ranks (index >= N).
struct LinearConstraint {
  std::vector<std::pair<long, std::size_t>> terms;
  long rhs = 0;
  std::string label;
};

}  // namespace

ExactResolution propagate_exact(const ExactSeq& seq) {
  const std::size_t n = seq.terms.size();
  if (n == 0) return {};
  if (seq.map_names.size() + 1 != n)
    throw DomainError("exact sequence needs one map name per consecutive pair of terms");

  const std::size_t nvars = n + (n - 1);
  auto rank_var = [n](std::size_t i) { return n + i; };
  std::vector<std::optional<long>> value(nvars);
  std::vector<LinearConstraint> constraints;

  for (std::size_t k = 0; k < n; ++k) {
    LinearConstraint c{{{1, k}}, 0, "exactness at " + seq.terms[k].name};
    if (k > 0) c.terms.emplace_back(-1, rank_var(k - 1));
    if (k + 1 < n) c.terms.emplace_back(-1, rank_var(k));
    constraints.push_back(std::move(c));
    if (seq.terms[k].dim) {
      if (*seq.terms[k].dim < 0)
        throw ContradictionError("negative dimension given for " + seq.terms[k].name);
      constraints.push_back({{{1, k}}, *seq.terms[k].dim, "known dim " + seq.terms[k].name});
    }
  }
  for (const ExactFact& f : seq.facts) {
    if (f.map + 1 >= n) throw DomainError("fact refers to a map outside the sequence");
    const std::size_t r = rank_var(f.map);
    const std::string& name = seq.map_names[f.map];
    switch (f.fact) {
      case MapFact::Zero:
        constraints.push_back({{{1, r}}, 0, name + " is zero"});
        break;
      case MapFact::Injective:
        constraints.push_back({{{1, r}, {-1, f.map}}, 0, name + " is injective"});
        break;
      case MapFact::Surjective:
        constraints.push_back({{{1, r}, {-1, f.map + 1}}, 0, name + " is surjective"});
        break;
      case MapFact::Iso:
        constraints.push_back({{{1, r}, {-1, f.map}}, 0, name + " is an isomorphism (injective)"});
        constraints.push_back(
            {{{1, r}, {-1, f.map + 1}}, 0, name + " is an isomorphism (surjective)"});
        break;
      case MapFact::Rank:
        if (f.rank < 0) throw ContradictionError("negative rank given for " + name);
        constraints.push_back({{{1, r}}, f.rank, name + " has rank " + std::to_string(f.rank)});
        break;
    }
  }

  auto var_name = [&](std::size_t v) {
    return v < n ? "dim " + seq.terms[v].name : "rank " + seq.map_names[v - n];
  };

  ExactResolution res;
  bool changed = true;
  while (changed) {
    changed = false;
    ++res.iterations;
    for (const LinearConstraint& c : constraints) {
      long known = 0;
      std::size_t unknown_count = 0;
      std::pair<long, std::size_t> unknown{0, 0};
      for (const auto& t : c.terms) {
        if (value[t.second])
          known += t.first * *value[t.second];
        else {
          ++unknown_count;
          unknown = t;
        }
      }
      if (unknown_count == 0) {
        if (known != c.rhs) throw ContradictionError("violated constraint: " + c.label);
      } else if (unknown_count == 1) {
        const long numerator = c.rhs - known;
        if (numerator % unknown.first != 0)
          throw ContradictionError("non-integral solution forced by " + c.label);
        const long v = numerator / unknown.first;
        if (v < 0)
          throw ContradictionError(c.label + " forces negative " + var_name(unknown.second));
        value[unknown.second] = v;
        changed = true;
      }
    }
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto& r = value[rank_var(i)];
    if (!r) continue;
    for (const std::size_t end : {i, i + 1})
      if (value[end] && *r > *value[end])
        throw ContradictionError("rank of " + seq.map_names[i] + " exceeds dim " +
                                 seq.terms[end].name);
  }

  res.dims.assign(value.begin(), value.begin() + static_cast<long>(n));
  res.ranks.assign(value.begin() + static_cast<long>(n), value.end());
  for (std::size_t v = 0; v < nvars; ++v)
    if (!value[v]) res.free.push_back(var_name(v));
  return res;
}

long alternating_sum(const ExactResolution& res) {
  if (!res.determined()) throw DomainError("alternating sum needs a fully determined sequence");
  long s = 0;
  for (std::size_t k = 0; k < res.dims.size(); ++k) s += (k % 2 ? -1 : 1) * *res.dims[k];
  return s;
}

ExactSeq les_inputs(int genus, int h3_ideal, const std::vector<std::string>& omit) {
  if (genus < 2) throw DomainError("genus of the quotient surface must be at least 2");
  auto keep = [&](const char* name) {
    return std::find(omit.begin(), omit.end(), name) == omit.end();
  };
  const long g2 = 2L * genus;

  ExactSeq seq;
  for (int k = 0; k <= 3; ++k) {
    const std::string d = std::to_string(k);
    seq.terms.push_back({"H" + d + "(I)", std::nullopt, ""});
    seq.terms.push_back({"H" + d + "_dR", std::nullopt, ""});
    seq.terms.push_back({"H" + d + "(F)", std::nullopt, ""});
  }
  for (int k = 0; k <= 3; ++k) {
    const std::string d = std::to_string(k);
    seq.map_names.push_back("i" + d);
    seq.map_names.push_back("r" + d);
    if (k < 3) seq.map_names.push_back("delta" + d);
  }

  auto set_dim = [&](std::size_t idx, long dim, std::string source) {
    seq.terms[idx].dim = dim;
    seq.terms[idx].source = std::move(source);
  };
  if (keep("ideal-degree-0")) set_dim(0, 0, "structural: the ideal complex has no 0-forms");
  if (keep("minimality")) set_dim(2, 1, "cited: the orbit foliation is minimal");
  if (keep("first-leafwise"))
    set_dim(5, g2 + 1, "cited: H1(F) = H1_dR + H1_Lie(p), dim H1_Lie(p) = 1");
  if (keep("thom-gysin")) {
    const std::string src = "cited: Thom-Gysin sequence of the circle bundle";
    set_dim(1, 1, src);
    set_dim(4, g2, src);
    set_dim(7, g2, src);
    set_dim(10, 1, src);
  }
  if (keep("invariant-currents"))
    set_dim(8, g2, "cited: invariant transverse 0-currents have dimension 2g");
  if (keep("leaf-dimension")) set_dim(11, 0, "structural: leaves are 2-dimensional");
  if (keep("h3-ideal")) set_dim(9, h3_ideal, "computed: h3_global over the spectrum");
  if (keep("restriction-injective"))
    seq.facts.push_back({4, MapFact::Injective, 0, "cited: consequence of the H1(F) formula"});
  return seq;
}

LesResult les_table(int genus, const Spectrum& spec, const SolverOptions& opts,
                              const std::vector<std::string>& omit) {
  if (genus < 2) throw DomainError("genus of the quotient surface must be at least 2");
  LesResult r;
  r.genus = genus;
  r.h3_ideal = h3_global(spec, opts);
  r.inputs = les_inputs(genus, r.h3_ideal, omit);
  r.resolution = propagate_exact(r.inputs);
  return r;
}

namespace {

std::string space(const std::optional<long>& dim) {
  if (!dim) return "?";
  if (*dim == 0) return "0";
  if (*dim == 1) return "C";
  return "C^" + std::to_string(*dim);
}

}  // namespace

std::string format_les_text(const LesResult& result) {
  const auto& res = result.resolution;
  const auto& names = result.inputs.map_names;
  std::ostringstream os;
  for (int row = 0; row < 4; ++row) {
    const std::size_t t = 3 * static_cast<std::size_t>(row);
    if (row == 0)
      os << "0 --> ";
    else
      os << "  --" << names[t - 1] << "--> ";
    os << space(res.dims[t]) << " --" << names[t] << "--> " << space(res.dims[t + 1]) << " --"
       << names[t + 1] << "--> " << space(res.dims[t + 2]);
    if (row == 3) os << " --> 0";
    os << "\n";
  }
  os << "\nranks:";
  for (std::size_t i = 0; i < names.size(); ++i)
    os << " " << names[i] << "=" << (res.ranks[i] ? std::to_string(*res.ranks[i]) : "?");
  os << "\n";
  if (!res.determined()) {
    os << "undetermined:";
    for (const auto& f : res.free) os << " [" << f << "]";
    os << "\n";
  }
  return os.str();
}

}  // namespace leafcoh
