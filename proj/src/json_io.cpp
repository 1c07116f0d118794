#include "leafcoh/json_io.hpp"

#include <fstream>
#include <sstream>

namespace leafcoh {

using nlohmann::json;

json coeffs_to_json(const CoeffSeq& v) {
  json out = json::array();
  for (const auto& [m, c] : v.entries()) {
    if (c == Complex{}) continue;
    out.push_back({{"twice_m", m.twice}, {"re", c.real()}, {"im", c.imag()}});
  }
  return out;
}

CoeffSeq coeffs_from_json(const json& array, const ReprClass& cls) {
  if (!array.is_array()) throw ParseError("coefficients: expected a JSON array");
  CoeffSeq v(cls);
  for (std::size_t i = 0; i < array.size(); ++i) {
    const json& rec = array[i];
    const std::string where = "coefficients[" + std::to_string(i) + "]";
    if (!rec.is_object()) throw ParseError(where + ": expected an object");
    for (const auto& [key, value] : rec.items())
      if (key != "twice_m" && key != "re" && key != "im")
        throw ParseError(where + ": unknown field '" + key + "'");
    if (!rec.contains("twice_m") || !rec["twice_m"].is_number_integer())
      throw ParseError(where + ": 'twice_m' must be an integer");
    const Weight m(rec["twice_m"].get<int>());
    double re = 0.0, im = 0.0;
    if (rec.contains("re")) {
      if (!rec["re"].is_number()) throw ParseError(where + ".re: expected a number");
      re = rec["re"].get<double>();
    }
    if (rec.contains("im")) {
      if (!rec["im"].is_number()) throw ParseError(where + ".im: expected a number");
      im = rec["im"].get<double>();
    }
    if (!weight_set_contains(cls, m))
      throw ParseError(where + ": weight " + to_string(m) + " is outside the weight set of " +
                       display_name(cls));
    v.accumulate(m, Complex(re, im));
  }
  return v;
}

CoeffSeq read_coeff_file(const std::string& path, const ReprClass& cls) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open coefficient file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::parse_error& err) {
    throw ParseError(path + ": " + err.what());
  }
  return coeffs_from_json(doc, cls);
}

json to_json(const ReprClass& cls) {
  return {{"spec", to_spec_string(cls)}, {"name", display_name(cls)}, {"q", q_of(cls)}};
}

json to_json(const PreimageResult& r) {
  return {{"window", {{"lo_twice_m", r.window.lo.twice}, {"hi_twice_m", r.window.hi.twice}}},
          {"residual", r.residual},
          {"conditioning", r.conditioning},
          {"expansions", r.expansions},
          {"gauge", "rescaled"},
          {"f1", coeffs_to_json(r.w.f1)},
          {"f2", coeffs_to_json(r.w.f2)}};
}

json to_json(const SurjectivityReport& r) {
  json probes = json::array();
  for (const auto& p : r.probes)
    probes.push_back({{"twice_m", p.m.twice},
                      {"residual", p.result.residual},
                      {"conditioning", p.result.conditioning},
                      {"window",
                       {{"lo_twice_m", p.result.window.lo.twice},
                        {"hi_twice_m", p.result.window.hi.twice}}}});
  return {{"class", to_json(r.cls)},
          {"tolerance", r.tol},
          {"granted", r.granted},
          {"worst_residual", r.worst_residual},
          {"probes", probes}};
}

json to_json(const H3Report& r) {
  json j{{"class", to_json(r.cls)}, {"dim", r.dim}, {"evidence", r.evidence}};
  j["certificate"] = r.certificate ? to_json(*r.certificate) : json(nullptr);
  return j;
}

json to_json(const DeltaReport& r) {
  return {{"delta", r.delta},
          {"witness", {{"class", to_json(r.witness)}, {"twice_m", r.witness_m.twice}, {"q", r.witness_q}}},
          {"windows_scanned", r.windows_scanned}};
}

json to_json(const ValidationReport& r) {
  json v = json::array();
  for (const auto& x : r.violations)
    v.push_back({{"kind", x.kind}, {"message", x.message}, {"entries", x.entries}});
  return {{"ok", r.ok()}, {"violations", v}};
}

json to_json(const LesResult& r) {
  const auto& res = r.resolution;
  json terms = json::array();
  for (std::size_t k = 0; k < r.inputs.terms.size(); ++k) {
    const auto& t = r.inputs.terms[k];
    terms.push_back({{"name", t.name},
                     {"dim", res.dims[k] ? json(*res.dims[k]) : json(nullptr)},
                     {"input", t.dim.has_value()},
                     {"source", t.dim ? json(t.source) : json("derived")}});
  }
  json maps = json::array();
  for (std::size_t i = 0; i < r.inputs.map_names.size(); ++i)
    maps.push_back({{"name", r.inputs.map_names[i]},
                    {"rank", res.ranks[i] ? json(*res.ranks[i]) : json(nullptr)}});
  json facts = json::array();
  for (const auto& f : r.inputs.facts)
    facts.push_back({{"map", r.inputs.map_names[f.map]}, {"source", f.source}});
  json dims = json::array();
  for (const auto& d : res.dims) dims.push_back(d ? json(*d) : json(nullptr));
  json j{{"genus", r.genus},
         {"h3_ideal", r.h3_ideal},
         {"determined", res.determined()},
         {"dims", dims},
         {"terms", terms},
         {"maps", maps},
         {"facts", facts},
         {"undetermined", res.free}};
  j["alternating_sum"] = res.determined() ? json(alternating_sum(res)) : json(nullptr);
  return j;
}

}  // namespace leafcoh
