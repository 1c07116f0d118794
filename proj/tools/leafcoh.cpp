// leafcoh: command-line workbench for the Fourier-side computation of the
// ideal-complex cohomology of the parabolic orbit foliation on Γ\SL(2,R).
//
// Exit codes: 0 success, 2 usage or domain error, 3 certificate failure.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "leafcoh/blocksolve.hpp"
#include "leafcoh/cohomology.hpp"
#include "leafcoh/errors.hpp"
#include "leafcoh/json_io.hpp"
#include "leafcoh/spectrum.hpp"
#include "leafcoh/verify.hpp"

using nlohmann::json;
using namespace leafcoh;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCertificate = 3;

struct RunConfig {
  double tolerance = 1e-8;
  int window_cap = 4096;
  std::string output_format = "json";
  std::uint64_t seed = 1;
  bool no_timestamp = false;

  SolverOptions solver() const { return {tolerance, window_cap}; }
};

void check_config(const RunConfig& cfg) {
  if (!(cfg.tolerance > 0.0)) throw DomainError("--tol must be positive");
  const int cap = cfg.window_cap;
  if (cap < 16 || (cap & (cap - 1)) != 0)
    throw DomainError("--window-cap must be a power of two >= 16");
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void flatten_csv(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten_csv(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten_csv(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    std::string value = j.is_string() ? j.get<std::string>() : j.dump();
    if (value.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : value) quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
      value = quoted + "\"";
    }
    os << prefix << "," << value << "\n";
  }
}

/// Prints the result in the configured format. `text` is used for the text
/// format; when empty the JSON result is pretty-printed instead.
void emit(const RunConfig& cfg, const std::string& command, const json& result,
          const std::string& text = {}) {
  if (cfg.output_format == "text") {
    std::cout << (text.empty() ? result.dump(2) + "\n" : text);
    return;
  }
  json doc;
  doc["tool"] = "leafcoh";
  doc["version"] = LEAFCOH_VERSION;
  doc["command"] = command;
  doc["config"] = {{"tolerance", cfg.tolerance},
                   {"window_cap", cfg.window_cap},
                   {"output_format", cfg.output_format},
                   {"seed", cfg.seed}};
  if (!cfg.no_timestamp) doc["timestamp"] = utc_timestamp();
  doc["result"] = result;
  if (cfg.output_format == "csv") {
    std::cout << "key,value\n";
    flatten_csv(doc, "", std::cout);
  } else {
    std::cout << doc.dump(2) << "\n";
  }
}

int cmd_gamma(const RunConfig& cfg, int twice_m, double q) {
  const Weight m(twice_m);
  const double g = gamma(m, q);
  const double det = block_determinant(m, q);
  const double rel = std::abs(g - det) / (1.0 + std::abs(g));
  const bool ok = rel <= 1e-9;
  std::ostringstream text;
  text.precision(17);
  text << "m = " << to_string(m) << ", q = " << q << "\n"
       << "gamma (closed form)   = " << g << "\n"
       << "det (block matrix)    = " << det << "\n"
       << "relative error        = " << rel << (ok ? "  [ok]" : "  [FAIL]") << "\n";
  emit(cfg, "gamma",
       {{"twice_m", twice_m}, {"q", q}, {"gamma", g}, {"determinant", det},
        {"relative_error", rel}, {"ok", ok}},
       text.str());
  return ok ? kExitOk : kExitCertificate;
}

int cmd_h3(const RunConfig& cfg, const std::string& spec) {
  const ReprClass cls = parse_spec_string(spec);
  const H3Report r = h3_restricted(cls, cfg.solver());
  std::ostringstream text;
  text << display_name(cls) << ": dim H^3 = " << r.dim << " (" << r.evidence;
  if (r.certificate)
    text << ", " << r.certificate->probes.size() << " probes, worst residual "
         << r.certificate->worst_residual;
  text << ")\n";
  emit(cfg, "h3", to_json(r), text.str());
  return kExitOk;
}

int cmd_les(const RunConfig& cfg, int genus, const std::string& spectrum_file,
            const std::vector<std::string>& omit) {
  if (genus < 2) throw DomainError("--genus must be at least 2");
  const Spectrum spec = spectrum_file.empty() ? generate(cfg.seed, 8) : read_spectrum(spectrum_file);
  const LesResult r = les_table(genus, spec, cfg.solver(), omit);
  json result = to_json(r);
  result["spectrum_label"] = spec.label;
  emit(cfg, "les", result, format_les_text(r));
  return r.resolution.determined() ? kExitOk : kExitCertificate;
}

int cmd_solve(const RunConfig& cfg, const std::string& spec, const std::string& g_file) {
  const ReprClass cls = parse_spec_string(spec);
  const CoeffSeq g = read_coeff_file(g_file, cls);
  if (cls.family == Family::Trivial) {
    std::cerr << "no certificate: the differential vanishes on the trivial class\n";
    emit(cfg, "solve", {{"class", to_json(cls)}, {"certificate", false},
                        {"reason", "differential vanishes on the trivial class"}});
    return g.is_zero() ? kExitOk : kExitCertificate;
  }
  try {
    const PreimageResult r = solve_preimage(cls, g, cfg.solver());
    json result = to_json(r);
    result["class"] = to_json(cls);
    result["certificate"] = true;
    emit(cfg, "solve", result);
    return kExitOk;
  } catch (const NoCertificateError& err) {
    std::cerr << err.what() << "\n";
    emit(cfg, "solve", {{"class", to_json(cls)}, {"certificate", false},
                        {"best_residual", err.best_residual()},
                        {"conditioning", err.conditioning()}});
    return kExitCertificate;
  }
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  const std::vector<CheckResult> results = run_suite(suite, cfg.seed);
  json checks = json::array();
  std::ostringstream text;
  std::size_t passed = 0;
  for (const auto& c : results) {
    passed += c.passed;
    checks.push_back({{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    text << (c.passed ? "PASS " : "FAIL ") << c.suite << ": " << c.name;
    if (!c.detail.empty()) text << " -- " << c.detail;
    text << "\n";
  }
  text << passed << "/" << results.size() << " checks passed\n";
  emit(cfg, "verify",
       {{"suite", suite}, {"passed", passed}, {"total", results.size()}, {"checks", checks}},
       text.str());
  return passed == results.size() ? kExitOk : kExitCertificate;
}

int cmd_spectrum_validate(const RunConfig& cfg, const std::string& file, bool full) {
  const Spectrum spec = read_spectrum(file);
  const ValidationReport r = validate(spec, {.require_full = full});
  std::ostringstream text;
  text << spec.label << ": " << (r.ok() ? "ok" : "INVALID") << "\n";
  for (const auto& v : r.violations) text << "  [" << v.kind << "] " << v.message << "\n";
  emit(cfg, "spectrum validate", to_json(r), text.str());
  return r.ok() ? kExitOk : kExitCertificate;
}

int cmd_spectrum_generate(const RunConfig& cfg, int size, const std::string& file) {
  const Spectrum spec = generate(cfg.seed, size);
  if (file.empty()) {
    std::cout << spectrum_to_json(spec);
  } else {
    write_spectrum(spec, file);
    emit(cfg, "spectrum generate",
         {{"file", file}, {"label", spec.label}, {"entries", spec.entries.size()}});
  }
  return kExitOk;
}

int cmd_delta(const RunConfig& cfg, const std::string& file, bool filter) {
  Spectrum spec = read_spectrum(file);
  if (filter) spec = without_degenerate_classes(spec);
  const DeltaReport r = gamma_lower_bound(spec);
  std::ostringstream text;
  text.precision(17);
  text << "delta = " << r.delta << " attained by " << display_name(r.witness) << " at m = "
       << to_string(r.witness_m) << " (" << r.windows_scanned << " windows scanned)\n";
  emit(cfg, "delta", to_json(r), text.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"leafcoh: weight-module workbench for ideal-complex cohomology on Γ\\SL(2,R)"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--tol", cfg.tolerance, "residual tolerance for preimage certificates")
      ->capture_default_str();
  app.add_option("--window-cap", cfg.window_cap, "maximum solver window (power of two >= 16)")
      ->envname("LEAFCOH_MAX_WINDOW")
      ->capture_default_str();
  app.add_option("--format", cfg.output_format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for generated spectra and verify suites")
      ->capture_default_str();
  app.add_flag("--no-timestamp", cfg.no_timestamp, "omit the timestamp from JSON output");

  int twice_m = 0;
  double q = 0.0;
  auto* gamma_cmd = app.add_subcommand("gamma", "closed-form block determinant vs. brute force");
  gamma_cmd->add_option("--m", twice_m, "window start as twice the weight")->required();
  gamma_cmd->add_option("--q", q, "class parameter q")->required();

  std::string class_spec;
  auto* h3_cmd = app.add_subcommand("h3", "dim H^3 of the ideal complex on one class");
  h3_cmd->add_option("--class", class_spec, "I | U:±n | Vp:j,nu | Vm:+ | Vm:- | Vc:sigma")
      ->required();

  int genus = 0;
  std::string les_spectrum;
  std::vector<std::string> omit;
  auto* les_cmd = app.add_subcommand("les", "long exact sequence table for a quotient of genus g");
  les_cmd->add_option("--genus", genus, "genus of the quotient surface (>= 2)")->required();
  les_cmd->add_option("--spectrum", les_spectrum, "spectrum file for dim H^3(I)");
  les_cmd->add_option("--omit", omit, "drop a named input from the deduction");

  std::string g_file;
  auto* solve_cmd = app.add_subcommand("solve", "least-squares preimage of a 3-form");
  solve_cmd->add_option("--class", class_spec, "class spec string")->required();
  solve_cmd->add_option("--g", g_file, "coefficient file for g")->required();

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run an invariant suite");
  verify_cmd->add_option("--suite", suite, "repcore | leafdiff | blocksolve | cohomology | sobolev | all")
      ->capture_default_str();

  auto* spectrum_cmd = app.add_subcommand("spectrum", "spectrum files");
  spectrum_cmd->require_subcommand(1);
  std::string spectrum_file;
  bool full = false;
  auto* validate_cmd = spectrum_cmd->add_subcommand("validate", "validate a spectrum file");
  validate_cmd->add_option("--file", spectrum_file, "spectrum JSON file")->required();
  validate_cmd->add_flag("--full", full, "require exactly one trivial entry of multiplicity 1");
  int size = 10;
  auto* generate_cmd = spectrum_cmd->add_subcommand("generate", "generate a synthetic spectrum");
  generate_cmd->add_option("--size", size, "number of entries")->capture_default_str();
  generate_cmd->add_option("--file", spectrum_file, "output file (stdout when omitted)");

  bool filter = false;
  auto* delta_cmd = app.add_subcommand("delta", "uniform lower bound of |gamma| over a spectrum");
  delta_cmd->add_option("--spectrum", spectrum_file, "spectrum JSON file")->required();
  delta_cmd->add_flag("--filter-excluded", filter, "drop I, U^{1}, U^{-1} before scanning");

  for (auto* sub : {gamma_cmd, h3_cmd, les_cmd, solve_cmd, verify_cmd, spectrum_cmd, delta_cmd})
    sub->fallthrough();
  validate_cmd->fallthrough();
  generate_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    check_config(cfg);
    if (*gamma_cmd) return cmd_gamma(cfg, twice_m, q);
    if (*h3_cmd) return cmd_h3(cfg, class_spec);
    if (*les_cmd) return cmd_les(cfg, genus, les_spectrum, omit);
    if (*solve_cmd) return cmd_solve(cfg, class_spec, g_file);
    if (*verify_cmd) return cmd_verify(cfg, suite);
    if (*validate_cmd) return cmd_spectrum_validate(cfg, spectrum_file, full);
    if (*generate_cmd) return cmd_spectrum_generate(cfg, size, spectrum_file);
    if (*delta_cmd) return cmd_delta(cfg, spectrum_file, filter);
  } catch (const InconclusiveError& e) {
    std::cerr << "leafcoh: " << e.what() << "\n";
    return kExitCertificate;
  } catch (const NoCertificateError& e) {
    std::cerr << "leafcoh: " << e.what() << "\n";
    return kExitCertificate;
  } catch (const DegenerateSpectrumError& e) {
    std::cerr << "leafcoh: " << e.what() << "\n";
    return kExitCertificate;
  } catch (const Error& e) {
    std::cerr << "leafcoh: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "leafcoh: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
