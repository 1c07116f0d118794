#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "leafcoh/json_io.hpp"
#include "leafcoh/spectrum.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
  json doc() const { return json::parse(out); }
};

Run run(const std::string& args, const std::string& env = {}) {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" LEAFCOH_CLI "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("leafcoh_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content) const {
    std::ofstream(path / name) << content;
    return (path / name).string();
  }
};

}  // namespace

TEST_CASE("gamma") {
  Run r = run("gamma --m 2 --q 0");
  CHECK(r.status == 0);
  CHECK(r.doc()["result"]["gamma"].get<double>() == 0.0);

  r = run("gamma --m 2 --q 2");
  CHECK(r.status == 0);
  CHECK(r.doc()["result"]["relative_error"].get<double>() <= 1e-9);
  CHECK(r.doc()["config"]["window_cap"] == 4096);
  CHECK(r.doc().contains("version"));

  CHECK(run("gamma --m 2 --q -100").status == 2);
  CHECK(run("gamma --q 1").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
}

TEST_CASE("h3") {
  Run r = run("h3 --class I");
  CHECK(r.status == 0);
  CHECK(r.doc()["result"]["dim"] == 1);

  r = run("h3 --class U:-1");
  CHECK(r.status == 0);
  CHECK(r.doc()["result"]["dim"] == 0);
  CHECK(r.doc()["result"]["certificate"]["granted"] == true);

  for (const char* cls : {"Vc:0.75", "Vcomp:0.75", "Vp:0.5,2", "Vm:+", "U:1.5"}) {
    CAPTURE(cls);
    r = run(std::string("h3 --class ") + cls);
    CHECK(r.status == 0);
    CHECK(r.doc()["result"]["dim"] == 0);
  }
  CHECK(run("h3 --class Vc:1.2").status == 2);
  CHECK(run("h3 --class X:1").status == 2);
  // A tolerance nothing can meet turns into a certificate failure.
  CHECK(run("--tol 1e-30 h3 --class Vp:0,1").status == 3);
}

TEST_CASE("les") {
  Run r = run("les --genus 2 --no-timestamp");
  CHECK(r.status == 0);
  CHECK(r.doc()["result"]["dims"] == json({0, 1, 1, 0, 4, 5, 1, 4, 4, 1, 1, 0}));
  CHECK(r.doc()["result"]["alternating_sum"] == 0);

  r = run("les --genus 5");
  CHECK(r.status == 0);
  CHECK(r.doc()["result"]["alternating_sum"] == 0);

  CHECK(run("les --genus 1").status == 2);
  CHECK(run("les --genus 2 --omit invariant-currents").status == 3);

  r = run("--format text les --genus 3");
  CHECK(r.status == 0);
  CHECK(r.out.find("C^6 --r1--> C^7") != std::string::npos);

  r = run("--format csv les --genus 2");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("key,value\n", 0) == 0);
  CHECK(r.out.find("result.dims[4],4") != std::string::npos);
}

TEST_CASE("solve") {
  TempDir tmp;
  const std::string phi1 = tmp.file("phi1.json", R"([{"twice_m": 2, "re": 1.0, "im": 0.0}])");
  const std::string phi0 = tmp.file("phi0.json", R"([{"twice_m": 0, "re": 1.0, "im": 0.0}])");

  Run r = run("solve --class U:-1 --g " + phi1);
  CHECK(r.status == 0);
  CHECK(r.doc()["result"]["residual"].get<double>() <= 1e-10);

  r = run("solve --class Vp:0,1 --g " + phi0);
  CHECK(r.status == 0);
  CHECK(r.doc()["result"]["residual"].get<double>() <= 1e-8);

  r = run("solve --class I --g " + phi0);
  CHECK(r.status == 3);
  CHECK(r.doc()["result"]["certificate"] == false);

  // Weight 1/2 is not a weight of U^{-1}.
  const std::string bad = tmp.file("bad.json", R"([{"twice_m": 1, "re": 1.0, "im": 0.0}])");
  CHECK(run("solve --class U:-1 --g " + bad).status == 2);
  CHECK(run("solve --class U:-1 --g " + (tmp.path / "missing.json").string()).status == 2);

  // The window cap from the environment is honoured and reported.
  r = run("solve --class U:-1 --g " + phi1, "LEAFCOH_MAX_WINDOW=64");
  CHECK(r.status == 0);
  CHECK(r.doc()["config"]["window_cap"] == 64);
  CHECK(run("solve --class U:-1 --g " + phi1, "LEAFCOH_MAX_WINDOW=100").status == 2);
}

TEST_CASE("verify") {
  Run r = run("verify --suite all --seed 1");
  CHECK(r.status == 0);
  CHECK(r.doc()["result"]["passed"] == r.doc()["result"]["total"]);

  r = run("verify --suite blocksolve");
  CHECK(r.status == 0);
  bool has_grid = false;
  const json doc = r.doc();
  for (const auto& c : doc["result"]["checks"])
    has_grid |= c["name"].get<std::string>().find("determinant") != std::string::npos;
  CHECK(has_grid);

  CHECK(run("verify --suite nonsense").status == 2);
}

TEST_CASE("spectrum and delta") {
  TempDir tmp;
  const std::string gen = (tmp.path / "gen.json").string();
  CHECK(run("--seed 7 spectrum generate --size 10 --file " + gen).status == 0);
  CHECK(run("spectrum validate --file " + gen + " --full").status == 0);

  Run stdout_gen = run("--seed 7 spectrum generate --size 10");
  CHECK(stdout_gen.status == 0);
  CHECK(leafcoh::parse_spectrum_json(stdout_gen.out).entries.size() == 10);

  const std::string crowded = tmp.file("crowded.json", R"({"label": "crowded", "q_gap": 0.5,
    "entries": [{"class": "I", "mult": 1},
                {"class": "Vcomp", "sigma": 0.6, "mult": 1},
                {"class": "Vcomp", "sigma": 0.7, "mult": 1}]})");
  CHECK(run("spectrum validate --file " + crowded).status == 3);
  CHECK(run("spectrum validate --file " + tmp.file("junk.json", "{")).status == 2);

  Run r = run("delta --spectrum " + gen + " --filter-excluded");
  CHECK(r.status == 0);
  CHECK(r.doc()["result"]["delta"].get<double>() > 0.0);
  CHECK(run("delta --spectrum " + gen).status == 2);

  const std::string single = tmp.file("single.json", R"({"label": "single", "q_gap": 0.1,
    "entries": [{"class": "Vprincipal", "j": 0, "nu": 1.0, "mult": 1}]})");
  r = run("delta --spectrum " + single);
  CHECK(r.status == 0);
  double brute = 1e300;
  for (int m = -10000; m <= 10000; ++m) {
    const double q = 1.25;
    brute = std::min(brute, 4.0 * q * std::sqrt(m * (m + 1.0) + q) * std::sqrt((m + 2.0) * (m + 3.0) + q));
  }
  CHECK(std::abs(r.doc()["result"]["delta"].get<double>() - brute) <= 1e-9 * brute);
}

TEST_CASE("deterministic output") {
  for (const char* args : {"--no-timestamp les --genus 4", "--no-timestamp --seed 3 verify --suite all",
                           "--no-timestamp h3 --class Vp:0.5,1"}) {
    CAPTURE(args);
    const Run a = run(args), b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.doc().contains("timestamp"));
  }
  CHECK(run("gamma --m 0 --q 1").doc().contains("timestamp"));
}
