#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

#include "leafcoh/errors.hpp"
#include "leafcoh/spectrum.hpp"

using namespace leafcoh;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("leafcoh_test_" + name);
}

void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

bool has_kind(const ValidationReport& r, const std::string& kind) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

}  // namespace

TEST_CASE("validation") {
  SUBCASE("trivial only") {
    const Spectrum s{"t", 0.1, {{ReprClass::trivial(), 1}}};
    CHECK(validate(s).ok());
    CHECK(validate(s, {.require_full = true}).ok());
  }
  SUBCASE("q values accumulating at 1/4") {
    // sigma(1 - sigma) = 0.24, 0.2499, 0.24999
    const double s2 = 0.5 + 0.5 * std::sqrt(1 - 4 * 0.2499);
    const double s3 = 0.5 + 0.5 * std::sqrt(1 - 4 * 0.24999);
    const Spectrum s{"acc",
                     0.01,
                     {{ReprClass::trivial(), 1},
                      {ReprClass::complementary(0.6), 1},
                      {ReprClass::complementary(s2), 1},
                      {ReprClass::complementary(s3), 1}}};
    const ValidationReport r = validate(s);
    CHECK_FALSE(r.ok());
    CHECK(has_kind(r, "q-gap"));
  }
  SUBCASE("full spectrum without the trivial class") {
    const Spectrum s{"nf", 0.1, {{ReprClass::principal(0, 1.0), 2}}};
    CHECK(validate(s).ok());
    CHECK(has_kind(validate(s, {.require_full = true}), "full"));
    const Spectrum twice{"t2", 0.1, {{ReprClass::trivial(), 2}}};
    CHECK(has_kind(validate(twice, {.require_full = true}), "full"));
  }
  SUBCASE("exactly equal q values are allowed") {
    const Spectrum s{"eq",
                     0.1,
                     {{ReprClass::principal(0, 1.0), 1},
                      {ReprClass::principal(1, 1.0), 3},
                      {ReprClass::discrete(2), 1},
                      {ReprClass::trivial(), 1}}};
    CHECK(validate(s).ok());
  }
  SUBCASE("bad entries") {
    ReprClass bad;
    bad.family = Family::Complementary;
    bad.sigma = 1.3;
    const Spectrum s{"bad",
                     -1.0,
                     {{bad, 1}, {ReprClass::mock_plus(), 0}, {ReprClass::mock_plus(), 1}}};
    const ValidationReport r = validate(s);
    CHECK(has_kind(r, "parameter"));
    CHECK(has_kind(r, "multiplicity"));
    CHECK(has_kind(r, "duplicate"));
    CHECK(has_kind(r, "gap-declaration"));
  }
  SUBCASE("verdict ignores entry order") {
    std::mt19937_64 rng(9);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      Spectrum s = generate(seed, 12);
      s.q_gap = 0.3;  // tight enough that some spectra fail
      const bool verdict = validate(s).ok();
      for (int k = 0; k < 5; ++k) {
        std::shuffle(s.entries.begin(), s.entries.end(), rng);
        CHECK(validate(s).ok() == verdict);
      }
    }
  }
}

TEST_CASE("generator") {
  const Spectrum one = generate(1, 1);
  REQUIRE(one.entries.size() == 1);
  CHECK(one.entries[0].cls == ReprClass::trivial());
  CHECK(one.entries[0].multiplicity == 1);

  const Spectrum ten = generate(7, 10);
  CHECK(ten.entries.size() == 10);
  CHECK(validate(ten, {.require_full = true}).ok());
  CHECK(generate(7, 10) == ten);
  CHECK_FALSE(generate(8, 10) == ten);

  for (std::uint64_t seed = 0; seed < 50; ++seed)
    CHECK(validate(generate(seed, 1 + int(seed % 25)), {.require_full = true}).ok());
  CHECK_THROWS_AS(generate(1, 0), DomainError);
}

TEST_CASE("file round trip") {
  const auto path = temp_file("roundtrip.json");
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Spectrum s = generate(seed, 15);
    write_spectrum(s, path);
    CHECK(read_spectrum(path) == s);
  }
  std::filesystem::remove(path);
}

TEST_CASE("strict parsing") {
  SUBCASE("sigma outside (1/2, 1)") {
    try {
      parse_spectrum_json(R"({"label":"x","q_gap":0.1,"entries":[{"class":"Vcomp","sigma":1.2,"mult":1}]})");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("(1/2, 1)") != std::string::npos);
      CHECK(std::string(e.what()).find("entries[0]") != std::string::npos);
    }
  }
  SUBCASE("n not a half-integer >= 1") {
    CHECK_THROWS_AS(parse_spectrum_json(R"({"label":"x","q_gap":0.1,"entries":[{"class":"U","n":1.5,"mult":1}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_spectrum_json(R"({"label":"x","q_gap":0.1,"entries":[{"class":"U","n":1,"mult":1}]})"),
                    ParseError);
  }
  SUBCASE("unknown fields") {
    CHECK_THROWS_AS(parse_spectrum_json(R"({"label":"x","q_gap":0.1,"entries":[],"extra":1})"), ParseError);
    CHECK_THROWS_AS(parse_spectrum_json(R"({"label":"x","q_gap":0.1,"entries":[{"class":"I","mult":1,"nu":2}]})"),
                    ParseError);
  }
  SUBCASE("malformed JSON reports a position") {
    const auto path = temp_file("bad.json");
    write_text(path, "{\n  \"label\": \"x\",\n  \"q_gap\": ,\n}");
    try {
      read_spectrum(path);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    std::filesystem::remove(path);
  }
  SUBCASE("twice-valued parameters") {
    const Spectrum s = parse_spectrum_json(
        R"({"label":"ok","q_gap":0.1,"entries":[{"class":"U","n":-3,"mult":2},{"class":"Vprincipal","j":1,"nu":0.5,"mult":1},{"class":"Vmock-","mult":1}]})");
    REQUIRE(s.entries.size() == 3);
    CHECK(s.entries[0].cls == ReprClass::discrete(-3));
    CHECK(s.entries[0].multiplicity == 2);
    CHECK(s.entries[1].cls == ReprClass::principal(1, 0.5));
    CHECK(s.entries[2].cls == ReprClass::mock_minus());
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(read_spectrum(temp_file("does_not_exist.json")), ParseError);
  }
}
