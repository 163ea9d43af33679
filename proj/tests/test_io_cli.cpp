#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "bwc/cli.hpp"
#include "bwc/selftest.hpp"

using namespace bwc;
namespace fs = std::filesystem;

namespace {

const fs::path kData = BWC_DATA_DIR;

fs::path example(const std::string& name) { return kData / "examples" / (name + ".json"); }

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(cli::RunConfiguration c) {
  std::ostringstream out, err;
  const int status = cli::run(c, out, err);
  return {status, out.str(), err.str()};
}

cli::RunConfiguration config(cli::Command command, std::vector<fs::path> inputs = {}) {
  cli::RunConfiguration c;
  c.command = command;
  c.input_paths = std::move(inputs);
  return c;
}

template <typename T, typename From>
void round_trip(const T& value, From from) {
  const auto j = io::to_json(value);
  const std::string text = j.dump(2);
  const T back = from(io::parse_json(text, "round trip"));
  CHECK(back == value);
  CHECK(io::to_json(back).dump(2) == text);
}

ErrorCode parse_error(const std::string& text) {
  try {
    io::descriptor_from_json(io::parse_json(text, "inline"));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parsed unexpectedly");
  return ErrorCode::InternalConsistency;
}

}  // namespace

TEST_CASE("bundled example files match the built-in descriptors") {
  for (const auto& m : selftest::bundled_descriptors()) {
    CAPTURE(m.name);
    const auto loaded = io::load_descriptor(example(m.name));
    CHECK(loaded.name == m.name);
    CHECK(loaded.b2 == m.b2);
    CHECK(loaded.b2_plus == m.b2_plus);
    CHECK(loaded.c1 == m.c1);
    CHECK(loaded.omega == m.omega);
    CHECK(loaded.spin == m.spin);
  }
  CHECK(io::load_catalog(kData / "catalog.json").rules() == Catalog::builtin().rules());
}

TEST_CASE("descriptor parsing errors") {
  CHECK(parse_error("{") == ErrorCode::MalformedInput);
  CHECK(parse_error(R"({"name":"x","b2":2,"b2_plus":1,"c1":[1],"omega":[1,0],"spin":false})") ==
        ErrorCode::MalformedInput);
  CHECK(parse_error(R"({"name":"x","b2":2,"b2_plus":1,"c1":[1,"a"],"omega":[1,0],"spin":false})") ==
        ErrorCode::MalformedInput);
  CHECK(parse_error(R"({"name":"x","b2":2,"b2_plus":1,"c1":[1,0],"omega":[1,0]})") == ErrorCode::MalformedInput);
  try {
    io::load_descriptor(kData / "does-not-exist.json");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
}

TEST_CASE("JSON round trips") {
  for (const auto& m : selftest::bundled_descriptors()) {
    const auto text = io::to_json(m).dump();
    const auto back = io::descriptor_from_json(io::parse_json(text, "descriptor"));
    CHECK(io::to_json(back).dump() == text);

    const auto x = boothby_wang(m);
    round_trip(x, io::contact_from_json);
    round_trip(spectrum(x, m.b2, 3), io::spectrum_from_json);
  }
  round_trip(residue_table(8, 4), io::residue_table_from_json);
  round_trip(decide(8, 4, 8), io::isomorphism_report_from_json);
  round_trip(decide(0, 2, 3), io::isomorphism_report_from_json);
  FiveManifoldContact x;
  x.level = 6;
  x.delta = 2;
  x.dK = 2;
  x.b2_X = 2;
  FiveManifoldContact y = x;
  y.delta = 3;
  y.dK = 3;
  round_trip(build_witness(spectrum(x, 3, 6), spectrum(y, 3, 6), 6), io::isomorphism_report_from_json);
  round_trip(contact_count_report(22, 12), io::count_report_from_json);
  round_trip(contact_count_report(21, 60), io::count_report_from_json);
  for (const auto& e : Catalog::builtin().realizable(10, 5)) round_trip(e, io::geography_entry_from_json);
  for (const auto& rule : Catalog::builtin().rules()) round_trip(rule, io::family_rule_from_json);

  const auto all = selftest::bundled_descriptors();
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (a.b2 != b.b2) continue;
      const auto c = cli::compare(a, b, 12);
      const auto text = cli::to_json(c).dump(2);
      const auto back = cli::comparison_from_json(io::parse_json(text, "comparison"));
      CHECK(back == c);
      CHECK(cli::to_json(back).dump(2) == text);
    }
  }
}

TEST_CASE("compare") {
  const auto all = selftest::bundled_descriptors();
  const auto find = [&all](const std::string& name) {
    return *std::find_if(all.begin(), all.end(), [&](const auto& m) { return m.name == name; });
  };
  SUBCASE("headline") {
    const auto c = cli::compare(find("elliptic-level8-dK4"), find("elliptic-level8-dK8"), 50);
    CHECK(c.verdict == "equivalent as almost contact structures, inequivalent contact homology, distinguisher b=3");
    CHECK(c.narrative.find("same equivalence class of almost contact structures") != std::string::npos);
  }
  SUBCASE("isomorphic comes with a witness") {
    const auto c = cli::compare(find("level6-dK2"), find("level6-dK3"), 12);
    CHECK(c.verdict == "equivalent as almost contact structures, isomorphic contact homology");
    REQUIRE(c.contact_homology.witness.has_value());
    CHECK_FALSE(c.contact_homology.witness->empty());
  }
  SUBCASE("level zero") {
    const auto c = cli::compare(find("level0-dK2"), find("level0-dK3"), 5);
    CHECK(c.contact_homology.distinguisher_lowest == std::pair<Integer, Integer>{2, 4});
  }
  SUBCASE("different levels and different manifolds") {
    auto a = find("level6-dK2");
    auto b = a;
    b.c1 = CovectorZ{{4, 0, 0, 0}};
    const auto c = cli::compare(a, b, 12);
    CHECK(c.diffeomorphic);
    CHECK_FALSE(c.almost_contact);
    CHECK(c.contact_homology.decision_case == DecisionCase::LevelsDiffer);

    const auto d = cli::compare(find("level6-dK2"), find("dolgachev-k5"), 12);
    CHECK_FALSE(d.diffeomorphic);
    CHECK(d.contact_homology.decision_case == DecisionCase::ManifoldsDiffer);
  }
}

TEST_CASE("run") {
  SUBCASE("classify text") {
    const auto r = run(config(cli::Command::Classify, {example("s5-b2-1")}));
    CHECK(r.status == 0);
    CHECK(r.out.find("S⁵") != std::string::npos);
    CHECK(r.out.find("level:       0") != std::string::npos);
  }
  SUBCASE("json envelope") {
    auto c = config(cli::Command::Classify, {example("dolgachev-k5")});
    c.output_format = cli::OutputFormat::Json;
    const auto r = run(c);
    REQUIRE(r.status == 0);
    const auto j = io::parse_json(r.out, "stdout");
    CHECK(j.at("format_version") == io::kFormatVersion);
    CHECK(j.at("command") == "classify");
    CHECK(j.at("contact").at("level") == 5);
  }
  SUBCASE("spectrum and counts") {
    auto s = config(cli::Command::Spectrum, {example("level6-dK2")});
    s.k_max = 2;
    CHECK(run(s).status == 0);
    auto c = config(cli::Command::Counts);
    c.r = 22;
    c.d = 12;
    c.output_format = cli::OutputFormat::Json;
    const auto r = run(c);
    REQUIRE(r.status == 0);
    const auto rep = io::count_report_from_json(io::parse_json(r.out, "stdout").at("report"));
    CHECK(rep == contact_count_report(22, 12));
    CHECK(run(config(cli::Command::Counts, {example("elliptic-level8-dK4")})).status == 0);
  }
  SUBCASE("catalog override") {
    auto c = config(cli::Command::Catalog);
    c.catalog_path = kData / "catalog.json";
    c.output_format = cli::OutputFormat::Json;
    const auto r = run(c);
    REQUIRE(r.status == 0);
    CHECK(io::catalog_from_json(io::parse_json(r.out, "stdout").at("catalog")).rules() ==
          Catalog::builtin().rules());
  }
  SUBCASE("output file") {
    const fs::path out = fs::temp_directory_path() / "bwc_test_output.txt";
    auto c = config(cli::Command::Validate, {example("c1-zero")});
    c.output_path = out;
    const auto r = run(c);
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    CHECK(io::read_file(out).find("c1-zero") != std::string::npos);
    fs::remove(out);
  }
  SUBCASE("usage and input errors") {
    auto r = run(config(cli::Command::Compare, {example("c1-zero")}));
    CHECK(r.status != 0);
    CHECK(r.err.rfind("error: usage:", 0) == 0);

    r = run(config(cli::Command::Counts));
    CHECK(r.status != 0);

    r = run(config(cli::Command::Classify, {fs::path(BWC_GOLDEN_DIR) / "invalid_even_b2_plus.json"}));
    CHECK(r.status != 0);
    CHECK(r.err.rfind("error: b2_plus_even:", 0) == 0);

    auto k = config(cli::Command::Spectrum, {example("c1-zero")});
    k.k_max = 0;
    CHECK(run(k).status != 0);
  }
}
