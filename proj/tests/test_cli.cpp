#include <doctest.h>

#include "cli/commands.hpp"
#include "cli/workers.hpp"

using namespace cyint;
using namespace cyint::app;

TEST_CASE("config text parsing") {
  RunConfig c = parse_config_text(R"({"operator": "quintic", "primes": [7, 11], "kappa": "5/2", "s": 2, "R": 4})");
  CHECK(*c.op == "quintic");
  CHECK(*c.primes == std::vector<std::int64_t>{7, 11});
  CHECK(*c.kappa == "5/2");
  CHECK(*c.s == 2);
  CHECK(*c.R == 4);
  CHECK_FALSE(c.N);
  CHECK(*parse_config_text(R"({"primes": "7, 13"})").primes == std::vector<std::int64_t>{7, 13});
}

TEST_CASE("config errors name the line or the field") {
  try {
    parse_config_text("{\n  \"N\": 3,\n  \"M\": ,\n}", "run.json");
    FAIL("expected a ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("run.json:3:") != std::string::npos);
  }
  try {
    parse_config_text(R"({"N": 0})", "run.json");
    FAIL("expected a ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("field 'N'") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config_text(R"({"bogus": 1})"), ConfigError);
  CHECK_THROWS_AS(parse_config_text(R"({"primes": [2]})"), ConfigError);
  CHECK_THROWS_AS(parse_config_text(R"({"primes": [21]})"), ConfigError);
  CHECK_THROWS_AS(parse_config_text(R"({"s": 4})"), ConfigError);
  CHECK_THROWS_AS(parse_config_text(R"({"kappa": "x"})"), ConfigError);
  CHECK_THROWS_AS(parse_config_text(R"([1, 2])"), ConfigError);
  CHECK_THROWS_AS(parse_config_text(R"({"command": "nope"})"), ConfigError);
}

TEST_CASE("flags override file values") {
  RunConfig file = parse_config_text(R"({"operator": "quintic", "R": 9, "N": 4})");
  RunConfig flags;
  flags.R = 2;
  file.overlay(flags);
  CHECK(*file.R == 2);
  CHECK(*file.N == 4);
  CHECK(*file.op == "quintic");
}

TEST_CASE("operator and family selectors") {
  CHECK(resolve_operator("quintic").coeffs() == quintic_operator().coeffs());
  CHECK(resolve_operator("simplicial:3").coeffs() == simplicial_operator(3).coeffs());
  CHECK(resolve_operator("diagonal4").coeffs() == diagonal4_operator().coeffs());
  CHECK(resolve_operator("hyperoctahedral:4").coeffs() == diagonal4_operator().coeffs());
  CHECK(resolve_operator("hyperoctahedral:2").order() == 2);
  CHECK_THROWS_AS(resolve_operator("simplicial:x"), ConfigError);
  CHECK_THROWS_AS(resolve_operator("/nonexistent/op.json"), ConfigError);

  nlohmann::json op = nlohmann::json::parse(R"({"order": 1, "coeffs": [[0, -1], [1]]})");
  ThetaOperator L = parse_operator_json(op, "inline");
  CHECK(L.order() == 1);
  CHECK(L.coeff(0, 1) == -1);
  CHECK_THROWS_AS(parse_operator_json(nlohmann::json::parse(R"({"order": 1, "coeffs": [[1], [1]]})"), "x"),
                  ConfigError);
  CHECK_THROWS_AS(parse_operator_json(nlohmann::json::parse(R"({"order": 2, "coeffs": [[0], [1]]})"), "x"),
                  ConfigError);

  FamilySpec s = resolve_family("simplicial", 3);
  CHECK(s.kind == FamilyKind::kSimplicial);
  CHECK(s.n == 3);
  CHECK(resolve_family("hyperoctahedral:2", std::nullopt).n == 2);
  CHECK_THROWS_AS(resolve_family("simplicial", std::nullopt), ConfigError);
  CHECK_THROWS_AS(resolve_family("simplicial:3", 2), ConfigError);

  FamilySpec sq = parse_family_json(nlohmann::json::parse(R"({"g": [{"exp": [1, 1], "coeff": 1}, {"exp": [1, -1], "coeff": 1},
      {"exp": [-1, 1], "coeff": 1}, {"exp": [-1, -1], "coeff": 1}], "facets": [[1, 0], [-1, 0], [0, 1], [0, -1]]})"),
                                    "square");
  CHECK(sq.kind == FamilyKind::kCustom);
  CHECK(sq.n == 2);
  CHECK_NOTHROW(build_family(sq));
  CHECK_THROWS_AS(parse_family_json(nlohmann::json::parse(R"({"g": [{"exp": [1], "coeff": "1/2"}], "facets": [[1]]})"),
                                    "x"),
                  ConfigError);
}

TEST_CASE("run reports exit codes and renders only complete reports") {
  RunConfig c;
  c.command = Command::kInstantons;
  c.op = "quintic";
  c.R = 3;
  c.kappa = "5";
  c.primes = std::vector<std::int64_t>{7};
  RunOutcome ok = run(c, nullptr);
  CHECK(ok.exit_code == 0);
  CHECK(ok.text.find("1\t575\t2875\tpass") != std::string::npos);

  c.format = Format::kJson;
  RunOutcome js = run(c, nullptr);
  nlohmann::json j = nlohmann::json::parse(js.text);
  CHECK(j["status"] == "pass");
  CHECK(j["result"]["a"][0] == "2875");
  CHECK(j["result"]["precision"] == "exact");

  RunConfig bad = c;
  bad.op = "nothing-here.json";
  RunOutcome b = run(bad, nullptr);
  CHECK(b.exit_code == 2);
  CHECK(b.text.empty());

  RunConfig missing;
  missing.command = Command::kDerivePf;
  CHECK(run(missing, nullptr).exit_code == 2);

  RunConfig gate;
  gate.command = Command::kFrobeniusStructure;
  gate.family = "simplicial";
  gate.n = 4;
  CHECK(run(gate, nullptr).exit_code == 2);

  RunConfig small_prime;
  small_prime.command = Command::kFrobeniusStructure;
  small_prime.family = "simplicial";
  small_prime.n = 3;
  small_prime.primes = std::vector<std::int64_t>{3};
  CHECK(run(small_prime, nullptr).exit_code == 2);
}

TEST_CASE("parallel map keeps index order and rethrows deterministically") {
  std::vector<int> v = parallel_map<int>(20, 4, [](std::size_t i) { return static_cast<int>(i * i); });
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == static_cast<int>(i * i));
  auto boom = [](std::size_t i) -> int {
    if (i == 3 || i == 7) throw std::runtime_error("task " + std::to_string(i));
    return 0;
  };
  try {
    parallel_map<int>(10, 3, boom);
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "task 3");
  }
}
