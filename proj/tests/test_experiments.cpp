#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "treeharm/experiments.hpp"

using namespace treeharm;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("config: defaults, overrides, rejection of unknown keys") {
  const ExperimentConfig defaults = default_config("theorem-a");
  CHECK(defaults.z == complex_t(0.3, 0.0));
  CHECK(defaults.radius == 12);
  CHECK(defaults.seed == 7);

  const nlohmann::json override = {{"q", 3}, {"radius", 9}, {"k_range", {0, 4}}};
  const ExperimentConfig cfg = parse_config(override, "theorem-a");
  CHECK(cfg.q == 3);
  CHECK(cfg.radius == 9);
  CHECK(cfg.k_max == 4);
  CHECK(cfg.z == complex_t(0.3, 0.0));  // untouched default

  CHECK_THROWS_AS(parse_config({{"radius", 9}, {"bogus", 1}}, "theorem-a"), ConfigError);
  CHECK_THROWS_AS(parse_config({{"z", 0.3}}, "theorem-a"), ConfigError);
  CHECK_THROWS_AS(parse_config({{"experiment", "zcase"}}, "theorem-a"), ConfigError);
  CHECK_THROWS_AS(parse_config({{"k_range", {5, 1}}}, "theorem-a"), ConfigError);
  CHECK_THROWS_AS(parse_config({{"q", 1}}, "theorem-a"), ConfigError);
  CHECK_NOTHROW(parse_config({{"experiment", "theorem-a"}}, "theorem-a"));
  CHECK_THROWS_AS(default_config("no-such-experiment"), ConfigError);
}

TEST_CASE("eigencheck: passes at q=2 and q=3, rejects R=1") {
  for (int q : {2, 3}) {
    ExperimentConfig cfg = default_config("eigencheck");
    cfg.q = q;
    cfg.radius = (q == 2) ? 12 : 10;
    const ExperimentReport report = run_eigencheck(cfg);
    CHECK(report.verdict() == Verdict::pass);
    REQUIRE(report.checks.size() == 1);
    CHECK(report.checks[0].value < 1e-9);
  }
  ExperimentConfig bad = default_config("eigencheck");
  bad.radius = 1;
  CHECK_THROWS_AS(run_eigencheck(bad), ConfigError);
}

TEST_CASE("spectrum-map: boundary residuals and endpoints") {
  for (double p : {1.0, 1.5, 2.0}) {
    ExperimentConfig cfg = default_config("spectrum-map");
    cfg.p = p;
    const ExperimentReport report = run_spectrum_map(cfg);
    CHECK(report.verdict() == Verdict::pass);
  }

  // p = 1 boundary passes through w = 0
  ExperimentConfig cfg = default_config("spectrum-map");
  cfg.p = 1.0;
  const TreeParams params(2);
  const complex_t w = gamma_map(params, complex_t(0.0, 0.5));
  CHECK(std::abs(w) < 1e-12);
  CHECK(std::abs(ellipse_residual(params, complex_t(0.0, 0.0), 1.0)) < 1e-10);
}

TEST_CASE("roe-counterexample: default pass, bad modulus rejected") {
  const ExperimentReport report = run_roe_counterexample(default_config("roe-counterexample"));
  CHECK(report.verdict() == Verdict::pass);

  ExperimentConfig annulus = default_config("roe-counterexample");
  annulus.p = 1.5;
  annulus.z = {1.2, 0.0};
  const ExperimentReport report2 = run_roe_counterexample(annulus);
  CHECK(report2.verdict() == Verdict::pass);

  ExperimentConfig bad = default_config("roe-counterexample");
  bad.z = {-1.0, 0.0};
  CHECK_THROWS_AS(run_roe_counterexample(bad), ConfigError);

  ExperimentConfig outside = default_config("roe-counterexample");
  outside.p = 1.5;
  outside.z = {5.0, 0.0};  // outside the annulus
  CHECK_THROWS_AS(run_roe_counterexample(outside), ConfigError);
}

TEST_CASE("theorem-a: pass at z=0.3, degenerate z rejected") {
  const ExperimentReport report = run_theorem_a(default_config("theorem-a"));
  CHECK(report.verdict() == Verdict::pass);

  ExperimentConfig degenerate = default_config("theorem-a");
  degenerate.z = {0.0, 0.0};
  CHECK_THROWS_AS(run_theorem_a(degenerate), DegenerateZ);

  const TreeParams params(2);
  ExperimentConfig half_period = default_config("theorem-a");
  half_period.z = {params.tau / 2.0, 0.0};
  CHECK_THROWS_AS(run_theorem_a(half_period), DegenerateZ);

  ExperimentConfig complex_z = default_config("theorem-a");
  complex_z.z = {0.3, 0.1};
  CHECK_THROWS_AS(run_theorem_a(complex_z), ConfigError);

  ExperimentConfig small = default_config("theorem-a");
  small.radius = 5;
  CHECK_THROWS_AS(run_theorem_a(small), ConfigError);
}

TEST_CASE("theorem-b: pass at p=1.5, p out of range rejected") {
  const ExperimentReport report = run_theorem_b(default_config("theorem-b"));
  CHECK(report.verdict() == Verdict::pass);
  bool found_note = false;
  for (const auto& note : report.notes) found_note |= note.find("L^{-k}") != std::string::npos;
  CHECK(found_note);

  for (double p : {2.0, 1.0, 0.5, 2.5}) {
    ExperimentConfig bad = default_config("theorem-b");
    bad.p = p;
    CHECK_THROWS_AS(run_theorem_b(bad), ConfigError);
  }
}

TEST_CASE("sharpness: all items pass on defaults") {
  const ExperimentReport report = run_sharpness(default_config("sharpness"));
  CHECK(report.verdict() == Verdict::pass);
  // item checks present
  int seen = 0;
  for (const auto& c : report.checks)
    if (c.name.rfind("item", 0) == 0) ++seen;
  CHECK(seen >= 6);
}

TEST_CASE("zcase: pass at alpha=pi/3, alpha=0 rejected") {
  const ExperimentReport report = run_zcase(default_config("zcase"));
  CHECK(report.verdict() == Verdict::pass);
  for (const auto& c : report.checks)
    if (c.name == "eigenvalue") CHECK_THAT(c.value, Catch::Matchers::WithinAbs(0.5, 1e-12));

  ExperimentConfig zero = default_config("zcase");
  zero.z = {0.0, 0.0};
  CHECK_THROWS_AS(run_zcase(zero), ConfigError);

  ExperimentConfig negative = default_config("zcase");
  negative.z = {-0.5, 0.0};
  CHECK_THROWS_AS(run_zcase(negative), ConfigError);
}

TEST_CASE("isomorphism: corpus checks pass") {
  const ExperimentReport report = run_isomorphism(default_config("isomorphism"));
  CHECK(report.verdict() == Verdict::pass);

  ExperimentConfig big = default_config("isomorphism");
  big.radius = 15;
  CHECK_THROWS_AS(run_isomorphism(big), ConfigError);
}

TEST_CASE("reports: identical configs produce byte-identical CSV output") {
  namespace fs = std::filesystem;
  const fs::path base = fs::temp_directory_path() / "treeharm_determinism";
  fs::remove_all(base);

  ExperimentConfig cfg = default_config("theorem-a");
  for (const char* run : {"a", "b"}) {
    const ExperimentReport report = run_experiment(cfg);
    write_report(report, (base / run).string());
  }
  int compared = 0;
  for (const auto& entry : fs::directory_iterator(base / "a")) {
    if (entry.path().extension() != ".csv") continue;
    const auto other = base / "b" / entry.path().filename();
    REQUIRE(fs::exists(other));
    CHECK(slurp(entry.path()) == slurp(other));
    ++compared;
  }
  CHECK(compared > 0);

  // different seed, different data
  ExperimentConfig other_seed = cfg;
  other_seed.seed = 8;
  const ExperimentReport r1 = run_experiment(cfg);
  const ExperimentReport r2 = run_experiment(other_seed);
  REQUIRE(!r1.tables.empty());
  REQUIRE(!r2.tables.empty());
  CHECK(r1.tables[0].rows[0][1] != r2.tables[0].rows[0][1]);
  fs::remove_all(base);
}

TEST_CASE("report json carries verdict, tolerances and config echo") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "treeharm_report_json";
  fs::remove_all(dir);
  const ExperimentReport report = run_experiment(default_config("eigencheck"));
  write_report(report, dir.string());

  nlohmann::json j;
  std::ifstream in(dir / "report.json");
  REQUIRE(in);
  in >> j;
  CHECK(j["experiment"] == "eigencheck");
  CHECK(j["verdict"] == "pass");
  CHECK(j["config"]["q"] == 2);
  CHECK(j["tolerances"].contains("eigen_residual_max"));
  CHECK(j["checks"].is_array());
  CHECK(j["wall_seconds"].is_number());
  fs::remove_all(dir);
}
