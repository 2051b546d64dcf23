#include <doctest.h>

#include <filesystem>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "wignerwalk/cli.hpp"
#include "wignerwalk/ensemble.hpp"
#include "wignerwalk/grid_io.hpp"

using namespace wignerwalk;

TEST_SUITE("cli") {

TEST_CASE("parses a full ensemble command line") {
  const RunConfig cfg = parse_args(
      {"evolve", "--n", "101", "--j", "50", "--kind", "dod", "--delta", "0.5",
       "--r", "1000", "--seed", "7", "--times", "1,10,20,40,100,500", "--out",
       "runs", "--images", "--zoom", "6", "--threads", "4"});
  CHECK(cfg.sub == Subcommand::Evolve);
  CHECK(cfg.n == 101);
  CHECK(cfg.source == 50);
  CHECK(cfg.kind == DisorderKind::DOD);
  CHECK(cfg.delta == 0.5);
  CHECK(cfg.realizations == 1000);
  CHECK(cfg.seed == 7);
  CHECK(cfg.times == std::vector<double>{1, 10, 20, 40, 100, 500});
  CHECK(cfg.out_dir == std::filesystem::path("runs"));
  CHECK(cfg.images);
  CHECK(cfg.zoom == 6);
  CHECK(cfg.threads == 4);
}

TEST_CASE("defaults fill in the usual study") {
  const RunConfig clean = parse_args({"longtime", "--n", "101"});
  CHECK(clean.sub == Subcommand::Longtime);
  CHECK(clean.kind == DisorderKind::None);
  CHECK(clean.realizations == 1);  // clean rings need no averaging
  CHECK(clean.source == 50);
  CHECK(clean.delta == 0.0);

  const RunConfig noisy = parse_args({"evolve", "--kind", "dd", "--delta", "0.25"});
  CHECK(noisy.realizations == 1000);
  CHECK(noisy.times == std::vector<double>{1, 10, 20, 40, 100, 500});
  CHECK(noisy.source == 50);

  const RunConfig check = parse_args({"verify", "--kind", "dd", "--delta", "0.25"});
  CHECK(check.n == 21);
  CHECK(check.realizations == 20);
  CHECK(check.t_max == 100.0);
  CHECK(check.samples == 200);
}

TEST_CASE("rejects bad usage") {
  CHECK_THROWS_AS(parse_args({}), UsageError);
  CHECK_THROWS_AS(parse_args({"explode"}), UsageError);
  CHECK_THROWS_AS(parse_args({"evolve", "--kind", "tridiagonal"}), UsageError);
  CHECK_THROWS_AS(parse_args({"evolve", "--n", "2"}), UsageError);
  CHECK_THROWS_AS(parse_args({"evolve", "--n", "9", "--j", "9"}), UsageError);
  CHECK_THROWS_AS(parse_args({"evolve", "--kind", "dd", "--delta", "0.9"}),
                  UsageError);
  CHECK_THROWS_AS(parse_args({"evolve", "--kind", "dd", "--delta", "-0.1"}),
                  UsageError);
  CHECK_THROWS_AS(parse_args({"evolve", "--times", "1,-2"}), UsageError);
  CHECK_THROWS_AS(parse_args({"evolve", "--kind", "dd", "--r", "0"}), UsageError);
  CHECK_THROWS_AS(parse_args({"render"}), UsageError);
  CHECK_THROWS_AS(parse_args({"evolve", "--zoom", "0"}), UsageError);
}

TEST_CASE("strengths beyond the cap need an explicit override") {
  const RunConfig cfg = parse_args(
      {"evolve", "--kind", "dd", "--delta", "0.9", "--force-delta", "--r", "2"});
  CHECK(cfg.delta == 0.9);
  CHECK(cfg.force_delta);
}

TEST_CASE("help is not an error") {
  CHECK_THROWS_AS(parse_args({"--help"}), HelpRequested);
  try {
    parse_args({"evolve", "--help"});
    FAIL("expected help");
  } catch (const HelpRequested& h) {
    CHECK(h.text.find("--times") != std::string::npos);
  }
}

TEST_CASE("evolve writes the advertised files") {
  testutil::ScopedTempDir dir;
  RunConfig cfg = parse_args({"evolve", "--n", "9", "--kind", "dd", "--delta",
                              "0.5", "--r", "3", "--seed", "3", "--times",
                              "1,10", "--images", "--out",
                              dir.path().string()});
  REQUIRE(run(cfg) == 0);

  const auto base1 = dir.path() / "evolve_dd_d0.5_N9_j4_t1_R3_s3";
  const auto base10 = dir.path() / "evolve_dd_d0.5_N9_j4_t10_R3_s3";
  for (const auto& base : {base1, base10}) {
    CHECK(std::filesystem::exists(base.string() + ".csv"));
    CHECK(std::filesystem::exists(base.string() + ".ppm"));
  }

  const PhaseSpaceGrid g = read_grid_csv(base1.string() + ".csv");
  CHECK(g.meta.n == 9);
  CHECK(g.meta.realizations == 3);
  CHECK(std::abs(g.w.sum() - 1.0) <= 1e-9);
}

TEST_CASE("longtime run matches the library call") {
  testutil::ScopedTempDir dir;
  RunConfig cfg =
      parse_args({"longtime", "--n", "12", "--kind", "cdod", "--delta", "0.25",
                  "--r", "4", "--seed", "9", "--out", dir.path().string()});
  REQUIRE(run(cfg) == 0);

  const PhaseSpaceGrid file = read_grid_csv(
      dir.path() / "longtime_cdod_d0.25_N12_j6_longtime_R4_s9.csv");

  EnsembleSpec spec{RingSize(12), 6, DisorderKind::ConstrainedDOD, 0.25, 4, 9, {}};
  const EnsembleResult direct = ensemble_longtime(spec);
  CHECK((file.w.array() == direct.longtime->w.array()).all());
}

TEST_CASE("ensemble subcommand writes snapshots and the long-time grid") {
  testutil::ScopedTempDir dir;
  RunConfig cfg = parse_args({"ensemble", "--n", "9", "--kind", "dod", "--delta",
                              "0.5", "--r", "2", "--seed", "1", "--times", "1",
                              "--out", dir.path().string()});
  REQUIRE(run(cfg) == 0);
  CHECK(std::filesystem::exists(dir.path() / "ensemble_dod_d0.5_N9_j4_t1_R2_s1.csv"));
  CHECK(std::filesystem::exists(
      dir.path() / "ensemble_dod_d0.5_N9_j4_longtime_R2_s1.csv"));
}

TEST_CASE("render converts a grid file") {
  testutil::ScopedTempDir dir;
  RunConfig produce =
      parse_args({"longtime", "--n", "8", "--out", dir.path().string()});
  REQUIRE(run(produce) == 0);
  const auto csv = dir.path() / "longtime_none_d0_N8_j4_longtime_R1_s1.csv";
  REQUIRE(std::filesystem::exists(csv));

  RunConfig render = parse_args({"render", "--input", csv.string()});
  CHECK(render.output == dir.path() / "longtime_none_d0_N8_j4_longtime_R1_s1.ppm");
  REQUIRE(run(render) == 0);
  CHECK(std::filesystem::exists(render.output));

  RunConfig named = parse_args({"render", "--input", csv.string(), "--output",
                                (dir.path() / "picked.ppm").string(), "--zoom",
                                "2"});
  REQUIRE(run(named) == 0);
  CHECK(std::filesystem::exists(dir.path() / "picked.ppm"));
}

TEST_CASE("verify subcommand reports success through its exit code") {
  RunConfig cfg = parse_args({"verify", "--n", "15", "--kind", "dd", "--delta",
                              "0.25", "--r", "5", "--t-max", "50", "--samples",
                              "60"});
  CHECK(run(cfg) == 0);
}

TEST_CASE("missing input files fail at runtime, not at parse time") {
  RunConfig cfg = parse_args({"longtime", "--n", "9"});
  cfg.out_dir = "/dev/null/not-a-directory";
  CHECK(run(cfg) == 2);
}

TEST_CASE("thread flag keeps results byte-identical") {
  testutil::ScopedTempDir dir;
  std::vector<std::string> bytes;
  for (const std::string threads : {"1", "2", "8"}) {
    const auto out = dir.path() / ("threads" + threads);
    RunConfig cfg = parse_args({"ensemble", "--n", "15", "--kind", "dod",
                                "--delta", "0.5", "--r", "6", "--seed", "2",
                                "--times", "1,40", "--threads", threads,
                                "--out", out.string()});
    REQUIRE(run(cfg) == 0);
    std::string combined;
    for (const std::string stem :
         {"ensemble_dod_d0.5_N15_j7_t1_R6_s2.csv",
          "ensemble_dod_d0.5_N15_j7_t40_R6_s2.csv",
          "ensemble_dod_d0.5_N15_j7_longtime_R6_s2.csv"}) {
      combined += testutil::slurp(out / stem);
    }
    bytes.push_back(combined);
  }
  CHECK(bytes[0] == bytes[1]);
  CHECK(bytes[0] == bytes[2]);
}

}  // TEST_SUITE
