#include "wignerwalk/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <map>

#include "wignerwalk/ensemble.hpp"
#include "wignerwalk/grid_io.hpp"

namespace wignerwalk {

namespace {

constexpr double kInterchangeTol = 1e-12;
const std::vector<double> kDefaultTimes = {1, 10, 20, 40, 100, 500};

struct Parser {
  CLI::App app{"Phase-space distributions for quantum walks on disordered rings",
               "wignerwalk"};
  RunConfig cfg;
  CLI::App* evolve = nullptr;
  CLI::App* longtime = nullptr;
  CLI::App* ensemble = nullptr;
  CLI::App* render = nullptr;
  CLI::App* verify = nullptr;

  Parser() {
    app.require_subcommand(1);

    evolve = app.add_subcommand(
        "evolve", "Ensemble-averaged phase-space snapshots at given times");
    longtime = app.add_subcommand(
        "longtime", "Ensemble-averaged exact long-time phase-space average");
    ensemble = app.add_subcommand(
        "ensemble", "Snapshots and long-time average in one sweep");
    render = app.add_subcommand("render", "Render a grid CSV to a PPM heatmap");
    verify = app.add_subcommand(
        "verify", "Check that time and ensemble averaging commute");

    for (CLI::App* cmd : {evolve, longtime, ensemble, verify}) {
      add_model_options(cmd);
    }
    for (CLI::App* cmd : {evolve, ensemble}) {
      cmd->add_option("--times", cfg.times,
                      "comma-separated snapshot times (default 1,10,20,40,100,500)")
          ->delimiter(',');
    }
    for (CLI::App* cmd : {evolve, longtime, ensemble}) {
      add_output_options(cmd);
    }

    render->add_option("--input", cfg.input, "grid CSV to render")
        ->required()
        ->check(CLI::ExistingFile);
    render->add_option("--output", cfg.output,
                       "output PPM path (default: input with .ppm)");
    render->add_option("--zoom", cfg.zoom, "pixels per grid cell")
        ->check(CLI::PositiveNumber);

    verify->add_option("--t-max", cfg.t_max, "upper end of the time window")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--samples", cfg.samples,
                       "number of equispaced time samples")
        ->check(CLI::Range(2, 1000000));
    verify->get_option("--n")->description("ring size (default 21, max 31)");
    verify->get_option("--r")->description("realizations (default 20, max 50)");
  }

  void add_model_options(CLI::App* cmd) {
    static const std::map<std::string, DisorderKind> kinds{
        {"none", DisorderKind::None},
        {"dd", DisorderKind::DD},
        {"dod", DisorderKind::DOD},
        {"cdod", DisorderKind::ConstrainedDOD}};
    cmd->add_option("--n", cfg.n, "ring size")->check(CLI::Range(3, 100000));
    cmd->add_option("--j", cfg.source, "starting site (default n/2)");
    cmd->add_option("--kind", cfg.kind, "disorder kind: none, dd, dod, cdod")
        ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
    cmd->add_option("--delta", cfg.delta, "disorder strength in [0, 0.5]")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--r", cfg.realizations,
                    "realizations (default 1000, or 1 for kind none)");
    cmd->add_option("--seed", cfg.seed, "base seed; realization r uses seed+r");
    cmd->add_option("--eps-deg", cfg.eps_deg,
                    "degeneracy tolerance (default 1e-9 * spectral range)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--force-delta", cfg.force_delta,
                  "allow disorder strengths above 0.5");
    cmd->add_option("--threads", cfg.threads, "worker threads (default: all)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--progress", cfg.progress, "report sweep progress on stderr");
  }

  void add_output_options(CLI::App* cmd) {
    cmd->add_option("--out", cfg.out_dir, "output directory (default .)");
    cmd->add_flag("--images", cfg.images, "also render a PPM per grid");
    cmd->add_option("--zoom", cfg.zoom, "pixels per grid cell in images")
        ->check(CLI::PositiveNumber);
  }
};

EnsembleSpec make_spec(const RunConfig& cfg) {
  EnsembleSpec spec{RingSize(cfg.n),
                    cfg.source,
                    cfg.kind,
                    cfg.delta,
                    cfg.realizations,
                    cfg.seed,
                    cfg.times,
                    cfg.eps_deg,
                    cfg.force_delta ? DeltaCap::Ignore : DeltaCap::Enforce};
  return spec;
}

SweepOptions make_sweep_options(const RunConfig& cfg) {
  SweepOptions opts;
  opts.workers = cfg.threads;
  if (cfg.progress) {
    opts.progress = [](std::size_t done, std::size_t total) {
      std::fprintf(stderr, "\r%zu/%zu", done, total);
      if (done == total) std::fputc('\n', stderr);
      std::fflush(stderr);
    };
  }
  return opts;
}

std::string subcommand_name(Subcommand sub) {
  switch (sub) {
    case Subcommand::Evolve: return "evolve";
    case Subcommand::Longtime: return "longtime";
    case Subcommand::Ensemble: return "ensemble";
    case Subcommand::Render: return "render";
    case Subcommand::Verify: return "verify";
  }
  return "?";
}

void emit_grid(const PhaseSpaceGrid& g, const RunConfig& cfg) {
  const std::string stem = grid_filename_stem(subcommand_name(cfg.sub), g.meta);
  const std::filesystem::path csv = cfg.out_dir / (stem + ".csv");
  write_grid_csv(g, csv);
  std::cout << csv.string() << "\n";
  if (cfg.images) {
    const std::filesystem::path ppm = cfg.out_dir / (stem + ".ppm");
    render_heatmap(g, ppm, cfg.zoom);
    std::cout << ppm.string() << "\n";
  }
}

void emit_result(const EnsembleResult& res, const RunConfig& cfg) {
  for (const PhaseSpaceGrid& g : res.snapshots) emit_grid(g, cfg);
  if (res.longtime) emit_grid(*res.longtime, cfg);
}

}  // namespace

RunConfig parse_args(int argc, const char* const* argv) {
  Parser parser;
  try {
    parser.app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    throw HelpRequested{parser.app.help()};
  } catch (const CLI::CallForAllHelp& e) {
    throw HelpRequested{parser.app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunConfig cfg = parser.cfg;
  if (parser.app.got_subcommand(parser.evolve)) {
    cfg.sub = Subcommand::Evolve;
  } else if (parser.app.got_subcommand(parser.longtime)) {
    cfg.sub = Subcommand::Longtime;
  } else if (parser.app.got_subcommand(parser.ensemble)) {
    cfg.sub = Subcommand::Ensemble;
  } else if (parser.app.got_subcommand(parser.render)) {
    cfg.sub = Subcommand::Render;
  } else {
    cfg.sub = Subcommand::Verify;
  }

  if (cfg.sub == Subcommand::Render) {
    if (cfg.output.empty()) {
      cfg.output = cfg.input;
      cfg.output.replace_extension(".ppm");
    }
    return cfg;
  }

  // The interchange check is capped at small instances, so the generic
  // defaults (n=101, r=1000) would always be rejected.
  if (cfg.sub == Subcommand::Verify) {
    if (parser.verify->count("--n") == 0) cfg.n = 21;
    if (parser.verify->count("--r") == 0) cfg.realizations = 20;
  }

  if (cfg.source < 0) {
    cfg.source = cfg.n / 2;
  } else if (cfg.source >= cfg.n) {
    throw UsageError("--j must lie in [0, n)");
  }

  if (cfg.kind == DisorderKind::None) {
    if (cfg.delta != 0.0) {
      std::cerr << "warning: --delta is ignored with --kind none\n";
      cfg.delta = 0.0;
    }
    if (cfg.realizations < 0) cfg.realizations = 1;
  } else {
    if (cfg.realizations < 0) cfg.realizations = 1000;
  }
  if (cfg.realizations < 1) {
    throw UsageError("--r must be at least 1");
  }

  if (cfg.delta > kDeltaCap) {
    if (!cfg.force_delta) {
      throw UsageError("--delta above 0.5 needs --force-delta");
    }
    std::cerr << "warning: disorder strength " << cfg.delta
              << " is outside the studied range [0, 0.5]\n";
  }

  if (cfg.sub == Subcommand::Evolve || cfg.sub == Subcommand::Ensemble) {
    if (cfg.times.empty()) cfg.times = kDefaultTimes;
    for (double t : cfg.times) {
      if (!(t >= 0.0)) throw UsageError("--times entries must be nonnegative");
    }
  }
  return cfg;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("wignerwalk");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return parse_args(static_cast<int>(argv.size()), argv.data());
}

int run(const RunConfig& cfg) {
  try {
    switch (cfg.sub) {
      case Subcommand::Evolve:
      case Subcommand::Longtime:
      case Subcommand::Ensemble: {
        std::filesystem::create_directories(cfg.out_dir);
        const bool snapshots = cfg.sub != Subcommand::Longtime;
        const bool longtime = cfg.sub != Subcommand::Evolve;
        const EnsembleResult res = ensemble_sweep(make_spec(cfg), snapshots,
                                                  longtime, make_sweep_options(cfg));
        emit_result(res, cfg);
        return 0;
      }
      case Subcommand::Render: {
        const PhaseSpaceGrid g = read_grid_csv(cfg.input);
        render_heatmap(g, cfg.output, cfg.zoom);
        std::cout << cfg.output.string() << "\n";
        return 0;
      }
      case Subcommand::Verify: {
        const InterchangeReport rep =
            verify_interchange(make_spec(cfg), cfg.t_max, cfg.samples);
        const bool ok = rep.max_dev <= kInterchangeTol;
        std::printf("interchange max deviation %.3e (tol %.0e): %s\n",
                    rep.max_dev, kInterchangeTol, ok ? "ok" : "FAILED");
        return ok ? 0 : 2;
      }
    }
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace wignerwalk
