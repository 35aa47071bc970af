// Copyright 2026 The domlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "domlab/algo_spec.h"
#include "domlab/bounds.h"
#include "domlab/equilibrium.h"
#include "domlab/errors.h"
#include "domlab/game_io.h"
#include "domlab/iesds.h"
#include "domlab/simulate.h"
#include "domlab/svg_plot.h"
#include "domlab/trace_io.h"

namespace domlab::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::uint64_t DefaultSeed() {
  if (const char* env = std::getenv("DOMLAB_SEED")) {
    const std::string text(env);
    std::uint64_t v = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), v);
    if (!text.empty() && ec == std::errc() && ptr == text.data() + text.size()) {
      return v;
    }
    throw UsageError("DOMLAB_SEED must be a non-negative integer");
  }
  return 0;
}

void Emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    WriteFile(path, text);
  }
}

// ---------------------------------------------------------------- gen
struct GenOptions {
  std::string type;
  int k = 0;
  double c = 0.0;
  int sellers = 0;
  double c1 = 3.0;
  double c2 = 1.5;
  double quality_noise = 0.0;
  std::vector<double> qualities;
  std::vector<double> prices;
  int players = 2;
  int actions = 2;
  std::uint64_t seed = 0;
  std::string output;
};

void RunGen(const GenOptions& o, std::ostream& out) {
  std::optional<Game> game;
  if (o.type == "dir") {
    if (o.k == 0) throw UsageError("gen --type dir needs --K and --c");
    game = Game::Dir({o.k, o.c});
  } else if (o.type == "lemons") {
    if (o.sellers < 1) throw UsageError("gen --type lemons needs --sellers");
    LemonsParams p =
        LemonsParams::Standard(o.sellers, o.c1, o.c2, o.quality_noise);
    if (!o.qualities.empty()) p.qualities = o.qualities;
    if (!o.prices.empty()) p.prices = o.prices;
    game = Game::Lemons(p);
  } else if (o.type == "random") {
    game = MakeRandomGame(o.players, o.actions, o.seed);
  } else {
    throw UsageError("unknown game type \"" + o.type + "\"");
  }
  Emit(GameToJson(*game).dump(2) + "\n", o.output, out);
}

// ---------------------------------------------------------------- solve
struct SolveOptions {
  std::string game;
  bool analytic = false;
  std::string output;
};

void RunSolve(const SolveOptions& o, std::ostream& out) {
  const Game game = LoadGame(o.game);
  EliminationPath path;
  if (o.analytic) {
    if (game.Kind() != PayoffKind::kLemons) {
      throw UsageError("--analytic applies to lemons games only");
    }
    path = LemonsAnalyticPath(game.Lemons());
  } else {
    path = Iesds(game);
  }
  json j = PathToJson(path);
  j["method"] = o.analytic ? "analytic" : "iesds";
  Emit(j.dump(2) + "\n", o.output, out);
}

// ---------------------------------------------------------------- simulate
struct SimulateOptions {
  std::string game;
  std::vector<std::string> algos;
  std::int64_t horizon = 0;
  double noise_std = 0.0;
  int seeds = 1;
  std::uint64_t seed = 0;
  std::string feedback = "bandit";
  std::string output = ".";
  int jobs = 1;
  bool dump_dists = false;
};

std::string Timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

void RunSimulate(const SimulateOptions& o, std::ostream& out) {
  if (o.seeds < 1) throw UsageError("--seeds must be >= 1");
  if (o.jobs < 1) throw UsageError("--jobs must be >= 1");
  const Game game = LoadGame(o.game);
  const FeedbackMode mode = ParseFeedbackMode(o.feedback);
  std::vector<AlgoSpec> specs;
  std::set<std::string> slugs;
  for (const auto& text : o.algos) {
    specs.push_back(ParseAlgoSpec(text));
    if (!slugs.insert(AlgoSlug(specs.back())).second) {
      throw UsageError("algorithm \"" + text + "\" given twice");
    }
  }
  const EliminationPath path = MetricPath(game);
  std::vector<RunConfig> configs;
  for (const auto& spec : specs) {
    for (int k = 0; k < o.seeds; ++k) {
      RunConfig c;
      c.algos = {spec.text};
      c.horizon = o.horizon;
      c.feedback = mode;
      c.noise_std = o.noise_std;
      c.seed = o.seed + static_cast<std::uint64_t>(k);
      configs.push_back(std::move(c));
    }
  }
  // Validate every learner against the game before spending any time.
  for (const auto& c : configs) {
    RunConfig probe = c;
    probe.horizon = 1;
    RunSelfPlay(game, path, probe);
  }
  const std::vector<Trace> traces = RunBatch(game, path, configs, o.jobs);

  fs::create_directories(o.output);
  json runs = json::array();
  json summary = json::array();
  for (std::size_t i = 0; i < traces.size(); ++i) {
    const AlgoSpec& spec = specs[i / o.seeds];
    const std::string file = TraceFileName(AlgoSlug(spec), traces[i].seed);
    WriteFile((fs::path(o.output) / file).string(),
              TraceToCsv(traces[i], o.dump_dists));
    runs.push_back({{"algo", spec.text}, {"seed", traces[i].seed}, {"file", file}});
    const Checkpoint& last = traces[i].checkpoints.back();
    json row = {{"algo", spec.text}, {"seed", traces[i].seed}, {"T", last.t},
                {"max_dom_prob", last.max_dom_prob}};
    row["poe"] = last.poe ? json(*last.poe) : json(nullptr);
    row["ne_mass"] = last.ne_mass ? json(*last.ne_mass) : json(nullptr);
    summary.push_back(std::move(row));
  }
  json manifest = {
      {"game", GameToJson(game)},
      {"L0", path.Length()},
      {"algos", o.algos},
      {"T", o.horizon},
      {"feedback", FeedbackModeName(mode)},
      {"noise_std", o.noise_std},
      {"seeds", o.seeds},
      {"base_seed", o.seed},
      {"runs", runs},
      {"timestamp", Timestamp()},
  };
  WriteFile((fs::path(o.output) / "manifest.json").string(),
            manifest.dump(2) + "\n");
  out << json{{"runs", summary}}.dump(2) << "\n";
}

// ---------------------------------------------------------------- plot
struct PlotOptions {
  std::vector<std::string> files;
  std::string metric = "poe";
  std::string title = "Progress of elimination";
  std::string output;
};

std::string SeriesKey(const fs::path& file) {
  const std::string stem = file.stem().string();
  const auto pos = stem.rfind("__seed");
  return pos == std::string::npos ? stem : stem.substr(0, pos);
}

void RunPlot(const PlotOptions& o, std::ostream& out) {
  std::map<std::string, std::string> labels;  // slug -> spec text
  std::vector<std::string> order;
  std::map<std::string, PlotSeries> series;
  for (const auto& name : o.files) {
    const fs::path file(name);
    const fs::path manifest = file.parent_path() / "manifest.json";
    if (fs::exists(manifest)) {
      try {
        const json m = json::parse(ReadFile(manifest.string()));
        for (const auto& run : m.at("runs")) {
          const fs::path f(run.at("file").get<std::string>());
          labels[SeriesKey(f)] = run.at("algo").get<std::string>();
        }
      } catch (const json::exception&) {
        // A broken manifest only costs the nicer legend labels.
      }
    }
    const auto rows = ParseTraceCsv(ReadFile(name), name);
    std::vector<std::pair<std::int64_t, double>> run;
    for (const auto& r : rows) {
      if (r.agent == -1 && r.metric == o.metric) run.emplace_back(r.t, r.value);
    }
    if (run.empty()) {
      throw Error(name + ": no \"" + o.metric + "\" rows");
    }
    const std::string key = SeriesKey(file);
    if (!series.count(key)) order.push_back(key);
    series[key].runs.push_back(std::move(run));
  }
  std::vector<PlotSeries> list;
  for (const auto& key : order) {
    PlotSeries s = std::move(series[key]);
    s.label = labels.count(key) ? labels[key] : key;
    list.push_back(std::move(s));
  }
  Emit(RenderSvg(list, o.title, o.metric), o.output, out);
}

// ---------------------------------------------------------------- bounds
struct BoundsOptions {
  T1Params params;
  int length = 0;
  std::string output;
};

void RunBounds(const BoundsOptions& o, std::ostream& out) {
  const int length = o.length > 0 ? o.length : 2 * o.params.num_actions - 2;
  const auto& p = o.params;
  const std::vector<std::int64_t> schedule = HorizonSchedule(p, std::max(1, length));
  json table = json::array();
  for (std::size_t l = 0; l < schedule.size(); ++l) {
    table.push_back({{"l", l + 1}, {"T", schedule[l]}});
  }
  json j = {
      {"params",
       {{"K", p.num_actions}, {"N", p.num_players}, {"sigma", p.sigma},
        {"beta", p.beta}, {"b", p.b}, {"Delta", p.gap}, {"eps", p.eps},
        {"delta", p.delta}, {"L0", length}}},
      {"T1", schedule.front()},
      {"schedule", table},
  };
  Emit(j.dump(2) + "\n", o.output, out);
}

// ---------------------------------------------------------------- CE tools
struct ConstructOptions {
  int k = 0;
  double c = 0.0;
  double eps = 0.0;
  std::string output;
};

void RunConstruct(const ConstructOptions& o, std::ostream& out) {
  const DirCeConstruction ce = ConstructDirEpsilonCe(o.k, o.c, o.eps);
  Emit(DistributionToJson(ce.pi).dump(2) + "\n", o.output, out);
}

struct VerifyOptions {
  std::string game;
  std::string dist;
  double eps = 0.0;
  std::string output;
};

void RunVerify(const VerifyOptions& o, std::ostream& out) {
  const Game game = LoadGame(o.game);
  json dj;
  try {
    dj = json::parse(ReadFile(o.dist));
  } catch (const json::parse_error& e) {
    throw UsageError(o.dist + ": " + e.what());
  }
  const JointDistribution pi = DistributionFromJson(dj);
  const double gap = EpsilonCeGap(game, pi);
  json j = {{"gap", gap},
            {"eps", o.eps},
            {"pass", gap <= o.eps},
            {"welfare", Welfare(game, pi)}};
  Emit(j.dump(2) + "\n", o.output, out);
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"domlab: dominance-elimination laboratory for learning in games"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  std::uint64_t default_seed = 0;
  try {
    default_seed = DefaultSeed();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  GenOptions gen;
  gen.seed = default_seed;
  auto* gen_cmd = app.add_subcommand("gen", "Write a game file");
  gen_cmd->add_option("--type", gen.type, "dir, lemons or random")->required();
  gen_cmd->add_option("--K", gen.k, "DIR: actions per player");
  gen_cmd->add_option("--c", gen.c, "DIR: penalty parameter");
  gen_cmd->add_option("--sellers", gen.sellers, "Lemons: number of sellers");
  gen_cmd->add_option("--c1", gen.c1, "Lemons: listing cost")->capture_default_str();
  gen_cmd->add_option("--c2", gen.c2, "Lemons: buyer multiplier")->capture_default_str();
  gen_cmd->add_option("--quality-noise", gen.quality_noise,
                      "Lemons: std of the reservation-price noise");
  gen_cmd->add_option("--qualities", gen.qualities,
                      "Lemons: qualities (default N/2+1 .. 3N/2)");
  gen_cmd->add_option("--prices", gen.prices,
                      "Lemons: price grid (default N/2 .. 3N/2)");
  gen_cmd->add_option("--players", gen.players, "random: players");
  gen_cmd->add_option("--actions", gen.actions, "random: actions per player");
  gen_cmd->add_option("--seed", gen.seed, "random: seed");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run iterated strict-dominance elimination");
  solve_cmd->add_option("game", solve.game, "Game file")->required();
  solve_cmd->add_flag("--analytic", solve.analytic,
                      "Lemons: closed-form path instead of enumeration");
  solve_cmd->add_option("-o,--output", solve.output, "Output file (default stdout)");

  SimulateOptions sim;
  sim.seed = default_seed;
  auto* sim_cmd = app.add_subcommand("simulate", "Self-play learning runs");
  sim_cmd->add_option("--game", sim.game, "Game file")->required();
  sim_cmd->add_option("--algo", sim.algos,
                      "Algorithm spec, repeatable (e.g. exp3dh:b=0.2,beta=20)")
      ->required();
  sim_cmd->add_option("--T", sim.horizon, "Rounds")->required()->check(CLI::PositiveNumber);
  sim_cmd->add_option("--noise-std", sim.noise_std, "Gaussian payoff noise")
      ->check(CLI::NonNegativeNumber);
  sim_cmd->add_option("--seeds", sim.seeds, "Seeds per algorithm")->capture_default_str();
  sim_cmd->add_option("--seed", sim.seed, "First seed (default $DOMLAB_SEED or 0)");
  sim_cmd->add_option("--feedback", sim.feedback, "bandit or exact-gradient")
      ->capture_default_str();
  sim_cmd->add_option("-o,--output", sim.output, "Output directory")->capture_default_str();
  sim_cmd->add_option("--jobs", sim.jobs, "Concurrent runs")->capture_default_str();
  sim_cmd->add_flag("--dump-dists", sim.dump_dists, "Also write per-agent distributions");

  PlotOptions plot;
  auto* plot_cmd = app.add_subcommand("plot", "Render trace CSVs as an SVG chart");
  plot_cmd->add_option("traces", plot.files, "Trace CSV files")->required();
  plot_cmd->add_option("--metric", plot.metric, "Metric to plot")->capture_default_str();
  plot_cmd->add_option("--title", plot.title, "Chart title");
  plot_cmd->add_option("-o,--output", plot.output, "Output SVG (default stdout)");

  BoundsOptions bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Convergence horizon calculators");
  bounds_cmd->add_option("--K", bounds.params.num_actions, "Actions per player")->required();
  bounds_cmd->add_option("--N", bounds.params.num_players, "Players")->required();
  bounds_cmd->add_option("--sigma", bounds.params.sigma, "Noise level")->required();
  bounds_cmd->add_option("--beta", bounds.params.beta, "Discount exponent")->required();
  bounds_cmd->add_option("--b", bounds.params.b, "Exploration exponent")->required();
  bounds_cmd->add_option("--Delta", bounds.params.gap, "Dominance gap")->required();
  bounds_cmd->add_option("--eps", bounds.params.eps, "Accuracy")->required();
  bounds_cmd->add_option("--delta", bounds.params.delta, "Failure probability")->required();
  bounds_cmd->add_option("--L0", bounds.length, "Elimination length (default 2K-2)");
  bounds_cmd->add_option("-o,--output", bounds.output, "Output file (default stdout)");

  ConstructOptions construct;
  auto* construct_cmd =
      app.add_subcommand("construct-ce", "Build the staircase eps-CE of DIR(K, c)");
  construct_cmd->add_option("--K", construct.k, "Actions per player")->required();
  construct_cmd->add_option("--c", construct.c, "Penalty parameter")->required();
  construct_cmd->add_option("--eps", construct.eps, "Target eps")->required();
  construct_cmd->add_option("-o,--output", construct.output, "Output file (default stdout)");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify-ce", "Check a joint distribution is an eps-CE");
  verify_cmd->add_option("--game", verify.game, "Game file")->required();
  verify_cmd->add_option("--dist", verify.dist, "Distribution file")->required();
  verify_cmd->add_option("--eps", verify.eps, "Tolerance")->required();
  verify_cmd->add_option("-o,--output", verify.output, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*gen_cmd) RunGen(gen, out);
    if (*solve_cmd) RunSolve(solve, out);
    if (*sim_cmd) RunSimulate(sim, out);
    if (*plot_cmd) RunPlot(plot, out);
    if (*bounds_cmd) RunBounds(bounds, out);
    if (*construct_cmd) RunConstruct(construct, out);
    if (*verify_cmd) RunVerify(verify, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace domlab::cli
