// Command-line front end: stage commands, the full pipeline runner and the
// synthetic data generator.
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tagdyn/pipeline.hpp"
#include "tagdyn/synthcascade.hpp"
#include "tagdyn/util.hpp"

namespace {

using namespace tagdyn;

struct CliState {
  std::string config_path;
  std::optional<uint64_t> seed;
  bool verbose = false;

  // Overrides for the config file; empty/unset keeps the config value.
  std::string tweets, graph, run_dir, wordnet_dir, stopwords, profiles_dir;
  std::string start;  // date or epoch seconds
  std::optional<int> days;
  std::optional<int64_t> min_users;

  // Stage inputs/outputs. When omitted, stages fall back to the fixed
  // <run>/<stage>/ layout under the configured out_dir.
  std::string series, peaks_dir, features_csv, labels, stage_out;
  std::optional<int> L, nmin, isolation, half_span, kmin, kmax, restarts, depth,
      topk;
  std::optional<double> pt;
  std::string edges;

  // simulate
  std::string sim_config, out_tweets, out_truth, out_graph;

  std::function<void()> action;
};

int64_t parse_window_start(const std::string& s) {
  if (s.find('-') != std::string::npos) return parse_utc_date(s);
  try {
    size_t used = 0;
    int64_t v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw DataError("bad --start '" + s + "' (YYYY-MM-DD or epoch seconds)");
}

PipelineConfig assemble_config(const CliState& st) {
  PipelineConfig c;
  if (!st.config_path.empty()) c = load_pipeline_config(st.config_path);
  if (st.seed) c.seed = *st.seed;
  if (!st.tweets.empty()) c.tweets_path = st.tweets;
  if (!st.graph.empty()) c.graph_path = st.graph;
  if (!st.run_dir.empty()) c.out_dir = st.run_dir;
  if (!st.wordnet_dir.empty()) c.wordnet_dir = st.wordnet_dir;
  if (!st.stopwords.empty()) c.stopwords_path = st.stopwords;
  if (!st.profiles_dir.empty()) c.profiles_dir = st.profiles_dir;
  if (!st.start.empty()) c.window_start = parse_window_start(st.start);
  if (st.days) c.window_days = *st.days;
  if (st.min_users) c.min_users = *st.min_users;
  if (st.L) c.peak_params.half_window = *st.L;
  if (st.nmin) c.peak_params.min_activity = *st.nmin;
  if (st.pt) c.peak_params.threshold = *st.pt;
  if (st.isolation) c.peak_params.isolation_days = *st.isolation;
  if (!st.edges.empty())
    c.peak_params.edge_policy =
        st.edges == "strict" ? EdgePolicy::kStrict : EdgePolicy::kTruncated;
  if (st.half_span) c.half_span = *st.half_span;
  if (st.kmin) c.k_min = *st.kmin;
  if (st.kmax) c.k_max = *st.kmax;
  if (st.restarts) c.restarts = *st.restarts;
  if (st.depth) c.grounding.concept_depth = *st.depth;
  if (st.topk) c.top_concepts = *st.topk;
  return c;
}

std::string in_run(const PipelineConfig& c, const char* rel) {
  return (std::filesystem::path(c.out_dir) / rel).string();
}

const std::string& pick(const std::string& flag, const std::string& fallback,
                        std::string& storage) {
  if (!flag.empty()) return flag;
  storage = fallback;
  return storage;
}

void run_simulate(const CliState& st) {
  uint64_t seed = st.seed.value_or(42);
  SimulateSpec spec = load_simulate_spec(st.sim_config);
  if (spec.corpus) {
    CorpusResult res = gen_corpus(*spec.corpus, seed);
    write_tweets_jsonl(st.out_tweets, res.tweets);
    write_truths_json(res.truths, st.out_truth);
    if (!st.out_graph.empty()) write_graph_csv(res.graph, st.out_graph);
    if (st.verbose)
      std::fprintf(stderr, "[simulate] %zu cascades, %zu tweets, %zu nodes\n",
                   res.truths.size(), res.tweets.size(), res.graph.node_count());
    return;
  }
  FollowerGraph graph = gen_graph(spec.nodes, spec.mean_out_degree,
                                  Rng::derive(seed, "graph").next_u64());
  Rng rng = Rng::derive(seed, "cascade");
  CascadeResult res = gen_cascade(graph, *spec.single, rng);
  write_tweets_jsonl(st.out_tweets, res.tweets);
  write_truths_json({res.truth}, st.out_truth);
  if (!st.out_graph.empty()) write_graph_csv(graph, st.out_graph);
  if (st.verbose)
    std::fprintf(stderr, "[simulate] %zu tweets, %zu adopters, %zu nodes\n",
                 res.tweets.size(), res.truth.first_use.size(),
                 graph.node_count());
}

void add_stage_out(CLI::App* cmd, CliState& st) {
  cmd->add_option("--out", st.stage_out, "output directory for this stage");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hashtag peak dynamics toolkit"};
  app.require_subcommand(1);
  CliState st;
  app.add_option("--config", st.config_path, "pipeline config JSON")
      ->envname("TAGDYN_CONFIG");
  app.add_option("--seed", st.seed, "seed override");
  app.add_flag("--verbose", st.verbose, "progress on stderr");

  CLI::App* ing = app.add_subcommand("ingest", "build daily activity series");
  ing->add_option("--input,--tweets", st.tweets, "tweet JSONL file");
  ing->add_option("--start", st.start,
                  "window start (YYYY-MM-DD or epoch seconds)");
  ing->add_option("--days", st.days, "window length in days");
  ing->add_option("--min-users", st.min_users, "popularity floor (distinct users)");
  add_stage_out(ing, st);
  ing->callback([&] {
    st.action = [&st] {
      PipelineConfig c = assemble_config(st);
      if (c.tweets_path.empty()) throw DataError("ingest needs --input");
      std::string out;
      run_ingest(c, c.tweets_path, pick(st.stage_out, in_run(c, "ingest"), out));
    };
  });

  CLI::App* pk = app.add_subcommand("peaks", "detect and align isolated peaks");
  pk->add_option("--series", st.series, "daily series CSV");
  pk->add_option("--L", st.L, "median window half width in days");
  pk->add_option("--nmin", st.nmin, "baseline floor");
  pk->add_option("--pt", st.pt, "outlier fraction threshold");
  pk->add_option("--isolation", st.isolation, "minimum spacing between peaks");
  pk->add_option("--edges", st.edges, "median window policy at the edges")
      ->check(CLI::IsMember({"strict", "truncated"}));
  pk->add_option("--half-span", st.half_span, "aligned excerpt half span");
  pk->add_option("--days", st.days, "series length (else summary.json)");
  add_stage_out(pk, st);
  pk->callback([&] {
    st.action = [&st] {
      PipelineConfig c = assemble_config(st);
      std::string in, out;
      run_peaks(c, pick(st.series, in_run(c, "ingest/series.csv"), in),
                pick(st.stage_out, in_run(c, "peaks"), out));
    };
  });

  CLI::App* ft = app.add_subcommand("features", "before/peak/after fractions");
  ft->add_option("--peaks", st.peaks_dir, "peaks stage directory");
  add_stage_out(ft, st);
  ft->callback([&] {
    st.action = [&st] {
      PipelineConfig c = assemble_config(st);
      std::string in, out;
      run_features(c, pick(st.peaks_dir, in_run(c, "peaks"), in),
                   pick(st.stage_out, in_run(c, "features"), out));
    };
  });

  CLI::App* cl = app.add_subcommand("classify", "mixture fit, selection, labels");
  cl->add_option("--features", st.features_csv, "feature CSV");
  cl->add_option("--kmin", st.kmin, "smallest component count");
  cl->add_option("--kmax", st.kmax, "largest component count");
  cl->add_option("--restarts", st.restarts, "EM restarts per fit");
  cl->add_option("--seed", st.seed, "seed override");
  add_stage_out(cl, st);
  cl->callback([&] {
    st.action = [&st] {
      PipelineConfig c = assemble_config(st);
      std::string in, out;
      run_classify(c, pick(st.features_csv, in_run(c, "features/features.csv"), in),
                   pick(st.stage_out, in_run(c, "classify"), out));
    };
  });

  CLI::App* se =
      app.add_subcommand("semantics", "concept vectors and class fingerprints");
  se->add_option("--tweets", st.tweets, "tweet JSONL file");
  se->add_option("--wordnet-dir", st.wordnet_dir, "lexicon directory");
  se->add_option("--stopwords", st.stopwords, "stopword list");
  se->add_option("--profiles,--profiles-dir", st.profiles_dir,
                 "language profile directory");
  se->add_option("--depth", st.depth, "concept rollup depth");
  se->add_option("--topk", st.topk, "concepts kept per vector");
  se->add_option("--labels", st.labels, "class assignment CSV");
  add_stage_out(se, st);
  se->callback([&] {
    st.action = [&st] {
      PipelineConfig c = assemble_config(st);
      if (c.tweets_path.empty()) throw DataError("semantics needs --tweets");
      std::string lab, out;
      run_semantics(c, c.tweets_path,
                    pick(st.labels, in_run(c, "classify/assignments.csv"), lab),
                    pick(st.stage_out, in_run(c, "semantics"), out));
    };
  });

  CLI::App* di = app.add_subcommand("diffusion", "epidemic parameter estimates");
  di->add_option("--graph", st.graph, "follower graph CSV");
  di->add_option("--tweets", st.tweets, "tweet JSONL file");
  di->add_option("--labels", st.labels, "class assignment CSV");
  add_stage_out(di, st);
  di->callback([&] {
    st.action = [&st] {
      PipelineConfig c = assemble_config(st);
      if (c.tweets_path.empty()) throw DataError("diffusion needs --tweets");
      std::string lab, out;
      run_diffusion(c, c.graph_path, c.tweets_path,
                    pick(st.labels, in_run(c, "classify/assignments.csv"), lab),
                    pick(st.stage_out, in_run(c, "diffusion"), out));
    };
  });

  CLI::App* rp = app.add_subcommand("report", "plot-ready summary tables");
  rp->add_option("--tweets", st.tweets, "tweet JSONL file");
  rp->add_option("--start", st.start,
                 "window start (YYYY-MM-DD or epoch seconds)");
  rp->add_option("--days", st.days, "window length in days");
  rp->add_option("--out", st.run_dir, "run directory");
  rp->callback([&] {
    st.action = [&st] { stage_report(assemble_config(st)); };
  });

  CLI::App* run = app.add_subcommand("run", "full pipeline with manifest");
  run->add_option("--tweets", st.tweets, "tweet JSONL file");
  run->add_option("--graph", st.graph, "follower graph CSV");
  run->add_option("--out", st.run_dir, "run directory");
  run->add_option("--start", st.start,
                  "window start (YYYY-MM-DD or epoch seconds)");
  run->add_option("--days", st.days, "window length in days");
  run->add_option("--min-users", st.min_users, "popularity floor");
  run->add_option("--wordnet-dir", st.wordnet_dir, "lexicon directory");
  run->add_option("--stopwords", st.stopwords, "stopword list");
  run->add_option("--profiles,--profiles-dir", st.profiles_dir,
                  "language profile directory");
  run->callback([&] {
    st.action = [&st] { run_pipeline(assemble_config(st), st.verbose); };
  });

  CLI::App* sim =
      app.add_subcommand("simulate", "synthetic graph + cascade generator");
  sim->add_option("--config", st.sim_config, "simulation spec")->required();
  sim->add_option("--seed", st.seed, "generator seed");
  sim->add_option("--out-tweets", st.out_tweets, "tweet JSONL output")
      ->required();
  sim->add_option("--out-truth", st.out_truth, "ground truth JSON output")
      ->required();
  sim->add_option("--out-graph", st.out_graph, "follower graph CSV output");
  sim->callback([&] {
    st.action = [&st] { run_simulate(st); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (!st.action) throw InternalError("no command selected");
    st.action();
    return 0;
  } catch (const DataError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const InternalError& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 3;
  }
}
