// End-to-end run orchestration: stage sequencing, fixed on-disk layout,
// and a digest manifest for reproducibility checks.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tagdyn/grounding.hpp"
#include "tagdyn/mixture.hpp"
#include "tagdyn/peaks.hpp"

namespace tagdyn {

inline constexpr const char* kArtifactName = "tagdyn";
inline constexpr const char* kArtifactVersion = "0.1.0";

struct PipelineConfig {
  // Inputs. The follower graph is optional; without it the diffusion stage
  // is skipped and the run stops after semantics + report.
  std::string tweets_path;
  std::string graph_path;
  std::string wordnet_dir;
  std::string stopwords_path;
  std::string profiles_dir;
  std::string out_dir = "out";
  uint64_t seed = 42;

  // Observation window.
  int64_t window_start = 0;  // UTC epoch seconds, midnight-aligned
  int window_days = 0;

  // Stage parameters.
  int64_t min_users = 500;
  PeakParams peak_params;
  int half_span = 7;

  int k_min = 1;
  int k_max = 8;
  int restarts = 20;
  int cv_restarts = 5;
  int folds = 10;
  EmOptions em;
  LabelRules label_rules;

  GroundingOptions grounding;
  size_t top_concepts = 15;
  size_t top_words_k = 50;

  size_t raster_hashtags = 4;  // raster plot covers the top peaks only

  void validate() const;
};

// Reads a JSON config file. Unknown keys are rejected; missing keys keep
// their defaults. `window_start` accepts either epoch seconds or a
// YYYY-MM-DD date string.
PipelineConfig load_pipeline_config(const std::string& path);

struct StageOutcome {
  std::string name;
  std::vector<std::string> outputs;  // paths relative to out_dir
  double seconds = 0.0;
};

struct PipelineResult {
  std::vector<StageOutcome> stages;
  std::string manifest_path;
};

// Runs ingest -> peaks -> features -> classify -> semantics -> [diffusion]
// -> report, each stage reading its predecessor's files under out_dir and
// writing its own. Finishes by writing manifest.json with input/output
// digests; given identical inputs, config, and seed the manifest bytes are
// identical across runs. On stage failure a FAILED marker naming the stage
// is left in out_dir, partial outputs are retained, and the error is
// rethrown.
PipelineResult run_pipeline(const PipelineConfig& config, bool verbose = false);

// Stage cores with explicit inputs, used by the per-stage CLI commands.
// Parameters come from the config; paths are passed in. Each writes its
// fixed output files into out_dir.
void run_ingest(const PipelineConfig& p, const std::string& tweets_jsonl,
                const std::string& out_dir);
// window_days <= 0 in the config falls back to summary.json next to the
// series file.
void run_peaks(const PipelineConfig& p, const std::string& series_csv,
               const std::string& out_dir);
void run_features(const PipelineConfig& p, const std::string& peaks_dir,
                  const std::string& out_dir);
void run_classify(const PipelineConfig& p, const std::string& features_csv,
                  const std::string& out_dir);
void run_semantics(const PipelineConfig& p, const std::string& tweets_jsonl,
                   const std::string& labels_csv, const std::string& out_dir);
void run_diffusion(const PipelineConfig& p, const std::string& graph_csv,
                   const std::string& tweets_jsonl, const std::string& labels_csv,
                   const std::string& out_dir);

// Fixed-layout wrappers over the cores: stage files live in
// <out_dir>/<stage>/, inputs come from the preceding stage's directory.
void stage_ingest(const PipelineConfig& config);
void stage_peaks(const PipelineConfig& config);
void stage_features(const PipelineConfig& config);
void stage_classify(const PipelineConfig& config);
void stage_semantics(const PipelineConfig& config);
void stage_diffusion(const PipelineConfig& config);
void stage_report(const PipelineConfig& config);

}  // namespace tagdyn
