// Isolated activity peak detection: outlier fraction against a sliding
// median baseline, an isolation rule for nearby peaks, and alignment of
// the selected peak to relative day 0.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tagdyn/ingest.hpp"

namespace tagdyn {

enum class EdgePolicy {
  kStrict,     // only days with a full window are evaluated
  kTruncated,  // edge days use the available part of the window, flagged
};

struct PeakParams {
  int half_window = 30;     // L: window is 2L+1 days
  int64_t min_activity = 10;  // baseline regularizer
  double threshold = 10.0;  // outlier fraction must strictly exceed this
  int isolation_days = 7;   // peaks closer than this discard each other
  EdgePolicy edge_policy = EdgePolicy::kStrict;

  void validate() const;
};

struct DetectedPeak {
  int day = 0;
  double outlier_fraction = 0.0;
  double baseline = 0.0;
  bool truncated_window = false;
};

struct PeakRecord {
  std::string hashtag;
  int peak_day = 0;
  double outlier_fraction = 0.0;
  double baseline = 0.0;
  std::vector<int64_t> aligned_counts;  // relative days -half_span..+half_span
  int half_span = 7;

  int64_t count_at(int rel_day) const { return aligned_counts[rel_day + half_span]; }
  int64_t window_total() const;
};

// Median of the 2L+1 window centered on day i0 (center included). Under the
// strict policy the full window must fit; truncated evaluates whatever part
// exists. Even-length truncated windows use the mean of the two central
// order statistics.
double window_baseline(const std::vector<int64_t>& counts, int i0, const PeakParams& p);

// p(i0) = (n(i0) - baseline) / max(baseline, min_activity).
double outlier_fraction(const std::vector<int64_t>& counts, int i0, const PeakParams& p);

// All days with p(i0) strictly above the threshold, sorted by day. Under
// the strict policy the series must cover at least one full window.
std::vector<DetectedPeak> detect_peaks(const std::vector<int64_t>& counts,
                                       const PeakParams& p);

// Discards every peak with another peak strictly closer than
// isolation_days, then picks the survivor with the highest outlier
// fraction (earliest day on ties).
std::optional<DetectedPeak> isolate_and_select(const std::vector<DetectedPeak>& peaks,
                                               const PeakParams& p);

// Re-indexes counts so the peak sits at relative day 0, covering
// [-half_span, +half_span]. Throws if the span leaves the series.
PeakRecord align_to_peak(const ActivitySeries& series, const DetectedPeak& peak,
                         int half_span = 7);

// Full per-hashtag pipeline: detect, isolate, select, align. Hashtags
// without a surviving peak (or whose alignment span leaves the series)
// yield nothing.
std::optional<PeakRecord> select_peak(const ActivitySeries& series, const PeakParams& p,
                                      int half_span = 7);

void write_peaks_csv(const std::string& path, const std::vector<PeakRecord>& peaks);
void write_aligned_csv(const std::string& path, const std::vector<PeakRecord>& peaks);
std::vector<PeakRecord> read_peaks_dir(const std::string& dir);

}  // namespace tagdyn
