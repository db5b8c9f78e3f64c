#include "tagdyn/peaks.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

#include "tagdyn/util.hpp"

namespace tagdyn {

void PeakParams::validate() const {
  if (half_window < 1) throw DataError("peak half-window must be >= 1");
  if (min_activity < 1) throw DataError("minimum activity level must be >= 1");
  if (threshold <= 0.0) throw DataError("outlier threshold must be positive");
  if (isolation_days < 1) throw DataError("isolation distance must be >= 1");
}

int64_t PeakRecord::window_total() const {
  int64_t t = 0;
  for (auto c : aligned_counts) t += c;
  return t;
}

double window_baseline(const std::vector<int64_t>& counts, int i0, const PeakParams& p) {
  const int n = static_cast<int>(counts.size());
  if (i0 < 0 || i0 >= n) throw DataError("window center outside series");
  int lo = i0 - p.half_window;
  int hi = i0 + p.half_window;
  if (lo < 0 || hi >= n) {
    if (p.edge_policy == EdgePolicy::kStrict) {
      throw DataError("window [" + std::to_string(lo) + "," + std::to_string(hi) +
                      "] outside series of length " + std::to_string(n));
    }
    lo = std::max(lo, 0);
    hi = std::min(hi, n - 1);
  }
  std::vector<int64_t> window(counts.begin() + lo, counts.begin() + hi + 1);
  const size_t m = window.size();
  const size_t mid = m / 2;
  std::nth_element(window.begin(), window.begin() + mid, window.end());
  double median = static_cast<double>(window[mid]);
  if (m % 2 == 0) {
    std::nth_element(window.begin(), window.begin() + mid - 1, window.begin() + mid);
    median = 0.5 * (median + static_cast<double>(window[mid - 1]));
  }
  return median;
}

double outlier_fraction(const std::vector<int64_t>& counts, int i0, const PeakParams& p) {
  double baseline = window_baseline(counts, i0, p);
  double denom = std::max(baseline, static_cast<double>(p.min_activity));
  return (static_cast<double>(counts[i0]) - baseline) / denom;
}

std::vector<DetectedPeak> detect_peaks(const std::vector<int64_t>& counts,
                                       const PeakParams& p) {
  p.validate();
  const int n = static_cast<int>(counts.size());
  const int full = 2 * p.half_window + 1;
  if (p.edge_policy == EdgePolicy::kStrict && n < full) {
    throw DataError("series of length " + std::to_string(n) +
                    " is shorter than the required window of " + std::to_string(full) +
                    " days");
  }
  std::vector<DetectedPeak> out;
  for (int i = 0; i < n; ++i) {
    bool truncated = i - p.half_window < 0 || i + p.half_window >= n;
    if (truncated && p.edge_policy == EdgePolicy::kStrict) continue;
    double baseline = window_baseline(counts, i, p);
    double denom = std::max(baseline, static_cast<double>(p.min_activity));
    double frac = (static_cast<double>(counts[i]) - baseline) / denom;
    if (frac > p.threshold) {
      out.push_back({i, frac, baseline, truncated});
    }
  }
  return out;
}

std::optional<DetectedPeak> isolate_and_select(const std::vector<DetectedPeak>& peaks,
                                               const PeakParams& p) {
  std::optional<DetectedPeak> best;
  for (size_t i = 0; i < peaks.size(); ++i) {
    bool crowded = false;
    for (size_t j = 0; j < peaks.size(); ++j) {
      if (j == i) continue;
      if (std::abs(peaks[i].day - peaks[j].day) < p.isolation_days) {
        crowded = true;
        break;
      }
    }
    if (crowded) continue;
    // Ties on the fraction go to the earliest day; input is day-sorted.
    if (!best || peaks[i].outlier_fraction > best->outlier_fraction) best = peaks[i];
  }
  return best;
}

PeakRecord align_to_peak(const ActivitySeries& series, const DetectedPeak& peak,
                         int half_span) {
  const int n = static_cast<int>(series.counts.size());
  if (peak.day - half_span < 0 || peak.day + half_span >= n) {
    throw DataError("alignment span of +-" + std::to_string(half_span) +
                    " days around day " + std::to_string(peak.day) +
                    " leaves the series (length " + std::to_string(n) + ")");
  }
  PeakRecord rec;
  rec.hashtag = series.hashtag;
  rec.peak_day = peak.day;
  rec.outlier_fraction = peak.outlier_fraction;
  rec.baseline = peak.baseline;
  rec.half_span = half_span;
  rec.aligned_counts.assign(series.counts.begin() + (peak.day - half_span),
                            series.counts.begin() + (peak.day + half_span) + 1);
  return rec;
}

std::optional<PeakRecord> select_peak(const ActivitySeries& series, const PeakParams& p,
                                      int half_span) {
  auto detected = detect_peaks(series.counts, p);
  // Truncated-window peaks are reported by detect_peaks but never selected.
  detected.erase(std::remove_if(detected.begin(), detected.end(),
                                [](const DetectedPeak& d) { return d.truncated_window; }),
                 detected.end());
  auto chosen = isolate_and_select(detected, p);
  if (!chosen) return std::nullopt;
  if (chosen->day - half_span < 0 ||
      chosen->day + half_span >= static_cast<int>(series.counts.size())) {
    return std::nullopt;
  }
  return align_to_peak(series, *chosen, half_span);
}

void write_peaks_csv(const std::string& path, const std::vector<PeakRecord>& peaks) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open file for writing: " + path);
  out << "hashtag,peak_day,p,baseline\n";
  for (const auto& r : peaks) {
    out << r.hashtag << ',' << r.peak_day << ',' << format_double(r.outlier_fraction)
        << ',' << format_double(r.baseline) << '\n';
  }
  if (!out) throw DataError("error writing file: " + path);
}

void write_aligned_csv(const std::string& path, const std::vector<PeakRecord>& peaks) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open file for writing: " + path);
  out << "hashtag,rel_day,count\n";
  for (const auto& r : peaks) {
    for (int d = -r.half_span; d <= r.half_span; ++d) {
      out << r.hashtag << ',' << d << ',' << r.count_at(d) << '\n';
    }
  }
  if (!out) throw DataError("error writing file: " + path);
}

std::vector<PeakRecord> read_peaks_dir(const std::string& dir) {
  std::map<std::string, PeakRecord> by_tag;
  {
    CsvReader reader(dir + "/peaks.csv");
    if (reader.header() != "hashtag,peak_day,p,baseline") {
      throw DataError("unexpected header in " + dir + "/peaks.csv");
    }
    std::vector<std::string> f;
    while (reader.next(f)) {
      if (f.size() != 4) throw DataError(dir + "/peaks.csv: bad field count");
      PeakRecord r;
      r.hashtag = f[0];
      r.peak_day = std::stoi(f[1]);
      r.outlier_fraction = std::stod(f[2]);
      r.baseline = std::stod(f[3]);
      by_tag.emplace(r.hashtag, std::move(r));
    }
  }
  {
    CsvReader reader(dir + "/aligned.csv");
    if (reader.header() != "hashtag,rel_day,count") {
      throw DataError("unexpected header in " + dir + "/aligned.csv");
    }
    std::vector<std::string> f;
    std::map<std::string, std::map<int, int64_t>> rows;
    while (reader.next(f)) {
      if (f.size() != 3) throw DataError(dir + "/aligned.csv: bad field count");
      rows[f[0]][std::stoi(f[1])] = std::stoll(f[2]);
    }
    for (auto& [tag, days] : rows) {
      auto it = by_tag.find(tag);
      if (it == by_tag.end()) {
        throw DataError("aligned series for unknown hashtag: " + tag);
      }
      int half = (static_cast<int>(days.size()) - 1) / 2;
      if (static_cast<int>(days.size()) != 2 * half + 1 || days.begin()->first != -half ||
          days.rbegin()->first != half) {
        throw DataError("aligned series for " + tag + " is not a symmetric span");
      }
      it->second.half_span = half;
      it->second.aligned_counts.clear();
      for (auto& [d, c] : days) it->second.aligned_counts.push_back(c);
    }
  }
  std::vector<PeakRecord> out;
  for (auto& [tag, r] : by_tag) {
    if (r.aligned_counts.empty()) {
      throw DataError("missing aligned series for hashtag: " + tag);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace tagdyn
