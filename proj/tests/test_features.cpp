#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "tagdyn/features.hpp"
#include "tagdyn/peaks.hpp"
#include "tagdyn/util.hpp"

using namespace tagdyn;

namespace {

PeakRecord record_for(std::vector<int64_t> aligned) {
  PeakRecord r;
  r.hashtag = "t";
  r.half_span = static_cast<int>(aligned.size() - 1) / 2;
  r.aligned_counts = std::move(aligned);
  return r;
}

}  // namespace

TEST_CASE("fractions over the aligned window") {
  SUBCASE("all activity on the peak day") {
    auto t = compute_triple(record_for({0, 0, 0, 0, 0, 0, 0, 9, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(t.before == 0.0);
    CHECK(t.peak == 1.0);
    CHECK(t.after == 0.0);
  }

  SUBCASE("30 before, 50 on the day, 20 after") {
    auto t = compute_triple(record_for({4, 4, 4, 4, 4, 5, 5, 50, 3, 3, 3, 3, 3, 3, 2}));
    CHECK(t.before == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(t.peak == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(t.after == doctest::Approx(0.2).epsilon(1e-12));
  }

  SUBCASE("mirror-symmetric counts give f_b == f_a exactly") {
    auto t = compute_triple(record_for({1, 2, 3, 4, 5, 6, 7, 100, 7, 6, 5, 4, 3, 2, 1}));
    CHECK(t.before == t.after);
  }

  SUBCASE("an empty window cannot be normalized") {
    CHECK_THROWS_AS(compute_triple(record_for(std::vector<int64_t>(15, 0))), DataError);
  }
}

TEST_CASE("triples sum to one and reverse cleanly on random windows") {
  std::mt19937_64 gen(404);
  std::uniform_int_distribution<int64_t> d(0, 50);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int64_t> counts(15);
    for (auto& c : counts) c = d(gen);
    if (std::all_of(counts.begin(), counts.end(), [](int64_t c) { return c == 0; })) {
      counts[7] = 1;
    }
    auto t = compute_triple(record_for(counts));
    CAPTURE(trial);
    CHECK(t.before >= 0.0);
    CHECK(t.peak >= 0.0);
    CHECK(t.after >= 0.0);
    CHECK(std::abs(t.before + t.peak + t.after - 1.0) <= 1e-12);

    std::reverse(counts.begin(), counts.end());
    auto rev = compute_triple(record_for(counts));
    CHECK(rev.before == t.after);
    CHECK(rev.peak == t.peak);
    CHECK(rev.after == t.before);
  }
}

TEST_CASE("ternary projection") {
  auto at = [](double b, double p, double a) {
    FeatureTriple t;
    t.before = b;
    t.peak = p;
    t.after = a;
    return simplex_coordinates(t);
  };

  auto apex = at(0.0, 1.0, 0.0);
  CHECK(apex.x == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(apex.y == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));

  auto origin = at(1.0, 0.0, 0.0);
  CHECK(origin.x == 0.0);
  CHECK(origin.y == 0.0);

  auto right = at(0.0, 0.0, 1.0);
  CHECK(right.x == 1.0);
  CHECK(right.y == 0.0);

  auto mid = at(0.3, 0.5, 0.2);
  CHECK(mid.x == doctest::Approx(0.45).epsilon(1e-12));
  CHECK(mid.y == doctest::Approx(0.43301270189221930).epsilon(1e-12));
}

TEST_CASE("peaks that pass the detector lie outside the excluded band") {
  // On a flat-shoulder series the baseline equals the shoulder level c, so
  // the detector inequality (n0 - c) / max(c, 10) > 10 with c >= 10 is
  // exactly n0 > 11c, i.e. f_p > 11/25 over the 15-day window. Sweeping the
  // spike height across that boundary must flip detection and the fraction
  // bound at the same point.
  PeakParams params;
  const double bound = 11.0 / 25.0;
  for (int64_t c : {10, 17, 25, 40}) {
    for (int64_t n0 = 11 * c - 3; n0 <= 11 * c + 3; ++n0) {
      std::vector<int64_t> counts(61, c);
      counts[30] = n0;
      bool detected = outlier_fraction(counts, 30, params) > params.threshold;

      ActivitySeries s;
      s.hashtag = "flat";
      s.counts = counts;
      auto rec = align_to_peak(s, {30, 0.0, static_cast<double>(c), false}, 7);
      auto t = compute_triple(rec);
      CAPTURE(c);
      CAPTURE(n0);
      CHECK(detected == (t.peak > bound));
    }
  }
}

TEST_CASE("features round-trip through CSV") {
  std::vector<FeatureTriple> rows(2);
  rows[0].hashtag = "alpha";
  rows[0].before = 0.3;
  rows[0].peak = 0.5;
  rows[0].after = 0.2;
  rows[1].hashtag = "beta";
  rows[1].before = 1.0 / 3.0;
  rows[1].peak = 1.0 / 3.0;
  rows[1].after = 1.0 / 3.0;

  write_features_csv("build/test_features.csv", rows);
  auto back = read_features_csv("build/test_features.csv");
  REQUIRE(back.size() == 2);
  for (size_t i = 0; i < 2; ++i) {
    CHECK(back[i].hashtag == rows[i].hashtag);
    // format_double writes shortest round-trip forms, so equality is exact.
    CHECK(back[i].before == rows[i].before);
    CHECK(back[i].peak == rows[i].peak);
    CHECK(back[i].after == rows[i].after);
  }

  write_simplex_csv("build/test_simplex.csv", rows);
  CsvReader reader("build/test_simplex.csv");
  CHECK(reader.header() == "hashtag,fb,fp,fa,x,y");
  std::vector<std::string> f;
  size_t n = 0;
  while (reader.next(f)) {
    REQUIRE(f.size() == 6);
    ++n;
  }
  CHECK(n == 2);
}
