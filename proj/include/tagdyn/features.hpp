// Coarse-grained activity balance around the peak: fractions of window
// tweets before, on, and after day 0, plus ternary plot coordinates.
#pragma once

#include <string>
#include <vector>

#include "tagdyn/peaks.hpp"

namespace tagdyn {

struct FeatureTriple {
  std::string hashtag;
  double before = 0.0;  // f_b: strictly before day 0
  double peak = 0.0;    // f_p: day 0
  double after = 0.0;   // f_a: strictly after day 0
};

// Fractions over the aligned window. Throws DataError on a zero window
// total (nothing to normalize).
FeatureTriple compute_triple(const PeakRecord& peak);

// 2-D ternary projection: x = f_a + f_p/2, y = (sqrt(3)/2) * f_p.
// (1,0,0) maps to the origin, (0,1,0) to the apex.
struct SimplexPoint {
  double x = 0.0;
  double y = 0.0;
};
SimplexPoint simplex_coordinates(const FeatureTriple& t);

void write_features_csv(const std::string& path, const std::vector<FeatureTriple>& triples);
std::vector<FeatureTriple> read_features_csv(const std::string& path);

// features.csv plus projected coordinates, for external ternary plotting.
void write_simplex_csv(const std::string& path, const std::vector<FeatureTriple>& triples);

}  // namespace tagdyn
