#include "tagdyn/features.hpp"

#include <cmath>
#include <fstream>

#include "tagdyn/util.hpp"

namespace tagdyn {

FeatureTriple compute_triple(const PeakRecord& peak) {
  const int64_t total = peak.window_total();
  if (total <= 0) {
    throw DataError("aligned window for " + peak.hashtag +
                    " has zero total activity, cannot normalize");
  }
  int64_t before = 0, after = 0;
  for (int d = -peak.half_span; d < 0; ++d) before += peak.count_at(d);
  for (int d = 1; d <= peak.half_span; ++d) after += peak.count_at(d);
  FeatureTriple t;
  t.hashtag = peak.hashtag;
  t.before = static_cast<double>(before) / static_cast<double>(total);
  t.peak = static_cast<double>(peak.count_at(0)) / static_cast<double>(total);
  t.after = static_cast<double>(after) / static_cast<double>(total);
  return t;
}

SimplexPoint simplex_coordinates(const FeatureTriple& t) {
  return {t.after + 0.5 * t.peak, 0.8660254037844386467637231707529 * t.peak};
}

void write_features_csv(const std::string& path, const std::vector<FeatureTriple>& triples) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open file for writing: " + path);
  out << "hashtag,fb,fp,fa\n";
  for (const auto& t : triples) {
    out << t.hashtag << ',' << format_double(t.before) << ',' << format_double(t.peak)
        << ',' << format_double(t.after) << '\n';
  }
  if (!out) throw DataError("error writing file: " + path);
}

std::vector<FeatureTriple> read_features_csv(const std::string& path) {
  CsvReader reader(path);
  if (reader.header() != "hashtag,fb,fp,fa") {
    throw DataError("unexpected header in " + path + ": '" + reader.header() + "'");
  }
  std::vector<FeatureTriple> out;
  std::vector<std::string> f;
  while (reader.next(f)) {
    if (f.size() != 4) {
      throw DataError(path + ": bad field count at line " + std::to_string(reader.line_number()));
    }
    FeatureTriple t;
    t.hashtag = f[0];
    try {
      t.before = std::stod(f[1]);
      t.peak = std::stod(f[2]);
      t.after = std::stod(f[3]);
    } catch (const std::exception&) {
      throw DataError(path + ": bad number at line " + std::to_string(reader.line_number()));
    }
    out.push_back(std::move(t));
  }
  return out;
}

void write_simplex_csv(const std::string& path, const std::vector<FeatureTriple>& triples) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open file for writing: " + path);
  out << "hashtag,fb,fp,fa,x,y\n";
  for (const auto& t : triples) {
    auto p = simplex_coordinates(t);
    out << t.hashtag << ',' << format_double(t.before) << ',' << format_double(t.peak)
        << ',' << format_double(t.after) << ',' << format_double(p.x) << ','
        << format_double(p.y) << '\n';
  }
  if (!out) throw DataError("error writing file: " + path);
}

}  // namespace tagdyn
