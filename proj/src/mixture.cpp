#include "tagdyn/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "tagdyn/util.hpp"

namespace tagdyn {

namespace {

constexpr double kLog2Pi = 1.8378770664093454835606594728112;

struct Workspace {
  // Per-component cached terms for density evaluation.
  std::vector<double> log_weight;
  std::vector<double> log_norm;  // -log(2*pi) - 0.5*log(vb*va)
  std::vector<double> inv_vb;
  std::vector<double> inv_va;

  void refresh(const MixtureModel& m) {
    const size_t k = m.components.size();
    log_weight.resize(k);
    log_norm.resize(k);
    inv_vb.resize(k);
    inv_va.resize(k);
    for (size_t j = 0; j < k; ++j) {
      const auto& c = m.components[j];
      log_weight[j] = c.weight > 0.0 ? std::log(c.weight)
                                     : -std::numeric_limits<double>::infinity();
      log_norm[j] = -kLog2Pi - 0.5 * (std::log(c.variance.b) + std::log(c.variance.a));
      inv_vb[j] = 1.0 / c.variance.b;
      inv_va[j] = 1.0 / c.variance.a;
    }
  }
};

// Log joint density of point i under component j (weight included).
inline double component_log_term(const Workspace& w, const MixtureModel& m, size_t j,
                                 const Vec2& p) {
  const double db = p.b - m.components[j].mean.b;
  const double da = p.a - m.components[j].mean.a;
  return w.log_weight[j] + w.log_norm[j] -
         0.5 * (db * db * w.inv_vb[j] + da * da * w.inv_va[j]);
}

void check_points(const std::vector<Vec2>& points) {
  for (const auto& p : points) {
    if (!std::isfinite(p.b) || !std::isfinite(p.a)) {
      throw DataError("non-finite value in input points");
    }
  }
}

void canonical_order(MixtureModel& m) {
  std::sort(m.components.begin(), m.components.end(),
            [](const GaussianComponent& x, const GaussianComponent& y) {
              double sx = x.mean.b + x.mean.a, sy = y.mean.b + y.mean.a;
              if (sx != sy) return sx < sy;
              if (x.mean.b != y.mean.b) return x.mean.b < y.mean.b;
              if (x.mean.a != y.mean.a) return x.mean.a < y.mean.a;
              return x.weight > y.weight;
            });
}

// k-means++-style seeding: means drawn from the data, each subsequent one
// with probability proportional to squared distance from the chosen set.
std::vector<Vec2> seed_means(const std::vector<Vec2>& points, int k, Rng& rng) {
  std::vector<Vec2> means;
  means.push_back(points[rng.index(points.size())]);
  std::vector<double> d2(points.size(), 0.0);
  while (static_cast<int>(means.size()) < k) {
    double total = 0.0;
    for (size_t i = 0; i < points.size(); ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& m : means) {
        double db = points[i].b - m.b, da = points[i].a - m.a;
        best = std::min(best, db * db + da * da);
      }
      d2[i] = best;
      total += best;
    }
    if (total <= 0.0) {
      // All points already covered (duplicates); fall back to uniform.
      means.push_back(points[rng.index(points.size())]);
      continue;
    }
    double r = rng.uniform() * total;
    size_t pick = points.size() - 1;
    double acc = 0.0;
    for (size_t i = 0; i < points.size(); ++i) {
      acc += d2[i];
      if (r < acc) {
        pick = i;
        break;
      }
    }
    means.push_back(points[pick]);
  }
  return means;
}

Vec2 sample_variance(const std::vector<Vec2>& points, double floor) {
  double mb = 0.0, ma = 0.0;
  for (const auto& p : points) {
    mb += p.b;
    ma += p.a;
  }
  mb /= points.size();
  ma /= points.size();
  double vb = 0.0, va = 0.0;
  for (const auto& p : points) {
    vb += (p.b - mb) * (p.b - mb);
    va += (p.a - ma) * (p.a - ma);
  }
  return {std::max(vb / points.size(), floor), std::max(va / points.size(), floor)};
}

}  // namespace

const char* class_label_name(ClassLabel label) {
  switch (label) {
    case ClassLabel::kBefore: return "Before";
    case ClassLabel::kAfter: return "After";
    case ClassLabel::kSymmetric: return "Symmetric";
    case ClassLabel::kPeakDay: return "PeakDay";
  }
  throw InternalError("unknown class label");
}

ClassLabel class_label_from_name(const std::string& name) {
  if (name == "Before") return ClassLabel::kBefore;
  if (name == "After") return ClassLabel::kAfter;
  if (name == "Symmetric") return ClassLabel::kSymmetric;
  if (name == "PeakDay") return ClassLabel::kPeakDay;
  throw DataError("unknown class label: '" + name + "'");
}

MixtureModel em_fit(const std::vector<Vec2>& points, int k, Rng& rng,
                    const EmOptions& opts) {
  const size_t n = points.size();
  if (k < 1) throw DataError("component count must be >= 1");
  if (n < static_cast<size_t>(k)) {
    throw DataError("cannot fit " + std::to_string(k) + " components to " +
                    std::to_string(n) + " points");
  }
  check_points(points);

  MixtureModel model;
  model.n_points = n;
  Vec2 init_var = sample_variance(points, opts.variance_floor);
  auto means = seed_means(points, k, rng);
  for (int j = 0; j < k; ++j) {
    model.components.push_back({1.0 / k, means[j], init_var});
  }

  Workspace w;
  std::vector<double> resp(n * k);
  std::vector<double> terms(k);
  double prev_loglik = -std::numeric_limits<double>::infinity();

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    w.refresh(model);

    // E step, with the log-sum-exp shift so densities never underflow to 0.
    double loglik = 0.0;
    for (size_t i = 0; i < n; ++i) {
      double best = -std::numeric_limits<double>::infinity();
      for (int j = 0; j < k; ++j) {
        terms[j] = component_log_term(w, model, j, points[i]);
        best = std::max(best, terms[j]);
      }
      double sum = 0.0;
      for (int j = 0; j < k; ++j) {
        double e = std::exp(terms[j] - best);
        resp[i * k + j] = e;
        sum += e;
      }
      double inv = 1.0 / sum;
      for (int j = 0; j < k; ++j) resp[i * k + j] *= inv;
      loglik += best + std::log(sum);
    }
    model.loglik_trace.push_back(loglik);
    model.log_likelihood = loglik;
    if (iter > 0 && loglik - prev_loglik < opts.tolerance) break;
    prev_loglik = loglik;

    // M step: weighted moments per component, variances floored.
    bool rescued = false;
    for (int j = 0; j < k; ++j) {
      double nk = 0.0, sb = 0.0, sa = 0.0, sbb = 0.0, saa = 0.0;
      for (size_t i = 0; i < n; ++i) {
        double r = resp[i * k + j];
        nk += r;
        sb += r * points[i].b;
        sa += r * points[i].a;
        sbb += r * points[i].b * points[i].b;
        saa += r * points[i].a * points[i].a;
      }
      auto& c = model.components[j];
      if (nk < 1e-8) {
        // Starved component: re-seed at the point the current model explains
        // worst, keeping K fixed.
        size_t worst = 0;
        double worst_density = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < n; ++i) {
          double d = log_density(model, points[i]);
          if (d < worst_density) {
            worst_density = d;
            worst = i;
          }
        }
        c.mean = points[worst];
        c.variance = init_var;
        model.rescue_iterations.push_back(iter);
        rescued = true;
        continue;
      }
      c.weight = nk / static_cast<double>(n);
      c.mean.b = sb / nk;
      c.mean.a = sa / nk;
      c.variance.b = std::max(sbb / nk - c.mean.b * c.mean.b, opts.variance_floor);
      c.variance.a = std::max(saa / nk - c.mean.a * c.mean.a, opts.variance_floor);
    }
    if (rescued) {
      double wsum = 0.0;
      for (const auto& c : model.components) wsum += c.weight;
      for (auto& c : model.components) c.weight /= wsum;
      prev_loglik = -std::numeric_limits<double>::infinity();
    }
  }

  canonical_order(model);
  return model;
}

MixtureModel fit_best(const std::vector<Vec2>& points, int k, int restarts,
                      uint64_t seed, const EmOptions& opts) {
  if (restarts < 1) throw DataError("restart count must be >= 1");
  MixtureModel best;
  bool have = false;
  for (int r = 0; r < restarts; ++r) {
    Rng rng = Rng::derive(seed, "em/k" + std::to_string(k) + "/r" + std::to_string(r));
    MixtureModel m = em_fit(points, k, rng, opts);
    if (!have || m.log_likelihood > best.log_likelihood) {
      best = std::move(m);
      have = true;
    }
  }
  return best;
}

double bic(const MixtureModel& model) {
  return 2.0 * model.log_likelihood -
         model.free_parameters() * std::log(static_cast<double>(model.n_points));
}

SelectionResult select_model(const std::vector<Vec2>& points, int k_min, int k_max,
                             int restarts, uint64_t seed, const EmOptions& opts) {
  if (k_min < 1 || k_max < k_min) throw DataError("invalid component count range");
  SelectionResult result;
  bool have = false;
  double best_bic = 0.0;
  for (int k = k_min; k <= k_max; ++k) {
    MixtureModel m = fit_best(points, k, restarts, seed, opts);
    BicRow row{k, m.log_likelihood, m.free_parameters(), bic(m)};
    result.table.push_back(row);
    if (!have || row.bic > best_bic) {
      best_bic = row.bic;
      result.best = std::move(m);
      have = true;
    }
  }
  return result;
}

std::vector<CvRow> cross_validate(const std::vector<Vec2>& points, int k_min, int k_max,
                                  int folds, int restarts, uint64_t seed,
                                  const EmOptions& opts) {
  const size_t n = points.size();
  if (folds < 2) throw DataError("cross-validation needs at least 2 folds");
  if (n < static_cast<size_t>(folds)) {
    throw DataError("cross-validation needs at least one point per fold (" +
                    std::to_string(n) + " points, " + std::to_string(folds) + " folds)");
  }
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  Rng rng = Rng::derive(seed, "cv/shuffle");
  rng.shuffle(order);

  std::vector<CvRow> rows;
  for (int k = k_min; k <= k_max; ++k) {
    double fold_mean_sum = 0.0;
    for (int f = 0; f < folds; ++f) {
      size_t lo = n * f / folds, hi = n * (f + 1) / folds;
      std::vector<Vec2> train, held;
      train.reserve(n - (hi - lo));
      held.reserve(hi - lo);
      for (size_t i = 0; i < n; ++i) {
        (i >= lo && i < hi ? held : train).push_back(points[order[i]]);
      }
      MixtureModel m = fit_best(train, k, restarts,
                                fnv1a64("fold" + std::to_string(f), seed), opts);
      double total = 0.0;
      for (const auto& p : held) total += log_density(m, p);
      fold_mean_sum += total / static_cast<double>(held.size());
    }
    rows.push_back({k, fold_mean_sum / folds});
  }
  return rows;
}

Labeling label_components(const MixtureModel& model, const LabelRules& rules) {
  Labeling out;
  int counts[4] = {0, 0, 0, 0};
  for (const auto& c : model.components) {
    const double mb = c.mean.b, ma = c.mean.a;
    ClassLabel label;
    if (mb + ma < rules.peakday_sum) {
      label = ClassLabel::kPeakDay;
    } else if (mb > rules.ratio * ma) {
      label = ClassLabel::kBefore;
    } else if (ma > rules.ratio * mb) {
      label = ClassLabel::kAfter;
    } else {
      label = ClassLabel::kSymmetric;
    }
    counts[static_cast<int>(label)] += 1;
    out.labels.push_back(label);
  }
  for (int c : counts) {
    if (c > 1) out.duplicates = true;
  }
  return out;
}

double log_density(const MixtureModel& model, Vec2 point) {
  Workspace w;
  w.refresh(model);
  double best = -std::numeric_limits<double>::infinity();
  std::vector<double> terms(model.components.size());
  for (size_t j = 0; j < model.components.size(); ++j) {
    terms[j] = component_log_term(w, model, j, point);
    best = std::max(best, terms[j]);
  }
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - best);
  return best + std::log(sum);
}

Assignment classify(const MixtureModel& model, const Labeling& labeling, Vec2 point) {
  if (!std::isfinite(point.b) || !std::isfinite(point.a)) {
    throw DataError("cannot classify a non-finite point");
  }
  if (labeling.labels.size() != model.components.size()) {
    throw InternalError("labeling does not match the model");
  }
  Workspace w;
  w.refresh(model);
  const size_t k = model.components.size();
  std::vector<double> terms(k);
  double best = -std::numeric_limits<double>::infinity();
  for (size_t j = 0; j < k; ++j) {
    terms[j] = component_log_term(w, model, j, point);
    best = std::max(best, terms[j]);
  }
  Assignment out;
  out.point = point;
  out.posteriors.resize(k);
  double sum = 0.0;
  for (size_t j = 0; j < k; ++j) {
    out.posteriors[j] = std::exp(terms[j] - best);
    sum += out.posteriors[j];
  }
  size_t arg = 0;
  for (size_t j = 0; j < k; ++j) {
    out.posteriors[j] /= sum;
    if (out.posteriors[j] > out.posteriors[arg]) arg = j;
  }
  out.component = static_cast<int>(arg);
  out.label = labeling.labels[arg];
  out.uncertainty = 1.0 - out.posteriors[arg];
  return out;
}

double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw DataError("label vectors differ in length");
  const size_t n = a.size();
  if (n < 2) throw DataError("adjusted Rand index needs at least 2 items");
  auto remap = [](const std::vector<int>& v, std::vector<int>& out) {
    std::vector<int> seen;
    out.resize(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
      auto it = std::find(seen.begin(), seen.end(), v[i]);
      if (it == seen.end()) {
        seen.push_back(v[i]);
        out[i] = static_cast<int>(seen.size()) - 1;
      } else {
        out[i] = static_cast<int>(it - seen.begin());
      }
    }
    return seen.size();
  };
  std::vector<int> ra, rb;
  size_t ka = remap(a, ra), kb = remap(b, rb);
  std::vector<int64_t> table(ka * kb, 0), rows(ka, 0), cols(kb, 0);
  for (size_t i = 0; i < n; ++i) {
    table[ra[i] * kb + rb[i]] += 1;
    rows[ra[i]] += 1;
    cols[rb[i]] += 1;
  }
  auto choose2 = [](int64_t m) { return 0.5 * m * (m - 1); };
  double sum_ij = 0.0, sum_a = 0.0, sum_b = 0.0;
  for (auto v : table) sum_ij += choose2(v);
  for (auto v : rows) sum_a += choose2(v);
  for (auto v : cols) sum_b += choose2(v);
  double expected = sum_a * sum_b / choose2(static_cast<int64_t>(n));
  double maximum = 0.5 * (sum_a + sum_b);
  if (maximum == expected) return 1.0;  // both clusterings trivial
  return (sum_ij - expected) / (maximum - expected);
}

void write_model_json(const std::string& path, const MixtureModel& model,
                      const Labeling& labeling) {
  nlohmann::json j;
  j["k"] = model.component_count();
  j["n_points"] = model.n_points;
  j["log_likelihood"] = model.log_likelihood;
  j["bic"] = bic(model);
  j["duplicate_labels"] = labeling.duplicates;
  nlohmann::json comps = nlohmann::json::array();
  for (size_t i = 0; i < model.components.size(); ++i) {
    const auto& c = model.components[i];
    comps.push_back({{"weight", c.weight},
                     {"mean", {c.mean.b, c.mean.a}},
                     {"variances", {c.variance.b, c.variance.a}},
                     {"label", class_label_name(labeling.labels[i])}});
  }
  j["components"] = comps;
  write_text_file(path, j.dump(2) + "\n");
}

MixtureModel read_model_json(const std::string& path, Labeling* labeling) {
  nlohmann::json j = nlohmann::json::parse(read_text_file(path), nullptr, false);
  if (j.is_discarded()) throw DataError("invalid JSON in " + path);
  MixtureModel m;
  Labeling lab;
  try {
    m.n_points = j.at("n_points").get<size_t>();
    m.log_likelihood = j.at("log_likelihood").get<double>();
    for (const auto& cj : j.at("components")) {
      GaussianComponent c;
      c.weight = cj.at("weight").get<double>();
      c.mean = {cj.at("mean")[0].get<double>(), cj.at("mean")[1].get<double>()};
      c.variance = {cj.at("variances")[0].get<double>(),
                    cj.at("variances")[1].get<double>()};
      m.components.push_back(c);
      lab.labels.push_back(class_label_from_name(cj.at("label").get<std::string>()));
    }
    lab.duplicates = j.value("duplicate_labels", false);
  } catch (const nlohmann::json::exception& e) {
    throw DataError("malformed model file " + path + ": " + e.what());
  }
  if (labeling) *labeling = lab;
  return m;
}

void write_assignments_csv(const std::string& path, const std::vector<Assignment>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open file for writing: " + path);
  size_t k = rows.empty() ? 0 : rows.front().posteriors.size();
  out << "hashtag,fb,fa,label,uncertainty";
  for (size_t j = 1; j <= k; ++j) out << ",posterior_" << j;
  out << '\n';
  for (const auto& r : rows) {
    out << r.hashtag << ',' << format_double(r.point.b) << ',' << format_double(r.point.a)
        << ',' << class_label_name(r.label) << ',' << format_double(r.uncertainty);
    for (double p : r.posteriors) out << ',' << format_double(p);
    out << '\n';
  }
  if (!out) throw DataError("error writing file: " + path);
}

std::vector<Assignment> read_assignments_csv(const std::string& path) {
  CsvReader reader(path);
  auto head = split(reader.header(), ',');
  if (head.size() < 5 || head[0] != "hashtag" || head[3] != "label") {
    throw DataError("unexpected header in " + path);
  }
  std::vector<Assignment> out;
  std::vector<std::string> f;
  while (reader.next(f)) {
    if (f.size() != head.size()) {
      throw DataError(path + ": bad field count at line " + std::to_string(reader.line_number()));
    }
    Assignment a;
    a.hashtag = f[0];
    a.point = {std::stod(f[1]), std::stod(f[2])};
    a.label = class_label_from_name(f[3]);
    a.uncertainty = std::stod(f[4]);
    for (size_t j = 5; j < f.size(); ++j) a.posteriors.push_back(std::stod(f[j]));
    out.push_back(std::move(a));
  }
  return out;
}

void write_bic_csv(const std::string& path, const std::vector<BicRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open file for writing: " + path);
  out << "k,log_likelihood,free_parameters,bic\n";
  for (const auto& r : rows) {
    out << r.k << ',' << format_double(r.log_likelihood) << ',' << r.free_parameters
        << ',' << format_double(r.bic) << '\n';
  }
}

void write_cv_csv(const std::string& path, const std::vector<CvRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open file for writing: " + path);
  out << "k,mean_heldout_loglik\n";
  for (const auto& r : rows) {
    out << r.k << ',' << format_double(r.mean_heldout_loglik) << '\n';
  }
}

}  // namespace tagdyn
