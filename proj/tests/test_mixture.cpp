#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "tagdyn/mixture.hpp"
#include "tagdyn/util.hpp"

using namespace tagdyn;

namespace {

constexpr double kLog2Pi = 1.8378770664093454835606594728112;

std::vector<Vec2> gaussian_cloud(std::mt19937_64& gen, Vec2 center, double sigma, int n) {
  std::normal_distribution<double> d(0.0, sigma);
  std::vector<Vec2> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back({center.b + d(gen), center.a + d(gen)});
  return out;
}

std::vector<Vec2> two_gaussian_fixture() {
  std::mt19937_64 gen(991);
  auto pts = gaussian_cloud(gen, {0.10, 0.10}, 0.03, 200);
  auto more = gaussian_cloud(gen, {0.60, 0.20}, 0.03, 200);
  pts.insert(pts.end(), more.begin(), more.end());
  return pts;
}

double diag_log_density(Vec2 p, const GaussianComponent& c) {
  double db = p.b - c.mean.b, da = p.a - c.mean.a;
  return -kLog2Pi - 0.5 * (std::log(c.variance.b) + std::log(c.variance.a)) -
         0.5 * (db * db / c.variance.b + da * da / c.variance.a);
}

// Hard-assignment oracle for K=2: every one of the 2^n two-sided partitions,
// each side summarized by its closed-form mean/variance (floored), scored by
// the observed-data log-likelihood of the implied mixture.
std::vector<int> brute_force_partition(const std::vector<Vec2>& pts, double floor) {
  const int n = static_cast<int>(pts.size());
  double best_score = -1e300;
  uint32_t best_mask = 1;
  for (uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    GaussianComponent side[2];
    int count[2] = {0, 0};
    for (int i = 0; i < n; ++i) {
      int s = (mask >> i) & 1;
      side[s].mean.b += pts[i].b;
      side[s].mean.a += pts[i].a;
      count[s] += 1;
    }
    for (int s = 0; s < 2; ++s) {
      side[s].weight = static_cast<double>(count[s]) / n;
      side[s].mean.b /= count[s];
      side[s].mean.a /= count[s];
    }
    for (int i = 0; i < n; ++i) {
      int s = (mask >> i) & 1;
      double db = pts[i].b - side[s].mean.b, da = pts[i].a - side[s].mean.a;
      side[s].variance.b += db * db;
      side[s].variance.a += da * da;
    }
    for (int s = 0; s < 2; ++s) {
      side[s].variance.b = std::max(side[s].variance.b / count[s], floor);
      side[s].variance.a = std::max(side[s].variance.a / count[s], floor);
    }
    double score = 0.0;
    for (int i = 0; i < n; ++i) {
      double t0 = std::log(side[0].weight) + diag_log_density(pts[i], side[0]);
      double t1 = std::log(side[1].weight) + diag_log_density(pts[i], side[1]);
      double hi = std::max(t0, t1);
      score += hi + std::log(std::exp(t0 - hi) + std::exp(t1 - hi));
    }
    if (score > best_score) {
      best_score = score;
      best_mask = mask;
    }
  }
  std::vector<int> assign(n);
  for (int i = 0; i < n; ++i) assign[i] = (best_mask >> i) & 1;
  return assign;
}

// Relabels so the first element's cluster is 0, for up-to-swap comparison.
std::vector<int> canonical_binary(std::vector<int> v) {
  if (!v.empty() && v[0] == 1) {
    for (auto& x : v) x = 1 - x;
  }
  return v;
}

MixtureModel manual_model(std::vector<GaussianComponent> comps, size_t n_points = 100) {
  MixtureModel m;
  m.components = std::move(comps);
  m.n_points = n_points;
  return m;
}

}  // namespace

TEST_CASE("single-component fit has the closed form") {
  std::mt19937_64 gen(17);
  auto pts = gaussian_cloud(gen, {0.30, 0.25}, 0.08, 150);
  Rng rng = Rng::derive(5, "k1");
  auto model = em_fit(pts, 1, rng);

  double mb = 0.0, ma = 0.0;
  for (const auto& p : pts) {
    mb += p.b;
    ma += p.a;
  }
  mb /= pts.size();
  ma /= pts.size();
  double vb = 0.0, va = 0.0;
  for (const auto& p : pts) {
    vb += (p.b - mb) * (p.b - mb);
    va += (p.a - ma) * (p.a - ma);
  }
  vb /= pts.size();
  va /= pts.size();

  REQUIRE(model.component_count() == 1);
  const auto& c = model.components[0];
  CHECK(c.weight == 1.0);
  CHECK(c.mean.b == doctest::Approx(mb).epsilon(1e-13));
  CHECK(c.mean.a == doctest::Approx(ma).epsilon(1e-13));
  CHECK(c.variance.b == doctest::Approx(vb).epsilon(1e-10));
  CHECK(c.variance.a == doctest::Approx(va).epsilon(1e-10));

  double want_loglik = 0.0;
  for (const auto& p : pts) want_loglik += diag_log_density(p, c);
  CHECK(model.log_likelihood == doctest::Approx(want_loglik).epsilon(1e-10));
  CHECK(model.free_parameters() == 4);
}

TEST_CASE("identical points collapse onto the variance floor") {
  // Exactly representable coordinates, so the weighted mean is exact too.
  std::vector<Vec2> pts(25, Vec2{0.25, 0.5});
  Rng rng = Rng::derive(5, "flat");
  auto model = em_fit(pts, 1, rng);
  const auto& c = model.components[0];
  CHECK(c.mean.b == 0.25);
  CHECK(c.mean.a == 0.5);
  CHECK(c.variance.b == 1e-6);
  CHECK(c.variance.a == 1e-6);
  CHECK(std::isfinite(model.log_likelihood));
}

TEST_CASE("two well-separated gaussians are recovered") {
  auto pts = two_gaussian_fixture();
  auto model = fit_best(pts, 2, 10, 77);
  REQUIRE(model.component_count() == 2);
  // Canonical order sorts by mean.b + mean.a, so the (0.10, 0.10) cluster
  // comes first.
  CHECK(model.components[0].mean.b == doctest::Approx(0.10).epsilon(0.2));
  CHECK(std::abs(model.components[0].mean.b - 0.10) < 0.02);
  CHECK(std::abs(model.components[0].mean.a - 0.10) < 0.02);
  CHECK(std::abs(model.components[1].mean.b - 0.60) < 0.02);
  CHECK(std::abs(model.components[1].mean.a - 0.20) < 0.02);
  CHECK(model.components[0].weight == doctest::Approx(0.5).epsilon(0.1));
  CHECK(model.components[1].weight == doctest::Approx(0.5).epsilon(0.1));
  double wsum = model.components[0].weight + model.components[1].weight;
  CHECK(std::abs(wsum - 1.0) <= 1e-12);

  SUBCASE("canonical order is seed-independent") {
    auto other = fit_best(pts, 2, 10, 12345);
    CHECK(std::abs(other.components[0].mean.b - model.components[0].mean.b) < 1e-3);
    CHECK(std::abs(other.components[1].mean.b - model.components[1].mean.b) < 1e-3);
  }

  SUBCASE("a point at a component mean classifies cleanly") {
    auto labeling = label_components(model);
    auto a = classify(model, labeling, model.components[0].mean);
    CHECK(a.component == 0);
    CHECK(a.label == labeling.labels[0]);
    CHECK(a.uncertainty < 0.01);
  }
}

TEST_CASE("log-likelihood never decreases across EM iterations") {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 20; ++trial) {
    auto pts = gaussian_cloud(gen, {0.2, 0.2}, 0.05, 60);
    auto more = gaussian_cloud(gen, {0.5, 0.4}, 0.08, 40);
    pts.insert(pts.end(), more.begin(), more.end());
    int k = 1 + trial % 4;
    Rng rng = Rng::derive(1000 + trial, "mono");
    auto model = em_fit(pts, k, rng);
    CAPTURE(trial);
    CAPTURE(k);
    for (size_t t = 1; t < model.loglik_trace.size(); ++t) {
      bool after_rescue =
          std::find(model.rescue_iterations.begin(), model.rescue_iterations.end(),
                    static_cast<int>(t) - 1) != model.rescue_iterations.end();
      if (after_rescue) continue;
      CHECK(model.loglik_trace[t] >= model.loglik_trace[t - 1] - 1e-9);
    }
  }
}

TEST_CASE("information criterion") {
  auto m = manual_model({{1.0, {0.3, 0.3}, {0.01, 0.01}}}, 100);
  m.log_likelihood = -50.0;
  CHECK(bic(m) == doctest::Approx(-100.0 - 4.0 * std::log(100.0)).epsilon(1e-12));
  CHECK(bic(m) == doctest::Approx(-118.42068074395237).epsilon(1e-12));

  // Equal fit, more components: the penalty must decide.
  auto m2 = manual_model({{0.5, {0.2, 0.2}, {0.01, 0.01}}, {0.5, {0.4, 0.4}, {0.01, 0.01}}},
                         100);
  m2.log_likelihood = -50.0;
  CHECK(m2.free_parameters() == 9);
  CHECK(bic(m) > bic(m2));
}

TEST_CASE("component count selection") {
  SUBCASE("a single tight blob wants one component") {
    std::mt19937_64 gen(5);
    auto pts = gaussian_cloud(gen, {0.3, 0.3}, 0.01, 300);
    auto sel = select_model(pts, 1, 4, 5, 99);
    CHECK(sel.best.component_count() == 1);
    REQUIRE(sel.table.size() == 4);
    CHECK(sel.table[0].free_parameters == 4);
    CHECK(sel.table[3].free_parameters == 19);
    CHECK(sel.table[0].bic > sel.table[1].bic);
  }

  SUBCASE("the two-gaussian fixture wants two") {
    auto sel = select_model(two_gaussian_fixture(), 1, 4, 8, 99);
    CHECK(sel.best.component_count() == 2);
  }

  SUBCASE("four archetype clusters want four") {
    std::mt19937_64 gen(31);
    std::vector<Vec2> pts;
    for (Vec2 c : {Vec2{0.05, 0.05}, Vec2{0.55, 0.10}, Vec2{0.10, 0.55}, Vec2{0.35, 0.35}}) {
      auto cloud = gaussian_cloud(gen, c, 0.03, 120);
      pts.insert(pts.end(), cloud.begin(), cloud.end());
    }
    auto sel = select_model(pts, 1, 6, 8, 2024);
    REQUIRE(sel.best.component_count() == 4);
    auto labeling = label_components(sel.best);
    CHECK_FALSE(labeling.duplicates);
    std::vector<ClassLabel> got = labeling.labels;
    std::sort(got.begin(), got.end());
    std::vector<ClassLabel> want = {ClassLabel::kBefore, ClassLabel::kAfter,
                                    ClassLabel::kSymmetric, ClassLabel::kPeakDay};
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }

  SUBCASE("bad ranges are rejected") {
    auto pts = two_gaussian_fixture();
    CHECK_THROWS_AS(select_model(pts, 0, 4, 5, 1), DataError);
    CHECK_THROWS_AS(select_model(pts, 3, 2, 5, 1), DataError);
    CHECK_THROWS_AS(fit_best(pts, 2, 0, 1), DataError);
  }
}

TEST_CASE("cross-validation") {
  SUBCASE("two components beat one on the two-gaussian fixture") {
    auto rows = cross_validate(two_gaussian_fixture(), 1, 2, 10, 5, 7);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].k == 1);
    CHECK(rows[1].k == 2);
    CHECK(rows[1].mean_heldout_loglik > rows[0].mean_heldout_loglik);
  }

  SUBCASE("identical points cannot reward extra components") {
    std::vector<Vec2> pts(40, Vec2{0.2, 0.2});
    auto rows = cross_validate(pts, 1, 3, 5, 3, 7);
    REQUIRE(rows.size() == 3);
    for (size_t i = 1; i < rows.size(); ++i) {
      CHECK(rows[0].mean_heldout_loglik >= rows[i].mean_heldout_loglik - 1e-9);
    }
  }

  SUBCASE("too few points for the fold count") {
    std::vector<Vec2> pts(5, Vec2{0.2, 0.2});
    CHECK_THROWS_AS(cross_validate(pts, 1, 2, 10, 3, 7), DataError);
    CHECK_THROWS_AS(cross_validate(pts, 1, 2, 1, 3, 7), DataError);
  }
}

TEST_CASE("component labeling rule") {
  auto label_of = [](double mb, double ma) {
    auto m = manual_model({{1.0, {mb, ma}, {0.01, 0.01}}});
    return label_components(m).labels[0];
  };

  CHECK(label_of(0.05, 0.05) == ClassLabel::kPeakDay);
  CHECK(label_of(0.45, 0.10) == ClassLabel::kBefore);
  CHECK(label_of(0.25, 0.30) == ClassLabel::kSymmetric);
  CHECK(label_of(0.10, 0.45) == ClassLabel::kAfter);

  // Boundaries are strict: a sum of exactly 0.25 is not PeakDay, and a
  // coordinate exactly twice the other is still Symmetric.
  CHECK(label_of(0.10, 0.15) == ClassLabel::kSymmetric);
  CHECK(label_of(0.40, 0.20) == ClassLabel::kSymmetric);
  CHECK(label_of(0.20, 0.40) == ClassLabel::kSymmetric);
  CHECK(label_of(0.1249, 0.1250) == ClassLabel::kPeakDay);

  SUBCASE("repeated labels are flagged") {
    auto m = manual_model(
        {{0.5, {0.45, 0.10}, {0.01, 0.01}}, {0.5, {0.60, 0.12}, {0.01, 0.01}}});
    auto lab = label_components(m);
    CHECK(lab.labels[0] == ClassLabel::kBefore);
    CHECK(lab.labels[1] == ClassLabel::kBefore);
    CHECK(lab.duplicates);
  }

  SUBCASE("thresholds come from the rules argument") {
    auto m = manual_model({{1.0, {0.10, 0.15}, {0.01, 0.01}}});
    LabelRules rules;
    rules.peakday_sum = 0.3;
    CHECK(label_components(m, rules).labels[0] == ClassLabel::kPeakDay);
  }
}

TEST_CASE("posterior classification") {
  // Means and the midpoint chosen so both squared distances are bit-identical.
  auto m = manual_model(
      {{0.5, {0.25, 0.2}, {0.01, 0.01}}, {0.5, {0.75, 0.2}, {0.01, 0.01}}});
  Labeling lab;
  lab.labels = {ClassLabel::kPeakDay, ClassLabel::kSymmetric};

  SUBCASE("equidistant point between identical components") {
    auto a = classify(m, lab, {0.5, 0.2});
    CHECK(a.posteriors[0] == 0.5);
    CHECK(a.posteriors[1] == 0.5);
    CHECK(a.uncertainty == 0.5);
    // Tie goes to the lowest component index.
    CHECK(a.component == 0);
    CHECK(a.label == ClassLabel::kPeakDay);
  }

  SUBCASE("posteriors normalize and bound the uncertainty") {
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> d(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
      auto a = classify(m, lab, {d(gen), d(gen)});
      double sum = a.posteriors[0] + a.posteriors[1];
      CHECK(std::abs(sum - 1.0) <= 1e-9);
      CHECK(a.uncertainty >= 0.0);
      CHECK(a.uncertainty <= 0.5 + 1e-12);
    }
  }

  SUBCASE("non-finite points are rejected") {
    CHECK_THROWS_AS(classify(m, lab, {std::nan(""), 0.2}), DataError);
    double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(classify(m, lab, {0.2, inf}), DataError);
  }
}

TEST_CASE("fit rejects impossible inputs") {
  std::vector<Vec2> pts = {{0.1, 0.1}, {0.2, 0.2}, {0.3, 0.3}};
  Rng rng = Rng::derive(1, "err");
  CHECK_THROWS_AS(em_fit(pts, 4, rng), DataError);
  CHECK_THROWS_AS(em_fit(pts, 0, rng), DataError);
  std::vector<Vec2> bad = {{0.1, 0.1}, {std::nan(""), 0.2}};
  CHECK_THROWS_AS(em_fit(bad, 1, rng), DataError);
}

TEST_CASE("points on the f_b = 0 axis stay non-singular") {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> d(0.0, 0.6);
  std::vector<Vec2> pts;
  for (int i = 0; i < 80; ++i) pts.push_back({0.0, d(gen)});
  auto model = fit_best(pts, 2, 5, 11);
  for (const auto& c : model.components) {
    CHECK(c.variance.b >= 1e-6);
    CHECK(c.variance.a >= 1e-6);
  }
  CHECK(std::isfinite(model.log_likelihood));
  CHECK(std::isfinite(log_density(model, {0.0, 0.0})));
  CHECK(std::isfinite(log_density(model, {1.0, 1.0})));
}

TEST_CASE("exhaustive hard-assignment oracle agrees on small separated sets") {
  std::mt19937_64 gen(64);
  std::uniform_int_distribution<int> total_d(6, 12);
  for (int trial = 0; trial < 20; ++trial) {
    int total = total_d(gen);
    std::uniform_int_distribution<int> split_d(2, total - 2);
    int na = split_d(gen);
    auto pts = gaussian_cloud(gen, {0.10, 0.12}, 0.02, na);
    auto more = gaussian_cloud(gen, {0.72, 0.55}, 0.02, total - na);
    pts.insert(pts.end(), more.begin(), more.end());

    auto model = fit_best(pts, 2, 20, 500 + trial);
    std::vector<int> em_assign;
    Labeling lab;
    lab.labels = {ClassLabel::kPeakDay, ClassLabel::kSymmetric};
    for (const auto& p : pts) em_assign.push_back(classify(model, lab, p).component);

    auto oracle = brute_force_partition(pts, 1e-6);
    CAPTURE(trial);
    CAPTURE(total);
    CHECK(canonical_binary(em_assign) == canonical_binary(oracle));
    CHECK(adjusted_rand_index(em_assign, oracle) == 1.0);
  }
}

TEST_CASE("adjusted Rand index") {
  CHECK(adjusted_rand_index({0, 0, 1, 1}, {0, 0, 1, 1}) == 1.0);
  CHECK(adjusted_rand_index({0, 0, 1, 1}, {5, 5, 2, 2}) == 1.0);
  CHECK(adjusted_rand_index({0, 0, 1, 1, 2, 2}, {0, 0, 1, 1, 1, 2}) ==
        doctest::Approx(4.0 / 9.0).epsilon(1e-12));
  CHECK(adjusted_rand_index({0, 0, 0, 0}, {1, 1, 1, 1}) == 1.0);

  std::mt19937_64 gen(2);
  std::uniform_int_distribution<int> d(0, 1);
  std::vector<int> a(600), b(600);
  for (size_t i = 0; i < a.size(); ++i) {
    a[i] = d(gen);
    b[i] = d(gen);
  }
  CHECK(std::abs(adjusted_rand_index(a, b)) < 0.1);

  CHECK_THROWS_AS(adjusted_rand_index({0, 1}, {0, 1, 2}), DataError);
  CHECK_THROWS_AS(adjusted_rand_index({0}, {0}), DataError);
}

TEST_CASE("model files round-trip") {
  auto pts = two_gaussian_fixture();
  auto model = fit_best(pts, 2, 5, 3);
  auto labeling = label_components(model);
  write_model_json("build/test_model.json", model, labeling);

  Labeling back_lab;
  auto back = read_model_json("build/test_model.json", &back_lab);
  REQUIRE(back.component_count() == 2);
  CHECK(back.n_points == model.n_points);
  CHECK(back.log_likelihood == doctest::Approx(model.log_likelihood).epsilon(1e-12));
  for (int j = 0; j < 2; ++j) {
    CHECK(back.components[j].weight ==
          doctest::Approx(model.components[j].weight).epsilon(1e-12));
    CHECK(back.components[j].mean.b ==
          doctest::Approx(model.components[j].mean.b).epsilon(1e-12));
    CHECK(back.components[j].variance.a ==
          doctest::Approx(model.components[j].variance.a).epsilon(1e-12));
    CHECK(back_lab.labels[j] == labeling.labels[j]);
  }

  std::vector<Assignment> rows;
  Assignment a;
  a.hashtag = "one";
  a.point = {0.25, 0.5};
  a.posteriors = {0.75, 0.25};
  a.component = 0;
  a.label = ClassLabel::kAfter;
  a.uncertainty = 0.25;
  rows.push_back(a);
  write_assignments_csv("build/test_assignments.csv", rows);
  auto back_rows = read_assignments_csv("build/test_assignments.csv");
  REQUIRE(back_rows.size() == 1);
  CHECK(back_rows[0].hashtag == "one");
  CHECK(back_rows[0].point.b == 0.25);
  CHECK(back_rows[0].label == ClassLabel::kAfter);
  CHECK(back_rows[0].uncertainty == 0.25);
  REQUIRE(back_rows[0].posteriors.size() == 2);
  CHECK(back_rows[0].posteriors[0] == 0.75);
}
