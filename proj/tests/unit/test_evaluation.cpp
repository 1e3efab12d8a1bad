#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "polarfreq/error.hpp"
#include "polarfreq/evaluation.hpp"
#include "polarfreq/random.hpp"

using namespace polarfreq;

namespace {

std::vector<std::string> subjects(int count, int per_subject) {
  std::vector<std::string> out;
  for (int s = 0; s < count; ++s) {
    for (int k = 0; k < per_subject; ++k) out.push_back("s" + std::to_string(10 + s));
  }
  return out;
}

ClassScores scores(std::vector<double> normalized) {
  ClassScores s;
  for (std::size_t k = 0; k < normalized.size(); ++k) s.labels.push_back("c" + std::to_string(k));
  s.raw = normalized;
  s.normalized = std::move(normalized);
  return s;
}

}  // namespace

TEST(RandomSplit, SizesAndPartition) {
  const auto subj = subjects(6, 10);
  const auto split = random_split(subj, SplitSpec{5, 0, 10, 3}, 0);
  EXPECT_EQ(split.train.size(), 30u);
  EXPECT_EQ(split.test.size(), 30u);
  std::set<std::size_t> all(split.train.begin(), split.train.end());
  all.insert(split.test.begin(), split.test.end());
  EXPECT_EQ(all.size(), 60u);
  std::map<std::string, int> per;
  for (auto i : split.train) ++per[subj[i]];
  for (const auto& [s, n] : per) EXPECT_EQ(n, 5) << s;
  EXPECT_TRUE(std::is_sorted(split.train.begin(), split.train.end()));
}

TEST(RandomSplit, DeterministicAndVaried) {
  const auto subj = subjects(4, 10);
  const SplitSpec spec{5, 0, 10, 42};
  EXPECT_EQ(random_split(subj, spec, 3).train, random_split(subj, spec, 3).train);
  EXPECT_NE(random_split(subj, spec, 3).train, random_split(subj, spec, 4).train);
  SplitSpec other = spec;
  other.seed = 43;
  EXPECT_NE(random_split(subj, spec, 3).train, random_split(subj, other, 3).train);
}

TEST(RandomSplit, LeaveOneOutAndCapping) {
  const auto subj = subjects(5, 4);
  const auto split = random_split(subj, SplitSpec{3, 0, 1, 1}, 0);
  EXPECT_EQ(split.test.size(), 5u);
  const auto capped = random_split(subj, SplitSpec{2, 2, 1, 1}, 0);
  EXPECT_EQ(capped.train.size() + capped.test.size(), 8u);
  for (auto i : capped.test) EXPECT_TRUE(subj[i] == "s10" || subj[i] == "s11");
  EXPECT_THROW(random_split(subj, SplitSpec{4, 0, 1, 1}, 0), ConfigError);
  EXPECT_THROW(random_split(subj, SplitSpec{2, 9, 1, 1}, 0), ConfigError);
  EXPECT_THROW(random_split(subj, SplitSpec{0, 0, 1, 1}, 0), ConfigError);
}

TEST(MeanSem, MatchesTwoPassComputation) {
  Rng rng(5);
  std::vector<double> v(37);
  for (double& x : v) x = rng.uniform(0.0, 10.0);
  const auto ms = mean_and_sem(v);
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= v.size();
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  const double sem = std::sqrt(ss / (v.size() - 1)) / std::sqrt(double(v.size()));
  EXPECT_NEAR(ms.mean, mean, 1e-12);
  EXPECT_NEAR(ms.sem, sem, 1e-12);
  const std::vector<double> same(5, 2.5);
  EXPECT_EQ(mean_and_sem(same).sem, 0.0);
}

TEST(ErrorExperiment, OracleAndAlwaysWrongPredictors) {
  const auto subj = subjects(4, 6);
  const SplitSpec spec{3, 0, 5, 9};
  const Predictor truth = [&](const Split& split) {
    std::vector<std::string> out;
    for (auto i : split.test) out.push_back(subj[i]);
    return out;
  };
  const auto perfect = run_error_experiment(subj, truth, spec, 2);
  EXPECT_EQ(perfect.mean, 0.0);
  EXPECT_EQ(perfect.sem, 0.0);
  EXPECT_EQ(perfect.per_repetition.size(), 5u);
  const Predictor wrong = [&](const Split& split) {
    return std::vector<std::string>(split.test.size(), "nobody");
  };
  EXPECT_EQ(run_error_experiment(subj, wrong, spec).mean, 100.0);
  const Predictor short_answer = [](const Split&) { return std::vector<std::string>{}; };
  EXPECT_THROW(run_error_experiment(subj, short_answer, spec), ConfigError);
}

TEST(Cmc, PerfectAndMonotone) {
  std::vector<ClassScores> s = {scores({0.7, 0.2, 0.1}), scores({0.1, 0.8, 0.1})};
  const std::vector<std::string> truth = {"c0", "c1"};
  const auto curve = cmc(s, truth);
  EXPECT_EQ(curve.rank, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(curve.proportion_correct, (std::vector<double>{1.0, 1.0, 1.0}));

  Rng rng(2);
  std::vector<ClassScores> random_scores;
  std::vector<std::string> random_truth;
  for (int p = 0; p < 200; ++p) {
    std::vector<double> v(6);
    for (double& x : v) x = rng.uniform();
    random_scores.push_back(scores(v));
    random_truth.push_back("c" + std::to_string(rng.below(6)));
  }
  const auto rc = cmc(random_scores, random_truth);
  for (std::size_t r = 1; r < rc.proportion_correct.size(); ++r) {
    EXPECT_GE(rc.proportion_correct[r], rc.proportion_correct[r - 1]);
    EXPECT_LE(rc.proportion_correct[r], 1.0);
  }
  EXPECT_EQ(rc.proportion_correct.back(), 1.0);
}

TEST(Cmc, EightyOfHundredWithinRankFive) {
  std::vector<ClassScores> s;
  std::vector<std::string> truth;
  for (int p = 0; p < 100; ++p) {
    std::vector<double> v(10);
    for (int c = 0; c < 10; ++c) v[c] = 1.0 - 0.05 * c;  // c0 ranks first
    s.push_back(scores(v));
    // 80 probes have their subject at rank 5, the rest at rank 8.
    truth.push_back(p < 80 ? "c4" : "c7");
  }
  const auto curve = cmc(s, truth);
  EXPECT_DOUBLE_EQ(curve.proportion_correct[3], 0.0);
  EXPECT_DOUBLE_EQ(curve.proportion_correct[4], 0.8);
  EXPECT_DOUBLE_EQ(curve.proportion_correct[7], 1.0);
}

TEST(Cmc, TiesTakeWorstRank) {
  // All four classes tie: every probe lands at rank G.
  std::vector<ClassScores> s(4, scores({0.25, 0.25, 0.25, 0.25}));
  const std::vector<std::string> truth = {"c0", "c1", "c2", "c3"};
  const auto curve = cmc(s, truth);
  EXPECT_EQ(curve.proportion_correct, (std::vector<double>{0.0, 0.0, 0.0, 1.0}));
  // A two-way tie at the top puts the true class at rank 2.
  std::vector<ClassScores> t = {scores({0.4, 0.4, 0.2})};
  const std::vector<std::string> t_truth = {"c0"};
  EXPECT_EQ(cmc(t, t_truth).proportion_correct, (std::vector<double>{0.0, 1.0, 1.0}));
}

TEST(Cmc, MissingSubject) {
  std::vector<ClassScores> s = {scores({0.5, 0.5})};
  const std::vector<std::string> truth = {"zz"};
  EXPECT_THROW(cmc(s, truth), ConfigError);
}

TEST(Roc, SeparatedScores) {
  const std::vector<double> gen(10, 0.0), imp(10, 1.0);
  const auto roc = verification_roc(gen, imp);
  ASSERT_EQ(roc.thresholds.size(), 100u);
  EXPECT_EQ(roc.thresholds.front(), 0.0);
  EXPECT_EQ(roc.thresholds.back(), 1.0);
  for (std::size_t k = 1; k + 1 < roc.thresholds.size(); ++k) {
    EXPECT_EQ(roc.verification[k], 1.0);
    EXPECT_EQ(roc.false_alarm[k], 0.0);
  }
  EXPECT_EQ(equal_error_rate(roc).rate, 0.0);
}

TEST(Roc, MonotoneForBothOrientations) {
  Rng rng(11);
  std::vector<double> gen(300), imp(900);
  for (double& v : gen) v = rng.normal();
  for (double& v : imp) v = rng.normal() + 1.5;
  for (auto orientation : {ScoreOrientation::distance, ScoreOrientation::similarity}) {
    const auto roc = verification_roc(gen, imp, orientation);
    for (std::size_t k = 1; k < roc.thresholds.size(); ++k) {
      EXPECT_GE(roc.verification[k], roc.verification[k - 1]);
      EXPECT_GE(roc.false_alarm[k], roc.false_alarm[k - 1]);
    }
    EXPECT_EQ(roc.verification.back(), 1.0);
    EXPECT_EQ(roc.false_alarm.back(), 1.0);
  }
  const auto sim = verification_roc(gen, imp, ScoreOrientation::similarity);
  EXPECT_GT(sim.thresholds.front(), sim.thresholds.back());
}

TEST(Roc, IdenticalDistributionsGiveHalfEer) {
  Rng rng(13);
  std::vector<double> gen(20000), imp(20000);
  for (double& v : gen) v = rng.normal();
  for (double& v : imp) v = rng.normal();
  const auto roc = verification_roc(gen, imp);
  const auto eer = equal_error_rate(roc);
  // One threshold step moves each rate by at most the density mass in it.
  double step_mass = 0.0;
  for (std::size_t k = 1; k < roc.false_alarm.size(); ++k) {
    step_mass = std::max(step_mass, roc.false_alarm[k] - roc.false_alarm[k - 1]);
  }
  EXPECT_NEAR(eer.rate, 0.5, step_mass);
  EXPECT_LE(eer.bracket_low, eer.bracket_high);
}

TEST(Roc, EerBracketsTheCrossing) {
  Rng rng(17);
  std::vector<double> gen(2000), imp(2000);
  for (double& v : gen) v = rng.normal();
  for (double& v : imp) v = rng.normal() + 2.0;
  const auto eer = equal_error_rate(verification_roc(gen, imp));
  EXPECT_NEAR(eer.rate, 0.1587, 0.03);  // Phi(-1)
  EXPECT_LT(eer.bracket_low, eer.bracket_high);
  EXPECT_GE(eer.threshold, eer.bracket_low);
  EXPECT_LE(eer.threshold, eer.bracket_high);
}

TEST(Roc, Errors) {
  const std::vector<double> none, one = {1.0};
  EXPECT_THROW(verification_roc(none, one), ConfigError);
  EXPECT_THROW(verification_roc(one, one, ScoreOrientation::distance, 1), ConfigError);
  EXPECT_THROW(parse_score_orientation("sideways"), ConfigError);
  EXPECT_EQ(parse_score_orientation("similarity"), ScoreOrientation::similarity);
}

TEST(VerificationScores, OrientationFlipsPosterior) {
  std::vector<ClassScores> s = {scores({0.7, 0.3})};
  const std::vector<std::string> truth = {"c0"};
  const auto d = verification_scores(s, truth, ScoreOrientation::distance);
  const auto p = verification_scores(s, truth, ScoreOrientation::similarity);
  EXPECT_EQ(d.genuine, (std::vector<double>{1.0 - 0.7}));
  EXPECT_EQ(d.impostor, (std::vector<double>{1.0 - 0.3}));
  EXPECT_EQ(p.genuine, (std::vector<double>{0.7}));
  // Same claims, same decisions: the EER does not depend on orientation.
  Rng rng(1);
  std::vector<ClassScores> many;
  std::vector<std::string> many_truth;
  for (int k = 0; k < 100; ++k) {
    const double a = rng.uniform();
    many.push_back(scores({a, 1.0 - a}));
    many_truth.push_back(rng.uniform() < 0.7 ? "c0" : "c1");
  }
  const auto vd = verification_scores(many, many_truth, ScoreOrientation::distance);
  const auto vs = verification_scores(many, many_truth, ScoreOrientation::similarity);
  EXPECT_NEAR(equal_error_rate(verification_roc(vd.genuine, vd.impostor)).rate,
              equal_error_rate(verification_roc(vs.genuine, vs.impostor,
                                                ScoreOrientation::similarity)).rate,
              1e-12);
}

TEST(FeatureErrors, ConstantInformativeAndChance) {
  const int subjects_n = 5;
  const auto subj = subjects(subjects_n, 6);
  std::vector<FeatureVector> features;
  Rng rng(4);
  for (std::size_t i = 0; i < subj.size(); ++i) {
    const double index = std::stod(subj[i].substr(1));
    features.push_back({"t", {3.0, index, rng.uniform()}});
  }
  const auto rates = per_feature_error_rates(features, subj, SplitSpec{3, 0, 6, 2});
  ASSERT_EQ(rates.size(), 3u);
  EXPECT_NEAR(rates[0], 100.0 * (1.0 - 1.0 / subjects_n), 1e-9);
  EXPECT_EQ(rates[1], 0.0);
  EXPECT_GT(rates[2], 30.0);
}

TEST(FeatureMap, FbtLayout) {
  std::vector<double> rates(2 * 4 * 3);
  std::iota(rates.begin(), rates.end(), 0.0);
  const auto map = arrange_feature_map("fbt-3x3", rates);
  EXPECT_EQ(map.rows, 8);
  EXPECT_EQ(map.cols, 3);
  EXPECT_EQ(map.row_labels.front(), "A0");
  EXPECT_EQ(map.row_labels[4], "B0");
  EXPECT_EQ(map.at(4, 1), 13.0);
  EXPECT_THROW(arrange_feature_map("fbt-3x3", std::vector<double>(5)), ConfigError);
  EXPECT_THROW(arrange_feature_map("other", rates), ConfigError);
}

TEST(FeatureMap, DftLayout) {
  std::vector<double> rates(13);  // radius 2 disk
  std::iota(rates.begin(), rates.end(), 1.0);
  const auto map = arrange_feature_map("dft-2", rates);
  EXPECT_EQ(map.rows, 5);
  EXPECT_EQ(map.cols, 5);
  EXPECT_EQ(map.at(2, 2), 1.0);  // DC at the center
  EXPECT_EQ(map.at(2, 3), 2.0);  // u = 1
  EXPECT_TRUE(std::isnan(map.at(0, 0)));
  int defined = 0;
  for (double v : map.values) defined += !std::isnan(v);
  EXPECT_EQ(defined, 13);
}
