#include "polarfreq/experiment.hpp"

#include <cstdio>
#include <sstream>

#include "polarfreq/error.hpp"
#include "polarfreq/file_util.hpp"
#include "polarfreq/report_io.hpp"
#include "polarfreq/synth.hpp"
#include "polarfreq/text_format.hpp"

namespace polarfreq {

namespace {

std::string fixed3(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.3f", v);
  return buffer;
}

std::string location(int order, int root) {
  return "(" + std::to_string(order) + "," + std::to_string(root) + ")";
}

ExtractionOptions extraction_for(const RunConfig& config, const FBTConfig& fbt,
                                 const DFTConfig& dft) {
  ExtractionOptions options;
  options.mode = config.mode;
  options.fbt = fbt;
  options.dft = dft;
  options.normalize = config.normalize;
  options.normalization = config.normalization;
  options.workers = config.workers;
  return options;
}

std::string file_name(const RunConfig& config, const std::string& kind) {
  return kind + "_" + to_string(config.mode) + "_" + config_hash(config) + ".csv";
}

void error_rate(const RunConfig& config, const FeatureSet& features, ExperimentResult& out,
                std::vector<SummaryRow>& summary) {
  const auto report = run_error_experiment(
      features.subject_ids, make_pfld_predictor(features, config.mode), config.split,
      config.workers);
  out.files.push_back({file_name(config, "error_rate"), repetitions_csv(report.per_repetition)});
  summary.push_back({"error-rate", report.mean, report.sem, std::nullopt});
  out.summary_lines.push_back("error-rate " + to_string(config.mode) + ": error " +
                              fixed3(report.mean) + " sem " + fixed3(report.sem));
}

void sweep(const RunConfig& config, const FeatureSet& features, ExperimentResult& out,
           std::vector<SummaryRow>& summary, bool over_k) {
  const auto& parameters = over_k ? config.k_values : config.subject_counts;
  const std::string name = over_k ? "learning-curve" : "subject-curve";
  std::vector<CurvePoint> points;
  for (int p : parameters) {
    SplitSpec spec = config.split;
    (over_k ? spec.k_train_per_subject : spec.n_subjects) = p;
    const auto report = run_error_experiment(
        features.subject_ids, make_pfld_predictor(features, config.mode), spec, config.workers);
    points.push_back({p, report.mean, report.sem});
    summary.push_back({name + ":" + std::to_string(p), report.mean, report.sem, std::nullopt});
    out.summary_lines.push_back(name + " " + to_string(config.mode) + " " +
                                (over_k ? "k=" : "subjects=") + std::to_string(p) +
                                ": error " + fixed3(report.mean) + " sem " +
                                fixed3(report.sem));
  }
  out.files.push_back(
      {file_name(config, over_k ? "learning_curve" : "subject_curve"),
       curve_csv(over_k ? "k" : "subjects", points)});
}

void identification(const RunConfig& config, const FeatureSet& features,
                    ExperimentResult& out, std::vector<SummaryRow>& summary) {
  CMCCurve mean_curve;
  std::vector<double> rank1;
  for (int rep = 0; rep < config.split.repetitions; ++rep) {
    const auto split = random_split(features.subject_ids, config.split, rep);
    std::vector<std::string> truth;
    for (auto t : split.test) truth.push_back(features.subject_ids[t]);
    const auto curve = cmc(score_split(features, config.mode, split), truth);
    if (mean_curve.rank.empty()) {
      mean_curve.rank = curve.rank;
      mean_curve.proportion_correct.assign(curve.rank.size(), 0.0);
    }
    for (std::size_t r = 0; r < curve.rank.size(); ++r) {
      mean_curve.proportion_correct[r] += curve.proportion_correct[r] / config.split.repetitions;
    }
    rank1.push_back(curve.proportion_correct.front());
  }
  const auto stats = mean_and_sem(rank1);
  out.files.push_back({file_name(config, "cmc"), cmc_csv(mean_curve)});
  summary.push_back({"cmc-rank1", stats.mean, stats.sem, std::nullopt});
  out.summary_lines.push_back("cmc " + to_string(config.mode) + ": rank-1 " +
                              fixed3(stats.mean) + " sem " + fixed3(stats.sem));
}

void verification(const RunConfig& config, const FeatureSet& features, ExperimentResult& out,
                  std::vector<SummaryRow>& summary) {
  VerificationScores pooled;
  std::vector<double> per_rep;
  for (int rep = 0; rep < config.split.repetitions; ++rep) {
    const auto split = random_split(features.subject_ids, config.split, rep);
    const auto claims = split_claims(features, config.mode, split, config.score_source,
                                     config.score_orientation);
    per_rep.push_back(
        equal_error_rate(verification_roc(claims.genuine, claims.impostor,
                                          config.score_orientation))
            .rate);
    pooled.genuine.insert(pooled.genuine.end(), claims.genuine.begin(), claims.genuine.end());
    pooled.impostor.insert(pooled.impostor.end(), claims.impostor.begin(),
                           claims.impostor.end());
  }
  const auto roc = verification_roc(pooled.genuine, pooled.impostor, config.score_orientation);
  const auto eer = equal_error_rate(roc);
  const auto stats = mean_and_sem(per_rep);
  out.files.push_back({file_name(config, "roc"), roc_csv(roc)});
  summary.push_back({"roc-eer", stats.mean, stats.sem, eer.rate});
  out.summary_lines.push_back("roc " + to_string(config.mode) + ": eer " + fixed3(eer.rate) +
                              " at threshold " + format_double(eer.threshold));
}

void feature_maps(const RunConfig& config, const Dataset& dataset, ExperimentResult& out,
                  std::vector<SummaryRow>& summary) {
  const auto features =
      extract_features(dataset, extraction_for(config, config.map_fbt, config.map_dft));
  auto one = [&](const std::vector<FeatureVector>& vectors, const std::string& kind) {
    const auto map =
        per_feature_error_map(vectors, features.subject_ids, config.split, config.workers);
    out.files.push_back({kind + "_" + config_hash(config) + ".csv", feature_map_csv(map)});
    double best = 100.0;
    for (double v : map.values) {
      if (v == v) best = std::min(best, v);
    }
    summary.push_back({kind + "-best", best, 0.0, std::nullopt});
    out.summary_lines.push_back(kind + ": " + std::to_string(vectors.front().size()) +
                                " features, best single-feature error " + fixed3(best));
  };
  if (config.mode != FeatureMode::dft) one(features.fbt, "feature_map_fbt");
  if (config.mode != FeatureMode::fbt) one(features.dft, "feature_map_dft");
}

}  // namespace

std::vector<OracleCheck> run_synth_oracle(int size, const FBTConfig& config) {
  const auto roots = build_root_table(config.max_order, config.max_root);
  auto spectrum = [&](const GrayImage& image) {
    return fbt(to_polar(image, config.angular_resolution_deg), config, roots);
  };

  std::vector<OracleCheck> checks;
  const auto radial = top_coefficients(spectrum(synth_radial(8, size)), 1);
  checks.push_back({"radial-8 argmax", location(0, 8),
                    location(radial[0].order, radial[0].root),
                    radial[0].order == 0 && radial[0].root == 8});

  const auto angular = top_coefficients(spectrum(synth_angular(4, size)), 1);
  checks.push_back({"angular-4 argmax", location(4, 1),
                    location(angular[0].order, angular[0].root),
                    angular[0].order == 4 && angular[0].root == 1});

  const auto mix = top_coefficients(spectrum(synth_mix(8, 4, size)), 2);
  auto is = [](const SpectrumPeak& p, int n, int i) { return p.order == n && p.root == i; };
  const bool mix_ok = (is(mix[0], 0, 8) && is(mix[1], 4, 1)) ||
                      (is(mix[0], 4, 1) && is(mix[1], 0, 8));
  checks.push_back({"mix top-2", "{(0,8),(4,1)}",
                    "{" + location(mix[0].order, mix[0].root) + "," +
                        location(mix[1].order, mix[1].root) + "}",
                    mix_ok});
  return checks;
}

ExperimentResult run_experiment(const RunConfig& config, const Dataset* dataset) {
  config.validate();
  ExperimentResult out;
  std::vector<SummaryRow> summary;

  if (config.experiment == "synth-oracle") {
    const auto checks = run_synth_oracle();
    std::ostringstream csv;
    csv << "check,expected,observed,pass\n";
    for (const auto& c : checks) {
      csv << c.name << ",\"" << c.expected << "\",\"" << c.observed << "\","
          << (c.passed ? "true" : "false") << '\n';
      out.summary_lines.push_back(std::string(c.passed ? "PASS " : "FAIL ") + c.name +
                                  ": expected " + c.expected + ", observed " + c.observed);
      out.passed = out.passed && c.passed;
    }
    out.files.push_back({"synth_oracle_" + config_hash(config) + ".csv", csv.str()});
    return out;
  }

  if (!dataset) throw ConfigError("experiment '" + config.experiment + "' needs a dataset");

  if (config.experiment == "feature-map") {
    feature_maps(config, *dataset, out, summary);
  } else {
    const auto features =
        extract_features(*dataset, extraction_for(config, config.fbt, config.dft));
    if (config.experiment == "error-rate") {
      error_rate(config, features, out, summary);
    } else if (config.experiment == "learning-curve") {
      sweep(config, features, out, summary, true);
    } else if (config.experiment == "subject-curve") {
      sweep(config, features, out, summary, false);
    } else if (config.experiment == "cmc") {
      identification(config, features, out, summary);
    } else if (config.experiment == "roc") {
      verification(config, features, out, summary);
    }
  }
  out.files.push_back({"summary_" + config_hash(config) + ".csv", summary_csv(summary)});
  return out;
}

std::vector<std::filesystem::path> write_experiment(const RunConfig& config,
                                                    const ExperimentResult& result) {
  const std::filesystem::path dir(config.out_dir);
  std::vector<std::filesystem::path> written;
  for (const auto& f : result.files) {
    write_file_atomic(dir / f.name, f.contents);
    written.push_back(dir / f.name);
  }
  write_file_atomic(dir / "run_config.ini", to_ini(config));
  written.push_back(dir / "run_config.ini");
  return written;
}

}  // namespace polarfreq
