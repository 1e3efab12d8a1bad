// Command-line front end: feature extraction, experiments, synthetic
// patterns and a toy dataset generator.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polarfreq/config.hpp"
#include "polarfreq/error.hpp"
#include "polarfreq/experiment.hpp"
#include "polarfreq/feature_io.hpp"
#include "polarfreq/file_util.hpp"
#include "polarfreq/pgm.hpp"
#include "polarfreq/synth.hpp"

namespace fs = std::filesystem;
using namespace polarfreq;

namespace {

struct RunFlags {
  std::string config_path;
  std::string mode;
  std::string dataset;
  std::string layout;
  std::optional<int> k_train;
  std::optional<int> reps;
  std::optional<std::uint64_t> seed;
  bool normalize = false;
  std::string out;
  std::optional<int> workers;
  std::string score_orientation;
  std::string kind;
};

void add_run_flags(CLI::App& cmd, RunFlags& f, bool experiment) {
  cmd.add_option("--config", f.config_path, "key=value configuration file");
  cmd.add_option("--mode", f.mode, "Feature mode")
      ->check(CLI::IsMember({"fbt", "dft", "fused"}));
  cmd.add_option("--dataset", f.dataset, "Dataset root or manifest");
  cmd.add_option("--layout", f.layout, "Dataset layout")
      ->check(CLI::IsMember({"orl", "flat-manifest"}));
  cmd.add_flag("--normalize", f.normalize, "Register faces on annotated eye positions");
  cmd.add_option("--out", f.out, "Output directory");
  cmd.add_option("--workers", f.workers, "Worker threads")->check(CLI::PositiveNumber);
  if (experiment) {
    cmd.add_option("--k-train", f.k_train, "Training images per subject");
    cmd.add_option("--reps", f.reps, "Repetitions");
    cmd.add_option("--seed", f.seed, "Split seed");
    cmd.add_option("--score-orientation", f.score_orientation, "Verification score direction")
        ->check(CLI::IsMember({"distance", "similarity"}));
    cmd.add_option("--kind", f.kind, "Experiment kind")
        ->check(CLI::IsMember({"error-rate", "learning-curve", "subject-curve", "cmc", "roc",
                               "feature-map", "synth-oracle"}));
  }
}

RunConfig resolve(const RunFlags& f) {
  RunConfig config;
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path);
    if (!in) throw IoError("cannot open config " + f.config_path);
    std::stringstream text;
    text << in.rdbuf();
    config = apply_ini(parse_ini(text.str()), config);
  }
  if (!f.mode.empty()) config.mode = parse_feature_mode(f.mode);
  if (!f.dataset.empty()) config.dataset_path = f.dataset;
  if (!f.layout.empty()) config.layout = parse_dataset_layout(f.layout);
  if (f.normalize) config.normalize = true;
  if (!f.out.empty()) config.out_dir = f.out;
  if (f.workers) config.workers = *f.workers;
  if (f.k_train) config.split.k_train_per_subject = *f.k_train;
  if (f.reps) config.split.repetitions = *f.reps;
  if (f.seed) config.split.seed = *f.seed;
  if (!f.score_orientation.empty()) {
    config.score_orientation = parse_score_orientation(f.score_orientation);
  }
  if (!f.kind.empty()) config.experiment = f.kind;
  config.validate();
  return config;
}

Dataset load_configured_dataset(const RunConfig& config) {
  if (config.dataset_path.empty()) throw ConfigError("no dataset given (--dataset)");
  return load_dataset_dir(config.dataset_path, config.layout);
}

int cmd_extract(const RunFlags& flags) {
  const auto config = resolve(flags);
  const auto dataset = load_configured_dataset(config);
  ExtractionOptions options;
  options.mode = config.mode;
  options.fbt = config.fbt;
  options.dft = config.dft;
  options.normalize = config.normalize;
  options.normalization = config.normalization;
  options.workers = config.workers;
  const auto features = extract_features(dataset, options);

  const fs::path dir(config.out_dir);
  const auto hash = config_hash(config);
  for (auto which : {FeatureMode::fbt, FeatureMode::dft}) {
    if ((which == FeatureMode::fbt && features.fbt.empty()) ||
        (which == FeatureMode::dft && features.dft.empty())) {
      continue;
    }
    const auto path = dir / ("features_" + to_string(which) + "_" + hash + ".csv");
    save_feature_file(path, features.records(which));
    const auto& first = which == FeatureMode::fbt ? features.fbt.front() : features.dft.front();
    std::cout << "wrote " << path.string() << " (" << features.size() << " images x "
              << first.size() << " values, " << first.layout_id << ")\n";
  }
  write_file_atomic(dir / "run_config.ini", to_ini(config));
  return 0;
}

int cmd_experiment(const RunFlags& flags) {
  const auto config = resolve(flags);
  std::optional<Dataset> dataset;
  if (config.experiment != "synth-oracle") dataset = load_configured_dataset(config);
  const auto result = run_experiment(config, dataset ? &*dataset : nullptr);
  write_experiment(config, result);
  for (const auto& line : result.summary_lines) std::cout << line << '\n';
  return result.passed ? 0 : 2;
}

int cmd_synth(const std::string& kind, double cycles, int angular_cycles, int size,
              const std::string& out) {
  GrayImage image;
  if (kind == "radial") {
    image = synth_radial(cycles, size);
  } else if (kind == "angular") {
    if (cycles != std::round(cycles)) throw ConfigError("angular cycles must be an integer");
    image = synth_angular(static_cast<int>(cycles), size);
  } else if (kind == "mix") {
    image = synth_mix(cycles, angular_cycles, size);
  } else {
    throw ConfigError("unknown pattern kind '" + kind + "' (radial, angular, mix)");
  }
  for (double& v : image.pixels()) v *= 255.0;
  save_pgm(out, image, 255);
  std::cout << "wrote " << out << '\n';
  return 0;
}

int cmd_toy_dataset(const ToyDatasetSpec& spec, const std::string& out) {
  const auto images = make_toy_dataset(spec);
  for (const auto& item : images) {
    GrayImage scaled = item.image;
    for (double& v : scaled.pixels()) v *= 255.0;
    save_pgm(fs::path(out) / (item.image_id + ".pgm"), scaled, 255);
  }
  std::cout << "wrote " << images.size() << " images for " << spec.subjects
            << " subjects under " << out << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polar-frequency face recognition (Fourier-Bessel and DFT features)"};
  app.require_subcommand(1);

  RunFlags extract_flags;
  auto* extract = app.add_subcommand("extract", "Extract feature files from a dataset");
  add_run_flags(*extract, extract_flags, false);

  RunFlags experiment_flags;
  auto* experiment = app.add_subcommand("experiment", "Run an evaluation experiment");
  add_run_flags(*experiment, experiment_flags, true);

  std::string synth_kind;
  double synth_cycles = 8.0;
  int synth_angular = 4;
  int synth_size = 131;
  std::string synth_out;
  auto* synth = app.add_subcommand("synth", "Write a synthetic test pattern as P5");
  synth->add_option("kind", synth_kind, "radial | angular | mix")->required();
  synth->add_option("cycles", synth_cycles, "Cycles (radial cycles for mix)")->required();
  synth->add_option("size", synth_size, "Square image side in pixels")->required();
  synth->add_option("out", synth_out, "Output .pgm path")->required();
  synth->add_option("--angular-cycles", synth_angular, "Angular cycles for mix");

  ToyDatasetSpec toy;
  std::string toy_out;
  auto* toy_cmd = app.add_subcommand("toy-dataset", "Write a synthetic ORL-layout dataset");
  toy_cmd->add_option("--out", toy_out, "Output directory")->required();
  toy_cmd->add_option("--subjects", toy.subjects, "Number of subjects");
  toy_cmd->add_option("--images", toy.images_per_subject, "Images per subject");
  toy_cmd->add_option("--size", toy.size, "Image side in pixels");
  toy_cmd->add_option("--seed", toy.seed, "Generator seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*extract) return cmd_extract(extract_flags);
    if (*experiment) return cmd_experiment(experiment_flags);
    if (*synth) return cmd_synth(synth_kind, synth_cycles, synth_angular, synth_size, synth_out);
    if (*toy_cmd) return cmd_toy_dataset(toy, toy_out);
  } catch (const std::exception& e) {
    std::cerr << "polarfreq: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
