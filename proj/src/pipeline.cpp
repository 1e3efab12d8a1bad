#include "polarfreq/pipeline.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <utility>

#include "polarfreq/error.hpp"
#include "polarfreq/parallel.hpp"
#include "polarfreq/pfld.hpp"

namespace polarfreq {

namespace {

bool uses_fbt(FeatureMode mode) { return mode != FeatureMode::dft; }
bool uses_dft(FeatureMode mode) { return mode != FeatureMode::fbt; }

template <typename T>
std::vector<T> pick(const std::vector<T>& all, std::span<const std::size_t> indices) {
  std::vector<T> out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(all[i]);
  return out;
}

std::vector<ClassScores> score_one(const std::vector<FeatureVector>& all,
                                   const std::vector<std::string>& subjects,
                                   const Split& split) {
  if (all.empty()) throw ConfigError("feature set lacks the descriptors for this mode");
  const auto gallery_subjects = pick(subjects, split.train);
  const auto model = train_pfld(pick(all, split.train), gallery_subjects);
  std::vector<ClassScores> out;
  out.reserve(split.test.size());
  for (auto t : split.test) out.push_back(classify(model, all[t]));
  return out;
}

}  // namespace

FeatureMode parse_feature_mode(const std::string& text) {
  if (text == "fbt") return FeatureMode::fbt;
  if (text == "dft") return FeatureMode::dft;
  if (text == "fused") return FeatureMode::fused;
  throw ConfigError("unknown feature mode '" + text + "'");
}

std::string to_string(FeatureMode mode) {
  switch (mode) {
    case FeatureMode::fbt: return "fbt";
    case FeatureMode::dft: return "dft";
    case FeatureMode::fused: return "fused";
  }
  return "fbt";
}

ScoreSource parse_score_source(const std::string& text) {
  if (text == "posterior") return ScoreSource::posterior;
  if (text == "embedding-distance") return ScoreSource::embedding_distance;
  throw ConfigError("unknown score source '" + text + "'");
}

std::string to_string(ScoreSource source) {
  return source == ScoreSource::posterior ? "posterior" : "embedding-distance";
}

std::vector<FeatureRecord> FeatureSet::records(FeatureMode which) const {
  if (which == FeatureMode::fused) throw ConfigError("records: choose fbt or dft");
  const auto& vectors = which == FeatureMode::fbt ? fbt : dft;
  std::vector<FeatureRecord> out;
  out.reserve(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    out.push_back({image_ids[i], subject_ids[i], vectors[i]});
  }
  return out;
}

FeatureSet extract_features(const Dataset& dataset, const ExtractionOptions& options) {
  if (uses_fbt(options.mode)) options.fbt.validate();
  if (uses_dft(options.mode)) options.dft.validate();
  if (options.normalize) options.normalization.validate();

  const std::size_t n = dataset.size();
  std::vector<GrayImage> images(n);
  parallel_for(n, options.workers, [&](std::size_t i) {
    auto image = dataset.load_image(i);
    if (options.normalize) {
      const auto& entry = dataset.entries()[i];
      if (!entry.eyes) {
        throw ConfigError("normalization requested but image '" + entry.image_id +
                          "' has no eye annotation");
      }
      image = normalize_face(image, *entry.eyes, options.normalization);
    }
    images[i] = std::move(image);
  });

  FeatureSet out;
  out.image_ids = dataset.image_ids();
  out.subject_ids = dataset.subject_ids();

  if (uses_fbt(options.mode)) {
    const auto roots = build_root_table(options.fbt.max_order, options.fbt.max_root);
    // One quadrature basis per distinct image size.
    std::map<std::pair<int, int>, std::unique_ptr<FourierBesselBasis>> bases;
    for (const auto& image : images) {
      auto& basis = bases[{image.width(), image.height()}];
      if (!basis) {
        const auto geometry = to_polar(image, options.fbt.angular_resolution_deg);
        basis = std::make_unique<FourierBesselBasis>(options.fbt, roots, geometry.n_rays,
                                                     geometry.n_rings, geometry.max_radius);
      }
    }
    out.fbt.resize(n);
    parallel_for(n, options.workers, [&](std::size_t i) {
      const auto& basis = *bases.at({images[i].width(), images[i].height()});
      out.fbt[i] = extract_fbt(images[i], basis, options.fbt.angular_resolution_deg);
    });
  }

  if (uses_dft(options.mode)) {
    out.dft.resize(n);
    parallel_for(n, options.workers, [&](std::size_t i) {
      out.dft[i] = dft_features(dft_magnitude(images[i]), options.dft);
    });
  }
  return out;
}

FeatureSet feature_set_from_records(std::span<const FeatureRecord> fbt,
                                    std::span<const FeatureRecord> dft) {
  if (fbt.empty() && dft.empty()) throw ConfigError("no feature records");
  if (!fbt.empty() && !dft.empty() && fbt.size() != dft.size()) {
    throw ConfigError("FBT and DFT feature files have different row counts");
  }
  FeatureSet out;
  const auto& primary = fbt.empty() ? dft : fbt;
  for (std::size_t i = 0; i < primary.size(); ++i) {
    out.image_ids.push_back(primary[i].image_id);
    out.subject_ids.push_back(primary[i].subject_id);
    if (!fbt.empty()) out.fbt.push_back(fbt[i].features);
    if (!dft.empty()) {
      if (!fbt.empty() && (dft[i].image_id != fbt[i].image_id ||
                           dft[i].subject_id != fbt[i].subject_id)) {
        throw ConfigError("FBT and DFT feature files disagree at row " + std::to_string(i + 1));
      }
      out.dft.push_back(dft[i].features);
    }
  }
  return out;
}

std::vector<ClassScores> score_split(const FeatureSet& features, FeatureMode mode,
                                     const Split& split) {
  switch (mode) {
    case FeatureMode::fbt: return score_one(features.fbt, features.subject_ids, split);
    case FeatureMode::dft: return score_one(features.dft, features.subject_ids, split);
    case FeatureMode::fused: {
      const auto a = score_one(features.fbt, features.subject_ids, split);
      const auto b = score_one(features.dft, features.subject_ids, split);
      std::vector<ClassScores> out;
      out.reserve(a.size());
      for (std::size_t t = 0; t < a.size(); ++t) out.push_back(fuse_scores(a[t], b[t]));
      return out;
    }
  }
  return {};
}

Predictor make_pfld_predictor(const FeatureSet& features, FeatureMode mode) {
  return [&features, mode](const Split& split) {
    const auto scores = score_split(features, mode, split);
    std::vector<std::string> out;
    out.reserve(scores.size());
    for (const auto& s : scores) out.push_back(s.predicted());
    return out;
  };
}

VerificationScores split_claims(const FeatureSet& features, FeatureMode mode,
                                const Split& split, ScoreSource source,
                                ScoreOrientation orientation) {
  std::vector<std::string> truth;
  truth.reserve(split.test.size());
  for (auto t : split.test) truth.push_back(features.subject_ids[t]);

  if (source == ScoreSource::posterior) {
    return verification_scores(score_split(features, mode, split), truth, orientation);
  }

  if (mode == FeatureMode::fused) {
    throw ConfigError("embedding-distance scores are defined for fbt or dft, not fused");
  }
  const auto& all = mode == FeatureMode::fbt ? features.fbt : features.dft;
  if (all.empty()) throw ConfigError("feature set lacks the descriptors for this mode");

  std::vector<std::string> classes = pick(features.subject_ids, split.train);
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

  VerificationScores out;
  for (std::size_t p = 0; p < split.test.size(); ++p) {
    std::vector<double> nearest(classes.size(), std::numeric_limits<double>::infinity());
    for (auto g : split.train) {
      const auto c = static_cast<std::size_t>(
          std::lower_bound(classes.begin(), classes.end(), features.subject_ids[g]) -
          classes.begin());
      nearest[c] = std::min(nearest[c], euclidean_distance(all[split.test[p]], all[g]));
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const double score =
          orientation == ScoreOrientation::distance ? nearest[c] : -nearest[c];
      (classes[c] == truth[p] ? out.genuine : out.impostor).push_back(score);
    }
  }
  return out;
}

}  // namespace polarfreq
