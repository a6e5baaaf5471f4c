#ifndef MERITRANK_CONFIG_HPP
#define MERITRANK_CONFIG_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "meritrank/citeflow.hpp"
#include "meritrank/defgraph.hpp"
#include "meritrank/polarity.hpp"

namespace meritrank {

struct Config {
  std::filesystem::path lexicon_path;
  std::filesystem::path stopword_path;
  std::size_t depth = 3;
  double tfidf_threshold = 0.02;
  std::size_t shingle_n = 2;
  std::size_t window_n = 5;
  RelatednessMode relatedness_mode = RelatednessMode::quadratic;
  PolarityMethod polarity_method = PolarityMethod::lexicon;
  double interview_threshold = 20.0;  // percent, topic link detection
  double edit_threshold = 60.0;       // percent, topic link detection
  double reference_threshold = 1.0;   // raw interview induction sum
  std::size_t questions_k = 30;
  AvgDivisor avg_divisor = AvgDivisor::targets;
  NegativeEdgePolicy neg_edges = NegativeEdgePolicy::clamp;
  double summary_ratio = 0.125;
  double admit_threshold = 0.25;
  double weight_merit = 0.2;
  double weight_interview = 0.5;
  double weight_value = 0.3;

  void validate() const;  // throws ConfigError
};

/// key=value lines, '#' comments; unknown keys are rejected.
Config load_config(const std::filesystem::path& path);

/// Applies one key=value override (same keys as the file). Throws
/// ConfigError on unknown key or bad value.
void apply_setting(Config& config, std::string_view key, std::string_view value);

}  // namespace meritrank

#endif
