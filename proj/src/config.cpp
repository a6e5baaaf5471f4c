#include "meritrank/config.hpp"

#include <fstream>
#include <sstream>

#include "meritrank/errors.hpp"

namespace meritrank {

namespace {

double parse_real(std::string_view key, std::string_view value) {
  try {
    std::size_t used = 0;
    std::string text(value);
    double parsed = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return parsed;
  } catch (const std::exception&) {
    throw ConfigError("bad value for " + std::string(key) + ": '" +
                      std::string(value) + "'");
  }
}

std::size_t parse_count(std::string_view key, std::string_view value) {
  try {
    std::size_t used = 0;
    std::string text(value);
    long long parsed = std::stoll(text, &used);
    if (used != text.size() || parsed < 0) throw std::invalid_argument("negative");
    return static_cast<std::size_t>(parsed);
  } catch (const std::exception&) {
    throw ConfigError("bad value for " + std::string(key) + ": '" +
                      std::string(value) + "'");
  }
}

std::string trimmed(std::string_view text) {
  std::size_t b = text.find_first_not_of(" \t");
  std::size_t e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos) return {};
  return std::string(text.substr(b, e - b + 1));
}

}  // namespace

void Config::validate() const {
  if (depth < 1) throw ConfigError("depth must be >= 1");
  if (tfidf_threshold < 0) throw ConfigError("tfidf_threshold must be >= 0");
  if (shingle_n < 1) throw ConfigError("shingle_n must be >= 1");
  if (questions_k < 1) throw ConfigError("questions_k must be >= 1");
  if (interview_threshold < 0 || interview_threshold > 100)
    throw ConfigError("interview_threshold must be in [0,100]");
  if (edit_threshold < 0 || edit_threshold > 100)
    throw ConfigError("edit_threshold must be in [0,100]");
  if (reference_threshold < 0) throw ConfigError("reference_threshold must be >= 0");
  if (summary_ratio <= 0 || summary_ratio > 1)
    throw ConfigError("summary_ratio must be in (0,1]");
  if (admit_threshold < 0) throw ConfigError("admit_threshold must be >= 0");
  if (weight_merit < 0 || weight_interview < 0 || weight_value < 0)
    throw ConfigError("weights must be >= 0");
  if (weight_merit + weight_interview + weight_value <= 0)
    throw ConfigError("weights must not all be zero");
}

void apply_setting(Config& config, std::string_view key, std::string_view value) {
  std::string k = trimmed(key);
  std::string v = trimmed(value);
  if (k == "lexicon_path") {
    config.lexicon_path = v;
  } else if (k == "stopword_path") {
    config.stopword_path = v;
  } else if (k == "depth") {
    config.depth = parse_count(k, v);
  } else if (k == "tfidf_threshold") {
    config.tfidf_threshold = parse_real(k, v);
  } else if (k == "shingle_n") {
    config.shingle_n = parse_count(k, v);
  } else if (k == "window_n") {
    config.window_n = parse_count(k, v);
  } else if (k == "relatedness_mode") {
    if (v == "linear")
      config.relatedness_mode = RelatednessMode::linear;
    else if (v == "quadratic")
      config.relatedness_mode = RelatednessMode::quadratic;
    else
      throw ConfigError("relatedness_mode must be linear or quadratic");
  } else if (k == "polarity_method") {
    auto method = parse_polarity_method(v);
    if (!method) throw ConfigError("polarity_method must be lexicon, entropy or gloss");
    config.polarity_method = *method;
  } else if (k == "interview_threshold") {
    config.interview_threshold = parse_real(k, v);
  } else if (k == "edit_threshold") {
    config.edit_threshold = parse_real(k, v);
  } else if (k == "reference_threshold") {
    config.reference_threshold = parse_real(k, v);
  } else if (k == "questions_k") {
    config.questions_k = parse_count(k, v);
  } else if (k == "avg_divisor") {
    auto divisor = parse_avg_divisor(v);
    if (!divisor) throw ConfigError("avg_divisor must be targets or vertices");
    config.avg_divisor = *divisor;
  } else if (k == "neg_edges") {
    auto policy = parse_negative_edge_policy(v);
    if (!policy) throw ConfigError("neg_edges must be clamp, abs or drop");
    config.neg_edges = *policy;
  } else if (k == "summary_ratio") {
    config.summary_ratio = parse_real(k, v);
  } else if (k == "admit_threshold") {
    config.admit_threshold = parse_real(k, v);
  } else if (k == "weight_merit") {
    config.weight_merit = parse_real(k, v);
  } else if (k == "weight_interview") {
    config.weight_interview = parse_real(k, v);
  } else if (k == "weight_value") {
    config.weight_value = parse_real(k, v);
  } else {
    throw ConfigError("unknown config key: '" + k + "'");
  }
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config: " + path.string());
  Config config;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trimmed(line).empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                        ": expected key=value");
    apply_setting(config, line.substr(0, eq), line.substr(eq + 1));
  }
  config.validate();
  return config;
}

}  // namespace meritrank
