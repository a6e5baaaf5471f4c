#ifndef MERITRANK_TESTS_SUPPORT_HPP
#define MERITRANK_TESTS_SUPPORT_HPP

#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "meritrank/defgraph.hpp"
#include "meritrank/lexicon.hpp"
#include "meritrank/textproc.hpp"

namespace testsupport {

inline std::filesystem::path data_dir() {
  if (const char* env = std::getenv("MERITRANK_DATA")) return env;
  return "data";
}

struct SenseSpec {
  std::string lemma;
  std::vector<std::string> gloss;
  double positivity = 0.0;
  double negativity = 0.0;
};

inline meritrank::Lexicon build_lexicon(const std::vector<SenseSpec>& specs) {
  meritrank::Lexicon lex;
  std::size_t counter = 0;
  for (const auto& spec : specs) {
    meritrank::SenseEntry entry;
    entry.lemma = spec.lemma;
    entry.sense_id = "s" + std::to_string(counter++);
    entry.gloss_tokens = spec.gloss;
    entry.positivity = spec.positivity;
    entry.negativity = spec.negativity;
    lex.add(std::move(entry));
  }
  return lex;
}

inline meritrank::Document doc_from_tokens(std::string id,
                                           std::vector<std::string> tokens) {
  meritrank::Document doc;
  doc.doc_id = std::move(id);
  doc.tokens = std::move(tokens);
  doc.sentences.push_back({0, doc.tokens.size()});
  std::string raw;
  for (const auto& token : doc.tokens) {
    if (!raw.empty()) raw += ' ';
    raw += token;
  }
  doc.sentence_text.push_back(raw);
  doc.raw_text = std::move(raw);
  return doc;
}

inline meritrank::Corpus corpus_of(std::vector<meritrank::Document> docs) {
  meritrank::Corpus corpus;
  corpus.documents = std::move(docs);
  corpus.rebuild_df();
  return corpus;
}

/// Random labeled graph over a small alphabet, for GED properties.
inline meritrank::DefinitionGraph random_labeled_graph(std::mt19937& rng) {
  static const std::vector<std::string> alphabet = {"a", "b", "c", "d", "e",
                                                    "f", "g", "h", "i", "j"};
  meritrank::DefinitionGraph graph;
  std::uniform_int_distribution<std::size_t> vcount(0, alphabet.size());
  std::vector<std::string> chosen;
  for (const auto& label : alphabet)
    if (std::uniform_int_distribution<int>(0, 1)(rng)) chosen.push_back(label);
  for (const auto& label : chosen) graph.vertices.emplace(label, 0);
  if (chosen.size() >= 2) {
    std::uniform_int_distribution<std::size_t> pick(0, chosen.size() - 1);
    std::size_t edges = std::uniform_int_distribution<std::size_t>(0, 12)(rng);
    for (std::size_t i = 0; i < edges; ++i) {
      auto u = pick(rng), v = pick(rng);
      if (u != v) graph.edges.emplace(chosen[u], chosen[v]);
    }
  }
  return graph;
}

}  // namespace testsupport

#endif
