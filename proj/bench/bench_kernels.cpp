// Serial reference vs OpenMP kernels on synthetic workloads. Checks that
// both paths agree, then reports wall time per kernel.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "meritrank/apps.hpp"
#include "meritrank/citeflow.hpp"
#include "meritrank/defgraph.hpp"

using namespace meritrank;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Lexicon synthetic_lexicon(std::mt19937& rng, std::size_t lemmas) {
  Lexicon lex;
  for (std::size_t i = 0; i < lemmas; ++i) {
    SenseEntry entry;
    entry.lemma = "w" + std::to_string(i);
    entry.sense_id = "s" + std::to_string(i);
    for (int g = 0; g < 6; ++g) {
      if (rng() % 3 == 0)
        entry.gloss_tokens.push_back("hub" + std::to_string(rng() % 40));
      else
        entry.gloss_tokens.push_back("w" + std::to_string(rng() % lemmas));
    }
    lex.add(std::move(entry));
  }
  return lex;
}

Document synthetic_document(std::mt19937& rng, std::size_t lemmas, std::size_t tokens) {
  Document doc;
  doc.doc_id = "bench";
  for (std::size_t i = 0; i < tokens; ++i)
    doc.tokens.push_back("w" + std::to_string(rng() % lemmas));
  doc.sentences.push_back({0, doc.tokens.size()});
  doc.sentence_text.push_back("bench");
  return doc;
}

CitationGraph synthetic_citations(std::mt19937& rng, std::size_t n) {
  CitationGraph g;
  for (std::size_t i = 0; i < n; ++i) g.vertices.push_back("d" + std::to_string(i));
  g.timestamps.assign(n, std::nullopt);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && rng() % 3 == 0)
        g.edges[{u, v}] = 1 + static_cast<std::int64_t>(rng() % 4);
  return g;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
  std::printf("openmp: not enabled (parallel path runs serially)\n");
#endif
  std::mt19937 rng(20250101);

  {
    auto lex = synthetic_lexicon(rng, 4000);
    auto doc = synthetic_document(rng, 4000, 3000);
    Corpus corpus;
    corpus.documents.push_back(doc);
    Document other;
    other.doc_id = "other";
    other.tokens = {"filler"};
    corpus.documents.push_back(other);
    corpus.rebuild_df();

    auto t0 = Clock::now();
    auto serial = build_definition_graph(doc, corpus, lex, 4, 0.0, Execution::serial);
    double ts = seconds_since(t0);
    auto t1 = Clock::now();
    auto parallel = build_definition_graph(doc, corpus, lex, 4, 0.0, Execution::parallel);
    double tp = seconds_since(t1);
    bool same = serial.vertices == parallel.vertices && serial.edges == parallel.edges;
    std::printf("definition graph   serial %.3fs  parallel %.3fs  speedup %.2fx  %s "
                "(V=%zu E=%zu)\n",
                ts, tp, ts / tp, same ? "identical" : "MISMATCH",
                serial.vertex_count(), serial.edge_count());
  }

  {
    auto g = synthetic_citations(rng, 56);
    auto t0 = Clock::now();
    auto serial = rank_by_maxflow(g, AvgDivisor::targets, NegativeEdgePolicy::clamp,
                                  Execution::serial);
    double ts = seconds_since(t0);
    auto t1 = Clock::now();
    auto parallel = rank_by_maxflow(g, AvgDivisor::targets, NegativeEdgePolicy::clamp,
                                    Execution::parallel);
    double tp = seconds_since(t1);
    bool same = serial.order == parallel.order && serial.per_source == parallel.per_source;
    std::printf("all-pairs maxflow  serial %.3fs  parallel %.3fs  speedup %.2fx  %s "
                "(%zu vertices)\n",
                ts, tp, ts / tp, same ? "identical" : "MISMATCH", g.vertices.size());
  }

  {
    Config config;
    config.tfidf_threshold = 0.0;
    auto lex = synthetic_lexicon(rng, 1500);
    std::vector<Document> stories;
    for (int i = 0; i < 24; ++i) {
      auto doc = synthetic_document(rng, 1500, 400);
      doc.doc_id = "story" + std::to_string(i);
      stories.push_back(std::move(doc));
    }
    Corpus corpus;
    corpus.documents = stories;
    corpus.rebuild_df();

    auto t0 = Clock::now();
    auto serial = topic_outlier(stories, corpus, lex, config, Execution::serial);
    double ts = seconds_since(t0);
    auto t1 = Clock::now();
    auto parallel = topic_outlier(stories, corpus, lex, config, Execution::parallel);
    double tp = seconds_since(t1);
    std::printf("pairwise GED       serial %.3fs  parallel %.3fs  speedup %.2fx  %s "
                "(outlier %s)\n",
                ts, tp, ts / tp, serial == parallel ? "identical" : "MISMATCH",
                serial.first.c_str());
  }
  return 0;
}
