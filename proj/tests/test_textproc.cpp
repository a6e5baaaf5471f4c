#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "meritrank/errors.hpp"
#include "meritrank/textproc.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace meritrank;
using testsupport::corpus_of;
using testsupport::doc_from_tokens;

TEST_CASE("tokenize") {
  std::unordered_set<std::string> stop{"and", "on"};
  CHECK(tokenize("", stop).empty());
  CHECK(tokenize("Cars and buses ply on road", stop) ==
        std::vector<std::string>{"cars", "buses", "ply", "road"});
  CHECK(tokenize("K5,K3,3-free graph", {}) ==
        std::vector<std::string>{"k5", "k3", "3", "free", "graph"});
  CHECK(tokenize("  \t\n ", stop).empty());
}

TEST_CASE("tf_idf") {
  auto doc_a = doc_from_tokens("a", {"a", "a", "b"});
  auto doc_b = doc_from_tokens("b", {"x"});
  auto doc_c = doc_from_tokens("c", {"y"});
  auto corpus = corpus_of({doc_a, doc_b, doc_c});

  CHECK(tf_idf("zzz", doc_a, corpus) == 0.0);  // absent term

  // single-document corpus: ubiquitous term scores zero
  auto solo = corpus_of({doc_from_tokens("solo", {"only"})});
  CHECK(tf_idf("only", solo.documents[0], solo) == doctest::Approx(0.0));

  // df(a)=1, N=3: (2/3) * ln(4/2)
  CHECK(tf_idf("a", doc_a, corpus) ==
        doctest::Approx((2.0 / 3.0) * std::log(2.0)).epsilon(1e-12));

  // empty document scores zero for any term
  auto empty = doc_from_tokens("e", {});
  CHECK(tf_idf("a", empty, corpus) == 0.0);
}

TEST_CASE("extract_keywords") {
  auto doc = doc_from_tokens("d", {"rare", "rare", "common"});
  auto other = doc_from_tokens("o", {"common", "filler"});
  auto corpus = corpus_of({doc, other});

  CHECK(extract_keywords(doc, corpus, 1e9).empty());  // threshold above everything
  CHECK(!extract_keywords(doc, corpus, 0.0).empty());

  // matches the independent oracle at the default threshold
  CHECK(extract_keywords(doc, corpus, 0.02) == oracles::keywords_above(doc, corpus, 0.02));

  // monotone non-increasing in the threshold
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::string> toks;
    for (int i = 0; i < 12; ++i) toks.push_back("t" + std::to_string(rng() % 6));
    auto d = doc_from_tokens("r", toks);
    auto c = corpus_of({d, doc_from_tokens("r2", {"t0", "t9"})});
    double t1 = (rng() % 100) / 500.0;
    double t2 = t1 + (rng() % 100) / 500.0;
    auto k1 = extract_keywords(d, c, t1);
    auto k2 = extract_keywords(d, c, t2);
    for (const auto& kw : k2) CHECK(k1.contains(kw));
  }
}

TEST_CASE("shingles") {
  std::vector<std::string> abc{"a", "b", "c"};
  auto s = shingles(abc, 2);
  CHECK(s.shingles == std::set<std::vector<std::string>>{{"a", "b"}, {"b", "c"}});

  std::vector<std::string> a{"a"};
  CHECK(shingles(a, 2).shingles.empty());

  std::vector<std::string> abab{"a", "b", "a", "b"};
  CHECK(shingles(abab, 2).shingles ==
        std::set<std::vector<std::string>>{{"a", "b"}, {"b", "a"}});

  // |shingles(s,n)| <= max(0, len - n + 1)
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::string> toks;
    std::size_t len = rng() % 10;
    for (std::size_t i = 0; i < len; ++i) toks.push_back(std::string(1, 'a' + rng() % 3));
    std::size_t n = 1 + rng() % 4;
    std::size_t bound = len + 1 > n ? len - n + 1 : 0;
    CHECK(shingles(toks, n).shingles.size() <= bound);
  }
}

TEST_CASE("jaccard") {
  std::vector<std::string> ab_bc{"a", "b", "c"};
  std::vector<std::string> bc_cd{"b", "c", "d"};
  auto s1 = shingles(ab_bc, 2);
  auto s2 = shingles(bc_cd, 2);
  CHECK(jaccard(s1, s1) == 1.0);
  CHECK(jaccard(s1, s2) == doctest::Approx(1.0 / 3.0));

  std::vector<std::string> xy{"x", "y"};
  CHECK(jaccard(s1, shingles(xy, 2)) == 0.0);

  ShingleSet empty_a{2, {}}, empty_b{2, {}};
  CHECK(jaccard(empty_a, empty_b) == 0.0);

  ShingleSet unigram{1, {}};
  CHECK_THROWS_AS(jaccard(s1, unigram), std::invalid_argument);

  // symmetric and bounded on random sets
  std::mt19937 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::string> t1, t2;
    for (int i = 0; i < 8; ++i) {
      t1.push_back(std::string(1, 'a' + rng() % 4));
      t2.push_back(std::string(1, 'a' + rng() % 4));
    }
    auto a = shingles(t1, 2);
    auto b = shingles(t2, 2);
    double ab = jaccard(a, b);
    CHECK(ab == jaccard(b, a));
    CHECK(ab >= 0.0);
    CHECK(ab <= 1.0);
  }
}

TEST_CASE("sentence splitting and scoring") {
  std::unordered_set<std::string> stop{"the", "a", "is"};
  auto doc = make_document(
      "d", "The graph is sparse. Is a tree a graph? Heading line\n\nNext paragraph",
      stop);
  REQUIRE(doc.sentences.size() == 4);
  CHECK(doc.sentence_text[0] == "The graph is sparse.");
  CHECK(doc.sentence_text[2] == "Heading line");
  CHECK(doc.tokens[doc.sentences[0].begin] == "graph");

  auto corpus = corpus_of({doc, doc_from_tokens("other", {"tree"})});
  auto scored = score_sentences(doc, corpus);
  REQUIRE(scored.size() == doc.sentences.size());
  for (std::size_t i = 0; i < scored.size(); ++i) {
    double expected = 0.0;
    for (std::size_t t = scored[i].first.begin; t < scored[i].first.end; ++t)
      expected += oracles::tf_idf(doc.tokens[t], doc, corpus);
    CHECK(scored[i].second == doctest::Approx(expected).epsilon(1e-12));
  }

  // a sentence whose tokens are all stopwords scores zero
  auto stopdoc = make_document("s", "The. graph here.", {"the", "here"});
  auto stopscores = score_sentences(stopdoc, corpus_of({stopdoc}));
  REQUIRE(stopscores.size() == 2);
  CHECK(stopscores[0].second == 0.0);  // empty span
}

TEST_CASE("corpus loading with sidecar metadata") {
  auto dir = std::filesystem::temp_directory_path() / "corpus_fixture";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "one.txt") << "Alpha beta gamma.";
    std::ofstream(dir / "two.txt") << "Beta delta.";
    std::ofstream(dir / "meta.tsv") << "one.txt\t100\tgreek\n"
                                    << "two.txt\t\tgreek\n";
  }
  auto corpus = load_corpus(dir, {});
  REQUIRE(corpus.documents.size() == 2);
  CHECK(corpus.documents[0].doc_id == "one.txt");
  CHECK(corpus.documents[0].timestamp == 100);
  CHECK(corpus.documents[0].topic_label == "greek");
  CHECK(!corpus.documents[1].timestamp.has_value());
  CHECK(corpus.df_table.at("beta") == 2);
  CHECK(corpus.df_table.at("delta") == 1);
  CHECK(corpus.find("two.txt") != nullptr);
  CHECK(corpus.find("three.txt") == nullptr);
  CHECK_THROWS_AS(load_corpus(dir / "missing", {}), IoError);
}
