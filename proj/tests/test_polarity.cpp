#include <cmath>

#include "doctest.h"
#include "meritrank/polarity.hpp"
#include "support.hpp"

using namespace meritrank;
using testsupport::build_lexicon;
using testsupport::corpus_of;
using testsupport::doc_from_tokens;

namespace {

Lexicon sentiment_lexicon() {
  return build_lexicon({
      {"movie", {"picture", "used", "cinema"}},
      {"fantastic", {"extremely", "good"}, 0.75, 0.0},
      {"graphics", {"technique", "used", "software"}},
      {"awesome", {"good", "great"}, 0.875, 0.0},
      {"good", {"desirable", "qualities"}, 0.75, 0.0},
      {"used", {"employed", "purpose"}, 0.625, 0.0},
      {"bad", {"lacking", "quality"}, 0.0, 0.75},
      {"terrible", {"causing", "fear"}, 0.0, 0.875},
      {"plain", {"simple"}},
  });
}

}  // namespace

TEST_CASE("lexicon polarity") {
  auto lex = sentiment_lexicon();

  CHECK(lexicon_polarity({}, lex).sign == PolaritySign::neutral);

  std::vector<std::string> happy{"fantastic", "awesome"};
  auto verdict = lexicon_polarity(happy, lex);
  CHECK(verdict.sign == PolaritySign::positive);
  CHECK(verdict.positive_count == 2);
  CHECK(verdict.negative_count == 0);

  std::vector<std::string> tied{"fantastic", "awesome", "bad", "terrible"};
  CHECK(lexicon_polarity(tied, lex).sign == PolaritySign::neutral);

  // tokens without sentiment carry no vote
  std::vector<std::string> padded{"plain", "plain", "bad"};
  CHECK(lexicon_polarity(padded, lex).sign == PolaritySign::negative);

  // majority is invariant under duplication of the sequence
  std::vector<std::string> doubled{"fantastic", "awesome", "bad",
                                   "fantastic", "awesome", "bad"};
  std::vector<std::string> single{"fantastic", "awesome", "bad"};
  CHECK(lexicon_polarity(doubled, lex).sign == lexicon_polarity(single, lex).sign);
}

TEST_CASE("entropy polarity") {
  auto lex = sentiment_lexicon();

  auto empty = entropy_polarity({}, lex);
  CHECK(empty.sign == PolaritySign::neutral);
  REQUIRE(empty.entropy_bits.has_value());
  CHECK(*empty.entropy_bits == 0.0);

  std::vector<std::string> clear{"fantastic", "awesome", "good"};
  auto all_positive = entropy_polarity(clear, lex);
  CHECK(all_positive.sign == PolaritySign::positive);
  CHECK(*all_positive.entropy_bits == doctest::Approx(0.0));

  std::vector<std::string> split{"fantastic", "bad"};
  auto half = entropy_polarity(split, lex);
  CHECK(half.sign == PolaritySign::neutral);
  CHECK(*half.entropy_bits == doctest::Approx(1.0));

  std::vector<std::string> skewed{"fantastic", "awesome", "good", "bad"};
  auto three_one = entropy_polarity(skewed, lex);
  CHECK(three_one.sign == PolaritySign::positive);
  CHECK(*three_one.entropy_bits ==
        doctest::Approx(-0.75 * std::log2(0.75) - 0.25 * std::log2(0.25)));
  CHECK(*three_one.entropy_bits == doctest::Approx(0.8113).epsilon(1e-4));

  // symmetric under swapping the positive/negative counts
  std::vector<std::string> flipped{"bad", "terrible", "plain", "fantastic"};
  std::vector<std::string> original{"fantastic", "awesome", "plain", "bad"};
  CHECK(*entropy_polarity(flipped, lex).entropy_bits ==
        doctest::Approx(*entropy_polarity(original, lex).entropy_bits));

  // bounded in [0,1]
  CHECK(*three_one.entropy_bits >= 0.0);
  CHECK(*three_one.entropy_bits <= 1.0);
}

TEST_CASE("gloss overlap polarity") {
  auto lex = sentiment_lexicon();

  auto sentiment_doc =
      doc_from_tokens("s", {"movie", "fantastic", "graphics", "awesome"});
  auto corpus = corpus_of({sentiment_doc, doc_from_tokens("other", {"car", "sky"})});

  auto verdict = gloss_overlap_polarity(sentiment_doc, corpus, lex, 3);
  CHECK(verdict.sign == PolaritySign::positive);
  CHECK(verdict.positive_count == 2);  // good, used
  CHECK(verdict.negative_count == 0);
  CHECK(!verdict.entropy_bits.has_value());

  // no multi-parent vertices -> neutral
  auto lonely = doc_from_tokens("l", {"movie"});
  auto lonely_corpus = corpus_of({lonely, doc_from_tokens("o", {"car"})});
  CHECK(gloss_overlap_polarity(lonely, lonely_corpus, lex, 3).sign ==
        PolaritySign::neutral);

  // constructed tie: one positive and one negative shared vertex
  auto tie_lex = build_lexicon({
      {"up", {"good", "down_word"}},
      {"rise", {"good", "down_word"}},
      {"good", {"fine"}, 0.75, 0.0},
      {"down_word", {"poor"}, 0.0, 0.75},
  });
  auto tie_doc = doc_from_tokens("t", {"up", "rise"});
  auto tie_corpus = corpus_of({tie_doc, doc_from_tokens("o", {"car"})});
  CHECK(gloss_overlap_polarity(tie_doc, tie_corpus, tie_lex, 1).sign ==
        PolaritySign::neutral);
}

TEST_CASE("method selection and the majority-of-methods combiner") {
  auto lex = sentiment_lexicon();
  auto doc = doc_from_tokens("d", {"movie", "fantastic", "graphics", "awesome"});
  auto corpus = corpus_of({doc, doc_from_tokens("o", {"car", "sky"})});

  CHECK(classify_polarity(PolarityMethod::lexicon, doc, corpus, lex, 3).method ==
        PolarityMethod::lexicon);
  CHECK(classify_polarity(PolarityMethod::entropy, doc, corpus, lex, 3).method ==
        PolarityMethod::entropy);
  CHECK(classify_polarity(PolarityMethod::gloss_overlap, doc, corpus, lex, 3).method ==
        PolarityMethod::gloss_overlap);
  CHECK(combined_polarity(doc, corpus, lex, 3) == PolaritySign::positive);

  CHECK(parse_polarity_method("lexicon") == PolarityMethod::lexicon);
  CHECK(parse_polarity_method("entropy") == PolarityMethod::entropy);
  CHECK(parse_polarity_method("gloss") == PolarityMethod::gloss_overlap);
  CHECK(!parse_polarity_method("vibes").has_value());
}
