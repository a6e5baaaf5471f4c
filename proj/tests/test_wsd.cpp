#include <random>

#include "doctest.h"
#include "meritrank/wsd.hpp"
#include "support.hpp"

using namespace meritrank;
using testsupport::build_lexicon;

TEST_CASE("lesk disambiguation") {
  auto lex = build_lexicon({{"graph", {"set", "vertices", "edges"}},
                            {"graph", {"chart", "drawing"}},
                            {"car", {"automobile", "used", "surface", "transport"}}});

  SUBCASE("absent lemma") {
    CHECK(!lesk_disambiguate("zzz", {"vertices"}, lex).has_value());
  }

  SUBCASE("single sense, empty context: forced choice with zero overlap") {
    auto choice = lesk_disambiguate("car", {}, lex);
    REQUIRE(choice.has_value());
    CHECK(choice->overlap_count == 0);
    CHECK(choice->chosen.gloss_tokens[0] == "automobile");
  }

  SUBCASE("context picks the overlapping sense") {
    auto choice = lesk_disambiguate("graph", {"vertices", "planar"}, lex);
    REQUIRE(choice.has_value());
    CHECK(choice->overlap_count == 1);
    CHECK(choice->chosen.gloss_tokens ==
          std::vector<std::string>{"set", "vertices", "edges"});
  }

  SUBCASE("ties go to the first sense in file order") {
    auto choice = lesk_disambiguate("graph", {"unrelated"}, lex);
    REQUIRE(choice.has_value());
    CHECK(choice->overlap_count == 0);
    CHECK(choice->chosen.sense_id == lex.lookup("graph")[0].sense_id);
  }
}

TEST_CASE("overlap count is the maximum over senses, deterministically") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<testsupport::SenseSpec> specs;
    int senses = 1 + static_cast<int>(rng() % 4);
    for (int s = 0; s < senses; ++s) {
      std::vector<std::string> gloss;
      int len = 1 + static_cast<int>(rng() % 5);
      for (int i = 0; i < len; ++i) gloss.push_back("w" + std::to_string(rng() % 8));
      specs.push_back({"lemma", gloss});
    }
    auto lex = build_lexicon(specs);
    std::set<std::string> context;
    int ctx = static_cast<int>(rng() % 6);
    for (int i = 0; i < ctx; ++i) context.insert("w" + std::to_string(rng() % 8));

    auto choice = lesk_disambiguate("lemma", context, lex);
    REQUIRE(choice.has_value());

    std::size_t best = 0;  // brute force over the sense list
    for (const auto& sense : lex.lookup("lemma")) {
      std::set<std::string> gloss(sense.gloss_tokens.begin(), sense.gloss_tokens.end());
      std::size_t overlap = 0;
      for (const auto& token : gloss) overlap += context.count(token);
      best = std::max(best, overlap);
    }
    CHECK(choice->overlap_count == best);

    auto again = lesk_disambiguate("lemma", context, lex);
    REQUIRE(again.has_value());
    CHECK(again->chosen.sense_id == choice->chosen.sense_id);
  }
}
