#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "quicksum/defaults.hpp"
#include "quicksum/error.hpp"
#include "quicksum/morphology.hpp"

using namespace quicksum;

namespace {

const MorphRuleSet& default_rules() {
  static const MorphRuleSet rules = load_rules(defaults::kDefaultRules);
  return rules;
}

const Lexicon& seed_lexicon() {
  static const Lexicon lex = load_mmml(defaults::kDefaultLexicon);
  return lex;
}

Lexicon lexicon_of(std::initializer_list<std::string> headwords) {
  std::vector<WordEntry> entries;
  for (const auto& w : headwords) entries.push_back({w, w, "English", w, "", ""});
  return Lexicon(std::move(entries));
}

}  // namespace

TEST(LoadRules, PrefixLine) {
  const auto rules = load_rules("prefix un 3");
  ASSERT_EQ(rules.prefixes.size(), 1u);
  EXPECT_TRUE(rules.suffixes.empty());
  EXPECT_EQ(rules.prefixes[0], (MorphRule{AffixKind::prefix, "un", 3, std::nullopt}));
  EXPECT_EQ(rules.max_strip_per_side, 2u);
}

TEST(LoadRules, SuffixWithRestore) {
  const auto rules = load_rules("suffix ing 3 e");
  ASSERT_EQ(rules.suffixes.size(), 1u);
  EXPECT_EQ(rules.suffixes[0], (MorphRule{AffixKind::suffix, "ing", 3, std::string("e")}));
}

TEST(LoadRules, UnknownKeywordReportsLine) {
  try {
    load_rules("sufix ing");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
}

TEST(LoadRules, MalformedLinesCarryTheirLineNumber) {
  const std::vector<std::pair<std::string, std::size_t>> cases = {
      {"# header\n\nprefix un\n", 3},
      {"prefix un 3\nsuffix ing zero\n", 2},
      {"prefix un 0\n", 1},
      {"prefix UN 3\n", 1},
      {"suffix s 3\nsuffix s 3 # again\n", 2},
      {"suffix ing 3 e extra\n", 1},
  };
  for (const auto& [text, line] : cases) {
    try {
      load_rules(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << text;
    }
  }
}

TEST(LoadRules, CommentsBlankLinesAndOrdering) {
  const auto rules = load_rules(
      "# comment\n\n  suffix s 3  # trailing comment\nsuffix ness 3\nsuffix ing 3\n"
      "suffix ing 3 e\nprefix re 3\nprefix dis 3\n");
  ASSERT_EQ(rules.suffixes.size(), 4u);
  EXPECT_EQ(rules.suffixes[0].affix, "ness");
  EXPECT_EQ(rules.suffixes[1].affix, "ing");
  EXPECT_FALSE(rules.suffixes[1].restore.has_value());
  EXPECT_EQ(rules.suffixes[2].restore, std::string("e"));
  EXPECT_EQ(rules.suffixes[3].affix, "s");
  EXPECT_EQ(rules.prefixes[0].affix, "dis");
}

TEST(LoadRules, SameAffixDifferentRestoreIsNotADuplicate) {
  EXPECT_NO_THROW(load_rules("suffix ed 3\nsuffix ed 3 e\n"));
}

TEST(Analyze, Unbuttoning) {
  const auto a = analyze("unbuttoning", default_rules(), seed_lexicon());
  EXPECT_EQ(a.prefixes, (std::vector<std::string>{"un"}));
  EXPECT_EQ(a.root, "button");
  EXPECT_EQ(a.suffixes, (std::vector<std::string>{"ing"}));
  EXPECT_EQ(a.root_key, "button");
}

TEST(Analyze, ShortWordUntouched) {
  const auto a = analyze("cat", default_rules(), seed_lexicon());
  EXPECT_EQ(a.root, "cat");
  EXPECT_TRUE(a.prefixes.empty());
  EXPECT_TRUE(a.suffixes.empty());
}

TEST(Analyze, RestoreOnlyRule) {
  const auto rules = load_rules("suffix ing 3 e");
  EXPECT_EQ(analyze("making", rules, Lexicon{}).root, "make");
}

// Hand-built table: twelve silent-e verbs and eight that keep their stem.
TEST(Analyze, IngVerbTable) {
  const std::vector<std::pair<std::string, std::string>> table = {
      {"making", "make"},   {"taking", "take"},     {"writing", "write"}, {"baking", "bake"},
      {"hoping", "hope"},   {"riding", "ride"},     {"coding", "code"},   {"shining", "shine"},
      {"ruling", "rule"},   {"timing", "time"},     {"voting", "vote"},   {"saving", "save"},
      {"walking", "walk"},  {"reading", "read"},    {"jumping", "jump"},  {"opening", "open"},
      {"visiting", "visit"}, {"sending", "send"},   {"fixing", "fix"},    {"showing", "show"},
  };
  for (const auto& [word, root] : table) {
    const auto a = analyze(word, default_rules(), Lexicon{});
    EXPECT_EQ(a.root, root) << word;
    EXPECT_EQ(a.suffixes, (std::vector<std::string>{"ing"})) << word;
  }
}

TEST(Analyze, HeadwordsAreNeverSplit) {
  for (const auto& [headword, _] : seed_lexicon().entries()) {
    const auto a = analyze(headword, default_rules(), seed_lexicon());
    EXPECT_EQ(a.root, headword);
    EXPECT_TRUE(a.prefixes.empty() && a.suffixes.empty()) << headword;
  }
  const auto lex = lexicon_of({"undoing", "reads"});
  EXPECT_EQ(analyze("undoing", default_rules(), lex).root, "undoing");
  EXPECT_EQ(analyze("reads", default_rules(), lex).root, "reads");
}

TEST(Analyze, StopsAsSoonAsStemIsAHeadword) {
  const auto rules = default_rules();
  const auto unbutton = analyze("unbuttoning", rules, lexicon_of({"unbutton"}));
  EXPECT_EQ(unbutton.root, "unbutton");
  EXPECT_TRUE(unbutton.prefixes.empty());

  const auto daisies = analyze("daisies", rules, seed_lexicon());
  EXPECT_EQ(daisies.root, "daisy");
  EXPECT_EQ(daisies.suffixes, (std::vector<std::string>{"ies"}));

  const auto rabbits = analyze("rabbits", rules, seed_lexicon());
  EXPECT_EQ(rabbits.root, "rabbit");
  EXPECT_EQ(rabbits.suffixes, (std::vector<std::string>{"s"}));
}

TEST(Analyze, HeadwordPicksBetweenRestoreVariants) {
  // Without a lexicon "coded" restores; with "cod" as a headword the plain variant wins.
  EXPECT_EQ(analyze("coded", default_rules(), Lexicon{}).root, "code");
  EXPECT_EQ(analyze("coded", default_rules(), lexicon_of({"cod"})).root, "cod");
}

TEST(Analyze, TwoSuffixesListedInSurfaceOrder) {
  const auto a = analyze("happenings", default_rules(), Lexicon{});
  EXPECT_EQ(a.root, "happen");
  EXPECT_EQ(a.suffixes, (std::vector<std::string>{"ing", "s"}));
}

TEST(Analyze, StripCountIsBounded) {
  auto rules = load_rules("suffix s 1\n");
  const auto a = analyze("abcsss", rules, Lexicon{});
  EXPECT_EQ(a.root, "abcs");
  rules.max_strip_per_side = 3;
  EXPECT_EQ(analyze("abcsss", rules, Lexicon{}).root, "abc");
}

TEST(Analyze, RespectsRuleMinimumStem) {
  const auto rules = load_rules("suffix ly 5\n");
  EXPECT_EQ(analyze("badly", rules, Lexicon{}).root, "badly");
  EXPECT_EQ(analyze("quickly", rules, Lexicon{}).root, "quick");
}

TEST(Analyze, NeverLeavesAStemBelowThree) {
  const auto rules = load_rules("suffix ing 1\nsuffix s 1\nprefix un 1\nprefix re 1\n");
  for (const std::string w : {"sing", "being", "ring", "unit", "redo", "uses", "undo", "resing"}) {
    const auto a = analyze(w, rules, Lexicon{});
    if (!a.prefixes.empty() || !a.suffixes.empty()) {
      EXPECT_GE(a.root.size(), kMinStemLength) << w;
    } else {
      EXPECT_EQ(a.root, w);
    }
  }
}

// Without restore strings, prefixes + root + suffixes spells the surface.
TEST(Analyze, ReconstructionProperty) {
  const std::vector<std::string> prefixes = {"un", "re", "dis", "pre", "non", "anti", "over"};
  const std::vector<std::string> suffixes = {"ing", "ed", "ly", "ness", "ment", "s", "es", "ful"};
  const std::vector<std::string> stems = {"walk", "port", "form", "kind", "hope", "ab", "xyzzy",
                                          "ment", "pre", "button", "ssss", "tion", "do"};
  std::mt19937 rng(1234);
  for (int round = 0; round < 50; ++round) {
    std::string rules_text;
    for (const auto& p : prefixes)
      if (rng() % 2) rules_text += "prefix " + p + " " + std::to_string(1 + rng() % 4) + "\n";
    for (const auto& s : suffixes)
      if (rng() % 2) rules_text += "suffix " + s + " " + std::to_string(1 + rng() % 4) + "\n";
    auto rules = load_rules(rules_text);
    rules.max_strip_per_side = 1 + rng() % 3;
    for (int w = 0; w < 40; ++w) {
      std::string word;
      for (std::size_t n = rng() % 3; n > 0; --n) word += prefixes[rng() % prefixes.size()];
      word += stems[rng() % stems.size()];
      for (std::size_t n = rng() % 3; n > 0; --n) word += suffixes[rng() % suffixes.size()];
      const auto a = analyze(word, rules, Lexicon{});
      std::string rebuilt;
      for (const auto& p : a.prefixes) rebuilt += p;
      rebuilt += a.root;
      for (const auto& s : a.suffixes) rebuilt += s;
      ASSERT_EQ(rebuilt, word) << rules_text;
      ASSERT_LE(a.prefixes.size(), rules.max_strip_per_side);
      ASSERT_LE(a.suffixes.size(), rules.max_strip_per_side);
      if (!a.prefixes.empty() || !a.suffixes.empty()) {
        ASSERT_GE(a.root.size(), kMinStemLength);
      }
    }
  }
}

TEST(RootKey, HeadwordIsCanonical) {
  const auto a = analyze("daisy", default_rules(), seed_lexicon());
  EXPECT_EQ(root_key(a, seed_lexicon()), "daisy");
}

TEST(RootKey, ConfiguredAliasIsFollowed) {
  const auto lex = seed_lexicon().with_alias("gaol", "jail");
  const auto a = analyze("gaol", default_rules(), lex);
  EXPECT_EQ(root_key(a, lex), "jail");
  EXPECT_EQ(a.root_key, "jail");
  // Inflected variants reach the alias through their root.
  EXPECT_EQ(analyze("gaols", default_rules(), lex).root_key, "jail");
}

TEST(RootKey, AliasFromMmmlIdAttribute) {
  const auto lex = load_mmml(
      "<wordlist><word id=\"gaol\"><word>jail</word><origin>French</origin>"
      "<source>jaiole</source></word></wordlist>");
  EXPECT_EQ(analyze("gaol", default_rules(), lex).root_key, "jail");
  EXPECT_EQ(analyze("jail", default_rules(), lex).root_key, "jail");
}

TEST(RootKey, UnknownWordIsIdentity) {
  const auto a = analyze("zzzq", default_rules(), seed_lexicon());
  EXPECT_EQ(root_key(a, seed_lexicon()), "zzzq");
}

TEST(RootKey, ResultIsLowercase) {
  const auto lex = lexicon_of({"Nicodemus"});
  const auto a = analyze("nicodemus", default_rules(), lex);
  EXPECT_EQ(a.root, "nicodemus");
  EXPECT_EQ(a.root_key, "nicodemus");
}
