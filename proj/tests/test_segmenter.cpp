#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "oracle.hpp"
#include "quicksum/segmenter.hpp"

using quicksum::ByteSpan;
using quicksum::parse_document;
using quicksum::segment_paragraphs;
using quicksum::segment_sentences;
using quicksum::tokenize;

namespace {

std::vector<std::string> slices(std::string_view text, const std::vector<ByteSpan>& spans) {
  std::vector<std::string> out;
  for (const auto& s : spans) out.emplace_back(quicksum::slice(text, s));
  return out;
}

std::vector<std::string> sentences_of(std::string_view paragraph) {
  return slices(paragraph, segment_sentences(paragraph));
}

}  // namespace

TEST(SegmentParagraphs, EmptyInput) { EXPECT_TRUE(segment_paragraphs("").empty()); }

TEST(SegmentParagraphs, BlankLineSplits) {
  const std::string text = "A.\n\nB.";
  EXPECT_EQ(slices(text, segment_paragraphs(text)), (std::vector<std::string>{"A.", "B."}));
}

TEST(SegmentParagraphs, SingleNewlineDoesNotSplit) {
  const std::string text = "A. B.\nC.";
  const auto spans = segment_paragraphs(text);
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(quicksum::slice(text, spans[0]), "A. B.\nC.");
}

TEST(SegmentParagraphs, WhitespaceOnlyLinesCountAsBlank) {
  const std::string text = "  one\n \t \ntwo\r\n\r\nthree  \n\n\n";
  EXPECT_EQ(slices(text, segment_paragraphs(text)),
            (std::vector<std::string>{"one", "two", "three"}));
}

TEST(SegmentParagraphs, MatchesRegexSplitterOnRandomDocuments) {
  oracle::DocumentGenerator gen(7);
  for (int i = 0; i < 300; ++i) {
    const std::string doc = gen.document(20);
    const auto spans = segment_paragraphs(doc);
    const auto expected = oracle::paragraphs(doc);
    ASSERT_EQ(spans.size(), expected.size()) << doc;
    for (std::size_t p = 0; p < spans.size(); ++p) {
      EXPECT_EQ(spans[p].begin, expected[p].first);
      EXPECT_EQ(spans[p].end, expected[p].second);
    }
  }
}

TEST(SegmentSentences, SingleSentence) {
  EXPECT_EQ(sentences_of("Hello."), (std::vector<std::string>{"Hello."}));
}

// Hand-segmented fixture corpus.
TEST(SegmentSentences, HandSegmentedCorpus) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> corpus = {
      {"Dr. Smith left. He ran.", {"Dr. Smith left.", "He ran."}},
      {"Wait! Why? Go.", {"Wait!", "Why?", "Go."}},
      {"Mrs. Jones met Mr. Lee at St. Mark's. They talked.",
       {"Mrs. Jones met Mr. Lee at St. Mark's.", "They talked."}},
      {"Bring pens, paper, etc. and come early.", {"Bring pens, paper, etc. and come early."}},
      {"Use a stemmer, e.g. Porter. It helps.", {"Use a stemmer, e.g. Porter.", "It helps."}},
      {"That is, i.e. the root. Fine.", {"That is, i.e. the root.", "Fine."}},
      {"Cats vs. dogs is old. Move on.", {"Cats vs. dogs is old.", "Move on."}},
      {"J. R. R. Tolkien wrote it. Read it.", {"J. R. R. Tolkien wrote it.", "Read it."}},
      {"Really?! Yes... I think so.", {"Really?!", "Yes...", "I think so."}},
      {"He said \"Stop.\" Then he left.", {"He said \"Stop.\"", "Then he left."}},
      {"It costs 3.50 dollars. Cheap.", {"It costs 3.50 dollars.", "Cheap."}},
      {"No terminator here", {"No terminator here"}},
      {"First one. trailing words", {"First one.", "trailing words"}},
      {"Line one.\nLine two.", {"Line one.", "Line two."}},
      {"  Padded sentence.   ", {"Padded sentence."}},
      {"(An aside.) Main point.", {"(An aside.)", "Main point."}},
      {"Visit example.com today. Done.", {"Visit example.com today.", "Done."}},
  };
  for (const auto& [paragraph, expected] : corpus)
    EXPECT_EQ(sentences_of(paragraph), expected) << paragraph;
}

TEST(SegmentSentences, ExtractedSentenceIsAFixedPoint) {
  oracle::DocumentGenerator gen(11);
  for (int i = 0; i < 200; ++i) {
    const auto doc = parse_document(gen.document(20));
    for (const auto* s : doc.sentences()) {
      const auto again = sentences_of(s->text);
      ASSERT_EQ(again.size(), 1u) << s->text;
      EXPECT_EQ(again[0], s->text);
    }
  }
}

TEST(Tokenize, SurfacesAndNormalizedForms) {
  const auto tokens = tokenize("I picked a daisy.");
  ASSERT_EQ(tokens.size(), 4u);
  EXPECT_EQ(tokens[0].surface, "I");
  EXPECT_EQ(tokens[1].surface, "picked");
  EXPECT_EQ(tokens[2].surface, "a");
  EXPECT_EQ(tokens[3].surface, "daisy.");
  EXPECT_EQ(tokens[3].normalized, "daisy");
  EXPECT_EQ(tokens[0].normalized, "i");
  EXPECT_EQ(tokens[3].span, (ByteSpan{11, 17}));
}

TEST(Tokenize, PurePunctuationIsNotAWord) {
  const auto tokens = tokenize("---");
  ASSERT_EQ(tokens.size(), 1u);
  EXPECT_FALSE(tokens[0].is_word);
  EXPECT_EQ(tokens[0].normalized, "");
}

TEST(Tokenize, InteriorApostropheKept) {
  const auto tokens = tokenize("Don't stop");
  ASSERT_EQ(tokens.size(), 2u);
  EXPECT_EQ(tokens[0].normalized, "don't");
  EXPECT_EQ(tokens[1].normalized, "stop");
  // Typographic apostrophe folds to ASCII.
  EXPECT_EQ(tokenize("Don\xE2\x80\x99t")[0].normalized, "don't");
}

TEST(Tokenize, UnicodePunctuationAndCaseFolding) {
  const auto tokens = tokenize("\xE2\x80\x9C\xC3\x89tude\xE2\x80\x9D, 42 \xC2\xBFQu\xC3\xA9?");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[0].normalized, "\xC3\xA9tude");
  EXPECT_FALSE(tokens[1].is_word);
  EXPECT_EQ(tokens[2].normalized, "qu\xC3\xA9");
}

TEST(Document, WhitespaceOnlyInputIsEmpty) {
  EXPECT_TRUE(parse_document("  \n\t\n  ").empty());
  EXPECT_TRUE(parse_document("").empty());
}

TEST(Document, StructureInvariantsOnRandomCorpus) {
  oracle::DocumentGenerator gen(3);
  for (int i = 0; i < 300; ++i) {
    const auto doc = parse_document(gen.document(20));
    const std::string_view src = doc.source_text;
    std::size_t prev_end = 0;
    std::size_t ordinal = 0;
    for (std::size_t p = 0; p < doc.paragraphs.size(); ++p) {
      const auto& para = doc.paragraphs[p];
      EXPECT_EQ(para.index, p);
      ASSERT_FALSE(para.sentences.empty());
      EXPECT_GE(para.span.begin, prev_end);
      for (std::size_t k = 0; k < para.sentences.size(); ++k) {
        const auto& s = para.sentences[k];
        EXPECT_TRUE(para.span.contains(s.span));
        EXPECT_GE(s.span.begin, prev_end);
        EXPECT_EQ(quicksum::slice(src, s.span), s.text);
        EXPECT_EQ(s.paragraph_index, p);
        EXPECT_EQ(s.index_in_paragraph, k);
        EXPECT_EQ(s.ordinal, ordinal++);
        std::size_t tok_end = 0;
        for (const auto& t : s.tokens) {
          EXPECT_GE(t.span.begin, tok_end);
          EXPECT_EQ(quicksum::slice(s.text, t.span), t.surface);
          EXPECT_EQ(t.normalized.empty(), !t.is_word);
          EXPECT_EQ(quicksum::text::fold_case(t.normalized), t.normalized);
          tok_end = t.span.end;
        }
        prev_end = s.span.end;
      }
    }
  }
}
