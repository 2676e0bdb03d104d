#ifndef QUICKSUM_PIPELINE_HPP
#define QUICKSUM_PIPELINE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "quicksum/classify.hpp"
#include "quicksum/defaults.hpp"
#include "quicksum/lexicon.hpp"
#include "quicksum/morphology.hpp"
#include "quicksum/scoring.hpp"
#include "quicksum/segmenter.hpp"

namespace quicksum {

/// The three data files driving analysis.
struct Resources {
  MorphRuleSet rules;
  Lexicon lexicon;
  StructureWordList structure_words;

  static Resources builtin() {
    return {load_rules(defaults::kDefaultRules), load_mmml(defaults::kDefaultLexicon),
            load_structure_words(defaults::kDefaultStructureWords)};
  }
};

struct Summary {
  Document doc;
  std::vector<SentenceAnalysis> sentences;  // by ordinal
  DocIndex index;
  std::vector<ScoreBreakdown> scores;  // by ordinal
  RankedSummary ranked;
};

class SentenceAnalyzer {
 public:
  explicit SentenceAnalyzer(const Resources& resources) : res_(resources) {}

  SentenceAnalysis operator()(const SentenceSpan& sentence) {
    SentenceAnalysis out;
    out.features = classify_sentence(sentence, res_.structure_words);
    out.tokens.reserve(sentence.tokens.size());
    for (const auto& token : sentence.tokens) {
      if (!token.is_word) {
        out.tokens.emplace_back();
        continue;
      }
      auto it = cache_.find(token.normalized);
      if (it == cache_.end())
        it = cache_.emplace(token.normalized, analyze(token.normalized, res_.rules, res_.lexicon))
                 .first;
      out.tokens.push_back(it->second);
    }
    out.content_roots = collect_content_roots(out.features, out.tokens);
    return out;
  }

 private:
  const Resources& res_;
  std::unordered_map<std::string, MorphAnalysis> cache_;
};

/// segment -> morphology -> classify -> index -> score -> select.
inline Summary summarize(std::string text, std::size_t k, const ScoreWeights& weights,
                         const Resources& resources) {
  weights.validate();
  Summary out;
  out.doc = parse_document(std::move(text));
  const auto sentences = out.doc.sentences();
  SentenceAnalyzer analyze_sentence(resources);
  out.sentences.reserve(sentences.size());
  for (const SentenceSpan* s : sentences) out.sentences.push_back(analyze_sentence(*s));
  out.index = build_doc_index(out.doc, out.sentences);
  out.scores.reserve(sentences.size());
  for (const SentenceSpan* s : sentences)
    out.scores.push_back(score_sentence(*s, out.doc, out.index, out.sentences[s->ordinal], weights));
  out.ranked = select_top_k(out.doc, out.scores, k, weights);
  return out;
}

/// Lexicon in which every headword seen in the document carries the last
/// sentence that used it.
inline Lexicon record_usage(const Summary& summary, const Lexicon& lexicon) {
  std::map<std::string, std::string> last_used;
  for (const SentenceSpan* s : summary.doc.sentences()) {
    for (const auto& a : summary.sentences[s->ordinal].tokens) {
      if (a.root_key.empty()) continue;
      if (const WordEntry* e = lexicon.find_headword(a.root_key)) last_used[e->word] = s->text;
    }
  }
  Lexicon out = lexicon;
  for (const auto& [headword, sentence] : last_used)
    out = touch_sentence_last_used(out, headword, sentence);
  return out;
}

}  // namespace quicksum

#endif  // QUICKSUM_PIPELINE_HPP
