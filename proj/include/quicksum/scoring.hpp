#ifndef QUICKSUM_SCORING_HPP
#define QUICKSUM_SCORING_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "quicksum/classify.hpp"
#include "quicksum/morphology.hpp"
#include "quicksum/segmenter.hpp"

namespace quicksum {

struct ScoreWeights {
  double w_pos = 0.4;
  double w_theme = 0.4;
  double w_type = 0.1;
  double w_len = 0.1;
  std::size_t ideal_length = 20;

  /// Throws std::invalid_argument when a weight is negative or non-finite,
  /// all weights are zero, or ideal_length is zero.
  void validate() const {
    for (const double w : {w_pos, w_theme, w_type, w_len})
      if (!std::isfinite(w) || w < 0.0) throw std::invalid_argument("weights must be non-negative");
    const double sum = w_pos + w_theme + w_type + w_len;
    if (!std::isfinite(sum)) throw std::invalid_argument("weights are too large");
    if (sum <= 0.0)
      throw std::invalid_argument("at least one weight must be positive");
    if (ideal_length == 0) throw std::invalid_argument("ideal length must be positive");
  }

  friend bool operator==(const ScoreWeights&, const ScoreWeights&) = default;
};

/// Everything the scorer needs about one sentence, in token order.
struct SentenceAnalysis {
  SentenceFeatures features;
  std::vector<MorphAnalysis> tokens;         // one per token; default for non-words
  std::set<std::string> content_roots;       // distinct root keys of content tokens

  friend bool operator==(const SentenceAnalysis&, const SentenceAnalysis&) = default;
};

/// Sentence-level document frequency of root keys.
struct DocIndex {
  std::map<std::string, std::size_t, std::less<>> df;
  std::size_t max_df = 0;
  std::size_t sentence_count = 0;

  std::size_t frequency(std::string_view root) const {
    const auto it = df.find(root);
    return it == df.end() ? 0 : it->second;
  }

  friend bool operator==(const DocIndex&, const DocIndex&) = default;
};

struct ScoreBreakdown {
  double position = 0.0;
  double theme = 0.0;
  double type_bonus = 0.0;
  double length_penalty = 0.0;
  double total = 0.0;

  friend bool operator==(const ScoreBreakdown&, const ScoreBreakdown&) = default;
};

struct RankedEntry {
  std::size_t rank = 0;
  std::size_t sentence = 0;  // document-order ordinal
  std::size_t paragraph_index = 0;
  std::size_t index_in_paragraph = 0;
  ScoreBreakdown score;

  friend bool operator==(const RankedEntry&, const RankedEntry&) = default;
};

struct RankedSummary {
  std::vector<RankedEntry> entries;
  std::size_t k_requested = 0;

  friend bool operator==(const RankedSummary&, const RankedSummary&) = default;
};

inline std::set<std::string> collect_content_roots(const SentenceFeatures& features,
                                                   const std::vector<MorphAnalysis>& analyses) {
  std::set<std::string> roots;
  for (const std::size_t i : features.content_token_indices) roots.insert(analyses.at(i).root_key);
  return roots;
}

/// `per_sentence` is indexed by sentence ordinal.
inline DocIndex build_doc_index(const Document& doc,
                                const std::vector<SentenceAnalysis>& per_sentence) {
  DocIndex index;
  index.sentence_count = doc.sentence_count();
  if (per_sentence.size() != index.sentence_count)
    throw std::invalid_argument("analysis does not cover every sentence");
  for (const auto& s : per_sentence)
    for (const auto& root : s.content_roots) ++index.df[root];
  for (const auto& [_, n] : index.df) index.max_df = std::max(index.max_df, n);
  return index;
}

/// 1.0 closing sentence of the document, 0.8 paragraph opener, 0.6 paragraph
/// closer, 0.2 otherwise; the highest applicable value wins.
inline double positional_score(const SentenceSpan& sentence, const Document& doc) {
  const auto& para = doc.paragraphs.at(sentence.paragraph_index);
  const bool last_in_para = sentence.index_in_paragraph + 1 == para.sentences.size();
  const bool final_para = sentence.paragraph_index + 1 == doc.paragraphs.size();
  if (last_in_para && final_para) return 1.0;
  if (sentence.index_in_paragraph == 0) return 0.8;
  if (last_in_para) return 0.6;
  return 0.2;
}

inline double theme_score(const DocIndex& index, const std::set<std::string>& content_roots) {
  if (content_roots.empty() || index.max_df == 0) return 0.0;
  double sum = 0.0;
  for (const auto& root : content_roots)
    sum += static_cast<double>(index.frequency(root)) / static_cast<double>(index.max_df);
  return sum / static_cast<double>(content_roots.size());
}

inline double type_score(const SentenceFeatures& features) {
  switch (features.kind) {
    case SentenceKind::declarative: return 1.0;
    case SentenceKind::imperative: return 0.5;
    case SentenceKind::exclamatory: return 0.3;
    case SentenceKind::interrogative: return 0.2;
  }
  return 0.0;
}

inline std::size_t word_token_count(const SentenceSpan& sentence) {
  return static_cast<std::size_t>(std::count_if(sentence.tokens.begin(), sentence.tokens.end(),
                                                [](const Token& t) { return t.is_word; }));
}

inline double length_penalty(const SentenceSpan& sentence, const ScoreWeights& weights) {
  const double ideal = static_cast<double>(weights.ideal_length);
  const double words = static_cast<double>(word_token_count(sentence));
  return std::clamp(std::abs(words - ideal) / ideal, 0.0, 1.0);
}

inline double combine(const ScoreBreakdown& s, const ScoreWeights& w) {
  return w.w_pos * s.position + w.w_theme * s.theme + w.w_type * s.type_bonus -
         w.w_len * s.length_penalty;
}

inline ScoreBreakdown score_sentence(const SentenceSpan& sentence, const Document& doc,
                                     const DocIndex& index, const SentenceAnalysis& analysis,
                                     const ScoreWeights& weights) {
  ScoreBreakdown s;
  s.position = positional_score(sentence, doc);
  s.theme = theme_score(index, analysis.content_roots);
  s.type_bonus = type_score(analysis.features);
  s.length_penalty = length_penalty(sentence, weights);
  s.total = combine(s, weights);
  return s;
}

/// Ranking key for a total. Totals that are equal in exact arithmetic can
/// differ in their last bits, and which one comes out larger depends on how
/// the weights were scaled. Measuring totals relative to the weight sum on a
/// 2^-32 grid makes such pairs compare equal, so they fall to the position
/// tie-break and rankings do not change when all weights are scaled together.
inline long long rank_key(double total, const ScoreWeights& weights) {
  const double sum = weights.w_pos + weights.w_theme + weights.w_type + weights.w_len;
  return std::llround(total / sum * 0x1p32);
}

/// Top-k by total, ties to the earlier sentence. `scores` is indexed by ordinal.
inline RankedSummary select_top_k(const Document& doc, const std::vector<ScoreBreakdown>& scores,
                                  std::size_t k, const ScoreWeights& weights) {
  const auto sentences = doc.sentences();
  if (scores.size() != sentences.size())
    throw std::invalid_argument("scores do not cover every sentence");
  weights.validate();
  std::vector<long long> keys(scores.size());
  for (std::size_t i = 0; i < keys.size(); ++i) keys[i] = rank_key(scores[i].total, weights);
  std::vector<std::size_t> order(sentences.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const std::size_t n = std::min(k, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n), order.end(),
                    [&](std::size_t a, std::size_t b) {
                      if (keys[a] != keys[b]) return keys[a] > keys[b];
                      return a < b;
                    });
  RankedSummary summary;
  summary.k_requested = k;
  summary.entries.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    const SentenceSpan& s = *sentences[order[r]];
    summary.entries.push_back(
        {r + 1, order[r], s.paragraph_index, s.index_in_paragraph, scores[order[r]]});
  }
  return summary;
}

}  // namespace quicksum

#endif  // QUICKSUM_SCORING_HPP
