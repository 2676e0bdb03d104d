#ifndef QUICKSUM_CLASSIFY_HPP
#define QUICKSUM_CLASSIFY_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "quicksum/error.hpp"
#include "quicksum/segmenter.hpp"

namespace quicksum {

/// Discourse markers and other words carrying signal but no content. Entries
/// with more than one word are matched as phrases over consecutive tokens.
struct StructureWordList {
  std::set<std::string, std::less<>> words;
  std::set<std::string, std::less<>> phrases;  // words joined by a single space

  friend bool operator==(const StructureWordList&, const StructureWordList&) = default;
};

enum class SentenceKind { declarative, interrogative, imperative, exclamatory };
enum class Voice { active, passive };
enum class Polarity { positive, negative };

struct SentenceFeatures {
  SentenceKind kind = SentenceKind::declarative;
  Voice voice = Voice::active;
  Polarity polarity = Polarity::positive;
  std::vector<std::size_t> content_token_indices;

  friend bool operator==(const SentenceFeatures&, const SentenceFeatures&) = default;
};

inline std::string_view to_string(SentenceKind k) {
  switch (k) {
    case SentenceKind::declarative: return "declarative";
    case SentenceKind::interrogative: return "interrogative";
    case SentenceKind::imperative: return "imperative";
    case SentenceKind::exclamatory: return "exclamatory";
  }
  return "declarative";
}

namespace detail {

// Articles, pronouns, prepositions, conjunctions, auxiliaries and modals,
// plus a few high-frequency adverbs and common contractions.
inline const std::unordered_set<std::string_view>& function_words() {
  static const std::unordered_set<std::string_view> kWords = {
      // articles and determiners
      "a", "an", "the", "this", "that", "these", "those", "some", "any", "each", "every",
      "either", "neither", "both", "all", "such", "another", "other",
      // pronouns
      "i", "me", "my", "mine", "myself", "you", "your", "yours", "yourself", "yourselves",
      "he", "him", "his", "himself", "she", "her", "hers", "herself", "it", "its", "itself",
      "we", "us", "our", "ours", "ourselves", "they", "them", "their", "theirs", "themselves",
      "who", "whom", "whose", "which", "what", "whoever", "whatever", "one", "someone",
      "something", "anyone", "anything", "everyone", "everything", "nothing",
      // prepositions
      "about", "above", "across", "after", "against", "along", "among", "around", "at",
      "before", "behind", "below", "beneath", "beside", "between", "beyond", "by", "down",
      "during", "except", "for", "from", "in", "inside", "into", "near", "of", "off", "on",
      "onto", "out", "outside", "over", "past", "since", "through", "throughout", "to",
      "toward", "towards", "under", "underneath", "until", "up", "upon", "via", "with",
      "within", "without",
      // conjunctions
      "and", "but", "or", "nor", "so", "yet", "as", "if", "than", "though", "although",
      "because", "unless", "whereas", "whether", "while", "when", "where", "whenever",
      "wherever", "once", "then",
      // auxiliaries and modals
      "am", "is", "are", "was", "were", "be", "been", "being", "have", "has", "had",
      "having", "do", "does", "did", "doing", "will", "would", "shall", "should", "may",
      "might", "must", "can", "could",
      // adverbs and particles
      "not", "no", "also", "too", "very", "just", "there", "here", "how", "why", "therefore",
      // contractions
      "don't", "doesn't", "didn't", "isn't", "aren't", "wasn't", "weren't", "can't",
      "couldn't", "won't", "wouldn't", "shouldn't", "it's", "i'm", "i've", "i'd", "i'll",
      "we're", "they're", "you're", "that's", "there's", "let's"};
  return kWords;
}

inline const std::unordered_set<std::string_view>& imperative_verbs() {
  static const std::unordered_set<std::string_view> kVerbs = {
      "consider", "note", "see", "let", "take", "find", "remember", "imagine", "please",
      "look", "check", "keep", "try", "read", "go", "give", "put", "stop", "ensure", "add",
      "write", "open", "close", "avoid", "start", "follow", "compare", "recall", "think",
      "use", "bring", "tell", "ask", "make", "do", "don't", "never"};
  return kVerbs;
}

// Common irregular past participles, including every "-en" form accepted as
// one: a bare "-en" ending is too often a noun or adjective (garden, often).
inline const std::unordered_set<std::string_view>& irregular_participles() {
  static const std::unordered_set<std::string_view> kWords = {
      "been", "beaten", "become", "begun", "bent", "bitten", "blown", "bought", "bound",
      "broken", "brought", "built", "burnt", "caught", "chosen", "dealt", "done", "drawn",
      "driven", "eaten", "fallen", "fed", "felt", "fought", "found", "forbidden", "forgiven",
      "forgotten", "frozen", "given", "gone", "grown", "held", "hidden", "hit", "hung", "hurt",
      "kept", "known", "laid", "led", "left", "lent", "lost", "made", "meant", "met", "paid",
      "proven", "put", "read", "ridden", "risen", "run", "said", "seen", "sent", "set", "shaken",
      "shown", "shut", "sold", "sought", "spent", "spoken", "spun", "stolen", "struck", "stuck",
      "sung", "sunk", "sworn", "taken", "taught", "thrown", "told", "torn", "understood", "won",
      "woken", "worn", "written", "wound"};
  return kWords;
}

inline bool is_participle(std::string_view w) {
  return irregular_participles().count(w) != 0 || (w.size() > 3 && w.ends_with("ed"));
}

inline bool is_be_form(std::string_view w) {
  return w == "is" || w == "are" || w == "was" || w == "were" || w == "been" || w == "being" ||
         w == "be";
}

inline bool is_negator(std::string_view w) {
  return w == "not" || w == "no" || w == "never" || w == "none" || w == "neither" ||
         w == "nor" || w.ends_with("n't");
}

// Last terminator of the sentence, skipping closing quotes and brackets.
inline char final_terminator(std::string_view sentence) {
  std::size_t e = sentence.size();
  while (e > 0) {
    const char c = sentence[e - 1];
    if (text::is_space(c) || c == '"' || c == '\'' || c == ')' || c == ']' || c == '}') {
      --e;
      continue;
    }
    const std::size_t p = text::previous_boundary(sentence, e);
    const auto d = text::decode_at(sentence, p);
    if (d.cp == 0x201D || d.cp == 0x2019 || d.cp == 0xBB) {
      e = p;
      continue;
    }
    return c;
  }
  return '\0';
}

inline std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  for (std::size_t i = 0; i < s.size();) {
    while (i < s.size() && text::is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !text::is_space(s[j])) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

inline void add_structure_entry(StructureWordList& list, std::string_view entry) {
  const auto parts = detail::split_words(entry);
  if (parts.empty()) return;
  if (parts.size() == 1) {
    list.words.emplace(parts.front());
    return;
  }
  std::string phrase;
  for (const auto part : parts) {
    if (!phrase.empty()) phrase += ' ';
    phrase += part;
  }
  list.phrases.insert(std::move(phrase));
}

/// One word or phrase per line, '#' comments. Every word must already be in
/// normalized form (lowercase, no edge punctuation).
inline StructureWordList load_structure_words(std::string_view file_text) {
  StructureWordList list;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= file_text.size()) {
    std::size_t eol = file_text.find('\n', pos);
    if (eol == std::string_view::npos) eol = file_text.size();
    std::string_view line = file_text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    for (const auto word : detail::split_words(line)) {
      if (normalize_word(word) != word)
        throw ParseError(line_no, 0, "'" + std::string(word) + "' is not a normalized word");
    }
    add_structure_entry(list, line);
    if (eol == file_text.size()) break;
  }
  return list;
}

inline bool is_structure_word(std::string_view normalized, const StructureWordList& list) {
  return list.words.find(normalized) != list.words.end() ||
         detail::function_words().count(normalized) != 0;
}

/// Indices of word tokens that are neither structure words nor part of a
/// structure phrase.
inline std::vector<std::size_t> content_tokens(const SentenceSpan& sentence,
                                               const StructureWordList& list) {
  const auto& tokens = sentence.tokens;
  std::vector<bool> excluded(tokens.size(), false);
  for (const auto& phrase : list.phrases) {
    const auto parts = detail::split_words(phrase);
    if (parts.size() > tokens.size()) continue;
    for (std::size_t i = 0; i + parts.size() <= tokens.size(); ++i) {
      bool match = true;
      for (std::size_t k = 0; k < parts.size() && match; ++k)
        match = tokens[i + k].normalized == parts[k];
      if (match)
        for (std::size_t k = 0; k < parts.size(); ++k) excluded[i + k] = true;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (excluded[i] || !tokens[i].is_word) continue;
    if (is_structure_word(tokens[i].normalized, list)) continue;
    out.push_back(i);
  }
  return out;
}

/// Shallow lexical classification along three axes:
///  - kind: by terminator ('?' interrogative, '!' exclamatory), else imperative
///    when the sentence opens with a known command verb, else declarative;
///  - voice: passive when a be-form is followed within three words by a past
///    participle (an "-ed" word or a listed irregular form);
///  - polarity: negative on any negator or "n't" contraction.
inline SentenceFeatures classify_sentence(const SentenceSpan& sentence,
                                          const StructureWordList& list) {
  SentenceFeatures f;
  const char term = detail::final_terminator(sentence.text);

  std::vector<std::string_view> words;
  for (const auto& t : sentence.tokens)
    if (t.is_word) words.push_back(t.normalized);

  if (term == '?') {
    f.kind = SentenceKind::interrogative;
  } else if (term == '!') {
    f.kind = SentenceKind::exclamatory;
  } else if (!words.empty() && detail::imperative_verbs().count(words.front()) != 0) {
    f.kind = SentenceKind::imperative;
  }

  for (std::size_t i = 0; i < words.size() && f.voice == Voice::active; ++i) {
    if (!detail::is_be_form(words[i])) continue;
    for (std::size_t k = i + 1; k < words.size() && k <= i + 3; ++k) {
      const auto w = words[k];
      if (detail::is_be_form(w) || w.size() <= 2) continue;
      if (detail::is_participle(w)) {
        f.voice = Voice::passive;
        break;
      }
    }
  }

  if (std::any_of(words.begin(), words.end(), detail::is_negator)) f.polarity = Polarity::negative;

  f.content_token_indices = content_tokens(sentence, list);
  return f;
}

}  // namespace quicksum

#endif  // QUICKSUM_CLASSIFY_HPP
