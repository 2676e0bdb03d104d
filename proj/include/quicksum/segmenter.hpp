#ifndef QUICKSUM_SEGMENTER_HPP
#define QUICKSUM_SEGMENTER_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "quicksum/text.hpp"

namespace quicksum {

struct Token {
  std::string surface;
  ByteSpan span;  // relative to the owning sentence
  std::string normalized;
  bool is_word = false;

  friend bool operator==(const Token&, const Token&) = default;
};

struct SentenceSpan {
  std::size_t paragraph_index = 0;
  std::size_t index_in_paragraph = 0;
  std::size_t ordinal = 0;  // position among all sentences of the document
  ByteSpan span;            // absolute, into Document::source_text
  std::string text;
  std::vector<Token> tokens;

  friend bool operator==(const SentenceSpan&, const SentenceSpan&) = default;
};

struct Paragraph {
  std::size_t index = 0;
  ByteSpan span;
  std::vector<SentenceSpan> sentences;

  friend bool operator==(const Paragraph&, const Paragraph&) = default;
};

struct Document {
  std::string source_text;
  std::vector<Paragraph> paragraphs;

  std::size_t sentence_count() const noexcept {
    std::size_t n = 0;
    for (const auto& p : paragraphs) n += p.sentences.size();
    return n;
  }

  /// Sentences in document order; pointers stay valid while the document is alive and unmodified.
  std::vector<const SentenceSpan*> sentences() const {
    std::vector<const SentenceSpan*> out;
    out.reserve(sentence_count());
    for (const auto& p : paragraphs)
      for (const auto& s : p.sentences) out.push_back(&s);
    return out;
  }

  bool empty() const noexcept { return paragraphs.empty(); }

  friend bool operator==(const Document&, const Document&) = default;
};

namespace detail {

inline constexpr std::array<std::string_view, 9> kAbbreviations = {
    "mr", "mrs", "ms", "dr", "st", "etc", "e.g", "i.e", "vs"};

inline bool is_terminator(char c) noexcept { return c == '.' || c == '!' || c == '?'; }

// Closing quotes and brackets allowed between a terminator and the following space.
inline std::size_t closer_length(std::string_view s, std::size_t i) {
  const char c = s[i];
  if (c == '"' || c == '\'' || c == ')' || c == ']' || c == '}') return 1;
  const auto d = text::decode_at(s, i);
  if (d.cp == 0x201D || d.cp == 0x2019 || d.cp == 0xBB) return d.len;
  return 0;
}

inline bool guards_period(std::string_view paragraph, std::size_t sentence_start,
                          std::size_t period) {
  std::size_t b = period;
  while (b > sentence_start && !text::is_space(paragraph[b - 1])) --b;
  std::string_view word = paragraph.substr(b, period - b);
  while (!word.empty()) {
    const auto d = text::decode_at(word, 0);
    if (!text::is_punctuation(d.cp)) break;
    word.remove_prefix(d.len);
  }
  if (word.empty()) return false;
  const auto first = text::decode_at(word, 0);
  if (first.len == word.size() && text::is_letter(first.cp)) return true;
  const auto lowered = text::ascii_lower(word);
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), lowered) !=
         kAbbreviations.end();
}

inline ByteSpan trimmed(std::string_view s, std::size_t b, std::size_t e) {
  while (b < e && text::is_space(s[b])) ++b;
  while (e > b && text::is_space(s[e - 1])) --e;
  return {b, e};
}

}  // namespace detail

/// Paragraph ranges: maximal runs of lines separated by blank (whitespace-only)
/// lines, trimmed of surrounding whitespace.
inline std::vector<ByteSpan> segment_paragraphs(std::string_view text) {
  std::vector<ByteSpan> out;
  bool open = false;
  std::size_t para_begin = 0;
  std::size_t para_end = 0;
  std::size_t line_begin = 0;
  while (line_begin <= text.size()) {
    std::size_t line_end = text.find('\n', line_begin);
    if (line_end == std::string_view::npos) line_end = text.size();
    const ByteSpan line = detail::trimmed(text, line_begin, line_end);
    if (line.empty()) {
      if (open) out.push_back({para_begin, para_end});
      open = false;
    } else {
      if (!open) para_begin = line.begin;
      para_end = line.end;
      open = true;
    }
    if (line_end == text.size()) break;
    line_begin = line_end + 1;
  }
  if (open) out.push_back({para_begin, para_end});
  return out;
}

/// Sentence ranges relative to `paragraph`. A run of '.', '!' or '?' (plus
/// any closing quotes or brackets) ends a sentence when followed by
/// whitespace or end of text, unless it is a lone period after a known
/// abbreviation or a single letter.
inline std::vector<ByteSpan> segment_sentences(std::string_view paragraph) {
  std::vector<ByteSpan> out;
  const std::size_t n = paragraph.size();
  std::size_t start = 0;
  while (start < n && text::is_space(paragraph[start])) ++start;
  std::size_t i = start;
  while (i < n) {
    if (!detail::is_terminator(paragraph[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && detail::is_terminator(paragraph[j])) ++j;
    const bool lone_period = (j - i == 1) && paragraph[i] == '.';
    while (j < n) {
      const std::size_t len = detail::closer_length(paragraph, j);
      if (len == 0) break;
      j += len;
    }
    const bool at_break = j == n || text::is_space(paragraph[j]);
    if (at_break && !(lone_period && detail::guards_period(paragraph, start, i))) {
      const ByteSpan s = detail::trimmed(paragraph, start, j);
      if (!s.empty()) out.push_back(s);
      start = j;
      while (start < n && text::is_space(paragraph[start])) ++start;
    }
    i = j;
  }
  if (start < n) {
    const ByteSpan s = detail::trimmed(paragraph, start, n);
    if (!s.empty()) out.push_back(s);
  }
  return out;
}

/// Case-folded form with edge punctuation removed; empty when no letter remains.
inline std::string normalize_word(std::string_view surface) {
  std::size_t b = 0, e = surface.size();
  while (b < e) {
    const auto d = text::decode_at(surface, b);
    if (!text::is_punctuation(d.cp)) break;
    b += d.len;
  }
  while (e > b) {
    const std::size_t p = text::previous_boundary(surface, e);
    const auto d = text::decode_at(surface, p);
    if (!text::is_punctuation(d.cp)) break;
    e = p;
  }
  const std::string_view core = surface.substr(b, e - b);
  bool has_letter = false;
  std::string out;
  out.reserve(core.size());
  for (std::size_t i = 0; i < core.size();) {
    const auto d = text::decode_at(core, i);
    if (d.cp == 0xFFFD && d.len == 1) {
      out += core[i];
    } else if (d.cp == 0x2019) {
      out += '\'';
    } else {
      has_letter = has_letter || text::is_letter(d.cp);
      text::append_utf8(out, text::fold_case(d.cp));
    }
    i += d.len;
  }
  if (!has_letter) out.clear();
  return out;
}

inline std::vector<Token> tokenize(std::string_view sentence) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = sentence.size();
  while (i < n) {
    while (i < n && text::is_space(sentence[i])) ++i;
    if (i == n) break;
    std::size_t j = i;
    while (j < n && !text::is_space(sentence[j])) ++j;
    Token t;
    t.surface = std::string(sentence.substr(i, j - i));
    t.span = {i, j};
    t.normalized = normalize_word(t.surface);
    t.is_word = !t.normalized.empty();
    out.push_back(std::move(t));
    i = j;
  }
  return out;
}

inline Document parse_document(std::string text) {
  Document doc;
  doc.source_text = std::move(text);
  const std::string_view src = doc.source_text;
  std::size_t ordinal = 0;
  for (const ByteSpan pspan : segment_paragraphs(src)) {
    Paragraph para;
    para.index = doc.paragraphs.size();
    para.span = pspan;
    const std::string_view ptext = slice(src, pspan);
    for (const ByteSpan rel : segment_sentences(ptext)) {
      SentenceSpan s;
      s.paragraph_index = para.index;
      s.index_in_paragraph = para.sentences.size();
      s.ordinal = ordinal++;
      s.span = {pspan.begin + rel.begin, pspan.begin + rel.end};
      s.text = std::string(slice(src, s.span));
      s.tokens = tokenize(s.text);
      para.sentences.push_back(std::move(s));
    }
    if (!para.sentences.empty()) doc.paragraphs.push_back(std::move(para));
  }
  return doc;
}

}  // namespace quicksum

#endif  // QUICKSUM_SEGMENTER_HPP
