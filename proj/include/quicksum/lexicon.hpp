#ifndef QUICKSUM_LEXICON_HPP
#define QUICKSUM_LEXICON_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "quicksum/error.hpp"
#include "quicksum/segmenter.hpp"
#include "quicksum/xml.hpp"

namespace quicksum {

/// One etymology record of an MMML word list.
struct WordEntry {
  std::string id;
  std::string word;
  std::string origin;
  std::string source;
  std::string morphemes;
  std::string sentence_last_used;

  friend bool operator==(const WordEntry&, const WordEntry&) = default;
};

/// Etymology records keyed by headword, plus the alias table used to unify
/// variant spellings under one root key. Aliases are derived from the
/// entries: every headword maps to itself, and an entry whose id differs from
/// its headword makes the id an alias of the headword. Extra aliases may be
/// layered on with with_alias().
class Lexicon {
 public:
  Lexicon() = default;

  /// Throws std::invalid_argument on an empty id/word or a repeated id/headword.
  explicit Lexicon(std::vector<WordEntry> entries) {
    for (auto& e : entries) insert(std::move(e));
    rebuild_aliases();
  }

  const std::map<std::string, WordEntry, std::less<>>& entries() const noexcept {
    return entries_;
  }
  const std::map<std::string, std::string, std::less<>>& root_aliases() const noexcept {
    return aliases_;
  }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Entry whose case-folded headword equals `folded`.
  const WordEntry* find_headword(std::string_view folded) const {
    const auto it = folded_.find(folded);
    if (it == folded_.end()) return nullptr;
    return &entries_.find(it->second)->second;
  }

  bool is_headword(std::string_view folded) const { return folded_.find(folded) != folded_.end(); }

  std::optional<std::string> alias_target(std::string_view folded) const {
    const auto it = aliases_.find(folded);
    if (it == aliases_.end()) return std::nullopt;
    return it->second;
  }

  /// Copy with an extra alias variant -> target (both case-folded). Entry-derived
  /// aliases take precedence over explicit ones.
  Lexicon with_alias(std::string_view variant, std::string_view target) const {
    Lexicon out = *this;
    out.extra_aliases_[fold_case_word(variant)] = fold_case_word(target);
    out.rebuild_aliases();
    return out;
  }

  /// Copy in which `headword`'s sentence_last_used is replaced; unchanged when absent.
  Lexicon with_sentence_last_used(std::string_view headword, std::string_view sentence) const {
    Lexicon out = *this;
    auto it = out.entries_.find(headword);
    if (it == out.entries_.end()) {
      const auto f = out.folded_.find(fold_case_word(headword));
      if (f == out.folded_.end()) return out;
      it = out.entries_.find(f->second);
    }
    it->second.sentence_last_used = std::string(sentence);
    return out;
  }

  /// Entries in ascending id order.
  std::vector<const WordEntry*> by_id() const {
    std::vector<const WordEntry*> out;
    out.reserve(entries_.size());
    for (const auto& [_, e] : entries_) out.push_back(&e);
    std::sort(out.begin(), out.end(),
              [](const WordEntry* a, const WordEntry* b) { return a->id < b->id; });
    return out;
  }

  friend bool operator==(const Lexicon& a, const Lexicon& b) {
    return a.entries_ == b.entries_ && a.aliases_ == b.aliases_;
  }

 private:
  static std::string fold_case_word(std::string_view s) { return text::fold_case(s); }

  void insert(WordEntry e) {
    if (e.id.empty()) throw std::invalid_argument("lexicon entry has an empty id");
    if (e.word.empty()) throw std::invalid_argument("lexicon entry '" + e.id + "' has an empty word");
    if (!ids_.insert(e.id).second) throw std::invalid_argument("duplicate lexicon id '" + e.id + "'");
    std::string folded = fold_case_word(e.word);
    if (folded_.count(folded) != 0)
      throw std::invalid_argument("duplicate lexicon headword '" + e.word + "'");
    folded_.emplace(std::move(folded), e.word);
    std::string key = e.word;
    entries_.emplace(std::move(key), std::move(e));
  }

  void rebuild_aliases() {
    aliases_.clear();
    for (const auto& [folded, _] : folded_) aliases_.emplace(folded, folded);
    for (const auto& [_, e] : entries_) {
      const std::string id = fold_case_word(e.id);
      aliases_.emplace(id, fold_case_word(e.word));
    }
    for (const auto& [variant, target] : extra_aliases_) aliases_.emplace(variant, target);
  }

  std::map<std::string, WordEntry, std::less<>> entries_;
  std::set<std::string, std::less<>> ids_;
  std::map<std::string, std::string, std::less<>> folded_;  // folded headword -> headword
  std::map<std::string, std::string, std::less<>> extra_aliases_;
  std::map<std::string, std::string, std::less<>> aliases_;
};

inline Lexicon touch_sentence_last_used(const Lexicon& lexicon, std::string_view headword,
                                        std::string_view sentence_text) {
  return lexicon.with_sentence_last_used(headword, sentence_text);
}

namespace detail {

[[noreturn]] inline void mmml_fail(std::string_view src, const xml::Element& at,
                                   const std::string& msg) {
  xml::fail_at(src, at.offset, msg);
}

}  // namespace detail

/// Parses an MMML word list. Throws ParseError (with line and column) on
/// malformed XML, unknown elements or attributes, missing required fields and
/// duplicate ids or headwords.
inline Lexicon load_mmml(std::string_view xml_text) {
  const xml::Element root = xml::parse(xml_text);
  const auto fail = [xml_text](const xml::Element& at, const std::string& msg) {
    detail::mmml_fail(xml_text, at, msg);
  };
  if (root.name != "wordlist") fail(root, "root element must be <wordlist>, found <" + root.name + ">");
  if (!root.attributes.empty()) fail(root, "<wordlist> takes no attributes");
  if (root.has_significant_text()) fail(root, "unexpected text inside <wordlist>");

  std::vector<WordEntry> entries;
  std::map<std::string, const xml::Element*> seen_ids;
  std::map<std::string, const xml::Element*> seen_words;
  for (const auto& item : root.children) {
    if (item.name != "word") fail(item, "unknown element <" + item.name + "> in <wordlist>");
    const std::string* id = item.attribute("id");
    if (id == nullptr || id->empty()) fail(item, "<word> entry is missing its id attribute");
    for (const auto& [key, _] : item.attributes)
      if (key != "id") fail(item, "unknown attribute '" + key + "' on entry '" + *id + "'");
    if (item.has_significant_text()) fail(item, "unexpected text inside entry '" + *id + "'");
    if (!seen_ids.emplace(*id, &item).second) fail(item, "duplicate id '" + *id + "'");

    WordEntry entry;
    entry.id = *id;
    bool has_word = false, has_origin = false, has_source = false;
    std::map<std::string, bool> present;
    for (const auto& field : item.children) {
      if (!field.children.empty())
        fail(field.children.front(), "unexpected element <" + field.children.front().name +
                                         "> inside <" + field.name + "> of entry '" + *id + "'");
      if (!field.attributes.empty())
        fail(field, "unexpected attribute on <" + field.name + "> of entry '" + *id + "'");
      if (present[field.name]) fail(field, "repeated <" + field.name + "> in entry '" + *id + "'");
      present[field.name] = true;
      std::string value = field.trimmed_text();
      if (field.name == "word") {
        entry.word = std::move(value);
        has_word = true;
      } else if (field.name == "origin") {
        entry.origin = std::move(value);
        has_origin = true;
      } else if (field.name == "source") {
        entry.source = std::move(value);
        has_source = true;
      } else if (field.name == "morphemes") {
        entry.morphemes = std::move(value);
      } else if (field.name == "sentencelastused") {
        entry.sentence_last_used = std::move(value);
      } else {
        fail(field, "unknown element <" + field.name + "> in entry '" + *id + "'");
      }
    }
    if (!has_word) fail(item, "entry '" + *id + "' is missing <word>");
    if (entry.word.empty()) fail(item, "entry '" + *id + "' has an empty <word>");
    if (!has_origin) fail(item, "entry '" + *id + "' is missing <origin>");
    if (!has_source) fail(item, "entry '" + *id + "' is missing <source>");
    if (!seen_words.emplace(text::fold_case(entry.word), &item).second)
      fail(item, "duplicate headword '" + entry.word + "' in entry '" + *id + "'");
    entries.push_back(std::move(entry));
  }
  return Lexicon(std::move(entries));
}

/// Canonical MMML: declaration, two-space indentation, entries by ascending id.
inline std::string write_mmml(const Lexicon& lexicon) {
  std::string out = "<?xml version=\"1.0\"?>\n<wordlist>\n";
  auto field = [&out](std::string_view name, std::string_view value) {
    out += "    <";
    out += name;
    out += '>';
    out += xml::escape_text(value);
    out += "</";
    out += name;
    out += ">\n";
  };
  for (const WordEntry* e : lexicon.by_id()) {
    out += "  <word id=\"" + xml::escape_attribute(e->id) + "\">\n";
    field("word", e->word);
    field("origin", e->origin);
    field("source", e->source);
    field("morphemes", e->morphemes);
    field("sentencelastused", e->sentence_last_used);
    out += "  </word>\n";
  }
  out += "</wordlist>\n";
  return out;
}

}  // namespace quicksum

#endif  // QUICKSUM_LEXICON_HPP
