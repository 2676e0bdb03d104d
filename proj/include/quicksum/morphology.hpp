#ifndef QUICKSUM_MORPHOLOGY_HPP
#define QUICKSUM_MORPHOLOGY_HPP

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quicksum/error.hpp"
#include "quicksum/lexicon.hpp"
#include "quicksum/text.hpp"

namespace quicksum {

/// No analysis ever leaves a root shorter than this.
inline constexpr std::size_t kMinStemLength = 3;

enum class AffixKind { prefix, suffix };

struct MorphRule {
  AffixKind kind = AffixKind::suffix;
  std::string affix;
  std::size_t min_stem_len = 1;
  std::optional<std::string> restore;

  friend bool operator==(const MorphRule&, const MorphRule&) = default;
};

struct MorphRuleSet {
  std::vector<MorphRule> prefixes;  // longest affix first, file order among equals
  std::vector<MorphRule> suffixes;
  std::size_t max_strip_per_side = 2;

  friend bool operator==(const MorphRuleSet&, const MorphRuleSet&) = default;
};

struct MorphAnalysis {
  std::string surface;
  std::vector<std::string> prefixes;  // outermost first
  std::string root;
  std::vector<std::string> suffixes;  // in the order they appear in the word
  std::string root_key;

  friend bool operator==(const MorphAnalysis&, const MorphAnalysis&) = default;
};

/// Parses `<kind> <affix> <min_stem_len> [restore]` lines; '#' starts a comment.
inline MorphRuleSet load_rules(std::string_view rules_text) {
  MorphRuleSet set;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= rules_text.size()) {
    std::size_t eol = rules_text.find('\n', pos);
    if (eol == std::string_view::npos) eol = rules_text.size();
    std::string_view line = rules_text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::string_view> fields;
    for (std::size_t i = 0; i < line.size();) {
      while (i < line.size() && text::is_space(line[i])) ++i;
      std::size_t j = i;
      while (j < line.size() && !text::is_space(line[j])) ++j;
      if (j > i) fields.push_back(line.substr(i, j - i));
      i = j;
    }
    if (fields.empty()) {
      if (eol == rules_text.size()) break;
      continue;
    }

    auto fail = [line_no](const std::string& msg) { throw ParseError(line_no, 0, msg); };
    if (fields.size() < 3 || fields.size() > 4)
      fail("expected '<prefix|suffix> <affix> <min_stem_len> [restore]'");

    MorphRule rule;
    if (fields[0] == "prefix") rule.kind = AffixKind::prefix;
    else if (fields[0] == "suffix") rule.kind = AffixKind::suffix;
    else fail("unknown rule kind '" + std::string(fields[0]) + "'");

    rule.affix = std::string(fields[1]);
    if (text::ascii_lower(rule.affix) != rule.affix || text::fold_case(rule.affix) != rule.affix)
      fail("affix '" + rule.affix + "' must be lowercase");

    const std::string_view n = fields[2];
    const auto [end, ec] = std::from_chars(n.data(), n.data() + n.size(), rule.min_stem_len);
    if (ec != std::errc() || end != n.data() + n.size() || rule.min_stem_len < 1)
      fail("min_stem_len must be an integer >= 1, got '" + std::string(n) + "'");

    if (fields.size() == 4) rule.restore = std::string(fields[3]);

    auto& bucket = rule.kind == AffixKind::prefix ? set.prefixes : set.suffixes;
    if (std::any_of(bucket.begin(), bucket.end(), [&](const MorphRule& r) {
          return r.affix == rule.affix && r.restore == rule.restore;
        }))
      fail("duplicate rule for '" + rule.affix + "'");
    bucket.push_back(std::move(rule));
    if (eol == rules_text.size()) break;
  }
  const auto longest_first = [](const MorphRule& a, const MorphRule& b) {
    return a.affix.size() > b.affix.size();
  };
  std::stable_sort(set.prefixes.begin(), set.prefixes.end(), longest_first);
  std::stable_sort(set.suffixes.begin(), set.suffixes.end(), longest_first);
  return set;
}

namespace detail {

inline bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Single-syllable stem ending consonant-vowel-consonant (last letter not
// w, x or y): "mak", "writ", "hop". These are the stems that lost a silent
// letter before the suffix, so a restore variant is preferred for them.
inline bool wants_restore(std::string_view stem) {
  if (stem.size() < 3) return false;
  const char c1 = stem[stem.size() - 3], v = stem[stem.size() - 2], c2 = stem.back();
  if (is_vowel(c1) || !is_vowel(v) || is_vowel(c2)) return false;
  if (!text::is_ascii_alpha(c1) || !text::is_ascii_alpha(c2)) return false;
  if (c2 == 'w' || c2 == 'x' || c2 == 'y') return false;
  int groups = 0;
  bool in_vowel = false;
  for (std::size_t i = 0; i < stem.size(); ++i) {
    const bool vowel = is_vowel(stem[i]) || (stem[i] == 'y' && i > 0);
    if (vowel && !in_vowel) ++groups;
    in_vowel = vowel;
  }
  return groups == 1;
}

struct Strip {
  const MorphRule* rule;
  std::string stem;
};

// Longest applicable affix; among rules sharing that affix, prefer one that
// lands on a headword, then use wants_restore() to choose between the plain
// and restoring variants.
inline std::optional<Strip> best_strip(std::string_view word, const std::vector<MorphRule>& rules,
                                       const Lexicon& lexicon) {
  std::vector<Strip> candidates;
  std::size_t affix_len = 0;
  for (const auto& rule : rules) {
    if (!candidates.empty() && rule.affix.size() < affix_len) break;
    if (rule.affix.size() >= word.size()) continue;
    const bool suffix = rule.kind == AffixKind::suffix;
    const bool matches = suffix ? word.ends_with(rule.affix) : word.starts_with(rule.affix);
    if (!matches) continue;
    const std::size_t bare_len = word.size() - rule.affix.size();
    if (bare_len < rule.min_stem_len || bare_len < kMinStemLength) continue;
    std::string stem(suffix ? word.substr(0, bare_len) : word.substr(rule.affix.size()));
    if (suffix && rule.restore) stem += *rule.restore;
    affix_len = rule.affix.size();
    candidates.push_back({&rule, std::move(stem)});
  }
  if (candidates.empty()) return std::nullopt;
  if (candidates.size() == 1) return candidates.front();
  for (const auto& c : candidates)
    if (lexicon.is_headword(c.stem)) return c;
  const std::string_view bare = word.substr(0, word.size() - affix_len);
  const bool restore = wants_restore(bare);
  for (const auto& c : candidates)
    if (c.rule->restore.has_value() == restore) return c;
  return candidates.front();
}

}  // namespace detail

inline std::string root_key(const MorphAnalysis& analysis, const Lexicon& lexicon) {
  if (auto target = lexicon.alias_target(analysis.root)) return text::fold_case(*target);
  if (auto target = lexicon.alias_target(analysis.surface)) return text::fold_case(*target);
  return text::fold_case(analysis.root);
}

/// Strips suffixes (up to max_strip_per_side), then prefixes, always taking
/// the longest applicable affix and stopping as soon as the remaining stem
/// is a lexicon headword.
inline MorphAnalysis analyze(std::string_view token_normalized, const MorphRuleSet& rules,
                             const Lexicon& lexicon) {
  MorphAnalysis a;
  a.surface = std::string(token_normalized);
  std::string stem = a.surface;
  bool done = lexicon.is_headword(stem);
  std::vector<std::string> suffixes;
  for (std::size_t n = 0; !done && n < rules.max_strip_per_side; ++n) {
    auto strip = detail::best_strip(stem, rules.suffixes, lexicon);
    if (!strip) break;
    suffixes.push_back(strip->rule->affix);
    stem = std::move(strip->stem);
    done = lexicon.is_headword(stem);
  }
  for (std::size_t n = 0; !done && n < rules.max_strip_per_side; ++n) {
    auto strip = detail::best_strip(stem, rules.prefixes, lexicon);
    if (!strip) break;
    a.prefixes.push_back(strip->rule->affix);
    stem = std::move(strip->stem);
    done = lexicon.is_headword(stem);
  }
  a.suffixes.assign(suffixes.rbegin(), suffixes.rend());
  a.root = std::move(stem);
  a.root_key = root_key(a, lexicon);
  return a;
}

}  // namespace quicksum

#endif  // QUICKSUM_MORPHOLOGY_HPP
