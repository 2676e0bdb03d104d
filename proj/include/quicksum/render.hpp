#ifndef QUICKSUM_RENDER_HPP
#define QUICKSUM_RENDER_HPP

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "quicksum/scoring.hpp"
#include "quicksum/segmenter.hpp"

namespace quicksum {

enum class HighlightColor { green, yellow, red };
enum class OutputFormat { ansi, html, json };

struct HighlightStyle {
  std::size_t rank = 1;
  HighlightColor color = HighlightColor::green;
};

inline HighlightStyle style_for_rank(std::size_t rank) {
  if (rank == 1) return {rank, HighlightColor::green};
  if (rank == 2) return {rank, HighlightColor::yellow};
  return {rank, HighlightColor::red};
}

inline std::string_view to_string(HighlightColor c) {
  switch (c) {
    case HighlightColor::green: return "green";
    case HighlightColor::yellow: return "yellow";
    case HighlightColor::red: return "red";
  }
  return "red";
}

inline std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::ansi: return "ansi";
    case OutputFormat::html: return "html";
    case OutputFormat::json: return "json";
  }
  return "ansi";
}

inline std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "ansi") return OutputFormat::ansi;
  if (name == "html") return OutputFormat::html;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

namespace ansi {
inline constexpr std::string_view kGreen = "\x1b[32m";
inline constexpr std::string_view kYellow = "\x1b[33m";
inline constexpr std::string_view kRed = "\x1b[31m";
inline constexpr std::string_view kReset = "\x1b[0m";

inline std::string_view code(HighlightColor c) {
  switch (c) {
    case HighlightColor::green: return kGreen;
    case HighlightColor::yellow: return kYellow;
    case HighlightColor::red: return kRed;
  }
  return kRed;
}
}  // namespace ansi

namespace detail {

// Selected sentence ordinal -> rank.
inline std::map<std::size_t, std::size_t> ranks_by_sentence(const RankedSummary& summary) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& e : summary.entries) out.emplace(e.sentence, e.rank);
  return out;
}

inline void append_html_escaped(std::string& out, std::string_view s) {
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out += c;
    }
  }
}

// Rounds to six decimals; also folds -0 into 0.
inline double json_number(double x) {
  const double r = std::round(x * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;
}

}  // namespace detail

/// The full source text with each selected sentence wrapped in its SGR colour
/// and a reset.
inline std::string render_ansi(const Document& doc, const RankedSummary& summary) {
  const auto ranks = detail::ranks_by_sentence(summary);
  const std::string_view src = doc.source_text;
  std::string out;
  out.reserve(src.size() + ranks.size() * 10);
  std::size_t cursor = 0;
  for (const SentenceSpan* s : doc.sentences()) {
    const auto it = ranks.find(s->ordinal);
    if (it == ranks.end()) continue;
    out += src.substr(cursor, s->span.begin - cursor);
    out += ansi::code(style_for_rank(it->second).color);
    out += slice(src, s->span);
    out += ansi::kReset;
    cursor = s->span.end;
  }
  out += src.substr(cursor);
  return out;
}

inline constexpr std::string_view kHtmlStyle =
    "<style>\n"
    ".qs-rank-1 { background-color: #b7f0b1; }\n"
    ".qs-rank-2 { background-color: #fff3a3; }\n"
    ".qs-rank-3 { background-color: #f7b6b2; }\n"
    "</style>\n";

/// Standalone HTML page. Inside <body> every byte of the source text appears
/// escaped, paragraphs are <p> elements and selected sentences are spans.
inline std::string render_html(const Document& doc, const RankedSummary& summary) {
  const auto ranks = detail::ranks_by_sentence(summary);
  const std::string_view src = doc.source_text;
  std::string out;
  out.reserve(src.size() * 2 + 512);
  out += "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n<title>Quick Summary</title>\n";
  out += kHtmlStyle;
  out += "</head>\n<body>";
  std::size_t cursor = 0;
  for (const auto& para : doc.paragraphs) {
    detail::append_html_escaped(out, src.substr(cursor, para.span.begin - cursor));
    out += "<p>";
    cursor = para.span.begin;
    for (const auto& s : para.sentences) {
      const auto it = ranks.find(s.ordinal);
      if (it == ranks.end()) continue;
      detail::append_html_escaped(out, src.substr(cursor, s.span.begin - cursor));
      const auto style = style_for_rank(it->second);
      const std::size_t cls = style.rank >= 3 ? 3 : style.rank;
      out += "<span class=\"qs-rank-" + std::to_string(cls) + "\" data-color=\"";
      out += to_string(style.color);
      out += "\">";
      detail::append_html_escaped(out, slice(src, s.span));
      out += "</span>";
      cursor = s.span.end;
    }
    detail::append_html_escaped(out, src.substr(cursor, para.span.end - cursor));
    out += "</p>";
    cursor = para.span.end;
  }
  detail::append_html_escaped(out, src.substr(cursor));
  out += "</body>\n</html>\n";
  return out;
}

/// Compact JSON with keys in fixed order and numbers rounded to six decimals.
inline std::string render_json(const Document& doc, const RankedSummary& summary) {
  using ordered_json = nlohmann::ordered_json;
  const auto sentences = doc.sentences();
  ordered_json root;
  root["k_requested"] = summary.k_requested;
  root["sentences"] = ordered_json::array();
  for (const auto& e : summary.entries) {
    ordered_json item;
    item["rank"] = e.rank;
    item["color"] = std::string(to_string(style_for_rank(e.rank).color));
    item["paragraph_index"] = e.paragraph_index;
    item["index_in_paragraph"] = e.index_in_paragraph;
    item["text"] = sentences.at(e.sentence)->text;
    ordered_json score;
    score["position"] = detail::json_number(e.score.position);
    score["theme"] = detail::json_number(e.score.theme);
    score["type_bonus"] = detail::json_number(e.score.type_bonus);
    score["length_penalty"] = detail::json_number(e.score.length_penalty);
    score["total"] = detail::json_number(e.score.total);
    item["score"] = std::move(score);
    root["sentences"].push_back(std::move(item));
  }
  return root.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

inline std::string render(OutputFormat format, const Document& doc, const RankedSummary& summary) {
  switch (format) {
    case OutputFormat::ansi: return render_ansi(doc, summary);
    case OutputFormat::html: return render_html(doc, summary);
    case OutputFormat::json: return render_json(doc, summary);
  }
  return render_ansi(doc, summary);
}

}  // namespace quicksum

#endif  // QUICKSUM_RENDER_HPP
