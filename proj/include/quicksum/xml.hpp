#ifndef QUICKSUM_XML_HPP
#define QUICKSUM_XML_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quicksum/error.hpp"
#include "quicksum/text.hpp"

// A small non-validating XML reader covering what lexicon files need:
// declaration, comments, processing instructions, elements, attributes,
// character data, CDATA and the predefined/numeric entity references.
// DOCTYPE declarations are rejected.

namespace quicksum::xml {

/// A run of character data. `literal` is false for text produced by entity
/// or character references and CDATA sections; only literal whitespace is
/// insignificant at the edges of an element's text.
struct TextPiece {
  std::string data;
  bool literal = true;
};

struct Element {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<Element> children;
  std::vector<TextPiece> text;
  std::size_t offset = 0;  // byte offset of the opening '<'

  const std::string* attribute(std::string_view key) const {
    for (const auto& [k, v] : attributes)
      if (k == key) return &v;
    return nullptr;
  }

  std::string raw_text() const {
    std::string out;
    for (const auto& p : text) out += p.data;
    return out;
  }

  /// Character data with literal leading/trailing whitespace removed.
  std::string trimmed_text() const {
    std::string all;
    std::vector<bool> soft;
    for (const auto& p : text) {
      all += p.data;
      soft.insert(soft.end(), p.data.size(), p.literal);
    }
    std::size_t b = 0, e = all.size();
    while (b < e && soft[b] && text::is_space(all[b])) ++b;
    while (e > b && soft[e - 1] && text::is_space(all[e - 1])) --e;
    return all.substr(b, e - b);
  }

  bool has_significant_text() const {
    for (const auto& p : text)
      if (!p.literal || !text::is_blank(p.data)) return true;
    return false;
  }
};

struct Position {
  std::size_t line;
  std::size_t column;
};

inline Position position_of(std::string_view source, std::size_t offset) {
  Position pos{1, 1};
  const std::size_t end = offset < source.size() ? offset : source.size();
  for (std::size_t i = 0; i < end; ++i) {
    if (source[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

[[noreturn]] inline void fail_at(std::string_view source, std::size_t offset,
                                 const std::string& message) {
  const auto pos = position_of(source, offset);
  throw ParseError(pos.line, pos.column, message);
}

class Reader {
 public:
  explicit Reader(std::string_view source) : src_(source) {}

  Element parse_document() {
    if (src_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
    skip_misc();
    if (at_end()) fail("missing root element");
    if (starts_with("<!DOCTYPE")) fail("DOCTYPE declarations are not supported");
    if (peek() != '<') fail("expected '<' to open the root element");
    Element root = parse_element();
    skip_misc();
    if (!at_end()) fail("unexpected content after the root element");
    return root;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  bool starts_with(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

  [[noreturn]] void fail(const std::string& message) const { fail_at(src_, pos_, message); }

  void skip_space() {
    while (!at_end() && text::is_space(peek())) ++pos_;
  }

  void skip_until(std::string_view terminator, const char* what) {
    const std::size_t start = pos_;
    const std::size_t found = src_.find(terminator, pos_);
    if (found == std::string_view::npos) fail_at(src_, start, std::string("unterminated ") + what);
    pos_ = found + terminator.size();
  }

  // Whitespace, comments and processing instructions outside the root element.
  void skip_misc() {
    for (;;) {
      skip_space();
      if (starts_with("<?")) {
        skip_until("?>", "processing instruction");
      } else if (starts_with("<!--")) {
        skip_until("-->", "comment");
      } else {
        return;
      }
    }
  }

  static bool is_name_char(char c, bool first) {
    const auto u = static_cast<unsigned char>(c);
    if (text::is_ascii_alpha(c) || c == '_' || c == ':' || u >= 0x80) return true;
    return !first && (text::is_ascii_digit(c) || c == '-' || c == '.');
  }

  std::string parse_name() {
    const std::size_t start = pos_;
    if (at_end() || !is_name_char(peek(), true)) fail("expected a name");
    ++pos_;
    while (!at_end() && is_name_char(peek(), false)) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  void expect(char c) {
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  // At '&'; appends the decoded reference.
  void parse_reference(std::string& out) {
    const std::size_t start = pos_;
    const std::size_t semi = src_.find(';', pos_);
    if (semi == std::string_view::npos || semi - pos_ > 12) fail("malformed entity reference");
    const std::string_view body = src_.substr(pos_ + 1, semi - pos_ - 1);
    pos_ = semi + 1;
    if (body == "lt") out += '<';
    else if (body == "gt") out += '>';
    else if (body == "amp") out += '&';
    else if (body == "quot") out += '"';
    else if (body == "apos") out += '\'';
    else if (body.size() > 1 && body[0] == '#') {
      const bool hex = body[1] == 'x';
      const std::string_view digits = body.substr(hex ? 2 : 1);
      if (digits.empty()) fail_at(src_, start, "empty character reference");
      char32_t cp = 0;
      for (const char c : digits) {
        unsigned v = 0;
        if (text::is_ascii_digit(c)) v = static_cast<unsigned>(c - '0');
        else if (hex && c >= 'a' && c <= 'f') v = static_cast<unsigned>(c - 'a' + 10);
        else if (hex && c >= 'A' && c <= 'F') v = static_cast<unsigned>(c - 'A' + 10);
        else fail_at(src_, start, "invalid character reference");
        cp = cp * (hex ? 16 : 10) + v;
        if (cp > 0x10FFFF) fail_at(src_, start, "character reference out of range");
      }
      if (cp == 0 || (cp >= 0xD800 && cp <= 0xDFFF))
        fail_at(src_, start, "character reference out of range");
      text::append_utf8(out, cp);
    } else {
      fail_at(src_, start, "unknown entity '&" + std::string(body) + ";'");
    }
  }

  std::string parse_attribute_value() {
    if (at_end() || (peek() != '"' && peek() != '\'')) fail("expected a quoted attribute value");
    const char quote = peek();
    ++pos_;
    std::string value;
    while (!at_end() && peek() != quote) {
      if (peek() == '<') fail("'<' is not allowed in attribute values");
      if (peek() == '&') {
        parse_reference(value);
      } else {
        value += peek();
        ++pos_;
      }
    }
    if (at_end()) fail("unterminated attribute value");
    ++pos_;
    return value;
  }

  static void append_text(Element& e, std::string data, bool literal) {
    if (data.empty()) return;
    if (!e.text.empty() && e.text.back().literal == literal) {
      e.text.back().data += data;
    } else {
      e.text.push_back({std::move(data), literal});
    }
  }

  Element parse_element() {
    Element e;
    e.offset = pos_;
    expect('<');
    e.name = parse_name();
    for (;;) {
      const std::size_t before = pos_;
      skip_space();
      if (at_end()) fail("unterminated start tag <" + e.name + ">");
      if (starts_with("/>")) {
        pos_ += 2;
        return e;
      }
      if (peek() == '>') {
        ++pos_;
        break;
      }
      if (pos_ == before) fail("expected whitespace before attribute");
      const std::size_t attr_at = pos_;
      std::string key = parse_name();
      skip_space();
      expect('=');
      skip_space();
      std::string value = parse_attribute_value();
      if (e.attribute(key) != nullptr) fail_at(src_, attr_at, "duplicate attribute '" + key + "'");
      e.attributes.emplace_back(std::move(key), std::move(value));
    }
    for (;;) {
      if (at_end()) fail_at(src_, e.offset, "element <" + e.name + "> is never closed");
      if (starts_with("</")) {
        const std::size_t close_at = pos_;
        pos_ += 2;
        const std::string name = parse_name();
        if (name != e.name)
          fail_at(src_, close_at, "mismatched end tag </" + name + ">, expected </" + e.name + ">");
        skip_space();
        expect('>');
        return e;
      }
      if (starts_with("<!--")) {
        skip_until("-->", "comment");
      } else if (starts_with("<![CDATA[")) {
        const std::size_t start = pos_;
        pos_ += 9;
        const std::size_t end = src_.find("]]>", pos_);
        if (end == std::string_view::npos) fail_at(src_, start, "unterminated CDATA section");
        append_text(e, std::string(src_.substr(pos_, end - pos_)), false);
        pos_ = end + 3;
      } else if (starts_with("<?")) {
        skip_until("?>", "processing instruction");
      } else if (starts_with("<!")) {
        fail("unsupported markup declaration");
      } else if (peek() == '<') {
        e.children.push_back(parse_element());
      } else if (peek() == '&') {
        std::string decoded;
        parse_reference(decoded);
        append_text(e, std::move(decoded), false);
      } else {
        const std::size_t start = pos_;
        while (!at_end() && peek() != '<' && peek() != '&') ++pos_;
        append_text(e, std::string(src_.substr(start, pos_ - start)), true);
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

inline Element parse(std::string_view source) { return Reader(source).parse_document(); }

/// Escapes markup characters. Leading/trailing whitespace and carriage
/// returns are written as character references so they survive a reader
/// that trims literal edge whitespace.
inline std::string escape_text(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && text::is_space(s[b])) ++b;
  while (e > b && text::is_space(s[e - 1])) --e;
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    const bool edge = i < b || i >= e;
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '\r': out += "&#xD;"; break;
      default:
        if (edge) {
          static constexpr char kHex[] = "0123456789ABCDEF";
          out += "&#x";
          out += kHex[(static_cast<unsigned char>(c) >> 4) & 0xF];
          out += kHex[static_cast<unsigned char>(c) & 0xF];
          out += ';';
        } else {
          out += c;
        }
    }
  }
  return out;
}

inline std::string escape_attribute(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\t': out += "&#x9;"; break;
      case '\n': out += "&#xA;"; break;
      case '\r': out += "&#xD;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace quicksum::xml

#endif  // QUICKSUM_XML_HPP
