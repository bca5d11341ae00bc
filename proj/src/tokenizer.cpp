#include "textknn/tokenizer.hpp"

#include <cctype>

#include "textknn/errors.hpp"

namespace textknn {

namespace detail {

bool is_unicode_space(char32_t cp) {
  switch (cp) {
    case U'\t': case U'\n': case U'\v': case U'\f': case U'\r': case U' ':
    case 0x0085: case 0x00A0: case 0x1680:
    case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

char32_t next_code_point(std::string_view text, std::size_t& pos) {
  const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };
  const unsigned char b0 = byte(pos);
  std::size_t len = 1;
  char32_t cp = b0;
  if (b0 >= 0xF0)      { len = 4; cp = b0 & 0x07u; }
  else if (b0 >= 0xE0) { len = 3; cp = b0 & 0x0Fu; }
  else if (b0 >= 0xC0) { len = 2; cp = b0 & 0x1Fu; }
  else if (b0 >= 0x80) { ++pos; return b0; }  // stray continuation byte
  if (len == 1) { ++pos; return cp; }
  if (pos + len > text.size()) { ++pos; return b0; }
  for (std::size_t i = 1; i < len; ++i) {
    const unsigned char b = byte(pos + i);
    if ((b & 0xC0u) != 0x80u) { ++pos; return b0; }
    cp = (cp << 6) | (b & 0x3Fu);
  }
  pos += len;
  return cp;
}

namespace {

void append_code_point(std::string& out, std::string_view text, std::size_t begin, std::size_t end,
                       char32_t cp) {
  if (cp < 0x80 && std::isupper(static_cast<int>(cp))) {
    out.push_back(static_cast<char>(std::tolower(static_cast<int>(cp))));
  } else {
    out.append(text.substr(begin, end - begin));
  }
}

}  // namespace
}  // namespace detail

std::vector<std::string> tokenize_whitespace(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t begin = pos;
    const char32_t cp = detail::next_code_point(text, pos);
    if (detail::is_unicode_space(cp)) {
      if (!current.empty()) tokens.push_back(std::move(current)), current.clear();
    } else {
      detail::append_code_point(current, text, begin, pos, cp);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::vector<std::string> tokenize_chars(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t begin = pos;
    const char32_t cp = detail::next_code_point(text, pos);
    if (detail::is_unicode_space(cp)) continue;
    std::string token;
    detail::append_code_point(token, text, begin, pos, cp);
    tokens.push_back(std::move(token));
  }
  return tokens;
}

Tokenizer tokenizer_by_name(const std::string& name) {
  if (name == "whitespace") return tokenize_whitespace;
  if (name == "char") return tokenize_chars;
  throw ConfigError("unknown tokenizer: " + name);
}

}  // namespace textknn
