#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace textknn {

/// A tokenizer maps raw UTF-8 text to an ordered token sequence.
using Tokenizer = std::function<std::vector<std::string>(std::string_view)>;

/// Splits on Unicode whitespace and lowercases ASCII letters.
std::vector<std::string> tokenize_whitespace(std::string_view text);

/// One token per non-whitespace code point (for unsegmented CJK text).
/// ASCII letters are lowercased.
std::vector<std::string> tokenize_chars(std::string_view text);

/// Looks up a tokenizer by name: "whitespace" or "char".
/// Throws ConfigError for unknown names.
Tokenizer tokenizer_by_name(const std::string& name);

/// Applies a tokenizer. Deterministic for a given (text, tokenizer) pair.
inline std::vector<std::string> tokenize(std::string_view text, const Tokenizer& tok) {
  return tok(text);
}

namespace detail {
/// Decodes the code point starting at text[pos]; advances pos past it.
/// Malformed bytes are consumed one at a time and returned verbatim.
char32_t next_code_point(std::string_view text, std::size_t& pos);
bool is_unicode_space(char32_t cp);
}  // namespace detail

}  // namespace textknn
