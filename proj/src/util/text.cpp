#include "diagen/util/text.hpp"

#include <cctype>

namespace diagen::util {

namespace {
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
}  // namespace

std::vector<std::string_view> split_words(std::string_view text) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) words.push_back(text.substr(start, i - start));
  }
  return words;
}

std::string vocab_token(std::string_view word) {
  std::size_t lo = 0, hi = word.size();
  while (lo < hi && !is_alnum(word[lo])) ++lo;
  while (hi > lo && !is_alnum(word[hi - 1])) --hi;
  std::string out;
  out.reserve(hi - lo);
  for (std::size_t i = lo; i < hi; ++i)
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(word[i]))));
  return out;
}

std::vector<std::string> extract_numerals(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_digit(text[i])) {
      ++i;
      continue;
    }
    std::size_t start = i;
    bool negative = false;
    if (start > 0 && text[start - 1] == '-') {
      char before = start >= 2 ? text[start - 2] : '\0';
      if (!is_alnum(before) && before != ')') negative = true;
    }
    while (i < text.size() && is_digit(text[i])) ++i;
    if (i + 1 < text.size() && text[i] == '.' && is_digit(text[i + 1])) {
      ++i;
      while (i < text.size() && is_digit(text[i])) ++i;
    }
    std::string token(text.substr(start, i - start));
    if (negative) token.insert(token.begin(), '-');
    out.push_back(std::move(token));
  }
  return out;
}

std::size_t count_chars(std::string_view text) {
  std::size_t n = 0;
  for (char c : text)
    if (c != '\n' && c != '\r') ++n;
  return n;
}

}  // namespace diagen::util
