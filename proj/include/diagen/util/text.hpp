#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace diagen::util {

/// Whitespace-delimited tokens (the word counting rule for corpus stats).
std::vector<std::string_view> split_words(std::string_view text);

/// Lowercased ASCII copy with leading/trailing punctuation stripped; the
/// vocabulary token form. Returns empty when nothing alphanumeric remains.
std::string vocab_token(std::string_view word);

/// Numeric literals appearing in the text, in order. A literal is a digit run
/// with optional single decimal point, plus a leading '-' when it is glued to
/// the digits and not preceded by an alphanumeric/')' character (so "-0.83"
/// and "(2, -3)" keep their sign but "2x - 2" yields "2").
std::vector<std::string> extract_numerals(std::string_view text);

/// Character count excluding line terminators (the char counting rule).
std::size_t count_chars(std::string_view text);

}  // namespace diagen::util
