#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace appdesc {

/// Decodes one UTF-8 code point starting at pos and advances pos past it.
/// Returns nullopt on malformed input, leaving pos at the offending byte.
std::optional<char32_t> decode_utf8(std::string_view text, std::size_t& pos);

/// Throws errc::bad_encoding with the byte offset of the first invalid byte.
void require_utf8(std::string_view text);

/// Letter-or-digit test for the first character of a token. Covers ASCII
/// alphanumerics plus the common letter blocks (Latin supplements, Greek,
/// Cyrillic, Arabic, CJK, kana, Hangul) and the Arabic-Indic digits; a
/// pragmatic subset rather than the full Unicode property tables.
bool is_word_start(char32_t cp);

std::string to_lower(std::string_view s);  // ASCII-only lowering

std::string_view trim(std::string_view s);

/// True when the line is empty or contains only ASCII whitespace.
bool is_blank(std::string_view line);

/// Splits on '\n'. "a\nb\n" yields {"a", "b", ""}; "" yields {""}.
std::vector<std::string_view> split_lines(std::string_view text);

bool starts_with_ci(std::string_view text, std::string_view prefix);
bool ends_with(std::string_view text, std::string_view suffix);
bool contains_ci(std::string_view text, std::string_view needle);

}  // namespace appdesc
