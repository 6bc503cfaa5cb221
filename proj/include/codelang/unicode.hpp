#ifndef CODELANG_UNICODE_HPP
#define CODELANG_UNICODE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace codelang::unicode {

inline constexpr char32_t kReplacement = 0xFFFD;

/// Decodes UTF-8. Every byte that does not start a well-formed sequence
/// becomes one U+FFFD.
inline std::vector<char32_t> decode_utf8(std::string_view bytes) {
  std::vector<char32_t> out;
  out.reserve(bytes.size());
  const auto* s = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::size_t n = bytes.size();
  std::size_t i = 0;
  auto cont = [&](std::size_t k) { return k < n && (s[k] & 0xC0) == 0x80; };
  while (i < n) {
    unsigned char c = s[i];
    if (c < 0x80) {
      out.push_back(c);
      ++i;
      continue;
    }
    char32_t cp = 0;
    std::size_t len = 0;
    if (c >= 0xC2 && c <= 0xDF) {
      len = 2;
      cp = c & 0x1F;
    } else if (c >= 0xE0 && c <= 0xEF) {
      len = 3;
      cp = c & 0x0F;
    } else if (c >= 0xF0 && c <= 0xF4) {
      len = 4;
      cp = c & 0x07;
    }
    bool ok = len != 0;
    for (std::size_t k = 1; ok && k < len; ++k) {
      ok = cont(i + k);
      if (ok) cp = (cp << 6) | (s[i + k] & 0x3F);
    }
    if (ok) {
      // Reject overlongs, surrogates and values past U+10FFFF.
      if ((len == 3 && cp < 0x800) || (len == 4 && (cp < 0x10000 || cp > 0x10FFFF)) ||
          (cp >= 0xD800 && cp <= 0xDFFF))
        ok = false;
    }
    if (!ok) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

inline void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

enum class CharClass : std::uint8_t { Letter, Digit, Newline, Space, Punct };

namespace detail {

struct Range {
  char32_t lo, hi;
};

// Alphabetic code points outside ASCII: letters, combining marks and
// non-ASCII numerals of the major scripts.
inline constexpr std::array kLetterRanges{
    Range{0x00AA, 0x00AA}, Range{0x00B5, 0x00B5}, Range{0x00BA, 0x00BA},
    Range{0x00C0, 0x00D6}, Range{0x00D8, 0x00F6}, Range{0x00F8, 0x02FF},
    Range{0x0300, 0x036F}, Range{0x0370, 0x037D}, Range{0x037F, 0x0386},
    Range{0x0388, 0x03FF}, Range{0x0400, 0x0482}, Range{0x0483, 0x052F},
    Range{0x0531, 0x0556}, Range{0x0561, 0x0587}, Range{0x05B0, 0x05C7},
    Range{0x05D0, 0x05F2}, Range{0x0610, 0x061A}, Range{0x0620, 0x0669},
    Range{0x066E, 0x06D3}, Range{0x06D5, 0x06FF}, Range{0x0900, 0x0963},
    Range{0x0966, 0x0DFF}, Range{0x0E01, 0x0E4E}, Range{0x0E50, 0x0EFF},
    Range{0x10A0, 0x10FF}, Range{0x1100, 0x11FF}, Range{0x1E00, 0x1FBC},
    Range{0x1FC2, 0x1FCC}, Range{0x1FD0, 0x1FDB}, Range{0x1FE0, 0x1FEC},
    Range{0x1FF2, 0x1FFC}, Range{0x3041, 0x30FA}, Range{0x30FC, 0x30FF},
    Range{0x3400, 0x4DBF}, Range{0x4E00, 0x9FFF}, Range{0xAC00, 0xD7A3},
    Range{0xF900, 0xFAFF}, Range{0xFF10, 0xFF19}, Range{0xFF21, 0xFF3A},
    Range{0xFF41, 0xFF5A}, Range{0x20000, 0x2FA1F},
};

inline constexpr std::array kSpaceRanges{
    Range{0x0085, 0x0085}, Range{0x00A0, 0x00A0}, Range{0x1680, 0x1680},
    Range{0x2000, 0x200A}, Range{0x2028, 0x2029}, Range{0x202F, 0x202F},
    Range{0x205F, 0x205F}, Range{0x3000, 0x3000}, Range{0xFEFF, 0xFEFF},
};

template <std::size_t N>
constexpr bool in_ranges(const std::array<Range, N>& ranges, char32_t cp) {
  auto it = std::upper_bound(ranges.begin(), ranges.end(), cp,
                             [](char32_t v, const Range& r) { return v < r.lo; });
  return it != ranges.begin() && cp <= std::prev(it)->hi;
}

}  // namespace detail

inline CharClass classify(char32_t cp) noexcept {
  if (cp < 0x80) {
    if (cp == '\n' || cp == '\r') return CharClass::Newline;
    if (cp == ' ' || cp == '\t' || cp == '\v' || cp == '\f') return CharClass::Space;
    if (cp >= '0' && cp <= '9') return CharClass::Digit;
    if (cp == '_' || (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) return CharClass::Letter;
    return CharClass::Punct;
  }
  if (detail::in_ranges(detail::kSpaceRanges, cp)) return CharClass::Space;
  if (detail::in_ranges(detail::kLetterRanges, cp)) return CharClass::Letter;
  return CharClass::Punct;
}

/// Simple one-to-one lowercase mapping for ASCII, Latin-1, Latin Extended-A,
/// Greek and Cyrillic. Everything else maps to itself.
inline char32_t to_lower(char32_t cp) noexcept {
  if (cp < 0x80) return (cp >= 'A' && cp <= 'Z') ? cp + 0x20 : cp;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  if (cp >= 0x100 && cp <= 0x17F) {
    if (cp == 0x130) return 'i';
    if (cp == 0x178) return 0xFF;
    bool odd_upper = (cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E);
    if (odd_upper) return (cp & 1) ? cp + 1 : cp;
    if (cp == 0x138 || cp == 0x149 || cp == 0x17F) return cp;
    return (cp & 1) ? cp : cp + 1;
  }
  if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  return cp;
}

}  // namespace codelang::unicode

#endif  // CODELANG_UNICODE_HPP
