#include "wdaug/text.hpp"

#include <cctype>
#include <cstdint>

namespace wdaug::text {
namespace {

bool is_unicode_space(char32_t cp) {
  switch (cp) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case 0x0B:
    case 0x0C:
    case 0x85:    // NEL
    case 0xA0:    // NBSP
    case 0x1680:  // ogham space mark
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:  // ideographic space
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_strippable_punct(char32_t cp) {
  if (cp < 0x80) {
    return std::ispunct(static_cast<int>(cp)) != 0;
  }
  switch (cp) {
    case 0x2018:  // curly quotes
    case 0x2019:
    case 0x201C:
    case 0x201D:
    case 0x2013:  // dashes
    case 0x2014:
    case 0x2026:  // ellipsis
    case 0xAB:    // guillemets
    case 0xBB:
    case 0xBF:
    case 0xA1:
      return true;
    default:
      return false;
  }
}

// Decodes one UTF-8 code point at `i`, advancing `i`. Malformed bytes are
// passed through as single-byte code points.
char32_t decode_utf8(std::string_view s, std::size_t& i) {
  const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
  const unsigned char b0 = byte(i);
  std::size_t len = 1;
  char32_t cp = b0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  }
  if (len == 1 || i + len > s.size()) {
    ++i;
    return b0;
  }
  for (std::size_t k = 1; k < len; ++k) {
    if ((byte(i + k) & 0xC0) != 0x80) {
      ++i;
      return b0;
    }
    cp = (cp << 6) | (byte(i + k) & 0x3F);
  }
  i += len;
  return cp;
}

struct CodePoint {
  char32_t cp;
  std::size_t offset;  // byte offset in the source
  std::size_t length;  // byte length
};

std::vector<CodePoint> decode_all(std::string_view s) {
  std::vector<CodePoint> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const std::size_t start = i;
    const char32_t cp = decode_utf8(s, i);
    out.push_back({cp, start, i - start});
  }
  return out;
}

std::string strip_token(std::string_view raw) {
  const auto cps = decode_all(raw);
  std::size_t begin = 0;
  std::size_t end = cps.size();
  while (begin < end && is_strippable_punct(cps[begin].cp)) ++begin;
  while (end > begin && is_strippable_punct(cps[end - 1].cp)) --end;
  if (begin >= end) return {};
  const std::size_t from = cps[begin].offset;
  const std::size_t to = cps[end - 1].offset + cps[end - 1].length;
  return std::string(raw.substr(from, to - from));
}

}  // namespace

std::vector<std::string> tokenize(std::string_view input) {
  const std::string lowered = to_lower_ascii(input);
  std::vector<std::string> tokens;
  std::size_t i = 0;
  std::size_t word_start = std::string::npos;
  const std::string_view s = lowered;
  while (i <= s.size()) {
    bool boundary = true;
    std::size_t next = i;
    if (i < s.size()) {
      const char32_t cp = decode_utf8(s, next);
      boundary = is_unicode_space(cp);
    } else {
      next = i + 1;
    }
    if (boundary) {
      if (word_start != std::string::npos) {
        std::string tok = strip_token(s.substr(word_start, i - word_start));
        if (!tok.empty()) tokens.push_back(std::move(tok));
        word_start = std::string::npos;
      }
    } else if (word_start == std::string::npos) {
      word_start = i;
    }
    i = next;
  }
  return tokens;
}

std::string detokenize(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& tok : tokens) {
    if (!out.empty()) out += ' ';
    out += tok;
  }
  return out;
}

std::string normalize_whitespace(std::string_view input) {
  std::string out;
  out.reserve(input.size());
  std::size_t i = 0;
  bool pending_space = false;
  while (i < input.size()) {
    const std::size_t start = i;
    const char32_t cp = decode_utf8(input, i);
    if (is_unicode_space(cp)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) {
        out += ' ';
        pending_space = false;
      }
      out.append(input.substr(start, i - start));
    }
  }
  return out;
}

std::string to_lower_ascii(std::string_view input) {
  std::string out(input);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string trim(std::string_view input) {
  std::size_t b = 0;
  std::size_t e = input.size();
  while (b < e && std::isspace(static_cast<unsigned char>(input[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(input[e - 1]))) --e;
  return std::string(input.substr(b, e - b));
}

bool normalized_equal(std::string_view a, std::string_view b) {
  return to_lower_ascii(normalize_whitespace(a)) == to_lower_ascii(normalize_whitespace(b));
}

}  // namespace wdaug::text
