#include "idr/normalize.hpp"

#include <cstdint>

#include "csv.hpp"

namespace idr {

namespace {

bool in_strip_set(char c) {
  switch (c) {
    case '.':
    case ',':
    case ';':
    case ':':
    case '(':
    case ')':
    case '[':
    case ']':
    case '&':
    case '-':
      return true;
    default:
      return false;
  }
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Lowercases one code point and appends it as UTF-8. Handles ASCII, the
// Latin-1 supplement and Latin Extended-A; anything else is copied verbatim.
void append_lowered(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    if (cp >= 'A' && cp <= 'Z') cp += 0x20;
    out += static_cast<char>(cp);
    return;
  }
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) {
    cp += 0x20;  // À-Þ -> à-þ, skipping ×
  } else if (cp >= 0x100 && cp <= 0x177 && cp % 2 == 0) {
    cp += 1;  // Latin Extended-A upper/lower pairs
  } else if (cp >= 0x179 && cp <= 0x17D && cp % 2 == 1) {
    cp += 1;
  }
  if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// Decodes the next UTF-8 code point; malformed bytes are passed through as
// single code points so normalization never fails.
std::uint32_t next_code_point(std::string_view s, std::size_t& i) {
  auto byte = [&](std::size_t k) { return static_cast<std::uint8_t>(s[k]); };
  std::uint8_t b0 = byte(i);
  if (b0 < 0x80) {
    i += 1;
    return b0;
  }
  auto cont = [&](std::size_t k) {
    return k < s.size() && (byte(k) & 0xC0) == 0x80;
  };
  if ((b0 & 0xE0) == 0xC0 && cont(i + 1)) {
    std::uint32_t cp = (std::uint32_t(b0 & 0x1F) << 6) | (byte(i + 1) & 0x3F);
    i += 2;
    return cp;
  }
  if ((b0 & 0xF0) == 0xE0 && cont(i + 1) && cont(i + 2)) {
    std::uint32_t cp = (std::uint32_t(b0 & 0x0F) << 12) |
                       (std::uint32_t(byte(i + 1) & 0x3F) << 6) | (byte(i + 2) & 0x3F);
    i += 3;
    return cp;
  }
  if ((b0 & 0xF8) == 0xF0 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
    std::uint32_t cp = (std::uint32_t(b0 & 0x07) << 18) |
                       (std::uint32_t(byte(i + 1) & 0x3F) << 12) |
                       (std::uint32_t(byte(i + 2) & 0x3F) << 6) | (byte(i + 3) & 0x3F);
    i += 4;
    return cp;
  }
  i += 1;
  return b0;
}

}  // namespace

std::string normalize_title(std::string_view raw) {
  std::string lowered;
  lowered.reserve(raw.size());
  std::size_t i = 0;
  while (i < raw.size()) {
    std::uint32_t cp = next_code_point(raw, i);
    if (cp < 0x80 && in_strip_set(static_cast<char>(cp))) {
      lowered += ' ';
    } else {
      append_lowered(lowered, cp);
    }
  }

  std::string out;
  out.reserve(lowered.size());
  bool pending_space = false;
  for (char c : lowered) {
    if (is_space(c)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out += ' ';
      pending_space = false;
      out += c;
    }
  }
  return out;
}

bool AbbrevMap::insert(const std::string& abbrev, const std::string& full) {
  if (abbrev == full) return false;
  return entries_.emplace(abbrev, full).second;
}

const std::string& AbbrevMap::expand(const std::string& title) const {
  auto it = entries_.find(title);
  return it == entries_.end() ? title : it->second;
}

AbbrevLoadResult load_abbreviation_map(const std::filesystem::path& path, char delimiter) {
  auto in = detail::open_table(path);
  AbbrevLoadResult result;

  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("abbreviation map is empty (header row required): " + path.string());
  }

  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    auto fields = detail::split_delimited(line, delimiter);
    if (fields.size() != 2) {
      result.warnings.add("abbrev-map", "row " + std::to_string(row) + ": expected 2 columns, got " +
                                            std::to_string(fields.size()) + ", skipped");
      continue;
    }
    std::string abbrev = normalize_title(fields[0]);
    std::string full = normalize_title(fields[1]);
    if (abbrev.empty() || full.empty()) {
      result.warnings.add("abbrev-map",
                          "row " + std::to_string(row) + ": empty key after normalization, skipped");
      continue;
    }
    if (abbrev == full) continue;  // self-map after canonicalization
    if (!result.map.insert(abbrev, full)) {
      result.warnings.add("abbrev-map", "row " + std::to_string(row) + ": duplicate key '" +
                                            abbrev + "', first mapping kept");
    }
  }
  return result;
}

}  // namespace idr
