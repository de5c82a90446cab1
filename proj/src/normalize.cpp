// Copyright 2026 The folkso Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "folkso/normalize.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>

#include "folkso/errors.hpp"
#include "folkso/porter.hpp"

namespace folkso {
namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string_view trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_ascii_space(s[b])) b++;
  while (e > b && is_ascii_space(s[e - 1])) e--;
  return s.substr(b, e - b);
}

// Decodes one UTF-8 codepoint starting at i; advances i. Invalid bytes
// are returned as-is (one byte at a time) so malformed input survives
// the round trip instead of corrupting neighbors.
std::uint32_t decode_utf8(std::string_view s, std::size_t& i) {
  unsigned char c0 = static_cast<unsigned char>(s[i]);
  if (c0 < 0x80) {
    i += 1;
    return c0;
  }
  int len = 0;
  std::uint32_t cp = 0;
  if ((c0 & 0xE0) == 0xC0) {
    len = 2;
    cp = c0 & 0x1F;
  } else if ((c0 & 0xF0) == 0xE0) {
    len = 3;
    cp = c0 & 0x0F;
  } else if ((c0 & 0xF8) == 0xF0) {
    len = 4;
    cp = c0 & 0x07;
  } else {
    i += 1;
    return 0x10000000u | c0;  // marker: raw byte passthrough
  }
  if (i + static_cast<std::size_t>(len) > s.size()) {
    i += 1;
    return 0x10000000u | c0;
  }
  for (int k = 1; k < len; k++) {
    unsigned char ck = static_cast<unsigned char>(s[i + static_cast<std::size_t>(k)]);
    if ((ck & 0xC0) != 0x80) {
      i += 1;
      return 0x10000000u | c0;
    }
    cp = (cp << 6) | (ck & 0x3F);
  }
  i += static_cast<std::size_t>(len);
  return cp;
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp & 0x10000000u) {  // raw byte passthrough
    out.push_back(static_cast<char>(cp & 0xFF));
    return;
  }
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

std::uint32_t lower_codepoint(std::uint32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  // Latin-1 supplement uppercase, minus the multiplication sign.
  if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
  // Latin Extended-A comes in upper/lower pairs.
  if ((cp >= 0x0100 && cp <= 0x0137) || (cp >= 0x014A && cp <= 0x0177)) {
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  if (cp >= 0x0139 && cp <= 0x0148) {
    return (cp % 2 == 1) ? cp + 1 : cp;
  }
  if (cp == 0x0178) return 0x00FF;  // Y with diaeresis
  if (cp >= 0x0179 && cp <= 0x017E) {
    return (cp % 2 == 1) ? cp + 1 : cp;
  }
  // Greek and Cyrillic basic ranges.
  if ((cp >= 0x0391 && cp <= 0x03A1) || (cp >= 0x03A3 && cp <= 0x03AB)) return cp + 0x20;
  if (cp >= 0x0410 && cp <= 0x042F) return cp + 0x20;
  if (cp >= 0x0400 && cp <= 0x040F) return cp + 0x50;
  return cp;
}

bool all_ascii_alpha(std::string_view word) {
  return !word.empty() &&
         std::all_of(word.begin(), word.end(), [](char c) {
           return c >= 'a' && c <= 'z';
         });
}

}  // namespace

std::set<std::string> NormalizerConfig::default_stoplist() {
  return {"me", "myself", "my", "i",  "our", "your",  "the",  "a",    "an",
          "of", "in",     "on", "at", "and", "or",    "misc", "other", "stuff"};
}

void NormalizerConfig::validate() const {
  static constexpr std::string_view kRequired = "&<>:/,;|()";
  for (char c : kRequired) {
    if (separators.find(c) == std::string::npos) {
      throw ConfigError(std::string("separator set must include '") + c + "'");
    }
  }
  for (const auto& w : stoplist) {
    if (w.empty() || w != utf8_lowercase(w)) {
      throw ConfigError("stoplist entries must be non-empty lowercase words: '" + w + "'");
    }
  }
}

std::set<std::string> load_stoplist(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open stoplist file: " + path);
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto word = trim(line);
    if (!word.empty()) words.emplace(word);
  }
  return words;
}

std::string utf8_lowercase(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    append_utf8(out, lower_codepoint(decode_utf8(text, i)));
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view name, const NormalizerConfig& cfg) {
  std::vector<std::string> fragments;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= name.size(); i++) {
    bool split = i == name.size() || cfg.separators.find(name[i]) != std::string::npos;
    if (!split) continue;
    auto fragment = trim(name.substr(start, i - start));
    if (!fragment.empty()) fragments.emplace_back(fragment);
    start = i + 1;
  }
  return fragments;
}

std::optional<Term> normalize_token(std::string_view token, const NormalizerConfig& cfg) {
  std::string lowered = utf8_lowercase(token);

  // Strip ASCII non-alphanumerics; runs of whitespace collapse to one
  // space. Non-ASCII codepoints are kept (they are letters in the
  // corpus languages).
  std::string stripped;
  stripped.reserve(lowered.size());
  std::size_t i = 0;
  while (i < lowered.size()) {
    std::size_t before = i;
    std::uint32_t cp = decode_utf8(lowered, i);
    bool keep;
    if (cp < 0x80) {
      char c = static_cast<char>(cp);
      if (is_ascii_space(c)) {
        if (!stripped.empty() && stripped.back() != ' ') stripped.push_back(' ');
        continue;
      }
      keep = std::isalnum(static_cast<unsigned char>(c)) != 0;
    } else if (cp == 0x00A0) {  // no-break space, common in scraped names
      if (!stripped.empty() && stripped.back() != ' ') stripped.push_back(' ');
      continue;
    } else {
      keep = true;
    }
    if (keep) stripped.append(lowered, before, i - before);
  }
  while (!stripped.empty() && stripped.back() == ' ') stripped.pop_back();

  // Word-wise stoplist filter and stemming. The filter runs again after
  // stemming so a stem that lands on a stopword ("others" -> "other")
  // never reaches the output.
  std::string result;
  std::size_t pos = 0;
  while (pos < stripped.size()) {
    std::size_t space = stripped.find(' ', pos);
    if (space == std::string::npos) space = stripped.size();
    std::string word = stripped.substr(pos, space - pos);
    pos = space + 1;
    if (word.empty() || cfg.stoplist.count(word)) continue;
    if (all_ascii_alpha(word)) word = porter_stem(word);
    if (cfg.stoplist.count(word)) continue;
    if (!result.empty()) result.push_back(' ');
    result += word;
  }
  if (result.empty()) return std::nullopt;
  return result;
}

std::vector<Term> normalize_name(std::string_view name, const NormalizerConfig& cfg) {
  std::vector<Term> terms;
  for (const auto& fragment : tokenize(name, cfg)) {
    auto term = normalize_token(fragment, cfg);
    if (!term) continue;
    if (std::find(terms.begin(), terms.end(), *term) == terms.end()) {
      terms.push_back(std::move(*term));
    }
  }
  return terms;
}

}  // namespace folkso
