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

#ifndef FOLKSO_NORMALIZE_HPP
#define FOLKSO_NORMALIZE_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace folkso {

/// A normalized concept term: lowercase, stemmed, free of separator
/// characters and stopwords. Composite terms keep single internal
/// spaces ("south africa").
using Term = std::string;

/// Controls how raw collection/set names become terms.
///
/// Names are split on `separators` only, never on whitespace, so
/// composite terms survive. Each fragment is lowercased, stripped of
/// ASCII punctuation, filtered against `stoplist`, and stemmed word by
/// word. Lowercasing is UTF-8 aware for the Latin-1, Latin Extended-A,
/// Greek and Cyrillic ranges; other codepoints pass through.
struct NormalizerConfig {
  /// Single-byte split characters. Must contain at least & < > : / , ; | ( ).
  std::string separators = "&<>:/,;|()";

  /// Lowercase words dropped from names, matched before and after
  /// stemming. Overridable from a stoplist file.
  std::set<std::string> stoplist = default_stoplist();

  static std::set<std::string> default_stoplist();

  /// Throws ConfigError when the mandatory separators are missing or a
  /// stoplist entry is not lowercase.
  void validate() const;
};

/// Reads a stoplist file: one lowercase word per line, '#' starts a
/// comment, blank lines ignored. Throws InputError on unreadable files.
std::set<std::string> load_stoplist(const std::string& path);

/// Splits a raw name on the configured separator characters. Fragments
/// are trimmed of surrounding whitespace; empty fragments are dropped.
/// Whitespace inside a fragment is preserved.
std::vector<std::string> tokenize(std::string_view name, const NormalizerConfig& cfg);

/// Normalizes one fragment from tokenize: lowercase, strip ASCII
/// non-alphanumerics (keeping single internal spaces), drop stopwords,
/// stem each remaining all-alphabetic word. Returns nullopt when
/// nothing remains.
std::optional<Term> normalize_token(std::string_view token, const NormalizerConfig& cfg);

/// tokenize + normalize_token, deduplicated preserving first occurrence.
std::vector<Term> normalize_name(std::string_view name, const NormalizerConfig& cfg);

/// UTF-8 aware lowercasing (ASCII, Latin-1, Latin Extended-A, Greek,
/// Cyrillic; other codepoints unchanged). Exposed for query-side
/// normalization tests.
std::string utf8_lowercase(std::string_view text);

}  // namespace folkso

#endif  // FOLKSO_NORMALIZE_HPP
