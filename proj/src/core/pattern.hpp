// Copyright 2026 The ghzpurify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ghzpurify {

// Bit-flip error pattern over N parties. Party k lives at bit (N-1-k), so the
// leading bit of the printed string belongs to party A. A pattern and its
// complement denote the same GHZ state; the canonical representative has the
// leading bit clear and doubles as the dense index into ensemble weights.
using Pattern = std::uint32_t;

inline constexpr int kMaxParties = 12;

/// Throws invalid_arity for n < 2 and size_cap for n > kMaxParties.
void check_arity(int n);

inline Pattern full_mask(int n) {
    return (Pattern{1} << n) - 1;
}
inline std::size_t pattern_count(int n) {
    return std::size_t{1} << (n - 1);
}
inline int party_bit(int n, int party) {
    return n - 1 - party;
}

Pattern canonicalize(int n, Pattern raw);
Pattern parity_class(int n, Pattern e, Pattern f);

/// Canonical index of a single bit flip on `party` (0-based).
/// For three parties the flips on A, B, C land at 3, 2, 1.
Pattern single_flip_index(int n, int party);

/// Restriction of a raw pattern to the listed parties (in list order), as a
/// raw |keep|-bit pattern. Not canonicalized.
Pattern restrict_pattern(int n, Pattern raw, const std::vector<int> &keep);

std::string pattern_to_string(int n, Pattern p);

/// Parses a bitstring of '0'/'1'; the string length fixes n.
Pattern pattern_from_string(std::string_view bits);

/// One 'e' or 'o' per party, e.g. "eoe" for class 010.
std::string parity_label(int n, Pattern cls);
/// Both parity readings of a class, e.g. "eeo/ooe".
std::string class_label(int n, Pattern cls);

/// Parties whose class bit is clear (even) or set (odd).
std::vector<int> even_parties(int n, Pattern cls);
std::vector<int> odd_parties(int n, Pattern cls);

}  // namespace ghzpurify
