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

#include "pattern.hpp"

#include "error.hpp"

namespace ghzpurify {

void check_arity(int n) {
    if (n < 2) {
        fail(ErrorCode::invalid_arity, "need at least 2 parties, got " + std::to_string(n));
    }
    if (n > kMaxParties) {
        fail(ErrorCode::size_cap, "at most " + std::to_string(kMaxParties) + " parties supported, got " + std::to_string(n));
    }
}

Pattern canonicalize(int n, Pattern raw) {
    check_arity(n);
    if (raw > full_mask(n)) {
        fail(ErrorCode::invalid_argument, "pattern has more than " + std::to_string(n) + " bits");
    }
    if (raw >> (n - 1)) {
        return raw ^ full_mask(n);
    }
    return raw;
}

Pattern parity_class(int n, Pattern e, Pattern f) {
    return canonicalize(n, canonicalize(n, e) ^ canonicalize(n, f));
}

Pattern single_flip_index(int n, int party) {
    check_arity(n);
    if (party < 0 || party >= n) {
        fail(ErrorCode::invalid_argument, "party index out of range");
    }
    return canonicalize(n, Pattern{1} << party_bit(n, party));
}

Pattern restrict_pattern(int n, Pattern raw, const std::vector<int> &keep) {
    Pattern out = 0;
    for (int party : keep) {
        if (party < 0 || party >= n) {
            fail(ErrorCode::invalid_subset, "party index out of range");
        }
        out = (out << 1) | ((raw >> party_bit(n, party)) & 1);
    }
    return out;
}

std::string pattern_to_string(int n, Pattern p) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int k = 0; k < n; ++k) {
        if ((p >> party_bit(n, k)) & 1) {
            s[static_cast<std::size_t>(k)] = '1';
        }
    }
    return s;
}

Pattern pattern_from_string(std::string_view bits) {
    int n = static_cast<int>(bits.size());
    check_arity(n);
    Pattern p = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            fail(ErrorCode::parse, "bad pattern '" + std::string(bits) + "'");
        }
        p = (p << 1) | static_cast<Pattern>(c == '1');
    }
    return p;
}

std::string parity_label(int n, Pattern cls) {
    std::string s = pattern_to_string(n, canonicalize(n, cls));
    for (char &c : s) {
        c = c == '0' ? 'e' : 'o';
    }
    return s;
}

std::string class_label(int n, Pattern cls) {
    std::string a = parity_label(n, cls);
    std::string b = a;
    for (char &c : b) {
        c = c == 'e' ? 'o' : 'e';
    }
    return a + "/" + b;
}

std::vector<int> even_parties(int n, Pattern cls) {
    std::vector<int> out;
    for (int k = 0; k < n; ++k) {
        if (!((cls >> party_bit(n, k)) & 1)) {
            out.push_back(k);
        }
    }
    return out;
}

std::vector<int> odd_parties(int n, Pattern cls) {
    std::vector<int> out;
    for (int k = 0; k < n; ++k) {
        if ((cls >> party_bit(n, k)) & 1) {
            out.push_back(k);
        }
    }
    return out;
}

}  // namespace ghzpurify
