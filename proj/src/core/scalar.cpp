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

#include "scalar.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

#include "error.hpp"

namespace ghzpurify {

namespace {

using boost::multiprecision::mpz_int;

mpz_int pow10(unsigned k) {
    mpz_int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= 10;
    }
    return r;
}

Rational parse_decimal(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    std::string digits;
    long exponent = 0;
    bool any_digit = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        digits.push_back(text[i++]);
        any_digit = true;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            digits.push_back(text[i++]);
            --exponent;
            any_digit = true;
        }
    }
    if (!any_digit) {
        fail(ErrorCode::parse, "not a number: '" + std::string(text) + "'");
    }
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        long e = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), e);
        if (ec != std::errc() || ptr == text.data() + i) {
            fail(ErrorCode::parse, "bad exponent in '" + std::string(text) + "'");
        }
        i = static_cast<std::size_t>(ptr - text.data());
        exponent += e;
    }
    if (i != text.size()) {
        fail(ErrorCode::parse, "trailing characters in '" + std::string(text) + "'");
    }
    if (exponent < -4000 || exponent > 4000) {
        fail(ErrorCode::parse, "exponent out of range in '" + std::string(text) + "'");
    }
    auto nz = digits.find_first_not_of('0');
    mpz_int mantissa = nz == std::string::npos ? mpz_int(0) : mpz_int(digits.substr(nz));
    Rational r;
    if (exponent >= 0) {
        r = Rational(mantissa * pow10(static_cast<unsigned>(exponent)));
    } else {
        r = Rational(mantissa, pow10(static_cast<unsigned>(-exponent)));
    }
    return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return parse_decimal(text);
    }
    Rational num = parse_decimal(text.substr(0, slash));
    Rational den = parse_decimal(text.substr(slash + 1));
    if (den == 0) {
        fail(ErrorCode::parse, "zero denominator in '" + std::string(text) + "'");
    }
    return num / den;
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) {
        fail(ErrorCode::invalid_argument, "non-finite value has no rational form");
    }
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    if (ec != std::errc()) {
        fail(ErrorCode::internal, "to_chars failed");
    }
    return parse_decimal(std::string_view(buf.data(), static_cast<std::size_t>(ptr - buf.data())));
}

std::string to_string(const Rational &x) {
    return x.str();
}

}  // namespace ghzpurify
