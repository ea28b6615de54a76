#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "hyperfields/errors.hpp"

namespace hf {

// All valuations, exponents and coefficients in this library are exact
// rationals.  cpp_rational keeps the canonical form (gcd 1, positive
// denominator) for us; nothing here ever rounds.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Rat& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

// "3/2", "-1", "0".  Integers print without the "/1".
inline std::string to_string(const Rat& r) { return r.str(); }

namespace detail {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace detail

// Inverse of to_string; also accepts a leading '+'.
inline Rat parse_rat(std::string_view text, std::size_t line = 1, std::size_t col = 1) {
    std::string_view s = detail::trim(text);
    if (s.empty()) throw parse_error("expected a rational number", line, col);
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < s.size() && detail::is_digit(s[i])) ++i, ++digits;
    if (digits == 0) throw parse_error("expected digits in rational number", line, col);
    if (i < s.size()) {
        if (s[i] != '/')
            throw parse_error("unexpected character in rational number", line, col + i);
        ++i;
        digits = 0;
        while (i < s.size() && detail::is_digit(s[i])) ++i, ++digits;
        if (digits == 0 || i != s.size())
            throw parse_error("malformed denominator", line, col + i);
    }
    std::string cleaned(s[0] == '+' ? s.substr(1) : s);
    if (cleaned.find('/') != std::string::npos &&
        Int(cleaned.substr(cleaned.find('/') + 1)) == 0)
        throw parse_error("zero denominator", line, col);
    return Rat(cleaned);
}

}  // namespace hf
