#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "hyperfields/errors.hpp"
#include "hyperfields/rational.hpp"

// Elements of the four hyperfields this library works with:
//
//   K   Krasner hyperfield {0, 1}
//   S   sign hyperfield {0, +1, -1}
//   T   tropical hyperfield, rational valuations plus infinity
//   TR  signed tropical hyperfield, (sign, valuation) pairs plus infinity
//
// Multiplication is an honest (single-valued) operation and lives here as
// operator*.  Hyperaddition is set-valued and lives in hyperset.hpp.
// Every type is an immutable value with structural equality; the additive
// zero of T and TR is the infinity element, which compares equal only to
// itself.

namespace hf {

// ---------------------------------------------------------------------------
// S
// ---------------------------------------------------------------------------

class SElem {
public:
    constexpr SElem() : v_(0) {}

    static constexpr SElem zero() { return SElem(0); }
    static constexpr SElem one() { return SElem(1); }
    static constexpr SElem minus_one() { return SElem(-1); }
    static SElem of(int v) {
        if (v < -1 || v > 1) throw domain_error("SElem value must be -1, 0 or +1");
        return SElem(v);
    }

    int value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    friend SElem operator*(SElem a, SElem b) { return SElem(a.v_ * b.v_); }
    friend SElem operator-(SElem a) { return SElem(-a.v_); }
    SElem inverse() const {
        if (v_ == 0) throw domain_error("0 has no multiplicative inverse");
        return *this;
    }

    friend bool operator==(SElem, SElem) = default;
    friend auto operator<=>(SElem a, SElem b) { return a.v_ <=> b.v_; }

private:
    explicit constexpr SElem(int v) : v_(v) {}
    int v_;
};

inline std::string to_string(SElem a) {
    return a.value() == 0 ? "0" : (a.value() > 0 ? "+" : "-");
}

// ---------------------------------------------------------------------------
// K
// ---------------------------------------------------------------------------

class KElem {
public:
    constexpr KElem() : v_(false) {}

    static constexpr KElem zero() { return KElem(false); }
    static constexpr KElem one() { return KElem(true); }

    int value() const { return v_ ? 1 : 0; }
    bool is_zero() const { return !v_; }

    friend KElem operator*(KElem a, KElem b) { return KElem(a.v_ && b.v_); }
    friend KElem operator-(KElem a) { return a; }
    KElem inverse() const {
        if (!v_) throw domain_error("0 has no multiplicative inverse");
        return *this;
    }

    friend bool operator==(KElem, KElem) = default;
    friend auto operator<=>(KElem a, KElem b) { return a.v_ <=> b.v_; }

private:
    explicit constexpr KElem(bool v) : v_(v) {}
    bool v_;
};

inline std::string to_string(KElem a) { return a.is_zero() ? "0" : "1"; }

// ---------------------------------------------------------------------------
// T
// ---------------------------------------------------------------------------

class TElem {
public:
    TElem() : finite_(false) {}  // infinity, the additive zero

    static TElem infinity() { return TElem(); }
    static TElem finite(Rat v) {
        TElem e;
        e.finite_ = true;
        e.v_ = std::move(v);
        return e;
    }
    static TElem zero() { return infinity(); }
    static TElem one() { return finite(0); }

    bool is_infinity() const { return !finite_; }
    bool is_zero() const { return !finite_; }
    const Rat& value() const {
        if (!finite_) throw domain_error("infinity has no finite value");
        return v_;
    }

    friend TElem operator*(const TElem& a, const TElem& b) {
        if (!a.finite_ || !b.finite_) return infinity();
        return finite(a.v_ + b.v_);
    }
    friend TElem operator-(const TElem& a) { return a; }  // -a = a over T
    TElem inverse() const {
        if (!finite_) throw domain_error("0 has no multiplicative inverse");
        return finite(-v_);
    }

    friend bool operator==(const TElem& a, const TElem& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
    }
    // Container order only: finite values ascending, infinity last.
    friend bool operator<(const TElem& a, const TElem& b) {
        if (a.finite_ != b.finite_) return a.finite_;
        return a.finite_ && a.v_ < b.v_;
    }

private:
    bool finite_;
    Rat v_;
};

inline std::string to_string(const TElem& a) {
    return a.is_infinity() ? "inf" : to_string(a.value());
}

// ---------------------------------------------------------------------------
// TR
// ---------------------------------------------------------------------------

class TRElem {
public:
    TRElem() : finite_(false), sign_(0) {}  // infinity, the additive zero

    static TRElem infinity() { return TRElem(); }
    static TRElem finite(int sign, Rat valuation) {
        if (sign != 1 && sign != -1) throw domain_error("TRElem sign must be +1 or -1");
        TRElem e;
        e.finite_ = true;
        e.sign_ = sign;
        e.v_ = std::move(valuation);
        return e;
    }
    static TRElem zero() { return infinity(); }
    static TRElem one() { return finite(1, 0); }

    bool is_infinity() const { return !finite_; }
    bool is_zero() const { return !finite_; }
    int sign() const {
        if (!finite_) throw domain_error("infinity has no sign");
        return sign_;
    }
    const Rat& valuation() const {
        if (!finite_) throw domain_error("infinity has no finite valuation");
        return v_;
    }

    friend TRElem operator*(const TRElem& a, const TRElem& b) {
        if (!a.finite_ || !b.finite_) return infinity();
        return finite(a.sign_ * b.sign_, a.v_ + b.v_);
    }
    friend TRElem operator-(const TRElem& a) {
        return a.finite_ ? finite(-a.sign_, a.v_) : a;
    }
    TRElem inverse() const {
        if (!finite_) throw domain_error("0 has no multiplicative inverse");
        return finite(sign_, -v_);
    }

    friend bool operator==(const TRElem& a, const TRElem& b) {
        return a.finite_ == b.finite_ &&
               (!a.finite_ || (a.sign_ == b.sign_ && a.v_ == b.v_));
    }

private:
    bool finite_;
    int sign_;
    Rat v_;
};

// The total order induced by the ordering of the field of real formal series:
// negatives below infinity below positives, and among positives a larger
// valuation means a smaller element.  Equivalent formulation, used by the
// property tests: a < b iff b + (-a) is a positive singleton, or the
// valuations agree and sign(a) < sign(b).
inline bool tr_less(const TRElem& a, const TRElem& b) {
    auto cls = [](const TRElem& x) { return x.is_infinity() ? 0 : x.sign(); };
    int ca = cls(a), cb = cls(b);
    if (ca != cb) return ca < cb;
    if (a.is_infinity()) return false;
    return ca > 0 ? a.valuation() > b.valuation() : a.valuation() < b.valuation();
}

inline bool operator<(const TRElem& a, const TRElem& b) { return tr_less(a, b); }

inline std::string to_string(const TRElem& a) {
    if (a.is_infinity()) return "inf";
    return std::string("(") + (a.sign() > 0 ? "+" : "-") + "," + to_string(a.valuation()) + ")";
}

// ---------------------------------------------------------------------------
// Text forms.  Parsing is the exact inverse of to_string; the S parser also
// accepts the spelled-out "+1"/"-1"/"1".
// ---------------------------------------------------------------------------

template <class E>
E parse_element(std::string_view text, std::size_t line = 1, std::size_t col = 1);

template <>
inline SElem parse_element<SElem>(std::string_view text, std::size_t line, std::size_t col) {
    std::string_view s = detail::trim(text);
    if (s == "+" || s == "+1" || s == "1") return SElem::one();
    if (s == "-" || s == "-1") return SElem::minus_one();
    if (s == "0") return SElem::zero();
    throw parse_error("expected '+', '-' or '0'", line, col);
}

template <>
inline KElem parse_element<KElem>(std::string_view text, std::size_t line, std::size_t col) {
    std::string_view s = detail::trim(text);
    if (s == "0") return KElem::zero();
    if (s == "1") return KElem::one();
    throw parse_error("expected '0' or '1'", line, col);
}

template <>
inline TElem parse_element<TElem>(std::string_view text, std::size_t line, std::size_t col) {
    std::string_view s = detail::trim(text);
    if (s == "inf") return TElem::infinity();
    return TElem::finite(parse_rat(s, line, col));
}

template <>
inline TRElem parse_element<TRElem>(std::string_view text, std::size_t line, std::size_t col) {
    std::string_view s = detail::trim(text);
    if (s == "inf") return TRElem::infinity();
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw parse_error("expected 'inf' or '(sign,valuation)'", line, col);
    std::string_view body = s.substr(1, s.size() - 2);
    std::size_t comma = body.find(',');
    if (comma == std::string_view::npos)
        throw parse_error("expected ',' inside '(...)'", line, col);
    std::string_view sg = detail::trim(body.substr(0, comma));
    int sign;
    if (sg == "+" || sg == "+1" || sg == "1")
        sign = 1;
    else if (sg == "-" || sg == "-1")
        sign = -1;
    else
        throw parse_error("expected sign '+' or '-'", line, col + 1);
    return TRElem::finite(sign, parse_rat(body.substr(comma + 1), line, col + comma + 2));
}

}  // namespace hf
