#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperfields/elements.hpp"

// Set-valued hyperaddition.  Sums over S and K are finite sets; sums over T
// and TR can be infinite, so HyperSet keeps them symbolically:
//
//   finite set             explicit element list
//   ray over T             [a, inf], i.e. every valuation >= a plus infinity
//   balanced ray over TR   {(+-1, t) : t >= r} together with infinity
//
// Iterated hypersums of single elements only ever produce a finite set or a
// pure ray; unions of such sets (the axiom checks take them) may combine a
// finite part with a ray, which the representation handles as well.

namespace hf {

template <class E>
inline constexpr bool has_rays_v = false;
template <>
inline constexpr bool has_rays_v<TElem> = true;
template <>
inline constexpr bool has_rays_v<TRElem> = true;

namespace detail {

inline bool ray_contains(const Rat& bound, const TElem& x) {
    return x.is_infinity() || x.value() >= bound;
}
inline bool ray_contains(const Rat& bound, const TRElem& x) {
    return x.is_infinity() || x.valuation() >= bound;
}

}  // namespace detail

template <class E>
class HyperSet {
public:
    static HyperSet singleton(E x) {
        HyperSet s;
        s.elems_.push_back(std::move(x));
        return s;
    }

    static HyperSet finite(std::vector<E> xs) {
        if (xs.empty()) throw domain_error("a hypersum is never empty");
        HyperSet s;
        s.elems_ = std::move(xs);
        s.canonicalize();
        return s;
    }

    static HyperSet ray(Rat bound) {
        static_assert(has_rays_v<E>, "rays exist only over T and TR");
        HyperSet s;
        s.ray_ = std::move(bound);
        return s;
    }

    bool is_finite() const { return !ray_.has_value(); }
    bool is_ray() const { return ray_.has_value() && elems_.empty(); }
    bool is_singleton() const { return !ray_ && elems_.size() == 1; }

    const std::vector<E>& finite_elements() const { return elems_; }
    const std::optional<Rat>& ray_bound() const { return ray_; }

    bool contains(const E& x) const {
        if constexpr (has_rays_v<E>) {
            if (ray_ && detail::ray_contains(*ray_, x)) return true;
        }
        return std::find(elems_.begin(), elems_.end(), x) != elems_.end();
    }

    bool contains_zero() const { return contains(E::zero()); }

    bool subset_of(const HyperSet& other) const {
        for (const E& x : elems_)
            if (!other.contains(x)) return false;
        if constexpr (has_rays_v<E>) {
            if (ray_) {
                // An infinite ray can only fit inside another ray.
                if (!other.ray_) return false;
                return *other.ray_ <= *ray_;
            }
        }
        return true;
    }

    void unite(const HyperSet& other) {
        elems_.insert(elems_.end(), other.elems_.begin(), other.elems_.end());
        if constexpr (has_rays_v<E>) {
            if (other.ray_ && (!ray_ || *other.ray_ < *ray_)) ray_ = other.ray_;
        }
        canonicalize();
    }

    friend bool operator==(const HyperSet& a, const HyperSet& b) {
        return a.ray_ == b.ray_ && a.elems_ == b.elems_;
    }

private:
    HyperSet() = default;

    void canonicalize() {
        if constexpr (has_rays_v<E>) {
            if (ray_) {
                std::erase_if(elems_, [&](const E& x) { return detail::ray_contains(*ray_, x); });
            }
        }
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
        if (elems_.empty() && !ray_) throw domain_error("a hypersum is never empty");
    }

    std::vector<E> elems_;     // sorted, unique, disjoint from the ray
    std::optional<Rat> ray_;   // over T: [r, inf]; over TR: both signs >= r, plus inf
};

// ---------------------------------------------------------------------------
// Binary hyperaddition
// ---------------------------------------------------------------------------

inline HyperSet<SElem> hyperadd(SElem a, SElem b) {
    if (a.is_zero()) return HyperSet<SElem>::singleton(b);
    if (b.is_zero()) return HyperSet<SElem>::singleton(a);
    if (a == b) return HyperSet<SElem>::singleton(a);
    // +1 boxplus -1 is all of S
    return HyperSet<SElem>::finite({SElem::zero(), SElem::one(), SElem::minus_one()});
}

inline HyperSet<KElem> hyperadd(KElem a, KElem b) {
    if (a.is_zero()) return HyperSet<KElem>::singleton(b);
    if (b.is_zero()) return HyperSet<KElem>::singleton(a);
    return HyperSet<KElem>::finite({KElem::zero(), KElem::one()});
}

inline HyperSet<TElem> hyperadd(const TElem& a, const TElem& b) {
    if (a.is_infinity()) return HyperSet<TElem>::singleton(b);
    if (b.is_infinity()) return HyperSet<TElem>::singleton(a);
    if (a.value() < b.value()) return HyperSet<TElem>::singleton(a);
    if (b.value() < a.value()) return HyperSet<TElem>::singleton(b);
    return HyperSet<TElem>::ray(a.value());
}

inline HyperSet<TRElem> hyperadd(const TRElem& a, const TRElem& b) {
    if (a.is_infinity()) return HyperSet<TRElem>::singleton(b);
    if (b.is_infinity()) return HyperSet<TRElem>::singleton(a);
    if (a.valuation() < b.valuation()) return HyperSet<TRElem>::singleton(a);
    if (b.valuation() < a.valuation()) return HyperSet<TRElem>::singleton(b);
    if (a.sign() == b.sign()) return HyperSet<TRElem>::singleton(a);
    return HyperSet<TRElem>::ray(a.valuation());
}

// ---------------------------------------------------------------------------
// Elementwise extensions.  For the ray part the union collapses in closed
// form: a ray swallows every summand whose valuation is not strictly below
// its bound, and is replaced by the summand's singleton otherwise.  The
// closed forms are cross-checked against grid enumeration in the tests.
// ---------------------------------------------------------------------------

namespace detail {

inline HyperSet<TElem> ray_add(const Rat& bound, const TElem& b) {
    if (!b.is_infinity() && b.value() < bound) return HyperSet<TElem>::singleton(b);
    return HyperSet<TElem>::ray(bound);
}

inline HyperSet<TRElem> ray_add(const Rat& bound, const TRElem& b) {
    if (!b.is_infinity() && b.valuation() < bound) return HyperSet<TRElem>::singleton(b);
    return HyperSet<TRElem>::ray(bound);
}

}  // namespace detail

template <class E>
HyperSet<E> hyperadd(const HyperSet<E>& s, const E& b) {
    std::optional<HyperSet<E>> acc;
    auto add = [&](HyperSet<E> part) {
        if (acc)
            acc->unite(part);
        else
            acc = std::move(part);
    };
    for (const E& x : s.finite_elements()) add(hyperadd(x, b));
    if constexpr (has_rays_v<E>) {
        if (s.ray_bound()) add(detail::ray_add(*s.ray_bound(), b));
    }
    return *acc;
}

template <class E>
HyperSet<E> hyperadd(const E& a, const HyperSet<E>& s) {
    return hyperadd(s, a);
}

template <class E>
HyperSet<E> hyperadd(const HyperSet<E>& s, const HyperSet<E>& t) {
    std::optional<HyperSet<E>> acc;
    auto add = [&](HyperSet<E> part) {
        if (acc)
            acc->unite(part);
        else
            acc = std::move(part);
    };
    for (const E& x : t.finite_elements()) add(hyperadd(s, x));
    if constexpr (has_rays_v<E>) {
        if (t.ray_bound()) {
            const Rat& rb = *t.ray_bound();
            for (const E& x : s.finite_elements()) add(detail::ray_add(rb, x));
            if (s.ray_bound()) add(HyperSet<E>::ray(std::min(*s.ray_bound(), rb)));
        }
    }
    return *acc;
}

// a * S = { a*x : x in S }
template <class E>
HyperSet<E> scale(const E& a, const HyperSet<E>& s) {
    if (a.is_zero()) return HyperSet<E>::singleton(E::zero());
    std::vector<E> elems;
    elems.reserve(s.finite_elements().size());
    for (const E& x : s.finite_elements()) elems.push_back(a * x);
    if constexpr (has_rays_v<E>) {
        if (s.ray_bound()) {
            Rat shift;
            if constexpr (std::is_same_v<E, TElem>)
                shift = a.value();
            else
                shift = a.valuation();
            HyperSet<E> r = HyperSet<E>::ray(*s.ray_bound() + shift);
            if (!elems.empty()) r.unite(HyperSet<E>::finite(std::move(elems)));
            return r;
        }
    }
    return HyperSet<E>::finite(std::move(elems));
}

template <class E>
HyperSet<E> negate(const HyperSet<E>& s) {
    std::vector<E> elems;
    elems.reserve(s.finite_elements().size());
    for (const E& x : s.finite_elements()) elems.push_back(-x);
    if constexpr (has_rays_v<E>) {
        if (s.ray_bound()) {
            HyperSet<E> r = HyperSet<E>::ray(*s.ray_bound());
            if (!elems.empty()) r.unite(HyperSet<E>::finite(std::move(elems)));
            return r;
        }
    }
    return HyperSet<E>::finite(std::move(elems));
}

// a_1 boxplus ... boxplus a_n, folded left through the closed forms.
template <class E>
HyperSet<E> iterated_sum(std::span<const E> terms) {
    if (terms.empty()) throw domain_error("iterated_sum needs at least one term");
    HyperSet<E> acc = HyperSet<E>::singleton(terms[0]);
    for (std::size_t i = 1; i < terms.size(); ++i) acc = hyperadd(acc, terms[i]);
    return acc;
}

template <class E>
HyperSet<E> iterated_sum(const std::vector<E>& terms) {
    return iterated_sum(std::span<const E>(terms));
}

// Zero membership of a TR hypersum without building the set: the minimum
// finite valuation must be attained with both signs (an empty support sums
// to the zero singleton).
inline bool sum_contains_zero(std::span<const TRElem> terms) {
    if (terms.empty()) throw domain_error("sum_contains_zero needs at least one term");
    const Rat* min_val = nullptr;
    bool plus = false, minus = false;
    for (const TRElem& t : terms) {
        if (t.is_infinity()) continue;
        if (!min_val || t.valuation() < *min_val) {
            min_val = &t.valuation();
            plus = t.sign() > 0;
            minus = t.sign() < 0;
        } else if (t.valuation() == *min_val) {
            plus = plus || t.sign() > 0;
            minus = minus || t.sign() < 0;
        }
    }
    if (!min_val) return true;  // all terms are infinity
    return plus && minus;
}

inline bool sum_contains_zero(const std::vector<TRElem>& terms) {
    return sum_contains_zero(std::span<const TRElem>(terms));
}

std::string to_string(const HyperSet<TElem>& s);
std::string to_string(const HyperSet<TRElem>& s);

template <class E>
std::string to_string(const HyperSet<E>& s) {
    std::string out = "{";
    bool first = true;
    for (const E& x : s.finite_elements()) {
        if (!first) out += ", ";
        out += to_string(x);
        first = false;
    }
    if constexpr (has_rays_v<E>) {
        if (s.ray_bound()) {
            if (!first) out += ", ";
            if constexpr (std::is_same_v<E, TElem>)
                out += "[" + to_string(*s.ray_bound()) + ", inf]";
            else
                out += "B(" + to_string(*s.ray_bound()) + ")";
        }
    }
    return out + "}";
}

}  // namespace hf
