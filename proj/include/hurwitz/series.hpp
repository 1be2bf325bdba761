#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/rings.hpp"

namespace hurwitz {

/// Order of a series: the index of the first nonzero coefficient, or
/// "infinite" when every *known* coefficient vanishes. Truncation cannot
/// distinguish the zero series from one of high order, so the infinite
/// value carries the precision at which it was observed.
class order_value {
public:
    static order_value finite(std::size_t k) { return order_value(k, 0); }
    static order_value infinite_at(std::size_t precision) {
        return order_value(std::nullopt, precision);
    }

    bool is_infinite() const noexcept { return !value_.has_value(); }

    std::size_t value() const {
        if (!value_) throw domain_error("order is infinite at the known precision");
        return *value_;
    }

    /// Precision through which the all-zero observation holds.
    std::size_t qualifier_precision() const noexcept { return qualifier_; }

    friend bool operator==(const order_value& a, const order_value& b) {
        return a.value_ == b.value_;
    }
    friend bool operator<(const order_value& a, const order_value& b) {
        if (a.is_infinite()) return false;
        if (b.is_infinite()) return true;
        return *a.value_ < *b.value_;
    }
    friend bool operator<=(const order_value& a, const order_value& b) {
        return a == b || a < b;
    }
    friend bool operator==(const order_value& a, std::size_t k) {
        return a.value_.has_value() && *a.value_ == k;
    }

private:
    order_value(std::optional<std::size_t> v, std::size_t q) : value_(v), qualifier_(q) {}

    std::optional<std::size_t> value_;
    std::size_t qualifier_;
};

/// Partition of the series ring by the constant term: zero, one, some
/// other unit, or a nonzero non-unit.
enum class series_class { eps_zero, eps_one, eps_unit, eps_nonunit };

/// A truncated Hurwitz series: the first `precision()` coefficients of an
/// infinite sequence over a coefficient ring, indices 0..precision-1.
/// Immutable after construction.
template <coefficient_ring R>
class series {
public:
    using ring_type = R;
    using element_type = typename R::element_type;

    series(R ring, std::vector<element_type> coeffs)
        : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}

    static series zero(const R& ring, std::size_t precision) {
        return series(ring, std::vector<element_type>(precision, ring.zero()));
    }

    /// (c, 0, 0, ...) — the constant c as a series.
    static series constant(const R& ring, element_type c, std::size_t precision) {
        if (precision == 0)
            throw insufficient_precision("constant series needs precision >= 1");
        std::vector<element_type> v(precision, ring.zero());
        v[0] = std::move(c);
        return series(ring, std::move(v));
    }

    static series one(const R& ring, std::size_t precision) {
        return constant(ring, ring.one(), precision);
    }

    /// (c, c, c, ...) — the constant sequence.
    static series repeated(const R& ring, const element_type& c, std::size_t precision) {
        return series(ring, std::vector<element_type>(precision, c));
    }

    /// Convenience for small literals: coefficients mapped through the
    /// canonical image of the integers.
    static series from_integers(const R& ring, std::initializer_list<long long> values) {
        std::vector<element_type> v;
        v.reserve(values.size());
        for (long long x : values) v.push_back(ring.from_integer(bigint(x)));
        return series(ring, std::move(v));
    }

    const R& ring() const noexcept { return ring_; }
    std::size_t precision() const noexcept { return coeffs_.size(); }
    const std::vector<element_type>& coeffs() const noexcept { return coeffs_; }

    const element_type& coeff(std::size_t i) const {
        if (i >= coeffs_.size())
            throw insufficient_precision("coefficient " + std::to_string(i) +
                                         " beyond precision " +
                                         std::to_string(coeffs_.size()));
        return coeffs_[i];
    }

    /// Coefficient access with the convention that indices below zero read
    /// as ring zero.
    element_type coeff_or_zero(std::ptrdiff_t i) const {
        if (i < 0) return ring_.zero();
        return coeff(static_cast<std::size_t>(i));
    }

private:
    R ring_;
    std::vector<element_type> coeffs_;
};

namespace detail {

template <coefficient_ring R>
const R& same_ring(const series<R>& f, const series<R>& g) {
    if (!(f.ring() == g.ring()))
        throw ring_mismatch("series over " + f.ring().descriptor().name() + " and " +
                            g.ring().descriptor().name());
    return f.ring();
}

} // namespace detail

/// First `precision` coefficients of f.
template <coefficient_ring R>
series<R> truncate(const series<R>& f, std::size_t precision) {
    if (precision > f.precision())
        throw insufficient_precision("cannot truncate precision " +
                                     std::to_string(f.precision()) + " series to " +
                                     std::to_string(precision));
    std::vector<typename R::element_type> v(f.coeffs().begin(),
                                            f.coeffs().begin() + precision);
    return series<R>(f.ring(), std::move(v));
}

/// The only equality notion: agreement of coefficients 0..precision-1.
template <coefficient_ring R>
bool equal_at(const series<R>& f, const series<R>& g, std::size_t precision) {
    detail::same_ring(f, g);
    if (precision > f.precision() || precision > g.precision())
        throw insufficient_precision("equality requested beyond known precision");
    for (std::size_t i = 0; i < precision; ++i)
        if (!(f.coeff(i) == g.coeff(i))) return false;
    return true;
}

/// Equality at the largest precision both operands know.
template <coefficient_ring R>
bool equal_at_common(const series<R>& f, const series<R>& g) {
    return equal_at(f, g, std::min(f.precision(), g.precision()));
}

template <coefficient_ring R>
series<R> operator+(const series<R>& f, const series<R>& g) {
    const R& ring = detail::same_ring(f, g);
    std::size_t p = std::min(f.precision(), g.precision());
    std::vector<typename R::element_type> v;
    v.reserve(p);
    for (std::size_t i = 0; i < p; ++i) v.push_back(f.coeff(i) + g.coeff(i));
    return series<R>(ring, std::move(v));
}

template <coefficient_ring R>
series<R> operator-(const series<R>& f) {
    std::vector<typename R::element_type> v;
    v.reserve(f.precision());
    for (std::size_t i = 0; i < f.precision(); ++i) v.push_back(-f.coeff(i));
    return series<R>(f.ring(), std::move(v));
}

template <coefficient_ring R>
series<R> operator-(const series<R>& f, const series<R>& g) {
    const R& ring = detail::same_ring(f, g);
    std::size_t p = std::min(f.precision(), g.precision());
    std::vector<typename R::element_type> v;
    v.reserve(p);
    for (std::size_t i = 0; i < p; ++i) v.push_back(f.coeff(i) - g.coeff(i));
    return series<R>(ring, std::move(v));
}

/// Hurwitz product: c(n) = sum_i C(n, i) a(i) b(n-i). Binomials are taken
/// over the integers and mapped into the ring, which keeps positive
/// characteristic correct.
template <coefficient_ring R>
series<R> operator*(const series<R>& f, const series<R>& g) {
    const R& ring = detail::same_ring(f, g);
    std::size_t p = std::min(f.precision(), g.precision());
    std::vector<typename R::element_type> v;
    v.reserve(p);
    for (std::size_t n = 0; n < p; ++n) {
        typename R::element_type c = ring.zero();
        bigint binom = 1; // C(n, 0), updated incrementally
        for (std::size_t i = 0; i <= n; ++i) {
            c = c + ring.from_integer(binom) * f.coeff(i) * g.coeff(n - i);
            binom = binom * bigint(n - i) / bigint(i + 1);
        }
        v.push_back(std::move(c));
    }
    return series<R>(ring, std::move(v));
}

template <coefficient_ring R>
series<R> operator*(const typename R::element_type& a, const series<R>& f) {
    std::vector<typename R::element_type> v;
    v.reserve(f.precision());
    for (std::size_t i = 0; i < f.precision(); ++i) v.push_back(a * f.coeff(i));
    return series<R>(f.ring(), std::move(v));
}

/// Left shift; precision drops by one.
template <coefficient_ring R>
series<R> derive(const series<R>& f) {
    if (f.precision() == 0)
        throw insufficient_precision("cannot differentiate a precision-0 series");
    std::vector<typename R::element_type> v(f.coeffs().begin() + 1, f.coeffs().end());
    return series<R>(f.ring(), std::move(v));
}

template <coefficient_ring R>
series<R> derive(const series<R>& f, std::size_t times) {
    series<R> r = f;
    for (std::size_t i = 0; i < times; ++i) r = derive(r);
    return r;
}

/// m-fold integral: prepend m zeros; precision grows by m.
template <coefficient_ring R>
series<R> integrate(const series<R>& f, std::size_t m = 1) {
    std::vector<typename R::element_type> v;
    v.reserve(f.precision() + m);
    for (std::size_t i = 0; i < m; ++i) v.push_back(f.ring().zero());
    v.insert(v.end(), f.coeffs().begin(), f.coeffs().end());
    return series<R>(f.ring(), std::move(v));
}

/// Basis element: the Kronecker-delta sequence with 1 at index m.
template <coefficient_ring R>
series<R> basis(const R& ring, std::size_t m, std::size_t precision) {
    if (precision <= m)
        throw insufficient_precision("basis element " + std::to_string(m) +
                                     " is not representable at precision " +
                                     std::to_string(precision));
    std::vector<typename R::element_type> v(precision, ring.zero());
    v[m] = ring.one();
    return series<R>(ring, std::move(v));
}

template <coefficient_ring R>
order_value ord(const series<R>& f) {
    const auto z = f.ring().zero();
    for (std::size_t i = 0; i < f.precision(); ++i)
        if (!(f.coeff(i) == z)) return order_value::finite(i);
    return order_value::infinite_at(f.precision());
}

/// Constant term; a ring homomorphism.
template <coefficient_ring R>
typename R::element_type eps(const series<R>& f) {
    return f.coeff(0);
}

template <coefficient_ring R>
series_class classify(const series<R>& f) {
    const auto e = eps(f);
    if (e == f.ring().zero()) return series_class::eps_zero;
    if (e == f.ring().one()) return series_class::eps_one;
    if (f.ring().try_invert(e)) return series_class::eps_unit;
    return series_class::eps_nonunit;
}

/// Multiplicative inverse via the head-term recursion
///   h^{-1}(n) = -h(0)^{-1} sum_{k=1}^{n} C(n,k) h(k) h^{-1}(n-k).
/// Defined exactly when the constant term is a unit.
template <coefficient_ring R>
series<R> invert(const series<R>& f) {
    if (f.precision() == 0)
        throw insufficient_precision("cannot invert a precision-0 series");
    const R& ring = f.ring();
    auto head = ring.try_invert(eps(f));
    if (!head)
        throw not_invertible("series is invertible only when its constant term is a "
                             "unit; got " +
                             ring.to_string(eps(f)) + " in " +
                             ring.descriptor().name());
    std::vector<typename R::element_type> v;
    v.reserve(f.precision());
    v.push_back(*head);
    for (std::size_t n = 1; n < f.precision(); ++n) {
        typename R::element_type s = ring.zero();
        bigint binom = bigint(n); // C(n, 1), updated incrementally
        for (std::size_t k = 1; k <= n; ++k) {
            s = s + ring.from_integer(binom) * f.coeff(k) * v[n - k];
            binom = binom * bigint(n - k) / bigint(k + 1);
        }
        v.push_back(-(*head) * s);
    }
    return series<R>(ring, std::move(v));
}

/// Integer power; negative exponents require a unit constant term.
template <coefficient_ring R>
series<R> pow(const series<R>& f, long long k) {
    if (f.precision() == 0)
        throw insufficient_precision("cannot exponentiate a precision-0 series");
    series<R> base = k < 0 ? invert(f) : f;
    std::size_t e = static_cast<std::size_t>(k < 0 ? -k : k);
    series<R> acc = series<R>::one(f.ring(), f.precision());
    for (std::size_t i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

} // namespace hurwitz
