#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hurwitz/interlace.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

/// n-th divided power: h^(0) = 1, h^(n) = integral(h^(n-1) * h').
/// Defined over every coefficient ring; no factorial division occurs.
/// Over rings containing the rationals, n! * h^(n) = h^n.
template <coefficient_ring R>
series<R> divided_power(const series<R>& h, std::size_t n) {
    if (h.precision() == 0)
        throw insufficient_precision("divided power of a precision-0 series");
    series<R> p = series<R>::one(h.ring(), h.precision());
    if (n == 0) return p;
    const series<R> dh = derive(h);
    for (std::size_t i = 0; i < n; ++i) p = integrate(p * dh);
    return p;
}

/// exp(h) = sum of all divided powers of h, for h with zero constant term.
/// h^(k) has no coefficients below index k, so coefficient n of the result
/// is the finite sum over k <= n; divided powers up to precision-1 suffice.
template <coefficient_ring R>
series<R> exp(const series<R>& h) {
    if (h.precision() == 0)
        throw insufficient_precision("exp of a precision-0 series");
    const R& ring = h.ring();
    if (!(eps(h) == ring.zero()))
        throw domain_error("exp needs a zero constant term; got " +
                           ring.to_string(eps(h)));
    series<R> acc = series<R>::one(ring, h.precision());
    series<R> p = acc;
    const series<R> dh = derive(h);
    for (std::size_t k = 1; k < h.precision(); ++k) {
        p = integrate(p * dh);
        acc = acc + p;
    }
    return acc;
}

/// Both routes to the exponential inverse: (exp(-h), exp(h)^{-1}).
/// The two agree; returning both lets callers assert it.
template <coefficient_ring R>
std::pair<series<R>, series<R>> exp_inverse_pair(const series<R>& h) {
    return {exp(-h), invert(exp(h))};
}

/// Both sides of the exponential derivative law:
/// (exp(h)', exp(h) * h').
template <coefficient_ring R>
std::pair<series<R>, series<R>> exp_derivative_pair(const series<R>& h) {
    series<R> e = exp(h);
    return {derive(e), e * derive(h)};
}

namespace detail {

template <coefficient_ring R>
series<R> ones_inverse(const R& ring, std::size_t precision) {
    return invert(series<R>::repeated(ring, ring.one(), precision));
}

} // namespace detail

/// sin = interlacing of the zero sequence with the inverse of (1,1,1,...),
/// i.e. (0, 1, 0, -1, 0, 1, ...).
template <coefficient_ring R>
series<R> sin_series(const R& ring, std::size_t precision) {
    if (precision == 0) return series<R>::zero(ring, 0);
    std::size_t half = (precision + 1) / 2;
    series<R> alt = detail::ones_inverse(ring, half);
    series<R> z = series<R>::zero(ring, half);
    return truncate(interlace(series_tuple<R>({z, alt})), precision);
}

/// cos = the same interlacing the other way round: (1, 0, -1, 0, 1, ...).
template <coefficient_ring R>
series<R> cos_series(const R& ring, std::size_t precision) {
    if (precision == 0) return series<R>::zero(ring, 0);
    std::size_t half = (precision + 1) / 2;
    series<R> alt = detail::ones_inverse(ring, half);
    series<R> z = series<R>::zero(ring, half);
    return truncate(interlace(series_tuple<R>({alt, z})), precision);
}

/// Ordinary power series sum(c_n t^n) over a ring containing the
/// rationals; the image of a Hurwitz series under division of coefficient
/// n by n!. Multiplication is the Cauchy product.
template <coefficient_ring R>
    requires(R::q_algebra)
class egf_series {
public:
    using ring_type = R;
    using element_type = typename R::element_type;

    egf_series(R ring, std::vector<element_type> coeffs)
        : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}

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

private:
    R ring_;
    std::vector<element_type> coeffs_;
};

template <coefficient_ring R>
egf_series<R> operator+(const egf_series<R>& f, const egf_series<R>& g) {
    std::size_t p = std::min(f.precision(), g.precision());
    std::vector<typename R::element_type> v;
    v.reserve(p);
    for (std::size_t i = 0; i < p; ++i) v.push_back(f.coeff(i) + g.coeff(i));
    return egf_series<R>(f.ring(), std::move(v));
}

/// Cauchy product: c(n) = sum_i a(i) b(n-i).
template <coefficient_ring R>
egf_series<R> operator*(const egf_series<R>& f, const egf_series<R>& g) {
    std::size_t p = std::min(f.precision(), g.precision());
    std::vector<typename R::element_type> v;
    v.reserve(p);
    for (std::size_t n = 0; n < p; ++n) {
        typename R::element_type c = f.ring().zero();
        for (std::size_t i = 0; i <= n; ++i) c = c + f.coeff(i) * g.coeff(n - i);
        v.push_back(std::move(c));
    }
    return egf_series<R>(f.ring(), std::move(v));
}

/// Formal d/dt: coefficient n becomes (n+1) * coefficient n+1.
template <coefficient_ring R>
egf_series<R> derive(const egf_series<R>& f) {
    if (f.precision() == 0)
        throw insufficient_precision("cannot differentiate a precision-0 series");
    std::vector<typename R::element_type> v;
    v.reserve(f.precision() - 1);
    for (std::size_t n = 1; n < f.precision(); ++n)
        v.push_back(f.ring().from_integer(bigint(n)) * f.coeff(n));
    return egf_series<R>(f.ring(), std::move(v));
}

template <coefficient_ring R>
bool equal_at(const egf_series<R>& f, const egf_series<R>& g, std::size_t precision) {
    if (precision > f.precision() || precision > g.precision())
        throw insufficient_precision("equality requested beyond known precision");
    for (std::size_t i = 0; i < precision; ++i)
        if (!(f.coeff(i) == g.coeff(i))) return false;
    return true;
}

/// Divide coefficient n by n!. An isomorphism of differential algebras
/// onto ordinary power series; requires invertible positive integers.
template <coefficient_ring R>
    requires(R::q_algebra)
egf_series<R> to_egf(const series<R>& h) {
    const R& ring = h.ring();
    std::vector<typename R::element_type> v;
    v.reserve(h.precision());
    typename R::element_type inv_fact = ring.one();
    for (std::size_t n = 0; n < h.precision(); ++n) {
        if (n > 0) {
            auto invn = ring.try_invert(ring.from_integer(bigint(n)));
            if (!invn)
                throw capability_error("generating-function transport needs a ring "
                                       "with invertible positive integers");
            inv_fact = inv_fact * *invn;
        }
        v.push_back(h.coeff(n) * inv_fact);
    }
    return egf_series<R>(ring, std::move(v));
}

/// Multiply coefficient n by n!; inverse of to_egf.
template <coefficient_ring R>
    requires(R::q_algebra)
series<R> from_egf(const egf_series<R>& e) {
    const R& ring = e.ring();
    std::vector<typename R::element_type> v;
    v.reserve(e.precision());
    typename R::element_type fact = ring.one();
    for (std::size_t n = 0; n < e.precision(); ++n) {
        if (n > 0) fact = fact * ring.from_integer(bigint(n));
        v.push_back(e.coeff(n) * fact);
    }
    return series<R>(ring, std::move(v));
}

} // namespace hurwitz
