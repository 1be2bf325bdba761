#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hurwitz/series.hpp"

namespace hurwitz {

/// Euclidean decomposition m = quotient * n + remainder with remainder in
/// [0, n), written m-hat and m-bar below.
struct index_decomposition {
    std::size_t quotient;
    std::size_t remainder;

    friend bool operator==(const index_decomposition&,
                           const index_decomposition&) = default;
};

inline index_decomposition decompose_index(std::size_t m, std::size_t n) {
    if (n == 0) throw domain_error("index decomposition needs a positive arity");
    return {m / n, m % n};
}

/// An ordered tuple of series over one ring, the domain and codomain of
/// interlacing. Components are truncated to a common precision on
/// construction.
template <coefficient_ring R>
class series_tuple {
public:
    using ring_type = R;

    explicit series_tuple(std::vector<series<R>> components)
        : components_(std::move(components)) {
        if (components_.empty())
            throw domain_error("a series tuple needs at least one component");
        std::size_t p = components_[0].precision();
        for (const auto& c : components_) {
            detail::same_ring(components_[0], c);
            p = std::min(p, c.precision());
        }
        for (auto& c : components_)
            if (c.precision() != p) c = truncate(c, p);
    }

    std::size_t arity() const noexcept { return components_.size(); }
    std::size_t precision() const noexcept { return components_[0].precision(); }
    const R& ring() const noexcept { return components_[0].ring(); }

    const series<R>& component(std::size_t i) const {
        if (i >= components_.size())
            throw domain_error("tuple component " + std::to_string(i) +
                               " out of range, arity " +
                               std::to_string(components_.size()));
        return components_[i];
    }
    const std::vector<series<R>>& components() const noexcept { return components_; }

private:
    std::vector<series<R>> components_;
};

template <coefficient_ring R>
series_tuple<R> operator+(const series_tuple<R>& s, const series_tuple<R>& t) {
    if (s.arity() != t.arity())
        throw domain_error("tuple arities differ: " + std::to_string(s.arity()) +
                           " vs " + std::to_string(t.arity()));
    std::vector<series<R>> v;
    v.reserve(s.arity());
    for (std::size_t i = 0; i < s.arity(); ++i)
        v.push_back(s.component(i) + t.component(i));
    return series_tuple<R>(std::move(v));
}

template <coefficient_ring R>
series_tuple<R> operator*(const typename R::element_type& a, const series_tuple<R>& t) {
    std::vector<series<R>> v;
    v.reserve(t.arity());
    for (std::size_t i = 0; i < t.arity(); ++i) v.push_back(a * t.component(i));
    return series_tuple<R>(std::move(v));
}

template <coefficient_ring R>
bool equal_at(const series_tuple<R>& s, const series_tuple<R>& t,
              std::size_t precision) {
    if (s.arity() != t.arity()) return false;
    for (std::size_t i = 0; i < s.arity(); ++i)
        if (!equal_at(s.component(i), t.component(i), precision)) return false;
    return true;
}

/// Weave n components into one series: result(m) = z_{m mod n}(m div n).
/// Precision n * P for components of precision P.
template <coefficient_ring R>
series<R> interlace(const series_tuple<R>& t) {
    const std::size_t n = t.arity(), p = t.precision();
    std::vector<typename R::element_type> v;
    v.reserve(n * p);
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t i = 0; i < n; ++i) v.push_back(t.component(i).coeff(k));
    return series<R>(t.ring(), std::move(v));
}

/// Inverse of interlacing: component i collects f(kn + i). Requires
/// prec(f) >= n so every component has at least one coefficient; the tuple
/// ends up with the common precision floor(prec(f) / n).
template <coefficient_ring R>
series_tuple<R> unlace(const series<R>& f, std::size_t n) {
    if (n == 0) throw domain_error("unlacing needs a positive arity");
    if (f.precision() < n)
        throw insufficient_precision("unlacing arity " + std::to_string(n) +
                                     " needs at least that many coefficients, have " +
                                     std::to_string(f.precision()));
    std::vector<series<R>> comps;
    comps.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<typename R::element_type> v;
        for (std::size_t k = 0; k * n + i < f.precision(); ++k)
            v.push_back(f.coeff(k * n + i));
        comps.emplace_back(f.ring(), std::move(v));
    }
    return series_tuple<R>(std::move(comps));
}

/// Pointwise product of coefficient sequences; identity (1, 1, 1, ...).
template <coefficient_ring R>
series<R> hadamard(const series<R>& f, const series<R>& g) {
    const R& ring = detail::same_ring(f, g);
    std::size_t p = std::min(f.precision(), g.precision());
    std::vector<typename R::element_type> v;
    v.reserve(p);
    for (std::size_t k = 0; k < p; ++k) v.push_back(f.coeff(k) * g.coeff(k));
    return series<R>(ring, std::move(v));
}

/// The arithmetic progression (tau, n+tau, 2n+tau, ...) as a series, with
/// 1 <= tau <= n. Hadamard-multiplying by it scales coefficient k by the
/// integer kn + tau.
template <coefficient_ring R>
series<R> arithmetic_sequence(const R& ring, std::size_t tau, std::size_t n,
                              std::size_t precision) {
    if (tau < 1 || tau > n)
        throw domain_error("arithmetic sequence offset must satisfy 1 <= tau <= n; "
                           "got tau = " +
                           std::to_string(tau) + ", n = " + std::to_string(n));
    std::vector<typename R::element_type> v;
    v.reserve(precision);
    for (std::size_t k = 0; k < precision; ++k)
        v.push_back(ring.from_integer(bigint(k) * bigint(n) + bigint(tau)));
    return series<R>(ring, std::move(v));
}

/// The binomial sequence (C(l, k), C(l+n, k), C(l+2n, k), ...), the
/// Hadamard factor appearing in the basis-multiplication formulas.
template <coefficient_ring R>
series<R> binomial_sequence(const R& ring, std::size_t l, std::size_t k, std::size_t n,
                            std::size_t precision) {
    if (n == 0) throw domain_error("binomial sequence needs a positive stride");
    std::vector<typename R::element_type> v;
    v.reserve(precision);
    for (std::size_t p = 0; p < precision; ++p)
        v.push_back(ring.from_integer(binomial(l + p * n, k)));
    return series<R>(ring, std::move(v));
}

/// m-fold integral carried out on the components: the tuple rotates by
/// m mod n and each component gains m div n (+1 across the seam)
/// integrals, so that interlacing the result equals integrating the
/// interlacing m times.
template <coefficient_ring R>
series_tuple<R> integrate_tuple(const series_tuple<R>& t, std::size_t m) {
    const std::size_t n = t.arity();
    const auto [q, r] = decompose_index(m, n);
    std::vector<series<R>> v;
    v.reserve(n);
    for (std::size_t i = 0; i < r; ++i)
        v.push_back(integrate(t.component(n - r + i), q + 1));
    for (std::size_t i = r; i < n; ++i) v.push_back(integrate(t.component(i - r), q));
    return series_tuple<R>(std::move(v));
}

/// i-fold derivative on the components, 0 <= i <= n: rotate left by i and
/// differentiate the components that wrapped around.
template <coefficient_ring R>
series_tuple<R> derive_tuple(const series_tuple<R>& t, std::size_t i) {
    const std::size_t n = t.arity();
    if (i > n)
        throw domain_error("tuple derivative order must not exceed the arity");
    if (i >= 1 && t.precision() == 0)
        throw insufficient_precision("cannot differentiate a precision-0 tuple");
    std::vector<series<R>> v;
    v.reserve(n);
    for (std::size_t j = i; j < n; ++j) v.push_back(t.component(j));
    for (std::size_t j = 0; j < i; ++j) v.push_back(derive(t.component(j)));
    return series_tuple<R>(std::move(v));
}

/// The tuple T with interlace(T) = <k> * integral^m(interlace(t)):
/// Hadamard-scale component i by the binomial sequence with offset
/// i + k + m, then integrate the tuple k + m times. The rotation performed
/// by integrate_tuple yields the closed form directly.
template <coefficient_ring R>
series_tuple<R> interlaced_basis_product(std::size_t k, std::size_t m,
                                         const series_tuple<R>& t) {
    const std::size_t n = t.arity();
    std::vector<series<R>> scaled;
    scaled.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        scaled.push_back(hadamard(
            binomial_sequence(t.ring(), i + k + m, k, n, t.precision()),
            t.component(i)));
    return integrate_tuple(series_tuple<R>(std::move(scaled)), k + m);
}

/// The tuple T with interlace(T) = f * interlace(t), assembled term by
/// term from the basis-product formula by linearity.
///
/// Result precision: component coefficient p encodes product coefficient
/// pn + i, which is determined exactly when pn + i < min(prec(f), n * P);
/// the common component precision is therefore
/// min(prec(f) / n, P) (integer division). Terms with k >= prec(f) cannot
/// reach those positions: they carry at least floor(k / n) >= M leading
/// integrals.
template <coefficient_ring R>
series_tuple<R> interlaced_series_product(const series<R>& f,
                                          const series_tuple<R>& t) {
    detail::same_ring(f, t.component(0));
    if (f.precision() < 1)
        throw insufficient_precision("series factor needs at least one coefficient");
    const std::size_t n = t.arity();
    const std::size_t m = std::min(f.precision() / n, t.precision());
    const auto zero = f.ring().zero();
    std::vector<series<R>> acc(n, series<R>::zero(f.ring(), m));
    for (std::size_t k = 0; k < f.precision(); ++k) {
        if (f.coeff(k) == zero) continue;
        series_tuple<R> w = interlaced_basis_product(k, 0, t);
        for (std::size_t i = 0; i < n; ++i)
            acc[i] = acc[i] + f.coeff(k) * w.component(i);
    }
    return series_tuple<R>(std::move(acc));
}

} // namespace hurwitz
