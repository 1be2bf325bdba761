#pragma once

#include <boost/integer/extended_euclidean.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>

#include "hurwitz/errors.hpp"

namespace hurwitz {

// Expression templates are switched off so that arithmetic on coefficients
// yields plain values inside generic code.
using bigint = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using bigrat =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

/// Exact binomial coefficient over arbitrary-precision integers.
/// C(n, k) = 0 for k > n, matching the convention used throughout.
inline bigint binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (n - k < k) k = n - k;
    bigint r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r *= bigint(n - k + i);
        r /= bigint(i); // exact at every step
    }
    return r;
}

inline bigint factorial(std::size_t n) {
    bigint r = 1;
    for (std::size_t i = 2; i <= n; ++i) r *= bigint(i);
    return r;
}

enum class ring_kind { integers, rationals, mod_m };

/// Value-level description of a coefficient ring, used for configuration,
/// serialization and capability checks.
struct ring_descriptor {
    ring_kind kind = ring_kind::integers;
    bigint modulus = 0; // >= 2 when kind == mod_m, ignored otherwise

    /// True iff the canonical images of all positive integers are units.
    bool q_algebra() const { return kind == ring_kind::rationals; }

    bool is_field() const {
        if (kind == ring_kind::rationals) return true;
        if (kind == ring_kind::mod_m)
            return boost::multiprecision::miller_rabin_test(modulus, 25);
        return false;
    }

    std::string name() const {
        switch (kind) {
        case ring_kind::integers: return "integers";
        case ring_kind::rationals: return "rationals";
        case ring_kind::mod_m: return "mod-" + modulus.str();
        }
        return "?";
    }

    friend bool operator==(const ring_descriptor& a, const ring_descriptor& b) {
        return a.kind == b.kind &&
               (a.kind != ring_kind::mod_m || a.modulus == b.modulus);
    }
};

namespace detail {

inline bigint parse_bigint(std::string_view s) {
    if (s.empty()) throw config_error("empty integer literal");
    try {
        return bigint(std::string(s));
    } catch (const std::exception&) {
        throw config_error("malformed integer literal '" + std::string(s) + "'");
    }
}

// Deterministic small-range sampling; std::uniform_int_distribution is
// implementation-defined and would break bit-identical check output.
inline std::uint64_t sample_below(std::mt19937_64& g, std::uint64_t n) {
    return g() % n;
}

} // namespace detail

/// The ring of integers. Elements are arbitrary-precision integers;
/// the only units are +1 and -1.
class integer_ring {
public:
    using element_type = bigint;
    static constexpr bool q_algebra = false;

    element_type from_integer(const bigint& n) const { return n; }
    element_type zero() const { return 0; }
    element_type one() const { return 1; }

    std::optional<element_type> try_invert(const element_type& a) const {
        if (a == 1 || a == -1) return a;
        return std::nullopt;
    }

    bool is_field() const { return false; }
    ring_descriptor descriptor() const { return {ring_kind::integers, 0}; }

    std::string to_string(const element_type& a) const { return a.str(); }
    element_type parse(std::string_view s) const { return detail::parse_bigint(s); }

    element_type sample(std::mt19937_64& g) const {
        return bigint(static_cast<std::int64_t>(detail::sample_below(g, 19)) - 9);
    }

    friend bool operator==(const integer_ring&, const integer_ring&) { return true; }
};

/// The field of rationals, kept in canonical form by the backend.
class rational_ring {
public:
    using element_type = bigrat;
    static constexpr bool q_algebra = true;

    element_type from_integer(const bigint& n) const { return bigrat(n); }
    element_type zero() const { return 0; }
    element_type one() const { return 1; }

    std::optional<element_type> try_invert(const element_type& a) const {
        if (a == 0) return std::nullopt;
        return 1 / a;
    }

    bool is_field() const { return true; }
    ring_descriptor descriptor() const { return {ring_kind::rationals, 0}; }

    std::string to_string(const element_type& a) const {
        bigint num(numerator(a)), den(denominator(a));
        if (den == 1) return num.str();
        return num.str() + "/" + den.str();
    }

    element_type parse(std::string_view s) const {
        auto slash = s.find('/');
        if (slash == std::string_view::npos)
            return bigrat(detail::parse_bigint(s));
        bigint num = detail::parse_bigint(s.substr(0, slash));
        bigint den = detail::parse_bigint(s.substr(slash + 1));
        if (den == 0) throw config_error("zero denominator in '" + std::string(s) + "'");
        return bigrat(num, den);
    }

    element_type sample(std::mt19937_64& g) const {
        bigint num(static_cast<std::int64_t>(detail::sample_below(g, 19)) - 9);
        bigint den(static_cast<std::int64_t>(detail::sample_below(g, 6)) + 1);
        return bigrat(num, den);
    }

    friend bool operator==(const rational_ring&, const rational_ring&) { return true; }
};

/// Residue of an integer modulo m, stored canonically in [0, m).
/// Arithmetic across different moduli is a ring mismatch, not a value.
class mod_int {
public:
    mod_int(bigint value, bigint modulus)
        : value_(std::move(value)), modulus_(std::move(modulus)) {
        if (modulus_ < 2) throw domain_error("modulus must be at least 2");
        value_ %= modulus_;
        if (value_ < 0) value_ += modulus_;
    }

    const bigint& value() const noexcept { return value_; }
    const bigint& modulus() const noexcept { return modulus_; }

    friend mod_int operator+(const mod_int& a, const mod_int& b) {
        return mod_int(a.value_ + b.value_, same_modulus(a, b));
    }
    friend mod_int operator-(const mod_int& a, const mod_int& b) {
        return mod_int(a.value_ - b.value_, same_modulus(a, b));
    }
    friend mod_int operator*(const mod_int& a, const mod_int& b) {
        return mod_int(a.value_ * b.value_, same_modulus(a, b));
    }
    friend mod_int operator-(const mod_int& a) {
        return mod_int(-a.value_, a.modulus_);
    }
    friend bool operator==(const mod_int& a, const mod_int& b) {
        same_modulus(a, b);
        return a.value_ == b.value_;
    }

private:
    static const bigint& same_modulus(const mod_int& a, const mod_int& b) {
        if (a.modulus_ != b.modulus_)
            throw ring_mismatch("mod-" + a.modulus_.str() + " vs mod-" +
                                b.modulus_.str() + " operands");
        return a.modulus_;
    }

    bigint value_;
    bigint modulus_;
};

/// The ring of integers modulo m, for any m >= 2. Inversion is partial:
/// a is a unit iff gcd(a, m) = 1.
class modular_ring {
public:
    using element_type = mod_int;
    static constexpr bool q_algebra = false;

    explicit modular_ring(bigint modulus) : modulus_(std::move(modulus)) {
        if (modulus_ < 2) throw domain_error("modulus must be at least 2");
    }

    const bigint& modulus() const noexcept { return modulus_; }

    element_type from_integer(const bigint& n) const { return mod_int(n, modulus_); }
    element_type zero() const { return mod_int(0, modulus_); }
    element_type one() const { return mod_int(1, modulus_); }

    std::optional<element_type> try_invert(const element_type& a) const {
        if (a.modulus() != modulus_)
            throw ring_mismatch("element does not belong to mod-" + modulus_.str());
        if (a.value() == 0) return std::nullopt;
        auto res = boost::integer::extended_euclidean(a.value(), modulus_);
        if (res.gcd != 1) return std::nullopt;
        return mod_int(res.x, modulus_);
    }

    bool is_field() const {
        return boost::multiprecision::miller_rabin_test(modulus_, 25);
    }
    ring_descriptor descriptor() const { return {ring_kind::mod_m, modulus_}; }

    std::string to_string(const element_type& a) const { return a.value().str(); }
    element_type parse(std::string_view s) const {
        return mod_int(detail::parse_bigint(s), modulus_);
    }

    element_type sample(std::mt19937_64& g) const {
        return mod_int(bigint(g()), modulus_);
    }

    friend bool operator==(const modular_ring& a, const modular_ring& b) {
        return a.modulus_ == b.modulus_;
    }

private:
    bigint modulus_;
};

/// An exact commutative coefficient ring with identity: element arithmetic,
/// the canonical image of the integers, partial inversion, and enough
/// formatting support to serialize values.
template <typename R>
concept coefficient_ring = requires(const R r, const typename R::element_type a,
                                    const typename R::element_type b, const bigint n,
                                    std::string_view sv, std::mt19937_64& g) {
    typename R::element_type;
    { R::q_algebra } -> std::convertible_to<bool>;
    { r.from_integer(n) } -> std::same_as<typename R::element_type>;
    { r.zero() } -> std::same_as<typename R::element_type>;
    { r.one() } -> std::same_as<typename R::element_type>;
    { r.try_invert(a) } -> std::same_as<std::optional<typename R::element_type>>;
    { r.is_field() } -> std::convertible_to<bool>;
    { r.descriptor() } -> std::same_as<ring_descriptor>;
    { r.to_string(a) } -> std::convertible_to<std::string>;
    { r.parse(sv) } -> std::same_as<typename R::element_type>;
    { r.sample(g) } -> std::same_as<typename R::element_type>;
    { r == r } -> std::convertible_to<bool>;
    { a + b } -> std::convertible_to<typename R::element_type>;
    { a - b } -> std::convertible_to<typename R::element_type>;
    { a * b } -> std::convertible_to<typename R::element_type>;
    { -a } -> std::convertible_to<typename R::element_type>;
    { a == b } -> std::convertible_to<bool>;
};

static_assert(coefficient_ring<integer_ring>);
static_assert(coefficient_ring<rational_ring>);
static_assert(coefficient_ring<modular_ring>);

} // namespace hurwitz
