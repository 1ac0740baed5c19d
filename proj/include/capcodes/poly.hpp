#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "capcodes/field.hpp"

namespace capcodes {

/// Polynomial degree with a -infinity value for the zero polynomial, so that
/// deg(fg) = deg f + deg g holds without special cases.
class Degree {
public:
    constexpr Degree(int d) noexcept : value_(d), neg_inf_(false) {}  // NOLINT: implicit by intent
    static constexpr Degree neg_inf() noexcept { return Degree(); }

    constexpr bool is_neg_inf() const noexcept { return neg_inf_; }
    /// Finite value; -1 for -infinity (handy as a loop bound).
    constexpr int value() const noexcept { return neg_inf_ ? -1 : value_; }

    friend constexpr Degree operator+(Degree a, Degree b) noexcept {
        if (a.neg_inf_ || b.neg_inf_) return neg_inf();
        return Degree(a.value_ + b.value_);
    }
    friend constexpr bool operator==(Degree a, Degree b) noexcept {
        return a.neg_inf_ == b.neg_inf_ && (a.neg_inf_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) noexcept {
        if (a.neg_inf_ || b.neg_inf_) return b.neg_inf_ <=> a.neg_inf_;
        return a.value_ <=> b.value_;
    }

private:
    constexpr Degree() noexcept : value_(0), neg_inf_(true) {}
    int value_;
    bool neg_inf_;
};

/// Dense univariate polynomial, lowest degree first, never with a trailing
/// zero coefficient. The zero polynomial has no coefficients.
class Poly {
public:
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<Elem> coeffs);
    Poly(FieldPtr field, std::initializer_list<std::int64_t> coeffs);

    static Poly constant(FieldPtr field, Elem c);
    static Poly monomial(FieldPtr field, Elem c, std::size_t exponent);
    static Poly x(FieldPtr field) { return monomial(std::move(field), 1, 1); }

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of X^i (zero past the end).
    Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    /// Coefficients padded with zeros to length n (n >= size).
    std::vector<Elem> coeffs_padded(std::size_t n) const;

    bool is_zero() const noexcept { return coeffs_.empty(); }
    Degree degree() const noexcept;

    Elem eval(Elem x) const noexcept;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(Elem c) const;
    /// X^n * this
    Poly shifted(std::size_t n) const;

    /// Quotient and remainder; throws DivisionByZero for a zero divisor.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    Poly operator%(const Poly& divisor) const { return divmod(divisor).second; }

    /// f(c X)
    Poly scale_argument(Elem c) const;
    /// f(X + c)
    Poly translate(Elem c) const;
    /// f(g(X))
    Poly compose(const Poly& g) const;

    /// order-th iterated formal derivative.
    Poly formal_derivative(unsigned order = 1) const;
    /// order-th Hasse derivative (coefficient of Z^order in f(X+Z)).
    Poly hasse_derivative(unsigned order) const;

    /// Largest r with X^r dividing this (0 for the zero polynomial).
    std::size_t x_adic_valuation() const noexcept;

    bool operator==(const Poly& o) const;
    /// Canonical order: by padded coefficient vector, lowest degree most significant.
    bool canonical_less(const Poly& o) const;

    /// Space-separated coefficients, lowest degree first; "0" for zero.
    std::string format() const;
    static Poly parse(FieldPtr field, const std::string& line);

private:
    void normalize() noexcept;

    FieldPtr field_;
    std::vector<Elem> coeffs_;
};

/// Stateless comparator for ordered containers of Poly.
struct PolyLess {
    bool operator()(const Poly& a, const Poly& b) const { return a.canonical_less(b); }
};

/// (n)(n-1)...(n-k+1) reduced into the prime subfield.
Elem falling_factorial(const Field& f, std::uint64_t n, unsigned k);

/// base^n mod modulus by repeated squaring.
Poly pow_mod(const Poly& base, std::uint64_t n, const Poly& modulus);

/// X^{q-1} - gamma, gamma the field's primitive element.
Poly frobenius_modulus(const FieldPtr& field);

/// Whether f(gamma X) == f(X)^q modulo X^{q-1} - gamma. Requires deg f < q-1
/// (DegreeTooLarge otherwise).
bool frobenius_shift_check(const Poly& f);

}  // namespace capcodes
