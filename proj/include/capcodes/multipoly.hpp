#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <vector>

#include "capcodes/field.hpp"
#include "capcodes/poly.hpp"

namespace capcodes {

using Exponent = std::vector<std::uint32_t>;

inline unsigned weight(std::span<const std::uint32_t> i) noexcept {
    unsigned w = 0;
    for (auto v : i) w += v;
    return w;
}

/// All exponent vectors of the given arity with weight exactly w, in
/// graded-lexicographic order (earlier variables carry larger exponents first).
std::vector<Exponent> exponents_of_weight(std::size_t arity, unsigned w);
/// All exponent vectors with weight < bound, graded-lex (weight-major).
std::vector<Exponent> exponents_below_weight(std::size_t arity, unsigned bound);

/// Sparse multivariate polynomial: exponent vector -> nonzero coefficient.
class MultiPoly {
public:
    using Terms = std::map<Exponent, Elem>;

    MultiPoly(FieldPtr field, std::size_t arity) : field_(std::move(field)), arity_(arity) {}

    static MultiPoly constant(FieldPtr field, std::size_t arity, Elem c);
    /// The variable X_index.
    static MultiPoly variable(FieldPtr field, std::size_t arity, std::size_t index);
    /// Embed a univariate polynomial in variable `index`.
    static MultiPoly from_univariate(const Poly& p, std::size_t arity, std::size_t index);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t arity() const noexcept { return arity_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Elem coeff(const Exponent& i) const;
    /// Adds c to the coefficient of X^i (dropping it if it cancels).
    void add_term(const Exponent& i, Elem c);

    Degree total_degree() const noexcept;
    /// Largest exponent of variable `index` over all terms.
    Degree degree_in(std::size_t index) const noexcept;

    Elem eval(std::span<const Elem> point) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(Elem c) const;
    MultiPoly pow(unsigned n) const;

    /// The i-th Hasse derivative: coefficient of Z^i in P(X + Z).
    MultiPoly hasse_derivative(const Exponent& i) const;
    /// P^{(i)}(a) without materializing the derivative.
    Elem hasse_eval(const Exponent& i, std::span<const Elem> a) const;

    bool operator==(const MultiPoly& o) const;

private:
    void check_arity(std::size_t n) const;

    FieldPtr field_;
    std::size_t arity_;
    Terms terms_;
};

inline constexpr int kInfiniteMultiplicity = std::numeric_limits<int>::max();

/// Largest M such that every Hasse derivative of weight < M vanishes at a;
/// kInfiniteMultiplicity iff P = 0.
int multiplicity(const MultiPoly& p, std::span<const Elem> a);

}  // namespace capcodes
