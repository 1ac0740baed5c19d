#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "capcodes/errors.hpp"

namespace capcodes {

/// Canonical representative of an element of GF(p^e): the integer
/// c_0 + c_1 p + ... + c_{e-1} p^{e-1} where c_i are the coefficients of the
/// element as a polynomial in the adjoined root. For prime fields this is the
/// residue itself. Integer order on this encoding is the "canonical order".
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Finite field context. Immutable after construction; share it freely.
///
/// Extension fields GF(p^e) use the smallest monic irreducible modulus of
/// degree e (ordered by the canonical encoding of its non-leading
/// coefficients). The primitive element is the smallest element of
/// multiplicative order q-1.
class Field {
public:
    /// GF(q) for a prime power q (2 <= q < 2^31).
    static FieldPtr make(std::uint64_t q);
    /// GF(p^e).
    static FieldPtr make(std::uint32_t p, unsigned e);

    std::uint32_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return e_; }
    std::uint32_t order() const noexcept { return q_; }
    bool is_prime() const noexcept { return e_ == 1; }

    /// Coefficients of the monic modulus, lowest first (length e+1).
    /// For prime fields this is X (i.e. {0, 1}).
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    Elem primitive() const noexcept { return primitive_; }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }

    /// Image of an integer under Z -> GF(q) (lands in the prime subfield).
    Elem from_int(std::int64_t v) const noexcept;

    bool contains(Elem a) const noexcept { return a < q_; }

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    Elem inv(Elem a) const;  // throws DivisionByZero
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t n) const noexcept;

    /// Multiplicative order of a nonzero element.
    std::uint64_t multiplicative_order(Elem a) const;
    bool is_primitive(Elem a) const;

    /// Coefficient vector (length e) of an element, lowest first.
    std::vector<std::uint32_t> coefficients(Elem a) const;
    Elem from_coefficients(std::span<const std::uint32_t> c) const;

    /// Decimal for prime fields, comma-joined coefficients (lowest first)
    /// for extension fields.
    std::string format(Elem a) const;
    Elem parse(const std::string& text) const;  // throws Parse

    /// Structural equality: same characteristic, degree and modulus.
    bool same_as(const Field& other) const noexcept;

private:
    Field(std::uint32_t p, unsigned e);

    Elem slow_mul(Elem a, Elem b) const noexcept;

    std::uint32_t p_;
    unsigned e_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    Elem primitive_ = 1;
    std::vector<std::uint32_t> pow_p_;  // p^i, i < e
    // Full tables for small extension fields; empty otherwise.
    std::vector<Elem> add_table_;
    std::vector<Elem> mul_table_;
    std::vector<Elem> inv_table_;
};

void require_same_field(const Field& a, const Field& b);

bool is_prime_number(std::uint64_t n) noexcept;

/// Binomial coefficient C(n, k) reduced mod the prime p (Lucas' theorem).
std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p);

/// Value-typed field element bound to its context. Convenient at API edges;
/// the algorithms work on bare Elem values with an explicit Field.
class FieldElem {
public:
    FieldElem(FieldPtr field, Elem value);
    static FieldElem from_int(FieldPtr field, std::int64_t v);

    const FieldPtr& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inv() const;
    FieldElem pow(std::uint64_t n) const;

    bool operator==(const FieldElem& o) const;

private:
    FieldPtr field_;
    Elem value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& a);

}  // namespace capcodes
