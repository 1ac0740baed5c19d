#include "capcodes/poly.hpp"

#include <algorithm>
#include <sstream>

namespace capcodes {

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (Elem c : coeffs_)
        require(field_->contains(c), ErrorKind::ParamOutOfRange, "coefficient out of range");
    normalize();
}

Poly::Poly(FieldPtr field, std::initializer_list<std::int64_t> coeffs) : field_(std::move(field)) {
    coeffs_.reserve(coeffs.size());
    for (auto c : coeffs) coeffs_.push_back(field_->from_int(c));
    normalize();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), std::vector<Elem>{c}); }

Poly Poly::monomial(FieldPtr field, Elem c, std::size_t exponent) {
    std::vector<Elem> v(exponent + 1, 0);
    v[exponent] = c;
    return Poly(std::move(field), std::move(v));
}

void Poly::normalize() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::vector<Elem> Poly::coeffs_padded(std::size_t n) const {
    std::vector<Elem> out(std::max(n, coeffs_.size()), 0);
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin());
    return out;
}

Degree Poly::degree() const noexcept {
    if (coeffs_.empty()) return Degree::neg_inf();
    return Degree(static_cast<int>(coeffs_.size()) - 1);
}

Elem Poly::eval(Elem x) const noexcept {
    const Field& f = *field_;
    Elem acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_field(*field_, *o.field_);
    std::vector<Elem> out = coeffs_padded(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] = field_->add(out[i], o.coeffs_[i]);
    Poly r(field_);
    r.coeffs_ = std::move(out);
    r.normalize();
    return r;
}

Poly Poly::operator-() const {
    Poly r(field_);
    r.coeffs_.reserve(coeffs_.size());
    for (Elem c : coeffs_) r.coeffs_.push_back(field_->neg(c));
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    require_same_field(*field_, *o.field_);
    Poly r(field_);
    if (is_zero() || o.is_zero()) return r;
    const Field& f = *field_;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] = f.add(r.coeffs_[i + j], f.mul(coeffs_[i], o.coeffs_[j]));
    }
    r.normalize();
    return r;
}

Poly Poly::scaled(Elem c) const {
    Poly r(field_);
    if (c == 0) return r;
    r.coeffs_.reserve(coeffs_.size());
    for (Elem a : coeffs_) r.coeffs_.push_back(field_->mul(a, c));
    return r;
}

Poly Poly::shifted(std::size_t n) const {
    Poly r(field_);
    if (is_zero()) return r;
    r.coeffs_.assign(n, 0);
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    require_same_field(*field_, *divisor.field_);
    require(!divisor.is_zero(), ErrorKind::DivisionByZero, "polynomial division by zero");
    const Field& f = *field_;
    std::vector<Elem> rem = coeffs_;
    const std::size_t db = divisor.coeffs_.size() - 1;
    const Elem lead_inv = f.inv(divisor.coeffs_.back());
    std::vector<Elem> quot(rem.size() >= divisor.coeffs_.size() ? rem.size() - db : 0, 0);
    for (std::size_t top = rem.size(); top-- > db;) {
        const Elem c = f.mul(rem[top], lead_inv);
        if (c == 0) continue;
        const std::size_t shift = top - db;
        quot[shift] = c;
        for (std::size_t i = 0; i <= db; ++i)
            rem[shift + i] = f.sub(rem[shift + i], f.mul(c, divisor.coeffs_[i]));
    }
    return {Poly(field_, std::move(quot)), Poly(field_, std::move(rem))};
}

Poly Poly::scale_argument(Elem c) const {
    Poly r(field_);
    r.coeffs_.reserve(coeffs_.size());
    Elem cp = 1;
    for (Elem a : coeffs_) {
        r.coeffs_.push_back(field_->mul(a, cp));
        cp = field_->mul(cp, c);
    }
    r.normalize();
    return r;
}

Poly Poly::translate(Elem c) const {
    // Horner in the ring: ((a_n)(X+c) + a_{n-1})(X+c) + ...
    const Poly lin(field_, std::vector<Elem>{c, 1});
    Poly acc(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * lin + constant(field_, *it);
    return acc;
}

Poly Poly::compose(const Poly& g) const {
    require_same_field(*field_, *g.field_);
    Poly acc(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * g + constant(field_, *it);
    return acc;
}

Elem falling_factorial(const Field& f, std::uint64_t n, unsigned k) {
    Elem acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (n < i) return 0;
        acc = f.mul(acc, f.from_int(static_cast<std::int64_t>((n - i) % f.characteristic())));
    }
    return acc;
}

Poly Poly::formal_derivative(unsigned order) const {
    if (order == 0) return *this;
    Poly r(field_);
    if (coeffs_.size() <= order) return r;
    r.coeffs_.resize(coeffs_.size() - order);
    for (std::size_t j = 0; j < r.coeffs_.size(); ++j)
        r.coeffs_[j] = field_->mul(falling_factorial(*field_, j + order, order), coeffs_[j + order]);
    r.normalize();
    return r;
}

Poly Poly::hasse_derivative(unsigned order) const {
    Poly r(field_);
    if (coeffs_.size() <= order) return r;
    r.coeffs_.resize(coeffs_.size() - order);
    const auto p = field_->characteristic();
    for (std::size_t j = 0; j < r.coeffs_.size(); ++j)
        r.coeffs_[j] = field_->mul(binomial_mod(j + order, order, p), coeffs_[j + order]);
    r.normalize();
    return r;
}

std::size_t Poly::x_adic_valuation() const noexcept {
    std::size_t r = 0;
    while (r < coeffs_.size() && coeffs_[r] == 0) ++r;
    return coeffs_.empty() ? 0 : r;
}

bool Poly::operator==(const Poly& o) const {
    require_same_field(*field_, *o.field_);
    return coeffs_ == o.coeffs_;
}

bool Poly::canonical_less(const Poly& o) const {
    const std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Elem a = coeff(i), b = o.coeff(i);
        if (a != b) return a < b;
    }
    return false;
}

std::string Poly::format() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ' ';
        out += field_->format(coeffs_[i]);
    }
    return out;
}

Poly Poly::parse(FieldPtr field, const std::string& line) {
    std::istringstream in(line);
    std::vector<Elem> c;
    std::string tok;
    while (in >> tok) c.push_back(field->parse(tok));
    return Poly(std::move(field), std::move(c));
}

Poly pow_mod(const Poly& base, std::uint64_t n, const Poly& modulus) {
    Poly result = Poly::constant(base.field(), 1) % modulus;
    Poly b = base % modulus;
    while (n > 0) {
        if (n & 1) result = (result * b) % modulus;
        n >>= 1;
        if (n) b = (b * b) % modulus;
    }
    return result;
}

Poly frobenius_modulus(const FieldPtr& field) {
    const std::uint32_t q = field->order();
    return Poly::monomial(field, 1, q - 1) - Poly::constant(field, field->primitive());
}

bool frobenius_shift_check(const Poly& f) {
    const FieldPtr& field = f.field();
    const std::uint32_t q = field->order();
    require(f.degree() < Degree(static_cast<int>(q) - 1), ErrorKind::DegreeTooLarge,
            "frobenius check needs deg f < q-1");
    const Poly e = frobenius_modulus(field);
    const Poly lhs = f.scale_argument(field->primitive()) % e;
    const Poly rhs = pow_mod(f, q, e);
    return (lhs - rhs).is_zero();
}

}  // namespace capcodes
