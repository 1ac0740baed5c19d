#include "capcodes/field.hpp"

#include <algorithm>
#include <utility>
#include <sstream>

namespace capcodes {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::ContextMismatch: return "ContextMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
        case ErrorKind::NoNonzeroSolution: return "NoNonzeroSolution";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::ZeroDirection: return "ZeroDirection";
        case ErrorKind::ShiftRequired: return "ShiftRequired";
        case ErrorKind::IndexOverflow: return "IndexOverflow";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

bool is_prime_number(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Dense polynomials over GF(p) used only while searching for a modulus.
using SmallPoly = std::vector<std::uint32_t>;

void trim(SmallPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

SmallPoly poly_mod(SmallPoly a, const SmallPoly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint64_t lead_inv = inv_mod_prime(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = c * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

bool irreducible_over_prime(const SmallPoly& f, std::uint32_t p) {
    const unsigned e = static_cast<unsigned>(f.size() - 1);
    // Trial division by every monic polynomial of degree 1..e/2.
    for (unsigned dg = 1; dg <= e / 2; ++dg) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < dg; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            SmallPoly g(dg + 1);
            std::uint64_t v = idx;
            for (unsigned i = 0; i < dg; ++i) {
                g[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            g[dg] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

FieldPtr Field::make(std::uint64_t q) {
    require(q >= 2 && q < (1ull << 31), ErrorKind::ParamOutOfRange,
            "field order must be in [2, 2^31)");
    for (std::uint64_t p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        unsigned e = 0;
        std::uint64_t r = q;
        while (r % p == 0) {
            r /= p;
            ++e;
        }
        require(r == 1, ErrorKind::ParamOutOfRange,
                "field order " + std::to_string(q) + " is not a prime power");
        return make(static_cast<std::uint32_t>(p), e);
    }
    fail(ErrorKind::ParamOutOfRange, "invalid field order");
}

FieldPtr Field::make(std::uint32_t p, unsigned e) {
    require(is_prime_number(p), ErrorKind::ParamOutOfRange, "characteristic must be prime");
    require(e >= 1, ErrorKind::ParamOutOfRange, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        require(q < (1ull << 31), ErrorKind::ParamOutOfRange, "field too large");
    }
    return FieldPtr(new Field(p, e));
}

Field::Field(std::uint32_t p, unsigned e) : p_(p), e_(e) {
    std::uint64_t q = 1;
    pow_p_.resize(e);
    for (unsigned i = 0; i < e; ++i) {
        pow_p_[i] = static_cast<std::uint32_t>(q);
        q *= p;
    }
    q_ = static_cast<std::uint32_t>(q);

    if (e == 1) {
        modulus_ = {0, 1};
    } else {
        std::uint64_t tail_count = q;  // p^e choices of the non-leading coefficients
        for (std::uint64_t idx = 0; idx < tail_count; ++idx) {
            SmallPoly f(e + 1);
            std::uint64_t v = idx;
            for (unsigned i = 0; i < e; ++i) {
                f[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            f[e] = 1;
            if (f[0] == 0) continue;  // divisible by X
            if (irreducible_over_prime(f, p)) {
                modulus_ = f;
                break;
            }
        }
        if (q_ <= 256) {
            add_table_.resize(std::size_t{q_} * q_);
            mul_table_.resize(std::size_t{q_} * q_);
            for (Elem a = 0; a < q_; ++a) {
                for (Elem b = 0; b < q_; ++b) {
                    Elem s = 0;
                    for (unsigned i = 0; i < e_; ++i) {
                        const std::uint32_t ca = (a / pow_p_[i]) % p_;
                        const std::uint32_t cb = (b / pow_p_[i]) % p_;
                        s += ((ca + cb) % p_) * pow_p_[i];
                    }
                    add_table_[std::size_t{a} * q_ + b] = s;
                    mul_table_[std::size_t{a} * q_ + b] = slow_mul(a, b);
                }
            }
        }
    }

    if (q_ <= (1u << 16)) {
        inv_table_.assign(q_, 0);
        for (Elem a = 1; a < q_; ++a) inv_table_[a] = pow(a, q_ - 2);
    }

    if (q_ == 2) {
        primitive_ = 1;
    } else {
        const auto factors = prime_factors(q_ - 1);
        for (Elem g = 1; g < q_; ++g) {
            bool ok = true;
            for (auto r : factors) {
                if (pow(g, (q_ - 1) / r) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                primitive_ = g;
                break;
            }
        }
    }
}

Elem Field::from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

Elem Field::add(Elem a, Elem b) const noexcept {
    if (e_ == 1) {
        const std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[std::size_t{a} * q_ + b];
    Elem s = 0;
    for (unsigned i = 0; i < e_; ++i) {
        const std::uint32_t ca = (a / pow_p_[i]) % p_;
        const std::uint32_t cb = (b / pow_p_[i]) % p_;
        s += ((ca + cb) % p_) * pow_p_[i];
    }
    return s;
}

Elem Field::neg(Elem a) const noexcept {
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    Elem s = 0;
    for (unsigned i = 0; i < e_; ++i) {
        const std::uint32_t ca = (a / pow_p_[i]) % p_;
        s += ((p_ - ca) % p_) * pow_p_[i];
    }
    return s;
}

Elem Field::sub(Elem a, Elem b) const noexcept {
    if (e_ == 1) return a >= b ? a - b : a + (p_ - b);
    return add(a, neg(b));
}

Elem Field::slow_mul(Elem a, Elem b) const noexcept {
    std::vector<std::uint64_t> ca(e_), cb(e_), prod(2 * e_ - 1, 0);
    for (unsigned i = 0; i < e_; ++i) {
        ca[i] = (a / pow_p_[i]) % p_;
        cb[i] = (b / pow_p_[i]) % p_;
    }
    for (unsigned i = 0; i < e_; ++i)
        for (unsigned j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    // Reduce by the monic modulus from the top down.
    for (std::size_t top = prod.size() - 1; top >= e_; --top) {
        const std::uint64_t c = prod[top];
        if (c == 0) continue;
        prod[top] = 0;
        const std::size_t shift = top - e_;
        for (unsigned i = 0; i < e_; ++i)
            prod[shift + i] = (prod[shift + i] + (p_ - c) * modulus_[i]) % p_;
    }
    Elem out = 0;
    for (unsigned i = 0; i < e_; ++i) out += static_cast<Elem>(prod[i]) * pow_p_[i];
    return out;
}

Elem Field::mul(Elem a, Elem b) const noexcept {
    if (e_ == 1) return static_cast<Elem>(std::uint64_t{a} * b % p_);
    if (!mul_table_.empty()) return mul_table_[std::size_t{a} * q_ + b];
    return slow_mul(a, b);
}

Elem Field::pow(Elem a, std::uint64_t n) const noexcept {
    Elem result = 1;
    Elem base = a;
    while (n > 0) {
        if (n & 1) result = mul(result, base);
        base = mul(base, base);
        n >>= 1;
    }
    return result;
}

Elem Field::inv(Elem a) const {
    require(a != 0, ErrorKind::DivisionByZero, "inverse of zero");
    if (!inv_table_.empty()) return inv_table_[a];
    if (e_ == 1) return inv_mod_prime(a, p_);
    return pow(a, q_ - 2);
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

std::uint64_t Field::multiplicative_order(Elem a) const {
    require(a != 0 && a < q_, ErrorKind::ParamOutOfRange, "order of zero is undefined");
    std::uint64_t order = q_ - 1;
    for (auto r : prime_factors(q_ - 1)) {
        while (order % r == 0 && pow(a, order / r) == 1) order /= r;
    }
    return order;
}

bool Field::is_primitive(Elem a) const {
    return a != 0 && a < q_ && multiplicative_order(a) == q_ - 1;
}

std::vector<std::uint32_t> Field::coefficients(Elem a) const {
    std::vector<std::uint32_t> c(e_);
    for (unsigned i = 0; i < e_; ++i) c[i] = (a / pow_p_[i]) % p_;
    return c;
}

Elem Field::from_coefficients(std::span<const std::uint32_t> c) const {
    require(c.size() == e_, ErrorKind::LengthMismatch, "coefficient vector length");
    Elem out = 0;
    for (unsigned i = 0; i < e_; ++i) {
        require(c[i] < p_, ErrorKind::ParamOutOfRange, "coefficient not reduced");
        out += c[i] * pow_p_[i];
    }
    return out;
}

std::string Field::format(Elem a) const {
    if (e_ == 1) return std::to_string(a);
    std::string out;
    const auto c = coefficients(a);
    for (unsigned i = 0; i < e_; ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
    }
    return out;
}

Elem Field::parse(const std::string& text) const {
    std::vector<std::uint32_t> c;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(part, &used);
        } catch (const std::exception&) {
            fail(ErrorKind::Parse, "bad field element '" + text + "'");
        }
        require(used == part.size() && v < p_, ErrorKind::Parse,
                "bad field element '" + text + "'");
        c.push_back(static_cast<std::uint32_t>(v));
    }
    require(c.size() == e_, ErrorKind::Parse, "field element '" + text + "' has wrong arity");
    return from_coefficients(c);
}

bool Field::same_as(const Field& other) const noexcept {
    return this == &other ||
           (p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_);
}

void require_same_field(const Field& a, const Field& b) {
    require(a.same_as(b), ErrorKind::ContextMismatch, "operands live in different fields");
}

std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
    if (k > n) return 0;
    std::uint64_t result = 1;
    while (n > 0 || k > 0) {
        const std::uint64_t ni = n % p, ki = k % p;
        if (ki > ni) return 0;
        // C(ni, ki) mod p with ni < p: multiplicative formula.
        std::uint64_t num = 1, den = 1;
        const std::uint64_t kk = std::min(ki, ni - ki);
        for (std::uint64_t j = 0; j < kk; ++j) {
            num = num * ((ni - j) % p) % p;
            den = den * ((j + 1) % p) % p;
        }
        result = result * num % p * inv_mod_prime(static_cast<std::uint32_t>(den), p) % p;
        n /= p;
        k /= p;
    }
    return static_cast<std::uint32_t>(result);
}

FieldElem::FieldElem(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
    require(field_ && field_->contains(value_), ErrorKind::ParamOutOfRange,
            "element out of range for its field");
}

FieldElem FieldElem::from_int(FieldPtr field, std::int64_t v) {
    const Elem e = field->from_int(v);
    return FieldElem(std::move(field), e);
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    require_same_field(*field_, *o.field_);
    return {field_, field_->add(value_, o.value_)};
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    require_same_field(*field_, *o.field_);
    return {field_, field_->sub(value_, o.value_)};
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    require_same_field(*field_, *o.field_);
    return {field_, field_->mul(value_, o.value_)};
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    require_same_field(*field_, *o.field_);
    return {field_, field_->div(value_, o.value_)};
}

FieldElem FieldElem::operator-() const { return {field_, field_->neg(value_)}; }
FieldElem FieldElem::inv() const { return {field_, field_->inv(value_)}; }
FieldElem FieldElem::pow(std::uint64_t n) const { return {field_, field_->pow(value_, n)}; }

bool FieldElem::operator==(const FieldElem& o) const {
    require_same_field(*field_, *o.field_);
    return value_ == o.value_;
}

std::ostream& operator<<(std::ostream& os, const FieldElem& a) {
    return os << a.field()->format(a.value());
}

}  // namespace capcodes
