#include "capcodes/multipoly.hpp"

namespace capcodes {

namespace {

void weight_rec(std::size_t pos, std::size_t arity, unsigned remaining, Exponent& cur,
                std::vector<Exponent>& out) {
    if (pos + 1 == arity) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (unsigned v = remaining + 1; v-- > 0;) {
        cur[pos] = v;
        weight_rec(pos + 1, arity, remaining - v, cur, out);
    }
}

}  // namespace

std::vector<Exponent> exponents_of_weight(std::size_t arity, unsigned w) {
    std::vector<Exponent> out;
    if (arity == 0) {
        if (w == 0) out.emplace_back();
        return out;
    }
    Exponent cur(arity, 0);
    weight_rec(0, arity, w, cur, out);
    return out;
}

std::vector<Exponent> exponents_below_weight(std::size_t arity, unsigned bound) {
    std::vector<Exponent> out;
    for (unsigned w = 0; w < bound; ++w) {
        auto part = exponents_of_weight(arity, w);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

MultiPoly MultiPoly::constant(FieldPtr field, std::size_t arity, Elem c) {
    MultiPoly p(std::move(field), arity);
    p.add_term(Exponent(arity, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(FieldPtr field, std::size_t arity, std::size_t index) {
    require(index < arity, ErrorKind::ArityMismatch, "variable index out of range");
    MultiPoly p(std::move(field), arity);
    Exponent e(arity, 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::from_univariate(const Poly& u, std::size_t arity, std::size_t index) {
    require(index < arity, ErrorKind::ArityMismatch, "variable index out of range");
    MultiPoly p(u.field(), arity);
    const auto& c = u.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        Exponent e(arity, 0);
        e[index] = static_cast<std::uint32_t>(j);
        p.terms_.emplace(std::move(e), c[j]);
    }
    return p;
}

void MultiPoly::check_arity(std::size_t n) const {
    require(n == arity_, ErrorKind::ArityMismatch,
            "expected arity " + std::to_string(arity_) + ", got " + std::to_string(n));
}

Elem MultiPoly::coeff(const Exponent& i) const {
    check_arity(i.size());
    auto it = terms_.find(i);
    return it == terms_.end() ? 0 : it->second;
}

void MultiPoly::add_term(const Exponent& i, Elem c) {
    check_arity(i.size());
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(i, c);
    if (!inserted) {
        it->second = field_->add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

Degree MultiPoly::total_degree() const noexcept {
    Degree d = Degree::neg_inf();
    for (const auto& [e, c] : terms_) d = std::max(d, Degree(static_cast<int>(weight(e))));
    return d;
}

Degree MultiPoly::degree_in(std::size_t index) const noexcept {
    Degree d = Degree::neg_inf();
    for (const auto& [e, c] : terms_) d = std::max(d, Degree(static_cast<int>(e[index])));
    return d;
}

Elem MultiPoly::eval(std::span<const Elem> point) const {
    check_arity(point.size());
    const Field& f = *field_;
    Elem acc = 0;
    for (const auto& [e, c] : terms_) {
        Elem t = c;
        for (std::size_t v = 0; v < arity_; ++v)
            if (e[v]) t = f.mul(t, f.pow(point[v], e[v]));
        acc = f.add(acc, t);
    }
    return acc;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    require_same_field(*field_, *o.field_);
    check_arity(o.arity_);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(field_, arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, field_->neg(c));
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    require_same_field(*field_, *o.field_);
    check_arity(o.arity_);
    MultiPoly r(field_, arity_);
    Exponent e(arity_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t v = 0; v < arity_; ++v) e[v] = ea[v] + eb[v];
            r.add_term(e, field_->mul(ca, cb));
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(Elem c) const {
    MultiPoly r(field_, arity_);
    if (c == 0) return r;
    for (const auto& [e, a] : terms_) r.terms_.emplace(e, field_->mul(a, c));
    return r;
}

MultiPoly MultiPoly::pow(unsigned n) const {
    MultiPoly result = constant(field_, arity_, 1);
    MultiPoly base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::hasse_derivative(const Exponent& i) const {
    check_arity(i.size());
    const auto p = field_->characteristic();
    MultiPoly r(field_, arity_);
    Exponent e(arity_);
    for (const auto& [ej, c] : terms_) {
        Elem coef = c;
        bool dominated = true;
        for (std::size_t v = 0; v < arity_ && coef != 0; ++v) {
            if (ej[v] < i[v]) {
                dominated = false;
                break;
            }
            coef = field_->mul(coef, binomial_mod(ej[v], i[v], p));
            e[v] = ej[v] - i[v];
        }
        if (dominated && coef != 0) r.add_term(e, coef);
    }
    return r;
}

Elem MultiPoly::hasse_eval(const Exponent& i, std::span<const Elem> a) const {
    check_arity(i.size());
    check_arity(a.size());
    const Field& f = *field_;
    const auto p = f.characteristic();
    Elem acc = 0;
    for (const auto& [ej, c] : terms_) {
        Elem t = c;
        for (std::size_t v = 0; v < arity_ && t != 0; ++v) {
            if (ej[v] < i[v]) {
                t = 0;
                break;
            }
            t = f.mul(t, binomial_mod(ej[v], i[v], p));
            if (ej[v] > i[v]) t = f.mul(t, f.pow(a[v], ej[v] - i[v]));
        }
        acc = f.add(acc, t);
    }
    return acc;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    require_same_field(*field_, *o.field_);
    return arity_ == o.arity_ && terms_ == o.terms_;
}

int multiplicity(const MultiPoly& p, std::span<const Elem> a) {
    require(a.size() == p.arity(), ErrorKind::ArityMismatch, "point arity does not match polynomial");
    if (p.is_zero()) return kInfiniteMultiplicity;
    const int deg = p.total_degree().value();
    for (int w = 0; w <= deg; ++w) {
        for (const auto& i : exponents_of_weight(p.arity(), static_cast<unsigned>(w)))
            if (p.hasse_eval(i, a) != 0) return w;
    }
    // Unreachable for P != 0: P(a + Z) is nonzero with degree <= deg.
    fail(ErrorKind::ParamOutOfRange, "multiplicity search exceeded total degree");
}

}  // namespace capcodes
