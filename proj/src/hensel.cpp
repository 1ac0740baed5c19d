#include "capcodes/hensel.hpp"

#include <set>

#include "capcodes/frs_decode.hpp"

namespace capcodes {

MultiPoly to_multipoly(const InterpolationPoly& Q) {
    const std::size_t arity = Q.s() + 1;
    MultiPoly out(Q.field(), arity);
    for (unsigned i = 0; i <= Q.s(); ++i) {
        const auto& c = Q.A[i].coeffs();
        for (std::size_t e = 0; e < c.size(); ++e) {
            if (c[e] == 0) continue;
            Exponent ex(arity, 0);
            ex[0] = static_cast<std::uint32_t>(e);
            if (i) ex[i] = 1;
            out.add_term(ex, c[e]);
        }
    }
    return out;
}

MultiPoly shift_transform(const MultiPoly& Q, Elem b, Elem gamma) {
    const auto& field = Q.field();
    const std::size_t arity = Q.arity();
    // powers[i][e] = (b + gamma^{i-1} X Y_i)^e, built on demand.
    std::vector<std::vector<MultiPoly>> powers(arity);
    Elem g = 1;
    for (std::size_t i = 1; i < arity; ++i) {
        MultiPoly lin = MultiPoly::constant(field, arity, b);
        Exponent xy(arity, 0);
        xy[0] = 1;
        xy[i] = 1;
        lin.add_term(xy, g);
        powers[i].push_back(MultiPoly::constant(field, arity, 1));
        powers[i].push_back(std::move(lin));
        g = field->mul(g, gamma);
    }
    auto power = [&](std::size_t i, std::uint32_t e) -> const MultiPoly& {
        while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * powers[i][1]);
        return powers[i][e];
    };

    MultiPoly out(field, arity);
    for (const auto& [ex, c] : Q.terms()) {
        Exponent xonly(arity, 0);
        xonly[0] = ex[0];
        MultiPoly term(field, arity);
        term.add_term(xonly, c);
        for (std::size_t i = 1; i < arity; ++i)
            if (ex[i]) term = term * power(i, ex[i]);
        out = out + term;
    }
    return out;
}

std::pair<MultiPoly, unsigned> strip_x_power(const MultiPoly& Q) {
    require(!Q.is_zero(), ErrorKind::ParamOutOfRange, "cannot strip X from the zero polynomial");
    std::uint32_t r = UINT32_MAX;
    for (const auto& [ex, c] : Q.terms()) r = std::min(r, ex[0]);
    if (r == 0) return {Q, 0};
    MultiPoly out(Q.field(), Q.arity());
    for (const auto& [ex, c] : Q.terms()) {
        Exponent e = ex;
        e[0] -= r;
        out.add_term(e, c);
    }
    return {std::move(out), r};
}

std::vector<Elem> base_roots(const MultiPoly& Q) {
    const auto& field = Q.field();
    // Q(0, Y, .., Y) as a univariate polynomial in Y.
    std::vector<Elem> c;
    for (const auto& [ex, v] : Q.terms()) {
        if (ex[0] != 0) continue;
        std::size_t deg = 0;
        for (std::size_t i = 1; i < ex.size(); ++i) deg += ex[i];
        if (c.size() <= deg) c.resize(deg + 1, 0);
        c[deg] = field->add(c[deg], v);
    }
    const Poly diag(field, std::move(c));
    std::vector<Elem> out;
    for (Elem b = 0; b < field->order(); ++b)
        if (diag.is_zero() || diag.eval(b) == 0) out.push_back(b);
    return out;
}

namespace {

struct Lifter {
    Elem gamma;
    std::uint64_t budget;
    std::uint64_t nodes = 0;

    std::vector<Poly> run(const MultiPoly& Q, int k) {
        require(++nodes <= budget, ErrorKind::BudgetExceeded, "Hensel enumeration exceeded its node budget");
        const auto& field = Q.field();
        if (k <= 0) return {Poly(field)};
        const MultiPoly Q0 = strip_x_power(Q).first;
        std::set<Poly, PolyLess> out;
        for (Elem beta : base_roots(Q0)) {
            const MultiPoly next = strip_x_power(shift_transform(Q0, beta, gamma)).first;
            for (const Poly& g : run(next, k - 1)) out.insert(g.shifted(1) + Poly::constant(field, beta));
        }
        return {out.begin(), out.end()};
    }
};

}  // namespace

std::vector<Poly> enumerate_lambda(const MultiPoly& Q, int k, Elem gamma, std::uint64_t node_budget,
                                   std::uint64_t* nodes) {
    require(!Q.is_zero(), ErrorKind::ParamOutOfRange, "Q must be nonzero");
    Lifter lift{gamma, node_budget};
    auto out = lift.run(Q, k);
    if (nodes) *nodes = lift.nodes;
    return out;
}

DecodeResult hensel_list_decode(const FrsParams& params, const Matrix& y, unsigned s, const DecodeOptions& opt) {
    DecodeResult res;
    const InterpolationPoly Q = interpolate(params, y, s);
    res.diag.d = Q.d;
    res.diag.threshold = frs_threshold(params, s);
    const auto lambda =
        enumerate_lambda(to_multipoly(Q), static_cast<int>(params.k), params.gamma, opt.node_budget, &res.diag.nodes);
    res.diag.enumerated = lambda.size();
    for (const Poly& f : lambda) {
        if (!shift_form(Q, f, params.gamma).is_zero()) continue;
        const unsigned a = agreement(frs_encode(params, f), y);
        if (a >= res.diag.threshold) res.candidates.push_back({f, a});
    }
    normalize_candidates(res.candidates);
    return res;
}

}  // namespace capcodes
