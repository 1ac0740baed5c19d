#include "doctest.h"

#include <random>

#include "capcodes/field.hpp"
#include "capcodes/multipoly.hpp"
#include "capcodes/poly.hpp"

using namespace capcodes;

namespace {

std::vector<std::uint32_t> prime_powers_up_to(std::uint32_t limit) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t q = 2; q <= limit; ++q) {
        std::uint32_t p = 2;
        while (q % p) ++p;
        std::uint32_t r = q;
        while (r % p == 0) r /= p;
        if (r == 1) out.push_back(q);
    }
    return out;
}

// Order by repeated multiplication; deliberately naive.
std::uint64_t naive_order(const Field& f, Elem a) {
    Elem x = a;
    std::uint64_t n = 1;
    while (x != 1) {
        x = f.mul(x, a);
        ++n;
    }
    return n;
}

MultiPoly random_multipoly(const FieldPtr& f, std::size_t arity, unsigned max_deg, std::mt19937_64& rng) {
    MultiPoly p(f, arity);
    for (unsigned w = 0; w <= max_deg; ++w)
        for (const auto& e : exponents_of_weight(arity, w)) p.add_term(e, static_cast<Elem>(rng() % f->order()));
    return p;
}

// P(a + Z) by literally substituting X_v -> a_v + Z_v and expanding.
MultiPoly taylor_by_substitution(const MultiPoly& p, std::span<const Elem> a) {
    const auto& f = p.field();
    const std::size_t n = p.arity();
    MultiPoly out(f, n);
    for (const auto& [e, c] : p.terms()) {
        MultiPoly term = MultiPoly::constant(f, n, c);
        for (std::size_t v = 0; v < n; ++v) {
            MultiPoly lin = MultiPoly::constant(f, n, a[v]) + MultiPoly::variable(f, n, v);
            term = term * lin.pow(e[v]);
        }
        out = out + term;
    }
    return out;
}

}  // namespace

TEST_CASE("field ops on small prime fields") {
    auto f7 = Field::make(7);
    CHECK(f7->mul(3, 5) == 1);
    CHECK(f7->inv(1) == 1);
    auto f13 = Field::make(13);
    CHECK(f13->pow(2, 12) == 1);
    CHECK_THROWS_AS(f13->inv(0), CodingError);
    try {
        f13->div(3, 0);
    } catch (const CodingError& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
    }

    FieldElem a = FieldElem::from_int(f7, 3), b = FieldElem::from_int(f7, 5);
    CHECK((a * b).value() == 1);
    CHECK((a - b).value() == 5);
    CHECK((a / b * b) == a);
    FieldElem c = FieldElem::from_int(Field::make(5), 3);
    try {
        (void)(a + c);
        FAIL("expected ContextMismatch");
    } catch (const CodingError& e) {
        CHECK(e.kind() == ErrorKind::ContextMismatch);
    }
    CHECK_THROWS_AS(Field::make(12), CodingError);
}

TEST_CASE("extension field moduli and primitive elements") {
    auto f4 = Field::make(4);
    CHECK(f4->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    auto f8 = Field::make(8);
    CHECK(f8->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
    auto f9 = Field::make(9);
    CHECK(f9->modulus() == std::vector<std::uint32_t>{1, 0, 1});
    // In GF(3)[i], i^2 = -1: 1 has order 1, 2 order 2, i order 4, 1+i order 8.
    CHECK(f9->primitive() == 4);
    CHECK(f9->format(4) == "1,1");
    CHECK(f9->parse("1,1") == 4);
    CHECK_THROWS_AS(f9->parse("3,0"), CodingError);
    CHECK_THROWS_AS(f9->parse("1"), CodingError);
}

TEST_CASE("find_primitive matches exhaustive order search") {
    CHECK(Field::make(5)->primitive() == 2);
    CHECK(Field::make(7)->primitive() == 3);
    CHECK(Field::make(13)->primitive() == 2);

    for (auto q : prime_powers_up_to(1024)) {
        auto f = Field::make(q);
        const Elem g = f->primitive();
        CHECK(naive_order(*f, g) == q - 1);
        // Smallest such element: every smaller nonzero element has lower order.
        if (q <= 64)
            for (Elem a = 1; a < g; ++a) CHECK(naive_order(*f, a) < q - 1);
    }
}

TEST_CASE("field axioms hold exhaustively for q <= 49") {
    for (auto q : prime_powers_up_to(49)) {
        auto fp = Field::make(q);
        const Field& f = *fp;
        bool ok = true;
        for (Elem a = 0; a < q && ok; ++a) {
            ok &= f.add(a, 0) == a && f.mul(a, 1) == a && f.add(a, f.neg(a)) == 0;
            if (a) ok &= f.mul(a, f.inv(a)) == 1;
            for (Elem b = 0; b < q && ok; ++b) {
                ok &= f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a);
                ok &= f.sub(f.add(a, b), b) == a;
                for (Elem c = 0; c < q && ok; ++c) {
                    ok &= f.add(f.add(a, b), c) == f.add(a, f.add(b, c));
                    ok &= f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
                    ok &= f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
                }
            }
        }
        CHECK_MESSAGE(ok, "axiom failure in GF(" << q << ")");
    }
}

TEST_CASE("large extension field without tables agrees with its own axioms") {
    auto f = Field::make(3, 6);  // 729 > table threshold
    std::mt19937_64 rng(5);
    for (int i = 0; i < 2000; ++i) {
        Elem a = rng() % 729, b = rng() % 729, c = rng() % 729;
        CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        if (a) CHECK(f->mul(a, f->inv(a)) == 1);
    }
}

TEST_CASE("Lucas binomials agree with Pascal's triangle") {
    for (std::uint32_t p : {2u, 3u, 5u, 13u}) {
        std::vector<std::vector<std::uint32_t>> pascal(60, std::vector<std::uint32_t>(60, 0));
        for (int n = 0; n < 60; ++n) {
            pascal[n][0] = 1;
            for (int k = 1; k <= n; ++k) pascal[n][k] = (pascal[n - 1][k - 1] + pascal[n - 1][k]) % p;
        }
        for (int n = 0; n < 60; ++n)
            for (int k = 0; k < 60; ++k) CHECK(binomial_mod(n, k, p) == pascal[n][k]);
    }
}

TEST_CASE("polynomial basics") {
    auto f = Field::make(7);
    Poly zero(f);
    CHECK(zero.degree().is_neg_inf());
    CHECK((zero.degree() + Degree(3)).is_neg_inf());
    Poly a(f, {1, 2, 3}), b(f, {0, 1});
    CHECK((a * b).degree() == a.degree() + b.degree());
    CHECK((a * zero).is_zero());
    auto [quo, rem] = (a * b + Poly(f, {4})).divmod(b);
    CHECK(quo == a);
    CHECK(rem == Poly(f, {4}));
    CHECK(Poly(f, {1, 2, 0, 0}).coeffs().size() == 2);
    CHECK(Poly::parse(f, a.format()) == a);
    CHECK(Poly::parse(f, "0").is_zero());
    CHECK(a.translate(2).eval(1) == a.eval(3));
    CHECK_THROWS_AS(a.divmod(zero), CodingError);
}

TEST_CASE("formal derivative") {
    auto f7 = Field::make(7);
    CHECK(Poly(f7, {0, 0, 1}).formal_derivative(1) == Poly(f7, {0, 2}));
    Poly g(f7, {3, 1, 4, 1, 5});
    CHECK(g.formal_derivative(0) == g);
    auto f3 = Field::make(3);
    CHECK(Poly(f3, {0, 0, 0, 1}).formal_derivative(1).is_zero());
    // Iterated: X^5 -> 5*4 X^3 over GF(7)
    CHECK(Poly(f7, {0, 0, 0, 0, 0, 1}).formal_derivative(2) == Poly(f7, {0, 0, 0, 20}));
}

TEST_CASE("Hasse derivative examples") {
    auto f7 = Field::make(7);
    MultiPoly x3 = MultiPoly::from_univariate(Poly(f7, {0, 0, 0, 1}), 1, 0);
    CHECK(x3.hasse_derivative({2}) == MultiPoly::from_univariate(Poly(f7, {0, 3}), 1, 0));

    MultiPoly xy = MultiPoly::variable(f7, 2, 0) * MultiPoly::variable(f7, 2, 1);
    CHECK(xy.hasse_derivative({1, 1}) == MultiPoly::constant(f7, 2, 1));
    CHECK_THROWS_AS(xy.hasse_derivative({1}), CodingError);

    auto f2 = Field::make(2);
    MultiPoly x2 = MultiPoly::from_univariate(Poly(f2, {0, 0, 1}), 1, 0);
    CHECK(x2.hasse_derivative({1}).is_zero());

    // Linearity: (lambda P)^(i) = lambda P^(i), (P+Q)^(i) = P^(i) + Q^(i)
    std::mt19937_64 rng(11);
    auto f13 = Field::make(13);
    for (int t = 0; t < 50; ++t) {
        MultiPoly p = random_multipoly(f13, 2, 4, rng), q = random_multipoly(f13, 2, 4, rng);
        Exponent i{static_cast<std::uint32_t>(rng() % 3), static_cast<std::uint32_t>(rng() % 3)};
        Elem lambda = rng() % 13;
        CHECK(p.scaled(lambda).hasse_derivative(i) == p.hasse_derivative(i).scaled(lambda));
        CHECK((p + q).hasse_derivative(i) == p.hasse_derivative(i) + q.hasse_derivative(i));
    }
}

TEST_CASE("Hasse derivative composition identity over GF(13)") {
    auto f = Field::make(13);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        std::vector<Elem> c(1 + rng() % 12);
        for (auto& v : c) v = rng() % 13;
        Poly p(f, c);
        const int deg = p.degree().value();
        for (int j = 0; j <= deg; ++j) {
            for (int k = 0; j + k <= deg; ++k) {
                Poly lhs = p.hasse_derivative(j).hasse_derivative(k);
                Poly rhs = p.hasse_derivative(j + k).scaled(binomial_mod(j + k, j, 13));
                CHECK(lhs == rhs);
            }
        }
        // Univariate Hasse agrees with the multivariate implementation.
        MultiPoly mp = MultiPoly::from_univariate(p, 1, 0);
        for (unsigned j = 0; j < 4; ++j)
            CHECK(mp.hasse_derivative({j}) == MultiPoly::from_univariate(p.hasse_derivative(j), 1, 0));
    }
}

TEST_CASE("Taylor identity P(a+z) = sum_i P^(i)(a) z^i, exhaustive over a, z") {
    std::mt19937_64 rng(17);
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
        auto f = Field::make(q);
        for (std::size_t n : {1u, 2u}) {
            std::vector<MultiPoly> polys;
            for (int t = 0; t < 3; ++t) polys.push_back(random_multipoly(f, n, 4, rng));
            const auto idx = exponents_below_weight(n, 5);
            std::size_t points = 1;
            for (std::size_t v = 0; v < n; ++v) points *= q;
            bool ok = true;
            for (const auto& p : polys) {
                for (std::size_t ai = 0; ai < points; ++ai) {
                    std::vector<Elem> a(n);
                    for (std::size_t v = 0, r = ai; v < n; ++v, r /= q) a[v] = r % q;
                    std::vector<Elem> derivs;
                    for (const auto& i : idx) derivs.push_back(p.hasse_eval(i, a));
                    for (std::size_t zi = 0; zi < points; ++zi) {
                        std::vector<Elem> z(n), az(n);
                        for (std::size_t v = 0, r = zi; v < n; ++v, r /= q) z[v] = r % q;
                        for (std::size_t v = 0; v < n; ++v) az[v] = f->add(a[v], z[v]);
                        Elem sum = 0;
                        for (std::size_t t = 0; t < idx.size(); ++t) {
                            Elem term = derivs[t];
                            for (std::size_t v = 0; v < n; ++v) term = f->mul(term, f->pow(z[v], idx[t][v]));
                            sum = f->add(sum, term);
                        }
                        ok &= sum == p.eval(az);
                    }
                }
            }
            CHECK_MESSAGE(ok, "Taylor identity failed for q=" << q << " n=" << n);
        }
    }
}

TEST_CASE("multiplicity") {
    auto f5 = Field::make(5);
    MultiPoly x2 = MultiPoly::from_univariate(Poly(f5, {0, 0, 1}), 1, 0);
    const std::vector<Elem> origin{0};
    CHECK(multiplicity(x2, origin) == 2);
    CHECK(multiplicity(MultiPoly::constant(f5, 1, 1), origin) == 0);
    CHECK(multiplicity(MultiPoly(f5, 1), origin) == kInfiniteMultiplicity);
    CHECK_THROWS_AS(multiplicity(x2, std::vector<Elem>{0, 0}), CodingError);

    // (X-1)^2 (Y-1) at (1,1): oracle is the lowest weight of P(a+Z).
    MultiPoly xm1 = MultiPoly::variable(f5, 2, 0) - MultiPoly::constant(f5, 2, 1);
    MultiPoly ym1 = MultiPoly::variable(f5, 2, 1) - MultiPoly::constant(f5, 2, 1);
    MultiPoly p = xm1 * xm1 * ym1;
    const std::vector<Elem> a{1, 1};
    MultiPoly shifted = taylor_by_substitution(p, a);
    int lowest = kInfiniteMultiplicity;
    for (const auto& [e, c] : shifted.terms()) lowest = std::min<int>(lowest, weight(e));
    CHECK(lowest == 3);
    CHECK(multiplicity(p, a) == 3);
}

TEST_CASE("multiplicity >= 1 iff P(a) = 0, and agrees with substitution oracle") {
    auto f = Field::make(7);
    std::mt19937_64 rng(23);
    for (int t = 0; t < 200; ++t) {
        MultiPoly p = random_multipoly(f, 2, 3, rng);
        // Force a few zeros by subtracting the value at a random point.
        std::vector<Elem> a{static_cast<Elem>(rng() % 7), static_cast<Elem>(rng() % 7)};
        if (t % 2 == 0) p = p - MultiPoly::constant(f, 2, p.eval(a));
        const int m = multiplicity(p, a);
        CHECK((m >= 1) == (p.eval(a) == 0));
        MultiPoly shifted = taylor_by_substitution(p, a);
        int lowest = kInfiniteMultiplicity;
        for (const auto& [e, c] : shifted.terms()) lowest = std::min<int>(lowest, weight(e));
        CHECK(m == lowest);
    }
}

TEST_CASE("frobenius shift check") {
    auto f5 = Field::make(5);
    CHECK(f5->primitive() == 2);
    CHECK(frobenius_shift_check(Poly(f5, {3})));
    CHECK(frobenius_shift_check(Poly(f5, {0, 1})));
    CHECK(frobenius_shift_check(Poly(f5, {1, 1})));
    CHECK_THROWS_AS(frobenius_shift_check(Poly(f5, {0, 0, 0, 0, 1})), CodingError);
    // Check the reduction by hand for f = X: X^5 = X * X^4 = 2X mod (X^4 - 2).
    CHECK(pow_mod(Poly(f5, {0, 1}), 5, frobenius_modulus(f5)) == Poly(f5, {0, 2}));
}

TEST_CASE("X^{q-1} - gamma has no root, and is irreducible for q <= 9") {
    for (auto q : prime_powers_up_to(49)) {
        if (q < 3) continue;
        auto f = Field::make(q);
        const Poly e = frobenius_modulus(f);
        for (Elem x = 0; x < q; ++x) CHECK(e.eval(x) != 0);
        if (q > 9) continue;
        // Trial division by every monic polynomial of degree 1..(q-1)/2 over GF(q).
        for (unsigned dg = 1; dg <= (q - 1) / 2; ++dg) {
            std::uint64_t count = 1;
            for (unsigned i = 0; i < dg; ++i) count *= q;
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                std::vector<Elem> c(dg + 1);
                for (unsigned i = 0, r = static_cast<unsigned>(idx); i < dg; ++i, r /= q) c[i] = r % q;
                c[dg] = 1;
                CHECK_FALSE((e % Poly(f, c)).is_zero());
            }
        }
    }
}
