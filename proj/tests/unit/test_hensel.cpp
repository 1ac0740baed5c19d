#include "doctest.h"

#include <random>

#include "capcodes/frs_decode.hpp"
#include "capcodes/hensel.hpp"
#include "capcodes/oracle.hpp"

using namespace capcodes;

namespace {

MultiPoly var(const FieldPtr& f, std::size_t arity, std::size_t i) { return MultiPoly::variable(f, arity, i); }
MultiPoly cst(const FieldPtr& f, std::size_t arity, Elem c) { return MultiPoly::constant(f, arity, c); }

MultiPoly random_multipoly(const FieldPtr& f, std::size_t arity, unsigned max_deg, std::mt19937_64& rng) {
    MultiPoly p(f, arity);
    for (const auto& e : exponents_below_weight(arity, max_deg + 1)) p.add_term(e, rng() % f->order());
    return p;
}

Poly random_poly(const FieldPtr& f, int max_deg, std::mt19937_64& rng) {
    std::vector<Elem> c(max_deg + 1);
    for (auto& e : c) e = rng() % f->order();
    return Poly(f, c);
}

bool contains(const std::vector<Poly>& v, const Poly& p) { return std::find(v.begin(), v.end(), p) != v.end(); }

// Y_1 - f(X) as a polynomial in (X, Y_1, .., Y_s)
MultiPoly y_minus(const Poly& f, std::size_t arity) {
    return var(f.field(), arity, 1) - MultiPoly::from_univariate(f, arity, 0);
}

}  // namespace

TEST_CASE("shift_transform") {
    auto f = Field::make(5);
    const Elem g = 2;
    MultiPoly r = shift_transform(var(f, 2, 1), 3, g);
    CHECK(r == cst(f, 2, 3) + var(f, 2, 0) * var(f, 2, 1));

    MultiPoly diff = var(f, 3, 1) - var(f, 3, 2);
    MultiPoly x = var(f, 3, 0);
    CHECK(shift_transform(diff, 4, g) == x * var(f, 3, 1) - (x * var(f, 3, 2)).scaled(g));
    CHECK(shift_transform(x, 0, g) == x);

    // Never maps a nonzero polynomial to zero.
    std::mt19937_64 rng(8);
    auto f13 = Field::make(13);
    for (int t = 0; t < 300; ++t) {
        MultiPoly q = random_multipoly(f13, 3, 3, rng);
        if (q.is_zero()) continue;
        CHECK_FALSE(shift_transform(q, rng() % 13, 2).is_zero());
    }
}

TEST_CASE("strip_x_power") {
    auto f = Field::make(7);
    MultiPoly x = var(f, 3, 0), y1 = var(f, 3, 1), y2 = var(f, 3, 2);
    auto [a, ra] = strip_x_power(x * x * y1);
    CHECK(a == y1);
    CHECK(ra == 2);
    MultiPoly c = y1 + cst(f, 3, 4);
    CHECK(strip_x_power(c).first == c);
    CHECK(strip_x_power(c).second == 0);
    auto [b, rb] = strip_x_power(x * (y1 - y2));
    CHECK(b == y1 - y2);
    CHECK(rb == 1);
}

TEST_CASE("base_roots") {
    auto f = Field::make(5);
    CHECK(base_roots(var(f, 3, 1) - var(f, 3, 2)).size() == 5);
    CHECK(base_roots(var(f, 2, 1) - cst(f, 2, 3)) == std::vector<Elem>{3});

    auto f13 = Field::make(13);
    auto p = FrsParams::make(f13, 4, 2);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        Poly msg = random_poly(f13, 1, rng);
        auto Q0 = strip_x_power(to_multipoly(interpolate(p, frs_encode(p, msg), 2))).first;
        auto roots = base_roots(Q0);
        CHECK(std::find(roots.begin(), roots.end(), msg.coeff(0)) != roots.end());
    }
}

TEST_CASE("positive X-power after shifting by a genuine base root") {
    std::mt19937_64 rng(12);
    auto f = Field::make(13);
    for (int t = 0; t < 200; ++t) {
        MultiPoly q = strip_x_power([&] {
                          MultiPoly r(f, 3);
                          while (r.is_zero()) r = random_multipoly(f, 3, 2, rng);
                          return r;
                      }())
                          .first;
        for (Elem beta : base_roots(q)) {
            const std::vector<Elem> pt{0, beta, beta};
            if (q.eval(pt) != 0) continue;
            CHECK(strip_x_power(shift_transform(q, beta, 2)).second >= 1);
        }
    }
}

TEST_CASE("enumerate_lambda examples") {
    auto f = Field::make(5);
    auto one = enumerate_lambda(var(f, 2, 1) - cst(f, 2, 4), 1, 2);
    CHECK(one == std::vector<Poly>{Poly(f, {4})});
    auto none = enumerate_lambda(var(f, 2, 1), 0, 2);
    CHECK(none == std::vector<Poly>{Poly(f)});
    CHECK(enumerate_lambda(var(f, 2, 1), -3, 2) == std::vector<Poly>{Poly(f)});

    // Y_1 - Y_2: the true roots of degree <= 1 are the constants.
    MultiPoly diff = var(f, 3, 1) - var(f, 3, 2);
    auto lam = enumerate_lambda(diff, 2, 2);
    InterpolationPoly Q{{Poly(f), Poly(f, {1}), Poly(f, {-1})}, 0, 2};
    const auto truth = oracle_y_roots(Q, 2, 2, RootMode::Shift);
    CHECK(truth.size() == 5);
    std::vector<Poly> roots;
    for (const auto& g : lam)
        if (shift_form(Q, g, 2).is_zero()) roots.push_back(g);
    CHECK(roots == truth);

    std::uint64_t nodes = 0;
    enumerate_lambda(diff, 2, 2, 1000, &nodes);
    CHECK(nodes > 0);
    CHECK_THROWS_AS(enumerate_lambda(diff, 4, 2, 10), CodingError);
}

TEST_CASE("planted roots are always enumerated, at every precision") {
    std::mt19937_64 rng(99);
    auto f = Field::make(13);
    for (int t = 0; t < 100; ++t) {
        const unsigned s = 1 + t % 3;
        const unsigned k = 1 + rng() % 4;
        Poly root = random_poly(f, static_cast<int>(k) - 1, rng);
        MultiPoly G(f, s + 1);
        while (G.is_zero()) G = random_multipoly(f, s + 1, 2, rng);
        const MultiPoly Q = y_minus(root, s + 1) * G;
        for (unsigned b = 0; b <= k; ++b) {
            auto lam = enumerate_lambda(Q, static_cast<int>(b), 2, 1'000'000);
            std::vector<Elem> prefix(root.coeffs().begin(),
                                     root.coeffs().begin() + std::min<std::size_t>(b, root.coeffs().size()));
            CHECK(contains(lam, Poly(f, prefix)));
        }
    }
}

TEST_CASE("Hensel decoding agrees with the linear-algebra decoder and the oracle") {
    std::mt19937_64 rng(5);
    auto f13 = Field::make(13);
    auto p = FrsParams::make(f13, 4, 2);
    for (int t = 0; t < 40; ++t) {
        Poly msg = random_poly(f13, 1, rng);
        Matrix y = frs_encode(p, msg);
        CHECK(hensel_list_decode(p, y, 2).contains(msg));
        const std::size_t col = rng() % 3;
        for (std::size_t r = 0; r < 4; ++r) y.at(r, col) = rng() % 13;
        auto h = hensel_list_decode(p, y, 2);
        auto l = list_decode(p, y, 2);
        CHECK(h.messages() == l.messages());
        CHECK(h.contains(msg));
    }

    auto f5 = Field::make(5);
    auto p5 = FrsParams::make(f5, 2, 2);
    Encoder enc = [&](const Poly& g) { return frs_encode(p5, g); };
    const unsigned t = frs_threshold(p5, 2);
    for_each_message(f5, 2, 100, [&](const Poly& msg) {
        for (unsigned col = 0; col < 2; ++col)
            for (Elem a = 0; a < 5; ++a)
                for (Elem b = 0; b < 5; ++b) {
                    Matrix y = frs_encode(p5, msg);
                    y.at(0, col) = a;
                    y.at(1, col) = b;
                    std::vector<Poly> want;
                    for (auto& c : oracle_list_decode(f5, 2, enc, y, t)) want.push_back(c.message);
                    CHECK(hensel_list_decode(p5, y, 2).messages() == want);
                }
    });
}
