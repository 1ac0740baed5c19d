#include "doctest.h"

#include <cmath>
#include <random>
#include <sstream>

#include "capcodes/frs.hpp"
#include "capcodes/oracle.hpp"

using namespace capcodes;

TEST_CASE("encode the GF(5) example") {
    auto f = Field::make(5);
    auto p = FrsParams::make(f, 2, 2);
    CHECK(p.N == 2);
    CHECK(p.gamma == 2);
    Matrix c = frs_encode(p, Poly(f, {0, 1}));
    // f = X at 1, 2, 4, 3
    CHECK(c.at(0, 0) == 1);
    CHECK(c.at(0, 1) == 4);
    CHECK(c.at(1, 0) == 2);
    CHECK(c.at(1, 1) == 3);

    Matrix z = frs_encode(p, Poly(f));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(z.at(j, i) == 0);
    Matrix k3 = frs_encode(p, Poly(f, {3}));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(k3.at(j, i) == 3);

    try {
        frs_encode(p, Poly(f, {0, 0, 1}));
        FAIL("expected DegreeTooLarge");
    } catch (const CodingError& e) {
        CHECK(e.kind() == ErrorKind::DegreeTooLarge);
    }
}

TEST_CASE("parameter validation") {
    auto f = Field::make(13);
    CHECK_THROWS_AS(FrsParams::make(f, 5, 2), CodingError);   // 5 does not divide 12
    CHECK_THROWS_AS(FrsParams::make(f, 4, 13), CodingError);  // k > n
    CHECK_THROWS_AS(FrsParams::make(f, 4, 2, 3), CodingError);  // 3 has order 3
    CHECK_NOTHROW(FrsParams::make(f, 4, 2, 6));
}

TEST_CASE("fold and unfold") {
    std::vector<Elem> v{10, 11, 12, 13};
    Matrix m = fold(v, 2);
    CHECK(m.at(0, 0) == 10);
    CHECK(m.at(0, 1) == 12);
    CHECK(m.at(1, 0) == 11);
    CHECK(m.at(1, 1) == 13);
    Matrix row = fold(v, 1);
    CHECK(row.rows() == 1);
    CHECK(unfold(row) == v);
    CHECK_THROWS_AS(fold(v, 3), CodingError);

    std::mt19937_64 rng(1);
    for (unsigned m : {1u, 2u, 3u, 4u, 6u, 12u}) {
        std::vector<Elem> r(12);
        for (auto& e : r) e = rng() % 13;
        CHECK(unfold(fold(r, m)) == r);
    }
}

TEST_CASE("columns are windows of the unfolded Reed-Solomon codeword") {
    auto f = Field::make(13);
    auto p = FrsParams::make(f, 3, 5);
    Poly msg(f, {4, 0, 7, 1, 12});
    std::vector<Elem> rs;
    for (unsigned e = 0; e < 12; ++e) rs.push_back(msg.eval(f->pow(2, e)));
    CHECK(unfold(frs_encode(p, msg)) == rs);
    CHECK(fold(rs, 3) == frs_encode(p, msg));
}

TEST_CASE("derived parameters") {
    auto f13 = Field::make(13);
    auto p = FrsParams::make(f13, 3, 6);
    CHECK(p.N == 4);
    CHECK(frs_derived_params(p).min_distance == 3);
    CHECK(frs_derived_params(FrsParams::make(f13, 3, 3)).min_distance == 4);
    auto p2 = FrsParams::make(f13, 4, 2);
    CHECK(frs_derived_params(p2).rate == Rational(1, 6));
}

TEST_CASE("minimum distance by exhaustive pairs") {
    auto check = [](unsigned q, unsigned m, unsigned k) {
        auto f = Field::make(q);
        auto p = FrsParams::make(f, m, k);
        std::vector<Matrix> words;
        for_each_message(f, k, 1'000'000, [&](const Poly& g) { words.push_back(frs_encode(p, g)); });
        const unsigned dmin = frs_derived_params(p).min_distance;
        unsigned seen = p.N;
        for (std::size_t a = 0; a < words.size(); ++a)
            for (std::size_t b = a + 1; b < words.size(); ++b)
                seen = std::min(seen, p.N - agreement(words[a], words[b]));
        CHECK(seen >= dmin);
        CHECK(seen >= 1);
    };
    for (unsigned k = 1; k <= 3; ++k) check(5, 2, k);
    for (unsigned k = 1; k <= 2; ++k) check(13, 3, k);
}

TEST_CASE("decoding radius") {
    auto f13 = Field::make(13);
    // 36^{1/3}/3 ~ 1.10, so floor(3 - 1.10) = 1
    CHECK(frs_decoding_radius(FrsParams::make(f13, 4, 2), 2, Rational(0)) == 1);
    // Rate one corrects nothing.
    auto full = FrsParams::make(f13, 4, 12);
    CHECK(frs_decoding_radius(full, 4, Rational(0)) <= 0);
    CHECK(frs_decoding_radius(full, 4, Rational(1, 100)) <= 0);
    CHECK_THROWS_AS(frs_decoding_radius(full, 5, Rational(0)), CodingError);
    CHECK_THROWS_AS(frs_decoding_radius(full, 0, Rational(0)), CodingError);
    CHECK_THROWS_AS(frs_decoding_radius(full, 2, Rational(-1, 2)), CodingError);

    // Agrees with a floating-point evaluation away from integer boundaries,
    // and is non-increasing in k.
    auto f31 = Field::make(31);
    for (unsigned m : {2u, 3u, 5u, 6u}) {
        for (unsigned s = 1; s <= m; ++s) {
            for (Rational delta : {Rational(0), Rational(1, 10), Rational(1, 2)}) {
                long prev = LONG_MAX;
                for (unsigned k = 1; k <= 30; ++k) {
                    auto p = FrsParams::make(f31, m, k);
                    const long e = frs_decoding_radius(p, s, delta);
                    CHECK(e <= prev);
                    prev = e;
                    const double w = m - s + 1;
                    const double x = p.N - (1 + boost::rational_cast<double>(delta)) *
                                               std::pow(std::pow(k, s) * p.N * w, 1.0 / (s + 1)) / w;
                    if (std::abs(x - std::round(x)) > 1e-6) CHECK(e == static_cast<long>(std::floor(x)));
                }
            }
        }
    }
}

TEST_CASE("capacity parameter choice") {
    auto a = choose_capacity_params(Rational(1, 2));
    CHECK(a.s == 2);
    CHECK(a.m == 4);
    CHECK(a.delta == Rational(1, 2));
    auto b = choose_capacity_params(Rational(1, 3));
    CHECK(b.s == 3);
    CHECK(b.m == 9);
    CHECK(choose_capacity_params(Rational(2, 7)).s == 4);
    for (int den = 2; den < 40; ++den) {
        auto c = choose_capacity_params(Rational(1, den));
        CHECK(c.s <= c.m);
    }
    CHECK_THROWS_AS(choose_capacity_params(Rational(0)), CodingError);
    CHECK_THROWS_AS(choose_capacity_params(Rational(1)), CodingError);
}

TEST_CASE("text format round trip") {
    auto f = Field::make(5);
    auto p = FrsParams::make(f, 2, 2);
    std::ostringstream out;
    write_frs_word(out, p, frs_encode(p, Poly(f, {0, 1})));
    CHECK(out.str() == "5 2 2 2 2\n1 4\n2 3\n");
    std::istringstream in(out.str());
    auto w = read_frs_word(in);
    CHECK(w.params.k == 2);
    CHECK(w.word == frs_encode(p, Poly(f, {0, 1})));

    auto f9 = Field::make(9);
    auto p9 = FrsParams::make(f9, 4, 3);
    Poly msg(f9, {5, 0, 7});
    std::ostringstream o9;
    write_frs_word(o9, p9, frs_encode(p9, msg));
    std::istringstream i9(o9.str());
    CHECK(read_frs_word(i9).word == frs_encode(p9, msg));

    std::istringstream bad("5 2 2 2 2\n1 4\n2\n");
    CHECK_THROWS_AS(read_frs_word(bad), CodingError);
}
