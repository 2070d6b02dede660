#include <random>

#include "doctest.h"
#include "levelone/character.hpp"
#include "levelone/onedim.hpp"

using namespace levelone;

namespace {

LaurentPoly q(int e) { return LaurentPoly::monomial(e); }

Character single(int ell, Seq s, LaurentPoly p = LaurentPoly(1)) {
    Character c(ell);
    c.add(std::move(s), p);
    return c;
}

long long binom(int n, int k) {
    long long r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

// Reference shuffle: every bitmask choosing the first block's positions,
// degree counted from the merged word with the Cartan entries written out.
Character shuffle_ref(int ell, const Seq& a, const Seq& b) {
    const int n = static_cast<int>(a.size() + b.size());
    auto form = [ell](int x, int y) {
        if (x == y) return 2;
        if (ell == 2) return -2;
        return (((x - y) % ell + ell) % ell == 1 || ((y - x) % ell + ell) % ell == 1) ? -1 : 0;
    };
    Character out(ell);
    for (int mask = 0; mask < (1 << n); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) != static_cast<int>(a.size())) continue;
        Seq w;
        int deg = 0, ia = 0, ib = 0;
        std::vector<int> placed_b;
        for (int p = 0; p < n; ++p) {
            if (mask & (1 << p)) {
                const int x = a[static_cast<std::size_t>(ia++)];
                for (int y : placed_b) deg -= form(x, y);
                w.push_back(x);
            } else {
                const int y = b[static_cast<std::size_t>(ib++)];
                placed_b.push_back(y);
                w.push_back(y);
            }
        }
        out.add(w, q(deg));
    }
    return out;
}

Character random_char(std::mt19937& rng, int ell, int len) {
    std::uniform_int_distribution<int> letter(0, ell - 1);
    Seq s;
    for (int t = 0; t < len; ++t) s.push_back(letter(rng));
    return single(ell, s);
}

}  // namespace

TEST_SUITE("laurent") {
    TEST_CASE("quantum integers") {
        CHECK(qint(2) == q(1) + q(-1));
        CHECK(qint(1) == LaurentPoly(1));
        CHECK(qint(0).is_zero());
        CHECK(qfact(0) == LaurentPoly(1));
        CHECK(qfact(3) == q(3) + LaurentPoly::monomial(1, 2) + LaurentPoly::monomial(-1, 2) + q(-3));
        CHECK_THROWS_AS(qint(-1), InvalidDatum);
    }

    TEST_CASE("arithmetic and shifts") {
        auto p = q(2) - q(-1) + LaurentPoly(3);
        CHECK(p.at_q1() == 3);
        CHECK((p - p).is_zero());
        CHECK(p.shifted(1).coeff(3) == 1);
        CHECK(shift_between(p.shifted(-4), p) == -4);
        CHECK_FALSE(shift_between(p, q(0)));
        CHECK(to_string(qfact(3)) == "q^3 + 2q + 2q^-1 + q^-3");
        CHECK(to_string(-q(0)) == "-1");
        CHECK(LaurentPoly::monomial(0, 4).divided(2) == LaurentPoly(2));
        CHECK_FALSE(LaurentPoly::monomial(0, 3).divided(2));
    }
}

TEST_SUITE("shuffles") {
    TEST_CASE("coset representatives") {
        CHECK(coset_shuffles(1, 2).size() == 3);
        CHECK(coset_shuffles(2, 2).size() == 6);
        auto p = coset_shuffles(0, 4);
        REQUIRE(p.size() == 1);
        CHECK(p.front().inversions.empty());
        for (int a = 0; a <= 5; ++a)
            for (int b = 0; b <= 5; ++b) CHECK(static_cast<long long>(coset_shuffles(a, b).size()) == binom(a + b, a));
        CHECK_THROWS_AS(coset_shuffles(-1, 2), InvalidDatum);
    }

    TEST_CASE("crossing degrees") {
        const auto pats = coset_shuffles(1, 2);
        CHECK(shuffle_degree(3, {1}, {0, 1}, pats.front()) == 0);
        CHECK(apply_pattern({1}, {0, 1}, pats.back()) == Seq{0, 1, 1});
        CHECK(shuffle_degree(3, {1}, {0, 1}, pats.back()) == -1);
        CHECK(shuffle_degree(3, {0}, {0}, coset_shuffles(1, 1).back()) == -2);
    }

    TEST_CASE("[1] shuffle [0,1] at ell = 3") {
        auto c = qshuffle(single(3, {1}), single(3, {0, 1}));
        Character want(3);
        want.add({1, 0, 1}, LaurentPoly(1));
        want.add({0, 1, 1}, q(1) + q(-1));
        CHECK(c == want);
        auto c1 = c.at_q1();
        CHECK(c1.coeff({1, 0, 1}) == LaurentPoly(1));
        CHECK(c1.coeff({0, 1, 1}) == LaurentPoly(2));
        CHECK(c1.terms().size() == 2);
    }

    TEST_CASE("unit and [0] shuffle [0]") {
        auto c = single(4, {2, 3, 0});
        CHECK(qshuffle(c, Character::unit(4)) == c);
        CHECK(qshuffle(Character::unit(4), c) == c);
        for (int ell = 2; ell <= 4; ++ell) {
            auto d = qshuffle(single(ell, {0}), single(ell, {0}));
            CHECK(d == single(ell, {0, 0}, LaurentPoly(1) + q(-2)));
            CHECK(d == single(ell, {0, 0}, qint(2).shifted(-1)));
        }
    }

    TEST_CASE("mixed ell and content are rejected") {
        CHECK_THROWS_AS(qshuffle(single(3, {0}), single(4, {0})), InvalidDatum);
        Character c(3);
        c.add({0, 1}, LaurentPoly(1));
        CHECK_THROWS_AS(c.add({0, 0}, LaurentPoly(1)), InvalidDatum);
        c.add({1, 3}, LaurentPoly(1));  // letters reduced mod ℓ: same content
        CHECK(c.coeff({1, 0}) == LaurentPoly(1));
    }

    TEST_CASE("property: agrees with a bitmask reference") {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            const int ell = 2 + trial % 4;
            auto a = random_char(rng, ell, trial % 4);
            auto b = random_char(rng, ell, (trial / 4) % 4);
            CHECK(qshuffle(a, b) == shuffle_ref(ell, a.terms().begin()->first, b.terms().begin()->first));
        }
    }

    TEST_CASE("property: associative, commutative at q = 1, binomial term count") {
        std::mt19937 rng(3);
        for (int trial = 0; trial < 120; ++trial) {
            const int ell = 2 + trial % 3;
            auto a = random_char(rng, ell, 1 + trial % 3);
            auto b = random_char(rng, ell, 1 + (trial / 3) % 3);
            auto c = random_char(rng, ell, (trial / 9) % 3);
            CHECK(qshuffle(qshuffle(a, b), c) == qshuffle(a, qshuffle(b, c)));
            CHECK(qshuffle(a, b).at_q1() == qshuffle(b, a).at_q1());
            long long mass = 0;
            const auto ab = qshuffle(a, b);
            for (const auto& [s, p] : ab.terms()) mass += p.at_q1();
            const int la = static_cast<int>(a.terms().begin()->first.size());
            const int lb = static_cast<int>(b.terms().begin()->first.size());
            CHECK(mass == binom(la + lb, la));
        }
    }

    TEST_CASE("property: [i]^n equals [n]! [i^n] up to a monomial, n <= 5") {
        for (int ell = 2; ell <= 4; ++ell)
            for (int i = 0; i < ell; ++i) {
                Character acc = Character::unit(ell);
                for (int n = 1; n <= 5; ++n) {
                    acc = qshuffle(acc, single(ell, {i}));
                    CHECK(shift_between(acc, char_Lin(ell, i, n)).has_value());
                }
            }
    }

    TEST_CASE("property: T(0;k) shuffle [ell-1] has mass k+1") {
        for (int ell = 2; ell <= 5; ++ell)
            for (int k = 0; k <= 3 * ell; ++k) {
                long long mass = 0;
                const auto prod = qshuffle(char_trivial(ell, 0, k), single(ell, {ell - 1}));
                for (const auto& [s, p] : prod.terms()) mass += p.at_q1();
                CHECK(mass == k + 1);
            }
    }
}

TEST_SUITE("module characters") {
    TEST_CASE("families") {
        CHECK(char_trivial(4, 0, 6) == single(4, {0, 1, 2, 3, 0, 1}));
        CHECK(char_trivial(3, 2, 0) == Character::unit(3));
        CHECK(char_sign(4, 1, 3) == single(4, {1, 0, 3}));
        CHECK(char_sign(3, 1, 0) == Character::unit(3));
        CHECK(char_Lin(5, 2, 2) == single(5, {2, 2}, q(1) + q(-1)));
        CHECK(char_Lin(5, 2, 0) == Character::unit(5));
        CHECK_THROWS_AS(char_trivial(3, 0, -1), InvalidDatum);
        CHECK(char_trivial(4, 0, 6).content() == gamma(4, Residue(4, 0), 6, Direction::plus));
    }

    TEST_CASE("epsilon from characters") {
        auto t = char_trivial(4, 0, 6);
        CHECK(eps_from_char(t, 1, Side::right) == 1);
        CHECK(eps_from_char(t, 0, Side::right) == 0);
        CHECK(eps_from_char(t, 0, Side::left) == 1);
        CHECK(eps_from_char(t, 3, Side::left) == 0);
        for (int n = 0; n <= 5; ++n) CHECK(eps_from_char(char_Lin(3, 1, n), 1, Side::right) == n);
        CHECK_THROWS_AS(eps_from_char(Character(3), 0, Side::right), InvalidDatum);
        for (int ell = 2; ell <= 5; ++ell)
            for (int i = 0; i < ell; ++i)
                for (int k = 1; k <= 3 * ell; ++k)
                    for (int j = 0; j < ell; ++j) {
                        const auto c = char_trivial(ell, i, k);
                        CHECK(eps_from_char(c, j, Side::right) == delta(ell, j, i + k - 1));
                        CHECK(eps_from_char(c, j, Side::left) == delta(ell, j, i));
                    }
    }

    TEST_CASE("e operator") {
        CHECK(e_op(single(3, {0, 1}), 1) == single(3, {0}));
        CHECK(e_op(single(3, {0, 1}), 0).is_zero());
        Character c(3);
        c.add({1, 0, 1}, LaurentPoly(1));
        c.add({0, 1, 1}, LaurentPoly(2));
        Character want(3);
        want.add({1, 0}, LaurentPoly(1));
        want.add({0, 1}, LaurentPoly(2));
        CHECK(e_op(c, 1) == want);
    }

    TEST_CASE("Serre defect") {
        Character c(3);
        c.add({1, 0, 1}, LaurentPoly(1));
        c.add({0, 1, 1}, LaurentPoly(2));
        CHECK(serre_defect(c, 1, 0).vanishes());
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j) CHECK(serre_defect(Character::unit(3), i, j).vanishes());
        auto t = char_trivial(2, 0, 2);
        CHECK(serre_defect(qshuffle(t, t), 0, 1).vanishes());
        CHECK(serre_defect(qshuffle(t, t), 1, 0).vanishes());
        // [0,0] alone is not a module character: e_0^{(2)} needs a factor 2
        auto bad = serre_defect(single(3, {1, 0, 0}), 0, 1);
        CHECK(bad.indivisible);
        CHECK_FALSE(bad.vanishes());
        // [0,1,0] alone (a 1-dim candidate killed by the braid relation)
        auto d = serre_defect(single(3, {0, 1, 0}), 0, 1);
        CHECK_FALSE(d.indivisible);
        CHECK(d.defect == -1 * Character::unit(3));
        CHECK_THROWS_AS(serre_defect(c, 1, 1), InvalidDatum);
    }

    TEST_CASE("JSON") {
        auto c = qshuffle(single(3, {1}), single(3, {0, 1}));
        const auto text = to_json(c);
        CHECK(text ==
              "{\n"
              "  \"ell\": 3,\n"
              "  \"terms\": [\n"
              "    {\n"
              "      \"seq\": [\n        0,\n        1,\n        1\n      ],\n"
              "      \"poly\": [\n        [\n          -1,\n          1\n        ],\n        [\n          1,\n          1\n        ]\n      ]\n"
              "    },\n"
              "    {\n"
              "      \"seq\": [\n        1,\n        0,\n        1\n      ],\n"
              "      \"poly\": [\n        [\n          0,\n          1\n        ]\n      ]\n"
              "    }\n"
              "  ]\n"
              "}\n");
        CHECK(character_from_json(text) == c);
        CHECK_THROWS_AS(character_from_json("[]"), InvalidDatum);
    }
}

TEST_SUITE("one-dimensional modules") {
    TEST_CASE("examples") {
        CHECK(onedim_classify(3, 2) == std::vector<Seq>{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}});
        CHECK(onedim_classify(4, 1) == std::vector<Seq>{{0}, {1}, {2}, {3}});
        CHECK(onedim_classify(2, 3) == std::vector<Seq>{{0, 1, 0}, {1, 0, 1}});
        CHECK(onedim_solve(4, {0, 1, 2}) == std::vector<int>{0, 0});
        CHECK_FALSE(onedim_solve(4, {0, 1, 0}));  // braid relation
        CHECK_FALSE(onedim_solve(4, {0, 2}));     // ψ² = 1 forces a move off [0,2]
        CHECK_FALSE(onedim_solve(3, {1, 1}));     // dot past crossing
        CHECK_THROWS_AS(onedim_classify(3, 0), InvalidDatum);
    }

    TEST_CASE("property: brute force equals ascending and descending, m <= 6") {
        for (int ell = 2; ell <= 5; ++ell)
            for (int m = 1; m <= 6; ++m) {
                auto got = onedim_classify(ell, m);
                CHECK(got == onedim_families(ell, m));
                CHECK(got == onedim_classify_serial(ell, m));
                const std::size_t want = m == 1 ? static_cast<std::size_t>(ell)
                                                : static_cast<std::size_t>(ell == 2 ? 2 : 2 * ell);
                CHECK(got.size() == want);
            }
    }

    TEST_CASE("Serre sweep, parallel equals serial") {
        for (int ell = 2; ell <= 3; ++ell) {
            auto par = serre_sweep(ell, 4);
            auto ser = serre_sweep_serial(ell, 4);
            CHECK(par.ok());
            CHECK(par.products == ser.products);
            CHECK(par.checks == ser.checks);
            CHECK(par.failures.size() == ser.failures.size());
            CHECK(par.products > 0);
        }
    }
}
