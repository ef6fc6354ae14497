// test_tower.cpp — iterated exponentials, certified comparison, tower
// lemmas, bound propagation.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "synram/errors.hpp"
#include "synram/rng.hpp"
#include "synram/tower.hpp"

using namespace synram;

namespace {

Integer ipow(long long base, long long exp) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return out;
}

}  // namespace

TEST_CASE("tow materializes through height 5 and not beyond") {
    CHECK(tow(1) == TowerExpr(Integer(2)));
    CHECK(tow(3) == TowerExpr(Integer(16)));
    CHECK(tow(4) == TowerExpr(Integer(65536)));

    const TowerExpr t5 = tow(5);
    REQUIRE(t5.materialized());
    CHECK(t5.value() == ipow(2, 65536));
    CHECK(decimal_digits(t5.value()) == 19729);

    const TowerExpr t6 = tow(6);
    CHECK_FALSE(t6.materialized());
    CHECK(t6.height() == 2);
    CHECK(t6.levels()[0] == 2);
    CHECK(t6.levels()[1] == ipow(2, 65536));

    CHECK(tow(8).height() == 4);
}

TEST_CASE("canonicalization truncates at level one") {
    CHECK(TowerExpr(std::vector<Integer>{Integer(2), Integer(1)}) == TowerExpr(Integer(2)));
    CHECK(TowerExpr(std::vector<Integer>{Integer(5), Integer(1), Integer(9)}) ==
          TowerExpr(Integer(5)));
    CHECK(TowerExpr(std::vector<Integer>{Integer(1), Integer(7)}) == TowerExpr(Integer(1)));
    CHECK_THROWS_AS(TowerExpr(std::vector<Integer>{Integer(0)}), Error);
}

TEST_CASE("comparisons: materializable and structural") {
    CHECK(tower_compare(tow(4), TowerExpr(Integer(65536))) == Ordering::Equal);

    // 2^65536 vs 3^40000: both materialize, exact integers decide.
    const TowerExpr pow3(std::vector<Integer>{Integer(3), Integer(40000)});
    REQUIRE(pow3.materialized());
    CHECK(tower_compare(tow(5), pow3) == Ordering::Greater);

    // 2^(2^10) = 2^1024.
    CHECK(tower_compare(TowerExpr(std::vector<Integer>{Integer(2), Integer(2), Integer(10)}),
                        TowerExpr(std::vector<Integer>{Integer(2), Integer(1024)})) ==
          Ordering::Equal);

    // Structural: tow(6) dwarfs any materialized value.
    CHECK(tower_compare(tow(6), tow(5)) == Ordering::Greater);
    CHECK(tower_compare(tow(5), tow(6)) == Ordering::Less);
    CHECK(tower_compare(tow(7), tow(6)) == Ordering::Greater);
    CHECK(tower_compare(tow(7), tow(7)) == Ordering::Equal);

    // Same-base peeling with huge exponents.
    const TowerExpr a(std::vector<Integer>{Integer(2), Integer(2), ipow(2, 70)});
    const TowerExpr b(std::vector<Integer>{Integer(2), Integer(2), ipow(2, 70) + 1});
    CHECK(tower_compare(a, b) == Ordering::Less);

    // Different bases, structural exponents.
    const TowerExpr c(std::vector<Integer>{Integer(3), Integer(2), ipow(2, 70)});
    CHECK(tower_compare(c, a) == Ordering::Greater);
}

TEST_CASE("comparison is a total order on materializable inputs") {
    Rng rng(31);
    for (int t = 0; t < 1000; ++t) {
        const long long base1 = rng.range(2, 9), exp1 = rng.range(1, 2000);
        const long long base2 = rng.range(2, 9), exp2 = rng.range(1, 2000);
        const Integer v1 = ipow(base1, exp1);
        const Integer v2 = ipow(base2, exp2);
        const TowerExpr t1(std::vector<Integer>{to_integer(base1), to_integer(exp1)});
        const TowerExpr t2(std::vector<Integer>{to_integer(base2), to_integer(exp2)});
        const int c = cmp(v1, v2);
        const Ordering want = c < 0 ? Ordering::Less : (c > 0 ? Ordering::Greater : Ordering::Equal);
        CHECK(tower_compare(t1, t2) == want);
    }
}

TEST_CASE("f_func values") {
    CHECK(f_func(1, 1) == TowerExpr(Integer(2)));      // 2^1
    CHECK(f_func(1, 3) == TowerExpr(Integer(8)));      // 2^K
    CHECK(f_func(2, 1) == TowerExpr(Integer(65536)));  // 2^(2^4)

    const TowerExpr f3 = f_func(3, 1);  // 2^(2^512)
    REQUIRE(f3.height() == 2);
    CHECK(f3.levels()[0] == 2);
    CHECK(f3.levels()[1] == ipow(2, 512));
}

TEST_CASE("cube lemma r^3 <= Tow(r-1)") {
    CHECK(verify_cube_lemma(5));   // 125 <= 65536
    CHECK(verify_cube_lemma(6));   // structural side
    CHECK(verify_cube_lemma(20));
    for (long long r = 5; r <= 50; ++r) CHECK(verify_cube_lemma(r));
    CHECK_THROWS_AS(verify_cube_lemma(4), Error);
}

TEST_CASE("lift lemma with exact integers") {
    CHECK(verify_lift_lemma(Integer(2), Integer(2), Integer(2)));    // equality on the right
    CHECK(verify_lift_lemma(Integer(2), Integer(3), Integer(4)));    // 32 <= 128 <= 4096
    CHECK(verify_lift_lemma(Integer(10), Integer(2), Integer(3)));   // 300 <= 1e5 <= 1e6
    for (long long a = 2; a <= 10; ++a)
        for (long long b = 2; b <= 10; ++b)
            for (long long k = 2; k <= 10; ++k)
                CHECK(verify_lift_lemma(to_integer(a), to_integer(b), to_integer(k)));
    CHECK_THROWS_AS(verify_lift_lemma(Integer(1), Integer(2), Integer(2)), Error);
}

TEST_CASE("growth corollary F(r)^r <= log2 F(r+1)") {
    // r=1, K=1: 2 <= 2^4. r=2, K=1: 2^32 <= 2^512 by exponents.
    for (long long K = 1; K <= 4; ++K) {
        CHECK(verify_growth_corollary(1, K));
        CHECK(verify_growth_corollary(2, K));
        CHECK(verify_growth_corollary(3, K));
    }
    // Structural route beyond the exact range.
    CHECK(verify_growth_corollary(5, 1));
    CHECK(verify_growth_corollary(8, 2));
}

TEST_CASE("F(r) stays under a slightly taller tower of 2s") {
    for (long long r = 1; r <= 10; ++r) {
        const long long slack =
            static_cast<long long>(std::ceil(std::pow(double(r), 2.0 / 3.0))) + 2;
        CHECK(tower_compare(f_func(r, 1), tow(r + slack)) != Ordering::Greater);
    }
}

TEST_CASE("recursive bound propagation") {
    const auto traces = propagate_recursive_bound(make_rational(1), 3, 8);
    REQUIRE(traces.size() == 8);
    CHECK(traces[0].bound == TowerExpr(Integer(3)));

    // exponent ceil(ln 3) = 2, so B(2) <= 2^(3^2) = 512.
    CHECK(traces[1].bound == TowerExpr(Integer(512)));

    // One exponentiation per step: canonical height never drops, and grows
    // by exactly one once the chain leaves the materializable regime.
    for (std::size_t i = 1; i < traces.size(); ++i) {
        CHECK(traces[i].bound.height() >= traces[i - 1].bound.height());
        if (!traces[i - 1].bound.materialized()) {
            CHECK(traces[i].bound.height() == traces[i - 1].bound.height() + 1);
        }
    }

    // The bound sequence is monotone non-decreasing.
    for (std::size_t i = 1; i < traces.size(); ++i) {
        CHECK(tower_compare(traces[i].bound, traces[i - 1].bound) != Ordering::Less);
    }

    CHECK_THROWS_AS(propagate_recursive_bound(make_rational(1), 2, 3), Error);
}

TEST_CASE("tower printing with digit caps") {
    CHECK(tower_to_string(TowerExpr(Integer(65536))) == "65536");
    CHECK(tower_to_string(tow(6), 8) ==
          "2^(20035299...[19729 digits])");
    CHECK(tower_to_string(TowerExpr(std::vector<Integer>{Integer(2), Integer(2), ipow(2, 70)}),
                          32) == "2^(2^(1180591620717411303424))");
}
