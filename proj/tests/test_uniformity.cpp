// test_uniformity.cpp — norms, counting functionals, inequality verifiers.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "synram/errors.hpp"
#include "synram/parallel.hpp"
#include "synram/rng.hpp"
#include "synram/uniformity.hpp"

using namespace synram;

namespace {

ModFunction constant(long long p, Complex c) {
    return ModFunction::create(p, std::vector<Complex>(static_cast<std::size_t>(p), c));
}

ModFunction random_one_bounded(Rng& rng, long long p) {
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<Complex> vals(static_cast<std::size_t>(p));
    for (auto& v : vals)
        v = Complex{(2.0 * rng.unit() - 1.0) * s, (2.0 * rng.unit() - 1.0) * s};
    return ModFunction::create(p, std::move(vals));
}

Window random_nonempty_subwindow(Rng& rng, long long M) {
    Window w(M);
    for (long long n = 1; n <= M; ++n) w.set(n, rng.coin());
    if (w.count() == 0) w.set(rng.range(1, M), true);
    return w;
}

// Plain double-loop oracle for AP3, written independently of the kernels.
Complex ap3_oracle(const ModFunction& f1, const ModFunction& f2, const ModFunction& f3) {
    const long long p = f1.p;
    Complex acc{0, 0};
    for (long long x = 0; x < p; ++x)
        for (long long d = 0; d < p; ++d)
            acc += f1.values[x] * f2.values[(x + d) % p] * f3.values[(x + 2 * d) % p];
    return acc / Complex{double(p) * double(p), 0};
}

}  // namespace

TEST_CASE("choose_prime picks the least admissible prime") {
    CHECK(choose_prime(3).p == 11);
    CHECK(choose_prime(1).p == 5);
    CHECK(choose_prime(10).p == 31);
    CHECK(choose_prime(72).p == 223);
    for (long long N = 1; N <= 300; ++N) {
        const auto pe = choose_prime(N);
        CHECK(3 * N < pe.p);
        CHECK(pe.p < 6 * N);
    }
    CHECK_THROWS_AS(choose_prime(0), Error);
}

TEST_CASE("indicator and L norms") {
    const ModFunction f = indicator(3, 11);
    CHECK(l1_norm(f) == doctest::Approx(3.0 / 11.0).epsilon(1e-15));
    CHECK(l_inf_norm(f) == 1.0);
    double total = 0;
    for (const auto& v : f.values) total += v.real();
    CHECK(total == 3.0);
    CHECK(f.one_bounded);

    const ModFunction zero = constant(11, {0, 0});
    CHECK(l1_norm(zero) == 0.0);
    CHECK(l_inf_norm(zero) == 0.0);
    const ModFunction one = constant(11, {1, 0});
    CHECK(l1_norm(one) == 1.0);
    CHECK(l_inf_norm(one) == 1.0);

    CHECK_THROWS_AS(indicator(0, 11), Error);
    CHECK_THROWS_AS(indicator(11, 11), Error);
}

TEST_CASE("Gowers norms: exact special values") {
    for (long long p : {11ll, 31ll}) {
        const ModFunction one = constant(p, {1, 0});
        for (int s = 1; s <= 3; ++s) {
            CHECK(std::abs(gowers_norm(one, s) - 1.0) <= 1e-12);
        }
        const ModFunction zero = constant(p, {0, 0});
        CHECK(gowers_norm(zero, 2) == 0.0);

        std::vector<Complex> pm(static_cast<std::size_t>(p), Complex{0, 0});
        pm[0] = Complex{1, 0};
        const ModFunction point = ModFunction::create(p, pm);
        const double want = std::pow(double(p), -0.75);
        CHECK(std::abs(gowers_norm(point, 2) - want) <= 1e-12);
        CHECK(std::abs(gowers_norm_direct(point, 2) - want) <= 1e-12);
    }
}

TEST_CASE("recursive and direct Gowers evaluations agree") {
    Rng rng(17);
    const long long primes[] = {11, 13, 17, 19, 23, 29, 31};
    for (int t = 0; t < 25; ++t) {
        const long long p = primes[rng.range(0, 6)];
        const ModFunction f = random_one_bounded(rng, p);
        for (int s = 1; s <= 3; ++s) {
            CHECK(std::abs(gowers_norm(f, s) - gowers_norm_direct(f, s)) <= 1e-10);
        }
    }
}

TEST_CASE("U^2 <= U^3 for one-bounded functions") {
    Rng rng(23);
    for (int t = 0; t < 30; ++t) {
        const ModFunction f = random_one_bounded(rng, 31);
        CHECK(gowers_norm(f, 2) <= gowers_norm(f, 3) + 1e-12);
    }
}

TEST_CASE("Gowers guard and domain errors") {
    const ModFunction f = constant(127, {1, 0});
    CHECK_THROWS_AS(gowers_norm_direct(f, 3), Error);  // direct guard is p <= 101
    CHECK(gowers_norm(f, 3) == doctest::Approx(1.0));  // recursive handles 127
    CHECK_THROWS_AS(gowers_norm(f, 4), Error);
    CHECK_THROWS_AS(gowers_norm(f, 0), Error);
}

TEST_CASE("AP3 functional") {
    const ModFunction one = constant(11, {1, 0});
    CHECK(std::abs(ap3(one, one, one) - Complex{1, 0}) <= 1e-12);

    const ModFunction zero = constant(11, {0, 0});
    const ModFunction f = indicator(3, 11);
    CHECK(std::abs(ap3(zero, f, f)) == 0.0);

    CHECK(std::abs(ap3(f, f, f) - Complex{5.0 / 121.0, 0}) <= 1e-12);
    CHECK(std::abs(ap3(f, f, f) - ap3_oracle(f, f, f)) <= 1e-12);

    CHECK_THROWS_AS(ap3(f, constant(13, {1, 0}), f), Error);
}

TEST_CASE("Lambda_S functional") {
    const ModFunction f = indicator(3, 11);
    Window single(1);
    single.set(1, true);
    CHECK(std::abs(lambda_s(single, f, f, f) - Complex{1.0 / 11.0, 0}) <= 1e-12);

    // d over the whole group: Lambda over [p] equals AP3.
    Window full(11);
    for (long long n = 1; n <= 11; ++n) full.set(n, true);
    Rng rng(41);
    const ModFunction g = random_one_bounded(rng, 11);
    CHECK(std::abs(lambda_s(full, g, g, g) - ap3(g, g, g)) <= 1e-12);

    const ModFunction zero = constant(11, {0, 0});
    CHECK(std::abs(lambda_s(single, f, zero, f)) == 0.0);

    CHECK_THROWS_AS(lambda_s(Window(4), f, f, f), Error);   // empty S
    Window wide(23);
    wide.set(1, true);
    CHECK_THROWS_AS(lambda_s(wide, f, f, f), Error);        // window exceeds p
}

TEST_CASE("Lambda_S is linear in each slot") {
    Rng rng(59);
    for (int t = 0; t < 20; ++t) {
        const long long p = 31;
        const ModFunction f = random_one_bounded(rng, p);
        const ModFunction g = random_one_bounded(rng, p);
        const ModFunction h = random_one_bounded(rng, p);
        const Window S = random_nonempty_subwindow(rng, p);
        const Complex alpha{rng.unit() - 0.5, rng.unit() - 0.5};

        // alpha*f + g in the first slot.
        std::vector<Complex> combo(static_cast<std::size_t>(p));
        for (std::size_t i = 0; i < combo.size(); ++i)
            combo[i] = alpha * f.values[i] + g.values[i];
        const ModFunction fg = ModFunction::create(p, combo);
        const Complex lhs = lambda_s(S, fg, h, h);
        const Complex rhs = alpha * lambda_s(S, f, h, h) + lambda_s(S, g, h, h);
        CHECK(std::abs(lhs - rhs) <= 1e-10);

        const Complex a_lhs = ap3(fg, h, h);
        const Complex a_rhs = alpha * ap3(f, h, h) + ap3(g, h, h);
        CHECK(std::abs(a_lhs - a_rhs) <= 1e-10);
    }
}

TEST_CASE("Brauer count lemma values") {
    Window s1(1);
    s1.set(1, true);
    const LemmaCheck c1 = verify_brauer_count(3, s1, 11);
    CHECK(c1.value == doctest::Approx(1.0 / 11.0).epsilon(1e-12));
    CHECK(c1.passes);

    // Value matches (1/p) E_{d in S} (N - 2d).
    Window s123(3);
    for (long long n = 1; n <= 3; ++n) s123.set(n, true);
    const LemmaCheck c2 = verify_brauer_count(9, s123, 29);
    CHECK(c2.value == doctest::Approx(5.0 / 29.0).epsilon(1e-12));
    CHECK(c2.passes);

    const LemmaCheck c3 = verify_brauer_count(3, s1, 17);
    CHECK(c3.value == doctest::Approx(1.0 / 17.0).epsilon(1e-12));
    CHECK(c3.passes);  // 1/17 > 1/18, the tightest admissible p

    Window bad(5);
    bad.set(5, true);  // 5 > 9/3
    CHECK_THROWS_AS(verify_brauer_count(9, bad, 29), Error);
    CHECK_THROWS_AS(verify_brauer_count(3, s1, 19), Error);  // p = 19 >= 6N
}

TEST_CASE("proof formula oracle for Lambda_S(1_[N])") {
    Rng rng(67);
    for (int t = 0; t < 30; ++t) {
        const long long N = rng.range(3, 48);
        const long long third = N / 3;
        const Window S = random_nonempty_subwindow(rng, third);
        const long long p = choose_prime(N).p;
        const LemmaCheck check = verify_brauer_count(N, S, p);
        double mean = 0;
        for (long long d : S.elements()) mean += double(N - 2 * d);
        mean /= double(S.count());
        CHECK(check.value == doctest::Approx(mean / double(p)).epsilon(1e-12));
    }
}

TEST_CASE("inequality margins on seeded trials") {
    Rng rng(71);
    for (int t = 0; t < 60; ++t) {
        const long long p = 31;
        const ModFunction f1 = random_one_bounded(rng, p);
        const ModFunction f2 = random_one_bounded(rng, p);
        const ModFunction f3 = random_one_bounded(rng, p);
        const Window S = random_nonempty_subwindow(rng, p);
        CHECK(verify_gvn_ap3(f1, f2, f3) >= -1e-9);
        CHECK(verify_gvn_lambda(S, f1, f2, f3) >= -1e-9);
        CHECK(verify_l1_control(S, f1, f2) >= -1e-9);
        CHECK(telescoping_residual(S, f1, f2) <= 1e-10);
    }

    // Equality cases.
    const ModFunction one = constant(31, {1, 0});
    const ModFunction zero = constant(31, {0, 0});
    Window full(31);
    for (long long n = 1; n <= 31; ++n) full.set(n, true);
    CHECK(std::abs(verify_gvn_ap3(one, one, one)) <= 1e-9);
    CHECK(std::abs(verify_gvn_lambda(full, one, one, one)) <= 1e-9);
    CHECK(verify_gvn_ap3(zero, one, one) >= -1e-12);
    CHECK(std::abs(verify_l1_control(full, one, one)) <= 1e-12);

    const ModFunction big = constant(31, {2, 0});
    CHECK_THROWS_AS(verify_gvn_ap3(big, one, one), Error);
}

TEST_CASE("u3 control lemma") {
    const long long M = 2, N = 72;
    const long long p = choose_prime(N).p;
    const Window S = s_ak_window(2, 2, N);
    const ModFunction f = indicator(N, p);
    const ModFunction g = scale(f, Complex{0.5, 0});
    CHECK(verify_u3_control(S, M, N, f, f) == doctest::Approx(0.0));
    CHECK(verify_u3_control(S, M, N, f, g) >= -1e-9);

    Rng rng(83);
    for (int t = 0; t < 5; ++t) {
        std::vector<Complex> fv(static_cast<std::size_t>(p), Complex{0, 0});
        std::vector<Complex> gv(static_cast<std::size_t>(p), Complex{0, 0});
        for (long long n = 1; n <= N; ++n) {
            fv[static_cast<std::size_t>(n)] = Complex{rng.unit(), 0};
            gv[static_cast<std::size_t>(n)] = Complex{rng.unit(), 0};
        }
        CHECK(verify_u3_control(S, M, N, ModFunction::create(p, fv),
                                ModFunction::create(p, gv)) >= -1e-9);
    }

    CHECK_THROWS_AS(verify_u3_control(S, M, 40, indicator(40, choose_prime(40).p),
                                      indicator(40, choose_prime(40).p)),
                    Error);  // N < 18 M^2

    Window sparse(N);
    sparse.set(5, true);  // not [2]-syndetic
    CHECK_THROWS_AS(verify_u3_control(sparse, M, N, f, f), Error);
}

TEST_CASE("uniformity kernels are bit-stable across thread budgets") {
    Rng rng(97);
    const ModFunction f = random_one_bounded(rng, 101);
    const Window S = random_nonempty_subwindow(rng, 101);

    set_thread_budget(1);
    const double u3_serial = gowers_norm(f, 3);
    const Complex ap_serial = ap3(f, f, f);
    const Complex lam_serial = lambda_s(S, f, f, f);
    set_thread_budget(8);
    const double u3_parallel = gowers_norm(f, 3);
    const Complex ap_parallel = ap3(f, f, f);
    const Complex lam_parallel = lambda_s(S, f, f, f);
    set_thread_budget(0);

    CHECK(u3_serial == u3_parallel);
    CHECK(ap_serial == ap_parallel);
    CHECK(lam_serial == lam_parallel);

    // The serial reference kernels agree to rounding.
    CHECK(std::abs(ref::ap3(f, f, f) - ap_parallel) <= 1e-12);
    CHECK(std::abs(ref::lambda_s(S, f, f, f) - lam_parallel) <= 1e-12);
    CHECK(ref::gowers_norm_recursive(f, 3) == u3_parallel);
}

TEST_CASE("function file round-trip") {
    Rng rng(13);
    const ModFunction f = random_one_bounded(rng, 17);
    const ModFunction back = parse_mod_function(serialize_mod_function(f));
    CHECK(back.p == f.p);
    for (std::size_t i = 0; i < f.values.size(); ++i) CHECK(back.values[i] == f.values[i]);
    CHECK_THROWS_AS(parse_mod_function("p: 5\n1 0\n"), Error);
}
