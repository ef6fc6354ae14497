// test_ramsey.cpp — coloring search, Rado/Brauer numbers, the DIMACS route,
// and the DPLL solver behind it.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "synram/errors.hpp"
#include "synram/parallel.hpp"
#include "synram/ramsey.hpp"
#include "synram/sat.hpp"
#include "synram/systems.hpp"

using namespace synram;

namespace {

Coloring make_coloring(int r, std::vector<std::uint8_t> colours) {
    Coloring chi;
    chi.N = static_cast<long long>(colours.size());
    chi.r = r;
    chi.colour = std::move(colours);
    return chi;
}

}  // namespace

TEST_CASE("monochromatic solution detection") {
    const Coloring all_one = make_coloring(1, {1, 1, 1, 1, 1});
    const auto hit = find_monochromatic_solution(schur_system(), all_one);
    REQUIRE(hit.has_value());
    CHECK(*hit == Assignment{1, 1, 2});  // lexicographically least

    const Coloring schur_witness = make_coloring(2, {1, 2, 2, 1});
    CHECK_FALSE(find_monochromatic_solution(schur_system(), schur_witness).has_value());

    const Coloring tiny = make_coloring(1, {1, 1});
    CHECK_FALSE(find_monochromatic_solution(brauer_system(), tiny).has_value());
}

TEST_CASE("avoiding-coloring search") {
    const auto found = search_avoiding_coloring(schur_system(), 4, 2);
    REQUIRE(found.witness.has_value());
    CHECK(found.witness->colour == std::vector<std::uint8_t>{1, 2, 2, 1});

    const auto exhausted = search_avoiding_coloring(schur_system(), 5, 2);
    CHECK_FALSE(exhausted.witness.has_value());
    CHECK(exhausted.nodes > 0);

    // Rainbow colorings avoid any system whose solutions need two values.
    CHECK(search_avoiding_coloring(schur_system(), 4, 4).witness.has_value());

    const PolySystem inhom = parse_system("vars: 3\nt1 + t2 - 1\n");
    CHECK_THROWS_AS(search_avoiding_coloring(inhom, 4, 2), Error);
}

TEST_CASE("Rado numbers for the canonical systems") {
    const RadoResult schur2 = rado_number(schur_system(), 2, 10);
    CHECK(schur2.found);
    CHECK(schur2.N == 5);
    CHECK(schur2.exhaustion_proof);
    CHECK(schur2.witness.colour == std::vector<std::uint8_t>{1, 2, 2, 1});
    CHECK_FALSE(find_monochromatic_solution(schur_system(), schur2.witness).has_value());

    const RadoResult schur1 = rado_number(schur_system(), 1, 10);
    CHECK(schur1.found);
    CHECK(schur1.N == 2);

    const RadoResult ap31 = rado_number(ap3_system(), 1, 10);
    CHECK(ap31.found);
    CHECK(ap31.N == 3);

    const RadoResult brauer1 = rado_number(brauer_system(), 1, 10);
    CHECK(brauer1.found);
    CHECK(brauer1.N == 3);

    const RadoResult miss = rado_number(schur_system(), 2, 4);
    CHECK_FALSE(miss.found);
    CHECK(miss.N == 4);
    CHECK_FALSE(find_monochromatic_solution(schur_system(), miss.witness).has_value());
}

TEST_CASE("classic values: van der Waerden-type and three-colour Schur") {
    // Every 2-coloring of [9] has a monochromatic 3-term progression.
    const RadoResult vdw = rado_number(ap3_system(), 2, 12);
    CHECK(vdw.found);
    CHECK(vdw.N == 9);

    const RadoResult schur3 = rado_number(schur_system(), 3, 20);
    CHECK(schur3.found);
    CHECK(schur3.N == 14);
    CHECK_FALSE(find_monochromatic_solution(schur_system(), schur3.witness).has_value());
}

TEST_CASE("Brauer numbers: specialized engine agrees with the generic one") {
    const RadoResult b1 = brauer_number(1, 10);
    CHECK(b1.found);
    CHECK(b1.N == 3);

    const RadoResult b2 = brauer_number(2, 30);
    CHECK(b2.found);
    CHECK(b2.N == 17);
    CHECK_FALSE(find_monochromatic_solution(brauer_system(), b2.witness).has_value());
    CHECK(b2.N >= 2 + 1);  // B(r) >= r+1

    const RadoResult generic = rado_number(brauer_system(), 2, 30);
    CHECK(generic.found);
    CHECK(generic.N == b2.N);
    CHECK(generic.witness == b2.witness);
}

TEST_CASE("restrictions of avoiding colorings stay avoiding (monotonicity spots)") {
    for (long long N : {5ll, 6ll, 7ll}) {
        CHECK_FALSE(search_avoiding_coloring(schur_system(), N, 2).witness.has_value());
    }
    for (long long N : {17ll, 18ll}) {
        const auto out = brauer_number(2, N);
        CHECK(out.found);
        CHECK(out.N == 17);
    }
}

TEST_CASE("DIMACS export: format and satisfiability") {
    const std::string tiny = export_dimacs(schur_system(), 2, 1);
    CHECK(tiny.rfind("p cnf 2 ", 0) == 0);
    CHECK_FALSE(solve_cnf(parse_dimacs(tiny)).has_value());  // (1,1,2) forbidden

    const std::string sat4 = export_dimacs(schur_system(), 4, 2);
    const auto model = solve_cnf(parse_dimacs(sat4));
    REQUIRE(model.has_value());
    const Coloring chi = decode_dimacs_model(*model, 4, 2);
    CHECK_FALSE(find_monochromatic_solution(schur_system(), chi).has_value());

    // One variable, no nontrivial solutions: trivially satisfiable.
    const std::string lone = export_dimacs(schur_system(), 1, 3);
    CHECK(solve_cnf(parse_dimacs(lone)).has_value());

    SearchLimits tight;
    tight.enumeration_cap = 2;
    CHECK_THROWS_AS(export_dimacs(schur_system(), 10, 2, tight), Error);
}

TEST_CASE("DFS route and DIMACS route agree everywhere up to the found value") {
    struct Case {
        PolySystem sys;
        int r;
        long long upto;
    };
    const std::vector<Case> cases = {
        {schur_system(), 1, 2},
        {schur_system(), 2, 5},
        {brauer_system(), 1, 3},
        {brauer_system(), 2, 17},
    };
    for (const Case& c : cases) {
        for (long long N = 1; N <= c.upto; ++N) {
            const bool dfs = search_avoiding_coloring(c.sys, N, c.r).witness.has_value();
            const auto model = solve_cnf(parse_dimacs(export_dimacs(c.sys, N, c.r)));
            CHECK(dfs == model.has_value());
            if (model.has_value()) {
                const Coloring chi = decode_dimacs_model(*model, N, c.r);
                CHECK_FALSE(find_monochromatic_solution(c.sys, chi).has_value());
            }
        }
    }
}

TEST_CASE("induction on colours") {
    // Avoiding Schur 2-coloring on [4]; window too small for any constraint.
    const Coloring chi = make_coloring(2, {1, 2, 2, 1});
    const auto reports =
        verify_induction_on_colours(schur_system(), chi, FiniteSet({1, 2, 3, 4, 5}));
    REQUIRE(reports.size() == 2);
    for (const auto& rep : reports) {
        CHECK(rep.is_window_syndetic);
        CHECK(rep.checked_up_to == 0);  // vacuous at this window size
    }

    // Avoiding Brauer 2-coloring of [B(2)-1]: every class meets every n*[3].
    const RadoResult b2 = brauer_number(2, 20);
    REQUIRE(b2.found);
    const auto brauer_reports =
        verify_induction_on_colours(brauer_system(), b2.witness, FiniteSet({1, 2, 3}));
    for (const auto& rep : brauer_reports) {
        CHECK(rep.is_window_syndetic);
        CHECK(rep.checked_up_to == (b2.N - 1) / 3);
    }

    const Coloring mono = make_coloring(1, {1, 1, 1, 1, 1});
    CHECK_THROWS_WITH_AS(verify_induction_on_colours(schur_system(), mono, FiniteSet({1, 2})),
                         doctest::Contains("(1,1,2)"), Error);
}

TEST_CASE("syndetic lifting: Schur becomes 2-regular inside S(2,2) windows") {
    // Least window at which every 2-coloring of S(2,2) ∩ [N] contains a
    // monochromatic x+y=z with all three entries in the set.
    long long least = 0;
    for (long long N = 8; N <= 40 && least == 0; ++N) {
        const Window S = s_ak_window(2, 2, N);
        if (!search_avoiding_coloring_within(schur_system(), S, 2).witness.has_value())
            least = N;
    }
    CHECK(least == 32);

    // Just below, an avoiding coloring exists; check it against an
    // independent triple scan over the set's elements.
    const Window S31 = s_ak_window(2, 2, 31);
    const auto out = search_avoiding_coloring_within(schur_system(), S31, 2);
    REQUIRE(out.witness.has_value());
    const auto elems = S31.elements();
    REQUIRE(out.witness->N == static_cast<long long>(elems.size()));
    std::vector<int> colour_of(32, 0);
    for (std::size_t i = 0; i < elems.size(); ++i)
        colour_of[static_cast<std::size_t>(elems[i])] = out.witness->colour[i];
    for (long long x : elems) {
        for (long long y : elems) {
            const long long z = x + y;
            if (z <= 31 && S31.contains(z)) {
                const bool mono = colour_of[x] == colour_of[y] && colour_of[y] == colour_of[z];
                CHECK_FALSE(mono);
            }
        }
    }
}

TEST_CASE("searches are deterministic across thread budgets") {
    set_thread_budget(1);
    const RadoResult serial = brauer_number(2, 20);
    const auto serial_search = search_avoiding_coloring(schur_system(), 4, 2);
    set_thread_budget(8);
    const RadoResult parallel = brauer_number(2, 20);
    const auto parallel_search = search_avoiding_coloring(schur_system(), 4, 2);
    set_thread_budget(0);
    CHECK(serial.N == parallel.N);
    CHECK(serial.witness == parallel.witness);
    CHECK(serial.nodes == parallel.nodes);
    CHECK(serial_search.witness == parallel_search.witness);
    CHECK(serial_search.nodes == parallel_search.nodes);
}

TEST_CASE("node guard raises a structured error") {
    SearchLimits limits;
    limits.node_cap = 50;
    CHECK_THROWS_AS(brauer_number(2, 30, limits), SearchLimitError);
    try {
        brauer_number(2, 30, limits);
    } catch (const SearchLimitError& e) {
        CHECK(e.nodes() > 50);
    }
}

TEST_CASE("DPLL basics") {
    const DimacsCnf sat = parse_dimacs("p cnf 3 3\n1 2 0\n-1 3 0\n-2 -3 0\n");
    const auto model = solve_cnf(sat);
    REQUIRE(model.has_value());
    for (const auto& clause : sat.clauses) {
        bool ok = false;
        for (int lit : clause) ok = ok || ((*model)[std::abs(lit)] == (lit > 0));
        CHECK(ok);
    }

    const DimacsCnf unsat = parse_dimacs("p cnf 2 4\n1 2 0\n1 -2 0\n-1 2 0\n-1 -2 0\n");
    CHECK_FALSE(solve_cnf(unsat).has_value());

    CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), Error);
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n2 0\n"), Error);
}
