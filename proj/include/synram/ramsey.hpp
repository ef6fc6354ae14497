// ramsey.hpp — monochromatic-solution detection, Rado/Brauer numbers by
// exhaustive backtracking, induction-on-colours certificates, DIMACS export.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "synram/syndetic.hpp"
#include "synram/systems.hpp"

namespace synram {

struct Coloring {
    long long N = 0;
    int r = 1;
    std::vector<std::uint8_t> colour;  // colour[n-1] in 1..r

    int at(long long n) const { return colour[static_cast<std::size_t>(n - 1)]; }
    bool operator==(const Coloring& other) const = default;
};

struct SearchLimits {
    std::uint64_t node_cap = 1'000'000'000ull;  // structured error beyond this
    std::uint64_t enumeration_cap = 5'000'000ull;
};

struct SearchOutcome {
    std::optional<Coloring> witness;  // lexicographically least avoiding coloring
    std::uint64_t nodes = 0;
};

struct RadoResult {
    bool found = false;
    long long N = 0;             // Found: the Rado number; otherwise N_max
    bool exhaustion_proof = false;
    Coloring witness;            // Found: avoiding coloring of [N-1]; else of [N_max]
    std::uint64_t nodes = 0;
};

// Lexicographically least nontrivial solution with all entries one colour.
std::optional<Assignment> find_monochromatic_solution(const PolySystem& sys,
                                                      const Coloring& chi);

// Exhaustive DFS with chi(1)=1 fixed; deterministic witness and node count
// for any thread count.
SearchOutcome search_avoiding_coloring(const PolySystem& sys, long long N, int r,
                                       const SearchLimits& limits = {});

// Same search restricted to the elements of S: colours S's elements in
// increasing order (witness positions follow that order) against the
// solutions lying entirely inside S. Decides r-regularity over a window.
SearchOutcome search_avoiding_coloring_within(const PolySystem& sys, const Window& S, int r,
                                              const SearchLimits& limits = {});

RadoResult rado_number(const PolySystem& sys, int r, long long N_max,
                       const SearchLimits& limits = {});

// rado_number specialized to the Brauer system: solution tuples
// {x, d, x+d, x+2d} are generated incrementally as colours are assigned
// instead of being enumerated from the polynomials.
RadoResult brauer_number(int r, long long N_max, const SearchLimits& limits = {});

// Requires chi to avoid monochromatic nontrivial solutions (throws
// ErrorKind::Precondition naming the offending solution otherwise); returns
// one window syndeticity report per colour class.
std::vector<SyndeticityReport> verify_induction_on_colours(const PolySystem& sys,
                                                           const Coloring& chi,
                                                           const FiniteSet& F);

// CNF: variables v(n,c) = (n-1)r + c; satisfiable iff an avoiding coloring
// of [N] exists. Refuses (ErrorKind::SizeLimit) when the solution-tuple
// enumeration hits its cap, since a partial CNF would be unsound.
std::string export_dimacs(const PolySystem& sys, long long N, int r,
                          const SearchLimits& limits = {});

Coloring decode_dimacs_model(const std::vector<bool>& model, long long N, int r);

}  // namespace synram
