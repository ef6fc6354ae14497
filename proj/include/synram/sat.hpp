// sat.hpp — minimal DPLL solver over DIMACS text.
//
// This is the independent route for checking Rado search results: it only
// ever sees the exported CNF, never the search internals.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace synram {

struct DimacsCnf {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;  // signed literals, no zeros
};

DimacsCnf parse_dimacs(const std::string& text);

// Model indexed 1..num_vars when satisfiable.
std::optional<std::vector<bool>> solve_cnf(const DimacsCnf& cnf);

}  // namespace synram
