// sat.cpp — DIMACS parsing and a plain recursive DPLL with unit propagation.
#include "synram/sat.hpp"

#include <cstdlib>
#include <sstream>

#include "synram/errors.hpp"

namespace synram {

DimacsCnf parse_dimacs(const std::string& text) {
    DimacsCnf cnf;
    std::istringstream in(text);
    std::string line;
    bool saw_header = false;
    std::vector<int> clause;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == 'p') {
            std::istringstream header(line);
            std::string p, fmt;
            long long vars = 0, clauses = 0;
            header >> p >> fmt >> vars >> clauses;
            if (fmt != "cnf" || vars < 0)
                throw Error(ErrorKind::Format, "bad DIMACS header: " + line);
            cnf.num_vars = static_cast<int>(vars);
            saw_header = true;
            continue;
        }
        std::istringstream body(line);
        int lit = 0;
        while (body >> lit) {
            if (lit == 0) {
                cnf.clauses.push_back(clause);
                clause.clear();
            } else {
                if (std::abs(lit) > cnf.num_vars)
                    throw Error(ErrorKind::Format, "literal out of range: " + std::to_string(lit));
                clause.push_back(lit);
            }
        }
    }
    if (!saw_header) throw Error(ErrorKind::Format, "missing DIMACS header");
    if (!clause.empty()) throw Error(ErrorKind::Format, "unterminated clause");
    return cnf;
}

namespace {

struct Dpll {
    const std::vector<std::vector<int>>& clauses;
    std::vector<int8_t> value;          // 0 unset, +1 true, -1 false (1-based)
    std::vector<std::vector<int>> pos;  // clause indices containing +v
    std::vector<std::vector<int>> neg;  // clause indices containing -v

    explicit Dpll(const DimacsCnf& cnf) : clauses(cnf.clauses) {
        value.assign(cnf.num_vars + 1, 0);
        pos.assign(cnf.num_vars + 1, {});
        neg.assign(cnf.num_vars + 1, {});
        for (std::size_t i = 0; i < clauses.size(); ++i) {
            for (int lit : clauses[i]) {
                (lit > 0 ? pos[lit] : neg[-lit]).push_back(static_cast<int>(i));
            }
        }
    }

    bool lit_true(int lit) const { return value[std::abs(lit)] == (lit > 0 ? 1 : -1); }
    bool lit_false(int lit) const { return value[std::abs(lit)] == (lit > 0 ? -1 : 1); }

    // Assigns lit and propagates units; records assignments on the trail.
    bool assign_and_propagate(int lit, std::vector<int>& trail) {
        std::vector<int> queue{lit};
        while (!queue.empty()) {
            const int l = queue.back();
            queue.pop_back();
            const int v = std::abs(l);
            const int8_t want = l > 0 ? 1 : -1;
            if (value[v] == want) continue;
            if (value[v] == -want) return false;
            value[v] = want;
            trail.push_back(v);
            // Clauses where the complement of l just lost a literal.
            for (int ci : (l > 0 ? neg[v] : pos[v])) {
                const auto& clause = clauses[ci];
                int unassigned = 0, unit = 0;
                bool satisfied = false;
                for (int cl : clause) {
                    if (lit_true(cl)) {
                        satisfied = true;
                        break;
                    }
                    if (!lit_false(cl)) {
                        ++unassigned;
                        unit = cl;
                    }
                }
                if (satisfied) continue;
                if (unassigned == 0) return false;
                if (unassigned == 1) queue.push_back(unit);
            }
        }
        return true;
    }

    void undo(std::vector<int>& trail, std::size_t mark) {
        while (trail.size() > mark) {
            value[trail.back()] = 0;
            trail.pop_back();
        }
    }

    bool solve(std::vector<int>& trail) {
        int branch = 0;
        for (int v = 1; v < static_cast<int>(value.size()); ++v) {
            if (value[v] == 0) {
                branch = v;
                break;
            }
        }
        if (branch == 0) return true;
        for (int sign : {+1, -1}) {
            const std::size_t mark = trail.size();
            if (assign_and_propagate(sign * branch, trail) && solve(trail)) return true;
            undo(trail, mark);
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<bool>> solve_cnf(const DimacsCnf& cnf) {
    // Propagate initial units first.
    Dpll dpll(cnf);
    std::vector<int> trail;
    for (const auto& clause : cnf.clauses) {
        if (clause.empty()) return std::nullopt;
        if (clause.size() == 1) {
            if (!dpll.assign_and_propagate(clause[0], trail)) return std::nullopt;
        }
    }
    if (!dpll.solve(trail)) return std::nullopt;
    std::vector<bool> model(cnf.num_vars + 1, false);
    for (int v = 1; v <= cnf.num_vars; ++v) model[v] = dpll.value[v] == 1;
    return model;
}

}  // namespace synram
