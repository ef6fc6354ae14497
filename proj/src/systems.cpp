// systems.cpp — polynomial systems: evaluation, homogeneity, products,
// enumeration, and the text serialization.
#include "synram/systems.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

#include "synram/errors.hpp"

namespace synram {

namespace {

Polynomial normalize_polynomial(const Polynomial& poly, int num_vars) {
    std::map<std::vector<unsigned>, Rational> terms;
    for (const Monomial& m : poly) {
        if (static_cast<int>(m.exponents.size()) != num_vars)
            throw Error(ErrorKind::Dimension, "monomial exponent vector length != num_vars");
        terms[m.exponents] += m.coeff;
    }
    Polynomial out;
    for (auto& [exps, coeff] : terms) {
        if (coeff == 0) continue;
        out.push_back(Monomial{coeff, exps});
    }
    // Descending exponent-vector order puts the leading term first.
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (unsigned e : exponents) d += e;
    return d;
}

PolySystem::PolySystem(int num_vars, std::vector<Polynomial> polynomials) : num_vars_(num_vars) {
    if (num_vars < 1) throw Error(ErrorKind::Domain, "system needs at least one variable");
    if (polynomials.empty()) throw Error(ErrorKind::Domain, "system needs at least one polynomial");
    for (const Polynomial& p : polynomials) {
        Polynomial norm = normalize_polynomial(p, num_vars);
        if (norm.empty())
            throw Error(ErrorKind::Domain, "polynomial is identically zero after combining terms");
        polys_.push_back(std::move(norm));
    }
}

PolySystem schur_system() {
    auto mono = [](long c, std::vector<unsigned> e) {
        return Monomial{make_rational(c), std::move(e)};
    };
    return PolySystem(3, {{mono(1, {1, 0, 0}), mono(1, {0, 1, 0}), mono(-1, {0, 0, 1})}});
}

PolySystem brauer_system() {
    // Variable order (x, d, x+d, x+2d): t1 + t2 - t3 = 0, t1 + 2 t2 - t4 = 0.
    auto mono = [](long c, std::vector<unsigned> e) {
        return Monomial{make_rational(c), std::move(e)};
    };
    return PolySystem(4, {{mono(1, {1, 0, 0, 0}), mono(1, {0, 1, 0, 0}), mono(-1, {0, 0, 1, 0})},
                          {mono(1, {1, 0, 0, 0}), mono(2, {0, 1, 0, 0}), mono(-1, {0, 0, 0, 1})}});
}

PolySystem ap3_system() {
    auto mono = [](long c, std::vector<unsigned> e) {
        return Monomial{make_rational(c), std::move(e)};
    };
    return PolySystem(3, {{mono(1, {1, 0, 0}), mono(-2, {0, 1, 0}), mono(1, {0, 0, 1})}});
}

Rational eval_poly(const Polynomial& poly, const Assignment& x, int num_vars) {
    if (static_cast<int>(x.size()) != num_vars)
        throw Error(ErrorKind::Dimension, "assignment length does not match num_vars");
    Rational acc = 0;
    for (const Monomial& m : poly) {
        Integer term = 1;
        for (int i = 0; i < num_vars; ++i) {
            for (unsigned e = 0; e < m.exponents[i]; ++e) term *= to_integer(x[i]);
        }
        acc += m.coeff * Rational(term);
    }
    return acc;
}

bool is_solution(const PolySystem& sys, const Assignment& x) {
    for (const Polynomial& p : sys.polynomials()) {
        if (eval_poly(p, x, sys.num_vars()) != 0) return false;
    }
    return true;
}

bool is_nontrivial(const Assignment& x) {
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (x[i] != x[0]) return true;
    }
    return false;
}

HomogeneityVerdict check_dilation_invariance(const PolySystem& sys) {
    HomogeneityVerdict verdict;
    verdict.homogeneous = true;
    int idx = 0;
    for (const Polynomial& p : sys.polynomials()) {
        const unsigned deg = p.front().total_degree();
        for (const Monomial& m : p) {
            if (m.total_degree() != deg) {
                return HomogeneityVerdict{false, {}, idx};
            }
        }
        verdict.degrees.push_back(deg);
        ++idx;
    }
    return verdict;
}

void require_dilation_invariance(const PolySystem& sys) {
    const HomogeneityVerdict v = check_dilation_invariance(sys);
    if (!v.homogeneous)
        throw Error(ErrorKind::Invariance,
                    "system is not homogeneous (polynomial index " +
                        std::to_string(v.witness_index) + " mixes total degrees)");
}

PolySystem product_system(const std::vector<PolySystem>& systems) {
    if (systems.empty()) throw Error(ErrorKind::Domain, "product of zero systems");
    int total_vars = 0;
    for (const PolySystem& s : systems) {
        require_dilation_invariance(s);
        total_vars += s.num_vars();
    }
    std::vector<Polynomial> polys;
    int offset = 0;
    for (const PolySystem& s : systems) {
        for (const Polynomial& p : s.polynomials()) {
            Polynomial shifted;
            for (const Monomial& m : p) {
                std::vector<unsigned> e(total_vars, 0);
                std::copy(m.exponents.begin(), m.exponents.end(), e.begin() + offset);
                shifted.push_back(Monomial{m.coeff, std::move(e)});
            }
            polys.push_back(std::move(shifted));
        }
        offset += s.num_vars();
    }
    return PolySystem(total_vars, std::move(polys));
}

namespace {

// Integer image of a polynomial, usable when all coefficients are integral
// and every partial evaluation provably fits in __int128.
struct FastPoly {
    struct Term {
        long long coeff;
        std::vector<std::pair<int, unsigned>> factors;  // (var, exponent)
        unsigned degree;
    };
    std::vector<Term> terms;
    int last_var = 0;  // highest variable index referenced
};

std::optional<FastPoly> lower_to_fast(const Polynomial& poly, int num_vars, long long N) {
    FastPoly fp;
    long double magnitude = 0;
    for (const Monomial& m : poly) {
        if (m.coeff.get_den() != 1) return std::nullopt;
        if (!m.coeff.get_num().fits_slong_p()) return std::nullopt;
        FastPoly::Term t;
        t.coeff = m.coeff.get_num().get_si();
        t.degree = m.total_degree();
        for (int i = 0; i < num_vars; ++i) {
            if (m.exponents[i] > 0) {
                t.factors.emplace_back(i, m.exponents[i]);
                fp.last_var = std::max(fp.last_var, i);
            }
        }
        magnitude += std::abs(static_cast<long double>(t.coeff)) *
                     std::pow(static_cast<long double>(N), static_cast<long double>(t.degree));
        fp.terms.push_back(std::move(t));
    }
    if (magnitude > 1e30L) return std::nullopt;  // keep far below __int128 range
    return fp;
}

// Depth-first enumeration over [N]^s in lexicographic order. A polynomial is
// checked exactly when its last referenced variable is assigned; before that
// its value is bracketed with the unassigned variables ranging over [1, N],
// which prunes most of the tree for the linear systems used here.
struct SolutionWalker {
    const PolySystem& sys;
    long long N;
    bool nontrivial_only;
    const std::function<bool(const Assignment&)>& visit;
    std::vector<std::vector<int>> polys_complete_at;
    std::vector<std::optional<FastPoly>> fast;
    bool all_fast;
    std::vector<__int128> pow_table;  // N^d for bound estimates
    Assignment current;
    bool stopped = false;

    SolutionWalker(const PolySystem& s, long long n, bool nt,
                   const std::function<bool(const Assignment&)>& v)
        : sys(s), N(n), nontrivial_only(nt), visit(v) {
        polys_complete_at.assign(sys.num_vars(), {});
        all_fast = true;
        unsigned max_deg = 0;
        int idx = 0;
        for (const Polynomial& p : sys.polynomials()) {
            fast.push_back(lower_to_fast(p, sys.num_vars(), N));
            all_fast = all_fast && fast.back().has_value();
            int last = 0;
            for (const Monomial& m : p) {
                max_deg = std::max(max_deg, m.total_degree());
                for (int i = 0; i < sys.num_vars(); ++i) {
                    if (m.exponents[i] > 0) last = std::max(last, i);
                }
            }
            polys_complete_at[last].push_back(idx);
            ++idx;
        }
        pow_table.assign(max_deg + 1, 1);
        for (unsigned d = 1; d <= max_deg; ++d) pow_table[d] = pow_table[d - 1] * N;
        current.assign(sys.num_vars(), 0);
    }

    __int128 eval_fast(const FastPoly& fp) const {
        __int128 acc = 0;
        for (const auto& t : fp.terms) {
            __int128 term = t.coeff;
            for (const auto& [var, exp] : t.factors) {
                for (unsigned e = 0; e < exp; ++e) term *= current[var];
            }
            acc += term;
        }
        return acc;
    }

    // [lo, hi] over completions with variables > depth in [1, N].
    bool bounds_exclude_zero(const FastPoly& fp, int depth) const {
        __int128 lo = 0, hi = 0;
        for (const auto& t : fp.terms) {
            __int128 assigned = t.coeff;
            unsigned free_deg = 0;
            for (const auto& [var, exp] : t.factors) {
                if (var <= depth) {
                    for (unsigned e = 0; e < exp; ++e) assigned *= current[var];
                } else {
                    free_deg += exp;
                }
            }
            if (free_deg == 0) {
                lo += assigned;
                hi += assigned;
            } else if (assigned >= 0) {
                lo += assigned;
                hi += assigned * pow_table[free_deg];
            } else {
                lo += assigned * pow_table[free_deg];
                hi += assigned;
            }
        }
        return lo > 0 || hi < 0;
    }

    bool check_at_depth(int depth) {
        if (all_fast) {
            for (int pi : polys_complete_at[depth]) {
                if (eval_fast(*fast[pi]) != 0) return false;
            }
            for (const auto& fp : fast) {
                if (fp->last_var > depth && bounds_exclude_zero(*fp, depth)) return false;
            }
            return true;
        }
        for (int pi : polys_complete_at[depth]) {
            if (eval_poly(sys.polynomials()[pi], current, sys.num_vars()) != 0) return false;
        }
        return true;
    }

    void descend(int depth) {
        if (stopped) return;
        if (depth == sys.num_vars()) {
            if (!nontrivial_only || is_nontrivial(current)) {
                if (!visit(current)) stopped = true;
            }
            return;
        }
        for (long long v = 1; v <= N && !stopped; ++v) {
            current[depth] = v;
            if (check_at_depth(depth)) descend(depth + 1);
        }
        current[depth] = 0;
    }
};

}  // namespace

void visit_solutions(const PolySystem& sys, long long N, bool require_nontrivial,
                     const std::function<bool(const Assignment&)>& visit) {
    if (N < 1) return;
    SolutionWalker walker(sys, N, require_nontrivial, visit);
    walker.descend(0);
}

EnumerationResult enumerate_solutions(const PolySystem& sys, long long N,
                                      bool require_nontrivial, std::uint64_t cap) {
    EnumerationResult result;
    visit_solutions(sys, N, require_nontrivial, [&](const Assignment& x) {
        if (result.solutions.size() >= cap) {
            result.truncated = true;
            return false;
        }
        result.solutions.push_back(x);
        return true;
    });
    return result;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw Error(ErrorKind::Format, "empty rational literal");
    try {
        Rational q(text);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::Format, "bad rational literal: " + text);
    }
}

std::string serialize_system(const PolySystem& sys) {
    std::ostringstream out;
    out << "vars: " << sys.num_vars() << "\n";
    for (const Polynomial& p : sys.polynomials()) {
        bool first = true;
        for (const Monomial& m : p) {
            if (!first) out << " + ";
            first = false;
            out << to_string(m.coeff);
            for (int i = 0; i < sys.num_vars(); ++i) {
                out << "*t" << (i + 1) << "^" << m.exponents[i];
            }
        }
        out << "\n";
    }
    return out.str();
}

namespace {

// One product term: [coeff] ['*' t<k> ['^' e]]... with optional leading sign
// already folded into `sign`.
Monomial parse_monomial(const std::string& term, int num_vars, int sign) {
    std::vector<unsigned> exps(num_vars, 0);
    Rational coeff = sign;
    bool saw_coeff = false;

    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < term.size() && std::isspace(static_cast<unsigned char>(term[pos]))) ++pos;
    };
    skip_ws();
    bool expect_factor = true;
    while (pos < term.size()) {
        skip_ws();
        if (pos >= term.size()) break;
        if (!expect_factor) {
            if (term[pos] != '*') throw Error(ErrorKind::Format, "expected '*' in term: " + term);
            ++pos;
            skip_ws();
        }
        expect_factor = false;
        if (term[pos] == 't') {
            ++pos;
            std::size_t start = pos;
            while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos]))) ++pos;
            if (start == pos) throw Error(ErrorKind::Format, "bad variable in term: " + term);
            const int var = std::stoi(term.substr(start, pos - start));
            if (var < 1 || var > num_vars)
                throw Error(ErrorKind::Format, "variable t" + std::to_string(var) + " out of range");
            unsigned e = 1;
            skip_ws();
            if (pos < term.size() && term[pos] == '^') {
                ++pos;
                skip_ws();
                start = pos;
                while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos]))) ++pos;
                if (start == pos) throw Error(ErrorKind::Format, "bad exponent in term: " + term);
                e = static_cast<unsigned>(std::stoul(term.substr(start, pos - start)));
            }
            exps[var - 1] += e;
        } else {
            std::size_t start = pos;
            while (pos < term.size() && term[pos] != '*') ++pos;
            std::string lit = term.substr(start, pos - start);
            while (!lit.empty() && std::isspace(static_cast<unsigned char>(lit.back()))) lit.pop_back();
            coeff *= parse_rational(lit);
            saw_coeff = true;
        }
    }
    if (!saw_coeff && exps == std::vector<unsigned>(num_vars, 0))
        throw Error(ErrorKind::Format, "empty term");
    return Monomial{coeff, std::move(exps)};
}

Polynomial parse_polynomial(const std::string& line, int num_vars) {
    // Split on top-level '+' and '-' (sign markers), respecting "a/b".
    Polynomial poly;
    std::size_t pos = 0;
    int pending_sign = 1;
    std::string term;
    auto flush = [&] {
        bool blank = term.find_first_not_of(" \t") == std::string::npos;
        if (!blank) poly.push_back(parse_monomial(term, num_vars, pending_sign));
        term.clear();
    };
    bool at_term_start = true;
    while (pos < line.size()) {
        const char c = line[pos];
        if (c == '+' || (c == '-' && at_term_start)) {
            if (c == '-' && at_term_start && term.find_first_not_of(" \t") == std::string::npos) {
                // Leading minus of a term.
                pending_sign = -pending_sign;
                ++pos;
                continue;
            }
            flush();
            pending_sign = (c == '-') ? -1 : 1;
            at_term_start = true;
            ++pos;
            continue;
        }
        if (c == '-') {
            flush();
            pending_sign = -1;
            at_term_start = true;
            ++pos;
            continue;
        }
        term += c;
        if (!std::isspace(static_cast<unsigned char>(c))) at_term_start = false;
        ++pos;
    }
    flush();
    if (poly.empty()) throw Error(ErrorKind::Format, "empty polynomial line");
    return poly;
}

}  // namespace

PolySystem parse_system(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int num_vars = -1;
    std::vector<Polynomial> polys;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::size_t content = line.find_first_not_of(" \t\r");
        if (content == std::string::npos) continue;
        line = line.substr(content);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
        if (num_vars < 0) {
            if (line.rfind("vars:", 0) != 0)
                throw Error(ErrorKind::Format, "expected 'vars: s' header, got: " + line);
            num_vars = std::stoi(line.substr(5));
            if (num_vars < 1) throw Error(ErrorKind::Format, "vars must be positive");
            continue;
        }
        polys.push_back(parse_polynomial(line, num_vars));
    }
    if (num_vars < 0) throw Error(ErrorKind::Format, "missing 'vars: s' header");
    if (polys.empty()) throw Error(ErrorKind::Format, "system has no polynomials");
    return PolySystem(num_vars, std::move(polys));
}

std::uint64_t system_hash(const PolySystem& sys) {
    const std::string canon = serialize_system(sys);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace synram
