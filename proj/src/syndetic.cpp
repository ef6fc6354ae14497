// syndetic.cpp — window checks, S(a,k), the cover-based minimality oracle,
// smooth numbers, and the window serializations.
#include "synram/syndetic.hpp"

#include <algorithm>
#include <sstream>

#include "synram/errors.hpp"

namespace synram {

FiniteSet::FiniteSet(std::vector<long long> elements) : elems_(std::move(elements)) {
    if (elems_.empty()) throw Error(ErrorKind::Domain, "finite set must be non-empty");
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (elems_.front() < 1) throw Error(ErrorKind::Domain, "finite set elements must be >= 1");
}

bool FiniteSet::contains(long long v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

Window::Window(long long N) : N_(N) {
    if (N < 1) throw Error(ErrorKind::Domain, "window length must be positive");
    bits_.assign(static_cast<std::size_t>(N), false);
}

Window::Window(long long N, std::vector<bool> bits) : N_(N), bits_(std::move(bits)) {
    if (N < 1) throw Error(ErrorKind::Domain, "window length must be positive");
    if (static_cast<long long>(bits_.size()) != N)
        throw Error(ErrorKind::Domain, "window truth table must have exactly N entries");
}

void Window::set(long long n, bool member) {
    if (n < 1 || n > N_) throw Error(ErrorKind::Domain, "window index out of range");
    bits_[n - 1] = member;
}

long long Window::count() const {
    long long c = 0;
    for (bool b : bits_) c += b ? 1 : 0;
    return c;
}

Window Window::complement() const {
    std::vector<bool> flipped(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) flipped[i] = !bits_[i];
    return Window(N_, std::move(flipped));
}

Window Window::truncated(long long M) const {
    if (M < 1 || M > N_) throw Error(ErrorKind::Domain, "truncation length out of range");
    return Window(M, std::vector<bool>(bits_.begin(), bits_.begin() + M));
}

std::vector<long long> Window::elements() const {
    std::vector<long long> out;
    for (long long n = 1; n <= N_; ++n) {
        if (bits_[n - 1]) out.push_back(n);
    }
    return out;
}

long long nu(long long a, long long n) {
    if (a < 2) throw Error(ErrorKind::Domain, "nu: base must be >= 2");
    if (n < 1) throw Error(ErrorKind::Domain, "nu: argument must be >= 1");
    long long k = 0;
    while (n % a == 0) {
        n /= a;
        ++k;
    }
    return k;
}

Window s_ak_window(long long a, long long k, long long N) {
    if (a < 2 || k < 2) throw Error(ErrorKind::Domain, "S(a,k) needs a,k >= 2");
    Window w(N);
    for (long long n = 1; n <= N; ++n) {
        w.set(n, nu(a, n) % k == k - 1);
    }
    return w;
}

std::optional<long long> encoding_tau(const Window& S, const FiniteSet& F, long long n) {
    if (n < 1) throw Error(ErrorKind::Domain, "tau: n must be positive");
    if (n * F.max() > S.N())
        throw Error(ErrorKind::OutOfWindow, "tau: n*max(F) exceeds the window");
    for (long long t : F.elements()) {
        if (S.contains(n * t)) return t;
    }
    return std::nullopt;
}

SyndeticityReport syndetic_report_relaxed(const Window& S, const FiniteSet& F) {
    SyndeticityReport report;
    report.checked_up_to = S.N() / F.max();
    report.is_window_syndetic = true;
    for (long long n = 1; n <= report.checked_up_to; ++n) {
        if (!encoding_tau(S, F, n).has_value()) {
            report.is_window_syndetic = false;
            report.first_failure = n;
            break;
        }
    }
    return report;
}

SyndeticityReport is_f_syndetic_window(const Window& S, const FiniteSet& F) {
    if (F.max() > S.N())
        throw Error(ErrorKind::OutOfWindow, "syndeticity check: max(F) exceeds the window");
    return syndetic_report_relaxed(S, F);
}

std::optional<long long> thick_witness(const Window& T, const FiniteSet& F) {
    if (F.max() > T.N())
        throw Error(ErrorKind::OutOfWindow, "thickness check: max(F) exceeds the window");
    for (long long t = 1; t * F.max() <= T.N(); ++t) {
        bool all_in = true;
        for (long long f : F.elements()) {
            if (!T.contains(t * f)) {
                all_in = false;
                break;
            }
        }
        if (all_in) return t;
    }
    return std::nullopt;
}

std::optional<long long> is_piecewise_syndetic_window(const Window& S, const FiniteSet& F,
                                                      const FiniteSet& F_test) {
    if (F.max() * F_test.max() > S.N())
        throw Error(ErrorKind::OutOfWindow, "piecewise check: max(F)*max(F_test) exceeds the window");
    const long long M = S.N() / F.max();
    Window D(M);
    for (long long n = 1; n <= M; ++n) {
        for (long long t : F.elements()) {
            if (S.contains(n * t)) {
                D.set(n, true);
                break;
            }
        }
    }
    return thick_witness(D, F_test);
}

Rational density_lower_bound(const FiniteSet& F, long long N) {
    return make_rational(to_integer(N / F.max()), to_integer(static_cast<long long>(F.size())));
}

namespace {

// Minimum hitting set over small hypergraphs. Edges are given as element
// lists over a ground set of positive integers. Returns (size, chosen) with
// the lexicographically least optimal witness by element sequence.
struct CoverSolver {
    std::vector<std::vector<long long>> edges;

    long long best_size = -1;

    static bool hits(const std::vector<long long>& edge, const std::vector<long long>& chosen) {
        for (long long e : edge) {
            if (std::binary_search(chosen.begin(), chosen.end(), e)) return true;
        }
        return false;
    }

    // Greedy disjoint-edge matching over uncovered edges: a lower bound.
    long long lower_bound(const std::vector<long long>& chosen) const {
        std::vector<long long> used;
        long long lb = 0;
        for (const auto& edge : edges) {
            if (hits(edge, chosen)) continue;
            bool disjoint = true;
            for (long long e : edge) {
                if (std::find(used.begin(), used.end(), e) != used.end()) {
                    disjoint = false;
                    break;
                }
            }
            if (disjoint) {
                ++lb;
                used.insert(used.end(), edge.begin(), edge.end());
            }
        }
        return lb;
    }

    const std::vector<long long>* first_uncovered(const std::vector<long long>& chosen) const {
        for (const auto& edge : edges) {
            if (!hits(edge, chosen)) return &edge;
        }
        return nullptr;
    }

    void search(std::vector<long long>& chosen) {
        if (best_size >= 0 && static_cast<long long>(chosen.size()) + lower_bound(chosen) >= best_size)
            return;
        const auto* edge = first_uncovered(chosen);
        if (edge == nullptr) {
            best_size = static_cast<long long>(chosen.size());
            return;
        }
        for (long long e : *edge) {
            auto it = std::lower_bound(chosen.begin(), chosen.end(), e);
            it = chosen.insert(it, e);
            search(chosen);
            chosen.erase(std::lower_bound(chosen.begin(), chosen.end(), e));
        }
    }

    long long min_size() {
        best_size = -1;
        std::vector<long long> chosen;
        // Seed with the greedy cover so pruning bites immediately.
        std::vector<long long> greedy;
        for (const auto& edge : edges) {
            if (!hits(edge, greedy)) {
                auto it = std::lower_bound(greedy.begin(), greedy.end(), edge.front());
                greedy.insert(it, edge.front());
            }
        }
        best_size = static_cast<long long>(greedy.size()) + 1;
        search(chosen);
        return best_size;
    }

    // Feasibility of covering all edges with `budget` more elements, all > floor
    // or within `forced` (already chosen).
    bool feasible(std::vector<long long>& chosen, long long budget) {
        if (lower_bound(chosen) > budget) return false;
        const auto* edge = first_uncovered(chosen);
        if (edge == nullptr) return true;
        if (budget == 0) return false;
        for (long long e : *edge) {
            auto it = std::lower_bound(chosen.begin(), chosen.end(), e);
            it = chosen.insert(it, e);
            const bool ok = feasible(chosen, budget - 1);
            chosen.erase(std::lower_bound(chosen.begin(), chosen.end(), e));
            if (ok) return true;
        }
        return false;
    }
};

}  // namespace

MinSyndeticResult min_syndetic_size(const FiniteSet& F, long long N) {
    const long long m = N / F.max();

    // Singleton F forces X = [m]; no search involved.
    if (F.size() == 1) {
        MinSyndeticResult result{m, Window(N)};
        for (long long n = 1; n <= m; ++n) result.witness.set(n * F.max(), true);
        return result;
    }
    if (m > 30)
        throw Error(ErrorKind::SizeLimit,
                    "min_syndetic_size: floor(N/max F) = " + std::to_string(m) +
                        " exceeds the exhaustive-search guard (30)");

    MinSyndeticResult result{0, Window(N)};
    if (m == 0) return result;  // no constraints inside the window

    CoverSolver solver;
    for (long long n = 1; n <= m; ++n) {
        std::vector<long long> edge;
        for (long long t : F.elements()) edge.push_back(n * t);
        solver.edges.push_back(std::move(edge));
    }
    const long long size = solver.min_size();
    result.size = size;

    // Lexicographically least witness of optimal size: grow the element
    // sequence greedily, keeping completability within the budget.
    std::vector<long long> candidates;
    for (const auto& edge : solver.edges)
        candidates.insert(candidates.end(), edge.begin(), edge.end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<long long> chosen;
    while (solver.first_uncovered(chosen) != nullptr) {
        for (long long e : candidates) {
            if (std::binary_search(chosen.begin(), chosen.end(), e)) continue;
            if (!chosen.empty() && e < chosen.back()) continue;  // keep sequence increasing
            auto it = std::lower_bound(chosen.begin(), chosen.end(), e);
            it = chosen.insert(it, e);
            if (solver.feasible(chosen, size - static_cast<long long>(chosen.size()))) break;
            chosen.erase(std::lower_bound(chosen.begin(), chosen.end(), e));
        }
    }
    for (long long e : chosen) result.witness.set(e, true);
    return result;
}

std::vector<long long> smooth_numbers(const FiniteSet& F, long long limit) {
    if (limit < 1) return {};
    // Primes dividing elements of F.
    std::vector<long long> primes;
    for (long long f : F.elements()) {
        long long v = f;
        for (long long p = 2; p * p <= v; ++p) {
            if (v % p == 0) {
                primes.push_back(p);
                while (v % p == 0) v /= p;
            }
        }
        if (v > 1) primes.push_back(v);
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    std::vector<bool> smooth(static_cast<std::size_t>(limit) + 1, false);
    smooth[1] = true;
    std::vector<long long> out{1};
    for (long long n = 2; n <= limit; ++n) {
        for (long long p : primes) {
            if (p > n) break;
            if (n % p == 0 && smooth[n / p]) {
                smooth[n] = true;
                out.push_back(n);
                break;
            }
        }
    }
    return out;
}

long long gF_window_estimate(const FiniteSet& F, long long k, long long limit) {
    if (k < 1) throw Error(ErrorKind::Domain, "gF estimate: k must be positive");
    const std::vector<long long> d = smooth_numbers(F, limit);
    if (static_cast<long long>(d.size()) < k)
        throw Error(ErrorKind::Domain,
                    "gF estimate: fewer than k P_F-smooth numbers up to the limit");
    if (d[k - 1] * F.max() > limit)
        throw Error(ErrorKind::OutOfWindow, "gF estimate: d_k*max(F) exceeds the limit");
    const long long m = limit / F.max();
    if (m > 30 && F.size() > 1)
        throw Error(ErrorKind::SizeLimit, "gF estimate: constraint count exceeds the search guard");

    std::vector<long long> prefix(d.begin(), d.begin() + k);
    std::sort(prefix.begin(), prefix.end());

    // Constraints whose dilate lies entirely inside {d_1..d_k} must be paid
    // for; every other constraint can be met by an element outside the
    // prefix at no cost.
    CoverSolver solver;
    for (long long n = 1; n <= m; ++n) {
        std::vector<long long> edge;
        bool all_in_prefix = true;
        for (long long t : F.elements()) {
            edge.push_back(n * t);
            if (!std::binary_search(prefix.begin(), prefix.end(), n * t)) all_in_prefix = false;
        }
        if (all_in_prefix) solver.edges.push_back(std::move(edge));
    }
    if (solver.edges.empty()) return 0;
    return solver.min_size();
}

std::string serialize_window(const Window& w) {
    std::ostringstream out;
    out << "N:" << w.N() << ":";
    long long n = 1;
    bool first = true;
    while (n <= w.N()) {
        const bool bit = w.contains(n);
        long long run = 1;
        while (n + run <= w.N() && w.contains(n + run) == bit) ++run;
        if (!first) out << ",";
        first = false;
        out << run << "x" << (bit ? 1 : 0);
        n += run;
    }
    return out.str();
}

Window parse_window(const std::string& text) {
    if (text.rfind("N:", 0) != 0) throw Error(ErrorKind::Format, "window must start with 'N:'");
    const std::size_t second_colon = text.find(':', 2);
    if (second_colon == std::string::npos)
        throw Error(ErrorKind::Format, "window missing run-length section");
    long long N = 0;
    try {
        N = std::stoll(text.substr(2, second_colon - 2));
    } catch (const std::exception&) {
        throw Error(ErrorKind::Format, "bad window length");
    }
    Window w(N);
    long long n = 1;
    std::istringstream runs(text.substr(second_colon + 1));
    std::string token;
    while (std::getline(runs, token, ',')) {
        const std::size_t x = token.find('x');
        if (x == std::string::npos) throw Error(ErrorKind::Format, "bad run token: " + token);
        long long len = 0;
        int bit = 0;
        try {
            len = std::stoll(token.substr(0, x));
            bit = std::stoi(token.substr(x + 1));
        } catch (const std::exception&) {
            throw Error(ErrorKind::Format, "bad run token: " + token);
        }
        if (len < 1 || (bit != 0 && bit != 1))
            throw Error(ErrorKind::Format, "bad run token: " + token);
        for (long long i = 0; i < len; ++i) {
            if (n > N) throw Error(ErrorKind::Format, "window runs exceed N");
            w.set(n++, bit == 1);
        }
    }
    if (n != N + 1) throw Error(ErrorKind::Format, "window runs do not cover [N]");
    return w;
}

std::string serialize_finite_set(const FiniteSet& F) {
    std::ostringstream out;
    bool first = true;
    for (long long e : F.elements()) {
        if (!first) out << ",";
        first = false;
        out << e;
    }
    return out.str();
}

FiniteSet parse_finite_set(const std::string& text) {
    std::vector<long long> elems;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        try {
            elems.push_back(std::stoll(token));
        } catch (const std::exception&) {
            throw Error(ErrorKind::Format, "bad finite-set element: " + token);
        }
    }
    return FiniteSet(std::move(elems));
}

}  // namespace synram
