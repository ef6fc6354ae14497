// ramsey.cpp — coloring DFS (prefix-parallel, deterministic), Rado/Brauer
// number scans, induction-on-colours verification, DIMACS export.
#include "synram/ramsey.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>

#include "synram/errors.hpp"
#include "synram/parallel.hpp"

namespace synram {

namespace {

using TupleIndex = std::vector<std::vector<std::vector<long long>>>;  // by max element

// Distinct sorted entry sets of nontrivial solutions, grouped by max entry.
TupleIndex tuple_index_from_system(const PolySystem& sys, long long N,
                                   const SearchLimits& limits) {
    EnumerationResult enumerated = enumerate_solutions(sys, N, true, limits.enumeration_cap);
    if (enumerated.truncated)
        throw Error(ErrorKind::SizeLimit,
                    "solution-tuple enumeration hit its cap; refusing an incomplete constraint set");
    std::set<std::vector<long long>> seen;
    TupleIndex index(static_cast<std::size_t>(N) + 1);
    for (const Assignment& sol : enumerated.solutions) {
        std::vector<long long> entries(sol.begin(), sol.end());
        std::sort(entries.begin(), entries.end());
        entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
        if (seen.insert(entries).second) {
            index[static_cast<std::size_t>(entries.back())].push_back(std::move(entries));
        }
    }
    return index;
}

// Brauer configurations {x, d, x+d, x+2d} complete exactly when x+2d is
// assigned, so the tuples with max = n are generated directly.
TupleIndex brauer_tuple_index(long long N) {
    TupleIndex index(static_cast<std::size_t>(N) + 1);
    for (long long n = 3; n <= N; ++n) {
        for (long long d = 1; 2 * d < n; ++d) {
            const long long x = n - 2 * d;
            std::vector<long long> entries{x, d, x + d, n};
            std::sort(entries.begin(), entries.end());
            entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
            index[static_cast<std::size_t>(n)].push_back(std::move(entries));
        }
    }
    return index;
}

struct Prefix {
    std::vector<std::uint8_t> colour;  // length = depth
    int max_used = 1;
};

// Exhaustive DFS over canonical colorings: chi(1)=1 and colour c+1 may only
// appear after colour c (full colour-permutation symmetry, a 1/r! factor).
// The lexicographically least avoiding coloring is canonical, so restricting
// the search this way does not change the reported witness.
class ColoringDfs {
  public:
    ColoringDfs(long long N, int r, const TupleIndex& tuples, std::uint64_t node_cap)
        : N_(N), r_(r), tuples_(tuples), node_cap_(node_cap) {}

    SearchOutcome run() {
        SearchOutcome outcome;
        if (N_ < 1) {
            outcome.witness = Coloring{0, r_, {}};
            return outcome;
        }

        std::uint64_t expansion_nodes = 0;
        std::vector<Prefix> prefixes = expand_prefixes(expansion_nodes);
        if (expansion_nodes > node_cap_)
            throw SearchLimitError(expansion_nodes, "node cap exceeded during coloring search");
        outcome.nodes = expansion_nodes;

        if (prefixes.empty()) return outcome;  // exhausted during expansion
        const long long depth = static_cast<long long>(prefixes[0].colour.size());
        if (depth == N_) {
            outcome.witness = Coloring{N_, r_, prefixes.front().colour};
            return outcome;
        }

        const std::size_t count = prefixes.size();
        std::vector<std::optional<Coloring>> found(count);
        std::vector<std::uint64_t> node_counts(count, 0);
        std::atomic<std::uint64_t> shared_nodes{expansion_nodes};
        std::atomic<bool> over_cap{false};

#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_budget())
        for (std::size_t i = 0; i < count; ++i) {
            if (over_cap.load(std::memory_order_relaxed)) continue;
            Walker walker{*this, shared_nodes, over_cap};
            std::vector<std::uint8_t> colors(static_cast<std::size_t>(N_), 0);
            std::copy(prefixes[i].colour.begin(), prefixes[i].colour.end(), colors.begin());
            std::vector<std::uint8_t> witness;
            walker.complete(colors, depth + 1, prefixes[i].max_used, witness);
            walker.flush();
            node_counts[i] = walker.local_total;
            if (!witness.empty()) found[i] = Coloring{N_, r_, std::move(witness)};
        }

        std::uint64_t total = expansion_nodes;
        for (std::uint64_t c : node_counts) total += c;
        if (over_cap.load())
            throw SearchLimitError(total, "node cap exceeded during coloring search");
        outcome.nodes = total;
        for (auto& f : found) {
            if (f.has_value()) {
                outcome.witness = std::move(f);
                break;
            }
        }
        return outcome;
    }

  private:
    friend struct Walker;

    bool closes_mono(const std::vector<std::uint8_t>& colors, long long n, int c) const {
        for (const auto& tuple : tuples_[static_cast<std::size_t>(n)]) {
            bool mono = true;
            for (long long e : tuple) {
                const int ec = (e == n) ? c : colors[static_cast<std::size_t>(e - 1)];
                if (ec != c) {
                    mono = false;
                    break;
                }
            }
            if (mono) return true;
        }
        return false;
    }

    // Valid canonical prefixes in lexicographic order, grown until there are
    // enough to parallelize over (instance-determined, never thread-count-
    // dependent).
    std::vector<Prefix> expand_prefixes(std::uint64_t& nodes) {
        std::vector<Prefix> level;
        ++nodes;
        if (closes_mono({}, 1, 1)) return {};
        level.push_back(Prefix{{1}, 1});
        long long depth = 1;
        while (depth < N_ && level.size() < 512) {
            std::vector<Prefix> next;
            for (const Prefix& p : level) {
                std::vector<std::uint8_t> colors(static_cast<std::size_t>(N_), 0);
                std::copy(p.colour.begin(), p.colour.end(), colors.begin());
                const int cmax = std::min(r_, p.max_used + 1);
                for (int c = 1; c <= cmax; ++c) {
                    ++nodes;
                    if (!closes_mono(colors, depth + 1, c)) {
                        Prefix q = p;
                        q.colour.push_back(static_cast<std::uint8_t>(c));
                        q.max_used = std::max(q.max_used, c);
                        next.push_back(std::move(q));
                    }
                }
            }
            level = std::move(next);
            ++depth;
            if (level.empty()) break;
        }
        return level;
    }

    struct Walker {
        const ColoringDfs& dfs;
        std::atomic<std::uint64_t>& shared_nodes;
        std::atomic<bool>& over_cap;
        std::uint64_t local_nodes = 0;
        std::uint64_t local_total = 0;

        // First completion found is the lexicographically least in-subtree.
        bool complete(std::vector<std::uint8_t>& colors, long long depth, int max_used,
                      std::vector<std::uint8_t>& witness) {
            if (depth > dfs.N_) {
                witness = colors;
                return true;
            }
            const int cmax = std::min(dfs.r_, max_used + 1);
            for (int c = 1; c <= cmax; ++c) {
                if (++local_nodes >= 4096) flush();
                if (over_cap.load(std::memory_order_relaxed)) return false;
                if (!dfs.closes_mono(colors, depth, c)) {
                    colors[static_cast<std::size_t>(depth - 1)] = static_cast<std::uint8_t>(c);
                    if (complete(colors, depth + 1, std::max(max_used, c), witness)) return true;
                    colors[static_cast<std::size_t>(depth - 1)] = 0;
                }
            }
            return false;
        }

        void flush() {
            local_total += local_nodes;
            const std::uint64_t seen =
                shared_nodes.fetch_add(local_nodes, std::memory_order_relaxed) + local_nodes;
            local_nodes = 0;
            if (seen > dfs.node_cap_) over_cap.store(true, std::memory_order_relaxed);
        }
    };

    long long N_;
    int r_;
    const TupleIndex& tuples_;
    std::uint64_t node_cap_;
};

std::string format_assignment(const Assignment& x) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i > 0) out << ",";
        out << x[i];
    }
    out << ")";
    return out.str();
}

RadoResult rado_scan(const std::function<TupleIndex(long long)>& tuples_at, int r,
                     long long N_max, const SearchLimits& limits) {
    RadoResult result;
    result.witness = Coloring{0, r, {}};
    std::uint64_t nodes = 0;
    for (long long N = 1; N <= N_max; ++N) {
        const TupleIndex index = tuples_at(N);
        // The cap applies to the whole scan, not to each window separately.
        if (nodes >= limits.node_cap)
            throw SearchLimitError(nodes, "node cap exceeded during Rado scan");
        ColoringDfs dfs(N, r, index, limits.node_cap - nodes);
        SearchOutcome outcome;
        try {
            outcome = dfs.run();
        } catch (SearchLimitError& e) {
            throw SearchLimitError(nodes + e.nodes(), e.what());
        }
        nodes += outcome.nodes;
        if (!outcome.witness.has_value()) {
            result.found = true;
            result.N = N;
            result.exhaustion_proof = true;
            result.nodes = nodes;
            return result;  // witness already holds the avoiding coloring of [N-1]
        }
        result.witness = std::move(*outcome.witness);
    }
    result.found = false;
    result.N = N_max;
    result.nodes = nodes;
    return result;
}

}  // namespace

std::optional<Assignment> find_monochromatic_solution(const PolySystem& sys,
                                                      const Coloring& chi) {
    std::optional<Assignment> hit;
    visit_solutions(sys, chi.N, true, [&](const Assignment& x) {
        const int c = chi.at(x[0]);
        for (long long v : x) {
            if (chi.at(v) != c) return true;
        }
        hit = x;
        return false;
    });
    return hit;
}

SearchOutcome search_avoiding_coloring(const PolySystem& sys, long long N, int r,
                                       const SearchLimits& limits) {
    require_dilation_invariance(sys);
    const TupleIndex index = tuple_index_from_system(sys, N, limits);
    ColoringDfs dfs(N, r, index, limits.node_cap);
    return dfs.run();
}

SearchOutcome search_avoiding_coloring_within(const PolySystem& sys, const Window& S, int r,
                                              const SearchLimits& limits) {
    require_dilation_invariance(sys);
    const std::vector<long long> elems = S.elements();
    if (elems.empty()) {
        SearchOutcome empty;
        empty.witness = Coloring{0, r, {}};
        return empty;
    }
    // Position of each element in the restricted ground set, 1-based.
    std::vector<long long> position(static_cast<std::size_t>(S.N()) + 1, 0);
    for (std::size_t i = 0; i < elems.size(); ++i)
        position[static_cast<std::size_t>(elems[i])] = static_cast<long long>(i + 1);

    const TupleIndex full = tuple_index_from_system(sys, S.N(), limits);
    TupleIndex restricted(elems.size() + 1);
    for (const auto& bucket : full) {
        for (const auto& tuple : bucket) {
            std::vector<long long> remapped;
            remapped.reserve(tuple.size());
            bool inside = true;
            for (long long e : tuple) {
                if (!S.contains(e)) {
                    inside = false;
                    break;
                }
                remapped.push_back(position[static_cast<std::size_t>(e)]);
            }
            if (inside) restricted[static_cast<std::size_t>(remapped.back())].push_back(
                std::move(remapped));
        }
    }
    ColoringDfs dfs(static_cast<long long>(elems.size()), r, restricted, limits.node_cap);
    return dfs.run();
}

RadoResult rado_number(const PolySystem& sys, int r, long long N_max,
                       const SearchLimits& limits) {
    require_dilation_invariance(sys);
    return rado_scan(
        [&](long long N) { return tuple_index_from_system(sys, N, limits); }, r, N_max, limits);
}

RadoResult brauer_number(int r, long long N_max, const SearchLimits& limits) {
    return rado_scan([](long long N) { return brauer_tuple_index(N); }, r, N_max, limits);
}

std::vector<SyndeticityReport> verify_induction_on_colours(const PolySystem& sys,
                                                           const Coloring& chi,
                                                           const FiniteSet& F) {
    const std::optional<Assignment> mono = find_monochromatic_solution(sys, chi);
    if (mono.has_value())
        throw Error(ErrorKind::Precondition,
                    "coloring has a monochromatic solution " + format_assignment(*mono));
    std::vector<SyndeticityReport> reports;
    for (int c = 1; c <= chi.r; ++c) {
        Window cls(chi.N);
        for (long long n = 1; n <= chi.N; ++n) cls.set(n, chi.at(n) == c);
        reports.push_back(syndetic_report_relaxed(cls, F));
    }
    return reports;
}

std::string export_dimacs(const PolySystem& sys, long long N, int r,
                          const SearchLimits& limits) {
    require_dilation_invariance(sys);
    const TupleIndex index = tuple_index_from_system(sys, N, limits);

    std::vector<const std::vector<long long>*> sets;
    for (const auto& bucket : index) {
        for (const auto& tuple : bucket) sets.push_back(&tuple);
    }
    std::sort(sets.begin(), sets.end(),
              [](const auto* a, const auto* b) { return *a < *b; });

    const long long vars = N * r;
    const long long clause_count =
        N + N * (static_cast<long long>(r) * (r - 1) / 2) +
        static_cast<long long>(sets.size()) * r;

    std::ostringstream out;
    out << "p cnf " << vars << " " << clause_count << "\n";
    auto var = [r](long long n, int c) { return (n - 1) * r + c; };
    for (long long n = 1; n <= N; ++n) {
        for (int c = 1; c <= r; ++c) out << var(n, c) << " ";
        out << "0\n";
    }
    for (long long n = 1; n <= N; ++n) {
        for (int c1 = 1; c1 <= r; ++c1) {
            for (int c2 = c1 + 1; c2 <= r; ++c2) {
                out << -var(n, c1) << " " << -var(n, c2) << " 0\n";
            }
        }
    }
    for (const auto* tuple : sets) {
        for (int c = 1; c <= r; ++c) {
            for (long long e : *tuple) out << -var(e, c) << " ";
            out << "0\n";
        }
    }
    return out.str();
}

Coloring decode_dimacs_model(const std::vector<bool>& model, long long N, int r) {
    Coloring chi{N, r, std::vector<std::uint8_t>(static_cast<std::size_t>(N), 0)};
    for (long long n = 1; n <= N; ++n) {
        for (int c = 1; c <= r; ++c) {
            if (model[static_cast<std::size_t>((n - 1) * r + c)]) {
                chi.colour[static_cast<std::size_t>(n - 1)] = static_cast<std::uint8_t>(c);
                break;
            }
        }
        if (chi.colour[static_cast<std::size_t>(n - 1)] == 0)
            throw Error(ErrorKind::Format, "model assigns no colour to " + std::to_string(n));
    }
    return chi;
}

}  // namespace synram
