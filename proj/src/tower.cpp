// tower.cpp — canonicalization, certified comparison, and the tower-growth
// lemma verifications.
#include "synram/tower.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "synram/errors.hpp"

namespace synram {

namespace {

long long digits10(const Integer& v) {
    return static_cast<long long>(mpz_sizeinbase(v.get_mpz_t(), 10));
}

// [lo, hi] bracketing log2(v) for v >= 1, with generous widening.
std::pair<double, double> log2_bounds(const Integer& v) {
    if (v <= 0) throw Error(ErrorKind::Domain, "log2 of non-positive value");
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    const double base = static_cast<double>(exp2) + std::log2(mant);
    const double slack = std::abs(base) * 1e-13 + 1e-12;
    return {base - slack, base + slack};
}

std::vector<Integer> tail(const std::vector<Integer>& levels) {
    return std::vector<Integer>(levels.begin() + 1, levels.end());
}

}  // namespace

TowerExpr::TowerExpr(Integer value) {
    if (value < 1) throw Error(ErrorKind::Domain, "tower value must be positive");
    levels_.push_back(std::move(value));
}

TowerExpr::TowerExpr(std::vector<Integer> levels) {
    if (levels.empty()) throw Error(ErrorKind::Domain, "tower needs at least one level");
    for (const Integer& a : levels) {
        if (a < 1) throw Error(ErrorKind::Domain, "tower levels must be positive");
    }
    // A level equal to 1 makes everything above it irrelevant: truncate.
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels[i] == 1) {
            if (i == 0) {
                levels_.push_back(1);
                return;
            }
            levels.resize(i);
            break;
        }
    }
    // Collapse the top while it materializes under the digit threshold.
    while (levels.size() >= 2) {
        const Integer& top = levels.back();
        const Integer& below = levels[levels.size() - 2];
        if (!top.fits_ulong_p()) break;
        const unsigned long t = top.get_ui();
        if (digits10(below) > kDigitThreshold / static_cast<long long>(t)) break;
        Integer merged;
        mpz_pow_ui(merged.get_mpz_t(), below.get_mpz_t(), t);
        levels.pop_back();
        levels.back() = std::move(merged);
    }
    levels_ = std::move(levels);
}

const Integer& TowerExpr::value() const {
    if (!materialized())
        throw Error(ErrorKind::Domain, "tower is not materialized");
    return levels_.front();
}

namespace {

Ordering compare_towers(const std::vector<Integer>& x, const std::vector<Integer>& y);

Ordering invert(Ordering o) {
    if (o == Ordering::Less) return Ordering::Greater;
    if (o == Ordering::Greater) return Ordering::Less;
    return Ordering::Equal;
}

Ordering cmp_integers(const Integer& a, const Integer& b) {
    const int c = cmp(a, b);
    return c < 0 ? Ordering::Less : (c > 0 ? Ordering::Greater : Ordering::Equal);
}

// value(T) vs the exact integer m, for multi-level T = (a, rest).
Ordering tower_vs_value(const std::vector<Integer>& T, const Integer& m) {
    if (T.size() == 1) return cmp_integers(T.front(), m);
    if (m < 4) return Ordering::Greater;  // multi-level towers are >= 2^2
    const Integer& a = T.front();
    const std::vector<Integer> rest = tail(T);
    // A canonical multi-level exponent exceeds 10^(10^6), hence log_a(m) for
    // any representable m.
    if (rest.size() > 1) return Ordering::Greater;
    // Compare the exponent against log_a(m) = log2(m)/log2(a).
    const Integer& R = rest.front();
    const auto [mlo, mhi] = log2_bounds(m);
    const auto [alo, ahi] = log2_bounds(a);
    if (mpz_cmp_d(R.get_mpz_t(), mhi / alo) > 0) return Ordering::Greater;
    if (mpz_cmp_d(R.get_mpz_t(), mlo / ahi) < 0) return Ordering::Less;
    // Interval overlap: escalate by materializing a^R when feasible.
    if (R.fits_ulong_p()) {
        const unsigned long r_ui = R.get_ui();
        if (r_ui >= 1 &&
            r_ui <= static_cast<unsigned long>(TowerExpr::kDigitThreshold) /
                        static_cast<unsigned long>(std::max<long long>(1, digits10(a)))) {
            Integer exact;
            mpz_pow_ui(exact.get_mpz_t(), a.get_mpz_t(), r_ui);
            return cmp_integers(exact, m);
        }
    }
    throw Error(ErrorKind::ComparisonIncomplete,
                "tower comparison indeterminate after interval escalation");
}

Ordering compare_towers(const std::vector<Integer>& x, const std::vector<Integer>& y) {
    if (x.size() == 1 && y.size() == 1) return cmp_integers(x.front(), y.front());
    if (x.size() == 1) return invert(tower_vs_value(y, x.front()));
    if (y.size() == 1) return tower_vs_value(x, y.front());

    // Equal bases: ordering follows the exponent towers exactly.
    if (x.front() == y.front()) return compare_towers(tail(x), tail(y));

    // Different bases: compare value(Ex)*log2(ax) vs value(Ey)*log2(ay).
    const std::vector<Integer> ex = tail(x);
    const std::vector<Integer> ey = tail(y);
    const auto [axlo, axhi] = log2_bounds(x.front());
    const auto [aylo, ayhi] = log2_bounds(y.front());
    if (ex.size() == 1 && ey.size() == 1) {
        // Exact exponent ratio against the log-ratio interval.
        Rational q = make_rational(ex.front(), ey.front());
        const double qd = q.get_d();
        const double qlo = qd * (1 - 1e-13);
        const double qhi = qd * (1 + 1e-13);
        if (qlo > ayhi / axlo) return Ordering::Greater;
        if (qhi < aylo / axhi) return Ordering::Less;
        throw Error(ErrorKind::ComparisonIncomplete,
                    "tower comparison indeterminate (log-ratio interval overlap)");
    }
    if (ex.size() > 1 && ey.size() == 1) {
        // x > y iff value(Ex) > Ey * log2(ay)/log2(ax); bracket the RHS.
        Integer ratio_hi(static_cast<long>(std::ceil(ayhi / axlo)));
        if (tower_vs_value(ex, ey.front() * ratio_hi + 1) == Ordering::Greater)
            return Ordering::Greater;
        Integer ratio_lo(static_cast<long>(std::floor(aylo / axhi)));
        if (ratio_lo > 0 && tower_vs_value(ex, ey.front() * ratio_lo) == Ordering::Less)
            return Ordering::Less;
        throw Error(ErrorKind::ComparisonIncomplete,
                    "tower comparison indeterminate (mixed exponent scales)");
    }
    if (ex.size() == 1 && ey.size() > 1) return invert(compare_towers(y, x));

    // Both exponents multi-level: conclusive only when base and exponent
    // orderings agree; never guess otherwise.
    const Ordering eo = compare_towers(ex, ey);
    const int bc = cmp(x.front(), y.front());
    if (eo == Ordering::Greater && bc > 0) return Ordering::Greater;
    if (eo == Ordering::Less && bc < 0) return Ordering::Less;
    if (eo == Ordering::Equal) return bc > 0 ? Ordering::Greater : Ordering::Less;
    throw Error(ErrorKind::ComparisonIncomplete,
                "tower comparison indeterminate (opposing base/exponent order)");
}

}  // namespace

Ordering tower_compare(const TowerExpr& x, const TowerExpr& y) {
    return compare_towers(x.levels(), y.levels());
}

TowerExpr tow(long long n) {
    if (n < 1) throw Error(ErrorKind::Domain, "Tow(n) needs n >= 1");
    return TowerExpr(std::vector<Integer>(static_cast<std::size_t>(n), Integer(2)));
}

TowerExpr f_func(long long r, long long K) {
    if (r < 1 || K < 1) throw Error(ErrorKind::Domain, "F(r) needs r, K >= 1");
    std::vector<Integer> levels(static_cast<std::size_t>(r), Integer(2));
    levels.push_back(to_integer(K) * to_integer(r) * to_integer(r));
    return TowerExpr(std::move(levels));
}

namespace {

TowerPow mult_upper(const TowerExpr& T, const Integer& e);

TowerPow add_upper(const TowerExpr& T, const Integer& k) {
    if (T.materialized()) return TowerPow{TowerExpr(T.value() + k), true};
    // a^v + k <= a^(v+1) since k is tiny against a canonical multi-level
    // tower; bump the exponent by one.
    std::vector<Integer> levels = T.levels();
    const TowerExpr rest((std::vector<Integer>(levels.begin() + 1, levels.end())));
    TowerPow bumped = add_upper(rest, Integer(1));
    std::vector<Integer> out{levels.front()};
    for (const Integer& l : bumped.value.levels()) out.push_back(l);
    return TowerPow{TowerExpr(std::move(out)), false};
}

// Upper bound for e * value(T) as a tower; exact when T is materialized or
// e is a power of the base (e * a^v = a^(v+k) exactly).
TowerPow mult_upper(const TowerExpr& T, const Integer& e) {
    if (e == 1) return TowerPow{T, true};
    if (T.materialized()) return TowerPow{TowerExpr(T.value() * e), true};
    const std::vector<Integer>& levels = T.levels();
    const Integer& a = levels.front();
    // e * a^v <= a^(v + ceil(log_a e)): find the least k with a^k >= e.
    Integer k = 0;
    Integer power = 1;
    while (power < e) {
        power *= a;
        k += 1;
    }
    const TowerExpr rest((std::vector<Integer>(levels.begin() + 1, levels.end())));
    TowerPow bumped = add_upper(rest, k);
    std::vector<Integer> out{a};
    for (const Integer& l : bumped.value.levels()) out.push_back(l);
    return TowerPow{TowerExpr(std::move(out)), power == e && bumped.exact};
}

}  // namespace

TowerPow tower_pow_upper(const TowerExpr& T, const Integer& e) {
    if (e < 1) throw Error(ErrorKind::Domain, "tower power needs exponent >= 1");
    if (e == 1) return TowerPow{T, true};
    if (T.materialized()) {
        const Integer& m = T.value();
        if (m == 1) return TowerPow{TowerExpr(Integer(1)), true};
        if (e.fits_ulong_p() &&
            digits10(m) <= TowerExpr::kDigitThreshold / static_cast<long long>(e.get_ui())) {
            Integer exact;
            mpz_pow_ui(exact.get_mpz_t(), m.get_mpz_t(), e.get_ui());
            return TowerPow{TowerExpr(std::move(exact)), true};
        }
        if (mpz_popcount(m.get_mpz_t()) == 1) {
            // m = 2^j exactly, so m^e = 2^(j e).
            const Integer j = to_integer(static_cast<long long>(mpz_sizeinbase(m.get_mpz_t(), 2)) - 1);
            return TowerPow{TowerExpr(std::vector<Integer>{Integer(2), j * e}), true};
        }
        // m^e <= 2^(e * ceil(log2 m)).
        const Integer bits = to_integer(static_cast<long long>(mpz_sizeinbase(m.get_mpz_t(), 2)));
        return TowerPow{TowerExpr(std::vector<Integer>{Integer(2), bits * e}), false};
    }
    const std::vector<Integer>& levels = T.levels();
    const TowerExpr rest((std::vector<Integer>(levels.begin() + 1, levels.end())));
    TowerPow scaled = mult_upper(rest, e);
    std::vector<Integer> out{levels.front()};
    for (const Integer& l : scaled.value.levels()) out.push_back(l);
    return TowerPow{TowerExpr(std::move(out)), scaled.exact};
}

bool verify_cube_lemma(long long r) {
    if (r < 5) throw Error(ErrorKind::Domain, "cube lemma stated for r >= 5");
    const TowerExpr cube(to_integer(r) * to_integer(r) * to_integer(r));
    return tower_compare(cube, tow(r - 1)) != Ordering::Greater;
}

bool verify_lift_lemma(const Integer& a, const Integer& b, const Integer& k) {
    if (a < 2 || b < 2 || k < 2)
        throw Error(ErrorKind::Domain, "lift lemma needs a, b, k >= 2");
    const Integer bk = b * k;
    if (!bk.fits_ulong_p() ||
        digits10(a) > TowerExpr::kDigitThreshold / static_cast<long long>(bk.get_ui()))
        throw Error(ErrorKind::SizeLimit, "lift lemma instance exceeds the digit guard");
    Integer a_b, a_bk, a_bpk;
    mpz_pow_ui(a_b.get_mpz_t(), a.get_mpz_t(), b.get_ui());
    mpz_pow_ui(a_bk.get_mpz_t(), a.get_mpz_t(), bk.get_ui());
    mpz_pow_ui(a_bpk.get_mpz_t(), a.get_mpz_t(), Integer(b + k).get_ui());
    return a_b * k <= a_bpk && a_bpk <= a_bk;
}

bool verify_growth_corollary(long long r, long long K) {
    if (r < 1 || K < 1) throw Error(ErrorKind::Domain, "growth corollary needs r, K >= 1");
    const TowerPow lhs = tower_pow_upper(f_func(r, K), to_integer(r));
    // log2 F(r+1): peel the base-2 level from the raw (uncollapsed) levels.
    std::vector<Integer> raw(static_cast<std::size_t>(r + 1), Integer(2));
    raw.push_back(to_integer(K) * to_integer(r + 1) * to_integer(r + 1));
    const TowerExpr log2_next((std::vector<Integer>(raw.begin() + 1, raw.end())));
    const Ordering o = tower_compare(lhs.value, log2_next);
    if (o != Ordering::Greater) return true;
    if (lhs.exact) return false;
    throw Error(ErrorKind::ComparisonIncomplete,
                "growth corollary: upper-bound route inconclusive");
}

std::vector<BoundTrace> propagate_recursive_bound(const Rational& c_tilde, long long B1,
                                                  long long r_max) {
    if (B1 < 3) throw Error(ErrorKind::Precondition, "bound propagation needs B(1) >= 3");
    if (!(c_tilde > 0)) throw Error(ErrorKind::Domain, "Ctilde must be positive");
    std::vector<BoundTrace> traces;
    traces.push_back(BoundTrace{1, TowerExpr(to_integer(B1)), "base value B(1)"});
    const long double c = static_cast<long double>(c_tilde.get_d());
    for (long long q = 2; q <= r_max; ++q) {
        const long double raw = c * std::log(static_cast<long double>(q + 1));
        const long long e = static_cast<long long>(std::ceil(raw));
        const TowerPow powed = tower_pow_upper(traces.back().bound, to_integer(std::max(e, 1ll)));
        std::vector<Integer> levels{Integer(2)};
        for (const Integer& l : powed.value.levels()) levels.push_back(l);
        std::ostringstream note;
        note << "B(" << q << ") <= 2^(B(" << q - 1 << ")^" << std::max(e, 1ll) << ")";
        if (!powed.exact) note << " [exponent absorbed as an upper bound]";
        traces.push_back(BoundTrace{q, TowerExpr(std::move(levels)), note.str()});
    }
    return traces;
}

std::string tower_to_string(const TowerExpr& T, std::size_t digit_cap) {
    std::ostringstream out;
    const auto& levels = T.levels();
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) out << levels[i].get_str() << "^(";
    std::string tailstr = levels.back().get_str();
    if (tailstr.size() > digit_cap && digit_cap > 0) {
        tailstr = tailstr.substr(0, digit_cap) + "...[" + std::to_string(tailstr.size()) +
                  " digits]";
    }
    out << tailstr;
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) out << ")";
    return out.str();
}

long long decimal_digits(const Integer& v) {
    return static_cast<long long>(v.get_str().size()) - (v < 0 ? 1 : 0);
}

}  // namespace synram
