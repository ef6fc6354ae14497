// tower.hpp — exact iterated-exponential arithmetic: Tow, T_n, F(r),
// certified comparisons, and the recursive Brauer-bound propagation.
#pragma once

#include <string>
#include <vector>

#include "synram/rational.hpp"

namespace synram {

enum class Ordering { Less, Equal, Greater };

// a1^(a2^(...^(an))), levels bottom-first. Canonical form: any top segment
// whose materialization stays under the digit threshold (10^6 decimal
// digits) is collapsed into an exact integer, so a canonical multi-level
// tower always exceeds 10^(10^6).
class TowerExpr {
  public:
    static constexpr long long kDigitThreshold = 1'000'000;

    explicit TowerExpr(Integer value);               // materialized
    explicit TowerExpr(std::vector<Integer> levels); // canonicalizes

    const std::vector<Integer>& levels() const { return levels_; }
    std::size_t height() const { return levels_.size(); }
    bool materialized() const { return levels_.size() == 1; }
    const Integer& value() const;  // requires materialized()

    bool operator==(const TowerExpr& other) const = default;

  private:
    std::vector<Integer> levels_;
};

// Exact ordering; throws ErrorKind::ComparisonIncomplete when the certified
// interval method cannot separate the values (never returns a guess).
Ordering tower_compare(const TowerExpr& x, const TowerExpr& y);

// Height-n tower of 2s.
TowerExpr tow(long long n);

// F(r) = T_{r+1}(2, ..., 2, K r^2).
TowerExpr f_func(long long r, long long K);

struct TowerPow {
    TowerExpr value;
    bool exact = true;  // false when a lift-style upper absorption was used
};

// T^e as a tower; exact whenever the exponent arithmetic stays
// materializable, otherwise a certified upper bound.
TowerPow tower_pow_upper(const TowerExpr& T, const Integer& e);

// r^3 <= Tow(r-1), for r >= 5.
bool verify_cube_lemma(long long r);

// a^b * k <= a^(b+k) <= a^(b*k), exact big integers under a digit guard.
bool verify_lift_lemma(const Integer& a, const Integer& b, const Integer& k);

// F(r)^r <= log2 F(r+1); exact for small r, upper-bound route beyond.
bool verify_growth_corollary(long long r, long long K);

struct BoundTrace {
    long long r = 1;
    TowerExpr bound;
    std::string provenance;
};

// Iterates B(q) <= 2^(B(q-1)^e) with e = ceil(Ctilde * ln(q+1)), from
// B(1) = B1. Every trace records the exponent used and whether absorption
// made the bound an over-approximation.
std::vector<BoundTrace> propagate_recursive_bound(const Rational& c_tilde, long long B1,
                                                  long long r_max);

// "2^(2^(...))" with the materialized tail in decimal, capped at digit_cap
// printed digits.
std::string tower_to_string(const TowerExpr& T, std::size_t digit_cap = 64);

// Exact decimal digit count of a materialized tower.
long long decimal_digits(const Integer& v);

}  // namespace synram
