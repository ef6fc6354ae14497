// systems.hpp — exact finite systems of rational polynomial equations,
// dilation-invariance (homogeneity) checking, and solution enumeration.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "synram/rational.hpp"

namespace synram {

// Solution vector: positive integers, one per variable.
using Assignment = std::vector<long long>;

struct Monomial {
    Rational coeff;                   // never zero after normalization
    std::vector<unsigned> exponents;  // one entry per variable

    unsigned total_degree() const;

    bool operator==(const Monomial& other) const {
        return coeff == other.coeff && exponents == other.exponents;
    }
};

// A polynomial is a normalized monomial list: exponent vectors distinct,
// sorted lexicographically descending, zero coefficients dropped.
using Polynomial = std::vector<Monomial>;

class PolySystem {
  public:
    // Validates and normalizes: combines like terms, rejects identically
    // zero polynomials and exponent vectors of the wrong length.
    PolySystem(int num_vars, std::vector<Polynomial> polynomials);

    int num_vars() const { return num_vars_; }
    const std::vector<Polynomial>& polynomials() const { return polys_; }

    bool operator==(const PolySystem& other) const = default;

  private:
    int num_vars_;
    std::vector<Polynomial> polys_;
};

// Canonical systems used throughout.
PolySystem schur_system();   // x + y = z, variables (x, y, z)
PolySystem brauer_system();  // variables (x, d, x+d, x+2d)
PolySystem ap3_system();     // t1 - 2 t2 + t3 = 0

struct HomogeneityVerdict {
    bool homogeneous = false;
    std::vector<unsigned> degrees;  // per polynomial, when homogeneous
    int witness_index = -1;         // offending polynomial, when not
};

Rational eval_poly(const Polynomial& poly, const Assignment& x, int num_vars);
bool is_solution(const PolySystem& sys, const Assignment& x);
bool is_nontrivial(const Assignment& x);

// Per-polynomial homogeneity: the sufficient dilation-invariance criterion
// this artifact uses. Degrees may differ between polynomials.
HomogeneityVerdict check_dilation_invariance(const PolySystem& sys);

// Throws ErrorKind::Invariance when not homogeneous.
void require_dilation_invariance(const PolySystem& sys);

// Variables renumbered disjointly; solutions of the product are exactly
// concatenations of solutions of the factors.
PolySystem product_system(const std::vector<PolySystem>& systems);

struct EnumerationResult {
    std::vector<Assignment> solutions;  // lexicographic order
    bool truncated = false;             // cap was hit
};

EnumerationResult enumerate_solutions(const PolySystem& sys, long long N,
                                      bool require_nontrivial, std::uint64_t cap);

// Lexicographic solution visitor; return false from the callback to stop.
// Used where the full list is not needed (first monochromatic hit, etc).
void visit_solutions(const PolySystem& sys, long long N, bool require_nontrivial,
                     const std::function<bool(const Assignment&)>& visit);

// Text format: header "vars: s", one polynomial per line, monomials as
// coeff*t1^e1*...*ts^es joined by " + ", '#' starts a comment. The emitted
// form round-trips bit-exactly.
std::string serialize_system(const PolySystem& sys);
PolySystem parse_system(const std::string& text);

// FNV-1a over the canonical serialization; identifies systems in ledgers.
std::uint64_t system_hash(const PolySystem& sys);

}  // namespace synram
