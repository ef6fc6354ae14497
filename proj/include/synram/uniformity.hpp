// uniformity.hpp — L^1/L^inf and Gowers U^s norms over Z/pZ, the AP3 and
// Lambda_S counting functionals, and numerical verifiers for the section's
// inequality lemmas.
//
// Production kernels are OpenMP-parallel with fixed-tree reductions (results
// are byte-identical for any thread count); ref:: holds plain serial
// implementations kept for testing and benchmarking.
#pragma once

#include <complex>
#include <string>
#include <vector>

#include "synram/syndetic.hpp"

namespace synram {

using Complex = std::complex<double>;

struct ModFunction {
    long long p = 2;               // prime modulus
    std::vector<Complex> values;   // indexed by residue 0..p-1
    bool one_bounded = false;      // max |value| <= 1 + 1e-12, when declared

    static ModFunction create(long long p, std::vector<Complex> values);
};

struct PrimeEmbedding {
    long long N = 1;
    long long p = 5;  // 3N < p < 6N
};

// Least prime in (3N, 6N); existence is Bertrand's postulate.
PrimeEmbedding choose_prime(long long N);

// 1 on the residues of 1..N, 0 elsewhere; requires p > N.
ModFunction indicator(long long N, long long p);

double l1_norm(const ModFunction& f);
double l_inf_norm(const ModFunction& f);

ModFunction sub(const ModFunction& f, const ModFunction& g);
ModFunction scale(const ModFunction& f, Complex factor);

// U^s norm via the recursive formula, s in {1,2,3}. The Gowers average is
// clamped to 0 when within -1e-9 of zero; more negative is a hard error.
double gowers_norm(const ModFunction& f, int s);

// Direct multi-loop evaluation of the same norm: the independent reference
// route. Cost guard: p <= 101 for s = 3.
double gowers_norm_direct(const ModFunction& f, int s);

// AP3(f1,f2,f3) = E_{x,d} f1(x) f2(x+d) f3(x+2d).
Complex ap3(const ModFunction& f1, const ModFunction& f2, const ModFunction& f3);

// Lambda_S: the same average with d restricted to the window S (elements
// taken mod p); S must be non-empty and fit in the modulus.
Complex lambda_s(const Window& S, const ModFunction& f1, const ModFunction& f2,
                 const ModFunction& f3);

struct LemmaCheck {
    double value = 0;   // functional value or margin
    bool passes = false;
};

// Lambda_S(1_[N]) > 1/18 for non-empty S inside [N/3].
LemmaCheck verify_brauer_count(long long N, const Window& S, long long p);

// min_k ||f_k||_{U^2} - |AP3(f1,f2,f3)|; the lemma predicts >= -1e-9.
double verify_gvn_ap3(const ModFunction& f1, const ModFunction& f2, const ModFunction& f3);

// sqrt(p/|S|) * min_k ||f_k||_{U^3} - |Lambda_S(f1,f2,f3)|.
double verify_gvn_lambda(const Window& S, const ModFunction& f1, const ModFunction& f2,
                         const ModFunction& f3);

// 3 ||f-g||_{L^1} - |Lambda_S(f) - Lambda_S(g)| for 1-bounded f, g.
double verify_l1_control(const Window& S, const ModFunction& f, const ModFunction& g);

// 18 M ||f-g||_{U^3} - |Lambda_{S∩[N/3]}(f) - Lambda_{S∩[N/3]}(g)| for
// [0,1]-valued f, g supported on [N]; requires N >= 18 M^2 and a
// window-certified multiplicatively [M]-syndetic S.
double verify_u3_control(const Window& S, long long M, long long N, const ModFunction& f,
                         const ModFunction& g);

// Residual of the telescoping identity
// Lambda_S(f)-Lambda_S(g) = Lambda_S(f-g,f,f)+Lambda_S(g,f-g,f)+Lambda_S(g,g,f-g).
double telescoping_residual(const Window& S, const ModFunction& f, const ModFunction& g);

// Text format: "p: <int>" then p lines "re im".
std::string serialize_mod_function(const ModFunction& f);
ModFunction parse_mod_function(const std::string& text);

// Serial reference kernels (naive accumulation order).
namespace ref {
Complex ap3(const ModFunction& f1, const ModFunction& f2, const ModFunction& f3);
Complex lambda_s(const Window& S, const ModFunction& f1, const ModFunction& f2,
                 const ModFunction& f3);
double gowers_norm_recursive(const ModFunction& f, int s);
}  // namespace ref

}  // namespace synram
