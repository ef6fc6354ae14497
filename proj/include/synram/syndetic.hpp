// syndetic.hpp — finite-window machinery for multiplicatively syndetic,
// thick, and piecewise syndetic sets; the extremal sets S(a,k); density
// bounds and the branch-and-bound minimality oracle.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "synram/rational.hpp"

namespace synram {

// Non-empty set of positive integers, kept sorted and distinct.
class FiniteSet {
  public:
    explicit FiniteSet(std::vector<long long> elements);

    const std::vector<long long>& elements() const { return elems_; }
    long long max() const { return elems_.back(); }
    std::size_t size() const { return elems_.size(); }
    bool contains(long long v) const;

  private:
    std::vector<long long> elems_;
};

// Truth table for S ∩ [N]; indices 1..N.
class Window {
  public:
    explicit Window(long long N);
    Window(long long N, std::vector<bool> bits);

    long long N() const { return N_; }
    bool contains(long long n) const { return n >= 1 && n <= N_ && bits_[n - 1]; }
    void set(long long n, bool member);
    long long count() const;
    Window complement() const;
    Window truncated(long long M) const;  // S ∩ [M], M <= N
    std::vector<long long> elements() const;

    bool operator==(const Window& other) const = default;

  private:
    long long N_;
    std::vector<bool> bits_;
};

struct SyndeticityReport {
    bool is_window_syndetic = false;
    std::optional<long long> first_failure;  // least violating n, when not
    long long checked_up_to = 0;             // floor(N / max F)
};

// a-adic multiplicity: largest k with a^k | n.
long long nu(long long a, long long n);

// S(a,k) = { n : nu_a(n) == k-1 (mod k) } restricted to [N].
Window s_ak_window(long long a, long long k, long long N);

// Least t in F with n*t in S, requiring n*max(F) <= N; absent when no t works.
std::optional<long long> encoding_tau(const Window& S, const FiniteSet& F, long long n);

// Checks every n with n*max(F) <= N.
SyndeticityReport is_f_syndetic_window(const Window& S, const FiniteSet& F);

// Same check without the max(F) <= N precondition: zero constraints is a
// vacuously syndetic window. Used by the induction-on-colours verifier.
SyndeticityReport syndetic_report_relaxed(const Window& S, const FiniteSet& F);

// Least t with t*F inside T (and t*max(F) <= N), if any.
std::optional<long long> thick_witness(const Window& T, const FiniteSet& F);

// Builds D = union over t in F of t^{-1}S on [N / max(F)], then looks for a
// dilate of F_test inside D.
std::optional<long long> is_piecewise_syndetic_window(const Window& S, const FiniteSet& F,
                                                      const FiniteSet& F_test);

// (1/|F|) * floor(N / max F), exactly.
Rational density_lower_bound(const FiniteSet& F, long long N);

struct MinSyndeticResult {
    long long size = 0;
    Window witness;  // lexicographically least minimizer (by element sequence)
};

// Minimum |X|, X ⊆ [N], meeting every dilate n·F with n*max(F) <= N.
// Branch-and-bound over the hypergraph cover; guard: floor(N/max F) <= 30
// (singleton F is solved in closed form, the cover being forced).
MinSyndeticResult min_syndetic_size(const FiniteSet& F, long long N);

// All n <= limit whose prime factors each divide some element of F.
std::vector<long long> smooth_numbers(const FiniteSet& F, long long limit);

// Window relaxation of g_F(k): minimum overlap of a window-syndetic X ⊆
// [limit] with the first k P_F-smooth numbers. A lower bound for the
// unrestricted quantity, which ranges over genuinely infinite syndetic sets.
long long gF_window_estimate(const FiniteSet& F, long long k, long long limit);

// "N:<int>:<rle>" with runs "<len>x<bit>" joined by commas; bit-exact
// round-trip. FiniteSet serializes as comma-separated integers.
std::string serialize_window(const Window& w);
Window parse_window(const std::string& text);
std::string serialize_finite_set(const FiniteSet& F);
FiniteSet parse_finite_set(const std::string& text);

}  // namespace synram
