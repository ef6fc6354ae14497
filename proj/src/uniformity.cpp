// uniformity.cpp — norms, counting functionals, and the lemma verifiers.
#include "synram/uniformity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "synram/errors.hpp"
#include "synram/parallel.hpp"

namespace synram {

namespace {

constexpr double kMarginTolerance = 1e-9;
constexpr long long kRecursiveGuard = 1009;  // O(p^3) recursive U^3
constexpr long long kDirectCubeGuard = 101;  // O(p^4) direct U^3

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

void require_same_modulus(const ModFunction& a, const ModFunction& b) {
    if (a.p != b.p) throw Error(ErrorKind::Domain, "modulus mismatch between functions");
}

void require_one_bounded(const ModFunction& f, const char* who) {
    if (l_inf_norm(f) > 1.0 + 1e-12)
        throw Error(ErrorKind::Precondition, std::string(who) + ": function is not 1-bounded");
}

// f(x) * conj(f(x+h)).
ModFunction multiplicative_diff(const ModFunction& f, long long h) {
    const long long p = f.p;
    std::vector<Complex> vals(static_cast<std::size_t>(p));
    for (long long x = 0; x < p; ++x) {
        vals[static_cast<std::size_t>(x)] =
            f.values[static_cast<std::size_t>(x)] *
            std::conj(f.values[static_cast<std::size_t>((x + h) % p)]);
    }
    ModFunction g;
    g.p = p;
    g.values = std::move(vals);
    return g;
}

// ||f||_{U^s}^{2^s}, real by construction of the recursion. The top level
// parallelizes over h; inner levels stay serial so each partial is computed
// by a fixed serial procedure regardless of thread count.
double u_power(const ModFunction& f, int s, bool parallel) {
    const long long p = f.p;
    if (s == 1) {
        const Complex mean = pairwise_sum(f.values) / static_cast<double>(p);
        return std::norm(mean);
    }
    std::vector<double> partials(static_cast<std::size_t>(p));
    if (parallel) {
#pragma omp parallel for schedule(static) num_threads(thread_budget())
        for (long long h = 0; h < p; ++h) {
            partials[static_cast<std::size_t>(h)] = u_power(multiplicative_diff(f, h), s - 1, false);
        }
    } else {
        for (long long h = 0; h < p; ++h) {
            partials[static_cast<std::size_t>(h)] = u_power(multiplicative_diff(f, h), s - 1, false);
        }
    }
    return pairwise_sum(partials) / static_cast<double>(p);
}

double finish_gowers_average(double avg, int s) {
    if (avg < -kMarginTolerance)
        throw Error(ErrorKind::NumericIntegrity,
                    "Gowers average " + std::to_string(avg) + " is negative beyond tolerance");
    if (avg < 0) avg = 0;
    return std::pow(avg, 1.0 / static_cast<double>(1 << s));
}

void check_gowers_args(const ModFunction& f, int s, long long guard) {
    if (s < 1 || s > 3) throw Error(ErrorKind::Domain, "U^s implemented for s in {1,2,3}");
    if (s == 3 && f.p > guard)
        throw Error(ErrorKind::SizeLimit,
                    "p = " + std::to_string(f.p) + " exceeds the U^3 cost guard (" +
                        std::to_string(guard) + ")");
}

std::vector<long long> window_residues(const Window& S, long long p) {
    if (S.N() > p)
        throw Error(ErrorKind::Embedding, "window does not embed: N > p");
    std::vector<long long> res;
    for (long long d : S.elements()) res.push_back(d % p);
    return res;
}

}  // namespace

ModFunction ModFunction::create(long long p, std::vector<Complex> values) {
    if (!is_prime(p)) throw Error(ErrorKind::Domain, "modulus must be prime");
    if (static_cast<long long>(values.size()) != p)
        throw Error(ErrorKind::Domain, "value table must have exactly p entries");
    ModFunction f;
    f.p = p;
    f.values = std::move(values);
    f.one_bounded = l_inf_norm(f) <= 1.0 + 1e-12;
    return f;
}

PrimeEmbedding choose_prime(long long N) {
    if (N < 1) throw Error(ErrorKind::Precondition, "choose_prime: N must be positive");
    for (long long p = 3 * N + 1; p < 6 * N; ++p) {
        if (is_prime(p)) return PrimeEmbedding{N, p};
    }
    throw Error(ErrorKind::Domain, "no prime in (3N, 6N)");  // unreachable by Bertrand
}

ModFunction indicator(long long N, long long p) {
    if (N < 1) throw Error(ErrorKind::Precondition, "indicator: N must be positive");
    if (p <= N) throw Error(ErrorKind::Embedding, "indicator: requires p > N");
    std::vector<Complex> vals(static_cast<std::size_t>(p), Complex{0.0, 0.0});
    for (long long n = 1; n <= N; ++n) vals[static_cast<std::size_t>(n)] = Complex{1.0, 0.0};
    return ModFunction::create(p, std::move(vals));
}

double l1_norm(const ModFunction& f) {
    std::vector<double> mags(f.values.size());
    for (std::size_t i = 0; i < f.values.size(); ++i) mags[i] = std::abs(f.values[i]);
    return pairwise_sum(mags) / static_cast<double>(f.p);
}

double l_inf_norm(const ModFunction& f) {
    double m = 0;
    for (const Complex& v : f.values) m = std::max(m, std::abs(v));
    return m;
}

ModFunction sub(const ModFunction& f, const ModFunction& g) {
    require_same_modulus(f, g);
    std::vector<Complex> vals(f.values.size());
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = f.values[i] - g.values[i];
    return ModFunction::create(f.p, std::move(vals));
}

ModFunction scale(const ModFunction& f, Complex factor) {
    std::vector<Complex> vals(f.values.size());
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = factor * f.values[i];
    return ModFunction::create(f.p, std::move(vals));
}

double gowers_norm(const ModFunction& f, int s) {
    check_gowers_args(f, s, kRecursiveGuard);
    return finish_gowers_average(u_power(f, s, true), s);
}

double gowers_norm_direct(const ModFunction& f, int s) {
    check_gowers_args(f, s, kDirectCubeGuard);
    const long long p = f.p;
    const int corners = 1 << s;
    Complex acc{0.0, 0.0};
    std::vector<long long> h(static_cast<std::size_t>(s), 0);
    // Odometer over (h_1, ..., h_s).
    while (true) {
        for (long long x = 0; x < p; ++x) {
            Complex prod{1.0, 0.0};
            for (int mask = 0; mask < corners; ++mask) {
                long long y = x;
                int bits = 0;
                for (int i = 0; i < s; ++i) {
                    if (mask & (1 << i)) {
                        y += h[static_cast<std::size_t>(i)];
                        ++bits;
                    }
                }
                const Complex v = f.values[static_cast<std::size_t>(y % p)];
                prod *= (bits % 2 == 1) ? std::conj(v) : v;
            }
            acc += prod;
        }
        int i = 0;
        while (i < s) {
            if (++h[static_cast<std::size_t>(i)] < p) break;
            h[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == s) break;
    }
    double denom = static_cast<double>(p);
    for (int i = 0; i < s; ++i) denom *= static_cast<double>(p);
    const Complex avg = acc / denom;
    if (std::abs(avg.imag()) > kMarginTolerance)
        throw Error(ErrorKind::NumericIntegrity, "direct Gowers average is not real");
    return finish_gowers_average(avg.real(), s);
}

Complex ap3(const ModFunction& f1, const ModFunction& f2, const ModFunction& f3) {
    require_same_modulus(f1, f2);
    require_same_modulus(f1, f3);
    const long long p = f1.p;
    std::vector<Complex> partials(static_cast<std::size_t>(p));
#pragma omp parallel for schedule(static) num_threads(thread_budget())
    for (long long x = 0; x < p; ++x) {
        Complex acc{0.0, 0.0};
        for (long long d = 0; d < p; ++d) {
            acc += f1.values[static_cast<std::size_t>(x)] *
                   f2.values[static_cast<std::size_t>((x + d) % p)] *
                   f3.values[static_cast<std::size_t>((x + 2 * d) % p)];
        }
        partials[static_cast<std::size_t>(x)] = acc;
    }
    return pairwise_sum(partials) / (static_cast<double>(p) * static_cast<double>(p));
}

Complex lambda_s(const Window& S, const ModFunction& f1, const ModFunction& f2,
                 const ModFunction& f3) {
    require_same_modulus(f1, f2);
    require_same_modulus(f1, f3);
    if (S.count() == 0) throw Error(ErrorKind::Domain, "Lambda_S: S must be non-empty");
    const long long p = f1.p;
    const std::vector<long long> ds = window_residues(S, p);
    std::vector<Complex> partials(static_cast<std::size_t>(p));
#pragma omp parallel for schedule(static) num_threads(thread_budget())
    for (long long x = 0; x < p; ++x) {
        Complex acc{0.0, 0.0};
        for (long long d : ds) {
            acc += f1.values[static_cast<std::size_t>(x)] *
                   f2.values[static_cast<std::size_t>((x + d) % p)] *
                   f3.values[static_cast<std::size_t>((x + 2 * d) % p)];
        }
        partials[static_cast<std::size_t>(x)] = acc;
    }
    return pairwise_sum(partials) /
           (static_cast<double>(p) * static_cast<double>(ds.size()));
}

LemmaCheck verify_brauer_count(long long N, const Window& S, long long p) {
    if (N < 3) throw Error(ErrorKind::Domain, "Brauer count: N must be at least 3");
    if (!(3 * N < p && p < 6 * N))
        throw Error(ErrorKind::Embedding, "Brauer count: p must satisfy 3N < p < 6N");
    if (S.count() == 0) throw Error(ErrorKind::Domain, "Brauer count: S must be non-empty");
    for (long long d : S.elements()) {
        if (3 * d > N) throw Error(ErrorKind::Domain, "Brauer count: S must lie in [N/3]");
    }
    const ModFunction one_N = indicator(N, p);
    const Complex value = lambda_s(S, one_N, one_N, one_N);
    return LemmaCheck{value.real(), value.real() > 1.0 / 18.0};
}

double verify_gvn_ap3(const ModFunction& f1, const ModFunction& f2, const ModFunction& f3) {
    require_one_bounded(f1, "gvn-ap3");
    require_one_bounded(f2, "gvn-ap3");
    require_one_bounded(f3, "gvn-ap3");
    const double bound = std::min({gowers_norm(f1, 2), gowers_norm(f2, 2), gowers_norm(f3, 2)});
    return bound - std::abs(ap3(f1, f2, f3));
}

double verify_gvn_lambda(const Window& S, const ModFunction& f1, const ModFunction& f2,
                         const ModFunction& f3) {
    require_one_bounded(f1, "gvn-lambda");
    require_one_bounded(f2, "gvn-lambda");
    require_one_bounded(f3, "gvn-lambda");
    const double bound =
        std::min({gowers_norm(f1, 3), gowers_norm(f2, 3), gowers_norm(f3, 3)});
    const double factor =
        std::sqrt(static_cast<double>(f1.p) / static_cast<double>(S.count()));
    return factor * bound - std::abs(lambda_s(S, f1, f2, f3));
}

double verify_l1_control(const Window& S, const ModFunction& f, const ModFunction& g) {
    require_one_bounded(f, "l1-control");
    require_one_bounded(g, "l1-control");
    const Complex lf = lambda_s(S, f, f, f);
    const Complex lg = lambda_s(S, g, g, g);
    return 3.0 * l1_norm(sub(f, g)) - std::abs(lf - lg);
}

double verify_u3_control(const Window& S, long long M, long long N, const ModFunction& f,
                         const ModFunction& g) {
    if (M < 2) throw Error(ErrorKind::Domain, "u3-control: M must be at least 2");
    if (N < 18 * M * M)
        throw Error(ErrorKind::Hypothesis, "u3-control: requires N >= 18 M^2");
    require_same_modulus(f, g);
    const long long p = f.p;
    if (!(3 * N < p && p < 6 * N))
        throw Error(ErrorKind::Embedding, "u3-control: p must satisfy 3N < p < 6N");

    std::vector<long long> m_range;
    for (long long t = 1; t <= M; ++t) m_range.push_back(t);
    const SyndeticityReport cert = is_f_syndetic_window(S, FiniteSet(m_range));
    if (!cert.is_window_syndetic)
        throw Error(ErrorKind::Precondition,
                    "u3-control: S is not window [M]-syndetic (fails at n = " +
                        std::to_string(*cert.first_failure) + ")");

    for (const ModFunction* fn : {&f, &g}) {
        for (long long x = 0; x < p; ++x) {
            const Complex v = fn->values[static_cast<std::size_t>(x)];
            if (x >= 1 && x <= N) {
                if (std::abs(v.imag()) > 1e-12 || v.real() < -1e-12 || v.real() > 1.0 + 1e-12)
                    throw Error(ErrorKind::Precondition, "u3-control: values must lie in [0,1]");
            } else if (std::abs(v) != 0.0) {
                throw Error(ErrorKind::Precondition, "u3-control: functions must vanish off [N]");
            }
        }
    }

    const long long third = N / 3;
    if (S.N() < third)
        throw Error(ErrorKind::Domain, "u3-control: window of S shorter than N/3");
    const Window S3 = S.truncated(third);
    const Complex lf = lambda_s(S3, f, f, f);
    const Complex lg = lambda_s(S3, g, g, g);
    const double u3 = gowers_norm(sub(f, g), 3);
    return 18.0 * static_cast<double>(M) * u3 - std::abs(lf - lg);
}

double telescoping_residual(const Window& S, const ModFunction& f, const ModFunction& g) {
    const ModFunction d = sub(f, g);
    const Complex lhs = lambda_s(S, f, f, f) - lambda_s(S, g, g, g);
    const Complex rhs =
        lambda_s(S, d, f, f) + lambda_s(S, g, d, f) + lambda_s(S, g, g, d);
    return std::abs(lhs - rhs);
}

std::string serialize_mod_function(const ModFunction& f) {
    std::ostringstream out;
    out.precision(17);
    out << "p: " << f.p << "\n";
    for (const Complex& v : f.values) out << v.real() << " " << v.imag() << "\n";
    return out.str();
}

ModFunction parse_mod_function(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header) || header.rfind("p:", 0) != 0)
        throw Error(ErrorKind::Format, "function file must start with 'p: <int>'");
    long long p = 0;
    try {
        p = std::stoll(header.substr(2));
    } catch (const std::exception&) {
        throw Error(ErrorKind::Format, "bad modulus in function file");
    }
    std::vector<Complex> vals;
    double re = 0, im = 0;
    while (in >> re >> im) vals.emplace_back(re, im);
    if (static_cast<long long>(vals.size()) != p)
        throw Error(ErrorKind::Format, "function file must list exactly p values");
    return ModFunction::create(p, std::move(vals));
}

namespace ref {

Complex ap3(const ModFunction& f1, const ModFunction& f2, const ModFunction& f3) {
    const long long p = f1.p;
    Complex acc{0.0, 0.0};
    for (long long x = 0; x < p; ++x) {
        for (long long d = 0; d < p; ++d) {
            acc += f1.values[static_cast<std::size_t>(x)] *
                   f2.values[static_cast<std::size_t>((x + d) % p)] *
                   f3.values[static_cast<std::size_t>((x + 2 * d) % p)];
        }
    }
    return acc / (static_cast<double>(p) * static_cast<double>(p));
}

Complex lambda_s(const Window& S, const ModFunction& f1, const ModFunction& f2,
                 const ModFunction& f3) {
    const long long p = f1.p;
    const std::vector<long long> ds = window_residues(S, p);
    Complex acc{0.0, 0.0};
    for (long long x = 0; x < p; ++x) {
        for (long long d : ds) {
            acc += f1.values[static_cast<std::size_t>(x)] *
                   f2.values[static_cast<std::size_t>((x + d) % p)] *
                   f3.values[static_cast<std::size_t>((x + 2 * d) % p)];
        }
    }
    return acc / (static_cast<double>(p) * static_cast<double>(ds.size()));
}

double gowers_norm_recursive(const ModFunction& f, int s) {
    check_gowers_args(f, s, kRecursiveGuard);
    return finish_gowers_average(u_power(f, s, false), s);
}

}  // namespace ref

}  // namespace synram
