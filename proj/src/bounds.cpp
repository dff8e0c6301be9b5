#include "contract_sched/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "contract_sched/generators.hpp"

namespace contract_sched {

std::string to_string(BoundKind kind) { return kind == BoundKind::Upper ? "upper" : "lower"; }

namespace {

void require_positive(std::size_t n, std::size_t m) {
    if (n == 0 || m == 0) throw DomainError("n and m must be positive");
}

double pow_sz(double base, std::size_t e) { return std::pow(base, static_cast<double>(e)); }

}  // namespace

double greedy_ratio_lambda(std::size_t n, std::size_t m, double b) {
    require_positive(n, m);
    if (!(b > 1.0)) throw DomainError("base must exceed 1");
    if (n <= m) return 1.0;
    const double bm = pow_sz(b, m);
    return std::min(2.0 - 1.0 / static_cast<double>(m), bm / (bm - 1.0));
}

BoundReport deficiency_upper_bound(std::size_t n, std::size_t m, double b) {
    require_positive(n, m);
    if (!(b > 1.0) || !std::isfinite(b)) throw DomainError("deficiency bound needs base b > 1");
    const std::size_t gamma = gamma_of(n, m);
    const double lambda = greedy_ratio_lambda(n, m, b);
    // b^{n+m} / (b^{n+m-1} - b^gamma) rewritten to stay finite for large n + m.
    const double f = 1.0 / (1.0 / b - std::pow(b, static_cast<double>(gamma) - static_cast<double>(n + m)));

    BoundReport r;
    r.name = "def-ub";
    r.measure = Measure::Deficiency;
    r.kind = BoundKind::Upper;
    r.value = lambda * f;
    r.params.n = n;
    r.params.m = m;
    r.params.b = b;
    r.params.gamma = gamma;
    r.params.rho = rho_of(n, m);
    r.params.lambda = lambda;
    r.params.kappa = 1.0 / lambda;
    return r;
}

BoundReport deficiency_upper_bound_at_beta(std::size_t n, std::size_t m) {
    const double beta = deficiency_optimal_base(n, m);
    auto r = deficiency_upper_bound(n, m, beta);
    r.name = "def-ub-beta";
    r.params.beta = beta;
    return r;
}

double deficiency_bound_surface(std::size_t m, std::size_t rho) {
    if (m == 0) throw DomainError("m must be positive");
    const double y = static_cast<double>(m * (rho + 1));
    const double beta = std::exp(std::log(y + 1.0) / y);
    // rho = 0 is exactly the n <= m case, where greedy is optimal.
    double lambda = 1.0;
    if (rho > 0) {
        const double bm = pow_sz(beta, m);
        lambda = std::min(2.0 - 1.0 / static_cast<double>(m), bm / (bm - 1.0));
    }
    return lambda / (1.0 / beta - std::pow(beta, -y - 1.0));
}

BoundReport best_exponential_deficiency_single_processor(std::size_t n) {
    if (n == 0) throw DomainError("n must be positive");
    const double nd = static_cast<double>(n);
    BoundReport r;
    r.name = "best-exp-m1";
    r.measure = Measure::Deficiency;
    r.kind = BoundKind::Upper;
    r.value = std::pow(nd + 1.0, (nd + 1.0) / nd) / nd;
    r.params.n = n;
    r.params.m = 1;
    r.params.beta = std::pow(nd + 1.0, 1.0 / nd);
    return r;
}

BoundReport deficiency_lower_bound_general(std::size_t n) {
    if (n == 0) throw DomainError("n must be positive");
    BoundReport r;
    r.name = "def-lb-general";
    r.measure = Measure::Deficiency;
    r.kind = BoundKind::Lower;
    r.value = (static_cast<double>(n) + 1.0) / static_cast<double>(n);
    r.params.n = n;
    r.params.m = 1;
    return r;
}

BoundReport roundrobin_lower_bound(std::size_t n) {
    auto r = best_exponential_deficiency_single_processor(n);
    r.name = "rr-lb";
    r.kind = BoundKind::Lower;
    r.params.a = r.params.beta;
    r.params.beta.reset();
    return r;
}

BoundReport two_problem_lower_bound() {
    const GeometricFunctional f{GeometricFunctional::Family::TwoProblemDeficiency, 2, 1};
    const auto opt = optimize_geometric_functional(f);
    BoundReport r;
    r.name = "two-problem-lb";
    r.measure = Measure::Deficiency;
    r.kind = BoundKind::Lower;
    r.value = std::pow(2.0, 8.0 / 3.0) / 3.0;
    r.params.n = 2;
    r.params.m = 1;
    r.params.a = std::pow(2.0, 2.0 / 3.0);
    r.forms = {{"numeric_min", opt.value}, {"numeric_argmin", opt.argmin}};
    return r;
}

BoundReport cyclic_acceleration_lower_bound(std::size_t n, std::size_t m) {
    require_positive(n, m);
    const GeometricFunctional f{GeometricFunctional::Family::CyclicAcceleration, n, m};
    const auto opt = optimize_geometric_functional(f);
    const double nd = static_cast<double>(n), md = static_cast<double>(m);
    BoundReport r;
    r.name = "cyclic-acc-lb";
    r.measure = Measure::Acceleration;
    r.kind = BoundKind::Lower;
    r.value = (nd / md) * std::pow((nd + md) / nd, (nd + md) / md);
    r.params.n = n;
    r.params.m = m;
    r.params.a = acceleration_optimal_base(n, m);
    r.forms = {{"numeric_min", opt.value}, {"numeric_argmin", opt.argmin}};
    return r;
}

BoundReport performance_ratio_closed_form(std::size_t n, std::size_t m) {
    require_positive(n, m);
    const double nd = static_cast<double>(n), md = static_cast<double>(m);
    const double acc = (nd / md) * std::pow((md + nd) / nd, (md + nd) / md);
    const auto slots = (n + m - 1) / m;
    BoundReport r;
    r.name = "perf-closed-form";
    r.measure = Measure::Performance;
    r.kind = BoundKind::Upper;
    r.value = m >= n ? acc : acc / static_cast<double>(slots);
    r.params.n = n;
    r.params.m = m;
    r.params.a = acceleration_optimal_base(n, m);
    r.forms = {{"(1+n/m)(1+m/n)^(n/m)", (1.0 + nd / md) * std::pow(1.0 + md / nd, nd / md)},
               {"(1+m/n)(1+m/n)^(n/m)", (1.0 + md / nd) * std::pow(1.0 + md / nd, nd / md)}};
    return r;
}

// ---------------------------------------------------------------------------
// Geometric functionals

namespace {

struct Exponents {
    double p;
    double q;
};

Exponents exponents(const GeometricFunctional& f) {
    using F = GeometricFunctional::Family;
    switch (f.family) {
        case F::RoundRobinDeficiency: return {1.0, static_cast<double>(f.n)};
        case F::CyclicAcceleration: return {static_cast<double>(f.n), static_cast<double>(f.m)};
        case F::TwoProblemDeficiency: return {1.0, 3.0};
    }
    throw DomainError("unknown functional");
}

void validate(const GeometricFunctional& f) {
    using F = GeometricFunctional::Family;
    if (f.family != F::TwoProblemDeficiency && f.n == 0) throw DomainError("functional needs n >= 1");
    if (f.family == F::CyclicAcceleration && f.m == 0) throw DomainError("functional needs m >= 1");
}

// log of a^p / (1 - a^{-q})
double log_value(Exponents e, double a) {
    const double la = std::log(a);
    return e.p * la - std::log(-std::expm1(-e.q * la));
}

// Sign of d/da log F = (1/a) (p - q / (a^q - 1)).
double slope_sign(Exponents e, double a) { return e.p * std::expm1(e.q * std::log(a)) - e.q; }

// Sum of a^j for j in [lo, hi], scaled by a^{-shift}.
double scaled_sum(double a, long lo, long hi, long shift) {
    double s = 0.0;
    for (long j = lo; j <= hi; ++j) s += std::pow(a, static_cast<double>(j - shift));
    return s;
}

}  // namespace

double GeometricFunctional::operator()(double a) const {
    validate(*this);
    if (!(a > 1.0)) throw DomainError("geometric functional needs a > 1");
    return std::exp(log_value(exponents(*this), a));
}

double GeometricFunctional::direct_sup(double a, std::size_t k_max) const {
    validate(*this);
    if (!(a > 1.0)) throw DomainError("geometric functional needs a > 1");
    const long n_ = static_cast<long>(n), m_ = static_cast<long>(m);
    double best = 0.0;
    for (long k = 0; k <= static_cast<long>(k_max); ++k) {
        double v = 0.0;
        switch (family) {
            case Family::RoundRobinDeficiency:
                // sum_{j=0}^{k+n} a^j / sum_{j=k}^{k+n-1} a^j
                v = scaled_sum(a, 0, k + n_, k) / scaled_sum(a, k, k + n_ - 1, k);
                break;
            case Family::CyclicAcceleration:
                // sum_{l=0}^{k+n+2m-1} a^l / sum_{l=k+m}^{k+2m-1} a^l
                v = scaled_sum(a, 0, k + n_ + 2 * m_ - 1, k + m_) / scaled_sum(a, k + m_, k + 2 * m_ - 1, k + m_);
                break;
            case Family::TwoProblemDeficiency:
                // sum_{j=0}^{k+1} a^j / (a^k + a^{k-1} + a^{k-2}), k >= 2
                if (k < 2) continue;
                v = scaled_sum(a, 0, k + 1, k - 2) / scaled_sum(a, k - 2, k, k - 2);
                break;
        }
        best = std::max(best, v);
    }
    return best;
}

std::string GeometricFunctional::name() const {
    switch (family) {
        case Family::RoundRobinDeficiency: return "a^(n+1)/(a^n-1)";
        case Family::CyclicAcceleration: return "a^(n+m)/(a^m-1)";
        case Family::TwoProblemDeficiency: return "a^4/(a^3-1)";
    }
    return "?";
}

FunctionalOptimum optimize_geometric_functional(const GeometricFunctional& functional, double tol) {
    validate(functional);
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    const Exponents e = exponents(functional);
    constexpr double kLo = 1.0 + 1e-9;
    constexpr double kHi = 64.0;
    constexpr std::size_t kMaxIterations = 500;

    // Unimodality: the slope may change sign at most once, from - to +.
    {
        constexpr int kSamples = 512;
        int changes = 0;
        double prev = slope_sign(e, kLo);
        for (int i = 1; i < kSamples; ++i) {
            const double a = 1.0 + 1e-9 * std::pow((kHi - 1.0) / 1e-9, static_cast<double>(i) / (kSamples - 1));
            const double s = slope_sign(e, a);
            if ((prev < 0.0) != (s < 0.0)) {
                if (prev >= 0.0) throw DomainError(functional.name() + " is not unimodal on the bracket");
                ++changes;
            }
            prev = s;
        }
        if (changes > 1) throw DomainError(functional.name() + " is not unimodal on the bracket");
    }

    double lo = kLo, hi = kHi;
    std::size_t iterations = 0;
    // Value comparisons lose resolution near the minimum (the function is flat
    // to within rounding over ~sqrt(eps)), so the ternary phase stops early.
    while (hi - lo > 1e-6 * hi) {
        if (++iterations > kMaxIterations) throw DomainError("ternary search did not converge");
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (log_value(e, m1) < log_value(e, m2))
            hi = m2;
        else
            lo = m1;
    }
    while (slope_sign(e, lo) > 0.0 && lo > kLo) lo = std::max(kLo, lo - 2.0 * (hi - lo));
    while (slope_sign(e, hi) < 0.0 && hi < kHi) hi = std::min(kHi, hi + 2.0 * (hi - lo));
    while (hi - lo > tol * hi) {
        if (++iterations > kMaxIterations) throw DomainError("minimizer refinement did not converge");
        const double mid = 0.5 * (lo + hi);
        if (slope_sign(e, mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }

    FunctionalOptimum out;
    out.argmin = 0.5 * (lo + hi);
    out.value = functional(out.argmin);
    out.iterations = iterations;
    out.direct_sup = functional.direct_sup(out.argmin);
    return out;
}

std::vector<std::string> bound_names() {
    return {"def-ub", "def-ub-beta", "best-exp-m1", "def-lb-general", "rr-lb",
            "two-problem-lb", "cyclic-acc-lb", "perf-closed-form"};
}

BoundReport bound_by_name(const std::string& name, std::size_t n, std::size_t m, std::optional<double> b) {
    if (name == "def-ub") {
        if (!b) throw DomainError("bound 'def-ub' needs --b");
        return deficiency_upper_bound(n, m, *b);
    }
    if (name == "def-ub-beta") return deficiency_upper_bound_at_beta(n, m);
    if (name == "best-exp-m1") return best_exponential_deficiency_single_processor(n);
    if (name == "def-lb-general") return deficiency_lower_bound_general(n);
    if (name == "rr-lb") return roundrobin_lower_bound(n);
    if (name == "two-problem-lb") return two_problem_lower_bound();
    if (name == "cyclic-acc-lb") return cyclic_acceleration_lower_bound(n, m);
    if (name == "perf-closed-form") return performance_ratio_closed_form(n, m);
    throw DomainError("unknown bound '" + name + "'");
}

}  // namespace contract_sched
