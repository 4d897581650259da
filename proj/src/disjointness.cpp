#include "ygraph/disjointness.hpp"

#include "ygraph/parallel.hpp"
#include "ygraph/permutations.hpp"

#include <algorithm>
#include <cmath>

namespace ygraph {

namespace {

constexpr int kExactSteps = 1000;

double log_abs(const Integer& v) {
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

void check_path(const PathSample& path, const ZParam& z1, const ZParam& z2) {
    if (!z1.is_finite() || !z2.is_finite()) throw DomainError("likelihood ratios need finite z");
    if (!path.start.empty()) throw DomainError("likelihood ratios need a path from the empty diagram");
}

// factor k as an unreduced fraction num/den
void step_factor(const ZParam& z1, const ZParam& z2, int c, int k, Integer& num, Integer& den) {
    Rational a = z2.shifted_norm(c) * (z1.t() + (k - 1));
    Rational b = z1.shifted_norm(c) * (z2.t() + (k - 1));
    if (b == 0) throw DomainError("vanishing denominator in the likelihood ratio");
    num = a.get_num() * b.get_den();
    den = b.get_num() * a.get_den();
}

}  // namespace

std::vector<Rational> phi_n(const PathSample& path, const ZParam& z1, const ZParam& z2) {
    check_path(path, z1, z2);
    std::vector<Rational> out;
    Rational phi = 1;
    Integer num, den;
    int k = 0;
    for (int c : path.contents()) {
        step_factor(z1, z2, c, ++k, num, den);
        Rational f(num, den);
        f.canonicalize();
        phi *= f;
        out.push_back(phi);
    }
    return out;
}

std::vector<double> log_phi_trace(const PathSample& path, const ZParam& z1, const ZParam& z2) {
    check_path(path, z1, z2);
    std::vector<double> out;
    out.reserve(path.boxes.size());
    Integer num_acc = 1, den_acc = 1, num, den;
    double log_acc = 0.0;
    int k = 0;
    for (int c : path.contents()) {
        step_factor(z1, z2, c, ++k, num, den);
        if (k <= kExactSteps) {
            num_acc *= num;
            den_acc *= den;
            if (num_acc == 0) {
                log_acc = -INFINITY;
            } else {
                log_acc = log_abs(num_acc) - log_abs(den_acc);
            }
        } else if (std::isfinite(log_acc)) {
            log_acc += num == 0 ? -INFINITY : log_abs(num) - log_abs(den);
        }
        out.push_back(log_acc);
    }
    return out;
}

bool in_fat_hook(const YoungDiagram& lambda, int p, int q) { return lambda.row(p + 1) <= q; }

EscapeStep escape_step_bound(const YoungDiagram& lambda, int p, int q, const ZParam& z) {
    if (!z.is_finite()) throw DomainError("escape bound needs finite z");
    if (p < 0 || q < 0) throw DomainError("fat hook needs p, q >= 0");
    if (!in_fat_hook(lambda, p, q)) throw DomainError("diagram is not in the fat hook");
    Box b{p + 1, q + 1};
    if (lambda.row(p + 1) != q || (p > 0 && lambda.row(p) < q + 1)) throw DomainError("adding (p+1, q+1) does not give a diagram");
    YoungDiagram nu = add_box(lambda, b);
    EscapeStep out;
    out.probability = transition(lambda, nu, z);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(p + q));
    out.bound = z.shifted_norm(q - p) / ((z.t() + lambda.size()) * Rational(scale));
    return out;
}

double DisjointnessSummary::median_phi() const {
    if (final_log_phi.empty()) return 1.0;
    std::vector<double> v = final_log_phi;
    std::sort(v.begin(), v.end());
    std::size_t m = v.size() / 2;
    double med = v.size() % 2 == 1 ? v[m] : 0.5 * (v[m - 1] + v[m]);
    return std::exp(med);
}

double DisjointnessSummary::fraction_below_threshold() const {
    if (final_log_phi.empty()) return 0.0;
    double cut = std::log(threshold);
    auto below = std::count_if(final_log_phi.begin(), final_log_phi.end(), [cut](double v) { return v < cut; });
    return static_cast<double>(below) / static_cast<double>(final_log_phi.size());
}

double DisjointnessSummary::fraction_decreasing() const {
    if (final_log_phi.empty()) return 0.0;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < final_log_phi.size(); ++i)
        if (final_log_phi[i] < decade_log_phi[i]) ++hits;
    return static_cast<double>(hits) / static_cast<double>(final_log_phi.size());
}

DisjointnessSummary disjointness_experiment(const ZParam& z1, const ZParam& z2, int steps, int chains,
                                            std::uint64_t seed, double threshold) {
    if (!z1.is_finite() || !z2.is_finite() || z1.is_integer() || z2.is_integer())
        throw DomainError("disjointness experiment needs finite nonintegral z");
    if (steps < 1 || chains < 1) throw DomainError("steps and chains must be positive");
    DisjointnessSummary s;
    s.z1 = z1.upper_half_plane();
    s.z2 = z2.upper_half_plane();
    s.steps = steps;
    s.seed = seed;
    s.threshold = threshold;
    s.final_log_phi.assign(chains, 0.0);
    s.decade_log_phi.assign(chains, 0.0);
    int decade = std::max(1, steps / 10);
    parallel_for(static_cast<std::size_t>(chains), [&](std::size_t i) {
        PathSample path = sample_path(s.z1, steps, stream_seed(seed, i));
        std::vector<double> trace = log_phi_trace(path, s.z1, s.z2);
        s.final_log_phi[i] = trace.back();
        s.decade_log_phi[i] = trace[decade - 1];
    });
    return s;
}

std::vector<double> kakutani_experiment(const Rational& s, const Rational& t, int count) {
    std::vector<double> out;
    out.reserve(count);
    double acc = 0.0;
    for (int n = 1; n <= count; ++n) {
        acc += kakutani_factor(n, s, t).log_value;
        out.push_back(acc);
    }
    return out;
}

}  // namespace ygraph
