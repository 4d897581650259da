#pragma once

#include "ygraph/characters.hpp"
#include "ygraph/partitions.hpp"
#include "ygraph/rational.hpp"
#include "ygraph/zmeasures.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace ygraph {

/// (xi_lambda, xi_nu) = numerator / sqrt(radicand).
struct XiInner {
    Gaussian numerator;
    Rational radicand;
};

/// z + c for an edge lambda -> nu over (t + n)(n + 1); zero numerator for non-edges.
XiInner xi_inner(const YoungDiagram& lambda, const YoungDiagram& nu, const ZParam& z);

/// prod_{i<j<=p} (lambda_i - lambda_j + j - i). Throws DomainError if lambda has more than p rows.
Integer g_poly(const YoungDiagram& lambda, int p);

/// x_n^2 = Gamma(A + n)^2 / (Gamma(B + n) n!), A = p^2 + q^2 - pq, B = (p - q)^2.
Rational x_scale_sq(int p, int q, int n);

/// f_pq(lambda) = core / x_n.
struct BlockValue {
    Integer core;
    Rational x_sq;
    int n = 0;
    int p = 0;
    int q = 0;

    Rational squared() const { return Rational(core * core) / x_sq; }
    double value() const;
};

/// Throws DomainError when lambda is not in Y(p,q) or p = q = 0.
BlockValue f_pq(const YoungDiagram& lambda, int p, int q);

/// core(lambda)(n + A) == sum over nu in Y(p,q), lambda -> nu, of (k + c) core(nu).
bool pseudoharmonic_core_check(const YoungDiagram& lambda, int p, int q);

/// The diagrams of Y(p,q) of size n as (lambda+, lambda-) pairs.
std::vector<std::pair<YoungDiagram, YoungDiagram>> block_level(int p, int q, int n);

/// sum over Y(p,q) of size n of f_pq^2.
Rational hardy_partial(int p, int q, int n);

/// Exact expectation of h(lambda+, lambda-) under the |f_pq|^2 level measure normalized to mass 1.
Rational block_level_expectation(int p, int q, int n,
                                 const std::function<Rational(const YoungDiagram&, const YoungDiagram&)>& h);

/// C(p,q) of the closed form of the weight function.
Rational m_pq_constant(int p, int q);

/// Closed form of the weight function at (lambda+, lambda-) = (a, b); `constant` replaces C(p,q).
Rational m_pq_weight_parts(const YoungDiagram& a, const YoungDiagram& b, int p, int q,
                           const std::optional<Rational>& constant = std::nullopt);
/// Throws DomainError when lambda is not in Y(p,q).
Rational m_pq_weight(const YoungDiagram& lambda, int p, int q, const std::optional<Rational>& constant = std::nullopt);

/// Levels pq..n_max of the weight function generated from the p x q rectangle by the kernel of z = p - q.
std::vector<std::map<YoungDiagram, Rational>> m_pq_recurrence(int p, int q, int n_max);

/// Closed form equals the recurrence on every level up to n_max.
bool m_pq_recurrence_check(int p, int q, int n_max, const std::optional<Rational>& constant = std::nullopt);

/// Chain from the p x q rectangle with the kernel of z = p - q, stopped at level n_max.
PathSample block_chain_sample(int p, int q, int n_max, std::uint64_t seed);

/// Diagram reached by the path at level n. Throws DomainError outside the path.
YoungDiagram diagram_at(const PathSample& path, int n);

/// Point of the face Omega(p,q): p alphas and q betas, each weakly decreasing, sum 1.
struct OmegaFacePoint {
    std::vector<Rational> alpha;
    std::vector<Rational> beta;

    OmegaFacePoint() = default;
    /// Throws DomainError on negative entries, wrong order, or sum != 1.
    OmegaFacePoint(std::vector<Rational> a, std::vector<Rational> b);
    OmegaPoint point() const { return {alpha, beta}; }
};

/// Modified Frobenius coordinates over n. Throws DomainError for the empty diagram.
OmegaPoint iota_n(const YoungDiagram& lambda);

/// (a / (n - pq); b / (n - pq)). Throws DomainError unless lambda is in Y(p,q) and n > pq.
OmegaFacePoint bar_iota_n(const YoungDiagram& lambda, int p, int q);

/// prod (alpha_i - alpha_j)^2 prod (beta_r - beta_s)^2.
Rational spectral_density(const OmegaFacePoint& omega);

/// Integral of the squared Vandermondes over Omega(p,q) against d alpha_1 .. d beta_{q-1}.
Rational spectral_normalization(int p, int q);

Rational spectral_density_normalized(const OmegaFacePoint& omega);

/// C(p,q) prod (alpha_i - alpha_j)^2 prod (beta_r - beta_s)^2 / prod (alpha_i + beta_r).
/// Throws DomainError when some alpha_i + beta_r vanishes.
double mpq_limit_density(const OmegaFacePoint& omega);

/// V(x) V(y) / prod (x_i + y_j) against the sum over splittings y = y' + y''.
/// Throws DomainError unless p <= q, entries are distinct and all x_i + y_j != 0.
bool cauchy_det_check(const std::vector<Rational>& x, const std::vector<Rational>& y);

enum class Embedding { Iota, BarIota };

struct Histogram {
    double lo = 0.0;
    double hi = 1.0;
    std::vector<long> counts;
    /// Reference density integrated over each bin, times the sample count; empty when unknown.
    std::vector<double> expected;

    double width() const { return (hi - lo) / static_cast<double>(counts.size()); }
};

/// alpha_1 of each path's diagram at level n under the chosen embedding.
std::vector<double> pushforward_alpha1(const std::vector<PathSample>& samples, int n, int p, int q, Embedding e);

/// Fixed binning of values on [lo, hi].
Histogram histogram(const std::vector<double>& values, int bins, double lo = 0.0, double hi = 1.0);

Histogram empirical_pushforward(const std::vector<PathSample>& samples, int n, int p, int q, Embedding e, int bins);

/// CDF of alpha_1 under the normalized spectral density, for faces with p + q <= 2.
double alpha1_limit_cdf(int p, int q, double a);

/// Kolmogorov-Smirnov distance between the sample and a continuous CDF.
double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf);

}  // namespace ygraph
