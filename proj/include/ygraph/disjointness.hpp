#pragma once

#include "ygraph/partitions.hpp"
#include "ygraph/rational.hpp"
#include "ygraph/zmeasures.hpp"

#include <cstdint>
#include <vector>

namespace ygraph {

/// phi_1 .. phi_n along a path from the empty diagram:
/// phi_n = prod_k |z2 + c_k|^2 / |z1 + c_k|^2 * (t1 + k - 1) / (t2 + k - 1).
/// Throws DomainError for non-finite z, a path not starting at the empty diagram, or a vanishing denominator.
std::vector<Rational> phi_n(const PathSample& path, const ZParam& z1, const ZParam& z2);

/// log phi_1 .. log phi_n; exact products through step 1000, then accumulated logs.
std::vector<double> log_phi_trace(const PathSample& path, const ZParam& z1, const ZParam& z2);

/// lambda_{p+1} <= q.
bool in_fat_hook(const YoungDiagram& lambda, int p, int q);

struct EscapeStep {
    Rational probability;
    Rational bound;
};

/// p_z(lambda, nu) for nu = lambda + (p+1, q+1), and |z + q - p|^2 / (t + n) * 2^{-(p+q)}.
/// Throws DomainError unless lambda lies in the fat hook and nu is a diagram.
EscapeStep escape_step_bound(const YoungDiagram& lambda, int p, int q, const ZParam& z);

struct DisjointnessSummary {
    ZParam z1 = ZParam::infinity();
    ZParam z2 = ZParam::infinity();
    int steps = 0;
    std::uint64_t seed = 0;
    double threshold = 1e-2;
    /// log phi at the last step, by chain index.
    std::vector<double> final_log_phi;
    /// log phi at step steps / 10, by chain index.
    std::vector<double> decade_log_phi;

    double median_phi() const;
    double fraction_below_threshold() const;
    /// Fraction of chains with phi_steps < phi_{steps/10}.
    double fraction_decreasing() const;
};

/// Chains sampled under M_{z1} (chain i uses stream_seed(seed, i)); both z are first reflected
/// into the upper half plane. Throws DomainError for non-finite or integral z.
DisjointnessSummary disjointness_experiment(const ZParam& z1, const ZParam& z2, int steps, int chains,
                                            std::uint64_t seed, double threshold = 1e-2);

/// Partial sums of log a_n for n = 1..N.
std::vector<double> kakutani_experiment(const Rational& s, const Rational& t, int count);

}  // namespace ygraph
