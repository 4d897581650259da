#pragma once

#include "ygraph/partitions.hpp"
#include "ygraph/rational.hpp"
#include "ygraph/zmeasures.hpp"

#include <functional>
#include <map>
#include <vector>

namespace ygraph {

/// Cycle type of a permutation, stored as a partition rho of n.
using CycleType = YoungDiagram;

/// m_k: number of parts of rho equal to k, for k = 1..max part (index 0 unused).
std::vector<int> multiplicities(const CycleType& rho);
/// Order of the centralizer of a permutation of type rho.
Integer centralizer_order(const CycleType& rho);
/// Number of permutations of type rho.
Integer class_size(const CycleType& rho);

/// chi^lambda(rho) by border-strip removal. Throws DomainError when |lambda| != |rho|.
Integer mn_character(const YoungDiagram& lambda, const CycleType& rho);

/// prod_{b in lambda} (z + c(b)) / h(b).
Gaussian zpow_coefficient(const YoungDiagram& lambda, const ZParam& z);

using CoefficientFn = std::function<Gaussian(const YoungDiagram&)>;

/// z^[x] = sum_lambda coeff(lambda) chi^lambda(x) on every cycle type of S(n).
/// The default coefficient is zpow_coefficient.
bool zpow_expansion_check(int n, const ZParam& z, const CoefficientFn& coeff = {});

/// chi_z(rho) = sum_lambda M_z(lambda) chi^lambda(rho) / dim lambda.
Gaussian chi_z_value(const CycleType& rho, const ZParam& z);

/// F_z^n on a cycle class: |F|^2 = n! t^[x] / (t)_n exactly, and the core z^[x].
struct FValue {
    Rational squared;
    Gaussian core;
};
std::map<CycleType, FValue> f_z_values(int n, const ZParam& z);

/// prod_b (zbar + c(b)) / (z + c(b)) for every lambda of size n. Throws DomainError for integral z.
std::map<YoungDiagram, Gaussian> theta_coeffs(int n, const ZParam& z);

/// Exponent vector to coefficient.
using Polynomial = std::map<std::vector<int>, Gaussian>;

/// Schur polynomial s_lambda(y_1..y_m) from Kostka numbers (semistandard tableau counts).
Polynomial schur_polynomial(const YoungDiagram& lambda, int m_vars);

/// prod_i (1 - y_i)^{-z} = sum_lambda prod_b (z + c(b)) / h(b) s_lambda(y), through total degree deg.
/// Throws DomainError unless deg <= m_vars <= 6.
bool schur_identity_check(int m_vars, const ZParam& z, int deg);

/// Point of the Thoma simplex with finitely many nonzero rational coordinates.
class OmegaPoint {
public:
    OmegaPoint() = default;
    /// Sorts both lists decreasingly; throws DomainError on negative entries or sum > 1.
    OmegaPoint(std::vector<Rational> alpha, std::vector<Rational> beta);

    const std::vector<Rational>& alpha() const { return alpha_; }
    const std::vector<Rational>& beta() const { return beta_; }
    Rational gamma() const;
    /// gamma = 0 and at most p nonzero alphas, q nonzero betas.
    bool in_face(int p, int q) const;

private:
    std::vector<Rational> alpha_;
    std::vector<Rational> beta_;
};

/// sum alpha^k + (-1)^{k-1} sum beta^k for k >= 2; identically 1 for k = 1.
Rational tilde_p_k(const OmegaPoint& omega, int k);

/// Coefficients h_0 .. h_N of exp(gamma u) prod (1 + beta u) / (1 - alpha u).
std::vector<Rational> h_series(const OmegaPoint& omega, int order);

/// Extended Schur function via Jacobi-Trudi: det[h_{lambda_i - i + j}].
Rational super_schur(const YoungDiagram& lambda, const OmegaPoint& omega);

/// prod_{k >= 2} tilde_p_k(omega)^{m_k(rho)}.
Rational extreme_character(const OmegaPoint& omega, const CycleType& rho);

/// For the extreme coherent system M(lambda) = dim lambda * s~_lambda(omega):
/// the level sums to 1 and sum_lambda dim lambda s~_lambda chi^lambda(rho)/dim lambda = chi^(omega)(rho).
bool extreme_coherent_check(int n, const OmegaPoint& omega);

}  // namespace ygraph
