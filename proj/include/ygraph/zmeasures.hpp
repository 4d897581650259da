#pragma once

#include "ygraph/partitions.hpp"
#include "ygraph/random.hpp"
#include "ygraph/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace ygraph {

/// The parameter z of the coherent system M_z: a nonzero complex number with
/// rational parts, or one of the two limit systems z -> 0 and z -> infinity.
class ZParam {
public:
    enum class Kind { Finite, ZeroLimit, Infinity };

    /// Throws DomainError for z = 0; use zero_limit() instead.
    static ZParam finite(Rational re, Rational im = 0);
    static ZParam zero_limit() { return ZParam(Kind::ZeroLimit); }
    static ZParam infinity() { return ZParam(Kind::Infinity); }
    /// z = k for an integer k; k = 0 gives the zero limit.
    static ZParam integer(int k);

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    Gaussian value() const { return {re_, im_}; }
    /// t = z zbar; zero for the zero limit. Throws for infinity.
    Rational t() const;
    /// |z + c|^2 = (re + c)^2 + im^2; for the zero limit this is c^2.
    Rational shifted_norm(int c) const;
    /// True for finite real integers and for the zero limit.
    bool is_integer() const;
    /// Value of an integral z (zero for the zero limit).
    int integer_value() const;
    /// Reflects into the upper half plane (im >= 0).
    ZParam upper_half_plane() const;
    ZParam conj() const;

    std::string to_string() const;

    friend bool operator==(const ZParam& a, const ZParam& b) {
        return a.kind_ == b.kind_ && a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    explicit ZParam(Kind kind) : kind_(kind) {}
    Kind kind_ = Kind::Finite;
    Rational re_;
    Rational im_;
};

/// Accepts "re,im", a single rational, "inf", or "0lim".
ZParam parse_zparam(std::string_view text);

/// M_z(lambda); M(empty) = 1.
Rational mz_weight(const YoungDiagram& lambda, const ZParam& z);

/// True iff mz_weight(lambda, z) != 0, decided by the row/column/hook rules.
bool support_check(const YoungDiagram& lambda, const ZParam& z);

/// dim nu / ((n+1) dim lambda) for an edge lambda -> nu; throws DomainError otherwise.
Rational dim_ratio(const YoungDiagram& lambda, const YoungDiagram& nu);

/// p_z(lambda, nu) = |z + c|^2 / (t + n) * dim nu / ((n+1) dim lambda).
/// The step out of the empty diagram has probability 1. Throws DomainError for non-edges.
Rational transition(const YoungDiagram& lambda, const YoungDiagram& nu, const ZParam& z);

/// q(mu, lambda) = dim mu / dim lambda when mu -> lambda, else 0.
Rational cotransition(const YoungDiagram& mu, const YoungDiagram& lambda);

/// Exact probability weights of one level of a coherent system.
struct LevelMeasure {
    int n = 0;
    std::map<YoungDiagram, Rational> weights;

    Rational total() const;
    Rational at(const YoungDiagram& lambda) const;
};

/// Largest level accepted by level_measure.
inline constexpr int kMaxEnumeratedLevel = 40;

/// Table of M_z over all diagrams of size n. Throws InfeasibleError for n > 40.
LevelMeasure level_measure(int n, const ZParam& z);

/// Coherency M^(n-1)(mu) = sum_lambda q(mu, lambda) M^(n)(lambda), checked exactly.
/// Throws DomainError unless hi.n == lo.n + 1.
bool check_coherency(const LevelMeasure& hi, const LevelMeasure& lo);

/// A path in the Young graph: a start diagram and the boxes added in order.
struct PathSample {
    YoungDiagram start;
    std::vector<Box> boxes;

    int length() const { return static_cast<int>(boxes.size()); }
    YoungDiagram end() const;
    /// start, then every intermediate diagram through end().
    std::vector<YoungDiagram> diagrams() const;
    std::vector<int> contents() const;
};

/// Transition probabilities out of lambda to each addable box, in double precision,
/// from the interlacing (Kerov) form of dim nu / ((n+1) dim lambda).
std::vector<double> transition_row(const YoungDiagram& lambda, const std::vector<Box>& corners, const ZParam& z);

/// Grows a path from `start` until it has n_max boxes. Throws DomainError when start
/// lies outside the support of M_z.
PathSample sample_path(const ZParam& z, int n_max, std::uint64_t seed, const YoungDiagram& start = {});

/// Adds `steps` boxes to `path` with the kernel of z, without any support check.
void extend_path(PathSample& path, const ZParam& z, int steps, Rng& rng);

/// lambda -> M(lambda) / dim lambda.
class HarmonicFunction {
public:
    explicit HarmonicFunction(std::function<Rational(const YoungDiagram&)> weight) : weight_(std::move(weight)) {}

    Rational operator()(const YoungDiagram& lambda) const;
    /// f(lambda) - sum_{nu: lambda -> nu} f(nu).
    Rational residual(const YoungDiagram& lambda) const;

private:
    std::function<Rational(const YoungDiagram&)> weight_;
};

HarmonicFunction harmonic_of(const ZParam& z);
/// Harmonic function of a pair of consecutive levels; residuals are defined for lo's diagrams.
HarmonicFunction harmonic_of(const LevelMeasure& lo, const LevelMeasure& hi);

/// Coefficients of w^0 .. w^{N-1} in 2F1(z, zbar; t; w): (z)_n (zbar)_n / ((t)_n n!).
std::vector<Rational> onerow_genfun(const ZParam& z, int count);

}  // namespace ygraph
