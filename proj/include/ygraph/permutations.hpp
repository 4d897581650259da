#pragma once

#include "ygraph/partitions.hpp"
#include "ygraph/random.hpp"
#include "ygraph/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ygraph {

/// Element of S(n) in one-line form: images()[i] = x(i+1), values in 1..n.
class Permutation {
public:
    Permutation() = default;
    /// Throws DomainError unless `images` is a permutation of 1..n.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// The transposition (a b) in S(n).
    static Permutation transposition(int n, int a, int b);
    /// The cycle a_1 -> a_2 -> ... -> a_k -> a_1 in S(n).
    static Permutation cycle(int n, const std::vector<int>& elements);

    int degree() const { return static_cast<int>(images_.size()); }
    /// x(i), 1-based.
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    /// Same permutation viewed in S(n) for n >= degree(), extra points fixed.
    Permutation embed(int n) const;
    /// Cycles in order of their smallest element, each starting at that element.
    std::vector<std::vector<int>> cycles() const;

    /// (a * b)(i) = a(b(i)); both operands are embedded in the larger degree.
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

int cycle_count(const Permutation& x);
/// Cycle lengths sorted into a partition of n.
YoungDiagram cycle_type(const Permutation& x);
/// +1 for even permutations, -1 for odd.
int sign(const Permutation& x);

/// Canonical projection S(n+1) -> S(n): delete n+1 from its cycle.
Permutation derivative_projection(const Permutation& x);
/// The n+1 permutations of S(n+1) projecting onto x.
std::vector<Permutation> projection_fiber(const Permutation& x);

/// Code (i_1, ..., i_n), i_m in {0, ..., m-1}: i_m = 0 when m opens a new cycle,
/// i_m = j when m was inserted immediately before j.
using Code = std::vector<int>;

Code encode(const Permutation& x);
/// Throws DomainError on a coordinate out of range.
Permutation decode(const Code& code);

/// All of S(n), in the order of their codes read as mixed-radix numbers.
std::vector<Permutation> all_permutations(int n);

/// Element (g1, g2) of S(m) x S(m), acting on the right by x . g = g2^{-1} x g1.
struct GPair {
    Permutation g1;
    Permutation g2;

    GPair(Permutation a, Permutation b);
    int degree() const { return g1.degree(); }
    bool is_diagonal() const { return g1 == g2; }

    /// Composition compatible with the right action: (x . g) . h = x . (g * h).
    friend GPair operator*(const GPair& g, const GPair& h);
};

/// x . g = g2^{-1} x g1 with g embedded in S(n). Throws DomainError when deg g > deg x.
Permutation act(const Permutation& x, const GPair& g);

/// c(x, g) = [x . g] - [x].
int cocycle(const Permutation& x, const GPair& g);

/// Ewens parameter t in [0, inf].
class EwensParam {
public:
    explicit EwensParam(Rational t);
    static EwensParam infinity() { return EwensParam(); }

    bool is_infinite() const { return !t_.has_value(); }
    const Rational& value() const;  ///< throws for infinity
    std::string to_string() const;

private:
    EwensParam() = default;
    std::optional<Rational> t_;
};

/// Accepts "inf" or a rational.
EwensParam parse_ewens_param(std::string_view text);

/// mu_t^n({x}) = t^[x] / (t (t+1) ... (t+n-1)); t = 0 is uniform on n-cycles, t = inf is the Dirac mass at e.
Rational ewens_weight(const Permutation& x, const EwensParam& t);

/// Probability of code coordinate value `value` at position m (1-based).
Rational ewens_code_weight(int m, int value, const EwensParam& t);

/// Draws each code coordinate independently in index order, then decodes.
Permutation ewens_sample(int n, const EwensParam& t, Rng& rng);
Permutation ewens_sample(int n, const EwensParam& t, std::uint64_t seed);

/// d mu_t(x . g) / d mu_t(x) = t^{c(x,g)}, t > 0 finite.
Rational rn_derivative(const Permutation& x, const GPair& g, const Rational& t);

struct KakutaniFactor {
    double value = 1.0;
    double log_value = 0.0;
    /// a_n^2, present when st is the square of a rational.
    std::optional<Rational> exact_square;
    /// a_n itself when it is rational.
    std::optional<Rational> exact;
};

/// a_n = (u + n - 1) / sqrt((s + n - 1)(t + n - 1)), u = sqrt(st).
KakutaniFactor kakutani_factor(int n, const Rational& s, const Rational& t);

std::string to_json(const Permutation& x);
Permutation parse_permutation(std::string_view text);

}  // namespace ygraph
