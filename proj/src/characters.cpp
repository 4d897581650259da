#include "ygraph/characters.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ygraph {

std::vector<int> multiplicities(const CycleType& rho) {
    std::vector<int> m(rho.row(1) + 1, 0);
    for (int part : rho.parts()) ++m[part];
    return m;
}

Integer centralizer_order(const CycleType& rho) {
    Integer z = 1;
    std::vector<int> m = multiplicities(rho);
    for (int k = 1; k < static_cast<int>(m.size()); ++k) {
        Integer kpow;
        mpz_ui_pow_ui(kpow.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m[k]));
        z *= kpow * factorial(static_cast<unsigned long>(m[k]));
    }
    return z;
}

Integer class_size(const CycleType& rho) {
    return factorial(static_cast<unsigned long>(rho.size())) / centralizer_order(rho);
}

Integer mn_character(const YoungDiagram& lambda, const CycleType& rho) {
    if (lambda.size() != rho.size()) throw DomainError("character argument has the wrong size");
    const int beads = lambda.length();
    std::vector<int> beta;
    for (int i = 1; i <= beads; ++i) beta.push_back(lambda.row(i) + beads - i);
    std::sort(beta.begin(), beta.end());
    const std::vector<int>& strips = rho.parts();
    std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo;

    // Removing a rim hook of length r moves one bead from b to b - r; the sign counts the beads jumped over.
    std::function<Integer(const std::vector<int>&, std::size_t)> eval = [&](const std::vector<int>& b,
                                                                            std::size_t idx) -> Integer {
        if (idx == strips.size()) return 1;
        auto key = std::make_pair(b, idx);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        int r = strips[idx];
        Integer total = 0;
        for (std::size_t i = 0; i < b.size(); ++i) {
            int target = b[i] - r;
            if (target < 0 || std::binary_search(b.begin(), b.end(), target)) continue;
            int jumped = 0;
            for (int v : b)
                if (v > target && v < b[i]) ++jumped;
            std::vector<int> next = b;
            next[i] = target;
            std::sort(next.begin(), next.end());
            Integer sub = eval(next, idx + 1);
            total += jumped % 2 == 0 ? sub : Integer(-sub);
        }
        memo.emplace(std::move(key), total);
        return total;
    };
    return eval(beta, 0);
}

Gaussian zpow_coefficient(const YoungDiagram& lambda, const ZParam& z) {
    if (!z.is_finite()) throw DomainError("the expansion of z^[x] needs finite z");
    Gaussian num(Rational(1));
    Integer hooks = 1;
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.row(i); ++j) {
            num *= Gaussian(z.re() + (j - i), z.im());
            hooks *= hook_length(lambda, {i, j});
        }
    }
    Rational inv(1, hooks);
    inv.canonicalize();
    return num * Gaussian(inv);
}

bool zpow_expansion_check(int n, const ZParam& z, const CoefficientFn& coeff) {
    if (!z.is_finite()) throw DomainError("the expansion of z^[x] needs finite z");
    CoefficientFn c = coeff ? coeff : [&z](const YoungDiagram& lambda) { return zpow_coefficient(lambda, z); };
    std::vector<YoungDiagram> shapes = partitions_of(n);
    std::vector<Gaussian> coeffs;
    for (const auto& lambda : shapes) coeffs.push_back(c(lambda));
    for (const auto& rho : partitions_of(n)) {
        Gaussian lhs = pow(z.value(), static_cast<unsigned long>(rho.length()));
        Gaussian rhs;
        for (std::size_t i = 0; i < shapes.size(); ++i)
            rhs += coeffs[i] * Gaussian(Rational(mn_character(shapes[i], rho)));
        if (lhs != rhs) return false;
    }
    return true;
}

Gaussian chi_z_value(const CycleType& rho, const ZParam& z) {
    Rational sum = 0;
    for (const auto& lambda : partitions_of(rho.size())) {
        Rational w = mz_weight(lambda, z);
        if (w == 0) continue;
        sum += w * make_rational(mn_character(lambda, rho), dim(lambda));
    }
    return Gaussian(sum);
}

std::map<CycleType, FValue> f_z_values(int n, const ZParam& z) {
    if (!z.is_finite()) throw DomainError("F_z^n needs finite z");
    Rational t = z.t();
    Rational scale = Rational(factorial(static_cast<unsigned long>(n))) / rising(t, static_cast<unsigned long>(n));
    std::map<CycleType, FValue> out;
    for (const auto& rho : partitions_of(n)) {
        int cycles = rho.length();
        out.emplace(rho, FValue{scale * pow(t, cycles), pow(z.value(), static_cast<unsigned long>(cycles))});
    }
    return out;
}

std::map<YoungDiagram, Gaussian> theta_coeffs(int n, const ZParam& z) {
    if (!z.is_finite() || z.is_integer()) throw DomainError("theta coefficients need non-integral finite z");
    std::map<YoungDiagram, Gaussian> out;
    for (const auto& lambda : partitions_of(n)) {
        Gaussian num(Rational(1)), den(Rational(1));
        for (int i = 1; i <= lambda.length(); ++i) {
            for (int j = 1; j <= lambda.row(i); ++j) {
                Gaussian shifted(z.re() + (j - i), z.im());
                num *= shifted.conj();
                den *= shifted;
            }
        }
        out.emplace(lambda, num / den);
    }
    return out;
}

namespace {

// Kostka number K_{lambda, a}: tableaux of shape lambda and content a, peeling the
// largest letter as a horizontal strip.
Integer kostka(const YoungDiagram& lambda, const std::vector<int>& content_vec, std::size_t letters,
               std::map<std::pair<YoungDiagram, std::size_t>, Integer>& memo) {
    if (letters == 0) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, letters);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int strip = content_vec[letters - 1];
    Integer total = 0;
    if (lambda.length() <= static_cast<int>(letters)) {
        std::vector<int> mu(lambda.length(), 0);
        std::function<void(int, int)> choose = [&](int i, int left) {
            if (i == lambda.length()) {
                if (left == 0) total += kostka(YoungDiagram(mu), content_vec, letters - 1, memo);
                return;
            }
            int hi = lambda.row(i + 1), lo = lambda.row(i + 2);
            for (int v = hi; v >= lo; --v) {
                int removed = hi - v;
                if (removed > left) break;
                mu[i] = v;
                choose(i + 1, left - removed);
            }
        };
        choose(0, strip);
    }
    memo.emplace(std::move(key), total);
    return total;
}

void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int v = 0; v <= total; ++v) {
        cur.push_back(v);
        compositions(total - v, parts - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Polynomial schur_polynomial(const YoungDiagram& lambda, int m_vars) {
    Polynomial poly;
    if (lambda.length() > m_vars) return poly;
    std::vector<std::vector<int>> exps;
    std::vector<int> cur;
    compositions(lambda.size(), m_vars, cur, exps);
    for (const auto& a : exps) {
        std::map<std::pair<YoungDiagram, std::size_t>, Integer> memo;
        Integer k = kostka(lambda, a, a.size(), memo);
        if (k != 0) poly[a] = Gaussian(Rational(k));
    }
    return poly;
}

bool schur_identity_check(int m_vars, const ZParam& z, int deg) {
    if (deg < 0 || deg > m_vars || m_vars > 6) throw DomainError("schur identity check needs deg <= m <= 6");
    if (!z.is_finite()) throw DomainError("schur identity check needs finite z");
    Polynomial lhs, rhs;
    for (int d = 0; d <= deg; ++d) {
        std::vector<std::vector<int>> exps;
        std::vector<int> cur;
        compositions(d, m_vars, cur, exps);
        for (const auto& a : exps) {
            // coefficient of y^a in prod (1 - y_i)^{-z} is prod (z)_{a_i} / a_i!
            Gaussian c(Rational(1));
            for (int ai : a) c *= rising(z.value(), static_cast<unsigned long>(ai)) *
                                  Gaussian(Rational(1, factorial(static_cast<unsigned long>(ai))));
            lhs[a] = c;
        }
        for (const auto& lambda : partitions_of(d, m_vars)) {
            Gaussian coeff = zpow_coefficient(lambda, z);
            for (const auto& [a, v] : schur_polynomial(lambda, m_vars)) rhs[a] += coeff * v;
        }
    }
    for (const auto& [a, v] : lhs) {
        auto it = rhs.find(a);
        Gaussian r = it == rhs.end() ? Gaussian() : it->second;
        if (r != v) return false;
    }
    for (const auto& [a, v] : rhs)
        if (!lhs.count(a) && v != Gaussian()) return false;
    return true;
}

OmegaPoint::OmegaPoint(std::vector<Rational> alpha, std::vector<Rational> beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    std::sort(alpha_.begin(), alpha_.end(), std::greater<>());
    std::sort(beta_.begin(), beta_.end(), std::greater<>());
    for (const auto& v : alpha_)
        if (v < 0) throw DomainError("Thoma coordinates must be nonnegative");
    for (const auto& v : beta_)
        if (v < 0) throw DomainError("Thoma coordinates must be nonnegative");
    if (gamma() < 0) throw DomainError("Thoma coordinates must sum to at most 1");
}

Rational OmegaPoint::gamma() const {
    Rational g = 1;
    for (const auto& v : alpha_) g -= v;
    for (const auto& v : beta_) g -= v;
    return g;
}

bool OmegaPoint::in_face(int p, int q) const {
    auto nonzero = [](const std::vector<Rational>& v) {
        return std::count_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    };
    return gamma() == 0 && nonzero(alpha_) <= p && nonzero(beta_) <= q;
}

Rational tilde_p_k(const OmegaPoint& omega, int k) {
    if (k < 1) throw DomainError("power sum index must be positive");
    if (k == 1) return 1;
    Rational s = 0;
    for (const auto& a : omega.alpha()) s += pow(a, k);
    Rational b = 0;
    for (const auto& v : omega.beta()) b += pow(v, k);
    return k % 2 == 0 ? Rational(s - b) : Rational(s + b);
}

namespace {

std::vector<Rational> series_mul(const std::vector<Rational>& a, const std::vector<Rational>& b, int order) {
    std::vector<Rational> out(order + 1, 0);
    for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

}  // namespace

std::vector<Rational> h_series(const OmegaPoint& omega, int order) {
    std::vector<Rational> h(order + 1, 0);
    // e^{gamma u}
    Rational g = omega.gamma();
    Rational term = 1;
    for (int k = 0; k <= order; ++k) {
        h[k] = term;
        term *= g / (k + 1);
    }
    for (const auto& a : omega.alpha()) {
        std::vector<Rational> geo(order + 1);
        Rational p = 1;
        for (int k = 0; k <= order; ++k) {
            geo[k] = p;
            p *= a;
        }
        h = series_mul(h, geo, order);
    }
    for (const auto& b : omega.beta()) h = series_mul(h, {Rational(1), b}, order);
    return h;
}

Rational super_schur(const YoungDiagram& lambda, const OmegaPoint& omega) {
    const int l = lambda.length();
    if (l == 0) return 1;
    std::vector<Rational> h = h_series(omega, lambda.row(1) + l);
    std::vector<std::vector<Rational>> m(l, std::vector<Rational>(l));
    for (int i = 1; i <= l; ++i) {
        for (int j = 1; j <= l; ++j) {
            int idx = lambda.row(i) - i + j;
            m[i - 1][j - 1] = idx < 0 ? Rational(0) : h[idx];
        }
    }
    return determinant(std::move(m));
}

Rational extreme_character(const OmegaPoint& omega, const CycleType& rho) {
    Rational v = 1;
    for (int part : rho.parts())
        if (part >= 2) v *= tilde_p_k(omega, part);
    return v;
}

bool extreme_coherent_check(int n, const OmegaPoint& omega) {
    std::vector<YoungDiagram> shapes = partitions_of(n);
    std::vector<Rational> schur;
    Rational total = 0;
    for (const auto& lambda : shapes) {
        schur.push_back(super_schur(lambda, omega));
        total += Rational(dim(lambda)) * schur.back();
    }
    if (total != 1) return false;
    for (const auto& rho : partitions_of(n)) {
        Rational sum = 0;
        for (std::size_t i = 0; i < shapes.size(); ++i) sum += schur[i] * Rational(mn_character(shapes[i], rho));
        if (sum != extreme_character(omega, rho)) return false;
    }
    return true;
}

}  // namespace ygraph
