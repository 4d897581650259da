#include "ygraph/blocks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ygraph {

namespace {

void check_block(int p, int q) {
    if (p < 0 || q < 0 || (p == 0 && q == 0)) throw DomainError("block needs p, q >= 0, not both zero");
}

double log_abs(const Integer& v) {
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

Integer g_of(const std::vector<int>& a, int p) {
    Integer g = 1;
    for (int i = 0; i < p; ++i) {
        int ai = i < static_cast<int>(a.size()) ? a[i] : 0;
        for (int j = i + 1; j < p; ++j) {
            int aj = j < static_cast<int>(a.size()) ? a[j] : 0;
            g *= ai - aj + j - i;
        }
    }
    return g;
}

Integer block_core(const YoungDiagram& plus, const YoungDiagram& minus, int p, int q) {
    Integer core = g_of(plus.parts(), p) * g_of(minus.parts(), q);
    return minus.size() % 2 == 0 ? core : Integer(-core);
}

// sum of g_p(a)^2 over partitions a of m with at most p parts
Integer g_square_sum(int m, int p) {
    if (p == 0) return m == 0 ? 1 : 0;
    if (p == 1) return 1;
    Integer total = 0;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int max_part) -> void {
        if (left == 0) {
            Integer g = g_of(cur, p);
            total += g * g;
            return;
        }
        if (static_cast<int>(cur.size()) == p) return;
        for (int v = std::min(left, max_part); v >= 1; --v) {
            cur.push_back(v);
            self(self, left - v, v);
            cur.pop_back();
        }
    };
    rec(rec, m, m);
    return total;
}

Rational vandermonde_sq(const std::vector<Rational>& v) {
    Rational r = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            Rational d = v[i] - v[j];
            r *= d * d;
        }
    return r;
}

Rational vandermonde(const std::vector<Rational>& v) {
    Rational r = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) r *= v[i] - v[j];
    return r;
}

}  // namespace

XiInner xi_inner(const YoungDiagram& lambda, const YoungDiagram& nu, const ZParam& z) {
    if (!z.is_finite()) throw DomainError("xi inner products need finite z");
    int n = lambda.size();
    XiInner out{Gaussian(), (z.t() + n) * (n + 1)};
    if (auto box = edge_box(lambda, nu)) out.numerator = z.value() + Gaussian(Rational(content(*box)));
    return out;
}

Integer g_poly(const YoungDiagram& lambda, int p) {
    if (lambda.length() > p) throw DomainError("diagram has more rows than p");
    return g_of(lambda.parts(), p);
}

Rational x_scale_sq(int p, int q, int n) {
    int a = p * p + q * q - p * q;
    int b = (p - q) * (p - q);
    if (n < 0 || a + n < 1 || b + n < 1) throw DomainError("x_n is undefined at this level");
    // Gamma(A+n)/Gamma(B+n) * Gamma(A+n)/Gamma(n+1), both integers since A >= B and A >= 1
    Integer r = 1;
    for (int j = b + n; j <= a + n - 1; ++j) r *= j;
    for (int j = n + 1; j <= a + n - 1; ++j) r *= j;
    return Rational(r);
}

double BlockValue::value() const {
    if (core == 0) return 0.0;
    double log_v = log_abs(core) - 0.5 * (log_abs(x_sq.get_num()) - log_abs(x_sq.get_den()));
    double v = std::exp(log_v);
    return core < 0 ? -v : v;
}

BlockValue f_pq(const YoungDiagram& lambda, int p, int q) {
    check_block(p, q);
    auto [plus, minus] = split_pm(lambda, p, q);
    BlockValue v;
    v.core = block_core(plus, minus, p, q);
    v.n = lambda.size();
    v.p = p;
    v.q = q;
    v.x_sq = x_scale_sq(p, q, v.n);
    return v;
}

bool pseudoharmonic_core_check(const YoungDiagram& lambda, int p, int q) {
    check_block(p, q);
    int n = lambda.size();
    int a = p * p + q * q - p * q;
    int k = p - q;
    Integer lhs = f_pq(lambda, p, q).core * (n + a);
    Integer rhs = 0;
    for (const Box& b : addable(lambda)) {
        YoungDiagram nu = add_box(lambda, b);
        if (!in_Ypq(nu, p, q)) continue;
        rhs += f_pq(nu, p, q).core * (k + content(b));
    }
    return lhs == rhs;
}

std::vector<std::pair<YoungDiagram, YoungDiagram>> block_level(int p, int q, int n) {
    check_block(p, q);
    std::vector<std::pair<YoungDiagram, YoungDiagram>> out;
    int free = n - p * q;
    for (int m = free; m >= 0; --m) {
        if ((p == 0 && m > 0) || (q == 0 && m < free)) continue;
        std::vector<YoungDiagram> pluses = partitions_of(m, p);
        std::vector<YoungDiagram> minuses = partitions_of(free - m, q);
        for (const auto& a : pluses)
            for (const auto& b : minuses) out.emplace_back(a, b);
    }
    return out;
}

Rational hardy_partial(int p, int q, int n) {
    check_block(p, q);
    int free = n - p * q;
    if (free < 0) return 0;
    Integer total = 0;
    if (p == 0 || q == 0) {
        total = g_square_sum(free, std::max(p, q));
    } else {
        for (int m = 0; m <= free; ++m) total += g_square_sum(m, p) * g_square_sum(free - m, q);
    }
    return Rational(total) / x_scale_sq(p, q, n);
}

Rational block_level_expectation(int p, int q, int n,
                                 const std::function<Rational(const YoungDiagram&, const YoungDiagram&)>& h) {
    Integer mass = 0;
    Rational acc = 0;
    for (const auto& [a, b] : block_level(p, q, n)) {
        Integer core = block_core(a, b, p, q);
        Integer w = core * core;
        mass += w;
        acc += Rational(w) * h(a, b);
    }
    if (mass == 0) throw DomainError("empty block level");
    return acc / Rational(mass);
}

Rational m_pq_constant(int p, int q) {
    check_block(p, q);
    int a = p * p + q * q - p * q;
    Integer num = factorial(static_cast<unsigned long>(a - 1));
    for (int i = 1; i <= p; ++i)
        for (int r = 1; r <= q; ++r) num *= p - i + q - r + 1;
    Integer den = 1;
    for (int i = 1; i <= p; ++i) den *= factorial(static_cast<unsigned long>(p - i));
    for (int r = 1; r <= q; ++r) den *= factorial(static_cast<unsigned long>(q - r));
    Rational c(num, den * den);
    c.canonicalize();
    return c;
}

Rational m_pq_weight_parts(const YoungDiagram& a, const YoungDiagram& b, int p, int q,
                           const std::optional<Rational>& constant) {
    check_block(p, q);
    if (a.length() > p || b.length() > q) throw DomainError("diagram is not in the block");
    int big_a = p * p + q * q - p * q;
    int free = a.size() + b.size();
    Integer ga = g_of(a.parts(), p), gb = g_of(b.parts(), q);
    Integer num = ga * ga * gb * gb;
    Integer den = 1;
    for (int j = 1; j <= big_a - 1; ++j) den *= free + j;
    for (int i = 1; i <= p; ++i)
        for (int r = 1; r <= q; ++r) den *= a.row(i) + b.row(r) + p - i + q - r + 1;
    Rational c = constant ? *constant : m_pq_constant(p, q);
    num *= c.get_num();
    den *= c.get_den();
    Rational w(num, den);
    w.canonicalize();
    return w;
}

Rational m_pq_weight(const YoungDiagram& lambda, int p, int q, const std::optional<Rational>& constant) {
    check_block(p, q);
    auto [plus, minus] = split_pm(lambda, p, q);
    return m_pq_weight_parts(plus, minus, p, q, constant);
}

std::vector<std::map<YoungDiagram, Rational>> m_pq_recurrence(int p, int q, int n_max) {
    check_block(p, q);
    ZParam z = ZParam::integer(p - q);
    std::vector<std::map<YoungDiagram, Rational>> levels;
    levels.push_back({{rectangle(p, q), Rational(1)}});
    for (int n = p * q; n < n_max; ++n) {
        std::map<YoungDiagram, Rational> next;
        for (const auto& [lambda, w] : levels.back()) {
            for (const Box& b : addable(lambda)) {
                YoungDiagram nu = add_box(lambda, b);
                Rational step = transition(lambda, nu, z);
                if (step != 0) next[nu] += w * step;
            }
        }
        levels.push_back(std::move(next));
    }
    return levels;
}

bool m_pq_recurrence_check(int p, int q, int n_max, const std::optional<Rational>& constant) {
    auto levels = m_pq_recurrence(p, q, n_max);
    for (std::size_t i = 0; i < levels.size(); ++i) {
        int n = p * q + static_cast<int>(i);
        auto pairs = block_level(p, q, n);
        if (pairs.size() != levels[i].size()) return false;
        for (const auto& [a, b] : pairs) {
            auto it = levels[i].find(join_pm(a, b, p, q));
            if (it == levels[i].end() || it->second != m_pq_weight_parts(a, b, p, q, constant)) return false;
        }
    }
    return true;
}

PathSample block_chain_sample(int p, int q, int n_max, std::uint64_t seed) {
    check_block(p, q);
    if (n_max < p * q) throw DomainError("target level is below the smallest diagram of the block");
    PathSample path;
    path.start = rectangle(p, q);
    Rng rng(seed);
    extend_path(path, ZParam::integer(p - q), n_max - p * q, rng);
    return path;
}

YoungDiagram diagram_at(const PathSample& path, int n) {
    int base = path.start.size();
    if (n < base || n > base + path.length()) throw DomainError("level is not on the path");
    std::vector<int> parts = path.start.parts();
    for (int i = 0; i < n - base; ++i) {
        const Box& b = path.boxes[i];
        if (b.row > static_cast<int>(parts.size())) parts.push_back(0);
        ++parts[b.row - 1];
    }
    return YoungDiagram(std::move(parts));
}

OmegaFacePoint::OmegaFacePoint(std::vector<Rational> a, std::vector<Rational> b)
    : alpha(std::move(a)), beta(std::move(b)) {
    Rational sum = 0;
    for (const auto* v : {&alpha, &beta}) {
        for (std::size_t i = 0; i < v->size(); ++i) {
            if ((*v)[i] < 0) throw DomainError("face coordinates must be nonnegative");
            if (i > 0 && (*v)[i] > (*v)[i - 1]) throw DomainError("face coordinates must be decreasing");
            sum += (*v)[i];
        }
    }
    if (sum != 1) throw DomainError("face coordinates must sum to 1");
}

OmegaPoint iota_n(const YoungDiagram& lambda) {
    FrobeniusCoords f = frobenius(lambda);
    Rational n = lambda.size();
    std::vector<Rational> a = f.modified_p(), b = f.modified_q();
    for (auto& v : a) v /= n;
    for (auto& v : b) v /= n;
    return {std::move(a), std::move(b)};
}

OmegaFacePoint bar_iota_n(const YoungDiagram& lambda, int p, int q) {
    check_block(p, q);
    int free = lambda.size() - p * q;
    if (free <= 0) throw DomainError("bar iota needs n > pq");
    auto [plus, minus] = split_pm(lambda, p, q);
    std::vector<Rational> a, b;
    for (int i = 1; i <= p; ++i) a.emplace_back(plus.row(i), free);
    for (int r = 1; r <= q; ++r) b.emplace_back(minus.row(r), free);
    for (auto& v : a) v.canonicalize();
    for (auto& v : b) v.canonicalize();
    return {std::move(a), std::move(b)};
}

Rational spectral_density(const OmegaFacePoint& omega) {
    return vandermonde_sq(omega.alpha) * vandermonde_sq(omega.beta);
}

Rational spectral_normalization(int p, int q) {
    check_block(p, q);
    const int vars = p + q;
    using Poly = std::map<std::vector<int>, Integer>;
    Poly poly{{std::vector<int>(vars, 0), Integer(1)}};
    auto times_diff = [&](int i, int j) {
        Poly out;
        for (const auto& [e, c] : poly) {
            auto ei = e, ej = e;
            ++ei[i];
            ++ej[j];
            out[ei] += c;
            out[ej] -= c;
        }
        poly = std::move(out);
    };
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) times_diff(i, j), times_diff(i, j);
    for (int i = p; i < vars; ++i)
        for (int j = i + 1; j < vars; ++j) times_diff(i, j), times_diff(i, j);
    // integral of x^e over the simplex: prod e_i! / (|e| + vars - 1)!
    Rational total = 0;
    for (const auto& [e, c] : poly) {
        if (c == 0) continue;
        Integer num = c;
        int deg = 0;
        for (int v : e) {
            num *= factorial(static_cast<unsigned long>(v));
            deg += v;
        }
        total += make_rational(num, factorial(static_cast<unsigned long>(deg + vars - 1)));
    }
    return total / Rational(factorial(static_cast<unsigned long>(p)) * factorial(static_cast<unsigned long>(q)));
}

Rational spectral_density_normalized(const OmegaFacePoint& omega) {
    return spectral_density(omega) /
           spectral_normalization(static_cast<int>(omega.alpha.size()), static_cast<int>(omega.beta.size()));
}

double mpq_limit_density(const OmegaFacePoint& omega) {
    int p = static_cast<int>(omega.alpha.size()), q = static_cast<int>(omega.beta.size());
    Rational den = 1;
    for (const auto& a : omega.alpha)
        for (const auto& b : omega.beta) den *= a + b;
    if (den == 0) throw DomainError("density is singular on the boundary alpha_i + beta_r = 0");
    Rational v = m_pq_constant(p, q) * spectral_density(omega) / den;
    return v.get_d();
}

bool cauchy_det_check(const std::vector<Rational>& x, const std::vector<Rational>& y) {
    const std::size_t p = x.size(), q = y.size();
    if (p > q) throw DomainError("the Cauchy identity needs p <= q");
    for (const auto* v : {&x, &y})
        for (std::size_t i = 0; i < v->size(); ++i)
            for (std::size_t j = i + 1; j < v->size(); ++j)
                if ((*v)[i] == (*v)[j]) throw DomainError("entries must be distinct");
    Rational lhs = vandermonde(x) * vandermonde(y);
    for (const auto& a : x)
        for (const auto& b : y) {
            if (a + b == 0) throw DomainError("x_i + y_j vanishes");
            lhs /= a + b;
        }
    Rational rhs = 0;
    std::vector<bool> pick(q, false);
    std::fill(pick.end() - static_cast<long>(p), pick.end(), true);
    do {
        std::vector<std::size_t> order;
        std::vector<Rational> rest;
        std::vector<std::size_t> chosen;
        for (std::size_t i = 0; i < q; ++i)
            if (!pick[i]) {
                order.push_back(i);
                rest.push_back(y[i]);
            }
        for (std::size_t i = 0; i < q; ++i)
            if (pick[i]) {
                order.push_back(i);
                chosen.push_back(i);
            }
        int inversions = 0;
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = i + 1; j < q; ++j)
                if (order[i] > order[j]) ++inversions;
        std::vector<std::vector<Rational>> m(p, std::vector<Rational>(p));
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < p; ++j) m[i][j] = 1 / (x[i] + y[chosen[j]]);
        Rational term = vandermonde(rest) * determinant(std::move(m));
        rhs += inversions % 2 == 0 ? term : Rational(-term);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return lhs == rhs;
}

std::vector<double> pushforward_alpha1(const std::vector<PathSample>& samples, int n, int p, int q, Embedding e) {
    std::vector<double> out;
    out.reserve(samples.size());
    for (const auto& path : samples) {
        YoungDiagram lambda = diagram_at(path, n);
        if (e == Embedding::Iota) {
            OmegaPoint w = iota_n(lambda);
            out.push_back(w.alpha().empty() ? 0.0 : w.alpha().front().get_d());
        } else {
            OmegaFacePoint w = bar_iota_n(lambda, p, q);
            out.push_back(w.alpha.empty() ? 0.0 : w.alpha.front().get_d());
        }
    }
    return out;
}

Histogram histogram(const std::vector<double>& values, int bins, double lo, double hi) {
    if (bins < 1 || !(hi > lo)) throw DomainError("histogram needs bins >= 1 and hi > lo");
    Histogram h;
    h.lo = lo;
    h.hi = hi;
    h.counts.assign(bins, 0);
    for (double v : values) {
        if (v < lo || v > hi) continue;
        int idx = static_cast<int>((v - lo) / h.width());
        ++h.counts[std::min(idx, bins - 1)];
    }
    return h;
}

Histogram empirical_pushforward(const std::vector<PathSample>& samples, int n, int p, int q, Embedding e, int bins) {
    Histogram h = histogram(pushforward_alpha1(samples, n, p, q, e), bins);
    if (p + q <= 2 && p >= 1) {
        double total = static_cast<double>(samples.size());
        for (int i = 0; i < bins; ++i) {
            double a = h.lo + i * h.width(), b = a + h.width();
            h.expected.push_back(total * (alpha1_limit_cdf(p, q, b) - alpha1_limit_cdf(p, q, a)));
        }
    }
    return h;
}

double alpha1_limit_cdf(int p, int q, double a) {
    if (p == 1 && q == 0) return a < 1.0 ? 0.0 : 1.0;
    if (p == 1 && q == 1) return std::clamp(a, 0.0, 1.0);
    if (p == 2 && q == 0) {
        if (a <= 0.5) return 0.0;
        if (a >= 1.0) return 1.0;
        double s = 2.0 * a - 1.0;
        return s * s * s;
    }
    throw DomainError("limit CDF of alpha_1 is tabulated only for faces (1,0), (1,1), (2,0)");
}

double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw DomainError("KS distance of an empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double f = cdf(samples[i]);
        d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
    }
    return d;
}

}  // namespace ygraph
