#include "ygraph/permutations.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ygraph {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > degree() || seen[v]) throw DomainError("images do not form a permutation");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int a, int b) {
    Permutation x = identity(n);
    std::swap(x.images_.at(a - 1), x.images_.at(b - 1));
    return x;
}

Permutation Permutation::cycle(int n, const std::vector<int>& elements) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    for (std::size_t i = 0; i < elements.size(); ++i)
        im.at(elements[i] - 1) = elements[(i + 1) % elements.size()];
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < degree(); ++i) inv[images_[i] - 1] = i + 1;
    Permutation r;
    r.images_ = std::move(inv);
    return r;
}

Permutation Permutation::embed(int n) const {
    if (n < degree()) throw DomainError("cannot embed into a smaller symmetric group");
    Permutation r = *this;
    for (int i = degree() + 1; i <= n; ++i) r.images_.push_back(i);
    return r;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size() + 1, false);
    for (int start = 1; start <= degree(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cyc;
        for (int i = start; !seen[i]; i = (*this)(i)) {
            seen[i] = true;
            cyc.push_back(i);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    int n = std::max(a.degree(), b.degree());
    Permutation ae = a.embed(n), be = b.embed(n);
    Permutation r;
    r.images_.resize(n);
    for (int i = 1; i <= n; ++i) r.images_[i - 1] = ae(be(i));
    return r;
}

int cycle_count(const Permutation& x) { return static_cast<int>(x.cycles().size()); }

YoungDiagram cycle_type(const Permutation& x) {
    std::vector<int> lengths;
    for (const auto& c : x.cycles()) lengths.push_back(static_cast<int>(c.size()));
    std::sort(lengths.rbegin(), lengths.rend());
    return YoungDiagram(std::move(lengths));
}

int sign(const Permutation& x) { return (x.degree() - cycle_count(x)) % 2 == 0 ? 1 : -1; }

Permutation derivative_projection(const Permutation& x) {
    int n1 = x.degree();
    if (n1 < 2) throw DomainError("canonical projection needs degree at least 2");
    std::vector<int> im(n1 - 1);
    for (int i = 1; i < n1; ++i) im[i - 1] = x(i) == n1 ? x(n1) : x(i);
    return Permutation(std::move(im));
}

std::vector<Permutation> projection_fiber(const Permutation& x) {
    int n = x.degree();
    std::vector<Permutation> out;
    out.push_back(x.embed(n + 1));
    for (int j = 1; j <= n; ++j) {
        // insert n+1 right before j
        std::vector<int> im = x.embed(n + 1).images();
        int pred = x.inverse()(j);
        im[pred - 1] = n + 1;
        im[n] = j;
        out.emplace_back(std::move(im));
    }
    return out;
}

Code encode(const Permutation& x) {
    int n = x.degree();
    Code code(n, 0);
    Permutation cur = x;
    for (int m = n; m >= 2; --m) {
        code[m - 1] = cur(m) == m ? 0 : cur(m);
        cur = derivative_projection(cur);
    }
    return code;
}

Permutation decode(const Code& code) {
    int n = static_cast<int>(code.size());
    std::vector<int> im;
    std::vector<int> pre;  // inverse images
    im.reserve(n);
    pre.reserve(n);
    for (int m = 1; m <= n; ++m) {
        int j = code[m - 1];
        if (j < 0 || j > m - 1) throw DomainError("code coordinate out of range");
        if (j == 0) {
            im.push_back(m);
            pre.push_back(m);
        } else {
            int k = pre[j - 1];
            im[k - 1] = m;
            im.push_back(j);
            pre.push_back(k);
            pre[j - 1] = m;
        }
    }
    return Permutation(std::move(im));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    Code code(n, 0);
    while (true) {
        out.push_back(decode(code));
        int m = n;
        while (m >= 1 && code[m - 1] == m - 1) code[--m] = 0;
        if (m == 0) break;
        ++code[m - 1];
    }
    return out;
}

GPair::GPair(Permutation a, Permutation b) : g1(std::move(a)), g2(std::move(b)) {
    if (g1.degree() != g2.degree()) throw DomainError("both components of g must have the same degree");
}

GPair operator*(const GPair& g, const GPair& h) {
    int m = std::max(g.degree(), h.degree());
    return {g.g1.embed(m) * h.g1.embed(m), g.g2.embed(m) * h.g2.embed(m)};
}

Permutation act(const Permutation& x, const GPair& g) {
    if (g.degree() > x.degree()) throw DomainError("g acts on permutations of at least its own degree");
    int n = x.degree();
    return g.g2.embed(n).inverse() * x * g.g1.embed(n);
}

int cocycle(const Permutation& x, const GPair& g) { return cycle_count(act(x, g)) - cycle_count(x); }

EwensParam::EwensParam(Rational t) : t_(std::move(t)) {
    if (*t_ < 0) throw DomainError("Ewens parameter must be nonnegative");
}

const Rational& EwensParam::value() const {
    if (!t_) throw DomainError("Ewens parameter is infinite");
    return *t_;
}

std::string EwensParam::to_string() const { return t_ ? ygraph::to_string(*t_) : "inf"; }

EwensParam parse_ewens_param(std::string_view text) {
    if (text == "inf") return EwensParam::infinity();
    return EwensParam(parse_rational(text));
}

Rational ewens_weight(const Permutation& x, const EwensParam& t) {
    int n = x.degree();
    if (t.is_infinite()) return x == Permutation::identity(n) ? 1 : 0;
    const Rational& tv = t.value();
    int cycles = cycle_count(x);
    if (tv == 0) return cycles == 1 ? Rational(1, factorial(static_cast<unsigned long>(n - 1))) : Rational(0);
    return pow(tv, cycles) / rising(tv, static_cast<unsigned long>(n));
}

Rational ewens_code_weight(int m, int value, const EwensParam& t) {
    if (value < 0 || value > m - 1) return 0;
    if (m == 1) return 1;
    if (t.is_infinite()) return value == 0 ? 1 : 0;
    const Rational& tv = t.value();
    Rational denom = tv + (m - 1);
    return value == 0 ? Rational(tv / denom) : Rational(1 / denom);
}

Permutation ewens_sample(int n, const EwensParam& t, Rng& rng) {
    if (n < 1) throw DomainError("sample size must be positive");
    Code code(n, 0);
    double tv = t.is_infinite() ? 0.0 : t.value().get_d();
    for (int m = 2; m <= n; ++m) {
        if (t.is_infinite()) continue;
        if (tv == 0.0) {
            code[m - 1] = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(m - 1)));
            continue;
        }
        double x = rng.uniform() * (tv + m - 1);
        if (x < tv) continue;
        code[m - 1] = 1 + std::min(m - 2, static_cast<int>(std::floor(x - tv)));
    }
    return decode(code);
}

Permutation ewens_sample(int n, const EwensParam& t, std::uint64_t seed) {
    Rng rng(seed);
    return ewens_sample(n, t, rng);
}

Rational rn_derivative(const Permutation& x, const GPair& g, const Rational& t) {
    if (t <= 0) throw DomainError("Radon-Nikodym derivative needs t > 0");
    return pow(t, cocycle(x, g));
}

KakutaniFactor kakutani_factor(int n, const Rational& s, const Rational& t) {
    if (s <= 0 || t <= 0) throw DomainError("Kakutani factor needs s, t > 0");
    if (n < 1) throw DomainError("Kakutani factor index starts at 1");
    KakutaniFactor f;
    double m = n - 1;
    double sd = s.get_d(), td = t.get_d();
    double u = std::sqrt(sd * td);
    // log form keeps precision when the factor is within rounding of 1
    double log_a = (m == 0 ? 0.0 : std::log1p(u / m) - 0.5 * (std::log1p(sd / m) + std::log1p(td / m)));
    f.log_value = log_a;
    f.value = std::exp(log_a);
    Rational root;
    if (is_rational_square(Rational(s * t), &root)) {
        Rational num = root + (n - 1);
        f.exact_square = Rational(num * num / ((s + (n - 1)) * (t + (n - 1))));
        Rational a;
        if (is_rational_square(*f.exact_square, &a)) f.exact = a;
        if (f.exact) f.value = f.exact->get_d();
    }
    return f;
}

std::string to_json(const Permutation& x) { return nlohmann::json(x.images()).dump(); }

Permutation parse_permutation(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed permutation: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("permutation must be a JSON array");
    std::vector<int> im;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError("permutation entries must be integers");
        im.push_back(v.get<int>());
    }
    try {
        return Permutation(std::move(im));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

}  // namespace ygraph
