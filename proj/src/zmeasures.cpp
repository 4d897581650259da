#include "ygraph/zmeasures.hpp"

#include <algorithm>
#include <mutex>
#include <utility>

namespace ygraph {

ZParam ZParam::finite(Rational re, Rational im) {
    if (re == 0 && im == 0) throw DomainError("z = 0 is not allowed; use the zero limit");
    ZParam z(Kind::Finite);
    z.re_ = std::move(re);
    z.im_ = std::move(im);
    return z;
}

ZParam ZParam::integer(int k) { return k == 0 ? zero_limit() : finite(k); }

Rational ZParam::t() const {
    switch (kind_) {
        case Kind::Finite: return re_ * re_ + im_ * im_;
        case Kind::ZeroLimit: return 0;
        case Kind::Infinity: break;
    }
    throw DomainError("t is infinite for z = infinity");
}

Rational ZParam::shifted_norm(int c) const {
    if (kind_ == Kind::Infinity) throw DomainError("|z + c|^2 is infinite for z = infinity");
    Rational r = re_ + c;
    return r * r + im_ * im_;
}

bool ZParam::is_integer() const {
    if (kind_ == Kind::ZeroLimit) return true;
    return kind_ == Kind::Finite && im_ == 0 && re_.get_den() == 1;
}

int ZParam::integer_value() const {
    if (!is_integer()) throw DomainError("z is not an integer");
    return kind_ == Kind::ZeroLimit ? 0 : static_cast<int>(re_.get_num().get_si());
}

ZParam ZParam::upper_half_plane() const {
    if (kind_ != Kind::Finite || im_ >= 0) return *this;
    return conj();
}

ZParam ZParam::conj() const {
    ZParam z = *this;
    z.im_ = -im_;
    return z;
}

std::string ZParam::to_string() const {
    switch (kind_) {
        case Kind::ZeroLimit: return "0lim";
        case Kind::Infinity: return "inf";
        case Kind::Finite: break;
    }
    return ygraph::to_string(re_) + "," + ygraph::to_string(im_);
}

ZParam parse_zparam(std::string_view text) {
    if (text == "inf") return ZParam::infinity();
    if (text == "0lim") return ZParam::zero_limit();
    Gaussian g = parse_gaussian(text);
    try {
        return ZParam::finite(g.re, g.im);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

namespace {

Rational plancherel(const YoungDiagram& lambda) {
    Integer d = dim(lambda);
    return make_rational(d * d, factorial(static_cast<unsigned long>(lambda.size())));
}

}  // namespace

Rational mz_weight(const YoungDiagram& lambda, const ZParam& z) {
    if (lambda.empty()) return 1;
    int n = lambda.size();
    switch (z.kind()) {
        case ZParam::Kind::Infinity: return plancherel(lambda);
        case ZParam::Kind::ZeroLimit: {
            if (!is_hook(lambda)) return 0;
            Integer arm = factorial(static_cast<unsigned long>(lambda.row(1) - 1));
            Integer leg = factorial(static_cast<unsigned long>(lambda.length() - 1));
            Rational w(arm * arm * leg * leg, factorial(static_cast<unsigned long>(n - 1)));
            w.canonicalize();
            return w * plancherel(lambda);
        }
        case ZParam::Kind::Finite: break;
    }
    Rational num = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.row(i); ++j) num *= z.shifted_norm(j - i);
    if (num == 0) return 0;
    return num / rising(z.t(), static_cast<unsigned long>(n)) * plancherel(lambda);
}

bool support_check(const YoungDiagram& lambda, const ZParam& z) {
    switch (z.kind()) {
        case ZParam::Kind::Infinity: return true;
        case ZParam::Kind::ZeroLimit: return is_hook(lambda);
        case ZParam::Kind::Finite: break;
    }
    if (!z.is_integer()) return true;
    int k = z.integer_value();
    return k > 0 ? lambda.length() <= k : lambda.row(1) <= -k;
}

Rational dim_ratio(const YoungDiagram& lambda, const YoungDiagram& nu) {
    auto box = edge_box(lambda, nu);
    if (!box) throw DomainError("not an edge of the Young graph");
    // hooks of lambda in the row and column of the new box grow by one
    Integer num = 1, den = 1;
    for (int j = 1; j < box->col; ++j) {
        int h = hook_length(lambda, {box->row, j});
        num *= h;
        den *= h + 1;
    }
    for (int i = 1; i < box->row; ++i) {
        int h = hook_length(lambda, {i, box->col});
        num *= h;
        den *= h + 1;
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational transition(const YoungDiagram& lambda, const YoungDiagram& nu, const ZParam& z) {
    auto box = edge_box(lambda, nu);
    if (!box) throw DomainError("not an edge of the Young graph");
    if (lambda.empty()) return 1;
    Rational ratio = dim_ratio(lambda, nu);
    if (z.kind() == ZParam::Kind::Infinity) return ratio;
    int n = lambda.size();
    return z.shifted_norm(content(*box)) / (z.t() + n) * ratio;
}

Rational cotransition(const YoungDiagram& mu, const YoungDiagram& lambda) {
    if (!edge_box(mu, lambda)) return 0;
    Rational r(dim(mu), dim(lambda));
    r.canonicalize();
    return r;
}

Rational LevelMeasure::total() const {
    Rational s = 0;
    for (const auto& [lambda, w] : weights) s += w;
    return s;
}

Rational LevelMeasure::at(const YoungDiagram& lambda) const {
    auto it = weights.find(lambda);
    return it == weights.end() ? Rational(0) : it->second;
}

LevelMeasure level_measure(int n, const ZParam& z) {
    if (n < 0) throw DomainError("level must be nonnegative");
    if (n > kMaxEnumeratedLevel) throw InfeasibleError("level too large for exact enumeration");
    static std::mutex mutex;
    static std::map<std::pair<int, std::string>, LevelMeasure> cache;
    auto key = std::make_pair(n, z.to_string());
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    LevelMeasure m;
    m.n = n;
    for (const auto& lambda : partitions_of(n)) m.weights.emplace(lambda, mz_weight(lambda, z));
    std::lock_guard lock(mutex);
    cache.emplace(key, m);
    return m;
}

bool check_coherency(const LevelMeasure& hi, const LevelMeasure& lo) {
    if (hi.n != lo.n + 1) throw DomainError("coherency compares consecutive levels");
    std::map<YoungDiagram, Rational> pushed;
    for (const auto& [lambda, w] : hi.weights) {
        if (w == 0) continue;
        for (const Box& b : removable(lambda)) {
            YoungDiagram mu = remove_box(lambda, b);
            pushed[mu] += cotransition(mu, lambda) * w;
        }
    }
    for (const auto& mu : partitions_of(lo.n)) {
        if (lo.at(mu) != (pushed.count(mu) ? pushed[mu] : Rational(0))) return false;
    }
    for (const auto& [mu, w] : lo.weights)
        if (mu.size() != lo.n) return false;
    return true;
}

YoungDiagram PathSample::end() const {
    std::vector<int> parts = start.parts();
    for (const Box& b : boxes) {
        if (b.row > static_cast<int>(parts.size())) parts.push_back(0);
        ++parts[b.row - 1];
    }
    return YoungDiagram(std::move(parts));
}

std::vector<YoungDiagram> PathSample::diagrams() const {
    std::vector<YoungDiagram> out{start};
    for (const Box& b : boxes) out.push_back(add_box(out.back(), b));
    return out;
}

std::vector<int> PathSample::contents() const {
    std::vector<int> out;
    for (const Box& b : boxes) out.push_back(content(b));
    return out;
}

namespace {

struct Kernel {
    ZParam::Kind kind;
    double t = 0.0;
    double re = 0.0;
    double im = 0.0;

    explicit Kernel(const ZParam& z) : kind(z.kind()) {
        if (kind == ZParam::Kind::Finite) {
            t = z.t().get_d();
            re = z.re().get_d();
            im = z.im().get_d();
        }
    }
};

// Kerov interlacing form of dim nu / ((n+1) dim lambda) over outer contents x and inner contents y.
void kernel_row(const std::vector<int>& outer, const std::vector<int>& inner, const Kernel& k, double n,
                std::vector<double>& row) {
    row.assign(outer.size(), 0.0);
    for (std::size_t a = 0; a < outer.size(); ++a) {
        double x = outer[a];
        double ratio = 1.0;
        // interleave factors to keep the running product near 1
        for (std::size_t i = 0, j = 0; i < outer.size() || j < inner.size();) {
            if (j < inner.size()) ratio *= x - inner[j++];
            if (i < outer.size()) {
                if (i != a) ratio /= x - outer[i];
                ++i;
            }
        }
        double weight = 1.0;
        switch (k.kind) {
            case ZParam::Kind::Infinity: break;
            case ZParam::Kind::ZeroLimit: weight = x * x / n; break;
            case ZParam::Kind::Finite: weight = ((k.re + x) * (k.re + x) + k.im * k.im) / (k.t + n); break;
        }
        row[a] = std::max(0.0, weight * ratio);
    }
}

void corner_contents(const std::vector<int>& parts, std::vector<int>& outer, std::vector<int>& inner,
                     std::vector<int>* outer_rows = nullptr) {
    outer.clear();
    inner.clear();
    if (outer_rows) outer_rows->clear();
    const int len = static_cast<int>(parts.size());
    for (int i = 1; i <= len + 1; ++i) {
        int here = i <= len ? parts[i - 1] : 0;
        if (i == 1 || parts[i - 2] > here) {
            outer.push_back(here + 1 - i);
            if (outer_rows) outer_rows->push_back(i);
        }
        if (i <= len && (i == len || parts[i] < here)) inner.push_back(here - i);
    }
}

}  // namespace

std::vector<double> transition_row(const YoungDiagram& lambda, const std::vector<Box>& corners, const ZParam& z) {
    if (lambda.empty()) return std::vector<double>(corners.size(), 1.0);
    std::vector<int> outer, inner;
    for (const Box& b : corners) outer.push_back(content(b));
    for (const Box& b : removable(lambda)) inner.push_back(content(b));
    std::vector<double> row;
    kernel_row(outer, inner, Kernel(z), lambda.size(), row);
    return row;
}

namespace {

void grow(std::vector<int>& parts, PathSample& path, const ZParam& z, int n_max, Rng& rng) {
    const Kernel kernel(z);
    int size = 0;
    for (int v : parts) size += v;
    std::vector<int> outer, inner, rows;
    std::vector<double> row;
    while (path.length() < n_max) {
        corner_contents(parts, outer, inner, &rows);
        std::size_t pick = 0;
        if (size > 0) {
            kernel_row(outer, inner, kernel, size, row);
            double total = 0.0;
            for (double v : row) total += v;
            double u = rng.uniform() * total;
            pick = row.size();
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (row[k] > 0.0) pick = k;
                if (u < row[k]) break;
                u -= row[k];
            }
        }
        int r = rows[pick];
        if (r > static_cast<int>(parts.size())) parts.push_back(0);
        ++parts[r - 1];
        ++size;
        path.boxes.push_back({r, parts[r - 1]});
    }
}

}  // namespace

PathSample sample_path(const ZParam& z, int n_max, std::uint64_t seed, const YoungDiagram& start) {
    if (!start.empty() && !support_check(start, z)) throw DomainError("start diagram is outside the support");
    Rng rng(seed);
    PathSample path;
    path.start = start;
    std::vector<int> parts = start.parts();
    grow(parts, path, z, n_max, rng);
    return path;
}

void extend_path(PathSample& path, const ZParam& z, int steps, Rng& rng) {
    std::vector<int> parts = path.end().parts();
    grow(parts, path, z, path.length() + steps, rng);
}

Rational HarmonicFunction::operator()(const YoungDiagram& lambda) const {
    return weight_(lambda) / Rational(dim(lambda));
}

Rational HarmonicFunction::residual(const YoungDiagram& lambda) const {
    Rational r = (*this)(lambda);
    for (const Box& b : addable(lambda)) r -= (*this)(add_box(lambda, b));
    return r;
}

HarmonicFunction harmonic_of(const ZParam& z) {
    return HarmonicFunction([z](const YoungDiagram& lambda) { return mz_weight(lambda, z); });
}

HarmonicFunction harmonic_of(const LevelMeasure& lo, const LevelMeasure& hi) {
    return HarmonicFunction([lo, hi](const YoungDiagram& lambda) {
        return lambda.size() == lo.n ? lo.at(lambda) : hi.at(lambda);
    });
}

std::vector<Rational> onerow_genfun(const ZParam& z, int count) {
    if (!z.is_finite()) throw DomainError("the one-row generating function needs finite z");
    Rational t = z.t();
    std::vector<Rational> out;
    Rational coeff = 1;
    for (int n = 0; n < count; ++n) {
        out.push_back(coeff);
        // (z)_{n+1} (zbar)_{n+1} / (t)_{n+1} (n+1)! from the n-th term
        coeff *= z.shifted_norm(n) / ((t + n) * (n + 1));
    }
    return out;
}

}  // namespace ygraph
