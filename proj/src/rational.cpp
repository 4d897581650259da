#include "ygraph/rational.hpp"

#include <cctype>

namespace ygraph {

Gaussian& Gaussian::operator/=(const Gaussian& o) {
    Rational d = o.norm();
    if (d == 0) throw DomainError("division by zero Gaussian rational");
    Gaussian num = *this * o.conj();
    re = num.re / d;
    im = num.im / d;
    return *this;
}

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Gaussian& g) { return to_string(g.re) + "," + to_string(g.im); }

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    std::size_t start = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
    if (start == s.size()) throw ParseError("malformed rational: '" + std::string(whole) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("malformed rational: '" + std::string(whole) + "'");
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    auto slash = s.find('/');
    Rational q;
    if (slash == std::string_view::npos) {
        q = Rational(parse_integer(s, text));
    } else {
        Integer num = parse_integer(trim(s.substr(0, slash)), text);
        Integer den = parse_integer(trim(s.substr(slash + 1)), text);
        if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
        q = Rational(num, den);
        q.canonicalize();
    }
    return q;
}

Gaussian parse_gaussian(std::string_view text) {
    auto comma = text.find(',');
    if (comma == std::string_view::npos) return Gaussian(parse_rational(text));
    return Gaussian(parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1)));
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw DomainError("zero raised to a negative power");
        Rational inv = 1 / base;
        return pow(inv, -exponent);
    }
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return r;
}

Gaussian pow(const Gaussian& base, unsigned long exponent) {
    Gaussian result(Rational(1));
    Gaussian b = base;
    while (exponent > 0) {
        if (exponent & 1UL) result *= b;
        exponent >>= 1;
        if (exponent > 0) b *= b;
    }
    return result;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational rising(const Rational& x, unsigned long n) {
    Rational r = 1;
    for (unsigned long j = 0; j < n; ++j) r *= x + j;
    return r;
}

Gaussian rising(const Gaussian& x, unsigned long n) {
    Gaussian r(Rational(1));
    for (unsigned long j = 0; j < n; ++j) r *= Gaussian(x.re + j, x.im);
    return r;
}

bool is_rational_square(const Rational& q, Rational* root) {
    if (q < 0) return false;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
    if (root) {
        Integer n, d;
        mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
        *root = Rational(n, d);
        root->canonicalize();
    }
    return true;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

}  // namespace ygraph
