#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ygraph {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when a textual value cannot be parsed.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an operation's precondition is violated by its arguments.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a requested size is beyond what the exact enumerations support.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact complex number with rational parts.
struct Gaussian {
    Rational re;
    Rational im;

    Gaussian() = default;
    Gaussian(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    Gaussian conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    Gaussian& operator+=(const Gaussian& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Gaussian& operator-=(const Gaussian& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Gaussian& operator*=(const Gaussian& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Gaussian& operator/=(const Gaussian& o);

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
};

/// Reduced "num/den" form; the denominator is always printed.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
std::string to_string(const Gaussian& g);

/// Accepts "a", "-a", "a/b" with integer a, b (b != 0). Result is canonicalized.
Rational parse_rational(std::string_view text);

/// Accepts "re,im" (each a rational) or a single rational for a real value.
Gaussian parse_gaussian(std::string_view text);

/// num / den in lowest terms. Throws DomainError for den = 0.
Rational make_rational(const Integer& num, const Integer& den);

Rational pow(const Rational& base, long exponent);
Gaussian pow(const Gaussian& base, unsigned long exponent);

Integer factorial(unsigned long n);

/// Rising factorial x (x+1) ... (x+n-1); equals 1 for n = 0.
Rational rising(const Rational& x, unsigned long n);
Gaussian rising(const Gaussian& x, unsigned long n);

/// True iff q is the square of a rational; the root is written to *root when given.
bool is_rational_square(const Rational& q, Rational* root = nullptr);

/// Determinant of a square matrix by exact Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace ygraph
