#include "ygraph/characters.hpp"
#include "ygraph/permutations.hpp"

#include <doctest.h>

using namespace ygraph;

namespace {

const ZParam kZ = ZParam::finite(Rational(3, 2), Rational(2, 5));

// chi^lambda(rho) by the Frobenius formula: coefficient extraction from p_rho * Vandermonde.
Integer frobenius_character(const YoungDiagram& lambda, const YoungDiagram& rho) {
    int m = lambda.length();
    std::map<std::vector<int>, Integer> poly;
    // Vandermonde prod_{i<j}(x_i - x_j)
    poly[std::vector<int>(m, 0)] = 1;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            std::map<std::vector<int>, Integer> next;
            for (const auto& [e, c] : poly) {
                auto a = e;
                ++a[i];
                next[a] += c;
                auto b = e;
                ++b[j];
                next[b] -= c;
            }
            poly = std::move(next);
        }
    for (int part : rho.parts()) {
        std::map<std::vector<int>, Integer> next;
        for (const auto& [e, c] : poly)
            for (int i = 0; i < m; ++i) {
                auto a = e;
                a[i] += part;
                next[a] += c;
            }
        poly = std::move(next);
    }
    std::vector<int> target(m);
    for (int i = 0; i < m; ++i) target[i] = lambda.row(i + 1) + m - 1 - i;
    auto it = poly.find(target);
    return it == poly.end() ? Integer(0) : it->second;
}

}  // namespace

TEST_CASE("class data") {
    CHECK(centralizer_order({2, 1, 1}) == 4);
    CHECK(class_size({2, 1, 1}) == 6);
    CHECK(multiplicities({3, 1, 1}) == std::vector<int>{0, 2, 0, 1});
    for (int n = 1; n <= 7; ++n) {
        Integer total = 0;
        for (const auto& rho : partitions_of(n)) total += class_size(rho);
        CHECK(total == factorial(n));
    }
}

TEST_CASE("irreducible characters") {
    CHECK(mn_character({2, 1}, {1, 1, 1}) == 2);
    CHECK(mn_character({2, 1}, {3}) == -1);
    for (const auto& rho : partitions_of(5)) CHECK(mn_character({5}, rho) == 1);
    CHECK_THROWS_AS(mn_character({2, 1}, {2}), DomainError);
    for (int n = 1; n <= 7; ++n) {
        auto ps = partitions_of(n);
        for (const auto& l : ps) {
            CHECK(mn_character(l, YoungDiagram(std::vector<int>(n, 1))) == dim(l));
            for (const auto& rho : ps) {
                if (n <= 6) CHECK(mn_character(l, rho) == frobenius_character(l, rho));
                Integer sgn = 1;
                for (int part : rho.parts()) sgn *= part % 2 ? 1 : -1;
                CHECK(mn_character(conjugate(l), rho) == sgn * mn_character(l, rho));
            }
            for (const auto& m : ps) {
                Integer s = 0;
                for (const auto& rho : ps) s += class_size(rho) * mn_character(l, rho) * mn_character(m, rho);
                CHECK(s == (l == m ? factorial(n) : Integer(0)));
            }
        }
    }
}

TEST_CASE("z-power expansion") {
    CHECK(zpow_coefficient({1}, kZ) == kZ.value());
    CHECK(zpow_expansion_check(1, kZ));
    CHECK(zpow_expansion_check(3, kZ));
    for (int n = 1; n <= 6; ++n) CHECK(zpow_expansion_check(n, ZParam::finite(Rational(-5, 3), Rational(1, 7))));
    CoefficientFn perturbed = [](const YoungDiagram& l) {
        Gaussian c = zpow_coefficient(l, kZ);
        if (l == YoungDiagram({2, 1})) c += Gaussian(Rational(1, 1000));
        return c;
    };
    CHECK_FALSE(zpow_expansion_check(3, kZ, perturbed));
}

TEST_CASE("characters of M_z") {
    for (int n = 1; n <= 6; ++n) CHECK(chi_z_value(YoungDiagram(std::vector<int>(n, 1)), kZ) == Gaussian(1));
    Rational a(3, 2), b(2, 5), t = a * a + b * b;
    CHECK(chi_z_value({2}, kZ) == Gaussian(2 * a / (t + 1)));
    for (const auto& rho : partitions_of(5)) CHECK(chi_z_value(rho, ZParam::finite(1)) == Gaussian(1));
    for (int n = 1; n <= 5; ++n) {
        auto f = f_z_values(n, kZ);
        for (const auto& [rho, v] : f) {
            Rational sq = 1;
            for (int k = 0; k < rho.length(); ++k) sq *= kZ.t();
            CHECK(v.squared == Rational(factorial(n)) * sq / rising(kZ.t(), n));
            CHECK(v.core == pow(kZ.value(), static_cast<unsigned long>(rho.length())));
        }
    }
    for (const auto& [rho, v] : f_z_values(4, ZParam::finite(1))) {
        CHECK(v.squared == 1);
        CHECK(v.core == Gaussian(1));
    }
}

TEST_CASE("theta coefficients") {
    for (const auto& [l, c] : theta_coeffs(4, ZParam::finite(Rational(5, 2)))) CHECK(c == Gaussian(1));
    ZParam z = ZParam::finite(Rational(1, 2), Rational(1, 2));
    auto one = theta_coeffs(1, z);
    CHECK(one.at({1}) == z.value().conj() / z.value());
    for (int n = 1; n <= 6; ++n)
        for (const auto& [l, c] : theta_coeffs(n, z)) CHECK(c.norm() == 1);
    Gaussian expect(Rational(1));
    for (int c : {0, 1, -1}) expect *= (z.value().conj() + Gaussian(c)) / (z.value() + Gaussian(c));
    CHECK(theta_coeffs(3, z).at({2, 1}) == expect);
    CHECK_THROWS_AS(theta_coeffs(3, ZParam::finite(2)), DomainError);
}

TEST_CASE("schur identity") {
    CHECK(schur_identity_check(2, ZParam::finite(1), 2));
    CHECK(schur_identity_check(3, ZParam::finite(1), 3));
    CHECK(schur_identity_check(2, kZ, 0));
    CHECK(schur_identity_check(4, ZParam::finite(Rational(3, 2)), 4));
    CHECK(schur_identity_check(3, kZ, 3));
    CHECK_THROWS_AS(schur_identity_check(7, kZ, 3), DomainError);
    auto s21 = schur_polynomial({2, 1}, 3);
    CHECK(s21.at({1, 1, 1}) == Gaussian(2));
    CHECK(s21.at({2, 1, 0}) == Gaussian(1));
    for (const auto& [e, c] : schur_polynomial({1, 1, 1, 1}, 3)) CHECK(c == Gaussian(0));
}

TEST_CASE("thoma points") {
    OmegaPoint row({Rational(1)}, {});
    OmegaPoint half({Rational(1, 2)}, {Rational(1, 2)});
    OmegaPoint col({}, {Rational(1)});
    OmegaPoint plancherel;
    CHECK(plancherel.gamma() == 1);
    CHECK_THROWS_AS(OmegaPoint({Rational(2, 3)}, {Rational(1, 2)}), DomainError);
    CHECK_THROWS_AS(OmegaPoint({Rational(-1, 3)}, {}), DomainError);
    CHECK(half.in_face(1, 1));
    CHECK_FALSE(half.in_face(1, 0));
    for (int k = 1; k <= 6; ++k) CHECK(tilde_p_k(row, k) == 1);
    CHECK(tilde_p_k(half, 2) == 0);
    CHECK(tilde_p_k(half, 1) == 1);
    CHECK(tilde_p_k(col, 3) == 1);

    auto h1 = h_series(row, 5);
    for (const auto& v : h1) CHECK(v == 1);
    auto h2 = h_series(col, 5);
    CHECK(h2[0] == 1);
    CHECK(h2[1] == 1);
    for (int k = 2; k <= 5; ++k) CHECK(h2[k] == 0);
    auto h3 = h_series(plancherel, 6);
    for (int k = 0; k <= 6; ++k) CHECK(h3[k] == Rational(1) / Rational(factorial(k)));
}

TEST_CASE("extended schur functions") {
    OmegaPoint half({Rational(1, 2)}, {Rational(1, 2)});
    OmegaPoint mixed({Rational(1, 2), Rational(1, 4)}, {Rational(1, 4)});
    for (const auto& w : {half, mixed, OmegaPoint()}) CHECK(super_schur({1}, w) == 1);
    CHECK(super_schur({2}, half) == Rational(1, 2));
    CHECK(super_schur({1, 1}, half) == Rational(1, 2));
    CHECK(super_schur({2, 2}, half) == 0);
    // Vanishing outside the fat hook of the face containing omega.
    OmegaPoint face({Rational(1, 2), Rational(1, 4)}, {Rational(1, 8), Rational(1, 8)});
    for (int n = 1; n <= 8; ++n)
        for (const auto& l : partitions_of(n)) {
            bool hook = l.row(3) <= 2;
            if (!hook) CHECK(super_schur(l, face) == 0);
            if (l.length() <= 2 && l.row(1) <= 2 && n <= 4) CHECK(super_schur(l, face) > 0);
        }
    // Pure alpha points give ordinary Schur polynomials.
    OmegaPoint two({Rational(1, 3), Rational(2, 3)}, {});
    auto s = schur_polynomial({3, 1}, 2);
    Rational direct = 0;
    for (const auto& [e, c] : s) direct += c.re * pow(Rational(2, 3), e[0]) * pow(Rational(1, 3), e[1]);
    CHECK(super_schur({3, 1}, two) == direct);
}

TEST_CASE("extreme characters") {
    OmegaPoint row({Rational(1)}, {});
    for (const auto& rho : partitions_of(5)) CHECK(extreme_character(row, rho) == 1);
    CHECK(extreme_character(OmegaPoint({}, {Rational(1)}), {2, 1}) == -1);
    CHECK(extreme_character(OmegaPoint({Rational(1, 2)}, {Rational(1, 2)}), {2, 1, 1}) == 0);
    CHECK(extreme_coherent_check(1, row));
    CHECK(extreme_coherent_check(4, OmegaPoint({Rational(1, 2), Rational(1, 4)}, {Rational(1, 4)})));
    CHECK(extreme_coherent_check(5, OmegaPoint({Rational(1, 3)}, {Rational(1, 5), Rational(1, 7)})));
    for (const auto& l : partitions_of(3)) {
        Rational w = Rational(dim(l)) * super_schur(l, row);
        CHECK(w == (l == YoungDiagram({3}) ? 1 : 0));
    }
}
