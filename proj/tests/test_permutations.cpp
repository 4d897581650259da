#include "ygraph/permutations.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

using namespace ygraph;

namespace {

// Cycle count by marking visited points; independent of Permutation::cycles.
int brute_cycles(const Permutation& x) {
    std::vector<bool> seen(x.degree() + 1, false);
    int count = 0;
    for (int i = 1; i <= x.degree(); ++i) {
        if (seen[i]) continue;
        ++count;
        for (int j = i; !seen[j]; j = x(j)) seen[j] = true;
    }
    return count;
}

Rational weight_by_formula(const Permutation& x, const Rational& t) {
    Rational den = 1;
    for (int k = 0; k < x.degree(); ++k) den *= t + k;
    return pow(t, brute_cycles(x)) / den;
}

}  // namespace

TEST_CASE("cycles") {
    CHECK(cycle_count(Permutation::identity(4)) == 4);
    CHECK(cycle_count(Permutation::transposition(4, 1, 2)) == 3);
    Permutation c = Permutation::cycle(3, {1, 2, 3});
    CHECK(cycle_count(c) == 1);
    CHECK(cycle_type(c) == YoungDiagram({3}));
    CHECK(sign(c) == 1);
    CHECK(sign(Permutation::transposition(5, 2, 4)) == -1);
    for (const auto& x : all_permutations(5)) {
        CHECK(cycle_count(x) == brute_cycles(x));
        CHECK(cycle_type(x).size() == 5);
    }
    CHECK_THROWS_AS(Permutation({1, 1, 2}), DomainError);
}

TEST_CASE("group operations") {
    auto all = all_permutations(4);
    CHECK(all.size() == 24);
    CHECK(std::set<Permutation>(all.begin(), all.end()).size() == 24);
    for (const auto& x : all) {
        CHECK(x * x.inverse() == Permutation::identity(4));
        for (int i = 1; i <= 4; ++i) CHECK((x * all[5])(i) == x(all[5](i)));
    }
}

TEST_CASE("derivative projection") {
    CHECK(derivative_projection(Permutation::cycle(3, {1, 2, 3})) == Permutation::transposition(2, 1, 2));
    Permutation fixed({2, 1, 3});
    CHECK(derivative_projection(fixed) == Permutation({2, 1}));
    CHECK(derivative_projection(Permutation::transposition(4, 3, 4)) == Permutation::identity(3));
    for (int n = 1; n <= 5; ++n)
        for (const auto& x : all_permutations(n)) {
            auto fiber = projection_fiber(x);
            CHECK(fiber.size() == static_cast<std::size_t>(n + 1));
            int same = 0;
            for (const auto& y : fiber) {
                CHECK(derivative_projection(y) == x);
                int d = cycle_count(y) - cycle_count(x);
                CHECK((d == 0 || d == 1));
                same += d;
            }
            CHECK(same == 1);
        }
}

TEST_CASE("codes are a bijection") {
    CHECK(encode(Permutation::cycle(3, {1, 2, 3})) == Code{0, 1, 1});
    CHECK(decode({0, 1, 1}) == Permutation::cycle(3, {1, 2, 3}));
    CHECK_THROWS_AS(decode({0, 2}), DomainError);
    for (int n = 1; n <= 6; ++n) {
        std::set<Code> codes;
        for (const auto& x : all_permutations(n)) {
            Code c = encode(x);
            codes.insert(c);
            CHECK(decode(c) == x);
            int zeros = 0;
            for (int i : c) zeros += i == 0;
            CHECK(zeros == cycle_count(x));
            if (n >= 2) CHECK(decode(Code(c.begin(), c.end() - 1)) == derivative_projection(x));
        }
        CHECK(codes.size() == factorial(n).get_ui());
    }
}

TEST_CASE("action and cocycle") {
    Permutation e2 = Permutation::identity(2), s = Permutation::transposition(2, 1, 2);
    GPair g(s, e2);
    CHECK(act(Permutation::identity(3), GPair(Permutation::identity(3), Permutation::identity(3))) ==
          Permutation::identity(3));
    CHECK(act(e2, g) == s);
    CHECK(cocycle(e2, g) == -1);
    CHECK(cocycle(s, g) == 1);
    CHECK_THROWS_AS(act(e2, GPair(Permutation::identity(3), Permutation::identity(3))), DomainError);
    auto s3 = all_permutations(3);
    for (const auto& x : all_permutations(5))
        for (const auto& a : s3)
            for (const auto& b : {s3[1], s3[4]}) {
                GPair h(a, b);
                CHECK(cocycle(x, GPair(a, a)) == 0);
                for (const auto& c : {s3[2], s3[5]}) {
                    GPair k(c, a);
                    CHECK(act(act(x, h), k) == act(x, h * k));
                    CHECK(cocycle(x, h * k) == cocycle(x, h) + cocycle(act(x, h), k));
                    // Equivariance of the projection for g in S(3) acting on S(5).
                    CHECK(derivative_projection(act(x, h)) == act(derivative_projection(x), h));
                }
            }
}

TEST_CASE("ewens weights") {
    Rational t(2, 7);
    CHECK(ewens_weight(Permutation::identity(2), EwensParam(t)) == t / (t + 1));
    CHECK(ewens_weight(Permutation::transposition(2, 1, 2), EwensParam(t)) == 1 / (t + 1));
    CHECK(ewens_weight(Permutation::cycle(3, {1, 2, 3}), EwensParam(Rational(2))) == Rational(1, 12));
    for (const auto& x : all_permutations(4)) CHECK(ewens_weight(x, EwensParam(Rational(1))) == Rational(1, 24));
    for (const Rational& tv : {Rational(0), Rational(1, 3), Rational(5, 2)}) {
        EwensParam param(tv);
        for (int n = 1; n <= 6; ++n) {
            Rational total = 0;
            for (const auto& x : all_permutations(n)) {
                Rational w = ewens_weight(x, param);
                if (tv != 0) CHECK(w == weight_by_formula(x, tv));
                total += w;
                if (n >= 2) {
                    Rational fiber_mass = 0;
                    for (const auto& y : projection_fiber(x)) fiber_mass += ewens_weight(y, param);
                    CHECK(fiber_mass == w);
                }
                Rational product = 1;
                Code c = encode(x);
                for (int m = 1; m <= n; ++m) product *= ewens_code_weight(m, c[m - 1], param);
                CHECK(product == w);
            }
            CHECK(total == 1);
        }
    }
    EwensParam inf = EwensParam::infinity();
    CHECK(ewens_weight(Permutation::identity(3), inf) == 1);
    CHECK(ewens_weight(Permutation::transposition(3, 1, 2), inf) == 0);
    CHECK(ewens_weight(Permutation::cycle(3, {1, 3, 2}), EwensParam(Rational(0))) == Rational(1, 2));
}

TEST_CASE("ewens sampler") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        CHECK(ewens_sample(7, EwensParam::infinity(), seed) == Permutation::identity(7));
        CHECK(cycle_count(ewens_sample(7, EwensParam(Rational(0)), seed)) == 1);
    }
    CHECK(ewens_sample(6, EwensParam(Rational(1, 2)), 99) == ewens_sample(6, EwensParam(Rational(1, 2)), 99));

    std::map<Permutation, int> counts;
    Rng rng(2024);
    const int draws = 60000;
    for (int i = 0; i < draws; ++i) ++counts[ewens_sample(3, EwensParam(Rational(1)), rng)];
    CHECK(counts.size() == 6);
    double sd = std::sqrt(draws * (1.0 / 6) * (5.0 / 6));
    for (const auto& [x, c] : counts) CHECK(std::abs(c - draws / 6.0) <= 3 * sd);

    // Cycle-count law at t = 2 against exact weights.
    EwensParam t2(Rational(2));
    std::map<int, Rational> exact;
    for (const auto& x : all_permutations(5)) exact[cycle_count(x)] += ewens_weight(x, t2);
    std::map<int, int> seen;
    for (int i = 0; i < draws; ++i) ++seen[cycle_count(ewens_sample(5, t2, rng))];
    for (const auto& [k, p] : exact) {
        double pd = p.get_d();
        CHECK(std::abs(seen[k] - draws * pd) <= 3 * std::sqrt(draws * pd * (1 - pd)) + 1);
    }
}

TEST_CASE("radon-nikodym derivative") {
    Permutation e2 = Permutation::identity(2), s = Permutation::transposition(2, 1, 2);
    CHECK(rn_derivative(e2, GPair(s, e2), Rational(3)) == Rational(1, 3));
    for (const auto& x : all_permutations(4))
        for (const auto& a : all_permutations(3)) {
            GPair g(a, Permutation::identity(3));
            CHECK(rn_derivative(x, g, Rational(1)) == 1);
            CHECK(rn_derivative(x, GPair(a, a), Rational(5, 3)) == 1);
            Rational t(5, 3);
            CHECK(rn_derivative(x, g, t) == ewens_weight(act(x, g), EwensParam(t)) / ewens_weight(x, EwensParam(t)));
        }
}

TEST_CASE("kakutani factors") {
    for (int n = 1; n <= 20; ++n) CHECK(kakutani_factor(n, Rational(3, 2), Rational(3, 2)).value == doctest::Approx(1.0));
    KakutaniFactor a1 = kakutani_factor(1, Rational(1), Rational(4));
    CHECK(a1.exact);
    CHECK(*a1.exact == 1);
    KakutaniFactor a2 = kakutani_factor(2, Rational(1), Rational(4));
    CHECK(a2.value == doctest::Approx(3.0 / std::sqrt(10.0)));
    REQUIRE(a2.exact_square);
    CHECK(*a2.exact_square == Rational(9, 10));
    for (int n = 1; n <= 50; ++n) {
        double s = 1, t = 3;
        double direct = (std::sqrt(s * t) + n - 1) / std::sqrt((s + n - 1) * (t + n - 1));
        CHECK(kakutani_factor(n, Rational(1), Rational(3)).value == doctest::Approx(direct).epsilon(1e-12));
        CHECK(kakutani_factor(n, Rational(1), Rational(3)).value <= 1.0);
    }
}

TEST_CASE("parsing") {
    Permutation x = Permutation::cycle(4, {1, 3});
    CHECK(parse_permutation(to_json(x)) == x);
    CHECK_THROWS_AS(parse_permutation("[1,1]"), ParseError);
    CHECK(parse_ewens_param("inf").is_infinite());
    CHECK(parse_ewens_param("3/6").value() == Rational(1, 2));
    CHECK_THROWS(parse_ewens_param("-1"));
    CHECK_THROWS_AS(parse_ewens_param("x"), ParseError);
}
