#include "ygraph/verify.hpp"

#include "ygraph/blocks.hpp"
#include "ygraph/characters.hpp"
#include "ygraph/disjointness.hpp"

#include <json.hpp>

#include <functional>
#include <optional>

namespace ygraph {

namespace {

using Witness = std::optional<std::string>;

void add(VerifyReport& r, const std::string& id, const std::function<Witness()>& body) {
    CheckResult c{id, false, ""};
    try {
        Witness w = body();
        c.passed = !w;
        if (w) c.witness = *w;
    } catch (const std::exception& e) {
        c.witness = std::string("exception: ") + e.what();
    }
    r.checks.push_back(std::move(c));
}

void suite_partitions(VerifyReport& r, const VerifyOptions& o) {
    add(r, "dim-hook-vs-paths", [&]() -> Witness {
        for (int m = 0; m <= o.n; ++m)
            for (const auto& l : partitions_of(m))
                if (dim(l) != dim_by_paths(l)) return to_json(l);
        return {};
    });
    add(r, "sum-dim-squared", [&]() -> Witness {
        for (int m = 0; m <= o.n; ++m) {
            Integer s = 0;
            for (const auto& l : partitions_of(m)) s += dim(l) * dim(l);
            if (s != factorial(static_cast<unsigned long>(m))) return "n=" + std::to_string(m);
        }
        return {};
    });
    add(r, "conjugate-involution", [&]() -> Witness {
        for (int m = 0; m <= o.n; ++m)
            for (const auto& l : partitions_of(m))
                if (conjugate(conjugate(l)) != l || dim(conjugate(l)) != dim(l)) return to_json(l);
        return {};
    });
    add(r, "frobenius-size", [&]() -> Witness {
        for (int m = 1; m <= o.n; ++m)
            for (const auto& l : partitions_of(m)) {
                FrobeniusCoords f = frobenius(l);
                Rational s = 0;
                for (const auto& v : f.modified_p()) s += v;
                for (const auto& v : f.modified_q()) s += v;
                if (s != m) return to_json(l);
            }
        return {};
    });
    add(r, "block-split-join", [&]() -> Witness {
        for (int k = -o.n; k <= o.n; ++k)
            for (int m = 1; m <= o.n; ++m)
                for (const auto& l : partitions_of(m)) {
                    BlockId b = block_of(l, k);
                    if (b.k() != k || !in_Ypq(l, b.p, b.q)) return to_json(l) + " k=" + std::to_string(k);
                    auto [plus, minus] = split_pm(l, b.p, b.q);
                    if (join_pm(plus, minus, b.p, b.q) != l) return to_json(l);
                }
        return {};
    });
}

void suite_ewens(VerifyReport& r, const VerifyOptions& o) {
    const int n = std::min(o.n, 7);
    add(r, "ewens-normalized", [&]() -> Witness {
        for (int m = 1; m <= n; ++m) {
            Rational s = 0;
            for (const auto& x : all_permutations(m)) s += ewens_weight(x, o.t);
            if (s != 1) return "n=" + std::to_string(m);
        }
        return {};
    });
    add(r, "ewens-fiber-pushforward", [&]() -> Witness {
        for (int m = 1; m < n; ++m)
            for (const auto& x : all_permutations(m)) {
                Rational s = 0;
                for (const auto& y : projection_fiber(x)) s += ewens_weight(y, o.t);
                if (s != ewens_weight(x, o.t)) return to_json(x);
            }
        return {};
    });
    add(r, "ewens-code-product", [&]() -> Witness {
        for (int m = 1; m <= n; ++m)
            for (const auto& x : all_permutations(m)) {
                Code c = encode(x);
                if (decode(c) != x) return to_json(x);
                Rational w = 1;
                for (int i = 1; i <= m; ++i) w *= ewens_code_weight(i, c[i - 1], o.t);
                if (w != ewens_weight(x, o.t)) return to_json(x);
            }
        return {};
    });
    add(r, "ewens-quasiinvariance", [&]() -> Witness {
        if (o.t.is_infinite() || o.t.value() == 0) return {};
        const Rational& t = o.t.value();
        for (int m = 2; m <= std::min(n, 5); ++m)
            for (const auto& x : all_permutations(m))
                for (int i = 1; i < m; ++i) {
                    Permutation s = Permutation::transposition(m, i, i + 1), e = Permutation::identity(m);
                    for (const GPair& g : {GPair(s, e), GPair(e, s)})
                        if (ewens_weight(act(x, g), o.t) != rn_derivative(x, g, t) * ewens_weight(x, o.t))
                            return to_json(x);
                }
        return {};
    });
}

void suite_zmeasures(VerifyReport& r, const VerifyOptions& o) {
    const int n = std::min(o.n, kMaxEnumeratedLevel);
    add(r, "level-sums", [&]() -> Witness {
        for (int m = 0; m <= n; ++m)
            if (level_measure(m, o.z).total() != 1) return "n=" + std::to_string(m);
        return {};
    });
    add(r, "coherency", [&]() -> Witness {
        for (int m = 1; m <= n; ++m)
            if (!check_coherency(level_measure(m, o.z), level_measure(m - 1, o.z))) return "n=" + std::to_string(m);
        return {};
    });
    add(r, "support-rule", [&]() -> Witness {
        for (int m = 0; m <= n; ++m)
            for (const auto& [l, w] : level_measure(m, o.z).weights)
                if ((w != 0) != support_check(l, o.z)) return to_json(l);
        return {};
    });
    add(r, "transition-rows", [&]() -> Witness {
        for (int m = 0; m < n; ++m)
            for (const auto& l : partitions_of(m)) {
                Rational s = 0;
                for (const Box& b : addable(l)) s += transition(l, add_box(l, b), o.z);
                if (s != 1) return to_json(l);
            }
        return {};
    });
    add(r, "one-row-series", [&]() -> Witness {
        if (!o.z.is_finite()) return {};
        auto c = onerow_genfun(o.z, n + 1);
        for (int m = 0; m <= n; ++m) {
            std::vector<int> row;
            if (m > 0) row.push_back(m);
            if (c[m] != mz_weight(YoungDiagram(row), o.z)) return "n=" + std::to_string(m);
        }
        return {};
    });
}

void suite_characters(VerifyReport& r, const VerifyOptions& o) {
    const int n = std::min(o.n, 7);
    add(r, "character-orthogonality", [&]() -> Witness {
        for (int m = 1; m <= n; ++m) {
            auto shapes = partitions_of(m);
            for (const auto& a : shapes)
                for (const auto& b : shapes) {
                    Rational s = 0;
                    for (const auto& rho : partitions_of(m))
                        s += Rational(class_size(rho) * mn_character(a, rho) * mn_character(b, rho));
                    if (s != (a == b ? Rational(factorial(static_cast<unsigned long>(m))) : Rational(0)))
                        return to_json(a) + " " + to_json(b);
                }
        }
        return {};
    });
    add(r, "zpow-expansion", [&]() -> Witness {
        if (!o.z.is_finite()) return {};
        for (int m = 1; m <= n; ++m)
            if (!zpow_expansion_check(m, o.z)) return "n=" + std::to_string(m);
        return {};
    });
    add(r, "schur-identity", [&]() -> Witness {
        if (!o.z.is_finite()) return {};
        int m = std::min(n, 4);
        return schur_identity_check(m, o.z, m) ? Witness{} : Witness{"m=" + std::to_string(m)};
    });
    add(r, "extreme-characters", [&]() -> Witness {
        OmegaPoint w({Rational(1, 2), Rational(1, 4)}, {Rational(1, 4)});
        for (int m = 1; m <= std::min(n, 6); ++m)
            if (!extreme_coherent_check(m, w)) return "n=" + std::to_string(m);
        return {};
    });
}

void suite_blocks(VerifyReport& r, const VerifyOptions& o) {
    const int n = std::min(o.n, 10);
    add(r, "pseudoharmonic-cores", [&]() -> Witness {
        for (int p = 0; p <= 3; ++p)
            for (int q = 0; q <= 3; ++q) {
                if (p == 0 && q == 0) continue;
                for (int m = p * q; m <= n; ++m)
                    for (const auto& [a, b] : block_level(p, q, m)) {
                        YoungDiagram l = join_pm(a, b, p, q);
                        if (!pseudoharmonic_core_check(l, p, q)) return to_json(l);
                    }
            }
        return {};
    });
    add(r, "hardy-unit-blocks", [&]() -> Witness {
        for (int m = 1; m <= 50 * n; ++m)
            if (hardy_partial(1, 1, m) != 1 || hardy_partial(1, 0, m) != 1) return "n=" + std::to_string(m);
        return {};
    });
    add(r, "weight-closed-form", [&]() -> Witness {
        for (int p = 0; p <= 3; ++p)
            for (int q = 0; q <= 3; ++q) {
                if (p == 0 && q == 0) continue;
                if (p * q > n) continue;
                if (!m_pq_recurrence_check(p, q, std::min(n, p * q + 6)))
                    return "p=" + std::to_string(p) + " q=" + std::to_string(q);
            }
        return {};
    });
    add(r, "cauchy-determinant", [&]() -> Witness {
        Rng rng(o.seed);
        for (int trial = 0; trial < 20; ++trial) {
            int q = 1 + static_cast<int>(rng.below(4));
            int p = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(q, 3))));
            std::vector<Rational> x, y;
            auto draw = [&](std::vector<Rational>& v, int count) {
                while (static_cast<int>(v.size()) < count) {
                    Rational c(static_cast<long>(rng.below(40)) + 1, static_cast<long>(rng.below(7)) + 1);
                    c.canonicalize();
                    if (std::find(v.begin(), v.end(), c) == v.end()) v.push_back(c);
                }
            };
            draw(x, p);
            draw(y, q);
            if (!cauchy_det_check(x, y)) return "trial " + std::to_string(trial);
        }
        return {};
    });
}

void suite_disjointness(VerifyReport& r, const VerifyOptions& o) {
    const int n = std::min(o.n, 8);
    add(r, "likelihood-ratio-exact", [&]() -> Witness {
        ZParam z1 = ZParam::finite(Rational(1, 2), Rational(1, 2));
        ZParam z2 = ZParam::finite(Rational(3, 2));
        for (int c = 0; c < 10; ++c) {
            PathSample path = sample_path(z1, n, stream_seed(o.seed, c));
            auto phi = phi_n(path, z1, z2);
            auto diagrams = path.diagrams();
            for (int k = 1; k <= n; ++k)
                if (phi[k - 1] * mz_weight(diagrams[k], z1) != mz_weight(diagrams[k], z2))
                    return "chain " + std::to_string(c) + " step " + std::to_string(k);
        }
        return {};
    });
    add(r, "fat-hook-confinement", [&]() -> Witness {
        for (int p = 0; p <= 2; ++p)
            for (int q = 0; q <= 2; ++q) {
                if (p == 0 && q == 0) continue;
                for (int c = 0; c < 20; ++c) {
                    PathSample path = block_chain_sample(p, q, p * q + 20 * n, stream_seed(o.seed, c));
                    for (const auto& l : path.diagrams())
                        if (!in_Ypq(l, p, q) || !in_fat_hook(l, p, q)) return to_json(l);
                }
            }
        return {};
    });
    add(r, "super-schur-fat-hook", [&]() -> Witness {
        OmegaPoint w({Rational(2, 3)}, {Rational(1, 3)});
        for (int m = 1; m <= n; ++m)
            for (const auto& l : partitions_of(m))
                if ((super_schur(l, w) == 0) == in_fat_hook(l, 1, 1)) return to_json(l);
        return {};
    });
    add(r, "escape-bound", [&]() -> Witness {
        ZParam z = ZParam::finite(Rational(1, 2), Rational(1, 2));
        for (int m = 0; m <= n; ++m)
            for (const auto& l : partitions_of(m))
                for (int p = 0; p <= 2; ++p)
                    for (int q = 0; q <= 2; ++q) {
                        if (!in_fat_hook(l, p, q) || l.row(p + 1) != q || (p > 0 && l.row(p) < q + 1)) continue;
                        EscapeStep e = escape_step_bound(l, p, q, z);
                        if (e.probability < e.bound) return to_json(l);
                    }
        return {};
    });
}

using SuiteFn = void (*)(VerifyReport&, const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"partitions", suite_partitions}, {"ewens", suite_ewens},   {"zmeasures", suite_zmeasures},
        {"characters", suite_characters}, {"blocks", suite_blocks}, {"disjointness", suite_disjointness},
    };
    return r;
}

}  // namespace

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["passed"] = passed();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["status"] = c.passed ? "pass" : "fail";
        if (!c.passed) e["witness"] = c.witness;
        j["checks"].push_back(e);
    }
    return j.dump(2);
}

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : registry()) v.push_back(name);
        return v;
    }();
    return names;
}

VerifyReport run_verify(const std::string& suite, const VerifyOptions& opts) {
    VerifyReport r;
    r.suite = suite;
    bool found = false;
    for (const auto& [name, fn] : registry()) {
        if (suite != "all" && suite != name) continue;
        found = true;
        std::size_t first = r.checks.size();
        fn(r, opts);
        if (suite == "all")
            for (std::size_t i = first; i < r.checks.size(); ++i) r.checks[i].id = name + "/" + r.checks[i].id;
    }
    if (!found) throw ParseError("unknown suite: " + suite);
    return r;
}

}  // namespace ygraph
