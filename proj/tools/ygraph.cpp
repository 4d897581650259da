#include "ygraph/blocks.hpp"
#include "ygraph/characters.hpp"
#include "ygraph/disjointness.hpp"
#include "ygraph/parallel.hpp"
#include "ygraph/permutations.hpp"
#include "ygraph/verify.hpp"
#include "ygraph/zmeasures.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace ygraph;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

constexpr int kMaxEwensTable = 10;
constexpr int kMaxCharTable = 16;

void emit(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::string tmp = out + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write " + tmp);
        f << text;
        if (!f.flush()) throw std::runtime_error("cannot write " + tmp);
    }
    if (std::rename(tmp.c_str(), out.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("cannot rename " + tmp + " to " + out);
    }
}

std::vector<Rational> parse_list(const std::string& text) {
    std::vector<Rational> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
}

std::string path_json(const PathSample& path) {
    nlohmann::json j = nlohmann::json::array();
    for (const Box& b : path.boxes) j.push_back({b.row, b.col});
    return j.dump();
}

std::string fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Young graph, z-measures and Ewens measures"};
    app.require_subcommand(1);
    int result = 0;

    std::string out;
    auto with_out = [&out](CLI::App* cmd) { cmd->add_option("--out", out, "write to FILE atomically instead of stdout"); };

    // verify
    std::string suite = "all", z_text = "3/2,2/5", t_text = "1/2";
    int n = 6;
    std::uint64_t seed = 1;
    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    verify->add_option("--suite", suite, "partitions|ewens|zmeasures|characters|blocks|disjointness|all");
    verify->add_option("--n", n, "size cap");
    verify->add_option("--z", z_text, "z as re,im, inf or 0lim");
    verify->add_option("--t", t_text, "Ewens parameter");
    verify->add_option("--seed", seed);
    with_out(verify);
    verify->callback([&] {
        VerifyOptions o;
        o.n = n;
        o.z = parse_zparam(z_text);
        o.t = parse_ewens_param(t_text);
        o.seed = seed;
        VerifyReport r = run_verify(suite, o);
        emit(out, r.to_json() + "\n");
        if (!r.passed()) result = kExitCheckFailed;
    });

    // tabulate
    auto* tabulate = app.add_subcommand("tabulate", "exact M_z over the diagrams of size n");
    tabulate->add_option("--z", z_text)->required();
    tabulate->add_option("--n", n)->required();
    with_out(tabulate);
    tabulate->callback([&] {
        LevelMeasure m = level_measure(n, parse_zparam(z_text));
        std::string text = "diagram\tweight\n";
        for (const auto& l : partitions_of(n)) text += to_json(l) + "\t" + to_string(m.at(l)) + "\n";
        emit(out, text);
    });

    // sample
    int steps = 100, chains = 1;
    auto* sample = app.add_subcommand("sample", "random paths of the M_z chain");
    sample->add_option("--z", z_text)->required();
    sample->add_option("--steps", steps)->required()->check(CLI::NonNegativeNumber);
    sample->add_option("--chains", chains)->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed);
    with_out(sample);
    sample->callback([&] {
        ZParam z = parse_zparam(z_text);
        std::vector<std::string> lines(chains);
        parallel_for(static_cast<std::size_t>(chains),
                     [&](std::size_t i) { lines[i] = path_json(sample_path(z, steps, stream_seed(seed, i))); });
        std::string text;
        for (const auto& l : lines) text += l + "\n";
        emit(out, text);
    });

    // ewens
    int draws = 0;
    auto* ewens = app.add_subcommand("ewens", "Ewens measure table or samples");
    ewens->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    ewens->add_option("--t", t_text)->required();
    ewens->add_option("--draws", draws, "0 prints the exact table")->check(CLI::NonNegativeNumber);
    ewens->add_option("--seed", seed);
    with_out(ewens);
    ewens->callback([&] {
        EwensParam t = parse_ewens_param(t_text);
        std::string text;
        if (draws == 0) {
            if (n > kMaxEwensTable) throw InfeasibleError("exact Ewens tables stop at n = 10");
            text = "permutation\tcycle_type\tweight\n";
            for (const auto& x : all_permutations(n))
                text += to_json(x) + "\t" + to_json(cycle_type(x)) + "\t" + to_string(ewens_weight(x, t)) + "\n";
        } else {
            std::vector<std::string> lines(draws);
            parallel_for(static_cast<std::size_t>(draws),
                         [&](std::size_t i) { lines[i] = to_json(ewens_sample(n, t, stream_seed(seed, i))); });
            for (const auto& l : lines) text += l + "\n";
        }
        emit(out, text);
    });

    // char
    std::string lambda_text, rho_text;
    bool with_z = false;
    auto* chr = app.add_subcommand("char", "irreducible characters and chi_z");
    chr->add_option("--n", n, "print the character table of S(n)");
    chr->add_option("--lambda", lambda_text, "diagram as a JSON list");
    chr->add_option("--rho", rho_text, "cycle type as a JSON list");
    auto* zopt = chr->add_option("--z", z_text, "print chi_z(rho) instead");
    with_out(chr);
    chr->callback([&] {
        with_z = zopt->count() > 0;
        std::string text;
        if (!rho_text.empty() && (with_z || !lambda_text.empty())) {
            CycleType rho = parse_diagram(rho_text);
            if (with_z) {
                text = to_string(chi_z_value(rho, parse_zparam(z_text))) + "\n";
            } else {
                YoungDiagram l = parse_diagram(lambda_text);
                if (l.size() != rho.size()) throw DomainError("lambda and rho have different sizes");
                text = to_string(mn_character(l, rho)) + "\n";
            }
        } else {
            if (n > kMaxCharTable) throw InfeasibleError("character tables stop at n = 16");
            if (with_z) {
                ZParam z = parse_zparam(z_text);
                text = "cycle_type\tchi_z\n";
                for (const auto& rho : partitions_of(n)) text += to_json(rho) + "\t" + to_string(chi_z_value(rho, z)) + "\n";
            } else {
                text = "lambda\trho\tchi\n";
                for (const auto& l : partitions_of(n))
                    for (const auto& rho : partitions_of(n))
                        text += to_json(l) + "\t" + to_json(rho) + "\t" + to_string(mn_character(l, rho)) + "\n";
            }
        }
        emit(out, text);
    });

    // thoma
    std::string alpha_text, beta_text;
    auto* thoma = app.add_subcommand("thoma", "extended Schur functions at a point of the Thoma simplex");
    thoma->add_option("--alpha", alpha_text, "comma separated rationals");
    thoma->add_option("--beta", beta_text, "comma separated rationals");
    thoma->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    with_out(thoma);
    thoma->callback([&] {
        if (n > kMaxCharTable) throw InfeasibleError("Thoma tables stop at n = 16");
        OmegaPoint w(parse_list(alpha_text), parse_list(beta_text));
        std::string text = "lambda\tdim\tsuper_schur\n";
        for (const auto& l : partitions_of(n))
            text += to_json(l) + "\t" + to_string(dim(l)) + "\t" + to_string(super_schur(l, w)) + "\n";
        emit(out, text);
        if (!extreme_coherent_check(n, w)) result = kExitCheckFailed;
    });

    // spectral
    int p = 2, q = 0, bins = 20;
    auto* spectral = app.add_subcommand("spectral", "alpha_1 histogram of block chains");
    spectral->add_option("--p", p)->check(CLI::NonNegativeNumber);
    spectral->add_option("--q", q)->check(CLI::NonNegativeNumber);
    spectral->add_option("--n", n)->required();
    spectral->add_option("--chains", chains)->check(CLI::PositiveNumber);
    spectral->add_option("--seed", seed);
    spectral->add_option("--bins", bins)->check(CLI::PositiveNumber);
    with_out(spectral);
    spectral->callback([&] {
        std::vector<PathSample> paths(chains);
        parallel_for(static_cast<std::size_t>(chains),
                     [&](std::size_t i) { paths[i] = block_chain_sample(p, q, n, stream_seed(seed, i)); });
        Histogram h = empirical_pushforward(paths, n, p, q, Embedding::BarIota, bins);
        nlohmann::ordered_json j;
        j["p"] = p;
        j["q"] = q;
        j["n"] = n;
        j["chains"] = chains;
        j["seed"] = seed;
        nlohmann::ordered_json edges = nlohmann::ordered_json::array();
        for (int i = 0; i <= bins; ++i) edges.push_back(h.lo + i * h.width());
        j["bins"] = edges;
        j["counts"] = h.counts;
        if (h.expected.empty()) {
            j["density_reference"] = nullptr;
        } else {
            j["density_reference"] = h.expected;
        }
        emit(out, j.dump() + "\n");
    });

    // hardy
    auto* hardy = app.add_subcommand("hardy", "exact sum of f_pq^2 over a level of the block");
    hardy->add_option("--p", p)->required()->check(CLI::NonNegativeNumber);
    hardy->add_option("--q", q)->required()->check(CLI::NonNegativeNumber);
    hardy->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    with_out(hardy);
    hardy->callback([&] { emit(out, to_string(hardy_partial(p, q, n)) + "\n"); });

    // disjoint
    std::string z1_text, z2_text;
    double threshold = 1e-2;
    auto* disjoint = app.add_subcommand("disjoint", "likelihood ratios of two z-measures along sampled paths");
    disjoint->add_option("--z1", z1_text)->required();
    disjoint->add_option("--z2", z2_text)->required();
    disjoint->add_option("--steps", steps)->required()->check(CLI::PositiveNumber);
    disjoint->add_option("--chains", chains)->check(CLI::PositiveNumber);
    disjoint->add_option("--seed", seed);
    disjoint->add_option("--threshold", threshold)->check(CLI::PositiveNumber);
    with_out(disjoint);
    disjoint->callback([&] {
        DisjointnessSummary s =
            disjointness_experiment(parse_zparam(z1_text), parse_zparam(z2_text), steps, chains, seed, threshold);
        nlohmann::ordered_json j;
        j["z1"] = s.z1.to_string();
        j["z2"] = s.z2.to_string();
        j["steps"] = steps;
        j["chains"] = chains;
        j["seed"] = seed;
        j["final_log_phi"] = s.final_log_phi;
        j["summary"] = {{"median_phi", s.median_phi()},
                        {"threshold", threshold},
                        {"fraction_below_threshold", s.fraction_below_threshold()},
                        {"fraction_decreasing", s.fraction_decreasing()}};
        emit(out, j.dump() + "\n");
    });

    // kakutani
    std::string s_text = "1";
    int count = 100000;
    auto* kakutani = app.add_subcommand("kakutani", "partial sums of log a_n for two Ewens parameters");
    kakutani->add_option("--s", s_text)->required();
    kakutani->add_option("--t", t_text)->required();
    kakutani->add_option("--N", count)->check(CLI::PositiveNumber);
    with_out(kakutani);
    kakutani->callback([&] {
        Rational s = parse_rational(s_text), t = parse_rational(t_text);
        std::vector<double> sums = kakutani_experiment(s, t, count);
        double predicted = std::sqrt(s.get_d() * t.get_d()) - 0.5 * (s.get_d() + t.get_d());
        std::string text = "n\tlog_partial\tpredicted\n";
        int last = 0;
        for (int m = 1; m <= count; m *= 10) {
            text += std::to_string(m) + "\t" + fixed(sums[m - 1]) + "\t" + fixed(predicted * std::log(m) + 0.0) + "\n";
            last = m;
            if (m > count / 10) break;
        }
        if (last != count) text += std::to_string(count) + "\t" + fixed(sums.back()) + "\t" + fixed(predicted * std::log(count) + 0.0) + "\n";
        emit(out, text);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return result;
}
