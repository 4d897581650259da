#pragma once

#include "ygraph/permutations.hpp"
#include "ygraph/rational.hpp"
#include "ygraph/zmeasures.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ygraph {

struct CheckResult {
    std::string id;
    bool passed = false;
    std::string witness;  ///< first counterexample, empty on success
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const;
    std::string to_json() const;
};

struct VerifyOptions {
    int n = 6;
    ZParam z = ZParam::finite(Rational(3, 2), Rational(2, 5));
    EwensParam t = EwensParam(Rational(1, 2));
    std::uint64_t seed = 1;
};

/// partitions, ewens, zmeasures, characters, blocks, disjointness.
const std::vector<std::string>& verify_suites();

/// Throws ParseError for an unknown suite; "all" concatenates every suite.
VerifyReport run_verify(const std::string& suite, const VerifyOptions& opts);

}  // namespace ygraph
