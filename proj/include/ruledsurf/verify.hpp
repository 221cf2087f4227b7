#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ruledsurf/presentation.hpp"
#include "ruledsurf/report.hpp"

namespace ruledsurf {

using ClassPredicate = std::function<bool(const NumClass&, const SurfaceModel&)>;

// The predicates under test. Replaceable so the harness can be checked
// against a deliberately broken implementation.
struct VerifyPredicates {
    ClassPredicate normally_presented = is_normally_presented;
    ClassPredicate koszul = is_koszul;
};

struct VerifyConfig {
    std::int64_t window = 40;
    std::vector<std::int64_t> e_values{-1, 0, 1, 2};
    std::uint64_t seed = 1;
    std::size_t random_tuples = 10'000;
    VerifyPredicates predicates;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::vector<std::string> counterexamples;
};

struct VerifyReport {
    std::string suite = "all";
    std::int64_t window = 0;
    std::vector<std::int64_t> e_values;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    double wall_time_ms = 0.0;

    bool passed() const;
};

inline constexpr std::int64_t kMinVerifyWindow = 4;

// Runs every invariant suite over |a|, |b| <= window for each e. Throws
// std::invalid_argument for window < 4 or e < -1.
VerifyReport run_verify(const VerifyConfig& config);

// 0 when every check passed, 1 otherwise.
int exit_code(const VerifyReport& report);

Json to_json(const VerifyReport& report);

}  // namespace ruledsurf
