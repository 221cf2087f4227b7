#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ruledsurf/cohomology.hpp"
#include "ruledsurf/positivity.hpp"
#include "ruledsurf/presentation.hpp"
#include "ruledsurf/surface.hpp"

namespace ruledsurf {

using Json = nlohmann::ordered_json;

// One lattice point of a region scan with all numerical flags.
struct RegionCell {
    NumClass cls;
    EffectivityStatus effective;
    bool ample = false;
    bool all_bpf = false;
    bool ample_bpf = false;
    bool np = false;
    bool koszul = false;
};

RegionCell classify_cell(const NumClass& c, const SurfaceModel& s);

// Inclusive integer interval written "lo:hi".
struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    std::int64_t size() const;
};

// Throws std::invalid_argument on malformed text or lo > hi.
IntRange parse_range(std::string_view text);

inline constexpr std::size_t kDefaultMaxCells = 1'000'000;

// Cells ordered by a ascending, then b ascending. Throws std::length_error
// when the window exceeds max_cells.
std::vector<RegionCell> scan_region(const IntRange& a_range, const IntRange& b_range, const SurfaceModel& s,
                                    std::size_t max_cells = kDefaultMaxCells);

Json to_json(const NumClass& c);
Json to_json(const DimStatus& d);
Json to_json(const EffectivityStatus& st);
Json to_json(const CohomologyProfile& p);
Json to_json(const Decomposition& d);
Json to_json(const std::optional<Decomposition>& d);
Json to_json(const RegionCell& cell, const SurfaceModel& s);

// Full single-class report: flags, cohomology, special members and, when
// normally presented, the constructive split.
Json classify_document(const BundleRef& ref, const SurfaceModel& s);

enum class DecomposeMode { Constructive, Brute };

Json decompose_document(const NumClass& c, const SurfaceModel& s, DecomposeMode mode);

}  // namespace ruledsurf
