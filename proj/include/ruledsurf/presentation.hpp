#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ruledsurf/cohomology.hpp"
#include "ruledsurf/surface.hpp"

namespace ruledsurf {

// Normal presentation needs char(k) != 2; Koszulness as an iff needs the same.
inline constexpr std::string_view kNormalPresentationAssumption = "char(k) != 2";
inline constexpr std::string_view kKoszulAssumption =
    "char(k) != 2 for the converse; the sufficient direction holds in every characteristic";

enum class CaseTag { C421, C422, C423, C424, EvenSplit, OddSplit, BruteForce };

std::string_view to_string(CaseTag tag);

// L = B1 + B2 with every member of both classes base-point-free.
struct Decomposition {
    NumClass b1;
    NumClass b2;
    CaseTag case_tag = CaseTag::BruteForce;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

bool is_normally_presented(const NumClass& c, const SurfaceModel& s);

// Koszulness of the section ring; same numerical region as normal presentation.
bool is_koszul(const NumClass& c, const SurfaceModel& s);

// Constructive witness following the case analysis: for e = -1 the four
// families by the range of a, for e >= 0 the floor/ceil split. Falls back to
// the exhaustive search (tagged BruteForce) if no family applies.
std::optional<Decomposition> decompose_np(const NumClass& c, const SurfaceModel& s);

// Closed box containing every first half (a1, b1) of an all-bpf split of c.
// Empty (lo > hi) when a < 0.
struct SearchBounds {
    std::int64_t a1_lo = 0;
    std::int64_t a1_hi = -1;
    std::int64_t b1_lo = 0;
    std::int64_t b1_hi = -1;

    bool empty() const noexcept { return a1_lo > a1_hi || b1_lo > b1_hi; }
};

SearchBounds brute_force_search_bounds(const NumClass& c, const SurfaceModel& s);

// Exhaustive search over the bounds above; returns the first split found
// (lexicographic in (a1, b1)).
std::optional<Decomposition> brute_force_decompose(const NumClass& c, const SurfaceModel& s);

// Ample and admits an all-bpf split.
bool thm43_classify(const NumClass& c, const SurfaceModel& s);

enum class Verdict { True, False, Indeterminate };

std::string_view to_string(Verdict v);

// Vanishing hypotheses for a split L = B1 + B2, evaluated at class level.
struct Prop21Report {
    DimStatus h1_b1 = DimStatus::indeterminate();
    DimStatus h1_b2 = DimStatus::indeterminate();
    DimStatus h2_b2_minus_b1 = DimStatus::indeterminate();
    DimStatus h2_b1_minus_b2 = DimStatus::indeterminate();
    Verdict all_satisfied = Verdict::Indeterminate;
};

Prop21Report prop21_hypotheses(const NumClass& b1, const NumClass& b2, const SurfaceModel& s);

// Minimal q for which K + A1 + ... + Aq is always normally presented.
std::int64_t adjoint_threshold(const SurfaceModel& s);

struct AdjointVerdict {
    std::int64_t q = 0;
    NumClass result_class;
    bool np = false;
    bool threshold_met = false;
};

// Throws std::invalid_argument if some input is not ample.
AdjointVerdict adjoint_np_check(std::span<const NumClass> amples, const SurfaceModel& s);

enum class ProductMode { AmpleBpf, AmpleOnly };

struct ProductVerdict {
    bool np = false;
    bool corollary_applies = false;
};

// Throws std::invalid_argument if a factor fails the mode's precondition.
ProductVerdict product_np_check(std::span<const NumClass> factors, const SurfaceModel& s, ProductMode mode);

// Classical bounds for a line bundle of the given degree on a curve of genus g.
struct CurveBounds {
    std::int64_t g = 0;
    std::int64_t degree = 0;
    bool normally_generated = false;
    bool normally_presented = false;
    bool koszul = false;
    std::int64_t np_level = -1;
};

CurveBounds curve_bounds(std::int64_t g, std::int64_t degree);

}  // namespace ruledsurf
