#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "ruledsurf/surface.hpp"

namespace ruledsurf {

// Dimension of a cohomology group as far as the numerical class decides it.
class DimStatus {
public:
    enum class Kind { Exact, Positive, Indeterminate };

    static DimStatus exact(std::int64_t n);
    static DimStatus positive() noexcept { return DimStatus(Kind::Positive, 0); }
    static DimStatus indeterminate() noexcept { return DimStatus(Kind::Indeterminate, 0); }

    Kind kind() const noexcept { return kind_; }
    // Only meaningful for Exact.
    std::int64_t value() const noexcept { return value_; }

    bool is_exact() const noexcept { return kind_ == Kind::Exact; }
    bool is_zero() const noexcept { return kind_ == Kind::Exact && value_ == 0; }
    // Known to be nonzero (Positive or Exact(k > 0)).
    bool is_nonzero() const noexcept {
        return kind_ == Kind::Positive || (kind_ == Kind::Exact && value_ > 0);
    }
    bool is_indeterminate() const noexcept { return kind_ == Kind::Indeterminate; }

    friend bool operator==(const DimStatus&, const DimStatus&) = default;

private:
    DimStatus(Kind k, std::int64_t v) noexcept : kind_(k), value_(v) {}

    Kind kind_;
    std::int64_t value_;
};

std::ostream& operator<<(std::ostream& os, const DimStatus& d);

struct CohomologyProfile {
    DimStatus h0 = DimStatus::indeterminate();
    DimStatus h1 = DimStatus::indeterminate();
    DimStatus h2 = DimStatus::indeterminate();
    std::int64_t chi = 0;

    friend bool operator==(const CohomologyProfile&, const CohomologyProfile&) = default;
};

struct EffectivityStatus {
    enum class Kind { AllEffective, NoneEffective, FinitelyMany, Indeterminate };

    Kind kind = Kind::Indeterminate;
    // Populated only for FinitelyMany: the tags of the effective members.
    std::vector<BoundaryTag> tags;

    friend bool operator==(const EffectivityStatus&, const EffectivityStatus&) = default;
};

// Riemann-Roch with chi(O_X) = 0: chi(L) = L.(L - K) / 2.
std::int64_t chi(const NumClass& c, const SurfaceModel& s);

// The raw vanishing table for the numerical class: every cell is Exact(0),
// Positive or Indeterminate. chi is filled in as well.
CohomologyProfile vanishing_table(const NumClass& c, const SurfaceModel& s);

// h0 of the tagged members of the ray (2n, -n) on e = -1. Zero gives
// 3*floor(n/2) - n + 1, each Eta tag gives n - floor(n/2).
std::int64_t boundary_ray_h0(std::int64_t n, BoundaryTag tag);

// The table refined by the tag and by Riemann-Roch: wherever two entries are
// known to vanish the third is pinned to +/-chi.
CohomologyProfile cohomology_profile(const BundleRef& ref, const SurfaceModel& s);

EffectivityStatus effectivity_status(const NumClass& c, const SurfaceModel& s);

}  // namespace ruledsurf
