#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ruledsurf/cohomology.hpp"

using namespace ruledsurf;

namespace {

const DimStatus kZero = DimStatus::exact(0);
const DimStatus kPos = DimStatus::positive();
const DimStatus kUnknown = DimStatus::indeterminate();

using Effect = EffectivityStatus::Kind;

}  // namespace

TEST(Chi, Examples) {
    EXPECT_EQ(chi({2, 0}, SurfaceModel(-1)), 3);
    for (std::int64_t b = -30; b <= 30; ++b) EXPECT_EQ(chi({-1, b}, SurfaceModel(-1)), 0);
    for (std::int64_t e = -1; e <= 3; ++e) EXPECT_EQ(chi({0, 0}, SurfaceModel(e)), 0);
}

TEST(Chi, MatchesClosedForm) {
    for (std::int64_t e = -1; e <= 3; ++e) {
        const SurfaceModel s(e);
        for (std::int64_t a = -40; a <= 40; ++a) {
            for (std::int64_t b = -40; b <= 40; ++b) {
                ASSERT_EQ(chi({a, b}, s), oracle::chi_closed_form({a, b}, e)) << a << "," << b << " e=" << e;
            }
        }
    }
}

TEST(Chi, VanishesOnBoundaryRay) {
    const SurfaceModel s(-1);
    for (std::int64_t n = 0; n <= 10'000; ++n) ASSERT_EQ(chi({2 * n, -n}, s), 0);
}

TEST(VanishingTable, Examples) {
    auto t = vanishing_table({3, 1}, SurfaceModel(-1));
    EXPECT_EQ(t.h0, kPos);
    EXPECT_EQ(t.h1, kZero);
    EXPECT_EQ(t.h2, kZero);

    t = vanishing_table({-1, 7}, SurfaceModel(2));
    EXPECT_EQ(t.h0, kZero);
    EXPECT_EQ(t.h1, kZero);
    EXPECT_EQ(t.h2, kZero);

    t = vanishing_table({-3, -1}, SurfaceModel(-1));
    EXPECT_EQ(t.h0, kZero);
    EXPECT_EQ(t.h1, kZero);
    EXPECT_EQ(t.h2, kPos);
}

TEST(VanishingTable, UndecidedCells) {
    auto t = vanishing_table({4, -2}, SurfaceModel(-1));
    EXPECT_EQ(t.h0, kUnknown);
    EXPECT_EQ(t.h1, kUnknown);
    EXPECT_EQ(t.h2, kZero);

    t = vanishing_table({-6, 3}, SurfaceModel(-1));
    EXPECT_EQ(t.h0, kZero);
    EXPECT_EQ(t.h1, kUnknown);
    EXPECT_EQ(t.h2, kUnknown);

    // e >= 0: b = 0 for h0, b = ae for h1, b = -e and b = e(a+1) on the dual side
    t = vanishing_table({2, 0}, SurfaceModel(0));
    EXPECT_EQ(t.h0, kUnknown);
    EXPECT_EQ(t.h1, kUnknown);
    t = vanishing_table({2, 2}, SurfaceModel(1));
    EXPECT_EQ(t.h0, kPos);
    EXPECT_EQ(t.h1, kUnknown);
    t = vanishing_table({-3, -2}, SurfaceModel(2));
    EXPECT_EQ(t.h2, kUnknown);
    t = vanishing_table({-3, -4}, SurfaceModel(2));
    EXPECT_EQ(t.h1, kUnknown);
}

// On a <= -2 with e >= 0 the h1 vanishing side is b < e(a+1); e.g. (-2, 0)
// on e = 1 has h0 = h2 = 0 and chi = -1, so h1 must be 1.
TEST(VanishingTable, DualSideH1Orientation) {
    const SurfaceModel s(1);
    auto t = vanishing_table({-2, 0}, s);
    EXPECT_EQ(t.h0, kZero);
    EXPECT_EQ(t.h2, kZero);
    EXPECT_EQ(t.h1, kPos);
    EXPECT_EQ(t.chi, -1);
    t = vanishing_table({-2, -5}, s);
    EXPECT_EQ(t.h1, kZero);
    EXPECT_EQ(t.h2, kPos);
}

TEST(CohomologyProfile, BoundaryRayTags) {
    const SurfaceModel s(-1);
    auto p = cohomology_profile({{4, -2}, BoundaryTag::Zero}, s);
    EXPECT_EQ(p.h0, DimStatus::exact(2));
    EXPECT_EQ(p.h1, DimStatus::exact(2));
    EXPECT_EQ(p.h2, kZero);

    p = cohomology_profile({{2, -1}, BoundaryTag::Zero}, s);
    EXPECT_EQ(p.h0, kZero);
    EXPECT_EQ(p.h1, kZero);

    p = cohomology_profile({{6, -3}, BoundaryTag::Eta1}, s);
    EXPECT_EQ(p.h0, DimStatus::exact(2));

    p = cohomology_profile({{0, 0}, BoundaryTag::Zero}, s);
    EXPECT_EQ(p.h0, DimStatus::exact(1));
    EXPECT_EQ(p.h1, DimStatus::exact(1));
    EXPECT_EQ(p.h2, kZero);
}

TEST(CohomologyProfile, GenericMemberOfRay) {
    const SurfaceModel s(-1);
    for (std::int64_t n = 1; n <= 20; ++n) {
        const auto p = cohomology_profile({{2 * n, -n}}, s);
        EXPECT_EQ(p.h0, kZero);
        EXPECT_EQ(p.h1, kZero);
        EXPECT_EQ(p.h2, kZero);
        const auto d = cohomology_profile({{-2 - 2 * n, 1 + n}}, s);
        EXPECT_EQ(d.h0, kZero);
        EXPECT_EQ(d.h1, kZero);
        EXPECT_EQ(d.h2, kZero);
    }
    // n = 0 stays as the table has it
    const auto p = cohomology_profile({{0, 0}}, s);
    EXPECT_EQ(p.h0, kUnknown);
    EXPECT_EQ(p.h1, kUnknown);
}

TEST(CohomologyProfile, RiemannRochPinsTheRemainingEntry) {
    const auto p = cohomology_profile({{2, 0}}, SurfaceModel(-1));
    EXPECT_EQ(p.h0, DimStatus::exact(3));
    EXPECT_EQ(p.h1, kZero);
    EXPECT_EQ(p.h2, kZero);

    const auto q = cohomology_profile({{-2, 0}}, SurfaceModel(1));
    EXPECT_EQ(q.h1, DimStatus::exact(1));
}

TEST(CohomologyProfile, RejectsInvalidTag) {
    EXPECT_THROW(cohomology_profile({{3, 0}, BoundaryTag::Zero}, SurfaceModel(-1)), std::invalid_argument);
    EXPECT_THROW(cohomology_profile({{2, -1}, BoundaryTag::Eta2}, SurfaceModel(1)), std::invalid_argument);
}

TEST(CohomologyProfile, CoherentWithTableAndEulerCharacteristic) {
    for (std::int64_t e = -1; e <= 2; ++e) {
        const SurfaceModel s(e);
        for (std::int64_t a = -30; a <= 30; ++a) {
            for (std::int64_t b = -30; b <= 30; ++b) {
                const auto t = vanishing_table({a, b}, s);
                const auto p = cohomology_profile({{a, b}}, s);
                for (auto [cell, got] : {std::pair{t.h0, p.h0}, std::pair{t.h1, p.h1}, std::pair{t.h2, p.h2}}) {
                    if (cell.is_zero()) EXPECT_TRUE(got.is_zero());
                    if (cell.kind() == DimStatus::Kind::Positive) EXPECT_TRUE(got.is_nonzero());
                }
                if (p.h0.is_exact() && p.h1.is_exact() && p.h2.is_exact()) {
                    EXPECT_EQ(p.h0.value() - p.h1.value() + p.h2.value(), p.chi);
                }
            }
        }
    }
}

TEST(BoundaryRayH0, TableRowsAndTotals) {
    const std::int64_t zero_row[] = {1, 0, 2, 1};
    const std::int64_t eta_row[] = {0, 1, 1, 2};
    for (std::int64_t n = 0; n < 4; ++n) {
        EXPECT_EQ(boundary_ray_h0(n, BoundaryTag::Zero), zero_row[n]);
        EXPECT_EQ(boundary_ray_h0(n, BoundaryTag::Eta2), eta_row[n]);
    }
    for (std::int64_t n = 1; n <= 1000; ++n) {
        const std::int64_t m = n / 2;
        const std::int64_t length = n % 2 == 0 ? 4 * m + 1 : 4 * m + 3;
        EXPECT_EQ(boundary_ray_h0(n, BoundaryTag::Zero) + 3 * boundary_ray_h0(n, BoundaryTag::Eta1), length);
    }
    EXPECT_THROW(boundary_ray_h0(-1, BoundaryTag::Zero), std::invalid_argument);
    EXPECT_THROW(boundary_ray_h0(2, BoundaryTag::Generic), std::invalid_argument);
}

TEST(Effectivity, Examples) {
    const SurfaceModel s(-1);
    auto st = effectivity_status({2, -1}, s);
    EXPECT_EQ(st.kind, Effect::FinitelyMany);
    EXPECT_EQ(st.tags, (std::vector{BoundaryTag::Eta1, BoundaryTag::Eta2, BoundaryTag::Eta3}));

    st = effectivity_status({8, -4}, s);
    EXPECT_EQ(st.kind, Effect::FinitelyMany);
    EXPECT_EQ(st.tags, (std::vector{BoundaryTag::Zero, BoundaryTag::Eta1, BoundaryTag::Eta2, BoundaryTag::Eta3}));

    EXPECT_EQ(effectivity_status({1, -5}, SurfaceModel(0)).kind, Effect::NoneEffective);
    EXPECT_EQ(effectivity_status({0, 0}, s).kind, Effect::AllEffective);
    EXPECT_EQ(effectivity_status({3, 1}, s).kind, Effect::AllEffective);
    EXPECT_EQ(effectivity_status({-1, 100}, s).kind, Effect::NoneEffective);
    EXPECT_EQ(effectivity_status({3, 0}, SurfaceModel(1)).kind, Effect::Indeterminate);
}

TEST(Effectivity, FinitelyManyOnlyOnTheRay) {
    for (std::int64_t e = -1; e <= 2; ++e) {
        const SurfaceModel s(e);
        for (std::int64_t a = -20; a <= 20; ++a) {
            for (std::int64_t b = -20; b <= 20; ++b) {
                const auto st = effectivity_status({a, b}, s);
                if (st.kind == Effect::FinitelyMany) {
                    auto n = boundary_ray_index({a, b}, s);
                    ASSERT_TRUE(n);
                    EXPECT_GE(*n, 1);
                }
                if (st.kind == Effect::Indeterminate) EXPECT_GE(e, 0);
            }
        }
    }
}
