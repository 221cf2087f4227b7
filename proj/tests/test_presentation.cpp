#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "ruledsurf/positivity.hpp"
#include "ruledsurf/presentation.hpp"

using namespace ruledsurf;

namespace {

// Test-side oracle: search a box much larger than the library's bounds.
std::optional<Decomposition> wide_search(const NumClass& c, const SurfaceModel& s, std::int64_t pad) {
    for (std::int64_t a1 = -pad; a1 <= c.a + pad; ++a1) {
        for (std::int64_t b1 = -pad - 4 * std::abs(c.b) - 4 * std::abs(c.a) * (std::abs(s.e()) + 1);
             b1 <= pad + 4 * std::abs(c.b) + 4 * std::abs(c.a) * (std::abs(s.e()) + 1); ++b1) {
            const NumClass first{a1, b1};
            if (class_all_bpf(first, s) && class_all_bpf(c - first, s)) {
                return Decomposition{first, c - first, CaseTag::BruteForce};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

TEST(NormalPresentation, Examples) {
    EXPECT_FALSE(is_normally_presented({2, 1}, SurfaceModel(-1)));
    EXPECT_TRUE(is_normally_presented({1, 3}, SurfaceModel(-1)));
    EXPECT_FALSE(is_normally_presented({1, 3}, SurfaceModel(0)));
    EXPECT_TRUE(is_normally_presented({4, 0}, SurfaceModel(-1)));
    EXPECT_FALSE(is_normally_presented({5, -1}, SurfaceModel(-1)));
    EXPECT_TRUE(is_normally_presented({2, 8}, SurfaceModel(2)));
    EXPECT_FALSE(is_normally_presented({2, 7}, SurfaceModel(2)));
}

TEST(Koszul, Examples) {
    EXPECT_TRUE(is_koszul({5, 0}, SurfaceModel(-1)));
    EXPECT_FALSE(is_koszul({2, 1}, SurfaceModel(-1)));
    EXPECT_TRUE(is_koszul({1, 5}, SurfaceModel(0)));
}

TEST(DecomposeNp, Examples) {
    auto d = decompose_np({5, 0}, SurfaceModel(-1));
    ASSERT_TRUE(d);
    EXPECT_EQ(*d, (Decomposition{{4, -1}, {1, 1}, CaseTag::C423}));

    d = decompose_np({2, 5}, SurfaceModel(0));
    ASSERT_TRUE(d);
    EXPECT_EQ(*d, (Decomposition{{1, 2}, {1, 3}, CaseTag::EvenSplit}));

    EXPECT_FALSE(decompose_np({2, 1}, SurfaceModel(-1)));
}

TEST(DecomposeNp, CaseFamilies) {
    const SurfaceModel s(-1);
    EXPECT_EQ(*decompose_np({1, 3}, s), (Decomposition{{1, 1}, {0, 2}, CaseTag::C421}));
    EXPECT_EQ(*decompose_np({2, 2}, s), (Decomposition{{1, 1}, {1, 1}, CaseTag::C421}));
    EXPECT_EQ(*decompose_np({3, 1}, s), (Decomposition{{2, 0}, {1, 1}, CaseTag::C422}));
    EXPECT_EQ(*decompose_np({4, 0}, s), (Decomposition{{2, 0}, {2, 0}, CaseTag::C422}));
    EXPECT_EQ(*decompose_np({6, 0}, s), (Decomposition{{4, -1}, {2, 1}, CaseTag::C423}));
    EXPECT_EQ(*decompose_np({6, -1}, s), (Decomposition{{4, -1}, {2, 0}, CaseTag::C424}));
    EXPECT_EQ(*decompose_np({10, -3}, s), (Decomposition{{8, -3}, {2, 0}, CaseTag::C424}));
    EXPECT_EQ(*decompose_np({3, 7}, SurfaceModel(1)), (Decomposition{{1, 3}, {2, 4}, CaseTag::OddSplit}));
}

TEST(DecomposeNp, WitnessesCoverTheWholeRegionWithoutFallback) {
    for (std::int64_t e = -1; e <= 3; ++e) {
        const SurfaceModel s(e);
        for (std::int64_t a = -5; a <= 60; ++a) {
            for (std::int64_t b = -60; b <= 60; ++b) {
                const NumClass c{a, b};
                const auto d = decompose_np(c, s);
                ASSERT_EQ(d.has_value(), is_normally_presented(c, s));
                if (!d) continue;
                EXPECT_EQ(d->b1 + d->b2, c);
                EXPECT_TRUE(class_all_bpf(d->b1, s));
                EXPECT_TRUE(class_all_bpf(d->b2, s));
                EXPECT_NE(d->case_tag, CaseTag::BruteForce) << a << "," << b << " e=" << e;
            }
        }
    }
}

TEST(BruteForce, Examples) {
    const SurfaceModel s(-1);
    auto d = brute_force_decompose({4, 0}, s);
    ASSERT_TRUE(d);
    EXPECT_EQ(d->b1 + d->b2, (NumClass{4, 0}));
    EXPECT_EQ(d->case_tag, CaseTag::BruteForce);

    EXPECT_FALSE(brute_force_decompose({1, 2}, s));

    d = brute_force_decompose({0, 4}, s);
    ASSERT_TRUE(d);
    EXPECT_EQ(*d, (Decomposition{{0, 2}, {0, 2}, CaseTag::BruteForce}));
}

TEST(BruteForce, BoundsAreSound) {
    // nothing outside the library's box is a split, checked on a padded superset
    for (std::int64_t e = -1; e <= 2; ++e) {
        const SurfaceModel s(e);
        for (std::int64_t a = -3; a <= 12; ++a) {
            for (std::int64_t b = -12; b <= 12; ++b) {
                const NumClass c{a, b};
                const auto box = brute_force_search_bounds(c, s);
                const std::int64_t pad = 15;
                for (std::int64_t a1 = -pad; a1 <= a + pad; ++a1) {
                    for (std::int64_t b1 = -60; b1 <= 60; ++b1) {
                        const NumClass first{a1, b1};
                        if (!class_all_bpf(first, s) || !class_all_bpf(c - first, s)) continue;
                        ASSERT_FALSE(box.empty());
                        EXPECT_TRUE(a1 >= box.a1_lo && a1 <= box.a1_hi && b1 >= box.b1_lo && b1 <= box.b1_hi)
                            << "split " << first << " of " << c << " outside bounds, e=" << e;
                    }
                }
                EXPECT_EQ(brute_force_decompose(c, s).has_value(), wide_search(c, s, pad).has_value());
            }
        }
    }
}

TEST(SplitClassify, Examples) {
    const SurfaceModel s(-1);
    EXPECT_TRUE(thm43_classify({5, 0}, s));
    EXPECT_FALSE(thm43_classify({0, 4}, s));
    EXPECT_FALSE(thm43_classify({2, 1}, s));
}

TEST(Prop21, Examples) {
    const SurfaceModel s(-1);
    auto r = prop21_hypotheses({2, 0}, {2, 0}, s);
    EXPECT_EQ(r.all_satisfied, Verdict::True);

    r = prop21_hypotheses({1, 1}, {4, -1}, s);
    EXPECT_TRUE(r.h2_b1_minus_b2.is_zero());

    r = prop21_hypotheses({2, -1}, {2, 0}, s);
    EXPECT_EQ(r.all_satisfied, Verdict::Indeterminate);
    EXPECT_TRUE(r.h1_b1.is_indeterminate());

    r = prop21_hypotheses({1, -1}, {2, 0}, s);
    EXPECT_EQ(r.all_satisfied, Verdict::False);
}

// The constructive witnesses satisfy the vanishing hypotheses at class level,
// except the C424 family where H^2(B2 - B1) sits on an undecided cell.
TEST(Prop21, HoldsForConstructiveWitnesses) {
    for (std::int64_t e = -1; e <= 2; ++e) {
        const SurfaceModel s(e);
        for (std::int64_t a = 1; a <= 30; ++a) {
            for (std::int64_t b = -30; b <= 30; ++b) {
                const auto d = decompose_np({a, b}, s);
                if (!d) continue;
                const auto r = prop21_hypotheses(d->b1, d->b2, s);
                if (d->case_tag == CaseTag::C424) {
                    EXPECT_EQ(r.all_satisfied, Verdict::Indeterminate);
                    EXPECT_TRUE(r.h2_b2_minus_b1.is_indeterminate());
                    EXPECT_TRUE(r.h2_b1_minus_b2.is_zero());
                } else {
                    EXPECT_EQ(r.all_satisfied, Verdict::True) << a << "," << b << " e=" << e;
                }
            }
        }
    }
}

TEST(Adjoint, Examples) {
    std::vector<NumClass> five(5, NumClass{1, 0});
    auto v = adjoint_np_check(five, SurfaceModel(-1));
    EXPECT_EQ(v.result_class, (NumClass{3, 1}));
    EXPECT_TRUE(v.np);
    EXPECT_TRUE(v.threshold_met);

    std::vector<NumClass> four(4, NumClass{1, 0});
    v = adjoint_np_check(four, SurfaceModel(-1));
    EXPECT_EQ(v.result_class, (NumClass{2, 1}));
    EXPECT_FALSE(v.np);
    EXPECT_FALSE(v.threshold_met);

    std::vector<NumClass> three(3, NumClass{1, 2});
    v = adjoint_np_check(three, SurfaceModel(1));
    EXPECT_EQ(v.result_class, (NumClass{1, 5}));
    EXPECT_TRUE(v.np);
    EXPECT_TRUE(v.threshold_met);

    std::vector<NumClass> bad{{1, 0}, {0, 3}};
    EXPECT_THROW(adjoint_np_check(bad, SurfaceModel(-1)), std::invalid_argument);
    EXPECT_EQ(adjoint_threshold(SurfaceModel(0)), 4);
    EXPECT_EQ(adjoint_threshold(SurfaceModel(5)), 3);
}

TEST(Product, Examples) {
    std::vector<NumClass> two{{1, 1}, {1, 1}};
    auto v = product_np_check(two, SurfaceModel(-1), ProductMode::AmpleBpf);
    EXPECT_TRUE(v.np);
    EXPECT_TRUE(v.corollary_applies);

    std::vector<NumClass> four(4, NumClass{1, 0});
    v = product_np_check(four, SurfaceModel(-1), ProductMode::AmpleOnly);
    EXPECT_TRUE(v.np);
    EXPECT_TRUE(v.corollary_applies);

    std::vector<NumClass> three(3, NumClass{1, 0});
    v = product_np_check(three, SurfaceModel(-1), ProductMode::AmpleOnly);
    EXPECT_FALSE(v.np);
    EXPECT_FALSE(v.corollary_applies);

    std::vector<NumClass> one{{1, 1}};
    v = product_np_check(one, SurfaceModel(-1), ProductMode::AmpleBpf);
    EXPECT_FALSE(v.np);
    EXPECT_FALSE(v.corollary_applies);

    EXPECT_THROW(product_np_check(four, SurfaceModel(-1), ProductMode::AmpleBpf), std::invalid_argument);
}

TEST(CurveBounds, Examples) {
    auto cb = curve_bounds(1, 3);
    EXPECT_TRUE(cb.normally_generated);
    EXPECT_FALSE(cb.normally_presented);

    cb = curve_bounds(1, 4);
    EXPECT_TRUE(cb.normally_presented);
    EXPECT_TRUE(cb.koszul);
    EXPECT_EQ(cb.np_level, 1);

    cb = curve_bounds(0, 1);
    EXPECT_TRUE(cb.normally_generated);
    EXPECT_EQ(cb.np_level, 0);

    EXPECT_EQ(curve_bounds(3, 2).np_level, -1);
    EXPECT_THROW(curve_bounds(-1, 5), std::invalid_argument);
}

TEST(CurveBounds, Invariants) {
    for (std::int64_t g = 0; g <= 5; ++g) {
        std::int64_t prev = -2;
        for (std::int64_t d = -5; d <= 30; ++d) {
            const auto cb = curve_bounds(g, d);
            EXPECT_GE(cb.np_level, prev);
            prev = cb.np_level;
            if (cb.normally_presented) EXPECT_TRUE(cb.normally_generated);
            EXPECT_EQ(cb.koszul, cb.normally_presented);
            EXPECT_EQ(cb.normally_presented, cb.np_level >= 1);
        }
    }
}
