#include "ruledsurf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ruledsurf/cohomology.hpp"
#include "ruledsurf/positivity.hpp"

namespace ruledsurf {

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

int exit_code(const VerifyReport& report) { return report.passed() ? 0 : 1; }

namespace {

class Check {
public:
    explicit Check(std::string name) { result_.name = std::move(name); }

    void expect(bool ok, const std::function<std::string()>& describe) {
        ++result_.cases;
        if (!ok) {
            result_.passed = false;
            result_.counterexamples.push_back(describe());
        }
    }

    CheckResult take() { return std::move(result_); }

private:
    CheckResult result_;
};

std::string where(std::int64_t e, const NumClass& c) {
    std::ostringstream os;
    os << "e=" << e << " " << c;
    return os.str();
}

std::string show(const CohomologyProfile& p) {
    std::ostringstream os;
    os << "[" << p.h0 << ", " << p.h1 << ", " << p.h2 << "; chi=" << p.chi << "]";
    return os.str();
}

template <typename F>
void for_window(std::int64_t w, F&& f) {
    for (std::int64_t a = -w; a <= w; ++a) {
        for (std::int64_t b = -w; b <= w; ++b) f(NumClass{a, b});
    }
}

bool any_indeterminate(const CohomologyProfile& p) {
    return p.h0.is_indeterminate() || p.h1.is_indeterminate() || p.h2.is_indeterminate();
}

CheckResult duality_symmetry(const VerifyConfig& cfg) {
    Check check("duality_symmetry");
    for (auto e : cfg.e_values) {
        const SurfaceModel s(e);
        for_window(cfg.window, [&](const NumClass& c) {
            const NumClass dual = serre_dual_class(c, s);
            const auto t = vanishing_table(c, s);
            const auto td = vanishing_table(dual, s);
            if (!any_indeterminate(t) && !any_indeterminate(td)) {
                check.expect(t.h0 == td.h2 && t.h1 == td.h1 && t.h2 == td.h0,
                             [&] { return where(e, c) + " table " + show(t) + " vs dual " + show(td); });
            }
            const auto p = cohomology_profile({c}, s);
            const auto pd = cohomology_profile({dual}, s);
            if (!any_indeterminate(p) && !any_indeterminate(pd)) {
                check.expect(p.h0 == pd.h2 && p.h1 == pd.h1 && p.h2 == pd.h0 && p.chi == pd.chi,
                             [&] { return where(e, c) + " profile " + show(p) + " vs dual " + show(pd); });
            }
        });
    }
    return check.take();
}

CheckResult riemann_roch_consistency(const VerifyConfig& cfg) {
    Check check("riemann_roch_consistency");
    const auto pos = DimStatus::positive();
    for (auto e : cfg.e_values) {
        const SurfaceModel s(e);
        for_window(cfg.window, [&](const NumClass& c) {
            const auto t = vanishing_table(c, s);
            bool ok = true;
            if (t.h0 == pos && t.h1.is_zero() && t.h2.is_zero()) ok = t.chi > 0;
            if (t.h0.is_zero() && t.h1 == pos && t.h2.is_zero()) ok = t.chi < 0;
            if (t.h0.is_zero() && t.h1.is_zero() && t.h2 == pos) ok = t.chi > 0;
            if (t.h0.is_zero() && t.h1.is_zero() && t.h2.is_zero()) ok = t.chi == 0;
            check.expect(ok, [&] { return where(e, c) + " table " + show(t); });
        });
        if (e == -1) {
            for (std::int64_t n = 0; n <= 10'000; ++n) {
                const NumClass c{2 * n, -n};
                const auto value = chi(c, s);
                check.expect(value == 0, [&] { return where(e, c) + " chi=" + std::to_string(value); });
            }
        }
    }
    return check.take();
}

CheckResult profile_coherence(const VerifyConfig& cfg) {
    Check check("profile_coherence");
    for (auto e : cfg.e_values) {
        const SurfaceModel s(e);
        for_window(cfg.window, [&](const NumClass& c) {
            std::string error;
            try {
                (void)cohomology_profile({c}, s);
                if (auto n = boundary_ray_index(c, s)) {
                    for (auto tag : {BoundaryTag::Zero, BoundaryTag::Eta1, BoundaryTag::Eta2, BoundaryTag::Eta3}) {
                        (void)cohomology_profile({c, tag}, s);
                    }
                }
            } catch (const std::exception& ex) {
                error = ex.what();
            }
            check.expect(error.empty(), [&] { return where(e, c) + " " + error; });
        });
    }
    return check.take();
}

CheckResult boundary_ray_table(const VerifyConfig&) {
    Check check("boundary_ray_table");
    const std::int64_t zero_row[] = {1, 0, 2, 1};
    const std::int64_t eta_row[] = {0, 1, 1, 2};
    for (std::int64_t n = 0; n < 4; ++n) {
        const auto z = boundary_ray_h0(n, BoundaryTag::Zero);
        const auto t = boundary_ray_h0(n, BoundaryTag::Eta1);
        check.expect(z == zero_row[n] && t == eta_row[n], [&] {
            return "n=" + std::to_string(n) + " zero=" + std::to_string(z) + " eta=" + std::to_string(t);
        });
    }
    for (std::int64_t n = 1; n <= 1000; ++n) {
        const std::int64_t m = n / 2;
        const std::int64_t expected = n % 2 == 0 ? 4 * m + 1 : 4 * m + 3;
        const std::int64_t total = boundary_ray_h0(n, BoundaryTag::Zero) + boundary_ray_h0(n, BoundaryTag::Eta1) +
                                   boundary_ray_h0(n, BoundaryTag::Eta2) + boundary_ray_h0(n, BoundaryTag::Eta3);
        check.expect(total == expected, [&] {
            return "n=" + std::to_string(n) + " total=" + std::to_string(total) + " expected=" +
                   std::to_string(expected);
        });
    }
    return check.take();
}

CheckResult np_equivalence(const VerifyConfig& cfg) {
    Check check("np_equivalence");
    for (auto e : cfg.e_values) {
        const SurfaceModel s(e);
        for_window(cfg.window, [&](const NumClass& c) {
            const bool np = cfg.predicates.normally_presented(c, s);
            const bool split = thm43_classify(c, s);
            check.expect(np == split, [&] {
                return where(e, c) + " np=" + (np ? "true" : "false") + " ample+split=" + (split ? "true" : "false");
            });
        });
    }
    return check.take();
}

bool case_range_matches(const Decomposition& d, const NumClass& c, std::int64_t e) {
    const std::int64_t t = c.a + 2 * c.b;
    switch (d.case_tag) {
        case CaseTag::C421: return e == -1 && c.a >= 1 && c.a <= 2;
        case CaseTag::C422: return e == -1 && c.a >= 3 && c.a <= 4;
        case CaseTag::C423: return e == -1 && c.a >= 5 && t > 4;
        case CaseTag::C424: return e == -1 && c.a >= 5 && t == 4;
        case CaseTag::EvenSplit: return e >= 0 && c.a % 2 == 0;
        case CaseTag::OddSplit: return e >= 0 && c.a % 2 != 0;
        case CaseTag::BruteForce: return false;
    }
    return false;
}

CheckResult witness_validity(const VerifyConfig& cfg) {
    Check check("witness_validity");
    for (auto e : cfg.e_values) {
        const SurfaceModel s(e);
        for_window(cfg.window, [&](const NumClass& c) {
            if (!is_normally_presented(c, s)) return;
            std::optional<Decomposition> d;
            std::string error;
            try {
                d = decompose_np(c, s);
            } catch (const std::exception& ex) {
                error = ex.what();
            }
            const bool ok = d && class_add(d->b1, d->b2) == c && class_all_bpf(d->b1, s) &&
                            class_all_bpf(d->b2, s) && case_range_matches(*d, c, e);
            check.expect(ok, [&] {
                std::ostringstream os;
                os << where(e, c);
                if (d) os << " witness " << d->b1 << " + " << d->b2 << " case " << to_string(d->case_tag);
                if (!error.empty()) os << " " << error;
                return os.str();
            });
        });
    }
    return check.take();
}

// Half-planes bounding the normally presented region, as (coefficients of a
// and b in the functional, lower bound).
struct HalfPlane {
    std::int64_t ca;
    std::int64_t cb;
    std::int64_t bound;
};

std::vector<HalfPlane> np_half_planes(std::int64_t e) {
    if (e == -1) return {{1, 0, 1}, {1, 1, 4}, {1, 2, 4}};
    return {{1, 0, 1}, {-e, 1, 4}};
}

std::vector<HalfPlane> recession_cone(std::int64_t e) {
    if (e == -1) return {{1, 0, 0}, {1, 1, 0}, {1, 2, 0}};
    return {{1, 0, 0}, {-e, 1, 0}};
}

bool inside(const std::vector<HalfPlane>& planes, const NumClass& c) {
    return std::all_of(planes.begin(), planes.end(),
                       [&](const HalfPlane& h) { return h.ca * c.a + h.cb * c.b >= h.bound; });
}

CheckResult convexity(const VerifyConfig& cfg) {
    Check check("convexity");
    for (auto e : cfg.e_values) {
        const SurfaceModel s(e);
        const auto planes = np_half_planes(e);
        std::vector<NumClass> np;
        for_window(cfg.window, [&](const NumClass& c) {
            const bool is_np = cfg.predicates.normally_presented(c, s);
            if (is_np) np.push_back(c);
            check.expect(is_np == inside(planes, c),
                         [&] { return where(e, c) + " np disagrees with the half-plane description"; });
        });
        // the minima of the defining functionals over the region are the bounds
        if (!np.empty()) {
            for (const auto& h : planes) {
                std::int64_t lowest = std::numeric_limits<std::int64_t>::max();
                for (const auto& c : np) lowest = std::min(lowest, h.ca * c.a + h.cb * c.b);
                check.expect(lowest == h.bound, [&] {
                    return "e=" + std::to_string(e) + " functional (" + std::to_string(h.ca) + ", " +
                           std::to_string(h.cb) + ") minimum " + std::to_string(lowest) + " != " +
                           std::to_string(h.bound);
                });
            }
        }
        for (std::size_t i = 0; i < np.size(); ++i) {
            for (std::size_t j = i; j < np.size(); ++j) {
                const NumClass sum = np[i] + np[j];
                if (sum.a % 2 != 0 || sum.b % 2 != 0) continue;
                const NumClass mid{sum.a / 2, sum.b / 2};
                check.expect(cfg.predicates.normally_presented(mid, s), [&] {
                    std::ostringstream os;
                    os << where(e, mid) << " midpoint of " << np[i] << " and " << np[j] << " is not np";
                    return os.str();
                });
            }
        }
        const auto cone = recession_cone(e);
        for (const auto& c : np) {
            for (std::int64_t ra = 0; ra <= 3; ++ra) {
                for (std::int64_t rb = -3; rb <= 3; ++rb) {
                    const NumClass r{ra, rb};
                    if (!inside(cone, r)) continue;
                    check.expect(cfg.predicates.normally_presented(c + r, s), [&] {
                        std::ostringstream os;
                        os << where(e, c) << " + " << r << " leaves the np region";
                        return os.str();
                    });
                }
            }
        }
    }
    return check.take();
}

CheckResult koszul_agreement(const VerifyConfig& cfg) {
    Check check("koszul_agreement");
    for (auto e : cfg.e_values) {
        const SurfaceModel s(e);
        for_window(cfg.window, [&](const NumClass& c) {
            check.expect(cfg.predicates.koszul(c, s) == cfg.predicates.normally_presented(c, s),
                         [&] { return where(e, c) + " koszul != np"; });
        });
    }
    return check.take();
}

// All classes in [1, 10] x [-10, 10] passing the predicate; the b range is
// widened when e is too large for the box to contain any.
std::vector<NumClass> sample_pool(const SurfaceModel& s, bool (*pred)(const NumClass&, const SurfaceModel&)) {
    std::vector<NumClass> pool;
    for (std::int64_t b_hi = 10; pool.empty(); b_hi += 10) {
        for (std::int64_t a = 1; a <= 10; ++a) {
            for (std::int64_t b = -10; b <= b_hi; ++b) {
                if (pred({a, b}, s)) pool.push_back({a, b});
            }
        }
    }
    return pool;
}

std::string show_tuple(const std::vector<NumClass>& t) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? ", " : "") << t[i];
    os << "]";
    return os.str();
}

CheckResult corollary_soundness(const VerifyConfig& cfg) {
    Check check("corollary_soundness");
    std::mt19937_64 rng(cfg.seed);
    for (auto e : cfg.e_values) {
        const SurfaceModel s(e);
        const auto ample_pool = sample_pool(s, is_ample);
        const auto bpf_pool = sample_pool(s, is_ample_and_all_bpf);
        auto run = [&](const std::vector<NumClass>& pool, std::int64_t q_min, NumClass offset, const char* label) {
            std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
            std::uniform_int_distribution<std::int64_t> extra(0, 2);
            for (std::size_t i = 0; i < cfg.random_tuples; ++i) {
                const std::int64_t q = q_min + extra(rng);
                std::vector<NumClass> tuple;
                NumClass total = offset;
                for (std::int64_t k = 0; k < q; ++k) {
                    tuple.push_back(pool[pick(rng)]);
                    total = total + tuple.back();
                }
                check.expect(cfg.predicates.normally_presented(total, s), [&] {
                    return std::string(label) + " e=" + std::to_string(e) + " tuple " + show_tuple(tuple);
                });
            }
        };
        run(bpf_pool, 2, {0, 0}, "ample+bpf product");
        run(ample_pool, 4, {0, 0}, "ample product");
        run(ample_pool, adjoint_threshold(s), canonical_class(s), "adjoint");
    }
    return check.take();
}

CheckResult sharpness(const VerifyConfig& cfg) {
    Check check("sharpness");
    auto expect_not_np = [&](std::int64_t e, const NumClass& c, const char* label) {
        check.expect(!cfg.predicates.normally_presented(c, SurfaceModel(e)),
                     [&] { return std::string(label) + " " + where(e, c) + " is np"; });
    };
    // K + 4C0 on e = -1, K + 3C0 + 3f on e = 0, K + 2C0 + 2(e+1)f on e >= 1
    expect_not_np(-1, canonical_class(SurfaceModel(-1)) + NumClass{4, 0}, "adjoint q=4");
    expect_not_np(0, canonical_class(SurfaceModel(0)) + NumClass{3, 3}, "adjoint q=3");
    std::vector<std::int64_t> es{1, 2, 3};
    for (auto e : cfg.e_values) {
        if (e >= 1 && std::find(es.begin(), es.end(), e) == es.end()) es.push_back(e);
    }
    for (auto e : es) expect_not_np(e, canonical_class(SurfaceModel(e)) + NumClass{2, 2 * (e + 1)}, "adjoint q=2");
    // single ample+bpf factor, three ample factors
    expect_not_np(-1, {1, 1}, "ample+bpf q=1");
    expect_not_np(-1, {3, 0}, "ample q=3");
    return check.take();
}

}  // namespace

VerifyReport run_verify(const VerifyConfig& config) {
    if (config.window < kMinVerifyWindow) {
        throw std::invalid_argument("verify window must be >= " + std::to_string(kMinVerifyWindow));
    }
    for (auto e : config.e_values) (void)SurfaceModel(e);

    const auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    report.window = config.window;
    report.e_values = config.e_values;
    report.seed = config.seed;
    report.checks.push_back(duality_symmetry(config));
    report.checks.push_back(riemann_roch_consistency(config));
    report.checks.push_back(profile_coherence(config));
    report.checks.push_back(boundary_ray_table(config));
    report.checks.push_back(np_equivalence(config));
    report.checks.push_back(witness_validity(config));
    report.checks.push_back(convexity(config));
    report.checks.push_back(koszul_agreement(config));
    report.checks.push_back(corollary_soundness(config));
    report.checks.push_back(sharpness(config));
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

Json to_json(const VerifyReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        checks.push_back(Json{{"name", c.name},
                              {"passed", c.passed},
                              {"cases", c.cases},
                              {"counterexamples", c.counterexamples}});
    }
    return Json{{"suite", report.suite},
                {"window", Json{{"a", Json::array({-report.window, report.window})},
                                {"b", Json::array({-report.window, report.window})}}},
                {"e_values", report.e_values},
                {"seed", report.seed},
                {"passed", report.passed()},
                {"checks", checks},
                {"wall_time_ms", report.wall_time_ms}};
}

}  // namespace ruledsurf
