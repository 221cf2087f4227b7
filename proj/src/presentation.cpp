#include "ruledsurf/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ruledsurf/checked.hpp"
#include "ruledsurf/positivity.hpp"

namespace ruledsurf {

using checked::add;
using checked::ceil_div;
using checked::floor_div;
using checked::mul;
using checked::sub;

std::string_view to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::C421: return "C421";
        case CaseTag::C422: return "C422";
        case CaseTag::C423: return "C423";
        case CaseTag::C424: return "C424";
        case CaseTag::EvenSplit: return "EvenSplit";
        case CaseTag::OddSplit: return "OddSplit";
        case CaseTag::BruteForce: return "BruteForce";
    }
    return "BruteForce";
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::True: return "true";
        case Verdict::False: return "false";
        case Verdict::Indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

bool is_normally_presented(const NumClass& c, const SurfaceModel& s) {
    if (s.e() == -1) return c.a >= 1 && add(c.a, c.b) >= 4 && add(c.a, mul(2, c.b)) >= 4;
    return c.a >= 1 && sub(c.b, mul(c.a, s.e())) >= 4;
}

bool is_koszul(const NumClass& c, const SurfaceModel& s) { return is_normally_presented(c, s); }

namespace {

// The e = -1 families. Returns nullopt when the solved parameters fall
// outside the family's stated ranges.
std::optional<Decomposition> decompose_e_minus_one(const NumClass& c) {
    const std::int64_t a = c.a;
    const std::int64_t b = c.b;
    if (a == 1) {
        // B1 = C0 + nf, B2 = 2f
        std::int64_t n = sub(b, 2);
        if (n < 1) return std::nullopt;
        return Decomposition{{1, n}, {0, 2}, CaseTag::C421};
    }
    if (a == 2) {
        // B1 = C0 + nf, B2 = C0 + f
        std::int64_t n = sub(b, 1);
        if (n < 1) return std::nullopt;
        return Decomposition{{1, n}, {1, 1}, CaseTag::C421};
    }
    if (a == 3) {
        // B1 = 2C0, B2 = C0 + nf
        if (b < 1) return std::nullopt;
        return Decomposition{{2, 0}, {1, b}, CaseTag::C422};
    }
    if (a == 4) {
        // B1 = 2C0, B2 = 2C0 + lf
        if (b < 0) return std::nullopt;
        return Decomposition{{2, 0}, {2, b}, CaseTag::C422};
    }
    if (a >= 5) {
        const std::int64_t t = add(a, mul(2, b));
        if (t == 4) {
            // B1 = 2C0 + m(2C0 - f), B2 = 2C0
            std::int64_t m = (a - 4) / 2;
            if (m < 1) return std::nullopt;
            return Decomposition{{add(2, mul(2, m)), -m}, {2, 0}, CaseTag::C424};
        }
        if (t < 4) return std::nullopt;
        if (a % 2 == 0) {
            // B2 = 2C0 + lf
            std::int64_t m = (a - 4) / 2;
            std::int64_t l = add(b, m);
            if (m < 1 || l < 1) return std::nullopt;
            return Decomposition{{add(2, mul(2, m)), -m}, {2, l}, CaseTag::C423};
        }
        // B2 = C0 + nf
        std::int64_t m = (a - 3) / 2;
        std::int64_t n = add(b, m);
        if (m < 1 || n < 1) return std::nullopt;
        return Decomposition{{add(2, mul(2, m)), -m}, {1, n}, CaseTag::C423};
    }
    return std::nullopt;
}

Decomposition decompose_e_nonnegative(const NumClass& c, std::int64_t e) {
    if (c.a % 2 == 0) {
        return {{c.a / 2, floor_div(c.b, 2)}, {c.a / 2, ceil_div(c.b, 2)}, CaseTag::EvenSplit};
    }
    return {{floor_div(c.a, 2), floor_div(sub(c.b, e), 2)},
            {ceil_div(c.a, 2), ceil_div(add(c.b, e), 2)},
            CaseTag::OddSplit};
}

void check_witness(const Decomposition& d, const NumClass& c, const SurfaceModel& s) {
    if (class_add(d.b1, d.b2) != c || !class_all_bpf(d.b1, s) || !class_all_bpf(d.b2, s)) {
        std::ostringstream msg;
        msg << "invalid " << to_string(d.case_tag) << " witness " << d.b1 << " + " << d.b2 << " for " << c
            << " on e = " << s.e();
        throw std::logic_error(msg.str());
    }
}

constexpr std::int64_t kMaxSearchCells = 50'000'000;

}  // namespace

std::optional<Decomposition> decompose_np(const NumClass& c, const SurfaceModel& s) {
    if (!is_normally_presented(c, s)) return std::nullopt;
    std::optional<Decomposition> d =
        s.e() == -1 ? decompose_e_minus_one(c) : std::optional(decompose_e_nonnegative(c, s.e()));
    if (!d) d = brute_force_decompose(c, s);
    if (!d) {
        std::ostringstream msg;
        msg << "no all-bpf split found for normally presented class " << c << " on e = " << s.e();
        throw std::logic_error(msg.str());
    }
    check_witness(*d, c, s);
    return d;
}

// Per-a1 bounds on b1 come from writing both halves' all-bpf inequalities
// in terms of (a1, b1) with B2 = (a - a1, b - b1):
//   e = -1:  b1 >= 2 - a1,  2*b1 >= 2 - a1                (B1)
//            b1 <= a + b - a1 - 2,  2*b1 <= a + 2b - a1 - 2  (B2)
//   e >= 0:  b1 >= 2 + a1*e,  b1 <= b - (a - a1)*e - 2
// and a1 ranges over [0, a] since both halves need a_i >= 0. The box is the
// union over a1, so it contains every feasible b1.
SearchBounds brute_force_search_bounds(const NumClass& c, const SurfaceModel& s) {
    SearchBounds box;
    if (c.a < 0) return box;
    box.a1_lo = 0;
    box.a1_hi = c.a;
    bool first = true;
    for (std::int64_t a1 = 0; a1 <= c.a; ++a1) {
        std::int64_t lo = 0;
        std::int64_t hi = 0;
        if (s.e() == -1) {
            lo = std::max(sub(2, a1), ceil_div(sub(2, a1), 2));
            hi = std::min(sub(sub(add(c.a, c.b), a1), 2), floor_div(sub(sub(add(c.a, mul(2, c.b)), a1), 2), 2));
        } else {
            lo = add(2, mul(a1, s.e()));
            hi = sub(sub(c.b, mul(sub(c.a, a1), s.e())), 2);
        }
        if (first) {
            box.b1_lo = lo;
            box.b1_hi = hi;
            first = false;
        } else {
            box.b1_lo = std::min(box.b1_lo, lo);
            box.b1_hi = std::max(box.b1_hi, hi);
        }
    }
    return box;
}

std::optional<Decomposition> brute_force_decompose(const NumClass& c, const SurfaceModel& s) {
    const SearchBounds box = brute_force_search_bounds(c, s);
    if (box.empty()) return std::nullopt;
    const std::int64_t cells = mul(add(sub(box.a1_hi, box.a1_lo), 1), add(sub(box.b1_hi, box.b1_lo), 1));
    if (cells > kMaxSearchCells) throw std::length_error("decomposition search space too large");
    for (std::int64_t a1 = box.a1_lo; a1 <= box.a1_hi; ++a1) {
        for (std::int64_t b1 = box.b1_lo; b1 <= box.b1_hi; ++b1) {
            const NumClass first{a1, b1};
            const NumClass second = class_sub(c, first);
            if (class_all_bpf(first, s) && class_all_bpf(second, s)) {
                return Decomposition{first, second, CaseTag::BruteForce};
            }
        }
    }
    return std::nullopt;
}

bool thm43_classify(const NumClass& c, const SurfaceModel& s) {
    return is_ample(c, s) && brute_force_decompose(c, s).has_value();
}

Prop21Report prop21_hypotheses(const NumClass& b1, const NumClass& b2, const SurfaceModel& s) {
    Prop21Report r;
    r.h1_b1 = vanishing_table(b1, s).h1;
    r.h1_b2 = vanishing_table(b2, s).h1;
    r.h2_b2_minus_b1 = vanishing_table(class_sub(b2, b1), s).h2;
    r.h2_b1_minus_b2 = vanishing_table(class_sub(b1, b2), s).h2;
    const DimStatus all[] = {r.h1_b1, r.h1_b2, r.h2_b2_minus_b1, r.h2_b1_minus_b2};
    if (std::all_of(std::begin(all), std::end(all), [](const DimStatus& d) { return d.is_zero(); })) {
        r.all_satisfied = Verdict::True;
    } else if (std::any_of(std::begin(all), std::end(all), [](const DimStatus& d) { return d.is_nonzero(); })) {
        r.all_satisfied = Verdict::False;
    } else {
        r.all_satisfied = Verdict::Indeterminate;
    }
    return r;
}

std::int64_t adjoint_threshold(const SurfaceModel& s) {
    if (s.e() == -1) return 5;
    if (s.e() == 0) return 4;
    return 3;
}

AdjointVerdict adjoint_np_check(std::span<const NumClass> amples, const SurfaceModel& s) {
    NumClass total = canonical_class(s);
    for (const NumClass& c : amples) {
        if (!is_ample(c, s)) {
            std::ostringstream msg;
            msg << "adjoint factor " << c << " is not ample on e = " << s.e();
            throw std::invalid_argument(msg.str());
        }
        total = class_add(total, c);
    }
    AdjointVerdict v;
    v.q = static_cast<std::int64_t>(amples.size());
    v.result_class = total;
    v.np = is_normally_presented(total, s);
    v.threshold_met = v.q >= adjoint_threshold(s);
    if (v.threshold_met && !v.np) throw std::logic_error("adjoint bound violated");
    return v;
}

ProductVerdict product_np_check(std::span<const NumClass> factors, const SurfaceModel& s, ProductMode mode) {
    NumClass total{0, 0};
    for (const NumClass& c : factors) {
        const bool ok = mode == ProductMode::AmpleBpf ? is_ample_and_all_bpf(c, s) : is_ample(c, s);
        if (!ok) {
            std::ostringstream msg;
            msg << "factor " << c << " is not " << (mode == ProductMode::AmpleBpf ? "ample and bpf" : "ample")
                << " on e = " << s.e();
            throw std::invalid_argument(msg.str());
        }
        total = class_add(total, c);
    }
    ProductVerdict v;
    const auto q = static_cast<std::int64_t>(factors.size());
    v.corollary_applies = mode == ProductMode::AmpleBpf ? q >= 2 : q >= 4;
    v.np = is_normally_presented(total, s);
    if (v.corollary_applies && !v.np) throw std::logic_error("product bound violated");
    return v;
}

CurveBounds curve_bounds(std::int64_t g, std::int64_t degree) {
    if (g < 0) throw std::invalid_argument("genus must be >= 0");
    CurveBounds cb;
    cb.g = g;
    cb.degree = degree;
    const std::int64_t two_g = mul(2, g);
    cb.normally_generated = degree >= add(two_g, 1);
    cb.normally_presented = degree >= add(two_g, 2);
    cb.koszul = cb.normally_presented;
    cb.np_level = std::max<std::int64_t>(-1, sub(sub(degree, two_g), 1));
    return cb;
}

}  // namespace ruledsurf
