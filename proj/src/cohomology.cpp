#include "ruledsurf/cohomology.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "ruledsurf/checked.hpp"

namespace ruledsurf {

using checked::add;
using checked::mul;
using checked::sub;

DimStatus DimStatus::exact(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("cohomology dimension cannot be negative");
    return DimStatus(Kind::Exact, n);
}

std::ostream& operator<<(std::ostream& os, const DimStatus& d) {
    switch (d.kind()) {
        case DimStatus::Kind::Exact: return os << d.value();
        case DimStatus::Kind::Positive: return os << ">0";
        case DimStatus::Kind::Indeterminate: return os << '?';
    }
    return os;
}

std::int64_t chi(const NumClass& c, const SurfaceModel& s) {
    std::int64_t twice = intersect(c, class_sub(c, canonical_class(s)), s);
    if (twice % 2 != 0) {
        std::ostringstream msg;
        msg << "odd value of L.(L-K) for " << c << " on e = " << s.e();
        throw std::logic_error(msg.str());
    }
    return twice / 2;
}

namespace {

int sign(std::int64_t x) { return (x > 0) - (x < 0); }

// Picks one of three statuses by the sign of a threshold difference.
DimStatus by_sign(std::int64_t diff, DimStatus above, DimStatus on, DimStatus below) {
    switch (sign(diff)) {
        case 1: return above;
        case 0: return on;
        default: return below;
    }
}

const DimStatus kZero = DimStatus::exact(0);
const DimStatus kPos = DimStatus::positive();
const DimStatus kUnknown = DimStatus::indeterminate();

CohomologyProfile table_e_minus_one(const NumClass& c) {
    // b vs -a/2 compared as 2b + a vs 0
    std::int64_t t = add(mul(2, c.b), c.a);
    if (c.a >= 0) {
        return {by_sign(t, kPos, kUnknown, kZero), by_sign(t, kZero, kUnknown, kPos), kZero, 0};
    }
    if (c.a == -1) return {kZero, kZero, kZero, 0};
    return {kZero, by_sign(t, kPos, kUnknown, kZero), by_sign(t, kZero, kUnknown, kPos), 0};
}

CohomologyProfile table_e_nonnegative(const NumClass& c, std::int64_t e) {
    if (c.a >= 0) {
        return {by_sign(c.b, kPos, kUnknown, kZero), by_sign(sub(c.b, mul(c.a, e)), kZero, kUnknown, kPos),
                kZero, 0};
    }
    if (c.a == -1) return {kZero, kZero, kZero, 0};
    // a <= -2: the dual of the a >= 0 rows under c -> K - c. For h1 the
    // vanishing side is b < e(a+1).
    std::int64_t h1_diff = sub(c.b, mul(e, add(c.a, 1)));
    return {kZero, by_sign(h1_diff, kPos, kUnknown, kZero), by_sign(add(c.b, e), kZero, kUnknown, kPos), 0};
}

// Pins the single non-vanishing entry to +/-chi when the other two vanish,
// then checks h0 - h1 + h2 = chi when everything is exact.
void settle_by_riemann_roch(CohomologyProfile& p, const NumClass& c, const SurfaceModel& s) {
    std::array<DimStatus*, 3> h{&p.h0, &p.h1, &p.h2};
    int zeros = 0;
    int other = -1;
    for (int i = 0; i < 3; ++i) {
        if (h[i]->is_zero()) {
            ++zeros;
        } else {
            other = i;
        }
    }
    if (zeros == 2 && !h[other]->is_exact()) {
        std::int64_t value = other == 1 ? checked::neg(p.chi) : p.chi;
        if (value < 0 || (value == 0 && h[other]->kind() == DimStatus::Kind::Positive)) {
            std::ostringstream msg;
            msg << "Riemann-Roch contradicts the vanishing table at " << c << " on e = " << s.e();
            throw std::logic_error(msg.str());
        }
        *h[other] = DimStatus::exact(value);
    }
    if (p.h0.is_exact() && p.h1.is_exact() && p.h2.is_exact() &&
        sub(add(p.h0.value(), p.h2.value()), p.h1.value()) != p.chi) {
        std::ostringstream msg;
        msg << "h0 - h1 + h2 != chi at " << c << " on e = " << s.e();
        throw std::logic_error(msg.str());
    }
}

bool coherent(const DimStatus& refined, const DimStatus& cell) {
    if (cell.is_zero()) return refined.is_zero();
    if (cell.kind() == DimStatus::Kind::Positive) return refined.is_nonzero();
    return true;
}

}  // namespace

CohomologyProfile vanishing_table(const NumClass& c, const SurfaceModel& s) {
    CohomologyProfile p = s.e() == -1 ? table_e_minus_one(c) : table_e_nonnegative(c, s.e());
    p.chi = chi(c, s);
    return p;
}

std::int64_t boundary_ray_h0(std::int64_t n, BoundaryTag tag) {
    if (n < 0) throw std::invalid_argument("boundary ray index must be >= 0");
    std::int64_t half = n / 2;
    switch (tag) {
        case BoundaryTag::Zero: return add(sub(mul(3, half), n), 1);
        case BoundaryTag::Eta1:
        case BoundaryTag::Eta2:
        case BoundaryTag::Eta3: return sub(n, half);
        case BoundaryTag::Generic: break;
    }
    throw std::invalid_argument("the generic member of a ray class has no tabulated h0");
}

CohomologyProfile cohomology_profile(const BundleRef& ref, const SurfaceModel& s) {
    validate(ref, s);
    const CohomologyProfile table = vanishing_table(ref.cls, s);
    CohomologyProfile p = table;

    if (auto n = boundary_ray_index(ref.cls, s)) {
        if (ref.tag != BoundaryTag::Generic) {
            p.h0 = DimStatus::exact(boundary_ray_h0(*n, ref.tag));
            p.h2 = kZero;
            p.h1 = DimStatus::exact(sub(p.h0.value(), p.chi));
        } else if (*n >= 1) {
            // only the four tagged members carry sections
            p.h0 = kZero;
            p.h1 = kZero;
        }
    } else if (auto m = dual_ray_index(ref.cls, s); m && *m >= 1) {
        // K - L is a generic member of the ray class
        p.h1 = kZero;
        p.h2 = kZero;
    }

    settle_by_riemann_roch(p, ref.cls, s);

    if (!coherent(p.h0, table.h0) || !coherent(p.h1, table.h1) || !coherent(p.h2, table.h2)) {
        std::ostringstream msg;
        msg << "refined profile contradicts the vanishing table at " << ref.cls << " on e = " << s.e();
        throw std::logic_error(msg.str());
    }
    return p;
}

EffectivityStatus effectivity_status(const NumClass& c, const SurfaceModel& s) {
    using Kind = EffectivityStatus::Kind;
    if (auto n = boundary_ray_index(c, s)) {
        if (*n == 0) return {Kind::AllEffective, {}};
        EffectivityStatus st{Kind::FinitelyMany, {}};
        for (auto tag : {BoundaryTag::Zero, BoundaryTag::Eta1, BoundaryTag::Eta2, BoundaryTag::Eta3}) {
            if (boundary_ray_h0(*n, tag) > 0) st.tags.push_back(tag);
        }
        return st;
    }
    const DimStatus h0 = vanishing_table(c, s).h0;
    if (h0.is_zero()) return {Kind::NoneEffective, {}};
    if (h0.is_nonzero()) return {Kind::AllEffective, {}};
    return {Kind::Indeterminate, {}};
}

}  // namespace ruledsurf
