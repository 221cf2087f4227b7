#include "ruledsurf/surface.hpp"

#include <stdexcept>
#include <string>

#include "ruledsurf/checked.hpp"

namespace ruledsurf {

using checked::add;
using checked::mul;
using checked::sub;

SurfaceModel::SurfaceModel(std::int64_t e) : e_(e) {
    if (e < -1) throw std::invalid_argument("invariant e must be >= -1, got " + std::to_string(e));
}

std::ostream& operator<<(std::ostream& os, const NumClass& c) {
    return os << '(' << c.a << ", " << c.b << ')';
}

std::string_view to_string(BoundaryTag tag) {
    switch (tag) {
        case BoundaryTag::Zero: return "zero";
        case BoundaryTag::Eta1: return "eta1";
        case BoundaryTag::Eta2: return "eta2";
        case BoundaryTag::Eta3: return "eta3";
        case BoundaryTag::Generic: return "generic";
    }
    return "generic";
}

std::optional<BoundaryTag> parse_boundary_tag(std::string_view text) {
    for (auto tag : {BoundaryTag::Zero, BoundaryTag::Eta1, BoundaryTag::Eta2, BoundaryTag::Eta3,
                     BoundaryTag::Generic}) {
        if (text == to_string(tag)) return tag;
    }
    return std::nullopt;
}

std::int64_t intersect(const NumClass& c1, const NumClass& c2, const SurfaceModel& s) {
    // C0^2 = -e, C0.f = 1, f^2 = 0
    std::int64_t self = mul(mul(-s.e(), c1.a), c2.a);
    return add(self, add(mul(c1.a, c2.b), mul(c2.a, c1.b)));
}

NumClass canonical_class(const SurfaceModel& s) { return {-2, -s.e()}; }

NumClass serre_dual_class(const NumClass& c, const SurfaceModel& s) {
    return class_sub(canonical_class(s), c);
}

NumClass class_add(const NumClass& c1, const NumClass& c2) {
    return {add(c1.a, c2.a), add(c1.b, c2.b)};
}

NumClass class_sub(const NumClass& c1, const NumClass& c2) {
    return {sub(c1.a, c2.a), sub(c1.b, c2.b)};
}

NumClass class_scale(std::int64_t n, const NumClass& c) { return {mul(n, c.a), mul(n, c.b)}; }

std::optional<std::int64_t> boundary_ray_index(const NumClass& c, const SurfaceModel& s) {
    if (s.e() != -1 || c.a < 0 || c.a % 2 != 0) return std::nullopt;
    if (add(c.a, mul(2, c.b)) != 0) return std::nullopt;
    return c.a / 2;
}

std::optional<std::int64_t> dual_ray_index(const NumClass& c, const SurfaceModel& s) {
    return boundary_ray_index(serre_dual_class(c, s), s);
}

void validate(const BundleRef& ref, const SurfaceModel& s) {
    if (ref.tag == BoundaryTag::Generic) return;
    if (!boundary_ray_index(ref.cls, s)) {
        std::string msg = "tag '" + std::string(to_string(ref.tag)) +
                          "' is only valid on e = -1 classes of the form (2n, -n), n >= 0; got (" +
                          std::to_string(ref.cls.a) + ", " + std::to_string(ref.cls.b) +
                          ") on e = " + std::to_string(s.e());
        throw std::invalid_argument(msg);
    }
}

}  // namespace ruledsurf
