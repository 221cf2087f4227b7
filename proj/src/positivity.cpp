#include "ruledsurf/positivity.hpp"

#include <stdexcept>

#include "ruledsurf/checked.hpp"

namespace ruledsurf {

using checked::add;
using checked::mul;
using checked::sub;

namespace {

// Degree of L on C0 for e >= 0, i.e. b - ae.
std::int64_t fiber_excess(const NumClass& c, const SurfaceModel& s) { return sub(c.b, mul(c.a, s.e())); }

}  // namespace

bool is_ample(const NumClass& c, const SurfaceModel& s) {
    if (s.e() == -1) return c.a >= 1 && add(c.a, mul(2, c.b)) >= 1;
    return c.a >= 1 && fiber_excess(c, s) >= 1;
}

bool class_all_bpf(const NumClass& c, const SurfaceModel& s) {
    if (s.e() == -1) return c.a >= 0 && add(c.a, c.b) >= 2 && add(c.a, mul(2, c.b)) >= 2;
    return c.a >= 0 && fiber_excess(c, s) >= 2;
}

bool is_ample_and_all_bpf(const NumClass& c, const SurfaceModel& s) {
    bool result = false;
    if (s.e() == -1) {
        result = c.a >= 1 && add(c.a, c.b) >= 2 && add(c.a, mul(2, c.b)) >= 2;
    } else {
        result = c.a >= 1 && fiber_excess(c, s) >= 2;
    }
    if (result != (is_ample(c, s) && class_all_bpf(c, s))) {
        throw std::logic_error("ample+bpf criterion disagrees with ampleness and bpf separately");
    }
    return result;
}

std::vector<SpecialBpfMember> special_bpf_members(const NumClass& c, const SurfaceModel& s) {
    std::vector<SpecialBpfMember> out;
    if (class_all_bpf(c, s) || c.a <= 0) return out;
    if (s.e() == -1) {
        auto n = boundary_ray_index(c, s);
        if (n && *n % 2 == 0) {
            out.push_back({c, std::to_string(*n) + "·(2C0 + \U0001D522f) member (tag zero)"});
        }
    } else if (s.e() >= 1) {
        if (fiber_excess(c, s) == 0) out.push_back({c, std::to_string(c.a) + "(C0 - \U0001D522f)"});
    } else if (c.b == 0) {
        out.push_back({c, std::to_string(c.a) + "C0 (X = C × P1)"});
    }
    return out;
}

PositivityReport positivity_report(const NumClass& c, const SurfaceModel& s) {
    return {is_ample(c, s), class_all_bpf(c, s), is_ample_and_all_bpf(c, s), special_bpf_members(c, s)};
}

}  // namespace ruledsurf
