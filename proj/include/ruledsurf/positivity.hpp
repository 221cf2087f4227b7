#pragma once

#include <string>
#include <vector>

#include "ruledsurf/surface.hpp"

namespace ruledsurf {

// A known base-point-free member of a self-intersection-zero class lying
// outside the all-members-bpf region.
struct SpecialBpfMember {
    NumClass cls;
    std::string descriptor;

    friend bool operator==(const SpecialBpfMember&, const SpecialBpfMember&) = default;
};

struct PositivityReport {
    bool ample = false;
    bool all_members_bpf = false;
    bool ample_and_all_bpf = false;
    std::vector<SpecialBpfMember> special_bpf_members;
};

// e = -1: a >= 1 and a + 2b >= 1.  e >= 0: a >= 1 and b - ae >= 1.
bool is_ample(const NumClass& c, const SurfaceModel& s);

// Every line bundle in the class is base-point-free.
// e = -1: a >= 0, a + b >= 2, a + 2b >= 2.  e >= 0: a >= 0, b - ae >= 2.
bool class_all_bpf(const NumClass& c, const SurfaceModel& s);

// e = -1: a >= 1, a + b >= 2, a + 2b >= 2.  e >= 0: a >= 1, b - ae >= 2.
bool is_ample_and_all_bpf(const NumClass& c, const SurfaceModel& s);

// Base-point-free members of classes where freeness is not numerical:
//   e = -1, (2n, -n) with n even and positive: the untwisted member;
//   e >= 1, (n, ne): n(C0 - e f);
//   e = 0, (n, 0): nC0 when X = C x P^1.
// The list is not exhaustive.
std::vector<SpecialBpfMember> special_bpf_members(const NumClass& c, const SurfaceModel& s);

PositivityReport positivity_report(const NumClass& c, const SurfaceModel& s);

}  // namespace ruledsurf
