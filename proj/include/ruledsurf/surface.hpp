#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string_view>

namespace ruledsurf {

// Elliptic ruled surface X = P(E) over an elliptic curve, identified by its
// invariant e >= -1. Num(X) is free on the minimal section C0 and a fiber f.
class SurfaceModel {
public:
    explicit SurfaceModel(std::int64_t e);

    std::int64_t e() const noexcept { return e_; }

    friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;

private:
    std::int64_t e_;
};

// a*C0 + b*f in Num(X).
struct NumClass {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend bool operator==(const NumClass&, const NumClass&) = default;
};

std::ostream& operator<<(std::ostream& os, const NumClass& c);

// Which member of a class on the e = -1 ray (2n, -n) is meant. Zero is the
// bundle O(2nC0 - n e f); Eta1..Eta3 twist by the three nontrivial 2-torsion
// points of Pic^0(C); Generic is any other member (and the only valid tag off
// the ray).
enum class BoundaryTag { Zero, Eta1, Eta2, Eta3, Generic };

std::string_view to_string(BoundaryTag tag);
std::optional<BoundaryTag> parse_boundary_tag(std::string_view text);

struct BundleRef {
    NumClass cls;
    BoundaryTag tag = BoundaryTag::Generic;
};

std::int64_t intersect(const NumClass& c1, const NumClass& c2, const SurfaceModel& s);

// Numerically -2C0 - ef.
NumClass canonical_class(const SurfaceModel& s);

// K - c, the class carrying the dual cohomology.
NumClass serre_dual_class(const NumClass& c, const SurfaceModel& s);

NumClass class_add(const NumClass& c1, const NumClass& c2);
NumClass class_sub(const NumClass& c1, const NumClass& c2);
NumClass class_scale(std::int64_t n, const NumClass& c);

inline NumClass operator+(const NumClass& c1, const NumClass& c2) { return class_add(c1, c2); }
inline NumClass operator-(const NumClass& c1, const NumClass& c2) { return class_sub(c1, c2); }
inline NumClass operator*(std::int64_t n, const NumClass& c) { return class_scale(n, c); }

// n >= 0 such that c = (2n, -n) on a surface with e = -1, else nullopt.
std::optional<std::int64_t> boundary_ray_index(const NumClass& c, const SurfaceModel& s);

// n >= 0 such that c = K - (2n, -n) = (-2 - 2n, 1 + n) on e = -1, else nullopt.
std::optional<std::int64_t> dual_ray_index(const NumClass& c, const SurfaceModel& s);

// Throws std::invalid_argument when a non-Generic tag is attached to a class
// off the e = -1 boundary ray.
void validate(const BundleRef& ref, const SurfaceModel& s);

}  // namespace ruledsurf
