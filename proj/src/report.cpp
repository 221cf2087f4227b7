#include "ruledsurf/report.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

#include "ruledsurf/checked.hpp"

namespace ruledsurf {

RegionCell classify_cell(const NumClass& c, const SurfaceModel& s) {
    RegionCell cell;
    cell.cls = c;
    cell.effective = effectivity_status(c, s);
    cell.ample = is_ample(c, s);
    cell.all_bpf = class_all_bpf(c, s);
    cell.ample_bpf = is_ample_and_all_bpf(c, s);
    cell.np = is_normally_presented(c, s);
    cell.koszul = is_koszul(c, s);
    return cell;
}

std::int64_t IntRange::size() const { return checked::add(checked::sub(hi, lo), 1); }

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
    std::int64_t value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end) {
        throw std::invalid_argument("malformed range '" + std::string(whole) + "', expected lo:hi");
    }
    return value;
}

}  // namespace

IntRange parse_range(std::string_view text) {
    // the first ':' after position 0 separates, so "-3:-1" parses
    auto colon = text.find(':', 1);
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("malformed range '" + std::string(text) + "', expected lo:hi");
    }
    IntRange r{parse_int(text.substr(0, colon), text), parse_int(text.substr(colon + 1), text)};
    if (r.lo > r.hi) throw std::invalid_argument("empty range '" + std::string(text) + "'");
    return r;
}

std::vector<RegionCell> scan_region(const IntRange& a_range, const IntRange& b_range, const SurfaceModel& s,
                                    std::size_t max_cells) {
    if (a_range.lo > a_range.hi || b_range.lo > b_range.hi) throw std::invalid_argument("empty region");
    const std::int64_t total = checked::mul(a_range.size(), b_range.size());
    if (total > static_cast<std::int64_t>(max_cells)) {
        throw std::length_error("region has " + std::to_string(total) + " cells, cap is " +
                                std::to_string(max_cells));
    }
    std::vector<RegionCell> cells;
    cells.reserve(static_cast<std::size_t>(total));
    for (std::int64_t a = a_range.lo; a <= a_range.hi; ++a) {
        for (std::int64_t b = b_range.lo; b <= b_range.hi; ++b) cells.push_back(classify_cell({a, b}, s));
    }
    return cells;
}

Json to_json(const NumClass& c) { return Json{{"a", c.a}, {"b", c.b}}; }

Json to_json(const DimStatus& d) {
    switch (d.kind()) {
        case DimStatus::Kind::Exact: return Json{{"kind", "exact"}, {"value", d.value()}};
        case DimStatus::Kind::Positive: return Json{{"kind", "positive"}};
        case DimStatus::Kind::Indeterminate: return Json{{"kind", "indeterminate"}};
    }
    return Json{{"kind", "indeterminate"}};
}

Json to_json(const EffectivityStatus& st) {
    using Kind = EffectivityStatus::Kind;
    switch (st.kind) {
        case Kind::AllEffective: return Json{{"kind", "all_effective"}};
        case Kind::NoneEffective: return Json{{"kind", "none_effective"}};
        case Kind::FinitelyMany: {
            Json tags = Json::array();
            for (auto t : st.tags) tags.push_back(std::string(to_string(t)));
            return Json{{"kind", "finitely_many"}, {"tags", tags}};
        }
        case Kind::Indeterminate: return Json{{"kind", "indeterminate"}};
    }
    return Json{{"kind", "indeterminate"}};
}

Json to_json(const CohomologyProfile& p) {
    return Json{{"h0", to_json(p.h0)}, {"h1", to_json(p.h1)}, {"h2", to_json(p.h2)}, {"chi", p.chi}};
}

Json to_json(const Decomposition& d) {
    return Json{{"b1", to_json(d.b1)}, {"b2", to_json(d.b2)}, {"case", std::string(to_string(d.case_tag))}};
}

Json to_json(const std::optional<Decomposition>& d) { return d ? to_json(*d) : Json(nullptr); }

Json to_json(const RegionCell& cell, const SurfaceModel& s) {
    return Json{{"e", s.e()},
                {"a", cell.cls.a},
                {"b", cell.cls.b},
                {"effective", to_json(cell.effective)},
                {"ample", cell.ample},
                {"all_bpf", cell.all_bpf},
                {"ample_bpf", cell.ample_bpf},
                {"np", cell.np},
                {"koszul", cell.koszul}};
}

Json classify_document(const BundleRef& ref, const SurfaceModel& s) {
    validate(ref, s);
    const RegionCell cell = classify_cell(ref.cls, s);
    Json special = Json::array();
    for (const auto& m : special_bpf_members(ref.cls, s)) {
        special.push_back(Json{{"a", m.cls.a}, {"b", m.cls.b}, {"descriptor", m.descriptor}});
    }
    return Json{{"e", s.e()},
                {"a", ref.cls.a},
                {"b", ref.cls.b},
                {"tag", std::string(to_string(ref.tag))},
                {"effective", to_json(cell.effective)},
                {"ample", cell.ample},
                {"all_bpf", cell.all_bpf},
                {"ample_bpf", cell.ample_bpf},
                {"np", cell.np},
                {"koszul", cell.koszul},
                {"cohomology", to_json(cohomology_profile(ref, s))},
                {"special_bpf_members", special},
                {"decomposition", to_json(decompose_np(ref.cls, s))},
                {"assumptions",
                 Json{{"normal_presentation", std::string(kNormalPresentationAssumption)},
                      {"koszul", std::string(kKoszulAssumption)}}}};
}

Json decompose_document(const NumClass& c, const SurfaceModel& s, DecomposeMode mode) {
    Json doc{{"e", s.e()},
             {"a", c.a},
             {"b", c.b},
             {"mode", mode == DecomposeMode::Constructive ? "constructive" : "brute"},
             {"np", is_normally_presented(c, s)}};
    if (mode == DecomposeMode::Constructive) {
        doc["decomposition"] = to_json(decompose_np(c, s));
    } else {
        const SearchBounds box = brute_force_search_bounds(c, s);
        doc["decomposition"] = to_json(brute_force_decompose(c, s));
        doc["search_bounds"] = box.empty() ? Json(nullptr)
                                           : Json{{"a1", Json::array({box.a1_lo, box.a1_hi})},
                                                  {"b1", Json::array({box.b1_lo, box.b1_hi})}};
    }
    return doc;
}

}  // namespace ruledsurf
