#pragma once

#include <span>
#include <string>

#include "ruledsurf/report.hpp"

namespace ruledsurf {

// ASCII glyphs. Each cell prints as two characters: the disc glyph (the
// strongest property that holds) followed by '+' when every member is
// base-point-free.
namespace glyph {
inline constexpr char kNormallyPresented = '@';
inline constexpr char kAmpleBpf = '#';
inline constexpr char kAmple = 'o';
inline constexpr char kEffective = '.';
inline constexpr char kFinitelyManyEffective = ':';
inline constexpr char kEffectivityUnknown = '?';
inline constexpr char kNothing = ' ';
inline constexpr char kAllBpf = '+';
}  // namespace glyph

char disc_glyph(const RegionCell& cell);

// Rows run from b = b_range.hi down to b_range.lo, columns from a_range.lo
// to a_range.hi. `cells` must be the output of scan_region for the ranges.
std::string render_ascii(std::span<const RegionCell> cells, const IntRange& a_range, const IntRange& b_range,
                         const SurfaceModel& s);

// SVG 1.1 document. Every cell is a <g> carrying data-a, data-b and a class
// list of the flags that hold, so the picture can be checked mechanically.
std::string render_svg(std::span<const RegionCell> cells, const IntRange& a_range, const IntRange& b_range,
                       const SurfaceModel& s);

}  // namespace ruledsurf
