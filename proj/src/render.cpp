#include "ruledsurf/render.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace ruledsurf {

char disc_glyph(const RegionCell& cell) {
    if (cell.np) return glyph::kNormallyPresented;
    if (cell.ample_bpf) return glyph::kAmpleBpf;
    if (cell.ample) return glyph::kAmple;
    switch (cell.effective.kind) {
        case EffectivityStatus::Kind::AllEffective: return glyph::kEffective;
        case EffectivityStatus::Kind::FinitelyMany: return glyph::kFinitelyManyEffective;
        case EffectivityStatus::Kind::Indeterminate: return glyph::kEffectivityUnknown;
        case EffectivityStatus::Kind::NoneEffective: break;
    }
    return glyph::kNothing;
}

namespace {

void check_cells(std::span<const RegionCell> cells, const IntRange& a_range, const IntRange& b_range) {
    if (static_cast<std::int64_t>(cells.size()) != a_range.size() * b_range.size()) {
        throw std::invalid_argument("cell list does not match the region bounds");
    }
}

const RegionCell& cell_at(std::span<const RegionCell> cells, const IntRange& b_range, std::int64_t ia,
                          std::int64_t ib) {
    return cells[static_cast<std::size_t>(ia * b_range.size() + ib)];
}

}  // namespace

std::string render_ascii(std::span<const RegionCell> cells, const IntRange& a_range, const IntRange& b_range,
                         const SurfaceModel& s) {
    check_cells(cells, a_range, b_range);
    std::ostringstream out;
    out << "Num(X), e = " << s.e() << "  (a: coefficient of C0, horizontal; b: coefficient of f, vertical)\n";
    for (std::int64_t ib = b_range.size() - 1; ib >= 0; --ib) {
        out << std::setw(6) << (b_range.lo + ib) << " |";
        for (std::int64_t ia = 0; ia < a_range.size(); ++ia) {
            const RegionCell& cell = cell_at(cells, b_range, ia, ib);
            out << ' ' << disc_glyph(cell) << (cell.all_bpf ? glyph::kAllBpf : ' ');
        }
        out << '\n';
    }
    out << std::string(7, ' ') << '+' << std::string(static_cast<std::size_t>(3 * a_range.size()), '-') << '\n';
    out << std::string(7, ' ');
    for (std::int64_t a = a_range.lo; a <= a_range.hi; ++a) out << std::setw(3) << a;
    out << "\n\n";
    out << "legend: " << glyph::kNormallyPresented << " normally presented (Koszul)  " << glyph::kAmpleBpf
        << " ample and base-point-free  " << glyph::kAmple << " ample\n"
        << "        " << glyph::kAllBpf << " every member base-point-free  " << glyph::kEffective << " effective  "
        << glyph::kFinitelyManyEffective << " finitely many effective members  " << glyph::kEffectivityUnknown
        << " effectivity undecided\n";
    return out.str();
}

namespace {

constexpr int kCell = 28;
constexpr int kLeft = 70;
constexpr int kTop = 40;
constexpr int kRadius = 10;

std::string cell_classes(const RegionCell& cell) {
    std::string cls = "cell";
    switch (cell.effective.kind) {
        case EffectivityStatus::Kind::AllEffective: cls += " effective"; break;
        case EffectivityStatus::Kind::FinitelyMany: cls += " finitely_many_effective"; break;
        case EffectivityStatus::Kind::Indeterminate: cls += " effectivity_undecided"; break;
        case EffectivityStatus::Kind::NoneEffective: break;
    }
    if (cell.ample) cls += " ample";
    if (cell.all_bpf) cls += " all_bpf";
    if (cell.ample_bpf) cls += " ample_bpf";
    if (cell.np) cls += " np";
    if (cell.koszul) cls += " koszul";
    return cls;
}

void disc(std::ostringstream& out, int x, int y, const RegionCell& cell) {
    if (cell.np) {
        out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << kRadius
            << "\" fill=\"url(#np-hatch)\" stroke=\"black\" stroke-dasharray=\"3,2\"/>";
    } else if (cell.ample_bpf) {
        out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << kRadius
            << "\" fill=\"#b4b4b4\" stroke=\"black\"/>";
    } else if (cell.ample) {
        out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << kRadius
            << "\" fill=\"white\" stroke=\"black\"/>";
    } else {
        switch (cell.effective.kind) {
            case EffectivityStatus::Kind::AllEffective:
                out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"2.5\" fill=\"black\"/>";
                break;
            case EffectivityStatus::Kind::FinitelyMany:
                out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3.5\" fill=\"none\" stroke=\"black\"/>";
                break;
            case EffectivityStatus::Kind::Indeterminate:
                out << "<text x=\"" << x << "\" y=\"" << y + 4
                    << "\" font-size=\"11\" text-anchor=\"middle\">?</text>";
                break;
            case EffectivityStatus::Kind::NoneEffective: break;
        }
    }
}

void cross(std::ostringstream& out, int x, int y) {
    out << "<path d=\"M" << x - 6 << ' ' << y - 6 << " L" << x + 6 << ' ' << y + 6 << " M" << x - 6 << ' '
        << y + 6 << " L" << x + 6 << ' ' << y - 6 << "\" stroke=\"black\" stroke-width=\"1.5\"/>";
}

}  // namespace

std::string render_svg(std::span<const RegionCell> cells, const IntRange& a_range, const IntRange& b_range,
                       const SurfaceModel& s) {
    check_cells(cells, a_range, b_range);
    const int cols = static_cast<int>(a_range.size());
    const int rows = static_cast<int>(b_range.size());
    const int grid_w = cols * kCell;
    const int grid_h = rows * kCell;
    const int legend_top = kTop + grid_h + 50;
    const int width = std::max(kLeft + grid_w + 20, 460);
    const int height = legend_top + 7 * 22 + 10;

    auto x_of = [&](std::int64_t a) { return kLeft + static_cast<int>(a - a_range.lo) * kCell + kCell / 2; };
    auto y_of = [&](std::int64_t b) { return kTop + static_cast<int>(b_range.hi - b) * kCell + kCell / 2; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\">\n"
        << "<defs>\n"
        << "<pattern id=\"np-hatch\" width=\"4\" height=\"4\" patternUnits=\"userSpaceOnUse\" "
           "patternTransform=\"rotate(45)\"><rect width=\"4\" height=\"4\" fill=\"#b4b4b4\"/>"
           "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"4\" stroke=\"black\" stroke-width=\"1.2\"/></pattern>\n"
        << "<pattern id=\"out-of-scope\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\" "
           "patternTransform=\"rotate(-45)\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#888\" "
           "stroke-width=\"1\"/></pattern>\n"
        << "</defs>\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << kLeft << "\" y=\"22\" font-size=\"14\">Num(X), e = " << s.e() << "</text>\n";

    // grid and axes
    out << "<g stroke=\"#e0e0e0\" stroke-width=\"1\">\n";
    for (std::int64_t a = a_range.lo; a <= a_range.hi; ++a) {
        out << "<line x1=\"" << x_of(a) << "\" y1=\"" << kTop << "\" x2=\"" << x_of(a) << "\" y2=\""
            << kTop + grid_h << "\"/>\n";
    }
    for (std::int64_t b = b_range.lo; b <= b_range.hi; ++b) {
        out << "<line x1=\"" << kLeft << "\" y1=\"" << y_of(b) << "\" x2=\"" << kLeft + grid_w << "\" y2=\""
            << y_of(b) << "\"/>\n";
    }
    out << "</g>\n";
    if (a_range.lo <= 0 && 0 <= a_range.hi) {
        out << "<line class=\"axis\" x1=\"" << x_of(0) << "\" y1=\"" << kTop << "\" x2=\"" << x_of(0)
            << "\" y2=\"" << kTop + grid_h << "\" stroke=\"#555\"/>\n";
    }
    if (b_range.lo <= 0 && 0 <= b_range.hi) {
        out << "<line class=\"axis\" x1=\"" << kLeft << "\" y1=\"" << y_of(0) << "\" x2=\"" << kLeft + grid_w
            << "\" y2=\"" << y_of(0) << "\" stroke=\"#555\"/>\n";
    }
    out << "<g font-size=\"10\" text-anchor=\"middle\">\n";
    for (std::int64_t a = a_range.lo; a <= a_range.hi; ++a) {
        out << "<text x=\"" << x_of(a) << "\" y=\"" << kTop + grid_h + 14 << "\">" << a << "</text>\n";
    }
    out << "</g>\n<g font-size=\"10\" text-anchor=\"end\">\n";
    for (std::int64_t b = b_range.lo; b <= b_range.hi; ++b) {
        out << "<text x=\"" << kLeft - 6 << "\" y=\"" << y_of(b) + 4 << "\">" << b << "</text>\n";
    }
    out << "</g>\n";
    out << "<text x=\"" << kLeft + grid_w / 2 << "\" y=\"" << kTop + grid_h + 32
        << "\" font-size=\"12\" text-anchor=\"middle\">a (coefficient of C0)</text>\n";
    out << "<text x=\"16\" y=\"" << kTop + grid_h / 2 << "\" font-size=\"12\" text-anchor=\"middle\" "
        << "transform=\"rotate(-90 16 " << kTop + grid_h / 2 << ")\">b (coefficient of f)</text>\n";

    // cells
    for (std::int64_t ia = 0; ia < a_range.size(); ++ia) {
        for (std::int64_t ib = 0; ib < b_range.size(); ++ib) {
            const RegionCell& cell = cell_at(cells, b_range, ia, ib);
            const int x = x_of(cell.cls.a);
            const int y = y_of(cell.cls.b);
            out << "<g class=\"" << cell_classes(cell) << "\" data-a=\"" << cell.cls.a << "\" data-b=\""
                << cell.cls.b << "\">";
            disc(out, x, y, cell);
            if (cell.all_bpf) cross(out, x, y);
            out << "</g>\n";
        }
    }

    // legend
    out << "<g class=\"legend\" font-size=\"12\">\n";
    int ly = legend_top;
    auto entry = [&](const std::string& sample, const std::string& label) {
        out << sample << "<text x=\"" << kLeft + 20 << "\" y=\"" << ly + 4 << "\">" << label << "</text>\n";
        ly += 22;
    };
    const int lx = kLeft;
    std::ostringstream tmp;
    tmp << "<path d=\"M" << lx - 6 << ' ' << ly - 6 << " L" << lx + 6 << ' ' << ly + 6 << " M" << lx - 6 << ' '
        << ly + 6 << " L" << lx + 6 << ' ' << ly - 6 << "\" stroke=\"black\" stroke-width=\"1.5\"/>";
    entry(tmp.str(), "cross: every member of the class is base-point-free");
    entry("<circle cx=\"" + std::to_string(lx) + "\" cy=\"" + std::to_string(ly) +
              "\" r=\"10\" fill=\"url(#np-hatch)\" stroke=\"black\" stroke-dasharray=\"3,2\"/>",
          "dashed disc: normally presented (Koszul section ring)");
    entry("<circle cx=\"" + std::to_string(lx) + "\" cy=\"" + std::to_string(ly) +
              "\" r=\"10\" fill=\"none\" stroke=\"url(#out-of-scope)\" stroke-width=\"5\"/>",
          "annulus: normally generated (not computed)");
    entry("<circle cx=\"" + std::to_string(lx) + "\" cy=\"" + std::to_string(ly) +
              "\" r=\"10\" fill=\"white\" stroke=\"black\"/>",
          "blank disc: ample");
    entry("<circle cx=\"" + std::to_string(lx) + "\" cy=\"" + std::to_string(ly) +
              "\" r=\"10\" fill=\"#b4b4b4\" stroke=\"black\"/>",
          "shaded disc: ample and base-point-free");
    entry("<circle cx=\"" + std::to_string(lx) + "\" cy=\"" + std::to_string(ly) + "\" r=\"2.5\" fill=\"black\"/>",
          "dot: effective");
    entry("<circle cx=\"" + std::to_string(lx) + "\" cy=\"" + std::to_string(ly) +
              "\" r=\"3.5\" fill=\"none\" stroke=\"black\"/>",
          "ring: finitely many effective members; ?: effectivity undecided");
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace ruledsurf
