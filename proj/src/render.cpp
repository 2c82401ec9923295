#include "legmcs/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace legmcs {

namespace {

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

class Canvas {
public:
    Canvas(const FrontDiagram& d, const RenderOptions& o) : d_(d), o_(o)
    {
        maxStrands_ = *std::max_element(d.strand_counts().begin(), d.strand_counts().end());
    }

    double x(double slot) const { return o_.margin + slot * o_.slotWidth; }
    double y(double level) const { return o_.margin + level * o_.levelHeight; }
    double width() const { return 2 * o_.margin + (d_.slot_count() - 1) * o_.slotWidth; }
    double height() const { return 2 * o_.margin + (maxStrands_ + 1) * o_.levelHeight; }

    // Horizontal-tangent cubic from (x0, y0) to (x1, y1).
    std::string curve(double x0, double y0, double x1, double y1) const
    {
        const double mx = (x0 + x1) / 2;
        return "M" + num(x0) + "," + num(y0) + " C" + num(mx) + "," + num(y0) + " " + num(mx) + "," + num(y1) + " " +
               num(x1) + "," + num(y1);
    }

private:
    const FrontDiagram& d_;
    const RenderOptions& o_;
    int maxStrands_ = 0;
};

}  // namespace

std::string render_svg(const FrontDiagram& d, const MCS* mcs, const std::vector<DiskBoundary>& disks,
                       const RenderOptions& options)
{
    Canvas cv(d, options);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(cv.width()) << "\" height=\""
        << num(cv.height()) << "\" viewBox=\"0 0 " << num(cv.width()) << " " << num(cv.height()) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Disks first so the front is drawn on top.
    for (const auto& disk : disks) {
        out << "<g class=\"disk\" fill=\"#4a90d9\" fill-opacity=\"0.25\" stroke=\"none\">\n";
        for (const auto& s : disk.segments)
            out << "  <rect x=\"" << num(cv.x(s.slot - 0.5)) << "\" y=\"" << num(cv.y(s.upper)) << "\" width=\""
                << num(options.slotWidth) << "\" height=\"" << num(cv.y(s.lower) - cv.y(s.upper)) << "\"/>\n";
        out << "</g>\n";
    }

    out << "<g class=\"front\" fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
    for (int e = 0; e < d.event_count(); ++e) {
        const auto& ev = d.events()[e];
        const int k = ev.position;
        const double x0 = cv.x(e), x1 = cv.x(e + 1), xm = cv.x(e + 0.5);
        const int left = d.strands(e);
        std::string path;
        auto add = [&](const std::string& p) { path += (path.empty() ? "" : " ") + p; };
        switch (ev.kind) {
        case EventKind::LeftCusp:
            for (int i = 1; i <= left; ++i) {
                const int j = i < k ? i : i + 2;
                add(cv.curve(x0, cv.y(i), x1, cv.y(j)));
            }
            add(cv.curve(xm, cv.y(k + 0.5), x1, cv.y(k)));
            add(cv.curve(xm, cv.y(k + 0.5), x1, cv.y(k + 1)));
            break;
        case EventKind::RightCusp:
            for (int i = 1; i <= left; ++i) {
                if (i == k || i == k + 1)
                    continue;
                const int j = i < k ? i : i - 2;
                add(cv.curve(x0, cv.y(i), x1, cv.y(j)));
            }
            add(cv.curve(x0, cv.y(k), xm, cv.y(k + 0.5)));
            add(cv.curve(x0, cv.y(k + 1), xm, cv.y(k + 0.5)));
            break;
        case EventKind::Crossing:
            for (int i = 1; i <= left; ++i) {
                const int j = i == k ? k + 1 : i == k + 1 ? k : i;
                add(cv.curve(x0, cv.y(i), x1, cv.y(j)));
            }
            break;
        }
        out << "  <path d=\"" << path << "\"/>\n";
    }
    out << "</g>\n";

    if (options.labels) {
        const auto gens = grade_generators(d);
        int crossings = 0, cusps = 0;
        out << "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n";
        for (const auto& g : gens) {
            const std::string name = g.kind == GeneratorKind::Crossing ? "a" + std::to_string(++crossings)
                                                                      : "b" + std::to_string(++cusps);
            out << "  <text x=\"" << num(cv.x(g.eventIndex + 0.5)) << "\" y=\"" << num(cv.y(g.position + 0.5) - 10)
                << "\">" << name << "</text>\n";
        }
        out << "</g>\n";
    }

    if (mcs) {
        out << "<g class=\"handleslides\" stroke=\"#c0392b\" stroke-width=\"2\" fill=\"#c0392b\">\n";
        for (int slot = 1; slot + 1 < d.slot_count(); ++slot) {
            const auto items = mcs->slot_contents(slot);
            const int n = static_cast<int>(items.size());
            for (int r = 0; r < n; ++r) {
                const double hx = cv.x(slot - 0.35 + 0.7 * (r + 1) / (n + 1));
                const auto& h = items[r];
                out << "  <line x1=\"" << num(hx) << "\" y1=\"" << num(cv.y(h.k)) << "\" x2=\"" << num(hx)
                    << "\" y2=\"" << num(cv.y(h.l)) << "\"/>\n";
                out << "  <circle cx=\"" << num(hx) << "\" cy=\"" << num(cv.y(h.k)) << "\" r=\"3\"/>\n";
                out << "  <circle cx=\"" << num(hx) << "\" cy=\"" << num(cv.y(h.l)) << "\" r=\"3\"/>\n";
            }
        }
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace legmcs
