#include "dimerlab/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace dimerlab {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Pt {
    double x, y;
};

// split the segment a -> b at unit-square boundaries; emit pieces translated
// back into the fundamental domain
std::vector<std::pair<Pt, Pt>> wrap_segments(Pt a, Pt b) {
    std::vector<std::pair<Pt, Pt>> out;
    double t = 0.0;
    Pt cur = a;
    Pt shift{0.0, 0.0};
    const double eps = 1e-9;
    int guard = 0;
    while (t < 1.0 - eps && guard++ < 64) {
        double dx = b.x - a.x, dy = b.y - a.y;
        double best = 1.0;
        double px = cur.x + shift.x, py = cur.y + shift.y;  // point in [0,1]^2
        auto crossing = [&](double pos, double d) {
            if (d > eps) return (1.0 - pos) / d;
            if (d < -eps) return (0.0 - pos) / d;
            return 2.0;
        };
        best = std::min({1.0 - t, crossing(px, dx), crossing(py, dy)});
        if (best < eps) best = eps;
        Pt from{px, py};
        Pt to{px + dx * best, py + dy * best};
        out.push_back({from, to});
        t += best;
        cur = Pt{a.x + dx * t, a.y + dy * t};
        // re-enter on the opposite side
        double qx = cur.x + shift.x, qy = cur.y + shift.y;
        if (qx >= 1.0 - eps && dx > 0) shift.x -= 1.0;
        if (qx <= eps && dx < 0) shift.x += 1.0;
        if (qy >= 1.0 - eps && dy > 0) shift.y -= 1.0;
        if (qy <= eps && dy < 0) shift.y += 1.0;
    }
    return out;
}

}  // namespace

std::string render_svg(const DimerQuiver& q, const RenderOptions& opts) {
    const int pad = 20;
    const int size = opts.size;
    auto vertex_pos = [&](VertexId v) -> Pt {
        if (static_cast<size_t>(v) < q.layout.size() && q.layout[static_cast<size_t>(v)]) {
            auto p = *q.layout[static_cast<size_t>(v)];
            return {p[0], p[1]};
        }
        // auto grid placement
        int cols = 1;
        while (cols * cols < q.vertex_count) cols++;
        int r = v / cols, c = v % cols;
        return {(c + 0.5) / cols, (r + 0.5) / cols};
    };
    auto to_px = [&](Pt p) -> Pt {
        return {pad + p.x * size, pad + (1.0 - p.y) * size};
    };
    auto in_list = [](const std::vector<ArrowId>& xs, ArrowId a) {
        return std::find(xs.begin(), xs.end(), a) != xs.end();
    };

    std::ostringstream svg;
    int W = size + 2 * pad;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << W
        << "\" viewBox=\"0 0 " << W << " " << W << "\">\n";
    svg << "<rect x=\"" << pad << "\" y=\"" << pad << "\" width=\"" << size << "\" height=\""
        << size << "\" fill=\"white\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
    svg << "<defs><marker id=\"tip\" markerWidth=\"7\" markerHeight=\"7\" refX=\"5\" refY=\"2.5\""
           " orient=\"auto\"><path d=\"M0,0 L5,2.5 L0,5 z\" fill=\"context-stroke\"/>"
           "</marker></defs>\n";

    for (const Arrow& a : q.arrows) {
        Pt from = vertex_pos(a.tail);
        Pt head = vertex_pos(a.head);
        Pt to{head.x + a.offset.dx, head.y + a.offset.dy};
        std::string color = "#333";
        double width = 1.3;
        if (in_list(opts.highlight_contracted, a.id)) {
            color = "#1a9e1a";
            width = 2.4;
        }
        if (in_list(opts.highlight_matching, a.id)) {
            color = "#2255cc";
            width = 2.4;
        }
        if (in_list(opts.highlight_path, a.id)) {
            color = "#cc2222";
            width = 2.4;
        }
        bool degenerate = std::abs(from.x - to.x) < 1e-12 && std::abs(from.y - to.y) < 1e-12;
        if (degenerate) {
            Pt c = to_px(from);
            svg << "<circle cx=\"" << fmt(c.x + 8) << "\" cy=\"" << fmt(c.y - 8)
                << "\" r=\"8\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
                << fmt(width) << "\"/>\n";
            continue;
        }
        auto pieces = wrap_segments(from, to);
        for (size_t k = 0; k < pieces.size(); ++k) {
            Pt s = to_px(pieces[k].first);
            Pt e = to_px(pieces[k].second);
            svg << "<line x1=\"" << fmt(s.x) << "\" y1=\"" << fmt(s.y) << "\" x2=\"" << fmt(e.x)
                << "\" y2=\"" << fmt(e.y) << "\" stroke=\"" << color << "\" stroke-width=\""
                << fmt(width) << "\"";
            if (k + 1 == pieces.size()) svg << " marker-end=\"url(#tip)\"";
            svg << "/>\n";
        }
        Pt mid = to_px(pieces.front().first);
        Pt mid2 = to_px(pieces.front().second);
        svg << "<text x=\"" << fmt((mid.x + mid2.x) / 2 + 3) << "\" y=\""
            << fmt((mid.y + mid2.y) / 2 - 3) << "\" font-size=\"10\" fill=\"" << color << "\">"
            << a.name << "</text>\n";
    }

    for (VertexId v = 0; v < q.vertex_count; ++v) {
        Pt c = to_px(vertex_pos(v));
        svg << "<circle cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(c.y)
            << "\" r=\"4\" fill=\"black\"/>\n";
        svg << "<text x=\"" << fmt(c.x + 6) << "\" y=\"" << fmt(c.y + 10)
            << "\" font-size=\"11\" fill=\"black\">" << v << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace dimerlab
