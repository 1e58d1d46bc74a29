#include "dimerlab/fixtures.hpp"

#include <algorithm>

namespace dimerlab {

namespace {

struct ArrowSpec {
    const char* name;
    VertexId tail, head;
    Offset offset;
};

struct FaceSpec {
    FaceSign sign;
    std::vector<const char*> arrows;
};

DimerQuiver build(int vertex_count, std::vector<ArrowSpec> arrows, std::vector<FaceSpec> faces,
                  std::vector<std::array<double, 2>> layout = {}) {
    DimerQuiver q;
    q.vertex_count = vertex_count;
    for (const ArrowSpec& s : arrows) {
        Arrow a;
        a.id = static_cast<int>(q.arrows.size());
        a.name = s.name;
        a.tail = s.tail;
        a.head = s.head;
        a.offset = s.offset;
        q.arrows.push_back(std::move(a));
    }
    for (const FaceSpec& s : faces) {
        Face f;
        f.id = static_cast<int>(q.faces.size());
        f.sign = s.sign;
        for (const char* n : s.arrows) f.arrows.push_back(q.arrow_id(n));
        q.faces.push_back(std::move(f));
    }
    if (!layout.empty()) {
        q.layout.resize(static_cast<size_t>(vertex_count));
        for (int v = 0; v < vertex_count; ++v) q.layout[static_cast<size_t>(v)] = layout[static_cast<size_t>(v)];
    }
    return q;
}

// one vertex, three loops, hexagonal faces
DimerQuiver make_c3_hex() {
    return build(1,
                 {{"x", 0, 0, {1, 0}}, {"y", 0, 0, {0, 1}}, {"z", 0, 0, {-1, -1}}},
                 {{FaceSign::plus, {"x", "y", "z"}}, {FaceSign::minus, {"x", "z", "y"}}},
                 {{{0.5, 0.5}}});
}

// 6 vertices, 8 arrows, two octagonal faces; greens g1..g4
DimerQuiver make_fig1i_Q() {
    return build(
        6,
        {
            {"g1", 0, 4, {0, 0}},
            {"g2", 0, 5, {0, 1}},
            {"g3", 1, 3, {0, 0}},
            {"g4", 1, 2, {1, -1}},
            {"a1", 4, 1, {-1, 1}},
            {"a2", 2, 0, {0, -1}},
            {"a3", 5, 1, {0, 0}},
            {"a4", 3, 0, {0, 0}},
        },
        {
            {FaceSign::plus, {"g4", "a2", "g2", "a3", "g3", "a4", "g1", "a1"}},
            {FaceSign::minus, {"g2", "a3", "g4", "a2", "g1", "a1", "g3", "a4"}},
        },
        {{{0.50, 0.70}}, {{0.50, 0.20}}, {{0.05, 0.45}}, {{0.50, 0.45}}, {{0.28, 0.70}},
         {{0.28, 0.20}}});
}

// 4 vertices, 6 arrows, two hexagonal faces; greens g1, g2
DimerQuiver make_fig1ii_Q() {
    return build(
        4,
        {
            {"b1", 0, 1, {-1, 1}},
            {"b2", 0, 1, {0, 1}},
            {"c1", 1, 3, {0, 0}},
            {"g1", 1, 2, {1, -1}},
            {"g2", 3, 0, {0, 0}},
            {"a2", 2, 0, {0, -1}},
        },
        {
            {FaceSign::plus, {"g1", "a2", "b2", "c1", "g2", "b1"}},
            {FaceSign::minus, {"b2", "g1", "a2", "b1", "c1", "g2"}},
        },
        {{{0.50, 0.70}}, {{0.50, 0.20}}, {{0.05, 0.45}}, {{0.50, 0.45}}});
}

// 3 vertices, 9 arrows, six triangular faces; a, b the loop pair, c green
DimerQuiver make_fig1iii_Q() {
    return build(
        3,
        {
            {"a", 1, 1, {1, -1}},
            {"b", 1, 1, {0, -1}},
            {"c", 1, 2, {0, 0}},
            {"r1", 1, 0, {1, -1}},
            {"r2", 0, 2, {0, 0}},
            {"r3", 2, 1, {-1, 1}},
            {"r4", 1, 0, {0, -1}},
            {"r5", 0, 1, {-1, 2}},
            {"r6", 2, 1, {0, 1}},
        },
        {
            {FaceSign::minus, {"r1", "r2", "r3"}},
            {FaceSign::plus, {"r6", "r4", "r2"}},
            {FaceSign::plus, {"a", "c", "r3"}},
            {FaceSign::minus, {"r6", "b", "c"}},
            {FaceSign::minus, {"a", "r4", "r5"}},
            {FaceSign::plus, {"r1", "r5", "b"}},
        },
        {{{0.50, 0.72}}, {{0.50, 0.22}}, {{0.50, 0.47}}});
}

// 5 vertices, 11 arrows, green g between the two interior dots
DimerQuiver make_fig1iv_Q() {
    return build(
        5,
        {
            {"e1", 2, 1, {0, 0}},
            {"e2", 1, 4, {0, 0}},
            {"e3", 3, 1, {-1, 0}},
            {"e4", 1, 2, {1, 0}},
            {"e5", 0, 3, {1, 0}},
            {"e6", 3, 2, {0, 1}},
            {"e7", 2, 4, {0, -1}},
            {"e8", 4, 0, {0, 0}},
            {"e9", 0, 2, {0, 1}},
            {"e10", 2, 0, {-1, -1}},
            {"g", 4, 3, {0, 0}},
        },
        {
            {FaceSign::minus, {"e2", "g", "e3", "e4", "e1"}},
            {FaceSign::plus, {"g", "e6", "e7"}},
            {FaceSign::minus, {"e8", "e9", "e7"}},
            {FaceSign::minus, {"e5", "e6", "e10"}},
            {FaceSign::plus, {"e9", "e1", "e4", "e10"}},
            {FaceSign::plus, {"e8", "e5", "e3", "e2"}},
        },
        {{{0.0, 0.75}}, {{0.0, 0.25}}, {{0.5, 0.0}}, {{0.5, 0.5}}, {{0.75, 0.625}}});
}

// valid torus quiver whose green triangle t1 t2 t3 is a whole face
DimerQuiver make_non_example_unit() {
    return build(
        3,
        {
            {"t1", 0, 1, {0, 0}},
            {"t2", 1, 2, {0, 0}},
            {"t3", 2, 0, {0, 0}},
            {"s1", 1, 0, {1, 0}},
            {"s2", 2, 1, {0, 1}},
            {"s3", 0, 2, {-1, -1}},
        },
        {
            {FaceSign::plus, {"t1", "t2", "t3"}},
            {FaceSign::plus, {"s3", "s2", "s1"}},
            {FaceSign::minus, {"t1", "t2", "s2", "s1", "s3", "t3"}},
        },
        {{{0.40, 0.60}}, {{0.60, 0.40}}, {{0.30, 0.35}}});
}

// degenerate quiver with two permanent 2-cycles (a,b) and (a2,b2)
DimerQuiver make_permanent_2cycle() {
    return build(
        2,
        {
            {"a", 1, 0, {0, 0}},
            {"b", 0, 1, {0, 0}},
            {"p", 0, 0, {0, 1}},
            {"q", 1, 1, {0, -1}},
            {"a2", 1, 0, {1, 0}},
            {"b2", 0, 1, {-1, 0}},
        },
        {
            {FaceSign::plus, {"a", "b"}},
            {FaceSign::minus, {"a", "p", "b", "q"}},
            {FaceSign::plus, {"a2", "p", "b2", "q"}},
            {FaceSign::minus, {"a2", "b2"}},
        },
        {{{0.35, 0.5}}, {{0.65, 0.5}}});
}

}  // namespace

std::vector<FixtureMap> fixture_maps() {
    return {
        {"fig1i", "fig1i_Q", {"g1", "g2", "g3", "g4"}},
        {"fig1ii", "fig1ii_Q", {"g1", "g2"}},
        {"fig1iii", "fig1iii_Q", {"c"}},
        {"fig1iv", "fig1iv_Q", {"g"}},
    };
}

ContractionMap fixture_contraction(const std::string& map_name) {
    for (const FixtureMap& fm : fixture_maps()) {
        if (fm.name != map_name) continue;
        DimerQuiver src = fixture(fm.source);
        std::vector<ArrowId> ids;
        for (const std::string& n : fm.contracted_arrows) ids.push_back(src.arrow_id(n));
        return contract(src, ids);
    }
    throw QuiverError("unknown contraction map " + map_name);
}

std::vector<std::string> fixture_names() {
    return {"c3_hex",     "fig1i_Q",   "fig1i_Qp",   "fig1i_Qp_red",  "fig1ii_Q",
            "fig1ii_Qp",  "fig1ii_Qp_red", "fig1iii_Q", "fig1iii_Qp", "fig1iii_Qp_red",
            "fig1iv_Q",   "fig1iv_Qp", "fig1iv_Qp_red", "non_example_unit",
            "permanent_2cycle"};
}

DimerQuiver fixture(const std::string& name) {
    if (name == "c3_hex") return make_c3_hex();
    if (name == "fig1i_Q") return make_fig1i_Q();
    if (name == "fig1ii_Q") return make_fig1ii_Q();
    if (name == "fig1iii_Q") return make_fig1iii_Q();
    if (name == "fig1iv_Q") return make_fig1iv_Q();
    if (name == "non_example_unit") return make_non_example_unit();
    if (name == "permanent_2cycle") return make_permanent_2cycle();

    auto strip_suffix = [&](const std::string& s, const std::string& suffix) {
        if (s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0)
            return s.substr(0, s.size() - suffix.size());
        return std::string();
    };
    if (std::string base = strip_suffix(name, "_Qp"); !base.empty())
        return fixture_contraction(base).target;
    if (std::string base = strip_suffix(name, "_Qp_red"); !base.empty())
        return reduce_removable_two_cycles(fixture_contraction(base).target);
    throw QuiverError("unknown fixture " + name);
}

}  // namespace dimerlab
