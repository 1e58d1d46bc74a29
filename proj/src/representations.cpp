#include "dimerlab/representations.hpp"

namespace dimerlab {

bool PointAssignment::generic() const {
    for (const auto& [name, v] : values)
        if (v == 0) return false;
    return true;
}

Representation build_representation(const ContractionMap& m, const PointAssignment& b) {
    MatchingFamily simple = simple_matchings(m.target);
    std::vector<Rational> var_values;
    for (const std::string& name : simple.variable_names) {
        auto it = b.values.find(name);
        if (it == b.values.end()) throw QuiverError("missing value for variable " + name);
        var_values.push_back(it->second);
    }

    Representation rep;
    rep.arrow_values.assign(m.source.arrows.size(), Rational(1));
    for (const Arrow& a : m.source.arrows) {
        auto img = m.arrow_map[static_cast<size_t>(a.id)];
        if (!img) continue;  // contracted arrows keep the empty product
        Rational v = 1;
        for (size_t k = 0; k < simple.size(); ++k)
            if (simple.matchings[k].contains(*img)) v *= var_values[k];
        rep.arrow_values[static_cast<size_t>(a.id)] = v;
    }

    // relation soundness, asserted exactly
    for (const RewriteRule& rule : rewrite_rules(m.source)) {
        Rational l = 1, r = 1;
        for (ArrowId a : rule.left.arrows) l *= rep.arrow_values[static_cast<size_t>(a)];
        for (ArrowId a : rule.right.arrows) r *= rep.arrow_values[static_cast<size_t>(a)];
        if (l != r) throw QuiverError("rewrite rule sides evaluate unequally");
    }
    return rep;
}

bool is_simple(const ContractionMap& m, const Representation& r) {
    std::vector<ArrowId> support;
    for (const Arrow& a : m.source.arrows)
        if (r.arrow_values[static_cast<size_t>(a.id)] != 0) support.push_back(a.id);
    return strongly_connected(m.source, support);
}

Rational evaluate_cycle(const ContractionMap& m, const Representation& r, const Path& cycle) {
    if (!is_composable(m.source, cycle)) throw QuiverError("arrow sequence does not compose");
    Rational v = 1;
    for (ArrowId a : cycle.arrows) v *= r.arrow_values[static_cast<size_t>(a)];
    return v;
}

bool reps_equivalent(const ContractionMap& m, const PointAssignment& b1,
                     const PointAssignment& b2, CycleBounds bounds) {
    if (!b1.generic() || !b2.generic())
        throw QuiverError("equivalence test requires generic points");
    Representation r1 = build_representation(m, b1);
    Representation r2 = build_representation(m, b2);
    for (VertexId i = 0; i < m.source.vertex_count; ++i)
        for (const Path& c : enumerate_cycles(m.source, i, bounds))
            if (evaluate_cycle(m, r1, c) != evaluate_cycle(m, r2, c)) return false;
    return true;
}

}  // namespace dimerlab
