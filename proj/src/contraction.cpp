#include "dimerlab/contraction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace dimerlab {

bool ContractionMap::is_contracted(ArrowId a) const {
    return std::binary_search(contracted.begin(), contracted.end(), a);
}

ContractionMap contract(const DimerQuiver& q, const std::vector<ArrowId>& arrows) {
    ContractionMap m;
    m.source = q;
    m.contracted = arrows;
    std::sort(m.contracted.begin(), m.contracted.end());
    m.contracted.erase(std::unique(m.contracted.begin(), m.contracted.end()), m.contracted.end());
    for (ArrowId a : m.contracted)
        if (a < 0 || a >= static_cast<int>(q.arrows.size()))
            throw QuiverError("arrow id out of range: " + std::to_string(a));

    // a fully contracted face would collapse a unit cycle to a vertex
    for (const Face& f : q.faces) {
        bool all = !f.arrows.empty();
        for (ArrowId a : f.arrows)
            if (!m.is_contracted(a)) {
                all = false;
                break;
            }
        if (all)
            throw ContractError(ContractErrorKind::unit_cycle_to_vertex,
                                "unit cycle to vertex: face " + std::to_string(f.id) +
                                    " is contracted entirely");
    }

    // the contracted set must be a forest in the underlying graph
    std::vector<int> uf(static_cast<size_t>(q.vertex_count));
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (uf[static_cast<size_t>(v)] != v) {
            uf[static_cast<size_t>(v)] = uf[static_cast<size_t>(uf[static_cast<size_t>(v)])];
            v = uf[static_cast<size_t>(v)];
        }
        return v;
    };
    for (ArrowId id : m.contracted) {
        const Arrow& a = q.arrow(id);
        int x = find(a.tail), y = find(a.head);
        if (x == y)
            throw ContractError(ContractErrorKind::contracts_cycle,
                                "contracts a cycle: arrow " + a.name +
                                    " closes a cycle in the underlying graph");
        uf[static_cast<size_t>(x)] = y;
    }

    // re-gauge offsets so contracted arrows carry (0,0): pick a potential on
    // each contracted tree, zero elsewhere
    std::vector<Offset> phi(static_cast<size_t>(q.vertex_count));
    {
        std::vector<std::vector<ArrowId>> tree(static_cast<size_t>(q.vertex_count));
        for (ArrowId id : m.contracted) {
            tree[static_cast<size_t>(q.arrow(id).tail)].push_back(id);
            tree[static_cast<size_t>(q.arrow(id).head)].push_back(id);
        }
        std::vector<bool> seen(static_cast<size_t>(q.vertex_count), false);
        for (VertexId root = 0; root < q.vertex_count; ++root) {
            if (seen[static_cast<size_t>(root)] || tree[static_cast<size_t>(root)].empty())
                continue;
            seen[static_cast<size_t>(root)] = true;
            std::queue<VertexId> bfs;
            bfs.push(root);
            while (!bfs.empty()) {
                VertexId v = bfs.front();
                bfs.pop();
                for (ArrowId id : tree[static_cast<size_t>(v)]) {
                    const Arrow& a = q.arrow(id);
                    VertexId w = a.tail == v ? a.head : a.tail;
                    if (seen[static_cast<size_t>(w)]) continue;
                    seen[static_cast<size_t>(w)] = true;
                    // want offset + phi(head) - phi(tail) == 0 on the tree
                    if (a.tail == v)
                        phi[static_cast<size_t>(w)] = phi[static_cast<size_t>(v)] - a.offset;
                    else
                        phi[static_cast<size_t>(w)] = phi[static_cast<size_t>(v)] + a.offset;
                    bfs.push(w);
                }
            }
        }
    }

    // dense target vertex ids ordered by the minimal source vertex of a class
    std::vector<VertexId> class_min(static_cast<size_t>(q.vertex_count), -1);
    for (VertexId v = 0; v < q.vertex_count; ++v) {
        int r = find(v);
        if (class_min[static_cast<size_t>(r)] < 0) class_min[static_cast<size_t>(r)] = v;
    }
    std::vector<VertexId> reps;
    for (VertexId v = 0; v < q.vertex_count; ++v)
        if (find(v) == v) reps.push_back(class_min[static_cast<size_t>(v)]);
    std::sort(reps.begin(), reps.end());
    m.vertex_map.assign(static_cast<size_t>(q.vertex_count), -1);
    for (VertexId v = 0; v < q.vertex_count; ++v) {
        VertexId mn = class_min[static_cast<size_t>(find(v))];
        m.vertex_map[static_cast<size_t>(v)] =
            static_cast<int>(std::lower_bound(reps.begin(), reps.end(), mn) - reps.begin());
    }

    DimerQuiver t;
    t.vertex_count = static_cast<int>(reps.size());
    if (!q.layout.empty()) {
        t.layout.resize(reps.size());
        for (size_t k = 0; k < reps.size(); ++k)
            t.layout[k] = q.layout[static_cast<size_t>(reps[k])];
    }
    m.arrow_map.assign(q.arrows.size(), std::nullopt);
    for (const Arrow& a : q.arrows) {
        if (m.is_contracted(a.id)) continue;
        Arrow b;
        b.id = static_cast<int>(t.arrows.size());
        b.name = a.name;
        b.tail = m.vertex_map[static_cast<size_t>(a.tail)];
        b.head = m.vertex_map[static_cast<size_t>(a.head)];
        b.offset = a.offset + phi[static_cast<size_t>(a.head)] - phi[static_cast<size_t>(a.tail)];
        m.arrow_map[static_cast<size_t>(a.id)] = b.id;
        t.arrows.push_back(std::move(b));
    }
    for (const Face& f : q.faces) {
        Face g;
        g.id = static_cast<int>(t.faces.size());
        g.sign = f.sign;
        for (ArrowId a : f.arrows)
            if (!m.is_contracted(a)) g.arrows.push_back(*m.arrow_map[static_cast<size_t>(a)]);
        t.faces.push_back(std::move(g));
    }
    m.target = std::move(t);

    ValidationReport rep = validate(m.target);
    if (!rep.valid()) {
        std::string msg = "contraction target fails validation:";
        for (const std::string& v : rep.violations) msg += "\n  " + v;
        throw ContractError(ContractErrorKind::invalid_target, msg);
    }
    return m;
}

ContractionMap identity_contraction(const DimerQuiver& q) { return contract(q, {}); }

DimerQuiver reduce_removable_two_cycles(const DimerQuiver& q) {
    return reduce_removable_two_cycles_with_map(q).reduced;
}

TwoCycleReduction reduce_removable_two_cycles_with_map(const DimerQuiver& q) {
    DimerQuiver cur = q;
    // words over the arrows of `cur`, one per original arrow
    std::vector<std::vector<ArrowId>> words(q.arrows.size());
    for (const Arrow& a : q.arrows) words[static_cast<size_t>(a.id)] = {a.id};
    while (true) {
        auto kinds = classify_two_cycles(cur);
        FaceId pick = -1;
        for (auto& [f, kind] : kinds)
            if (kind == TwoCycleKind::removable) {
                pick = f;
                break;
            }
        if (pick < 0) return {cur, words};

        const Face& f = cur.faces[static_cast<size_t>(pick)];
        ArrowId a = f.arrows[0], b = f.arrows[1];
        auto other_face = [&](ArrowId x) {
            for (const Face& g : cur.faces)
                if (g.id != pick)
                    for (ArrowId y : g.arrows)
                        if (y == x) return g.id;
            throw QuiverError("arrow missing its second face");
        };
        FaceId fa = other_face(a), fb = other_face(b);
        if (fa == fb) throw QuiverError("2-cycle classified removable but faces coincide");

        auto open_path = [&](FaceId fid, ArrowId drop) {
            const Face& g = cur.faces[static_cast<size_t>(fid)];
            size_t at = 0;
            while (g.arrows[at] != drop) at++;
            std::vector<ArrowId> path;
            for (size_t j = 1; j < g.arrows.size(); ++j)
                path.push_back(g.arrows[(at + j) % g.arrows.size()]);
            return path;  // h(drop) -> t(drop)
        };
        std::vector<ArrowId> pa = open_path(fa, a);  // h(a) -> t(a)
        std::vector<ArrowId> pb = open_path(fb, b);  // h(b) = t(a) -> t(b) = h(a)
        std::vector<ArrowId> merged = pa;
        merged.insert(merged.end(), pb.begin(), pb.end());
        if (merged.empty()) throw QuiverError("removing 2-cycle would create an empty face");

        // a equals the complementary path of b's other face, and vice versa;
        // removability keeps both paths clear of a and b
        auto substitute = [&](std::vector<ArrowId>& w) {
            std::vector<ArrowId> out;
            for (ArrowId x : w) {
                if (x == a)
                    out.insert(out.end(), pb.begin(), pb.end());
                else if (x == b)
                    out.insert(out.end(), pa.begin(), pa.end());
                else
                    out.push_back(x);
            }
            w = std::move(out);
        };
        for (auto& w : words) substitute(w);

        DimerQuiver next;
        next.vertex_count = cur.vertex_count;
        next.layout = cur.layout;
        std::vector<std::optional<ArrowId>> remap(cur.arrows.size());
        for (const Arrow& ar : cur.arrows) {
            if (ar.id == a || ar.id == b) continue;
            Arrow copy = ar;
            copy.id = static_cast<int>(next.arrows.size());
            remap[static_cast<size_t>(ar.id)] = copy.id;
            next.arrows.push_back(std::move(copy));
        }
        FaceSign merged_sign = cur.faces[static_cast<size_t>(fa)].sign;
        for (const Face& g : cur.faces) {
            if (g.id == pick || g.id == fb) continue;
            Face copy;
            copy.id = static_cast<int>(next.faces.size());
            copy.sign = g.sign;
            if (g.id == fa) {
                copy.sign = merged_sign;
                for (ArrowId x : merged) copy.arrows.push_back(*remap[static_cast<size_t>(x)]);
            } else {
                for (ArrowId x : g.arrows) copy.arrows.push_back(*remap[static_cast<size_t>(x)]);
            }
            next.faces.push_back(std::move(copy));
        }
        ValidationReport rep = validate(next);
        if (!rep.valid()) throw QuiverError("2-cycle reduction produced an invalid quiver");
        for (auto& w : words)
            for (ArrowId& x : w) x = *remap[static_cast<size_t>(x)];
        cur = std::move(next);
    }
}

Path psi_path(const ContractionMap& m, const Path& p) {
    if (!is_composable(m.source, p)) throw QuiverError("arrow sequence does not compose");
    Path out;
    out.base_vertex = m.vertex_map[static_cast<size_t>(path_tail(m.source, p))];
    for (ArrowId a : p.arrows)
        if (auto img = m.arrow_map[static_cast<size_t>(a)]) out.arrows.push_back(*img);
    return out;
}

PerfectMatching pullback_matching(const ContractionMap& m, const PerfectMatching& target_d) {
    if (!is_perfect_matching(m.target, target_d))
        throw QuiverError("not a perfect matching of the target");
    PerfectMatching d;
    for (const Arrow& a : m.source.arrows) {
        auto img = m.arrow_map[static_cast<size_t>(a.id)];
        if (img && target_d.contains(*img)) d.arrows.push_back(a.id);
    }
    if (!is_perfect_matching(m.source, d))
        throw QuiverError("pullback of a perfect matching is not perfect (invalid map)");
    return d;
}

std::optional<PerfectMatching> push_matching(const ContractionMap& m, const PerfectMatching& d) {
    if (!is_perfect_matching(m.source, d))
        throw QuiverError("not a perfect matching of the source");
    PerfectMatching img;
    for (ArrowId a : d.arrows)
        if (auto t = m.arrow_map[static_cast<size_t>(a)]) img.arrows.push_back(*t);
    std::sort(img.arrows.begin(), img.arrows.end());
    img.arrows.erase(std::unique(img.arrows.begin(), img.arrows.end()), img.arrows.end());
    if (!is_perfect_matching(m.target, img)) return std::nullopt;
    return img;
}

MatchingFamily p_zero(const ContractionMap& m) {
    MatchingFamily simple = simple_matchings(m.target);
    MatchingFamily all = enumerate_perfect_matchings(m.source);
    // order by the target simple matching they push to, then by matching
    std::vector<std::pair<size_t, PerfectMatching>> picked;
    for (const PerfectMatching& d : all.matchings) {
        auto img = push_matching(m, d);
        if (!img) continue;
        for (size_t k = 0; k < simple.size(); ++k)
            if (simple.matchings[k] == *img) {
                picked.push_back({k, d});
                break;
            }
    }
    std::sort(picked.begin(), picked.end());
    MatchingFamily fam;
    for (auto& [k, d] : picked) {
        fam.matchings.push_back(d);
        fam.variable_names.push_back(simple.variable_names[k]);
    }
    return fam;
}

PathLabel tau_psi_label(const ContractionMap& m, const Path& p) {
    MatchingFamily simple = simple_matchings(m.target);
    return path_label(m.target, simple, psi_path(m, p));
}

}  // namespace dimerlab
