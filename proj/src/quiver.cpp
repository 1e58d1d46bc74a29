#include "dimerlab/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace dimerlab {

std::string to_string(Offset o) {
    std::ostringstream s;
    s << "(" << o.dx << "," << o.dy << ")";
    return s.str();
}

ArrowId DimerQuiver::arrow_id(const std::string& name) const {
    auto a = find_arrow(name);
    if (!a) throw QuiverError("unknown arrow name: " + name);
    return *a;
}

std::optional<ArrowId> DimerQuiver::find_arrow(const std::string& name) const {
    for (const Arrow& a : arrows)
        if (a.name == name) return a.id;
    return std::nullopt;
}

bool is_composable(const DimerQuiver& q, const Path& p) {
    if (p.base_vertex < 0 || p.base_vertex >= q.vertex_count) return false;
    VertexId at = p.base_vertex;
    for (ArrowId a : p.arrows) {
        if (a < 0 || a >= static_cast<int>(q.arrows.size())) return false;
        if (q.arrow(a).tail != at) return false;
        at = q.arrow(a).head;
    }
    return true;
}

static void require_composable(const DimerQuiver& q, const Path& p) {
    if (!is_composable(q, p)) throw QuiverError("arrow sequence does not compose");
}

VertexId path_tail(const DimerQuiver& q, const Path& p) {
    require_composable(q, p);
    return p.trivial() ? p.base_vertex : q.arrow(p.arrows.front()).tail;
}

VertexId path_head(const DimerQuiver& q, const Path& p) {
    require_composable(q, p);
    return p.trivial() ? p.base_vertex : q.arrow(p.arrows.back()).head;
}

Offset homology(const DimerQuiver& q, const Path& p) {
    require_composable(q, p);
    Offset u;
    for (ArrowId a : p.arrows) u += q.arrow(a).offset;
    return u;
}

LiftedPath lift(const DimerQuiver& q, const Path& p, Offset start) {
    require_composable(q, p);
    LiftedPath lp;
    lp.base = p;
    lp.start_offset = start;
    Offset at = start;
    lp.visited.push_back({p.base_vertex, at});
    VertexId v = p.base_vertex;
    for (ArrowId a : p.arrows) {
        at += q.arrow(a).offset;
        v = q.arrow(a).head;
        lp.visited.push_back({v, at});
    }
    return lp;
}

Path concat(const DimerQuiver& q, const Path& first, const Path& then) {
    require_composable(q, first);
    require_composable(q, then);
    if (path_head(q, first) != path_tail(q, then))
        throw QuiverError("paths do not compose");
    Path r = first;
    r.arrows.insert(r.arrows.end(), then.arrows.begin(), then.arrows.end());
    return r;
}

std::vector<Path> unit_cycles_at(const DimerQuiver& q, VertexId i) {
    if (i < 0 || i >= q.vertex_count) throw QuiverError("vertex out of range");
    std::vector<Path> cycles;
    for (const Face& f : q.faces) {
        for (size_t k = 0; k < f.arrows.size(); ++k) {
            if (q.arrow(f.arrows[k]).tail != i) continue;
            Path p;
            p.base_vertex = i;
            p.arrows.reserve(f.arrows.size());
            for (size_t j = 0; j < f.arrows.size(); ++j)
                p.arrows.push_back(f.arrows[(k + j) % f.arrows.size()]);
            cycles.push_back(std::move(p));
        }
    }
    return cycles;
}

namespace {

// Does the collection of offset classes generate the full rank-2 lattice?
// Maintains a Hermite-form basis (a,b), (0,d) and folds vectors in by gcd.
bool generates_z2(const std::vector<Offset>& vecs) {
    long long a = 0, b = 0, d = 0;
    for (Offset v : vecs) {
        long long x = v.dx, y = v.dy;
        while (x != 0) {
            if (a == 0) {
                std::swap(a, x);
                std::swap(b, y);
                break;
            }
            long long t = x / a;
            x -= t * a;
            y -= t * b;
            if (x != 0) {
                std::swap(a, x);
                std::swap(b, y);
            }
        }
        d = std::gcd(d, std::abs(y));
    }
    return std::abs(a) * d == 1;
}

}  // namespace

ValidationReport validate(const DimerQuiver& q) {
    ValidationReport rep;
    auto bad = [&](const std::string& msg) { rep.violations.push_back(msg); };

    if (q.vertex_count < 1) bad("vertex count must be at least 1");
    if (!q.layout.empty() && static_cast<int>(q.layout.size()) != q.vertex_count)
        bad("layout size does not match vertex count");

    for (size_t i = 0; i < q.arrows.size(); ++i) {
        const Arrow& a = q.arrows[i];
        if (a.id != static_cast<int>(i)) bad("arrow ids not dense at index " + std::to_string(i));
        if (a.tail < 0 || a.tail >= q.vertex_count || a.head < 0 || a.head >= q.vertex_count)
            bad("arrow " + a.name + " has endpoint out of range");
    }
    for (size_t i = 0; i < q.arrows.size(); ++i)
        for (size_t j = i + 1; j < q.arrows.size(); ++j)
            if (q.arrows[i].name == q.arrows[j].name)
                bad("duplicate arrow name " + q.arrows[i].name);

    // face structure
    for (const Face& f : q.faces) {
        if (f.arrows.empty()) {
            bad("face " + std::to_string(f.id) + " is empty");
            continue;
        }
        bool in_range = true;
        for (ArrowId a : f.arrows)
            if (a < 0 || a >= static_cast<int>(q.arrows.size())) {
                bad("face " + std::to_string(f.id) + " references unknown arrow");
                in_range = false;
            }
        if (!in_range) continue;
        Offset sum;
        for (size_t k = 0; k < f.arrows.size(); ++k) {
            const Arrow& cur = q.arrow(f.arrows[k]);
            const Arrow& nxt = q.arrow(f.arrows[(k + 1) % f.arrows.size()]);
            if (cur.head != nxt.tail)
                bad("face " + std::to_string(f.id) + " does not compose at position " +
                    std::to_string(k));
            sum += cur.offset;
        }
        if (sum != Offset{})
            bad("face " + std::to_string(f.id) + " has nonzero offset sum " + to_string(sum));
    }

    // every arrow in exactly two faces, one of each orientation
    std::vector<int> plus_count(q.arrows.size(), 0), minus_count(q.arrows.size(), 0);
    for (const Face& f : q.faces)
        for (ArrowId a : f.arrows) {
            if (a < 0 || a >= static_cast<int>(q.arrows.size())) continue;
            (f.sign == FaceSign::plus ? plus_count : minus_count)[static_cast<size_t>(a)]++;
        }
    for (size_t a = 0; a < q.arrows.size(); ++a)
        if (plus_count[a] != 1 || minus_count[a] != 1)
            bad("arrow " + q.arrows[a].name + " is in " + std::to_string(plus_count[a]) +
                " plus and " + std::to_string(minus_count[a]) +
                " minus faces (arrow in two faces of same orientation or wrong count)");

    // Euler characteristic of the torus
    long long euler = static_cast<long long>(q.vertex_count) -
                      static_cast<long long>(q.arrows.size()) +
                      static_cast<long long>(q.faces.size());
    if (euler != 0) bad("Euler characteristic " + std::to_string(euler) + " (torus needs 0)");

    // connectivity of the underlying graph
    if (q.vertex_count >= 1) {
        std::vector<std::vector<int>> adj(static_cast<size_t>(q.vertex_count));
        for (const Arrow& a : q.arrows)
            if (a.tail >= 0 && a.tail < q.vertex_count && a.head >= 0 && a.head < q.vertex_count) {
                adj[static_cast<size_t>(a.tail)].push_back(a.head);
                adj[static_cast<size_t>(a.head)].push_back(a.tail);
            }
        std::vector<bool> seen(static_cast<size_t>(q.vertex_count), false);
        std::queue<int> bfs;
        bfs.push(0);
        seen[0] = true;
        int reached = 1;
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            for (int w : adj[static_cast<size_t>(v)])
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = true;
                    reached++;
                    bfs.push(w);
                }
        }
        if (reached != q.vertex_count) bad("underlying graph is not connected");
    }

    // cycle classes of the underlying graph must generate the full lattice
    if (rep.valid()) {
        std::vector<int> parent(static_cast<size_t>(q.vertex_count), -1);
        std::vector<Offset> to_root(static_cast<size_t>(q.vertex_count));
        std::vector<bool> seen(static_cast<size_t>(q.vertex_count), false);
        std::vector<bool> tree_arrow(q.arrows.size(), false);
        std::queue<int> bfs;
        bfs.push(0);
        seen[0] = true;
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            for (const Arrow& a : q.arrows) {
                int w = -1;
                Offset step;
                if (a.tail == v && !seen[static_cast<size_t>(a.head)]) {
                    w = a.head;
                    step = a.offset;
                } else if (a.head == v && !seen[static_cast<size_t>(a.tail)]) {
                    w = a.tail;
                    step = -a.offset;
                } else {
                    continue;
                }
                seen[static_cast<size_t>(w)] = true;
                parent[static_cast<size_t>(w)] = v;
                to_root[static_cast<size_t>(w)] = to_root[static_cast<size_t>(v)] + step;
                tree_arrow[static_cast<size_t>(a.id)] = true;
                bfs.push(w);
            }
        }
        std::vector<Offset> classes;
        for (const Arrow& a : q.arrows)
            if (!tree_arrow[static_cast<size_t>(a.id)])
                classes.push_back(to_root[static_cast<size_t>(a.tail)] + a.offset -
                                  to_root[static_cast<size_t>(a.head)]);
        if (!generates_z2(classes))
            bad("cycle homology classes do not generate the full rank-2 lattice");
    }

    return rep;
}

bool strongly_connected(const DimerQuiver& q, const std::vector<ArrowId>& arrows) {
    if (q.vertex_count == 0) return false;
    std::vector<std::vector<int>> fwd(static_cast<size_t>(q.vertex_count)),
        rev(static_cast<size_t>(q.vertex_count));
    for (ArrowId id : arrows) {
        const Arrow& a = q.arrow(id);
        fwd[static_cast<size_t>(a.tail)].push_back(a.head);
        rev[static_cast<size_t>(a.head)].push_back(a.tail);
    }
    auto reach_all = [&](const std::vector<std::vector<int>>& adj) {
        std::vector<bool> seen(static_cast<size_t>(q.vertex_count), false);
        std::queue<int> bfs;
        bfs.push(0);
        seen[0] = true;
        int reached = 1;
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            for (int w : adj[static_cast<size_t>(v)])
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = true;
                    reached++;
                    bfs.push(w);
                }
        }
        return reached == q.vertex_count;
    };
    return reach_all(fwd) && reach_all(rev);
}

std::string path_to_string(const DimerQuiver& q, const Path& p) {
    if (p.trivial()) return "e" + std::to_string(p.base_vertex);
    std::string s;
    for (size_t k = 0; k < p.arrows.size(); ++k) {
        if (k) s += " ";
        s += q.arrow(p.arrows[k]).name;
    }
    return s;
}

}  // namespace dimerlab
