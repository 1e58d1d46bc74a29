#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dimerlab {

using VertexId = int;
using ArrowId = int;
using FaceId = int;

// Homology offset in the deck-transformation lattice of the torus cover.
struct Offset {
    int dx = 0;
    int dy = 0;

    friend Offset operator+(Offset a, Offset b) { return {a.dx + b.dx, a.dy + b.dy}; }
    friend Offset operator-(Offset a, Offset b) { return {a.dx - b.dx, a.dy - b.dy}; }
    Offset operator-() const { return {-dx, -dy}; }
    Offset& operator+=(Offset o) { dx += o.dx; dy += o.dy; return *this; }
    friend bool operator==(Offset a, Offset b) { return a.dx == b.dx && a.dy == b.dy; }
    friend bool operator!=(Offset a, Offset b) { return !(a == b); }
    friend bool operator<(Offset a, Offset b) {
        return a.dx != b.dx ? a.dx < b.dx : a.dy < b.dy;
    }
};

std::string to_string(Offset o);

struct Arrow {
    ArrowId id = 0;
    std::string name;
    VertexId tail = 0;
    VertexId head = 0;
    Offset offset;
};

enum class FaceSign { plus, minus };

// A face of the torus embedding, stored as its boundary cycle in traversal
// order: head(arrows[k]) == tail(arrows[k+1]), cyclically.
struct Face {
    FaceId id = 0;
    FaceSign sign = FaceSign::plus;
    std::vector<ArrowId> arrows;
};

struct DimerQuiver {
    int vertex_count = 0;
    std::vector<Arrow> arrows;
    std::vector<Face> faces;
    // rendering hints only, one entry per vertex when present
    std::vector<std::optional<std::array<double, 2>>> layout;

    const Arrow& arrow(ArrowId a) const { return arrows.at(static_cast<size_t>(a)); }
    ArrowId arrow_id(const std::string& name) const;  // throws if unknown
    std::optional<ArrowId> find_arrow(const std::string& name) const;
};

// A composable arrow sequence in traversal order; empty = trivial path at
// base_vertex.
struct Path {
    VertexId base_vertex = 0;
    std::vector<ArrowId> arrows;

    bool trivial() const { return arrows.empty(); }
    size_t length() const { return arrows.size(); }

    friend bool operator==(const Path& a, const Path& b) {
        return a.base_vertex == b.base_vertex && a.arrows == b.arrows;
    }
    friend bool operator<(const Path& a, const Path& b) {
        if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
        if (a.base_vertex != b.base_vertex) return a.base_vertex < b.base_vertex;
        return a.arrows < b.arrows;
    }
};

struct LiftedPath {
    Path base;
    Offset start_offset;
    // (vertex, offset) pairs, length() + 1 entries
    std::vector<std::pair<VertexId, Offset>> visited;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

class QuiverError : public std::runtime_error {
  public:
    explicit QuiverError(const std::string& what) : std::runtime_error(what) {}
};

ValidationReport validate(const DimerQuiver& q);

// All rotations of incident face cycles based at i, ordered by (face, position).
std::vector<Path> unit_cycles_at(const DimerQuiver& q, VertexId i);

bool is_composable(const DimerQuiver& q, const Path& p);
VertexId path_tail(const DimerQuiver& q, const Path& p);
VertexId path_head(const DimerQuiver& q, const Path& p);

Offset homology(const DimerQuiver& q, const Path& p);
LiftedPath lift(const DimerQuiver& q, const Path& p, Offset start);

Path concat(const DimerQuiver& q, const Path& first, const Path& then);

// Strong connectivity of the subquiver spanned by `arrows` on all vertices.
bool strongly_connected(const DimerQuiver& q, const std::vector<ArrowId>& arrows);

std::string path_to_string(const DimerQuiver& q, const Path& p);

}  // namespace dimerlab
