#include "dimerlab/matchings.hpp"

#include <algorithm>

namespace dimerlab {

bool PerfectMatching::contains(ArrowId a) const {
    return std::binary_search(arrows.begin(), arrows.end(), a);
}

bool is_perfect_matching(const DimerQuiver& q, const PerfectMatching& d) {
    for (ArrowId a : d.arrows)
        if (a < 0 || a >= static_cast<int>(q.arrows.size())) return false;
    for (const Face& f : q.faces) {
        int hits = 0;
        for (ArrowId a : f.arrows)
            if (d.contains(a)) hits++;
        if (hits != 1) return false;
    }
    return true;
}

namespace {

struct CoverSearch {
    const DimerQuiver& q;
    std::vector<std::vector<FaceId>> faces_of_arrow;
    std::vector<bool> face_covered;
    std::vector<bool> arrow_used;
    std::vector<ArrowId> chosen;
    std::vector<PerfectMatching> out;

    explicit CoverSearch(const DimerQuiver& quiver) : q(quiver) {
        faces_of_arrow.resize(q.arrows.size());
        for (const Face& f : q.faces)
            for (ArrowId a : f.arrows) faces_of_arrow[static_cast<size_t>(a)].push_back(f.id);
        face_covered.assign(q.faces.size(), false);
        arrow_used.assign(q.arrows.size(), false);
    }

    bool arrow_available(ArrowId a) const {
        if (arrow_used[static_cast<size_t>(a)]) return false;
        for (FaceId f : faces_of_arrow[static_cast<size_t>(a)])
            if (face_covered[static_cast<size_t>(f)]) return false;
        return true;
    }

    void run() {
        // branch on the uncovered face with the fewest available arrows
        FaceId pick = -1;
        size_t best = SIZE_MAX;
        for (const Face& f : q.faces) {
            if (face_covered[static_cast<size_t>(f.id)]) continue;
            size_t cand = 0;
            for (ArrowId a : f.arrows)
                if (arrow_available(a)) cand++;
            if (cand < best) {
                best = cand;
                pick = f.id;
            }
        }
        if (pick < 0) {
            PerfectMatching m;
            m.arrows = chosen;
            std::sort(m.arrows.begin(), m.arrows.end());
            out.push_back(std::move(m));
            return;
        }
        if (best == 0) return;
        // deterministic branching in arrow-id order
        std::vector<ArrowId> cands;
        for (ArrowId a : q.faces[static_cast<size_t>(pick)].arrows)
            if (arrow_available(a)) cands.push_back(a);
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        for (ArrowId a : cands) {
            arrow_used[static_cast<size_t>(a)] = true;
            for (FaceId f : faces_of_arrow[static_cast<size_t>(a)])
                face_covered[static_cast<size_t>(f)] = true;
            chosen.push_back(a);
            run();
            chosen.pop_back();
            for (FaceId f : faces_of_arrow[static_cast<size_t>(a)])
                face_covered[static_cast<size_t>(f)] = false;
            arrow_used[static_cast<size_t>(a)] = false;
        }
    }
};

}  // namespace

MatchingFamily enumerate_perfect_matchings(const DimerQuiver& q) {
    CoverSearch search(q);
    search.run();
    std::sort(search.out.begin(), search.out.end());
    search.out.erase(std::unique(search.out.begin(), search.out.end()), search.out.end());
    MatchingFamily fam;
    fam.matchings = std::move(search.out);
    for (size_t k = 0; k < fam.matchings.size(); ++k)
        fam.variable_names.push_back("p" + std::to_string(k));
    return fam;
}

bool is_simple_matching(const DimerQuiver& q, const PerfectMatching& d) {
    if (!is_perfect_matching(q, d)) throw QuiverError("not a perfect matching");
    std::vector<ArrowId> rest;
    for (const Arrow& a : q.arrows)
        if (!d.contains(a.id)) rest.push_back(a.id);
    return strongly_connected(q, rest);
}

MatchingFamily simple_matchings(const DimerQuiver& q) {
    MatchingFamily all = enumerate_perfect_matchings(q);
    MatchingFamily fam;
    for (const PerfectMatching& d : all.matchings)
        if (is_simple_matching(q, d)) fam.matchings.push_back(d);
    for (size_t k = 0; k < fam.matchings.size(); ++k)
        fam.variable_names.push_back("m" + std::to_string(k));
    return fam;
}

std::vector<ArrowId> uncovered_arrows(const DimerQuiver& q, const MatchingFamily& fam) {
    std::vector<ArrowId> out;
    for (const Arrow& a : q.arrows) {
        bool covered = false;
        for (const PerfectMatching& d : fam.matchings)
            if (d.contains(a.id)) {
                covered = true;
                break;
            }
        if (!covered) out.push_back(a.id);
    }
    return out;
}

bool is_nondegenerate(const DimerQuiver& q) {
    return uncovered_arrows(q, enumerate_perfect_matchings(q)).empty();
}

CancellativityResult is_cancellative(const DimerQuiver& q) {
    CancellativityResult r;
    r.uncovered = uncovered_arrows(q, simple_matchings(q));
    r.cancellative = r.uncovered.empty();
    return r;
}

std::vector<std::pair<FaceId, TwoCycleKind>> classify_two_cycles(const DimerQuiver& q) {
    std::vector<std::pair<FaceId, TwoCycleKind>> out;
    auto other_face_contains = [&](FaceId twocycle, ArrowId a, ArrowId b) {
        for (const Face& f : q.faces) {
            if (f.id == twocycle) continue;
            bool has_a = false, has_b = false;
            for (ArrowId x : f.arrows) {
                if (x == a) has_a = true;
                if (x == b) has_b = true;
            }
            if (has_a && has_b) return true;
        }
        return false;
    };
    for (const Face& f : q.faces) {
        if (f.arrows.size() != 2) continue;
        ArrowId a = f.arrows[0], b = f.arrows[1];
        bool permanent = other_face_contains(f.id, a, b) || other_face_contains(f.id, b, a);
        out.push_back({f.id, permanent ? TwoCycleKind::permanent : TwoCycleKind::removable});
    }
    return out;
}

}  // namespace dimerlab
