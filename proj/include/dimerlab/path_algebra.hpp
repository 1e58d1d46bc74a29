#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "dimerlab/matchings.hpp"
#include "dimerlab/quiver.hpp"

namespace dimerlab {

// Image of a path under a matching-degree labeling: endpoints, homology
// class, and per-matching arrow counts.
struct PathLabel {
    VertexId tail = 0;
    VertexId head = 0;
    Offset u;
    std::vector<int> degree;

    friend bool operator==(const PathLabel& a, const PathLabel& b) {
        return a.tail == b.tail && a.head == b.head && a.u == b.u && a.degree == b.degree;
    }
    friend bool operator<(const PathLabel& a, const PathLabel& b) {
        if (a.tail != b.tail) return a.tail < b.tail;
        if (a.head != b.head) return a.head < b.head;
        if (a.u != b.u) return a.u < b.u;
        return a.degree < b.degree;
    }
};

PathLabel path_label(const DimerQuiver& q, const MatchingFamily& fam, const Path& p);

// The two complementary face paths of an arrow, both running from head(pivot)
// to tail(pivot); left comes from the plus face, right from the minus face.
struct RewriteRule {
    ArrowId pivot = 0;
    Path left;
    Path right;
};

std::vector<RewriteRule> rewrite_rules(const DimerQuiver& q);

enum class Equality { equal, distinct, undecided };

struct RewriteStep {
    int rule = 0;
    int position = 0;
    bool forward = true;  // true: replaced left side by right side
};

struct EqualityResult {
    Equality status = Equality::undecided;
    std::vector<RewriteStep> chain;  // populated for equal
    size_t explored = 0;
};

struct NonCancellativePair {
    Path p;
    Path r;
    int sigma_power = 0;  // verified witness exponent
};

struct PairSearchResult {
    std::vector<NonCancellativePair> pairs;
    size_t max_len = 0;
    bool complete = true;    // false when some class question hit a cap
    bool truncated = false;  // pair list cut at the output cap
};

struct CycleBounds {
    int box = 3;
    int max_len = 12;
};

enum class TautMethod { doubled_lift, sigma };

// Shared context: rewrite rules, the full perfect-matching family, and a
// lazily built confluent completion of the oriented rewrite system.
class PathAlgebra {
  public:
    explicit PathAlgebra(const DimerQuiver& q);

    const DimerQuiver& quiver() const { return q_; }
    const MatchingFamily& eta_family() const { return eta_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }

    PathLabel eta(const Path& p) const { return path_label(q_, eta_, p); }

    // Exact decision by rewrite closure inside the label class. Exhausting
    // the closure proves distinctness; the node cap yields `undecided`
    // (possible for degenerate quivers, whose classes may be unbounded).
    EqualityResult equal_in_A(const Path& p, const Path& r) const;

    // One pair per unordered pair of distinct path classes sharing tail,
    // head, homology, and label, represented by their minimal members; each
    // carries a verified unit-cycle power witness.
    PairSearchResult find_non_cancellative_pairs(int max_len) const;

    bool in_C_hat(const Path& cycle, TautMethod method) const;

    // True once the oriented system has been completed to confluence; the
    // pair search falls back to plain closures otherwise. Orientation is by
    // label weight, then fewer arrows are greater, so arrows equal to longer
    // paths get eliminated from normal forms.
    bool completion_ok() const;
    Path normal_form(const Path& p) const;

    size_t closure_cap = 2000000;
    int witness_cap = 8;
    size_t pair_cap = 1000;

  private:
    struct Oriented {
        std::vector<ArrowId> lhs;
        std::vector<ArrowId> rhs;
    };

    enum class Connect { equal, distinct, capped };

    void ensure_completion() const;
    void try_completion() const;
    void ensure_reduced_model() const;
    bool order_less(const std::vector<ArrowId>& a, const std::vector<ArrowId>& b) const;
    std::vector<ArrowId> normalize(std::vector<ArrowId> w) const;
    std::vector<Path> closure_of(const Path& p, size_t cap, bool* capped) const;
    Connect connected_within(const Path& p, const Path& r, size_t len_cap, size_t node_cap) const;
    // exact tri-state equality through the cheapest available route
    std::optional<bool> decide_equal(const Path& p, const Path& r) const;
    std::optional<int> verify_witness(const Path& p, const Path& r) const;
    PairSearchResult pairs_by_normal_forms(int max_len) const;
    PairSearchResult pairs_by_closures(int max_len) const;

    const DimerQuiver& q_;
    MatchingFamily eta_;
    std::vector<RewriteRule> rules_;
    std::vector<int> weight_;  // total label degree per arrow

    mutable bool completion_tried_ = false;
    mutable bool completion_ok_ = false;
    mutable int order_variant_ = 0;
    mutable std::vector<Oriented> oriented_;
    mutable std::map<ArrowId, std::vector<int>> oriented_by_first_;
    // valid consequences harvested even when completion diverges
    mutable std::vector<std::pair<std::vector<ArrowId>, std::vector<ArrowId>>> derived_;

    // model with the removable 2-cycle arrows eliminated; exact for equality
    struct ReducedModel {
        std::unique_ptr<DimerQuiver> quiver;
        std::vector<std::vector<ArrowId>> substitution;
        std::unique_ptr<PathAlgebra> algebra;
    };
    mutable bool reduced_tried_ = false;
    mutable std::unique_ptr<ReducedModel> reduced_;
};

// All cycles based at i, of length <= bounds.max_len, whose lifts stay in
// [-box, box]^2 and visit no lifted vertex twice, plus powers of the first
// unit cycle at i that fit the length budget. Deterministic order.
std::vector<Path> enumerate_cycles(const DimerQuiver& q, VertexId i, CycleBounds bounds);

}  // namespace dimerlab
