#include "dimerlab/path_algebra.hpp"

#include "dimerlab/contraction.hpp"

#include <algorithm>
#include <deque>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace dimerlab {

namespace {

struct WordHash {
    size_t operator()(const std::vector<ArrowId>& w) const {
        size_t h = 0x9e3779b97f4a7c15ull;
        for (ArrowId a : w) h = h * 1099511628211ull + static_cast<size_t>(a) + 1;
        return h;
    }
};

// length-lex order used to orient rewrites
bool word_less(const std::vector<ArrowId>& a, const std::vector<ArrowId>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

PathLabel path_label(const DimerQuiver& q, const MatchingFamily& fam, const Path& p) {
    if (!is_composable(q, p)) throw QuiverError("arrow sequence does not compose");
    PathLabel l;
    l.tail = path_tail(q, p);
    l.head = path_head(q, p);
    l.u = homology(q, p);
    l.degree.assign(fam.size(), 0);
    for (ArrowId a : p.arrows)
        for (size_t k = 0; k < fam.size(); ++k)
            if (fam.matchings[k].contains(a)) l.degree[k]++;
    return l;
}

std::vector<RewriteRule> rewrite_rules(const DimerQuiver& q) {
    std::vector<RewriteRule> rules;
    for (const Arrow& a : q.arrows) {
        RewriteRule r;
        r.pivot = a.id;
        bool have_plus = false, have_minus = false;
        for (const Face& f : q.faces) {
            for (size_t k = 0; k < f.arrows.size(); ++k) {
                if (f.arrows[k] != a.id) continue;
                Path side;
                side.base_vertex = a.head;
                for (size_t j = 1; j < f.arrows.size(); ++j)
                    side.arrows.push_back(f.arrows[(k + j) % f.arrows.size()]);
                if (f.sign == FaceSign::plus) {
                    r.left = std::move(side);
                    have_plus = true;
                } else {
                    r.right = std::move(side);
                    have_minus = true;
                }
            }
        }
        if (!have_plus || !have_minus)
            throw QuiverError("arrow " + a.name + " is not in one face of each orientation");
        rules.push_back(std::move(r));
    }
    return rules;
}

PathAlgebra::PathAlgebra(const DimerQuiver& q) : q_(q) {
    eta_ = enumerate_perfect_matchings(q);
    rules_ = rewrite_rules(q);
    weight_.assign(q.arrows.size(), 0);
    for (const Arrow& a : q.arrows)
        for (const PerfectMatching& d : eta_.matchings)
            if (d.contains(a.id)) weight_[static_cast<size_t>(a.id)]++;
}

bool PathAlgebra::order_less(const std::vector<ArrowId>& a, const std::vector<ArrowId>& b) const {
    long wa = 0, wb = 0;
    for (ArrowId x : a) wa += weight_[static_cast<size_t>(x)];
    for (ArrowId x : b) wb += weight_[static_cast<size_t>(x)];
    if (wa != wb) return wa < wb;
    if (a.size() != b.size()) return a.size() > b.size();  // longer words are smaller
    if (order_variant_ == 0) return a < b;
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

// ---------------------------------------------------------------------------
// closure-based equality

EqualityResult PathAlgebra::equal_in_A(const Path& p, const Path& r) const {
    EqualityResult res;
    if (!is_composable(q_, p) || !is_composable(q_, r))
        throw QuiverError("arrow sequence does not compose");
    if (path_tail(q_, p) != path_tail(q_, r) || path_head(q_, p) != path_head(q_, r) ||
        !(eta(p) == eta(r))) {
        res.status = Equality::distinct;
        return res;
    }
    if (p.arrows == r.arrows) {
        res.status = Equality::equal;
        return res;
    }

    // BFS over the rewrite class of p
    using Word = std::vector<ArrowId>;
    std::unordered_map<Word, std::pair<Word, RewriteStep>, WordHash> parent;
    std::deque<Word> frontier;
    parent[p.arrows] = {p.arrows, {}};
    frontier.push_back(p.arrows);

    auto emit_chain = [&](Word w) {
        std::vector<RewriteStep> chain;
        while (w != p.arrows) {
            auto& [prev, step] = parent.at(w);
            chain.push_back(step);
            w = prev;
        }
        std::reverse(chain.begin(), chain.end());
        return chain;
    };

    while (!frontier.empty()) {
        Word w = frontier.front();
        frontier.pop_front();
        for (size_t ri = 0; ri < rules_.size(); ++ri) {
            const RewriteRule& rule = rules_[ri];
            for (int dir = 0; dir < 2; ++dir) {
                const Path& from = dir == 0 ? rule.left : rule.right;
                const Path& to = dir == 0 ? rule.right : rule.left;
                if (from.arrows.empty()) {
                    // empty side: insert the other side wherever the vertex matches
                    VertexId at = path_tail(q_, {from.base_vertex, {}});
                    VertexId v = p.base_vertex;
                    for (size_t pos = 0; pos <= w.size(); ++pos) {
                        if (v == at) {
                            Word next(w.begin(), w.begin() + static_cast<long>(pos));
                            next.insert(next.end(), to.arrows.begin(), to.arrows.end());
                            next.insert(next.end(), w.begin() + static_cast<long>(pos), w.end());
                            if (!parent.count(next)) {
                                parent[next] = {w, {static_cast<int>(ri),
                                                    static_cast<int>(pos), dir == 0}};
                                if (next == r.arrows) {
                                    res.status = Equality::equal;
                                    res.chain = emit_chain(next);
                                    res.explored = parent.size();
                                    return res;
                                }
                                frontier.push_back(next);
                            }
                        }
                        if (pos < w.size()) v = q_.arrow(w[pos]).head;
                    }
                    continue;
                }
                if (from.arrows.size() > w.size()) continue;
                for (size_t pos = 0; pos + from.arrows.size() <= w.size(); ++pos) {
                    if (!std::equal(from.arrows.begin(), from.arrows.end(), w.begin() + static_cast<long>(pos)))
                        continue;
                    Word next(w.begin(), w.begin() + static_cast<long>(pos));
                    next.insert(next.end(), to.arrows.begin(), to.arrows.end());
                    next.insert(next.end(), w.begin() + static_cast<long>(pos + from.arrows.size()),
                                w.end());
                    if (parent.count(next)) continue;
                    parent[next] = {w, {static_cast<int>(ri), static_cast<int>(pos), dir == 0}};
                    if (next == r.arrows) {
                        res.status = Equality::equal;
                        res.chain = emit_chain(next);
                        res.explored = parent.size();
                        return res;
                    }
                    frontier.push_back(next);
                }
            }
        }
        if (parent.size() > closure_cap) {
            res.status = Equality::undecided;
            res.explored = parent.size();
            return res;
        }
    }
    res.status = Equality::distinct;
    res.explored = parent.size();
    return res;
}

std::vector<Path> PathAlgebra::closure_of(const Path& p, size_t cap, bool* capped) const {
    std::unordered_set<std::vector<ArrowId>, WordHash> seen;
    std::deque<std::vector<ArrowId>> frontier;
    seen.insert(p.arrows);
    frontier.push_back(p.arrows);
    if (capped) *capped = false;
    while (!frontier.empty()) {
        auto w = frontier.front();
        frontier.pop_front();
        for (const RewriteRule& rule : rules_) {
            for (int dir = 0; dir < 2; ++dir) {
                const Path& from = dir == 0 ? rule.left : rule.right;
                const Path& to = dir == 0 ? rule.right : rule.left;
                if (from.arrows.empty()) {
                    VertexId at = from.base_vertex;
                    VertexId v = p.base_vertex;
                    for (size_t pos = 0; pos <= w.size(); ++pos) {
                        if (v == at) {
                            std::vector<ArrowId> next(w.begin(), w.begin() + static_cast<long>(pos));
                            next.insert(next.end(), to.arrows.begin(), to.arrows.end());
                            next.insert(next.end(), w.begin() + static_cast<long>(pos), w.end());
                            if (seen.insert(next).second) frontier.push_back(next);
                        }
                        if (pos < w.size()) v = q_.arrow(w[pos]).head;
                    }
                    continue;
                }
                if (from.arrows.size() > w.size()) continue;
                for (size_t pos = 0; pos + from.arrows.size() <= w.size(); ++pos) {
                    if (!std::equal(from.arrows.begin(), from.arrows.end(), w.begin() + static_cast<long>(pos)))
                        continue;
                    std::vector<ArrowId> next(w.begin(), w.begin() + static_cast<long>(pos));
                    next.insert(next.end(), to.arrows.begin(), to.arrows.end());
                    next.insert(next.end(), w.begin() + static_cast<long>(pos + from.arrows.size()),
                                w.end());
                    if (seen.insert(next).second) frontier.push_back(next);
                }
            }
        }
        if (seen.size() > cap) {
            if (capped) *capped = true;
            break;
        }
    }
    std::vector<Path> out;
    out.reserve(seen.size());
    for (const auto& w : seen) out.push_back({p.base_vertex, w});
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// completion of the oriented system (used by the pair search)

std::vector<ArrowId> PathAlgebra::normalize(std::vector<ArrowId> w) const {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t pos = 0; pos < w.size() && !changed; ++pos) {
            auto it = oriented_by_first_.find(w[pos]);
            if (it == oriented_by_first_.end()) continue;
            for (int ri : it->second) {
                const Oriented& r = oriented_[static_cast<size_t>(ri)];
                if (r.lhs.empty()) continue;  // deactivated
                if (pos + r.lhs.size() > w.size()) continue;
                if (!std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + static_cast<long>(pos)))
                    continue;
                std::vector<ArrowId> next(w.begin(), w.begin() + static_cast<long>(pos));
                next.insert(next.end(), r.rhs.begin(), r.rhs.end());
                next.insert(next.end(), w.begin() + static_cast<long>(pos + r.lhs.size()), w.end());
                w = std::move(next);
                changed = true;
                break;
            }
        }
    }
    return w;
}

// Knuth-Bendix with interreduction over the label-weight order. Succeeds on
// the cancellative fixtures; non-cancellative sources typically diverge and
// fall back to closure-based classification.
void PathAlgebra::ensure_completion() const {
    if (completion_tried_) return;
    completion_tried_ = true;
    for (int variant = 0; variant < 2 && !completion_ok_; ++variant) {
        order_variant_ = variant;
        try_completion();
    }
    if (!completion_ok_) order_variant_ = 0;
}

void PathAlgebra::try_completion() const {
    completion_ok_ = false;
    derived_.clear();

    const size_t rule_cap = 200;
    const size_t lhs_cap = 12;
    const size_t equation_cap = 3000;
    const size_t derived_cap = 2000;

    // weight-0 arrows would break termination of the order
    for (int w : weight_)
        if (w == 0) return;

    oriented_.clear();
    oriented_by_first_.clear();

    using Word = std::vector<ArrowId>;
    std::deque<std::pair<Word, Word>> equations;
    for (const RewriteRule& r : rules_) {
        if (r.left.arrows.empty() || r.right.arrows.empty()) return;  // not handled; fall back
        equations.push_back({r.left.arrows, r.right.arrows});
    }

    auto queue_overlaps = [&](const Oriented& r1, const Oriented& r2) {
        // proper overlap: suffix of r1.lhs == prefix of r2.lhs
        size_t maxk = std::min(r1.lhs.size(), r2.lhs.size()) - 1;
        for (size_t k = 1; k <= maxk; ++k) {
            if (!std::equal(r2.lhs.begin(), r2.lhs.begin() + static_cast<long>(k),
                            r1.lhs.end() - static_cast<long>(k)))
                continue;
            Word left = r1.rhs;
            left.insert(left.end(), r2.lhs.begin() + static_cast<long>(k), r2.lhs.end());
            Word right(r1.lhs.begin(), r1.lhs.end() - static_cast<long>(k));
            right.insert(right.end(), r2.rhs.begin(), r2.rhs.end());
            equations.push_back({std::move(left), std::move(right)});
        }
        // containment: r2.lhs inside r1.lhs
        if (r2.lhs.size() < r1.lhs.size()) {
            for (size_t pos = 0; pos + r2.lhs.size() <= r1.lhs.size(); ++pos) {
                if (!std::equal(r2.lhs.begin(), r2.lhs.end(),
                                r1.lhs.begin() + static_cast<long>(pos)))
                    continue;
                Word inner(r1.lhs.begin(), r1.lhs.begin() + static_cast<long>(pos));
                inner.insert(inner.end(), r2.rhs.begin(), r2.rhs.end());
                inner.insert(inner.end(), r1.lhs.begin() + static_cast<long>(pos + r2.lhs.size()),
                             r1.lhs.end());
                equations.push_back({r1.rhs, std::move(inner)});
            }
        }
    };

    auto contains_subword = [](const Word& w, const Word& sub) {
        if (sub.empty() || sub.size() > w.size()) return false;
        for (size_t pos = 0; pos + sub.size() <= w.size(); ++pos)
            if (std::equal(sub.begin(), sub.end(), w.begin() + static_cast<long>(pos)))
                return true;
        return false;
    };

    size_t processed = 0;
    while (!equations.empty()) {
        if (++processed > equation_cap) { if (getenv("DL_KB_DEBUG")) fprintf(stderr, "KB bail: equation cap\n"); return; }
        auto [a, b] = std::move(equations.front());
        equations.pop_front();
        Word na = normalize(std::move(a));
        Word nb = normalize(std::move(b));
        if (na == nb) continue;
        if (na.empty() || nb.empty()) { if (getenv("DL_KB_DEBUG")) fprintf(stderr, "KB bail: empty side\n"); return; }  // collapse to a vertex: fall back
        Oriented fresh;
        if (order_less(na, nb))
            fresh = {std::move(nb), std::move(na)};
        else
            fresh = {std::move(na), std::move(nb)};
        if (fresh.lhs.size() > lhs_cap) { if (getenv("DL_KB_DEBUG")) fprintf(stderr, "KB bail: lhs cap %zu\n", fresh.lhs.size()); return; }

        // interreduce the existing rules against the fresh one
        for (Oriented& old : oriented_) {
            if (old.lhs.empty()) continue;
            if (contains_subword(old.lhs, fresh.lhs)) {
                equations.push_back({old.lhs, old.rhs});
                old.lhs.clear();  // deactivate
                old.rhs.clear();
            }
        }
        oriented_.push_back(fresh);
        oriented_by_first_[fresh.lhs[0]].push_back(static_cast<int>(oriented_.size() - 1));
        size_t active = 0;
        for (const Oriented& o : oriented_)
            if (!o.lhs.empty()) active++;
        if (active > rule_cap) { if (getenv("DL_KB_DEBUG")) fprintf(stderr, "KB bail: rule cap\n"); return; }
        // rhs simplification keeps normal forms canonical
        for (Oriented& old : oriented_) {
            if (old.lhs.empty() || &old == &oriented_.back()) continue;
            old.rhs = normalize(std::move(old.rhs));
        }
        for (const Oriented& other : oriented_) {
            if (other.lhs.empty()) continue;
            queue_overlaps(oriented_.back(), other);
            if (&other != &oriented_.back()) queue_overlaps(other, oriented_.back());
        }
    }
    // drop deactivated rules and rebuild the index
    std::vector<Oriented> active_rules;
    for (Oriented& o : oriented_)
        if (!o.lhs.empty()) active_rules.push_back(std::move(o));
    oriented_ = std::move(active_rules);
    oriented_by_first_.clear();
    for (size_t i = 0; i < oriented_.size(); ++i)
        oriented_by_first_[oriented_[i].lhs[0]].push_back(static_cast<int>(i));
    completion_ok_ = true;
    if (getenv("DL_KB_DEBUG")) {
        size_t maxl = 0;
        for (auto& o : oriented_) maxl = std::max(maxl, o.lhs.size());
        fprintf(stderr, "KB ok: %zu rules, max lhs %zu, %zu eqs\n", oriented_.size(), maxl, processed);
    }
}

bool PathAlgebra::completion_ok() const {
    ensure_completion();
    return completion_ok_;
}

Path PathAlgebra::normal_form(const Path& p) const {
    ensure_completion();
    if (!completion_ok_) throw QuiverError("rewrite system did not complete");
    return {p.base_vertex, normalize(p.arrows)};
}

// ---------------------------------------------------------------------------
// pair search

// Substitution into the quiver with removable 2-cycles deleted; the deleted
// arrows equal paths over the remaining ones, so equality questions transfer
// faithfully, and the reduced rewrite system is usually far better behaved.
void PathAlgebra::ensure_reduced_model() const {
    if (reduced_tried_) return;
    reduced_tried_ = true;
    bool has_removable = false;
    for (auto& [f, kind] : classify_two_cycles(q_))
        if (kind == TwoCycleKind::removable) has_removable = true;
    if (!has_removable) return;
    TwoCycleReduction red = reduce_removable_two_cycles_with_map(q_);
    auto model = std::make_unique<ReducedModel>();
    model->quiver = std::make_unique<DimerQuiver>(std::move(red.reduced));
    model->substitution = std::move(red.substitution);
    model->algebra = std::make_unique<PathAlgebra>(*model->quiver);
    reduced_ = std::move(model);
}

std::optional<bool> PathAlgebra::decide_equal(const Path& p, const Path& r) const {
    if (path_tail(q_, p) != path_tail(q_, r) || path_head(q_, p) != path_head(q_, r) ||
        homology(q_, p) != homology(q_, r) || !(eta(p).degree == eta(r).degree))
        return false;
    if (p.arrows == r.arrows) return true;
    ensure_completion();
    if (completion_ok_) return normal_form(p).arrows == normal_form(r).arrows;
    ensure_reduced_model();
    if (reduced_) {
        auto substitute = [&](const Path& x) {
            Path out;
            out.base_vertex = x.base_vertex;
            for (ArrowId a : x.arrows) {
                const auto& w = reduced_->substitution[static_cast<size_t>(a)];
                out.arrows.insert(out.arrows.end(), w.begin(), w.end());
            }
            return out;
        };
        return reduced_->algebra->decide_equal(substitute(p), substitute(r));
    }
    // direct bidirectional search; the label weight bounds class member
    // lengths when every arrow has positive weight
    bool weight_positive = true;
    for (int w : weight_)
        if (w == 0) weight_positive = false;
    size_t len_cap = 0;
    for (ArrowId a : p.arrows) len_cap += static_cast<size_t>(weight_[static_cast<size_t>(a)]);
    if (!weight_positive) len_cap = std::max(len_cap, p.arrows.size() + r.arrows.size()) + 8;
    Connect c = connected_within(p, r, len_cap, closure_cap);
    if (c == Connect::equal) return true;
    if (c == Connect::distinct && weight_positive) return false;
    return std::nullopt;
}

std::optional<int> PathAlgebra::verify_witness(const Path& p, const Path& r) const {
    VertexId i = path_tail(q_, p);
    auto sigmas = unit_cycles_at(q_, i);
    if (sigmas.empty()) return std::nullopt;
    Path sigma = sigmas.front();
    Path sp = sigma, sr = sigma;
    for (int m = 1; m <= witness_cap; ++m) {
        Path cand_p = concat(q_, sp, p);
        Path cand_r = concat(q_, sr, r);
        if (decide_equal(cand_p, cand_r) == std::optional<bool>(true)) return m;
        sp = concat(q_, sp, sigma);
        sr = concat(q_, sr, sigma);
    }
    return std::nullopt;
}

namespace {

struct GroupKey {
    VertexId tail, head;
    Offset u;
    std::vector<int> degree;
    bool operator<(const GroupKey& o) const {
        if (tail != o.tail) return tail < o.tail;
        if (head != o.head) return head < o.head;
        if (u != o.u) return u < o.u;
        return degree < o.degree;
    }
};

}  // namespace

PairSearchResult PathAlgebra::find_non_cancellative_pairs(int max_len) const {
    for (int w : weight_)
        if (w == 0) throw QuiverError("pair search requires a nondegenerate quiver");
    ensure_completion();
    return completion_ok_ ? pairs_by_normal_forms(max_len) : pairs_by_closures(max_len);
}

// Confluent case: path classes are their normal forms, so a breadth-first
// walk over (start vertex, class normal form) states visits every class that
// has a member of length <= max_len, without materializing paths.
PairSearchResult PathAlgebra::pairs_by_normal_forms(int max_len) const {
    PairSearchResult result;
    result.max_len = static_cast<size_t>(max_len);

    std::vector<std::vector<ArrowId>> out_arrows(static_cast<size_t>(q_.vertex_count));
    for (const Arrow& a : q_.arrows) out_arrows[static_cast<size_t>(a.tail)].push_back(a.id);

    using Word = std::vector<ArrowId>;
    struct State {
        VertexId start;
        Word nf;
        VertexId head;
    };
    std::set<std::pair<VertexId, Word>> seen;
    std::vector<State> frontier;
    for (VertexId v = 0; v < q_.vertex_count; ++v) {
        seen.insert({v, {}});
        frontier.push_back({v, {}, v});
    }
    std::map<GroupKey, std::vector<Word>> groups;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<State> next;
        for (const State& s : frontier) {
            for (ArrowId a : out_arrows[static_cast<size_t>(s.head)]) {
                Word w = s.nf;
                w.push_back(a);
                Word nf = normalize(std::move(w));
                if (!seen.insert({s.start, nf}).second) continue;
                Path p{s.start, nf};
                GroupKey key{s.start, q_.arrow(a).head, homology(q_, p), eta(p).degree};
                groups[std::move(key)].push_back(nf);
                next.push_back({s.start, std::move(nf), q_.arrow(a).head});
            }
        }
        frontier = std::move(next);
    }

    for (auto& [key, members] : groups) {
        if (members.size() < 2) continue;
        std::sort(members.begin(), members.end());
        for (size_t i = 0; i < members.size() && !result.truncated; ++i)
            for (size_t j = i + 1; j < members.size(); ++j) {
                if (result.pairs.size() >= pair_cap) {
                    result.truncated = true;
                    break;
                }
                Path p{key.tail, members[i]}, r{key.tail, members[j]};
                auto m = verify_witness(p, r);
                if (m)
                    result.pairs.push_back({p, r, *m});
                else
                    result.complete = false;
            }
    }
    return result;
}

// Bidirectional meet-in-the-middle over the rewrite graph, restricted to
// words of length <= len_cap. With len_cap at least the label weight of the
// class (which bounds every member's length on a quiver without weight-0
// arrows), exhaustion is an exact distinctness proof.
PathAlgebra::Connect PathAlgebra::connected_within(const Path& p, const Path& r, size_t len_cap,
                                                   size_t node_cap) const {
    using Word = std::vector<ArrowId>;
    auto neighbors = [&](const Word& w, std::vector<Word>& out) {
        out.clear();
        for (const RewriteRule& rule : rules_) {
            for (int dir = 0; dir < 2; ++dir) {
                const Path& from = dir == 0 ? rule.left : rule.right;
                const Path& to = dir == 0 ? rule.right : rule.left;
                if (from.arrows.empty() || from.arrows.size() > w.size()) continue;
                if (w.size() - from.arrows.size() + to.arrows.size() > len_cap) continue;
                for (size_t pos = 0; pos + from.arrows.size() <= w.size(); ++pos) {
                    if (!std::equal(from.arrows.begin(), from.arrows.end(),
                                    w.begin() + static_cast<long>(pos)))
                        continue;
                    Word next(w.begin(), w.begin() + static_cast<long>(pos));
                    next.insert(next.end(), to.arrows.begin(), to.arrows.end());
                    next.insert(next.end(), w.begin() + static_cast<long>(pos + from.arrows.size()),
                                w.end());
                    out.push_back(std::move(next));
                }
            }
        }
    };
    std::unordered_set<Word, WordHash> side_a{p.arrows}, side_b{r.arrows};
    std::deque<Word> fa{p.arrows}, fb{r.arrows};
    if (side_b.count(p.arrows)) return Connect::equal;
    std::vector<Word> scratch;
    while (!fa.empty() || !fb.empty()) {
        bool grow_a = !fa.empty() && (fb.empty() || fa.size() <= fb.size());
        auto& frontier = grow_a ? fa : fb;
        auto& mine = grow_a ? side_a : side_b;
        auto& other = grow_a ? side_b : side_a;
        std::deque<Word> next;
        while (!frontier.empty()) {
            Word w = std::move(frontier.front());
            frontier.pop_front();
            neighbors(w, scratch);
            for (Word& n : scratch) {
                if (other.count(n)) return Connect::equal;
                if (mine.insert(n).second) next.push_back(std::move(n));
            }
            if (mine.size() > node_cap) return Connect::capped;
        }
        frontier = std::move(next);
    }
    return Connect::distinct;  // both sides exhausted without meeting
}

// Fallback: enumerate candidate paths irreducible under length-lex descent
// (every class minimum is one), then split groups into classes by closures.
PairSearchResult PathAlgebra::pairs_by_closures(int max_len) const {
    PairSearchResult result;
    result.max_len = static_cast<size_t>(max_len);

    std::vector<std::vector<ArrowId>> out_arrows(static_cast<size_t>(q_.vertex_count));
    for (const Arrow& a : q_.arrows) out_arrows[static_cast<size_t>(a.tail)].push_back(a.id);

    std::vector<std::vector<ArrowId>> windows;
    for (const RewriteRule& r : rules_) {
        if (r.left.arrows == r.right.arrows) continue;
        if (word_less(r.left.arrows, r.right.arrows))
            windows.push_back(r.right.arrows);
        else
            windows.push_back(r.left.arrows);
    }
    for (const auto& [a, b] : derived_) {
        if (a == b) continue;
        windows.push_back(word_less(a, b) ? b : a);
    }
    std::map<ArrowId, std::vector<int>> windows_by_last;
    for (size_t i = 0; i < windows.size(); ++i)
        if (!windows[i].empty())
            windows_by_last[windows[i].back()].push_back(static_cast<int>(i));

    std::map<GroupKey, std::vector<Path>> groups;
    std::vector<ArrowId> word;
    auto ends_reducible = [&]() {
        auto it = windows_by_last.find(word.back());
        if (it == windows_by_last.end()) return false;
        for (int wi : it->second) {
            const auto& bad = windows[static_cast<size_t>(wi)];
            if (bad.size() > word.size()) continue;
            if (std::equal(bad.begin(), bad.end(), word.end() - static_cast<long>(bad.size())))
                return true;
        }
        return false;
    };
    std::function<void(VertexId, VertexId)> dfs = [&](VertexId start, VertexId at) {
        if (!word.empty()) {
            Path p{start, word};
            GroupKey key{start, at, homology(q_, p), eta(p).degree};
            groups[std::move(key)].push_back(p);
        }
        if (word.size() == static_cast<size_t>(max_len)) return;
        for (ArrowId a : out_arrows[static_cast<size_t>(at)]) {
            word.push_back(a);
            if (!ends_reducible()) dfs(start, q_.arrow(a).head);
            word.pop_back();
        }
    };
    for (VertexId v = 0; v < q_.vertex_count; ++v) dfs(v, v);

    // process small-degree groups first so short pairs survive the output cap
    std::vector<const std::pair<const GroupKey, std::vector<Path>>*> order;
    for (auto& kv : groups)
        if (kv.second.size() >= 2) order.push_back(&kv);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
        int da = 0, db = 0;
        for (int x : a->first.degree) da += x;
        for (int x : b->first.degree) db += x;
        if (da != db) return da < db;
        return a->first < b->first;
    });

    ensure_reduced_model();
    for (auto* kv : order) {
        if (result.truncated) break;
        auto members = kv->second;
        std::sort(members.begin(), members.end());
        std::vector<Path> reps;  // one per class found so far
        bool resolved = true;
        if (reduced_) {
            // classify by closures of the substituted words, one per class
            std::vector<Path> images;
            images.reserve(members.size());
            for (const Path& mem : members) {
                Path img{mem.base_vertex, {}};
                for (ArrowId a : mem.arrows) {
                    const auto& w = reduced_->substitution[static_cast<size_t>(a)];
                    img.arrows.insert(img.arrows.end(), w.begin(), w.end());
                }
                images.push_back(std::move(img));
            }
            std::vector<bool> classified(members.size(), false);
            for (size_t i = 0; i < members.size(); ++i) {
                if (classified[i]) continue;
                classified[i] = true;
                reps.push_back(members[i]);
                bool capped = false;
                auto cl = reduced_->algebra->closure_of(images[i], closure_cap, &capped);
                if (capped) resolved = false;
                for (size_t j = i + 1; j < members.size(); ++j)
                    if (!classified[j] &&
                        (images[j].arrows == images[i].arrows ||
                         std::binary_search(cl.begin(), cl.end(), images[j])))
                        classified[j] = true;
            }
        } else {
            for (const Path& mem : members) {
                bool placed = false;
                for (const Path& rep : reps) {
                    auto eq = decide_equal(rep, mem);
                    if (eq == std::optional<bool>(true)) {
                        placed = true;
                        break;
                    }
                    if (!eq.has_value()) {
                        resolved = false;
                        placed = true;  // uncertain: do not open a new class
                        break;
                    }
                }
                if (!placed) reps.push_back(mem);
            }
        }
        if (!resolved) {
            result.complete = false;
            continue;  // under-merged classes must not be reported as pairs
        }
        if (reps.size() < 2) continue;
        for (size_t i = 0; i < reps.size() && !result.truncated; ++i)
            for (size_t j = i + 1; j < reps.size(); ++j) {
                if (result.pairs.size() >= pair_cap) {
                    result.truncated = true;
                    break;
                }
                auto m = verify_witness(reps[i], reps[j]);
                if (m)
                    result.pairs.push_back({reps[i], reps[j], *m});
                else
                    result.complete = false;
            }
    }
    return result;
}

// ---------------------------------------------------------------------------
// taut cycles

bool PathAlgebra::in_C_hat(const Path& cycle, TautMethod method) const {
    if (!is_composable(q_, cycle)) throw QuiverError("arrow sequence does not compose");
    if (path_tail(q_, cycle) != path_head(q_, cycle)) throw QuiverError("path is not a cycle");
    if (cycle.trivial()) return false;

    if (method == TautMethod::sigma) {
        auto cres = is_cancellative(q_);
        if (!cres.cancellative)
            throw QuiverError("sigma method requires a cancellative quiver");
        MatchingFamily simple = simple_matchings(q_);
        PathLabel l = path_label(q_, simple, cycle);
        for (int d : l.degree)
            if (d == 0) return true;
        return false;
    }

    if (homology(q_, cycle) == Offset{}) return false;
    bool capped = false;
    auto reps = closure_of(cycle, closure_cap, &capped);
    if (capped) throw QuiverError("closure cap exceeded while searching representatives");
    for (const Path& rep : reps) {
        Path doubled = concat(q_, rep, rep);
        LiftedPath lp = lift(q_, doubled, Offset{});
        bool simple_lift = true;
        for (size_t i = 0; i < lp.visited.size() && simple_lift; ++i)
            for (size_t j = i + 1; j < lp.visited.size(); ++j)
                if (lp.visited[i] == lp.visited[j]) {
                    simple_lift = false;
                    break;
                }
        if (simple_lift) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// cycle enumeration

std::vector<Path> enumerate_cycles(const DimerQuiver& q, VertexId i, CycleBounds bounds) {
    if (i < 0 || i >= q.vertex_count) throw QuiverError("vertex out of range");
    std::vector<std::vector<ArrowId>> out_arrows(static_cast<size_t>(q.vertex_count));
    for (const Arrow& a : q.arrows) out_arrows[static_cast<size_t>(a.tail)].push_back(a.id);

    std::vector<Path> cycles;
    std::vector<ArrowId> word;
    std::vector<std::pair<VertexId, Offset>> visited{{i, Offset{}}};

    std::function<void(VertexId, Offset)> dfs = [&](VertexId at, Offset off) {
        if (word.size() == static_cast<size_t>(bounds.max_len)) return;
        for (ArrowId a : out_arrows[static_cast<size_t>(at)]) {
            const Arrow& ar = q.arrow(a);
            Offset noff = off + ar.offset;
            if (std::abs(noff.dx) > bounds.box || std::abs(noff.dy) > bounds.box) continue;
            std::pair<VertexId, Offset> key{ar.head, noff};
            if (std::find(visited.begin(), visited.end(), key) != visited.end()) continue;
            word.push_back(a);
            visited.push_back(key);
            if (ar.head == i) cycles.push_back({i, word});
            dfs(ar.head, noff);
            visited.pop_back();
            word.pop_back();
        }
    };
    dfs(i, Offset{});

    auto sigmas = unit_cycles_at(q, i);
    if (!sigmas.empty()) {
        const Path& sigma = sigmas.front();
        Path power{i, {}};
        for (int m = 1; m * sigma.arrows.size() <= static_cast<size_t>(bounds.max_len); ++m) {
            power.arrows.insert(power.arrows.end(), sigma.arrows.begin(), sigma.arrows.end());
            cycles.push_back(power);
        }
    }
    std::sort(cycles.begin(), cycles.end());
    cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
    return cycles;
}

}  // namespace dimerlab
