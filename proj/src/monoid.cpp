#include "dimerlab/monoid.hpp"

#include <algorithm>
#include <functional>
#include <array>
#include <map>
#include <set>
#include <sstream>

namespace dimerlab {

int total_degree(const ExponentVector& v) {
    int s = 0;
    for (int x : v) s += x;
    return s;
}

std::string monomial_to_string(const ExponentVector& v, const std::vector<std::string>& names) {
    std::ostringstream out;
    bool any = false;
    for (size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        if (any) out << "*";
        out << (k < names.size() ? names[k] : "v" + std::to_string(k));
        if (v[k] > 1) out << "^" << v[k];
        any = true;
    }
    if (!any) out << "1";
    return out.str();
}

bool MonoidDescription::contains_cached(const ExponentVector& v) const {
    return std::binary_search(monomials.begin(), monomials.end(), v);
}

MonoidDescription generate(std::vector<ExponentVector> gens, int degree_bound, size_t width) {
    MonoidDescription m;
    m.degree_bound = degree_bound;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [](const ExponentVector& g) { return total_degree(g) == 0; }),
               gens.end());
    m.generators = gens;

    if (width == SIZE_MAX) width = gens.empty() ? 0 : gens[0].size();
    for (const auto& g : gens)
        if (g.size() != width) throw QuiverError("generator length mismatch");

    std::set<ExponentVector> seen;
    seen.insert(ExponentVector(width, 0));
    std::vector<ExponentVector> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<ExponentVector> next;
        for (const auto& v : frontier) {
            for (const auto& g : m.generators) {
                if (total_degree(v) + total_degree(g) > degree_bound) continue;
                ExponentVector w = v;
                for (size_t k = 0; k < w.size(); ++k) w[k] += g[k];
                if (seen.insert(w).second) next.push_back(std::move(w));
            }
        }
        frontier = std::move(next);
    }
    m.monomials.assign(seen.begin(), seen.end());
    return m;
}

bool monoid_member(const std::vector<ExponentVector>& gens, const ExponentVector& v) {
    if (total_degree(v) == 0) return true;
    std::map<ExponentVector, bool> memo;
    std::function<bool(const ExponentVector&)> go = [&](const ExponentVector& w) -> bool {
        if (total_degree(w) == 0) return true;
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        bool ok = false;
        for (const auto& g : gens) {
            if (g.size() != w.size() || total_degree(g) == 0) continue;
            ExponentVector rest = w;
            bool fits = true;
            for (size_t k = 0; k < w.size(); ++k) {
                rest[k] -= g[k];
                if (rest[k] < 0) {
                    fits = false;
                    break;
                }
            }
            if (fits && go(rest)) {
                ok = true;
                break;
            }
        }
        memo[w] = ok;
        return ok;
    };
    return go(v);
}

std::vector<ExponentVector> minimal_generators(const MonoidDescription& m) {
    std::vector<ExponentVector> out;
    for (const auto& v : m.monomials) {
        int dv = total_degree(v);
        if (dv == 0) continue;
        bool decomposable = false;
        for (const auto& a : m.monomials) {
            int da = total_degree(a);
            if (da == 0 || da >= dv) continue;
            ExponentVector b = v;
            bool fits = true;
            for (size_t k = 0; k < v.size(); ++k) {
                b[k] -= a[k];
                if (b[k] < 0) {
                    fits = false;
                    break;
                }
            }
            if (fits && m.contains_cached(b)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) out.push_back(v);
    }
    return out;
}

namespace {

bool degree_lex_less(const ExponentVector& a, const ExponentVector& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

std::vector<ExponentVector> truncated(const MonoidDescription& m, int d) {
    std::vector<ExponentVector> out;
    for (const auto& v : m.monomials)
        if (total_degree(v) <= d) out.push_back(v);
    return out;
}

}  // namespace

MonoidComparison equal_up_to_degree(const MonoidDescription& a, const MonoidDescription& b,
                                    int d) {
    if (d > a.degree_bound || d > b.degree_bound)
        throw QuiverError("comparison degree exceeds a cache bound");
    MonoidComparison cmp;
    auto va = truncated(a, d), vb = truncated(b, d);
    std::vector<ExponentVector> diff;
    std::set_symmetric_difference(va.begin(), va.end(), vb.begin(), vb.end(),
                                  std::back_inserter(diff));
    if (!diff.empty()) {
        cmp.equal = false;
        cmp.first_discrepancy = *std::min_element(diff.begin(), diff.end(), degree_lex_less);
    }
    return cmp;
}

std::optional<std::vector<int>> match_up_to_permutation(const MonoidDescription& a,
                                                        const MonoidDescription& b, int d) {
    size_t n = 0;
    for (const auto& v : a.monomials) n = std::max(n, v.size());
    for (const auto& v : b.monomials)
        if (v.size() != n && !(v.empty() && n == 0)) {
            if (v.size() != n) return std::nullopt;
        }
    std::vector<int> perm(n);
    for (size_t k = 0; k < n; ++k) perm[k] = static_cast<int>(k);
    auto vb = truncated(b, d);
    do {
        std::vector<ExponentVector> mapped;
        for (const auto& v : truncated(a, d)) {
            ExponentVector w(n, 0);
            for (size_t k = 0; k < n; ++k) w[static_cast<size_t>(perm[k])] = v[k];
            mapped.push_back(std::move(w));
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == vb) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

namespace {

// per-arrow degree vectors of the transported labeling
std::vector<ExponentVector> arrow_degree_table(const ContractionMap& m,
                                               const MatchingFamily& target_simple) {
    std::vector<ExponentVector> table(m.source.arrows.size(),
                                      ExponentVector(target_simple.size(), 0));
    for (const Arrow& a : m.source.arrows) {
        auto img = m.arrow_map[static_cast<size_t>(a.id)];
        if (!img) continue;
        for (size_t k = 0; k < target_simple.size(); ++k)
            if (target_simple.matchings[k].contains(*img))
                table[static_cast<size_t>(a.id)][k] = 1;
    }
    return table;
}

std::vector<ExponentVector> self_degree_table(const DimerQuiver& q,
                                              const MatchingFamily& simple) {
    std::vector<ExponentVector> table(q.arrows.size(), ExponentVector(simple.size(), 0));
    for (const Arrow& a : q.arrows)
        for (size_t k = 0; k < simple.size(); ++k)
            if (simple.matchings[k].contains(a.id)) table[static_cast<size_t>(a.id)][k] = 1;
    return table;
}

// generator sets at the length cutoffs max_len-2, max_len-1, max_len, from a
// single cycle enumeration; stability of the resulting monomial sets across
// the cutoffs is the saturation heuristic
std::array<std::vector<ExponentVector>, 3> corner_gens(const DimerQuiver& q,
                                                       const std::vector<ExponentVector>& table,
                                                       VertexId i, int degree_bound,
                                                       CycleBounds bounds) {
    size_t width = table.empty() ? 0 : table[0].size();
    std::array<std::vector<ExponentVector>, 3> out;
    for (const Path& c : enumerate_cycles(q, i, bounds)) {
        ExponentVector v(width, 0);
        for (ArrowId a : c.arrows)
            for (size_t k = 0; k < width; ++k) v[k] += table[static_cast<size_t>(a)][k];
        if (total_degree(v) == 0 || total_degree(v) > degree_bound) continue;
        int len = static_cast<int>(c.arrows.size());
        for (int cut = 0; cut < 3; ++cut)
            if (len <= bounds.max_len - (2 - cut)) out[static_cast<size_t>(cut)].push_back(v);
    }
    for (auto& gens : out) {
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    }
    return out;
}

MonoidDescription corner_from_table(const DimerQuiver& q,
                                    const std::vector<ExponentVector>& table, VertexId i,
                                    int degree_bound, CycleBounds bounds) {
    size_t width = table.empty() ? 0 : table[0].size();
    auto gens = corner_gens(q, table, i, degree_bound, bounds);
    MonoidDescription full = generate(gens[2], degree_bound, width);
    for (int cut = 0; cut < 2; ++cut) {
        MonoidDescription shrunk = generate(gens[static_cast<size_t>(cut)], degree_bound, width);
        if (shrunk.monomials != full.monomials) {
            full.saturated = false;
            break;
        }
    }
    return full;
}

}  // namespace

MonoidDescription corner_semigroup(const ContractionMap& m, VertexId i, int degree_bound,
                                   CycleBounds bounds) {
    MatchingFamily simple = simple_matchings(m.target);
    auto table = arrow_degree_table(m, simple);
    return corner_from_table(m.source, table, i, degree_bound, bounds);
}

MonoidDescription corner_semigroup(const DimerQuiver& q, VertexId i, int degree_bound,
                                   CycleBounds bounds) {
    MatchingFamily simple = simple_matchings(q);
    return corner_from_table(q, self_degree_table(q, simple), i, degree_bound, bounds);
}

MonoidDescription cycle_algebra(const ContractionMap& m, int degree_bound, CycleBounds bounds) {
    MatchingFamily simple = simple_matchings(m.target);
    auto table = arrow_degree_table(m, simple);
    size_t width = simple.size();
    std::array<std::vector<ExponentVector>, 3> joined;
    for (VertexId i = 0; i < m.source.vertex_count; ++i) {
        auto gens = corner_gens(m.source, table, i, degree_bound, bounds);
        for (int cut = 0; cut < 3; ++cut)
            joined[static_cast<size_t>(cut)].insert(joined[static_cast<size_t>(cut)].end(),
                                                    gens[static_cast<size_t>(cut)].begin(),
                                                    gens[static_cast<size_t>(cut)].end());
    }
    MonoidDescription s = generate(joined[2], degree_bound, width);
    for (int cut = 0; cut < 2; ++cut) {
        MonoidDescription shrunk =
            generate(joined[static_cast<size_t>(cut)], degree_bound, width);
        if (shrunk.monomials != s.monomials) {
            s.saturated = false;
            break;
        }
    }
    return s;
}

MonoidDescription center(const ContractionMap& m, int degree_bound, CycleBounds bounds) {
    MatchingFamily simple = simple_matchings(m.target);
    auto table = arrow_degree_table(m, simple);
    size_t width = simple.size();

    std::array<std::vector<ExponentVector>, 3> inter;
    bool first = true;
    for (VertexId i = 0; i < m.source.vertex_count; ++i) {
        auto gens = corner_gens(m.source, table, i, degree_bound, bounds);
        for (int cut = 0; cut < 3; ++cut) {
            MonoidDescription corner =
                generate(gens[static_cast<size_t>(cut)], degree_bound, width);
            auto& acc = inter[static_cast<size_t>(cut)];
            if (first) {
                acc = corner.monomials;
            } else {
                std::vector<ExponentVector> keep;
                std::set_intersection(acc.begin(), acc.end(), corner.monomials.begin(),
                                      corner.monomials.end(), std::back_inserter(keep));
                acc = std::move(keep);
            }
        }
        first = false;
    }
    MonoidDescription z;
    z.degree_bound = degree_bound;
    z.monomials = inter[2];
    z.saturated = inter[0] == inter[2] && inter[1] == inter[2];
    z.generators = minimal_generators(z);
    return z;
}

CyclicReport is_cyclic(const ContractionMap& m, int degree_bound, CycleBounds bounds) {
    CyclicReport rep;
    auto cres = is_cancellative(m.target);
    rep.target_cancellative = cres.cancellative;
    if (!rep.target_cancellative) {
        rep.cyclic = false;
        rep.summary = "target is not cancellative";
        return rep;
    }
    MonoidDescription src = cycle_algebra(m, degree_bound, bounds);
    MonoidDescription tgt = cycle_algebra(identity_contraction(m.target), degree_bound, bounds);
    rep.saturated = src.saturated && tgt.saturated;
    MonoidComparison cmp = equal_up_to_degree(src, tgt, degree_bound);
    rep.cyclic = cmp.equal;
    if (!cmp.equal) {
        rep.discrepancy = cmp.first_discrepancy;
        MatchingFamily simple = simple_matchings(m.target);
        rep.summary = "cycle algebras differ at " +
                      monomial_to_string(*cmp.first_discrepancy, simple.variable_names);
    } else {
        rep.summary = "cycle algebras agree up to degree " + std::to_string(degree_bound);
    }
    return rep;
}

}  // namespace dimerlab
