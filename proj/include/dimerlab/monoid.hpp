#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dimerlab/contraction.hpp"

namespace dimerlab {

using ExponentVector = std::vector<int>;

int total_degree(const ExponentVector& v);
std::string monomial_to_string(const ExponentVector& v, const std::vector<std::string>& names);

// Finitely generated sub-semigroup of N^k with an explicit truncated
// monomial cache.
struct MonoidDescription {
    std::vector<ExponentVector> generators;  // nonzero, sorted, deduplicated
    int degree_bound = 0;
    std::vector<ExponentVector> monomials;   // all sums of total degree <= bound, plus zero
    bool saturated = true;

    bool contains_cached(const ExponentVector& v) const;
};

MonoidDescription generate(std::vector<ExponentVector> gens, int degree_bound,
                           size_t width = SIZE_MAX);

// Exact membership by memoized generator subtraction.
bool monoid_member(const std::vector<ExponentVector>& gens, const ExponentVector& v);

// Elements of the cached set not expressible as a sum of two nonzero
// cached elements.
std::vector<ExponentVector> minimal_generators(const MonoidDescription& m);

struct MonoidComparison {
    bool equal = true;
    std::optional<ExponentVector> first_discrepancy;
};

MonoidComparison equal_up_to_degree(const MonoidDescription& a, const MonoidDescription& b, int d);

// Some coordinate permutation making the truncated sets equal. perm[i] = j
// maps coordinate i of `a` to coordinate j of `b`.
std::optional<std::vector<int>> match_up_to_permutation(const MonoidDescription& a,
                                                        const MonoidDescription& b, int d);

// Monoid of transported cycle labels at source vertex i, generated from
// enumerated cycles; saturated when stable under shrinking the length bound.
MonoidDescription corner_semigroup(const ContractionMap& m, VertexId i, int degree_bound,
                                   CycleBounds bounds);
// Same for a plain quiver labeled over its own simple matchings.
MonoidDescription corner_semigroup(const DimerQuiver& q, VertexId i, int degree_bound,
                                   CycleBounds bounds);

// Monoid join of the corner semigroups over all source vertices.
MonoidDescription cycle_algebra(const ContractionMap& m, int degree_bound, CycleBounds bounds);

// Intersection of the corner monomial sets over all source vertices.
MonoidDescription center(const ContractionMap& m, int degree_bound, CycleBounds bounds);

}  // namespace dimerlab
