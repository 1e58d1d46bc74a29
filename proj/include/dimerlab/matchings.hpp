#pragma once

#include <string>
#include <vector>

#include "dimerlab/quiver.hpp"

namespace dimerlab {

// Arrow subset hitting every face exactly once; arrows kept sorted.
struct PerfectMatching {
    std::vector<ArrowId> arrows;

    bool contains(ArrowId a) const;
    friend bool operator==(const PerfectMatching& x, const PerfectMatching& y) {
        return x.arrows == y.arrows;
    }
    friend bool operator<(const PerfectMatching& x, const PerfectMatching& y) {
        return x.arrows < y.arrows;
    }
};

struct MatchingFamily {
    std::vector<PerfectMatching> matchings;
    std::vector<std::string> variable_names;

    size_t size() const { return matchings.size(); }
};

bool is_perfect_matching(const DimerQuiver& q, const PerfectMatching& d);

// Exact cover of the face set: every face gets exactly one matched arrow.
// Complete, duplicate-free, ordered lexicographically by sorted arrow ids.
// Names are p0..pk.
MatchingFamily enumerate_perfect_matchings(const DimerQuiver& q);

// True iff the subquiver on arrows outside d is strongly connected.
bool is_simple_matching(const DimerQuiver& q, const PerfectMatching& d);

// Subfamily of enumerate_perfect_matchings passing is_simple_matching,
// order preserved, renamed m0..mk.
MatchingFamily simple_matchings(const DimerQuiver& q);

std::vector<ArrowId> uncovered_arrows(const DimerQuiver& q, const MatchingFamily& fam);

bool is_nondegenerate(const DimerQuiver& q);

struct CancellativityResult {
    bool cancellative = false;
    std::vector<ArrowId> uncovered;  // evidence when false
};

// Decided via simple-matching coverage of the arrow set.
CancellativityResult is_cancellative(const DimerQuiver& q);

enum class TwoCycleKind { removable, permanent };

// Classification of every length-2 face: permanent iff the complementary
// face of one of its arrows contains the other arrow.
std::vector<std::pair<FaceId, TwoCycleKind>> classify_two_cycles(const DimerQuiver& q);

}  // namespace dimerlab
