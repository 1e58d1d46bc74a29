#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dimerlab/matchings.hpp"
#include "dimerlab/path_algebra.hpp"
#include "dimerlab/quiver.hpp"

namespace dimerlab {

enum class ContractErrorKind { contracts_cycle, unit_cycle_to_vertex, invalid_target };

class ContractError : public QuiverError {
  public:
    ContractError(ContractErrorKind kind, const std::string& what)
        : QuiverError(what), kind(kind) {}
    ContractErrorKind kind;
};

struct ContractionMap {
    DimerQuiver source;
    std::vector<ArrowId> contracted;  // sorted
    DimerQuiver target;
    std::vector<VertexId> vertex_map;                // source vertex -> target vertex
    std::vector<std::optional<ArrowId>> arrow_map;   // nullopt exactly on contracted

    bool is_contracted(ArrowId a) const;
};

// Collapse the given arrows; source offsets are re-gauged so every contracted
// arrow carries offset (0,0) before transport, which keeps homology classes
// of all paths intact. Errors: "unit cycle to vertex" when a whole face is
// contracted, "contracts a cycle" when the set has an undirected cycle,
// and a structured error when the target fails validation.
ContractionMap contract(const DimerQuiver& q, const std::vector<ArrowId>& arrows);

// Deletes both arrows of each removable 2-cycle, merging the two adjacent
// faces, until none remain. Permanent 2-cycles are left in place.
DimerQuiver reduce_removable_two_cycles(const DimerQuiver& q);

// Same reduction, also recording for every original arrow the path over the
// reduced arrow set it equals: a deleted 2-cycle arrow equals the
// complementary path of its partner's other face.
struct TwoCycleReduction {
    DimerQuiver reduced;
    std::vector<std::vector<ArrowId>> substitution;  // per original arrow
};
TwoCycleReduction reduce_removable_two_cycles_with_map(const DimerQuiver& q);

Path psi_path(const ContractionMap& m, const Path& p);

PerfectMatching pullback_matching(const ContractionMap& m, const PerfectMatching& target_d);
std::optional<PerfectMatching> push_matching(const ContractionMap& m, const PerfectMatching& d);

// Source matchings whose push is a simple matching of the target, named by
// the target simple-matching variable names.
MatchingFamily p_zero(const ContractionMap& m);

// Label of psi(p) in the target over the target's simple matchings.
PathLabel tau_psi_label(const ContractionMap& m, const Path& p);

struct CyclicReport {
    bool cyclic = false;
    bool target_cancellative = false;
    bool saturated = true;
    std::optional<std::vector<int>> discrepancy;  // first differing monomial
    std::string summary;
};

CyclicReport is_cyclic(const ContractionMap& m, int degree_bound, CycleBounds bounds);

ContractionMap identity_contraction(const DimerQuiver& q);

}  // namespace dimerlab
