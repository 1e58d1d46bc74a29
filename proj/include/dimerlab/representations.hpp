#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "dimerlab/contraction.hpp"

namespace dimerlab {

using Rational = boost::multiprecision::cpp_rational;

// Values for the target simple-matching variables, keyed by variable name.
struct PointAssignment {
    std::map<std::string, Rational> values;

    bool generic() const;  // every value nonzero
};

struct Representation {
    std::vector<Rational> arrow_values;  // indexed by source arrow id
};

// Each source arrow takes the product of the assigned values over its
// transported label; both sides of every source rewrite rule are checked to
// evaluate equally.
Representation build_representation(const ContractionMap& m, const PointAssignment& b);

// True iff the subquiver of arrows with nonzero value is strongly connected.
bool is_simple(const ContractionMap& m, const Representation& r);

// For generic points: equal evaluation of every enumerated cycle.
bool reps_equivalent(const ContractionMap& m, const PointAssignment& b1,
                     const PointAssignment& b2, CycleBounds bounds);

Rational evaluate_cycle(const ContractionMap& m, const Representation& r, const Path& cycle);

}  // namespace dimerlab
