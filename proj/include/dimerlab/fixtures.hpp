#pragma once

#include <string>
#include <vector>

#include "dimerlab/contraction.hpp"
#include "dimerlab/quiver.hpp"

namespace dimerlab {

struct FixtureMap {
    std::string name;          // e.g. "fig1iii"
    std::string source;        // fixture name of the source quiver
    std::vector<std::string> contracted_arrows;
};

std::vector<std::string> fixture_names();
DimerQuiver fixture(const std::string& name);

// The four shipped contraction maps, by figure row.
std::vector<FixtureMap> fixture_maps();
ContractionMap fixture_contraction(const std::string& map_name);

}  // namespace dimerlab
