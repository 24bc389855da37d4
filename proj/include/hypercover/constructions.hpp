#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypercover/three_graph.hpp"

namespace hypercover {

// Parameterized generator for the extremal constructions g1..g9. Each build
// records its distinguished vertex (apex) or distinguished vertex set.
struct ConstructionSpec {
    int id = 0;          // 1..9
    int n = 0;           // vertex count where the construction is n-parameterized
    int k = 0;           // block parameter where required (g2, g8, g9)
};

struct Construction {
    ThreeGraph graph;
    std::optional<int> apex;        // g1,g2,g3,g5,g6,g7
    std::optional<VertexSet> side_a;  // g4,g8,g9: the distinguished set A
};

Construction build(const ConstructionSpec& spec);

struct ObservationCheck {
    std::string claim;
    std::string expected;  // empty for report-only (flagged) claims
    std::string computed;
    bool flagged = false;  // recorded, not asserted
    bool pass = false;
};

struct ObservationReport {
    std::string obs_id;
    ConstructionSpec spec;
    std::vector<ObservationCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.flagged && !c.pass) return false;
        return true;
    }
};

// obs_id one of: 2.1, 2.2, 2.4, 3.1, 3.2, 3.3, 3.6, 3.7, 3.9
ObservationReport verify_observation(const std::string& obs_id,
                                     const ConstructionSpec& params);

}  // namespace hypercover
