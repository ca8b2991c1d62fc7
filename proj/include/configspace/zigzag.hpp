#pragma once

#include <vector>

#include "configspace/chain_complex.hpp"

namespace configspace {

/// A diagram X_1 <- Y_1 -> X_2 <- Y_2 -> ... <- Y_m -> X_{m+1} of chain
/// complexes: oddNodes are the X's (m+1 of them), evenNodes the Y's, and
/// leftMaps[p]/rightMaps[p] map Y_p into X_p and X_{p+1}.
struct ZigzagDiagram {
    std::vector<ChainComplex> oddNodes;
    std::vector<ChainComplex> evenNodes;
    std::vector<ChainMap> leftMaps;
    std::vector<ChainMap> rightMaps;

    void validate() const;  // arity consistency and chain-map checks
};

/// Result of the chain-level homotopy colimit of a zigzag: the total complex
/// together with the inclusion of every node.
struct ZigzagHocolim {
    ChainComplex total;
    std::vector<ChainMap> oddInclusions;
    std::vector<ChainMap> evenInclusions;
};

/// Chain-level homotopy colimit: one copy of every node plus one
/// degree-shifted copy of each even node per incident arrow, with the
/// differential combining internal boundaries and (map - inclusion)
/// components.  For a one-node diagram the result equals that node.
ZigzagHocolim hocolimZigzag(const ZigzagDiagram& z);

/// A morphism of zigzag diagrams: positions map to positions (odd to odd,
/// even to even), every arrow of the source maps to an arrow of the target
/// (so each even assignment must be adjacent to its odd assignments), and the
/// per-node chain maps commute with the arrows.
struct ZigzagMorphism {
    std::vector<int> oddAssignment;   // source odd position -> target odd position
    std::vector<int> evenAssignment;  // source even position -> target even position
    std::vector<ChainMap> oddMaps;
    std::vector<ChainMap> evenMaps;
};

/// Validates the morphism against the two diagrams and returns the induced
/// chain map of homotopy-colimit totals.
ChainMap inducedHocolimMap(const ZigzagDiagram& source, const ZigzagDiagram& target,
                           const ZigzagMorphism& morphism, const ZigzagHocolim& sourceTotal,
                           const ZigzagHocolim& targetTotal);

}  // namespace configspace
