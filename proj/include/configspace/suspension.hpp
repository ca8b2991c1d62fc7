#pragma once

#include <optional>
#include <string>

#include "configspace/tower.hpp"

namespace configspace {

/// Homology bookkeeping of the three-particle suspension models: the glued
/// boundary model, the restricted tower slice, the cofiber, and the direct
/// three-particle configuration model it must reproduce with a degree shift.
struct SuspensionReport {
    HomologySummary glued;        // three-node zigzag model
    HomologySummary slice;        // restricted five-node tower slice
    HomologySummary cofiber;      // cone of the doubled-end piece
    HomologySummary threeModel;   // direct three-particle model
    bool factorizationChecked = false;  // simplicial-level projection identity
};

/// The homotopy colimit of  F3 <- F3 x two-points -> (pair-constrained cube) x
/// two-points,  together with the inclusion of the right-hand node (the
/// doubled-end piece) used to form the suspension cofiber.
struct GluedBoundaryModel {
    ChainComplex total;
    ChainMap endInclusion;  // doubled-end node -> total
};

/// Requires a graph satisfying the subdivision condition for three
/// particles; throws std::invalid_argument otherwise.
GluedBoundaryModel suspensionGluedModel(const OrderedComplex& base);

/// The restricted five-node tower slice at three particles (every node
/// carries the pair constraint), as a chain complex.
ChainComplex suspensionSliceComplex(const OrderedComplex& base);

/// Homology of the cofiber of the doubled-end piece inside the glued model;
/// in degree n it matches the degree n-1 homology of the three-particle
/// model, with degree-1 rank the model's component count.
HomologySummary suspensionCofiberSummary(const OrderedComplex& base);

/// Full report: glued vs slice homology, the cofiber, and the direct
/// three-particle model, with the simplicial projection identity checked.
SuspensionReport suspensionReport(const OrderedComplex& base);

/// Verdict of the invariance comparison between two complexes that must be
/// subdivisions of a common graph.
struct InvarianceVerdict {
    bool pass = false;
    HomologySummary towerA, towerB;
    std::optional<HomologySummary> cofiberA, cofiberB;
    std::string message;
};

/// Compares tower homology (and at k = 3 the suspension cofibers) of two
/// subdivisions of a common graph.  Throws std::invalid_argument when the
/// inputs are not subdivisions of a common graph.
InvarianceVerdict invarianceCheck(const OrderedComplex& a, const OrderedComplex& b, int k,
                                  const TowerOptions& options = {});

/// True when the two graphs are subdivisions of a common graph (their
/// reduced multigraphs are isomorphic).
bool commonSubdivisionBase(const OrderedComplex& a, const OrderedComplex& b);

}  // namespace configspace
