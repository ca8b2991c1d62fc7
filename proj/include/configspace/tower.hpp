#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "configspace/combinatorics.hpp"
#include "configspace/config_models.hpp"
#include "configspace/homology.hpp"
#include "configspace/product.hpp"
#include "configspace/zigzag.hpp"

namespace configspace {

struct ResourceCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One node of a level diagram: a subcomplex of the k-fold power cut out by
/// coordinate-disjointness constraints.
struct ConstraintNode {
    ConstraintSet constraints;
};

/// A zigzag of constraint nodes at one level of the tower: positions
/// 1..2m+1, odd positions carrying the weaker constraint sets.
struct LevelDiagram {
    int arity = 0;                      // the power the nodes live in
    std::vector<ConstraintNode> nodes;  // size 2m+1

    int evenCount() const { return static_cast<int>(nodes.size()) / 2; }
    const ConstraintSet& at(int position) const { return nodes[position - 1].constraints; }
};

/// The level diagram whose odd nodes are the full power and whose even node
/// at position 2p carries the single constraint (k, j_p), with j from the
/// rank permutation of the prefix.
LevelDiagram baseZigzag(const IndexTuple& prefix, int k);

/// Adds `extra` to every node of a level diagram.  The extra pair must not
/// mention the fibered (last) coordinate of the diagram's arity.
LevelDiagram restrictDiagram(const LevelDiagram& diagram, std::pair<int, int> extra);

/// Adds every pair of `extras` to every node; an empty set is the identity.
LevelDiagram restrictDiagram(const LevelDiagram& diagram, const ConstraintSet& extras);

/// Arrow data of a wall crossing: how the positions of the restricted
/// diagram at odd position 2p-1 map into the diagram at position 2p+1.  Even
/// indices translate by the rank transposition; odd positions take the
/// unique assignment compatible with mapping arrows to arrows.  Every
/// produced arrow must be a subcomplex inclusion (source constraints contain
/// target constraints); a failure aborts.
struct CrossWallData {
    std::vector<int> evenAssignment;  // 1-based even index -> even index
    std::vector<int> oddAssignment;   // 1-based odd index -> odd index
};

CrossWallData crossWall(const LevelDiagram& restrictedLeft, const LevelDiagram& rightSide,
                        int p);

/// The spec-level tower data: for every prefix of every level, the zigzag of
/// constraint nodes, with the wall-crossing arrow data between adjacent
/// positions.
struct TowerDiagram {
    int k = 0;
    // levels[a] = diagrams at level a+2 (prefixes of length a), indexed by
    // the lexicographic position of the prefix among enumerateIndexTuples.
    std::vector<std::vector<LevelDiagram>> levels;
};

TowerDiagram towerDiagram(int k);

/// An ordered partition of {1..k}: the clusters of particles sharing a
/// height, listed in increasing height order.
struct OrderedPartition {
    std::vector<std::vector<int>> clusters;  // each sorted; particles 1..k

    int particleCount() const;
    int clusterCount() const { return static_cast<int>(clusters.size()); }
    /// Pairs of particles sharing a cluster, as a constraint set.
    ConstraintSet mergedPairs(int arity) const;
    /// True when this partition refines `coarser`: every coarser cluster is
    /// a union of consecutive clusters of this partition.
    bool refines(const OrderedPartition& coarser) const;
    /// Deletes the last particle (empty clusters dropped).
    OrderedPartition dropParticle(int particle) const;
    std::string describe() const;

    bool operator==(const OrderedPartition& other) const = default;
};

/// All ordered partitions of {1..k}, in a fixed deterministic order.
std::vector<OrderedPartition> enumerateOrderedPartitions(int k);

struct TowerOptions {
    int maxK = 4;
    long long simplexBudget = 5'000'000;
    bool wantProjection = true;
};

/// The assembled tower: the chain complex modeling the configuration space
/// of k points of base x line, with the projection that forgets the last
/// particle.
struct TowerResult {
    int k = 1;
    ChainComplex complex;
    bool certified = false;
    long long ambientCells = 0;
    ChainMap projection;      // E^k -> E^{k-1}; absent for k = 1
    ChainComplex previous;    // the projection target (E^{k-1})
    bool hasProjection = false;
};

TowerResult assembleTower(const OrderedComplex& base, int k, const TowerOptions& options = {});

/// Tensor of the tower complex with the chains of base x two points; its
/// Betti numbers are the Kunneth convolution of the tower's with twice the
/// base's.
ChainComplex boundaryModel(const OrderedComplex& base, int k, const TowerOptions& options = {});

/// Cell-identity inclusion between two mask filters of the same masked
/// complex (maskSub must contain maskSuper).
ChainMap filterInclusionMap(const MaskedChainComplex& complex, uint32_t maskSub,
                            uint32_t maskSuper);

/// Assembles the tower for k <= 3 by the literal nested zigzag construction
/// (level diagrams connected by restriction inclusions and wall-crossing
/// translations).  Used to cross-check the partition assembly.
ChainComplex nestedTowerLowK(const OrderedComplex& base, int k);

}  // namespace configspace
