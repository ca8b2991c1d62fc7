#pragma once

#include <cstdint>
#include <vector>

#include "configspace/ordered_complex.hpp"

namespace configspace {

/// Ordered (staircase) product of simplicial complexes.
///
/// Vertices are tuples of factor vertices, ordered lexicographically.
/// Simplices are the chains in the coordinatewise partial order whose
/// projection to each factor spans a simplex there, so the coordinate
/// projections are simplicial.  For every cell the carrier-disjointness of
/// each coordinate pair is precomputed as a bitmask (pairBit indexing), which
/// is what constrained subcomplexes filter on.
struct ProductComplex {
    OrderedComplex complex;
    int arity = 0;
    std::vector<OrderedComplex> factors;
    // vertexTuple[v][i] = factor-i vertex id of product vertex v.
    std::vector<std::vector<int>> vertexTuple;
    // masks[d][i]: bit pairBit(u,v) set iff the (u,v) carriers of cell i of
    // dimension d are disjoint.
    std::vector<std::vector<uint32_t>> masks;

    uint32_t cellMask(int dim, int index) const { return masks[dim][index]; }

    /// Projection onto factor `coord` (0-based) as a simplicial map.
    SimplicialMap projection(int coord) const;
};

/// Builds the staircase product of the given factors (at least one).
ProductComplex staircaseProduct(const std::vector<OrderedComplex>& factors);

/// k-fold staircase power of a complex.
ProductComplex staircasePower(const OrderedComplex& k, int power);

/// Result of cutting a product down to the cells whose constrained coordinate
/// pairs have disjoint carriers.  cellOrigin records, per dimension, the
/// ambient index of every kept cell; vertexToAmbient maps subcomplex vertices
/// to ambient product vertices.
struct ConstrainedSubcomplex {
    OrderedComplex complex;
    std::vector<int> vertexToAmbient;
    std::vector<std::vector<int>> cellOrigin;

    /// The subcomplex inclusion as a simplicial map into the ambient product.
    /// `ambient` must be the product the subcomplex was cut from.
    SimplicialMap inclusionInto(const ProductComplex& ambient) const;
};

/// Keeps exactly the cells of `product` whose (u,v)-carriers are disjoint for
/// every pair in `constraints`.  Throws std::invalid_argument on arity
/// mismatch.
ConstrainedSubcomplex constrainedSubcomplex(const ProductComplex& product,
                                            const ConstraintSet& constraints);

}  // namespace configspace
