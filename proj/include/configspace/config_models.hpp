#pragma once

#include <string>
#include <vector>

#include "configspace/product.hpp"

namespace configspace {

/// Combinatorial model of the space of k labeled pairwise-distinct points of
/// a complex: the subcomplex of the k-fold staircase power whose cells have
/// pairwise disjoint coordinate carriers.
struct ConfigModel {
    OrderedComplex base;
    int k = 1;
    OrderedComplex complex;
    std::vector<int> vertexToAmbient;  // into the k-fold staircase power
    bool certified = false;            // exactness flag; heuristic otherwise
};

/// Verdict of the subdivision condition for discretized configuration spaces
/// of graphs: every embedded cycle has at least k+1 edges and every path
/// between distinct essential vertices (degree != 2) has at least k-1 edges.
struct AbramsVerdict {
    bool satisfied = false;
    std::string reason;        // on failure: which bound failed
    std::vector<int> witness;  // offending cycle or path (vertex ids)
};

/// Checks the subdivision condition; throws std::invalid_argument when the
/// input is not 1-dimensional.
AbramsVerdict abramsCondition(const OrderedComplex& graph, int k);

/// Minimal uniform edge subdivision of a graph satisfying the subdivision
/// condition at the given particle count.
OrderedComplex prepareGraph(const OrderedComplex& graph, int k);

/// Full-constraint subcomplex of the k-fold staircase power, with the
/// exactness flag set from the subdivision condition.  k = 1 returns the
/// complex itself.
ConfigModel deletedProductModel(const OrderedComplex& base, int k);

}  // namespace configspace
