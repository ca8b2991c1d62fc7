#pragma once

#include <optional>
#include <string>
#include <vector>

namespace configspace {

/// A finite abstract simplicial complex with a total order on its vertices.
///
/// The vertex order is the declaration order and is fixed for the lifetime of
/// the complex.  Simplices are stored as sorted vertex-id vectors, grouped by
/// dimension and sorted lexicographically within each dimension, so every
/// traversal of the complex is deterministic.  The set of simplices is closed
/// under taking nonempty faces.
class OrderedComplex {
public:
    OrderedComplex() = default;

    /// Builds a complex from vertex names and a list of simplices (faces are
    /// added automatically).  Throws std::invalid_argument on malformed input
    /// (duplicate vertex names, out-of-range or repeated vertex ids).
    OrderedComplex(std::vector<std::string> vertexNames,
                   const std::vector<std::vector<int>>& simplices);

    /// Builds a complex from pre-validated data without closing faces.
    /// Used by bulk constructions that enumerate full face sets themselves,
    /// and by tests that need deliberately broken complexes.
    static OrderedComplex fromCellsUnchecked(std::vector<std::string> vertexNames,
                                             std::vector<std::vector<std::vector<int>>> cellsByDim);

    int vertexCount() const { return static_cast<int>(vertexNames_.size()); }
    const std::vector<std::string>& vertexNames() const { return vertexNames_; }
    const std::string& vertexName(int v) const { return vertexNames_[v]; }

    /// Dimension of the complex; -1 when there are no simplices.
    int dimension() const { return static_cast<int>(cells_.size()) - 1; }

    /// Simplices of dimension d, each a sorted vertex-id vector in
    /// lexicographic order.
    const std::vector<std::vector<int>>& cells(int dim) const;
    long long cellCount(int dim) const;
    long long totalCells() const;

    bool hasCell(const std::vector<int>& sortedVertices) const;
    /// Index of a simplex within its dimension slice, or -1.
    int cellIndex(const std::vector<int>& sortedVertices) const;

    std::vector<long long> fVector() const;
    long long eulerCharacteristic() const;

    /// True when every simplex has dimension <= 1.
    bool isGraph() const;

    /// Degree of a vertex in a 1-dimensional complex.
    int vertexDegree(int v) const;

    struct ValidationReport {
        bool ok = true;
        std::string error;                   // empty when ok
        std::vector<int> offendingSimplex;   // first simplex violating an invariant
        std::vector<long long> fVector;
        long long euler = 0;
    };

    /// Checks face-closure and vertex declaration, reporting the f-vector and
    /// Euler characteristic on success and the first offending simplex on
    /// failure.
    ValidationReport validate() const;

private:
    std::vector<std::string> vertexNames_;
    // cells_[d] = sorted list of dimension-d simplices.
    std::vector<std::vector<std::vector<int>>> cells_;
};

/// Maps vertices of one complex to vertices of another such that the image of
/// every simplex spans a simplex of the target.
struct SimplicialMap {
    const OrderedComplex* source = nullptr;
    const OrderedComplex* target = nullptr;
    std::vector<int> vertexAssignment;  // indexed by source vertex id

    /// Throws std::invalid_argument when some simplex image fails to span a
    /// target simplex.
    void validate() const;

    /// Image of a sorted simplex: the sorted set of assigned vertices.
    std::vector<int> imageSimplex(const std::vector<int>& simplex) const;

    bool operator==(const SimplicialMap& other) const;
};

SimplicialMap composeMaps(const SimplicialMap& first, const SimplicialMap& second);
SimplicialMap identityMap(const OrderedComplex& k);

/// A set of coordinate pairs (u, v), 1 <= v < u <= arity, recording which
/// coordinates of a product must have disjoint carriers.
class ConstraintSet {
public:
    ConstraintSet() = default;
    ConstraintSet(int arity, std::vector<std::pair<int, int>> pairs);

    static ConstraintSet allPairs(int arity);

    int arity() const { return arity_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    bool contains(int u, int v) const;
    bool containsAll(const ConstraintSet& other) const;

    /// Bit i set iff the i-th coordinate pair is constrained; pairs are
    /// indexed by pairBit below.
    uint32_t mask() const { return mask_; }

    ConstraintSet withPair(int u, int v) const;

    std::string describe() const;

    bool operator==(const ConstraintSet& other) const = default;

private:
    int arity_ = 0;
    std::vector<std::pair<int, int>> pairs_;  // sorted, (u, v) with u > v
    uint32_t mask_ = 0;
};

/// Index of the pair (u, v), u > v, in the fixed enumeration of coordinate
/// pairs; valid for arity <= 8.
int pairBit(int u, int v);

/// Barycentric subdivision iterated `rounds` times.  Vertices of the
/// subdivision are the simplices of the input ordered lexicographically.
OrderedComplex barycentricSubdivide(const OrderedComplex& k, int rounds);

/// Replaces every edge of a 1-dimensional complex by a path of `factor`
/// edges.  Throws std::invalid_argument when the input is not a graph.
OrderedComplex subdivideEdges(const OrderedComplex& k, int factor);

// Small builders used by tests, the CLI and the acceptance suite.
OrderedComplex pointComplex();
OrderedComplex twoPointComplex();
OrderedComplex pathGraph(int edges);
OrderedComplex cycleGraph(int edges);
OrderedComplex fullSimplex(int dimension);

/// Plain-text complex format: `# comment`, `vertex <token>`,
/// `simplex <token> <token> ...`; faces are closed on load.  Parse failures
/// throw ComplexParseError with the offending line number.
struct ComplexParseError {
    int line;
    std::string message;
};
OrderedComplex loadComplex(const std::string& path);
OrderedComplex parseComplex(const std::string& text);
std::string formatComplex(const OrderedComplex& k);

}  // namespace configspace
