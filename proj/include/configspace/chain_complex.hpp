#pragma once

#include <string>
#include <vector>

#include "configspace/ordered_complex.hpp"

namespace configspace {

/// Sparse integer matrix stored per column; rows are sorted within a column.
struct SparseMat {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, long long>>> col;

    SparseMat() = default;
    SparseMat(int r, int c) : rows(r), cols(c), col(c) {}

    void add(int r, int c, long long value);
    void normalize();  // sort columns, drop zeros
    bool isZero() const;
    long long entry(int r, int c) const;
    static SparseMat identity(int n);
};

SparseMat multiply(const SparseMat& a, const SparseMat& b);
SparseMat addMats(const SparseMat& a, const SparseMat& b, long long scaleB = 1);
bool equalMats(const SparseMat& a, const SparseMat& b);

/// A nonnegatively graded chain complex of free Z-modules with chosen bases.
///
/// boundary[d] maps degree d to degree d-1 (so boundary[0] is empty).  Basis
/// labels are optional per degree; unlabeled bases serialize with generated
/// names.
struct ChainComplex {
    std::vector<int> dims;                        // dims[d] = rank in degree d
    std::vector<std::vector<std::string>> labels; // may be empty per degree
    std::vector<SparseMat> boundary;              // boundary[d]: C_d -> C_{d-1}

    int topDegree() const { return static_cast<int>(dims.size()) - 1; }
    int dim(int d) const { return (d >= 0 && d <= topDegree()) ? dims[d] : 0; }
    long long totalDim() const;
    long long euler() const;
    std::string label(int degree, int index) const;

    /// Checks matrix shapes and that consecutive boundaries compose to zero.
    void validate() const;

    static ChainComplex zero();
};

/// A degree-preserving map of chain complexes commuting with boundaries.
struct ChainMap {
    ChainComplex source;  // shapes only participate in validation
    ChainComplex target;
    std::vector<SparseMat> mat;  // mat[d]: source degree d -> target degree d

    void validate() const;
    SparseMat matrixAt(int degree) const;
};

/// Simplicial chains with incidence signs from the vertex order.
ChainComplex chains(const OrderedComplex& k);

/// Chain map induced by a simplicial map: degenerate images vanish, others
/// carry the sign of the sorting permutation.
ChainMap inducedMap(const SimplicialMap& f);

/// Degree shift by n (possibly negative); throws when a nonzero degree would
/// become negative.
ChainComplex shift(const ChainComplex& c, int n);

ChainComplex directSum(const ChainComplex& a, const ChainComplex& b);

/// Tensor product over Z with the Koszul sign on boundaries.
ChainComplex tensor(const ChainComplex& a, const ChainComplex& b);

/// Tensor of chain maps (degree-0): (f (x) g)(a (x) b) = f(a) (x) g(b).
ChainMap tensorMaps(const ChainMap& f, const ChainMap& g);

/// Algebraic mapping cone of f: cone_n = source_{n-1} (+) target_n with
/// differential (c, x) -> (-dc, dx - f c).
ChainComplex mappingCone(const ChainMap& f);

ChainMap identityChainMap(const ChainComplex& c);

/// Map to the chains of a point sending every degree-0 generator to the
/// generator (augmentation); zero in higher degrees.
ChainMap augmentationMap(const ChainComplex& c);

/// Line-based text serialization (dims, labels, boundary triples).
std::string formatChainComplex(const ChainComplex& c);
ChainComplex parseChainComplex(const std::string& text);

}  // namespace configspace
