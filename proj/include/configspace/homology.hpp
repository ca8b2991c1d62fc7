#pragma once

#include <optional>
#include <string>
#include <vector>

#include "configspace/chain_complex.hpp"

namespace configspace {

/// Betti numbers per degree (ranks over the rationals) with optional
/// invariant-factor lists per degree in integral mode.
struct HomologySummary {
    std::vector<long long> betti;
    std::optional<std::vector<std::vector<long long>>> torsion;

    bool sameBetti(const HomologySummary& other) const;
    std::string bettiString() const;
};

enum class CoefficientMode { Rational, Integral };

/// Exact rank of an integer matrix (rank over the rationals).
long long integerRank(const SparseMat& m);

/// Invariant factors (diagonal of the Smith normal form), in divisibility
/// order, including 1s; the count equals the rank.
std::vector<long long> smithInvariantFactors(const SparseMat& m);

/// Homology of a chain complex.  Rational mode reports Betti numbers only;
/// integral mode adds the torsion invariant factors (entries > 1) of each
/// degree.  Trailing zero degrees are trimmed so that degrees beyond the
/// dimension of the complex read as zero.
HomologySummary homology(const ChainComplex& c, CoefficientMode mode);

/// Betti-number convolution: the ranks of a tensor product by the Kunneth
/// rule over the rationals.
std::vector<long long> convolveBetti(const std::vector<long long>& a,
                                     const std::vector<long long>& b);

/// A chain complex whose cells carry constraint masks; entry (r, c) of a
/// boundary matrix may be nonzero only when mask(r) is a superset of
/// mask(c), so every mask filter cuts out a subcomplex.
struct MaskedChainComplex {
    std::vector<int> dims;
    std::vector<SparseMat> boundary;          // boundary[d]: C_d -> C_{d-1}
    std::vector<std::vector<uint32_t>> masks; // masks[d][i]
    std::vector<std::vector<std::string>> labels;

    int topDegree() const { return static_cast<int>(dims.size()) - 1; }
    int dim(int d) const { return (d >= 0 && d <= topDegree()) ? dims[d] : 0; }
    long long totalDim() const;
    void validate() const;  // shapes, d.d = 0, mask monotonicity

    /// Chain complex of the cells whose mask contains `required`.
    ChainComplex filter(uint32_t required) const;
    /// Indices (per degree) of the cells whose mask contains `required`.
    std::vector<std::vector<int>> filterIndices(uint32_t required) const;
};

/// Strong deformation retract data for a masked reduction: section S embeds
/// the reduced complex into the original one, projection P retracts onto it.
/// Both restrict to every mask filter.
struct MaskedReduction {
    MaskedChainComplex reduced;
    // sectionAt[d]: original_dim x reduced_dim; projectionAt[d]: reduced_dim x
    // original_dim.  Present only when requested.
    std::vector<SparseMat> section;
    std::vector<SparseMat> projection;
    bool tracked = false;
};

/// Eliminates unit boundary entries between equal-mask cells, preserving the
/// homology of every mask filter simultaneously.  With trackMaps the section
/// and projection of the deformation retract are recorded.
MaskedReduction reduceMasked(const MaskedChainComplex& complex, bool trackMaps);

/// Masked chain complex of a staircase product (cells, boundary, and
/// disjointness masks).
struct ProductComplex;
MaskedChainComplex maskedChains(const ProductComplex& product);

}  // namespace configspace
