#include "configspace/product.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace configspace {

namespace {

// Appends every chain from the minimum to the maximum corner of the cell
// product; coordinates advance by at most one per step so the projections
// cover every carrier vertex.
void enumerateChains(const std::vector<const std::vector<int>*>& carriers,
                     std::vector<int>& position, std::vector<int>& chainVertexIds,
                     const std::vector<long long>& radix,
                     std::vector<std::vector<int>>& out) {
    int arity = static_cast<int>(carriers.size());
    bool atTop = true;
    for (int i = 0; i < arity; ++i) {
        if (position[i] + 1 < static_cast<int>(carriers[i]->size())) {
            atTop = false;
            break;
        }
    }
    if (atTop) {
        out.push_back(chainVertexIds);
        return;
    }
    std::vector<int> movable;
    for (int i = 0; i < arity; ++i)
        if (position[i] + 1 < static_cast<int>(carriers[i]->size())) movable.push_back(i);
    int m = static_cast<int>(movable.size());
    for (unsigned sub = 1; sub < (1u << m); ++sub) {
        for (int j = 0; j < m; ++j)
            if (sub & (1u << j)) ++position[movable[j]];
        long long id = 0;
        for (int i = 0; i < arity; ++i) id = id * radix[i] + (*carriers[i])[position[i]];
        chainVertexIds.push_back(static_cast<int>(id));
        enumerateChains(carriers, position, chainVertexIds, radix, out);
        chainVertexIds.pop_back();
        for (int j = 0; j < m; ++j)
            if (sub & (1u << j)) --position[movable[j]];
    }
}

}  // namespace

SimplicialMap ProductComplex::projection(int coord) const {
    if (coord < 0 || coord >= arity) throw std::invalid_argument("bad coordinate");
    SimplicialMap map;
    map.source = &complex;
    map.target = &factors[coord];
    map.vertexAssignment.reserve(vertexTuple.size());
    for (const auto& tuple : vertexTuple) map.vertexAssignment.push_back(tuple[coord]);
    return map;
}

ProductComplex staircaseProduct(const std::vector<OrderedComplex>& factors) {
    if (factors.empty()) throw std::invalid_argument("staircaseProduct needs a factor");
    ProductComplex product;
    product.arity = static_cast<int>(factors.size());
    product.factors = factors;
    int arity = product.arity;

    std::vector<long long> radix(arity);
    long long vertexTotal = 1;
    for (int i = 0; i < arity; ++i) {
        radix[i] = factors[i].vertexCount();
        vertexTotal *= radix[i];
        if (vertexTotal > 50'000'000)
            throw std::invalid_argument("product vertex set too large");
    }

    // Vertex tuples in lexicographic order; the mixed-radix id realizes it.
    std::vector<std::string> names(vertexTotal);
    product.vertexTuple.assign(vertexTotal, std::vector<int>(arity));
    for (long long id = 0; id < vertexTotal; ++id) {
        long long rest = id;
        for (int i = arity - 1; i >= 0; --i) {
            product.vertexTuple[id][i] = static_cast<int>(rest % radix[i]);
            rest /= radix[i];
        }
        std::string name = "(";
        for (int i = 0; i < arity; ++i) {
            if (i) name += ",";
            name += factors[i].vertexName(product.vertexTuple[id][i]);
        }
        name += ")";
        names[id] = std::move(name);
    }

    // Enumerate cells per carrier tuple; each chain is recorded at the
    // carrier it covers, so no cell appears twice.
    std::vector<std::vector<std::vector<int>>> cellsByDim;
    std::vector<std::vector<uint32_t>> masksByDim;
    std::vector<int> carrierDim(arity, 0);
    std::vector<const std::vector<int>*> carriers(arity);

    std::vector<std::vector<int>> chains;
    std::function<void(int)> overCarriers = [&](int coord) {
        if (coord == arity) {
            uint32_t mask = 0;
            for (int u = 2; u <= arity; ++u) {
                for (int v = 1; v < u; ++v) {
                    const auto& cu = *carriers[u - 1];
                    const auto& cv = *carriers[v - 1];
                    bool disjoint = true;
                    for (int a : cu) {
                        if (std::binary_search(cv.begin(), cv.end(), a)) {
                            disjoint = false;
                            break;
                        }
                    }
                    if (disjoint) mask |= 1u << pairBit(u, v);
                }
            }
            chains.clear();
            std::vector<int> position(arity, 0);
            long long id = 0;
            for (int i = 0; i < arity; ++i) id = id * radix[i] + (*carriers[i])[0];
            std::vector<int> chainIds{static_cast<int>(id)};
            enumerateChains(carriers, position, chainIds, radix, chains);
            for (auto& cell : chains) {
                int d = static_cast<int>(cell.size()) - 1;
                if (d >= static_cast<int>(cellsByDim.size())) {
                    cellsByDim.resize(d + 1);
                    masksByDim.resize(d + 1);
                }
                cellsByDim[d].push_back(std::move(cell));
                masksByDim[d].push_back(mask);
            }
            return;
        }
        for (int d = 0; d <= factors[coord].dimension(); ++d) {
            for (const auto& s : factors[coord].cells(d)) {
                carriers[coord] = &s;
                overCarriers(coord + 1);
            }
        }
    };
    overCarriers(0);

    // Sort each dimension slice lexicographically, masks in lockstep.
    for (size_t d = 0; d < cellsByDim.size(); ++d) {
        std::vector<int> order(cellsByDim[d].size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return cellsByDim[d][a] < cellsByDim[d][b];
        });
        std::vector<std::vector<int>> sortedCells(order.size());
        std::vector<uint32_t> sortedMasks(order.size());
        for (size_t i = 0; i < order.size(); ++i) {
            sortedCells[i] = std::move(cellsByDim[d][order[i]]);
            sortedMasks[i] = masksByDim[d][order[i]];
        }
        cellsByDim[d] = std::move(sortedCells);
        masksByDim[d] = std::move(sortedMasks);
    }

    product.complex = OrderedComplex::fromCellsUnchecked(std::move(names), cellsByDim);
    product.masks = std::move(masksByDim);
    return product;
}

ProductComplex staircasePower(const OrderedComplex& k, int power) {
    if (power < 1) throw std::invalid_argument("power must be >= 1");
    return staircaseProduct(std::vector<OrderedComplex>(power, k));
}

SimplicialMap ConstrainedSubcomplex::inclusionInto(const ProductComplex& ambient) const {
    SimplicialMap map;
    map.source = &complex;
    map.target = &ambient.complex;
    map.vertexAssignment = vertexToAmbient;
    return map;
}

ConstrainedSubcomplex constrainedSubcomplex(const ProductComplex& product,
                                            const ConstraintSet& constraints) {
    if (constraints.arity() != product.arity)
        throw std::invalid_argument("constraint arity does not match product arity");
    uint32_t required = constraints.mask();

    ConstrainedSubcomplex result;
    int dim = product.complex.dimension();
    std::vector<std::vector<std::vector<int>>> keptCells(std::max(dim + 1, 0));
    result.cellOrigin.resize(std::max(dim + 1, 0));

    std::vector<int> vertexNewId(product.complex.vertexCount(), -1);
    // Vertices of the subcomplex are the ambient vertices of kept 0-cells.
    const auto& zeroCells = product.complex.cells(0);
    for (size_t i = 0; i < zeroCells.size(); ++i) {
        if ((product.masks[0][i] & required) == required) {
            int ambientVertex = zeroCells[i][0];
            vertexNewId[ambientVertex] = static_cast<int>(result.vertexToAmbient.size());
            result.vertexToAmbient.push_back(ambientVertex);
        }
    }
    std::vector<std::string> names;
    names.reserve(result.vertexToAmbient.size());
    for (int v : result.vertexToAmbient) names.push_back(product.complex.vertexName(v));

    for (int d = 0; d <= dim; ++d) {
        const auto& slice = product.complex.cells(d);
        for (size_t i = 0; i < slice.size(); ++i) {
            if ((product.masks[d][i] & required) != required) continue;
            std::vector<int> renamed;
            renamed.reserve(slice[i].size());
            for (int v : slice[i]) renamed.push_back(vertexNewId[v]);
            keptCells[d].push_back(std::move(renamed));
            result.cellOrigin[d].push_back(static_cast<int>(i));
        }
    }
    result.complex = OrderedComplex::fromCellsUnchecked(std::move(names), std::move(keptCells));
    return result;
}

}  // namespace configspace
