#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "configspace/homology.hpp"
#include "configspace/ordered_complex.hpp"
#include "configspace/zigzag.hpp"

using namespace configspace;

namespace {

ChainMap inclusionFromVertexMap(const OrderedComplex& sub, const OrderedComplex& super,
                                const std::vector<int>& vertexMap) {
    SimplicialMap f;
    f.source = &sub;
    f.target = &super;
    f.vertexAssignment = vertexMap;
    return inducedMap(f);
}

ZigzagDiagram suspensionDiagram(const OrderedComplex& x) {
    // pt <- X -> pt
    ZigzagDiagram z;
    z.oddNodes = {chains(pointComplex()), chains(pointComplex())};
    z.evenNodes = {chains(x)};
    ChainMap collapse = augmentationMap(chains(x));
    z.leftMaps = {collapse};
    z.rightMaps = {collapse};
    return z;
}

// Deterministic random zigzags of graph complexes on a shared vertex pool:
// odd nodes are graphs, even nodes common subgraphs with their inclusions.
struct RandomZigzag {
    std::vector<OrderedComplex> odd;
    std::vector<OrderedComplex> even;
    ZigzagDiagram diagram;
};

RandomZigzag randomZigzag(std::mt19937& rng) {
    int pool = 3 + static_cast<int>(rng() % 3);  // 3..5 vertices
    std::vector<std::pair<int, int>> allEdges;
    for (int a = 0; a < pool; ++a)
        for (int b = a + 1; b < pool; ++b) allEdges.emplace_back(a, b);
    std::vector<std::string> names;
    for (int v = 0; v < pool; ++v) names.push_back("v" + std::to_string(v));

    auto randomGraph = [&](unsigned keepMask) {
        std::vector<std::vector<int>> simplices;
        for (int v = 0; v < pool; ++v) simplices.push_back({v});
        for (size_t e = 0; e < allEdges.size(); ++e)
            if (keepMask & (1u << e)) simplices.push_back({allEdges[e].first, allEdges[e].second});
        return OrderedComplex(names, simplices);
    };

    int m = 1 + static_cast<int>(rng() % 3);  // 1..3 even nodes
    RandomZigzag out;
    std::vector<unsigned> oddMasks;
    for (int p = 0; p <= m; ++p) {
        unsigned mask = static_cast<unsigned>(rng() % (1u << allEdges.size()));
        oddMasks.push_back(mask);
        out.odd.push_back(randomGraph(mask));
    }
    std::vector<unsigned> evenMasks;
    for (int q = 0; q < m; ++q) {
        unsigned common = oddMasks[q] & oddMasks[q + 1];
        unsigned mask = common & static_cast<unsigned>(rng());
        evenMasks.push_back(mask);
        out.even.push_back(randomGraph(mask));
    }
    std::vector<int> identity(pool);
    for (int v = 0; v < pool; ++v) identity[v] = v;
    ZigzagDiagram z;
    for (const auto& node : out.odd) z.oddNodes.push_back(chains(node));
    for (int q = 0; q < m; ++q) {
        z.evenNodes.push_back(chains(out.even[q]));
        z.leftMaps.push_back(inclusionFromVertexMap(out.even[q], out.odd[q], identity));
        z.rightMaps.push_back(inclusionFromVertexMap(out.even[q], out.odd[q + 1], identity));
    }
    out.diagram = std::move(z);
    return out;
}

}  // namespace

TEST_CASE("suspension of two points is a circle") {
    auto hocolim = hocolimZigzag(suspensionDiagram(twoPointComplex()));
    hocolim.total.validate();
    CHECK(homology(hocolim.total, CoefficientMode::Rational).betti ==
          std::vector<long long>{1, 1});
}

TEST_CASE("suspension of a circle is a two-sphere") {
    auto hocolim = hocolimZigzag(suspensionDiagram(cycleGraph(6)));
    hocolim.total.validate();
    CHECK(homology(hocolim.total, CoefficientMode::Rational).betti ==
          std::vector<long long>{1, 0, 1});
}

TEST_CASE("identity zigzag returns the homology of the node") {
    auto x = chains(cycleGraph(5));
    ZigzagDiagram z;
    z.oddNodes = {x, x};
    z.evenNodes = {x};
    z.leftMaps = {identityChainMap(x)};
    z.rightMaps = {identityChainMap(x)};
    z.validate();
    auto hocolim = hocolimZigzag(z);
    hocolim.total.validate();
    CHECK(homology(hocolim.total, CoefficientMode::Rational).betti ==
          std::vector<long long>{1, 1});
}

TEST_CASE("one-node diagram is returned unchanged") {
    ZigzagDiagram z;
    z.oddNodes = {chains(cycleGraph(4))};
    auto hocolim = hocolimZigzag(z);
    CHECK(hocolim.total.dims == z.oddNodes[0].dims);
    for (int d = 1; d <= hocolim.total.topDegree(); ++d)
        CHECK(equalMats(hocolim.total.boundary[d], z.oddNodes[0].boundary[d]));
}

TEST_CASE("contractible square pieces glued along two points give a circle") {
    // both outer nodes contractible, middle node two points
    auto square = chains(fullSimplex(1));
    ZigzagDiagram z;
    z.oddNodes = {square, square};
    auto pts = chains(twoPointComplex());
    z.evenNodes = {pts};
    std::vector<int> identity{0, 1};
    auto edge = fullSimplex(1);
    auto two = twoPointComplex();
    z.leftMaps = {inclusionFromVertexMap(two, edge, identity)};
    z.rightMaps = {inclusionFromVertexMap(two, edge, identity)};
    auto hocolim = hocolimZigzag(z);
    CHECK(homology(hocolim.total, CoefficientMode::Rational).betti ==
          std::vector<long long>{1, 1});
}

TEST_CASE("node inclusions are chain maps") {
    auto z = suspensionDiagram(cycleGraph(3));
    auto hocolim = hocolimZigzag(z);
    for (const auto& incl : hocolim.oddInclusions) incl.validate();
    for (const auto& incl : hocolim.evenInclusions) incl.validate();
}

TEST_CASE("Euler characteristic bookkeeping on randomized zigzags") {
    std::mt19937 rng(20250810);
    for (int trial = 0; trial < 20; ++trial) {
        auto rz = randomZigzag(rng);
        auto hocolim = hocolimZigzag(rz.diagram);
        hocolim.total.validate();
        long long expected = 0;
        for (const auto& node : rz.diagram.oddNodes) expected += node.euler();
        for (const auto& node : rz.diagram.evenNodes) expected -= node.euler();
        CHECK(hocolim.total.euler() == expected);
    }
}

TEST_CASE("tensoring a zigzag with a fixed complex convolves the Betti numbers") {
    std::mt19937 rng(777);
    auto fixedFactor = chains(cycleGraph(3));
    auto identityOnFactor = identityChainMap(fixedFactor);
    for (int trial = 0; trial < 10; ++trial) {
        auto rz = randomZigzag(rng);
        auto plain = hocolimZigzag(rz.diagram);
        ZigzagDiagram tensored;
        for (const auto& node : rz.diagram.oddNodes)
            tensored.oddNodes.push_back(tensor(node, fixedFactor));
        for (size_t q = 0; q < rz.diagram.evenNodes.size(); ++q) {
            tensored.evenNodes.push_back(tensor(rz.diagram.evenNodes[q], fixedFactor));
            ChainMap srcMap = rz.diagram.leftMaps[q];
            tensored.leftMaps.push_back(tensorMaps(srcMap, identityOnFactor));
            tensored.rightMaps.push_back(tensorMaps(rz.diagram.rightMaps[q], identityOnFactor));
        }
        auto big = hocolimZigzag(tensored);
        big.total.validate();
        auto plainBetti = homology(plain.total, CoefficientMode::Rational).betti;
        auto factorBetti = homology(fixedFactor, CoefficientMode::Rational).betti;
        auto bigBetti = homology(big.total, CoefficientMode::Rational).betti;
        CHECK(bigBetti == convolveBetti(plainBetti, factorBetti));
    }
}

TEST_CASE("fiberwise product diagrams keep the fiber Betti factor") {
    // diagram of the form (B_i x F) with maps (f_i x id): the hocolim has the
    // Betti numbers of hocolim(B_i) tensored with F
    auto fiber = chains(twoPointComplex());
    auto base = suspensionDiagram(twoPointComplex());
    ZigzagDiagram fibered;
    for (const auto& node : base.oddNodes) fibered.oddNodes.push_back(tensor(node, fiber));
    auto idFiber = identityChainMap(fiber);
    for (size_t q = 0; q < base.evenNodes.size(); ++q) {
        fibered.evenNodes.push_back(tensor(base.evenNodes[q], fiber));
        fibered.leftMaps.push_back(tensorMaps(base.leftMaps[q], idFiber));
        fibered.rightMaps.push_back(tensorMaps(base.rightMaps[q], idFiber));
    }
    auto baseBetti = homology(hocolimZigzag(base).total, CoefficientMode::Rational).betti;
    auto fiberBetti = homology(fiber, CoefficientMode::Rational).betti;
    auto totalBetti =
        homology(hocolimZigzag(fibered).total, CoefficientMode::Rational).betti;
    CHECK(totalBetti == convolveBetti(baseBetti, fiberBetti));
}

TEST_CASE("induced map of a zigzag morphism is a chain map") {
    // fold the suspension of two points onto itself by swapping the ends
    auto z = suspensionDiagram(twoPointComplex());
    auto hocolim = hocolimZigzag(z);
    ZigzagMorphism swap;
    swap.oddAssignment = {1, 0};
    swap.evenAssignment = {0};
    swap.oddMaps = {identityChainMap(chains(pointComplex())),
                    identityChainMap(chains(pointComplex()))};
    swap.evenMaps = {identityChainMap(chains(twoPointComplex()))};
    auto induced = inducedHocolimMap(z, z, swap, hocolim, hocolim);
    induced.validate();
}
