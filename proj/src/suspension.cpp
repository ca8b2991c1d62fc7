#include "configspace/suspension.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace configspace {

namespace {

void requireCertifiedForThree(const OrderedComplex& base) {
    if (!base.isGraph())
        throw std::invalid_argument("suspension models need a graph input");
    AbramsVerdict verdict = abramsCondition(base, 3);
    if (!verdict.satisfied)
        throw std::invalid_argument("input not certified for three particles: " +
                                    verdict.reason);
}

struct SuspensionPieces {
    MaskedReduction reduction;
    ChainComplex threeCore;   // all-pairs filter
    ChainComplex pairCore;    // (2,1) filter
    ChainComplex twoPoints;
    GluedBoundaryModel model;
};

// total f (x) two-point factor: block of (a, b) pairs, b in {0, 1}
int tensorWithPointsId(int a, int b) { return 2 * a + b; }

SuspensionPieces buildPieces(const OrderedComplex& base) {
    requireCertifiedForThree(base);
    SuspensionPieces pieces;
    ProductComplex power = staircasePower(base, 3);
    MaskedChainComplex masked = maskedChains(power);
    pieces.reduction = reduceMasked(masked, false);
    const MaskedChainComplex& M = pieces.reduction.reduced;

    uint32_t allMask = ConstraintSet::allPairs(3).mask();
    uint32_t pairMask = ConstraintSet(3, {{2, 1}}).mask();
    pieces.threeCore = M.filter(allMask);
    pieces.pairCore = M.filter(pairMask);
    pieces.twoPoints = chains(twoPointComplex());

    ChainComplex threeDoubled = tensor(pieces.threeCore, pieces.twoPoints);
    ChainComplex endNode = tensor(pieces.pairCore, pieces.twoPoints);

    // Left arrow: project the two-point factor away.
    ChainMap leftMap;
    leftMap.source = threeDoubled;
    leftMap.target = pieces.threeCore;
    leftMap.mat.resize(threeDoubled.topDegree() + 1);
    for (int n = 0; n <= threeDoubled.topDegree(); ++n) {
        SparseMat m(pieces.threeCore.dim(n), threeDoubled.dim(n));
        for (int a = 0; a < pieces.threeCore.dim(n); ++a)
            for (int b = 0; b < 2; ++b) m.add(a, tensorWithPointsId(a, b), 1);
        leftMap.mat[n] = std::move(m);
    }

    // Right arrow: the constraint-forgetting inclusion tensored with the
    // identity of the two-point factor.
    ChainMap inclusion = filterInclusionMap(M, allMask, pairMask);
    ChainMap rightMap = tensorMaps(inclusion, identityChainMap(pieces.twoPoints));

    ZigzagDiagram z;
    z.oddNodes = {pieces.threeCore, endNode};
    z.evenNodes = {threeDoubled};
    z.leftMaps = {leftMap};
    z.rightMaps = {rightMap};
    ZigzagHocolim hocolim = hocolimZigzag(z);
    pieces.model.total = hocolim.total;
    pieces.model.endInclusion = hocolim.oddInclusions[1];
    return pieces;
}

// Simplicial-level identity: including the three-particle model into the
// pair-constrained node and then projecting to a coordinate agrees with
// projecting directly.  Checked before any chains are taken.
bool checkProjectionFactorization(const OrderedComplex& base) {
    ProductComplex power = staircasePower(base, 3);
    ConstrainedSubcomplex three = constrainedSubcomplex(power, ConstraintSet::allPairs(3));
    ConstrainedSubcomplex pairNode =
        constrainedSubcomplex(power, ConstraintSet(3, {{2, 1}}));
    std::vector<int> ambientToPair(power.complex.vertexCount(), -1);
    for (size_t i = 0; i < pairNode.vertexToAmbient.size(); ++i)
        ambientToPair[pairNode.vertexToAmbient[i]] = static_cast<int>(i);

    SimplicialMap include;
    include.source = &three.complex;
    include.target = &pairNode.complex;
    for (int v = 0; v < three.complex.vertexCount(); ++v) {
        int pv = ambientToPair[three.vertexToAmbient[v]];
        if (pv < 0) return false;
        include.vertexAssignment.push_back(pv);
    }
    include.validate();

    for (int coord = 0; coord < 3; ++coord) {
        SimplicialMap direct;
        direct.source = &three.complex;
        direct.target = &base;
        for (int v = 0; v < three.complex.vertexCount(); ++v)
            direct.vertexAssignment.push_back(
                power.vertexTuple[three.vertexToAmbient[v]][coord]);

        SimplicialMap viaPair;
        viaPair.source = &pairNode.complex;
        viaPair.target = &base;
        for (int v = 0; v < pairNode.complex.vertexCount(); ++v)
            viaPair.vertexAssignment.push_back(
                power.vertexTuple[pairNode.vertexToAmbient[v]][coord]);

        SimplicialMap composite = composeMaps(include, viaPair);
        if (!(composite.vertexAssignment == direct.vertexAssignment)) return false;
    }
    return true;
}

}  // namespace

GluedBoundaryModel suspensionGluedModel(const OrderedComplex& base) {
    return buildPieces(base).model;
}

ChainComplex suspensionSliceComplex(const OrderedComplex& base) {
    requireCertifiedForThree(base);
    ProductComplex power = staircasePower(base, 3);
    MaskedChainComplex masked = maskedChains(power);
    MaskedReduction red = reduceMasked(masked, false);
    const MaskedChainComplex& M = red.reduced;

    LevelDiagram level = restrictDiagram(baseZigzag(IndexTuple{{1}}, 3), {2, 1});
    ZigzagDiagram z;
    int m = level.evenCount();
    for (int g = 1; g <= m + 1; ++g) z.oddNodes.push_back(M.filter(level.at(2 * g - 1).mask()));
    for (int q = 1; q <= m; ++q) {
        z.evenNodes.push_back(M.filter(level.at(2 * q).mask()));
        z.leftMaps.push_back(
            filterInclusionMap(M, level.at(2 * q).mask(), level.at(2 * q - 1).mask()));
        z.rightMaps.push_back(
            filterInclusionMap(M, level.at(2 * q).mask(), level.at(2 * q + 1).mask()));
    }
    return hocolimZigzag(z).total;
}

HomologySummary suspensionCofiberSummary(const OrderedComplex& base) {
    SuspensionPieces pieces = buildPieces(base);
    ChainComplex cone = mappingCone(pieces.model.endInclusion);
    return homology(cone, CoefficientMode::Rational);
}

SuspensionReport suspensionReport(const OrderedComplex& base) {
    SuspensionPieces pieces = buildPieces(base);
    SuspensionReport report;
    report.factorizationChecked = checkProjectionFactorization(base);
    if (!report.factorizationChecked)
        throw std::logic_error("projection factorization identity failed");
    report.glued = homology(pieces.model.total, CoefficientMode::Rational);
    report.slice = homology(suspensionSliceComplex(base), CoefficientMode::Rational);
    ChainComplex cone = mappingCone(pieces.model.endInclusion);
    report.cofiber = homology(cone, CoefficientMode::Rational);
    report.threeModel = homology(pieces.threeCore, CoefficientMode::Rational);
    return report;
}

namespace {

// Homeomorphism data of a graph: reduced multigraph on essential vertices
// plus the number of closed components without essential vertices.
struct ReducedGraph {
    std::vector<int> essentialDegrees;                 // sorted
    std::vector<std::vector<int>> edges;               // pairs of essential indices, sorted
    int isolatedCycles = 0;
    int essentialCount = 0;
    std::vector<std::multiset<std::pair<int, int>>> adjacency;  // per essential vertex
};

ReducedGraph reduceGraph(const OrderedComplex& g) {
    if (!g.isGraph()) throw std::invalid_argument("invariance check requires graphs");
    ReducedGraph out;
    std::vector<std::vector<int>> adj(g.vertexCount());
    for (const auto& e : g.cells(1)) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::vector<int> essentialId(g.vertexCount(), -1);
    for (int v = 0; v < g.vertexCount(); ++v) {
        if (static_cast<int>(adj[v].size()) != 2) {
            essentialId[v] = out.essentialCount++;
            out.essentialDegrees.push_back(static_cast<int>(adj[v].size()));
        }
    }
    // Chains from each essential vertex; each reduced edge found twice.
    std::set<std::vector<int>> seenWalks;
    std::vector<std::pair<std::pair<int, int>, int>> reducedEdges;  // ((a,b), length)
    for (int v = 0; v < g.vertexCount(); ++v) {
        if (essentialId[v] < 0) continue;
        for (int start : adj[v]) {
            std::vector<int> walk{v, start};
            int prev = v, cur = start;
            while (essentialId[cur] < 0) {
                int next = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = next;
                walk.push_back(cur);
            }
            std::vector<int> reversed(walk.rbegin(), walk.rend());
            std::vector<int> canonical = std::min(walk, reversed);
            if (!seenWalks.insert(canonical).second) continue;
            reducedEdges.push_back(
                {{std::min(essentialId[v], essentialId[cur]),
                  std::max(essentialId[v], essentialId[cur])},
                 static_cast<int>(walk.size()) - 1});
        }
    }
    // Components made only of degree-2 vertices are circles.
    std::vector<bool> visited(g.vertexCount(), false);
    for (int v = 0; v < g.vertexCount(); ++v) {
        if (visited[v]) continue;
        std::vector<int> stack{v};
        visited[v] = true;
        bool hasEssential = false;
        bool hasEdge = false;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (essentialId[x] >= 0) hasEssential = true;
            if (!adj[x].empty()) hasEdge = true;
            for (int y : adj[x]) {
                if (!visited[y]) {
                    visited[y] = true;
                    stack.push_back(y);
                }
            }
        }
        if (!hasEssential && hasEdge) ++out.isolatedCycles;
    }
    out.adjacency.resize(out.essentialCount);
    for (const auto& [pair, length] : reducedEdges) {
        (void)length;  // subdivision-invariant: length does not matter
        out.adjacency[pair.first].insert({pair.second, 0});
        if (pair.second != pair.first) out.adjacency[pair.second].insert({pair.first, 0});
        out.edges.push_back({pair.first, pair.second});
    }
    std::sort(out.edges.begin(), out.edges.end());
    std::sort(out.essentialDegrees.begin(), out.essentialDegrees.end());
    return out;
}

bool reducedIsomorphic(const ReducedGraph& a, const ReducedGraph& b) {
    if (a.essentialCount != b.essentialCount) return false;
    if (a.isolatedCycles != b.isolatedCycles) return false;
    if (a.essentialDegrees != b.essentialDegrees) return false;
    if (a.edges.size() != b.edges.size()) return false;
    std::vector<int> perm(a.essentialCount);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<std::vector<int>> mapped;
        mapped.reserve(a.edges.size());
        for (const auto& e : a.edges) {
            int x = perm[e[0]], y = perm[e[1]];
            mapped.push_back({std::min(x, y), std::max(x, y)});
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == b.edges) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return a.essentialCount == 0;  // no essential vertices: counts matched above
}

}  // namespace

bool commonSubdivisionBase(const OrderedComplex& a, const OrderedComplex& b) {
    return reducedIsomorphic(reduceGraph(a), reduceGraph(b));
}

InvarianceVerdict invarianceCheck(const OrderedComplex& a, const OrderedComplex& b, int k,
                                  const TowerOptions& options) {
    if (!commonSubdivisionBase(a, b))
        throw std::invalid_argument("inputs are not subdivisions of a common graph");
    TowerOptions opts = options;
    opts.wantProjection = false;
    InvarianceVerdict verdict;
    TowerResult towerA = assembleTower(a, k, opts);
    TowerResult towerB = assembleTower(b, k, opts);
    verdict.towerA = homology(towerA.complex, CoefficientMode::Rational);
    verdict.towerB = homology(towerB.complex, CoefficientMode::Rational);
    verdict.pass = verdict.towerA.sameBetti(verdict.towerB);
    if (k == 3) {
        verdict.cofiberA = suspensionCofiberSummary(a);
        verdict.cofiberB = suspensionCofiberSummary(b);
        verdict.pass = verdict.pass && verdict.cofiberA->sameBetti(*verdict.cofiberB);
    }
    verdict.message = verdict.pass ? "summaries agree" : "summaries differ";
    return verdict;
}

}  // namespace configspace
