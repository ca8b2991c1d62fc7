#include "configspace/tower.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace configspace {

LevelDiagram baseZigzag(const IndexTuple& prefix, int k) {
    if (k < 2) throw std::invalid_argument("baseZigzag needs k >= 2");
    if (static_cast<int>(prefix.entries.size()) != k - 2)
        throw std::invalid_argument("prefix length must be k-2");
    prefix.validate();
    std::vector<int> j = ranks(prefix);  // permutation of {1..k-1}
    LevelDiagram diagram;
    diagram.arity = k;
    diagram.nodes.resize(2 * (k - 1) + 1);
    for (auto& node : diagram.nodes) node.constraints = ConstraintSet(k, {});
    for (int p = 1; p <= k - 1; ++p)
        diagram.nodes[2 * p - 1].constraints = ConstraintSet(k, {{k, j[p - 1]}});
    return diagram;
}

LevelDiagram restrictDiagram(const LevelDiagram& diagram, std::pair<int, int> extra) {
    int u = std::max(extra.first, extra.second);
    int v = std::min(extra.first, extra.second);
    if (u == diagram.arity)
        throw std::invalid_argument(
            "restriction constraint must not mention the fibered coordinate");
    LevelDiagram restricted = diagram;
    for (auto& node : restricted.nodes) node.constraints = node.constraints.withPair(u, v);
    return restricted;
}

LevelDiagram restrictDiagram(const LevelDiagram& diagram, const ConstraintSet& extras) {
    LevelDiagram restricted = diagram;
    for (const auto& pair : extras.pairs())
        restricted = restrictDiagram(restricted, pair);
    return restricted;
}

CrossWallData crossWall(const LevelDiagram& restrictedLeft, const LevelDiagram& rightSide,
                        int p) {
    if (restrictedLeft.nodes.size() != rightSide.nodes.size())
        throw std::invalid_argument("crossWall: diagrams must have the same shape");
    int m = restrictedLeft.evenCount();
    CrossWallData data;
    if (m == 0) {
        data.oddAssignment = {1};
        return data;
    }
    if (p < 1 || p > m + 1) throw std::invalid_argument("crossWall: p out of range");
    // Even indices translate by the rank transposition (p, p+1); indices
    // beyond the deeper even count stay fixed.
    std::vector<int> relabel = wallRelabel(std::min(p, m), m);
    data.evenAssignment.resize(m);
    for (int q = 1; q <= m; ++q)
        data.evenAssignment[q - 1] = (relabel[q - 1] <= m) ? relabel[q - 1] : q;
    // Odd positions take the unique assignment adjacent to every incident
    // even image; an empty intersection means no inclusion-valid arrow
    // exists, which is an internal inconsistency.
    data.oddAssignment.resize(m + 1);
    for (int g = 1; g <= m + 1; ++g) {
        int lo = 1, hi = m + 1;
        if (g - 1 >= 1) {
            int w = data.evenAssignment[g - 2];
            lo = std::max(lo, w);
            hi = std::min(hi, w + 1);
        }
        if (g <= m) {
            int w = data.evenAssignment[g - 1];
            lo = std::max(lo, w);
            hi = std::min(hi, w + 1);
        }
        if (lo > hi)
            throw std::logic_error(
                "crossWall: no odd assignment maps arrows to arrows; relabeled arrow fails "
                "the inclusion check");
        // Prefer the reversal-side choice so the two-even case reproduces the
        // full flip.
        int reversed = m + 2 - g;
        data.oddAssignment[g - 1] = std::clamp(reversed, lo, hi);
    }
    // Inclusion check: source constraints must contain target constraints.
    for (int g = 1; g <= m + 1; ++g) {
        const ConstraintSet& src = restrictedLeft.at(2 * g - 1);
        const ConstraintSet& tgt = rightSide.at(2 * data.oddAssignment[g - 1] - 1);
        if (!src.containsAll(tgt))
            throw std::logic_error("crossWall: odd node " + std::to_string(g) +
                                   " fails the inclusion check");
    }
    for (int q = 1; q <= m; ++q) {
        const ConstraintSet& src = restrictedLeft.at(2 * q);
        const ConstraintSet& tgt = rightSide.at(2 * data.evenAssignment[q - 1]);
        if (!src.containsAll(tgt))
            throw std::logic_error("crossWall: even node " + std::to_string(q) +
                                   " fails the inclusion check");
    }
    return data;
}

TowerDiagram towerDiagram(int k) {
    if (k < 2) throw std::invalid_argument("towerDiagram needs k >= 2");
    TowerDiagram tower;
    tower.k = k;
    tower.levels.resize(k - 1);
    for (int level = 2; level <= k; ++level) {
        for (const auto& prefix : enumerateIndexTuples(level - 1)) {
            tower.levels[level - 2].push_back(baseZigzag(prefix, level));
        }
    }
    return tower;
}

int OrderedPartition::particleCount() const {
    int n = 0;
    for (const auto& c : clusters) n += static_cast<int>(c.size());
    return n;
}

ConstraintSet OrderedPartition::mergedPairs(int arity) const {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& c : clusters)
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = i + 1; j < c.size(); ++j) pairs.emplace_back(c[j], c[i]);
    return ConstraintSet(arity, std::move(pairs));
}

bool OrderedPartition::refines(const OrderedPartition& coarser) const {
    size_t pos = 0;
    for (const auto& big : coarser.clusters) {
        std::vector<int> acc;
        while (pos < clusters.size() && acc.size() < big.size()) {
            acc.insert(acc.end(), clusters[pos].begin(), clusters[pos].end());
            ++pos;
        }
        std::sort(acc.begin(), acc.end());
        if (acc != big) return false;
    }
    return pos == clusters.size();
}

OrderedPartition OrderedPartition::dropParticle(int particle) const {
    OrderedPartition out;
    for (const auto& c : clusters) {
        std::vector<int> kept;
        for (int x : c)
            if (x != particle) kept.push_back(x);
        if (!kept.empty()) out.clusters.push_back(std::move(kept));
    }
    return out;
}

std::string OrderedPartition::describe() const {
    std::ostringstream out;
    out << "{";
    for (size_t i = 0; i < clusters.size(); ++i) {
        if (i) out << "|";
        for (size_t j = 0; j < clusters[i].size(); ++j) {
            if (j) out << ",";
            out << clusters[i][j];
        }
    }
    out << "}";
    return out.str();
}

std::vector<OrderedPartition> enumerateOrderedPartitions(int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    std::vector<OrderedPartition> parts{OrderedPartition{{{1}}}};
    for (int particle = 2; particle <= k; ++particle) {
        std::vector<OrderedPartition> extended;
        for (const auto& t : parts) {
            int m = t.clusterCount();
            for (int position = 0; position <= 2 * m; ++position) {
                OrderedPartition bigger = t;
                if (position % 2 == 0) {
                    // gap position/2: new singleton cluster
                    bigger.clusters.insert(bigger.clusters.begin() + position / 2,
                                           {particle});
                } else {
                    auto& cluster = bigger.clusters[position / 2];
                    cluster.push_back(particle);
                    std::sort(cluster.begin(), cluster.end());
                }
                extended.push_back(std::move(bigger));
            }
        }
        parts = std::move(extended);
    }
    return parts;
}

namespace {

// The assembled diagram over the refinement order of ordered partitions:
// strictly ascending chains with coefficients in the coarsest node.
struct PartitionNerve {
    std::vector<OrderedPartition> parts;
    std::vector<uint32_t> partMask;
    // kept[part][deg]: cell ids of the masked complex, ascending
    std::vector<std::vector<std::vector<int>>> kept;
    std::vector<std::vector<int>> chains;  // ascending part-id sequences
    std::map<std::vector<int>, int> chainId;
    int cellTop = -1;
    ChainComplex complex;
    // offsets[n][chain]: start of the (chain, dim n - len) block, or -1
    std::vector<std::vector<int>> offsets;

    int positionInKept(int part, int deg, int cell) const {
        const auto& list = kept[part][deg];
        auto it = std::lower_bound(list.begin(), list.end(), cell);
        if (it == list.end() || *it != cell) return -1;
        return static_cast<int>(it - list.begin());
    }
};

PartitionNerve buildPartitionNerve(const MaskedChainComplex& M, int k) {
    PartitionNerve nerve;
    nerve.parts = enumerateOrderedPartitions(k);
    int np = static_cast<int>(nerve.parts.size());
    nerve.partMask.resize(np);
    nerve.kept.resize(np);
    nerve.cellTop = M.topDegree();
    for (int a = 0; a < np; ++a) {
        nerve.partMask[a] = nerve.parts[a].mergedPairs(k).mask();
        nerve.kept[a] = M.filterIndices(nerve.partMask[a]);
        nerve.kept[a].resize(std::max(nerve.cellTop + 1, 0));
    }
    // Strict refinement relation; chains by depth-first extension.
    std::vector<std::vector<int>> finer(np);
    for (int a = 0; a < np; ++a)
        for (int b = 0; b < np; ++b)
            if (a != b && nerve.parts[b].refines(nerve.parts[a])) finer[a].push_back(b);
    std::vector<int> path;
    std::function<void(int)> extend = [&](int last) {
        nerve.chainId[path] = static_cast<int>(nerve.chains.size());
        nerve.chains.push_back(path);
        for (int next : finer[last]) {
            path.push_back(next);
            extend(next);
            path.pop_back();
        }
    };
    for (int a = 0; a < np; ++a) {
        path.assign(1, a);
        extend(a);
    }

    int nerveTop = 0;
    for (const auto& c : nerve.chains)
        nerveTop = std::max(nerveTop, static_cast<int>(c.size()) - 1);
    int top = nerve.cellTop + nerveTop;

    ChainComplex& total = nerve.complex;
    total.dims.assign(top + 1, 0);
    total.labels.resize(top + 1);
    total.boundary.resize(top + 1);
    nerve.offsets.assign(top + 1, std::vector<int>(nerve.chains.size(), -1));
    for (int n = 0; n <= top; ++n) {
        int s = 0;
        for (size_t c = 0; c < nerve.chains.size(); ++c) {
            int len = static_cast<int>(nerve.chains[c].size()) - 1;
            int cellDim = n - len;
            if (cellDim < 0 || cellDim > nerve.cellTop) continue;
            nerve.offsets[n][c] = s;
            s += static_cast<int>(nerve.kept[nerve.chains[c][0]][cellDim].size());
        }
        total.dims[n] = s;
    }
    bool wantLabels = true;
    for (int n = 0; n <= top; ++n) {
        if (total.dims[n] > 200000) wantLabels = false;
    }
    if (wantLabels) {
        std::vector<std::string> chainLabel(nerve.chains.size());
        for (size_t c = 0; c < nerve.chains.size(); ++c) {
            std::string s;
            for (size_t i = 0; i < nerve.chains[c].size(); ++i) {
                if (i) s += "<";
                s += nerve.parts[nerve.chains[c][i]].describe();
            }
            chainLabel[c] = s;
        }
        for (int n = 0; n <= top; ++n) {
            total.labels[n].resize(total.dims[n]);
            for (size_t c = 0; c < nerve.chains.size(); ++c) {
                if (nerve.offsets[n][c] < 0) continue;
                int len = static_cast<int>(nerve.chains[c].size()) - 1;
                int cellDim = n - len;
                const auto& cells = nerve.kept[nerve.chains[c][0]][cellDim];
                for (size_t i = 0; i < cells.size(); ++i) {
                    std::string cellName =
                        (cellDim < static_cast<int>(M.labels.size()) &&
                         cells[i] < static_cast<int>(M.labels[cellDim].size()))
                            ? M.labels[cellDim][cells[i]]
                            : ("c" + std::to_string(cells[i]));
                    total.labels[n][nerve.offsets[n][c] + i] = cellName + "@" + chainLabel[c];
                }
            }
        }
    }

    for (int n = 1; n <= top; ++n) {
        SparseMat d(total.dims[n - 1], total.dims[n]);
        for (size_t c = 0; c < nerve.chains.size(); ++c) {
            if (nerve.offsets[n][c] < 0) continue;
            const auto& chain = nerve.chains[c];
            int len = static_cast<int>(chain.size()) - 1;
            int cellDim = n - len;
            int head = chain[0];
            const auto& cells = nerve.kept[head][cellDim];
            for (size_t i = 0; i < cells.size(); ++i) {
                int colId = nerve.offsets[n][c] + static_cast<int>(i);
                // internal boundary within the head node
                if (cellDim >= 1) {
                    for (const auto& [r, v] : M.boundary[cellDim].col[cells[i]]) {
                        int pos = nerve.positionInKept(head, cellDim - 1, r);
                        if (pos < 0)
                            throw std::logic_error("partition nerve: face left the node");
                        d.add(nerve.offsets[n - 1][c] + pos, colId, v);
                    }
                }
                // face maps of the nerve direction
                if (len >= 1) {
                    long long sign = (cellDim % 2 == 0) ? 1 : -1;
                    for (int f = 0; f <= len; ++f) {
                        std::vector<int> sub;
                        sub.reserve(len);
                        for (int t = 0; t <= len; ++t)
                            if (t != f) sub.push_back(chain[t]);
                        int subId = nerve.chainId.at(sub);
                        int subHead = sub[0];
                        int pos = nerve.positionInKept(subHead, cellDim, cells[i]);
                        if (pos < 0)
                            throw std::logic_error("partition nerve: cell missing after face");
                        d.add(nerve.offsets[n - 1][subId] + pos, colId,
                              (f % 2 == 0) ? sign : -sign);
                    }
                }
            }
        }
        d.normalize();
        total.boundary[n] = std::move(d);
    }
    return nerve;
}

}  // namespace

ChainMap filterInclusionMap(const MaskedChainComplex& complex, uint32_t maskSub,
                            uint32_t maskSuper) {
    if ((maskSub & maskSuper) != maskSuper)
        throw std::invalid_argument("filterInclusionMap: masks are not nested");
    ChainMap map;
    map.source = complex.filter(maskSub);
    map.target = complex.filter(maskSuper);
    auto keptSub = complex.filterIndices(maskSub);
    auto keptSuper = complex.filterIndices(maskSuper);
    map.mat.resize(map.source.topDegree() + 1);
    for (int d = 0; d <= map.source.topDegree(); ++d) {
        SparseMat m(map.target.dim(d), map.source.dim(d));
        for (size_t j = 0; j < keptSub[d].size(); ++j) {
            auto it = std::lower_bound(keptSuper[d].begin(), keptSuper[d].end(), keptSub[d][j]);
            if (it == keptSuper[d].end() || *it != keptSub[d][j])
                throw std::logic_error("filterInclusionMap: cell missing in target");
            m.add(static_cast<int>(it - keptSuper[d].begin()), static_cast<int>(j), 1);
        }
        map.mat[d] = std::move(m);
    }
    return map;
}

namespace {

struct AmbientData {
    ProductComplex product;
    MaskedChainComplex masked;
    MaskedReduction reduction;
};

AmbientData buildAmbient(const OrderedComplex& base, int k, long long budget, bool track) {
    AmbientData data;
    data.product = staircasePower(base, k);
    data.masked = maskedChains(data.product);
    if (data.masked.totalDim() > budget)
        throw ResourceCapError("simplex budget exceeded: ambient power has " +
                               std::to_string(data.masked.totalDim()) + " cells");
    data.reduction = reduceMasked(data.masked, track);
    return data;
}

// Chain-level projection that forgets the last coordinate, between the
// unreduced ambient powers.
std::vector<SparseMat> forgetLastCoordinateMats(const ProductComplex& big,
                                                const ProductComplex& small) {
    int top = big.complex.dimension();
    std::vector<SparseMat> mats(std::max(top + 1, 0));
    // vertex id arithmetic: dropping the last tuple entry divides by the
    // last radix
    long long lastRadix = small.arity >= 0 ? big.factors.back().vertexCount() : 1;
    for (int d = 0; d <= top; ++d) {
        const auto& bigCells = big.complex.cells(d);
        SparseMat m(static_cast<int>(small.complex.cellCount(d)), static_cast<int>(bigCells.size()));
        std::vector<int> image;
        for (size_t j = 0; j < bigCells.size(); ++j) {
            image.clear();
            bool degenerate = false;
            for (int v : bigCells[j]) {
                int projected = static_cast<int>(v / lastRadix);
                if (!image.empty() && image.back() == projected) {
                    degenerate = true;
                    break;
                }
                image.push_back(projected);
            }
            if (degenerate) continue;
            int row = small.complex.cellIndex(image);
            if (row < 0)
                throw std::logic_error("projection of a product cell is not a cell");
            m.add(row, static_cast<int>(j), 1);
        }
        m.normalize();
        mats[d] = std::move(m);
    }
    return mats;
}

}  // namespace

TowerResult assembleTower(const OrderedComplex& base, int k, const TowerOptions& options) {
    if (k < 1 || k > options.maxK)
        throw std::invalid_argument("k out of range (1.." + std::to_string(options.maxK) + ")");
    TowerResult result;
    result.k = k;
    result.certified = base.isGraph() && (k == 1 || abramsCondition(base, k).satisfied);

    bool track = options.wantProjection && k >= 2;
    AmbientData data = buildAmbient(base, k, options.simplexBudget, track);
    result.ambientCells = data.masked.totalDim();
    PartitionNerve nerve = buildPartitionNerve(data.reduction.reduced, k);
    if (nerve.complex.totalDim() > options.simplexBudget)
        throw ResourceCapError("simplex budget exceeded by the assembled tower");
    result.complex = nerve.complex;
    result.complex.validate();

    if (track) {
        AmbientData prev = buildAmbient(base, k - 1, options.simplexBudget, true);
        PartitionNerve prevNerve = buildPartitionNerve(prev.reduction.reduced, k - 1);
        std::vector<SparseMat> pi = forgetLastCoordinateMats(data.product, prev.product);
        // t = P_(k-1) . pi . S_k on reduced cells, degreewise.
        int cellTop = data.reduction.reduced.topDegree();
        std::vector<SparseMat> t(std::max(cellTop + 1, 0));
        for (int d = 0; d <= cellTop; ++d) {
            SparseMat piS = multiply(pi[d], data.reduction.section[d]);
            t[d] = multiply(prev.reduction.projection[d], piS);
        }

        ChainMap proj;
        proj.source = nerve.complex;
        proj.target = prevNerve.complex;
        proj.mat.resize(nerve.complex.topDegree() + 1);
        for (int n = 0; n <= nerve.complex.topDegree(); ++n)
            proj.mat[n] = SparseMat(prevNerve.complex.dim(n), nerve.complex.dim(n));
        for (size_t c = 0; c < nerve.chains.size(); ++c) {
            // project the partition chain; degenerate chains vanish
            std::vector<int> projected;
            bool degenerate = false;
            for (int part : nerve.chains[c]) {
                OrderedPartition dropped = nerve.parts[part].dropParticle(k);
                int id = -1;
                for (size_t a = 0; a < prevNerve.parts.size(); ++a) {
                    if (prevNerve.parts[a] == dropped) {
                        id = static_cast<int>(a);
                        break;
                    }
                }
                if (id < 0) throw std::logic_error("projected partition not found");
                if (!projected.empty() && projected.back() == id) {
                    degenerate = true;
                    break;
                }
                projected.push_back(id);
            }
            if (degenerate) continue;
            auto it = prevNerve.chainId.find(projected);
            if (it == prevNerve.chainId.end())
                throw std::logic_error("projected chain not found");
            int pc = it->second;
            int len = static_cast<int>(nerve.chains[c].size()) - 1;
            int head = nerve.chains[c][0];
            int prevHead = projected[0];
            for (int cellDim = 0; cellDim <= nerve.cellTop; ++cellDim) {
                int n = cellDim + len;
                if (n > nerve.complex.topDegree() || nerve.offsets[n][c] < 0) continue;
                const auto& cells = nerve.kept[head][cellDim];
                for (size_t i = 0; i < cells.size(); ++i) {
                    if (cellDim >= static_cast<int>(t.size())) continue;
                    for (const auto& [r, v] : t[cellDim].col[cells[i]]) {
                        int pos = prevNerve.positionInKept(prevHead, cellDim, r);
                        if (pos < 0)
                            throw std::logic_error("projected cell missing from target node");
                        proj.mat[n].add(prevNerve.offsets[n][pc] + pos,
                                        nerve.offsets[n][c] + static_cast<int>(i), v);
                    }
                }
            }
        }
        for (auto& m : proj.mat) m.normalize();
        result.projection = std::move(proj);
        result.previous = prevNerve.complex;
        result.hasProjection = true;
    }
    return result;
}

ChainComplex boundaryModel(const OrderedComplex& base, int k, const TowerOptions& options) {
    TowerOptions opts = options;
    opts.wantProjection = false;
    TowerResult tower = assembleTower(base, k, opts);
    ProductComplex doubled = staircaseProduct({base, twoPointComplex()});
    return tensor(tower.complex, chains(doubled.complex));
}

ChainComplex nestedTowerLowK(const OrderedComplex& base, int k) {
    if (k < 2 || k > 3)
        throw std::invalid_argument("nestedTowerLowK supports k = 2 or 3");
    ProductComplex power = staircasePower(base, k);
    MaskedChainComplex masked = maskedChains(power);
    MaskedReduction red = reduceMasked(masked, false);
    const MaskedChainComplex& M = red.reduced;

    auto nodeComplex = [&](const ConstraintSet& cs) { return M.filter(cs.mask()); };
    auto inclusion = [&](const ConstraintSet& sub, const ConstraintSet& super) {
        return filterInclusionMap(M, sub.mask(), super.mask());
    };
    auto levelZigzag = [&](const LevelDiagram& level) {
        ZigzagDiagram z;
        int m = level.evenCount();
        for (int g = 1; g <= m + 1; ++g) z.oddNodes.push_back(nodeComplex(level.at(2 * g - 1)));
        for (int q = 1; q <= m; ++q) {
            z.evenNodes.push_back(nodeComplex(level.at(2 * q)));
            z.leftMaps.push_back(inclusion(level.at(2 * q), level.at(2 * q - 1)));
            z.rightMaps.push_back(inclusion(level.at(2 * q), level.at(2 * q + 1)));
        }
        return z;
    };

    if (k == 2) {
        LevelDiagram level = baseZigzag(IndexTuple{}, 2);
        return hocolimZigzag(levelZigzag(level)).total;
    }

    LevelDiagram left = baseZigzag(IndexTuple{{1}}, 3);
    LevelDiagram right = baseZigzag(IndexTuple{{3}}, 3);
    LevelDiagram middle = restrictDiagram(left, {2, 1});

    ZigzagDiagram zLeft = levelZigzag(left);
    ZigzagDiagram zMiddle = levelZigzag(middle);
    ZigzagDiagram zRight = levelZigzag(right);
    ZigzagHocolim tLeft = hocolimZigzag(zLeft);
    ZigzagHocolim tMiddle = hocolimZigzag(zMiddle);
    ZigzagHocolim tRight = hocolimZigzag(zRight);

    // Middle -> left: drop the restriction constraint at every position.
    ZigzagMorphism toLeft;
    int m = middle.evenCount();
    for (int g = 1; g <= m + 1; ++g) {
        toLeft.oddAssignment.push_back(g - 1);
        toLeft.oddMaps.push_back(inclusion(middle.at(2 * g - 1), left.at(2 * g - 1)));
    }
    for (int q = 1; q <= m; ++q) {
        toLeft.evenAssignment.push_back(q - 1);
        toLeft.evenMaps.push_back(inclusion(middle.at(2 * q), left.at(2 * q)));
    }
    ChainMap mapLeft = inducedHocolimMap(zMiddle, zLeft, toLeft, tMiddle, tLeft);

    // Middle -> right: the wall-crossing translation.
    CrossWallData cw = crossWall(middle, right, 1);
    ZigzagMorphism toRight;
    for (int g = 1; g <= m + 1; ++g) {
        int target = cw.oddAssignment[g - 1];
        toRight.oddAssignment.push_back(target - 1);
        toRight.oddMaps.push_back(inclusion(middle.at(2 * g - 1), right.at(2 * target - 1)));
    }
    for (int q = 1; q <= m; ++q) {
        int target = cw.evenAssignment[q - 1];
        toRight.evenAssignment.push_back(target - 1);
        toRight.evenMaps.push_back(inclusion(middle.at(2 * q), right.at(2 * target)));
    }
    ChainMap mapRight = inducedHocolimMap(zMiddle, zRight, toRight, tMiddle, tRight);

    ZigzagDiagram topLevel;
    topLevel.oddNodes = {tLeft.total, tRight.total};
    topLevel.evenNodes = {tMiddle.total};
    topLevel.leftMaps = {mapLeft};
    topLevel.rightMaps = {mapRight};
    return hocolimZigzag(topLevel).total;
}

}  // namespace configspace
