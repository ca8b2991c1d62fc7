#include "configspace/zigzag.hpp"

#include <stdexcept>
#include <string>

namespace configspace {

void ZigzagDiagram::validate() const {
    if (oddNodes.size() != evenNodes.size() + 1)
        throw std::invalid_argument("zigzag needs one more odd node than even nodes");
    if (leftMaps.size() != evenNodes.size() || rightMaps.size() != evenNodes.size())
        throw std::invalid_argument("zigzag arrow count mismatch");
    for (size_t q = 0; q < evenNodes.size(); ++q) {
        if (leftMaps[q].source.dims != evenNodes[q].dims ||
            leftMaps[q].target.dims != oddNodes[q].dims ||
            rightMaps[q].source.dims != evenNodes[q].dims ||
            rightMaps[q].target.dims != oddNodes[q + 1].dims)
            throw std::invalid_argument("zigzag arrow endpoints mismatch at position " +
                                        std::to_string(q));
        leftMaps[q].validate();
        rightMaps[q].validate();
    }
    for (const auto& node : oddNodes) node.validate();
    for (const auto& node : evenNodes) node.validate();
}

ZigzagHocolim hocolimZigzag(const ZigzagDiagram& z) {
    if (z.oddNodes.size() != z.evenNodes.size() + 1 ||
        z.leftMaps.size() != z.evenNodes.size() ||
        z.rightMaps.size() != z.evenNodes.size())
        throw std::invalid_argument("zigzag shape mismatch");
    for (size_t q = 0; q < z.evenNodes.size(); ++q) {
        if (z.leftMaps[q].source.dims != z.evenNodes[q].dims ||
            z.leftMaps[q].target.dims != z.oddNodes[q].dims ||
            z.rightMaps[q].source.dims != z.evenNodes[q].dims ||
            z.rightMaps[q].target.dims != z.oddNodes[q + 1].dims)
            throw std::invalid_argument("zigzag shape mismatch at even position " +
                                        std::to_string(q));
    }

    int m = static_cast<int>(z.evenNodes.size());
    int top = 0;
    for (const auto& node : z.oddNodes) top = std::max(top, node.topDegree());
    for (const auto& node : z.evenNodes) top = std::max(top, node.topDegree() + 1);

    // Per-degree offsets: odd objects, even objects, left cylinder copies,
    // right cylinder copies (cylinder copies shifted up by one degree).
    auto offsets = [&](int n) {
        struct Off {
            std::vector<int> odd, even, cylL, cylR;
            int total;
        } off;
        int s = 0;
        off.odd.resize(m + 1);
        for (int p = 0; p <= m; ++p) {
            off.odd[p] = s;
            s += z.oddNodes[p].dim(n);
        }
        off.even.resize(m);
        for (int q = 0; q < m; ++q) {
            off.even[q] = s;
            s += z.evenNodes[q].dim(n);
        }
        off.cylL.resize(m);
        for (int q = 0; q < m; ++q) {
            off.cylL[q] = s;
            s += z.evenNodes[q].dim(n - 1);
        }
        off.cylR.resize(m);
        for (int q = 0; q < m; ++q) {
            off.cylR[q] = s;
            s += z.evenNodes[q].dim(n - 1);
        }
        off.total = s;
        return off;
    };

    ZigzagHocolim result;
    ChainComplex& total = result.total;
    total.dims.resize(top + 1);
    total.labels.resize(top + 1);
    total.boundary.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        auto off = offsets(n);
        total.dims[n] = off.total;
        total.labels[n].resize(off.total);
        for (int p = 0; p <= m; ++p)
            for (int i = 0; i < z.oddNodes[p].dim(n); ++i)
                total.labels[n][off.odd[p] + i] =
                    "X" + std::to_string(p) + "." + z.oddNodes[p].label(n, i);
        for (int q = 0; q < m; ++q)
            for (int i = 0; i < z.evenNodes[q].dim(n); ++i)
                total.labels[n][off.even[q] + i] =
                    "Y" + std::to_string(q) + "." + z.evenNodes[q].label(n, i);
        for (int q = 0; q < m; ++q)
            for (int i = 0; i < z.evenNodes[q].dim(n - 1); ++i) {
                total.labels[n][off.cylL[q] + i] =
                    "cylL" + std::to_string(q) + "." + z.evenNodes[q].label(n - 1, i);
                total.labels[n][off.cylR[q] + i] =
                    "cylR" + std::to_string(q) + "." + z.evenNodes[q].label(n - 1, i);
            }
    }
    for (int n = 1; n <= top; ++n) {
        auto off = offsets(n);
        auto offBelow = offsets(n - 1);
        SparseMat d(total.dims[n - 1], total.dims[n]);
        for (int p = 0; p <= m; ++p) {
            const ChainComplex& node = z.oddNodes[p];
            if (n <= node.topDegree()) {
                for (int j = 0; j < node.dim(n); ++j)
                    for (const auto& [r, v] : node.boundary[n].col[j])
                        d.add(offBelow.odd[p] + r, off.odd[p] + j, v);
            }
        }
        for (int q = 0; q < m; ++q) {
            const ChainComplex& node = z.evenNodes[q];
            if (n <= node.topDegree()) {
                for (int j = 0; j < node.dim(n); ++j)
                    for (const auto& [r, v] : node.boundary[n].col[j])
                        d.add(offBelow.even[q] + r, off.even[q] + j, v);
            }
            // Cylinder copies carry degree n-1 chains of the even node.
            int yDim = node.dim(n - 1);
            const SparseMat lm = z.leftMaps[q].matrixAt(n - 1);
            const SparseMat rm = z.rightMaps[q].matrixAt(n - 1);
            for (int j = 0; j < yDim; ++j) {
                for (const auto& [r, v] : lm.col[j])
                    d.add(offBelow.odd[q] + r, off.cylL[q] + j, v);
                d.add(offBelow.even[q] + j, off.cylL[q] + j, -1);
                for (const auto& [r, v] : rm.col[j])
                    d.add(offBelow.odd[q + 1] + r, off.cylR[q] + j, v);
                d.add(offBelow.even[q] + j, off.cylR[q] + j, -1);
                if (n - 1 >= 1 && n - 1 <= node.topDegree()) {
                    for (const auto& [r, v] : node.boundary[n - 1].col[j]) {
                        d.add(offBelow.cylL[q] + r, off.cylL[q] + j, -v);
                        d.add(offBelow.cylR[q] + r, off.cylR[q] + j, -v);
                    }
                }
            }
        }
        d.normalize();
        total.boundary[n] = std::move(d);
    }

    for (int p = 0; p <= m; ++p) {
        ChainMap incl;
        incl.source = z.oddNodes[p];
        incl.target = total;
        incl.mat.resize(z.oddNodes[p].topDegree() + 1);
        for (int n = 0; n <= z.oddNodes[p].topDegree(); ++n) {
            auto off = offsets(n);
            SparseMat mmat(total.dims[n], z.oddNodes[p].dim(n));
            for (int i = 0; i < z.oddNodes[p].dim(n); ++i) mmat.add(off.odd[p] + i, i, 1);
            incl.mat[n] = std::move(mmat);
        }
        result.oddInclusions.push_back(std::move(incl));
    }
    for (int q = 0; q < m; ++q) {
        ChainMap incl;
        incl.source = z.evenNodes[q];
        incl.target = total;
        incl.mat.resize(z.evenNodes[q].topDegree() + 1);
        for (int n = 0; n <= z.evenNodes[q].topDegree(); ++n) {
            auto off = offsets(n);
            SparseMat mmat(total.dims[n], z.evenNodes[q].dim(n));
            for (int i = 0; i < z.evenNodes[q].dim(n); ++i) mmat.add(off.even[q] + i, i, 1);
            incl.mat[n] = std::move(mmat);
        }
        result.evenInclusions.push_back(std::move(incl));
    }
    return result;
}

ChainMap inducedHocolimMap(const ZigzagDiagram& source, const ZigzagDiagram& target,
                           const ZigzagMorphism& morphism, const ZigzagHocolim& sourceTotal,
                           const ZigzagHocolim& targetTotal) {
    int sm = static_cast<int>(source.evenNodes.size());
    int tm = static_cast<int>(target.evenNodes.size());
    if (static_cast<int>(morphism.oddAssignment.size()) != sm + 1 ||
        static_cast<int>(morphism.evenAssignment.size()) != sm ||
        static_cast<int>(morphism.oddMaps.size()) != sm + 1 ||
        static_cast<int>(morphism.evenMaps.size()) != sm)
        throw std::invalid_argument("zigzag morphism arity mismatch");

    // Each source arrow must land on a target arrow.
    struct ArrowImage {
        bool rightArrow;  // which arrow of the target even node carries it
    };
    std::vector<ArrowImage> leftImage(sm), rightImage(sm);
    for (int q = 0; q < sm; ++q) {
        int tq = morphism.evenAssignment[q];
        if (tq < 0 || tq >= tm) throw std::invalid_argument("even assignment out of range");
        int oL = morphism.oddAssignment[q];
        int oR = morphism.oddAssignment[q + 1];
        if (oL == tq) leftImage[q].rightArrow = false;
        else if (oL == tq + 1) leftImage[q].rightArrow = true;
        else throw std::invalid_argument("left arrow image is not an arrow of the target");
        if (oR == tq) rightImage[q].rightArrow = false;
        else if (oR == tq + 1) rightImage[q].rightArrow = true;
        else throw std::invalid_argument("right arrow image is not an arrow of the target");
    }
    // Naturality of the per-node maps with each mapped arrow.
    auto checkSquare = [](const ChainMap& srcArrow, const ChainMap& tgtArrow,
                          const ChainMap& evenMap, const ChainMap& oddMap) {
        int top = srcArrow.source.topDegree();
        for (int n = 0; n <= top; ++n) {
            SparseMat lhs = multiply(tgtArrow.matrixAt(n), evenMap.matrixAt(n));
            SparseMat rhs = multiply(oddMap.matrixAt(n), srcArrow.matrixAt(n));
            if (!equalMats(lhs, rhs))
                throw std::invalid_argument("zigzag morphism square does not commute");
        }
    };
    for (int q = 0; q < sm; ++q) {
        int tq = morphism.evenAssignment[q];
        const ChainMap& tgtL = leftImage[q].rightArrow ? target.rightMaps[tq] : target.leftMaps[tq];
        const ChainMap& tgtR = rightImage[q].rightArrow ? target.rightMaps[tq] : target.leftMaps[tq];
        checkSquare(source.leftMaps[q], tgtL, morphism.evenMaps[q], morphism.oddMaps[q]);
        checkSquare(source.rightMaps[q], tgtR, morphism.evenMaps[q], morphism.oddMaps[q + 1]);
    }

    // Offsets into both totals, mirroring hocolimZigzag's layout.
    auto offsets = [](const ZigzagDiagram& z, int n) {
        int m = static_cast<int>(z.evenNodes.size());
        struct Off {
            std::vector<int> odd, even, cylL, cylR;
        } off;
        int s = 0;
        off.odd.resize(m + 1);
        for (int p = 0; p <= m; ++p) {
            off.odd[p] = s;
            s += z.oddNodes[p].dim(n);
        }
        off.even.resize(m);
        for (int q = 0; q < m; ++q) {
            off.even[q] = s;
            s += z.evenNodes[q].dim(n);
        }
        off.cylL.resize(m);
        for (int q = 0; q < m; ++q) {
            off.cylL[q] = s;
            s += z.evenNodes[q].dim(n - 1);
        }
        off.cylR.resize(m);
        for (int q = 0; q < m; ++q) {
            off.cylR[q] = s;
            s += z.evenNodes[q].dim(n - 1);
        }
        return off;
    };

    ChainMap induced;
    induced.source = sourceTotal.total;
    induced.target = targetTotal.total;
    int top = sourceTotal.total.topDegree();
    induced.mat.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        auto soff = offsets(source, n);
        auto toff = offsets(target, n);
        SparseMat mmat(targetTotal.total.dim(n), sourceTotal.total.dim(n));
        for (int p = 0; p <= sm; ++p) {
            const SparseMat f = morphism.oddMaps[p].matrixAt(n);
            int tp = morphism.oddAssignment[p];
            for (int j = 0; j < source.oddNodes[p].dim(n); ++j)
                for (const auto& [r, v] : f.col[j])
                    mmat.add(toff.odd[tp] + r, soff.odd[p] + j, v);
        }
        for (int q = 0; q < sm; ++q) {
            const SparseMat f = morphism.evenMaps[q].matrixAt(n);
            int tq = morphism.evenAssignment[q];
            for (int j = 0; j < source.evenNodes[q].dim(n); ++j)
                for (const auto& [r, v] : f.col[j])
                    mmat.add(toff.even[tq] + r, soff.even[q] + j, v);
            const SparseMat fBelow = morphism.evenMaps[q].matrixAt(n - 1);
            for (int j = 0; j < source.evenNodes[q].dim(n - 1); ++j) {
                for (const auto& [r, v] : fBelow.col[j]) {
                    int rowL = (leftImage[q].rightArrow ? toff.cylR[tq] : toff.cylL[tq]) + r;
                    mmat.add(rowL, soff.cylL[q] + j, v);
                    int rowR = (rightImage[q].rightArrow ? toff.cylR[tq] : toff.cylL[tq]) + r;
                    mmat.add(rowR, soff.cylR[q] + j, v);
                }
            }
        }
        mmat.normalize();
        induced.mat[n] = std::move(mmat);
    }
    return induced;
}

}  // namespace configspace
