#include "configspace/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "configspace/arith.hpp"
#include "configspace/product.hpp"

namespace configspace {

bool HomologySummary::sameBetti(const HomologySummary& other) const {
    auto trimmed = [](const std::vector<long long>& v) {
        auto t = v;
        while (!t.empty() && t.back() == 0) t.pop_back();
        return t;
    };
    return trimmed(betti) == trimmed(other.betti);
}

std::string HomologySummary::bettiString() const {
    std::ostringstream out;
    for (size_t i = 0; i < betti.size(); ++i) {
        if (i) out << ",";
        out << betti[i];
    }
    return out.str();
}

namespace {

// Shared sparse workspace for integer elimination with column (and, for the
// Smith form, row) operations.  Deterministic: all scans follow index order.
struct Work {
    int nrows = 0;
    int ncols = 0;
    std::vector<std::map<int, long long>> cols;  // col -> row -> value
    std::vector<std::set<int>> rowCols;          // row -> cols with a nonzero
    std::vector<bool> rowAlive, colAlive;

    explicit Work(const SparseMat& m) {
        nrows = m.rows;
        ncols = m.cols;
        cols.resize(ncols);
        rowCols.resize(nrows);
        rowAlive.assign(nrows, true);
        colAlive.assign(ncols, true);
        for (int j = 0; j < ncols; ++j) {
            for (const auto& [r, v] : m.col[j]) {
                if (v == 0) continue;
                auto [it, inserted] = cols[j].emplace(r, v);
                if (!inserted) it->second = checkedAdd(it->second, v);
            }
            for (auto it = cols[j].begin(); it != cols[j].end();) {
                if (it->second == 0) it = cols[j].erase(it);
                else {
                    rowCols[it->first].insert(j);
                    ++it;
                }
            }
        }
    }

    void setEntry(int r, int j, long long v) {
        if (v == 0) {
            if (cols[j].erase(r)) rowCols[r].erase(j);
        } else {
            auto [it, inserted] = cols[j].emplace(r, v);
            if (!inserted) it->second = v;
            if (inserted) rowCols[r].insert(j);
        }
    }

    long long entry(int r, int j) const {
        auto it = cols[j].find(r);
        return it == cols[j].end() ? 0 : it->second;
    }

    // col_j += k * col_c
    void colAxpy(int j, int c, long long k) {
        if (k == 0) return;
        for (const auto& [r, v] : cols[c]) {
            long long nv = checkedAdd(entry(r, j), checkedMul(k, v));
            setEntry(r, j, nv);
        }
    }

    // col_j = col_j * s  (s != 0)
    void colScale(int j, long long s) {
        if (s == 1) return;
        for (auto& [r, v] : cols[j]) v = checkedMul(v, s);
    }

    void colDivideByGcd(int j) {
        long long g = 0;
        for (const auto& [r, v] : cols[j]) g = std::gcd(g, std::abs(v));
        if (g > 1)
            for (auto& [r, v] : cols[j]) v /= g;
    }

    // row_i += k * row_r
    void rowAxpy(int i, int r, long long k) {
        if (k == 0) return;
        std::vector<int> touching(rowCols[r].begin(), rowCols[r].end());
        for (int j : touching) {
            long long nv = checkedAdd(entry(i, j), checkedMul(k, entry(r, j)));
            setEntry(i, j, nv);
        }
    }

    void dropRow(int r) {
        std::vector<int> touching(rowCols[r].begin(), rowCols[r].end());
        for (int j : touching) cols[j].erase(r);
        rowCols[r].clear();
        rowAlive[r] = false;
    }

    void dropCol(int j) {
        for (const auto& [r, v] : cols[j]) rowCols[r].erase(j);
        cols[j].clear();
        colAlive[j] = false;
    }

    bool anyEntry() const {
        for (int j = 0; j < ncols; ++j)
            if (colAlive[j] && !cols[j].empty()) return true;
        return false;
    }
};

// Eliminates unit pivots with column operations only; each pivot contributes
// one to the rank and its Schur complement replaces the matrix.
long long unitPivotPhase(Work& w) {
    long long pivots = 0;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int c = 0; c < w.ncols; ++c) {
            if (!w.colAlive[c] || w.cols[c].empty()) continue;
            int bestRow = -1;
            long long bestScore = 0;
            for (const auto& [r, v] : w.cols[c]) {
                if (v != 1 && v != -1) continue;
                long long score =
                    static_cast<long long>(w.rowCols[r].size() - 1) *
                    static_cast<long long>(w.cols[c].size() - 1);
                if (bestRow == -1 || score < bestScore) {
                    bestRow = r;
                    bestScore = score;
                }
            }
            if (bestRow < 0) continue;
            int r = bestRow;
            long long eps = w.entry(r, c);
            std::vector<int> rowEntries(w.rowCols[r].begin(), w.rowCols[r].end());
            for (int j : rowEntries) {
                if (j == c) continue;
                w.colAxpy(j, c, -checkedMul(eps, w.entry(r, j)));
            }
            w.dropRow(r);
            w.dropCol(c);
            ++pivots;
            progress = true;
        }
    }
    return pivots;
}

}  // namespace

long long integerRank(const SparseMat& m) {
    Work w(m);
    long long rank = unitPivotPhase(w);
    // General phase: pivot on the smallest-magnitude entry, scaling columns
    // to keep everything integral; rank is unchanged by column scaling.
    while (w.anyEntry()) {
        int pr = -1, pc = -1;
        long long pv = 0;
        for (int j = 0; j < w.ncols; ++j) {
            if (!w.colAlive[j]) continue;
            for (const auto& [r, v] : w.cols[j]) {
                if (pv == 0 || std::abs(v) < std::abs(pv)) {
                    pv = v;
                    pr = r;
                    pc = j;
                }
            }
        }
        if (pv == 0) break;
        if (pv == 1 || pv == -1) {
            rank += unitPivotPhase(w);
            continue;
        }
        std::vector<int> rowEntries(w.rowCols[pr].begin(), w.rowCols[pr].end());
        for (int j : rowEntries) {
            if (j == pc) continue;
            long long a = w.entry(pr, j);
            long long g = std::gcd(std::abs(pv), std::abs(a));
            w.colScale(j, pv / g);
            w.colAxpy(j, pc, -a / g);
            w.colDivideByGcd(j);
        }
        w.dropRow(pr);
        w.dropCol(pc);
        ++rank;
    }
    return rank;
}

std::vector<long long> smithInvariantFactors(const SparseMat& m) {
    Work w(m);
    std::vector<long long> factors;
    // Unit pivots first: with pivot +-1, clearing the pivot row by column ops
    // leaves the pivot column clearable by row ops that touch nothing else.
    long long units = unitPivotPhase(w);
    factors.assign(units, 1);

    while (w.anyEntry()) {
        int pr = -1, pc = -1;
        long long pv = 0;
        for (int j = 0; j < w.ncols; ++j) {
            if (!w.colAlive[j]) continue;
            for (const auto& [r, v] : w.cols[j]) {
                if (pv == 0 || std::abs(v) < std::abs(pv)) {
                    pv = v;
                    pr = r;
                    pc = j;
                }
            }
        }
        if (pv == 0) break;

        bool clean = false;
        while (!clean) {
            clean = true;
            // Reduce the pivot column by row operations.
            std::vector<std::pair<int, long long>> colEntries(w.cols[pc].begin(),
                                                              w.cols[pc].end());
            for (const auto& [r, v] : colEntries) {
                if (r == pr) continue;
                long long q = v / pv;
                w.rowAxpy(r, pr, -q);
                long long rem = w.entry(r, pc);
                if (rem != 0) {
                    pr = r;
                    pv = rem;
                    clean = false;
                    break;
                }
            }
            if (!clean) continue;
            // Reduce the pivot row by column operations.
            std::vector<int> rowEntries(w.rowCols[pr].begin(), w.rowCols[pr].end());
            for (int j : rowEntries) {
                if (j == pc) continue;
                long long v = w.entry(pr, j);
                long long q = v / pv;
                w.colAxpy(j, pc, -q);
                long long rem = w.entry(pr, j);
                if (rem != 0) {
                    pc = j;
                    pv = rem;
                    clean = false;
                    break;
                }
            }
        }
        // Divisibility: if some remaining entry is not divisible by the
        // pivot, absorb its row and continue reducing.
        bool divisible = true;
        for (int j = 0; j < w.ncols && divisible; ++j) {
            if (!w.colAlive[j] || j == pc) continue;
            for (const auto& [r, v] : w.cols[j]) {
                if (v % pv != 0) {
                    w.rowAxpy(pr, r, 1);
                    divisible = false;
                    break;
                }
            }
        }
        if (!divisible) continue;
        factors.push_back(std::abs(pv));
        w.dropRow(pr);
        w.dropCol(pc);
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

HomologySummary homology(const ChainComplex& c, CoefficientMode mode) {
    HomologySummary summary;
    int top = c.topDegree();
    if (top < 0) return summary;
    std::vector<long long> rank(top + 2, 0);
    for (int d = 1; d <= top; ++d) rank[d] = integerRank(c.boundary[d]);
    summary.betti.resize(top + 1);
    for (int d = 0; d <= top; ++d)
        summary.betti[d] = c.dims[d] - rank[d] - rank[d + 1];
    if (mode == CoefficientMode::Integral) {
        std::vector<std::vector<long long>> torsion(top + 1);
        for (int d = 0; d < top; ++d) {
            for (long long f : smithInvariantFactors(c.boundary[d + 1]))
                if (f > 1) torsion[d].push_back(f);
        }
        summary.torsion = std::move(torsion);
    }
    while (summary.betti.size() > 1 && summary.betti.back() == 0 &&
           (!summary.torsion || summary.torsion->back().empty())) {
        summary.betti.pop_back();
        if (summary.torsion) summary.torsion->pop_back();
    }
    return summary;
}

std::vector<long long> convolveBetti(const std::vector<long long>& a,
                                     const std::vector<long long>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<long long> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

long long MaskedChainComplex::totalDim() const {
    long long n = 0;
    for (int d : dims) n += d;
    return n;
}

void MaskedChainComplex::validate() const {
    for (int d = 1; d <= topDegree(); ++d) {
        if (boundary[d].cols != dims[d] || boundary[d].rows != dims[d - 1])
            throw std::invalid_argument("masked complex shape mismatch");
        for (int j = 0; j < dims[d]; ++j) {
            for (const auto& [r, v] : boundary[d].col[j]) {
                if (v == 0) continue;
                if ((masks[d - 1][r] & masks[d][j]) != masks[d][j])
                    throw std::invalid_argument("mask monotonicity violated");
            }
        }
    }
    for (int d = 2; d <= topDegree(); ++d)
        if (!multiply(boundary[d - 1], boundary[d]).isZero())
            throw std::invalid_argument("masked complex boundary does not square to zero");
}

std::vector<std::vector<int>> MaskedChainComplex::filterIndices(uint32_t required) const {
    std::vector<std::vector<int>> kept(std::max(topDegree() + 1, 0));
    for (int d = 0; d <= topDegree(); ++d)
        for (int i = 0; i < dims[d]; ++i)
            if ((masks[d][i] & required) == required) kept[d].push_back(i);
    return kept;
}

ChainComplex MaskedChainComplex::filter(uint32_t required) const {
    auto kept = filterIndices(required);
    ChainComplex c;
    int top = topDegree();
    while (top >= 0 && kept[top].empty()) --top;
    if (top < 0) return c;
    c.dims.resize(top + 1);
    c.labels.resize(top + 1);
    c.boundary.resize(top + 1);
    std::vector<std::vector<int>> newId(topDegree() + 1);
    for (int d = 0; d <= top; ++d) {
        c.dims[d] = static_cast<int>(kept[d].size());
        newId[d].assign(dims[d], -1);
        for (size_t i = 0; i < kept[d].size(); ++i) newId[d][kept[d][i]] = static_cast<int>(i);
        if (!labels.empty() && d < static_cast<int>(labels.size()) &&
            !labels[d].empty()) {
            c.labels[d].reserve(kept[d].size());
            for (int i : kept[d]) c.labels[d].push_back(labels[d][i]);
        }
    }
    for (int d = 1; d <= top; ++d) {
        SparseMat m(c.dims[d - 1], c.dims[d]);
        for (size_t j = 0; j < kept[d].size(); ++j) {
            for (const auto& [r, v] : boundary[d].col[kept[d][j]]) {
                int nr = newId[d - 1][r];
                if (nr < 0)
                    throw std::logic_error("mask filter lost a face; monotonicity broken");
                m.add(nr, static_cast<int>(j), v);
            }
        }
        m.normalize();
        c.boundary[d] = std::move(m);
    }
    return c;
}

MaskedReduction reduceMasked(const MaskedChainComplex& complex, bool trackMaps) {
    int top = complex.topDegree();
    MaskedReduction out;
    out.tracked = trackMaps;
    if (top < 0) {
        out.reduced = complex;
        return out;
    }

    std::vector<Work> work;
    work.reserve(top + 1);
    work.emplace_back(SparseMat(0, complex.dims[0]));
    for (int d = 1; d <= top; ++d) work.emplace_back(complex.boundary[d]);

    std::vector<std::vector<bool>> alive(top + 1);
    for (int d = 0; d <= top; ++d) alive[d].assign(complex.dims[d], true);

    // Section columns (original chain per alive cell) and projection rows
    // (original-cell expansions in the current basis), maintained per degree.
    std::vector<std::vector<std::map<int, long long>>> sec(top + 1), proj(top + 1);
    if (trackMaps) {
        for (int d = 0; d <= top; ++d) {
            sec[d].resize(complex.dims[d]);
            proj[d].resize(complex.dims[d]);
            for (int i = 0; i < complex.dims[d]; ++i) {
                sec[d][i][i] = 1;
                proj[d][i][i] = 1;
            }
        }
    }

    auto eliminate = [&](int d, int r, int c) {
        // r: degree d-1 cell, c: degree d cell, pivot +-1 with equal masks.
        Work& w = work[d];
        long long eps = w.entry(r, c);
        std::vector<std::pair<int, long long>> colC(w.cols[c].begin(), w.cols[c].end());
        std::vector<std::pair<int, long long>> rowR;
        for (int j : w.rowCols[r]) rowR.emplace_back(j, w.entry(r, j));

        if (trackMaps) {
            // section: s(x') = x' - eps * a_rx' * c
            for (const auto& [j, a] : rowR) {
                if (j == c) continue;
                long long k = -checkedMul(eps, a);
                for (const auto& [orig, v] : sec[d][c]) {
                    long long nv = checkedAdd(sec[d][j].count(orig) ? sec[d][j][orig] : 0,
                                              checkedMul(k, v));
                    if (nv == 0) sec[d][j].erase(orig);
                    else sec[d][j][orig] = nv;
                }
            }
            sec[d][c].clear();
            sec[d - 1][r].clear();
            // projection, row form: Prow[y] -= eps * B[y] * Prow[r] for y in
            // supp(B) minus r; then Prow[r] and Prow[c] vanish.
            for (const auto& [y, b] : colC) {
                if (y == r) continue;
                long long k = -checkedMul(eps, b);
                for (const auto& [orig, v] : proj[d - 1][r]) {
                    long long nv = checkedAdd(proj[d - 1][y].count(orig) ? proj[d - 1][y][orig] : 0,
                                              checkedMul(k, v));
                    if (nv == 0) proj[d - 1][y].erase(orig);
                    else proj[d - 1][y][orig] = nv;
                }
            }
            proj[d - 1][r].clear();
            proj[d][c].clear();
        }

        for (const auto& [j, a] : rowR) {
            if (j == c) continue;
            w.colAxpy(j, c, -checkedMul(eps, a));
        }
        w.dropRow(r);
        w.dropCol(c);
        if (d + 1 <= top) work[d + 1].dropRow(c);
        if (d - 1 >= 1) work[d - 1].dropCol(r);
        alive[d][c] = false;
        alive[d - 1][r] = false;
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (int d = 1; d <= top; ++d) {
            Work& w = work[d];
            for (int c = 0; c < w.ncols; ++c) {
                if (!w.colAlive[c] || w.cols[c].empty()) continue;
                int bestRow = -1;
                long long bestScore = 0;
                for (const auto& [r, v] : w.cols[c]) {
                    if (v != 1 && v != -1) continue;
                    if (complex.masks[d - 1][r] != complex.masks[d][c]) continue;
                    long long score =
                        static_cast<long long>(w.rowCols[r].size() - 1) *
                        static_cast<long long>(w.cols[c].size() - 1);
                    if (bestRow == -1 || score < bestScore) {
                        bestRow = r;
                        bestScore = score;
                    }
                }
                if (bestRow >= 0) {
                    eliminate(d, bestRow, c);
                    progress = true;
                }
            }
        }
    }

    // Assemble the reduced complex in original cell order.
    std::vector<std::vector<int>> keptIdx(top + 1);
    std::vector<std::vector<int>> newId(top + 1);
    for (int d = 0; d <= top; ++d) {
        newId[d].assign(complex.dims[d], -1);
        for (int i = 0; i < complex.dims[d]; ++i) {
            if (alive[d][i]) {
                newId[d][i] = static_cast<int>(keptIdx[d].size());
                keptIdx[d].push_back(i);
            }
        }
    }
    int newTop = top;
    while (newTop >= 0 && keptIdx[newTop].empty()) --newTop;

    MaskedChainComplex red;
    red.dims.resize(newTop + 1);
    red.boundary.resize(newTop + 1);
    red.masks.resize(newTop + 1);
    red.labels.resize(newTop + 1);
    for (int d = 0; d <= newTop; ++d) {
        red.dims[d] = static_cast<int>(keptIdx[d].size());
        red.masks[d].reserve(keptIdx[d].size());
        for (int i : keptIdx[d]) red.masks[d].push_back(complex.masks[d][i]);
        if (d < static_cast<int>(complex.labels.size()) && !complex.labels[d].empty()) {
            red.labels[d].reserve(keptIdx[d].size());
            for (int i : keptIdx[d]) red.labels[d].push_back(complex.labels[d][i]);
        }
        if (d >= 1) {
            SparseMat m(red.dims[d - 1], red.dims[d]);
            for (int j : keptIdx[d]) {
                for (const auto& [r, v] : work[d].cols[j]) {
                    m.add(newId[d - 1][r], newId[d][j], v);
                }
            }
            m.normalize();
            red.boundary[d] = std::move(m);
        }
    }
    if (newTop >= 0) red.boundary[0] = SparseMat(0, red.dims[0]);
    out.reduced = std::move(red);

    if (trackMaps) {
        out.section.resize(newTop + 1);
        out.projection.resize(newTop + 1);
        for (int d = 0; d <= newTop; ++d) {
            SparseMat s(complex.dims[d], out.reduced.dims[d]);
            for (size_t j = 0; j < keptIdx[d].size(); ++j)
                for (const auto& [orig, v] : sec[d][keptIdx[d][j]])
                    s.add(orig, static_cast<int>(j), v);
            s.normalize();
            out.section[d] = std::move(s);
            SparseMat p(out.reduced.dims[d], complex.dims[d]);
            for (int y = 0; y < complex.dims[d]; ++y) {
                if (!alive[d][y]) continue;
                for (const auto& [orig, v] : proj[d][y]) p.add(newId[d][y], orig, v);
            }
            p.normalize();
            out.projection[d] = std::move(p);
        }
    }
    return out;
}

MaskedChainComplex maskedChains(const ProductComplex& product) {
    ChainComplex cc = chains(product.complex);
    MaskedChainComplex m;
    m.dims = std::move(cc.dims);
    m.boundary = std::move(cc.boundary);
    m.labels = std::move(cc.labels);
    m.masks = product.masks;
    m.masks.resize(m.dims.size());
    return m;
}

}  // namespace configspace
