#include "configspace/chain_complex.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "configspace/arith.hpp"

namespace configspace {

void SparseMat::add(int r, int c, long long value) {
    if (value == 0) return;
    if (r < 0 || r >= rows || c < 0 || c >= cols)
        throw std::out_of_range("SparseMat::add out of range");
    col[c].emplace_back(r, value);
}

void SparseMat::normalize() {
    for (auto& column : col) {
        std::sort(column.begin(), column.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<int, long long>> merged;
        for (const auto& [r, v] : column) {
            if (!merged.empty() && merged.back().first == r)
                merged.back().second = checkedAdd(merged.back().second, v);
            else
                merged.emplace_back(r, v);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const auto& e) { return e.second == 0; }),
                     merged.end());
        column = std::move(merged);
    }
}

bool SparseMat::isZero() const {
    for (const auto& column : col)
        for (const auto& [r, v] : column)
            if (v != 0) return false;
    return true;
}

long long SparseMat::entry(int r, int c) const {
    long long sum = 0;
    for (const auto& [row, v] : col[c])
        if (row == r) sum = checkedAdd(sum, v);
    return sum;
}

SparseMat SparseMat::identity(int n) {
    SparseMat m(n, n);
    for (int i = 0; i < n; ++i) m.add(i, i, 1);
    return m;
}

SparseMat multiply(const SparseMat& a, const SparseMat& b) {
    if (a.cols != b.rows) throw std::invalid_argument("multiply: shape mismatch");
    SparseMat result(a.rows, b.cols);
    std::vector<long long> work(a.rows, 0);
    std::vector<int> touched;
    for (int j = 0; j < b.cols; ++j) {
        touched.clear();
        for (const auto& [k, bv] : b.col[j]) {
            for (const auto& [r, av] : a.col[k]) {
                if (work[r] == 0 && av != 0) touched.push_back(r);
                work[r] = checkedAdd(work[r], checkedMul(av, bv));
            }
        }
        std::sort(touched.begin(), touched.end());
        for (int r : touched) {
            if (work[r] != 0) result.col[j].emplace_back(r, work[r]);
            work[r] = 0;
        }
    }
    return result;
}

SparseMat addMats(const SparseMat& a, const SparseMat& b, long long scaleB) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("addMats: shape mismatch");
    SparseMat result(a.rows, a.cols);
    for (int j = 0; j < a.cols; ++j) {
        for (const auto& [r, v] : a.col[j]) result.col[j].emplace_back(r, v);
        for (const auto& [r, v] : b.col[j])
            result.col[j].emplace_back(r, checkedMul(v, scaleB));
    }
    result.normalize();
    return result;
}

bool equalMats(const SparseMat& a, const SparseMat& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    SparseMat x = a, y = b;
    x.normalize();
    y.normalize();
    for (int j = 0; j < x.cols; ++j)
        if (x.col[j] != y.col[j]) return false;
    return true;
}

long long ChainComplex::totalDim() const {
    long long n = 0;
    for (int d : dims) n += d;
    return n;
}

long long ChainComplex::euler() const {
    long long chi = 0;
    long long sign = 1;
    for (int d : dims) {
        chi += sign * d;
        sign = -sign;
    }
    return chi;
}

std::string ChainComplex::label(int degree, int index) const {
    if (degree < static_cast<int>(labels.size()) &&
        index < static_cast<int>(labels[degree].size()))
        return labels[degree][index];
    return "d" + std::to_string(degree) + ":" + std::to_string(index);
}

void ChainComplex::validate() const {
    if (boundary.size() != dims.size())
        throw std::invalid_argument("boundary vector size mismatch");
    for (int d = 1; d <= topDegree(); ++d) {
        if (boundary[d].cols != dims[d] || boundary[d].rows != dims[d - 1])
            throw std::invalid_argument("boundary matrix shape mismatch at degree " +
                                        std::to_string(d));
    }
    for (int d = 2; d <= topDegree(); ++d) {
        if (!multiply(boundary[d - 1], boundary[d]).isZero())
            throw std::invalid_argument("boundary does not square to zero at degree " +
                                        std::to_string(d));
    }
}

ChainComplex ChainComplex::zero() { return ChainComplex{}; }

void ChainMap::validate() const {
    int top = std::max(source.topDegree(), target.topDegree());
    for (int d = 0; d <= top; ++d) {
        const SparseMat m = matrixAt(d);
        if (m.cols != source.dim(d) || m.rows != target.dim(d))
            throw std::invalid_argument("chain map shape mismatch at degree " +
                                        std::to_string(d));
    }
    for (int d = 1; d <= source.topDegree(); ++d) {
        // target boundary . f_d == f_{d-1} . source boundary
        SparseMat lhs = (d <= target.topDegree())
                            ? multiply(target.boundary[d], matrixAt(d))
                            : SparseMat(target.dim(d - 1), source.dim(d));
        SparseMat rhs = multiply(matrixAt(d - 1), source.boundary[d]);
        if (!equalMats(lhs, rhs))
            throw std::invalid_argument("chain map does not commute with boundaries at degree " +
                                        std::to_string(d));
    }
}

SparseMat ChainMap::matrixAt(int degree) const {
    if (degree >= 0 && degree < static_cast<int>(mat.size())) return mat[degree];
    return SparseMat(target.dim(degree), source.dim(degree));
}

ChainComplex chains(const OrderedComplex& k) {
    ChainComplex c;
    int top = k.dimension();
    if (top < 0) return c;
    c.dims.resize(top + 1);
    c.labels.resize(top + 1);
    c.boundary.resize(top + 1);
    for (int d = 0; d <= top; ++d) {
        const auto& slice = k.cells(d);
        c.dims[d] = static_cast<int>(slice.size());
        c.labels[d].reserve(slice.size());
        for (const auto& s : slice) {
            std::string name;
            for (size_t i = 0; i < s.size(); ++i) {
                if (i) name += "|";
                name += k.vertexName(s[i]);
            }
            c.labels[d].push_back(std::move(name));
        }
    }
    for (int d = 1; d <= top; ++d) {
        SparseMat m(c.dims[d - 1], c.dims[d]);
        const auto& slice = k.cells(d);
        for (size_t j = 0; j < slice.size(); ++j) {
            const auto& s = slice[j];
            long long sign = 1;
            for (size_t i = 0; i < s.size(); ++i) {
                std::vector<int> face;
                face.reserve(s.size() - 1);
                for (size_t t = 0; t < s.size(); ++t)
                    if (t != i) face.push_back(s[t]);
                int row = k.cellIndex(face);
                if (row < 0) throw std::logic_error("face missing from complex");
                m.add(row, static_cast<int>(j), sign);
                sign = -sign;
            }
        }
        m.normalize();
        c.boundary[d] = std::move(m);
    }
    return c;
}

ChainMap inducedMap(const SimplicialMap& f) {
    f.validate();
    ChainMap map;
    map.source = chains(*f.source);
    map.target = chains(*f.target);
    int top = f.source->dimension();
    map.mat.resize(std::max(top + 1, 0));
    for (int d = 0; d <= top; ++d) {
        SparseMat m(map.target.dim(d), map.source.dim(d));
        const auto& slice = f.source->cells(d);
        for (size_t j = 0; j < slice.size(); ++j) {
            std::vector<int> image;
            image.reserve(slice[j].size());
            for (int v : slice[j]) image.push_back(f.vertexAssignment[v]);
            // Degenerate images vanish; otherwise the sign of the sorting
            // permutation (inversion count) is the coefficient.
            bool degenerate = false;
            long long inversions = 0;
            for (size_t a = 0; a < image.size() && !degenerate; ++a) {
                for (size_t b = a + 1; b < image.size(); ++b) {
                    if (image[a] == image[b]) {
                        degenerate = true;
                        break;
                    }
                    if (image[a] > image[b]) ++inversions;
                }
            }
            if (degenerate) continue;
            std::vector<int> sorted = image;
            std::sort(sorted.begin(), sorted.end());
            int row = f.target->cellIndex(sorted);
            if (row < 0) throw std::logic_error("image simplex missing from target");
            m.add(row, static_cast<int>(j), (inversions % 2 == 0) ? 1 : -1);
        }
        m.normalize();
        map.mat[d] = std::move(m);
    }
    return map;
}

ChainComplex shift(const ChainComplex& c, int n) {
    ChainComplex shifted;
    if (n < 0) {
        for (int d = 0; d < -n && d <= c.topDegree(); ++d)
            if (c.dims[d] > 0)
                throw std::invalid_argument("shift would create negative degrees");
    }
    int top = c.topDegree();
    if (top < 0) return shifted;
    int newTop = top + n;
    if (newTop < 0) return shifted;
    shifted.dims.assign(newTop + 1, 0);
    shifted.labels.resize(newTop + 1);
    shifted.boundary.resize(newTop + 1);
    for (int d = 0; d <= top; ++d) {
        int nd = d + n;
        if (nd < 0) continue;
        shifted.dims[nd] = c.dims[d];
        if (d < static_cast<int>(c.labels.size())) shifted.labels[nd] = c.labels[d];
        if (d >= 1 && d + n >= 1 && d - 1 + n >= 0) shifted.boundary[nd] = c.boundary[d];
        else shifted.boundary[nd] = SparseMat(nd > 0 ? shifted.dims[nd - 1] : 0, shifted.dims[nd]);
    }
    for (int d = 1; d <= newTop; ++d) {
        if (shifted.boundary[d].cols != shifted.dims[d] ||
            shifted.boundary[d].rows != shifted.dims[d - 1])
            shifted.boundary[d] = SparseMat(shifted.dims[d - 1], shifted.dims[d]);
    }
    return shifted;
}

ChainComplex directSum(const ChainComplex& a, const ChainComplex& b) {
    ChainComplex sum;
    int top = std::max(a.topDegree(), b.topDegree());
    if (top < 0) return sum;
    sum.dims.resize(top + 1);
    sum.labels.resize(top + 1);
    sum.boundary.resize(top + 1);
    for (int d = 0; d <= top; ++d) {
        sum.dims[d] = a.dim(d) + b.dim(d);
        sum.labels[d].resize(sum.dims[d]);
        for (int i = 0; i < a.dim(d); ++i) sum.labels[d][i] = "L." + a.label(d, i);
        for (int i = 0; i < b.dim(d); ++i) sum.labels[d][a.dim(d) + i] = "R." + b.label(d, i);
    }
    for (int d = 1; d <= top; ++d) {
        SparseMat m(sum.dims[d - 1], sum.dims[d]);
        if (d <= a.topDegree()) {
            for (int j = 0; j < a.dim(d); ++j)
                for (const auto& [r, v] : a.boundary[d].col[j]) m.add(r, j, v);
        }
        if (d <= b.topDegree()) {
            for (int j = 0; j < b.dim(d); ++j)
                for (const auto& [r, v] : b.boundary[d].col[j])
                    m.add(a.dim(d - 1) + r, a.dim(d) + j, v);
        }
        m.normalize();
        sum.boundary[d] = std::move(m);
    }
    return sum;
}

namespace {

// Index bookkeeping for tensor bases: degree n splits into blocks
// (i, n-i) ordered by ascending i, each block row-major in (a, b).
struct TensorIndex {
    const ChainComplex* a;
    const ChainComplex* b;
    int top;

    int blockStart(int n, int i) const {
        int start = 0;
        for (int k = 0; k < i; ++k) start += a->dim(k) * b->dim(n - k);
        return start;
    }
    int dim(int n) const {
        int total = 0;
        for (int i = 0; i <= n; ++i) total += a->dim(i) * b->dim(n - i);
        return total;
    }
    int id(int i, int j, int ai, int bi) const {
        return blockStart(i + j, i) + ai * b->dim(j) + bi;
    }
};

}  // namespace

ChainComplex tensor(const ChainComplex& a, const ChainComplex& b) {
    ChainComplex t;
    if (a.topDegree() < 0 || b.topDegree() < 0) return t;
    int top = a.topDegree() + b.topDegree();
    TensorIndex ix{&a, &b, top};
    t.dims.resize(top + 1);
    t.labels.resize(top + 1);
    t.boundary.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        t.dims[n] = ix.dim(n);
        t.labels[n].reserve(t.dims[n]);
        for (int i = 0; i <= n; ++i)
            for (int ai = 0; ai < a.dim(i); ++ai)
                for (int bi = 0; bi < b.dim(n - i); ++bi)
                    t.labels[n].push_back(a.label(i, ai) + "(x)" + b.label(n - i, bi));
    }
    for (int n = 1; n <= top; ++n) {
        SparseMat m(t.dims[n - 1], t.dims[n]);
        for (int i = 0; i <= n; ++i) {
            int j = n - i;
            for (int ai = 0; ai < a.dim(i); ++ai) {
                for (int bi = 0; bi < b.dim(j); ++bi) {
                    int colId = ix.id(i, j, ai, bi);
                    if (i >= 1) {
                        for (const auto& [r, v] : a.boundary[i].col[ai])
                            m.add(ix.id(i - 1, j, r, bi), colId, v);
                    }
                    if (j >= 1) {
                        long long sign = (i % 2 == 0) ? 1 : -1;
                        for (const auto& [r, v] : b.boundary[j].col[bi])
                            m.add(ix.id(i, j - 1, ai, r), colId, checkedMul(sign, v));
                    }
                }
            }
        }
        m.normalize();
        t.boundary[n] = std::move(m);
    }
    return t;
}

ChainMap tensorMaps(const ChainMap& f, const ChainMap& g) {
    ChainMap result;
    result.source = tensor(f.source, g.source);
    result.target = tensor(f.target, g.target);
    int top = result.source.topDegree();
    result.mat.resize(std::max(top + 1, 0));
    TensorIndex sx{&f.source, &g.source, top};
    TensorIndex tx{&f.target, &g.target, result.target.topDegree()};
    for (int n = 0; n <= top; ++n) {
        SparseMat m(result.target.dim(n), result.source.dim(n));
        for (int i = 0; i <= n; ++i) {
            int j = n - i;
            const SparseMat fi = f.matrixAt(i);
            const SparseMat gj = g.matrixAt(j);
            for (int ai = 0; ai < f.source.dim(i); ++ai) {
                for (int bi = 0; bi < g.source.dim(j); ++bi) {
                    int colId = sx.id(i, j, ai, bi);
                    for (const auto& [ra, va] : fi.col[ai])
                        for (const auto& [rb, vb] : gj.col[bi])
                            m.add(tx.id(i, j, ra, rb), colId, checkedMul(va, vb));
                }
            }
        }
        m.normalize();
        result.mat[n] = std::move(m);
    }
    return result;
}

ChainComplex mappingCone(const ChainMap& f) {
    const ChainComplex& src = f.source;
    const ChainComplex& tgt = f.target;
    ChainComplex cone;
    int top = std::max(src.topDegree() + 1, tgt.topDegree());
    if (top < 0) return cone;
    cone.dims.resize(top + 1);
    cone.labels.resize(top + 1);
    cone.boundary.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        int srcPart = (n >= 1) ? src.dim(n - 1) : 0;
        cone.dims[n] = srcPart + tgt.dim(n);
        cone.labels[n].resize(cone.dims[n]);
        for (int i = 0; i < srcPart; ++i) cone.labels[n][i] = "cone." + src.label(n - 1, i);
        for (int i = 0; i < tgt.dim(n); ++i) cone.labels[n][srcPart + i] = tgt.label(n, i);
    }
    for (int n = 1; n <= top; ++n) {
        SparseMat m(cone.dims[n - 1], cone.dims[n]);
        int srcPart = src.dim(n - 1);
        int srcPartBelow = (n >= 2) ? src.dim(n - 2) : 0;
        // source copy: c -> (-dc, -f c)
        for (int j = 0; j < srcPart; ++j) {
            if (n - 1 >= 1) {
                for (const auto& [r, v] : src.boundary[n - 1].col[j]) m.add(r, j, -v);
            }
            const SparseMat fm = f.matrixAt(n - 1);
            for (const auto& [r, v] : fm.col[j]) m.add(srcPartBelow + r, j, -v);
        }
        // target copy: x -> dx
        if (n <= tgt.topDegree()) {
            for (int j = 0; j < tgt.dim(n); ++j)
                for (const auto& [r, v] : tgt.boundary[n].col[j])
                    m.add(srcPartBelow + r, srcPart + j, v);
        }
        m.normalize();
        cone.boundary[n] = std::move(m);
    }
    return cone;
}

ChainMap identityChainMap(const ChainComplex& c) {
    ChainMap map;
    map.source = c;
    map.target = c;
    map.mat.resize(c.topDegree() + 1);
    for (int d = 0; d <= c.topDegree(); ++d) map.mat[d] = SparseMat::identity(c.dim(d));
    return map;
}

ChainMap augmentationMap(const ChainComplex& c) {
    ChainMap map;
    map.source = c;
    map.target = chains(pointComplex());
    map.mat.resize(1);
    SparseMat m(1, c.dim(0));
    for (int j = 0; j < c.dim(0); ++j) m.add(0, j, 1);
    map.mat[0] = std::move(m);
    return map;
}

std::string formatChainComplex(const ChainComplex& c) {
    std::ostringstream out;
    out << "chaincomplex\n";
    out << "dims";
    for (int d : c.dims) out << " " << d;
    out << "\n";
    for (int d = 0; d <= c.topDegree(); ++d)
        for (int i = 0; i < c.dim(d); ++i)
            out << "label " << d << " " << i << " " << c.label(d, i) << "\n";
    for (int d = 1; d <= c.topDegree(); ++d) {
        SparseMat m = c.boundary[d];
        m.normalize();
        for (int j = 0; j < m.cols; ++j)
            for (const auto& [r, v] : m.col[j])
                out << "entry " << d << " " << r << " " << j << " " << v << "\n";
    }
    return out.str();
}

ChainComplex parseChainComplex(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    ChainComplex c;
    bool sawHeader = false;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "chaincomplex") {
            sawHeader = true;
        } else if (word == "dims") {
            int d;
            while (ls >> d) c.dims.push_back(d);
            c.labels.resize(c.dims.size());
            c.boundary.resize(c.dims.size());
            for (size_t i = 0; i < c.dims.size(); ++i) {
                c.labels[i].resize(c.dims[i]);
                c.boundary[i] = SparseMat(i > 0 ? c.dims[i - 1] : 0, c.dims[i]);
            }
        } else if (word == "label") {
            int d, i;
            if (!(ls >> d >> i)) throw std::invalid_argument("bad label line " + std::to_string(lineNo));
            std::string rest;
            std::getline(ls, rest);
            if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
            if (d < 0 || d > c.topDegree() || i < 0 || i >= c.dim(d))
                throw std::invalid_argument("label out of range at line " + std::to_string(lineNo));
            c.labels[d][i] = rest;
        } else if (word == "entry") {
            int d, r, j;
            long long v;
            if (!(ls >> d >> r >> j >> v))
                throw std::invalid_argument("bad entry line " + std::to_string(lineNo));
            if (d < 1 || d > c.topDegree())
                throw std::invalid_argument("entry degree out of range at line " +
                                            std::to_string(lineNo));
            c.boundary[d].add(r, j, v);
        } else {
            throw std::invalid_argument("unknown directive at line " + std::to_string(lineNo));
        }
    }
    if (!sawHeader) throw std::invalid_argument("missing chaincomplex header");
    for (auto& m : c.boundary) m.normalize();
    return c;
}

}  // namespace configspace
