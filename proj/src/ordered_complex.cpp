#include "configspace/ordered_complex.hpp"

#include <algorithm>
#include <functional>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace configspace {

OrderedComplex::OrderedComplex(std::vector<std::string> vertexNames,
                               const std::vector<std::vector<int>>& simplices)
    : vertexNames_(std::move(vertexNames)) {
    std::set<std::string> seen;
    for (const auto& name : vertexNames_) {
        if (!seen.insert(name).second)
            throw std::invalid_argument("duplicate vertex name: " + name);
    }
    std::set<std::vector<int>> closed;
    for (const auto& s : simplices) {
        if (s.empty()) throw std::invalid_argument("empty simplex");
        std::vector<int> sorted = s;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("repeated vertex in simplex");
        for (int v : sorted) {
            if (v < 0 || v >= vertexCount())
                throw std::invalid_argument("simplex references undeclared vertex id " +
                                            std::to_string(v));
        }
        // Close under faces: all nonempty subsets.
        int n = static_cast<int>(sorted.size());
        for (unsigned sub = 1; sub < (1u << n); ++sub) {
            std::vector<int> face;
            for (int i = 0; i < n; ++i)
                if (sub & (1u << i)) face.push_back(sorted[i]);
            closed.insert(std::move(face));
        }
    }
    for (const auto& s : closed) {
        int d = static_cast<int>(s.size()) - 1;
        if (d >= static_cast<int>(cells_.size())) cells_.resize(d + 1);
        cells_[d].push_back(s);
    }
    // std::set iteration is already sorted; per-dimension slices inherit it.
}

OrderedComplex OrderedComplex::fromCellsUnchecked(
    std::vector<std::string> vertexNames,
    std::vector<std::vector<std::vector<int>>> cellsByDim) {
    OrderedComplex k;
    k.vertexNames_ = std::move(vertexNames);
    k.cells_ = std::move(cellsByDim);
    while (!k.cells_.empty() && k.cells_.back().empty()) k.cells_.pop_back();
    return k;
}

const std::vector<std::vector<int>>& OrderedComplex::cells(int dim) const {
    static const std::vector<std::vector<int>> empty;
    if (dim < 0 || dim >= static_cast<int>(cells_.size())) return empty;
    return cells_[dim];
}

long long OrderedComplex::cellCount(int dim) const {
    return static_cast<long long>(cells(dim).size());
}

long long OrderedComplex::totalCells() const {
    long long n = 0;
    for (const auto& slice : cells_) n += static_cast<long long>(slice.size());
    return n;
}

bool OrderedComplex::hasCell(const std::vector<int>& sortedVertices) const {
    return cellIndex(sortedVertices) >= 0;
}

int OrderedComplex::cellIndex(const std::vector<int>& sortedVertices) const {
    int d = static_cast<int>(sortedVertices.size()) - 1;
    const auto& slice = cells(d);
    auto it = std::lower_bound(slice.begin(), slice.end(), sortedVertices);
    if (it != slice.end() && *it == sortedVertices)
        return static_cast<int>(it - slice.begin());
    return -1;
}

std::vector<long long> OrderedComplex::fVector() const {
    std::vector<long long> f;
    for (const auto& slice : cells_) f.push_back(static_cast<long long>(slice.size()));
    return f;
}

long long OrderedComplex::eulerCharacteristic() const {
    long long chi = 0;
    long long sign = 1;
    for (const auto& slice : cells_) {
        chi += sign * static_cast<long long>(slice.size());
        sign = -sign;
    }
    return chi;
}

bool OrderedComplex::isGraph() const { return dimension() <= 1; }

int OrderedComplex::vertexDegree(int v) const {
    int deg = 0;
    for (const auto& e : cells(1))
        if (e[0] == v || e[1] == v) ++deg;
    return deg;
}

OrderedComplex::ValidationReport OrderedComplex::validate() const {
    ValidationReport report;
    for (const auto& slice : cells_) {
        for (const auto& s : slice) {
            if (!std::is_sorted(s.begin(), s.end()) ||
                std::adjacent_find(s.begin(), s.end()) != s.end()) {
                report.ok = false;
                report.error = "simplex vertex list is not strictly increasing";
                report.offendingSimplex = s;
                return report;
            }
            for (int v : s) {
                if (v < 0 || v >= vertexCount()) {
                    report.ok = false;
                    report.error = "simplex references undeclared vertex id " + std::to_string(v);
                    report.offendingSimplex = s;
                    return report;
                }
            }
            if (s.size() > 1) {
                for (size_t i = 0; i < s.size(); ++i) {
                    std::vector<int> face;
                    for (size_t j = 0; j < s.size(); ++j)
                        if (j != i) face.push_back(s[j]);
                    if (!hasCell(face)) {
                        report.ok = false;
                        report.error = "missing face of simplex";
                        report.offendingSimplex = s;
                        return report;
                    }
                }
            }
        }
    }
    report.fVector = fVector();
    report.euler = eulerCharacteristic();
    return report;
}

void SimplicialMap::validate() const {
    if (source == nullptr || target == nullptr)
        throw std::invalid_argument("simplicial map missing source or target");
    if (static_cast<int>(vertexAssignment.size()) != source->vertexCount())
        throw std::invalid_argument("vertex assignment size mismatch");
    for (int v : vertexAssignment)
        if (v < 0 || v >= target->vertexCount())
            throw std::invalid_argument("vertex assignment out of range");
    for (int d = 0; d <= source->dimension(); ++d) {
        for (const auto& s : source->cells(d)) {
            if (!target->hasCell(imageSimplex(s)))
                throw std::invalid_argument(
                    "image of a simplex does not span a simplex of the target");
        }
    }
}

std::vector<int> SimplicialMap::imageSimplex(const std::vector<int>& simplex) const {
    std::vector<int> image;
    image.reserve(simplex.size());
    for (int v : simplex) image.push_back(vertexAssignment[v]);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    return image;
}

bool SimplicialMap::operator==(const SimplicialMap& other) const {
    return source == other.source && target == other.target &&
           vertexAssignment == other.vertexAssignment;
}

SimplicialMap composeMaps(const SimplicialMap& first, const SimplicialMap& second) {
    if (first.target != second.source)
        throw std::invalid_argument("composeMaps: target/source mismatch");
    SimplicialMap composed;
    composed.source = first.source;
    composed.target = second.target;
    composed.vertexAssignment.reserve(first.vertexAssignment.size());
    for (int v : first.vertexAssignment)
        composed.vertexAssignment.push_back(second.vertexAssignment[v]);
    return composed;
}

SimplicialMap identityMap(const OrderedComplex& k) {
    SimplicialMap m;
    m.source = &k;
    m.target = &k;
    m.vertexAssignment.resize(k.vertexCount());
    for (int v = 0; v < k.vertexCount(); ++v) m.vertexAssignment[v] = v;
    return m;
}

int pairBit(int u, int v) {
    if (v >= u || v < 1) throw std::invalid_argument("pairBit: need u > v >= 1");
    return (u - 1) * (u - 2) / 2 + (v - 1);
}

ConstraintSet::ConstraintSet(int arity, std::vector<std::pair<int, int>> pairs)
    : arity_(arity), pairs_(std::move(pairs)) {
    if (arity_ < 1) throw std::invalid_argument("constraint arity must be positive");
    for (auto& [u, v] : pairs_) {
        if (v > u) std::swap(u, v);
        if (v < 1 || u > arity_ || u == v)
            throw std::invalid_argument("constraint pair out of range");
    }
    std::sort(pairs_.begin(), pairs_.end());
    if (std::adjacent_find(pairs_.begin(), pairs_.end()) != pairs_.end())
        throw std::invalid_argument("duplicate constraint pair");
    for (const auto& [u, v] : pairs_) mask_ |= 1u << pairBit(u, v);
}

ConstraintSet ConstraintSet::allPairs(int arity) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 2; u <= arity; ++u)
        for (int v = 1; v < u; ++v) pairs.emplace_back(u, v);
    return ConstraintSet(arity, std::move(pairs));
}

bool ConstraintSet::contains(int u, int v) const {
    if (v > u) std::swap(u, v);
    return std::binary_search(pairs_.begin(), pairs_.end(), std::make_pair(u, v));
}

bool ConstraintSet::containsAll(const ConstraintSet& other) const {
    return (mask_ & other.mask_) == other.mask_;
}

ConstraintSet ConstraintSet::withPair(int u, int v) const {
    if (v > u) std::swap(u, v);
    if (contains(u, v)) return *this;
    auto pairs = pairs_;
    pairs.emplace_back(u, v);
    return ConstraintSet(arity_, std::move(pairs));
}

std::string ConstraintSet::describe() const {
    std::ostringstream out;
    out << "{";
    for (size_t i = 0; i < pairs_.size(); ++i) {
        if (i) out << ",";
        out << "(" << pairs_[i].first << "," << pairs_[i].second << ")";
    }
    out << "}";
    return out.str();
}

OrderedComplex barycentricSubdivide(const OrderedComplex& k, int rounds) {
    if (rounds < 0) throw std::invalid_argument("rounds must be >= 0");
    OrderedComplex current = k;
    for (int round = 0; round < rounds; ++round) {
        // Vertices of the subdivision: simplices of `current`, ordered
        // lexicographically as vertex-id vectors.
        std::vector<std::vector<int>> faces;
        for (int d = 0; d <= current.dimension(); ++d)
            for (const auto& s : current.cells(d)) faces.push_back(s);
        std::sort(faces.begin(), faces.end());
        std::map<std::vector<int>, int> faceId;
        std::vector<std::string> names;
        for (const auto& f : faces) {
            faceId[f] = static_cast<int>(names.size());
            std::string name = "<";
            for (size_t i = 0; i < f.size(); ++i) {
                if (i) name += ",";
                name += current.vertexName(f[i]);
            }
            name += ">";
            names.push_back(name);
        }
        // Simplices: strict chains of faces under inclusion.
        std::vector<std::vector<int>> chains;
        std::vector<int> chain;
        auto isFace = [](const std::vector<int>& a, const std::vector<int>& b) {
            return a.size() < b.size() &&
                   std::includes(b.begin(), b.end(), a.begin(), a.end());
        };
        std::function<void(size_t)> extend = [&](size_t last) {
            chains.push_back(chain);
            for (size_t next = 0; next < faces.size(); ++next) {
                if (isFace(faces[last], faces[next])) {
                    chain.push_back(faceId[faces[next]]);
                    extend(next);
                    chain.pop_back();
                }
            }
        };
        for (size_t i = 0; i < faces.size(); ++i) {
            chain.assign(1, faceId[faces[i]]);
            extend(i);
        }
        current = OrderedComplex(std::move(names), chains);
    }
    return current;
}

OrderedComplex subdivideEdges(const OrderedComplex& k, int factor) {
    if (factor < 1) throw std::invalid_argument("subdivision factor must be >= 1");
    if (!k.isGraph()) throw std::invalid_argument("subdivideEdges requires a graph");
    if (factor == 1) return k;
    std::vector<std::string> names = k.vertexNames();
    std::vector<std::vector<int>> simplices;
    for (const auto& v : k.cells(0)) simplices.push_back(v);
    for (const auto& e : k.cells(1)) {
        std::vector<int> stops;
        stops.push_back(e[0]);
        for (int i = 1; i < factor; ++i) {
            stops.push_back(static_cast<int>(names.size()));
            names.push_back(k.vertexName(e[0]) + "_" + k.vertexName(e[1]) + "_" +
                            std::to_string(i));
        }
        stops.push_back(e[1]);
        for (size_t i = 0; i + 1 < stops.size(); ++i)
            simplices.push_back({stops[i], stops[i + 1]});
    }
    return OrderedComplex(std::move(names), simplices);
}

OrderedComplex pointComplex() { return OrderedComplex({"p"}, {{0}}); }

OrderedComplex twoPointComplex() { return OrderedComplex({"p", "q"}, {{0}, {1}}); }

OrderedComplex pathGraph(int edges) {
    if (edges < 0) throw std::invalid_argument("negative edge count");
    std::vector<std::string> names;
    for (int i = 0; i <= edges; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::vector<int>> simplices;
    if (edges == 0) simplices.push_back({0});
    for (int i = 0; i < edges; ++i) simplices.push_back({i, i + 1});
    return OrderedComplex(std::move(names), simplices);
}

OrderedComplex cycleGraph(int edges) {
    if (edges < 3) throw std::invalid_argument("cycle needs at least 3 edges");
    std::vector<std::string> names;
    for (int i = 0; i < edges; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::vector<int>> simplices;
    for (int i = 0; i < edges; ++i) simplices.push_back({i, (i + 1) % edges});
    return OrderedComplex(std::move(names), simplices);
}

OrderedComplex fullSimplex(int dimension) {
    if (dimension < 0) throw std::invalid_argument("negative dimension");
    std::vector<std::string> names;
    std::vector<int> top;
    for (int i = 0; i <= dimension; ++i) {
        names.push_back("v" + std::to_string(i));
        top.push_back(i);
    }
    return OrderedComplex(std::move(names), {top});
}

OrderedComplex parseComplex(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    std::vector<std::string> names;
    std::map<std::string, int> idOf;
    std::vector<std::vector<int>> simplices;
    while (std::getline(in, line)) {
        ++lineNo;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word[0] == '#') continue;
        if (word == "vertex") {
            std::string token;
            if (!(ls >> token)) throw ComplexParseError{lineNo, "vertex line without a token"};
            if (idOf.count(token))
                throw ComplexParseError{lineNo, "duplicate vertex token: " + token};
            idOf[token] = static_cast<int>(names.size());
            names.push_back(token);
        } else if (word == "simplex") {
            std::vector<int> s;
            std::string token;
            while (ls >> token) {
                auto it = idOf.find(token);
                if (it == idOf.end())
                    throw ComplexParseError{lineNo, "undeclared vertex token: " + token};
                s.push_back(it->second);
            }
            if (s.empty()) throw ComplexParseError{lineNo, "simplex line without vertices"};
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw ComplexParseError{lineNo, "repeated vertex in simplex"};
            simplices.push_back(std::move(s));
        } else {
            throw ComplexParseError{lineNo, "unknown directive: " + word};
        }
    }
    return OrderedComplex(std::move(names), simplices);
}

OrderedComplex loadComplex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ComplexParseError{0, "cannot open file: " + path};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parseComplex(buffer.str());
}

std::string formatComplex(const OrderedComplex& k) {
    std::ostringstream out;
    for (const auto& name : k.vertexNames()) out << "vertex " << name << "\n";
    // Emitting top cells only keeps files small; faces close on load.
    std::set<std::vector<int>> nonMaximal;
    for (int d = 0; d <= k.dimension(); ++d) {
        for (const auto& s : k.cells(d)) {
            if (s.size() > 1) {
                for (size_t i = 0; i < s.size(); ++i) {
                    std::vector<int> face;
                    for (size_t j = 0; j < s.size(); ++j)
                        if (j != i) face.push_back(s[j]);
                    nonMaximal.insert(face);
                }
            }
        }
    }
    for (int d = 0; d <= k.dimension(); ++d) {
        for (const auto& s : k.cells(d)) {
            if (nonMaximal.count(s)) continue;
            out << "simplex";
            for (int v : s) out << " " << k.vertexName(v);
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace configspace
