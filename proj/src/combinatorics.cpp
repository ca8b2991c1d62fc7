#include "configspace/combinatorics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace configspace {

void IndexTuple::validate() const {
    for (size_t m = 0; m < entries.size(); ++m) {
        int bound = 2 * static_cast<int>(m + 2) - 3;  // entry i_{m+2} lies in {1,...,2(m+2)-3}
        int value = entries[m];
        if (value < 1 || value > bound || value % 2 == 0)
            throw std::invalid_argument("index tuple entry " + std::to_string(m + 2) +
                                        " out of range: " + std::to_string(value));
    }
}

std::string IndexTuple::describe() const {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) out << ",";
        out << entries[i];
    }
    out << ")";
    return out.str();
}

std::vector<IndexTuple> enumerateIndexTuples(int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    std::vector<IndexTuple> tuples{IndexTuple{}};
    for (int m = 2; m <= k; ++m) {
        std::vector<IndexTuple> extended;
        extended.reserve(tuples.size() * m);
        for (const auto& t : tuples) {
            for (int entry = 1; entry <= 2 * m - 1; entry += 2) {
                IndexTuple longer = t;
                longer.entries.push_back(entry);
                extended.push_back(std::move(longer));
            }
        }
        tuples = std::move(extended);
    }
    // The construction is lexicographic already; keep it explicit anyway.
    std::sort(tuples.begin(), tuples.end(),
              [](const IndexTuple& a, const IndexTuple& b) { return a.entries < b.entries; });
    return tuples;
}

std::vector<Rational> heights(const IndexTuple& tuple) {
    tuple.validate();
    std::vector<Rational> t{Rational(0)};
    for (size_t m = 0; m < tuple.entries.size(); ++m) {
        int k = static_cast<int>(t.size());  // particles placed so far
        int alpha = (tuple.entries[m] - 1) / 2;
        // Sort current particles by height to locate the selected gap.
        std::vector<int> order(k);
        for (int i = 0; i < k; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return t[a] < t[b]; });
        Rational next;
        if (alpha == 0) {
            next = Rational(-k);
        } else if (alpha == k) {
            next = Rational(k);
        } else {
            next = (t[order[alpha - 1]] + t[order[alpha]]) / 2;
        }
        t.push_back(next);
    }
    return t;
}

std::vector<int> ranks(const IndexTuple& tuple) {
    std::vector<Rational> t = heights(tuple);
    int k = static_cast<int>(t.size());
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return t[a] < t[b]; });
    std::vector<int> j(k);
    for (int p = 0; p < k; ++p) j[p] = order[p] + 1;  // particles are 1-based
    return j;
}

std::vector<int> wallRelabel(int p, int size) {
    if (p < 1 || p > size) throw std::invalid_argument("wallRelabel position out of range");
    std::vector<int> perm(size + 1);
    for (int i = 0; i < size + 1; ++i) perm[i] = i + 1;
    std::swap(perm[p - 1], perm[p]);
    return perm;
}

std::string formatRational(const Rational& r) {
    std::ostringstream out;
    out << r.numerator();
    if (r.denominator() != 1) out << "/" << r.denominator();
    return out.str();
}

std::string formatHeights(const std::vector<Rational>& h) {
    std::ostringstream out;
    for (size_t i = 0; i < h.size(); ++i) {
        if (i) out << ",";
        out << formatRational(h[i]);
    }
    return out.str();
}

std::string formatPermutation(const std::vector<int>& perm) {
    std::ostringstream out;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (i) out << ",";
        out << perm[i];
    }
    return out.str();
}

}  // namespace configspace
