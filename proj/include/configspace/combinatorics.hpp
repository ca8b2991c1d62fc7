#pragma once

#include <boost/rational.hpp>
#include <string>
#include <vector>

namespace configspace {

using Rational = boost::rational<long long>;

/// An element (i_2, ..., i_k) of the index set for k particles: entry i_m is
/// odd with 1 <= i_m <= 2m-1.  The tuple for k = 1 is empty.
struct IndexTuple {
    std::vector<int> entries;

    int particleCount() const { return static_cast<int>(entries.size()) + 1; }
    void validate() const;
    std::string describe() const;
};

/// All index tuples for k particles in lexicographic order; there are k! of
/// them.
std::vector<IndexTuple> enumerateIndexTuples(int k);

/// The representative height configuration of an index tuple: t_1 = 0 and
/// t_{m+1} placed by the recursion (below everything, above everything, or at
/// the midpoint of the gap selected by the tuple entry).  Heights are exact
/// rationals, pairwise distinct, with |t_m| <= m-1.
std::vector<Rational> heights(const IndexTuple& tuple);

/// The permutation (j_1, ..., j_k) listing particles by increasing height:
/// j_p is the particle of rank p.
std::vector<int> ranks(const IndexTuple& tuple);

/// The transposition swapping rank positions p and p+1 on {1, ..., size+1}
/// (1-based, returned as a 0-indexed vector of targets): the index
/// translation between the deeper wall labels on the two sides of a wall
/// crossing at rank position p.
std::vector<int> wallRelabel(int p, int size);

std::string formatRational(const Rational& r);
std::string formatHeights(const std::vector<Rational>& h);
std::string formatPermutation(const std::vector<int>& perm);

}  // namespace configspace
