#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "configspace/homology.hpp"
#include "configspace/ordered_complex.hpp"
#include "configspace/product.hpp"

using namespace configspace;

namespace {

// Minimal six-vertex triangulation of the real projective plane.
OrderedComplex projectivePlane() {
    std::vector<std::vector<int>> faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5},
                                           {0, 1, 5}, {1, 2, 4}, {2, 4, 5}, {2, 3, 5},
                                           {1, 3, 5}, {1, 3, 4}};
    return OrderedComplex({"1", "2", "3", "4", "5", "6"}, faces);
}

}  // namespace

TEST_CASE("rank of simple matrices") {
    SparseMat m(3, 3);
    m.add(0, 0, 2);
    m.add(1, 1, 3);
    CHECK(integerRank(m) == 2);

    SparseMat singular(2, 2);
    singular.add(0, 0, 1);
    singular.add(1, 0, 1);
    singular.add(0, 1, 2);
    singular.add(1, 1, 2);
    CHECK(integerRank(singular) == 1);

    SparseMat empty(4, 0);
    CHECK(integerRank(empty) == 0);
}

TEST_CASE("Smith invariant factors of a diagonal-like matrix") {
    SparseMat m(2, 2);
    m.add(0, 0, 2);
    m.add(1, 1, 6);
    auto factors = smithInvariantFactors(m);
    CHECK(factors == std::vector<long long>{2, 6});

    SparseMat mixed(2, 2);
    mixed.add(0, 0, 4);
    mixed.add(1, 1, 6);
    factors = smithInvariantFactors(mixed);
    CHECK(factors == std::vector<long long>{2, 12});
}

TEST_CASE("homology of a point and a circle") {
    CHECK(homology(chains(pointComplex()), CoefficientMode::Rational).betti ==
          std::vector<long long>{1});
    CHECK(homology(chains(cycleGraph(6)), CoefficientMode::Rational).betti ==
          std::vector<long long>{1, 1});
}

TEST_CASE("the hexagon torus agrees with the Kunneth route") {
    auto c6 = cycleGraph(6);
    auto viaProduct =
        homology(chains(staircaseProduct({c6, c6}).complex), CoefficientMode::Rational);
    auto viaTensor = homology(tensor(chains(cycleGraph(3)), chains(cycleGraph(3))),
                              CoefficientMode::Rational);
    CHECK(viaProduct.betti == std::vector<long long>{1, 2, 1});
    CHECK(viaProduct.sameBetti(viaTensor));
}

TEST_CASE("projective plane has two-torsion in degree one") {
    auto rp2 = projectivePlane();
    auto report = rp2.validate();
    REQUIRE(report.ok);
    CHECK(report.fVector == std::vector<long long>{6, 15, 10});
    CHECK(report.euler == 1);
    auto integral = homology(chains(rp2), CoefficientMode::Integral);
    CHECK(integral.betti == std::vector<long long>{1, 0});
    REQUIRE(integral.torsion.has_value());
    CHECK((*integral.torsion)[1] == std::vector<long long>{2});
    CHECK((*integral.torsion)[0].empty());
    // rational and integral ranks agree
    auto rational = homology(chains(rp2), CoefficientMode::Rational);
    CHECK(rational.sameBetti(integral));
}

TEST_CASE("integral and rational ranks agree across a small corpus") {
    std::vector<ChainComplex> corpus = {chains(cycleGraph(5)), chains(fullSimplex(3)),
                                        chains(pathGraph(4)),
                                        tensor(chains(cycleGraph(3)), chains(twoPointComplex()))};
    for (const auto& c : corpus) {
        auto rational = homology(c, CoefficientMode::Rational);
        auto integral = homology(c, CoefficientMode::Integral);
        CHECK(rational.sameBetti(integral));
    }
}

TEST_CASE("masked reduction preserves every filter's homology") {
    auto c3 = cycleGraph(3);
    auto square = staircasePower(c3, 2);
    auto masked = maskedChains(square);
    masked.validate();
    auto reduction = reduceMasked(masked, true);
    reduction.reduced.validate();
    CHECK(reduction.reduced.totalDim() < masked.totalDim());

    uint32_t full = ConstraintSet::allPairs(2).mask();
    auto before = homology(masked.filter(full), CoefficientMode::Rational);
    auto after = homology(reduction.reduced.filter(full), CoefficientMode::Rational);
    CHECK(before.sameBetti(after));
    CHECK(after.betti == std::vector<long long>{1, 1});

    auto beforeAll = homology(masked.filter(0), CoefficientMode::Rational);
    auto afterAll = homology(reduction.reduced.filter(0), CoefficientMode::Rational);
    CHECK(beforeAll.sameBetti(afterAll));
    CHECK(afterAll.betti == std::vector<long long>{1, 2, 1});
}

TEST_CASE("masked reduction section and projection are a retraction") {
    auto p2 = pathGraph(2);
    auto square = staircasePower(p2, 2);
    auto masked = maskedChains(square);
    auto reduction = reduceMasked(masked, true);
    const auto& red = reduction.reduced;
    for (int d = 0; d <= red.topDegree(); ++d) {
        // P S = identity on the reduced complex
        SparseMat ps = multiply(reduction.projection[d], reduction.section[d]);
        CHECK(equalMats(ps, SparseMat::identity(red.dims[d])));
    }
    // S and P are chain maps
    for (int d = 1; d <= red.topDegree(); ++d) {
        SparseMat lhs = multiply(masked.boundary[d], reduction.section[d]);
        SparseMat rhs = multiply(reduction.section[d - 1], red.boundary[d]);
        CHECK(equalMats(lhs, rhs));
        SparseMat lhsP = multiply(red.boundary[d], reduction.projection[d]);
        SparseMat rhsP = multiply(reduction.projection[d - 1], masked.boundary[d]);
        CHECK(equalMats(lhsP, rhsP));
    }
}

TEST_CASE("betti convolution helper") {
    CHECK(convolveBetti({1, 1}, {1, 1}) == std::vector<long long>{1, 2, 1});
    CHECK(convolveBetti({1, 3, 2}, {2, 2}) == std::vector<long long>{2, 8, 10, 4});
}
