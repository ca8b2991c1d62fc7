#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "configspace/config_models.hpp"
#include "configspace/suspension.hpp"
#include "configspace/tower.hpp"

using namespace configspace;

namespace {

std::vector<long long> towerBetti(const OrderedComplex& base, int k) {
    TowerOptions opts;
    opts.wantProjection = false;
    auto tower = assembleTower(base, k, opts);
    return homology(tower.complex, CoefficientMode::Rational).betti;
}

}  // namespace

TEST_CASE("base zigzag for two particles") {
    auto level = baseZigzag(IndexTuple{}, 2);
    REQUIRE(level.nodes.size() == 3);
    CHECK(level.at(1).pairs().empty());
    CHECK(level.at(2).pairs() == std::vector<std::pair<int, int>>{{2, 1}});
    CHECK(level.at(3).pairs().empty());
}

TEST_CASE("base zigzag constraints follow the rank permutation") {
    auto left = baseZigzag(IndexTuple{{1}}, 3);
    REQUIRE(left.nodes.size() == 5);
    CHECK(left.at(2).pairs() == std::vector<std::pair<int, int>>{{3, 2}});
    CHECK(left.at(4).pairs() == std::vector<std::pair<int, int>>{{3, 1}});

    auto right = baseZigzag(IndexTuple{{3}}, 3);
    CHECK(right.at(2).pairs() == std::vector<std::pair<int, int>>{{3, 1}});
    CHECK(right.at(4).pairs() == std::vector<std::pair<int, int>>{{3, 2}});
}

TEST_CASE("restriction adds the extra pair everywhere") {
    auto level = baseZigzag(IndexTuple{{1}}, 3);
    auto restricted = restrictDiagram(level, {2, 1});
    CHECK(restricted.at(1).pairs() == std::vector<std::pair<int, int>>{{2, 1}});
    CHECK(restricted.at(2).pairs() == std::vector<std::pair<int, int>>{{2, 1}, {3, 2}});
    CHECK(restricted.at(3).pairs() == std::vector<std::pair<int, int>>{{2, 1}});
    CHECK(restricted.at(4).pairs() == std::vector<std::pair<int, int>>{{2, 1}, {3, 1}});
    CHECK(restricted.at(5).pairs() == std::vector<std::pair<int, int>>{{2, 1}});

    // restricting by an already-present pair is idempotent
    auto twice = restrictDiagram(restricted, {2, 1});
    for (size_t i = 0; i < twice.nodes.size(); ++i)
        CHECK(twice.nodes[i].constraints == restricted.nodes[i].constraints);

    // restricting by the empty set is the identity
    auto unchanged = restrictDiagram(level, ConstraintSet(3, {}));
    for (size_t i = 0; i < level.nodes.size(); ++i)
        CHECK(unchanged.nodes[i].constraints == level.nodes[i].constraints);

    CHECK_THROWS_AS(restrictDiagram(level, {3, 1}), std::invalid_argument);
}

TEST_CASE("wall crossing translates even indices and passes inclusion checks") {
    auto left = baseZigzag(IndexTuple{{1}}, 3);
    auto right = baseZigzag(IndexTuple{{3}}, 3);
    auto middle = restrictDiagram(left, {2, 1});
    auto data = crossWall(middle, right, 1);
    // deeper even indices swap
    CHECK(data.evenAssignment == std::vector<int>{2, 1});
    // the wall node with (3,2) lands on the right-side node carrying (3,2)
    CHECK(right.at(2 * data.evenAssignment[0]).pairs() ==
          std::vector<std::pair<int, int>>{{3, 2}});
    // odd positions reverse
    CHECK(data.oddAssignment == std::vector<int>{3, 2, 1});
}

TEST_CASE("wall crossing with no deeper structure is the identity") {
    LevelDiagram trivialLeft;
    trivialLeft.arity = 2;
    trivialLeft.nodes.resize(1);
    trivialLeft.nodes[0].constraints = ConstraintSet(2, {{2, 1}});
    LevelDiagram trivialRight;
    trivialRight.arity = 2;
    trivialRight.nodes.resize(1);
    trivialRight.nodes[0].constraints = ConstraintSet(2, {});
    auto data = crossWall(trivialLeft, trivialRight, 1);
    CHECK(data.oddAssignment == std::vector<int>{1});
    CHECK(data.evenAssignment.empty());
}

TEST_CASE("deeper wall crossings at four particles abort on the inclusion check") {
    // the translation between adjacent three-entry rank sequences cannot map
    // arrows to arrows; the crossing must abort
    auto left = baseZigzag(IndexTuple{{1, 1}}, 4);
    auto right = baseZigzag(IndexTuple{{1, 3}}, 4);
    auto middle = restrictDiagram(left, {3, 2});
    CHECK_THROWS_AS(crossWall(middle, right, 1), std::logic_error);
}

TEST_CASE("tower diagram shape matches the recursion") {
    auto tower = towerDiagram(3);
    REQUIRE(tower.levels.size() == 2);
    CHECK(tower.levels[0].size() == 1);   // single prefix at the top level
    CHECK(tower.levels[1].size() == 2);   // two prefixes below
    CHECK(tower.levels[0][0].nodes.size() == 3);
    CHECK(tower.levels[1][0].nodes.size() == 5);
}

TEST_CASE("ordered partition counts and refinement") {
    CHECK(enumerateOrderedPartitions(1).size() == 1);
    CHECK(enumerateOrderedPartitions(2).size() == 3);
    CHECK(enumerateOrderedPartitions(3).size() == 13);
    CHECK(enumerateOrderedPartitions(4).size() == 75);

    OrderedPartition merged{{{1, 2}}};
    OrderedPartition low{{{2}, {1}}};
    OrderedPartition high{{{1}, {2}}};
    CHECK(low.refines(merged));
    CHECK(high.refines(merged));
    CHECK_FALSE(merged.refines(low));
    CHECK_FALSE(low.refines(high));
    CHECK(merged.mergedPairs(2).pairs() == std::vector<std::pair<int, int>>{{2, 1}});
}

TEST_CASE("two-particle tower of an arc is a circle") {
    CHECK(towerBetti(pathGraph(3), 2) == std::vector<long long>{1, 1});
}

TEST_CASE("two-particle tower matches the direct three-node zigzag") {
    for (const auto& base : {pathGraph(3), cycleGraph(6)}) {
        auto direct = nestedTowerLowK(base, 2);
        auto tower = towerBetti(base, 2);
        CHECK(homology(direct, CoefficientMode::Rational).betti == tower);
    }
}

TEST_CASE("three-particle tower of an arc matches plane configurations") {
    CHECK(towerBetti(pathGraph(3), 3) == std::vector<long long>{1, 3, 2});
}

TEST_CASE("two-particle tower of a circle matches the punctured-plane pair") {
    CHECK(towerBetti(cycleGraph(6), 2) == std::vector<long long>{1, 3, 2});
}

TEST_CASE("nested low-k assembly agrees with the partition assembly") {
    for (const auto& base : {pathGraph(3), pathGraph(4), cycleGraph(6)}) {
        auto nested = homology(nestedTowerLowK(base, 3), CoefficientMode::Rational);
        CHECK(nested.betti == towerBetti(base, 3));
    }
}

TEST_CASE("tower projection is a chain map") {
    auto tower = assembleTower(pathGraph(3), 2);
    REQUIRE(tower.hasProjection);
    tower.projection.validate();
    auto three = assembleTower(pathGraph(3), 3);
    REQUIRE(three.hasProjection);
    three.projection.validate();
    // the projection target is the lower tower
    TowerOptions opts;
    opts.wantProjection = false;
    auto lower = assembleTower(pathGraph(3), 2, opts);
    CHECK(three.previous.dims == lower.complex.dims);
}

TEST_CASE("Euler recursion for towers over an arc and a circle") {
    auto chi = [](const OrderedComplex& base, int k) {
        TowerOptions opts;
        opts.wantProjection = false;
        return assembleTower(base, k, opts).complex.euler();
    };
    auto p3 = pathGraph(3);
    CHECK(chi(p3, 2) == p3.eulerCharacteristic() * (p3.eulerCharacteristic() - 1));
    CHECK(chi(p3, 3) == chi(p3, 2) * (p3.eulerCharacteristic() - 2));
    auto c6 = cycleGraph(6);
    CHECK(chi(c6, 2) == c6.eulerCharacteristic() * (c6.eulerCharacteristic() - 1));
    CHECK(chi(c6, 3) == chi(c6, 2) * (c6.eulerCharacteristic() - 2));
}

TEST_CASE("tower rejects out-of-range particle counts and tiny budgets") {
    CHECK_THROWS_AS(assembleTower(pathGraph(3), 5), std::invalid_argument);
    TowerOptions opts;
    opts.simplexBudget = 10;
    CHECK_THROWS_AS(assembleTower(pathGraph(3), 2, opts), ResourceCapError);
}

TEST_CASE("boundary model convolves with two copies of the base") {
    TowerOptions opts;
    opts.wantProjection = false;
    auto boundary = boundaryModel(pathGraph(3), 2, opts);
    CHECK(homology(boundary, CoefficientMode::Rational).betti ==
          std::vector<long long>{2, 2});
    auto boundaryOne = boundaryModel(cycleGraph(6), 1, opts);
    CHECK(homology(boundaryOne, CoefficientMode::Rational).betti ==
          std::vector<long long>{2, 2});
}

TEST_CASE("certification flag follows the subdivision condition") {
    TowerOptions opts;
    opts.wantProjection = false;
    CHECK(assembleTower(cycleGraph(6), 3, opts).certified);
    CHECK_FALSE(assembleTower(cycleGraph(3), 3, opts).certified);
}
