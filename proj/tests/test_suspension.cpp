#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "configspace/suspension.hpp"

using namespace configspace;

TEST_CASE("glued model and restricted slice agree on an arc") {
    auto report = suspensionReport(pathGraph(4));
    CHECK(report.factorizationChecked);
    CHECK(report.glued.sameBetti(report.slice));
    // three points on an arc: six contractible components
    CHECK(report.threeModel.betti == std::vector<long long>{6});
    // cofiber: rank six in degree one, nothing else in positive degrees
    CHECK(report.cofiber.betti == std::vector<long long>{0, 6});
}

TEST_CASE("glued model and restricted slice agree on a circle") {
    auto report = suspensionReport(cycleGraph(6));
    CHECK(report.glued.sameBetti(report.slice));
    CHECK(report.threeModel.betti == std::vector<long long>{2, 2});
    CHECK(report.cofiber.betti == std::vector<long long>{0, 2, 2});
}

TEST_CASE("cofiber homology is the shifted model homology") {
    for (const auto& base : {pathGraph(4), cycleGraph(6)}) {
        auto report = suspensionReport(base);
        REQUIRE(report.cofiber.betti.size() >= 1);
        CHECK(report.cofiber.betti[0] == 0);
        for (size_t n = 1; n < report.cofiber.betti.size(); ++n) {
            long long expected =
                (n - 1 < report.threeModel.betti.size()) ? report.threeModel.betti[n - 1] : 0;
            CHECK(report.cofiber.betti[n] == expected);
        }
    }
}

TEST_CASE("uncertified inputs are rejected") {
    CHECK_THROWS_AS(suspensionGluedModel(pathGraph(1)), std::invalid_argument);
    CHECK_THROWS_AS(suspensionCofiberSummary(cycleGraph(3)), std::invalid_argument);
}

TEST_CASE("common subdivision detection") {
    CHECK(commonSubdivisionBase(pathGraph(3), pathGraph(6)));
    CHECK(commonSubdivisionBase(cycleGraph(5), cycleGraph(8)));
    CHECK_FALSE(commonSubdivisionBase(pathGraph(3), cycleGraph(5)));
    OrderedComplex theta({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
    CHECK_FALSE(commonSubdivisionBase(theta, cycleGraph(6)));
    CHECK(commonSubdivisionBase(theta, subdivideEdges(theta, 2)));
}

TEST_CASE("invariance check passes on a pair of circle subdivisions") {
    auto verdict = invarianceCheck(cycleGraph(5), cycleGraph(8), 2);
    CHECK(verdict.pass);
    CHECK(verdict.towerA.sameBetti(verdict.towerB));
    // symmetry
    auto reversed = invarianceCheck(cycleGraph(8), cycleGraph(5), 2);
    CHECK(reversed.pass);
    CHECK(verdict.towerA.sameBetti(reversed.towerB));
}

TEST_CASE("invariance check passes on identical inputs") {
    auto verdict = invarianceCheck(pathGraph(4), pathGraph(4), 2);
    CHECK(verdict.pass);
}

TEST_CASE("invariance check includes cofibers at three particles") {
    auto verdict = invarianceCheck(pathGraph(4), pathGraph(7), 3);
    CHECK(verdict.pass);
    REQUIRE(verdict.cofiberA.has_value());
    CHECK(verdict.cofiberA->sameBetti(*verdict.cofiberB));
}

TEST_CASE("incomparable inputs are an error") {
    CHECK_THROWS_AS(invarianceCheck(pathGraph(3), cycleGraph(6), 2), std::invalid_argument);
}
