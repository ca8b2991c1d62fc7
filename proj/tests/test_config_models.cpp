#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "configspace/config_models.hpp"
#include "configspace/homology.hpp"

using namespace configspace;

namespace {

HomologySummary modelHomology(const OrderedComplex& base, int k) {
    auto model = deletedProductModel(base, k);
    return homology(chains(model.complex), CoefficientMode::Rational);
}

}  // namespace

TEST_CASE("two points on an arc form two contractible pieces") {
    auto model = deletedProductModel(pathGraph(3), 2);
    CHECK(model.certified);
    CHECK(homology(chains(model.complex), CoefficientMode::Rational).betti ==
          std::vector<long long>{2});
}

TEST_CASE("two points on a circle form an annulus") {
    auto model = deletedProductModel(cycleGraph(6), 2);
    CHECK(model.certified);
    CHECK(homology(chains(model.complex), CoefficientMode::Rational).betti ==
          std::vector<long long>{1, 1});
}

TEST_CASE("one particle returns the base complex") {
    auto base = cycleGraph(4);
    auto model = deletedProductModel(base, 1);
    CHECK(model.complex.fVector() == base.fVector());
    CHECK(model.certified);
}

TEST_CASE("three points on a circle form two circles") {
    auto model = deletedProductModel(cycleGraph(6), 3);
    CHECK(model.certified);
    CHECK(homology(chains(model.complex), CoefficientMode::Rational).betti ==
          std::vector<long long>{2, 2});
}

TEST_CASE("three points on an arc form six contractible pieces") {
    auto model = deletedProductModel(pathGraph(4), 3);
    CHECK(model.certified);
    CHECK(homology(chains(model.complex), CoefficientMode::Rational).betti ==
          std::vector<long long>{6});
}

TEST_CASE("subdivision condition verdicts") {
    CHECK(abramsCondition(cycleGraph(6), 2).satisfied);
    auto bad = abramsCondition(cycleGraph(3), 3);
    CHECK_FALSE(bad.satisfied);
    CHECK(bad.witness.size() == 3);
    CHECK(abramsCondition(pathGraph(5), 3).satisfied);
    CHECK_THROWS_AS(abramsCondition(fullSimplex(2), 2), std::invalid_argument);
}

TEST_CASE("short essential paths fail the condition") {
    // star with three unit legs: essential center and leaves, legs of one edge
    OrderedComplex star({"c", "a", "b", "d"}, {{0, 1}, {0, 2}, {0, 3}});
    auto verdict = abramsCondition(star, 3);
    CHECK_FALSE(verdict.satisfied);
    CHECK(verdict.witness.size() == 2);
    CHECK(abramsCondition(star, 2).satisfied);
}

TEST_CASE("graph preparation finds the minimal subdivision") {
    auto same = prepareGraph(cycleGraph(3), 2);
    CHECK(same.fVector() == cycleGraph(3).fVector());
    auto doubled = prepareGraph(cycleGraph(3), 3);
    CHECK(doubled.fVector() == std::vector<long long>{6, 6});
    // homotopy type preserved
    CHECK(homology(chains(doubled), CoefficientMode::Rational).betti ==
          std::vector<long long>{1, 1});
}

TEST_CASE("model Betti numbers are stable under further subdivision") {
    CHECK(modelHomology(cycleGraph(5), 2).sameBetti(modelHomology(cycleGraph(8), 2)));
    CHECK(modelHomology(cycleGraph(5), 3).sameBetti(modelHomology(cycleGraph(8), 3)));
    CHECK(modelHomology(pathGraph(3), 2).sameBetti(modelHomology(pathGraph(6), 2)));
    CHECK(modelHomology(pathGraph(4), 3).sameBetti(modelHomology(pathGraph(6), 3)));
}

TEST_CASE("forgetting a coordinate is simplicial onto the base") {
    auto base = cycleGraph(5);
    auto model = deletedProductModel(base, 2);
    auto square = staircasePower(base, 2);
    SimplicialMap forget;
    forget.source = &model.complex;
    forget.target = &base;
    for (int v = 0; v < model.complex.vertexCount(); ++v)
        forget.vertexAssignment.push_back(square.vertexTuple[model.vertexToAmbient[v]][0]);
    forget.validate();
}

TEST_CASE("uncertified inputs are flagged") {
    auto model = deletedProductModel(cycleGraph(3), 3);
    CHECK_FALSE(model.certified);
    auto surface = deletedProductModel(fullSimplex(2), 2);
    CHECK_FALSE(surface.certified);
}
