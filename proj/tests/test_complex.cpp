#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "configspace/homology.hpp"
#include "configspace/ordered_complex.hpp"
#include "configspace/product.hpp"

using namespace configspace;

TEST_CASE("solid triangle validates with the expected counts") {
    OrderedComplex k({"a", "b", "c"}, {{0, 1, 2}});
    auto report = k.validate();
    CHECK(report.ok);
    CHECK(report.fVector == std::vector<long long>{3, 3, 1});
    CHECK(report.euler == 1);
}

TEST_CASE("undeclared vertex is rejected") {
    CHECK_THROWS_AS(OrderedComplex({"a", "b"}, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("missing face is caught by validation") {
    auto broken = OrderedComplex::fromCellsUnchecked({"a", "b", "c"}, {{{0}, {1}}, {{0, 1}, {1, 2}}});
    auto report = broken.validate();
    CHECK_FALSE(report.ok);
    CHECK(report.offendingSimplex == std::vector<int>{1, 2});
}

TEST_CASE("cycle graph has zero Euler characteristic") {
    auto report = cycleGraph(6).validate();
    CHECK(report.ok);
    CHECK(report.euler == 0);
    CHECK(report.fVector == std::vector<long long>{6, 6});
}

TEST_CASE("staircase square splits into two triangles") {
    auto interval = pathGraph(1);
    auto square = staircaseProduct({interval, interval});
    CHECK(square.complex.fVector() == std::vector<long long>{4, 5, 2});
    // coordinate projections are simplicial
    square.projection(0).validate();
    square.projection(1).validate();
}

TEST_CASE("product with a point is the identity") {
    auto k = cycleGraph(5);
    auto prod = staircaseProduct({k, pointComplex()});
    CHECK(prod.complex.fVector() == k.fVector());
}

TEST_CASE("Euler characteristic is multiplicative for staircase products") {
    std::vector<OrderedComplex> samples = {pathGraph(2), cycleGraph(3), fullSimplex(2),
                                           twoPointComplex()};
    for (const auto& a : samples) {
        for (const auto& b : samples) {
            auto prod = staircaseProduct({a, b});
            CHECK(prod.complex.eulerCharacteristic() ==
                  a.eulerCharacteristic() * b.eulerCharacteristic());
        }
    }
}

TEST_CASE("torus model from the staircase product of two hexagons") {
    auto c6 = cycleGraph(6);
    auto torus = staircaseProduct({c6, c6});
    CHECK(torus.complex.eulerCharacteristic() == 0);
    auto summary = homology(chains(torus.complex), CoefficientMode::Rational);
    CHECK(summary.betti == std::vector<long long>{1, 2, 1});
}

TEST_CASE("deleted square of an edge is two isolated vertices") {
    auto edge = pathGraph(1);
    auto square = staircasePower(edge, 2);
    auto sub = constrainedSubcomplex(square, ConstraintSet(2, {{2, 1}}));
    CHECK(sub.complex.fVector() == std::vector<long long>{2});
    sub.inclusionInto(square).validate();
}

TEST_CASE("deleted square of the triangle is a six-cycle") {
    auto c3 = cycleGraph(3);
    auto square = staircasePower(c3, 2);
    auto sub = constrainedSubcomplex(square, ConstraintSet(2, {{2, 1}}));
    CHECK(sub.complex.fVector() == std::vector<long long>{6, 6});
    auto summary = homology(chains(sub.complex), CoefficientMode::Rational);
    CHECK(summary.betti == std::vector<long long>{1, 1});
}

TEST_CASE("empty constraint set keeps the full product") {
    auto c3 = cycleGraph(3);
    auto square = staircasePower(c3, 2);
    auto sub = constrainedSubcomplex(square, ConstraintSet(2, {}));
    CHECK(sub.complex.fVector() == square.complex.fVector());
}

TEST_CASE("constraint monotonicity: more pairs keep fewer cells") {
    auto k = pathGraph(2);
    auto cube = staircasePower(k, 3);
    auto weak = constrainedSubcomplex(cube, ConstraintSet(3, {{2, 1}}));
    auto strong = constrainedSubcomplex(cube, ConstraintSet(3, {{2, 1}, {3, 1}}));
    for (int d = 0; d <= cube.complex.dimension(); ++d)
        CHECK(strong.complex.cellCount(d) <= weak.complex.cellCount(d));
    // every cell of the stronger subcomplex survives in the weaker one
    for (int d = 0; d <= strong.complex.dimension(); ++d) {
        for (const auto& cell : strong.complex.cells(d)) {
            std::vector<int> inWeak;
            for (int v : cell) {
                int ambient = strong.vertexToAmbient[v];
                auto it = std::find(weak.vertexToAmbient.begin(), weak.vertexToAmbient.end(),
                                    ambient);
                REQUIRE(it != weak.vertexToAmbient.end());
                inWeak.push_back(static_cast<int>(it - weak.vertexToAmbient.begin()));
            }
            std::sort(inWeak.begin(), inWeak.end());
            CHECK(weak.complex.hasCell(inWeak));
        }
    }
}

TEST_CASE("full deleted product is invariant under coordinate relabeling") {
    auto c3 = cycleGraph(3);
    int k = 3;
    auto cube = staircasePower(c3, k);
    auto sub = constrainedSubcomplex(cube, ConstraintSet::allPairs(k));
    std::vector<int> perm{1, 2, 0};
    std::vector<int> ambientToSub(cube.complex.vertexCount(), -1);
    for (size_t i = 0; i < sub.vertexToAmbient.size(); ++i)
        ambientToSub[sub.vertexToAmbient[i]] = static_cast<int>(i);
    auto relabelVertex = [&](int subVertex) {
        const auto& tuple = cube.vertexTuple[sub.vertexToAmbient[subVertex]];
        long long id = 0;
        for (int i = 0; i < k; ++i) id = id * c3.vertexCount() + tuple[perm[i]];
        return static_cast<int>(id);
    };
    for (int d = 0; d <= sub.complex.dimension(); ++d) {
        for (const auto& cell : sub.complex.cells(d)) {
            std::vector<int> image;
            for (int v : cell) {
                int ambient = relabelVertex(v);
                REQUIRE(ambientToSub[ambient] >= 0);
                image.push_back(ambientToSub[ambient]);
            }
            std::sort(image.begin(), image.end());
            CHECK(sub.complex.hasCell(image));
        }
    }
}

TEST_CASE("barycentric subdivision: zero rounds is the identity") {
    auto k = cycleGraph(4);
    auto sub = barycentricSubdivide(k, 0);
    CHECK(sub.fVector() == k.fVector());
}

TEST_CASE("one round of the triangle boundary gives a hexagon") {
    OrderedComplex boundary({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
    auto sub = barycentricSubdivide(boundary, 1);
    CHECK(sub.fVector() == std::vector<long long>{6, 6});
    auto summary = homology(chains(sub), CoefficientMode::Rational);
    CHECK(summary.betti == std::vector<long long>{1, 1});
}

TEST_CASE("barycentric subdivision preserves Betti numbers") {
    auto c6 = cycleGraph(6);
    auto before = homology(chains(c6), CoefficientMode::Rational);
    auto after = homology(chains(barycentricSubdivide(c6, 1)), CoefficientMode::Rational);
    CHECK(before.sameBetti(after));
    auto disc = fullSimplex(2);
    CHECK(homology(chains(barycentricSubdivide(disc, 1)), CoefficientMode::Rational)
              .sameBetti(homology(chains(disc), CoefficientMode::Rational)));
}

TEST_CASE("edge subdivision examples") {
    auto c3 = cycleGraph(3);
    auto doubled = subdivideEdges(c3, 2);
    CHECK(doubled.fVector() == std::vector<long long>{6, 6});
    CHECK(homology(chains(doubled), CoefficientMode::Rational).betti ==
          std::vector<long long>{1, 1});

    auto tripled = subdivideEdges(pathGraph(1), 3);
    CHECK(tripled.fVector() == pathGraph(3).fVector());

    CHECK_THROWS_AS(subdivideEdges(fullSimplex(2), 2), std::invalid_argument);
}

TEST_CASE("edge subdivision preserves Betti numbers on graphs") {
    OrderedComplex theta({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
    auto before = homology(chains(theta), CoefficientMode::Rational);
    auto after = homology(chains(subdivideEdges(theta, 3)), CoefficientMode::Rational);
    CHECK(before.sameBetti(after));
}

TEST_CASE("complex text format round trip and error reporting") {
    auto k = cycleGraph(5);
    auto reparsed = parseComplex(formatComplex(k));
    CHECK(reparsed.fVector() == k.fVector());
    CHECK(reparsed.vertexNames() == k.vertexNames());

    bool threw = false;
    try {
        parseComplex("vertex a\nsimplex a b\n");
    } catch (const ComplexParseError& e) {
        threw = true;
        CHECK(e.line == 2);
    }
    CHECK(threw);

    auto filled = parseComplex("vertex a\nvertex b\nvertex c\nsimplex a b c\n");
    CHECK(filled.fVector() == std::vector<long long>{3, 3, 1});
}
