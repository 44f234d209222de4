#include "doctest.h"

#include "logbundle/geometry.hpp"

#include <map>
#include <random>

using namespace logbundle;

namespace {

LinearForm L(long a, long b, long c) { return LinearForm(a, b, c); }

Arrangement b3() {
    return Arrangement({L(1, 0, 0), L(0, 1, 0), L(0, 0, 1), L(1, 0, 1), L(1, 0, -1), L(0, 1, 1), L(0, 1, -1),
                        L(1, 1, 0), L(1, -1, 0)});
}

// Counts points by brute force over all line pairs, independent of lattice().
std::map<ProjPoint, std::size_t> brute_points(const Arrangement& arr) {
    std::map<ProjPoint, std::size_t> out;
    for (std::size_t i = 0; i < arr.size(); ++i)
        for (std::size_t j = i + 1; j < arr.size(); ++j) out[intersection(arr[i], arr[j])] = 0;
    for (auto& [p, m] : out)
        for (const auto& l : arr.lines())
            if (dot(l.coords(), p.coords()).is_zero()) ++m;
    return out;
}

}  // namespace

TEST_CASE("projective normalization") {
    const ProjPoint p(Rational(-2), Rational(4), Rational(6));
    CHECK(p.to_string() == "(1:-2:-3)");
    CHECK(ProjPoint(Rational(1, 2), Rational(1, 3), 0) == ProjPoint(3, 2, 0));
    CHECK(ProjPoint(0, -3, 6).to_string() == "(0:1:-2)");
    CHECK_THROWS_AS(ProjPoint(0, 0, 0), std::invalid_argument);
}

TEST_CASE("intersection and join") {
    const ProjPoint p = intersection(L(-4, -5, 1), L(5, 13, -8));
    CHECK(p == ProjPoint(-1, 1, 1));
    CHECK(join(ProjPoint(1, 0, 0), ProjPoint(0, 1, 0)) == L(0, 0, 1));
    CHECK_THROWS_AS(intersection(L(1, 2, 3), L(-2, -4, -6)), std::invalid_argument);
}

TEST_CASE("restriction to a line uses the canonical parametrization") {
    const LinearForm l = L(1, 1, 1);
    const auto [p1, p2] = parametrization(l);
    CHECK(dot(l.coords(), p1).is_zero());
    CHECK(dot(l.coords(), p2).is_zero());
    const HomPoly f = HomPoly::x() * HomPoly::y();
    const BinaryForm r = restrict_to_line(f, l);
    // x = -s - t, y = s on x + y + z = 0
    CHECK(r == BinaryForm(Vector{-1, -1, 0}));
    CHECK(restrict_to_line(to_poly(l), l).is_zero());
}

TEST_CASE("duplicate lines are rejected") {
    CHECK_THROWS_AS(Arrangement({L(1, 0, 0), L(2, 0, 0)}), std::invalid_argument);
}

TEST_CASE("B3 lattice") {
    const Arrangement arr = b3();
    const Lattice lat = lattice(arr);
    std::map<std::size_t, int> hist;
    long tau = 0;
    for (const auto& p : lat.points) {
        ++hist[p.multiplicity()];
        tau += static_cast<long>((p.multiplicity() - 1) * (p.multiplicity() - 1));
    }
    CHECK(hist[2] == 6);
    CHECK(hist[3] == 4);
    CHECK(hist[4] == 3);
    CHECK(tau == 49);
    const auto brute = brute_points(arr);
    CHECK(brute.size() == lat.points.size());
    for (const auto& p : lat.points) CHECK(brute.at(p.point) == p.multiplicity());
    for (const auto& l : arr.lines()) CHECK(euler_t(arr, l) == weighted_triple_count(arr, l));
    CHECK(euler_t(arr, L(1, 0, 0)) == 4);
    CHECK_THROWS_AS(euler_t(arr, L(1, 2, 3)), std::invalid_argument);
}

TEST_CASE("projective maps preserve incidence and the lattice") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-3, 3);
    const Arrangement arr = b3();
    for (int trial = 0; trial < 10; ++trial) {
        Matrix g(3, 3);
        do {
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) g(i, j) = entry(rng);
        } while (determinant(g).is_zero());
        const ProjectiveMap map(g);
        const Arrangement moved = arr.transformed(map);
        CHECK(lattice_isomorphic(arr, moved));
        const ProjPoint p(1, 1, 1);
        CHECK(incident(map.apply(L(1, -1, 0)), map.apply(p)));
        const HomPoly f = product_form(arr);
        const HomPoly h = map.apply(f);
        CHECK(h.evaluate(map.apply(ProjPoint(2, 3, 5)).coords()).is_zero() ==
              f.evaluate(ProjPoint(2, 3, 5).coords()).is_zero());
        CHECK(h.evaluate(map.apply(p).coords()).is_zero());
        CHECK(euler_t(moved, map.apply(L(1, 0, 0))) == 4);
    }
}

TEST_CASE("lattice isomorphism distinguishes combinatorics") {
    const Arrangement generic({L(1, 0, 0), L(0, 1, 0), L(0, 0, 1), L(1, 1, 1)});
    const Arrangement pencil({L(1, 0, 0), L(0, 1, 0), L(1, 1, 0), L(0, 0, 1)});
    CHECK_FALSE(lattice_isomorphic(generic, pencil));
    const Arrangement generic2({L(1, 2, 3), L(0, 1, 0), L(1, 0, 0), L(3, 1, 7)});
    CHECK(lattice_isomorphic(generic, generic2));
    const auto w = lattice_isomorphism(b3(), b3());
    REQUIRE(w);
    CHECK(w->size() == 9);
}
