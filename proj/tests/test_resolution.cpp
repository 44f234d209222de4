#include "doctest.h"

#include "logbundle/constructions.hpp"
#include "logbundle/resolution.hpp"

#include <random>

using namespace logbundle;

namespace {

const HomPoly X = HomPoly::x();
const HomPoly Y = HomPoly::y();
const HomPoly Z = HomPoly::z();

HomPoly lin(long a, long b, long c) { return HomPoly::linear(a, b, c); }

Arrangement arrangement(const std::string& id, const Params& params = {}) {
    return std::get<Arrangement>(named_example(id, params));
}

bool annihilates(const SyzygyTriple& s, const HomPoly& f) {
    const auto g = partials(f);
    return (s.components[0] * g[0] + s.components[1] * g[1] + s.components[2] * g[2]).is_zero();
}

// Rank of a set of coefficient vectors, used as an independent span test.
std::size_t span_rank(const std::vector<Vector>& rows) {
    if (rows.empty()) return 0;
    return rank(Matrix::from_rows(rows));
}

// Sum over lattice points of (m - 1)^2, the Tjurina number of a line arrangement.
long lattice_tjurina(const Arrangement& arr) {
    long tau = 0;
    for (const auto& p : lattice(arr).points) {
        const auto m = static_cast<long>(p.multiplicity());
        tau += (m - 1) * (m - 1);
    }
    return tau;
}

}  // namespace

TEST_CASE("syzygies of xyz") {
    const HomPoly f = X * Y * Z;
    CHECK(syzygy_basis(f, 0).empty());
    const auto s1 = syzygy_basis(f, 1);
    REQUIRE(s1.size() == 2);
    std::vector<Vector> rows;
    for (const auto& s : s1) {
        CHECK(annihilates(s, f));
        rows.push_back(s.coefficients());
    }
    const SyzygyTriple a{1, {X, -Y, HomPoly(1)}};
    const SyzygyTriple b{1, {HomPoly(1), Y, -Z}};
    CHECK(annihilates(a, f));
    CHECK(annihilates(b, f));
    rows.push_back(a.coefficients());
    rows.push_back(b.coefficients());
    CHECK(span_rank(rows) == 2);
}

TEST_CASE("smooth cubic has no linear syzygy") {
    CHECK(syzygy_basis(X.pow(3) + Y.pow(3) + Z.pow(3), 1).empty());
}

TEST_CASE("minimal presentations of reference curves") {
    SUBCASE("xyz") {
        const auto p = minimal_presentation(X * Y * Z);
        CHECK(p.generator_degrees == std::vector<int>{1, 1});
        CHECK(p.relation_degrees.empty());
        CHECK(syzygy_basis(X * Y * Z, 2).size() == 6);
    }
    SUBCASE("B3") {
        const HomPoly f = product_form(arrangement("b3"));
        const auto p = minimal_presentation(f);
        CHECK(p.generator_degrees == std::vector<int>{3, 5});
        CHECK(p.relation_degrees.empty());
        for (const auto& g : p.generators) CHECK(annihilates(g, f));
        for (std::size_t k = 0; k < p.graded_dims.size(); ++k)
            CHECK(p.predicted_dim(static_cast<int>(k)) == static_cast<long>(p.graded_dims[k]));
    }
    SUBCASE("line arrangement with one added line") {
        const HomPoly f = product_form(arrangement("exline"));
        const auto p = minimal_presentation(f);
        CHECK(p.generator_degrees == std::vector<int>{4, 5, 5});
        CHECK(p.relation_degrees == std::vector<int>{6});
        for (const auto& g : p.generators) CHECK(annihilates(g, f));
        // relation column annihilates the generators
        HomPoly comb(6);
        for (std::size_t c = 0; c < 3; ++c) {
            comb = HomPoly(6);
            for (std::size_t i = 0; i < 3; ++i) comb += p.relations[0][i] * p.generators[i].components[c];
            CHECK(comb.is_zero());
        }
    }
}

TEST_CASE("classification of reference curves") {
    CHECK(classify(product_form(arrangement("b3"))) == BundleClass{Free{3, 5}});
    CHECK(classify(product_form(arrangement("exline"))) == BundleClass{NearlyFree{4, 5, ProjPoint(-1, 1, 1)}});
    const HomPoly conics = std::get<HomPoly>(named_example("conic_pencil"));
    CHECK(classify(conics) == BundleClass{NearlyFree{2, 4, ProjPoint(0, 0, 1)}});
    const auto other = classify(X.pow(3) + Y.pow(3) + Z.pow(3));
    CHECK(std::holds_alternative<OtherClass>(other));
}

TEST_CASE("four general lines give the twisted tangent bundle") {
    const auto cls = classify(X * Y * Z * lin(1, 1, 1));
    const auto* nf = std::get_if<NearlyFree>(&cls);
    REQUIRE(nf);
    CHECK(nf->a == 2);
    CHECK(nf->b == 2);
    CHECK_FALSE(nf->jumping_point.has_value());
    CHECK(stability_class(cls) == Stability::Stable);
}

TEST_CASE("jumping point from relation entries") {
    {
        const auto p = make_presentation({4, 5, 5}, {6}, {{Y * Y, lin(-4, -5, 1), lin(5, 13, -8)}});
        CHECK(jumping_point(p) == ProjPoint(-1, 1, 1));
    }
    {
        const auto p = make_presentation({5, 6, 6}, {7}, {{Y * Y, lin(-7, 11, -7), lin(14, -134, 161)}});
        CHECK(jumping_point(p) == ProjPoint(17, 21, 16));
    }
    CHECK(jumping_point(make_presentation({2, 4, 4}, {5}, {{Z.pow(3), X, Y}})) == ProjPoint(0, 0, 1));
    CHECK_THROWS_AS(jumping_point(make_presentation({2, 2, 2}, {3}, {{X, Y, Z}})), std::invalid_argument);
    CHECK_THROWS_AS(jumping_point(make_presentation({2, 4, 4}, {5}, {{Z.pow(3), X, X.scaled(2)}})), std::logic_error);
    CHECK_THROWS_AS(make_presentation({2, 4, 4}, {5}, {{Z, X, Y}}), std::invalid_argument);
}

TEST_CASE("jumping point is invariant under presentation automorphisms") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> small(-4, 4);
    const std::vector<HomPoly> column{Y * Y + Y * Z, lin(-4, -5, 1), lin(5, 13, -8)};
    for (int trial = 0; trial < 10; ++trial) {
        // new basis: degree-4 entry absorbs linear multiples of the others, the pair is mixed by an invertible 2x2
        const HomPoly p1 = lin(small(rng), small(rng), small(rng));
        const HomPoly p2 = lin(small(rng), small(rng), small(rng));
        long a = 0, b = 0, c = 0, d = 0;
        do {
            a = small(rng);
            b = small(rng);
            c = small(rng);
            d = small(rng);
        } while (a * d - b * c == 0);
        std::vector<HomPoly> twisted{column[0] + p1 * column[1] + p2 * column[2],
                                     column[1].scaled(a) + column[2].scaled(b), column[1].scaled(c) + column[2].scaled(d)};
        CHECK(jumping_point(make_presentation({4, 5, 5}, {6}, {twisted})) == ProjPoint(-1, 1, 1));
    }
}

TEST_CASE("tjurina numbers") {
    CHECK(tjurina(X * Y * Z) == 3);
    CHECK(tjurina(X.pow(3) + Y.pow(3) + Z.pow(3)) == 0);
    const Arrangement b3 = arrangement("b3");
    CHECK(tjurina(product_form(b3)) == 49);
    CHECK(lattice_tjurina(b3) == 49);
    CHECK_THROWS_WITH_AS(tjurina(X * X * Y), "Jacobian scheme not finite", std::runtime_error);
}

TEST_CASE("Chern data agrees with the presentation") {
    for (const char* id : {"b3", "exline", "exline_shift"}) {
        CAPTURE(id);
        const HomPoly f = product_form(arrangement(id));
        const auto chern = chern_data(f);
        const auto p = minimal_presentation(f);
        CHECK(chern.c1 == p.c1());
        CHECK(chern.c2 == p.c2());
        CHECK(chern.tjurina == lattice_tjurina(arrangement(id)));
    }
    const HomPoly conics = std::get<HomPoly>(named_example("conic_pencil"));
    const auto chern = chern_data(conics);
    CHECK(chern.c2 == 2 * 4 - 2 + 1);
    CHECK(chern.tjurina == 25 - 7);
}

TEST_CASE("stability trichotomy") {
    CHECK(stability_class(NearlyFree{3, 3, std::nullopt}) == Stability::Stable);
    CHECK(stability_class(NearlyFree{4, 5, ProjPoint(0, 0, 1)}) == Stability::Semistable);
    CHECK(stability_class(NearlyFree{2, 4, ProjPoint(0, 0, 1)}) == Stability::Unstable);
    CHECK(stability_class(Free{2, 2}) != Stability::Stable);
    CHECK(stability_class(Free{3, 5}) != Stability::Stable);
    CHECK_THROWS_WITH_AS(stability_class(OtherClass{{2, 2, 2}, {4}}), "not computed", std::invalid_argument);
}

TEST_CASE("classification ignores scaling") {
    const HomPoly f = product_form(arrangement("exline"));
    CHECK(classify(f.scaled(Rational(-7, 3))) == classify(f));
}

TEST_CASE("classification is equivariant") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> entry(-2, 2);
    const HomPoly f = std::get<HomPoly>(named_example("conic_pencil"));
    for (int trial = 0; trial < 3; ++trial) {
        Matrix g(3, 3);
        do {
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) g(i, j) = entry(rng);
        } while (determinant(g).is_zero());
        const ProjectiveMap map(g);
        const auto cls = classify(map.apply(f));
        CHECK(cls == BundleClass{NearlyFree{2, 4, map.apply(ProjPoint(0, 0, 1))}});
    }
}

TEST_CASE("one-line criteria") {
    const HomPoly b3 = product_form(arrangement("b3"));
    CHECK(free_test_one_line(b3, LinearForm(0, 0, 1)));
    CHECK(free_test_one_line(X * Y * Z, LinearForm(1, 0, 0)));
    const HomPoly exline = product_form(arrangement("exline"));
    CHECK_FALSE(free_test_one_line(exline, LinearForm(0, 0, 1)));
    CHECK_FALSE(free_test_one_line(exline, LinearForm(1, 0, 1)));

    CHECK(nf_test_c2_one(canonical_nf(0, 3, ProjPoint(0, 0, 1)), LinearForm(0, 0, 1)));
    CHECK_FALSE(nf_test_c2_one(canonical_nf(0, 3, ProjPoint(0, 0, 1)), LinearForm(1, 0, 0)));
    const auto split_free = make_presentation({0, 2}, {}, {});
    CHECK_THROWS_AS(nf_test_c2_one(split_free, LinearForm(0, 0, 1)), std::invalid_argument);
}
