#include "fixtures.hpp"

#include <doctest.h>

using namespace hss;

TEST_CASE("fixtures validate with the expected structure")
{
    for (auto name : {"e0_f2", "e0_q", "e1_f2", "e1_q", "e2_f2", "e2_q", "e3_f2", "e3_q"}) {
        DGAlgebra a = build_algebra(parse_dga(fixture_source(name)));
        ValidationReport rep = validate(a);
        INFO(name);
        CHECK(rep.valid);
        CHECK(rep.strict_coconnective);
        CHECK(rep.strict_simply_connected);
        CHECK(rep.bounded);
    }

    CHECK(validate(fixture_algebra("e0_q")).top_cohomology_degree == 0);
    CHECK(validate(fixture_algebra("e1_q")).h_dims ==
          std::map<int, std::size_t>{{0, 1}, {3, 1}});
    CHECK(validate(fixture_algebra("e1_q")).top_cohomology_degree == 3);
    CHECK(validate(fixture_algebra("e2_f2")).h_dims ==
          std::map<int, std::size_t>{{0, 1}, {2, 1}});
    CHECK(validate(fixture_algebra("e3_f2")).h_dims ==
          std::map<int, std::size_t>{{0, 1}, {2, 1}, {5, 1}});
    CHECK(validate(fixture_algebra("e3_q")).top_cohomology_degree == 5);
}

TEST_CASE("validation reports degree bookkeeping violations with witnesses")
{
    /* d(x) = 1 on the exterior algebra: |d(x)| must be 4, not 0 */
    Field q{FieldSpec(0)};
    DGAlgebra bad(FieldSpec(0), {{"1", 0}, {"x", 3}}, {{"x", {{"1", q.one()}}}}, {});
    ValidationReport rep = validate(bad);
    CHECK_FALSE(rep.valid);
    bool found = false;
    for (auto& f : rep.failures)
        if (f.find("d(x)") != std::string::npos && f.find("degree") != std::string::npos)
            found = true;
    CHECK(found);
}

TEST_CASE("validation catches Leibniz and associativity failures")
{
    Field q{FieldSpec(0)};
    /* dz = x2 but x*x = 0: then d(x*x) = 0 while the basis says d(x2) = 0;
     * break Leibniz instead by making d(xz) nonzero */
    DGAlgebra bad(FieldSpec(0),
                  {{"1", 0}, {"x", 2}, {"z", 3}, {"x2", 4}, {"xz", 5}, {"x2z", 6}},
                  {{"z", {{"x2", q.one()}}}, {"xz", {{"x2z", q.one()}}}},
                  {{{"x", "x"}, {{"x2", q.one()}}},
                   {{"x", "z"}, {{"xz", q.one()}}},
                   {{"z", "x"}, {{"xz", q.one()}}}});
    ValidationReport rep = validate(bad);
    CHECK_FALSE(rep.valid);
    bool leibniz = false;
    for (auto& f : rep.failures)
        if (f.find("Leibniz") != std::string::npos)
            leibniz = true;
    CHECK(leibniz);
}

TEST_CASE("non-strict inputs are flagged")
{
    /* degree-1 generator */
    DGAlgebra a1(FieldSpec(0), {{"1", 0}, {"y", 1}}, {}, {});
    ValidationReport r1 = validate(a1);
    CHECK_FALSE(r1.strict_simply_connected);
    CHECK_FALSE(r1.valid);

    /* a second degree-0 element */
    DGAlgebra a0(FieldSpec(2), {{"1", 0}, {"e", 0}}, {}, {});
    CHECK_FALSE(validate(a0).strict_coconnective);
}

TEST_CASE("enveloping algebra: dimensions and the Koszul sign")
{
    DGAlgebra e0e = enveloping(fixture_algebra("e0_q"));
    CHECK(e0e.size() == 1);

    DGAlgebra e1e = enveloping(fixture_algebra("e1_q"));
    CHECK(validate(e1e).valid);
    CHECK(e1e.space().dim(0) == 1);
    CHECK(e1e.space().dim(3) == 2);
    CHECK(e1e.space().dim(6) == 1);

    /* (1 (x) x)(x (x) 1) = (-1)^{3*3} x (x) x */
    std::size_t left = e1e.id_of("1@x");
    std::size_t right = e1e.id_of("x@1");
    std::size_t xx = e1e.id_of("x@x");
    const SpElt& prod = e1e.product(left, right);
    REQUIRE(prod.size() == 1);
    CHECK(prod[0].first == xx);
    CHECK(prod[0].second == e1e.field().make(-1));

    /* enveloping of the fixture with differential stays a valid dga */
    CHECK(validate(enveloping(fixture_algebra("e3_q"))).valid);
    CHECK(validate(enveloping(fixture_algebra("e3_f2"))).valid);
}

TEST_CASE("bimodule axioms hold for the bundled coefficient modules")
{
    for (auto name : {"e1_q", "e3_q", "e3_f2"}) {
        DGAlgebra a = fixture_algebra(name);
        regular_bimodule(a).check(a);
        trivial_bimodule(a).check(a);
        for (int n = 0; n <= a.top_degree() + 1; ++n)
            filtration(a, n).module.check(a);
        for (int n = 0; n <= a.top_degree(); ++n)
            subquotient(a, n).check(a);
        for (int n = 0; n <= a.top_degree(); ++n)
            cohomology_slice_bimodule(a, n).check(a);
    }
}

TEST_CASE("filtration pieces and subquotients")
{
    DGAlgebra e1 = fixture_algebra("e1_q");
    CHECK(filtration(e1, 0).module.size() == 2);
    CHECK(filtration(e1, 1).module.size() == 1);
    CHECK(filtration(e1, 3).module.size() == 1);
    CHECK(filtration(e1, 4).module.size() == 0);
    CHECK_THROWS_AS(filtration(e1, -1), Error);

    DGBimodule s3 = subquotient(e1, 3);
    REQUIRE(s3.size() == 1);
    CHECK(s3.label(0) == "x");
    CHECK(s3.d(0).empty());

    /* slice of E3 at degree 4 is x2 with zero differential even though
     * dz = x2 in A */
    DGAlgebra e3 = fixture_algebra("e3_q");
    DGBimodule s4 = subquotient(e3, 4);
    REQUIRE(s4.size() == 1);
    CHECK(s4.label(0) == "x2");
    CHECK(s4.d(0).empty());

    /* only degree 0 acts on a slice: x acts as zero on subquotient(e3, 2) */
    DGBimodule s2 = subquotient(e3, 2);
    REQUIRE(s2.size() == 1);
    CHECK(s2.left(e3.id_of("x"), 0).empty());
    CHECK(s2.left(e3.unit(), 0).size() == 1);

    /* augmentation ideal = J(1) */
    FiltrationPiece aug = augmentation_ideal(e3);
    CHECK(aug.n == 1);
    CHECK(aug.module.size() == 4);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < aug.module.size(); ++i)
        labels.push_back(aug.module.label(i));
    CHECK(labels == std::vector<std::string>{"x", "z", "x2", "xz"});
}

TEST_CASE("filtration exactness and multiplicativity")
{
    for (auto name : {"e3_q", "e3_f2"}) {
        DGAlgebra a = fixture_algebra(name);
        int top = a.top_degree();

        /* degree-wise exactness of J(n+1) -> J(n) -> slice(n) */
        for (int n = 0; n <= top; ++n) {
            FiltrationPiece big = filtration(a, n);
            FiltrationPiece small = filtration(a, n + 1);
            DGBimodule slice = subquotient(a, n);
            CHECK(big.module.size() == small.module.size() + slice.size());
        }
        CHECK(filtration(a, top + 1).module.size() == 0);

        /* J(n) . J(m) lands in J(n+m) */
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j)
                for (auto& [t, c] : a.product(i, j))
                    CHECK(a.degree(t) >= a.degree(i) + a.degree(j));
    }
}
