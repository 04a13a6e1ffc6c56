#include "checks.hpp"

#include <doctest.h>

using namespace hss;

TEST_CASE("bar word enumeration is exhaustive and deterministic")
{
    /* E0: the empty word only */
    auto w0 = enumerate_words(fixture_algebra("e0_q"), 7);
    CHECK(w0.size() == 1);
    CHECK(w0[0].size() == 1);
    CHECK(w0[0][0].length() == 0);

    /* E1 up to internal degree 7: [], [x], [x|x] */
    DGAlgebra e1 = fixture_algebra("e1_q");
    auto w1 = enumerate_words(e1, 7);
    std::size_t total = 0;
    for (auto& [deg, words] : w1)
        total += words.size();
    CHECK(total == 3);
    CHECK(w1[0].size() == 1);
    CHECK(w1[3].size() == 1);
    CHECK(w1[6].size() == 1);
    CHECK(w1[6][0].label(e1) == "[x|x]");

    /* E3 at internal degree 4: [x|x] and [x2] */
    DGAlgebra e3 = fixture_algebra("e3_q");
    auto w3 = enumerate_words(e3, 4);
    REQUIRE(w3.count(4) == 1);
    REQUIRE(w3[4].size() == 2);
    CHECK(w3[4][0].label(e3) == "[x2]");
    CHECK(w3[4][1].label(e3) == "[x|x]");

    /* the budget guards enumeration */
    Budget tiny;
    tiny.max_words = 2;
    CHECK_THROWS_AS(enumerate_words(e3, 12, tiny), BudgetError);
}

TEST_CASE("C*(E0;k) is k in degree 0")
{
    DGAlgebra e0 = fixture_algebra("e0_q");
    HochschildComplex cx(e0, trivial_bimodule(e0), DegreeWindow(-4, 4));
    for (int n = -4; n <= 4; ++n)
        CHECK(cx.dim(n) == (n == 0 ? 1 : 0));
    cx.check_d_squared();
}

TEST_CASE("C*(E1;k) over Q: one cochain in each degree -2t, zero differential")
{
    DGAlgebra e1 = fixture_algebra("e1_q");
    HochschildComplex cx(e1, trivial_bimodule(e1), DegreeWindow(-8, 0));
    for (int n = -8; n <= 0; ++n) {
        std::size_t expect = (n <= 0 && (-n) % 2 == 0) ? 1 : 0;
        CHECK(cx.dim(n) == expect);
    }
    for (int n = -8; n <= -1; ++n)
        for (auto& col : cx.delta(n))
            CHECK(col.empty());
}

TEST_CASE("delta squared vanishes on C*(E3;A), the sign-convention acid test")
{
    for (auto name : {"e3_q", "e3_f2"}) {
        DGAlgebra e3 = fixture_algebra(name);
        HochschildComplex cx(e3, regular_bimodule(e3), DegreeWindow(-6, 6));
        CHECK_NOTHROW(cx.check_d_squared());
    }
}

TEST_CASE("sparse and dense routes agree on dims and cohomology")
{
    DGAlgebra e3 = fixture_algebra("e3_f2");
    HochschildComplex cx(e3, regular_bimodule(e3), DegreeWindow(-3, 3));
    CochainComplex dense = cx.as_cochain_complex();
    CHECK_NOTHROW(check_complex(dense));
    for (int n = -3; n <= 3; ++n) {
        std::size_t sparse_dim = cx.dim(n) - cx.reduction(n).rank() - cx.reduction(n - 1).rank();
        CHECK(cohomology(dense, n).dim() == sparse_dim);
    }
}

TEST_CASE("cup product: unit, word concatenation, Leibniz sample")
{
    DGAlgebra e1 = fixture_algebra("e1_q");
    auto cx = std::make_shared<HochschildComplex>(e1, trivial_bimodule(e1), DegreeWindow(-8, 0));
    GradedAlgebraTable ext(cx, GradedAlgebraTable::Kind::trivial);

    /* unit acts as a two-sided unit (checked for every class) */
    CHECK_NOTHROW(ext.check_associative_unital());

    /* y_1 . y_1 is a nonzero multiple of y_2 */
    REQUIRE(ext.dim(-2) == 1);
    REQUIRE(ext.dim(-4) == 1);
    Vec prod = ext.product(-2, 0, -2, 0);
    CHECK_FALSE(prod[0].is_zero());

    /* Leibniz for the cup differential on the acid-test fixture */
    DGAlgebra e3 = fixture_algebra("e3_q");
    HochschildComplex rcx(e3, regular_bimodule(e3), DegreeWindow(-5, 5));
    CHECK_NOTHROW(check_cup_leibniz_sample(rcx, false));
}

TEST_CASE("Ext tables of the bundled fixtures")
{
    /* Ext(E0) = k */
    GradedAlgebraTable ext0 = ext_algebra(fixture_algebra("e0_q"), DegreeWindow(-6, 6));
    CHECK(ext0.dims() == std::map<int, std::size_t>{{0, 1}});

    /* Ext(E1) over Q: dims 1 in degrees 0, -2, -4, ... */
    GradedAlgebraTable ext1 = ext_algebra(fixture_algebra("e1_q"), DegreeWindow(-8, 8));
    std::map<int, std::size_t> expect1;
    for (int t = 0; 2 * t <= 8; ++t)
        expect1[-2 * t] = 1;
    CHECK(ext1.dims() == expect1);

    /* Ext(E2): dims 1 in degrees 0, -1, -2, ... */
    GradedAlgebraTable ext2 = ext_algebra(fixture_algebra("e2_f2"), DegreeWindow(-6, 6));
    std::map<int, std::size_t> expect2;
    for (int t = 0; t <= 6; ++t)
        expect2[-t] = 1;
    CHECK(ext2.dims() == expect2);

    /* polynomial structure: every product of one-dimensional classes is
     * nonzero over F_2 */
    for (int s = -1; s >= -3; --s)
        for (int t = -1; t >= -3; --t)
            CHECK_FALSE(vec_is_zero(ext2.product(s, 0, t, 0)));
}

TEST_CASE("HH tables of the bundled fixtures")
{
    GradedAlgebraTable hh0 = hh_algebra(fixture_algebra("e0_f2"), DegreeWindow(-4, 4));
    CHECK(hh0.dims() == std::map<int, std::size_t>{{0, 1}});
    CHECK_FALSE(vec_is_zero(hh0.unit_class()));

    /* HH(E1) over Q matches the exterior-times-polynomial count: one class
     * in every degree n <= 3 except n = 2 */
    GradedAlgebraTable hh1 = hh_algebra(fixture_algebra("e1_q"), DegreeWindow(-6, 6));
    std::map<int, std::size_t> expect;
    for (int n = -6; n <= 3; ++n)
        if (n != 2)
            expect[n] = 1;
    CHECK(hh1.dims() == expect);
    CHECK_NOTHROW(hh1.check_graded_commutative());

    /* HH^0(E3) contains the unit */
    GradedAlgebraTable hh3 = hh_algebra(fixture_algebra("e3_q"), DegreeWindow(-4, 4));
    CHECK(hh3.dim(0) >= 1);
    CHECK_FALSE(vec_is_zero(hh3.unit_class()));
    CHECK_NOTHROW(hh3.check_associative_unital());
    CHECK_NOTHROW(hh3.check_graded_commutative());
}

TEST_CASE("shearing: identity on E0, ring map with central image, kernel structure on E1")
{
    Analysis an0(fixture_algebra("e0_q"), DegreeWindow(-4, 4), Budget{});
    const ShearingResult& s0 = an0.shear();
    REQUIRE(s0.map.count(0) == 1);
    CHECK(s0.map.at(0).at(0, 0).is_one());
    CHECK(s0.image.at(0).dim() == 1);
    CHECK(s0.kernel.at(0).dim() == 0);

    Analysis an1(fixture_algebra("e1_q"), DegreeWindow(-6, 6), Budget{});
    const ShearingResult& s1 = an1.shear();
    CHECK_NOTHROW(check_shearing_ring_map(an1.hh(), an1.ext(), s1));
    CHECK_NOTHROW(check_shearing_centrality(an1.ext(), s1));

    /* image covers the polynomial generators; kernel is the odd part */
    for (int n = 0; n >= -6; n -= 2)
        CHECK(s1.image.at(n).dim() == 1);
    for (int n : {3, 1, -1, -3}) {
        CHECK(s1.kernel.at(n).dim() == 1);
        CHECK(s1.image.count(n) == 0 ? true : s1.image.at(n).dim() == 0);
    }
}

TEST_CASE("nilpotency of the shearing kernel")
{
    /* empty kernel reports index 1 */
    Analysis an0(fixture_algebra("e0_q"), DegreeWindow(-4, 4), Budget{});
    NilpotencyResult nil0 = an0.nilpotency();
    CHECK(nil0.index == 1);
    CHECK(nil0.certified());

    /* E1 over Q: kernel is generated by the exterior class, squares vanish */
    Analysis an1(fixture_algebra("e1_q"), DegreeWindow(-6, 6), Budget{});
    NilpotencyResult nil1 = an1.nilpotency();
    CHECK(nil1.index == 2);
}
