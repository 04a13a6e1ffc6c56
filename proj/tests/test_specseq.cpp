#include "checks.hpp"

#include <doctest.h>

using namespace hss;

TEST_CASE("E0: the spectral sequence is k at (0,0) from page 1 on")
{
    Analysis an(fixture_algebra("e0_q"), DegreeWindow(-3, 3), Budget{});
    SpectralSequence& ss = an.ss();
    CHECK(ss.stable_page() == 1);
    CHECK(ss.cell_dim(1, 0, 0) == 1);
    for (int n = -3; n <= 3; ++n)
        for (int p = ss.min_level(); p <= 0; ++p)
            if (!(p == 0 && n == 0))
                CHECK(ss.cell_dim(1, p, n) == 0);
    AbutmentReport ab = abutment_check(ss, an.hh(), 0);
    CHECK(ab.ok);
    CHECK(ab.hh_dim == 1);
}

TEST_CASE("E1: filtration levels collapse (J(1)=J(2)=J(3)) and E2 = H (x) Ext")
{
    Analysis an(fixture_algebra("e1_q"), DegreeWindow(-5, 5), Budget{});
    SpectralSequence& ss = an.ss();
    const HochschildComplex& cx = *an.hh_complex();
    for (int n = -5; n <= 5; ++n) {
        CHECK(cx.filtration_dim(n, -1) == cx.filtration_dim(n, -3));
        CHECK(cx.filtration_dim(n, -2) == cx.filtration_dim(n, -3));
    }
    CHECK(ss.min_level() == -3);

    CHECK_NOTHROW(an.tensor().check_dimensions());
    CHECK_NOTHROW(an.tensor().check_products());

    /* no differentials anywhere: collapse right at the start */
    CHECK(ss.collapse_page() == 2);
    CHECK_NOTHROW(ss.check_pages_shrink());
}

TEST_CASE("E3: nonzero d1 where the algebra differential acts, E2 kills the z/x2 pair")
{
    Analysis an(fixture_algebra("e3_q"), DegreeWindow(-4, 4), Budget{});
    SpectralSequence& ss = an.ss();

    /* H^3(A) = 0 and H^4(A) = 0: page 2 empties columns -3 and -4 */
    bool saw_nonzero_d1 = false;
    for (int n = -4; n + 1 <= 4; ++n)
        for (int p = ss.min_level(); p <= 0; ++p) {
            if (ss.cell_dim(1, p, n) == 0)
                continue;
            if (!ss.differential(1, p, n).is_zero())
                saw_nonzero_d1 = true;
        }
    CHECK(saw_nonzero_d1);
    for (int n = -4; n <= 4; ++n) {
        CHECK(ss.cell_dim(2, -3, n) == 0);
        CHECK(ss.cell_dim(2, -4, n) == 0);
    }

    CHECK_NOTHROW(e1_identification(ss));
    CHECK_NOTHROW(e2_differential_check(ss));
    for (int r = 1; r <= ss.stable_page(); ++r) {
        CHECK_NOTHROW(ss.check_d_squared(r));
        CHECK_NOTHROW(ss.check_leibniz(r));
    }
    CHECK_NOTHROW(ss.check_pages_shrink());
}

TEST_CASE("abutment: E^inf column sums and the HH filtration match")
{
    for (auto name : {"e1_q", "e3_q", "e3_f2"}) {
        Analysis an(fixture_algebra(name), DegreeWindow(-4, 4), Budget{});
        for (int n = -4; n <= 4; ++n) {
            AbutmentReport ab = abutment_check(an.ss(), an.hh(), n);
            INFO(name, " degree ", n);
            CHECK(ab.ok);
        }
    }
}

TEST_CASE("column-0 permanent cycles equal the shearing image as subspaces")
{
    for (auto name : {"e0_q", "e2_f2", "e2_q", "e3_q"}) {
        Analysis an(fixture_algebra(name), DegreeWindow(-4, 4), Budget{});
        auto reports = permanent_cycles_vs_shearing(an.ss(), an.tensor(), an.shear());
        INFO(name);
        CHECK_FALSE(reports.empty());
        for (auto& r : reports)
            CHECK(r.equal);
    }
}

TEST_CASE("E0 survivors: everything in column 0 survives")
{
    Analysis an(fixture_algebra("e0_q"), DegreeWindow(-3, 3), Budget{});
    Subspace s = an.ss().survivors_column0(0);
    CHECK(s.dim() == 1);
    CHECK(s.dim() == an.ss().cell_dim(2, 0, 0));
}

TEST_CASE("Frobenius powers over F_2 on E2: the squared generator is a d2-cycle")
{
    Analysis an(fixture_algebra("e2_f2"), DegreeWindow(-6, 6), Budget{});
    auto [deg, idx] = detect_central_class(an.ext());
    CHECK(deg == -1);

    /* the square of the generator is nonzero (polynomial Ext) */
    Vec sq = an.ext().product(-1, 0, -1, 0);
    CHECK_FALSE(vec_is_zero(sq));

    FrobeniusReport rep = frobenius_permanent_cycles(an.ss(), an.tensor(), deg, idx);
    CHECK(rep.all_cycles);
    REQUIRE_FALSE(rep.pages_checked.empty());
    CHECK(rep.pages_checked[0] == 2);
}

TEST_CASE("second-quadrant support and window guards")
{
    Analysis an(fixture_algebra("e1_q"), DegreeWindow(-3, 3), Budget{});
    SpectralSequence& ss = an.ss();
    for (int n = -3; n <= 3; ++n) {
        CHECK(ss.cell_dim(1, 1, n) == 0);
        CHECK(ss.cell_dim(1, ss.min_level() - 1, n) == 0);
        /* nonzero cells have p <= 0 <= q */
        for (int p = ss.min_level(); p <= 0; ++p)
            if (ss.cell_dim(2, p, n) != 0)
                CHECK(-n - p >= 0);
    }
    CHECK_THROWS_AS(ss.cell(1, 0, 9), WindowError);
    CHECK_THROWS_AS(ss.cell(0, 0, 0), WindowError);
    CHECK_THROWS_AS(ss.differential(1, 0, 3), WindowError);
}

TEST_CASE("the check battery passes on a small window")
{
    for (auto name : {"e1_f2", "e3_q"}) {
        Analysis an(fixture_algebra(name), DegreeWindow(-4, 4), Budget{});
        auto checks = run_check_battery(an);
        for (auto& c : checks) {
            INFO(name, ": ", c.name, ": ", c.detail);
            CHECK(c.pass);
        }
    }
}
