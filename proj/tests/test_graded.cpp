#include "fixtures.hpp"
#include "graded.hpp"

#include <doctest.h>

using namespace hss;

namespace {

/* two-term complex k -> k in degrees 0,1 with the given map */
CochainComplex two_term(FieldSpec fs, const Scalar& entry)
{
    GradedVectorSpace space;
    space.add(0, "a");
    space.add(1, "b");
    Matrix d0(fs, 1, 1);
    d0.at(0, 0) = entry;
    std::map<int, Matrix> diff;
    diff.emplace(0, std::move(d0));
    return CochainComplex(fs, std::move(space), std::move(diff));
}

} // namespace

TEST_CASE("check_complex accepts zero and acyclic complexes, rejects d.d != 0")
{
    FieldSpec q(0);
    Field f(q);

    GradedVectorSpace space;
    space.add(0, "a");
    space.add(1, "b");
    space.add(2, "c");
    CochainComplex zero(q, space, {});
    CHECK_NOTHROW(check_complex(zero));

    CHECK_NOTHROW(check_complex(two_term(q, f.one())));

    /* identity twice fails at the first degree, naming the element */
    Matrix id(q, 1, 1);
    id.at(0, 0) = f.one();
    std::map<int, Matrix> diff;
    diff.emplace(0, id);
    diff.emplace(1, id);
    CochainComplex bad(q, space, std::move(diff));
    CHECK_THROWS_WITH_AS(check_complex(bad), doctest::Contains("degree 0"), ValidationError);
}

TEST_CASE("cohomology dims and representatives")
{
    FieldSpec q(0);
    GradedVectorSpace space;
    space.add(4, "u");
    space.add(4, "v");
    space.add(4, "w");
    CochainComplex c(q, space, {});
    CohomologyPiece piece = cohomology(c, 4);
    CHECK(piece.dim() == 3);

    /* acyclic two-term complex */
    CochainComplex acyclic = two_term(q, Field(q).one());
    CHECK(cohomology(acyclic, 0).dim() == 0);
    CHECK(cohomology(acyclic, 1).dim() == 0);

    /* fixture E3: H dims {0:1, 2:1, 5:1} */
    DGAlgebra e3 = fixture_algebra("e3_q");
    auto dims = cohomology_dims(e3.cochain_complex());
    CHECK(dims == std::map<int, std::size_t>{{0, 1}, {2, 1}, {5, 1}});

    /* projection returns class coordinates of a cocycle */
    Field f(q);
    CohomologyPiece h2 = cohomology(e3.cochain_complex(), 2);
    REQUIRE(h2.dim() == 1);
    Vec x{f.make(3)};
    Vec cocycle{f.make(3)};
    CHECK(h2.project(cocycle) == x);
}

TEST_CASE("cohomology respects the certified window")
{
    FieldSpec q(0);
    GradedVectorSpace space;
    space.add(0, "a");
    CochainComplex c(q, space, {}, DegreeWindow(-1, 0));
    CHECK_NOTHROW(cohomology(c, 0));
    CHECK_THROWS_AS(cohomology(c, 1), WindowError);
}

TEST_CASE("total complex: single row is unchanged")
{
    DGAlgebra e3 = fixture_algebra("e3_q");
    CochainComplex row = e3.cochain_complex();
    CochainComplex tot = total_complex({row}, {{}});
    CHECK(cohomology_dims(tot) == cohomology_dims(row));
    for (int n = 0; n <= 5; ++n)
        CHECK(tot.dim(n) == row.dim(n));
}

TEST_CASE("total complex: two-row identity bicomplex is acyclic and needs the sign twist")
{
    /* rows with a genuinely nonzero vertical differential */
    DGAlgebra e3 = fixture_algebra("e3_q");
    CochainComplex row = e3.cochain_complex();
    FieldSpec fs = row.field_spec();

    GradedLinearMap id_map;
    for (auto& [n, labels] : row.space().pieces())
        id_map.blocks.emplace(n, Matrix::identity(fs, labels.size()));
    GradedLinearMap zero_map;

    /* faces (d_0, d_1) = (id, 0): horizontal differential = id, total = cone */
    CochainComplex cone = total_complex({row, row}, {{}, {id_map, zero_map}});
    for (auto& [n, d] : cohomology_dims(cone))
        CHECK(d == 0);

    /* faces (id, id): horizontal = 0, total = row + desuspended row */
    CochainComplex sum = total_complex({row, row}, {{}, {id_map, id_map}});
    auto dims = cohomology_dims(sum);
    auto row_dims = cohomology_dims(row);
    for (int n = -2; n <= 6; ++n) {
        std::size_t expect = 0;
        if (row_dims.count(n))
            expect += row_dims[n];
        if (row_dims.count(n + 1))
            expect += row_dims[n + 1];
        std::size_t got = dims.count(n) ? dims[n] : 0;
        CHECK(got == expect);
    }

    /* a face that is not a chain map is rejected */
    GradedLinearMap broken;
    for (auto& [n, labels] : row.space().pieces()) {
        Matrix m = Matrix::identity(fs, labels.size());
        if (n == 3)
            m.at(0, 0) = Field(fs).make(2);
        broken.blocks.emplace(n, m);
    }
    CHECK_THROWS_AS(total_complex({row, row}, {{}, {broken, zero_map}}), ValidationError);
}

TEST_CASE("total complex: constant simplicial object realizes to the object")
{
    /* M: two-dimensional with zero differential, degrees 0 and 1 */
    FieldSpec q(0);
    GradedVectorSpace mspace;
    mspace.add(0, "m0");
    mspace.add(1, "m1");
    CochainComplex m(q, mspace, {});

    GradedLinearMap id_map;
    id_map.blocks.emplace(0, Matrix::identity(q, 1));
    id_map.blocks.emplace(1, Matrix::identity(q, 1));

    const int rows = 6;
    std::vector<CochainComplex> complexes(rows, m);
    std::vector<std::vector<GradedLinearMap>> faces(rows);
    for (int p = 1; p < rows; ++p)
        faces[p].assign(p + 1, id_map);

    CochainComplex tot = total_complex(complexes, faces);
    /* the augmentation is a quasi-isomorphism; degrees above the
     * truncation boundary agree with M */
    auto dims = cohomology_dims(tot);
    for (int n = -3; n <= 1; ++n) {
        std::size_t expect = (n == 0 || n == 1) ? 1 : 0;
        CHECK(dims.count(n) == (expect ? 1 : 0));
        if (expect)
            CHECK(dims[n] == expect);
    }
}
