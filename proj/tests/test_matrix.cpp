#include "matrix.hpp"

#include <doctest.h>

using namespace hss;

namespace {

/* tiny deterministic generator for property tests */
struct Lcg {
    std::uint64_t state = 88172645463325252ull;
    std::uint64_t next()
    {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    std::int64_t range(std::int64_t lo, std::int64_t hi) /* inclusive */
    {
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

Matrix random_matrix(Lcg& rng, FieldSpec fs, std::size_t rows, std::size_t cols)
{
    Field f(fs);
    Matrix m(fs, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = f.make(rng.range(-4, 4));
    return m;
}

} // namespace

TEST_CASE("scalar arithmetic and canonical forms")
{
    Field q{FieldSpec(0)};
    CHECK(q.add(q.make(1, 3), q.make(1, 6)) == q.make(1, 2));
    CHECK(q.make(-2, -4) == q.make(1, 2));
    CHECK(q.mul(q.make(2, 3), q.make(3, 2)).is_one());
    CHECK(q.inv(q.make(-2, 5)) == q.make(-5, 2));

    Field f7{FieldSpec(7)};
    CHECK(f7.make(-1) == f7.make(6));
    CHECK(f7.mul(f7.make(3), f7.make(5)) == f7.make(1));
    CHECK(f7.inv(f7.make(3)) == f7.make(5));
    CHECK(f7.make(1, 2) == f7.make(4));

    CHECK_THROWS_AS(FieldSpec(4), ValidationError);
    CHECK_THROWS_AS(FieldSpec(-3), ValidationError);
    CHECK_THROWS_AS(f7.inv(f7.zero()), Error);
}

TEST_CASE("scalar print/parse round trip, including promotion to big values")
{
    Field q{FieldSpec(0)};
    for (auto s : {q.make(0), q.make(7), q.make(-3, 4), q.make(22, 7)})
        CHECK(q.parse(s.str()) == s);

    /* force values beyond int64 */
    Scalar big = q.one();
    for (int i = 0; i < 8; ++i)
        big = q.mul(big, q.make(1000000007));
    CHECK(big.is_big());
    CHECK(q.parse(big.str()) == big);
    CHECK(q.mul(big, q.inv(big)).is_one());

    Field f5{FieldSpec(5)};
    for (auto s : {f5.make(0), f5.make(3)})
        CHECK(f5.parse(s.str()) == s);
    CHECK_THROWS_AS(f5.parse("1/2"), Error);
    CHECK_THROWS_AS(q.parse("x"), Error);
    CHECK_THROWS_AS(q.parse("1/0"), Error);
}

TEST_CASE("rref worked examples")
{
    /* 2x2 identity over F_5: already reduced */
    Matrix id = Matrix::identity(FieldSpec(5), 2);
    auto [r1, p1] = rref(id);
    CHECK(r1 == id);
    CHECK(p1 == std::vector<std::size_t>{0, 1});

    /* zero 3x4 matrix */
    Matrix z(FieldSpec(0), 3, 4);
    auto [r2, p2] = rref(z);
    CHECK(r2.is_zero());
    CHECK(p2.empty());

    /* [[2,4],[1,2]] over F_7 -> [[1,2],[0,0]], pivots [0] */
    Field f7{FieldSpec(7)};
    Matrix m(FieldSpec(7), 2, 2);
    m.at(0, 0) = f7.make(2);
    m.at(0, 1) = f7.make(4);
    m.at(1, 0) = f7.make(1);
    m.at(1, 1) = f7.make(2);
    auto [r3, p3] = rref(m);
    CHECK(p3 == std::vector<std::size_t>{0});
    CHECK(r3.at(0, 0).is_one());
    CHECK(r3.at(0, 1) == f7.make(2));
    CHECK(r3.at(1, 0).is_zero());
    CHECK(r3.at(1, 1).is_zero());
}

TEST_CASE("kernel worked examples")
{
    CHECK(kernel_basis(Matrix::identity(FieldSpec(0), 3)).dim() == 0);

    Matrix z(FieldSpec(3), 2, 2);
    CHECK(kernel_basis(z).dim() == 2);

    /* [[1,1]] over Q -> span{(1,-1)} */
    Field q{FieldSpec(0)};
    Matrix m(FieldSpec(0), 1, 2);
    m.at(0, 0) = q.one();
    m.at(0, 1) = q.one();
    Subspace ker = kernel_basis(m);
    REQUIRE(ker.dim() == 1);
    CHECK(ker.basis().at(0, 0) == q.one());
    CHECK(ker.basis().at(0, 1) == q.make(-1));
}

TEST_CASE("solve, sum, intersect, quotient worked examples")
{
    Field q{FieldSpec(0)};
    Matrix id = Matrix::identity(FieldSpec(0), 3);
    Vec b{q.make(2), q.make(-1), q.make(1, 2)};
    auto x = solve(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    /* intersect(span{e1+e2}, span{e1}) = 0 in Q^2 */
    Subspace a = Subspace::span(FieldSpec(0), {{q.one(), q.one()}}, 2);
    Subspace e1 = Subspace::span(FieldSpec(0), {{q.one(), q.zero()}}, 2);
    CHECK(subspace_intersect(a, e1).dim() == 0);
    CHECK(subspace_sum(a, e1).dim() == 2);

    /* quotient(F_2^2, span{e_1}): one representative congruent to e_2 */
    Field f2{FieldSpec(2)};
    Subspace full = Subspace::span(FieldSpec(2), {{f2.one(), f2.zero()}, {f2.zero(), f2.one()}}, 2);
    Subspace line = Subspace::span(FieldSpec(2), {{f2.one(), f2.zero()}}, 2);
    auto reps = quotient_representatives(full, line);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0][1].is_one());

    CHECK_THROWS_AS(quotient_representatives(line, full), Error);
    Subspace other(FieldSpec(2), 3);
    CHECK_THROWS_AS(subspace_sum(line, other), Error);
}

TEST_CASE("random small matrices: rref idempotent, kernel annihilates, rank-nullity")
{
    Lcg rng;
    for (FieldSpec fs : {FieldSpec(0), FieldSpec(2), FieldSpec(5)}) {
        for (int trial = 0; trial < 25; ++trial) {
            std::size_t rows = 1 + rng.next() % 8;
            std::size_t cols = 1 + rng.next() % 8;
            Matrix m = random_matrix(rng, fs, rows, cols);

            auto [r, pivots] = rref(m);
            auto [rr, pivots2] = rref(r);
            CHECK(rr == r);
            CHECK(pivots == pivots2);

            Subspace ker = kernel_basis(m);
            CHECK(ker.dim() + pivots.size() == cols);
            for (std::size_t i = 0; i < ker.dim(); ++i)
                CHECK(vec_is_zero(m.apply(ker.basis().row(i))));

            /* consistent systems solve exactly */
            Vec v(cols);
            Field f(fs);
            for (std::size_t j = 0; j < cols; ++j)
                v[j] = f.make(rng.range(-3, 3));
            Vec b = m.apply(v);
            auto x = solve(m, b);
            REQUIRE(x.has_value());
            CHECK(m.apply(*x) == b);

            /* dim(sum) + dim(intersect) = dim(a) + dim(b) is asserted inside */
            Matrix m2 = random_matrix(rng, fs, rng.next() % 4 + 1, cols);
            Subspace im1 = image_basis(m.transpose());
            Subspace im2 = image_basis(m2.transpose());
            Subspace meet = subspace_intersect(im1, im2);
            CHECK(subspace_sum(im1, im2).dim() + meet.dim() == im1.dim() + im2.dim());
        }
    }
}
