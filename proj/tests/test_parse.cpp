#include "fixtures.hpp"
#include "report.hpp"

#include <doctest.h>

using namespace hss;

TEST_CASE("fixtures parse with the expected shape")
{
    DGAFile f = parse_dga(fixture_source("e1_q"));
    CHECK(f.field.characteristic == 0);
    CHECK(f.basis.size() == 2);
    CHECK(f.basis[0] == std::pair<std::string, int>{"1", 0});
    CHECK(f.basis[1] == std::pair<std::string, int>{"x", 3});
    CHECK(f.d_lines.empty());
    CHECK(f.mul_lines.empty());

    DGAFile e3 = parse_dga(fixture_source("e3_f2"));
    CHECK(e3.basis.size() == 5);
    CHECK(e3.d_lines.size() == 1);
    CHECK(e3.mul_lines.size() == 3);
}

TEST_CASE("print/parse round trip on every fixture")
{
    for (const auto& name : fixture_names()) {
        DGAFile f = parse_dga(fixture_source(name));
        CHECK(parse_dga(print_dga(f)) == f);
    }
}

TEST_CASE("parse errors carry positions and reasons")
{
    /* duplicate basis label */
    try {
        parse_dga("[field]\ncharacteristic = 2\n[basis]\n1 0\nx 2\nx 3\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 6);
        CHECK(std::string(e.what()).find("duplicate basis label 'x'") != std::string::npos);
    }

    /* non-prime characteristic */
    CHECK_THROWS_WITH_AS(parse_dga("[field]\ncharacteristic = 4\n[basis]\n1 0\n"),
                         doctest::Contains("characteristic must be 0 or prime"), ParseError);

    /* unknown key in [field] */
    CHECK_THROWS_WITH_AS(parse_dga("[field]\nchar = 2\n[basis]\n1 0\n"),
                         doctest::Contains("unknown key"), ParseError);

    /* unknown section */
    CHECK_THROWS_WITH_AS(parse_dga("[field]\ncharacteristic = 2\n[stuff]\n"),
                         doctest::Contains("unknown section"), ParseError);

    /* malformed scalar */
    CHECK_THROWS_WITH_AS(
        parse_dga("[field]\ncharacteristic = 0\n[basis]\n1 0\nx 2\n[d]\nx = a*x\n"),
        doctest::Contains("malformed scalar"), ParseError);

    /* fractions need characteristic 0 */
    CHECK_THROWS_AS(
        parse_dga("[field]\ncharacteristic = 2\n[basis]\n1 0\nx 2\nz 3\n[d]\nz = 1/2*x\n"),
        ParseError);

    /* the unit must open the basis */
    CHECK_THROWS_WITH_AS(parse_dga("[field]\ncharacteristic = 2\n[basis]\nx 2\n1 0\n"),
                         doctest::Contains("first basis line must be '1 0'"), ParseError);

    /* missing field section */
    CHECK_THROWS_WITH_AS(parse_dga("[basis]\n1 0\n"), doctest::Contains("missing [field]"),
                         ParseError);

    /* duplicate product line */
    CHECK_THROWS_WITH_AS(parse_dga("[field]\ncharacteristic = 0\n[basis]\n1 0\nx 2\n[mul]\n"
                                   "x*x = 1*x\nx*x = 1*x\n"),
                         doctest::Contains("duplicate product"), ParseError);
}

TEST_CASE("products with the unit are rejected at build")
{
    DGAFile f = parse_dga("[field]\ncharacteristic = 0\n[basis]\n1 0\nx 2\n[mul]\n1*x = 1*x\n");
    CHECK_THROWS_WITH_AS(build_algebra(f), doctest::Contains("implied"), ValidationError);
}

TEST_CASE("terms accept signs, implicit coefficients and fractions")
{
    DGAFile f = parse_dga("[field]\ncharacteristic = 0\n[basis]\n1 0\nx 2\ny 2\nz 3\n"
                          "[d]\nz = x - 2*y\n");
    REQUIRE(f.d_lines.size() == 1);
    REQUIRE(f.d_lines[0].terms.size() == 2);
    Field q{FieldSpec(0)};
    CHECK(f.d_lines[0].terms[0].coeff == q.one());
    CHECK(f.d_lines[0].terms[1].coeff == q.make(-2));
}

TEST_CASE("digest is deterministic and input-sensitive")
{
    CHECK(fnv1a_digest("abc") == fnv1a_digest("abc"));
    CHECK(fnv1a_digest("abc") != fnv1a_digest("abd"));
    CHECK(fnv1a_digest("").size() == 16);
}
