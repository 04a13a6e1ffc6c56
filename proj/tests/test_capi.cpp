#include "hss.h"

#include <doctest.h>

#include <string>

TEST_CASE("version and fixtures through the C surface")
{
    CHECK(std::string(hss_version()) == "1.0.0");
    CHECK(hss_fixture_count() == 8);
    bool saw_e3 = false;
    for (int i = 0; i < hss_fixture_count(); ++i) {
        const char* name = hss_fixture_name(i);
        REQUIRE(name != nullptr);
        CHECK(hss_fixture_source(name) != nullptr);
        if (std::string(name) == "e3_q")
            saw_e3 = true;
    }
    CHECK(saw_e3);
    CHECK(hss_fixture_name(99) == nullptr);
    CHECK(hss_fixture_source("nope") == nullptr);
}

TEST_CASE("parse: status codes and error strings")
{
    hss_dga* dga = nullptr;
    char* err = nullptr;
    CHECK(hss_dga_parse("garbage", &dga, &err) == HSS_INPUT_ERROR);
    REQUIRE(err != nullptr);
    hss_string_free(err);
    err = nullptr;

    CHECK(hss_dga_parse_file("/no/such/file.dga", &dga, &err) == HSS_INPUT_ERROR);
    hss_string_free(err);
    err = nullptr;

    REQUIRE(hss_dga_parse(hss_fixture_source("e1_q"), &dga, &err) == HSS_OK);
    REQUIRE(dga != nullptr);
    hss_dga_free(dga);
}

TEST_CASE("run: reports, determinism and the exit contract")
{
    hss_dga* dga = nullptr;
    char* err = nullptr;
    REQUIRE(hss_dga_parse(hss_fixture_source("e1_f2"), &dga, &err) == HSS_OK);

    hss_options opts;
    hss_options_init(&opts);
    opts.window = 4;

    hss_report* r1 = nullptr;
    CHECK(hss_run(dga, "validate", &opts, &r1, &err) == HSS_OK);
    REQUIRE(r1 != nullptr);
    CHECK(hss_report_ok(r1) == 1);
    CHECK(hss_report_size(r1) > 0);

    hss_report* r2 = nullptr;
    CHECK(hss_run(dga, "validate", &opts, &r2, &err) == HSS_OK);
    CHECK(std::string(hss_report_body(r1)) == hss_report_body(r2));
    hss_report_free(r1);
    hss_report_free(r2);

    hss_report* r3 = nullptr;
    CHECK(hss_run(dga, "check-all", &opts, &r3, &err) == HSS_OK);
    REQUIRE(r3 != nullptr);
    CHECK(hss_report_ok(r3) == 1);
    CHECK(std::string(hss_report_body(r3)).find("PASS") != std::string::npos);
    hss_report_free(r3);

    /* data and svg formats render */
    opts.format = "data";
    hss_report* r4 = nullptr;
    CHECK(hss_run(dga, "hh", &opts, &r4, &err) == HSS_OK);
    CHECK(std::string(hss_report_body(r4)).find("command hh") != std::string::npos);
    hss_report_free(r4);

    opts.format = "svg";
    hss_report* r5 = nullptr;
    CHECK(hss_run(dga, "ss", &opts, &r5, &err) == HSS_OK);
    CHECK(std::string(hss_report_body(r5)).find("<svg") != std::string::npos);
    hss_report_free(r5);

    /* unknown command */
    opts.format = "text";
    hss_report* r6 = nullptr;
    CHECK(hss_run(dga, "frobnicate", &opts, &r6, &err) == HSS_INPUT_ERROR);
    CHECK(r6 == nullptr);
    hss_string_free(err);
    err = nullptr;

    hss_dga_free(dga);
}

TEST_CASE("validate on an invalid algebra: report plus input-error status")
{
    const char* bad = "[field]\ncharacteristic = 0\n[basis]\n1 0\ny 1\n";
    hss_dga* dga = nullptr;
    char* err = nullptr;
    REQUIRE(hss_dga_parse(bad, &dga, &err) == HSS_OK); /* parses fine */

    hss_report* rep = nullptr;
    CHECK(hss_run(dga, "validate", nullptr, &rep, &err) == HSS_INPUT_ERROR);
    REQUIRE(rep != nullptr);
    CHECK(hss_report_ok(rep) == 0);
    CHECK(std::string(hss_report_body(rep)).find("degree 1") != std::string::npos);
    hss_report_free(rep);

    /* other commands refuse invalid inputs with an error string */
    hss_report* rep2 = nullptr;
    CHECK(hss_run(dga, "hh", nullptr, &rep2, &err) == HSS_INPUT_ERROR);
    CHECK(rep2 == nullptr);
    REQUIRE(err != nullptr);
    hss_string_free(err);
    hss_dga_free(dga);
}
