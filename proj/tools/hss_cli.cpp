#include "hss.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

int fail_input(const char* err)
{
    std::cerr << "error: " << (err ? err : "unknown input error") << "\n";
    return HSS_INPUT_ERROR;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"hss: Hochschild cohomology, Ext algebras, the shearing map and the "
                 "coefficient-filtration spectral sequence of a coconnective dga, exactly"};
    app.require_subcommand(1);

    std::string input;
    int window = 8;
    int pages = 0;
    long budget = 0;
    std::string format = "text";
    std::string out_path;

    const std::vector<std::string> commands = {"validate", "homology", "hh", "ext",
                                               "shear", "ss", "check-all"};
    const char* descriptions[] = {
        "check the dga axioms and report H*(A)",
        "cohomology of A with representatives",
        "Hochschild cohomology table with cup products",
        "Ext algebra table with products",
        "shearing map HH -> Ext with image, kernel and nilpotency",
        "spectral sequence pages, differentials and abutment",
        "run the full verification battery on one input",
    };
    for (std::size_t i = 0; i < commands.size(); ++i) {
        auto* sub = app.add_subcommand(commands[i], descriptions[i]);
        sub->add_option("input", input,
                        "input .dga file, or fixture:<name> (" +
                            std::string("e0_f2 e0_q e1_f2 e1_q e2_f2 e2_q e3_f2 e3_q") + ")")
            ->required();
        sub->add_option("--window", window, "certify total degrees |n| <= N (default 8)");
        sub->add_option("--pages", pages, "limit reported pages (default: to stabilization)");
        sub->add_option("--format", format, "text | data | svg (default text)");
        sub->add_option("--budget", budget, "bar word budget override");
        sub->add_option("--out", out_path, "write the report to a file instead of stdout");
    }

    CLI11_PARSE(app, argc, argv);
    std::string command = app.get_subcommands()[0]->get_name();

    hss_dga* dga = nullptr;
    char* err = nullptr;
    int rc;
    const std::string fixture_prefix = "fixture:";
    if (input.rfind(fixture_prefix, 0) == 0) {
        const char* src = hss_fixture_source(input.substr(fixture_prefix.size()).c_str());
        if (!src)
            return fail_input(("unknown fixture '" + input + "'").c_str());
        rc = hss_dga_parse(src, &dga, &err);
    } else {
        rc = hss_dga_parse_file(input.c_str(), &dga, &err);
    }
    if (rc != HSS_OK) {
        int code = fail_input(err);
        hss_string_free(err);
        return code;
    }

    hss_options opts;
    hss_options_init(&opts);
    opts.window = window;
    opts.pages = pages;
    opts.budget = budget;
    opts.format = format.c_str();

    hss_report* report = nullptr;
    rc = hss_run(dga, command.c_str(), &opts, &report, &err);
    if (report) {
        const char* body = hss_report_body(report);
        if (!out_path.empty()) {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) {
                hss_report_free(report);
                hss_dga_free(dga);
                return fail_input(("cannot write '" + out_path + "'").c_str());
            }
            out << body;
        } else {
            std::cout << body;
        }
        hss_report_free(report);
    }
    if (err) {
        std::cerr << "error: " << err << "\n";
        hss_string_free(err);
    }
    hss_dga_free(dga);
    return rc;
}
