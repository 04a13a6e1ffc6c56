#include "hss.h"

#include "checks.hpp"

#include <cstring>
#include <string>

using namespace hss;

struct hss_dga {
    DGAFile file;
    DGAlgebra algebra;
    std::string source;
};

struct hss_report {
    std::string body;
    int ok = 1;
};

namespace {

char* dup_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_err(char** err, const std::string& msg)
{
    if (err)
        *err = dup_string(msg);
}

int parse_common(const std::string& text, hss_dga** out, char** err)
{
    if (!out)
        return HSS_INPUT_ERROR;
    *out = nullptr;
    try {
        DGAFile file = parse_dga(text);
        DGAlgebra algebra = build_algebra(file);
        *out = new hss_dga{std::move(file), std::move(algebra), text};
        return HSS_OK;
    } catch (const Error& e) {
        set_err(err, e.what());
        return HSS_INPUT_ERROR;
    }
}

} // namespace

extern "C" {

void hss_options_init(hss_options* opts)
{
    if (!opts)
        return;
    opts->window = 8;
    opts->pages = 0;
    opts->budget = 0;
    opts->format = nullptr;
}

const char* hss_version(void) { return kVersion; }

int hss_fixture_count(void) { return static_cast<int>(fixture_names().size()); }

const char* hss_fixture_name(int index)
{
    const auto& names = fixture_names();
    if (index < 0 || static_cast<std::size_t>(index) >= names.size())
        return nullptr;
    return names[static_cast<std::size_t>(index)].c_str();
}

const char* hss_fixture_source(const char* name)
{
    if (!name || !is_fixture_name(name))
        return nullptr;
    return fixture_source(name).c_str();
}

int hss_dga_parse(const char* text, hss_dga** out, char** err)
{
    if (!text) {
        set_err(err, "null input text");
        return HSS_INPUT_ERROR;
    }
    return parse_common(text, out, err);
}

int hss_dga_parse_file(const char* path, hss_dga** out, char** err)
{
    if (!path) {
        set_err(err, "null path");
        return HSS_INPUT_ERROR;
    }
    try {
        return parse_common(read_file(path), out, err);
    } catch (const Error& e) {
        set_err(err, e.what());
        return HSS_INPUT_ERROR;
    }
}

void hss_dga_free(hss_dga* a) { delete a; }

int hss_run(const hss_dga* a, const char* command, const hss_options* opts, hss_report** out,
            char** err)
{
    if (!a || !command || !out) {
        set_err(err, "null argument");
        return HSS_INPUT_ERROR;
    }
    *out = nullptr;
    hss_options defaults;
    hss_options_init(&defaults);
    if (!opts)
        opts = &defaults;
    RunOptions ro;
    ro.window = opts->window > 0 ? opts->window : 8;
    ro.pages = opts->pages;
    ro.budget = opts->budget > 0 ? static_cast<std::size_t>(opts->budget) : 0;
    std::string format = opts->format ? opts->format : "text";

    try {
        Report rep = run_command(a->algebra, a->source, command, ro);
        auto* r = new hss_report{render(rep, format), rep.ok ? 1 : 0};
        *out = r;
        if (rep.ok)
            return HSS_OK;
        return std::string(command) == "validate" ? HSS_INPUT_ERROR : HSS_CHECK_FAILED;
    } catch (const ValidationError& e) {
        set_err(err, e.what());
        return HSS_INPUT_ERROR;
    } catch (const BudgetError& e) {
        set_err(err, e.what());
        return HSS_INPUT_ERROR;
    } catch (const WindowError& e) {
        set_err(err, e.what());
        return HSS_INPUT_ERROR;
    } catch (const InternalError& e) {
        set_err(err, e.what());
        return HSS_CHECK_FAILED;
    } catch (const Error& e) {
        set_err(err, e.what());
        return HSS_INPUT_ERROR;
    }
}

const char* hss_report_body(const hss_report* r) { return r ? r->body.c_str() : nullptr; }

size_t hss_report_size(const hss_report* r) { return r ? r->body.size() : 0; }

int hss_report_ok(const hss_report* r) { return r ? r->ok : 0; }

void hss_report_free(hss_report* r) { delete r; }

void hss_string_free(char* s) { std::free(s); }

} /* extern "C" */
