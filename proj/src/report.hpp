#ifndef HSS_REPORT_HPP
#define HSS_REPORT_HPP

#include "common.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hss {

/* Page grid snapshot for reports and charts: cell dims keyed by the
 * display bigrading (p, q), with q = -n - p, plus the sources of nonzero
 * differentials. */
struct PageGrid {
    int r = 1;
    std::map<std::pair<int, int>, std::size_t> cell_dims;
    std::vector<std::pair<int, int>> arrow_sources;
};

/* Deterministic report: identical input and version produce identical
 * bytes in every format. */
struct Report {
    std::string command;
    std::string digest;
    std::string version;
    int window = 0;
    bool ok = true;

    struct Section {
        std::string title;
        std::vector<std::pair<std::string, std::string>> entries;
    };
    std::vector<Section> sections;
    std::vector<PageGrid> pages;

    Section& add_section(const std::string& title);
};

std::string fnv1a_digest(const std::string& data);

std::string render_text(const Report& r);
std::string render_data(const Report& r);
std::string render_svg(const Report& r);
std::string render(const Report& r, const std::string& format);

} // namespace hss

#endif
