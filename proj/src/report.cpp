#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace hss {

Report::Section& Report::add_section(const std::string& title)
{
    sections.push_back(Section{title, {}});
    return sections.back();
}

std::string fnv1a_digest(const std::string& data)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string render_text(const Report& r)
{
    std::ostringstream os;
    os << "hss " << r.version << "  command=" << r.command << "  input=" << r.digest
       << "  window=" << r.window << "\n";
    os << "status: " << (r.ok ? "ok" : "FAILED") << "\n";
    for (auto& sec : r.sections) {
        os << "\n== " << sec.title << "\n";
        for (auto& [k, v] : sec.entries)
            os << "  " << k << ": " << v << "\n";
    }
    for (auto& page : r.pages) {
        os << "\n== page E^" << page.r << " (rows q, columns p; entries are dims)\n";
        if (page.cell_dims.empty()) {
            os << "  (empty)\n";
            continue;
        }
        int pmin = 0, pmax = 0, qmin = 0, qmax = 0;
        bool first = true;
        for (auto& [pq, dim] : page.cell_dims) {
            auto [p, q] = pq;
            if (first) {
                pmin = pmax = p;
                qmin = qmax = q;
                first = false;
            }
            pmin = std::min(pmin, p);
            pmax = std::max(pmax, p);
            qmin = std::min(qmin, q);
            qmax = std::max(qmax, q);
        }
        os << "  q\\p";
        for (int p = pmin; p <= pmax; ++p)
            os << "\t" << p;
        os << "\n";
        for (int q = qmax; q >= qmin; --q) {
            os << "  " << q;
            for (int p = pmin; p <= pmax; ++p) {
                auto it = page.cell_dims.find({p, q});
                os << "\t" << (it == page.cell_dims.end() ? 0 : it->second);
            }
            os << "\n";
        }
        if (!page.arrow_sources.empty()) {
            os << "  nonzero d^" << page.r << " from:";
            for (auto& [p, q] : page.arrow_sources)
                os << " (" << p << "," << q << ")";
            os << "\n";
        }
    }
    return os.str();
}

std::string render_data(const Report& r)
{
    std::ostringstream os;
    os << "version " << r.version << "\n";
    os << "command " << r.command << "\n";
    os << "input " << r.digest << "\n";
    os << "window " << r.window << "\n";
    os << "ok " << (r.ok ? "true" : "false") << "\n";
    for (auto& sec : r.sections) {
        std::string prefix = sec.title;
        std::replace(prefix.begin(), prefix.end(), ' ', '_');
        for (auto& [k, v] : sec.entries) {
            std::string key = k;
            std::replace(key.begin(), key.end(), ' ', '_');
            os << prefix << "." << key << " " << v << "\n";
        }
    }
    for (auto& page : r.pages) {
        for (auto& [pq, dim] : page.cell_dims)
            os << "page" << page.r << ".cell." << pq.first << "." << pq.second << " " << dim
               << "\n";
        for (auto& [p, q] : page.arrow_sources)
            os << "page" << page.r << ".d." << p << "." << q << " nonzero\n";
    }
    return os.str();
}

namespace {

std::string xml_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

std::string render_svg(const Report& r)
{
    const int cell = 42;
    const int pad = 56;
    const int header = 30;

    /* layout: one grid per page, stacked vertically */
    struct Grid {
        const PageGrid* page;
        int pmin, pmax, qmin, qmax;
    };
    std::vector<Grid> grids;
    for (auto& page : r.pages) {
        Grid g{&page, 0, 0, 0, 0};
        bool first = true;
        for (auto& [pq, dim] : page.cell_dims) {
            auto [p, q] = pq;
            if (first) {
                g.pmin = g.pmax = p;
                g.qmin = g.qmax = q;
                first = false;
            }
            g.pmin = std::min(g.pmin, p);
            g.pmax = std::max(g.pmax, p);
            g.qmin = std::min(g.qmin, q);
            g.qmax = std::max(g.qmax, q);
        }
        grids.push_back(g);
    }

    int width = 320;
    for (auto& g : grids)
        width = std::max(width, pad * 2 + (g.pmax - g.pmin + 1) * cell);
    int y = header + 24;
    std::ostringstream body;
    body << "<text x=\"10\" y=\"" << header << "\" class=\"t\">hss " << xml_escape(r.version)
         << " " << xml_escape(r.command) << " input=" << r.digest << " window=" << r.window
         << " status=" << (r.ok ? "ok" : "FAILED") << "</text>\n";
    for (auto& sec : r.sections) {
        body << "<text x=\"10\" y=\"" << y << "\" class=\"h\">" << xml_escape(sec.title)
             << "</text>\n";
        y += 18;
        for (auto& [k, v] : sec.entries) {
            body << "<text x=\"22\" y=\"" << y << "\" class=\"t\">" << xml_escape(k) << ": "
                 << xml_escape(v) << "</text>\n";
            y += 16;
        }
        y += 8;
    }
    for (auto& g : grids) {
        y += 18;
        body << "<text x=\"10\" y=\"" << y << "\" class=\"h\">page E^" << g.page->r
             << "</text>\n";
        y += 10;
        int cols = g.pmax - g.pmin + 1;
        int rows = g.qmax - g.qmin + 1;
        int ox = pad, oy = y;
        for (int qi = 0; qi <= rows; ++qi)
            body << "<line x1=\"" << ox << "\" y1=\"" << oy + qi * cell << "\" x2=\""
                 << ox + cols * cell << "\" y2=\"" << oy + qi * cell << "\" class=\"g\"/>\n";
        for (int pi = 0; pi <= cols; ++pi)
            body << "<line x1=\"" << ox + pi * cell << "\" y1=\"" << oy << "\" x2=\""
                 << ox + pi * cell << "\" y2=\"" << oy + rows * cell << "\" class=\"g\"/>\n";
        auto cx = [&](int p) { return ox + (p - g.pmin) * cell + cell / 2; };
        auto cy = [&](int q) { return oy + (g.qmax - q) * cell + cell / 2; };
        for (auto& [pq, dim] : g.page->cell_dims) {
            auto [p, q] = pq;
            if (dim)
                body << "<text x=\"" << cx(p) << "\" y=\"" << cy(q) + 5
                     << "\" class=\"c\">" << dim << "</text>\n";
        }
        for (auto& [p, q] : g.page->arrow_sources) {
            int p2 = p - g.page->r, q2 = q + g.page->r - 1;
            body << "<line x1=\"" << cx(p) << "\" y1=\"" << cy(q) << "\" x2=\"" << cx(p2)
                 << "\" y2=\"" << cy(q2) << "\" class=\"a\" marker-end=\"url(#arrow)\"/>\n";
        }
        /* axis labels */
        for (int p = g.pmin; p <= g.pmax; ++p)
            body << "<text x=\"" << cx(p) << "\" y=\"" << oy + rows * cell + 16
                 << "\" class=\"c\">" << p << "</text>\n";
        for (int q = g.qmin; q <= g.qmax; ++q)
            body << "<text x=\"" << ox - 18 << "\" y=\"" << cy(q) + 5 << "\" class=\"c\">" << q
                 << "</text>\n";
        y = oy + rows * cell + 36;
    }
    int height = y + 20;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\" "
          "orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\" fill=\"#c0392b\"/></marker>"
          "<style>.t{font:12px monospace}.h{font:bold 13px monospace}"
          ".c{font:11px monospace;text-anchor:middle}.g{stroke:#999;stroke-width:0.5}"
          ".a{stroke:#c0392b;stroke-width:1.2}</style></defs>\n";
    os << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    os << body.str();
    os << "</svg>\n";
    return os.str();
}

std::string render(const Report& r, const std::string& format)
{
    if (format.empty() || format == "text")
        return render_text(r);
    if (format == "data")
        return render_data(r);
    if (format == "svg")
        return render_svg(r);
    throw Error("unknown format '" + format + "' (text|data|svg)");
}

} // namespace hss
