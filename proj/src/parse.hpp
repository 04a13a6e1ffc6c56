#ifndef HSS_PARSE_HPP
#define HSS_PARSE_HPP

#include "dga.hpp"

#include <string>
#include <vector>

namespace hss {

/* Parsed form of the line-oriented input format, before semantic
 * validation.  Sections: [field], [basis] ("1 0" first), [d], [mul];
 * omitted lines mean zero, products with 1 are implied. */
struct DGAFile {
    struct Term {
        std::string label;
        Scalar coeff;
        bool operator==(const Term& o) const { return label == o.label && coeff == o.coeff; }
    };
    struct Line {
        std::string lhs1;
        std::string lhs2; /* empty for [d] lines */
        std::vector<Term> terms;
        bool operator==(const Line& o) const
        {
            return lhs1 == o.lhs1 && lhs2 == o.lhs2 && terms == o.terms;
        }
    };

    FieldSpec field;
    std::vector<std::pair<std::string, int>> basis;
    std::vector<Line> d_lines;
    std::vector<Line> mul_lines;

    bool operator==(const DGAFile& o) const
    {
        return field == o.field && basis == o.basis && d_lines == o.d_lines &&
               mul_lines == o.mul_lines;
    }
};

DGAFile parse_dga(const std::string& text);
DGAFile parse_dga_file(const std::string& path);
std::string read_file(const std::string& path);

/* Canonical printer; parse_dga(print_dga(f)) == f. */
std::string print_dga(const DGAFile& f);

DGAlgebra build_algebra(const DGAFile& f);

} // namespace hss

#endif
