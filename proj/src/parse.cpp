#include "parse.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace hss {

namespace {

std::string strip(const std::string& s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

bool valid_label(const std::string& s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '^'))
            return false;
    return true;
}

bool looks_like_scalar(const std::string& s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    bool slash = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '/' && !slash) {
            slash = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    }
    return true;
}

/* "c1*name1 + c2*name2 - name3" */
std::vector<DGAFile::Term> parse_terms(const Field& f, const std::string& rhs, int lineno)
{
    std::vector<DGAFile::Term> terms;
    std::string cur;
    std::vector<std::pair<char, std::string>> pieces; /* sign, chunk */
    char sign = '+';
    for (std::size_t i = 0; i <= rhs.size(); ++i) {
        char c = i < rhs.size() ? rhs[i] : '\0';
        if (c == '+' || c == '-' || c == '\0') {
            std::string chunk = strip(cur);
            if (!chunk.empty())
                pieces.push_back({sign, chunk});
            else if (c != '\0' && pieces.empty() && terms.empty() && strip(cur).empty() && i == 0) {
                /* leading sign */
            } else if (c != '\0' && chunk.empty())
                throw ParseError(lineno, "empty term");
            if (c == '\0')
                break;
            sign = c;
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (pieces.empty())
        throw ParseError(lineno, "empty right-hand side (omit the line for zero)");
    for (auto& [sg, chunk] : pieces) {
        std::string coeff_text = "1";
        std::string label = chunk;
        auto star = chunk.find('*');
        if (star != std::string::npos) {
            coeff_text = strip(chunk.substr(0, star));
            label = strip(chunk.substr(star + 1));
        }
        if (!looks_like_scalar(coeff_text))
            throw ParseError(lineno, "malformed scalar '" + coeff_text + "'");
        if (!valid_label(label))
            throw ParseError(lineno, "malformed basis label '" + label + "'");
        Scalar c;
        try {
            c = f.parse(coeff_text);
        } catch (const Error& e) {
            throw ParseError(lineno, e.what());
        }
        if (sg == '-')
            c = f.neg(c);
        terms.push_back({label, c});
    }
    return terms;
}

} // namespace

DGAFile parse_dga(const std::string& text)
{
    DGAFile out;
    bool have_field = false, have_basis = false;
    std::string section;
    std::set<std::string> seen_basis;
    std::set<std::string> seen_d;
    std::set<std::pair<std::string, std::string>> seen_mul;

    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw = raw.substr(0, hash);
        std::string line = strip(raw);
        if (line.empty())
            continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError(lineno, "malformed section header '" + line + "'");
            section = line.substr(1, line.size() - 2);
            if (section != "field" && section != "basis" && section != "d" && section != "mul")
                throw ParseError(lineno, "unknown section '[" + section + "]'");
            if (section == "field")
                have_field = true;
            if (section == "basis")
                have_basis = true;
            continue;
        }
        if (section.empty())
            throw ParseError(lineno, "content before any section header");

        if (section == "field") {
            auto eq = line.find('=');
            if (eq == std::string::npos)
                throw ParseError(lineno, "expected 'characteristic = <p>'");
            std::string key = strip(line.substr(0, eq));
            std::string val = strip(line.substr(eq + 1));
            if (key != "characteristic")
                throw ParseError(lineno, "unknown key '" + key + "' in [field]");
            try {
                std::size_t used = 0;
                long long p = std::stoll(val, &used);
                if (used != val.size())
                    throw std::invalid_argument(val);
                out.field = FieldSpec(p);
            } catch (const ValidationError& e) {
                throw ParseError(lineno, e.what());
            } catch (const std::exception&) {
                throw ParseError(lineno, "malformed characteristic '" + val + "'");
            }
        } else if (section == "basis") {
            std::istringstream ls(line);
            std::string name;
            long long deg;
            if (!(ls >> name >> deg) || !(ls >> std::ws).eof())
                throw ParseError(lineno, "expected '<name> <degree>'");
            if (!valid_label(name))
                throw ParseError(lineno, "malformed basis label '" + name + "'");
            if (!seen_basis.insert(name).second)
                throw ParseError(lineno, "duplicate basis label '" + name + "'");
            if (out.basis.empty() && (name != "1" || deg != 0))
                throw ParseError(lineno, "first basis line must be '1 0'");
            out.basis.push_back({name, static_cast<int>(deg)});
        } else {
            if (!have_field)
                throw ParseError(lineno, "[field] must precede [" + section + "]");
            auto eq = line.find('=');
            if (eq == std::string::npos)
                throw ParseError(lineno, "expected '<lhs> = <terms>'");
            std::string lhs = strip(line.substr(0, eq));
            std::vector<DGAFile::Term> terms =
                parse_terms(Field(out.field), line.substr(eq + 1), lineno);
            if (section == "d") {
                if (!valid_label(lhs))
                    throw ParseError(lineno, "malformed basis label '" + lhs + "'");
                if (!seen_d.insert(lhs).second)
                    throw ParseError(lineno, "duplicate differential for '" + lhs + "'");
                out.d_lines.push_back({lhs, "", std::move(terms)});
            } else {
                auto star = lhs.find('*');
                if (star == std::string::npos)
                    throw ParseError(lineno, "expected '<name>*<name> = <terms>'");
                std::string l1 = strip(lhs.substr(0, star));
                std::string l2 = strip(lhs.substr(star + 1));
                if (!valid_label(l1) || !valid_label(l2))
                    throw ParseError(lineno, "malformed product '" + lhs + "'");
                if (!seen_mul.insert({l1, l2}).second)
                    throw ParseError(lineno, "duplicate product line '" + l1 + "*" + l2 + "'");
                out.mul_lines.push_back({l1, l2, std::move(terms)});
            }
        }
    }
    if (!have_field)
        throw ParseError(lineno, "missing [field] section");
    if (!have_basis || out.basis.empty())
        throw ParseError(lineno, "missing or empty [basis] section");
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

DGAFile parse_dga_file(const std::string& path) { return parse_dga(read_file(path)); }

std::string print_dga(const DGAFile& f)
{
    std::ostringstream os;
    os << "[field]\ncharacteristic = " << f.field.characteristic << "\n\n[basis]\n";
    for (auto& [name, deg] : f.basis)
        os << name << " " << deg << "\n";
    auto put_terms = [&](const std::vector<DGAFile::Term>& terms) {
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (i)
                os << " + ";
            os << terms[i].coeff.str() << "*" << terms[i].label;
        }
    };
    if (!f.d_lines.empty()) {
        os << "\n[d]\n";
        for (auto& line : f.d_lines) {
            os << line.lhs1 << " = ";
            put_terms(line.terms);
            os << "\n";
        }
    }
    if (!f.mul_lines.empty()) {
        os << "\n[mul]\n";
        for (auto& line : f.mul_lines) {
            os << line.lhs1 << "*" << line.lhs2 << " = ";
            put_terms(line.terms);
            os << "\n";
        }
    }
    return os.str();
}

DGAlgebra build_algebra(const DGAFile& f)
{
    std::map<std::string, std::vector<DGAlgebra::Term>> differential;
    for (auto& line : f.d_lines) {
        std::vector<DGAlgebra::Term> terms;
        for (auto& t : line.terms)
            terms.push_back({t.label, t.coeff});
        differential[line.lhs1] = std::move(terms);
    }
    std::map<std::pair<std::string, std::string>, std::vector<DGAlgebra::Term>> products;
    for (auto& line : f.mul_lines) {
        std::vector<DGAlgebra::Term> terms;
        for (auto& t : line.terms)
            terms.push_back({t.label, t.coeff});
        products[{line.lhs1, line.lhs2}] = std::move(terms);
    }
    return DGAlgebra(f.field, f.basis, differential, products);
}

} // namespace hss
