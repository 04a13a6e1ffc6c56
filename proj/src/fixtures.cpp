#include "fixtures.hpp"

#include <map>

namespace hss {

namespace {

std::string with_field(long p, const std::string& body)
{
    return "[field]\ncharacteristic = " + std::to_string(p) + "\n" + body;
}

const std::string kE0 = R"(
[basis]
1 0
)";

const std::string kE1 = R"(
[basis]
1 0
x 3
)";

const std::string kE2 = R"(
[basis]
1 0
x 2
)";

const std::string kE3 = R"(
[basis]
1 0
x 2
z 3
x2 4
xz 5

[d]
z = 1*x2

[mul]
x*x = 1*x2
x*z = 1*xz
z*x = 1*xz
)";

const std::map<std::string, std::string>& table()
{
    static const std::map<std::string, std::string> t = {
        {"e0_f2", with_field(2, kE0)}, {"e0_q", with_field(0, kE0)},
        {"e1_f2", with_field(2, kE1)}, {"e1_q", with_field(0, kE1)},
        {"e2_f2", with_field(2, kE2)}, {"e2_q", with_field(0, kE2)},
        {"e3_f2", with_field(2, kE3)}, {"e3_q", with_field(0, kE3)},
    };
    return t;
}

} // namespace

const std::vector<std::string>& fixture_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (auto& [k, s] : table())
            v.push_back(k);
        return v;
    }();
    return names;
}

bool is_fixture_name(const std::string& name) { return table().count(name) != 0; }

const std::string& fixture_source(const std::string& name)
{
    auto it = table().find(name);
    if (it == table().end())
        throw Error("unknown fixture '" + name + "' (known: e0_f2 e0_q e1_f2 e1_q e2_f2 e2_q e3_f2 e3_q)");
    return it->second;
}

DGAlgebra fixture_algebra(const std::string& name)
{
    DGAlgebra a = build_algebra(parse_dga(fixture_source(name)));
    require_valid(a);
    return a;
}

} // namespace hss
