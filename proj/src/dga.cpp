#include "dga.hpp"

#include <algorithm>
#include <sstream>

namespace hss {

const std::vector<std::size_t> DGAlgebra::no_ids_;

SpElt sp_add(const Field& f, const SpElt& a, const SpElt& b)
{
    SpElt out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            Scalar s = f.add(a[i].second, b[j].second);
            if (!s.is_zero())
                out.push_back({a[i].first, s});
            ++i;
            ++j;
        }
    }
    return out;
}

SpElt sp_scale(const Field& f, const Scalar& c, const SpElt& a)
{
    if (c.is_zero())
        return {};
    SpElt out;
    out.reserve(a.size());
    for (auto& [id, s] : a) {
        Scalar v = f.mul(c, s);
        if (!v.is_zero())
            out.push_back({id, v});
    }
    return out;
}

SpElt sp_addmul(const Field& f, SpElt a, const Scalar& c, const SpElt& b)
{
    return sp_add(f, a, sp_scale(f, c, b));
}

DGAlgebra::DGAlgebra(FieldSpec field, const std::vector<std::pair<std::string, int>>& basis,
                     const std::map<std::string, std::vector<Term>>& differential,
                     const std::map<std::pair<std::string, std::string>, std::vector<Term>>& products)
    : field_(field), fieldops_(field)
{
    if (basis.empty())
        throw ValidationError("empty basis");

    /* Deterministic element order: (degree, label), unit forced first. */
    std::vector<std::pair<std::string, int>> sorted = basis;
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second)
            return a.second < b.second;
        return a.first < b.first;
    });
    auto unit_it = std::find_if(sorted.begin(), sorted.end(),
                                [](const auto& e) { return e.first == "1" && e.second == 0; });
    if (unit_it == sorted.end())
        throw ValidationError("basis must contain the unit '1' in degree 0");
    std::rotate(sorted.begin(), unit_it, unit_it + 1);

    for (auto& [label, deg] : sorted) {
        if (index_.count(label))
            throw ValidationError("duplicate basis label '" + label + "'");
        index_[label] = labels_.size();
        labels_.push_back(label);
        degrees_.push_back(deg);
    }
    for (std::size_t id = 0; id < labels_.size(); ++id) {
        space_.add(degrees_[id], labels_[id]);
        by_degree_[degrees_[id]].push_back(id);
    }

    auto term_list = [&](const std::vector<Term>& terms, const std::string& what) {
        std::map<std::size_t, Scalar> acc;
        for (auto& t : terms) {
            auto it = index_.find(t.label);
            if (it == index_.end())
                throw ValidationError(what + " references unknown basis label '" + t.label + "'");
            Scalar& slot = acc[it->second];
            slot = fieldops_.add(slot, t.coeff);
        }
        SpElt out;
        for (auto& [id, c] : acc)
            if (!c.is_zero())
                out.push_back({id, c});
        return out;
    };

    diff_.assign(size(), {});
    for (auto& [label, terms] : differential) {
        auto it = index_.find(label);
        if (it == index_.end())
            throw ValidationError("differential of unknown basis label '" + label + "'");
        diff_[it->second] = term_list(terms, "d(" + label + ")");
    }

    prod_.assign(size() * size(), {});
    for (auto& [pair, terms] : products) {
        if (pair.first == "1" || pair.second == "1")
            throw ValidationError("products with the unit are implied; remove '" + pair.first +
                                  "*" + pair.second + "'");
        auto i = index_.find(pair.first);
        auto j = index_.find(pair.second);
        if (i == index_.end() || j == index_.end())
            throw ValidationError("product of unknown basis labels '" + pair.first + "*" +
                                  pair.second + "'");
        prod_[i->second * size() + j->second] =
            term_list(terms, pair.first + "*" + pair.second);
    }
    for (std::size_t i = 0; i < size(); ++i) {
        prod_[0 * size() + i] = {{i, fieldops_.one()}};
        prod_[i * size() + 0] = {{i, fieldops_.one()}};
    }
}

std::size_t DGAlgebra::id_of(const std::string& l) const
{
    auto it = index_.find(l);
    if (it == index_.end())
        throw Error("unknown basis label '" + l + "'");
    return it->second;
}

SpElt DGAlgebra::mul(const SpElt& a, const SpElt& b) const
{
    SpElt out;
    for (auto& [i, ci] : a)
        for (auto& [j, cj] : b)
            out = sp_addmul(fieldops_, std::move(out), fieldops_.mul(ci, cj), product(i, j));
    return out;
}

SpElt DGAlgebra::apply_d(const SpElt& a) const
{
    SpElt out;
    for (auto& [i, c] : a)
        out = sp_addmul(fieldops_, std::move(out), c, diff_[i]);
    return out;
}

const std::vector<std::size_t>& DGAlgebra::ids_of_degree(int n) const
{
    auto it = by_degree_.find(n);
    return it == by_degree_.end() ? no_ids_ : it->second;
}

std::vector<std::size_t> DGAlgebra::augmentation_ideal_ids() const
{
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < size(); ++i)
        if (degrees_[i] >= 1)
            ids.push_back(i);
    return ids;
}

CochainComplex DGAlgebra::cochain_complex() const
{
    std::map<int, Matrix> blocks;
    for (auto& [n, ids] : by_degree_) {
        const auto& tgt = ids_of_degree(n + 1);
        Matrix m(field_, tgt.size(), ids.size());
        for (std::size_t j = 0; j < ids.size(); ++j)
            for (auto& [t, c] : diff_[ids[j]]) {
                check_internal(degree(t) == n + 1, "differential is not degree-homogeneous");
                auto pos = std::find(tgt.begin(), tgt.end(), t);
                m.at(static_cast<std::size_t>(pos - tgt.begin()), j) = c;
            }
        blocks.emplace(n, std::move(m));
    }
    return CochainComplex(field_, space_, std::move(blocks));
}

std::string ValidationReport::summary() const
{
    std::ostringstream os;
    os << (valid ? "valid" : "invalid");
    if (!valid)
        for (auto& f : failures)
            os << "\n  " << f;
    return os.str();
}

ValidationReport validate(const DGAlgebra& a)
{
    ValidationReport rep;
    const Field& f = a.field();
    auto fail = [&](const std::string& msg) { rep.failures.push_back(msg); };

    /* Strict coconnectivity and simple connectivity at the chain level. */
    rep.strict_coconnective = true;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.degree(i) < 0) {
            rep.strict_coconnective = false;
            fail("negative degree: '" + a.label(i) + "' in degree " + std::to_string(a.degree(i)));
        }
    if (a.ids_of_degree(0).size() != 1 || a.label(a.ids_of_degree(0)[0]) != "1") {
        rep.strict_coconnective = false;
        fail("degree 0 must be spanned by the unit alone");
    }
    rep.strict_simply_connected = rep.strict_coconnective && a.ids_of_degree(1).empty();
    if (!a.ids_of_degree(1).empty())
        fail("degree 1 must vanish (strict simple connectivity): '" +
             a.label(a.ids_of_degree(1)[0]) + "'");

    /* Degree bookkeeping: d raises degree by one, the product is additive. */
    bool degrees_ok = true;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (auto& [t, c] : a.d(i))
            if (a.degree(t) != a.degree(i) + 1) {
                degrees_ok = false;
                fail("d(" + a.label(i) + ") has a term '" + a.label(t) + "' of degree " +
                     std::to_string(a.degree(t)) + ", expected " + std::to_string(a.degree(i) + 1));
            }
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            for (auto& [t, c] : a.product(i, j))
                if (a.degree(t) != a.degree(i) + a.degree(j)) {
                    degrees_ok = false;
                    fail("product " + a.label(i) + "*" + a.label(j) + " has a term '" +
                         a.label(t) + "' of wrong degree");
                }

    if (!a.d(a.unit()).empty())
        fail("d(1) must vanish");

    /* Associativity on basis triples. */
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            for (std::size_t k = 0; k < a.size(); ++k) {
                SpElt lhs = a.mul(a.product(i, j), {{k, f.one()}});
                SpElt rhs = a.mul({{i, f.one()}}, a.product(j, k));
                if (lhs != rhs) {
                    fail("associativity fails on (" + a.label(i) + ", " + a.label(j) + ", " +
                         a.label(k) + ")");
                    goto assoc_done;
                }
            }
assoc_done:;

    /* Leibniz rule on basis pairs. */
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            SpElt lhs = a.apply_d(a.product(i, j));
            SpElt rhs = a.mul(a.d(i), {{j, f.one()}});
            Scalar sg = f.make(koszul_sign(a.degree(i), 1));
            rhs = sp_addmul(f, std::move(rhs), sg, a.mul({{i, f.one()}}, a.d(j)));
            if (lhs != rhs)
                fail("Leibniz fails on (" + a.label(i) + ", " + a.label(j) + ")");
        }

    /* d.d = 0. */
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a.apply_d(a.d(i)).empty())
            fail("d.d != 0 on '" + a.label(i) + "'");

    rep.valid = rep.failures.empty();
    if (rep.valid && degrees_ok) {
        rep.h_dims = cohomology_dims(a.cochain_complex());
        rep.top_cohomology_degree = rep.h_dims.empty() ? 0 : rep.h_dims.rbegin()->first;
    }
    return rep;
}

void require_valid(const DGAlgebra& a)
{
    ValidationReport rep = validate(a);
    if (!rep.valid)
        throw ValidationError("algebra is " + rep.summary());
}

DGAlgebra enveloping(const DGAlgebra& a)
{
    const Field& f = a.field();
    auto pair_label = [&](std::size_t i, std::size_t j) {
        if (i == 0 && j == 0)
            return std::string("1");
        return a.label(i) + "@" + a.label(j);
    };

    std::vector<std::pair<std::string, int>> basis;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            basis.push_back({pair_label(i, j), a.degree(i) + a.degree(j)});

    std::map<std::string, std::vector<DGAlgebra::Term>> differential;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            std::vector<DGAlgebra::Term> terms;
            for (auto& [t, c] : a.d(i))
                terms.push_back({pair_label(t, j), c});
            Scalar sg = f.make(koszul_sign(a.degree(i), 1));
            for (auto& [t, c] : a.d(j))
                terms.push_back({pair_label(i, t), f.mul(sg, c)});
            if (!terms.empty())
                differential[pair_label(i, j)] = std::move(terms);
        }

    /* (x (x) y)(x' (x) y') = (-1)^{|y||x'|} xx' (x) y'y */
    std::map<std::pair<std::string, std::string>, std::vector<DGAlgebra::Term>> products;
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < a.size(); ++y) {
            if (x == 0 && y == 0)
                continue;
            for (std::size_t x2 = 0; x2 < a.size(); ++x2)
                for (std::size_t y2 = 0; y2 < a.size(); ++y2) {
                    if (x2 == 0 && y2 == 0)
                        continue;
                    Scalar sg = f.make(koszul_sign(a.degree(y), a.degree(x2)));
                    std::vector<DGAlgebra::Term> terms;
                    for (auto& [u, cu] : a.product(x, x2))
                        for (auto& [v, cv] : a.product(y2, y)) {
                            Scalar c = f.mul(sg, f.mul(cu, cv));
                            if (!c.is_zero())
                                terms.push_back({pair_label(u, v), c});
                        }
                    if (!terms.empty())
                        products[{pair_label(x, y), pair_label(x2, y2)}] = std::move(terms);
                }
        }

    return DGAlgebra(a.field_spec(), basis, differential, products);
}

DGBimodule::DGBimodule(FieldSpec field, std::vector<std::string> labels, std::vector<int> degrees,
                       std::vector<SpElt> diff, std::vector<std::vector<SpElt>> left,
                       std::vector<std::vector<SpElt>> right)
    : field_(field), labels_(std::move(labels)), degrees_(std::move(degrees)),
      diff_(std::move(diff)), left_(std::move(left)), right_(std::move(right))
{
    check_internal(labels_.size() == degrees_.size() && labels_.size() == diff_.size(),
                   "bimodule shape mismatch");
    for (auto& row : right_)
        check_internal(row.size() == left_.size(), "bimodule action shape mismatch");
    for (auto& row : left_)
        check_internal(row.size() == labels_.size(), "bimodule action shape mismatch");
}

int DGBimodule::min_degree() const
{
    int m = 0;
    bool any = false;
    for (int d : degrees_)
        if (!any || d < m) {
            m = d;
            any = true;
        }
    return m;
}

int DGBimodule::max_degree() const
{
    int m = 0;
    bool any = false;
    for (int d : degrees_)
        if (!any || d > m) {
            m = d;
            any = true;
        }
    return m;
}

void DGBimodule::check(const DGAlgebra& a) const
{
    const Field& f = a.field();
    check_internal(left_.size() == a.size(), "left action indexed by algebra basis");
    auto lift_left = [&](const SpElt& ae, const SpElt& m) {
        SpElt out;
        for (auto& [i, ci] : ae)
            for (auto& [j, cj] : m)
                out = sp_addmul(f, std::move(out), f.mul(ci, cj), left_[i][j]);
        return out;
    };
    auto lift_right = [&](const SpElt& m, const SpElt& ae) {
        SpElt out;
        for (auto& [j, cj] : m)
            for (auto& [i, ci] : ae)
                out = sp_addmul(f, std::move(out), f.mul(cj, ci), right_[j][i]);
        return out;
    };
    auto d_mod = [&](const SpElt& m) {
        SpElt out;
        for (auto& [j, c] : m)
            out = sp_addmul(f, std::move(out), c, diff_[j]);
        return out;
    };

    for (std::size_t m = 0; m < size(); ++m) {
        for (auto& [t, c] : diff_[m])
            check_internal(degree(t) == degree(m) + 1, "bimodule differential degree");
        check_internal(d_mod(diff_[m]).empty(), "bimodule d.d != 0 on '" + label(m) + "'");
        check_internal(left_[a.unit()][m] == SpElt{{m, f.one()}}, "left unit action");
        check_internal(right_[m][a.unit()] == SpElt{{m, f.one()}}, "right unit action");
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t m = 0; m < size(); ++m) {
            for (auto& [t, c] : left_[i][m])
                check_internal(degree(t) == a.degree(i) + degree(m), "left action degree");
            for (auto& [t, c] : right_[m][i])
                check_internal(degree(t) == degree(m) + a.degree(i), "right action degree");
        }
    /* Full pairwise axioms. */
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            for (std::size_t m = 0; m < size(); ++m) {
                SpElt em{{m, f.one()}};
                SpElt left_assoc = lift_left({{i, f.one()}}, left_[j][m]);
                SpElt left_prod = lift_left(a.product(i, j), em);
                check_internal(left_assoc == left_prod, "left action associativity on (" +
                                                            a.label(i) + "," + a.label(j) + "," +
                                                            label(m) + ")");
                SpElt right_assoc = lift_right(right_[m][i], {{j, f.one()}});
                SpElt right_prod = lift_right(em, a.product(i, j));
                check_internal(right_assoc == right_prod, "right action associativity");
                SpElt commute1 = lift_right(left_[i][m], {{j, f.one()}});
                SpElt commute2 = lift_left({{i, f.one()}}, right_[m][j]);
                check_internal(commute1 == commute2, "actions do not commute on (" + a.label(i) +
                                                         "," + label(m) + "," + a.label(j) + ")");
            }
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t m = 0; m < size(); ++m) {
            SpElt em{{m, f.one()}};
            SpElt lhs = d_mod(left_[i][m]);
            SpElt rhs = lift_left(a.d(i), em);
            rhs = sp_addmul(f, std::move(rhs), f.make(koszul_sign(a.degree(i), 1)),
                            lift_left({{i, f.one()}}, diff_[m]));
            check_internal(lhs == rhs, "left Leibniz fails on (" + a.label(i) + "," + label(m) + ")");
            lhs = d_mod(right_[m][i]);
            rhs = lift_right(diff_[m], {{i, f.one()}});
            rhs = sp_addmul(f, std::move(rhs), f.make(koszul_sign(degree(m), 1)),
                            lift_right(em, a.d(i)));
            check_internal(lhs == rhs,
                           "right Leibniz fails on (" + label(m) + "," + a.label(i) + ")");
        }
}

DGBimodule regular_bimodule(const DGAlgebra& a)
{
    std::vector<std::string> labels;
    std::vector<int> degrees;
    std::vector<SpElt> diff;
    for (std::size_t i = 0; i < a.size(); ++i) {
        labels.push_back(a.label(i));
        degrees.push_back(a.degree(i));
        diff.push_back(a.d(i));
    }
    std::vector<std::vector<SpElt>> left(a.size(), std::vector<SpElt>(a.size()));
    std::vector<std::vector<SpElt>> right(a.size(), std::vector<SpElt>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            left[i][j] = a.product(i, j);
            right[j][i] = a.product(j, i);
        }
    return DGBimodule(a.field_spec(), std::move(labels), std::move(degrees), std::move(diff),
                      std::move(left), std::move(right));
}

DGBimodule trivial_bimodule(const DGAlgebra& a)
{
    const Field& f = a.field();
    std::vector<std::vector<SpElt>> left(a.size(), std::vector<SpElt>(1));
    std::vector<std::vector<SpElt>> right(1, std::vector<SpElt>(a.size()));
    left[a.unit()][0] = {{0, f.one()}};
    right[0][a.unit()] = {{0, f.one()}};
    return DGBimodule(a.field_spec(), {"1"}, {0}, {SpElt{}}, std::move(left), std::move(right));
}

FiltrationPiece filtration(const DGAlgebra& a, int n)
{
    if (n < 0)
        throw Error("filtration index must be >= 0");
    std::vector<std::size_t> ids;
    std::vector<std::size_t> local(a.size(), SIZE_MAX);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.degree(i) >= n) {
            local[i] = ids.size();
            ids.push_back(i);
        }

    auto restrict_elt = [&](const SpElt& e, bool must_fit) {
        SpElt out;
        for (auto& [t, c] : e) {
            if (local[t] == SIZE_MAX) {
                check_internal(!must_fit, "J(n) is not closed");
                continue;
            }
            out.push_back({local[t], c});
        }
        return out;
    };

    std::vector<std::string> labels;
    std::vector<int> degrees;
    std::vector<SpElt> diff;
    for (auto i : ids) {
        labels.push_back(a.label(i));
        degrees.push_back(a.degree(i));
        diff.push_back(restrict_elt(a.d(i), true));
    }
    std::vector<std::vector<SpElt>> left(a.size(), std::vector<SpElt>(ids.size()));
    std::vector<std::vector<SpElt>> right(ids.size(), std::vector<SpElt>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t jl = 0; jl < ids.size(); ++jl) {
            left[i][jl] = restrict_elt(a.product(i, ids[jl]), true);
            right[jl][i] = restrict_elt(a.product(ids[jl], i), true);
        }
    DGBimodule mod(a.field_spec(), std::move(labels), std::move(degrees), std::move(diff),
                   std::move(left), std::move(right));
    return FiltrationPiece{n, std::move(mod), std::move(ids)};
}

DGBimodule subquotient(const DGAlgebra& a, int n)
{
    if (n < 0)
        throw Error("subquotient index must be >= 0");
    std::vector<std::size_t> ids;
    std::vector<std::size_t> local(a.size(), SIZE_MAX);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.degree(i) == n) {
            local[i] = ids.size();
            ids.push_back(i);
        }

    auto project_elt = [&](const SpElt& e) {
        SpElt out;
        for (auto& [t, c] : e)
            if (local[t] != SIZE_MAX)
                out.push_back({local[t], c});
        return out;
    };

    std::vector<std::string> labels;
    std::vector<int> degrees;
    for (auto i : ids) {
        labels.push_back(a.label(i));
        degrees.push_back(n);
    }
    /* The slice differential vanishes: d raises degree out of the slice. */
    std::vector<SpElt> diff(ids.size());
    std::vector<std::vector<SpElt>> left(a.size(), std::vector<SpElt>(ids.size()));
    std::vector<std::vector<SpElt>> right(ids.size(), std::vector<SpElt>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t jl = 0; jl < ids.size(); ++jl) {
            left[i][jl] = project_elt(a.product(i, ids[jl]));
            right[jl][i] = project_elt(a.product(ids[jl], i));
        }
    return DGBimodule(a.field_spec(), std::move(labels), std::move(degrees), std::move(diff),
                      std::move(left), std::move(right));
}

FiltrationPiece augmentation_ideal(const DGAlgebra& a) { return filtration(a, 1); }

DGBimodule cohomology_slice_bimodule(const DGAlgebra& a, int n)
{
    std::size_t dim = 0;
    {
        CochainComplex c = a.cochain_complex();
        dim = cohomology(c, n).dim();
    }
    const Field& f = a.field();
    std::vector<std::string> labels;
    std::vector<int> degrees;
    for (std::size_t i = 0; i < dim; ++i) {
        labels.push_back("h" + std::to_string(n) + "_" + std::to_string(i));
        degrees.push_back(n);
    }
    std::vector<SpElt> diff(dim);
    std::vector<std::vector<SpElt>> left(a.size(), std::vector<SpElt>(dim));
    std::vector<std::vector<SpElt>> right(dim, std::vector<SpElt>(a.size()));
    for (std::size_t m = 0; m < dim; ++m) {
        left[a.unit()][m] = {{m, f.one()}};
        right[m][a.unit()] = {{m, f.one()}};
    }
    return DGBimodule(a.field_spec(), std::move(labels), std::move(degrees), std::move(diff),
                      std::move(left), std::move(right));
}

} // namespace hss
