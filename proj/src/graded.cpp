#include "graded.hpp"

#include <algorithm>

namespace hss {

const std::vector<std::string> GradedVectorSpace::empty_;

void GradedVectorSpace::add(int degree, const std::string& label)
{
    auto& v = pieces_[degree];
    if (std::find(v.begin(), v.end(), label) != v.end())
        throw ValidationError("duplicate basis label '" + label + "' in degree " +
                              std::to_string(degree));
    v.push_back(label);
}

std::size_t GradedVectorSpace::dim(int degree) const
{
    auto it = pieces_.find(degree);
    return it == pieces_.end() ? 0 : it->second.size();
}

std::size_t GradedVectorSpace::total_dim() const
{
    std::size_t n = 0;
    for (auto& [d, v] : pieces_)
        n += v.size();
    return n;
}

const std::vector<std::string>& GradedVectorSpace::labels(int degree) const
{
    auto it = pieces_.find(degree);
    return it == pieces_.end() ? empty_ : it->second;
}

int GradedVectorSpace::min_degree() const
{
    check_internal(!pieces_.empty(), "min_degree of empty space");
    return pieces_.begin()->first;
}

int GradedVectorSpace::max_degree() const
{
    check_internal(!pieces_.empty(), "max_degree of empty space");
    return pieces_.rbegin()->first;
}

std::size_t GradedVectorSpace::index_of(int degree, const std::string& label) const
{
    const auto& v = labels(degree);
    auto it = std::find(v.begin(), v.end(), label);
    check_internal(it != v.end(), "unknown basis label '" + label + "'");
    return static_cast<std::size_t>(it - v.begin());
}

bool GradedVectorSpace::has(int degree, const std::string& label) const
{
    const auto& v = labels(degree);
    return std::find(v.begin(), v.end(), label) != v.end();
}

CochainComplex::CochainComplex(FieldSpec field, GradedVectorSpace space,
                               std::map<int, Matrix> differential,
                               std::optional<DegreeWindow> certified)
    : field_(field), space_(std::move(space)), differential_(std::move(differential)),
      certified_(certified)
{
    for (auto& [n, m] : differential_) {
        check_internal(m.cols() == space_.dim(n), "differential source dim mismatch at degree " +
                                                      std::to_string(n));
        check_internal(m.rows() == space_.dim(n + 1),
                       "differential target dim mismatch at degree " + std::to_string(n));
    }
}

Matrix CochainComplex::differential(int degree) const
{
    auto it = differential_.find(degree);
    if (it != differential_.end())
        return it->second;
    return Matrix(field_, space_.dim(degree + 1), space_.dim(degree));
}

void check_complex(const CochainComplex& c)
{
    if (c.space().empty())
        return;
    for (int n = c.space().min_degree() - 1; n <= c.space().max_degree(); ++n) {
        if (c.dim(n) == 0)
            continue;
        Matrix dd = c.differential(n + 1).mul(c.differential(n));
        if (dd.is_zero())
            continue;
        for (std::size_t j = 0; j < dd.cols(); ++j)
            for (std::size_t i = 0; i < dd.rows(); ++i)
                if (!dd.at(i, j).is_zero())
                    throw ValidationError("d.d != 0 at degree " + std::to_string(n) +
                                          " on basis element '" + c.space().labels(n)[j] + "'");
    }
}

CohomologyPiece::CohomologyPiece(FieldSpec field, int degree, std::vector<Vec> representatives,
                                 Subspace cocycles, Subspace boundaries)
    : field_(field), degree_(degree), representatives_(std::move(representatives)),
      cocycles_(std::move(cocycles)), boundaries_(std::move(boundaries))
{
}

Vec CohomologyPiece::project(const Vec& cocycle) const
{
    check_internal(cocycles_.contains(cocycle), "project: vector is not a cocycle");
    std::size_t n = cocycle.size();
    std::size_t r = representatives_.size();
    /* Solve [reps | boundaries] x = cocycle; class coordinates are the
     * representative coefficients. */
    Matrix sys(field_, n, r + boundaries_.dim());
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < n; ++i)
            sys.at(i, j) = representatives_[j][i];
    for (std::size_t j = 0; j < boundaries_.dim(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            sys.at(i, r + j) = boundaries_.basis().at(j, i);
    auto x = solve(sys, cocycle);
    check_internal(x.has_value(), "project: cocycle outside class span");
    return Vec(x->begin(), x->begin() + r);
}

CohomologyPiece cohomology(const CochainComplex& c, int degree)
{
    if (!c.degree_certified(degree))
        throw WindowError("degree " + std::to_string(degree) + " outside certified window");
    Subspace ker = kernel_basis(c.differential(degree));
    Subspace img = image_basis(c.differential(degree - 1));
    std::vector<Vec> reps = quotient_representatives(ker, img);
    /* Same dimension by rank-nullity arithmetic. */
    std::size_t by_ranks = c.dim(degree) - rank(c.differential(degree)) -
                           rank(c.differential(degree - 1));
    check_internal(reps.size() == by_ranks, "cohomology dims disagree between routes");
    return CohomologyPiece(c.field_spec(), degree, std::move(reps), std::move(ker), std::move(img));
}

std::map<int, std::size_t> cohomology_dims(const CochainComplex& c)
{
    std::map<int, std::size_t> dims;
    if (c.space().empty())
        return dims;
    for (auto& [n, labels] : c.space().pieces()) {
        if (!c.degree_certified(n))
            continue;
        std::size_t d = cohomology(c, n).dim();
        if (d)
            dims[n] = d;
    }
    return dims;
}

CochainComplex total_complex(const std::vector<CochainComplex>& rows,
                             const std::vector<std::vector<GradedLinearMap>>& faces)
{
    check_internal(!rows.empty(), "total_complex needs at least one row");
    const FieldSpec fs = rows[0].field_spec();
    const Field f{fs};
    check_internal(faces.size() == rows.size(), "faces list must match rows (entry 0 unused)");

    /* Face maps must be chain maps into the previous row. */
    for (std::size_t p = 1; p < rows.size(); ++p) {
        check_internal(faces[p].size() == p + 1,
                       "row " + std::to_string(p) + " needs " + std::to_string(p + 1) + " faces");
        for (std::size_t i = 0; i < faces[p].size(); ++i) {
            const GradedLinearMap& di = faces[p][i];
            if (rows[p].space().empty())
                continue;
            for (int n = rows[p].space().min_degree(); n <= rows[p].space().max_degree(); ++n) {
                if (rows[p].dim(n) == 0)
                    continue;
                Matrix lhs, rhs;
                const Matrix* b = di.block(n);
                const Matrix* b1 = di.block(n + 1);
                Matrix bn = b ? *b : Matrix(fs, rows[p - 1].dim(n), rows[p].dim(n));
                Matrix bn1 = b1 ? *b1 : Matrix(fs, rows[p - 1].dim(n + 1), rows[p].dim(n + 1));
                lhs = bn1.mul(rows[p].differential(n));
                rhs = rows[p - 1].differential(n).mul(bn);
                if (!(lhs == rhs))
                    throw ValidationError("face " + std::to_string(i) + " of row " +
                                          std::to_string(p) +
                                          " does not commute with the vertical differential at degree " +
                                          std::to_string(n));
            }
        }
    }

    /* Row p in inner degree m lands in total degree m - p. */
    GradedVectorSpace total;
    std::map<int, std::vector<std::pair<std::size_t, std::size_t>>> coords; /* n -> (p, idx) */
    int tlo = 0, thi = 0;
    bool any = false;
    for (std::size_t p = 0; p < rows.size(); ++p) {
        if (rows[p].space().empty())
            continue;
        for (auto& [m, labels] : rows[p].space().pieces()) {
            int n = m - static_cast<int>(p);
            for (std::size_t i = 0; i < labels.size(); ++i) {
                total.add(n, "r" + std::to_string(p) + ":" + labels[i]);
                coords[n].push_back({p, i});
            }
            if (!any || n < tlo)
                tlo = n;
            if (!any || n > thi)
                thi = n;
            any = true;
        }
    }

    std::map<int, Matrix> diff;
    for (auto& [n, src] : coords) {
        auto tgt_it = coords.find(n + 1);
        std::size_t tdim = tgt_it == coords.end() ? 0 : tgt_it->second.size();
        Matrix d(fs, tdim, src.size());
        if (tdim == 0) {
            diff.emplace(n, std::move(d));
            continue;
        }
        /* Index lookup for target coordinates. */
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> tpos;
        for (std::size_t j = 0; j < tgt_it->second.size(); ++j)
            tpos[tgt_it->second[j]] = j;

        for (std::size_t j = 0; j < src.size(); ++j) {
            auto [p, idx] = src[j];
            int m = n + static_cast<int>(p);
            /* internal part, twisted by (-1)^p */
            Matrix dv = rows[p].differential(m);
            Scalar tw = pow_sign(static_cast<long>(p)) < 0 ? f.neg(f.one()) : f.one();
            for (std::size_t i = 0; i < dv.rows(); ++i)
                if (!dv.at(i, idx).is_zero()) {
                    auto it = tpos.find({p, i});
                    check_internal(it != tpos.end(), "total complex target coordinate missing");
                    d.at(it->second, j) = f.addmul(d.at(it->second, j), tw, dv.at(i, idx));
                }
            /* faces with alternating signs, landing in row p-1 */
            if (p >= 1) {
                for (std::size_t i = 0; i <= p; ++i) {
                    const Matrix* b = faces[p][i].block(m);
                    if (!b)
                        continue;
                    Scalar sg = pow_sign(static_cast<long>(i)) < 0 ? f.neg(f.one()) : f.one();
                    for (std::size_t t = 0; t < b->rows(); ++t)
                        if (!b->at(t, idx).is_zero()) {
                            auto it = tpos.find({p - 1, t});
                            check_internal(it != tpos.end(), "face target coordinate missing");
                            d.at(it->second, j) = f.addmul(d.at(it->second, j), sg, b->at(t, idx));
                        }
                }
            }
        }
        diff.emplace(n, std::move(d));
    }

    CochainComplex result(fs, std::move(total), std::move(diff));
    check_complex(result);
    return result;
}

} // namespace hss
