#include "specseq.hpp"

#include <algorithm>

namespace hss {

SpectralSequence::SpectralSequence(std::shared_ptr<const HochschildComplex> complex)
    : cx_(std::move(complex))
{
    const DGAlgebra& a = cx_->algebra();
    const DGBimodule& m = cx_->coefficients();
    check_internal(m.size() == a.size(), "spectral sequence needs coefficients A");
    for (std::size_t i = 0; i < m.size(); ++i)
        check_internal(m.degree(i) == a.degree(i) && m.label(i) == a.label(i),
                       "spectral sequence needs coefficients A");
    min_level_ = -a.top_degree();
}

SparseVec SpectralSequence::truncate(int n, int p, const SparseVec& v) const
{
    SparseVec out;
    for (auto& [i, c] : v)
        if (cx_->level(n, i) >= p)
            out.push_back({i, c});
    return out;
}

bool SpectralSequence::truncated_zero(int n, int p, const SparseVec& v) const
{
    for (auto& [i, c] : v)
        if (cx_->level(n, i) >= p)
            return false;
    return true;
}

const SpectralSequence::Cell& SpectralSequence::cell(int r, int p, int n) const
{
    if (r < 1)
        throw WindowError("page index must be >= 1");
    if (!window().contains(n))
        throw WindowError("cell degree " + std::to_string(n) + " outside certified window");
    auto key = std::make_tuple(r, p, n);
    auto it = cells_.find(key);
    if (it != cells_.end())
        return it->second;

    const Field& f = cx_->field();
    auto [pos, inserted] = cells_.emplace(key, Cell(f));
    Cell& cell = pos->second;
    if (p > 0 || p < min_level_)
        return cell;

    /* boundaries arriving at level p: reduced columns of degree n-1 with
     * low at level p born within r-1 steps */
    const FilteredReduction& below = cx_->reduction(n - 1);
    for (std::size_t j = 0; j < below.cols(); ++j)
        if (!below.is_cycle(j) && below.pair_level(j) == p && below.source_level(j) <= p + r - 1)
            cell.rows.add(below.reduced(j), -1);

    /* alive columns at level exactly p: delta drops at least r levels */
    const FilteredReduction& here = cx_->reduction(n);
    for (std::size_t j = 0; j < here.cols(); ++j) {
        if (here.source_level(j) != p)
            continue;
        if (!here.is_cycle(j) && here.pair_level(j) > p - r)
            continue;
        std::vector<std::pair<int, Scalar>> coeffs;
        SparseVec res = cell.rows.reduce(here.transform(j), &coeffs);
        if (truncated_zero(n, p, res))
            continue;
        Scalar top = res.back().second;
        if (!top.is_one())
            res = sv_scale(f, f.inv(top), res);
        int tag = static_cast<int>(cell.reps.size());
        cell.reps.push_back(res);
        bool added = cell.rows.add(std::move(res), tag);
        check_internal(added, "cell representative insertion failed");
    }

    check_internal(cell.dim() == cell_dim_by_ranks(r, p, n),
                   "cell dimension disagrees with the pairing formula at (r=" + std::to_string(r) +
                       ", p=" + std::to_string(p) + ", n=" + std::to_string(n) + ")");
    return cell;
}

std::size_t SpectralSequence::cell_dim_by_ranks(int r, int p, int n) const
{
    if (p > 0 || p < min_level_)
        return 0;
    const FilteredReduction& here = cx_->reduction(n);
    const FilteredReduction& below = cx_->reduction(n - 1);
    long zf_top = static_cast<long>(cx_->filtration_dim(n, p)) -
                  static_cast<long>(here.staircase_rank(p, p - r));
    long zf_bot = static_cast<long>(cx_->filtration_dim(n, p - 1)) -
                  static_cast<long>(here.staircase_rank(p - 1, p - r));
    long img = static_cast<long>(below.staircase_rank(p + r - 1, p - 1)) -
               static_cast<long>(below.staircase_rank(p + r - 1, p));
    long dim = zf_top - zf_bot - img;
    check_internal(dim >= 0, "negative cell dimension");
    return static_cast<std::size_t>(dim);
}

Vec SpectralSequence::project(int r, int p, int n, const SparseVec& z) const
{
    const Cell& c = cell(r, p, n);
    const Field& f = cx_->field();
    std::vector<std::pair<int, Scalar>> coeffs;
    SparseVec res = c.rows.reduce(z, &coeffs);
    check_internal(truncated_zero(n, p, res), "projection: class outside the cell basis span");
    Vec out(c.dim());
    for (auto& [tag, cf] : coeffs)
        out[tag] = f.add(out[tag], cf);
    return out;
}

Matrix SpectralSequence::differential(int r, int p, int n) const
{
    if (!window().contains(n + 1))
        throw WindowError("differential target degree outside certified window");
    const Cell& src = cell(r, p, n);
    const Cell& tgt = cell(r, p - r, n + 1);
    Matrix m(field().spec(), tgt.dim(), src.dim());
    for (std::size_t j = 0; j < src.dim(); ++j) {
        SparseVec dz = cx_->apply_delta(n, src.reps[j]);
        check_internal(truncated_zero(n + 1, p - r + 1, dz),
                       "differential image deeper than expected");
        Vec cls = project(r, p - r, n + 1, dz);
        for (std::size_t i = 0; i < tgt.dim(); ++i)
            m.at(i, j) = cls[i];
    }
    return m;
}

Vec SpectralSequence::product(int r, int p1, int n1, const Vec& x, int p2, int n2,
                              const Vec& y) const
{
    const Field& f = field();
    const Cell& c1 = cell(r, p1, n1);
    const Cell& c2 = cell(r, p2, n2);
    check_internal(x.size() == c1.dim() && y.size() == c2.dim(), "product coordinate size");
    SparseVec xv, yv;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero())
            sv_addmul(f, xv, x[i], c1.reps[i]);
    for (std::size_t j = 0; j < y.size(); ++j)
        if (!y[j].is_zero())
            sv_addmul(f, yv, y[j], c2.reps[j]);
    SparseVec prod = cup_regular(*cx_, n1, xv, n2, yv);
    int P = p1 + p2, N = n1 + n2;
    check_internal(truncated_zero(N, P + 1, prod), "product escapes the expected filtration");
    if (P < min_level_) {
        check_internal(prod.empty(), "nonzero product below the filtration");
        return Vec();
    }
    SparseVec dprod = cx_->apply_delta(N, prod);
    check_internal(truncated_zero(N + 1, P - r + 1, dprod), "product is not a page-r chain");
    return project(r, P, N, prod);
}

Matrix SpectralSequence::lineage(int r, int p, int n) const
{
    const Cell& next = cell(r + 1, p, n);
    const Cell& cur = cell(r, p, n);
    Matrix m(field().spec(), cur.dim(), next.dim());
    for (std::size_t j = 0; j < next.dim(); ++j) {
        Vec cls = project(r, p, n, next.reps[j]);
        for (std::size_t i = 0; i < cur.dim(); ++i)
            m.at(i, j) = cls[i];
    }
    return m;
}

void SpectralSequence::check_d_squared(int r) const
{
    for (int n = window().lo; n + 2 <= window().hi; ++n)
        for (int p = min_level_; p <= 0; ++p) {
            if (cell_dim(r, p, n) == 0)
                continue;
            Matrix d1 = differential(r, p, n);
            Matrix d2 = differential(r, p - r, n + 1);
            if (!d2.mul(d1).is_zero())
                throw InternalError("d^r . d^r != 0 at (r=" + std::to_string(r) +
                                    ", p=" + std::to_string(p) + ", n=" + std::to_string(n) + ")");
        }
}

void SpectralSequence::check_leibniz(int r) const
{
    const Field& f = field();
    for (int n1 = window().lo; n1 <= window().hi; ++n1)
        for (int p1 = min_level_; p1 <= 0; ++p1) {
            std::size_t d1 = cell_dim(r, p1, n1);
            if (d1 == 0)
                continue;
            for (int n2 = window().lo; n2 <= window().hi; ++n2)
                for (int p2 = min_level_; p2 <= 0; ++p2) {
                    std::size_t d2 = cell_dim(r, p2, n2);
                    if (d2 == 0)
                        continue;
                    int N = n1 + n2;
                    if (!window().contains(n1 + 1) || !window().contains(n2 + 1) ||
                        !window().contains(N) || !window().contains(N + 1))
                        continue;
                    Matrix dx = differential(r, p1, n1);
                    Matrix dy = differential(r, p2, n2);
                    Matrix dxy = differential(r, p1 + p2, N);
                    for (std::size_t i = 0; i < d1; ++i)
                        for (std::size_t j = 0; j < d2; ++j) {
                            Vec ei(d1), ej(d2);
                            ei[i] = f.one();
                            ej[j] = f.one();
                            Vec lhs = dxy.apply(product(r, p1, n1, ei, p2, n2, ej));
                            Vec rhs1 = product(r, p1 - r, n1 + 1, dx.apply(ei), p2, n2, ej);
                            Vec rhs2 = product(r, p1, n1, ei, p2 - r, n2 + 1, dy.apply(ej));
                            Scalar sg = f.make(pow_sign(n1));
                            Vec rhs(lhs.size());
                            for (std::size_t k = 0; k < rhs.size(); ++k)
                                rhs[k] = f.addmul(k < rhs1.size() ? rhs1[k] : Scalar(), sg,
                                                  k < rhs2.size() ? rhs2[k] : Scalar());
                            if (lhs != rhs)
                                throw InternalError(
                                    "Leibniz fails at page " + std::to_string(r) + " cells (" +
                                    std::to_string(p1) + "," + std::to_string(n1) + ")x(" +
                                    std::to_string(p2) + "," + std::to_string(n2) + ")");
                        }
                }
        }
}

void SpectralSequence::check_pages_shrink() const
{
    for (int n = window().lo; n <= window().hi; ++n)
        for (int r = 1; r < stable_page(); ++r) {
            std::size_t cur = 0, next = 0;
            for (int p = min_level_; p <= 0; ++p) {
                cur += cell_dim(r, p, n);
                next += cell_dim(r + 1, p, n);
            }
            if (next > cur)
                throw InternalError("page " + std::to_string(r + 1) + " grows at degree " +
                                    std::to_string(n));
        }
}

int SpectralSequence::collapse_page() const
{
    int collapse = 1;
    for (int r = 1; r <= stable_page(); ++r) {
        bool all_zero = true;
        for (int n = window().lo; n + 1 <= window().hi && all_zero; ++n)
            for (int p = min_level_; p <= 0 && all_zero; ++p) {
                if (cell_dim(r, p, n) == 0)
                    continue;
                if (!differential(r, p, n).is_zero())
                    all_zero = false;
            }
        if (!all_zero)
            collapse = r + 1;
    }
    return collapse;
}

Subspace SpectralSequence::survivors_column0(int n) const
{
    const Cell& c2 = cell(2, 0, n);
    const FilteredReduction& red = cx_->reduction(n);
    std::vector<Vec> gens;
    for (std::size_t j = 0; j < red.cols(); ++j)
        if (red.is_cycle(j))
            gens.push_back(project(2, 0, n, red.transform(j)));
    Subspace by_cocycles = Subspace::span(field().spec(), gens, c2.dim());

    /* cross-check: image of E^stable(0,n) under composed lineage maps */
    Matrix t = Matrix::identity(field().spec(), c2.dim());
    for (int r = 2; r < stable_page(); ++r)
        t = t.mul(lineage(r, 0, n));
    Subspace by_lineage = image_basis(t);
    check_internal(by_cocycles == by_lineage,
                   "survivor subspace disagrees between cocycle and lineage routes at degree " +
                       std::to_string(n));
    return by_cocycles;
}

std::map<int, std::size_t> SpectralSequence::einf_dims(int n) const
{
    std::map<int, std::size_t> out;
    for (int p = min_level_; p <= 0; ++p) {
        std::size_t d = cell_dim(stable_page(), p, n);
        if (d)
            out[p] = d;
    }
    return out;
}

TensorE2::TensorE2(const SpectralSequence& ss, const GradedAlgebraTable& ext)
    : ss_(&ss), ext_(&ext)
{
    if (ext.window().lo > ss.window().lo + ss.min_level() || ext.window().hi < ss.window().hi)
        throw WindowError("Ext table window too narrow for the tensor identification");
    const DGAlgebra& a = ss.complex().algebra();
    CochainComplex cc = a.cochain_complex();
    for (int d = 0; d <= a.top_degree(); ++d) {
        h_pieces_.emplace(d, cohomology(cc, d));
        h_degree_ids_[d] = a.ids_of_degree(d);
    }
}

std::size_t TensorE2::h_dim(int degree) const
{
    auto it = h_pieces_.find(degree);
    return it == h_pieces_.end() ? 0 : it->second.dim();
}

Vec TensorE2::h_product(int d1, const Vec& x, int d2, const Vec& y) const
{
    const DGAlgebra& a = ss_->complex().algebra();
    const Field& f = a.field();
    const auto& ids1 = h_degree_ids_.at(d1);
    const auto& ids2 = h_degree_ids_.at(d2);
    SpElt xe, ye;
    const auto& reps1 = h_pieces_.at(d1).representatives();
    const auto& reps2 = h_pieces_.at(d2).representatives();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero())
            for (std::size_t t = 0; t < ids1.size(); ++t)
                if (!reps1[i][t].is_zero())
                    xe = sp_addmul(f, std::move(xe), f.mul(x[i], reps1[i][t]), {{ids1[t], f.one()}});
    for (std::size_t j = 0; j < y.size(); ++j)
        if (!y[j].is_zero())
            for (std::size_t t = 0; t < ids2.size(); ++t)
                if (!reps2[j][t].is_zero())
                    ye = sp_addmul(f, std::move(ye), f.mul(y[j], reps2[j][t]), {{ids2[t], f.one()}});
    SpElt prod = a.mul(xe, ye);
    int d = d1 + d2;
    auto it = h_pieces_.find(d);
    if (it == h_pieces_.end()) {
        check_internal(prod.empty(), "cocycle product above the top degree");
        return Vec();
    }
    const auto& ids = h_degree_ids_.at(d);
    Vec v(ids.size());
    for (auto& [id, c] : prod) {
        auto pos = std::find(ids.begin(), ids.end(), id);
        check_internal(pos != ids.end(), "product not degree-homogeneous");
        v[static_cast<std::size_t>(pos - ids.begin())] = c;
    }
    return it->second.project(v);
}

SparseVec TensorE2::phi_vector(int p, int n, std::size_t hi, std::size_t ej) const
{
    const HochschildComplex& cx = ss_->complex();
    const HochschildComplex& ext_cx = ext_->complex();
    const Field& f = cx.field();
    int d = -p;
    int ne = n + p;
    const auto& ids = h_degree_ids_.at(d);
    const Vec& h_rep = h_pieces_.at(d).representatives()[hi];
    const SparseVec& e_rep = ext_->representative(ne, ej);
    std::map<std::size_t, Scalar> acc;
    for (auto& [i, kappa] : e_rep) {
        const auto& co = ext_cx.coord(ne, i);
        for (std::size_t t = 0; t < ids.size(); ++t) {
            if (h_rep[t].is_zero())
                continue;
            std::size_t pos = cx.position(n, static_cast<std::uint32_t>(ids[t]), co.shifted, co.word);
            Scalar& slot = acc[pos];
            slot = f.addmul(slot, kappa, h_rep[t]);
        }
    }
    SparseVec out;
    for (auto& [pos, c] : acc)
        if (!c.is_zero())
            out.push_back({static_cast<std::uint32_t>(pos), c});
    return out;
}

Matrix TensorE2::phi_matrix(int p, int n) const
{
    int d = -p;
    int ne = n + p;
    std::size_t hd = h_dim(d);
    std::size_t ed = ext_->dim(ne);
    const auto& c = ss_->cell(2, p, n);
    Matrix m(ss_->field().spec(), hd * ed, c.dim());
    for (std::size_t i = 0; i < hd; ++i)
        for (std::size_t j = 0; j < ed; ++j) {
            Vec cls = ss_->project(2, p, n, phi_vector(p, n, i, j));
            for (std::size_t k = 0; k < c.dim(); ++k)
                m.at(static_cast<std::size_t>(i * ed + j), k) = cls[k];
        }
    return m;
}

void TensorE2::check_dimensions() const
{
    for (int n = ss_->window().lo; n <= ss_->window().hi; ++n)
        for (int p = ss_->min_level(); p <= 0; ++p) {
            std::size_t expect = h_dim(-p) * ext_->dim(n + p);
            std::size_t got = ss_->cell_dim(2, p, n);
            if (expect != got)
                throw InternalError("E2 cell (" + std::to_string(p) + "," + std::to_string(n) +
                                    ") has dim " + std::to_string(got) + ", tensor model says " +
                                    std::to_string(expect));
            if (expect && rank(phi_matrix(p, n)) != expect)
                throw InternalError("tensor identification is not an isomorphism at (" +
                                    std::to_string(p) + "," + std::to_string(n) + ")");
        }
}

void TensorE2::check_products() const
{
    const Field& f = ss_->field();
    const DegreeWindow& w = ss_->window();
    for (int n1 = w.lo; n1 <= w.hi; ++n1)
        for (int p1 = ss_->min_level(); p1 <= 0; ++p1) {
            std::size_t h1 = h_dim(-p1), e1 = ext_->dim(n1 + p1);
            if (h1 * e1 == 0)
                continue;
            for (int n2 = w.lo; n2 <= w.hi; ++n2)
                for (int p2 = ss_->min_level(); p2 <= 0; ++p2) {
                    std::size_t h2 = h_dim(-p2), e2 = ext_->dim(n2 + p2);
                    if (h2 * e2 == 0)
                        continue;
                    int N = n1 + n2, P = p1 + p2;
                    if (!w.contains(N) || P < ss_->min_level())
                        continue;
                    Matrix phi = phi_matrix(P, N);
                    std::size_t hd = h_dim(-P), ed = ext_->dim(N + P);
                    for (std::size_t i = 0; i < h1; ++i)
                        for (std::size_t j = 0; j < e1; ++j)
                            for (std::size_t k = 0; k < h2; ++k)
                                for (std::size_t l = 0; l < e2; ++l) {
                                    /* page product of the phi classes */
                                    SparseVec prod =
                                        cup_regular(ss_->complex(), n1, phi_vector(p1, n1, i, j),
                                                    n2, phi_vector(p2, n2, k, l));
                                    Vec lhs = ss_->project(2, P, N, prod);
                                    /* tensor product with the Koszul sign */
                                    Vec hi(h1), ej(e1), hk(h2), el(e2);
                                    hi[i] = f.one();
                                    ej[j] = f.one();
                                    hk[k] = f.one();
                                    el[l] = f.one();
                                    Vec hprod = h_product(-p1, hi, -p2, hk);
                                    Vec eprod =
                                        ext_->product_classes(n1 + p1, ej, n2 + p2, el);
                                    Scalar sg = f.make(koszul_sign(n1 + p1, -p2));
                                    Vec rhs(phi.cols());
                                    for (std::size_t u = 0; u < hd; ++u)
                                        for (std::size_t v = 0; v < ed; ++v) {
                                            Scalar c =
                                                f.mul(sg, f.mul(u < hprod.size() ? hprod[u]
                                                                                 : Scalar(),
                                                                v < eprod.size() ? eprod[v]
                                                                                 : Scalar()));
                                            if (c.is_zero())
                                                continue;
                                            for (std::size_t t = 0; t < phi.cols(); ++t)
                                                rhs[t] = f.addmul(rhs[t], c,
                                                                  phi.at(u * ed + v, t));
                                        }
                                    if (lhs != rhs)
                                        throw InternalError(
                                            "E2 product differs from the tensor product at (" +
                                            std::to_string(p1) + "," + std::to_string(n1) +
                                            ")x(" + std::to_string(p2) + "," +
                                            std::to_string(n2) + ")");
                                }
                }
        }
}

std::map<std::pair<int, int>, std::size_t> e1_identification(const SpectralSequence& ss)
{
    const DGAlgebra& a = ss.complex().algebra();
    std::map<std::pair<int, int>, std::size_t> out;
    for (int p = ss.min_level(); p <= 0; ++p) {
        DGBimodule slice = subquotient(a, -p);
        if (slice.size() == 0) {
            for (int n = ss.window().lo; n <= ss.window().hi; ++n)
                if (ss.cell_dim(1, p, n) != 0)
                    throw InternalError("E1 cell nonzero over an empty slice at p=" +
                                        std::to_string(p));
            continue;
        }
        HochschildComplex direct(a, slice, ss.window());
        for (int n = ss.window().lo; n <= ss.window().hi; ++n) {
            std::size_t hdim = direct.dim(n) - direct.reduction(n).rank() -
                               direct.reduction(n - 1).rank();
            std::size_t cdim = ss.cell_dim(1, p, n);
            if (hdim != cdim)
                throw InternalError("E1 cell (" + std::to_string(p) + "," + std::to_string(n) +
                                    ") has dim " + std::to_string(cdim) +
                                    " but direct coefficients give " + std::to_string(hdim));
            if (hdim)
                out[{p, n}] = hdim;
        }
    }
    return out;
}

std::map<std::pair<int, int>, std::size_t> e2_differential_check(const SpectralSequence& ss)
{
    const DGAlgebra& a = ss.complex().algebra();
    std::map<std::pair<int, int>, std::size_t> out;
    for (int p = ss.min_level(); p <= 0; ++p) {
        DGBimodule hslice = cohomology_slice_bimodule(a, -p);
        if (hslice.size() == 0) {
            for (int n = ss.window().lo; n <= ss.window().hi; ++n)
                if (ss.cell_dim(2, p, n) != 0)
                    throw InternalError("E2 cell nonzero over vanishing cohomology at p=" +
                                        std::to_string(p));
            continue;
        }
        HochschildComplex direct(a, hslice, ss.window());
        for (int n = ss.window().lo; n <= ss.window().hi; ++n) {
            std::size_t hdim = direct.dim(n) - direct.reduction(n).rank() -
                               direct.reduction(n - 1).rank();
            std::size_t cdim = ss.cell_dim(2, p, n);
            if (hdim != cdim)
                throw InternalError("E2 cell (" + std::to_string(p) + "," + std::to_string(n) +
                                    ") has dim " + std::to_string(cdim) +
                                    " but H-slice coefficients give " + std::to_string(hdim));
            if (hdim)
                out[{p, n}] = hdim;
        }
    }
    return out;
}

AbutmentReport abutment_check(const SpectralSequence& ss, const GradedAlgebraTable& hh, int n)
{
    check_internal(&hh.complex() == &ss.complex(), "abutment needs the shared complex");
    AbutmentReport rep;
    rep.einf = ss.einf_dims(n);
    rep.hh_dim = hh.dim(n);

    /* filtration of HH^n by classes of cocycles lying in F_p */
    const FilteredReduction& red = ss.complex().reduction(n);
    const FieldSpec fs = ss.field().spec();
    std::size_t prev = 0;
    for (int p = ss.min_level(); p <= 0; ++p) {
        std::vector<Vec> gens;
        for (std::size_t j = 0; j < red.cols(); ++j)
            if (red.is_cycle(j) && red.source_level(j) <= p)
                gens.push_back(hh.project(n, red.transform(j)));
        Subspace phi_p = Subspace::span(fs, gens, rep.hh_dim);
        std::size_t g = phi_p.dim() - prev;
        if (g)
            rep.graded[p] = g;
        prev = phi_p.dim();
    }

    std::size_t esum = 0;
    for (auto& [p, d] : rep.einf)
        esum += d;
    rep.ok = (esum == rep.hh_dim) && (rep.graded == rep.einf) && (prev == rep.hh_dim);
    return rep;
}

std::vector<PermanentCycleReport> permanent_cycles_vs_shearing(const SpectralSequence& ss,
                                                               const TensorE2& tensor,
                                                               const ShearingResult& shr)
{
    std::vector<PermanentCycleReport> out;
    const FieldSpec fs = ss.field().spec();
    for (int n = ss.window().lo; n <= ss.window().hi; ++n) {
        std::size_t cdim = ss.cell_dim(2, 0, n);
        std::size_t edim = tensor.ext().dim(n);
        if (cdim == 0 && edim == 0)
            continue;
        Subspace survivors = ss.survivors_column0(n);

        /* image of the shearing map, pushed through phi into cell coords */
        Matrix phi = tensor.phi_matrix(0, n); /* rows = ext classes (h is 1-dim) */
        std::vector<Vec> gens;
        auto it = shr.image.find(n);
        if (it != shr.image.end())
            for (std::size_t r = 0; r < it->second.dim(); ++r) {
                Vec img = it->second.basis().row(r);
                Vec cellv(cdim);
                const Field& f = ss.field();
                for (std::size_t j = 0; j < edim; ++j)
                    if (!img[j].is_zero())
                        for (std::size_t k = 0; k < cdim; ++k)
                            cellv[k] = f.addmul(cellv[k], img[j], phi.at(j, k));
                gens.push_back(std::move(cellv));
            }
        Subspace image_side = Subspace::span(fs, gens, cdim);
        out.push_back({n, survivors.dim(), image_side.dim(), survivors == image_side});
    }
    return out;
}

FrobeniusReport frobenius_permanent_cycles(const SpectralSequence& ss, const TensorE2& tensor,
                                           int class_degree, std::size_t class_index)
{
    const Field& f = ss.field();
    std::int64_t p = f.characteristic();
    check_internal(p > 0, "permanent-cycle check needs positive characteristic");
    const GradedAlgebraTable& ext = tensor.ext();

    FrobeniusReport rep;
    rep.class_degree = class_degree;
    rep.class_index = class_index;

    Vec x(ext.dim(class_degree));
    x[class_index] = f.one();
    int xdeg = class_degree;

    for (int r = 2; r <= ss.stable_page(); ++r) {
        /* power = x^{p^{r-1}}, built by repeated multiplication */
        Vec power = x;
        int pdeg = xdeg;
        bool in_window = true;
        std::int64_t copies = 1;
        for (int e = 0; e < r - 1 && in_window; ++e)
            copies *= p;
        for (std::int64_t c = 1; c < copies && in_window; ++c) {
            if (!ext.product_in_window(pdeg, xdeg) ||
                pdeg + xdeg < ext.window().lo) {
                in_window = false;
                break;
            }
            power = ext.product_classes(pdeg, power, xdeg, x);
            pdeg += xdeg;
        }
        int n = pdeg; /* column 0: total degree = ext degree */
        if (!in_window || !ss.window().contains(n) || !ss.window().contains(n + 1)) {
            rep.window_limited = true;
            break;
        }
        if (vec_is_zero(power)) {
            rep.pages_checked.push_back(r); /* the zero class is a cycle */
            continue;
        }

        /* phi(1 (x) power) in C*(A;A) */
        SparseVec z;
        for (std::size_t j = 0; j < power.size(); ++j)
            if (!power[j].is_zero())
                sv_addmul(f, z, power[j], tensor.phi_vector(0, n, 0, j));

        /* locate the class on page r through the lineage maps */
        Vec cls2 = ss.project(2, 0, n, z);
        Matrix t = Matrix::identity(f.spec(), ss.cell_dim(2, 0, n));
        for (int s = 2; s < r; ++s)
            t = t.mul(ss.lineage(s, 0, n));
        auto coords = solve(t, cls2);
        if (!coords) {
            rep.all_cycles = false;
            break;
        }
        Vec dr = ss.differential(r, 0, n).apply(*coords);
        if (!vec_is_zero(dr)) {
            rep.all_cycles = false;
            break;
        }
        rep.pages_checked.push_back(r);
    }
    return rep;
}

std::pair<int, std::size_t> detect_central_class(const GradedAlgebraTable& ext)
{
    std::int64_t p = ext.complex().field().characteristic();
    for (int n = -1; n >= ext.window().lo; --n) {
        if (ext.dim(n) == 0)
            continue;
        if (p == 2 || (n % 2 == 0))
            return {n, 0};
    }
    throw WindowError("no central class available for the permanent-cycle check");
}

} // namespace hss
