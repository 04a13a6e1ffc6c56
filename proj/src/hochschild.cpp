#include "hochschild.hpp"

#include <algorithm>
#include <map>

namespace hss {

const std::vector<BarWord> WordTable::none_;

std::string BarWord::label(const DGAlgebra& a) const
{
    if (letters.empty())
        return "[]";
    std::string s = "[";
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i)
            s += "|";
        s += a.label(letters[i]);
    }
    return s + "]";
}

namespace {

bool word_less(const BarWord& a, const BarWord& b)
{
    if (a.letters.size() != b.letters.size())
        return a.letters.size() < b.letters.size();
    return a.letters < b.letters;
}

} // namespace

WordTable::WordTable(const DGAlgebra& a, int max_shifted, const Budget& budget)
{
    if (max_shifted < 0)
        max_shifted = 0;
    std::vector<std::uint32_t> letters;
    for (auto id : a.augmentation_ideal_ids()) {
        if (a.degree(id) < 2)
            throw ValidationError("bar letters need degree >= 2; '" + a.label(id) +
                                  "' has degree " + std::to_string(a.degree(id)));
        letters.push_back(static_cast<std::uint32_t>(id));
    }

    by_shifted_.resize(max_shifted + 1);
    by_shifted_[0].push_back(BarWord{});
    total_ = 1;
    for (int s = 1; s <= max_shifted; ++s) {
        auto& out = by_shifted_[s];
        for (auto b : letters) {
            int sig = a.degree(b) - 1;
            if (sig > s)
                continue;
            for (const BarWord& u : by_shifted_[s - sig]) {
                BarWord w;
                w.letters.reserve(u.letters.size() + 1);
                w.letters.push_back(b);
                w.letters.insert(w.letters.end(), u.letters.begin(), u.letters.end());
                w.internal = u.internal + a.degree(b);
                out.push_back(std::move(w));
            }
        }
        std::sort(out.begin(), out.end(), word_less);
        total_ += out.size();
        budget.charge_words(total_);
    }
}

const std::vector<BarWord>& WordTable::words(int shifted) const
{
    if (shifted < 0 || shifted > max_shifted())
        return none_;
    return by_shifted_[shifted];
}

std::size_t WordTable::find(int shifted, const std::vector<std::uint32_t>& letters) const
{
    const auto& list = words(shifted);
    BarWord probe;
    probe.letters = letters;
    auto it = std::lower_bound(list.begin(), list.end(), probe, word_less);
    if (it == list.end() || it->letters != letters)
        return SIZE_MAX;
    return static_cast<std::size_t>(it - list.begin());
}

std::map<int, std::vector<BarWord>> enumerate_words(const DGAlgebra& a, int max_internal_degree,
                                                    const Budget& budget)
{
    /* internal = shifted + length <= 2 * shifted for letters of degree >= 2,
     * so shifted <= internal - 1 except for the empty word. */
    WordTable table(a, std::max(max_internal_degree - 1, 0), budget);
    std::map<int, std::vector<BarWord>> out;
    for (int s = 0; s <= table.max_shifted(); ++s)
        for (const BarWord& w : table.words(s))
            if (w.internal <= max_internal_degree)
                out[w.internal].push_back(w);
    for (auto& [deg, list] : out)
        std::sort(list.begin(), list.end(), word_less);
    return out;
}

HochschildComplex::HochschildComplex(const DGAlgebra& a, const DGBimodule& m, DegreeWindow window,
                                     const Budget& budget)
    : a_(std::make_shared<DGAlgebra>(a)), m_(std::make_shared<DGBimodule>(m)), window_(window),
      budget_(budget)
{
    ValidationReport rep = validate(a);
    if (!rep.valid || !rep.strict_simply_connected)
        throw ValidationError("Hochschild complex requires a valid strict algebra: " +
                              rep.summary());

    int max_shifted = 0;
    for (std::size_t i = 0; i < m_->size(); ++i)
        max_shifted = std::max(max_shifted, m_->degree(i) - (window_.lo - 1));
    words_ = std::make_shared<WordTable>(*a_, max_shifted, budget_);

    for (auto id : a_->augmentation_ideal_ids())
        ideal_ids_.push_back(static_cast<std::uint32_t>(id));

    rev_d_.resize(a_->size());
    for (auto b : ideal_ids_)
        for (auto& [t, c] : a_->d(b))
            rev_d_[t].push_back({b, c});
    rev_mul_.resize(a_->size());
    for (auto b1 : ideal_ids_)
        for (auto b2 : ideal_ids_)
            for (auto& [t, c] : a_->product(b1, b2))
                rev_mul_[t].push_back({b1, b2, c});

    for (int n = window_.lo - 1; n <= window_.hi + 1; ++n)
        build_piece(n);
    for (int n = window_.lo - 1; n <= window_.hi; ++n)
        build_delta(n);
}

void HochschildComplex::build_piece(int n)
{
    Piece piece;
    piece.m_offset.assign(m_->size(), SIZE_MAX);
    /* coefficient degree descending = level ascending */
    std::vector<std::uint32_t> by_level;
    for (std::size_t i = 0; i < m_->size(); ++i)
        by_level.push_back(static_cast<std::uint32_t>(i));
    std::stable_sort(by_level.begin(), by_level.end(), [&](std::uint32_t x, std::uint32_t y) {
        return m_->degree(x) > m_->degree(y);
    });
    for (auto mid : by_level) {
        int s = m_->degree(mid) - n;
        const auto& ws = words_->words(s);
        if (s < 0 || ws.empty())
            continue;
        piece.m_offset[mid] = piece.coords.size();
        for (std::uint32_t wi = 0; wi < ws.size(); ++wi) {
            piece.coords.push_back(Coord{s, wi, mid});
            piece.levels.push_back(-m_->degree(mid));
        }
    }
    pieces_.emplace(n, std::move(piece));
}

std::size_t HochschildComplex::dim(int n) const
{
    auto it = pieces_.find(n);
    return it == pieces_.end() ? 0 : it->second.coords.size();
}

const HochschildComplex::Coord& HochschildComplex::coord(int n, std::size_t i) const
{
    return pieces_.at(n).coords[i];
}

int HochschildComplex::level(int n, std::size_t i) const { return pieces_.at(n).levels[i]; }

std::size_t HochschildComplex::position(int n, std::uint32_t m_id, int shifted,
                                        std::size_t word_idx) const
{
    auto it = pieces_.find(n);
    check_internal(it != pieces_.end(), "piece " + std::to_string(n) + " not built");
    check_internal(m_->degree(m_id) - shifted == n, "coordinate degree mismatch");
    std::size_t off = it->second.m_offset[m_id];
    check_internal(off != SIZE_MAX, "coefficient block missing in piece");
    return off + word_idx;
}

std::string HochschildComplex::coord_label(int n, std::size_t i) const
{
    const Coord& c = coord(n, i);
    return words_->words(c.shifted)[c.word].label(*a_) + ";" + m_->label(c.m);
}

void HochschildComplex::build_delta(int n)
{
    const Field& f = a_->field();
    const Piece& src = pieces_.at(n);
    std::vector<SparseVec> cols(src.coords.size());

    for (std::size_t j = 0; j < src.coords.size(); ++j) {
        if ((j & 255) == 0)
            budget_.check_time();
        const Coord& co = src.coords[j];
        const BarWord& w = words_->words(co.shifted)[co.word];
        const int t = w.length();
        std::map<std::size_t, Scalar> acc;
        auto put = [&](std::size_t pos, const Scalar& c) {
            Scalar& slot = acc[pos];
            slot = f.add(slot, c);
        };

        /* coefficient differential */
        for (auto& [m2, c] : m_->d(co.m))
            put(position(n + 1, static_cast<std::uint32_t>(m2), co.shifted, co.word), c);

        /* internal letter differentials; replacing letter j by b with
         * d(b) ∋ w_j drops the shifted degree by one */
        {
            int prefix = 0;
            std::vector<std::uint32_t> letters = w.letters;
            for (int slot = 0; slot < t; ++slot) {
                std::uint32_t orig = letters[slot];
                for (auto& [b, kappa] : rev_d_[orig]) {
                    letters[slot] = b;
                    std::size_t wi = words_->find(co.shifted - 1, letters);
                    check_internal(wi != SIZE_MAX, "internal-differential word missing");
                    long expo = static_cast<long>(n) + t + prefix;
                    Scalar c = f.mul(f.make(-pow_sign(expo)), kappa);
                    put(position(n + 1, co.m, co.shifted - 1, wi), c);
                }
                letters[slot] = orig;
                prefix += a_->degree(orig);
            }
        }

        /* face 0: left action of a prepended letter on the coefficient */
        for (auto b : ideal_ids_) {
            const SpElt& bm = m_->left(b, co.m);
            if (bm.empty())
                continue;
            std::vector<std::uint32_t> letters;
            letters.reserve(t + 1);
            letters.push_back(b);
            letters.insert(letters.end(), w.letters.begin(), w.letters.end());
            int s2 = co.shifted + a_->degree(b) - 1;
            std::size_t wi = words_->find(s2, letters);
            check_internal(wi != SIZE_MAX, "left-face word missing");
            long expo = static_cast<long>(n) * (a_->degree(b) + 1);
            Scalar sign = f.make(-pow_sign(expo));
            for (auto& [m2, c] : bm)
                put(position(n + 1, static_cast<std::uint32_t>(m2), s2, wi), f.mul(sign, c));
        }

        /* inner faces: expanding letter j into a product pair raises the
         * length, dropping the shifted degree by one */
        {
            std::vector<std::uint32_t> letters(w.letters.size() + 1);
            for (int slot = 0; slot < t; ++slot) {
                std::uint32_t orig = w.letters[slot];
                for (int i = 0; i < slot; ++i)
                    letters[i] = w.letters[i];
                for (int i = slot + 1; i < t; ++i)
                    letters[i + 1] = w.letters[i];
                for (auto& [b1, b2, kappa] : rev_mul_[orig]) {
                    letters[slot] = b1;
                    letters[slot + 1] = b2;
                    std::size_t wi = words_->find(co.shifted - 1, letters);
                    check_internal(wi != SIZE_MAX, "inner-face word missing");
                    long expo = static_cast<long>(n) + slot + 1;
                    Scalar c = f.mul(f.make(-pow_sign(expo)), kappa);
                    put(position(n + 1, co.m, co.shifted - 1, wi), c);
                }
            }
        }

        /* last face: right action of an appended letter */
        for (auto b : ideal_ids_) {
            const SpElt& mb = m_->right(co.m, b);
            if (mb.empty())
                continue;
            std::vector<std::uint32_t> letters = w.letters;
            letters.push_back(b);
            int s2 = co.shifted + a_->degree(b) - 1;
            std::size_t wi = words_->find(s2, letters);
            check_internal(wi != SIZE_MAX, "right-face word missing");
            long expo = static_cast<long>(n) + t + 1;
            Scalar sign = f.make(-pow_sign(expo));
            for (auto& [m2, c] : mb)
                put(position(n + 1, static_cast<std::uint32_t>(m2), s2, wi), f.mul(sign, c));
        }

        SparseVec col;
        col.reserve(acc.size());
        for (auto& [pos, c] : acc)
            if (!c.is_zero())
                col.push_back({static_cast<std::uint32_t>(pos), c});
        cols[j] = std::move(col);
    }
    deltas_.emplace(n, std::move(cols));
}

const std::vector<SparseVec>& HochschildComplex::delta(int n) const
{
    auto it = deltas_.find(n);
    check_internal(it != deltas_.end(), "differential at degree " + std::to_string(n) + " not built");
    return it->second;
}

SparseVec HochschildComplex::apply_delta(int n, const SparseVec& v) const
{
    const Field& f = a_->field();
    const auto& cols = delta(n);
    SparseVec out;
    for (auto& [i, c] : v)
        sv_addmul(f, out, c, cols[i]);
    return out;
}

void HochschildComplex::check_d_squared() const
{
    for (int n = window_.lo - 1; n < window_.hi; ++n) {
        const auto& cols = delta(n);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            SparseVec dd = apply_delta(n + 1, cols[j]);
            if (!dd.empty())
                throw InternalError("delta.delta != 0 at degree " + std::to_string(n) +
                                    " on basis cochain " + coord_label(n, j));
        }
    }
}

std::size_t HochschildComplex::filtration_dim(int n, int p) const
{
    auto it = pieces_.find(n);
    if (it == pieces_.end())
        return 0;
    const auto& levels = it->second.levels;
    /* levels ascending: count entries <= p */
    return static_cast<std::size_t>(
        std::upper_bound(levels.begin(), levels.end(), p) - levels.begin());
}

const FilteredReduction& HochschildComplex::reduction(int n) const
{
    auto it = reductions_.find(n);
    if (it != reductions_.end())
        return it->second;
    const Piece& src = pieces_.at(n);
    const Piece& tgt = pieces_.at(n + 1);
    auto [pos, inserted] = reductions_.emplace(
        n, FilteredReduction(a_->field(), delta(n), src.levels, tgt.levels, &budget_));
    return pos->second;
}

CochainComplex HochschildComplex::as_cochain_complex() const
{
    GradedVectorSpace space;
    for (int n = window_.lo - 1; n <= window_.hi + 1; ++n)
        for (std::size_t i = 0; i < dim(n); ++i)
            space.add(n, coord_label(n, i));
    std::map<int, Matrix> blocks;
    for (int n = window_.lo - 1; n <= window_.hi; ++n) {
        Matrix m(a_->field_spec(), dim(n + 1), dim(n));
        const auto& cols = delta(n);
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (auto& [i, c] : cols[j])
                m.at(i, j) = c;
        blocks.emplace(n, std::move(m));
    }
    return CochainComplex(a_->field_spec(), std::move(space), std::move(blocks), window_);
}

SparseVec cup(const HochschildComplex& src1, int n1, const SparseVec& f,
              const HochschildComplex& src2, int n2, const SparseVec& g,
              const HochschildComplex& target,
              const std::function<SpElt(std::uint32_t, std::uint32_t)>& mul_values)
{
    const Field& fl = src1.field();
    std::map<std::size_t, Scalar> acc;
    for (auto& [i1, c1] : f) {
        const auto& co1 = src1.coord(n1, i1);
        const BarWord& w1 = src1.word_table().words(co1.shifted)[co1.word];
        long sign_expo = static_cast<long>(n2) * co1.shifted;
        Scalar base = fl.mul(c1, fl.make(pow_sign(sign_expo)));
        for (auto& [i2, c2] : g) {
            const auto& co2 = src2.coord(n2, i2);
            SpElt vals = mul_values(co1.m, co2.m);
            if (vals.empty())
                continue;
            const BarWord& w2 = src2.word_table().words(co2.shifted)[co2.word];
            std::vector<std::uint32_t> letters = w1.letters;
            letters.insert(letters.end(), w2.letters.begin(), w2.letters.end());
            int s = co1.shifted + co2.shifted;
            std::size_t wi = target.word_table().find(s, letters);
            check_internal(wi != SIZE_MAX, "cup product word missing from table");
            Scalar c = fl.mul(base, c2);
            for (auto& [m2, cm] : vals) {
                std::size_t pos = target.position(n1 + n2, static_cast<std::uint32_t>(m2), s, wi);
                Scalar& slot = acc[pos];
                slot = fl.addmul(slot, c, cm);
            }
        }
    }
    SparseVec out;
    for (auto& [pos, c] : acc)
        if (!c.is_zero())
            out.push_back({static_cast<std::uint32_t>(pos), c});
    return out;
}

SparseVec cup_regular(const HochschildComplex& c, int n1, const SparseVec& f, int n2,
                      const SparseVec& g)
{
    const DGAlgebra& a = c.algebra();
    return cup(c, n1, f, c, n2, g, c,
               [&a](std::uint32_t m1, std::uint32_t m2) { return a.product(m1, m2); });
}

SparseVec cup_trivial(const HochschildComplex& c, int n1, const SparseVec& f, int n2,
                      const SparseVec& g)
{
    const Field& fl = c.field();
    SpElt unit{{0, fl.one()}};
    return cup(c, n1, f, c, n2, g, c,
               [&unit](std::uint32_t, std::uint32_t) { return unit; });
}

GradedAlgebraTable::GradedAlgebraTable(std::shared_ptr<const HochschildComplex> complex, Kind kind)
    : complex_(std::move(complex)), kind_(kind)
{
}

const GradedAlgebraTable::DegreeData& GradedAlgebraTable::data(int n) const
{
    auto it = by_degree_.find(n);
    if (it != by_degree_.end())
        return it->second;
    if (!window().contains(n))
        throw WindowError("class degree " + std::to_string(n) + " outside certified window");
    const Field& f = complex_->field();
    auto [pos, inserted] = by_degree_.emplace(n, DegreeData(f));
    DegreeData& dd = pos->second;
    const FilteredReduction& below = complex_->reduction(n - 1);
    for (std::size_t j = 0; j < below.cols(); ++j)
        if (!below.is_cycle(j))
            dd.projector.add(below.reduced(j), -1);
    /* Sweep cocycle columns in order; each new class representative is the
     * residue after eliminating boundaries and earlier representatives, so
     * projection coefficients are class coordinates on the nose. */
    const FilteredReduction& here = complex_->reduction(n);
    for (std::size_t j = 0; j < here.cols(); ++j) {
        if (!here.is_cycle(j))
            continue;
        SparseVec res = dd.projector.reduce(here.transform(j));
        if (res.empty())
            continue;
        Scalar top = res.back().second;
        if (!top.is_one())
            res = sv_scale(f, f.inv(top), res);
        int tag = static_cast<int>(dd.reps.size());
        dd.rep_columns.push_back(j);
        dd.reps.push_back(res);
        bool added = dd.projector.add(std::move(res), tag);
        check_internal(added, "representative insertion failed");
    }
    return dd;
}

std::size_t GradedAlgebraTable::dim(int n) const { return data(n).reps.size(); }

std::map<int, std::size_t> GradedAlgebraTable::dims() const
{
    std::map<int, std::size_t> out;
    for (int n = window().lo; n <= window().hi; ++n) {
        std::size_t d = dim(n);
        if (d)
            out[n] = d;
    }
    return out;
}

const SparseVec& GradedAlgebraTable::representative(int n, std::size_t i) const
{
    return data(n).reps[i];
}

Vec GradedAlgebraTable::project(int n, const SparseVec& cocycle) const
{
    const DegreeData& dd = data(n);
    const Field& f = complex_->field();
    std::vector<std::pair<int, Scalar>> coeffs;
    SparseVec res = dd.projector.reduce(cocycle, &coeffs);
    check_internal(res.empty(), "projection: vector is not in the cocycle span");
    Vec out(dd.reps.size());
    for (auto& [tag, c] : coeffs)
        out[tag] = f.add(out[tag], c);
    return out;
}

bool GradedAlgebraTable::is_cocycle(int n, const SparseVec& v) const
{
    return complex_->apply_delta(n, v).empty();
}

Vec GradedAlgebraTable::unit_class() const
{
    const Field& f = complex_->field();
    /* empty word valued at the degree-0 coefficient basis element */
    std::uint32_t unit_m = UINT32_MAX;
    for (std::size_t i = 0; i < complex_->coefficients().size(); ++i)
        if (complex_->coefficients().degree(i) == 0) {
            check_internal(unit_m == UINT32_MAX, "ambiguous degree-0 coefficient");
            unit_m = static_cast<std::uint32_t>(i);
        }
    check_internal(unit_m != UINT32_MAX, "no degree-0 coefficient");
    SparseVec u{{static_cast<std::uint32_t>(complex_->position(0, unit_m, 0, 0)), f.one()}};
    check_internal(is_cocycle(0, u), "unit cochain is not a cocycle");
    return project(0, u);
}

Vec GradedAlgebraTable::product(int n1, std::size_t i, int n2, std::size_t j) const
{
    if (!product_in_window(n1, n2))
        throw WindowError("class product lands outside the certified window");
    const SparseVec& f = representative(n1, i);
    const SparseVec& g = representative(n2, j);
    SparseVec prod = kind_ == Kind::regular ? cup_regular(*complex_, n1, f, n2, g)
                                            : cup_trivial(*complex_, n1, f, n2, g);
    check_internal(is_cocycle(n1 + n2, prod), "cup of cocycles is not a cocycle");
    return project(n1 + n2, prod);
}

Vec GradedAlgebraTable::product_classes(int n1, const Vec& x, int n2, const Vec& y) const
{
    const Field& f = complex_->field();
    Vec out(dim(n1 + n2));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j].is_zero())
                continue;
            Vec pij = product(n1, i, n2, j);
            Scalar c = f.mul(x[i], y[j]);
            for (std::size_t k = 0; k < out.size(); ++k)
                out[k] = f.addmul(out[k], c, pij[k]);
        }
    }
    return out;
}

SparseVec GradedAlgebraTable::class_to_cocycle(int n, const Vec& cls) const
{
    const Field& f = complex_->field();
    SparseVec out;
    for (std::size_t i = 0; i < cls.size(); ++i)
        if (!cls[i].is_zero())
            sv_addmul(f, out, cls[i], representative(n, i));
    return out;
}

void GradedAlgebraTable::check_associative_unital() const
{
    const Field& f = complex_->field();
    Vec unit = unit_class();
    std::vector<int> degs;
    for (auto& [n, d] : dims())
        degs.push_back(n);

    for (int n : degs)
        for (std::size_t i = 0; i < dim(n); ++i) {
            Vec e(dim(n));
            e[i] = f.one();
            if (product_in_window(0, n)) {
                if (product_classes(0, unit, n, e) != e)
                    throw InternalError("unit class is not a left unit at degree " +
                                        std::to_string(n));
                if (product_classes(n, e, 0, unit) != e)
                    throw InternalError("unit class is not a right unit at degree " +
                                        std::to_string(n));
            }
        }

    for (int n1 : degs)
        for (int n2 : degs)
            for (int n3 : degs) {
                if (!window().contains(n1 + n2) || !window().contains(n2 + n3) ||
                    !window().contains(n1 + n2 + n3))
                    continue;
                if (!product_in_window(n1, n2) || !product_in_window(n2, n3) ||
                    !product_in_window(n1 + n2, n3) || !product_in_window(n1, n2 + n3))
                    continue;
                for (std::size_t i = 0; i < dim(n1); ++i)
                    for (std::size_t j = 0; j < dim(n2); ++j)
                        for (std::size_t k = 0; k < dim(n3); ++k) {
                            Vec ei(dim(n1)), ej(dim(n2)), ek(dim(n3));
                            ei[i] = f.one();
                            ej[j] = f.one();
                            ek[k] = f.one();
                            Vec lhs = product_classes(n1 + n2, product_classes(n1, ei, n2, ej),
                                                      n3, ek);
                            Vec rhs = product_classes(n1, ei, n2 + n3,
                                                      product_classes(n2, ej, n3, ek));
                            if (lhs != rhs)
                                throw InternalError("table product is not associative at (" +
                                                    std::to_string(n1) + "," + std::to_string(n2) +
                                                    "," + std::to_string(n3) + ")");
                        }
            }
}

void GradedAlgebraTable::check_graded_commutative() const
{
    const Field& f = complex_->field();
    std::vector<int> degs;
    for (auto& [n, d] : dims())
        degs.push_back(n);
    for (int n1 : degs)
        for (int n2 : degs) {
            if (!product_in_window(n1, n2) || !product_in_window(n2, n1))
                continue;
            for (std::size_t i = 0; i < dim(n1); ++i)
                for (std::size_t j = 0; j < dim(n2); ++j) {
                    Vec xy = product(n1, i, n2, j);
                    Vec yx = product(n2, j, n1, i);
                    Scalar sg = f.make(koszul_sign(n1, n2));
                    for (std::size_t k = 0; k < xy.size(); ++k)
                        if (xy[k] != f.mul(sg, yx[k]))
                            throw InternalError("graded commutativity fails at degrees (" +
                                                std::to_string(n1) + "," + std::to_string(n2) + ")");
                }
        }
}

GradedAlgebraTable hh_algebra(const DGAlgebra& a, DegreeWindow window, const Budget& budget)
{
    auto cx = std::make_shared<HochschildComplex>(a, regular_bimodule(a), window, budget);
    return GradedAlgebraTable(cx, GradedAlgebraTable::Kind::regular);
}

GradedAlgebraTable ext_algebra(const DGAlgebra& a, DegreeWindow window, const Budget& budget)
{
    auto cx = std::make_shared<HochschildComplex>(a, trivial_bimodule(a), window, budget);
    return GradedAlgebraTable(cx, GradedAlgebraTable::Kind::trivial);
}

SparseVec shear_cochain(const HochschildComplex& hh_cx, int n, const SparseVec& f,
                        const HochschildComplex& ext_cx)
{
    SparseVec out;
    for (auto& [i, c] : f) {
        const auto& co = hh_cx.coord(n, i);
        if (hh_cx.coefficients().degree(co.m) != 0)
            continue; /* augmentation kills positive degrees */
        std::size_t pos = ext_cx.position(n, 0, co.shifted, co.word);
        out.push_back({static_cast<std::uint32_t>(pos), c});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

ShearingResult shearing(const GradedAlgebraTable& hh, const GradedAlgebraTable& ext)
{
    if (ext.window().lo > hh.window().lo || ext.window().hi < hh.window().hi)
        throw WindowError("shearing requires the Ext table to cover the HH window");
    ShearingResult out;
    const FieldSpec fs = hh.complex().field().spec();
    for (int n = hh.window().lo; n <= hh.window().hi; ++n) {
        std::size_t hd = hh.dim(n), ed = ext.dim(n);
        Matrix m(fs, ed, hd);
        for (std::size_t j = 0; j < hd; ++j) {
            SparseVec sheared = shear_cochain(hh.complex(), n, hh.representative(n, j),
                                              ext.complex());
            check_internal(ext.is_cocycle(n, sheared), "sheared cocycle is not a cocycle");
            Vec cls = ext.project(n, sheared);
            for (std::size_t i = 0; i < ed; ++i)
                m.at(i, j) = cls[i];
        }
        if (hd || ed) {
            out.image.emplace(n, image_basis(m));
            out.kernel.emplace(n, kernel_basis(m));
            out.map.emplace(n, std::move(m));
        }
    }
    return out;
}

void check_shearing_ring_map(const GradedAlgebraTable& hh, const GradedAlgebraTable& ext,
                             const ShearingResult& s)
{
    auto shear_class = [&](int n, const Vec& x) {
        auto it = s.map.find(n);
        if (it == s.map.end())
            return Vec();
        return it->second.apply(x);
    };
    const Field& f = hh.complex().field();
    for (auto& [n1, m1] : s.map)
        for (auto& [n2, m2] : s.map) {
            if (!hh.product_in_window(n1, n2) || !ext.product_in_window(n1, n2))
                continue;
            for (std::size_t i = 0; i < hh.dim(n1); ++i)
                for (std::size_t j = 0; j < hh.dim(n2); ++j) {
                    Vec ei(hh.dim(n1)), ej(hh.dim(n2));
                    ei[i] = f.one();
                    ej[j] = f.one();
                    Vec lhs = shear_class(n1 + n2, hh.product_classes(n1, ei, n2, ej));
                    Vec rhs = ext.product_classes(n1, shear_class(n1, ei), n2, shear_class(n2, ej));
                    if (lhs != rhs)
                        throw InternalError("shearing is not a ring map at degrees (" +
                                            std::to_string(n1) + "," + std::to_string(n2) + ")");
                }
        }
}

void check_shearing_centrality(const GradedAlgebraTable& ext, const ShearingResult& s)
{
    const Field& f = ext.complex().field();
    for (auto& [n1, img] : s.image)
        for (std::size_t r = 0; r < img.dim(); ++r) {
            Vec x = img.basis().row(r);
            for (int n2 = ext.window().lo; n2 <= ext.window().hi; ++n2) {
                if (!ext.product_in_window(n1, n2) || !ext.product_in_window(n2, n1))
                    continue;
                for (std::size_t j = 0; j < ext.dim(n2); ++j) {
                    Vec ej(ext.dim(n2));
                    ej[j] = f.one();
                    Vec xy = ext.product_classes(n1, x, n2, ej);
                    Vec yx = ext.product_classes(n2, ej, n1, x);
                    Scalar sg = f.make(koszul_sign(n1, n2));
                    for (std::size_t k = 0; k < xy.size(); ++k)
                        if (xy[k] != f.mul(sg, yx[k]))
                            throw InternalError(
                                "shearing image fails to be central at degrees (" +
                                std::to_string(n1) + "," + std::to_string(n2) + ")");
                }
            }
        }
}

NilpotencyResult nilpotency_index(const GradedAlgebraTable& hh, const ShearingResult& s)
{
    const Field& f = hh.complex().field();
    const FieldSpec fs = f.spec();
    NilpotencyResult out;

    /* kernel generators per degree, as class coordinate vectors */
    std::map<int, std::vector<Vec>> gens;
    for (auto& [n, ker] : s.kernel)
        for (std::size_t r = 0; r < ker.dim(); ++r)
            gens[n].push_back(ker.basis().row(r));

    std::map<int, Subspace> current;
    for (auto& [n, vs] : gens)
        current.emplace(n, Subspace::span(fs, vs, hh.dim(n)));

    auto all_zero = [&](const std::map<int, Subspace>& m) {
        for (auto& [n, sub] : m)
            if (sub.dim())
                return false;
        return true;
    };

    int level = 1;
    const int cap = (hh.window().hi - hh.window().lo) + 2;
    while (!all_zero(current) && level <= cap) {
        std::map<int, std::vector<Vec>> next_gens;
        for (auto& [n1, sub] : current) {
            if (!sub.dim())
                continue;
            for (auto& [n2, glist] : gens) {
                if (glist.empty())
                    continue;
                if (!hh.product_in_window(n1, n2)) {
                    out.exceeds_window = true;
                    continue;
                }
                for (std::size_t r = 0; r < sub.dim(); ++r)
                    for (auto& g : glist) {
                        Vec prod = hh.product_classes(n1, sub.basis().row(r), n2, g);
                        if (!vec_is_zero(prod))
                            next_gens[n1 + n2].push_back(prod);
                    }
            }
        }
        std::map<int, Subspace> next;
        for (auto& [n, vs] : next_gens)
            next.emplace(n, Subspace::span(fs, vs, hh.dim(n)));
        current = std::move(next);
        ++level;
    }
    if (!all_zero(current))
        out.exceeds_window = true;
    out.index = level;
    return out;
}

} // namespace hss
