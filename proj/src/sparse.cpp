#include "sparse.hpp"

#include "common.hpp"

#include <algorithm>
#include <unordered_map>

namespace hss {

void sv_addmul(const Field& f, SparseVec& a, const Scalar& c, const SparseVec& b)
{
    if (c.is_zero() || b.empty())
        return;
    SparseVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(std::move(a[i++]));
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back({b[j].first, f.mul(c, b[j].second)});
            if (out.back().second.is_zero())
                out.pop_back();
            ++j;
        } else {
            Scalar s = f.addmul(a[i].second, c, b[j].second);
            if (!s.is_zero())
                out.push_back({a[i].first, std::move(s)});
            ++i;
            ++j;
        }
    }
    a = std::move(out);
}

SparseVec sv_scale(const Field& f, const Scalar& c, const SparseVec& a)
{
    SparseVec out;
    if (c.is_zero())
        return out;
    out.reserve(a.size());
    for (auto& [i, s] : a) {
        Scalar v = f.mul(c, s);
        if (!v.is_zero())
            out.push_back({i, std::move(v)});
    }
    return out;
}

bool sv_get(const SparseVec& a, std::uint32_t idx, Scalar& out)
{
    auto it = std::lower_bound(a.begin(), a.end(), idx,
                               [](const auto& e, std::uint32_t i) { return e.first < i; });
    if (it == a.end() || it->first != idx)
        return false;
    out = it->second;
    return true;
}

std::size_t EchelonSet::find_top(std::uint32_t top) const
{
    std::size_t lo = 0, hi = rows_.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (rows_[mid].top > top)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

bool EchelonSet::add(SparseVec v, int tag)
{
    v = reduce(v);
    if (v.empty())
        return false;
    Scalar top = v.back().second;
    if (!top.is_one())
        v = sv_scale(*field_, field_->inv(top), v);
    std::uint32_t t = v.back().first;
    std::size_t pos = find_top(t);
    rows_.insert(rows_.begin() + pos, Row{t, tag, std::move(v)});
    return true;
}

SparseVec EchelonSet::reduce(const SparseVec& v, std::vector<std::pair<int, Scalar>>* coeffs) const
{
    /* Top-chasing only: rows have distinct tops, so a vector lies in the
     * span iff repeatedly cancelling its top reaches zero. */
    SparseVec w = v;
    while (!w.empty()) {
        std::uint32_t top = w.back().first;
        std::size_t pos = find_top(top);
        if (pos >= rows_.size() || rows_[pos].top != top)
            break;
        Scalar c = w.back().second;
        if (coeffs && rows_[pos].tag >= 0)
            coeffs->push_back({rows_[pos].tag, c});
        sv_addmul(*field_, w, field_->neg(c), rows_[pos].vec);
    }
    return w;
}

FilteredReduction::FilteredReduction(const Field& f, std::vector<SparseVec> delta_cols,
                                     std::vector<int> source_levels, std::vector<int> target_levels,
                                     const Budget* budget)
    : field_(f), reduced_(std::move(delta_cols)), source_levels_(std::move(source_levels)),
      target_levels_(std::move(target_levels))
{
    check_internal(reduced_.size() == source_levels_.size(), "reduction: level count mismatch");
    for (std::size_t j = 1; j < source_levels_.size(); ++j)
        check_internal(source_levels_[j - 1] <= source_levels_[j],
                       "reduction: source levels not sorted");
    for (std::size_t j = 1; j < target_levels_.size(); ++j)
        check_internal(target_levels_[j - 1] <= target_levels_[j],
                       "reduction: target levels not sorted");

    transform_.resize(reduced_.size());
    pair_level_.assign(reduced_.size(), 0);
    std::unordered_map<std::uint32_t, std::size_t> owner_of_low;
    owner_of_low.reserve(reduced_.size());

    for (std::size_t j = 0; j < reduced_.size(); ++j) {
        if (budget && (j & 63) == 0)
            budget->check_time();
        transform_[j] = {{static_cast<std::uint32_t>(j), field_.one()}};
        SparseVec& r = reduced_[j];
        while (!r.empty()) {
            std::uint32_t low = r.back().first;
            auto it = owner_of_low.find(low);
            if (it == owner_of_low.end())
                break;
            std::size_t o = it->second;
            Scalar c = field_.neg(field_.div(r.back().second, reduced_[o].back().second));
            sv_addmul(field_, r, c, reduced_[o]);
            sv_addmul(field_, transform_[j], c, transform_[o]);
        }
        if (!r.empty()) {
            owner_of_low[r.back().first] = j;
            pair_level_[j] = target_levels_[r.back().first];
            ++rank_;
        }
    }
}

std::size_t FilteredReduction::staircase_rank(int a, int b) const
{
    std::size_t n = 0;
    for (std::size_t j = 0; j < reduced_.size(); ++j)
        if (!reduced_[j].empty() && source_levels_[j] <= a && pair_level_[j] > b)
            ++n;
    return n;
}

} // namespace hss
