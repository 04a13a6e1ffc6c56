#include "oracle_bar.hpp"

#include "matrix.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace hss_oracle {

using namespace hss;

namespace {

using Word = std::vector<std::uint32_t>;

struct Basis {
    std::vector<std::pair<Word, std::uint32_t>> items; /* (word, coefficient id) */
    std::map<std::pair<Word, std::uint32_t>, std::size_t> index;

    void add(const Word& w, std::uint32_t m)
    {
        index[{w, m}] = items.size();
        items.push_back({w, m});
    }
    std::size_t find(const Word& w, std::uint32_t m) const
    {
        auto it = index.find({w, m});
        return it == index.end() ? SIZE_MAX : it->second;
    }
    std::size_t size() const { return items.size(); }
};

/* all words with the given shifted-degree sum and length <= max_len,
 * letters from the full basis (the unit has shifted degree -1) */
void gen_words(const DGAlgebra& a, int target, int max_len, Word& cur, int cur_sum,
               std::vector<Word>& out)
{
    int remaining = max_len - static_cast<int>(cur.size());
    int need = target - cur_sum;
    int max_letter = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        max_letter = std::max(max_letter, a.degree(i) - 1);
    if (need == 0)
        out.push_back(cur);
    if (remaining == 0)
        return;
    /* prune: the remaining letters can move the sum by [-remaining,
     * remaining * max_letter] */
    if (need < -remaining || need > remaining * max_letter)
        return;
    for (std::uint32_t b = 0; b < a.size(); ++b) {
        cur.push_back(b);
        gen_words(a, target, max_len, cur, cur_sum + a.degree(b) - 1, out);
        cur.pop_back();
    }
}

} // namespace

std::map<int, std::size_t> unnormalized_cohomology_dims(const DGAlgebra& a,
                                                        bool trivial_coefficients, int lo, int hi)
{
    const Field& f = a.field();
    /* coefficient module: basis ids and degrees, actions, differential */
    std::vector<int> mdeg;
    if (trivial_coefficients)
        mdeg = {0};
    else
        for (std::size_t i = 0; i < a.size(); ++i)
            mdeg.push_back(a.degree(i));
    int top = *std::max_element(mdeg.begin(), mdeg.end());
    auto coeff_d = [&](std::uint32_t m) -> SpElt {
        return trivial_coefficients ? SpElt{} : a.d(m);
    };
    auto act_left = [&](std::uint32_t b, std::uint32_t m) -> SpElt {
        if (trivial_coefficients)
            return b == a.unit() ? SpElt{{0, f.one()}} : SpElt{};
        return a.product(b, m);
    };
    auto act_right = [&](std::uint32_t m, std::uint32_t b) -> SpElt {
        if (trivial_coefficients)
            return b == a.unit() ? SpElt{{0, f.one()}} : SpElt{};
        return a.product(m, b);
    };

    /* words of length >= T only matter below degree lo */
    const int T = top - lo + 3;

    std::map<int, Basis> pieces;
    for (int n = lo - 1; n <= hi + 1; ++n) {
        Basis& basis = pieces[n];
        for (std::uint32_t m = 0; m < mdeg.size(); ++m) {
            int shifted = mdeg[m] - n;
            std::vector<Word> words;
            Word cur;
            gen_words(a, shifted, T - 1, cur, 0, words);
            std::sort(words.begin(), words.end());
            for (auto& w : words)
                basis.add(w, m);
        }
    }

    std::map<int, Matrix> deltas;
    for (int n = lo - 1; n <= hi; ++n) {
        const Basis& src = pieces[n];
        const Basis& tgt = pieces[n + 1];
        Matrix d(a.field_spec(), tgt.size(), src.size());
        for (std::size_t col = 0; col < src.size(); ++col) {
            const auto& [w, m] = src.items[col];
            const int t = static_cast<int>(w.size());
            auto put = [&](const Word& v, std::uint32_t m2, const Scalar& c) {
                if (static_cast<int>(v.size()) >= T)
                    return; /* quotient by long words */
                std::size_t row = tgt.find(v, m2);
                if (row == SIZE_MAX)
                    return;
                d.at(row, col) = f.add(d.at(row, col), c);
            };

            for (auto& [m2, c] : coeff_d(m))
                put(w, static_cast<std::uint32_t>(m2), c);

            int prefix = 0;
            for (int j = 0; j < t; ++j) {
                for (std::uint32_t b = 0; b < a.size(); ++b)
                    for (auto& [tid, kappa] : a.d(b))
                        if (tid == w[static_cast<std::size_t>(j)]) {
                            Word v = w;
                            v[static_cast<std::size_t>(j)] = b;
                            Scalar c = f.mul(f.make(-pow_sign(n + t + prefix)), kappa);
                            put(v, m, c);
                        }
                prefix += a.degree(w[static_cast<std::size_t>(j)]);
            }

            for (std::uint32_t b = 0; b < a.size(); ++b) {
                for (auto& [m2, c] : act_left(b, m)) {
                    Word v;
                    v.push_back(b);
                    v.insert(v.end(), w.begin(), w.end());
                    Scalar sign = f.make(-pow_sign(static_cast<long>(n) * (a.degree(b) + 1)));
                    put(v, static_cast<std::uint32_t>(m2), f.mul(sign, c));
                }
                for (auto& [m2, c] : act_right(m, b)) {
                    Word v = w;
                    v.push_back(b);
                    Scalar sign = f.make(-pow_sign(n + t + 1));
                    put(v, static_cast<std::uint32_t>(m2), f.mul(sign, c));
                }
            }

            for (int j = 0; j < t; ++j)
                for (std::uint32_t b1 = 0; b1 < a.size(); ++b1)
                    for (std::uint32_t b2 = 0; b2 < a.size(); ++b2)
                        for (auto& [tid, kappa] : a.product(b1, b2))
                            if (tid == w[static_cast<std::size_t>(j)]) {
                                Word v;
                                v.reserve(w.size() + 1);
                                v.insert(v.end(), w.begin(), w.begin() + j);
                                v.push_back(b1);
                                v.push_back(b2);
                                v.insert(v.end(), w.begin() + j + 1, w.end());
                                Scalar c = f.mul(f.make(-pow_sign(n + j + 1)), kappa);
                                put(v, m, c);
                            }
        }
        deltas.emplace(n, std::move(d));
    }

    /* the truncated complex must still be a complex */
    for (int n = lo - 1; n + 1 <= hi; ++n)
        check_internal(deltas.at(n + 1).mul(deltas.at(n)).is_zero(),
                       "oracle: delta.delta != 0 at degree " + std::to_string(n));

    std::map<int, std::size_t> dims;
    for (int n = lo; n <= hi; ++n) {
        std::size_t h = pieces[n].size() - rank(deltas.at(n)) - rank(deltas.at(n - 1));
        if (h)
            dims[n] = h;
    }
    return dims;
}

} // namespace hss_oracle
