#include "checks.hpp"

#include <chrono>
#include <sstream>

namespace hss {

const char* const kVersion = "1.0.0";

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string format_class_vec(const std::string& stem, int degree, const Vec& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        out += v[i].str() + "*" + stem + "[" + std::to_string(degree) + "]." + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

} // namespace

Analysis::Analysis(DGAlgebra algebra, DegreeWindow window, Budget budget)
    : a_(std::move(algebra)), validation_(validate(a_)), window_(window), budget_(budget)
{
    if (!validation_.valid)
        throw ValidationError("algebra is " + validation_.summary());
    if (!validation_.strict_simply_connected)
        throw ValidationError("input must be strict (degree 0 spanned by 1, degree 1 empty); "
                              "quasi-isomorphic replacement of non-strict models is out of scope");
}

std::shared_ptr<const HochschildComplex> Analysis::hh_complex()
{
    if (!hh_complex_)
        hh_complex_ = std::make_shared<HochschildComplex>(a_, regular_bimodule(a_), window_,
                                                          budget_);
    return hh_complex_;
}

const GradedAlgebraTable& Analysis::hh()
{
    if (!hh_)
        hh_.emplace(hh_complex(), GradedAlgebraTable::Kind::regular);
    return *hh_;
}

const GradedAlgebraTable& Analysis::ext()
{
    if (!ext_) {
        DegreeWindow wide(window_.lo - a_.top_degree(), window_.hi);
        auto cx = std::make_shared<HochschildComplex>(a_, trivial_bimodule(a_), wide, budget_);
        ext_.emplace(std::move(cx), GradedAlgebraTable::Kind::trivial);
    }
    return *ext_;
}

SpectralSequence& Analysis::ss()
{
    if (!ss_)
        ss_.emplace(hh_complex());
    return *ss_;
}

const ShearingResult& Analysis::shear()
{
    if (!shear_)
        shear_ = shearing(hh(), ext());
    return *shear_;
}

TensorE2& Analysis::tensor()
{
    if (!tensor_)
        tensor_.emplace(ss(), ext());
    return *tensor_;
}

NilpotencyResult Analysis::nilpotency()
{
    if (!nil_)
        nil_ = nilpotency_index(hh(), shear());
    return *nil_;
}

void check_cup_leibniz_sample(const HochschildComplex& cx, bool trivial_coefficients,
                              std::size_t max_pairs_per_degree)
{
    const Field& f = cx.field();
    const DegreeWindow& w = cx.window();
    auto cup_fn = [&](int n1, const SparseVec& a, int n2, const SparseVec& b) {
        return trivial_coefficients ? cup_trivial(cx, n1, a, n2, b)
                                    : cup_regular(cx, n1, a, n2, b);
    };
    for (int n1 = w.lo; n1 <= w.hi; ++n1) {
        if (cx.dim(n1) == 0)
            continue;
        for (int n2 = w.lo; n2 <= w.hi; ++n2) {
            if (cx.dim(n2) == 0 || !w.contains(n1 + n2) || !w.contains(n1 + 1) ||
                !w.contains(n2 + 1) || !w.contains(n1 + n2 + 1))
                continue;
            std::size_t pairs = 0;
            for (std::size_t i = 0; i < cx.dim(n1) && pairs < max_pairs_per_degree; ++i)
                for (std::size_t j = 0; j < cx.dim(n2) && pairs < max_pairs_per_degree;
                     j += (j == 0 ? 1 : 3), ++pairs) {
                    SparseVec fi{{static_cast<std::uint32_t>(i), f.one()}};
                    SparseVec gj{{static_cast<std::uint32_t>(j), f.one()}};
                    SparseVec lhs = cx.apply_delta(n1 + n2, cup_fn(n1, fi, n2, gj));
                    SparseVec rhs = cup_fn(n1 + 1, cx.apply_delta(n1, fi), n2, gj);
                    sv_addmul(f, rhs, f.make(pow_sign(n1)),
                              cup_fn(n1, fi, n2 + 1, cx.apply_delta(n2, gj)));
                    if (lhs != rhs)
                        throw InternalError("cup product violates the Leibniz rule at degrees (" +
                                            std::to_string(n1) + "," + std::to_string(n2) + ")");
                }
        }
    }
}

std::vector<CheckOutcome> run_check_battery(Analysis& an)
{
    std::vector<CheckOutcome> out;
    auto run = [&](const std::string& name, auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        CheckOutcome o;
        o.name = name;
        try {
            o.detail = fn();
            o.pass = true;
        } catch (const Error& e) {
            o.pass = false;
            o.detail = e.what();
        }
        o.seconds = seconds_since(t0);
        out.push_back(std::move(o));
    };

    run("complex soundness (delta^2 = 0, coefficients A)", [&] {
        an.hh_complex()->check_d_squared();
        return "exact over " + an.algebra().field_spec().str();
    });
    run("complex soundness (delta^2 = 0, coefficients k)", [&] {
        an.ext().complex().check_d_squared();
        return std::string("exact");
    });
    run("cup Leibniz sample (coefficients A)", [&] {
        check_cup_leibniz_sample(*an.hh_complex(), false);
        return std::string("exact");
    });
    run("cup Leibniz sample (coefficients k)", [&] {
        check_cup_leibniz_sample(an.ext().complex(), true);
        return std::string("exact");
    });
    run("page soundness (d^r . d^r = 0, all pages)", [&] {
        for (int r = 1; r <= an.ss().stable_page(); ++r)
            an.ss().check_d_squared(r);
        return "pages 1.." + std::to_string(an.ss().stable_page());
    });
    run("pages shrink", [&] {
        an.ss().check_pages_shrink();
        return std::string("ok");
    });
    run("table laws (HH associative, unital, graded-commutative)", [&] {
        an.hh().check_associative_unital();
        an.hh().check_graded_commutative();
        return std::string("ok");
    });
    run("table laws (Ext associative, unital)", [&] {
        an.ext().check_associative_unital();
        return std::string("ok");
    });
    run("E1 identification (filtered vs direct slice coefficients)", [&] {
        auto cells = e1_identification(an.ss());
        return std::to_string(cells.size()) + " nonzero cells agree";
    });
    run("E2 identification (filtered vs cohomology coefficients)", [&] {
        auto cells = e2_differential_check(an.ss());
        return std::to_string(cells.size()) + " nonzero cells agree";
    });
    run("E2 tensor identification (dims and isomorphism)", [&] {
        an.tensor().check_dimensions();
        return std::string("ok");
    });
    run("E2 product = tensor product with Koszul signs", [&] {
        an.tensor().check_products();
        return std::string("ok");
    });
    run("multiplicativity (Leibniz for d^r, all pages, all pairs)", [&] {
        for (int r = 1; r <= an.ss().stable_page(); ++r)
            an.ss().check_leibniz(r);
        return std::string("ok");
    });
    run("abutment (E^inf column sums and graded filtration = HH)", [&] {
        std::size_t cells = 0;
        for (int n = an.window().lo; n <= an.window().hi; ++n) {
            AbutmentReport rep = abutment_check(an.ss(), an.hh(), n);
            if (!rep.ok)
                throw InternalError("abutment mismatch at total degree " + std::to_string(n));
            cells += rep.einf.size();
        }
        return std::to_string(cells) + " E^inf cells matched";
    });
    run("column-0 permanent cycles = shearing image (subspaces)", [&] {
        auto reports = permanent_cycles_vs_shearing(an.ss(), an.tensor(), an.shear());
        for (auto& r : reports)
            if (!r.equal)
                throw InternalError("permanent-cycle subspace differs from the shearing image "
                                    "at degree " +
                                    std::to_string(r.degree));
        return std::to_string(reports.size()) + " degrees compared";
    });
    run("shearing is a ring map", [&] {
        check_shearing_ring_map(an.hh(), an.ext(), an.shear());
        return std::string("ok");
    });
    run("shearing image is graded-central in Ext", [&] {
        check_shearing_centrality(an.ext(), an.shear());
        return std::string("ok");
    });
    run("kernel nilpotency bound", [&] {
        NilpotencyResult nil = an.nilpotency();
        int d = an.validation().top_cohomology_degree;
        int bound = d / 2 + 1; /* degree-1 chains vanish, so the sharper bound applies */
        std::ostringstream os;
        os << "index " << nil.index << (nil.certified() ? "" : " (exceeds window)") << ", bound "
           << bound;
        if (nil.index > bound)
            throw InternalError("kernel nilpotency index " + std::to_string(nil.index) +
                                " exceeds the bound " + std::to_string(bound));
        return os.str();
    });
    if (an.algebra().field_spec().characteristic > 0) {
        run("Frobenius powers are permanent cycles", [&] {
            auto [deg, idx] = detect_central_class(an.ext());
            FrobeniusReport rep = frobenius_permanent_cycles(an.ss(), an.tensor(), deg, idx);
            if (!rep.all_cycles)
                throw InternalError("power of the class at degree " + std::to_string(deg) +
                                    " is not a cycle");
            std::ostringstream os;
            os << "class degree " << deg << ", pages";
            for (int r : rep.pages_checked)
                os << " " << r;
            if (rep.window_limited)
                os << " (window-limited)";
            return os.str();
        });
    }
    return out;
}

namespace {

void add_dims_section(Report& rep, const std::string& title, const std::map<int, std::size_t>& dims)
{
    auto& sec = rep.add_section(title);
    if (dims.empty()) {
        sec.entries.push_back({"(all degrees)", "0"});
        return;
    }
    for (auto& [n, d] : dims)
        sec.entries.push_back({"degree " + std::to_string(n), std::to_string(d)});
}

void add_table_products(Report& rep, const std::string& stem, const GradedAlgebraTable& table)
{
    auto& sec = rep.add_section(stem + " products");
    auto dims = table.dims();
    for (auto& [n1, d1] : dims)
        for (auto& [n2, d2] : dims) {
            if (!table.product_in_window(n1, n2))
                continue;
            for (std::size_t i = 0; i < d1; ++i)
                for (std::size_t j = 0; j < d2; ++j) {
                    Vec prod = table.product(n1, i, n2, j);
                    sec.entries.push_back(
                        {stem + "[" + std::to_string(n1) + "]." + std::to_string(i) + " * " +
                             stem + "[" + std::to_string(n2) + "]." + std::to_string(j),
                         format_class_vec(stem, n1 + n2, prod)});
                }
        }
}

std::vector<PageGrid> collect_pages(SpectralSequence& ss, int max_pages)
{
    std::vector<PageGrid> grids;
    int last = ss.stable_page();
    if (max_pages > 0)
        last = std::min(last, max_pages);
    for (int r = 1; r <= last; ++r) {
        PageGrid g;
        g.r = r;
        for (int n = ss.window().lo; n <= ss.window().hi; ++n)
            for (int p = ss.min_level(); p <= 0; ++p) {
                std::size_t d = ss.cell_dim(r, p, n);
                if (d)
                    g.cell_dims[{p, -n - p}] = d;
            }
        for (int n = ss.window().lo; n + 1 <= ss.window().hi; ++n)
            for (int p = ss.min_level(); p <= 0; ++p) {
                if (ss.cell_dim(r, p, n) == 0)
                    continue;
                if (!ss.differential(r, p, n).is_zero())
                    g.arrow_sources.push_back({p, -n - p});
            }
        grids.push_back(std::move(g));
    }
    return grids;
}

} // namespace

Report run_command(const DGAlgebra& a, const std::string& source_text, const std::string& command,
                   const RunOptions& opts)
{
    Report rep;
    rep.command = command;
    rep.version = kVersion;
    rep.digest = fnv1a_digest(source_text);
    rep.window = opts.window;
    if (opts.window < 1)
        throw WindowError("window must be >= 1");
    DegreeWindow window = DegreeWindow::symmetric(opts.window);
    Budget budget;
    if (opts.budget)
        budget.max_words = opts.budget;

    ValidationReport val = validate(a);
    if (command == "validate") {
        rep.ok = val.valid && val.strict_simply_connected;
        auto& sec = rep.add_section("validation");
        sec.entries.push_back({"valid", val.valid ? "true" : "false"});
        sec.entries.push_back({"strict coconnective", val.strict_coconnective ? "true" : "false"});
        sec.entries.push_back(
            {"strict simply connected", val.strict_simply_connected ? "true" : "false"});
        for (std::size_t i = 0; i < val.failures.size(); ++i)
            sec.entries.push_back({"failure " + std::to_string(i + 1), val.failures[i]});
        if (val.valid) {
            sec.entries.push_back({"bounded", "true"});
            sec.entries.push_back(
                {"top cohomology degree", std::to_string(val.top_cohomology_degree)});
            add_dims_section(rep, "cohomology of A", val.h_dims);
        }
        return rep;
    }

    Analysis an(a, window, budget);

    if (command == "homology") {
        add_dims_section(rep, "cohomology of A", an.validation().h_dims);
        auto& sec = rep.add_section("representatives");
        CochainComplex cc = a.cochain_complex();
        for (auto& [n, d] : an.validation().h_dims) {
            CohomologyPiece piece = cohomology(cc, n);
            const auto& ids = a.ids_of_degree(n);
            for (std::size_t i = 0; i < piece.dim(); ++i) {
                std::string s;
                for (std::size_t t = 0; t < ids.size(); ++t)
                    if (!piece.representatives()[i][t].is_zero()) {
                        if (!s.empty())
                            s += " + ";
                        s += piece.representatives()[i][t].str() + "*" + a.label(ids[t]);
                    }
                sec.entries.push_back(
                    {"H[" + std::to_string(n) + "]." + std::to_string(i), s.empty() ? "0" : s});
            }
        }
        return rep;
    }
    if (command == "hh") {
        add_dims_section(rep, "HH dims", an.hh().dims());
        add_table_products(rep, "hh", an.hh());
        return rep;
    }
    if (command == "ext") {
        add_dims_section(rep, "Ext dims", an.ext().dims());
        add_table_products(rep, "ext", an.ext());
        return rep;
    }
    if (command == "shear") {
        const ShearingResult& s = an.shear();
        auto& sec = rep.add_section("shearing map");
        for (auto& [n, m] : s.map) {
            sec.entries.push_back({"degree " + std::to_string(n),
                                   "HH dim " + std::to_string(m.cols()) + " -> Ext dim " +
                                       std::to_string(m.rows()) + ", image " +
                                       std::to_string(s.image.at(n).dim()) + ", kernel " +
                                       std::to_string(s.kernel.at(n).dim())});
        }
        check_shearing_ring_map(an.hh(), an.ext(), s);
        check_shearing_centrality(an.ext(), s);
        NilpotencyResult nil = an.nilpotency();
        auto& nsec = rep.add_section("kernel nilpotency");
        nsec.entries.push_back({"index", std::to_string(nil.index)});
        nsec.entries.push_back({"window certified", nil.certified() ? "true" : "false"});
        return rep;
    }
    if (command == "ss") {
        rep.pages = collect_pages(an.ss(), opts.pages);
        auto& sec = rep.add_section("spectral sequence");
        sec.entries.push_back({"stable page", std::to_string(an.ss().stable_page())});
        sec.entries.push_back({"collapsed at page", std::to_string(an.ss().collapse_page())});
        std::size_t abut_ok = 0;
        for (int n = window.lo; n <= window.hi; ++n) {
            AbutmentReport ab = abutment_check(an.ss(), an.hh(), n);
            if (!ab.ok)
                throw InternalError("abutment mismatch at total degree " + std::to_string(n));
            ++abut_ok;
        }
        sec.entries.push_back({"abutment degrees checked", std::to_string(abut_ok)});
        return rep;
    }
    if (command == "check-all") {
        auto checks = run_check_battery(an);
        auto& sec = rep.add_section("checks");
        for (auto& c : checks) {
            sec.entries.push_back({(c.pass ? std::string("PASS ") : std::string("FAIL ")) + c.name,
                                   c.detail});
            if (!c.pass)
                rep.ok = false;
        }
        add_dims_section(rep, "cohomology of A", an.validation().h_dims);
        add_dims_section(rep, "HH dims", an.hh().dims());
        add_dims_section(rep, "Ext dims", an.ext().dims());
        rep.pages = collect_pages(an.ss(), opts.pages);
        return rep;
    }
    throw Error("unknown command '" + command +
                "' (validate|homology|hh|ext|shear|ss|check-all)");
}

} // namespace hss
