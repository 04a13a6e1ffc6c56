#ifndef HSS_CHECKS_HPP
#define HSS_CHECKS_HPP

#include "fixtures.hpp"
#include "report.hpp"
#include "specseq.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hss {

extern const char* const kVersion;

/* Everything the commands compute over one validated algebra, built on
 * demand and shared between checks.  The Ext table is computed on a window
 * widened downwards by the top degree so the tensor identification can
 * reach every E2 cell. */
class Analysis {
public:
    Analysis(DGAlgebra algebra, DegreeWindow window, Budget budget);

    const DGAlgebra& algebra() const { return a_; }
    const ValidationReport& validation() const { return validation_; }
    const DegreeWindow& window() const { return window_; }
    const Budget& budget() const { return budget_; }

    std::shared_ptr<const HochschildComplex> hh_complex();
    const GradedAlgebraTable& hh();
    const GradedAlgebraTable& ext();
    SpectralSequence& ss();
    const ShearingResult& shear();
    TensorE2& tensor();
    NilpotencyResult nilpotency();

private:
    DGAlgebra a_;
    ValidationReport validation_;
    DegreeWindow window_;
    Budget budget_;
    std::shared_ptr<HochschildComplex> hh_complex_;
    std::optional<GradedAlgebraTable> hh_;
    std::optional<GradedAlgebraTable> ext_;
    std::optional<SpectralSequence> ss_;
    std::optional<ShearingResult> shear_;
    std::optional<TensorE2> tensor_;
    std::optional<NilpotencyResult> nil_;
};

struct CheckOutcome {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/* The full per-input battery: soundness, E1/E2 identifications, page
 * Leibniz, abutment, permanent cycles vs shearing, ring-map/centrality,
 * nilpotency bound, and (in characteristic p) the Frobenius-power
 * permanent-cycle pattern. */
std::vector<CheckOutcome> run_check_battery(Analysis& an);

/* Deterministic cochain-level Leibniz sample for the cup product. */
void check_cup_leibniz_sample(const HochschildComplex& cx, bool trivial_coefficients,
                              std::size_t max_pairs_per_degree = 6);

/* Command dispatch shared by the C API and the CLI. */
struct RunOptions {
    int window = 8;
    int pages = 0; /* 0 = to stabilization */
    std::size_t budget = 0; /* 0 = default */
};

Report run_command(const DGAlgebra& a, const std::string& source_text, const std::string& command,
                   const RunOptions& opts);

} // namespace hss

#endif
