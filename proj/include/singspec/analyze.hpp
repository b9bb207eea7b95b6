#pragma once

#include <optional>
#include <utility>

#include "singspec/invariants.hpp"
#include "singspec/singularity.hpp"
#include "singspec/spectrum.hpp"

namespace singspec {

// One singularity, fully processed. For smooth points (mu = 0) the Milnor
// data and weight system are absent and the spectrum is empty.
struct Analysis {
    std::optional<WeightSystem> ws;
    std::optional<MilnorData> milnor;
    Spectrum spectrum;
    InvariantReport report;
    std::vector<PropertyOutcome> checks;
};

inline Analysis smooth_analysis(long long n) {
    Analysis a{std::nullopt, std::nullopt,
               Spectrum::from_multiset({}, n, 0), InvariantReport{}, {}};
    a.report = classify(a.spectrum, 0, n);
    a.checks = property_suite(a.report, a.spectrum);
    return a;
}

inline Analysis analyze(const Polynomial& f, const WeightSystem& ws) {
    Analysis a{ws, std::nullopt, Spectrum::from_multiset({}, ws.n(), 0), InvariantReport{}, {}};
    a.milnor = milnor_data(f, ws);
    a.spectrum = compute_spectrum(*a.milnor);
    a.report = classify(a.spectrum, a.milnor->mu, ws.n());
    a.checks = property_suite(a.report, a.spectrum);
    return a;
}

// Infers the grading when none is given. Inputs that turn out to define a
// smooth point (some inferred weight >= 1) come back as a mu = 0 report.
inline Analysis analyze(const Polynomial& f) {
    std::optional<WeightSystem> ws;
    try {
        ws = infer_weights(f);
    } catch (const SmoothPoint&) {
        return smooth_analysis(static_cast<long long>(f.variable_count()) - 1);
    }
    return analyze(f, *ws);
}

}  // namespace singspec
