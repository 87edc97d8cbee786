#ifndef GKFOL_GKCHECK_HPP
#define GKFOL_GKCHECK_HPP

#include <optional>
#include <string>

#include "gkfol/chart.hpp"
#include "gkfol/groebner.hpp"
#include "gkfol/w0space.hpp"

namespace gkfol {

enum class KupkaClass {
    Kupka,                    // Y_i(0) != 0
    IsolatedInvertible,       // Y_i(0) = 0, det DY_i(0) != 0
    IsolatedNilpotentJacobian,
    NonIsolatedOrUnknown
};

const char* to_string(KupkaClass c);

struct KupkaStatus {
    int chart = 0;
    std::vector<mpq_class> value_at_origin;
    QMat jacobian;
    KupkaClass classification = KupkaClass::NonIsolatedOrUnknown;
};

struct OriginEvidence {
    std::vector<Exp> staircase; // leading exponents of the reduced basis
    long quotient_dim = -1;
};

/// A replayable witness that the family contains a foliation whose relevant
/// chart singularities are all generalized-Kupka.
struct GKCertificate {
    ParamSet ps;
    std::vector<mpq_class> witness_coords; // over the canonical basis
    VectorField witness;
    OriginEvidence origin;
    std::vector<KupkaStatus> chart_status; // charts 2..n in order
    bool gamma_ok = false;
    std::optional<int> exceptional_chart;
};

struct IsolationResult {
    ZeroDimVerdict verdict = ZeroDimVerdict::Unknown;
    OriginEvidence evidence;
};

/// Zero-dimensionality of the component ideal of Y. The zero set is a cone
/// for the weighted scaling action, so zero-dimensional means the origin is
/// the only zero.
IsolationResult is_isolated_at_origin(const VectorField& y, const ParamSet& ps, long step_budget);

/// Transport to the chart, evaluate at the chart origin, classify.
KupkaStatus kupka_data(const ParamSet& ps, const VectorField& y, int chart, long step_budget);

/// True iff omega_Y has no divisorial singular component (constant gcd of its
/// coefficients) and keeps the full coefficient degree d+2.
bool gamma_check(const ParamSet& ps, const VectorField& y);

/// True iff the product formula gives an integer; false disproves condition
/// (a): no member of the family has an isolated singularity at the origin.
bool m1_integral(const std::vector<Int>& weights, Int lambda);

struct CertifySettings {
    int attempts = 16;
    Int bound = 5;
    uint64_t seed = 42;
    long step_budget = 400000;
};

struct CertifyOutcome {
    std::optional<GKCertificate> certificate;
    std::string diagnostic; // set when no certificate was produced
};

/// Witness search: embedded explicit fields for the matching shapes first,
/// then seeded random basis combinations with growing coefficient bound.
/// "No certificate" is inconclusive unless the diagnostic says otherwise.
/// Expects the chain-side representative of the family (the one whose
/// rotationals reach degree d+1); route through the flip first if needed.
CertifyOutcome certify_gk(const ParamSet& ps, const CertifySettings& cfg = {});

/// Recompute every verdict stored in the certificate from scratch.
bool replay_certificate(const GKCertificate& cert, long step_budget, std::string* why = nullptr);

} // namespace gkfol

#endif
