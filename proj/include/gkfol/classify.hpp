#ifndef GKFOL_CLASSIFY_HPP
#define GKFOL_CLASSIFY_HPP

#include <map>
#include <string>

#include "gkfol/gkcheck.hpp"

namespace gkfol {

/// One admissible chain of arithmetic conditions on (p, lambda, d). The b1
/// shape is c_11..c_ii then c_{i+1,i+2}..c_{n-1,n} with every tau_2..tau_n
/// nonzero; the b2 shape replaces the block around index i by the equality
/// lambda = p_i (d-1) and drops tau_i from the nonzero list.
struct ConditionChain {
    enum Kind { B1, B2 };
    Kind kind = B1;
    int i = 0;
    std::vector<ConditionId> conditions;
    bool has_equality = false;
    int equality_index = 0; // lambda = p_{equality_index} (d-1)
    std::vector<int> nonzero_taus;

    std::string name() const;
};

std::vector<ConditionChain> condition_chains(int n);

/// Arithmetic part only: the c-conditions, the b2 equality and the tau
/// non-vanishing, on this representative (the flip side is not consulted).
bool chain_satisfied(const ParamSet& ps, const ConditionChain& chain);

enum class CaseTag { B1a, B1b, B1c, B1d, B2a, B2b, B2c, B2d, Exceptional, ChainSearch };

const char* to_string(CaseTag t);

/// One classified family: weights, lambda, d, where it came from in the case
/// analysis, its dimension, and (optionally) a replayable certificate.
struct ComponentDescriptor {
    int n = 3;
    Int d = 2;
    WeightVector weights;
    Int lambda = 0;
    CaseTag tag = CaseTag::ChainSearch;
    std::map<std::string, Int> case_params;
    Int dimension = 0;
    std::optional<GKCertificate> certificate;
    bool certified = false;
    std::string note;                        // set when certification failed
    std::string tangent_sheaf = "O ⊕ O(1-d)";
};

/// Of the pair {(P, lambda), (P_bar, lambda_1)} prefer the one with positive
/// lambda; break ties by lexicographically smaller (weights, lambda).
std::pair<WeightVector, Int> canonical_rep(const WeightVector& w, Int lambda, Int d);
ComponentDescriptor canonical_form(const ComponentDescriptor& desc);

/// Closed-form case instantiation for n = 3 or n = 4, d >= 2. Descriptors are
/// deduplicated up to the flip and sorted by (weights, lambda). With certify
/// set, failed certifications are flagged in `note`, never dropped.
std::vector<ComponentDescriptor> enumerate_components(int n, Int d, bool certify,
                                                      const CertifySettings& cfg = {});

/// The family with weights r_i = d^{i-1} + ... + d^{n-1} and lambda = d^n,
/// defined for every n >= 3, d >= 1; the only chain family when d = 1.
ComponentDescriptor exceptional_family(int n, Int d, bool certify = true,
                                       const CertifySettings& cfg = {});

/// Solutions b >= 0 of sum b_j r_j = r_k + lambda with sum b_j <= d over the
/// exceptional weights; empty for k = 1, a single vector otherwise.
std::vector<Exp> claim46_solutions(int n, Int d, int k);

struct SearchBounds {
    Int p1_max = 40;
};

/// Chain-driven parametric search for n >= 5 (works for any n >= 3): solve
/// each chain linearly, filter by divisibility, coprimality, decrease and
/// tau conditions, then certify. Only certified families are returned.
std::vector<ComponentDescriptor> search_general_n(int n, Int d, const SearchBounds& bounds,
                                                  const CertifySettings& cfg = {});

/// Exhaustive sweep over coprime decreasing triples with p_1 <= p1_max for
/// fixed d: every chain-satisfying (p, lambda) on either side of the flip is
/// certified; returns the certified families, deduplicated canonically.
std::vector<ComponentDescriptor> brute_force_components_n3(Int d, Int p1_max,
                                                           const CertifySettings& cfg = {});

struct TableRow {
    std::vector<Int> weights;
    Int lambda = 0;
};

struct TableReport {
    std::string table_id;
    int expected = 0;
    int matched = 0;
    std::vector<std::string> missing; // expected but not produced
    std::vector<std::string> extra;   // produced but not expected
    bool pass = false;
};

/// Compare the enumeration against a built-in reference table, canonically on
/// both sides. Known ids: cor48_d2, cor48_d3, cor411, cor410.
TableReport verify_table(const std::string& table_id, bool certify = false,
                         const CertifySettings& cfg = {});

/// Built-in reference tables in the plain-text row format.
const std::string& builtin_table_text(const std::string& table_id);
std::vector<TableRow> parse_table_text(const std::string& text);
std::vector<TableRow> cor410_rows(Int d);
std::vector<std::string> builtin_table_ids();

std::string format_tuple(const std::vector<Int>& weights, Int lambda);

} // namespace gkfol

#endif
