#include "gkfol/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gkfol {

std::string ConditionChain::name() const {
    std::ostringstream os;
    os << (kind == B1 ? "b1" : "b2") << " i=" << i;
    return os.str();
}

std::vector<ConditionChain> condition_chains(int n) {
    if (n < 3) throw InvalidInput("chains need n >= 3");
    std::vector<ConditionChain> out;
    for (int i = 0; i <= (n - 1) / 2; ++i) {
        ConditionChain c;
        c.kind = ConditionChain::B1;
        c.i = i;
        for (int j = 1; j <= i; ++j) c.conditions.push_back(ConditionId{j, j});
        for (int j = i + 1; j <= n - 1; ++j) c.conditions.push_back(ConditionId{j, j + 1});
        for (int j = 2; j <= n; ++j) c.nonzero_taus.push_back(j);
        out.push_back(std::move(c));
    }
    for (int i = 2; i <= (n + 2) / 2; ++i) {
        ConditionChain c;
        c.kind = ConditionChain::B2;
        c.i = i;
        for (int j = 1; j <= i - 2; ++j) c.conditions.push_back(ConditionId{j, j});
        c.has_equality = true;
        c.equality_index = i;
        for (int j = i; j <= n - 1; ++j) c.conditions.push_back(ConditionId{j, j + 1});
        for (int j = 2; j <= n; ++j)
            if (j != i) c.nonzero_taus.push_back(j);
        out.push_back(std::move(c));
    }
    return out;
}

bool chain_satisfied(const ParamSet& ps, const ConditionChain& chain) {
    for (const auto& c : chain.conditions)
        if (!check_condition(ps, c)) return false;
    if (chain.has_equality && ps.lambda != ps.p(chain.equality_index) * (ps.d - 1)) return false;
    for (int j : chain.nonzero_taus)
        if (ps.tauAt(j) == 0) return false;
    return true;
}

const char* to_string(CaseTag t) {
    switch (t) {
        case CaseTag::B1a: return "B1a";
        case CaseTag::B1b: return "B1b";
        case CaseTag::B1c: return "B1c";
        case CaseTag::B1d: return "B1d";
        case CaseTag::B2a: return "B2a";
        case CaseTag::B2b: return "B2b";
        case CaseTag::B2c: return "B2c";
        case CaseTag::B2d: return "B2d";
        case CaseTag::Exceptional: return "Exceptional";
        case CaseTag::ChainSearch: return "ChainSearch";
    }
    return "?";
}

std::pair<WeightVector, Int> canonical_rep(const WeightVector& w, Int lambda, Int d) {
    const ParamSet ps = derive_params(w, lambda, d);
    const WeightVector bar{ps.p_bar};
    const Int lambda1 = ps.lam(1);
    const bool here_pos = lambda > 0, bar_pos = lambda1 > 0;
    if (here_pos != bar_pos) return here_pos ? std::make_pair(w, lambda) : std::make_pair(bar, lambda1);
    if (w.p != bar.p) return w.p < bar.p ? std::make_pair(w, lambda) : std::make_pair(bar, lambda1);
    return lambda <= lambda1 ? std::make_pair(w, lambda) : std::make_pair(bar, lambda1);
}

ComponentDescriptor canonical_form(const ComponentDescriptor& desc) {
    auto [w, lambda] = canonical_rep(desc.weights, desc.lambda, desc.d);
    if (w == desc.weights && lambda == desc.lambda) return desc;
    ComponentDescriptor out = desc;
    out.weights = w;
    out.lambda = lambda;
    out.certificate.reset(); // the certificate belongs to the other representative
    out.certified = desc.certified;
    return out;
}

namespace {

std::vector<Int> divisors(Int v) {
    std::vector<Int> out;
    for (Int k = 1; k * k <= v; ++k)
        if (v % k == 0) {
            out.push_back(k);
            if (k != v / k) out.push_back(v / k);
        }
    std::sort(out.begin(), out.end());
    return out;
}

struct Candidate {
    std::vector<Int> weights;
    Int lambda;
    CaseTag tag;
    std::map<std::string, Int> params;
};

bool valid_tuple(const std::vector<Int>& w, Int lambda) {
    if (lambda <= 0) return false;
    Int g = 0;
    for (size_t k = 0; k < w.size(); ++k) {
        if (w[k] < 1) return false;
        if (k + 1 < w.size() && w[k] <= w[k + 1]) return false;
        g = std::gcd(g, w[k]);
    }
    return g == 1;
}

std::vector<Candidate> cases_n3(Int d) {
    std::vector<Candidate> out;
    // (a) q = m(d+1), r = md, lambda = m d^2; p > q coprime to m,
    //     p a divisor of d^2 or of d^2+d+1.
    {
        std::set<Int> ps_set;
        for (Int p : divisors(d * d)) ps_set.insert(p);
        for (Int p : divisors(d * d + d + 1)) ps_set.insert(p);
        for (Int p : ps_set)
            for (Int m = 1; m * (d + 1) < p; ++m) {
                if (std::gcd(p, m) != 1) continue;
                out.push_back({{p, m * (d + 1), m * d}, m * d * d, CaseTag::B1a,
                               {{"p", p}, {"m", m}}});
            }
    }
    // (b) p = d > q = r+1 > r, lambda = d r.
    for (Int r = 1; r + 1 < d; ++r)
        out.push_back({{d, r + 1, r}, d * r, CaseTag::B1b, {{"r", r}}});
    // (c) p = kd, q = md+k, r = md, lambda = m d^2; k | d+1, gcd(k, m) = 1.
    for (Int k : divisors(d + 1))
        for (Int m = 1; m * d < k * (d - 1); ++m) {
            if (std::gcd(k, m) != 1) continue;
            out.push_back({{k * d, m * d + k, m * d}, m * d * d, CaseTag::B1c,
                           {{"k", k}, {"m", m}}});
        }
    // (d) q = md, r = m(d-1), lambda = m(d^2-d); p > q coprime to m,
    //     p a divisor of d^2-d, d^2 or d^2-1.
    {
        std::set<Int> ps_set;
        for (Int p : divisors(d * d - d)) ps_set.insert(p);
        for (Int p : divisors(d * d)) ps_set.insert(p);
        for (Int p : divisors(d * d - 1)) ps_set.insert(p);
        for (Int p : ps_set)
            for (Int m = 1; m * d < p; ++m) {
                if (std::gcd(p, m) != 1) continue;
                out.push_back({{p, m * d, m * (d - 1)}, m * (d * d - d), CaseTag::B1d,
                               {{"p", p}, {"m", m}}});
            }
    }
    return out;
}

std::vector<Candidate> cases_n4(Int d) {
    std::vector<Candidate> out;
    const Int d2 = d * d, d3 = d * d * d;
    // (a) q = m(d^2+d+1), r = m(d^2+d), s = m d^2, lambda = m d^3.
    {
        std::set<Int> ps_set;
        for (Int p : divisors(d3)) ps_set.insert(p);
        for (Int p : divisors(d3 + d2 + d + 1)) ps_set.insert(p);
        for (Int p : ps_set)
            for (Int m = 1; m * (d2 + d + 1) < p; ++m) {
                if (std::gcd(p, m) != 1) continue;
                out.push_back({{p, m * (d2 + d + 1), m * (d2 + d), m * d2}, m * d3,
                               CaseTag::B2a, {{"p", p}, {"m", m}}});
            }
    }
    // (b) p = kd, q = md+k, r = m(d+1), s = md, lambda = m d^2, with one of:
    //     k | d;  kd | m(d^2+d)+k;  d | m and k | d^2+d+1;
    //     k | d+1 and gcd(m(d+1)/k, d) = 1.
    {
        std::set<Int> ks;
        for (Int k : divisors(d)) ks.insert(k);
        for (Int j : divisors(d + 1)) ks.insert(j * d);
        for (Int k : divisors(d2 + d + 1)) ks.insert(k);
        for (Int k : divisors(d + 1)) ks.insert(k);
        for (Int k : ks)
            for (Int m = 1; m * d < k * (d - 1); ++m) {
                if (std::gcd(k, m) != 1) continue;
                const bool c1 = d % k == 0;
                const bool c2 = (m * (d2 + d) + k) % (k * d) == 0;
                const bool c3 = m % d == 0 && (d2 + d + 1) % k == 0;
                const bool c4 = (d + 1) % k == 0 && std::gcd(m * (d + 1) / k, d) == 1;
                if (!(c1 || c2 || c3 || c4)) continue;
                out.push_back({{k * d, m * d + k, m * (d + 1), m * d}, m * d2, CaseTag::B2b,
                               {{"k", k}, {"m", m}}});
            }
    }
    // (c) q = m d^2, r = m(d^2-1), s = m(d^2-d), lambda = m(d^3-d^2).
    {
        std::set<Int> ps_set;
        for (Int p : divisors(d3 - d2)) ps_set.insert(p);
        for (Int p : divisors(d3)) ps_set.insert(p);
        for (Int p : divisors(d3 - 1)) ps_set.insert(p);
        for (Int p : ps_set)
            for (Int m = 1; m * d2 < p; ++m) {
                if (std::gcd(p, m) != 1) continue;
                out.push_back({{p, m * d2, m * (d2 - 1), m * (d2 - d)}, m * (d3 - d2),
                               CaseTag::B2c, {{"p", p}, {"m", m}}});
            }
    }
    // (d) p = kd, q = m(d-1)+k, r = md, s = m(d-1), lambda = m(d^2-d), with
    //     one of: k | d-1;  k | d;  d | m and k | d^2-1.
    {
        std::set<Int> ks;
        for (Int k : divisors(d - 1)) ks.insert(k);
        for (Int k : divisors(d)) ks.insert(k);
        for (Int k : divisors(d2 - 1)) ks.insert(k);
        for (Int k : ks)
            for (Int m = 1; m < k; ++m) {
                if (std::gcd(k, m) != 1) continue;
                const bool c1 = (d - 1) % k == 0;
                const bool c2 = d % k == 0;
                const bool c3 = m % d == 0 && (d2 - 1) % k == 0;
                if (!(c1 || c2 || c3)) continue;
                out.push_back({{k * d, m * (d - 1) + k, m * d, m * (d - 1)}, m * (d2 - d),
                               CaseTag::B2d, {{"k", k}, {"m", m}}});
            }
    }
    return out;
}

std::string canonical_key(const WeightVector& w, Int lambda, Int d) {
    auto [cw, cl] = canonical_rep(w, lambda, d);
    std::ostringstream os;
    for (Int v : cw.p) os << v << ' ';
    os << '|' << cl;
    return os.str();
}

ComponentDescriptor make_descriptor(int n, Int d, const Candidate& c) {
    ComponentDescriptor desc;
    desc.n = n;
    desc.d = d;
    desc.weights = WeightVector{c.weights};
    desc.lambda = c.lambda;
    desc.tag = c.tag;
    desc.case_params = c.params;
    desc.dimension = dim_component(derive_params(desc.weights, desc.lambda, d));
    return desc;
}

void attach_certificate(ComponentDescriptor& desc, const CertifySettings& cfg) {
    const ParamSet ps = derive_params(desc.weights, desc.lambda, desc.d);
    CertifyOutcome outcome = certify_gk(ps, cfg);
    if (outcome.certificate) {
        desc.certificate = std::move(outcome.certificate);
        desc.certified = true;
    } else {
        desc.certified = false;
        desc.note = "certification failed: " + outcome.diagnostic;
    }
}

} // namespace

std::vector<ComponentDescriptor> enumerate_components(int n, Int d, bool certify,
                                                      const CertifySettings& cfg) {
    if (n != 3 && n != 4) throw UnsupportedN();
    if (d < 2) throw InvalidInput("closed-form enumeration needs d >= 2");
    std::vector<Candidate> cands = (n == 3) ? cases_n3(d) : cases_n4(d);

    // Merge identical tuples (divisor families overlap), then dedupe up to
    // the flip, keeping the lexicographically smallest representative.
    std::map<std::pair<std::vector<Int>, Int>, Candidate> by_tuple;
    for (auto& c : cands) {
        if (!valid_tuple(c.weights, c.lambda)) continue;
        by_tuple.emplace(std::make_pair(c.weights, c.lambda), c);
    }
    std::map<std::string, Candidate> by_component;
    for (auto& [key, c] : by_tuple) {
        const std::string ck = canonical_key(WeightVector{c.weights}, c.lambda, d);
        auto it = by_component.find(ck);
        if (it == by_component.end())
            by_component.emplace(ck, c);
        else if (std::make_pair(c.weights, c.lambda) <
                 std::make_pair(it->second.weights, it->second.lambda))
            it->second = c;
    }

    std::vector<ComponentDescriptor> out;
    for (auto& [ck, c] : by_component) out.push_back(make_descriptor(n, d, c));
    std::sort(out.begin(), out.end(), [](const ComponentDescriptor& a, const ComponentDescriptor& b) {
        return std::make_pair(a.weights.p, a.lambda) < std::make_pair(b.weights.p, b.lambda);
    });
    if (certify)
        for (auto& desc : out) attach_certificate(desc, cfg);
    return out;
}

ComponentDescriptor exceptional_family(int n, Int d, bool certify, const CertifySettings& cfg) {
    if (n < 3 || d < 1) throw InvalidInput("exceptional family needs n >= 3, d >= 1");
    std::vector<Int> r(static_cast<size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        Int acc = 0, pw = 1;
        for (int j = 0; j <= n - 1; ++j) {
            if (j >= i - 1) acc += pw;
            pw *= d;
        }
        r[static_cast<size_t>(i) - 1] = acc;
    }
    Int lambda = r[static_cast<size_t>(n) - 1] * d; // = d^n
    ComponentDescriptor desc;
    desc.n = n;
    desc.d = d;
    desc.weights = WeightVector{r};
    desc.lambda = lambda;
    desc.tag = CaseTag::Exceptional;
    desc.dimension = (d >= 2) ? Int(n) * n + 2 * n - 1 : Int(n) * n + 2 * n - 2;
    if (certify) attach_certificate(desc, cfg);
    return desc;
}

std::vector<Exp> claim46_solutions(int n, Int d, int k) {
    if (k < 1 || k > n) throw InvalidInput("claim46_solutions: k out of range");
    ComponentDescriptor e = exceptional_family(n, d, false);
    return weighted_monomials(e.weights, e.weights.at(k) + e.lambda, static_cast<int>(d));
}

namespace {

// Solve one chain parametrically: the lower block is fixed by the scale m,
// the upper block rides on the free weight s. Returns all integer tuples
// with p_1 <= p1_max that satisfy the full chain.
std::vector<std::pair<std::vector<Int>, Int>> chain_solutions(int n, Int d,
                                                              const ConditionChain& chain,
                                                              Int p1_max) {
    std::vector<std::pair<std::vector<Int>, Int>> out;
    if (chain.kind == ConditionChain::B2 && d == 1) return out; // lambda = 0 clashes with lambda = p_n d
    auto powsum = [&](int j) { // 1 + d + ... + d^j
        Int acc = 0, pw = 1;
        for (int t = 0; t <= j; ++t) {
            acc += pw;
            pw *= d;
        }
        return acc;
    };
    auto dpow = [&](int e) {
        Int pw = 1;
        for (int t = 0; t < e; ++t) pw *= d;
        return pw;
    };

    const int i = chain.i;
    const int free_idx = (chain.kind == ConditionChain::B1) ? i + 1 : i - 1;
    for (Int m = 1;; ++m) {
        std::vector<Int> p(static_cast<size_t>(n), 0);
        Int lambda = 0;
        if (chain.kind == ConditionChain::B1) {
            lambda = m * dpow(n - i - 1);
            for (int j = 0; j <= n - i - 2; ++j)
                p[static_cast<size_t>(n - j) - 1] = m * dpow(n - i - 2 - j) * powsum(j);
        } else {
            lambda = m * (d - 1) * dpow(n - i);
            p[static_cast<size_t>(i) - 1] = m * dpow(n - i);
            for (int j = 0; j <= n - i - 1; ++j)
                p[static_cast<size_t>(n - j) - 1] = m * (d - 1) * dpow(n - i - 1 - j) * powsum(j);
        }
        // Largest fixed weight must still leave room for the free block.
        Int fixed_top = 0;
        for (int k = free_idx + 1; k <= n; ++k)
            fixed_top = std::max(fixed_top, p[static_cast<size_t>(k) - 1]);
        if (fixed_top >= p1_max) break;

        for (Int s = fixed_top + 1;; ++s) {
            p[static_cast<size_t>(free_idx) - 1] = s;
            // Ascend through the c_jj block.
            bool ok = true;
            for (int k = free_idx - 1; k >= 1; --k) {
                p[static_cast<size_t>(k) - 1] = p[static_cast<size_t>(k)] * d - lambda;
                if (p[static_cast<size_t>(k) - 1] <= p[static_cast<size_t>(k)]) ok = false;
            }
            if (p[0] > p1_max) break;
            if (!ok) continue;
            std::vector<Int> w = p;
            bool dec = true;
            Int g = 0;
            for (size_t t = 0; t < w.size(); ++t) {
                if (w[t] < 1 || (t + 1 < w.size() && w[t] <= w[t + 1])) dec = false;
                g = std::gcd(g, w[t]);
            }
            if (!dec || g != 1) continue;
            const ParamSet ps = derive_params(WeightVector{w}, lambda, d);
            if (!chain_satisfied(ps, chain)) continue;
            out.emplace_back(w, lambda);
        }
    }
    return out;
}

} // namespace

std::vector<ComponentDescriptor> search_general_n(int n, Int d, const SearchBounds& bounds,
                                                  const CertifySettings& cfg) {
    if (n < 3) throw InvalidInput("search needs n >= 3");
    std::map<std::string, ComponentDescriptor> found;
    for (const auto& chain : condition_chains(n)) {
        for (const auto& [w, lambda] : chain_solutions(n, d, chain, bounds.p1_max)) {
            const ParamSet ps = derive_params(WeightVector{w}, lambda, d);
            // Some x_1^m d/dx_k must be admissible, or the axis stays singular.
            bool div_ok = false;
            for (int k = 1; k <= n && !div_ok; ++k)
                if ((ps.p(k) + lambda) % ps.p(1) == 0 && (ps.p(k) + lambda) / ps.p(1) >= 1)
                    div_ok = true;
            if (!div_ok) continue;
            const std::string key = canonical_key(ps.weights, lambda, d);
            if (found.count(key)) continue;
            CertifyOutcome outcome = certify_gk(ps, cfg);
            if (!outcome.certificate) continue;
            ComponentDescriptor desc;
            desc.n = n;
            desc.d = d;
            desc.weights = ps.weights;
            desc.lambda = lambda;
            desc.tag = CaseTag::ChainSearch;
            desc.case_params["chain_i"] = chain.i;
            desc.case_params["chain_kind"] = chain.kind == ConditionChain::B1 ? 1 : 2;
            desc.dimension = dim_component(ps);
            desc.certificate = std::move(outcome.certificate);
            desc.certified = true;
            found.emplace(key, std::move(desc));
        }
    }
    std::vector<ComponentDescriptor> out;
    for (auto& [k, desc] : found) out.push_back(std::move(desc));
    std::sort(out.begin(), out.end(), [](const ComponentDescriptor& a, const ComponentDescriptor& b) {
        return std::make_pair(a.weights.p, a.lambda) < std::make_pair(b.weights.p, b.lambda);
    });
    return out;
}

std::vector<ComponentDescriptor> brute_force_components_n3(Int d, Int p1_max,
                                                           const CertifySettings& cfg) {
    const auto chains = condition_chains(3);
    std::set<std::pair<std::vector<Int>, Int>> candidates;
    for (Int p1 = 3; p1 <= p1_max; ++p1)
        for (Int p2 = 2; p2 < p1; ++p2)
            for (Int p3 = 1; p3 < p2; ++p3) {
                if (std::gcd(std::gcd(p1, p2), p3) != 1) continue;
                const WeightVector w{{p1, p2, p3}};
                for (Int lambda = 1; lambda <= p1 * d; ++lambda) {
                    const ParamSet ps = derive_params(w, lambda, d);
                    for (const auto& chain : chains)
                        if (chain_satisfied(ps, chain)) {
                            candidates.insert({w.p, lambda});
                            break;
                        }
                }
            }
    std::map<std::string, ComponentDescriptor> found;
    for (const auto& [w, lambda] : candidates) {
        const std::string key = canonical_key(WeightVector{w}, lambda, d);
        if (found.count(key)) continue;
        const ParamSet ps = derive_params(WeightVector{w}, lambda, d);
        CertifyOutcome outcome = certify_gk(ps, cfg);
        if (!outcome.certificate) continue;
        ComponentDescriptor desc;
        desc.n = 3;
        desc.d = d;
        desc.weights = ps.weights;
        desc.lambda = lambda;
        desc.tag = CaseTag::ChainSearch;
        desc.dimension = dim_component(ps);
        desc.certificate = std::move(outcome.certificate);
        desc.certified = true;
        found.emplace(key, std::move(desc));
    }
    std::vector<ComponentDescriptor> out;
    for (auto& [k, desc] : found) out.push_back(std::move(desc));
    std::sort(out.begin(), out.end(), [](const ComponentDescriptor& a, const ComponentDescriptor& b) {
        return std::make_pair(a.weights.p, a.lambda) < std::make_pair(b.weights.p, b.lambda);
    });
    return out;
}

std::string format_tuple(const std::vector<Int>& weights, Int lambda) {
    std::ostringstream os;
    for (Int v : weights) os << v << ' ';
    os << lambda;
    return os.str();
}

std::vector<TableRow> parse_table_text(const std::string& text) {
    std::vector<TableRow> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<Int> vals;
        Int v;
        while (ls >> v) vals.push_back(v);
        if (vals.empty()) continue;
        if (vals.size() < 4) throw InvalidInput("table row needs at least 4 numbers");
        TableRow row;
        row.lambda = vals.back();
        vals.pop_back();
        row.weights = vals;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<TableRow> cor410_rows(Int d) {
    const Int d2 = d * d;
    return {
        {{d2 + d + 1, d + 1, 1}, -1},
        {{d2 + d + 1, d + 1, d}, d2},
        {{d2 + d, 2 * d + 1, d}, d2},
        {{d2, d + 1, d}, d2},
        {{d2, d, 1}, 0},
        {{d2, d, d - 1}, d2 - d},
        {{d2 - 1, d, d - 1}, d2 - d},
    };
}

TableReport verify_table(const std::string& table_id, bool certify, const CertifySettings& cfg) {
    TableReport rep;
    rep.table_id = table_id;
    if (table_id == "cor410") {
        for (Int d = 2; d <= 5; ++d) {
            std::set<std::string> canon;
            for (const auto& desc : enumerate_components(3, d, certify, cfg))
                canon.insert(canonical_key(desc.weights, desc.lambda, d));
            for (const auto& row : cor410_rows(d)) {
                ++rep.expected;
                const std::string key = canonical_key(WeightVector{row.weights}, row.lambda, d);
                if (canon.count(key))
                    ++rep.matched;
                else
                    rep.missing.push_back("d=" + std::to_string(d) + ": " +
                                          format_tuple(row.weights, row.lambda));
            }
        }
        rep.pass = rep.missing.empty();
        return rep;
    }

    int n = 3;
    Int d = 2;
    if (table_id == "cor48_d2") {
        n = 3; d = 2;
    } else if (table_id == "cor48_d3") {
        n = 3; d = 3;
    } else if (table_id == "cor411") {
        n = 4; d = 2;
    } else {
        throw InvalidInput("unknown table id: " + table_id);
    }
    const auto rows = parse_table_text(builtin_table_text(table_id));
    std::map<std::string, std::string> expect; // canonical key -> printed row
    for (const auto& row : rows)
        expect.emplace(canonical_key(WeightVector{row.weights}, row.lambda, d),
                       format_tuple(row.weights, row.lambda));
    rep.expected = static_cast<int>(expect.size());

    std::map<std::string, std::string> got;
    for (const auto& desc : enumerate_components(n, d, certify, cfg)) {
        if (certify && !desc.certified) {
            rep.extra.push_back("uncertified: " + format_tuple(desc.weights.p, desc.lambda));
            continue;
        }
        got.emplace(canonical_key(desc.weights, desc.lambda, d),
                    format_tuple(desc.weights.p, desc.lambda));
    }
    for (const auto& [key, label] : expect) {
        if (got.count(key))
            ++rep.matched;
        else
            rep.missing.push_back(label);
    }
    for (const auto& [key, label] : got)
        if (!expect.count(key)) rep.extra.push_back(label);
    rep.pass = rep.missing.empty() && rep.extra.empty();
    return rep;
}

} // namespace gkfol
