#include "gkfol/textio.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gkfol {

using nlohmann::json;

std::string render_rational(const mpq_class& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

mpq_class parse_rational(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw InvalidInput("bad rational: " + text);
    q.canonicalize();
    return q;
}

namespace {

void render_term(std::ostringstream& os, const Exp& e, const mpq_class& c, bool lead) {
    mpq_class a = c;
    if (lead) {
        if (a < 0) {
            os << '-';
            a = -a;
        }
    } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
    }
    bool wrote = false;
    if (a != 1 || total_degree(e) == 0) {
        os << a;
        wrote = true;
    }
    for (size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (wrote) os << '*';
        os << 'x' << (k + 1);
        if (e[k] != 1) os << '^' << e[k];
        wrote = true;
    }
}

} // namespace

std::string render_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool lead = true;
    // Largest term first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        render_term(os, it->first, it->second, lead);
        lead = false;
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && s[pos] == ' ') ++pos;
    }
    bool eat(char c) {
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    bool done() const { return pos >= s.size(); }

    long read_int() {
        size_t start = pos;
        if (peek() == '-') ++pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw InvalidInput("expected integer in '" + s + "'");
        return std::stol(s.substr(start, pos - start));
    }

    mpq_class read_rational() {
        long num = read_int();
        if (eat('/')) {
            long den = read_int();
            mpq_class q(num, den);
            q.canonicalize();
            return q;
        }
        return mpq_class(num);
    }
};

// One term: optional rational coefficient, '*'-joined powers.
void parse_term(Cursor& cur, Poly& into, int nvars, bool negate) {
    cur.skip_ws();
    mpq_class coef = 1;
    Exp e(static_cast<size_t>(nvars), 0);
    bool saw_factor = false;
    if (cur.peek() == '-' || isdigit(static_cast<unsigned char>(cur.peek()))) {
        coef = cur.read_rational();
        saw_factor = true;
        cur.skip_ws();
        if (!cur.eat('*')) {
            if (negate) coef = -coef;
            into.add_term(e, coef);
            return;
        }
        cur.skip_ws();
    }
    for (;;) {
        if (cur.peek() != 'x') {
            if (!saw_factor) throw InvalidInput("expected term in '" + cur.s + "'");
            break;
        }
        cur.eat('x');
        long idx = cur.read_int();
        if (idx < 1 || idx > nvars) throw InvalidInput("variable index out of range");
        long pw = 1;
        if (cur.eat('^')) pw = cur.read_int();
        e[static_cast<size_t>(idx) - 1] += static_cast<int>(pw);
        saw_factor = true;
        cur.skip_ws();
        if (!cur.eat('*')) break;
        cur.skip_ws();
    }
    if (negate) coef = -coef;
    into.add_term(e, coef);
}

Poly parse_poly_at(Cursor& cur, int nvars) {
    Poly p(nvars);
    cur.skip_ws();
    if (cur.peek() == '0') {
        size_t save = cur.pos;
        ++cur.pos;
        cur.skip_ws();
        if (cur.done() || cur.peek() == ')' || cur.peek() == 'd') return p;
        cur.pos = save; // a literal coefficient starting with 0? re-parse normally
    }
    bool negate = false;
    if (cur.eat('-')) negate = true;
    parse_term(cur, p, nvars, negate);
    for (;;) {
        cur.skip_ws();
        if (cur.eat('+')) {
            parse_term(cur, p, nvars, false);
        } else if (cur.peek() == '-') {
            // Distinguish. " - term" from the start of " d/dx".
            cur.eat('-');
            parse_term(cur, p, nvars, true);
        } else {
            break;
        }
    }
    return p;
}

} // namespace

Poly parse_poly(const std::string& text, int nvars) {
    Cursor cur{text};
    Poly p = parse_poly_at(cur, nvars);
    cur.skip_ws();
    if (!cur.done()) throw InvalidInput("trailing input after polynomial: " + text);
    return p;
}

std::string render_field(const VectorField& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = 1; j <= f.nvars(); ++j) {
        const Poly& c = f.comp(j);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        if (c.term_count() > 1)
            os << '(' << render_poly(c) << ')';
        else
            os << render_poly(c);
        os << " d/dx" << j;
        first = false;
    }
    return os.str();
}

VectorField parse_field(const std::string& text, int nvars) {
    VectorField f(nvars);
    Cursor cur{text};
    cur.skip_ws();
    if (cur.peek() == '0') {
        ++cur.pos;
        cur.skip_ws();
        if (cur.done()) return f;
        throw InvalidInput("trailing input after zero field");
    }
    for (;;) {
        cur.skip_ws();
        Poly p(nvars);
        if (cur.eat('(')) {
            p = parse_poly_at(cur, nvars);
            cur.skip_ws();
            if (!cur.eat(')')) throw InvalidInput("missing ')' in field: " + text);
        } else {
            p = parse_poly_at(cur, nvars);
        }
        cur.skip_ws();
        if (!(cur.eat('d') && cur.eat('/') && cur.eat('d') && cur.eat('x')))
            throw InvalidInput("missing d/dx marker in field: " + text);
        long idx = cur.read_int();
        if (idx < 1 || idx > nvars) throw InvalidInput("component index out of range");
        f.comp(static_cast<int>(idx)) += p;
        cur.skip_ws();
        if (cur.done()) break;
        if (!cur.eat('+')) throw InvalidInput("expected ' + ' between components");
    }
    return f;
}

namespace {

std::string join_ints(const std::vector<Int>& v) {
    std::ostringstream os;
    for (size_t k = 0; k < v.size(); ++k) os << (k ? " " : "") << v[k];
    return os.str();
}

std::string join_rationals(const std::vector<mpq_class>& v) {
    std::ostringstream os;
    for (size_t k = 0; k < v.size(); ++k) os << (k ? " " : "") << v[k];
    return os.str();
}

std::string join_exp(const Exp& e) {
    std::ostringstream os;
    for (size_t k = 0; k < e.size(); ++k) os << (k ? " " : "") << e[k];
    return os.str();
}

KupkaClass kupka_class_from(const std::string& s) {
    if (s == "kupka") return KupkaClass::Kupka;
    if (s == "isolated-invertible") return KupkaClass::IsolatedInvertible;
    if (s == "isolated-nilpotent") return KupkaClass::IsolatedNilpotentJacobian;
    if (s == "non-isolated-or-unknown") return KupkaClass::NonIsolatedOrUnknown;
    throw InvalidInput("unknown chart classification: " + s);
}

} // namespace

std::string render_certificate(const GKCertificate& cert) {
    std::ostringstream os;
    os << "gk-certificate v1\n";
    os << "weights: " << join_ints(cert.ps.weights.p) << "\n";
    os << "lambda: " << cert.ps.lambda << "\n";
    os << "degree: " << cert.ps.d << "\n";
    os << "witness: " << join_rationals(cert.witness_coords) << "\n";
    os << "witness-field: " << render_field(cert.witness) << "\n";
    os << "gamma: " << (cert.gamma_ok ? "constant-gcd" : "divisorial") << "\n";
    os << "exceptional-chart: ";
    if (cert.exceptional_chart)
        os << *cert.exceptional_chart;
    else
        os << "none";
    os << "\n";
    os << "origin-quotient-dim: " << cert.origin.quotient_dim << "\n";
    os << "origin-staircase:";
    for (size_t k = 0; k < cert.origin.staircase.size(); ++k)
        os << (k ? " | " : " ") << join_exp(cert.origin.staircase[k]);
    os << "\n";
    for (const auto& st : cert.chart_status) {
        os << "chart " << st.chart << ": " << to_string(st.classification) << "\n";
        os << "  value: " << join_rationals(st.value_at_origin) << "\n";
        os << "  jacobian:";
        for (size_t r = 0; r < st.jacobian.size(); ++r)
            os << (r ? " / " : " ") << join_rationals(st.jacobian[r]);
        os << "\n";
    }
    return os.str();
}

namespace {

std::vector<std::string> split(const std::string& s, const std::string& sep) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (true) {
        size_t next = s.find(sep, pos);
        if (next == std::string::npos) {
            out.push_back(s.substr(pos));
            break;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + sep.size();
    }
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<Int> ints_of(const std::string& s) {
    std::istringstream is(s);
    std::vector<Int> out;
    Int v;
    while (is >> v) out.push_back(v);
    return out;
}

std::vector<mpq_class> rationals_of(const std::string& s) {
    std::istringstream is(s);
    std::vector<mpq_class> out;
    std::string tok;
    while (is >> tok) out.push_back(parse_rational(tok));
    return out;
}

} // namespace

GKCertificate parse_certificate(const std::string& text) {
    GKCertificate cert;
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || trim(line) != "gk-certificate v1")
        throw InvalidInput("not a v1 certificate");
    std::vector<Int> weights;
    Int lambda = 0, degree = 1;
    KupkaStatus* cur_chart = nullptr;
    while (std::getline(is, line)) {
        if (trim(line).empty()) continue;
        if (line.rfind("chart ", 0) == 0) {
            const auto colon = line.find(':');
            KupkaStatus st;
            st.chart = static_cast<int>(std::stol(trim(line.substr(6, colon - 6))));
            st.classification = kupka_class_from(trim(line.substr(colon + 1)));
            cert.chart_status.push_back(std::move(st));
            cur_chart = &cert.chart_status.back();
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw InvalidInput("bad certificate line: " + line);
        const std::string key = trim(line.substr(0, colon));
        const std::string val = trim(line.substr(colon + 1));
        if (key == "weights") {
            weights = ints_of(val);
        } else if (key == "lambda") {
            lambda = static_cast<Int>(std::stoll(val));
        } else if (key == "degree") {
            degree = static_cast<Int>(std::stoll(val));
        } else if (key == "witness") {
            cert.witness_coords = rationals_of(val);
        } else if (key == "witness-field") {
            cert.witness = parse_field(val, static_cast<int>(weights.size()));
        } else if (key == "gamma") {
            cert.gamma_ok = (val == "constant-gcd");
        } else if (key == "exceptional-chart") {
            if (val != "none") cert.exceptional_chart = static_cast<int>(std::stol(val));
        } else if (key == "origin-quotient-dim") {
            cert.origin.quotient_dim = std::stol(val);
        } else if (key == "origin-staircase") {
            if (!val.empty())
                for (const auto& part : split(val, " | ")) {
                    Exp e;
                    for (Int v : ints_of(part)) e.push_back(static_cast<int>(v));
                    cert.origin.staircase.push_back(std::move(e));
                }
        } else if (key == "value") {
            if (!cur_chart) throw InvalidInput("chart value outside a chart block");
            cur_chart->value_at_origin = rationals_of(val);
        } else if (key == "jacobian") {
            if (!cur_chart) throw InvalidInput("chart jacobian outside a chart block");
            for (const auto& part : split(val, " / "))
                cur_chart->jacobian.push_back(rationals_of(part));
        } else {
            throw InvalidInput("unknown certificate key: " + key);
        }
    }
    cert.ps = derive_params(normalize_weights(weights), lambda, degree);
    return cert;
}

json paramset_to_json(const ParamSet& ps) {
    json j;
    j["weights"] = ps.weights.p;
    j["lambda"] = ps.lambda;
    j["d"] = ps.d;
    j["tau"] = ps.tau;
    j["lambda_i"] = ps.lambda_i;
    j["tau_i"] = ps.tau_i;
    j["p_bar"] = ps.p_bar;
    return j;
}

json certificate_to_json(const GKCertificate& cert) {
    json j;
    j["weights"] = cert.ps.weights.p;
    j["lambda"] = cert.ps.lambda;
    j["d"] = cert.ps.d;
    json coords = json::array();
    for (const auto& q : cert.witness_coords) coords.push_back(render_rational(q));
    j["witness"] = coords;
    j["witness_field"] = render_field(cert.witness);
    j["gamma_ok"] = cert.gamma_ok;
    if (cert.exceptional_chart)
        j["exceptional_chart"] = *cert.exceptional_chart;
    else
        j["exceptional_chart"] = nullptr;
    j["origin"] = {{"quotient_dim", cert.origin.quotient_dim}, {"staircase", cert.origin.staircase}};
    json charts = json::array();
    for (const auto& st : cert.chart_status) {
        json c;
        c["chart"] = st.chart;
        c["classification"] = to_string(st.classification);
        json vals = json::array();
        for (const auto& q : st.value_at_origin) vals.push_back(render_rational(q));
        c["value_at_origin"] = vals;
        json rows = json::array();
        for (const auto& row : st.jacobian) {
            json r = json::array();
            for (const auto& q : row) r.push_back(render_rational(q));
            rows.push_back(r);
        }
        c["jacobian"] = rows;
        charts.push_back(c);
    }
    j["charts"] = charts;
    return j;
}

GKCertificate certificate_from_json(const json& j) {
    GKCertificate cert;
    std::vector<Int> w = j.at("weights").get<std::vector<Int>>();
    cert.ps = derive_params(normalize_weights(w), j.at("lambda").get<Int>(), j.at("d").get<Int>());
    for (const auto& s : j.at("witness")) cert.witness_coords.push_back(parse_rational(s.get<std::string>()));
    cert.witness = parse_field(j.at("witness_field").get<std::string>(), cert.ps.n());
    cert.gamma_ok = j.at("gamma_ok").get<bool>();
    if (!j.at("exceptional_chart").is_null())
        cert.exceptional_chart = j.at("exceptional_chart").get<int>();
    cert.origin.quotient_dim = j.at("origin").at("quotient_dim").get<long>();
    for (const auto& e : j.at("origin").at("staircase")) cert.origin.staircase.push_back(e.get<Exp>());
    for (const auto& c : j.at("charts")) {
        KupkaStatus st;
        st.chart = c.at("chart").get<int>();
        st.classification = kupka_class_from(c.at("classification").get<std::string>());
        for (const auto& s : c.at("value_at_origin")) st.value_at_origin.push_back(parse_rational(s.get<std::string>()));
        for (const auto& row : c.at("jacobian")) {
            std::vector<mpq_class> r;
            for (const auto& s : row) r.push_back(parse_rational(s.get<std::string>()));
            st.jacobian.push_back(std::move(r));
        }
        cert.chart_status.push_back(std::move(st));
    }
    return cert;
}

json descriptor_to_json(const ComponentDescriptor& desc) {
    json j;
    j["n"] = desc.n;
    j["d"] = desc.d;
    j["weights"] = desc.weights.p;
    j["lambda"] = desc.lambda;
    j["case"] = to_string(desc.tag);
    j["case_params"] = desc.case_params;
    j["dimension"] = desc.dimension;
    j["tangent_sheaf"] = desc.tangent_sheaf;
    j["certified"] = desc.certified;
    if (!desc.note.empty()) j["note"] = desc.note;
    if (desc.certificate) j["certificate"] = certificate_to_json(*desc.certificate);
    return j;
}

namespace {

CaseTag case_tag_from(const std::string& s) {
    for (CaseTag t : {CaseTag::B1a, CaseTag::B1b, CaseTag::B1c, CaseTag::B1d, CaseTag::B2a,
                      CaseTag::B2b, CaseTag::B2c, CaseTag::B2d, CaseTag::Exceptional,
                      CaseTag::ChainSearch})
        if (s == to_string(t)) return t;
    throw InvalidInput("unknown case tag: " + s);
}

} // namespace

ComponentDescriptor descriptor_from_json(const json& j) {
    ComponentDescriptor desc;
    desc.n = j.at("n").get<int>();
    desc.d = j.at("d").get<Int>();
    desc.weights = WeightVector{j.at("weights").get<std::vector<Int>>()};
    desc.lambda = j.at("lambda").get<Int>();
    desc.tag = case_tag_from(j.at("case").get<std::string>());
    desc.case_params = j.at("case_params").get<std::map<std::string, Int>>();
    desc.dimension = j.at("dimension").get<Int>();
    desc.tangent_sheaf = j.at("tangent_sheaf").get<std::string>();
    desc.certified = j.at("certified").get<bool>();
    if (j.contains("note")) desc.note = j.at("note").get<std::string>();
    if (j.contains("certificate")) desc.certificate = certificate_from_json(j.at("certificate"));
    return desc;
}

json table_report_to_json(const TableReport& rep) {
    json j;
    j["table"] = rep.table_id;
    j["expected"] = rep.expected;
    j["matched"] = rep.matched;
    j["missing"] = rep.missing;
    j["extra"] = rep.extra;
    j["pass"] = rep.pass;
    return j;
}

} // namespace gkfol
