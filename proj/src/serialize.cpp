#include "nexus/serialize.hpp"

#include "nexus/errors.hpp"

#include <sstream>

namespace nexus {

namespace {

template <typename T>
void putOptional(json& j, const char* key, const std::optional<T>& v) {
    if (v) j[key] = *v;
}

template <typename T>
std::optional<T> getOptional(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

std::uint64_t nonNegative(const json& j, const char* key) {
    const json& v = j.at(key);
    if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0))
        throw DomainError(std::string("'") + key + "' must be a nonnegative integer");
    return v.get<std::uint64_t>();
}

std::optional<std::uint64_t> optionalNonNegative(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return nonNegative(j, key);
}

std::string joinSizes(const std::vector<std::uint64_t>& v) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
    out << '}';
    return out.str();
}

std::string colengthText(const Colength& c) { return c.finite() ? std::to_string(*c.value) : "INFINITE"; }

}  // namespace

void to_json(json& j, const CycloProduct& p) { j = p.toString(); }

void from_json(const json& j, CycloProduct& p) {
    if (j.is_string()) {
        p = CycloProduct::parse(j.get<std::string>());
        return;
    }
    if (!j.is_object()) throw DomainError("a cyclotomic product is a string or an object of k -> exponent");
    CycloProduct::FactorMap f;
    for (const auto& [key, value] : j.items()) {
        std::size_t used = 0;
        unsigned long long k = 0;
        try {
            k = std::stoull(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size() || k == 0) throw DomainError("invalid cyclotomic index '" + key + "'");
        if (!value.is_number_unsigned()) throw DomainError("cyclotomic exponents must be nonnegative integers");
        f[k] += value.get<std::uint64_t>();
    }
    p = CycloProduct(f);
}

void to_json(json& j, const IntMatrix& m) {
    j = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (!m(r, c).fits_slong_p()) throw DomainError("matrix entry does not fit in JSON integer");
            row.push_back(m(r, c).get_si());
        }
        j.push_back(std::move(row));
    }
}

void from_json(const json& j, IntMatrix& m) {
    if (!j.is_array() || j.empty()) throw DomainError("a matrix is a nonempty array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j.at(0).size();
    std::vector<mpz_class> entries;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != cols || cols == 0) throw DomainError("ragged or empty matrix row");
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw DomainError("matrix entries must be integers");
            entries.emplace_back(static_cast<long>(v.get<std::int64_t>()));
        }
    }
    m = IntMatrix(rows, cols, std::move(entries));
}

void to_json(json& j, const ComponentData& c) {
    j = json{{"k", c.k}, {"mu", c.mu}};
    putOptional(j, "d", c.d);
    putOptional(j, "charH", c.charH);
    putOptional(j, "tau", c.tau);
    putOptional(j, "fixedRank", c.fixedRank);
}

void from_json(const json& j, ComponentData& c) {
    if (!j.is_object()) throw DomainError("a component is a JSON object");
    c = {};
    c.k = nonNegative(j, "k");
    c.mu = nonNegative(j, "mu");
    c.d = optionalNonNegative(j, "d");
    c.charH = getOptional<CycloProduct>(j, "charH");
    c.tau = getOptional<IntMatrix>(j, "tau");
    c.fixedRank = optionalNonNegative(j, "fixedRank");
}

void to_json(json& j, const SingularSetup& s) {
    j = json{{"n", s.n}, {"mu0", s.mu0}, {"components", s.components}};
    putOptional(j, "d0", s.d0);
    putOptional(j, "charH0", s.charH0);
    putOptional(j, "lambda0", s.lambda0);
    putOptional(j, "omega", s.omega);
}

void from_json(const json& j, SingularSetup& s) {
    if (!j.is_object()) throw DomainError("a setup is a JSON object");
    s = {};
    s.n = nonNegative(j, "n");
    s.mu0 = nonNegative(j, "mu0");
    s.d0 = optionalNonNegative(j, "d0");
    s.charH0 = getOptional<CycloProduct>(j, "charH0");
    if (j.contains("components")) s.components = j.at("components").get<std::vector<ComponentData>>();
    s.lambda0 = optionalNonNegative(j, "lambda0");
    s.omega = optionalNonNegative(j, "omega");
}

void to_json(json& j, const Colength& c) {
    if (c.finite())
        j = *c.value;
    else
        j = "INFINITE";
}

void from_json(const json& j, Colength& c) {
    if (j.is_string() && j.get<std::string>() == "INFINITE")
        c = Colength::infinite();
    else
        c = Colength::of(j.get<std::uint64_t>());
}

void to_json(json& j, const LeInvariants& le) {
    j = json{{"mu0", le.mu0},         {"lambda0", le.lambda0},         {"lambda1", le.lambda1},
             {"omega", le.omega},     {"genericityOk", le.genericityOk}, {"warnings", le.warnings}};
}

void from_json(const json& j, LeInvariants& le) {
    le.mu0 = j.at("mu0").get<Colength>();
    le.lambda0 = j.at("lambda0").get<Colength>();
    le.lambda1 = j.at("lambda1").get<Colength>();
    le.omega = j.at("omega").get<Colength>();
    le.genericityOk = j.at("genericityOk").get<bool>();
    le.warnings = j.at("warnings").get<std::vector<std::string>>();
}

void to_json(json& j, const Finding& f) { j = json{{"tag", f.tag}, {"text", f.text}}; }
void from_json(const json& j, Finding& f) {
    f.tag = j.at("tag").get<std::string>();
    f.text = j.at("text").get<std::string>();
}

void to_json(json& j, const ExponentCeiling& e) {
    j = json{{"k", e.k}, {"fromH0", e.fromH0}, {"fromComponents", e.fromComponents}, {"ceiling", e.ceiling}};
}
void from_json(const json& j, ExponentCeiling& e) {
    e.k = j.at("k").get<std::uint64_t>();
    e.fromH0 = j.at("fromH0").get<std::uint64_t>();
    e.fromComponents = j.at("fromComponents").get<std::uint64_t>();
    e.ceiling = j.at("ceiling").get<std::uint64_t>();
}

void to_json(json& j, const ConstraintReport& r) {
    j = json{{"n", r.n},
             {"mu0", r.mu0},
             {"lambda1", r.lambda1},
             {"divisorBound", r.divisorBound ? json(*r.divisorBound) : json("UNKNOWN")},
             {"rankBound", r.rankBound},
             {"feasibleS", r.feasibleS},
             {"application1", toString(r.application1)},
             {"verdicts", r.verdicts},
             {"acampoViolations", r.acampoViolations},
             {"exponentCeilings", r.exponentCeilings},
             {"warnings", r.warnings}};
    putOptional(j, "componentS", r.componentS);
}

void from_json(const json& j, ConstraintReport& r) {
    r = {};
    r.n = j.at("n").get<std::uint64_t>();
    r.mu0 = j.at("mu0").get<std::uint64_t>();
    r.lambda1 = j.at("lambda1").get<std::uint64_t>();
    const json& bound = j.at("divisorBound");
    if (!(bound.is_string() && bound.get<std::string>() == "UNKNOWN")) r.divisorBound = bound.get<CycloProduct>();
    r.rankBound = j.at("rankBound").get<std::uint64_t>();
    r.feasibleS = j.at("feasibleS").get<std::vector<std::uint64_t>>();
    r.componentS = getOptional<std::uint64_t>(j, "componentS");
    r.application1 = application1VerdictFromString(j.at("application1").get<std::string>());
    r.verdicts = j.at("verdicts").get<std::vector<Finding>>();
    r.acampoViolations = j.at("acampoViolations").get<std::vector<std::string>>();
    r.exponentCeilings = j.at("exponentCeilings").get<std::vector<ExponentCeiling>>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
}

void to_json(json& j, const MultiplePoint& p) {
    json line = json::array();
    for (const auto& c : p.line) line.push_back(c.get_str());
    j = json{{"line", line}, {"multiplicity", p.multiplicity}, {"planes", p.planes}};
}

mpq_class rationalFromJson(const json& j) {
    if (j.is_number_integer()) return mpq_class(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        mpq_class q;
        const std::string text = j.get<std::string>();
        if (text.empty() || q.set_str(text, 10) != 0) throw DomainError("invalid rational '" + text + "'");
        if (q.get_den() == 0) throw DomainError("zero denominator in '" + text + "'");
        q.canonicalize();
        return q;
    }
    throw DomainError("a rational is an integer or a string like \"3/4\"");
}

json rationalToJson(const mpq_class& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return q.get_str();
}

CentralArrangement3 arrangementFromJson(const json& j) {
    if (!j.is_object() || !j.contains("normals") || !j.at("normals").is_array())
        throw DomainError("arrangement input needs a \"normals\" array");
    std::vector<QVector3> normals;
    for (const auto& n : j.at("normals")) {
        if (!n.is_array() || n.size() != 3) throw DomainError("each normal must have exactly three entries");
        normals.push_back({rationalFromJson(n[0]), rationalFromJson(n[1]), rationalFromJson(n[2])});
    }
    return CentralArrangement3(std::move(normals));
}

std::string renderText(const LeInvariants& le) {
    std::ostringstream out;
    out << "mu0      = " << colengthText(le.mu0) << '\n';
    out << "lambda0  = " << colengthText(le.lambda0) << '\n';
    out << "lambda1  = " << colengthText(le.lambda1) << '\n';
    out << "omega    = " << colengthText(le.omega) << '\n';
    out << "generic  = " << (le.genericityOk ? "yes" : "no") << '\n';
    for (const auto& w : le.warnings) out << "warning: " << w << '\n';
    return out.str();
}

std::string renderText(const ConstraintReport& r) {
    std::ostringstream out;
    out << "n = " << r.n << ", mu0 = " << r.mu0 << ", lambda1 = " << r.lambda1 << '\n';
    out << "divisor bound: " << (r.divisorBound ? r.divisorBound->toString() : "UNKNOWN") << '\n';
    out << "rank bound: " << r.rankBound << '\n';
    out << "application 1: " << toString(r.application1) << '\n';
    out << "feasible s (if rank = lambda1): " << joinSizes(r.feasibleS) << '\n';
    if (r.componentS) out << "s from components: " << *r.componentS << '\n';
    for (const auto& e : r.exponentCeilings)
        out << "exponent of Phi_" << e.k << " <= " << e.ceiling << "  (h0: " << e.fromH0
            << ", components: " << e.fromComponents << ")\n";
    for (const auto& v : r.verdicts) out << "[" << v.tag << "] " << v.text << '\n';
    for (const auto& v : r.acampoViolations) out << "A'Campo violation: " << v << '\n';
    for (const auto& w : r.warnings) out << "warning: " << w << '\n';
    return out.str();
}

}  // namespace nexus
