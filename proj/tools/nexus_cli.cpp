// nexus: singularity invariants and monodromy constraints from the command line.
//
// Exit codes: 0 success, 1 input error, 2 genericity failure, 3 resource limit.

#include "nexus/arrangements.hpp"
#include "nexus/cyclotomic.hpp"
#include "nexus/errors.hpp"
#include "nexus/le_numbers.hpp"
#include "nexus/monodromy.hpp"
#include "nexus/serialize.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using nexus::json;

enum ExitCode { kOk = 0, kInputError = 1, kGenericity = 2, kResourceLimit = 3 };

struct JobSpec {
    std::string input;
    std::string inlineJson;
    std::string format = "text";
    std::optional<std::uint64_t> seed;
    std::uint64_t maxPairs = 100000;
    std::uint64_t maxMonomials = 1000000;
    std::vector<std::string> cycloArgs;

    nexus::ResourceBudget budget() const {
        nexus::ResourceBudget b;
        b.maxPairs = maxPairs;
        b.maxMonomials = maxMonomials;
        return b;
    }
    bool jsonOutput() const { return format == "json"; }
};

json readInput(const JobSpec& job) {
    std::string text;
    if (!job.inlineJson.empty()) {
        text = job.inlineJson;
    } else if (job.input.empty() || job.input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(job.input);
        if (!in) throw nexus::DomainError("cannot open input file '" + job.input + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw nexus::DomainError(std::string("invalid JSON input: ") + e.what());
    }
}

std::vector<mpq_class> rationalList(const json& j) {
    if (!j.is_array()) throw nexus::DomainError("expected an array of rationals");
    std::vector<mpq_class> out;
    for (const auto& v : j) out.push_back(nexus::rationalFromJson(v));
    return out;
}

json rationalListJson(const std::vector<mpq_class>& v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(nexus::rationalToJson(q));
    return out;
}

int cmdAnalyze(const JobSpec& job) {
    const json in = readInput(job);
    if (!in.contains("polynomial") || !in.contains("variables"))
        throw nexus::DomainError("analyze input needs \"polynomial\" and \"variables\"");
    const auto vars = in.at("variables").get<std::vector<std::string>>();
    const nexus::MultiPoly f = nexus::parse(in.at("polynomial").get<std::string>(), vars);
    std::uint64_t seed = job.seed.value_or(in.value("seed", std::uint64_t{0}));
    const auto budget = job.budget();

    nexus::SliceSetup slice;
    nexus::LeInvariants le;
    std::size_t tried = 1;
    if (in.contains("z0")) {
        slice = nexus::makeSlice(f, rationalList(in.at("z0")));
        le = nexus::computeAll(slice, budget);
    } else {
        auto choice = nexus::chooseSlice(f, std::nullopt, seed, budget);
        slice = std::move(choice.slice);
        le = std::move(choice.invariants);
        tried = choice.candidatesTried;
    }

    std::optional<nexus::ConstraintReport> report;
    if (le.genericityOk && in.contains("components")) {
        nexus::SingularSetup setup;
        setup.n = slice.n;
        setup.mu0 = *le.mu0.value;
        setup.components = in.at("components").get<std::vector<nexus::ComponentData>>();
        if (in.contains("d0")) setup.d0 = in.at("d0").get<std::uint64_t>();
        if (in.contains("charH0")) setup.charH0 = in.at("charH0").get<nexus::CycloProduct>();
        report = nexus::fullReport(setup, le);
    }

    if (job.jsonOutput()) {
        json out{{"z0", rationalListJson(slice.z0)}, {"candidatesTried", tried}, {"invariants", le}};
        if (report) out["report"] = *report;
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "z0 = (";
        for (std::size_t i = 0; i < slice.z0.size(); ++i)
            std::cout << (i ? ", " : "") << slice.z0[i].get_str() << "*" << vars[i];
        std::cout << ")\n" << nexus::renderText(le);
        if (report) std::cout << nexus::renderText(*report);
    }
    return le.genericityOk ? kOk : kGenericity;
}

int cmdConstraints(const JobSpec& job) {
    const auto setup = readInput(job).get<nexus::SingularSetup>();
    const auto report = nexus::fullReport(setup);
    if (job.jsonOutput())
        std::cout << json(report).dump(2) << '\n';
    else
        std::cout << nexus::renderText(report);
    return kOk;
}

int cmdArrangement(const JobSpec& job) {
    const json in = readInput(job);
    const auto arr = nexus::arrangementFromJson(in);
    std::optional<nexus::QVector3> z0;
    if (in.contains("z0")) {
        auto v = rationalList(in.at("z0"));
        if (v.size() != 3) throw nexus::DomainError("z0 must have three entries");
        z0 = nexus::QVector3{v[0], v[1], v[2]};
    }
    const std::uint64_t seed = job.seed.value_or(0);
    const auto setup = nexus::toSetup(arr, z0, seed);
    const auto report = nexus::arrangementReport(arr, z0, seed);
    if (job.jsonOutput()) {
        json out{{"multiplePoints", setup.points},
                 {"z0", rationalListJson({setup.z0[0], setup.z0[1], setup.z0[2]})},
                 {"setup", setup.setup},
                 {"report", report}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "planes: " << arr.degree() << ", multiple points: " << setup.points.size() << '\n';
        for (const auto& p : setup.points)
            std::cout << "  line (" << p.line[0].get_str() << ", " << p.line[1].get_str() << ", "
                      << p.line[2].get_str() << ") multiplicity " << p.multiplicity << '\n';
        std::cout << nexus::renderText(report);
    }
    return kOk;
}

std::uint64_t positiveArg(const std::string& s, const char* what) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        if (!s.empty() && s[0] != '-') v = std::stoull(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw nexus::DomainError(std::string("invalid ") + what + " '" + s + "'");
    return v;
}

int cmdCyclo(const JobSpec& job) {
    const auto& args = job.cycloArgs;
    if (args.empty()) throw nexus::DomainError("cyclo needs a subcommand: phi K | unity D | homchar N D | gcd A B");
    const std::string& sub = args[0];
    auto need = [&](std::size_t count) {
        if (args.size() != count + 1)
            throw nexus::DomainError("cyclo " + sub + " takes " + std::to_string(count) + " argument(s)");
    };
    std::optional<nexus::CycloProduct> factored;
    nexus::UniPoly expanded;
    if (sub == "phi") {
        need(1);
        std::uint64_t k = positiveArg(args[1], "k");
        if (k < 1) throw nexus::DomainError("k must be at least 1");
        factored = nexus::CycloProduct{{k, 1}};
        expanded = nexus::cyclotomic(k);
    } else if (sub == "unity") {
        need(1);
        std::uint64_t d = positiveArg(args[1], "d");
        if (d < 1) throw nexus::DomainError("d must be at least 1");
        factored = nexus::factorUnity(d);
    } else if (sub == "homchar") {
        need(2);
        std::uint64_t n = positiveArg(args[1], "n");
        std::uint64_t d = positiveArg(args[2], "d");
        if (n < 1) throw nexus::DomainError("n must be at least 1");
        if (d < 2) throw nexus::DomainError("d must be at least 2");
        factored = nexus::homogeneousChar(n, d);
    } else if (sub == "gcd") {
        need(2);
        factored = nexus::gcd(nexus::CycloProduct::parse(args[1]), nexus::CycloProduct::parse(args[2]));
    } else {
        throw nexus::DomainError("unknown cyclo subcommand '" + sub + "'");
    }
    if (sub != "phi") expanded = nexus::expand(*factored);

    if (job.jsonOutput()) {
        json out{{"factored", *factored},
                 {"expanded", expanded.toString()},
                 {"degree", factored->degree()},
                 {"trace", nexus::trace(*factored)}};
        std::cout << out.dump(2) << '\n';
    } else if (sub == "phi") {
        std::cout << expanded.toString() << '\n';
    } else {
        std::cout << factored->toString() << " ; degree " << factored->degree() << " ; trace "
                  << nexus::trace(*factored) << '\n'
                  << expanded.toString() << '\n';
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Singularity invariants and Milnor-fiber monodromy constraints"};
    app.require_subcommand(1);
    JobSpec job;

    auto addCommon = [&](CLI::App* cmd) {
        cmd->add_option("--input", job.input, "input JSON file ('-' for stdin)");
        cmd->add_option("--json", job.inlineJson, "inline JSON input");
        cmd->add_option("--format", job.format, "output format")->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--seed", job.seed, "seed for generic z0 candidates (default 0)");
        cmd->add_option("--max-pairs", job.maxPairs, "standard basis pair budget")->check(CLI::PositiveNumber);
        cmd->add_option("--max-monomials", job.maxMonomials, "standard basis monomial budget")
            ->check(CLI::PositiveNumber);
    };

    auto* analyze = app.add_subcommand("analyze", "Lê numbers of a polynomial, plus constraints when components are given");
    auto* constraints = app.add_subcommand("constraints", "monodromy constraints from numerical data");
    auto* arrangement = app.add_subcommand("arrangement", "constraints for a central plane arrangement in C^3");
    auto* cyclo = app.add_subcommand("cyclo", "cyclotomic helpers: phi K | unity D | homchar N D | gcd A B");
    for (auto* cmd : {analyze, constraints, arrangement, cyclo}) addCommon(cmd);
    cyclo->add_option("args", job.cycloArgs, "subcommand and arguments")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*analyze) return cmdAnalyze(job);
        if (*constraints) return cmdConstraints(job);
        if (*arrangement) return cmdArrangement(job);
        return cmdCyclo(job);
    } catch (const nexus::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const nexus::GenericityError& e) {
        std::cerr << "genericity failure: " << e.what() << '\n';
        return kGenericity;
    } catch (const nexus::InvariantViolation& e) {
        std::cerr << "internal check failed (z0 may not be generic): " << e.what() << '\n';
        return kGenericity;
    } catch (const nexus::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kInputError;
    } catch (const nexus::Error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    }
}
