// hc0: exact cord-ring (degree-0 knot/braid contact homology) computations
// from braid closures, plats, knot diagrams and two-bridge fractions, plus
// the machine verification suites.

#include <cordring/cordring.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

using namespace cordring;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitVerify = 4;

struct OutputOptions {
    bool abelianize = false;
    bool groebner = false;
    std::string format = "text";
};

std::optional<int> max_degree_from_env() {
    const char* env = std::getenv("HC0_MAX_DEGREE");
    if (!env || !*env) return std::nullopt;
    try {
        return std::stoi(env);
    } catch (const std::exception&) {
        throw ParseError("HC0_MAX_DEGREE must be an integer");
    }
}

void print_presentation(const Presentation& p, const OutputOptions& opt, XConvention conv) {
    AbelianVars vars{p.n};
    if (opt.format == "json") {
        nlohmann::json j;
        j["n"] = p.n;
        j["relators"] = nlohmann::json::array();
        for (const NcPoly& r : p.relators) j["relators"].push_back(r.to_json());
        if (opt.abelianize || opt.groebner) {
            auto gens = abelianize(p);
            nlohmann::json ab = nlohmann::json::array();
            for (const CommPoly& g : gens) ab.push_back(g.render(vars.names()));
            j["abelian_relators"] = std::move(ab);
            if (opt.groebner) j["ring"] = canonical_ring_string(gens, vars, conv);
        }
        std::cout << j.dump(2) << "\n";
        return;
    }
    if (p.relators.empty()) {
        std::cout << "free ring on " << p.n * (p.n - 1) << " generators\n";
    } else {
        std::cout << "quotient of the free ring on " << p.n * (p.n - 1) << " generators (A_" << p.n
                  << ") by " << p.relators.size() << " relators:\n";
        for (const NcPoly& r : p.relators) std::cout << "  " << r.render() << "\n";
    }
    if (opt.abelianize || opt.groebner) {
        auto gens = abelianize(p);
        std::cout << "abelianized relators (" << gens.size() << "):\n";
        for (const CommPoly& g : gens) std::cout << "  " << g.render(vars.names()) << "\n";
        if (opt.groebner) std::cout << canonical_ring_string(gens, vars, conv) << "\n";
    }
}

std::pair<BigInt, BigInt> parse_fraction(const std::string& text) {
    auto slash = text.find('/');
    try {
        BigInt m(text.substr(0, slash));
        BigInt n = (slash == std::string::npos) ? BigInt(1) : BigInt(text.substr(slash + 1));
        if (n == 0) throw ParseError("fraction with zero denominator");
        return {m, n};
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad fraction '" + text + "', expected m/n");
    }
}

// Continued-fraction expansion of m/n (n > 0) in the alternating plat form.
ContinuedFraction fraction_to_cf(BigInt m, BigInt n) {
    if (n < 0) {
        m = -m;
        n = -n;
    }
    ContinuedFraction cf;
    while (true) {
        BigInt a = floor_div(m, n);
        BigInt r = m - a * n;
        if (r == 0) {
            cf.exponents.push_back(a.convert_to<long>());
            break;
        }
        cf.exponents.push_back(a.convert_to<long>());
        m = n;
        n = r;
    }
    return cf;
}

int run(int argc, char** argv) {
    CLI::App app{"exact cord-ring (degree-0 contact homology) computations"};
    app.require_subcommand(1);
    // the output flags are global; let them appear after the subcommand too
    app.fallthrough();

    OutputOptions opt;
    std::optional<int> max_degree;
    app.add_flag("--abelianize", opt.abelianize, "also print the abelianized relators");
    app.add_flag("--groebner", opt.groebner, "append the canonical quotient-ring form");
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-degree", max_degree, "cap on image degrees (also: HC0_MAX_DEGREE)");

    // braid
    auto* braid_cmd = app.add_subcommand("braid", "HC_0 of a braid conjugacy class");
    int braid_strands = 0;
    std::string braid_word;
    braid_cmd->add_option("--strands", braid_strands, "strand count")->required();
    braid_cmd->add_option("--word", braid_word, "braid word, e.g. \"1,1,1\"")->required();

    // closure
    auto* closure_cmd = app.add_subcommand("closure", "HC_0 of the knot closure of a braid");
    int closure_strands = 0;
    std::string closure_word;
    closure_cmd->add_option("--strands", closure_strands, "strand count")->required();
    closure_cmd->add_option("--word", closure_word, "braid word")->required();

    // plat
    auto* plat_cmd = app.add_subcommand("plat", "HC_0 of the plat closure of a braid");
    int plat_strands = 0;
    std::string plat_word;
    plat_cmd->add_option("--strands", plat_strands, "strand count (even)")->required();
    plat_cmd->add_option("--word", plat_word, "braid word")->required();

    // diagram
    auto* diagram_cmd = app.add_subcommand("diagram", "HC_0 from a knot diagram PD code");
    std::string pd_text;
    diagram_cmd->add_option("--pd", pd_text, "PD code, e.g. \"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\"")->required();

    // twobridge
    auto* tb_cmd = app.add_subcommand("twobridge", "closed-form two-bridge cord ring");
    std::string tb_cf, tb_fraction;
    tb_cmd->add_option("--cf", tb_cf, "continued-fraction exponents, e.g. \"3,1,1\"");
    tb_cmd->add_option("--fraction", tb_fraction, "fraction m/n");

    // lin
    auto* lin_cmd = app.add_subcommand("lin", "linearized abelian invariant from a PD code");
    std::string lin_pd;
    lin_cmd->add_option("--pd", lin_pd, "PD code")->required();

    // psi
    auto* psi_cmd = app.add_subcommand("psi", "cord map psi = alpha . Y . X");
    int psi_n = 0, psi_from = 0, psi_to = 0;
    std::string psi_word;
    psi_cmd->add_option("--n", psi_n, "number of punctures")->required();
    psi_cmd->add_option("--from", psi_from, "start puncture")->required();
    psi_cmd->add_option("--to", psi_to, "end puncture")->required();
    psi_cmd->add_option("--word", psi_word, "free-group word, e.g. \"x3^-1 x2\" (empty = trivial cord)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::uint64_t seed = kDefaultSeed;
    verify_cmd->add_option("--suite", suite, "suite name or 'all'")->required();
    verify_cmd->add_option("--seed", seed, "seed for the randomized suites");

    CLI11_PARSE(app, argc, argv);

    if (!max_degree) max_degree = max_degree_from_env();

    if (braid_cmd->parsed()) {
        Presentation p = hc0_braid(BraidWord::parse(braid_word, braid_strands), max_degree);
        print_presentation(p, opt, XConvention::plain);
    } else if (closure_cmd->parsed()) {
        Presentation p = hc0_closure(BraidWord::parse(closure_word, closure_strands), max_degree);
        print_presentation(p, opt, XConvention::negated);
    } else if (plat_cmd->parsed()) {
        Presentation p = hc0_plat(BraidWord::parse(plat_word, plat_strands), max_degree);
        print_presentation(p, opt, XConvention::negated);
    } else if (diagram_cmd->parsed()) {
        Presentation p = hc0_diagram(PdCode::parse(pd_text));
        print_presentation(p, opt, XConvention::plain);
    } else if (tb_cmd->parsed()) {
        if (tb_cf.empty() == tb_fraction.empty())
            throw ParseError("twobridge needs exactly one of --cf or --fraction");
        ContinuedFraction cf = tb_cf.empty()
                                   ? fraction_to_cf(parse_fraction(tb_fraction).first,
                                                    parse_fraction(tb_fraction).second)
                                   : ContinuedFraction::parse(tb_cf);
        auto [m, n] = cf_to_fraction(cf);
        UniPoly p = two_bridge_ring(cf);
        std::cout << "fraction " << to_string(m) << "/" << to_string(n) << ", determinant "
                  << to_string(big_abs(m)) << "\n";
        std::cout << "Z[x]/(" << p.render() << ")\n";
    } else if (lin_cmd->parsed()) {
        AbelianGroupPresentation g = lin_presentation(PdCode::parse(lin_pd));
        std::cout << group_string(g) << "\n";
        std::cout << "minimal generators: " << min_generators(g) << "\n";
    } else if (psi_cmd->parsed()) {
        FreeWord w = FreeWord::parse(psi_word, psi_n);
        std::cout << psi(psi_from, psi_to, w).render() << "\n";
    } else if (verify_cmd->parsed()) {
        std::vector<std::string> names =
            (suite == "all") ? verify::suite_names() : std::vector<std::string>{suite};
        bool all_ok = true;
        for (const std::string& name : names) {
            verify::SuiteResult r = verify::run_suite(name, seed);
            std::cout << r.name << ": " << r.passed << "/" << r.total << (r.ok() ? " ok" : " FAIL")
                      << "\n";
            for (const std::string& f : r.failures) std::cout << "  failed: " << f << "\n";
            all_ok = all_ok && r.ok();
        }
        if (!all_ok) return kExitVerify;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const DegreeCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
