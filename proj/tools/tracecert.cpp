// tracecert command-line front end.
//
// Every subcommand builds a JSON document; --json prints it, otherwise a short
// human rendering of the same document is printed.
//
// Exit codes: 0 success / positive answer, 1 negative answer (not equivalent,
// not PSD, does not verify), 2 dual evidence, 3 undecided / no witness,
// 64 usage, 65 bad input data, 70 internal invariant violation.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <tracecert/certkit.hpp>
#include <tracecert/mateval.hpp>
#include <tracecert/ncpoly.hpp>
#include <tracecert/tsos.hpp>

using namespace tracecert;
using json = nlohmann::json;

namespace {

constexpr int kUsage = 64;
constexpr int kDataError = 65;
constexpr int kInternal = 70;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what(), e.byte);
    }
}

/// --poly accepts inline text or the name of an existing file.
ncpoly::NcPoly poly_arg(const std::string& text, const std::string& file, int n = 0) {
    if (!file.empty()) return ncpoly::parse(read_file(file), n);
    if (text.empty()) throw UsageError("a polynomial is required (--poly or --poly-file)");
    std::error_code ec;
    if (std::filesystem::is_regular_file(text, ec)) return ncpoly::parse(read_file(text), n);
    return ncpoly::parse(text, n);
}

std::uint64_t seed_arg(const CLI::Option* opt, std::uint64_t value) {
    if (opt->count() > 0) return value;
    if (const char* env = std::getenv("TRACECERT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError("TRACECERT_SEED is not an unsigned integer");
        }
    }
    return 0;
}

json certificate_summary(const certkit::Certificate& c) {
    return {{"ok", certkit::verify(c).ok()},
            {"level", c.level()},
            {"terms", c.terms.size()},
            {"commutators", c.commutators.size()}};
}

// Output state shared by the subcommand handlers.
struct Output {
    bool as_json = false;
    json doc;
    std::string human;
    int code = 0;
};

void emit(const Output& out) {
    if (out.as_json)
        std::cout << out.doc.dump(2) << "\n";
    else
        std::cout << out.human;
}

std::string human_certificate(const json& c) {
    std::ostringstream os;
    os << "target:  " << c.at("target").get<std::string>() << "\n";
    os << "epsilon: " << c.at("epsilon").get<std::string>() << "\n";
    for (const auto& t : c.at("terms"))
        os << "  " << t.at("lambda").get<std::string>() << " * g* p" << t.at("gen").get<int>() << " g,  g = "
           << t.at("g").get<std::string>() << "\n";
    os << "  + " << c.at("commutators").size() << " commutators\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trace positivity of noncommutative polynomials on contractions"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --json follow the subcommand
    Output out;
    app.add_flag("--json", out.as_json, "Print the JSON document");

    std::string poly, poly_file, poly2, eps = "0", word, sign = "+", file, tuple_file, target;
    int size = 4, trials = 100, refine = 200, kmax = 6, m = 2, k = 2, var = 1;
    std::uint64_t seed = 0;
    bool normalized = false, symmetrize = false;
    std::string fast_path = "auto", method = "ipm";

    auto* canon = app.add_subcommand("canon", "Cyclic canonical form: summed coefficient per rotation class");
    canon->add_option("poly", poly, "Polynomial")->required();

    auto* cyceq = app.add_subcommand("cyceq", "Decide cyclic equivalence of two polynomials");
    cyceq->add_option("f", poly, "First polynomial")->required();
    cyceq->add_option("g", poly2, "Second polynomial")->required();

    auto* decompose = app.add_subcommand("decompose", "Write a polynomial as a sum of commutators plus residue");
    decompose->add_option("poly", poly, "Polynomial")->required();

    auto* falsify = app.add_subcommand("falsify", "Search contraction tuples with negative trace");
    falsify->add_option("--poly", poly, "Polynomial text or file");
    falsify->add_option("--poly-file", poly_file, "File holding the polynomial");
    falsify->add_option("--size", size, "Largest matrix size")->check(CLI::PositiveNumber);
    falsify->add_option("--trials", trials, "Samples per size")->check(CLI::PositiveNumber);
    auto* falsify_seed = falsify->add_option("--seed", seed, "Seed (default: TRACECERT_SEED or 0)");
    falsify->add_flag("--normalized", normalized, "Report the normalized trace");
    falsify->add_option("--refine", refine, "Local refinement sweeps")->check(CLI::NonNegativeNumber);

    auto* psd = app.add_subcommand("psd-check", "Is f(A) positive semidefinite for a given tuple");
    psd->add_option("--poly", poly, "Polynomial text or file");
    psd->add_option("--poly-file", poly_file, "File holding the polynomial");
    psd->add_option("--tuple", tuple_file, "Matrix tuple JSON")->required();

    auto* certify = app.add_subcommand("certify", "Search a certificate for f + eps, or a separating functional");
    certify->add_option("--poly", poly, "Polynomial text or file");
    certify->add_option("--poly-file", poly_file, "File holding the polynomial");
    certify->add_option("--eps", eps, "Epsilon p/q");
    certify->add_option("--kmax", kmax, "Highest level to try")->check(CLI::NonNegativeNumber);
    certify->add_option("--fast-path", fast_path, "Sorted commutative fast path")
        ->check(CLI::IsMember({"auto", "on", "off"}));
    certify->add_option("--method", method, "Numeric solver")->check(CLI::IsMember({"ipm", "ap"}));
    certify->add_flag("--symmetrize", symmetrize, "Replace f by (f + f*)/2 first");

    auto* verify = app.add_subcommand("verify", "Exact check of a certificate JSON file");
    verify->add_option("file", file, "Certificate JSON")->required();

    auto* lift = app.add_subcommand("lift-putinar", "Lift a commutative certificate to a noncommutative one");
    lift->add_option("file", file, "Commutative certificate JSON")->required();
    lift->add_option("--target", target, "Cyclically sorted target (default: the sorted section)");

    auto* ex42 = app.add_subcommand("example42", "Certificate for (1 - X^2)(1 - Y^2) + 1/m");
    ex42->add_option("--m", m, "m >= 2")->required();

    auto* motzkin = app.add_subcommand("motzkin", "Certificate for the Motzkin-type polynomial plus eps");
    motzkin->add_option("--eps", eps, "Epsilon p/q > 0")->required();

    auto* bound = app.add_subcommand("bound-cert", "Certificate for 2 - s (w + w*)");
    bound->add_option("--word", word, "Word, e.g. X*Y*X")->required();
    bound->add_option("--sign", sign, "+ or -")->check(CLI::IsMember({"+", "-"}));

    auto* moments = app.add_subcommand("moments", "Normalized trace moments of a tuple");
    moments->add_option("--tuple", tuple_file, "Matrix tuple JSON")->required();
    moments->add_option("--k", k, "Largest word length")->check(CLI::NonNegativeNumber);

    auto* gns = app.add_subcommand("gns", "Truncated GNS model of a functional");
    gns->add_option("--functional", file, "Functional JSON {level, values}")->required();
    gns->add_option("--k", k, "Truncation level")->check(CLI::NonNegativeNumber);

    auto* polarize = app.add_subcommand("polarize", "One polarization step in a variable");
    polarize->add_option("--poly", poly, "Polynomial text or file");
    polarize->add_option("--poly-file", poly_file, "File holding the polynomial");
    polarize->add_option("--var", var, "Variable index")->check(CLI::PositiveNumber);
    polarize->add_option("--k", k, "Degree of f in that variable")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*canon) {
            auto f = ncpoly::parse(poly);
            auto r = ncpoly::cyclic_reduce(f);
            json classes = json::array();
            for (const auto& [w, c] : r) classes.push_back({{"word", ncpoly::format_word(w)}, {"coeff", to_string(c)}});
            out.doc = {{"canonical", ncpoly::format(r)}, {"classes", classes}};
            out.human = ncpoly::format(r) + "\n";
        } else if (*cyceq) {
            const bool eq = ncpoly::cyc_equiv(ncpoly::parse(poly), ncpoly::parse(poly2));
            out.doc = {{"equivalent", eq}};
            out.human = eq ? "equivalent\n" : "not equivalent\n";
            out.code = eq ? 0 : 1;
        } else if (*decompose) {
            auto split = ncpoly::commutator_decomposition(ncpoly::parse(poly));
            json comms = json::array();
            std::string h;
            for (const auto& c : split.pairs) {
                comms.push_back({{"p", ncpoly::format(c.p)}, {"q", ncpoly::format(c.q)}});
                h += "[" + ncpoly::format(c.p) + ", " + ncpoly::format(c.q) + "]\n";
            }
            out.doc = {{"commutators", comms}, {"residue", ncpoly::format(split.residue)}, {"ok", split.ok()}};
            out.human = h + "residue: " + ncpoly::format(split.residue) + "\n";
            out.code = split.ok() ? 0 : 1;
        } else if (*falsify) {
            mateval::FalsifyConfig cfg;
            cfg.max_size = size;
            cfg.trials = trials;
            cfg.seed = seed_arg(falsify_seed, seed);
            cfg.normalized = normalized;
            cfg.refine_iterations = refine;
            auto w = mateval::falsify_trace_nonneg(poly_arg(poly, poly_file), cfg);
            if (w) {
                out.doc = {{"found", true}, {"witness", mateval::to_json(*w)}};
                std::ostringstream os;
                os << "witness of size " << w->tuple.s() << ", trace " << w->trace << "\n";
                out.human = os.str();
            } else {
                out.doc = {{"found", false}};
                out.human = "no witness found\n";
                out.code = 3;
            }
        } else if (*psd) {
            auto A = mateval::tuple_from_json(read_json(tuple_file));
            auto f = poly_arg(poly, poly_file, A.n());
            const double lmin = mateval::min_eigenvalue(mateval::evaluate(f, A));
            const bool ok = mateval::psd_check(f, A);
            out.doc = {{"psd", ok}, {"min_eigenvalue", lmin}, {"trace", mateval::trace_value(f, A)}};
            std::ostringstream os;
            os << (ok ? "PSD" : "not PSD") << ", least eigenvalue " << lmin << "\n";
            out.human = os.str();
            out.code = ok ? 0 : 1;
        } else if (*certify) {
            auto f = poly_arg(poly, poly_file);
            if (symmetrize) f = tsos::symmetrize(f);
            tsos::SolverConfig cfg;
            cfg.fast_path = fast_path == "on" ? tsos::FastPath::on
                            : fast_path == "off" ? tsos::FastPath::off
                                                 : tsos::FastPath::automatic;
            if (method == "ap") cfg.method = tsos::SolverMethod::alternating_projections;
            auto r = tsos::certify(f, parse_rational(eps), kmax, cfg);
            std::ostringstream os;
            os << tsos::to_string(r.status) << " at level " << r.level << ": " << r.message << "\n";
            if (r.status == tsos::SolveStatus::feasible) {
                out.doc = certkit::to_json(*r.certificate);
                os << human_certificate(out.doc);
            } else if (r.status == tsos::SolveStatus::infeasible_with_dual) {
                out.doc = tsos::to_json(*r.functional);
                os << "L(f + eps) = " << r.conditions->value << ", least localizing eigenvalue "
                   << r.conditions->min_eigenvalue << "\n";
                out.code = 2;
            } else {
                out.doc = tsos::to_json(r);
                out.code = 3;
            }
            out.human = os.str();
        } else if (*verify) {
            auto c = certkit::certificate_from_json(read_json(file));
            auto rep = certkit::verify(c);
            out.doc = certificate_summary(c);
            out.doc["report"] = certkit::describe(rep);
            out.human = certkit::describe(rep) + (rep.ok() ? "\n" : "");
            out.code = rep.ok() ? 0 : 1;
        } else if (*lift) {
            auto cc = certkit::commutative_certificate_from_json(read_json(file));
            auto t = target.empty() ? ncpoly::cyclic_sort_section(cc.target) : ncpoly::parse(target, 2);
            auto c = certkit::putinar_lift(cc, t);
            out.doc = certkit::to_json(c);
            out.human = human_certificate(out.doc);
        } else if (*ex42 || *motzkin) {
            auto c = *ex42 ? certkit::example42(m) : certkit::motzkin_decomposition(parse_rational(eps));
            if (!certkit::verify(c)) throw InvariantError("built certificate does not verify");
            out.doc = certkit::to_json(c);
            out.human = human_certificate(out.doc);
        } else if (*bound) {
            auto w = ncpoly::parse(word);
            if (w.size() != 1 || w.begin()->second != 1) throw ParseError("not a word: " + word, 0);
            auto c = certkit::word_bound_certificate(std::max(1, w.nvars()), w.begin()->first, sign == "+" ? 1 : -1);
            out.doc = certkit::to_json(c);
            out.human = human_certificate(out.doc);
        } else if (*moments) {
            auto A = mateval::tuple_from_json(read_json(tuple_file));
            auto t = mateval::moment_table(A, k);
            json values = json::object();
            std::ostringstream os;
            for (const auto& [w, v] : t.values) {
                values[ncpoly::format_word(w)] = v;
                os << ncpoly::format_word(w) << "\t" << v << "\n";
            }
            out.doc = {{"n", t.n}, {"k", t.k}, {"values", values}};
            out.human = os.str();
        } else if (*gns) {
            auto L = tsos::functional_from_json(read_json(file));
            auto g = mateval::gns_truncated(L, k);
            mateval::MatTuple ops{g.ops};
            out.doc = {{"dim", g.dim()},
                       {"tuple", g.dim() > 0 ? mateval::to_json(ops) : json(nullptr)},
                       {"xi", std::vector<double>(g.xi.data(), g.xi.data() + g.xi.size())},
                       {"defect", g.defect},
                       {"clipped", g.clipped},
                       {"missing", g.missing}};
            std::ostringstream os;
            os << "dimension " << g.dim() << ", moment defect " << g.defect << ", clipped " << g.clipped << "\n";
            out.human = os.str();
        } else if (*polarize) {
            auto f = poly_arg(poly, poly_file);
            auto p = ncpoly::polarize_step(f, static_cast<ncpoly::Letter>(var), k);
            const bool back = ncpoly::resubstitute(p, static_cast<ncpoly::Letter>(var), k) == f;
            out.doc = {{"polarized", ncpoly::format(p)}, {"new_variable", p.nvars()}, {"resubstitutes", back}};
            out.human = ncpoly::format(p) + "\n";
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kDataError;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDataError;
    } catch (const InvariantError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    emit(out);
    return out.code;
}
