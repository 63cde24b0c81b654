// meetdet: build and validate meet semilattices, evaluate hyperdeterminants
// and their closed forms over exact scalars, cross-check the methods against
// each other, and benchmark closed forms against factorial-scale enumeration.
//
// Exit codes: 0 success, 1 verification failure, 2 input/parse error,
// 3 precondition or guard violation.

#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "meetdet/formats.hpp"
#include "meetdet/instances.hpp"
#include "meetdet/verify.hpp"

using namespace meetdet;

namespace {

struct RunReport {
    std::string method;
    std::string input_digest;
    std::string value;
    std::uint64_t terms = 0;
    double wall_ms = 0.0;
};

void print_report(const RunReport& r, bool with_time) {
    std::cout << "method: " << r.method << "\n";
    std::cout << "input: " << r.input_digest << "\n";
    std::cout << "value: " << r.value << "\n";
    std::cout << "terms: " << r.terms << "\n";
    if (with_time) {
        std::ostringstream ms;
        ms.setf(std::ios::fixed);
        ms.precision(3);
        ms << r.wall_ms;
        std::cout << "wall_ms: " << ms.str() << "\n";
    }
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    const auto d = std::chrono::steady_clock::now() - start;
    return std::chrono::duration<double, std::milli>(d).count();
}

// --fmap sign | one | table:<file>; the table file needs the target shape.
FMap make_fmap(const std::string& spec, int arity, int n, std::string& desc) {
    if (spec == "sign") {
        desc = "sign";
        return FMap::sign_product(arity);
    }
    if (spec == "one") {
        desc = "one";
        return FMap::constant_one(arity);
    }
    if (spec.rfind("table:", 0) == 0) {
        const std::string path = spec.substr(6);
        FMap f = load_fmap_table_file(path, arity, n);
        desc = "table:" + digest_hex(fmap_table_text(f));
        return f;
    }
    throw ParseError("bad --fmap '" + spec + "' (expected sign, one or table:<file>)");
}

const std::vector<std::string> kGfMethods = {"brute",        "expand", "lindstrom", "meetclosed",
                                             "factorclosed", "ligen",  "genhauk"};

Scalar dispatch_gf_method(const std::string& method, const GroundedFunction& gf, int k,
                          const FMap& fmap, bool force, std::uint64_t& terms) {
    if (k < 2) throw ParseError("order must be at least 2");
    if (method == "brute") {
        terms = bruteforce_term_count(gf.size(), k);
        return fdet_bruteforce(build_meet_hypermatrix(gf, k), fmap, force);
    }
    if (method == "expand") {
        terms = expansion_term_count(gf.size(), k);
        return fdet_expansion(build_meet_hypermatrix(gf, k), fmap, force);
    }
    if (method == "lindstrom") {
        terms = static_cast<std::uint64_t>(gf.size());
        return lindstrom_fdet(gf, k, fmap);
    }
    if (method == "meetclosed") {
        terms = static_cast<std::uint64_t>(gf.size());
        return meet_closed_fdet(gf, k, fmap);
    }
    if (method == "factorclosed") {
        terms = static_cast<std::uint64_t>(gf.size());
        return factor_closed_fdet(gf, k, fmap);
    }
    if (method == "ligen") {
        terms = subset_expansion_term_count(gf, k);
        return ligen_fdet(gf, k, fmap, force);
    }
    if (method == "genhauk") {
        terms = subset_expansion_term_count(gf, k);
        return genhauk_fdet(gf, k, fmap, force);
    }
    throw ParseError("unknown method '" + method + "'");
}

int cmd_lattice(const std::string& mode, const std::string& file, bool show_mobius) {
    const Poset p = load_poset_file(file);
    if (mode == "info") {
        std::cout << "elements: " << p.n() << "\n";
        std::cout << "covers:";
        for (const auto& [a, b] : p.cover_pairs())
            std::cout << " " << p.label(a) << "<" << p.label(b);
        std::cout << "\n";
    } else {
        std::cout << "poset: yes\n";
    }
    try {
        MeetSemilattice sl = MeetSemilattice::from_poset(p);
        std::cout << "meet-semilattice: yes (" << sl.n() << " elements)\n";
    } catch (const NotAMeetSemilattice& e) {
        std::cout << "meet-semilattice: no (witness: " << p.label(e.x()) << "," << p.label(e.y())
                  << ")\n";
        return 0;
    }
    if (show_mobius) {
        const IncidenceMatrix mu = mobius_matrix(p);
        std::cout << "mobius:\n";
        for (int i = 0; i < p.n(); ++i) {
            for (int j = 0; j < p.n(); ++j) std::cout << (j ? " " : "") << mu.at(i, j).str();
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_eval(const std::string& method, const std::string& hm_file, const std::string& gf_file,
             int k, const std::string& fmap_spec, bool force, bool no_time) {
    RunReport report;
    report.method = method;
    const auto start = std::chrono::steady_clock::now();
    std::string fmap_desc;
    if (!hm_file.empty() && !gf_file.empty())
        throw ParseError("give either --hypermatrix or --gf, not both");
    if (!hm_file.empty()) {
        if (method != "brute" && method != "expand")
            throw PreconditionError("method " + method +
                                    " needs a grounded-function input (--gf)");
        const Hypermatrix m = load_hypermatrix_file(hm_file);
        const FMap fmap = make_fmap(fmap_spec, m.k() - 2, m.n(), fmap_desc);
        report.input_digest = digest_hex(hypermatrix_text(m) + "fmap " + fmap_desc + "\n");
        Scalar value;
        if (method == "brute") {
            report.terms = bruteforce_term_count(m.n(), m.k());
            value = fdet_bruteforce(m, fmap, force);
        } else {
            report.terms = expansion_term_count(m.n(), m.k());
            value = fdet_expansion(m, fmap, force);
        }
        report.value = value.str();
    } else if (!gf_file.empty()) {
        if (k < 2) throw ParseError("order must be at least 2");
        const GroundedFunction gf = load_gf_file(gf_file);
        const FMap fmap = make_fmap(fmap_spec, k - 2, gf.size(), fmap_desc);
        report.input_digest =
            digest_hex(poset_text(gf.lattice->poset()) + gf_text(gf, "-") + "k " +
                       std::to_string(k) + "\nfmap " + fmap_desc + "\n");
        report.value = dispatch_gf_method(method, gf, k, fmap, force, report.terms).str();
    } else {
        throw ParseError("eval needs --hypermatrix or --gf");
    }
    report.wall_ms = elapsed_ms(start);
    print_report(report, !no_time);
    return 0;
}

int cmd_verify(const VerifyOptions& opt) {
    const VerifyOutcome outcome = run_verify(opt, std::cout);
    return outcome.ok() ? 0 : 1;
}

int cmd_paper_examples() {
    bool all_match = true;
    auto show = [&](const std::string& name, const std::vector<std::pair<std::string, Scalar>>& computed,
                    const Scalar& expected) {
        std::cout << name << "\n";
        bool match = true;
        for (const auto& [how, value] : computed) {
            std::cout << "  " << how << ": " << value.str() << "\n";
            match = match && value == expected;
        }
        std::cout << "  expected: " << expected.str() << "\n";
        std::cout << "  match: " << (match ? "yes" : "no") << "\n";
        if (!match) {
            for (const auto& [how, value] : computed)
                if (!(value == expected))
                    std::cout << "  diff (" << how << " - expected): " << (value - expected).str()
                              << "\n";
            all_match = false;
        }
    };

    {
        // Two-element chain 1 < 2 at order 4, symbolic entries.
        const Poset p = Poset::from_covers(2, {{0, 1}}, {"1", "2"});
        auto sl = std::make_shared<MeetSemilattice>(MeetSemilattice::from_poset(p));
        const GroundedFunction gf = symbolic_gf_in_F(sl, {0, 1});
        const FMap fmap = symbolic_fmap(2, 2);
        const Scalar brute = fdet_bruteforce(build_meet_hypermatrix(gf, 4), fmap);
        const Scalar closed = lindstrom_fdet(gf, 4, fmap);
        const Scalar frak = Scalar::variable("Frak(12_12)");
        const Scalar expected =
            frak * Scalar::variable("F1(1)") *
            (Scalar::variable("F2(2)") - Scalar::variable("F2(1)"));
        show("2-chain, k=4", {{"bruteforce", brute}, {"closed form", closed}}, expected);
    }
    {
        // Five-element semilattice, meet-closed subset {2,4,5} at order 3.
        const Poset p =
            Poset::from_covers(5, {{0, 1}, {1, 3}, {0, 2}, {2, 4}, {1, 4}}, {"1", "2", "3", "4", "5"});
        auto sl = std::make_shared<MeetSemilattice>(MeetSemilattice::from_poset(p));
        const GroundedFunction gf = symbolic_gf_in_f(sl, {1, 3, 4});
        const FMap fmap = symbolic_fmap(3, 1);
        const Scalar brute = fdet_bruteforce(build_meet_hypermatrix(gf, 3), fmap);
        const Scalar closed = meet_closed_fdet(gf, 3, fmap);
        auto v = [](const std::string& s) { return Scalar::variable(s); };
        const Scalar expected = v("Frak(123)") * (v("f2(2)") + v("f2(1)")) * v("f4(4)") *
                                (v("f5(5)") + v("f5(3)"));
        show("meet-closed subset {2,4,5}, k=3", {{"bruteforce", brute}, {"closed form", closed}},
             expected);
    }
    {
        // GCD determinant over {1..6}: totient product.
        std::vector<long> s(6);
        std::iota(s.begin(), s.end(), 1);
        const ArithmeticFunction id = ArithmeticFunction::named("id", 6);
        const Scalar d = det(slice(gcd_hypermatrix(s, 2, id), {}));
        Scalar expected(1);
        for (long i = 1; i <= 6; ++i) expected *= Scalar(euler_phi(i));
        show("gcd determinant over {1..6}", {{"determinant", d}}, expected);
    }
    return all_match ? 0 : 1;
}

int cmd_bench(const std::string& sizes_spec, const std::string& methods_spec,
              const std::string& out_path, std::uint64_t seed, const std::string& fmap_spec,
              bool force) {
    std::vector<std::pair<int, int>> sizes;
    {
        std::stringstream ss(sizes_spec);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            const auto x = tok.find('x');
            if (x == std::string::npos) throw ParseError("bad size '" + tok + "' (expected NxK)");
            try {
                sizes.emplace_back(std::stoi(tok.substr(0, x)), std::stoi(tok.substr(x + 1)));
            } catch (const std::exception&) {
                throw ParseError("bad size '" + tok + "' (expected NxK)");
            }
            if (sizes.back().first < 1 || sizes.back().second < 2)
                throw ParseError("sizes need n >= 1 and k >= 2");
        }
        if (sizes.empty()) throw ParseError("empty --sizes");
    }
    std::vector<std::string> methods;
    if (!methods_spec.empty()) {
        std::stringstream ss(methods_spec);
        std::string tok;
        while (std::getline(ss, tok, ',')) methods.push_back(tok);
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write '" + out_path + "'");
    out << "method,n,k,terms,wall_ms,value_digest\n";
    bool digests_agree = true;
    for (const auto& [n, k] : sizes) {
        // One deterministic instance per size, shared by all methods: uniform
        // random values on the divisor lattice of {1..n}, grounded at x.
        Rng rng(seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(n) * 1315423911ull +
                static_cast<std::uint64_t>(k));
        std::vector<long> ints(static_cast<std::size_t>(n));
        std::iota(ints.begin(), ints.end(), 1);
        const DivisorSemilattice dsl = divisor_semilattice(ints);
        std::vector<int> X(static_cast<std::size_t>(n));
        std::iota(X.begin(), X.end(), 0);
        const GroundedFunction gf = random_gf(rng, dsl.lattice, X, true, -5, 5, true);
        std::string first_digest;
        for (const auto& method : methods) {
            std::string fmap_desc;
            const FMap fmap = make_fmap(fmap_spec, k - 2, n, fmap_desc);
            const auto start = std::chrono::steady_clock::now();
            std::uint64_t terms = 0;
            const Scalar value = dispatch_gf_method(method, gf, k, fmap, force, terms);
            const double ms = elapsed_ms(start);
            const std::string digest = digest_hex(value.str());
            if (first_digest.empty())
                first_digest = digest;
            else if (digest != first_digest)
                digests_agree = false;
            out << method << "," << n << "," << k << "," << terms << ",";
            out.setf(std::ios::fixed);
            out.precision(3);
            out << ms << "," << digest << "\n";
        }
    }
    out.close();
    std::cout << "wrote " << out_path << "\n";
    if (!digests_agree) {
        std::cout << "value digests disagree across methods\n";
        return 1;
    }
    return 0;
}

int cmd_gcd(const std::string& set_spec, int k, const std::string& function_name,
            const std::string& method, const std::string& fmap_spec, const std::string& z_spec,
            bool force, bool no_time) {
    if (k < 2) throw ParseError("order must be at least 2");
    std::vector<long> S;
    {
        std::stringstream ss(set_spec);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                S.push_back(std::stol(tok));
            } catch (const std::exception&) {
                throw ParseError("bad --set entry '" + tok + "'");
            }
        }
        if (S.empty()) throw ParseError("empty --set");
    }
    const long bound = *std::max_element(S.begin(), S.end());
    const ArithmeticFunction F = ArithmeticFunction::named(function_name, bound);
    RunReport report;
    report.method = method;
    report.input_digest = digest_hex("gcd set=" + set_spec + " k=" + std::to_string(k) +
                                     " function=" + function_name + " z=" + z_spec + " fmap=" +
                                     fmap_spec + "\n");
    const auto start = std::chrono::steady_clock::now();
    std::string fmap_desc;
    if ((method == "brute" || method == "expand") && z_spec.empty()) {
        const Hypermatrix m = gcd_hypermatrix(S, k, F);
        const FMap fmap = make_fmap(fmap_spec, k - 2, m.n(), fmap_desc);
        if (method == "brute") {
            report.terms = bruteforce_term_count(m.n(), k);
            report.value = fdet_bruteforce(m, fmap, force).str();
        } else {
            report.terms = expansion_term_count(m.n(), k);
            report.value = fdet_expansion(m, fmap, force).str();
        }
    } else {
        // Closed forms view S inside the divisor lattice of its closure.
        const DivisorSemilattice dsl = divisor_semilattice(divisor_closure(S));
        const Poset& p = dsl.lattice->poset();
        std::vector<int> X;
        for (long v : S) X.push_back(dsl.index_of(v));
        std::vector<int> z_of = X;
        if (!z_spec.empty()) {
            std::stringstream ss(z_spec);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                const auto eq = tok.find('=');
                if (eq == std::string::npos)
                    throw ParseError("bad --z entry '" + tok + "' (expected x=z)");
                const int x = p.index_of_label(tok.substr(0, eq));
                const int z = p.index_of_label(tok.substr(eq + 1));
                if (x < 0 || z < 0) throw ParseError("unknown element in --z '" + tok + "'");
                for (std::size_t i = 0; i < X.size(); ++i)
                    if (X[i] == x) z_of[i] = z;
            }
        }
        std::vector<std::vector<Scalar>> rows;
        for (std::size_t i = 0; i < X.size(); ++i) {
            std::vector<Scalar> row;
            row.reserve(static_cast<std::size_t>(p.n()));
            for (int e = 0; e < p.n(); ++e) row.push_back(F(dsl.values[static_cast<std::size_t>(e)]));
            rows.push_back(std::move(row));
        }
        const GroundedFunction gf =
            GroundedFunction::make(dsl.lattice, std::move(X), std::move(z_of), std::move(rows));
        const FMap fmap = make_fmap(fmap_spec, k - 2, gf.size(), fmap_desc);
        report.value = dispatch_gf_method(method, gf, k, fmap, force, report.terms).str();
    }
    report.wall_ms = elapsed_ms(start);
    print_report(report, !no_time);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact hyperdeterminants and closed forms on meet semilattices"};
    app.require_subcommand(1);

    // lattice
    auto* lattice_cmd = app.add_subcommand("lattice", "validate or describe a poset file");
    std::string lattice_mode, lattice_file;
    bool lattice_mobius = false;
    lattice_cmd->add_option("mode", lattice_mode, "check or info")
        ->required()
        ->check(CLI::IsMember({"check", "info"}));
    lattice_cmd->add_option("file", lattice_file, "poset file")->required();
    lattice_cmd->add_flag("--mobius", lattice_mobius, "print the Moebius matrix");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a determinant by one method");
    std::string eval_method, eval_hm, eval_gf, eval_fmap = "sign";
    int eval_k = 2;
    bool eval_force = false, eval_no_time = false;
    eval_cmd->add_option("--method", eval_method, "evaluation method")
        ->required()
        ->check(CLI::IsMember(kGfMethods));
    eval_cmd->add_option("--hypermatrix", eval_hm, "hypermatrix file (brute/expand)");
    eval_cmd->add_option("--gf", eval_gf, "grounded-function file");
    eval_cmd->add_option("-k,--order", eval_k, "hypermatrix order for --gf inputs");
    eval_cmd->add_option("--fmap", eval_fmap, "sign, one or table:<file>");
    eval_cmd->add_flag("--force", eval_force, "override the enumeration guard");
    eval_cmd->add_flag("--no-time", eval_no_time, "omit wall_ms for byte-stable output");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the cross-method property suite");
    VerifyOptions vopt;
    verify_cmd->add_option("--seed", vopt.seed, "random seed");
    verify_cmd->add_option("--trials", vopt.trials, "trials per property");
    verify_cmd->add_option("--nmax", vopt.nmax, "largest hypermatrix side");
    verify_cmd->add_option("--kmax", vopt.kmax, "largest hypermatrix order");
    verify_cmd->add_flag("--inject-fault", vopt.inject_fault, "")->group("");

    // paper-examples
    auto* paper_cmd = app.add_subcommand("paper-examples",
                                         "reproduce the symbolic worked examples and Smith's determinant");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "benchmark methods into a CSV file");
    std::string bench_sizes, bench_methods, bench_out, bench_fmap = "sign";
    std::uint64_t bench_seed = 1;
    bool bench_force = false;
    bench_cmd->add_option("--sizes", bench_sizes, "comma-separated NxK pairs, e.g. 4x3,3x4")
        ->required();
    bench_cmd->add_option("--methods", bench_methods, "comma-separated method names");
    bench_cmd->add_option("--out", bench_out, "CSV output path")->required();
    bench_cmd->add_option("--seed", bench_seed, "instance seed");
    bench_cmd->add_option("--fmap", bench_fmap, "sign, one or table:<file>");
    bench_cmd->add_flag("--force", bench_force, "override the enumeration guard");

    // gcd
    auto* gcd_cmd = app.add_subcommand("gcd", "evaluate a GCD hypermatrix built from an integer set");
    std::string gcd_set, gcd_function = "id", gcd_method, gcd_fmap = "sign", gcd_z;
    int gcd_k = 2;
    bool gcd_force = false, gcd_no_time = false;
    gcd_cmd->add_option("--set", gcd_set, "comma-separated positive integers")->required();
    gcd_cmd->add_option("-k,--order", gcd_k, "hypermatrix order");
    gcd_cmd->add_option("--function", gcd_function, "id, one, phi, mu, tau or sigma");
    gcd_cmd->add_option("--method", gcd_method, "evaluation method")
        ->required()
        ->check(CLI::IsMember(kGfMethods));
    gcd_cmd->add_option("--fmap", gcd_fmap, "sign, one or table:<file>");
    gcd_cmd->add_option("--z", gcd_z, "grounding overrides, e.g. 4=1,5=2");
    gcd_cmd->add_flag("--force", gcd_force, "override the enumeration guard");
    gcd_cmd->add_flag("--no-time", gcd_no_time, "omit wall_ms for byte-stable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*lattice_cmd) return cmd_lattice(lattice_mode, lattice_file, lattice_mobius);
        if (*eval_cmd)
            return cmd_eval(eval_method, eval_hm, eval_gf, eval_k, eval_fmap, eval_force,
                            eval_no_time);
        if (*verify_cmd) return cmd_verify(vopt);
        if (*paper_cmd) return cmd_paper_examples();
        if (*bench_cmd)
            return cmd_bench(bench_sizes, bench_methods, bench_out, bench_seed, bench_fmap,
                             bench_force);
        if (*gcd_cmd)
            return cmd_gcd(gcd_set, gcd_k, gcd_function, gcd_method, gcd_fmap, gcd_z, gcd_force,
                           gcd_no_time);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
