// weilchar: Weil indices, traces of the Weil representation, character tables
// and the verification harness.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.

#include "weilchar/charformula.hpp"
#include "weilchar/error.hpp"
#include "weilchar/schrodinger.hpp"
#include "weilchar/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace weilchar;
using nlohmann::json;

namespace {

constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr std::uint64_t kMaxSectionCount = 343;
constexpr std::uint64_t kTableCap = 100000;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double clean(double x) { return std::abs(x) < 1e-12 ? 0.0 : x; }

Complex clean(Complex z) { return {clean(z.real()), clean(z.imag())}; }

json complex_json(Complex z) { return {{"re", clean(z.real())}, {"im", clean(z.imag())}}; }

json class_json(const SquareClass& s) { return {{"rep", s.rep()}, {"is_square", s.is_square()}}; }

std::string complex_text(Complex z) {
    z = clean(z);
    std::ostringstream out;
    out << std::setprecision(12) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return out.str();
}

std::vector<long long> parse_entries(const std::string& text) {
    std::vector<long long> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
            if (used != item.size()) throw UsageError("bad matrix entry '" + item + "'");
        } catch (const std::logic_error&) {
            throw UsageError("bad matrix entry '" + item + "'");
        }
    }
    return out;
}

std::uint64_t section_count(int p, std::size_t n) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < n; ++i) count *= static_cast<std::uint64_t>(p);
    return count;
}

void require_buildable(int p, std::size_t n) {
    if (n == 0) throw UsageError("--n must be at least 1");
    if (n > 6 || section_count(p, n) > kMaxSectionCount)
        throw UsageError("p^n must be at most " + std::to_string(kMaxSectionCount));
}

AdditiveCharacter make_character(const PrimeField& f, int scale) {
    if (f.reduce(scale) == 0) throw UsageError("--psi-scale must be nonzero mod p");
    return AdditiveCharacter(f, scale);
}

SpElement parse_element(const SymplecticSpace& v, const std::string& text) {
    const auto entries = parse_entries(text);
    const std::size_t d = v.dim();
    if (entries.size() != d * d)
        throw UsageError("--g needs " + std::to_string(d * d) + " comma-separated entries");
    const FpMatrix m = FpMatrix::from_values(v.field(), d, d, entries);
    if (!is_symplectic(v, m)) throw NotSymplectic();
    return {v, m};
}

Lagrangian parse_lagrangian(const SymplecticSpace& v, const std::string& text) {
    if (text.empty()) return Lagrangian::standard(v);
    const auto entries = parse_entries(text);
    const std::size_t n = v.half_dim();
    if (entries.size() != n * v.dim())
        throw UsageError("--ell needs " + std::to_string(n * v.dim()) + " entries (n rows of length 2n)");
    const FpMatrix rows = FpMatrix::from_values(v.field(), n, v.dim(), entries);
    const Subspace s = Subspace::span(rows);
    if (!Lagrangian::is_lagrangian(v, s)) throw UsageError("--ell does not span a Lagrangian");
    return {v, s};
}

std::string flatten(const FpMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out += (out.empty() ? "" : " ") + std::to_string(m(i, j));
    return out;
}

// ---------------------------------------------------------------------------

struct GammaArgs {
    int p = 5;
    long long a = 1;
    int psi_scale = 1;
    std::string format = "json";
};

int cmd_gamma(const GammaArgs& args) {
    const PrimeField f(args.p);
    const AdditiveCharacter c = make_character(f, args.psi_scale);
    const int a = f.reduce(args.a);
    if (a == 0) throw UsageError("--a must be nonzero mod p");
    const Complex g = clean(c.gamma(a));
    const int chi = static_cast<int>(std::lround(c.chi(a).real()));
    if (args.format == "json") {
        std::cout << json{{"p", args.p}, {"a", a}, {"gamma", complex_json(g)}, {"chi", chi}}.dump(2) << "\n";
    } else if (args.format == "csv") {
        std::cout << "p,a,gamma_re,gamma_im,chi\n"
                  << args.p << "," << a << "," << std::setprecision(15) << g.real() << "," << g.imag() << "," << chi
                  << "\n";
    } else {
        std::cout << "gamma(" << a << ") = " << complex_text(g) << "\nchi(" << a << ") = " << chi << "\n";
    }
    return 0;
}

struct TraceArgs {
    int p = 5;
    std::size_t n = 1;
    std::string g;
    std::string lift = "plus";
    std::string ell;
    int psi_scale = 1;
    std::string format = "json";
};

int cmd_trace(const TraceArgs& args) {
    const PrimeField f(args.p);
    require_buildable(args.p, args.n);
    const AdditiveCharacter c = make_character(f, args.psi_scale);
    const SymplecticSpace v = SymplecticSpace::standard(f, args.n);
    const SpElement g = parse_element(v, args.g);
    const Lagrangian l = parse_lagrangian(v, args.ell);
    const int sign = args.lift == "minus" ? -1 : 1;
    const MpElement e = MpElement::lift(c, g, sign);
    const double scale = static_cast<double>(section_count(args.p, args.n));

    const Complex oracle = clean(trace_oracle(e, l));
    const Complex t1 = clean(theorem_1a(c, g));
    const Complex t2 = clean(theorem_2b(e, l));
    const bool ok_1a = approx_eq(oracle, static_cast<double>(sign) * t1, scale);
    const bool ok_2b = approx_eq(oracle, t2, scale);
    const bool agree = ok_1a && ok_2b;

    if (args.format == "json") {
        json out{{"p", args.p},
                 {"n", args.n},
                 {"g", parse_entries(args.g)},
                 {"lift", args.lift},
                 {"dim_ker", fixed_space(g).dim()},
                 {"det_sigma", class_json(sigma_det(g))},
                 {"oracle", complex_json(oracle)},
                 {"theorem_1a", complex_json(t1)},
                 {"theorem_2b", complex_json(t2)},
                 {"oracle_matches_1a", ok_1a},
                 {"oracle_matches_2b", ok_2b},
                 {"agree", agree}};
        std::cout << out.dump(2) << "\n";
    } else if (args.format == "csv") {
        std::cout << std::setprecision(15) << "oracle_re,oracle_im,thm1a_re,thm1a_im,thm2b_re,thm2b_im,agree\n"
                  << oracle.real() << "," << oracle.imag() << "," << t1.real() << "," << t1.imag() << ","
                  << t2.real() << "," << t2.imag() << "," << (agree ? "true" : "false") << "\n";
    } else {
        std::cout << "trace (oracle) = " << complex_text(oracle) << "\n"
                  << "Theorem 1A     = " << complex_text(t1) << (sign < 0 ? "  (split lift; compared with sign -1)" : "")
                  << "\nTheorem 2B     = " << complex_text(t2) << "\n"
                  << "agree          = " << (agree ? "yes" : "no") << "\n";
    }
    return agree ? 0 : kMismatch;
}

struct TableArgs {
    int p = 3;
    std::size_t n = 1;
    int psi_scale = 1;
    std::uint64_t seed = 1;
    std::size_t samples = 100;
    std::string format = "csv";
};

int cmd_table(const TableArgs& args) {
    const PrimeField f(args.p);
    require_buildable(args.p, args.n);
    const AdditiveCharacter c = make_character(f, args.psi_scale);
    const SymplecticSpace v = SymplecticSpace::standard(f, args.n);
    std::vector<SpElement> elems;
    const bool exhaustive = sp_order(args.p, args.n) <= kTableCap;
    if (exhaustive) {
        elems = all_sp(v, kTableCap);
    } else {
        Rng rng(args.seed);
        for (std::size_t i = 0; i < args.samples; ++i) elems.push_back(random_sp(v, rng));
    }
    const double scale = static_cast<double>(section_count(args.p, args.n));
    bool all_agree = true;
    json rows = json::array();
    if (args.format == "csv") std::cout << "g,dim_ker,det_sigma_class,trace_re,trace_im,formula_used\n";
    std::cout << std::setprecision(15);
    for (const auto& g : elems) {
        const Complex tr = clean(trace_oracle(mp_split(c, g)));
        const Complex formula = theorem_1a(c, g);
        all_agree = all_agree && approx_eq(tr, formula, scale);
        const std::string used = args.n == 1 ? "sl2 case " + sl2_case(c, g).label : "theorem 1A";
        const std::size_t dk = fixed_space(g).dim();
        const SquareClass ds = sigma_det(g);
        if (args.format == "csv") {
            std::cout << flatten(g.matrix()) << "," << dk << "," << ds.rep() << "," << tr.real() << "," << tr.imag()
                      << "," << used << "\n";
        } else if (args.format == "json") {
            rows.push_back({{"g", flatten(g.matrix())},
                            {"dim_ker", dk},
                            {"det_sigma_class", class_json(ds)},
                            {"trace", complex_json(tr)},
                            {"formula_used", used}});
        } else {
            std::cout << "[" << flatten(g.matrix()) << "]  dim ker " << dk << "  det sigma " << ds.rep() << "  trace "
                      << complex_text(tr) << "  (" << used << ")\n";
        }
    }
    if (args.format == "json")
        std::cout << json{{"p", args.p}, {"n", args.n}, {"exhaustive", exhaustive}, {"rows", rows}}.dump(2) << "\n";
    if (!all_agree) std::cerr << "warning: an oracle trace disagrees with Theorem 1A\n";
    return all_agree ? 0 : kMismatch;
}

struct VerifyArgs {
    std::vector<int> primes{3, 5, 7};
    std::vector<std::size_t> dims{1, 2};
    std::uint64_t seed = 1;
    std::size_t samples = 20;
    int psi_scale = 1;
    std::uint64_t max_enum = 100000;
    std::string format = "text";
    bool fault = false;
};

struct SuiteResult {
    int p;
    std::size_t n;
    CheckReport report;
};

std::vector<SuiteResult> run_verify(const VerifyArgs& args) {
    std::vector<SuiteResult> out;
    SuiteOptions opt;
    opt.seed = args.seed;
    opt.psi_scale = args.psi_scale;
    opt.max_enum = args.max_enum;
    opt.cocycle_twist = args.fault ? Complex(-1.0) : Complex(1.0);
    for (int p : args.primes) {
        const PrimeField f(p);
        make_character(f, args.psi_scale);
        out.push_back({p, 0, suite_weil_index(p, args.samples, opt)});
        for (std::size_t n : args.dims) {
            require_buildable(p, n);
            auto add = [&](CheckReport r) { out.push_back({p, n, std::move(r)}); };
            const std::uint64_t sp = sp_order(p, n);
            const std::uint64_t gr = lagrangian_count(p, n);
            const bool enumerable_sp = sp <= 20000;
            const bool small_mp = 4 * sp * sp <= 20000;
            const bool enumerable_gr = gr <= args.max_enum;
            if (n == 1) add(suite_sl2_table(p, opt));
            if (enumerable_sp) add(suite_exhaustive_traces(p, n, opt));
            if (small_mp) {
                add(suite_homomorphism(p, n, 0, opt));
                add(suite_embedding(p, n, 0, opt));
            }
            if (enumerable_sp && enumerable_gr && sp * gr <= 20000) add(suite_structural(p, n, 0, opt));
            if (enumerable_gr && 2 * sp * gr <= 20000) add(suite_theta(p, n, 0, opt));
            if (args.samples == 0) continue;
            add(suite_sampled_traces(p, n, args.samples, opt));
            if (!small_mp) {
                add(suite_homomorphism(p, n, args.samples, opt));
                add(suite_embedding(p, n, args.samples, opt));
            }
            add(suite_group_laws(p, n, args.samples, opt));
            for (std::size_t k : {3, 4}) add(suite_composition(p, n, args.samples, k, opt));
            for (std::size_t k : {3, 4, 5}) add(suite_rank_disc(p, n, args.samples, k, opt));
            add(suite_m_product(p, n, args.samples, opt));
            add(suite_structural(p, n, args.samples, opt));
            if (enumerable_gr && gr <= 1000) add(suite_theta(p, n, args.samples, opt));
        }
    }
    return out;
}

// The scalar Weil index suite has no half-dimension.
std::string dim_text(std::size_t n) { return n == 0 ? "-" : std::to_string(n); }

int cmd_verify(const VerifyArgs& args) {
    const auto results = run_verify(args);
    const SuiteResult* first = nullptr;
    for (const auto& r : results)
        if (!r.report.pass && first == nullptr) first = &r;

    if (args.format == "json") {
        json suites = json::array();
        for (const auto& r : results)
            suites.push_back({{"suite", r.report.name},
                              {"p", r.p},
                              {"n", r.n == 0 ? json(nullptr) : json(r.n)},
                              {"pass", r.report.pass},
                              {"cases", r.report.cases},
                              {"witness", r.report.witness}});
        json out{{"seed", args.seed}, {"samples", args.samples}, {"pass", first == nullptr}, {"suites", suites}};
        if (first) out["first_counterexample"] = {{"suite", first->report.name}, {"p", first->p},
                                                  {"n", first->n == 0 ? json(nullptr) : json(first->n)},
                                                  {"witness", first->report.witness}};
        std::cout << out.dump(2) << "\n";
    } else if (args.format == "csv") {
        std::cout << "suite,p,n,pass,cases,witness\n";
        for (const auto& r : results)
            std::cout << "\"" << r.report.name << "\"," << r.p << "," << dim_text(r.n) << "," << (r.report.pass ? "true" : "false")
                      << "," << r.report.cases << ",\"" << r.report.witness << "\"\n";
    } else {
        for (const auto& r : results)
            std::cout << (r.report.pass ? "PASS  " : "FAIL  ") << "p=" << r.p << " n=" << dim_text(r.n) << "  " << r.report.name
                      << " (" << r.report.cases << " checks)\n";
        if (first)
            std::cout << "first counterexample [" << first->report.name << ", p=" << first->p << ", n=" << dim_text(first->n)
                      << "]: " << first->report.witness << "\n";
        else
            std::cout << "all suites passed\n";
    }
    return first == nullptr ? 0 : kMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weil representation of Mp(V) over F_p: explicit matrices and character formulas"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"text", "json", "csv"};

    GammaArgs gamma_args;
    auto* gamma = app.add_subcommand("gamma", "Weil index gamma(a) and chi(a)");
    gamma->add_option("--p", gamma_args.p, "odd prime, 3..97")->required();
    gamma->add_option("--a", gamma_args.a, "nonzero residue")->required();
    gamma->add_option("--psi-scale", gamma_args.psi_scale, "psi(x) = exp(2 pi i scale x / p)");
    gamma->add_option("--format", gamma_args.format)->check(CLI::IsMember(formats));

    TraceArgs trace_args;
    auto* trace = app.add_subcommand("trace", "trace of rho(g, t) against Theorems 1A and 2B");
    trace->add_option("--p", trace_args.p, "odd prime, 3..97")->required();
    trace->add_option("--n", trace_args.n, "half-dimension of V");
    trace->add_option("--g", trace_args.g, "row-major comma-separated entries of g")->required();
    trace->add_option("--lift", trace_args.lift, "which of the two lifts")->check(CLI::IsMember({"plus", "minus"}));
    trace->add_option("--ell", trace_args.ell, "Lagrangian for the model: n row-major rows of length 2n");
    trace->add_option("--psi-scale", trace_args.psi_scale);
    trace->add_option("--format", trace_args.format)->check(CLI::IsMember(formats));

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "character table of the split lift over Sp(V)");
    table->add_option("--p", table_args.p)->required();
    table->add_option("--n", table_args.n);
    table->add_option("--psi-scale", table_args.psi_scale);
    table->add_option("--seed", table_args.seed, "seed for sampling when Sp(V) is too large");
    table->add_option("--samples", table_args.samples, "rows to sample when Sp(V) is too large");
    table->add_option("--format", table_args.format)->check(CLI::IsMember(formats));

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "run the invariant suites");
    verify->add_option("--p", verify_args.primes, "comma-separated primes")->delimiter(',');
    verify->add_option("--n", verify_args.dims, "comma-separated half-dimensions")->delimiter(',');
    verify->add_option("--seed", verify_args.seed);
    verify->add_option("--samples", verify_args.samples, "random cases per sampled suite; 0 runs exhaustive suites only");
    verify->add_option("--psi-scale", verify_args.psi_scale);
    verify->add_option("--max-enum", verify_args.max_enum, "cap on enumerated Lagrangians");
    verify->add_option("--format", verify_args.format)->check(CLI::IsMember(formats));
    verify->add_flag("--inject-cocycle-fault", verify_args.fault, "multiply every product cocycle by -1")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*gamma) return cmd_gamma(gamma_args);
        if (*trace) return cmd_trace(trace_args);
        if (*table) return cmd_table(table_args);
        if (*verify) return cmd_verify(verify_args);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const NotSymplectic& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidModulus& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const EnumerationTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
