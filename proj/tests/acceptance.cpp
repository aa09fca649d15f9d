// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "weilchar/charformula.hpp"
#include "weilchar/schrodinger.hpp"
#include "weilchar/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace weilchar;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::function<CheckReport()> run;
};

SuiteOptions options(std::uint64_t seed) {
    SuiteOptions opt;
    opt.seed = seed;
    return opt;
}

CheckReport criterion_sl2_exhaustive() {
    CheckReport r("SL2 exhaustive");
    for (int p : {3, 5, 7, 11}) r.merge(suite_exhaustive_traces(p, 1, options(1)));
    return r;
}

CheckReport criterion_sl2_table() {
    CheckReport r("SL2 table");
    for (int p : {3, 5, 7, 11, 17}) r.merge(suite_sl2_table(p, options(2)));
    // chi(-2) against the residue of p mod 8, as literal expected traces of [[0,1],[-1,0]].
    const std::vector<std::pair<int, double>> expected{{5, -1.0}, {7, -1.0}, {11, 1.0}, {17, 1.0}};
    for (const auto& [p, value] : expected) {
        const PrimeField f(p);
        const AdditiveCharacter c(f);
        const SymplecticSpace v = SymplecticSpace::standard(f, 1);
        const std::vector<long long> w{0, 1, -1, 0};
        const SpElement g(v, FpMatrix::from_values(f, 2, 2, w));
        const Complex tr = trace_oracle(mp_split(c, g));
        r.record(approx_eq(tr, value, p) && approx_eq(theorem_1a(c, g), value, p),
                 "trace of [[0,1],[-1,0]] at p=" + std::to_string(p));
    }
    return r;
}

CheckReport criterion_sp4_sampled() {
    CheckReport r("Sp4 sampled");
    for (int p : {3, 5, 7}) r.merge(suite_sampled_traces(p, 2, 200, options(3 + static_cast<std::uint64_t>(p))));
    return r;
}

CheckReport criterion_homomorphism() {
    CheckReport r("homomorphism");
    r.merge(suite_homomorphism(3, 1, 0, options(4)));
    r.merge(suite_homomorphism(5, 1, 1000, options(41)));
    r.merge(suite_homomorphism(7, 1, 1000, options(42)));
    r.merge(suite_homomorphism(3, 2, 1000, options(43)));
    return r;
}

CheckReport criterion_composition() {
    CheckReport r("composition law");
    const std::vector<std::pair<int, std::size_t>> cases{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}};
    std::uint64_t seed = 50;
    for (const auto& [p, n] : cases)
        for (std::size_t k : {3, 4}) r.merge(suite_composition(p, n, 100, k, options(seed++)));
    return r;
}

CheckReport criterion_rank_disc() {
    CheckReport r("rank and discriminant");
    std::uint64_t seed = 60;
    for (std::size_t k : {3, 4, 5})
        for (int p : {3, 5, 7})
            for (std::size_t n : {1, 2}) r.merge(suite_rank_disc(p, n, 100, k, options(seed++)));
    return r;
}

CheckReport criterion_m_product() {
    CheckReport r("product of m");
    std::uint64_t seed = 70;
    for (int p : {3, 5, 7})
        for (std::size_t n : {1, 2}) r.merge(suite_m_product(p, n, 200, options(seed++)));
    return r;
}

CheckReport criterion_theta() {
    CheckReport r("Theta");
    r.merge(suite_theta(3, 1, 0, options(80)));
    r.merge(suite_theta(5, 1, 0, options(81)));
    r.merge(suite_theta(3, 2, 60, options(82)));
    r.merge(suite_embedding(3, 1, 0, options(83)));
    return r;
}

CheckReport criterion_structural() {
    CheckReport r("structural");
    r.merge(suite_structural(5, 1, 0, options(90)));
    r.merge(suite_structural(3, 2, 200, options(91)));
    return r;
}

CheckReport criterion_weil_index() {
    CheckReport r("Weil index");
    for (int p = 3; p <= 97; ++p)
        if (is_prime(p)) r.merge(suite_weil_index(p, 20, options(100 + static_cast<std::uint64_t>(p))));
    return r;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "SL2(F_p) exhaustive: oracle = Theorem 1A = Theorem 2B, p in {3,5,7,11}, tol 1e-8 p", criterion_sl2_exhaustive},
        {2, "SL2 case table (i)-(iv), elements (a)-(c), chi(-2) for p in {5,7,11,17}", criterion_sl2_table},
        {3, "Sp4(F_p) sampled three-way identity with forced singular cases, p in {3,5,7}, tol 1e-8 p^2",
         criterion_sp4_sampled},
        {4, "rho homomorphism: exhaustive Mp p=3 n=1; 1000 pairs p=5,7 n=1 and p=3 n=2, tol 1e-8 p^n",
         criterion_homomorphism},
        {5, "intertwiner loops of length 3, 4 equal gamma(-tau) I, tol 1e-8", criterion_composition},
        {6, "Maslov representative: exact rank and discriminant for 3-, 4-, 5-gons", criterion_rank_disc},
        {7, "gamma(tau) = product of m with random orientations", criterion_m_product},
        {8, "Theta independent of l, equals diagonal evaluation; embedding homomorphism", criterion_theta},
        {9, "q, q' structure: symmetry, Phi isometry, Maslov class, rank/disc, kernel dims, scalar identity",
         criterion_structural},
        {10, "Weil index: character, square classes, gamma(q) formula, fast vs summed", criterion_weil_index},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        CheckReport r;
        try {
            r = c.run();
        } catch (const std::exception& ex) {
            r.pass = false;
            r.witness = std::string("exception: ") + ex.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && r.pass;
        std::printf("[%s] criterion %d: %s (%zu checks, %.1f s)\n", r.pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                    r.cases, secs);
        if (!r.pass) std::printf("       first failure: %s\n", r.witness.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
