#include "weilchar/verify.hpp"

#include "weilchar/charformula.hpp"
#include "weilchar/error.hpp"
#include "weilchar/maslov.hpp"
#include "weilchar/quadform.hpp"
#include "weilchar/schrodinger.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace weilchar {

namespace {

std::string cx(Complex z) {
    std::ostringstream out;
    out.precision(12);
    out << "(" << z.real() << "," << z.imag() << ")";
    return out.str();
}

std::string mat(const SpElement& g) { return g.matrix().to_string(); }

double power(int p, std::size_t k) { return std::pow(static_cast<double>(p), static_cast<double>(k)); }

// Random Lagrangian containing the isotropic rows of `start`.
Lagrangian lagrangian_through(const SymplecticSpace& v, Rng& rng, std::vector<FpVector> rows) {
    const PrimeField& f = v.field();
    while (rows.size() < v.half_dim()) {
        FpVector x(v.dim());
        for (auto& c : x) c = rng.residue(f.p());
        bool ok = !Subspace::span(f, v.dim(), rows).contains(x);
        for (const auto& r : rows) ok = ok && v.pair(r, x) == 0;
        if (ok) rows.push_back(x);
    }
    return {v, Subspace::span(f, v.dim(), rows)};
}

// Tuples mixing repeats, partial overlaps and generic position.
std::vector<Lagrangian> random_tuple(const SymplecticSpace& v, Rng& rng, std::size_t k) {
    std::vector<Lagrangian> out;
    const PrimeField& f = v.field();
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t mode = out.empty() ? 3 : rng.index(4);
        if (mode == 0) {
            out.push_back(out[rng.index(out.size())]);
        } else if (mode == 1) {
            const Lagrangian& prev = out[rng.index(out.size())];
            FpVector coeffs(prev.dim());
            do {
                for (auto& c : coeffs) c = rng.residue(f.p());
            } while (is_zero(coeffs));
            out.push_back(lagrangian_through(v, rng, {combine(prev.basis(), coeffs)}));
        } else {
            out.push_back(random_lagrangian(v, rng));
        }
    }
    return out;
}

Orientation random_orientation(const Lagrangian& l, Rng& rng) {
    const PrimeField& f = l.space().field();
    FpMatrix m(f, l.dim(), l.dim());
    do {
        for (std::size_t i = 0; i < l.dim(); ++i)
            for (std::size_t j = 0; j < l.dim(); ++j) m.set(i, j, rng.residue(f.p()));
    } while (m.determinant() == 0);
    return {l, m * l.basis()};
}

std::vector<MpElement> all_mp(const AdditiveCharacter& c, const SymplecticSpace& v, std::uint64_t cap) {
    std::vector<MpElement> out;
    for (const auto& g : all_sp(v, cap)) {
        out.push_back(mp_split(c, g));
        out.push_back(out.back().negated());
    }
    return out;
}

MpElement random_mp(const AdditiveCharacter& c, const SymplecticSpace& v, Rng& rng) {
    const MpElement e = mp_split(c, random_sp(v, rng));
    return rng.index(2) == 0 ? e : e.negated();
}

double max_entry_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

std::string tuple_text(const std::vector<Lagrangian>& ls) {
    std::string out;
    for (const auto& l : ls) out += l.basis().to_string() + " ";
    return out;
}

SpElement sl2(const SymplecticSpace& v, int a, int b, int c, int d) {
    const std::vector<long long> vals{a, b, c, d};
    return {v, FpMatrix::from_values(v.field(), 2, 2, vals)};
}

} // namespace

std::size_t worker_count() {
    if (const char* env = std::getenv("WEILCHAR_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

CheckReport parallel_reports(const std::string& name, std::size_t count,
                             const std::function<CheckReport(std::size_t)>& fn) {
    std::vector<CheckReport> parts(count);
    const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(count, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) parts[i] = fn(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = next++; i < count; i = next++) parts[i] = fn(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    CheckReport out{name};
    for (const auto& part : parts) out.merge(part);
    return out;
}

std::uint64_t item_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

SpElement sp_block_sum(const SpElement& a, const SpElement& b) {
    const std::size_t n1 = a.space().half_dim();
    const std::size_t n2 = b.space().half_dim();
    const std::size_t n = n1 + n2;
    const PrimeField& f = a.field();
    auto place_a = [&](std::size_t i) { return i < n1 ? i : n + (i - n1); };
    auto place_b = [&](std::size_t i) { return i < n2 ? n1 + i : n + n1 + (i - n2); };
    FpMatrix m(f, 2 * n, 2 * n);
    for (std::size_t i = 0; i < 2 * n1; ++i)
        for (std::size_t j = 0; j < 2 * n1; ++j) m.set(place_a(i), place_a(j), a.matrix()(i, j));
    for (std::size_t i = 0; i < 2 * n2; ++i)
        for (std::size_t j = 0; j < 2 * n2; ++j) m.set(place_b(i), place_b(j), b.matrix()(i, j));
    return {SymplecticSpace::standard(f, n), std::move(m)};
}

SpElement forced_sp4(const PrimeField& f, int kind, Rng& rng) {
    const SymplecticSpace v2 = SymplecticSpace::standard(f, 1);
    const SymplecticSpace v4 = SymplecticSpace::standard(f, 2);
    const SpElement one = SpElement::identity(v2);
    auto nonzero = [&] { return 1 + rng.residue(f.p() - 1); };
    auto unipotent = [&] { return sl2(v2, 1, nonzero(), 0, 1); };
    // An element of SL_2 with no fixed vector.
    auto generic = [&] {
        while (true) {
            SpElement g = random_sp(v2, rng);
            if (fixed_space(g).dim() == 0) return g;
        }
    };
    SpElement g = SpElement::identity(v4);
    switch (kind) {
    case 0: return g;
    case 1: g = sp_block_sum(one, unipotent()); break;
    case 2: g = sp_block_sum(unipotent(), generic()); break;
    default: g = rng.index(2) == 0 ? sp_block_sum(one, generic()) : sp_block_sum(unipotent(), unipotent()); break;
    }
    const SpElement h = random_sp(v4, rng);
    return h * g * h.inverse();
}

CheckReport suite_exhaustive_traces(int p, std::size_t n, const SuiteOptions& opt) {
    const PrimeField f(p);
    const AdditiveCharacter c(f, opt.psi_scale);
    const SymplecticSpace v = SymplecticSpace::standard(f, n);
    const auto group = all_sp(v, opt.max_enum);
    const double scale = power(p, n);
    return parallel_reports("exhaustive trace identity", group.size(), [&](std::size_t i) {
        CheckReport r;
        const SpElement& g = group[i];
        const MpElement e = mp_split(c, g);
        const Complex oracle = trace_oracle(e);
        const Complex t1 = theorem_1a(c, g);
        const Complex t2 = theorem_2b(e);
        r.record(approx_eq(oracle, t1, scale) && approx_eq(t2, t1, scale),
                 "g=" + mat(g) + " oracle=" + cx(oracle) + " 1A=" + cx(t1) + " 2B=" + cx(t2));
        r.record(approx_eq(theorem_1a_chi(c, g), t1, scale), "chi form differs at g=" + mat(g));
        const double modulus = std::pow(static_cast<double>(p), 0.5 * static_cast<double>(fixed_space(g).dim()));
        r.record(std::abs(std::abs(t1) - modulus) <= kDefaultTolerance * scale, "modulus differs at g=" + mat(g));
        return r;
    });
}

CheckReport suite_sl2_table(int p, const SuiteOptions& opt) {
    const PrimeField f(p);
    const AdditiveCharacter c(f, opt.psi_scale);
    const SymplecticSpace v = SymplecticSpace::standard(f, 1);
    const auto group = all_sp(v, opt.max_enum);
    const double scale = p;
    CheckReport out = parallel_reports("SL2 case table", group.size(), [&](std::size_t i) {
        CheckReport r;
        const SpElement& g = group[i];
        const Sl2Case k = sl2_case(c, g);
        const Complex oracle = trace_oracle(mp_split(c, g));
        r.record(sigma_det(g) == k.det_sigma, "case " + k.label + " det sigma differs at g=" + mat(g));
        r.record(approx_eq(oracle, k.trace, scale) && approx_eq(theorem_1a(c, g), k.trace, scale),
                 "case " + k.label + " trace " + cx(oracle) + " expected " + cx(k.trace) + " at g=" + mat(g));
        return r;
    });
    CheckReport std_elems{"standard elements"};
    const double root_p = std::sqrt(static_cast<double>(p));
    for (int a = 2; a < p; ++a)
        for (int b = 0; b < p; ++b) {
            const SpElement g = sl2(v, a, b, 0, f.inv(a));
            std_elems.record(approx_eq(trace_oracle(mp_split(c, g)), c.chi(a), scale),
                             "(a) fails at g=" + mat(g));
        }
    for (int b = 1; b < p; ++b) {
        const SpElement g = sl2(v, 1, b, 0, 1);
        std_elems.record(approx_eq(trace_oracle(mp_split(c, g)), root_p * c.gamma_one_pow(1) * c.chi(b), scale),
                         "(b) fails at g=" + mat(g));
    }
    const SpElement w = sl2(v, 0, 1, -1, 0);
    const Complex tw = trace_oracle(mp_split(c, w));
    const double expected = (p % 8 == 1 || p % 8 == 3) ? 1.0 : -1.0;
    std_elems.record(approx_eq(tw, c.chi(-2), scale) && approx_eq(c.chi(-2), expected),
                     "(c) trace " + cx(tw) + " expected chi(-2) = " + std::to_string(expected));
    std_elems.record(approx_eq(trace_oracle(MpElement::identity(c, v)), static_cast<double>(p), scale),
                     "(iv) identity trace is not p");
    out.merge(std_elems);
    return out;
}

CheckReport suite_sampled_traces(int p, std::size_t n, std::size_t samples, const SuiteOptions& opt) {
    const PrimeField f(p);
    const AdditiveCharacter c(f, opt.psi_scale);
    const SymplecticSpace v = SymplecticSpace::standard(f, n);
    const double scale = power(p, n);
    // Items 0..30 are forced singular elements when dim V = 4.
    const std::size_t forced = n == 2 ? 31 : 0;
    return parallel_reports("sampled trace identity", samples, [&](std::size_t i) {
        CheckReport r;
        Rng rng(item_seed(opt.seed, i));
        std::size_t want = 0;
        SpElement g = SpElement::identity(v);
        if (i < forced) {
            const int kind = i == 0 ? 0 : 1 + static_cast<int>((i - 1) % 3);
            g = forced_sp4(f, kind, rng);
            want = kind == 0 ? 4 : kind == 1 ? 3 : kind == 2 ? 1 : 2;
            r.record(fixed_space(g).dim() == want, "forced element has the wrong fixed space: g=" + mat(g));
        } else {
            g = random_sp(v, rng);
        }
        const MpElement e = rng.index(2) == 0 ? mp_split(c, g) : mp_split(c, g).negated();
        const Complex oracle = trace_oracle(e);
        const Complex t2 = theorem_2b(e);
        const Complex t1 = theorem_1a(c, g) * (approx_eq(e.t0(), m_g(c, g, e.base())) ? 1.0 : -1.0);
        r.record(approx_eq(oracle, t1, scale) && approx_eq(t2, t1, scale),
                 "g=" + mat(g) + " oracle=" + cx(oracle) + " 1A=" + cx(t1) + " 2B=" + cx(t2));
        return r;
    });
}

CheckReport suite_homomorphism(int p, std::size_t n, std::size_t samples, const SuiteOptions& opt) {
    const PrimeField f(p);
    const AdditiveCharacter c(f, opt.psi_scale);
    const SymplecticSpace v = SymplecticSpace::standard(f, n);
    const double tol = kDefaultTolerance * power(p, n);
    auto check = [&](const MpElement& a, const MpElement& b, const Eigen::MatrixXcd& ra, const Eigen::MatrixXcd& rb) {
        CheckReport r;
        const MpElement ab = mp_from_product(a, b, opt.cocycle_twist);
        const Eigen::MatrixXcd lhs = rho_matrix(ab).mat;
        const Eigen::MatrixXcd rhs = ra * rb;
        const double diff = max_entry_diff(lhs, rhs);
        r.record(diff <= tol, "g=" + mat(a.g()) + " t=" + cx(a.t0()) + " h=" + mat(b.g()) + " s=" + cx(b.t0()) +
                                  " max deviation " + std::to_string(diff));
        return r;
    };
    if (samples == 0) {
        const auto elems = all_mp(c, v, opt.max_enum);
        std::vector<Eigen::MatrixXcd> rhos;
        rhos.reserve(elems.size());
        for (const auto& e : elems) rhos.push_back(rho_matrix(e).mat);
        const std::size_t m = elems.size();
        return parallel_reports("rho homomorphism (exhaustive)", m * m, [&](std::size_t k) {
            const std::size_t i = k / m;
            const std::size_t j = k % m;
            return check(elems[i], elems[j], rhos[i], rhos[j]);
        });
    }
    return parallel_reports("rho homomorphism (sampled)", samples, [&](std::size_t i) {
        Rng rng(item_seed(opt.seed, i));
        const MpElement a = random_mp(c, v, rng);
        const MpElement b = random_mp(c, v, rng);
        return check(a, b, rho_matrix(a).mat, rho_matrix(b).mat);
    });
}

CheckReport suite_composition(int p, std::size_t n, std::size_t samples, std::size_t loop_length,
                              const SuiteOptions& opt) {
    const PrimeField f(p);
    const AdditiveCharacter c(f, opt.psi_scale);
    const SymplecticSpace v = SymplecticSpace::standard(f, n);
    return parallel_reports("intertwiner loops of length " + std::to_string(loop_length), samples, [&](std::size_t i) {
        CheckReport r;
        Rng rng(item_seed(opt.seed, i));
        const auto ls = random_tuple(v, rng, loop_length);
        Eigen::MatrixXcd op = intertwiner(c, ls[0], ls[1]).mat;
        for (std::size_t k = 1; k + 1 < ls.size(); ++k) op = intertwiner(c, ls[k], ls[k + 1]).mat * op;
        op = intertwiner(c, ls.back(), ls[0]).mat * op;
        const Complex expected = gamma_form(c, witt_neg(maslov(c, ls).form));
        const auto size = op.rows();
        const double diff = max_entry_diff(op, expected * Eigen::MatrixXcd::Identity(size, size));
        r.record(diff <= kDefaultTolerance, "tuple " + tuple_text(ls) + " deviation " + std::to_string(diff));
        return r;
    });
}

CheckReport suite_rank_disc(int p, std::size_t n, std::size_t samples, std::size_t arity, const SuiteOptions& opt) {
    const PrimeField f(p);
    const AdditiveCharacter c(f, opt.psi_scale);
    const SymplecticSpace v = SymplecticSpace::standard(f, n);
    return parallel_reports("rank and discriminant of tau, arity " + std::to_string(arity), samples,
                            [&](std::size_t i) {
                                CheckReport r;
                                Rng rng(item_seed(opt.seed, i));
                                const auto ls = random_tuple(v, rng, arity);
                                std::vector<Orientation> os;
                                for (const auto& l : ls) os.push_back(random_orientation(l, rng));
                                const MaslovClass tau = maslov(c, ls);
                                const RankDisc pred = predicted_rank_disc(os);
                                r.record(tau.inv.rank == pred.rank && tau.inv.disc == pred.disc,
                                         "tuple " + tuple_text(ls) + " rank " + std::to_string(tau.inv.rank) +
                                             " predicted " + std::to_string(pred.rank));
                                return r;
                            });
}

CheckReport suite_m_product(int p, std::size_t n, std::size_t samples, const SuiteOptions& opt) {
    const PrimeField f(p);
    const AdditiveCharacter c(f, opt.psi_scale);
    const SymplecticSpace v = SymplecticSpace::standard(f, n);
    return parallel_reports("gamma(tau) = product of m", samples, [&](std::size_t i) {
        CheckReport r;
        Rng rng(item_seed(opt.seed, i));
        const auto ls = random_tuple(v, rng, 2 + i % 4);
        std::vector<Orientation> os;
        for (const auto& l : ls) os.push_back(random_orientation(l, rng));
        Complex prod = 1.0;
        for (std::size_t k = 0; k < os.size(); ++k) prod *= m_pair(os[k], os[(k + 1) % os.size()], c);
        const Complex g = gamma_tau(c, ls);
        r.record(approx_eq(prod, g), "tuple " + tuple_text(ls) + " product " + cx(prod) + " gamma " + cx(g));
        return r;
    });
}

CheckReport suite_theta(int p, std::size_t n, std::size_t samples, const SuiteOptions& opt) {
    const PrimeField f(p);
    const AdditiveCharacter c(f, opt.psi_scale);
    const SymplecticSpace v = SymplecticSpace::standard(f, n);
    const auto lags = all_lagrangians(v, opt.max_enum);
    const std::vector<MpElement> elems = samples == 0 ? all_mp(c, v, opt.max_enum) : std::vector<MpElement>{};
    const std::size_t count = samples == 0 ? elems.size() : samples;
    return parallel_reports("Theta independence and diagonal evaluation", count, [&](std::size_t i) {
        CheckReport r;
        Rng rng(item_seed(opt.seed, i));
        const MpElement e = samples == 0 ? elems[i] : random_mp(c, v, rng);
        const Complex ref = theta(e, lags.front());
        for (const auto& l : lags)
            r.record(approx_eq(theta(e, l), ref), "Theta depends on l at g=" + mat(e.g()) + " l=" + l.basis().to_string());
        const Complex ev = ev_diagonal(e);
        r.record(approx_eq(ev, ref), "Theta " + cx(ref) + " differs from diagonal evaluation " + cx(ev) +
                                         " at g=" + mat(e.g()));
        r.record(approx_eq(theta(e.negated(), lags.front()), -ref), "Theta not odd in t at g=" + mat(e.g()));
        return r;
    });
}

CheckReport suite_embedding(int p, std::size_t n, std::size_t samples, const SuiteOptions& opt) {
    const PrimeField f(p);
    const AdditiveCharacter c(f, opt.psi_scale);
    const SymplecticSpace v = SymplecticSpace::standard(f, n);
    const auto lags = all_lagrangians(v, opt.max_enum);
    CheckReport out{"embedding into the doubled group"};
    {
        const MpElement one = MpElement::identity(c, v);
        out.record(mp_embed(one).approx_equal(MpElement::identity(c, doubled(v))), "identity does not embed to identity");
    }
    auto hom = [&](const MpElement& a, const MpElement& b) {
        CheckReport r;
        const MpElement lhs = mp_embed(mp_from_product(a, b, opt.cocycle_twist));
        const MpElement rhs = mp_embed(a) * mp_embed(b);
        r.record(lhs.approx_equal(rhs), "embedding not multiplicative at g=" + mat(a.g()) + " h=" + mat(b.g()));
        return r;
    };
    auto seed_free = [&](const MpElement& e) {
        CheckReport r;
        const MpElement ref = mp_embed(e);
        for (const auto& l : lags)
            r.record(mp_embed(e, l).approx_equal(ref), "embedding depends on its seed at g=" + mat(e.g()));
        return r;
    };
    if (samples == 0) {
        const auto elems = all_mp(c, v, opt.max_enum);
        const std::size_t m = elems.size();
        out.merge(parallel_reports("embedding homomorphism", m * m,
                                   [&](std::size_t k) { return hom(elems[k / m], elems[k % m]); }));
        out.merge(parallel_reports("embedding seed independence", m, [&](std::size_t k) { return seed_free(elems[k]); }));
        return out;
    }
    out.merge(parallel_reports("embedding homomorphism", samples, [&](std::size_t i) {
        Rng rng(item_seed(opt.seed, i));
        const MpElement a = random_mp(c, v, rng);
        const MpElement b = random_mp(c, v, rng);
        CheckReport r = hom(a, b);
        r.merge(seed_free(a));
        return r;
    }));
    return out;
}

CheckReport suite_structural(int p, std::size_t n, std::size_t samples, const SuiteOptions& opt) {
    const PrimeField f(p);
    const AdditiveCharacter c(f, opt.psi_scale);
    const SymplecticSpace v = SymplecticSpace::standard(f, n);
    auto run = [&](const SpElement& g, const Lagrangian& l, Rng& rng) {
        CheckReport r = structural_suite(c, g, l, rng);
        r.merge(diagonal_kernel_check(c, g, l));
        return r;
    };
    if (samples == 0) {
        const auto group = all_sp(v, opt.max_enum);
        const auto lags = all_lagrangians(v, opt.max_enum);
        return parallel_reports("structural suite (exhaustive)", group.size(), [&](std::size_t i) {
            CheckReport r;
            Rng rng(item_seed(opt.seed, i));
            for (const auto& l : lags) r.merge(run(group[i], l, rng));
            return r;
        });
    }
    const std::size_t forced = n == 2 ? 31 : 0;
    return parallel_reports("structural suite (sampled)", samples, [&](std::size_t i) {
        Rng rng(item_seed(opt.seed, i));
        SpElement g = SpElement::identity(v);
        if (i < forced) {
            g = forced_sp4(f, i == 0 ? 0 : 1 + static_cast<int>((i - 1) % 3), rng);
        } else {
            g = random_sp(v, rng);
        }
        // Half the cases use a Lagrangian meeting ker(g - 1) or g l nontrivially.
        Lagrangian l = random_lagrangian(v, rng);
        const Subspace ker = fixed_space(g);
        if (rng.index(2) == 0 && ker.dim() > 0) {
            const FpVector x = ker.basis().row(rng.index(ker.dim()));
            l = lagrangian_through(v, rng, {x});
        }
        return run(g, l, rng);
    });
}

CheckReport suite_group_laws(int p, std::size_t n, std::size_t samples, const SuiteOptions& opt) {
    const PrimeField f(p);
    const AdditiveCharacter c(f, opt.psi_scale);
    const SymplecticSpace v = SymplecticSpace::standard(f, n);
    const MpElement one = MpElement::identity(c, v);
    const MpElement minus_one = one.negated();
    return parallel_reports("metaplectic group laws", samples, [&](std::size_t i) {
        CheckReport r;
        Rng rng(item_seed(opt.seed, i));
        const SpElement g = random_sp(v, rng);
        const SpElement h = random_sp(v, rng);
        const SpElement k = random_sp(v, rng);
        const Lagrangian l = random_lagrangian(v, rng);
        const std::string where = " at g=" + mat(g) + " h=" + mat(h);
        auto mul = [&](const MpElement& a, const MpElement& b) { return mp_from_product(a, b, opt.cocycle_twist); };

        r.record(approx_eq(cocycle(c, g, h, l) * cocycle(c, g * h, k, l), cocycle(c, g, h * k, l) * cocycle(c, h, k, l)),
                 "cocycle identity fails" + where);
        r.record(approx_eq(cocycle(c, SpElement::identity(v), h, l), 1.0) &&
                     approx_eq(cocycle(c, g, SpElement::identity(v), l), 1.0),
                 "cocycle not normalized" + where);
        r.record(approx_eq(m_g(c, g, l) * m_g(c, h, l) * cocycle(c, g, h, l), m_g(c, g * h, l)),
                 "m_g m_h c_{g,h} != m_gh" + where);

        const MpElement eg = mp_split(c, g);
        const MpElement eh = mp_split(c, h);
        const MpElement ek = mp_split(c, k);
        r.record(mul(eg, eh).approx_equal(mp_split(c, g * h)), "split is not multiplicative" + where);
        r.record(mul(eg, eg.inverse()).approx_equal(one), "e e^{-1} != 1" + where);
        r.record(mul(mul(eg, eh), ek).approx_equal(mul(eg, mul(eh, ek))), "product not associative" + where);
        r.record(mul(eg.negated(), eh).approx_equal(mul(eg, eh).negated()), "sign of lift not central" + where);
        r.record(mul(minus_one, minus_one).approx_equal(one), "(1,-1)^2 != 1");
        r.record(mul(minus_one, eg).approx_equal(mul(eg, minus_one)), "(1,-1) not central" + where);

        // t(l')^2 = m_g(l')^2 with one consistent sign, and rebasing is transparent.
        const Lagrangian l2 = random_lagrangian(v, rng);
        const Complex t1 = eg.evaluate(l);
        r.record(approx_eq(t1 * t1, m_g(c, g, l) * m_g(c, g, l)), "t(l)^2 != m_g(l)^2" + where);
        const MpElement moved = eg.rebased(l);
        r.record(approx_eq(moved.evaluate(l2), eg.evaluate(l2)), "rebasing changes t" + where);
        r.record(approx_eq(eg.evaluate(l), m_g(c, g, l)) || approx_eq(eg.evaluate(l), -m_g(c, g, l)),
                 "t(l) is not +-m_g(l)" + where);

        // m_g does not see the orientation; m(g l1, g l2) = m(l1, l2).
        const Orientation o1 = random_orientation(l, rng);
        const Orientation o2 = random_orientation(l2, rng);
        r.record(approx_eq(m_g(c, g, o1), m_g(c, g, l)), "m_g depends on the orientation" + where);
        r.record(approx_eq(m_pair(o1.transported(g), o2.transported(g), c), m_pair(o1, o2, c)),
                 "m not Sp-invariant" + where);
        return r;
    });
}

CheckReport suite_weil_index(int p, std::size_t samples, const SuiteOptions& opt) {
    const PrimeField f(p);
    const AdditiveCharacter c(f, opt.psi_scale);
    CheckReport out{"Weil index"};
    CheckReport scalar{"scalar identities"};
    for (int a = 1; a < p; ++a) {
        const Complex ga = c.gamma(a);
        scalar.record(std::abs(std::abs(ga) - 1.0) <= 1e-10, "|gamma(" + std::to_string(a) + ")| != 1");
        scalar.record(approx_eq(ga * c.gamma(-a), 1.0), "gamma(a) gamma(-a) != 1 at a=" + std::to_string(a));
        scalar.record(approx_eq(c.chi(a), static_cast<double>(f.legendre(a))), "chi != legendre at a=" + std::to_string(a));
        for (int b = 1; b < p; ++b) {
            scalar.record(approx_eq(ga * c.gamma(b), c.gamma_one_pow(1) * c.gamma(f.mul(a, b))),
                          "gamma(a) gamma(b) != gamma(1) gamma(ab) at " + std::to_string(a) + "," + std::to_string(b));
            scalar.record(approx_eq(c.gamma(f.mul(a, f.mul(b, b))), ga), "gamma not a square-class function");
        }
    }
    out.merge(scalar);

    auto form_checks = [&](const QuadraticSpace& q, CheckReport& r) {
        const std::string where = " at gram " + q.gram().to_string();
        const Complex fast = gamma_form(c, q);
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < q.dim() && total <= kSummationCap; ++i) total *= static_cast<std::uint64_t>(p);
        if (total <= kSummationCap) {
            const Complex slow = gamma_by_summation(c, q);
            r.record(approx_eq(fast, slow), "fast " + cx(fast) + " vs summed " + cx(slow) + where);
        }
        const WittInvariants w = witt_invariants(c, q);
        r.record(approx_eq(fast, gamma_from_rank_disc(c, w.rank, w.disc)), "gamma != gamma(1)^{r-1} gamma(det)" + where);
        r.record(approx_eq(gamma_form(c, witt_add(q, witt_neg(q))), 1.0), "gamma(q + -q) != 1" + where);
        r.record(approx_eq(gamma_form(c, witt_add(q, QuadraticSpace::hyperbolic_plane(f))), fast),
                 "gamma changes under adding a hyperbolic plane" + where);
    };

    CheckReport exhaustive{"all small forms"};
    for (std::size_t d = 1; d <= 3; ++d) {
        const std::size_t entries = d * (d + 1) / 2;
        double work = power(p, entries) * power(p, d);
        if (work > 2e7) continue;
        for_each_vector(f, entries, [&](const FpVector& upper) {
            FpMatrix g(f, d, d);
            std::size_t k = 0;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = i; j < d; ++j, ++k) {
                    g.set(i, j, upper[k]);
                    g.set(j, i, upper[k]);
                }
            form_checks(QuadraticSpace(std::move(g)), exhaustive);
        });
    }
    out.merge(exhaustive);

    CheckReport sampled{"random forms"};
    Rng rng(item_seed(opt.seed, static_cast<std::uint64_t>(p)));
    auto random_form = [&](std::size_t d) {
        // P D P^T with some zero diagonal entries, so radicals occur.
        FpMatrix dmat(f, d, d);
        for (std::size_t i = 0; i < d; ++i) dmat.set(i, i, rng.index(4) == 0 ? 0 : rng.residue(f.p()));
        FpMatrix pm(f, d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) pm.set(i, j, rng.residue(f.p()));
        return QuadraticSpace(pm * dmat * pm.transpose());
    };
    for (std::size_t d = 1; power(p, d) <= static_cast<double>(kSummationCap); ++d) {
        const std::size_t count = power(p, d) <= 1e4 ? samples : std::min<std::size_t>(samples, 2);
        for (std::size_t s = 0; s < count; ++s) form_checks(random_form(d), sampled);
    }
    for (std::size_t s = 0; s < samples; ++s) {
        const QuadraticSpace a = random_form(1 + rng.index(4));
        const QuadraticSpace b = random_form(1 + rng.index(4));
        const QuadraticSpace ab = witt_add(a, b);
        sampled.record(approx_eq(gamma_form(c, ab), gamma_form(c, a) * gamma_form(c, b)), "gamma not multiplicative");
        sampled.record(ab.rank() == a.rank() + b.rank(), "rank not additive");
        sampled.record(discriminant(ab) == discriminant(a) * discriminant(b), "discriminant not multiplicative");
        // Nondegenerate forms: gamma(q) = gamma(1)^{dim-1} gamma(det q).
        const QuadraticSpace nd = nondegenerate_quotient(a);
        if (nd.dim() > 0)
            sampled.record(approx_eq(gamma_form(c, nd), c.gamma_one_pow(static_cast<long long>(nd.dim()) - 1) *
                                                            c.gamma(nd.gram().determinant())),
                           "gamma(q) != gamma(1)^{dim-1} gamma(det q)");
    }
    out.merge(sampled);
    return out;
}

} // namespace weilchar
