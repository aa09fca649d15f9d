#pragma once

/**
 * @file verify.hpp
 * @brief Verification suites shared by the CLI and the acceptance runner.
 *
 * Every suite is deterministic in its seed. Work items are independent and
 * may run on several threads (bounded by WEILCHAR_THREADS); reports are
 * merged in item order so the first witness does not depend on scheduling.
 */

#include "weilchar/char_values.hpp"
#include "weilchar/metaplectic.hpp"
#include "weilchar/report.hpp"
#include "weilchar/symplectic.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace weilchar {

/// Thread count from WEILCHAR_THREADS, else the hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs fn(0), ..., fn(count - 1) and merges the reports in index order.
CheckReport parallel_reports(const std::string& name, std::size_t count,
                             const std::function<CheckReport(std::size_t)>& fn);

/// Seed for work item `index` of a run seeded with `seed`.
std::uint64_t item_seed(std::uint64_t seed, std::uint64_t index);

/// Symplectic direct sum of elements of two standard spaces, on the standard
/// space of the summed half-dimension.
SpElement sp_block_sum(const SpElement& a, const SpElement& b);

/// Conjugated block sums with prescribed fixed-space dimension, in Sp_4:
/// kind 0 identity, 1 transvection, 2 dim ker(g-1) = 1, 3 dim ker(g-1) = 2.
SpElement forced_sp4(const PrimeField& f, int kind, Rng& rng);

struct SuiteOptions {
    std::uint64_t seed = 1;
    /// Cocycle multiplier used in products; anything other than 1 is a fault.
    Complex cocycle_twist = 1.0;
    int psi_scale = 1;
    std::uint64_t max_enum = 100000;
};

/// trace_oracle(split g) = theorem_1a(g) = theorem_2b(split g) for every g in Sp(V).
CheckReport suite_exhaustive_traces(int p, std::size_t n, const SuiteOptions& opt);
/// The case table for SL_2 reproduced for every element, plus the three standard elements.
CheckReport suite_sl2_table(int p, const SuiteOptions& opt);
/// Three-way trace identity on sampled g (with forced singular cases in Sp_4).
CheckReport suite_sampled_traces(int p, std::size_t n, std::size_t samples, const SuiteOptions& opt);
/// rho(e1 e2) = rho(e1) rho(e2); exhaustive over Mp when samples == 0 and Sp(V) is enumerable.
CheckReport suite_homomorphism(int p, std::size_t n, std::size_t samples, const SuiteOptions& opt);
/// Loops of intertwiners equal gamma(-tau) times the identity.
CheckReport suite_composition(int p, std::size_t n, std::size_t samples, std::size_t loop_length,
                              const SuiteOptions& opt);
/// Computed Maslov representative has the predicted rank and discriminant.
CheckReport suite_rank_disc(int p, std::size_t n, std::size_t samples, std::size_t arity, const SuiteOptions& opt);
/// gamma(tau) equals the product of m over consecutive pairs, orientations random.
CheckReport suite_m_product(int p, std::size_t n, std::size_t samples, const SuiteOptions& opt);
/// Theta is the same for every Lagrangian and equals the diagonal evaluation of the embedding.
/// Uses every element of Mp when samples == 0, else `samples` random elements.
CheckReport suite_theta(int p, std::size_t n, std::size_t samples, const SuiteOptions& opt);
/// The embedding into Mp(V-bar + V) is a homomorphism and does not depend on its seed Lagrangian.
CheckReport suite_embedding(int p, std::size_t n, std::size_t samples, const SuiteOptions& opt);
/// The q / q' structural checks and the diagonal-kernel check; exhaustive when samples == 0.
CheckReport suite_structural(int p, std::size_t n, std::size_t samples, const SuiteOptions& opt);
/// Metaplectic group laws: cocycle identity, m_g m_h c = m_gh, inverses, associativity, centrality.
CheckReport suite_group_laws(int p, std::size_t n, std::size_t samples, const SuiteOptions& opt);
/// Weil index identities and both gamma paths on quadratic forms.
CheckReport suite_weil_index(int p, std::size_t samples, const SuiteOptions& opt);

} // namespace weilchar
