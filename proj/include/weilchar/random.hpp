#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace weilchar {

/// Seeded source used by every sampler in the library. Reductions are done
/// by hand so sequences are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform-ish residue in [0, p).
    int residue(int p) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(p)); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

private:
    std::mt19937_64 engine_;
};

} // namespace weilchar
