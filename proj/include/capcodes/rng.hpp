#pragma once

#include <cstdint>
#include <random>

namespace capcodes {

/// MT19937-64 seeded through std::seed_seq from (seed, stream), so trial t of
/// an experiment gets its own stream independent of how trials are scheduled.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n) by rejection; n > 0.
    std::uint64_t below(std::uint64_t n);

private:
    std::mt19937_64 engine_;
};

}  // namespace capcodes
