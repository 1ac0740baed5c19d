#include "capcodes/rng.hpp"

#include "capcodes/errors.hpp"

namespace capcodes {

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
}

std::uint64_t Rng::below(std::uint64_t n) {
    require(n > 0, ErrorKind::ParamOutOfRange, "empty range");
    // Largest multiple of n that fits, to avoid modulo bias.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % n;
}

}  // namespace capcodes
