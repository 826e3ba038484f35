#pragma once

#include <cstdint>
#include <random>

namespace reldim {

/// A reproducible random stream keyed by (master seed, stream index).
///
/// Monte Carlo work is cut into fixed chunks and chunk i always draws from
/// stream i, so results do not depend on how chunks are scheduled.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream),
                          static_cast<std::uint32_t>(stream >> 32), 0x72656c64u};
        engine_.seed(seq);
    }

    double normal() { return normal_(engine_); }

    /// Uniform on [0, 1).
    double uniform() { return uniform_(engine_); }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace reldim
