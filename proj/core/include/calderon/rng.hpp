#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace calderon {

/// Philox4x64-10 counter-based generator. The output stream for a given key
/// matches numpy.random.Philox(key=...) with a zero initial counter.
class Philox4x64 {
public:
    using result_type = std::uint64_t;
    using Key = std::array<std::uint64_t, 2>;
    using Counter = std::array<std::uint64_t, 4>;

    explicit Philox4x64(Key key, Counter counter = {0, 0, 0, 0}) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }
    result_type operator()() noexcept;

    /// The raw bijection: ten rounds applied to one counter block.
    static Counter block(Counter counter, Key key) noexcept;

private:
    Key key_;
    Counter counter_;
    Counter buffer_{};
    int used_ = 4;
};

/// Deterministic child seed for replicate `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Seeded stream of uniforms and standard normals. Streams with the same
/// seed and different stream ids are independent.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) noexcept;

    std::uint64_t next_u64() noexcept { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept;
    /// Box-Muller standard normal.
    double normal() noexcept;
    void fill_normal(std::span<double> out) noexcept;

private:
    Philox4x64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace calderon
