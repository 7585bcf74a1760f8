#include "calderon/rng.hpp"

#include <cmath>
#include <numbers>

namespace calderon {

namespace {

constexpr std::uint64_t kM0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kM1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kW0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kW1 = 0xBB67AE8584CAA73BULL;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) noexcept
{
    __extension__ using u128 = unsigned __int128;
    const u128 p = static_cast<u128>(a) * b;
    hi = static_cast<std::uint64_t>(p >> 64);
    lo = static_cast<std::uint64_t>(p);
}

} // namespace

Philox4x64::Philox4x64(Key key, Counter counter) noexcept : key_(key), counter_(counter) {}

Philox4x64::Counter Philox4x64::block(Counter c, Key k) noexcept
{
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            k[0] += kW0;
            k[1] += kW1;
        }
        std::uint64_t hi0, lo0, hi1, lo1;
        mulhilo(kM0, c[0], hi0, lo0);
        mulhilo(kM1, c[2], hi1, lo1);
        c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    }
    return c;
}

Philox4x64::result_type Philox4x64::operator()() noexcept
{
    if (used_ == 4) {
        for (auto& word : counter_)
            if (++word != 0) break;
        buffer_ = block(counter_, key_);
        used_ = 0;
    }
    return buffer_[used_++];
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept
{
    return Philox4x64::block({index, 0, 0, 0}, {seed, 0x5eedULL})[0];
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) noexcept : engine_({seed, stream}) {}

double Rng::uniform() noexcept
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() noexcept
{
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; // (0, 1]
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

void Rng::fill_normal(std::span<double> out) noexcept
{
    for (double& v : out) v = normal();
}

} // namespace calderon
