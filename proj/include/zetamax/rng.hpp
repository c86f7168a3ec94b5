#pragma once

#include <array>
#include <cstdint>

namespace zetamax {

// Philox4x64-10 counter-based generator. A block is a pure function of
// (counter, key), so any sample indexed by (seed, index) is reproducible
// independently of worker count or evaluation order.
struct Philox4x64 {
    using Counter = std::array<std::uint64_t, 4>;
    using Key = std::array<std::uint64_t, 2>;

    static constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ull;
    static constexpr std::uint64_t kMul1 = 0xCA5A826395121157ull;
    static constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ull;
    static constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73Bull;

    static Counter block(Counter ctr, Key key) {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            ctr = single_round(ctr, key);
        }
        return ctr;
    }

  private:
    static Counter single_round(const Counter& ctr, const Key& key) {
        unsigned __int128 p0 =
            static_cast<unsigned __int128>(kMul0) * ctr[0];
        unsigned __int128 p1 =
            static_cast<unsigned __int128>(kMul1) * ctr[2];
        std::uint64_t lo0 = static_cast<std::uint64_t>(p0);
        std::uint64_t hi0 = static_cast<std::uint64_t>(p0 >> 64);
        std::uint64_t lo1 = static_cast<std::uint64_t>(p1);
        std::uint64_t hi1 = static_cast<std::uint64_t>(p1 >> 64);
        return {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
};

// Uniform double in [0, 1) from the top 53 bits.
inline double u64_to_unit(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// Domain separators for the counter's third lane, so distinct consumers of
// the same seed never collide.
enum class RngStream : std::uint64_t {
    kZetaTau = 1,
    kCueDraw = 2,
};

inline Philox4x64::Counter make_counter(std::uint64_t index, std::uint64_t sub,
                                        RngStream stream) {
    return {index, sub, static_cast<std::uint64_t>(stream), 0};
}

} // namespace zetamax
