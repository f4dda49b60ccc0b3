#pragma once
// Counter-based pseudo-random streams (Philox 4x32-10).
//
// A stream is addressed by (master_seed, stream_index); the pair is the whole
// state contract: same pair -> bit-identical output, distinct pairs ->
// statistically independent streams. Replicates of an experiment can therefore
// run in any order, on any number of threads, without sequence coordination.

#include <array>
#include <cmath>
#include <cstdint>
#include <string_view>

namespace polybounds::rng {

struct StreamKey {
    std::uint64_t master_seed{0};
    std::uint64_t stream_index{0};

    friend bool operator==(const StreamKey&, const StreamKey&) = default;
};

// SplitMix64 finalizer; used to derive sub-stream indices.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic sub-stream derivation, e.g. replicate r of experiment e uses
// derive_stream(hash(e), r).
inline std::uint64_t derive_stream(std::uint64_t base, std::uint64_t salt) {
    return splitmix64(base ^ splitmix64(salt));
}

inline std::uint64_t hash_string(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL; // FNV-1a, folded through splitmix
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return splitmix64(h);
}

namespace detail {

struct Philox4x32 {
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter block(Counter ctr, Key key) {
        constexpr std::uint32_t m0 = 0xD2511F53u, m1 = 0xCD9E8D57u;
        constexpr std::uint32_t w0 = 0x9E3779B9u, w1 = 0xBB67AE85u;
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += w0;
                key[1] += w1;
            }
            const std::uint64_t p0 = std::uint64_t(m0) * ctr[0];
            const std::uint64_t p1 = std::uint64_t(m1) * ctr[2];
            ctr = {std::uint32_t(p1 >> 32) ^ ctr[1] ^ key[0], std::uint32_t(p1),
                   std::uint32_t(p0 >> 32) ^ ctr[3] ^ key[1], std::uint32_t(p0)};
        }
        return ctr;
    }
};

} // namespace detail

class Stream {
public:
    explicit Stream(StreamKey key)
        : key_{std::uint32_t(key.master_seed), std::uint32_t(key.master_seed >> 32)},
          stream_lo_(std::uint32_t(key.stream_index)),
          stream_hi_(std::uint32_t(key.stream_index >> 32)) {}

    std::uint64_t next_u64() {
        if (have_spare_u64_) {
            have_spare_u64_ = false;
            return spare_u64_;
        }
        const auto out = detail::Philox4x32::block(
            {stream_lo_, stream_hi_, std::uint32_t(block_), std::uint32_t(block_ >> 32)}, key_);
        ++block_;
        spare_u64_ = (std::uint64_t(out[3]) << 32) | out[2];
        have_spare_u64_ = true;
        return (std::uint64_t(out[1]) << 32) | out[0];
    }

    // Uniform on [0,1), 53-bit mantissa.
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0,1]; safe under log().
    double next_open_double() { return double((next_u64() >> 11) + 1) * 0x1.0p-53; }

    double next_exponential() { return -std::log(next_open_double()); }

    bool next_coin() { return (next_u64() & 1u) != 0; }

    // Box-Muller; both variates of a pair are consumed.
    double next_gaussian() {
        if (have_spare_gauss_) {
            have_spare_gauss_ = false;
            return spare_gauss_;
        }
        const double r = std::sqrt(2.0 * next_exponential());
        const double theta = 6.283185307179586476925286766559 * next_double();
        spare_gauss_ = r * std::sin(theta);
        have_spare_gauss_ = true;
        return r * std::cos(theta);
    }

private:
    detail::Philox4x32::Key key_;
    std::uint32_t stream_lo_, stream_hi_;
    std::uint64_t block_{0};
    std::uint64_t spare_u64_{0};
    double spare_gauss_{0};
    bool have_spare_u64_{false};
    bool have_spare_gauss_{false};
};

} // namespace polybounds::rng
