#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace rinar {

/// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
///
/// Each stream is identified by (seed, stream_id); streams are statistically
/// independent, so parallel workers can fan out deterministically without
/// sharing state. Satisfies UniformRandomBitGenerator with 64-bit output.
class PhiloxStream {
public:
    using result_type = std::uint64_t;

    PhiloxStream() : PhiloxStream(0, 0) {}

    PhiloxStream(std::uint64_t seed, std::uint64_t stream_id) {
        key_[0] = static_cast<std::uint32_t>(seed);
        key_[1] = static_cast<std::uint32_t>(seed >> 32);
        counter_[0] = 0;
        counter_[1] = 0;
        counter_[2] = static_cast<std::uint32_t>(stream_id);
        counter_[3] = static_cast<std::uint32_t>(stream_id >> 32);
        pos_ = 4;
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        if (pos_ >= 4) {
            block_ = round10(counter_, key_);
            bump_counter();
            pos_ = 0;
        }
        std::uint64_t lo = block_[pos_];
        std::uint64_t hi = block_[pos_ + 1];
        pos_ += 2;
        return (hi << 32) | lo;
    }

    /// One uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Raw 10-round Philox block, exposed for known-answer tests.
    static std::array<std::uint32_t, 4> round10(std::array<std::uint32_t, 4> ctr,
                                                std::array<std::uint32_t, 2> key) {
        for (int r = 0; r < 10; ++r) {
            ctr = single_round(ctr, key);
            key[0] += 0x9E3779B9u;
            key[1] += 0xBB67AE85u;
        }
        return ctr;
    }

private:
    static std::array<std::uint32_t, 4> single_round(const std::array<std::uint32_t, 4>& c,
                                                     const std::array<std::uint32_t, 2>& k) {
        std::uint64_t p0 = 0xD2511F53ull * c[0];
        std::uint64_t p1 = 0xCD9E8D57ull * c[2];
        std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
        std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
        std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
        std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
        return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    }

    void bump_counter() {
        if (++counter_[0] == 0) {
            ++counter_[1];
            // counter_[2..3] hold the stream id and are never touched: a
            // stream would need 2^64 blocks before the id words could carry.
        }
    }

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> counter_;
    std::array<std::uint32_t, 4> block_{};
    int pos_;
};

/// Stream for copy `j` of replicate `rep` under a master seed.
/// Layout keeps replicate and copy indices in disjoint halves of the id.
inline PhiloxStream substream(std::uint64_t seed, std::uint64_t replicate, std::uint64_t copy) {
    return PhiloxStream(seed, (replicate << 32) | (copy & 0xffffffffull));
}

}  // namespace rinar
