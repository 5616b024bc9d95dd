#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace repmat {

/// Reproducible random stream keyed by (seed, stream id).
///
/// The engine is std::mt19937_64 (bit-exact across standard libraries) seeded through a
/// splitmix64 mix of the key. Uniforms and normals are generated here rather than through
/// <random> distributions, whose output is implementation-defined.
class RngStream {
public:
    static constexpr std::string_view algorithm = "mt19937_64+splitmix64-key+polar-normal/v1";

    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal (Marsaglia polar method).
    double normal();

    /// Child stream whose key is drawn from this stream; distinct `tag`s give distinct children.
    RngStream fork(std::uint64_t tag);

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
    double spare_ = 0;
    bool has_spare_ = false;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace repmat
