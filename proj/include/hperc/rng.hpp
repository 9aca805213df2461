#ifndef HPERC_RNG_HPP
#define HPERC_RNG_HPP

#include <cstdint>
#include <string>

namespace hperc {

// Name recorded in all output metadata so results can be checked across builds.
inline constexpr const char* kRngName = "splitmix64-v1";

// Reproducible seed: a master value plus a stream index. Child streams are
// derived with a bijective mixer, so distinct stream indices never collide.
struct Seed {
    std::uint64_t master = 0;
    std::uint64_t stream_index = 0;

    bool operator==(const Seed&) const = default;
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
}  // namespace detail

// Deterministic and injective over `index` for a fixed parent.
inline Seed child_seed(const Seed& parent, std::uint64_t index) {
    return Seed{detail::mix64(parent.master ^ detail::mix64(index)), index};
}

// SplitMix64 stream. Small state, no warmup, identical output on every
// platform; sufficient quality for Monte Carlo edge sampling.
class SplitMix64 {
public:
    explicit SplitMix64(const Seed& seed)
        : state_(detail::mix64(seed.master ^ detail::mix64(~seed.stream_index))) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits, so `u < p` succeeds with
    // probability p for any representable p, including the endpoints.
    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

}  // namespace hperc

#endif
