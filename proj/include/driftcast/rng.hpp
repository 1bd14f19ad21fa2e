#pragma once

#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <stdexcept>

namespace driftcast {

/// Stream purposes. Stream identity is (experiment seed, purpose, particle index),
/// so results do not depend on scheduling or worker count.
enum class StreamTag : std::uint64_t {
    model_error = 1,
    filter = 2,
    truth_model_error = 3,
    obs_noise = 4,
    rank_noise = 5,
    collapse_subsets = 6,
    resample = 7,
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

} // namespace detail

inline std::uint64_t stream_seed(std::uint64_t master, StreamTag tag, std::uint64_t index = 0) {
    std::uint64_t s = detail::splitmix64(master ^ 0x8000000000000000ull);
    s = detail::splitmix64(s ^ static_cast<std::uint64_t>(tag));
    s = detail::splitmix64(s ^ (index + 0x51ed2700a1b4c2d3ull));
    return s;
}

/// Deterministic Gaussian/uniform stream. Owns its engine and the Box-Muller spare so
/// the full state serializes to text (checkpoint contract).
class NoiseStream {
public:
    NoiseStream() : engine_(0) {}
    explicit NoiseStream(std::uint64_t seed) : engine_(seed) {}
    NoiseStream(std::uint64_t master, StreamTag tag, std::uint64_t index = 0)
        : engine_(stream_seed(master, tag, index)) {}

    /// Uniform in [0,1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n).
    std::uint64_t uniform_below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("uniform_below: n must be positive");
        // rejection keeps the draw unbiased
        std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= lim);
        return x % n;
    }

    /// Standard normal draw (Marsaglia polar, cached spare).
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }

    friend std::ostream& operator<<(std::ostream& os, const NoiseStream& ns) {
        os << ns.engine_ << ' ' << (ns.has_spare_ ? 1 : 0);
        if (ns.has_spare_) {
            os.precision(17);
            os << ' ' << ns.spare_;
        }
        return os;
    }

    friend std::istream& operator>>(std::istream& is, NoiseStream& ns) {
        int flag = 0;
        is >> ns.engine_ >> flag;
        ns.has_spare_ = (flag != 0);
        if (ns.has_spare_) is >> ns.spare_;
        return is;
    }

    bool operator==(const NoiseStream& o) const {
        return engine_ == o.engine_ && has_spare_ == o.has_spare_ &&
               (!has_spare_ || spare_ == o.spare_);
    }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace driftcast
