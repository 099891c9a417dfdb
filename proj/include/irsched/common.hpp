#ifndef IRSCHED_COMMON_HPP
#define IRSCHED_COMMON_HPP

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace irsched {

inline constexpr double kSpeedOfLight = 299792458.0;
inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Geometry that cannot produce a channel (co-located nodes).
struct InvalidGeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Search space above the enumeration cap.
struct TooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fewer training points than codebook entries.
struct InsufficientTrainingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Purpose tags for derived RNG streams. Streams are keyed on
// (master seed, tag, indices...) so drops can run in any order, serial or
// parallel, and still consume identical random sequences.
enum class StreamTag : std::uint64_t {
    kDropPositions = 1,
    kDropChannels = 2,
    kTrainingPositions = 3,
    kTrainingChannels = 4,
    kKmeans = 5,
    kGa = 6,
    kSynthetic = 7,
};

// A seeded RNG stream with the handful of draws the simulator needs.
class RngStream {
  public:
    RngStream(std::uint64_t master, StreamTag tag, std::uint64_t a = 0, std::uint64_t b = 0)
    {
        std::uint64_t s = splitmix64(master ^ 0x6a09e667f3bcc909ULL);
        s = splitmix64(s ^ static_cast<std::uint64_t>(tag) * 0xb5297a4d3a2ec4c1ULL);
        s = splitmix64(s ^ a * 0x1b56c4e9a86d7f61ULL);
        s = splitmix64(s ^ b * 0x68e31da4a1ab29c5ULL);
        eng_.seed(s);
    }

    std::mt19937_64& engine() { return eng_; }

    double uniform(double lo, double hi)
    {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(eng_);
    }

    double normal()
    {
        std::normal_distribution<double> d(0.0, 1.0);
        return d(eng_);
    }

    // Uniform integer in [0, bound).
    std::uint64_t next_index(std::uint64_t bound)
    {
        std::uniform_int_distribution<std::uint64_t> d(0, bound - 1);
        return d(eng_);
    }

  private:
    std::mt19937_64 eng_;
};

// Strided parallel loop over [0, n). fn(i) must write only to index-i state;
// results are then independent of the thread count. The first worker
// exception is rethrown on the calling thread after all workers join.
template <typename Fn>
void parallel_for(std::size_t n, int n_threads, Fn&& fn)
{
    if (n == 0)
        return;
    if (n_threads <= 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(n_threads), n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (std::size_t i = w; i < n; i += workers)
                    fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (const auto& err : errors)
        if (err)
            std::rethrow_exception(err);
}

} // namespace irsched

#endif
