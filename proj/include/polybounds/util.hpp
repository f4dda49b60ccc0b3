#pragma once

#include <charconv>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace polybounds {

inline void require_finite(double x, const char* name) {
    if (!std::isfinite(x)) throw std::domain_error(std::string(name) + " must be finite");
}

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::domain_error(msg);
}

// Shortest round-trip decimal representation; keeps CSV output byte-stable.
inline std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, ptr);
}

// Static-partition parallel map. Work items must write to disjoint slots so
// that results are independent of the thread count.
class Parallelism {
public:
    Parallelism() : jobs_(default_jobs()) {}
    explicit Parallelism(int jobs) : jobs_(jobs < 1 ? 1 : jobs) {}

    int jobs() const { return jobs_; }

    void for_each(std::int64_t count, const std::function<void(std::int64_t)>& fn) const {
        if (count <= 0) return;
        const int workers = int(std::min<std::int64_t>(jobs_, count));
        if (workers == 1) {
            for (std::int64_t i = 0; i < count; ++i) fn(i);
            return;
        }
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::int64_t i = w; i < count; i += workers) fn(i);
            });
        }
        for (auto& t : pool) t.join();
    }

    static int default_jobs() {
        const unsigned hc = std::thread::hardware_concurrency();
        return hc == 0 ? 1 : int(hc);
    }

private:
    int jobs_;
};

} // namespace polybounds
