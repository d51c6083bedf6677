#include "signet/util.hpp"

#include <cstdio>

namespace signet {

std::string to_hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

double round_sig(double x, int digits) {
    if (x == 0.0 || !std::isfinite(x)) return x;
    const double mag = std::pow(10.0, digits - 1 - static_cast<int>(std::floor(std::log10(std::fabs(x)))));
    return std::round(x * mag) / mag;
}

void parallel_chunks(std::size_t count, int threads,
                     const std::function<void(std::size_t, std::size_t, int)>& fn) {
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(count)));
    if (workers == 1 || count == 0) {
        fn(0, count, 0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const std::size_t step = (count + static_cast<std::size_t>(workers) - 1) / static_cast<std::size_t>(workers);
    for (int t = 0; t < workers; ++t) {
        const std::size_t lo = std::min(count, static_cast<std::size_t>(t) * step);
        const std::size_t hi = std::min(count, lo + step);
        pool.emplace_back([&fn, lo, hi, t] { fn(lo, hi, t); });
    }
    for (auto& th : pool) th.join();
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace signet
