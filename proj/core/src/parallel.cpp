#include "pea/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace pea {

unsigned thread_count() {
    if (const char* env = std::getenv("PEA_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& body) {
    const std::size_t count = end > begin ? end - begin : 0;
    const unsigned workers = thread_count();
    constexpr std::size_t kSerialCutoff = 4096;
    if (count == 0) return;
    if (workers <= 1 || count < kSerialCutoff) {
        for (std::size_t i = begin; i < end; ++i) body(i);
        return;
    }
    const std::size_t chunks = workers;
    const std::size_t chunk = (count + chunks - 1) / chunks;
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        std::size_t lo = begin + c * chunk;
        if (lo >= end) break;
        std::size_t hi = lo + chunk < end ? lo + chunk : end;
        pool.emplace_back([&body, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace pea
