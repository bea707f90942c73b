#include "simplicia/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace simplicia {

namespace {
std::atomic<int> g_jobs{0};
}

int default_jobs() {
    if (int j = g_jobs.load(); j > 0) return j;
    if (const char* env = std::getenv("SIMPLICIA_JOBS")) {
        try {
            const int j = std::stoi(env);
            if (j > 0) return j;
        } catch (...) {
        }
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void set_default_jobs(int jobs) { g_jobs.store(std::max(0, jobs)); }

void run_batches(std::size_t count, int jobs, const std::function<void(std::size_t)>& body,
                 const std::function<bool()>& stop) {
    const auto width = static_cast<std::size_t>(std::max(1, jobs > 0 ? jobs : default_jobs()));
    for (std::size_t start = 0; start < count; start += width) {
        const std::size_t end = std::min(count, start + width);
        if (end - start == 1) {
            body(start);
        } else {
            std::vector<std::thread> pool;
            for (std::size_t i = start; i < end; ++i) pool.emplace_back(body, i);
            for (auto& t : pool) t.join();
        }
        if (stop()) return;
    }
}

}  // namespace simplicia
