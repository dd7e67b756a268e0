#ifndef HOMCOUNT_CORE_PARALLEL_HPP
#define HOMCOUNT_CORE_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace homcount {

// Applies fn(i) for i in [0, count) and returns the results indexed by i,
// so any downstream reduction runs in index order and the outcome does not
// depend on scheduling.
template <typename R, typename F>
std::vector<R> parallelMap(std::size_t count, int workers, F&& fn) {
    std::vector<R> out(count);
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex errorMutex;
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(errorMutex);
                if (!error) error = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    int spawn = std::min<std::size_t>(workers, count);
    threads.reserve(spawn);
    for (int t = 0; t < spawn; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace homcount

#endif
