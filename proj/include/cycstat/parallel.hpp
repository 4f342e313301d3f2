#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <stdexcept>
#include <thread>
#include <vector>

namespace cycstat {

class BudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Shared cap on enumeration work, counted in tuple evaluations.
struct Budget {
    std::atomic<long long> used{0};
    long long limit;

    explicit Budget(long long limit_ = 100000000LL) : limit(limit_) {}

    void charge(long long n) {
        long long total = used.fetch_add(n, std::memory_order_relaxed) + n;
        if (total > limit) throw BudgetExceeded("enumeration budget exceeded");
    }
};

// Runs work(chunk) for chunk in [0, n_chunks) on a pool of workers and
// returns the per-chunk results indexed by chunk, so a sequential merge in
// chunk order is independent of scheduling. The chunk count is chosen by the
// caller from the problem alone; results are identical for any worker count
// because every partial result is exact.
template <class Local, class Work>
std::vector<Local> run_chunks(int n_chunks, int workers, Work&& work) {
    std::vector<Local> results(static_cast<size_t>(n_chunks));
    if (workers <= 1 || n_chunks <= 1) {
        for (int c = 0; c < n_chunks; ++c) results[static_cast<size_t>(c)] = work(c);
        return results;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto runner = [&]() {
        while (true) {
            int c = next.fetch_add(1);
            if (c >= n_chunks || failed.load()) return;
            try {
                results[static_cast<size_t>(c)] = work(c);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int n_threads = std::min(workers, n_chunks);
    pool.reserve(static_cast<size_t>(n_threads));
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(runner);
    for (auto& th : pool) th.join();
    if (failed.load()) std::rethrow_exception(error);
    return results;
}

}  // namespace cycstat
