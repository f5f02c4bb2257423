#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace conetorsion {

// Neumaier compensated accumulator.
class CompensatedSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    CompensatedSum& operator+=(double x) {
        add(x);
        return *this;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Thread cap from CONETORSION_THREADS, falling back to hardware concurrency.
inline unsigned thread_limit() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("CONETORSION_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min<long>(v, 256));
    }
    return hw;
}

// Sum f(i) for i in [first, last] in fixed-size blocks. Blocks may run on
// several threads; partial sums are combined in block order, so the result
// does not depend on the thread count.
template <class F>
double deterministic_sum(long first, long last, F f, long block = 512) {
    if (last < first) return 0.0;
    long nblocks = (last - first) / block + 1;
    std::vector<double> partial(static_cast<std::size_t>(nblocks), 0.0);
    auto run = [&](long b0, long b1) {
        for (long b = b0; b < b1; ++b) {
            CompensatedSum s;
            long lo = first + b * block;
            long hi = std::min(last, lo + block - 1);
            for (long i = lo; i <= hi; ++i) s += f(i);
            partial[static_cast<std::size_t>(b)] = s.value();
        }
    };
    unsigned nthreads = std::min<unsigned>(thread_limit(), static_cast<unsigned>(nblocks));
    if (nthreads <= 1) {
        run(0, nblocks);
    } else {
        std::vector<std::thread> pool;
        long per = (nblocks + nthreads - 1) / nthreads;
        for (unsigned t = 0; t < nthreads; ++t) {
            long b0 = t * per;
            long b1 = std::min(nblocks, b0 + per);
            if (b0 < b1) pool.emplace_back(run, b0, b1);
        }
        for (auto& th : pool) th.join();
    }
    CompensatedSum total;
    for (double p : partial) total += p;
    return total.value();
}

}  // namespace conetorsion
