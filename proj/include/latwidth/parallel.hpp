#pragma once
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace lw {

// --jobs, then LATWIDTH_JOBS, then hardware concurrency
inline int resolve_jobs(int requested) {
    if (requested > 0) return requested;
    if (const char* e = std::getenv("LATWIDTH_JOBS")) {
        int j = std::atoi(e);
        if (j > 0) return j;
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? (int)h : 1;
}

// f(i) for i in [0,n); worker w takes i = w, w+jobs, ... so callers that store
// per-index results and reduce in index order stay deterministic
template <class F>
void parallel_for(size_t n, int jobs, F&& f) {
    if (jobs <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) f(i);
        return;
    }
    size_t w = std::min<size_t>((size_t)jobs, n);
    std::vector<std::thread> ts;
    for (size_t t = 0; t < w; ++t)
        ts.emplace_back([&, t] {
            for (size_t i = t; i < n; i += w) f(i);
        });
    for (auto& t : ts) t.join();
}

}  // namespace lw
