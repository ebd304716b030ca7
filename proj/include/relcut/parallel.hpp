#ifndef relcut_parallel_hpp
#define relcut_parallel_hpp

#include <cstddef>
#include <functional>
#include <vector>

namespace relcut {

// Worker count used by every sharded loop. Starts from RELCUT_THREADS if set,
// otherwise hardware concurrency.
int thread_count();
void set_thread_count(int n);

// Runs body(i) for i in [0, n). Indices are handed out dynamically, so body
// must only write to slots owned by i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

template<class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& f) {
    std::vector<T> out(n);
    parallel_for(n, [&](std::size_t i) { out[i] = f(i); });
    return out;
}

}

#endif
