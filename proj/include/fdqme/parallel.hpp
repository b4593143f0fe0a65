// parallel.hpp - static-partition parallel map over an index range

#pragma once

#include <cstddef>
#include <functional>

namespace fdqme {

// Worker count used by parallel_for; 0 means hardware concurrency.
void set_thread_count(unsigned n);
unsigned thread_count();

// Calls body(i) for i in [0, n). Exceptions from workers are rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace fdqme
