#ifndef DRINMOD_PARALLEL_HPP
#define DRINMOD_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace drinmod {

/// Set the worker count used by parallel_for. 0 restores the default
/// (hardware concurrency). Results are independent of this setting.
void set_thread_count(unsigned n);
unsigned thread_count();

/// Runs fn(i) for i in [0, n). Each index is processed exactly once and
/// writes only to its own output slot, so the result is deterministic
/// for every thread count. Exceptions from workers are rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace drinmod

#endif
