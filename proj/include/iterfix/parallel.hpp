#ifndef ITERFIX_PARALLEL_HPP
#define ITERFIX_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace iterfix {

/// Worker count: ITERFIX_THREADS if set to a positive integer, otherwise
/// the hardware concurrency.  Re-read on every call.
unsigned thread_budget();

/// Run body(0..count-1) across at most thread_budget() threads in static
/// blocks.  Bodies must write only to their own index slot; any exception
/// is rethrown on the caller thread after the join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace iterfix

#endif
