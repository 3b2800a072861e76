#ifndef DISTSPEC_PARALLEL_HPP
#define DISTSPEC_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace distspec {

/// Resolve a thread-count request: values >= 1 pass through; 0 consults the
/// DISTSPEC_THREADS environment variable and falls back to 1.
int resolve_thread_count(int requested);

/// Run fn(i) for i in [0, count) across `threads` workers on contiguous
/// index blocks. Callers keep determinism by writing results into
/// index-addressed slots. Exceptions from workers are rethrown.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace distspec

#endif
