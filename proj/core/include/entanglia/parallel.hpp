#pragma once

#include <functional>

namespace entanglia {

// Worker count: ENTANGLIA_THREADS if set and positive, otherwise the
// hardware concurrency (at least 1).
int worker_count();

// Runs body(i) for i in [0, n) on up to worker_count() threads.  Exceptions
// thrown by body are rethrown on the calling thread (first one wins).
void parallel_for(long n, const std::function<void(long)>& body, int max_workers = 0);

}  // namespace entanglia
