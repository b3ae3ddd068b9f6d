#ifndef ITNLAB_PARALLEL_HPP
#define ITNLAB_PARALLEL_HPP

#include <functional>

namespace itnlab {

// Runs body(i) for i in [0, n) on a small thread pool. Each index owns its
// own rng stream and output slot, so results do not depend on the schedule.
void parallel_for(long n, const std::function<void(long)>& body, int threads = 0);

} // namespace itnlab

#endif
