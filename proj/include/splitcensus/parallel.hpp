#ifndef SPLITCENSUS_PARALLEL_HPP
#define SPLITCENSUS_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace splitcensus {

/// Runs fn(block) for every block in [0, n_blocks) on up to `jobs` threads.
/// Blocks are claimed from an atomic counter; callers keep determinism by
/// writing into per-block slots and merging in block order afterwards.
/// The first exception thrown by any worker is rethrown here.
void parallel_blocks(std::size_t n_blocks, unsigned jobs,
                     const std::function<void(std::size_t)>& fn);

}  // namespace splitcensus

#endif
