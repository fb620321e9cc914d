#pragma once

#include <functional>

namespace mpcodes {

/// Runs fn(0..count-1) on up to `workers` threads. Tasks must write only to
/// their own slots; exceptions are rethrown on the calling thread. The
/// index-keyed result layout keeps output independent of scheduling.
void parallel_for(unsigned count, unsigned workers, const std::function<void(unsigned)>& fn);

}  // namespace mpcodes
