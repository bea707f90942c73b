#pragma once

#include <cstddef>
#include <functional>

namespace simplicia {

// Worker count used when a caller passes 0: set_default_jobs, else
// SIMPLICIA_JOBS, else the hardware concurrency.
int default_jobs();
void set_default_jobs(int jobs);

// Runs body(0..count-1) on up to `jobs` threads, in batches of `jobs` indices.
// Stops after the first batch in which stop() becomes true.
void run_batches(std::size_t count, int jobs, const std::function<void(std::size_t)>& body,
                 const std::function<bool()>& stop);

}  // namespace simplicia
