#pragma once

namespace ratapprox {

/// Thread count used by the OpenMP kernels: the RATAPPROX_THREADS
/// environment variable when set to a positive integer, else the OpenMP
/// default. Read once per process.
int max_threads();

/// Overrides the thread cap (tests and benchmarks). Values < 1 restore the default.
void set_max_threads(int n);

}  // namespace ratapprox
