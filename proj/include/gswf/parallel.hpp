#pragma once

#include <cstddef>
#include <functional>

namespace gswf {

/// Worker cap: GSWF_THREADS when set to a positive integer, else hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, count) across worker_count() threads. Each index is
/// processed exactly once; callers write results into per-index slots and reduce
/// them in index order, so the outcome does not depend on the number of workers.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double v) noexcept;
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace gswf
