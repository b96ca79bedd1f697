#pragma once

// Instance sweep kernel shared by every registered check.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include <omp.h>

#include "bpair/modelcheck.hpp"

namespace bpair::detail {

struct Tally {
  std::uint64_t instances = 0;
  std::vector<Witness> witnesses;

  void fail(std::uint64_t instance, std::string detail) {
    witnesses.push_back({instance, std::move(detail)});
  }
  void merge(Tally&& other) {
    instances += other.instances;
    witnesses.insert(witnesses.end(), std::make_move_iterator(other.witnesses.begin()),
                     std::make_move_iterator(other.witnesses.end()));
  }
};

/// Runs body(i, tally) for i in [0, count). Witnesses come back sorted.
template <class Body>
Tally sweep_serial(std::uint64_t count, Body&& body) {
  Tally total;
  for (std::uint64_t i = 0; i < count; ++i) body(i, total);
  std::sort(total.witnesses.begin(), total.witnesses.end());
  return total;
}

template <class Body>
Tally sweep_parallel(std::uint64_t count, Body&& body) {
  Tally total;
  std::exception_ptr error;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel
  {
    Tally local;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        body(static_cast<std::uint64_t>(i), local);
      } catch (...) {
#pragma omp critical(bpair_sweep_error)
        if (!error) error = std::current_exception();
      }
    }
#pragma omp critical(bpair_sweep_merge)
    total.merge(std::move(local));
  }
  if (error) std::rethrow_exception(error);
  std::sort(total.witnesses.begin(), total.witnesses.end());
  return total;
}

template <class Body>
Tally sweep(Execution exec, std::uint64_t count, Body&& body) {
  return exec == Execution::serial ? sweep_serial(count, std::forward<Body>(body))
                                   : sweep_parallel(count, std::forward<Body>(body));
}

}  // namespace bpair::detail
