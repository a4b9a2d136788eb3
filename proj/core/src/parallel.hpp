#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace gammaq::detail {

  // fn(0), ..., fn(n-1) on up to `jobs` threads, results in index order. If
  // any call throws, the exception from the lowest index is rethrown, so the
  // outcome does not depend on scheduling.
  template <typename Fn>
  auto parallel_map(std::size_t n, unsigned jobs, Fn&& fn)
      -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
    using Result = std::invoke_result_t<Fn&, std::size_t>;
    std::vector<std::optional<Result>> slots(n);
    std::vector<std::exception_ptr>    errors(n);
    std::atomic<std::size_t>           next{0};

    auto work = [&] {
      for (auto i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        try {
          slots[i].emplace(fn(i));
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };

    auto const threads
        = std::min<std::size_t>(std::max(jobs, 1u), std::max<std::size_t>(n, 1));
    if (threads <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(threads);
      for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back(work);
      }
      for (auto& th : pool) {
        th.join();
      }
    }
    for (auto const& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
    std::vector<Result> out;
    out.reserve(n);
    for (auto& s : slots) {
      out.push_back(std::move(*s));
    }
    return out;
  }

}  // namespace gammaq::detail
