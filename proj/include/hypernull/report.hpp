#pragma once

#include "algmult.hpp"
#include "genfunc.hpp"
#include "nullvariety.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hypernull {

//! Runs fn(i) for i in [0, count) on up to `threads` workers. Results must be
//! written by index so output order does not depend on scheduling. The first
//! exception thrown by any task is rethrown.
template <typename Fn>
void parallel_for_index(std::size_t count, unsigned threads, Fn&& fn)
{
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i)
      fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure)
            failure = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers)
    w.join();
  if (failure)
    std::rethrow_exception(failure);
}

inline constexpr int kDefaultEnumerationBound = 30;

struct VerifyOptions
{
  //! gm comes from component enumeration up to this n, from the series above.
  int enumeration_bound = kDefaultEnumerationBound;
  unsigned threads = 1;
};

struct VerificationRow
{
  int n = 0;
  BigInt am;
  BigInt gm;
  bool holds = false;
  std::string am_source;
  std::string gm_source;

  bool operator==(const VerificationRow&) const = default;
};

//! Source label for gm(0) at n under the given enumeration bound.
inline Provenance gm_provenance(int n, int enumeration_bound)
{
  if (n <= 2)
    return Provenance::Override;
  return n <= enumeration_bound ? Provenance::Enumeration : Provenance::Recurrence;
}

//! gm(0) for n = 1..n_max; below the bound the enumeration value must match
//! the series value or this throws.
inline std::vector<BigInt> gm_values(int n_max, const GmSeries& series, const VerifyOptions& opt)
{
  std::vector<BigInt> gm(static_cast<std::size_t>(n_max));
  parallel_for_index(gm.size(), opt.threads, [&](std::size_t i) {
    const int n = static_cast<int>(i) + 1;
    const BigInt& from_series = series.eta_prime[static_cast<std::size_t>(n)];
    if (gm_provenance(n, opt.enumeration_bound) == Provenance::Recurrence) {
      gm[i] = from_series;
      return;
    }
    BigInt enumerated = gm_zero(n);
    if (enumerated != from_series)
      throw std::logic_error("gm(0) enumeration " + enumerated.str() + " != series " + from_series.str() +
                             " at n = " + std::to_string(n));
    gm[i] = std::move(enumerated);
  });
  return gm;
}

inline std::vector<VerificationRow> verify_rows(int n_max, const VerifyOptions& opt = {})
{
  if (n_max < 1)
    throw std::invalid_argument("n_max must be at least 1");
  const GmSeries series = gm_series(n_max);
  const auto gm = gm_values(n_max, series, opt);
  std::vector<VerificationRow> rows(static_cast<std::size_t>(n_max));
  parallel_for_index(rows.size(), opt.threads, [&](std::size_t i) {
    const int n = static_cast<int>(i) + 1;
    VerificationRow& r = rows[i];
    r.n = n;
    r.am = am_zero_closed(n, 3);
    r.gm = gm[i];
    r.holds = r.gm <= r.am;
    r.am_source = "closed-form";
    r.gm_source = to_string(gm_provenance(n, opt.enumeration_bound));
  });
  return rows;
}

inline bool all_hold(const std::vector<VerificationRow>& rows)
{
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.holds; });
}

struct NullityRow
{
  int n = 0;
  int k = 0;
  BigInt rec;
  BigInt closed;

  bool match() const { return rec == closed; }
};

inline std::vector<NullityRow> nullity_rows(int n_max, int k, unsigned threads = 1)
{
  if (n_max < 1)
    throw std::invalid_argument("n_max must be at least 1");
  std::vector<NullityRow> rows(static_cast<std::size_t>(n_max));
  parallel_for_index(rows.size(), threads, [&](std::size_t i) {
    const int n = static_cast<int>(i) + 1;
    rows[i] = {n, k, am_zero_rec(n, k), am_zero_closed(n, k)};
  });
  return rows;
}

struct SeriesRow
{
  int n = 0;
  BigInt eta;
  BigInt eta_prime;
  BigInt gm_zero;
  Provenance source = Provenance::Recurrence;
};

inline std::vector<SeriesRow> series_rows(int n_max, const VerifyOptions& opt = {})
{
  const GmSeries series = gm_series(n_max);
  const auto gm = gm_values(n_max, series, opt);
  std::vector<SeriesRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    rows.push_back({n, series.eta[i], series.eta_prime[i], gm[i - 1], gm_provenance(n, opt.enumeration_bound)});
  }
  return rows;
}

}  // namespace hypernull
