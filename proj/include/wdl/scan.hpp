#pragma once

// Exhaustive scans over the n^n unary operation tables on a carrier of size
// n. Tables are numbered lexicographically by image tuple, img[0] being the
// most significant base-n digit, so ascending TableId order is ascending lex
// order. Parallel kernels split the id range into contiguous chunks and merge
// per-chunk results in chunk order; outputs are identical to the serial
// kernels for every worker count.

#include <atomic>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wdl/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wdl {

using TableId = std::uint64_t;

// Largest n with n^n representable in 64 bits.
inline constexpr int kMaxScanCarrier = 15;

inline TableId table_space_size(int n) {
  if (n <= 0) throw EmptyCarrier();
  if (n > kMaxScanCarrier) throw CarrierTooLarge(n, kMaxScanCarrier);
  TableId s = 1;
  for (int i = 0; i < n; ++i) s *= static_cast<TableId>(n);
  return s;
}

inline void decode_table(TableId id, int n, int* img) {
  for (int i = n - 1; i >= 0; --i) {
    img[i] = static_cast<int>(id % n);
    id /= n;
  }
}

inline std::vector<int> decode_table(TableId id, int n) {
  std::vector<int> img(n);
  decode_table(id, n, img.data());
  return img;
}

inline TableId encode_table(const int* img, int n) {
  TableId id = 0;
  for (int i = 0; i < n; ++i) id = id * n + static_cast<TableId>(img[i]);
  return id;
}

// Advances img to the next tuple in lex order (base-n odometer).
inline void next_table(int* img, int n) {
  for (int i = n - 1; i >= 0; --i) {
    if (++img[i] < n) return;
    img[i] = 0;
  }
}

// Splits [0, total) into `parts` contiguous ranges of near-equal length.
inline std::vector<std::pair<TableId, TableId>> chunk_ranges(TableId total,
                                                             int parts) {
  if (parts < 1) parts = 1;
  std::vector<std::pair<TableId, TableId>> out;
  out.reserve(parts);
  const TableId base = total / parts;
  const TableId extra = total % parts;
  TableId at = 0;
  for (int c = 0; c < parts; ++c) {
    TableId len = base + (static_cast<TableId>(c) < extra ? 1 : 0);
    out.emplace_back(at, at + len);
    at += len;
  }
  return out;
}

// Ids of all tables satisfying pred, ascending. pred takes const int* img.
template <class F>
std::vector<TableId> filter_tables_serial(int n, F&& pred) {
  const TableId total = table_space_size(n);
  std::vector<TableId> out;
  std::vector<int> img(n, 0);
  for (TableId id = 0; id < total; ++id) {
    if (pred(static_cast<const int*>(img.data()))) out.push_back(id);
    next_table(img.data(), n);
  }
  return out;
}

template <class F>
std::vector<TableId> filter_tables(int n, F&& pred, int workers) {
  if (workers <= 1) return filter_tables_serial(n, pred);
  const TableId total = table_space_size(n);
  const auto chunks = chunk_ranges(total, workers * 4);
  std::vector<std::vector<TableId>> hits(chunks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
#endif
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks.size()); ++c) {
    const auto [lo, hi] = chunks[c];
    if (lo >= hi) continue;
    std::vector<int> img(n);
    decode_table(lo, n, img.data());
    for (TableId id = lo; id < hi; ++id) {
      if (pred(static_cast<const int*>(img.data()))) hits[c].push_back(id);
      next_table(img.data(), n);
    }
  }
  std::vector<TableId> out;
  for (auto& h : hits) out.insert(out.end(), h.begin(), h.end());
  return out;
}

// Least id satisfying pred, if any.
template <class F>
std::optional<TableId> first_table_serial(int n, F&& pred) {
  const TableId total = table_space_size(n);
  std::vector<int> img(n, 0);
  for (TableId id = 0; id < total; ++id) {
    if (pred(static_cast<const int*>(img.data()))) return id;
    next_table(img.data(), n);
  }
  return std::nullopt;
}

template <class F>
std::optional<TableId> first_table(int n, F&& pred, int workers) {
  if (workers <= 1) return first_table_serial(n, pred);
  const TableId total = table_space_size(n);
  const auto chunks = chunk_ranges(total, workers * 4);
  std::atomic<TableId> best{total};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
#endif
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks.size()); ++c) {
    const auto [lo, hi] = chunks[c];
    // A hit already known below this chunk beats anything in it.
    if (lo >= hi || lo >= best.load(std::memory_order_relaxed)) continue;
    std::vector<int> img(n);
    decode_table(lo, n, img.data());
    for (TableId id = lo; id < hi; ++id) {
      if (id >= best.load(std::memory_order_relaxed)) break;
      if (pred(static_cast<const int*>(img.data()))) {
        TableId cur = best.load(std::memory_order_relaxed);
        while (id < cur &&
               !best.compare_exchange_weak(cur, id, std::memory_order_relaxed))
          ;
        break;
      }
      next_table(img.data(), n);
    }
  }
  const TableId found = best.load();
  if (found == total) return std::nullopt;
  return found;
}

}  // namespace wdl
