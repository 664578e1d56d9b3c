#include "knaster/kernels.hpp"

#include "knaster/random.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace knaster::kernels {

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

// Lex-first 0-triangle whose smallest vertex is x.
std::optional<Triple> triangle_from(const PairColoring& h, std::uint64_t x) {
  const std::uint64_t size = h.space_size();
  for (std::uint64_t y = x + 1; y < size; ++y) {
    if (!h.zero(x, y)) continue;
    for (std::uint64_t z = y + 1; z < size; ++z) {
      if (h.zero(x, z) && h.zero(y, z)) return Triple{x, y, z};
    }
  }
  return std::nullopt;
}

bool is_zero_triangle(const PairColoring& h, const Triple& t) {
  return h.zero(t[0], t[1]) && h.zero(t[0], t[2]) && h.zero(t[1], t[2]);
}

std::uint64_t translation_space(std::span<const Word> A, std::span<const Word> B) {
  if (A.empty()) throw std::invalid_argument("translation_scan: empty A");
  const std::size_t n = A.front().size();
  if (n > 30) throw std::invalid_argument("translation_scan: full scan needs n <= 30");
  for (const Word& w : A)
    if (w.size() != n) throw std::invalid_argument("translation_scan: length mismatch in A");
  for (const Word& w : B)
    if (w.size() != n) throw std::invalid_argument("translation_scan: length mismatch in B");
  return std::uint64_t{1} << n;
}

std::unordered_set<std::uint64_t> index_set(std::span<const Word> ws) {
  std::unordered_set<std::uint64_t> out;
  for (const Word& w : ws) out.insert(w.lex_index());
  return out;
}

bool translates_into(std::span<const std::uint64_t> a_idx, const std::unordered_set<std::uint64_t>& b_idx,
                     std::uint64_t x) {
  for (std::uint64_t a : a_idx)
    if (!b_idx.count(a ^ x)) return false;
  return true;
}

}  // namespace

std::optional<Triple> zero_triangle_exhaustive_serial(const PairColoring& h) {
  for (std::uint64_t x = 0; x < h.space_size(); ++x) {
    if (auto t = triangle_from(h, x)) return t;
  }
  return std::nullopt;
}

std::optional<Triple> zero_triangle_exhaustive_parallel(const PairColoring& h) {
  const auto size = static_cast<std::int64_t>(h.space_size());
  std::atomic<std::uint64_t> best_x{kNone};
  std::vector<std::optional<Triple>> found(static_cast<std::size_t>(size));

#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < size; ++i) {
    const auto x = static_cast<std::uint64_t>(i);
    if (x > best_x.load(std::memory_order_relaxed)) continue;
    if (auto t = triangle_from(h, x)) {
      found[static_cast<std::size_t>(i)] = t;
      std::uint64_t cur = best_x.load();
      while (x < cur && !best_x.compare_exchange_weak(cur, x)) {
      }
    }
  }
  const std::uint64_t x = best_x.load();
  if (x == kNone) return std::nullopt;
  return found[static_cast<std::size_t>(x)];
}

Triple sample_triple(std::uint64_t seed, std::uint64_t i, std::uint64_t space_size) {
  if (space_size < 3) throw std::invalid_argument("sample_triple: space has fewer than 3 words");
  std::uint64_t counter = mix64(seed ^ mix64(i));
  auto next = [&] {
    counter = mix64(counter);
    return counter % space_size;
  };
  Triple t{next(), 0, 0};
  do t[1] = next();
  while (t[1] == t[0]);
  do t[2] = next();
  while (t[2] == t[0] || t[2] == t[1]);
  std::sort(t.begin(), t.end());
  return t;
}

std::optional<std::pair<std::uint64_t, Triple>> zero_triangle_sampled_serial(const PairColoring& h,
                                                                            std::uint64_t count,
                                                                            std::uint64_t seed) {
  for (std::uint64_t i = 0; i < count; ++i) {
    const Triple t = sample_triple(seed, i, h.space_size());
    if (is_zero_triangle(h, t)) return std::pair{i, t};
  }
  return std::nullopt;
}

std::optional<std::pair<std::uint64_t, Triple>> zero_triangle_sampled_parallel(const PairColoring& h,
                                                                              std::uint64_t count,
                                                                              std::uint64_t seed) {
  std::uint64_t first = kNone;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static) reduction(min : first)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::uint64_t>(i);
    if (idx < first && is_zero_triangle(h, sample_triple(seed, idx, h.space_size()))) first = idx;
  }
  if (first == kNone) return std::nullopt;
  return std::pair{first, sample_triple(seed, first, h.space_size())};
}

std::vector<std::uint64_t> zero_neighborhood_serial(const PairColoring& h, std::uint64_t a) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < h.space_size(); ++x)
    if (h.zero(a, x)) out.push_back(x);
  return out;
}

std::vector<std::uint64_t> zero_neighborhood_parallel(const PairColoring& h, std::uint64_t a) {
  const auto size = static_cast<std::int64_t>(h.space_size());
  std::vector<char> mark(static_cast<std::size_t>(size), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < size; ++i) mark[static_cast<std::size_t>(i)] = h.zero(a, static_cast<std::uint64_t>(i));
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < mark.size(); ++i)
    if (mark[i]) out.push_back(i);
  return out;
}

std::vector<Word> translation_scan_serial(std::span<const Word> A, std::span<const Word> B) {
  const std::uint64_t space = translation_space(A, B);
  const auto b_idx = index_set(B);
  std::vector<std::uint64_t> a_idx;
  for (const Word& w : A) a_idx.push_back(w.lex_index());
  std::vector<Word> out;
  for (std::uint64_t x = 0; x < space; ++x)
    if (translates_into(a_idx, b_idx, x)) out.push_back(Word::from_lex_index(x, A.front().size()));
  return out;
}

std::vector<Word> translation_scan_parallel(std::span<const Word> A, std::span<const Word> B) {
  const std::uint64_t space = translation_space(A, B);
  const auto b_idx = index_set(B);
  std::vector<std::uint64_t> a_idx;
  for (const Word& w : A) a_idx.push_back(w.lex_index());
  std::vector<char> hit(space, 0);
  const auto n = static_cast<std::int64_t>(space);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    hit[static_cast<std::size_t>(i)] = translates_into(a_idx, b_idx, static_cast<std::uint64_t>(i));
  std::vector<Word> out;
  for (std::uint64_t x = 0; x < space; ++x)
    if (hit[x]) out.push_back(Word::from_lex_index(x, A.front().size()));
  return out;
}

}  // namespace knaster::kernels
