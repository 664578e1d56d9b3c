#include "knaster/instances.hpp"

#include "knaster/gf2.hpp"
#include "knaster/random.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace knaster {

namespace {

Word random_word(std::mt19937_64& rng, std::size_t len) {
  Word w(len);
  for (std::size_t k = 0; k < len; ++k)
    if (rng() & 1U) w = w.with_bit(k, true);
  return w;
}

}  // namespace

TranslationInstance translation_instance(std::uint64_t seed, std::uint64_t index, std::size_t max_n) {
  if (max_n < 6) throw std::invalid_argument("translation_instance: max_n must be at least 6");
  std::mt19937_64 rng(mix64(seed ^ mix64(index)));
  const std::size_t n = 6 + rng() % (max_n - 5);
  const std::size_t size = std::min<std::size_t>(n, 5 + rng() % 8);

  TranslationInstance inst;
  Gf2Eliminator elim(n);
  while (inst.B.size() < size) {
    Word w = random_word(rng, n);
    if (elim.insert(w)) inst.B.push_back(w);
  }
  inst.x = random_word(rng, n);
  std::vector<Word> pool = inst.B;
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(5 + rng() % (pool.size() - 4));
  for (Word& w : pool) w += inst.x;
  inst.A = std::move(pool);
  return inst;
}

}  // namespace knaster
