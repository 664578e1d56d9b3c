#include "knaster/arrange.hpp"

#include "knaster/kernels.hpp"

#include <algorithm>
#include <set>

namespace knaster {

namespace {

std::vector<Word> sorted_unique(std::span<const Word> words) {
  std::vector<Word> out(words.begin(), words.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty()) {
    for (const Word& w : out)
      if (w.size() != out.front().size()) throw std::invalid_argument("find_four_arrangement: length mismatch");
  }
  return out;
}

std::string describe(std::uint64_t index, std::size_t ell) { return Word::from_lex_index(index, ell).to_string(); }

}  // namespace

bool is_four_arrangement(const Word& a, const Word& b, const Word& c, const Word& d) {
  if (a.size() != b.size() || a.size() != c.size() || a.size() != d.size()) {
    throw std::invalid_argument("is_four_arrangement: length mismatch");
  }
  if (a.size() <= 1) throw std::invalid_argument("is_four_arrangement: words must have length > 1");
  if (!(lex_less(a, b) && lex_less(b, c) && lex_less(c, d))) return false;
  const auto k = first_diff(a, c);
  return k == first_diff(b, c) && k == first_diff(a, d) && k == first_diff(b, d);
}

std::optional<Quadruple> find_four_arrangement_exhaustive(std::span<const Word> words) {
  const std::vector<Word> s = sorted_unique(words);
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
          if (is_four_arrangement(s[i], s[j], s[k], s[l])) return Quadruple{s[i], s[j], s[k], s[l]};
  return std::nullopt;
}

std::optional<Quadruple> find_four_arrangement_split(std::span<const Word> words) {
  const std::vector<Word> s = sorted_unique(words);
  if (s.size() < 4) return std::nullopt;
  const std::size_t ell = s.front().size();
  for (std::size_t k = 0; k < ell; ++k) {
    std::size_t begin = 0;
    while (begin < s.size()) {
      // Sorted order keeps each length-k prefix class contiguous, with the
      // bit-k = 0 members ahead of the bit-k = 1 members.
      std::size_t end = begin + 1;
      while (end < s.size() && first_diff(s[end - 1], s[end]).value() >= k) ++end;
      std::size_t zeros = 0;
      while (begin + zeros < end && !s[begin + zeros][k]) ++zeros;
      const std::size_t ones = end - begin - zeros;
      if (zeros >= 2 && ones >= 2) {
        return Quadruple{s[begin], s[begin + 1], s[begin + zeros], s[begin + zeros + 1]};
      }
      begin = end;
    }
  }
  return std::nullopt;
}

std::optional<Quadruple> find_four_arrangement(std::span<const Word> words) {
  if (words.size() <= 64) return find_four_arrangement_exhaustive(words);
  return find_four_arrangement_split(words);
}

std::optional<std::array<Word, 3>> check_no_zero_triangle(const PairColoring& h, TriangleCheckMode mode) {
  std::optional<kernels::Triple> hit;
  if (mode.kind == TriangleCheckMode::Kind::Exhaustive) {
    if (h.ell() > 8) {
      throw std::invalid_argument("check_no_zero_triangle: exhaustive mode needs ell <= 8 (ell = " +
                                  std::to_string(h.ell()) + " has too many triples); use sampled mode");
    }
    hit = kernels::zero_triangle_exhaustive_parallel(h);
  } else if (auto s = kernels::zero_triangle_sampled_parallel(h, mode.count, mode.seed)) {
    hit = s->second;
  }
  if (!hit) return std::nullopt;
  return std::array<Word, 3>{Word::from_lex_index((*hit)[0], h.ell()), Word::from_lex_index((*hit)[1], h.ell()),
                             Word::from_lex_index((*hit)[2], h.ell())};
}

std::vector<Word> zero_neighborhood(const PairColoring& h, const Word& a) {
  if (a.size() != h.ell()) throw std::invalid_argument("zero_neighborhood: word length differs from ell");
  std::vector<Word> out;
  for (std::uint64_t x : kernels::zero_neighborhood_parallel(h, a.lex_index()))
    out.push_back(Word::from_lex_index(x, h.ell()));
  return out;
}

std::optional<std::string> verify_certificate(const PairColoring& h, const ArrangementCertificate& cert) {
  const std::set<Word> members(cert.members.begin(), cert.members.end());
  if (members.size() != cert.members.size()) return "duplicate members";
  if (members.size() < 5) return "fewer than 5 members";
  for (const Word& w : members)
    if (w.size() != h.ell()) return "member " + w.to_string() + " has the wrong length";
  for (auto i = members.begin(); i != members.end(); ++i) {
    for (auto j = std::next(i); j != members.end(); ++j) {
      if (h.color(*i, *j) != 1) return "pair {" + i->to_string() + ", " + j->to_string() + "} has color 0";
    }
  }
  for (const Word& w : cert.arrangement)
    if (!members.count(w)) return "arrangement element " + w.to_string() + " is not a member";
  const auto& [a, b, c, d] = cert.arrangement;
  if (!is_four_arrangement(a, b, c, d)) return "quadruple is not a 4-arrangement";
  return std::nullopt;
}

namespace {

class Extractor {
 public:
  explicit Extractor(const PairColoring& h) : h_(h), ell_(h.ell()) {}

  ArrangementCertificate run() {
    const std::uint64_t a = 0;
    note("a = " + describe(a, ell_));

    std::optional<std::uint64_t> d;
    for (std::uint64_t x = h_.space_size(); x-- > 0;) {
      if (x != a && !h_.zero(a, x)) {
        d = x;
        break;
      }
    }
    if (!d) {
      note("every x != a is 0-colored against a");
      return from_zero_neighborhood(a);
    }
    note("d = " + describe(*d, ell_));
    if ((*d >> 3) != (h_.space_size() >> 3) - 1) {
      note("d does not start with 1^(ell-3): all extensions of 1^(ell-3) lie in Z_a");
      return from_zero_neighborhood(a);
    }

    const auto b = staged_pick(0b01, 2, {a, *d}, "b");
    if (!b.element) return from_zero_neighborhood(b.failed_filter);
    const auto c = staged_pick(0b10, 2, {a, *b.element, *d}, "c");
    if (!c.element) return from_zero_neighborhood(c.failed_filter);
    const auto e = staged_pick(0b001, 3, {a, *b.element, *c.element, *d}, "e");
    if (!e.element) return from_zero_neighborhood(e.failed_filter);

    ArrangementCertificate cert;
    const std::array<std::uint64_t, 5> picked{a, *b.element, *c.element, *d, *e.element};
    for (std::uint64_t x : picked) cert.members.push_back(word(x));
    std::sort(cert.members.begin(), cert.members.end());
    cert.arrangement = {word(a), word(*b.element), word(*c.element), word(*d)};
    cert.origin = "staged";
    return finish(std::move(cert));
  }

 private:
  struct PickResult {
    std::optional<std::uint64_t> element;
    std::uint64_t failed_filter = 0;
  };

  bool ok(std::uint64_t filter, std::uint64_t x) const { return x != filter && !h_.zero(filter, x); }

  // Stage t works on cells at level ell - 3(t+1) carrying `pattern` in
  // their first `pattern_bits` coordinates. Stage 0 picks, in each cell,
  // the lex-least extension colored 1 against filters[0]; stage t picks,
  // for each cell, the lex-first child cell whose pick is colored 1
  // against filters[t]. The final pick takes the lex-first surviving cell
  // colored 1 against the last filter.
  PickResult staged_pick(std::uint64_t pattern, std::size_t pattern_bits, const std::vector<std::uint64_t>& filters,
                         const std::string& label) {
    const std::size_t stages = filters.size() - 1;
    const std::size_t first_level = ell_ - 3;

    std::vector<std::uint64_t> chosen(std::size_t{1} << (first_level - pattern_bits));
    const std::uint64_t base0 = pattern << (first_level - pattern_bits);
    for (std::size_t cell = 0; cell < chosen.size(); ++cell) {
      const std::uint64_t sigma = base0 + cell;
      std::optional<std::uint64_t> pick;
      for (std::uint64_t x = sigma << 3; x < (sigma << 3) + 8; ++x) {
        if (ok(filters[0], x)) {
          pick = x;
          break;
        }
      }
      if (!pick) {
        note(label + ": every extension of " + describe(sigma, first_level) + " is 0-colored against " +
             describe(filters[0], ell_));
        return {std::nullopt, filters[0]};
      }
      chosen[cell] = *pick;
    }

    for (std::size_t t = 1; t < stages; ++t) {
      const std::size_t level = ell_ - 3 * (t + 1);
      std::vector<std::uint64_t> next(chosen.size() >> 3);
      for (std::size_t cell = 0; cell < next.size(); ++cell) {
        std::optional<std::uint64_t> pick;
        for (std::size_t child = cell << 3; child < (cell << 3) + 8; ++child) {
          if (ok(filters[t], chosen[child])) {
            pick = chosen[child];
            break;
          }
        }
        if (!pick) {
          const std::uint64_t rho = (pattern << (level - pattern_bits)) + cell;
          note(label + ": all picks below " + describe(rho, level) + " are 0-colored against " +
               describe(filters[t], ell_));
          return {std::nullopt, filters[t]};
        }
        next[cell] = *pick;
      }
      chosen = std::move(next);
    }

    for (std::uint64_t x : chosen) {
      if (ok(filters.back(), x)) {
        note(label + " = " + describe(x, ell_));
        return {x, 0};
      }
    }
    note(label + ": every candidate is 0-colored against " + describe(filters.back(), ell_));
    return {std::nullopt, filters.back()};
  }

  ArrangementCertificate from_zero_neighborhood(std::uint64_t f) {
    const std::vector<std::uint64_t> z = kernels::zero_neighborhood_parallel(h_, f);
    note("|Z_" + describe(f, ell_) + "| = " + std::to_string(z.size()));
    if (z.size() < 5) fail("zero neighborhood of a failed filter point has fewer than 5 members");
    std::vector<Word> words;
    words.reserve(z.size());
    for (std::uint64_t x : z) words.push_back(word(x));
    const auto quad = find_four_arrangement(words);
    if (!quad) fail("zero neighborhood of a failed filter point contains no 4-arrangement");

    ArrangementCertificate cert;
    cert.arrangement = *quad;
    cert.members.assign(quad->begin(), quad->end());
    for (const Word& w : words) {
      if (std::find(quad->begin(), quad->end(), w) == quad->end()) {
        cert.members.push_back(w);
        break;
      }
    }
    std::sort(cert.members.begin(), cert.members.end());
    cert.origin = "zero-neighborhood:" + describe(f, ell_);
    return finish(std::move(cert));
  }

  ArrangementCertificate finish(ArrangementCertificate cert) {
    if (auto why = verify_certificate(h_, cert)) fail("certificate failed re-verification: " + *why);
    cert.trace = trace_;
    return cert;
  }

  [[noreturn]] void fail(const std::string& why) {
    note(why);
    throw LemmaViolation("extract_homogeneous: " + why + " (is the coloring free of 0-triangles?)", trace_);
  }

  void note(std::string line) { trace_.push_back(std::move(line)); }
  Word word(std::uint64_t x) const { return Word::from_lex_index(x, ell_); }

  const PairColoring& h_;
  std::size_t ell_;
  std::vector<std::string> trace_;
};

}  // namespace

ArrangementCertificate extract_homogeneous(const PairColoring& h) {
  if (h.ell() < 16) {
    throw std::invalid_argument("extract_homogeneous: ell must be at least 16 (got " + std::to_string(h.ell()) + ")");
  }
  return Extractor(h).run();
}

}  // namespace knaster
