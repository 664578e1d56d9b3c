#pragma once

#include "knaster/arrange.hpp"
#include "knaster/word.hpp"

#include <span>
#include <vector>

namespace knaster {

struct SharedDecomposition {
  Word eta;  // the basis vector shared by both sums
  Word nu;
  Word rho;
};

/// For pairwise distinct a, b, c whose pairwise sums are each the sum of two
/// distinct members of the independent list B, finds pairwise distinct
/// eta, nu, rho in B with a + b = eta + nu and a + c = eta + rho.
///
/// eta is the intersection of the two-element B-supports of a + b and
/// a + c. Throws std::invalid_argument naming the offending pair when a
/// support does not have exactly two elements or the supports do not meet
/// in exactly one vector.
SharedDecomposition decompose_shared(const Word& a, const Word& b, const Word& c, std::span<const Word> B);

/// The unique x with A + x contained in B, for |A| >= 5 and A + A inside
/// B + B. Uses the three lex-least members of A to locate x, then checks
/// every member. Throws std::invalid_argument on violated preconditions
/// and LemmaViolation if the computed x fails the final check.
Word recover_translation(std::span<const Word> A, std::span<const Word> B);

enum class TranslationScan {
  Candidates,  // x ranges over {a0 + beta : beta in B} plus the zero word
  Full,        // x ranges over all of {0,1}^n, n <= 30
};

/// Every x with A + x contained in B, ascending. Independent of
/// recover_translation; used as its oracle.
std::vector<Word> brute_translation(std::span<const Word> A, std::span<const Word> B,
                                    TranslationScan scan = TranslationScan::Candidates);

}  // namespace knaster
