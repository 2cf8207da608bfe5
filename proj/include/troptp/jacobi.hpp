#pragma once

// Tropical elementary Jacobi matrices and factorization words.
//
// Letters (indices are 1-based, as in the usual notation):
//   Lower(i),   1 <= i < n : identity with s at (i, i+1)
//   Barred(i),  1 <= i < n : identity with s at (i+1, i)
//   Circled(i), 1 <= i <= n: identity with s at (i, i)
// Text form: "i", "bi", "ci".

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "troptp/network.hpp"
#include "troptp/tropical.hpp"

namespace troptp {

enum class LetterKind { Lower, Barred, Circled };

struct Letter {
  LetterKind kind = LetterKind::Lower;
  std::size_t index = 1;

  static Letter lower(std::size_t i) { return {LetterKind::Lower, i}; }
  static Letter barred(std::size_t i) { return {LetterKind::Barred, i}; }
  static Letter circled(std::size_t i) { return {LetterKind::Circled, i}; }

  bool valid_for(std::size_t n) const;

  friend bool operator==(const Letter&, const Letter&) = default;
};

std::string to_string(const Letter& letter);

class Word {
 public:
  Word() = default;
  /// Throws Error(BadIndex) if a letter is out of range for n.
  Word(std::size_t n, std::vector<Letter> letters);

  std::size_t n() const noexcept { return n_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Letter> letters_;
};

/// Space separated letters, e.g. "b2 b1 b2 c1 c2 c3 2 1 2".
std::string to_string(const Word& word);
Word parse_word(std::string_view text, std::size_t n);

using ParamVector = std::vector<Rational>;

TropMatrix jacobi_matrix(const Letter& letter, const Rational& s, std::size_t n);

/// Left layers (barred), all circled letters, right layers (unbarred);
/// length n^2. The k-th factor is the elementary matrix of the k-th arc
/// layer of G_n.
Word canonical_word(std::size_t n);

/// (i, j) cells of W (0-based) in the order the canonical word consumes
/// them: left layers, diagonal, right layers.
std::vector<std::pair<std::size_t, std::size_t>> canonical_weight_cells(std::size_t n);

ParamVector weight_sequence(const WeightMatrix& w);

/// Left-to-right tropical product of the letters' Jacobi matrices. The
/// empty word over n gives the tropical identity. Throws Error(Shape) on a
/// length mismatch.
TropMatrix evaluate_word(const Word& word, const ParamVector& params);

/// The unique parameters of the canonical word producing a TP matrix.
/// Throws Error(NotTp) otherwise: off TP the preimage is not unique.
ParamVector recover_params(const TropMatrix& a);

/// True iff the word shuffles a reduced word of the order-reversing
/// permutation in barred letters, one in unbarred letters, and each
/// circled letter exactly once.
bool validate_scheme(const Word& word);

enum class Direction { Forward, Backward };

/// Tropical commutation move at position i (1 <= i < n):
///   x_i(s1) x_(i)(s2) x_(i+1)(s3) x_bar(i)(s4)
///     = x_bar(i)(s1') x_(i)(s2') x_(i+1)(s3') x_i(s4')
/// Forward maps s to s', Backward maps s' back to s.
std::array<Rational, 4> commutation_map(const std::array<Rational, 4>& s, Direction direction, std::size_t i,
                                        std::size_t n);

/// The two four-letter words related by commutation_map (left side, right side).
std::pair<Word, Word> commutation_words(std::size_t i, std::size_t n);

}  // namespace troptp
