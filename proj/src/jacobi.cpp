#include "troptp/jacobi.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "troptp/error.hpp"
#include "troptp/parametrization.hpp"
#include "troptp/positivity.hpp"

namespace troptp {

bool Letter::valid_for(std::size_t n) const {
  if (index < 1) return false;
  return kind == LetterKind::Circled ? index <= n : index < n;
}

std::string to_string(const Letter& letter) {
  switch (letter.kind) {
    case LetterKind::Lower: return std::to_string(letter.index);
    case LetterKind::Barred: return "b" + std::to_string(letter.index);
    case LetterKind::Circled: return "c" + std::to_string(letter.index);
  }
  return "?";
}

Word::Word(std::size_t n, std::vector<Letter> letters) : n_(n), letters_(std::move(letters)) {
  for (const Letter& l : letters_) {
    if (!l.valid_for(n_)) throw Error(ErrorCode::BadIndex, "letter " + to_string(l) + " invalid for n=" + std::to_string(n_));
  }
}

std::string to_string(const Word& word) {
  std::string out;
  for (const Letter& l : word.letters()) {
    if (!out.empty()) out += ' ';
    out += to_string(l);
  }
  return out;
}

Word parse_word(std::string_view text, std::size_t n) {
  std::istringstream in{std::string(text)};
  std::vector<Letter> letters;
  std::string token;
  while (in >> token) {
    LetterKind kind = LetterKind::Lower;
    std::string digits = token;
    if (token.front() == 'b' || token.front() == 'c') {
      kind = token.front() == 'b' ? LetterKind::Barred : LetterKind::Circled;
      digits = token.substr(1);
    }
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      throw Error(ErrorCode::Parse, "bad letter '" + token + "'");
    }
    letters.push_back({kind, std::stoul(digits)});
  }
  return Word(n, std::move(letters));
}

TropMatrix jacobi_matrix(const Letter& letter, const Rational& s, std::size_t n) {
  if (!letter.valid_for(n)) throw Error(ErrorCode::BadIndex, "letter " + to_string(letter) + " invalid for n=" + std::to_string(n));
  TropMatrix m = TropMatrix::identity(n);
  const std::size_t i = letter.index - 1;
  switch (letter.kind) {
    case LetterKind::Lower: m(i, i + 1) = s; break;
    case LetterKind::Barred: m(i + 1, i) = s; break;
    case LetterKind::Circled: m(i, i) = s; break;
  }
  return m;
}

Word canonical_word(std::size_t n) {
  std::vector<Letter> letters;
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t m = 1; m <= k; ++m) letters.push_back(Letter::barred(n - k + m - 1));
  for (std::size_t i = 1; i <= n; ++i) letters.push_back(Letter::circled(i));
  for (std::size_t k = n - 1; k >= 1 && n > 1; --k)
    for (std::size_t m = 1; m <= k; ++m) letters.push_back(Letter::lower(n - m));
  return Word(n, std::move(letters));
}

std::vector<std::pair<std::size_t, std::size_t>> canonical_weight_cells(std::size_t n) {
  // 1-based formulas, converted on push
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t m = 1; m <= k; ++m) cells.emplace_back(n - k + m - 1, m - 1);
  for (std::size_t i = 0; i < n; ++i) cells.emplace_back(i, i);
  for (std::size_t k = n - 1; k >= 1 && n > 1; --k)
    for (std::size_t m = 1; m <= k; ++m) cells.emplace_back(k - m, n - m);
  return cells;
}

ParamVector weight_sequence(const WeightMatrix& w) {
  ParamVector out;
  for (const auto& [i, j] : canonical_weight_cells(w.n())) out.push_back(w(i, j));
  return out;
}

TropMatrix evaluate_word(const Word& word, const ParamVector& params) {
  if (word.size() != params.size()) throw Error(ErrorCode::Shape, "word and parameter lengths differ");
  TropMatrix acc = TropMatrix::identity(word.n());
  for (std::size_t k = 0; k < word.size(); ++k) {
    acc = trop_matmul(acc, jacobi_matrix(word.letters()[k], params[k], word.n()));
  }
  return acc;
}

ParamVector recover_params(const TropMatrix& a) {
  if (!a.is_square() || !a.all_finite() || !is_tp(a)) {
    throw Error(ErrorCode::NotTp,
                "matrix is not tropically totally positive; several parameter vectors may produce it");
  }
  return weight_sequence(phi(a));
}

bool validate_scheme(const Word& word) {
  const std::size_t n = word.n();
  if (word.size() != n * n) return false;
  std::vector<std::size_t> barred_perm(n), lower_perm(n);
  std::iota(barred_perm.begin(), barred_perm.end(), 0);
  std::iota(lower_perm.begin(), lower_perm.end(), 0);
  std::size_t barred_len = 0, lower_len = 0;
  std::vector<int> circled_seen(n + 1, 0);
  for (const Letter& l : word.letters()) {
    switch (l.kind) {
      case LetterKind::Barred:
        std::swap(barred_perm[l.index - 1], barred_perm[l.index]);
        ++barred_len;
        break;
      case LetterKind::Lower:
        std::swap(lower_perm[l.index - 1], lower_perm[l.index]);
        ++lower_len;
        break;
      case LetterKind::Circled: ++circled_seen[l.index]; break;
    }
  }
  // length n(n-1)/2 equals the inversion count of the reversal, so a word
  // of that length evaluating to the reversal is reduced
  const std::size_t reduced_length = n * (n - 1) / 2;
  std::vector<std::size_t> reversal(n);
  std::iota(reversal.rbegin(), reversal.rend(), 0);
  if (barred_len != reduced_length || lower_len != reduced_length) return false;
  if (barred_perm != reversal || lower_perm != reversal) return false;
  return std::all_of(circled_seen.begin() + 1, circled_seen.end(), [](int c) { return c == 1; });
}

std::array<Rational, 4> commutation_map(const std::array<Rational, 4>& s, Direction direction, std::size_t i,
                                        std::size_t n) {
  if (i < 1 || i >= n) throw Error(ErrorCode::BadIndex, "commutation position must satisfy 1 <= i < n");
  const auto& [s1, s2, s3, s4] = s;
  if (direction == Direction::Forward) {
    const Rational t = std::max(s2, Rational(s1 + s3 + s4));
    return {s3 + s4 - t, t, s2 + s3 - t, s1 + s3 - t};
  }
  // inverse of the forward move, obtained from the classical relation
  // x_bar(a) x_(i)(b) x_(j)(c) x_i(d) = x_i(bd/T) x_(i)(bc/T) x_(j)(T) x_bar(ab/T), T = c + abd
  const Rational t = std::max(s3, Rational(s1 + s2 + s4));
  return {s2 + s4 - t, s2 + s3 - t, t, s1 + s2 - t};
}

std::pair<Word, Word> commutation_words(std::size_t i, std::size_t n) {
  return {Word(n, {Letter::lower(i), Letter::circled(i), Letter::circled(i + 1), Letter::barred(i)}),
          Word(n, {Letter::barred(i), Letter::circled(i), Letter::circled(i + 1), Letter::lower(i)})};
}

}  // namespace troptp
