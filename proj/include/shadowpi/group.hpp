#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace shadowpi {

// A generator letter: +(g+1) for generator g, -(g+1) for its inverse.
using Letter = int;

inline constexpr Letter gen(int g) { return g + 1; }
inline constexpr Letter inv(int g) { return -(g + 1); }
inline constexpr int generator_of(Letter l) { return (l > 0 ? l : -l) - 1; }

// Freely reduced word in a free group.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word power(int n) const;
  // Conjugate to a cyclically reduced word.
  Word cyclically_reduced() const;
  int exponent_sum(int g) const;
  int occurrences(int g) const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }
  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  void push(Letter l);
  std::vector<Letter> letters_;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  int num_generators() const { return static_cast<int>(generators.size()); }
  int generator_index(const std::string& name) const;
  std::string format(const Word& w) const;
  // Parses "x1 y2.0^-1 x1" style words; throws UnknownGenerator.
  Word parse(const std::string& text) const;
  std::size_t total_length() const;
};

// Canonical representative of a relator up to cyclic permutation and
// inversion, used for de-duplication.
Word canonical_relator(const Word& w);

Presentation tietze_simplify(Presentation pres, int budget = 64);

struct SimplifyResult {
  Presentation pres;
  // Image of every original generator as a word in the simplified generators.
  std::vector<Word> images;
};

SimplifyResult tietze_simplify_with_map(Presentation pres, int budget = 64);

struct AbelianInvariants {
  int rank = 0;
  std::vector<mpz_class> torsion;  // d1 | d2 | ..., each > 1

  bool operator==(const AbelianInvariants&) const = default;
};

// Nonzero diagonal entries of the Smith normal form of an integer matrix,
// positive, each dividing the next.
std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> m);
AbelianInvariants abelianization(const Presentation& pres);

}  // namespace shadowpi
