#include "shadowpi/group.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "shadowpi/error.hpp"

namespace shadowpi {

Word::Word(std::initializer_list<Letter> letters) {
  for (Letter l : letters) push(l);
}

Word::Word(std::vector<Letter> letters) {
  for (Letter l : letters) push(l);
}

void Word::push(Letter l) {
  if (!letters_.empty() && letters_.back() == -l) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

Word Word::power(int n) const {
  const Word base = n < 0 ? inverse() : *this;
  Word out;
  for (int i = 0; i < (n < 0 ? -n : n); ++i) out *= base;
  return out;
}

Word Word::cyclically_reduced() const {
  std::size_t lo = 0;
  std::size_t hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo] == -letters_[hi - 1]) {
    ++lo;
    --hi;
  }
  Word w;
  w.letters_.assign(letters_.begin() + lo, letters_.begin() + hi);
  return w;
}

int Word::exponent_sum(int g) const {
  int s = 0;
  for (Letter l : letters_) {
    if (generator_of(l) == g) s += l > 0 ? 1 : -1;
  }
  return s;
}

int Word::occurrences(int g) const {
  return static_cast<int>(
      std::count_if(letters_.begin(), letters_.end(), [g](Letter l) { return generator_of(l) == g; }));
}

Word& Word::operator*=(const Word& rhs) {
  for (Letter l : rhs.letters_) push(l);
  return *this;
}

int Presentation::generator_index(const std::string& name) const {
  auto it = std::find(generators.begin(), generators.end(), name);
  return it == generators.end() ? -1 : static_cast<int>(it - generators.begin());
}

std::string Presentation::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const int count = static_cast<int>(j - i);
    const int g = generator_of(ls[i]);
    if (!out.empty()) out += ' ';
    out += g < num_generators() ? generators[g] : "g" + std::to_string(g);
    const int e = ls[i] > 0 ? count : -count;
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

Word Presentation::parse(const std::string& text) const {
  std::istringstream in(text);
  std::string token;
  Word w;
  while (in >> token) {
    std::string name = token;
    int e = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      try {
        std::size_t used = 0;
        e = std::stoi(token.substr(caret + 1), &used);
        if (used != token.size() - caret - 1) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad exponent in '" + token + "'", {{"token", token}});
      }
    }
    const int g = generator_index(name);
    if (g < 0) {
      if (name == "1") continue;
      throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + name + "'", {{"generator", name}});
    }
    w *= Word{gen(g)}.power(e);
  }
  return w;
}

std::size_t Presentation::total_length() const {
  std::size_t n = 0;
  for (const auto& r : relators) n += r.size();
  return n;
}

Word canonical_relator(const Word& w) {
  const Word c = w.cyclically_reduced();
  if (c.empty()) return c;
  std::vector<Letter> best;
  for (const Word& v : {c, c.inverse()}) {
    const auto& ls = v.letters();
    for (std::size_t k = 0; k < ls.size(); ++k) {
      std::vector<Letter> rot(ls.begin() + k, ls.end());
      rot.insert(rot.end(), ls.begin(), ls.begin() + k);
      if (best.empty() || rot < best) best = std::move(rot);
    }
  }
  return Word(std::move(best));
}

namespace {

void clean_relators(Presentation& p) {
  std::set<Word> seen;
  std::vector<Word> out;
  for (const Word& r : p.relators) {
    Word c = r.cyclically_reduced();
    if (c.empty()) continue;
    if (seen.insert(canonical_relator(c)).second) out.push_back(std::move(c));
  }
  p.relators = std::move(out);
}

Word substitute(const Word& w, int g, const Word& image) {
  Word out;
  for (Letter l : w.letters()) {
    if (generator_of(l) == g) {
      out *= l > 0 ? image : image.inverse();
    } else {
      out *= Word{l};
    }
  }
  return out;
}

Word renumber_after_drop(const Word& w, int g) {
  std::vector<Letter> ls = w.letters();
  for (Letter& l : ls) {
    const int h = generator_of(l);
    if (h > g) l = l > 0 ? gen(h - 1) : inv(h - 1);
  }
  return Word(std::move(ls));
}

// Drops generator g (no longer referenced) and renumbers the rest.
void drop_generator(Presentation& p, int g) {
  p.generators.erase(p.generators.begin() + g);
  for (Word& r : p.relators) r = renumber_after_drop(r, g);
}

struct Elimination {
  int relator = -1;
  int generator = -1;
  std::size_t new_length = 0;
};

Elimination best_elimination(const Presentation& p) {
  std::vector<int> total(p.num_generators(), 0);
  for (const Word& r : p.relators) {
    for (Letter l : r.letters()) ++total[generator_of(l)];
  }
  Elimination best;
  const std::size_t len = p.total_length();
  for (int i = 0; i < static_cast<int>(p.relators.size()); ++i) {
    const Word& r = p.relators[i];
    std::vector<int> occ(p.num_generators(), 0);
    for (Letter l : r.letters()) ++occ[generator_of(l)];
    for (int g = 0; g < p.num_generators(); ++g) {
      if (occ[g] != 1) continue;
      // Each other occurrence of g becomes a word of length |r| - 1.
      const long long others = total[g] - 1;
      const long long rl = static_cast<long long>(r.size());
      const auto est = static_cast<std::size_t>(static_cast<long long>(len) - rl + others * (rl - 2));
      if (best.relator < 0 || est < best.new_length ||
          (est == best.new_length && r.size() < p.relators[best.relator].size())) {
        best = {i, g, est};
      }
    }
  }
  return best;
}

}  // namespace

SimplifyResult tietze_simplify_with_map(Presentation pres, int budget) {
  std::vector<Word> images;
  for (int g = 0; g < pres.num_generators(); ++g) images.push_back(Word{gen(g)});
  for (int pass = 0; pass < budget; ++pass) {
    clean_relators(pres);
    const std::size_t guard = std::max<std::size_t>(16 * pres.total_length(), 16);
    bool changed = false;
    while (true) {
      const Elimination e = best_elimination(pres);
      if (e.relator < 0 || e.new_length > guard) break;
      // Rotate the relator to g^s w, so g = w^-1 when s = +1 and g = w when s = -1.
      const auto& ls = pres.relators[e.relator].letters();
      const auto at = std::find_if(ls.begin(), ls.end(),
                                   [&](Letter l) { return generator_of(l) == e.generator; });
      const int sign = *at > 0 ? 1 : -1;
      std::vector<Letter> rest(at + 1, ls.end());
      rest.insert(rest.end(), ls.begin(), at);
      const Word w(std::move(rest));
      const Word image = sign > 0 ? w.inverse() : w;
      pres.relators.erase(pres.relators.begin() + e.relator);
      for (Word& r : pres.relators) r = substitute(r, e.generator, image);
      for (Word& im : images) im = substitute(im, e.generator, image);
      drop_generator(pres, e.generator);
      for (Word& im : images) im = renumber_after_drop(im, e.generator);
      clean_relators(pres);
      changed = true;
    }
    if (!changed) break;
  }
  clean_relators(pres);
  return {std::move(pres), std::move(images)};
}

Presentation tietze_simplify(Presentation pres, int budget) {
  return tietze_simplify_with_map(std::move(pres), budget).pres;
}

std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Pivot: smallest nonzero absolute value in the trailing block.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) return diag;
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const mpz_class q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const mpz_class q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) dirty = true;
      }
      if (dirty) continue;
      // Enforce divisibility of the remaining block by the pivot.
      bool fixed = true;
      for (std::size_t i = t + 1; i < rows && fixed; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            fixed = false;
            break;
          }
        }
      }
      if (fixed) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

AbelianInvariants abelianization(const Presentation& pres) {
  const int n = pres.num_generators();
  std::vector<std::vector<mpz_class>> m;
  for (const Word& r : pres.relators) {
    std::vector<mpz_class> row(n);
    for (int g = 0; g < n; ++g) row[g] = r.exponent_sum(g);
    m.push_back(std::move(row));
  }
  AbelianInvariants inv;
  const auto diag = m.empty() ? std::vector<mpz_class>{} : smith_diagonal(std::move(m));
  inv.rank = n - static_cast<int>(diag.size());
  for (const auto& d : diag) {
    if (d > 1) inv.torsion.push_back(d);
  }
  std::sort(inv.torsion.begin(), inv.torsion.end());
  return inv;
}

}  // namespace shadowpi
