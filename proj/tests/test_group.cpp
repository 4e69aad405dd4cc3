#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <cstdint>
#include <random>

#include "shadowpi/finite_group.hpp"
#include "shadowpi/group.hpp"
#include "support.hpp"

using namespace testing;

namespace {

// Determinantal divisors: d_k = gcd of all k x k minors; the Smith diagonal
// is d_k / d_{k-1}. Only for tiny matrices.
mpz_class det(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  mpz_class sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<mpz_class> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(a[r][k]);
      }
      minor.push_back(row);
    }
    sum += (c % 2 ? -1 : 1) * a[0][c] * det(minor);
  }
  return sum;
}

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<mpz_class> divisor_oracle(const std::vector<std::vector<mpz_class>>& m) {
  const int rows = static_cast<int>(m.size()), cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<int>> rs, cs;
    std::vector<int> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    mpz_class g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        std::vector<std::vector<mpz_class>> sub(k, std::vector<mpz_class>(k));
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
        }
        mpz_class d = det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

}  // namespace

TEST_CASE("words reduce freely") {
  const Word w{gen(0), gen(1), inv(1), inv(0), gen(2)};
  CHECK(w == Word{gen(2)});
  CHECK((Word{gen(0), gen(1)} * Word{inv(1), gen(0)}) == Word{gen(0), gen(0)});
  CHECK(Word{gen(0), inv(1)}.inverse() == Word{gen(1), inv(0)});
  CHECK(Word{gen(0)}.power(-3) == Word{inv(0), inv(0), inv(0)});
  CHECK(Word{gen(0), gen(1), inv(0)}.cyclically_reduced() == Word{gen(1)});
  const Word v{gen(0), gen(1), gen(0), inv(1)};
  CHECK(v.exponent_sum(0) == 2);
  CHECK(v.exponent_sum(1) == 0);
  CHECK(v.occurrences(1) == 2);
}

TEST_CASE("presentation text round trip") {
  const Presentation p = pres({"x", "y2.0"}, {"x y2.0^-1 x^3", "1"});
  CHECK(p.relators[0] == Word{gen(0), inv(1), gen(0), gen(0), gen(0)});
  CHECK(p.relators[1].empty());
  CHECK(p.format(p.relators[0]) == "x y2.0^-1 x^3");
  CHECK(p.format(Word{}) == "1");
  CHECK(p.parse(p.format(p.relators[0])) == p.relators[0]);
  CHECK(error_of([&] { p.parse("z"); }) == ErrorCode::UnknownGenerator);
}

TEST_CASE("canonical relators") {
  const Word w{gen(0), gen(1), inv(0), inv(1)};
  const Word rot{gen(1), inv(0), inv(1), gen(0)};
  CHECK(canonical_relator(w) == canonical_relator(rot));
  CHECK(canonical_relator(w) == canonical_relator(w.inverse()));
  CHECK(canonical_relator(w) != canonical_relator(Word{gen(0), gen(1)}));
}

TEST_CASE("tietze examples") {
  auto simple = tietze_simplify(pres({"x", "y"}, {"x y^-1"}));
  CHECK(simple.num_generators() == 1);
  CHECK(simple.relators.empty());

  auto cleaned = tietze_simplify(pres({"x"}, {"1"}));
  CHECK(cleaned.num_generators() == 1);
  CHECK(cleaned.relators.empty());

  auto dup = tietze_simplify(pres({"x", "y"}, {"x y x^-1 y^-1", "y x^-1 y^-1 x", "y x y^-1 x^-1"}));
  CHECK(dup.relators.size() == 1);

  auto with_map = tietze_simplify_with_map(pres({"a", "b", "c"}, {"a b c^-1"}));
  CHECK(with_map.pres.num_generators() == 2);
  CHECK(with_map.images.size() == 3);
  // c's image is the product of the images of a and b.
  CHECK(with_map.images[2] == with_map.images[0] * with_map.images[1]);
}

TEST_CASE("abelianization examples") {
  CHECK(abelianization(pres({"x", "y"}, {"x y x^-1 y^-1"})) == AbelianInvariants{2, {}});
  CHECK(abelianization(pres({"x", "y"}, {"x y x y^-1 x^-1 y^-1"})) == AbelianInvariants{1, {}});
  CHECK(abelianization(pres({"x"}, {"x^3"})) == AbelianInvariants{0, {3}});
  CHECK(abelianization(pres({"x", "y"}, {"x^2", "y^4"})) == AbelianInvariants{0, {2, 4}});
  CHECK(abelianization(pres({"x", "y"}, {"x^2", "y^3"})) == AbelianInvariants{0, {6}});
  CHECK(abelianization(pres({"x", "y", "z"}, {})) == AbelianInvariants{3, {}});
}

TEST_CASE("smith diagonal agrees with determinantal divisors") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 4), cols = 1 + static_cast<int>(rng() % 4);
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
    for (auto& row : m) {
      for (auto& x : row) x = static_cast<long>(rng() % 13) - 6;
    }
    const auto d = smith_diagonal(m);
    CHECK(d == divisor_oracle(m));
    for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i] % d[i - 1] == 0);
  }
  // Entries beyond 64 bits.
  const mpz_class big("123456789012345678901234567890");
  CHECK(smith_diagonal({{big * 2, 0}, {0, big * 3}}) == std::vector<mpz_class>{big, big * 6});
}

TEST_CASE("abelianization ignores added commutators") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Presentation p;
    p.generators = {"a", "b", "c"};
    for (int r = 0; r < 2; ++r) {
      std::vector<Letter> letters;
      for (int i = 0; i < 6; ++i) letters.push_back((rng() % 2 ? 1 : -1) * static_cast<int>(1 + rng() % 3));
      p.relators.push_back(Word(letters));
    }
    Presentation q = p;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) q.relators.push_back(Word{gen(i), gen(j), inv(i), inv(j)});
    }
    CHECK(abelianization(p) == abelianization(q));
  }
}

TEST_CASE("tietze keeps the fingerprint") {
  std::vector<Presentation> corpus{
      pres({"x", "y", "z"}, {"x y z^-1", "z x z^-1 y^-1"}),
      pres({"a", "b", "c", "d"}, {"a b a^-1 c^-1", "c d c^-1 b^-1", "d a d^-1 a^-1"}),
      pres({"x", "y"}, {"x y x y^-1 x^-1 y^-1"}),
      pres({"x", "y", "z"}, {"x^2 y^-1", "y z^3", "z x z^-1 x^-1"}),
  };
  for (const char* name : {"fig15.shadow.json", "fig16.shadow.json"}) {
    const auto s = load_shadow(name);
    corpus.push_back(present(s, select_regions(s, Preset::Yabc), auto_cut(s.map())));
  }
  // Unsimplified shadow presentations are past the default ceiling; the
  // pruned search still finishes for the small groups.
  const std::vector<FiniteGroup> groups{builtin_group("S3"), builtin_group("Z3")};
  auto raw = [&](const Presentation& p) {
    std::vector<std::uint64_t> counts;
    for (const auto& g : groups) counts.push_back(count_homs(p, g, UINT64_MAX));
    return std::make_pair(abelianization(p), counts);
  };
  for (const auto& p : corpus) {
    const Presentation q = tietze_simplify(p);
    CHECK(q.num_generators() <= p.num_generators());
    CHECK(raw(q) == raw(p));
  }
  const auto s = load_shadow("fig15.shadow.json");
  const auto q = tietze_simplify(present(s, select_regions(s, Preset::Yabc), auto_cut(s.map())));
  CHECK(q.num_generators() <= 2);
  CHECK(q.relators.size() == 1);
}
