#include "shadowpi/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "shadowpi/error.hpp"

namespace shadowpi {

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

// Closure of a generating set of permutations; identity gets index 0.
FiniteGroup from_generators(std::string name, int degree, const std::vector<Perm>& gens) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  std::map<Perm, int> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Perm& g : gens) {
      Perm p = compose(elems[i], g);
      if (index.emplace(p, static_cast<int>(elems.size())).second) elems.push_back(std::move(p));
    }
  }
  FiniteGroup grp;
  grp.name = std::move(name);
  grp.order = static_cast<int>(elems.size());
  grp.mul.resize(grp.order * grp.order);
  grp.inverse.resize(grp.order);
  for (int a = 0; a < grp.order; ++a) {
    for (int b = 0; b < grp.order; ++b) {
      const int c = index.at(compose(elems[a], elems[b]));
      grp.mul[a * grp.order + b] = c;
      if (c == 0) grp.inverse[a] = b;
    }
  }
  return grp;
}

Perm cycle_perm(int n, int shift) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = (i + shift) % n;
  return p;
}

Perm transposition(int n, int i, int j) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[i], p[j]);
  return p;
}

}  // namespace

bool FiniteGroup::is_group() const {
  if (order <= 0 || static_cast<int>(mul.size()) != order * order) return false;
  for (int a = 0; a < order; ++a) {
    if (product(0, a) != a || product(a, 0) != a) return false;
    if (product(a, inverse[a]) != 0 || product(inverse[a], a) != 0) return false;
  }
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      for (int c = 0; c < order; ++c) {
        if (product(product(a, b), c) != product(a, product(b, c))) return false;
      }
    }
  }
  return true;
}

FiniteGroup symmetric_group(int n) {
  if (n < 2) return from_generators("S" + std::to_string(n), 1, {});
  return from_generators("S" + std::to_string(n), n, {transposition(n, 0, 1), cycle_perm(n, 1)});
}

FiniteGroup alternating_group(int n) {
  std::vector<Perm> gens;
  for (int k = 2; k < n; ++k) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    p[0] = 1;
    p[1] = k;
    p[k] = 0;  // 3-cycle (0 1 k)
    gens.push_back(p);
  }
  return from_generators("A" + std::to_string(n), std::max(n, 1), gens);
}

FiniteGroup dihedral_group(int n) {
  Perm s(n);
  for (int i = 0; i < n; ++i) s[i] = (n - i) % n;
  return from_generators("D" + std::to_string(n), n, {cycle_perm(n, 1), s});
}

FiniteGroup cyclic_group(int n) {
  return from_generators("Z" + std::to_string(n), n, {cycle_perm(n, 1)});
}

FiniteGroup builtin_group(const std::string& name) {
  if (name.size() >= 2) {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(name.substr(1), &used);
      if (used != name.size() - 1) n = 0;
    } catch (const std::exception&) {
      n = 0;
    }
    if (n >= 1 && n <= 12) {
      switch (name[0]) {
        case 'S': if (n <= 5) return symmetric_group(n); break;
        case 'A': if (n <= 5) return alternating_group(n); break;
        case 'D': if (n >= 3) return dihedral_group(n); break;
        case 'Z': return cyclic_group(n);
        default: break;
      }
    }
  }
  throw Error(ErrorCode::Usage, "unknown group '" + name + "'", {{"group", name}});
}

std::vector<FiniteGroup> default_fingerprint_groups() {
  std::vector<FiniteGroup> out;
  for (const char* name : {"S3", "S4", "A4", "D4", "Z2", "Z3"}) out.push_back(builtin_group(name));
  return out;
}

int evaluate(const Word& w, const std::vector<int>& images, const FiniteGroup& g) {
  int acc = 0;
  for (Letter l : w.letters()) {
    const int x = images[generator_of(l)];
    acc = g.product(acc, l > 0 ? x : g.inverse[x]);
  }
  return acc;
}

namespace {

void check_ceiling(const Presentation& pres, const FiniteGroup& g, std::uint64_t ceiling) {
  long double space = 1;
  for (int i = 0; i < pres.num_generators(); ++i) space *= g.order;
  if (space > static_cast<long double>(ceiling)) {
    throw Error(ErrorCode::SearchSpaceTooLarge,
                "hom search space " + std::to_string(g.order) + "^" +
                    std::to_string(pres.num_generators()) + " exceeds the ceiling",
                {{"group", g.name}, {"generators", pres.num_generators()}, {"ceiling", ceiling}});
  }
}

struct Pruned {
  const FiniteGroup& g;
  int n;
  // Relators to test once generators 0..k are assigned.
  std::vector<std::vector<const Word*>> due;

  std::uint64_t count(std::vector<int>& images, int k) const {
    for (const Word* r : due[k]) {
      if (evaluate(*r, images, g) != 0) return 0;
    }
    if (k + 1 == n) return 1;
    std::uint64_t total = 0;
    for (int x = 0; x < g.order; ++x) {
      images[k + 1] = x;
      total += count(images, k + 1);
    }
    return total;
  }
};

}  // namespace

std::uint64_t count_homs(const Presentation& pres, const FiniteGroup& g, std::uint64_t ceiling) {
  check_ceiling(pres, g, ceiling);
  const int n = pres.num_generators();
  if (n == 0) {
    // Relators over no generators are empty words.
    return 1;
  }
  Pruned search{g, n, std::vector<std::vector<const Word*>>(n)};
  for (const Word& r : pres.relators) {
    int last = 0;
    for (Letter l : r.letters()) last = std::max(last, generator_of(l));
    search.due[last].push_back(&r);
  }
  std::uint64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
  for (int x = 0; x < g.order; ++x) {
    std::vector<int> images(n, 0);
    images[0] = x;
    total += search.count(images, 0);
  }
  return total;
}

std::uint64_t count_homs_serial(const Presentation& pres, const FiniteGroup& g, std::uint64_t ceiling) {
  check_ceiling(pres, g, ceiling);
  const int n = pres.num_generators();
  std::vector<int> images(n, 0);
  std::uint64_t total = 0;
  while (true) {
    bool ok = true;
    for (const Word& r : pres.relators) {
      if (evaluate(r, images, g) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) ++total;
    int k = 0;
    while (k < n && ++images[k] == g.order) images[k++] = 0;
    if (k == n) break;
  }
  return total;
}

Fingerprint fingerprint(const Presentation& pres, const std::vector<FiniteGroup>& groups) {
  const Presentation simple = tietze_simplify(pres);
  Fingerprint fp;
  fp.abelian = abelianization(simple);
  for (const auto& g : groups) fp.homs.emplace_back(g.name, count_homs(simple, g));
  return fp;
}

Fingerprint fingerprint(const Presentation& pres) {
  static const std::vector<FiniteGroup> groups = default_fingerprint_groups();
  return fingerprint(pres, groups);
}

}  // namespace shadowpi
