#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shadowpi/group.hpp"

namespace shadowpi {

// Multiplication table of a small finite group; element 0 is the identity.
struct FiniteGroup {
  std::string name;
  int order = 0;
  std::vector<int> mul;  // mul[a * order + b] = a * b
  std::vector<int> inverse;

  int product(int a, int b) const { return mul[a * order + b]; }
  // Checks identity, inverses and associativity on every triple.
  bool is_group() const;
};

FiniteGroup symmetric_group(int n);
FiniteGroup alternating_group(int n);
FiniteGroup dihedral_group(int n);  // order 2n
FiniteGroup cyclic_group(int n);
// "S3", "S4", "A4", "D4", "Z2", "Z3", "Z<n>".
FiniteGroup builtin_group(const std::string& name);
std::vector<FiniteGroup> default_fingerprint_groups();

inline constexpr std::uint64_t kDefaultHomCeiling = 100'000'000;

// Number of homomorphisms pres -> G. OpenMP over the images of the first
// generator, relators checked as soon as their generators are assigned.
// Throws SearchSpaceTooLarge when |G|^n exceeds the ceiling.
std::uint64_t count_homs(const Presentation& pres, const FiniteGroup& g,
                         std::uint64_t ceiling = kDefaultHomCeiling);

// Reference implementation: plain enumeration of every generator tuple.
std::uint64_t count_homs_serial(const Presentation& pres, const FiniteGroup& g,
                                std::uint64_t ceiling = kDefaultHomCeiling);

// Evaluates a word under an assignment of generators to group elements.
int evaluate(const Word& w, const std::vector<int>& images, const FiniteGroup& g);

struct Fingerprint {
  AbelianInvariants abelian;
  std::vector<std::pair<std::string, std::uint64_t>> homs;

  bool operator==(const Fingerprint&) const = default;
};

// Simplifies first, then records abelian invariants and hom counts.
Fingerprint fingerprint(const Presentation& pres, const std::vector<FiniteGroup>& groups);
Fingerprint fingerprint(const Presentation& pres);

}  // namespace shadowpi
