#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "shadowpi/finite_group.hpp"
#include "shadowpi/group.hpp"

using namespace shadowpi;

namespace {

Presentation pres(std::vector<std::string> gens, const std::vector<std::string>& rels) {
  Presentation p;
  p.generators = std::move(gens);
  for (const auto& r : rels) p.relators.push_back(p.parse(r));
  return p;
}

template <class F>
double millis(F&& f, std::uint64_t& out) {
  const auto t0 = std::chrono::steady_clock::now();
  out = f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::stoi(argv[1]) : 3;
  struct Case {
    const char* name;
    Presentation p;
  };
  const std::vector<Case> cases{
      {"trefoil", pres({"x", "y"}, {"x y x y^-1 x^-1 y^-1"})},
      {"arrangement Y", pres({"x", "y", "Z", "W"}, {"x Z y W x^-1 W^-1 y^-1 Z^-1", "x Z y W Z^-1 x^-1 W^-1 y^-1",
                                                   "x Z y W y^-1 Z^-1 x^-1 W^-1"})},
      {"Z x <y,z,w>", pres({"x", "y", "z", "w"}, {"w z y z^-1 w^-1 y^-1", "y w z w^-1 y^-1 z^-1", "x y x^-1 y^-1",
                                                 "x z x^-1 z^-1", "x w x^-1 w^-1"})},
      {"free 4", pres({"a", "b", "c", "d"}, {})},
      {"5 gens", pres({"a", "b", "c", "d", "e"}, {"a b c d e", "a^2 b^-2", "c d c^-1 d^-1"})},
  };
  std::printf("%-16s %-4s %12s %12s %12s %8s\n", "presentation", "G", "homs", "kernel ms", "serial ms", "speedup");
  for (const auto& c : cases) {
    for (const char* gname : {"S4", "A4", "D4"}) {
      const FiniteGroup g = builtin_group(gname);
      double fast = 1e300, slow = 1e300;
      std::uint64_t a = 0, b = 0;
      for (int r = 0; r < reps; ++r) {
        fast = std::min(fast, millis([&] { return count_homs(c.p, g); }, a));
        slow = std::min(slow, millis([&] { return count_homs_serial(c.p, g); }, b));
      }
      if (a != b) {
        std::printf("%s into %s: kernel %llu, serial %llu\n", c.name, gname, static_cast<unsigned long long>(a),
                    static_cast<unsigned long long>(b));
        return 1;
      }
      std::printf("%-16s %-4s %12llu %12.2f %12.2f %8.1f\n", c.name, gname, static_cast<unsigned long long>(a), fast,
                  slow, slow / std::max(fast, 1e-3));
    }
  }
  return 0;
}
