#pragma once

#include <string>
#include <vector>

#include "shadowpi/cutting.hpp"
#include "shadowpi/finite_group.hpp"
#include "shadowpi/group.hpp"
#include "shadowpi/shadow.hpp"

namespace shadowpi {

// Generator numbering shared by present() and gamma_word(): strand meridians
// x<strand> first, then y<region>.<piece> for every piece of a selected region.
class MeridianGenerators {
 public:
  MeridianGenerators(const CutLayout& layout, const SubSelection& selection);

  const std::vector<std::string>& names() const { return names_; }
  int x(int strand) const { return strand; }
  // Meridian of a piece; empty when its region is not selected.
  Word y(const PieceRef& piece) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> first_y_;  // per region, kNone if unselected
};

// Conjugating word of the t-relator at the cutting point of region r.
// Throws HalfIntegerExponent.
Word gamma_word(const ShadowedPolyhedron& shadow, const SubSelection& selection,
                const CuttingSystem& cs, RegionId r);

// Throws HalfIntegerExponent if the selection violates integrality.
Presentation present(const ShadowedPolyhedron& shadow, const SubSelection& selection,
                     const CuttingSystem& cs);

// Reduces cs first. Throws SelectionTouchesBoundary if the outer region is
// selected.
Presentation present_reduced(const ShadowedPolyhedron& shadow, const SubSelection& selection,
                             const CuttingSystem& cs);

// Arcs a<k> of the uncut diagram, one relator per crossing.
Presentation wirtinger(const LinkDiagram& diagram);

// Arc index (as numbered by wirtinger) of every edge.
std::vector<int> wirtinger_arcs(const LinkDiagram& diagram);

struct Thm41Report {
  enum class Status { Match, Mismatch, NotApplicable };
  Status status = Status::NotApplicable;
  Fingerprint present_fp;
  Fingerprint wirtinger_fp;
  // Wirtinger relators map to the identity under the arc map, checked on
  // every homomorphism of the simplified group into S3 and D4.
  bool phi_consistent = false;
  std::string detail;
};

std::string_view to_string(Thm41Report::Status s);

// Compares the presentation for Y = all internal regions with the Wirtinger
// presentation when every gleam equals c.
Thm41Report check_theorem_41(const ShadowedPolyhedron& shadow, const CuttingSystem& cs);

}  // namespace shadowpi
