#include "shadowpi/presentation.hpp"

#include <algorithm>
#include <set>

#include "shadowpi/error.hpp"

namespace shadowpi {

MeridianGenerators::MeridianGenerators(const CutLayout& layout, const SubSelection& selection) {
  for (int s = 0; s < layout.num_strands(); ++s) names_.push_back("x" + std::to_string(s));
  first_y_.assign(selection.selected.size(), kNone);
  for (RegionId r = 0; r < static_cast<RegionId>(selection.selected.size()); ++r) {
    if (!selection.selected[r]) continue;
    first_y_[r] = static_cast<int>(names_.size());
    for (int k = 0; k < layout.num_pieces(r); ++k) {
      names_.push_back("y" + std::to_string(r) + "." + std::to_string(k));
    }
  }
}

Word MeridianGenerators::y(const PieceRef& piece) const {
  const int base = first_y_.at(piece.region);
  if (base == kNone) return {};
  return Word{gen(base + piece.piece)};
}

namespace {

void require_integral(const ShadowedPolyhedron& shadow, const SubSelection& selection) {
  const Diagnostics diag = validate_shadow(shadow, selection);
  for (const auto& issue : diag.issues) {
    if (issue.code == "HalfIntegerExponent") {
      throw Error(ErrorCode::HalfIntegerExponent, issue.message, {{"region", issue.region}});
    }
    throw Error(ErrorCode::ParseError, issue.message, {{"issue", issue.code}});
  }
}

Word gamma_from_layout(const ShadowedPolyhedron& shadow, const SubSelection& selection,
                       const CutLayout& layout, const MeridianGenerators& gens,
                       const std::vector<int>& twice_c, RegionId r) {
  Word gamma;
  for (RegionId q : layout.subtree_ccw(r)) {
    if (!selection.contains(q)) continue;
    const int e = (shadow.twice_gleam[q] - twice_c[q]) / 2;
    const DartId p = layout.system().parent_dart[q];
    // First visited region ends up rightmost.
    gamma = gens.y(layout.head_piece(p)).power(e) * gamma;
  }
  return gamma;
}

}  // namespace

Word gamma_word(const ShadowedPolyhedron& shadow, const SubSelection& selection,
                const CuttingSystem& cs, RegionId r) {
  require_integral(shadow, selection);
  const CutLayout layout(shadow.diagram, cs);
  const MeridianGenerators gens(layout, selection);
  return gamma_from_layout(shadow, selection, layout, gens, compute_twice_c(shadow.diagram), r);
}

Presentation present(const ShadowedPolyhedron& shadow, const SubSelection& selection,
                     const CuttingSystem& cs) {
  require_integral(shadow, selection);
  const CutLayout layout(shadow.diagram, cs);
  const MeridianGenerators gens(layout, selection);
  const auto twice_c = compute_twice_c(shadow.diagram);

  Presentation pres;
  pres.generators = gens.names();
  std::set<Word> seen;
  auto add = [&](Word w) {
    if (!w.empty() && seen.insert(w).second) pres.relators.push_back(std::move(w));
  };
  for (const EdgePiece& piece : layout.edge_pieces()) {
    add(gens.y(piece.right) * Word{gen(gens.x(piece.strand))} * gens.y(piece.left).inverse());
  }
  for (const CuttingPoint& c : layout.cutting_points()) {
    const Word gamma = gamma_from_layout(shadow, selection, layout, gens, twice_c, c.region);
    add(gamma * Word{gen(gens.x(c.forward_strand))} * gamma.inverse() *
        Word{inv(gens.x(c.backward_strand))});
  }
  return pres;
}

Presentation present_reduced(const ShadowedPolyhedron& shadow, const SubSelection& selection,
                             const CuttingSystem& cs) {
  const RegionId outer = shadow.map().outer_region();
  if (selection.contains(outer)) {
    throw Error(ErrorCode::SelectionTouchesBoundary,
                "reduced systems need a selection avoiding the region at the disk boundary",
                {{"region", outer}});
  }
  return present(shadow, selection, reduce_system(shadow.map(), cs));
}

namespace {

CuttingSystem empty_cut(const DiskMap& map) {
  CuttingSystem cs;
  cs.parent_dart.assign(map.num_regions(), kNone);
  return cs;
}

}  // namespace

std::vector<int> wirtinger_arcs(const LinkDiagram& diagram) {
  const CutLayout layout(diagram, empty_cut(diagram.map()));
  std::vector<int> arc;
  for (const EdgePiece& p : layout.edge_pieces()) arc.push_back(p.strand);
  return arc;
}

Presentation wirtinger(const LinkDiagram& diagram) {
  const DiskMap& map = diagram.map();
  const CutLayout layout(diagram, empty_cut(map));
  Presentation pres;
  for (int a = 0; a < layout.num_strands(); ++a) pres.generators.push_back("a" + std::to_string(a));
  const auto& pieces = layout.edge_pieces();
  for (CrossingId v = 0; v < map.num_crossings(); ++v) {
    const int p = diagram.over_parity(v);
    const int over = pieces[layout.piece_at_tail(map.dart_at(v, p))].strand;
    DartId out = map.dart_at(v, p + 1);
    if (!diagram.is_forward(out)) out = map.opposite(out);
    const int a_out = pieces[layout.piece_at_tail(out)].strand;
    const int a_in = pieces[layout.piece_at_tail(map.opposite(out))].strand;
    const bool positive = crossing_sign(diagram, v) > 0;
    const int j = positive ? a_in : a_out;
    const int k = positive ? a_out : a_in;
    Word r{gen(j), gen(over), inv(k), inv(over)};
    if (!r.empty()) pres.relators.push_back(std::move(r));
  }
  return pres;
}

std::string_view to_string(Thm41Report::Status s) {
  switch (s) {
    case Thm41Report::Status::Match: return "match";
    case Thm41Report::Status::Mismatch: return "mismatch";
    case Thm41Report::Status::NotApplicable: return "not-applicable";
  }
  return "?";
}

namespace {

// Calls f(images) for every homomorphism of pres into g (pres must be small).
template <class F>
void for_each_hom(const Presentation& pres, const FiniteGroup& g, F&& f) {
  const int n = pres.num_generators();
  std::vector<int> images(n, 0);
  while (true) {
    bool ok = true;
    for (const Word& r : pres.relators) {
      if (evaluate(r, images, g) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) f(images);
    int k = 0;
    while (k < n && ++images[k] == g.order) images[k++] = 0;
    if (k == n) break;
  }
}

}  // namespace

Thm41Report check_theorem_41(const ShadowedPolyhedron& shadow, const CuttingSystem& cs) {
  Thm41Report report;
  const DiskMap& map = shadow.map();
  const auto twice_c = compute_twice_c(shadow.diagram);
  for (RegionId r : map.internal_regions()) {
    if (shadow.twice_gleam.at(r) != twice_c[r]) {
      report.detail = "gleam differs from c on region " + std::to_string(r);
      return report;
    }
  }
  const SubSelection y = all_internal(map);
  const Presentation p = present(shadow, y, cs);
  const Presentation w = wirtinger(shadow.diagram);
  report.present_fp = fingerprint(p);
  report.wirtinger_fp = fingerprint(w);

  // The arc map: an arc goes to its strand meridian, or to the forward strand
  // of the lowest-numbered cutting point lying on it.
  const CutLayout layout(shadow.diagram, cs);
  const auto arcs = wirtinger_arcs(shadow.diagram);
  std::vector<int> phi(w.num_generators(), kNone);
  for (const CuttingPoint& c : layout.cutting_points()) {
    int& slot = phi[arcs[map.edge(c.dart)]];
    if (slot == kNone) slot = c.forward_strand;
  }
  for (const EdgePiece& piece : layout.edge_pieces()) {
    int& slot = phi[arcs[piece.edge]];
    if (slot == kNone) slot = piece.strand;
  }

  const SimplifyResult simple = tietze_simplify_with_map(p);
  report.phi_consistent = true;
  for (const char* name : {"S3", "D4"}) {
    const FiniteGroup g = builtin_group(name);
    long double space = 1;
    for (int i = 0; i < simple.pres.num_generators(); ++i) space *= g.order;
    if (space > 2e6L) {
      report.detail = "arc map check skipped: simplified group too large";
      break;
    }
    for_each_hom(simple.pres, g, [&](const std::vector<int>& images) {
      std::vector<int> arc_images(w.num_generators());
      for (int a = 0; a < w.num_generators(); ++a) {
        arc_images[a] = evaluate(simple.images[phi[a]], images, g);
      }
      for (const Word& r : w.relators) {
        if (evaluate(r, arc_images, g) != 0) report.phi_consistent = false;
      }
    });
  }
  const bool same = report.present_fp == report.wirtinger_fp;
  report.status = same && report.phi_consistent ? Thm41Report::Status::Match
                                                 : Thm41Report::Status::Mismatch;
  if (report.detail.empty()) {
    report.detail = same ? (report.phi_consistent ? "fingerprints agree" : "arc map is not a homomorphism")
                         : "fingerprints differ";
  }
  return report;
}

}  // namespace shadowpi
