#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "shadowpi/builders.hpp"
#include "shadowpi/error.hpp"
#include "shadowpi/io.hpp"
#include "shadowpi/presentation.hpp"
#include "shadowpi/render.hpp"

using namespace shadowpi;

namespace {

// "-" reads stdin so commands can be piped.
json read_input(const std::string& path) {
  if (path != "-") return read_json_file(path);
  try {
    return json::parse(std::cin);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON on stdin: ") + e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::Usage, "bad seed '" + text + "'");
}

CuttingSystem load_cutting(const DiskMap& map, const std::string& spec) {
  if (spec.empty() || spec == "auto") return auto_cut(map);
  if (spec.rfind("seed:", 0) == 0) return random_cut(map, parse_seed(spec.substr(5)));
  return cutting_from_json(map, read_json_file(spec));
}

SubSelection load_selection(const ShadowedPolyhedron& shadow, const std::string& spec) {
  if (spec == "Yabc") return select_regions(shadow, Preset::Yabc);
  if (spec == "Yac") return select_regions(shadow, Preset::Yac);
  if (spec == "Yasqc") return select_regions(shadow, Preset::YaSquareC);
  if (spec.rfind("custom:", 0) == 0) {
    const json j = read_json_file(spec.substr(7));
    const json& list = j.is_object() ? j.at("regions") : j;
    Diagnostics warnings;
    SubSelection sel = select_regions(shadow, list.get<std::vector<RegionId>>(), &warnings);
    for (const auto& w : warnings.issues) std::cerr << "warning: " << w.message << "\n";
    return sel;
  }
  throw Error(ErrorCode::Usage, "unknown selection '" + spec + "'", {{"sub", spec}});
}

std::vector<FiniteGroup> parse_groups(const std::string& list) {
  if (list.empty()) return default_fingerprint_groups();
  std::vector<FiniteGroup> out;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (!name.empty()) out.push_back(builtin_group(name));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fundamental groups of shadowed polyhedra"};
  app.require_subcommand(1);

  std::string in, out, policy = "default", sub, cutting = "auto", homs;
  bool reduced = false;
  int budget = 64;

  auto* build_divide = app.add_subcommand("build-divide", "divide/1 file to shadow/1");
  build_divide->add_option("input", in)->required();
  build_divide->add_option("-o,--output", out);
  build_divide->add_option("--policy", policy, "default | alternating | seed:N");

  auto* build_arr = app.add_subcommand("build-arrangement", "arrangement/1 file to shadow/1");
  build_arr->add_option("input", in)->required();
  build_arr->add_option("-o,--output", out);
  build_arr->add_option("--policy", policy, "default | alternating | seed:N");

  auto* present_cmd = app.add_subcommand("present", "presentation of a subpolyhedron");
  present_cmd->add_option("input", in)->required();
  present_cmd->add_option("--sub", sub, "Yabc | Yac | Yasqc | custom:FILE")->required();
  present_cmd->add_option("--cutting", cutting, "auto | seed:N | FILE");
  present_cmd->add_flag("--reduced", reduced, "use the reduced cutting system");
  present_cmd->add_option("-o,--output", out);

  auto* wirt = app.add_subcommand("wirtinger", "Wirtinger presentation of the link diagram");
  wirt->add_option("input", in)->required();
  wirt->add_option("-o,--output", out);

  auto* simplify = app.add_subcommand("simplify", "Tietze simplification");
  simplify->add_option("input", in)->required();
  simplify->add_option("--budget", budget);
  simplify->add_option("-o,--output", out);

  auto* invariants = app.add_subcommand("invariants", "abelianization and hom counts");
  invariants->add_option("input", in)->required();
  invariants->add_option("--homs", homs, "comma separated groups, e.g. S3,S4,A4,D4,Z2,Z3");

  auto* thm = app.add_subcommand("check-thm41", "compare with the Wirtinger group when gleams equal c");
  thm->add_option("input", in)->required();
  thm->add_option("--cutting", cutting, "auto | seed:N | FILE");

  auto* render = app.add_subcommand("render", "SVG drawing");
  render->add_option("input", in)->required();
  render->add_option("--sub", sub, "highlight a selection");
  render->add_option("-o,--output", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << Error(ErrorCode::Usage, e.what()).to_json().dump() << "\n";
    return 2;
  }

  try {
    if (*build_divide || *build_arr) {
      const json j = read_input(in);
      const Divide dv = *build_divide ? ingest_polyline_divide(divide_input_from_json(j))
                                      : arrangement_to_divide(arrangement_from_json(j));
      write_output(out, dump(shadow_to_json(double_divide(dv, OverPolicy::parse(policy)))));
    } else if (*present_cmd) {
      const ShadowedPolyhedron shadow = shadow_from_json(read_input(in));
      const SubSelection sel = load_selection(shadow, sub);
      const CuttingSystem cs = load_cutting(shadow.map(), cutting);
      const Presentation p = reduced ? present_reduced(shadow, sel, cs) : present(shadow, sel, cs);
      write_output(out, dump(presentation_to_json(p)));
    } else if (*wirt) {
      const ShadowedPolyhedron shadow = shadow_from_json(read_input(in));
      write_output(out, dump(presentation_to_json(wirtinger(shadow.diagram))));
    } else if (*simplify) {
      const Presentation p = presentation_from_json(read_input(in));
      write_output(out, dump(presentation_to_json(tietze_simplify(p, budget))));
    } else if (*invariants) {
      const Presentation p = presentation_from_json(read_input(in));
      std::cout << dump(fingerprint_to_json(fingerprint(p, parse_groups(homs))));
    } else if (*thm) {
      const ShadowedPolyhedron shadow = shadow_from_json(read_input(in));
      const Thm41Report rep = check_theorem_41(shadow, load_cutting(shadow.map(), cutting));
      std::cout << to_string(rep.status) << "\n";
      if (!rep.detail.empty()) std::cerr << rep.detail << "\n";
      return rep.status == Thm41Report::Status::Mismatch ? 3 : 0;
    } else if (*render) {
      const ShadowedPolyhedron shadow = shadow_from_json(read_input(in));
      RenderOptions opts;
      if (!sub.empty()) opts.selection = load_selection(shadow, sub);
      write_output(out, render_svg(shadow, opts));
    }
  } catch (const Error& e) {
    std::cerr << e.to_json().dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << Error(ErrorCode::ParseError, e.what()).to_json().dump() << "\n";
    return 1;
  }
  return 0;
}
