// Command-line surface: parse space expressions, run queries, emit
// human-readable, JSON, and DOT output.
//
// Exit codes: 0 success, 1 parse error, 2 invalid space, 3 no path,
// 4 inapplicable link.
#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "sarkisov/binary_form.hpp"
#include "sarkisov/intersection.hpp"
#include "sarkisov/json_io.hpp"
#include "sarkisov/links.hpp"
#include "sarkisov/parse.hpp"
#include "sarkisov/selfcheck.hpp"
#include "sarkisov/spaces.hpp"
#include "sarkisov/toric.hpp"

using namespace sarkisov;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitInvalidSpace = 2;
constexpr int kExitNoPath = 3;
constexpr int kExitInapplicable = 4;

MoriFibreSpace parse_or_exit(const std::string& text) {
  try {
    return parse_space(text);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    std::exit(kExitParse);
  } catch (const space_error& e) {
    std::cerr << e.what() << "\n";
    std::exit(kExitInvalidSpace);
  }
}

struct LinkId {
  int id;
  bool inverse;
};

LinkId parse_link_id(const std::string& text) {
  std::string t = text;
  bool inv = false;
  if (t.size() > 3 && t.substr(t.size() - 3) == "^-1") {
    inv = true;
    t = t.substr(0, t.size() - 3);
  }
  if (t.size() < 2 || (t[0] != 'S' && t[0] != 's')) {
    std::cerr << "parse error: link id must look like S11 or S11^-1\n";
    std::exit(kExitParse);
  }
  int id = 0;
  try {
    id = std::stoi(t.substr(1));
  } catch (...) {
    std::cerr << "parse error: bad link id '" << text << "'\n";
    std::exit(kExitParse);
  }
  if (id < 1 || id > 16) {
    std::cerr << "parse error: link id out of range S1..S16\n";
    std::exit(kExitParse);
  }
  return {id, inv};
}

int cmd_info(const std::string& space_text, bool as_json) {
  MoriFibreSpace s = parse_or_exit(space_text);
  if (as_json) {
    std::cout << space_report_json(s).dump(2) << "\n";
    return kExitOk;
  }
  ValidationResult v = validate(s);
  MoriFibreSpace n = normalize(s);
  std::cout << "space: " << render_space(s) << "\n";
  std::cout << "normalized: " << render_space(n) << "\n";
  std::cout << "valid: yes\n";
  if (v.q_not_mori_fibration) {
    std::cout << "mori_fibration: no (g is a square)\n";
    return kExitOk;
  }
  MaximalityVerdict verdict = is_maximal(n);
  switch (verdict.status) {
    case Maximality::Maximal:
      std::cout << "Maximal: " << verdict.provenance << "\n";
      break;
    case Maximality::NotMaximal:
      std::cout << "NotMaximal: " << verdict.witness->description << "\n";
      std::cout << "witness: " << render_space(verdict.witness->target) << "\n";
      break;
    case Maximality::UnknownFano:
      std::cout << "UnknownFano\n";
      break;
  }
  AutInfo aut = aut_info(n);
  if (aut.dimension)
    std::cout << "aut: dim " << *aut.dimension << " (" << aut.description
              << ")\n";
  else
    std::cout << "aut: unavailable (" << aut.description << ")\n";
  if (auto orbits = orbit_structure(n)) {
    std::cout << "orbits:";
    if (orbits->count) std::cout << " " << *orbits->count;
    std::cout << "\n";
    for (const auto& label : orbits->labels)
      std::cout << "  - " << label << "\n";
  } else {
    std::cout << "orbits: unavailable\n";
  }
  return kExitOk;
}

int cmd_links(const std::string& space_text) {
  MoriFibreSpace s = parse_or_exit(space_text);
  if (validate(s).q_not_mori_fibration) {
    std::cerr << "not a Mori fibration (g is a square)\n";
    return kExitInvalidSpace;
  }
  LinkEnumeration e = enumerate_links(s);
  if (e.not_maximal_witness) {
    std::cout << "NotMaximal: " << e.not_maximal_witness->description << "\n";
    std::cout << "witness: " << render_space(e.not_maximal_witness->target)
              << "\n";
    return kExitOk;
  }
  if (e.infinite_family) std::cout << *e.infinite_family << "\n";
  for (const SarkisovLink& l : e.links)
    std::cout << l.id_str() << " -> " << space_key(l.target) << "\n";
  if (e.extension_note) std::cout << *e.extension_note << "\n";
  return kExitOk;
}

int cmd_apply(const std::string& space_text, const std::string& link_text,
              const std::string& h_text) {
  MoriFibreSpace s = parse_or_exit(space_text);
  LinkId lid = parse_link_id(link_text);
  std::optional<BinaryForm> h;
  if (!h_text.empty()) {
    try {
      h = parse_form(h_text);
    } catch (const form_error& e) {
      std::cerr << "parse error: " << e.what() << "\n";
      return kExitParse;
    }
  }
  try {
    MoriFibreSpace out = apply_link(s, lid.id, lid.inverse, h);
    std::cout << render_space(out) << "\n";
    return kExitOk;
  } catch (const link_error& e) {
    std::cerr << e.what() << "\n";
    return kExitInapplicable;
  }
}

int cmd_path(const std::string& src_text, const std::string& dst_text,
             int max_depth, int max_qdeg) {
  MoriFibreSpace src = parse_or_exit(src_text);
  MoriFibreSpace dst = parse_or_exit(dst_text);
  std::optional<std::vector<SarkisovLink>> path;
  try {
    path = find_path(src, dst, max_depth, max_qdeg);
  } catch (const link_error& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalidSpace;
  }
  if (!path) {
    std::cerr << "no path within depth " << max_depth << "\n";
    return kExitNoPath;
  }
  for (const SarkisovLink& l : *path)
    std::cout << l.id_str() << " -> " << space_key(l.target) << "\n";
  std::cout << "length: " << path->size() << "\n";
  return kExitOk;
}

int cmd_toric(const std::string& space_text, const std::string& action) {
  MoriFibreSpace s = parse_or_exit(space_text);
  Fan fan;
  try {
    fan = fan_of(s);
  } catch (const toric_error& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalidSpace;
  }
  if (action == "export") {
    std::cout << format_fan(fan);
    return kExitOk;
  }
  std::cout << "rays: " << fan.rays.size() << "\n";
  std::cout << "maximal cones: " << fan.cones.size() << "\n";
  std::cout << "smooth: " << (is_smooth(fan) ? "yes" : "no") << "\n";
  std::cout << "terminal: " << (is_terminal(fan) ? "yes" : "no") << "\n";
  auto sing = singular_cones(fan);
  std::cout << "singular cones: " << sing.size() << "\n";
  for (int ci : sing) {
    const auto& c = fan.cones[static_cast<size_t>(ci)];
    std::cout << "  - {" << fan.labels[static_cast<size_t>(c[0])] << ","
              << fan.labels[static_cast<size_t>(c[1])] << ","
              << fan.labels[static_cast<size_t>(c[2])] << "}\n";
  }
  return kExitOk;
}

int cmd_graph(const std::string& space_text, int radius, int max_qdeg) {
  MoriFibreSpace s = parse_or_exit(space_text);
  try {
    std::cout << neighborhood_dot(s, radius, max_qdeg);
  } catch (const link_error& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalidSpace;
  }
  return kExitOk;
}

int cmd_selfcheck(const std::string& grid) {
  CheckOptions opts;
  opts.full_grid = (grid == "full");
  auto results = run_acceptance_checks(opts);
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << " (" << r.detail
              << ")\n";
    all = all && r.pass;
  }
  return all ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact computations with three-dimensional rational Mori fibre spaces "
      "with large automorphism groups: family parameters, intersection "
      "tables, toric verification, and the elementary-link catalog S1-S16."};
  app.require_subcommand(1);

  std::string space_text, dst_text, link_text, h_text, grid = "small";
  std::string toric_action = "check";
  bool as_json = false;
  int max_depth = 6, max_qdeg = 12, radius = 2;
  bool dot = true;

  auto* info = app.add_subcommand("info", "validity, maximality, aut, orbits");
  info->add_option("space", space_text)->required();
  info->add_flag("--json", as_json, "full JSON report with intersection data");

  auto* links = app.add_subcommand("links", "equivariant links from a space");
  links->add_option("space", space_text)->required();

  auto* apply = app.add_subcommand("apply", "apply a catalog link");
  apply->set_help_flag("--help", "print help");
  apply->add_option("space", space_text)->required();
  apply->add_option("link", link_text, "S11, S10^-1, ...")->required();
  apply->add_option("--h", h_text, "linear form payload for S16");

  auto* path = app.add_subcommand("path", "shortest link path");
  path->add_option("src", space_text)->required();
  path->add_option("dst", dst_text)->required();
  path->add_option("--max-depth", max_depth);
  path->add_option("--max-qdeg", max_qdeg);

  auto* toric = app.add_subcommand("toric", "fan checks and export");
  toric->add_option("space", space_text)->required();
  toric->add_option("action", toric_action)
      ->check(CLI::IsMember({"check", "export"}));

  auto* graph = app.add_subcommand("graph", "DOT of the link neighborhood");
  graph->add_option("space", space_text)->required();
  graph->add_option("--radius", radius);
  graph->add_flag("--dot", dot, "emit DOT (default)");
  graph->add_option("--max-qdeg", max_qdeg);

  auto* selfcheck = app.add_subcommand("selfcheck", "run the acceptance sweeps");
  selfcheck->add_option("--grid", grid)->check(CLI::IsMember({"small", "full"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return cmd_info(space_text, as_json);
    if (links->parsed()) return cmd_links(space_text);
    if (apply->parsed()) return cmd_apply(space_text, link_text, h_text);
    if (path->parsed()) return cmd_path(space_text, dst_text, max_depth, max_qdeg);
    if (toric->parsed()) return cmd_toric(space_text, toric_action);
    if (graph->parsed()) return cmd_graph(space_text, radius, max_qdeg);
    if (selfcheck->parsed()) return cmd_selfcheck(grid);
  } catch (const space_error& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalidSpace;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
