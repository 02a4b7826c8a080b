#include "ringforge/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ringforge/claims.hpp"
#include "ringforge/serialize.hpp"

namespace ringforge {

namespace {

struct Bounds {
  std::size_t group = kDefaultGroupBound;
  std::size_t lattice = 8;
};

// RINGFORGE_MAX_ORDER overrides both enumeration bounds.
Bounds read_bounds() {
  Bounds b;
  const char* env = std::getenv("RINGFORGE_MAX_ORDER");
  if (!env) return b;
  char* end = nullptr;
  unsigned long v = std::strtoul(env, &end, 10);
  if (!end || *end != '\0' || v == 0)
    raise(errc::syntax_error,
          std::string("RINGFORGE_MAX_ORDER must be a positive integer, got \"") + env + "\"");
  b.group = v;
  b.lattice = v;
  return b;
}

struct RingSpec {
  unsigned p = 0;
  std::string group_name;
};

RingSpec parse_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == spec.size())
    raise(errc::syntax_error, "ring spec must look like \"p:groupname\", got \"" + spec + "\"");
  unsigned long p = 0;
  for (char ch : spec.substr(0, colon)) {
    if (ch < '0' || ch > '9')
      raise(errc::syntax_error, "ring spec characteristic must be a number in \"" + spec + "\"");
    p = p * 10 + static_cast<unsigned long>(ch - '0');
    if (p > 1000000) raise(errc::syntax_error, "ring spec characteristic is out of range");
  }
  if (!is_prime(static_cast<unsigned>(p)))
    raise(errc::not_prime, "ring spec characteristic " + std::to_string(p) + " is not prime");
  return {static_cast<unsigned>(p), spec.substr(colon + 1)};
}

GroupPtr resolve_group(const RingSpec& spec, const std::string& json_path) {
  if (!json_path.empty()) return load_group_file(json_path);
  return preset(spec.group_name);
}

RingPtr resolve_ring(const std::string& spec_text, const std::string& json_path) {
  RingSpec spec = parse_spec(spec_text);
  return make_ring(spec.p, resolve_group(spec, json_path));
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string classification_line(const GroupClassification& c) {
  std::string s = c.nilpotent ? "nilpotent class=" + std::to_string(c.nilpotency_class)
                              : "not_nilpotent";
  s += c.solvable ? " solvable derived_length=" + std::to_string(c.derived_length)
                  : " not_solvable";
  return s + " metabelian=" + bool_text(c.metabelian);
}

std::string chain_text(const std::vector<Subgroup>& chain) {
  std::string s;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) s += " > ";
    s += chain[i].describe();
  }
  return s;
}

void print_basis_rows(std::ostream& out, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows; ++i) {
    out << " ";
    for (std::size_t j = 0; j < m.cols; ++j) out << ' ' << m.at(i, j);
    out << '\n';
  }
}

void cmd_group_info(std::ostream& out, const GroupPtr& g, std::size_t bound) {
  out << "group " << g->group_name() << " order=" << g->order() << '\n';
  out << "elements:";
  for (const auto& n : g->names()) out << ' ' << n;
  out << '\n';
  out << "abelian=" << bool_text(g->is_abelian()) << '\n';
  out << "center: " << center(g).describe() << '\n';
  out << "commutator: " << mutual_commutator(whole_group(g), whole_group(g)).describe() << '\n';
  out << "classification: " << classification_line(classify_group(g, bound)) << '\n';
}

void cmd_group_subgroups(std::ostream& out, const GroupPtr& g, std::size_t bound) {
  auto subs = subgroups(g, bound);
  out << "subgroups of " << g->group_name() << ": " << subs.size() << '\n';
  for (const auto& h : subs) {
    SubgroupProperties props = subgroup_properties(h);
    out << "order=" << h.order << " members=" << h.describe();
    if (props.cyclic && props.cyclic_generator)
      out << " cyclic=true generator=" << g->name(*props.cyclic_generator);
    else {
      out << " cyclic=false generators=";
      for (std::size_t i = 0; i < props.generators.size(); ++i) {
        if (i) out << ',';
        out << g->name(props.generators[i]);
      }
    }
    out << " normal=" << bool_text(props.normal) << '\n';
  }
}

void cmd_group_series(std::ostream& out, const GroupPtr& g, std::size_t bound) {
  GroupClassification c = classify_group(g, bound);
  out << "lower central series: " << chain_text(c.lower_central_series) << '\n';
  if (c.nilpotent)
    out << "central series check: "
        << (series_check(c.lower_central_series, SeriesKind::central).passed ? "passed"
                                                                             : "failed")
        << '\n';
  else
    out << "central series check: skipped (series stabilizes above {e})\n";
  out << "derived series: " << chain_text(c.derived_series) << '\n';
  if (c.solvable)
    out << "solvable series check: "
        << (series_check(c.derived_series, SeriesKind::solvable).passed ? "passed" : "failed")
        << '\n';
  else
    out << "solvable series check: skipped (series stabilizes above {e})\n";
  out << "classification: " << classification_line(c) << '\n';
}

void cmd_ring_eval(std::ostream& out, const RingPtr& r, const std::string& expr) {
  RingElement x = parse_element(r, expr);
  ElementClassification c = classify_element(x);
  out << to_string(x) << " (";
  switch (c.cls) {
    case ElementClass::zero:
      out << "zero divisor input: augmentation=0";
      break;
    case ElementClass::unit:
      out << "unit: augmentation=" << c.augmentation << ", inverse=" << to_string(*c.inverse);
      break;
    case ElementClass::zero_divisor:
      out << "zero divisor: augmentation=" << c.augmentation
          << ", witness=" << to_string(*c.witness);
      break;
  }
  out << ")\n";
}

Subgroup parse_subgroup(const RingPtr& r, const std::string& text) {
  const auto& g = r->group;
  std::vector<std::size_t> gens;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    auto idx = g->index_of(token);
    if (!idx)
      raise(errc::unknown_symbol,
            "\"" + token + "\" is not an element of group \"" + g->group_name() + "\"");
    gens.push_back(*idx);
  }
  return closure_subgroup(g, gens);
}

void cmd_ideal_basis(std::ostream& out, const RingPtr& r, const std::string& subgroup_text,
                     const std::string& side_text) {
  Subgroup h = parse_subgroup(r, subgroup_text);
  Side side = side_text == "right" ? Side::right : Side::left;
  Ideal i = augmentation_ideal_basis(r, h, side);
  out << "subgroup: " << h.describe() << '\n';
  out << "side=" << side_text << " dim=" << i.dim() << '\n';
  print_basis_rows(out, i.basis);
}

// Attach display names: the zero ideal and the whole ring always, the
// classical labels for the GF(2) quaternion ring (equal names joined by "=").
void annotate_lattice(std::vector<Ideal>& ideals, const RingPtr& r) {
  std::map<std::string, Ideal> named;
  if (r->field.p == 2 && r->group->same_structure(*preset_q8()))
    named = named_ideals_z2q8(r).ideals;
  for (auto& i : ideals) {
    if (i.is_zero_ideal()) {
      i.label = "0";
      continue;
    }
    if (i.dim() == r->dimension()) {
      i.label = "ring";
      continue;
    }
    std::string joined;
    for (const auto& [label, ideal] : named)
      if (same_ideal(ideal, i)) joined += (joined.empty() ? "" : " = ") + label;
    i.label = joined;
  }
}

void cmd_ideal_lattice(std::ostream& out, const RingPtr& r, const std::string& format,
                       std::size_t bound) {
  auto ideals = all_ideals(r, bound);
  annotate_lattice(ideals, r);
  HasseDiagram h = hasse_diagram(std::move(ideals));
  if (format == "dot") {
    out << lattice_to_dot(h);
    return;
  }
  if (format == "json") {
    out << lattice_to_json(h).dump(2) << '\n';
    return;
  }
  out << "nodes: " << h.nodes.size() << '\n';
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    const Ideal& node = h.nodes[i];
    out << "n" << i << " dim=" << node.dim();
    if (!node.label.empty()) out << " " << node.label;
    out << '\n';
    print_basis_rows(out, node.basis);
  }
  out << "edges: " << h.edges.size() << '\n';
  for (const auto& [lo, hi] : h.edges) out << "n" << lo << " -> n" << hi << '\n';
}

void cmd_decompose(std::ostream& out, const RingPtr& r, const std::string& format) {
  Decomposition d = wedderburn_decompose(r);
  bool is_z3q8 = r->field.p == 3 && r->group->same_structure(*preset_q8());
  std::map<std::string, Ideal> named;
  if (is_z3q8) named = z3q8_decomposition_report(r).pieces;
  for (std::size_t i = 0; i < d.summands.size(); ++i) {
    std::string label = "block-" + std::to_string(i);
    for (const auto& [name, piece] : named)
      if (same_ideal(piece, d.summands[i])) {
        label = name;
        break;
      }
    d.summands[i].label = label;
  }
  if (format == "json") {
    out << decomposition_to_json(d).dump(2) << '\n';
    return;
  }
  out << "summands: " << d.summands.size() << '\n';
  for (std::size_t i = 0; i < d.summands.size(); ++i) {
    out << d.summands[i].label << " dim=" << d.summands[i].dim()
        << " idempotent=" << to_string(d.idempotents[i]) << '\n';
    print_basis_rows(out, d.summands[i].basis);
  }
}

int cmd_paper_check(std::ostream& out) {
  auto results = run_claim_checks();
  bool any_fail = false;
  for (const auto& r : results) {
    const char* status = r.status == ClaimStatus::pass
                             ? "PASS"
                             : (r.status == ClaimStatus::report ? "REPORT" : "FAIL");
    any_fail = any_fail || r.status == ClaimStatus::fail;
    out << status << ' ' << r.name << ": " << r.detail << '\n';
  }
  std::size_t fails = 0;
  for (const auto& r : results)
    if (r.status == ClaimStatus::fail) ++fails;
  out << "RESULT: " << (any_fail ? "FAIL" : "OK") << " (" << results.size() - fails << "/"
      << results.size() << " checks)\n";
  return any_fail ? 1 : 0;
}

bool is_usage_error(errc code) {
  switch (code) {
    case errc::not_prime:
    case errc::unknown_preset:
    case errc::syntax_error:
    case errc::unknown_symbol:
      return true;
    default:
      return false;
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computational algebra for small modular group rings"};
  app.name("ringforge");
  app.require_subcommand(1);

  std::string spec, expr, subgroup_text, group_json, output_path;
  std::string side = "left", lattice_format = "text", decompose_format = "text";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--group-json", group_json,
                    "load the group from a JSON file instead of a preset");
    cmd->add_option("-o,--output", output_path, "write the output to a file");
  };
  auto add_spec = [&](CLI::App* cmd) {
    cmd->add_option("spec", spec, "ring spec, \"p:groupname\" (e.g. 2:q8)")->required();
    add_common(cmd);
  };

  CLI::App* group = app.add_subcommand("group", "inspect a finite group");
  group->require_subcommand(1);
  CLI::App* ginfo = group->add_subcommand("info", "order, elements, center, classification");
  add_spec(ginfo);
  CLI::App* gsubs = group->add_subcommand("subgroups", "enumerate subgroups with properties");
  add_spec(gsubs);
  CLI::App* gseries =
      group->add_subcommand("series", "lower central and derived series with checks");
  add_spec(gseries);
  CLI::App* gclassify = group->add_subcommand("classify", "nilpotency and solvability summary");
  add_spec(gclassify);

  CLI::App* ring = app.add_subcommand("ring", "group ring arithmetic");
  ring->require_subcommand(1);
  CLI::App* reval = ring->add_subcommand("eval", "evaluate and classify an element expression");
  add_spec(reval);
  reval->add_option("expr", expr, "element expression, e.g. \"(e+a)*(e+a^3)\"")->required();

  CLI::App* ideal = app.add_subcommand("ideal", "ideal bases and the full ideal lattice");
  ideal->require_subcommand(1);
  CLI::App* ibasis =
      ideal->add_subcommand("basis", "augmentation ideal basis of a generated subgroup");
  add_spec(ibasis);
  ibasis->add_option("subgroup", subgroup_text,
                     "comma-separated subgroup generators, e.g. \"a^2\" or \"a,b\"")
      ->required();
  ibasis->add_option("--side", side, "left or right ideal (default left)")
      ->check(CLI::IsMember({"left", "right"}));
  CLI::App* ilattice = ideal->add_subcommand("lattice", "enumerate all two-sided ideals");
  add_spec(ilattice);
  ilattice->add_option("--format", lattice_format, "text, dot or json (default text)")
      ->check(CLI::IsMember({"text", "dot", "json"}));

  CLI::App* dec = app.add_subcommand("decompose", "decompose into simple two-sided summands");
  add_spec(dec);
  dec->add_option("--format", decompose_format, "text or json (default text)")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* pc =
      app.add_subcommand("paper-check", "recompute and verify the classical structural results");
  add_common(pc);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  std::ostringstream buffer;
  int code = 0;
  try {
    Bounds bounds = read_bounds();
    if (ginfo->parsed())
      cmd_group_info(buffer, resolve_group(parse_spec(spec), group_json), bounds.group);
    else if (gsubs->parsed())
      cmd_group_subgroups(buffer, resolve_group(parse_spec(spec), group_json), bounds.group);
    else if (gseries->parsed())
      cmd_group_series(buffer, resolve_group(parse_spec(spec), group_json), bounds.group);
    else if (gclassify->parsed())
      buffer << classification_line(
                    classify_group(resolve_group(parse_spec(spec), group_json), bounds.group))
             << '\n';
    else if (reval->parsed())
      cmd_ring_eval(buffer, resolve_ring(spec, group_json), expr);
    else if (ibasis->parsed())
      cmd_ideal_basis(buffer, resolve_ring(spec, group_json), subgroup_text, side);
    else if (ilattice->parsed())
      cmd_ideal_lattice(buffer, resolve_ring(spec, group_json), lattice_format, bounds.lattice);
    else if (dec->parsed())
      cmd_decompose(buffer, resolve_ring(spec, group_json), decompose_format);
    else if (pc->parsed())
      code = cmd_paper_check(buffer);
  } catch (const error& e) {
    err << e.what() << '\n';
    return is_usage_error(e.code()) ? 2 : 1;
  }

  if (!output_path.empty()) {
    std::ofstream file(output_path, std::ios::binary);
    if (!file) {
      err << "IoError: cannot write \"" << output_path << "\"\n";
      return 1;
    }
    file << buffer.str();
    if (!file.flush()) {
      err << "IoError: cannot write \"" << output_path << "\"\n";
      return 1;
    }
  } else {
    out << buffer.str();
  }
  return code;
}

}  // namespace ringforge
