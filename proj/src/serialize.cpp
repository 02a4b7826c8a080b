#include "ringforge/serialize.hpp"

#include <fstream>
#include <sstream>

namespace ringforge {

namespace {

Json basis_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

// "101 010": one digit string per basis row.
std::string basis_text(const Matrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (i) s += ' ';
    for (std::size_t j = 0; j < m.cols; ++j) s += std::to_string(m.at(i, j));
  }
  return s;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string node_text(const Ideal& node) {
  std::string text = node.label.empty() ? basis_text(node.basis) : node.label;
  if (!text.empty()) text += ' ';
  return text + "dim=" + std::to_string(node.dim());
}

}  // namespace

Json group_to_json(const GroupPtr& g) {
  const std::size_t n = g->order();
  Json cayley = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(g->mul(i, j));
    cayley.push_back(std::move(row));
  }
  Json j;
  j["name"] = g->group_name();
  j["order"] = n;
  j["identity"] = g->identity();
  j["cayley"] = std::move(cayley);
  j["names"] = g->names();
  return j;
}

GroupPtr group_from_json(const Json& j) {
  std::size_t order = 0;
  std::size_t identity = 0;
  std::string name;
  std::vector<std::vector<std::size_t>> cayley;
  std::vector<std::string> names;
  try {
    name = j.at("name").get<std::string>();
    order = j.at("order").get<std::size_t>();
    identity = j.at("identity").get<std::size_t>();
    cayley = j.at("cayley").get<std::vector<std::vector<std::size_t>>>();
    names = j.at("names").get<std::vector<std::string>>();
  } catch (const Json::exception& e) {
    raise(errc::io_error, std::string("invalid group document: ") + e.what());
  }
  if (cayley.size() != order)
    raise(errc::io_error, "order field (" + std::to_string(order) +
                              ") disagrees with the table size (" + std::to_string(cayley.size()) +
                              ")");
  return FiniteGroup::from_cayley_table(cayley, identity, std::move(names), std::move(name));
}

GroupPtr load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::io_error, "cannot read \"" + path + "\"");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    raise(errc::io_error, "cannot parse \"" + path + "\": " + e.what());
  }
  return group_from_json(j);
}

Json element_to_json(const RingElement& x) {
  Json j;
  j["ring"] = Json{{"group", x.ring->group->group_name()}, {"p", x.ring->field.p}};
  j["coeffs"] = x.coeffs;
  return j;
}

Json lattice_to_json(const HasseDiagram& h) {
  Json nodes = Json::array();
  for (const auto& node : h.nodes) {
    Json n;
    n["label"] = node.label;
    n["dim"] = node.dim();
    n["basis"] = basis_to_json(node.basis);
    nodes.push_back(std::move(n));
  }
  Json edges = Json::array();
  for (const auto& [lo, hi] : h.edges) edges.push_back(Json::array({lo, hi}));
  Json j;
  j["nodes"] = std::move(nodes);
  j["edges"] = std::move(edges);
  return j;
}

std::string lattice_to_dot(const HasseDiagram& h) {
  std::ostringstream os;
  os << "digraph ideal_lattice {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < h.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << dot_escape(node_text(h.nodes[i])) << "\"];\n";
  for (const auto& [lo, hi] : h.edges) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

Json decomposition_to_json(const Decomposition& d) {
  Json summands = Json::array();
  for (const auto& s : d.summands) {
    Json n;
    n["label"] = s.label;
    n["dim"] = s.dim();
    n["basis"] = basis_to_json(s.basis);
    summands.push_back(std::move(n));
  }
  Json idempotents = Json::array();
  for (const auto& e : d.idempotents) idempotents.push_back(e.coeffs);
  Json j;
  j["summands"] = std::move(summands);
  j["idempotents"] = std::move(idempotents);
  return j;
}

}  // namespace ringforge
