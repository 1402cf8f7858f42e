#include "cpmu/export.hpp"

#include "cpmu/error.hpp"

#include <algorithm>
#include <sstream>

namespace cpmu {

namespace {

nlohmann::json optional_perm(const std::optional<Permutation> &p) {
  return p ? nlohmann::json(p->str()) : nlohmann::json(nullptr);
}

Permutation perm_field(const nlohmann::json &j, const char *key) {
  if (!j.contains(key) || !j.at(key).is_string())
    throw InvalidInput(std::string("missing string field \"") + key + "\"");
  return Permutation::parse(j.at(key).get<std::string>());
}

} // namespace

std::string to_dot(const HasseDiagram &h) {
  std::ostringstream os;
  os << "digraph interval {\n";
  os << "  rankdir=BT;\n";
  os << "  label=\"[" << h.sigma.str() << ", " << h.tau.str() << "]\";\n";
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"" << h.nodes[i].str()
       << "\", rank=" << (h.nodes[i].size() - h.sigma.size()) << "];\n";
  }
  for (const auto &[lo, hi] : h.edges)
    os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const HasseDiagram &h) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto &p : h.nodes)
    nodes.push_back(p.str());
  nlohmann::json edges = nlohmann::json::array();
  for (const auto &[lo, hi] : h.edges)
    edges.push_back({h.nodes[lo].str(), h.nodes[hi].str()});
  return {{"sigma", h.sigma.str()},
          {"tau", h.tau.str()},
          {"rank", h.rank()},
          {"nodes", std::move(nodes)},
          {"edges", std::move(edges)}};
}

HasseDiagram hasse_from_json(const nlohmann::json &j) {
  HasseDiagram h{perm_field(j, "sigma"), perm_field(j, "tau"), {}, {}};
  for (const auto &node : j.at("nodes"))
    h.nodes.push_back(Permutation::parse(node.get<std::string>()));
  auto index = [&](const nlohmann::json &s) {
    auto p = Permutation::parse(s.get<std::string>());
    auto it = std::find(h.nodes.begin(), h.nodes.end(), p);
    if (it == h.nodes.end())
      throw InvalidInput("edge endpoint " + p.str() + " is not a node");
    return static_cast<std::size_t>(it - h.nodes.begin());
  };
  for (const auto &e : j.at("edges"))
    h.edges.emplace_back(index(e.at(0)), index(e.at(1)));
  return h;
}

nlohmann::json to_json(const Permutation &sigma, const Permutation &tau,
                       const MobiusResult &r) {
  nlohmann::json chain = nlohmann::json::array();
  for (const auto &p : r.carrier_chain)
    chain.push_back(p.str());
  return {{"sigma", sigma.str()},
          {"tau", tau.str()},
          {"mu", r.value},
          {"case", std::string(to_string(r.decided_by))},
          {"carrier_chain", std::move(chain)},
          {"socle", optional_perm(r.socle())}};
}

MobiusRecord mobius_from_json(const nlohmann::json &j) {
  MobiusRecord rec{perm_field(j, "sigma"), perm_field(j, "tau"), {}};
  rec.result.value = j.at("mu").get<int>();
  auto c = parse_mobius_case(j.at("case").get<std::string>());
  if (!c)
    throw InvalidInput("unknown case tag " + j.at("case").dump());
  rec.result.decided_by = *c;
  for (const auto &p : j.at("carrier_chain"))
    rec.result.carrier_chain.push_back(Permutation::parse(p.get<std::string>()));
  return rec;
}

nlohmann::json to_json(const ScreenReport &r) {
  auto opt_int = [](const std::optional<int> &v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  return {{"left_tail", r.tails.left},
          {"right_tail", r.tails.right},
          {"tail_sum", opt_int(r.tail_sum)},
          {"excluded_value", opt_int(r.excluded_value)},
          {"forces_zero", r.forces_zero},
          {"omega", optional_perm(r.omega)},
          {"alpha", optional_perm(r.alpha)},
          {"beta", optional_perm(r.beta)}};
}

} // namespace cpmu
