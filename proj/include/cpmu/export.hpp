#ifndef CPMU_EXPORT_HPP
#define CPMU_EXPORT_HPP

#include "cpmu/interval.hpp"
#include "cpmu/mobius.hpp"
#include "cpmu/screen.hpp"

#include <json.hpp>

#include <string>

namespace cpmu {

/// Graphviz digraph: one node per element labeled with its comma-separated
/// form and carrying a `rank` attribute, one edge per cover (lower -> upper).
std::string to_dot(const HasseDiagram &h);

/// {nodes:[string], edges:[[string,string]], sigma, tau, rank}
nlohmann::json to_json(const HasseDiagram &h);
HasseDiagram hasse_from_json(const nlohmann::json &j);

/// {sigma, tau, mu, case, carrier_chain:[string], socle}
nlohmann::json to_json(const Permutation &sigma, const Permutation &tau,
                       const MobiusResult &r);

struct MobiusRecord {
  Permutation sigma;
  Permutation tau;
  MobiusResult result;
};
MobiusRecord mobius_from_json(const nlohmann::json &j);

nlohmann::json to_json(const ScreenReport &r);

} // namespace cpmu

#endif // CPMU_EXPORT_HPP
