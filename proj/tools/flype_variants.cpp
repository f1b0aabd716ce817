// Emits, as a JSON array on stdout, one flype-constructed variant for every
// table entry whose flype orbit has more than one diagram: the orbit member
// farthest from the seed (ties broken by canonical order). Each variant is a
// different diagram of the same link by construction.
#include <iostream>

#include "json.hpp"
#include "taitkit/codecs.hpp"
#include "taitkit/orbit.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: flype_variants TABLE.json\n";
    return 2;
  }
  using namespace taitkit;
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  try {
    for (const DiagramDocument& doc : load_table(argv[1])) {
      const OrbitReport orbit = flype_orbit(doc.diagram);
      if (orbit.truncated || orbit.members.size() < 2) continue;
      const OrbitMember* far = &orbit.members.front();
      for (const OrbitMember& m : orbit.members)
        if (m.depth > far->depth) far = &m;
      nlohmann::ordered_json pd = nlohmann::ordered_json::array();
      for (const PdTuple& t : to_pd_tuples(far->representative)) pd.push_back(t);
      auto tags = doc.tags;
      tags["same_link_as"] = doc.name;
      tags["flype_distance"] = std::to_string(far->depth);
      tags["gauss"] = serialize_gauss(far->representative);
      out.push_back({{"name", doc.name + "_flyped"}, {"pd", pd}, {"tags", tags}});
    }
  } catch (const Error& e) {
    std::cerr << "flype_variants: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return 2;
  }
  std::cout << out.dump() << "\n";
  return 0;
}
