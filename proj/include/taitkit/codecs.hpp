#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "taitkit/diagram.hpp"

namespace taitkit {

/// A named table entry. The diagram is built (and so validated) on load.
struct DiagramDocument {
  std::string name;
  std::vector<PdTuple> pd;
  std::map<std::string, std::string> tags;
  Diagram diagram;
};

/// Accepts `PD[X[a,b,c,d], ...]` or one `a b c d` tuple per line. Label
/// multiplicities are checked later by build_from_crossing_list.
std::vector<PdTuple> parse_pd_text(std::string_view src);

/// Signed Gauss code, one component per line, e.g. "O1+U2+O3+U1+O2+U3+".
/// Each crossing must occur once as O and once as U with the same sign.
Diagram parse_gauss(std::string_view src);

/// PD text with edges relabelled 1..2n along the components.
std::string serialize_pd(const Diagram& d);
std::vector<PdTuple> to_pd_tuples(const Diagram& d);
std::string serialize_gauss(const Diagram& d);

std::vector<DiagramDocument> load_table(const std::filesystem::path& path);
std::vector<DiagramDocument> parse_table(std::string_view json_text);

}  // namespace taitkit
