#include <fstream>
#include <mutex>
#include <sstream>

#include "subn/classical.hpp"
#include "subn/common.hpp"

namespace subn {

namespace {

std::vector<CatalogueEntry> load_catalogue()
{
  std::string path = data_dir() + "/catalogue.txt";
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open " + path);
  std::vector<CatalogueEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    std::istringstream ss(line);
    // name degree order source...
    CatalogueEntry e;
    std::string order;
    if (!(ss >> e.name))
      continue;
    if (!(ss >> e.degree >> order))
      throw ParseError("catalogue: malformed line '" + line + "'");
    e.order = Integer(order);
    std::getline(ss >> std::ws, e.source);
    out.push_back(std::move(e));
  }
  return out;
}

} // namespace

std::vector<CatalogueEntry> const &catalogue()
{
  static std::vector<CatalogueEntry> const entries = load_catalogue();
  return entries;
}

PermFile named_generators(std::string const &name)
{
  for (auto const &e : catalogue()) {
    if (e.name != name)
      continue;
    PermFile pf;
    if (e.source.rfind("perms ", 0) == 0) {
      pf = read_perms_file(data_dir() + "/" + e.source.substr(6));
    } else {
      auto spec = GroupSpec::parse(e.source);
      auto g = build_group(spec);
      pf.degree = g.degree();
      pf.gens = g.generators();
    }
    if (pf.degree != e.degree)
      throw Error("catalogue: " + name + " has degree " + std::to_string(pf.degree) +
                  ", expected " + std::to_string(e.degree));
    return pf;
  }
  std::string known;
  for (auto const &e : catalogue())
    known += (known.empty() ? "" : ", ") + e.name;
  throw Error("unknown group '" + name + "'; available: " + known);
}

} // namespace subn
