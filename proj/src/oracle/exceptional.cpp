#include <sstream>

#include "internal.hpp"

namespace subn {

namespace {

// "G2(q)" -> (G2, 0); "G2(4)" -> (G2, 4)
std::pair<Family, unsigned> row_group(std::string const &g)
{
  auto open = g.find('(');
  Family f = parse_family(g.substr(0, open));
  std::string arg = g.substr(open + 1, g.size() - open - 2);
  return {f, arg == "q" ? 0u : static_cast<unsigned>(std::stoul(arg))};
}

bool d_listed(std::string const &list, unsigned d)
{
  std::istringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (static_cast<unsigned>(std::stoul(item)) == d)
      return true;
  return false;
}

template <class Row>
bool row_applies(Row const &row, GroupSpec const &spec, unsigned d)
{
  auto [f, q] = row_group(row.group);
  return f == spec.family && (q == 0 || q == spec.q) && d_listed(row.d, d);
}

std::vector<std::string> split_list(std::string const &s)
{
  std::vector<std::string> out;
  std::istringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(item);
  return out;
}

// d = e_ell(q), with the hypotheses of the overgroup classification
unsigned exceptional_d(GroupSpec const &spec, unsigned ell)
{
  if (!spec.is_exceptional())
    throw RefusalError(std::string("not an exceptional family: ") + family_name(spec.family));
  if (!is_prime(ell) || ell == 2 || spec.q % ell == 0)
    throw RefusalError("hypothesis violated: ell must be an odd prime not dividing q");
  if (!sylow_abelian(spec, ell))
    throw RefusalError("hypothesis violated: Sylow " + std::to_string(ell) +
                       "-subgroups are non-abelian");
  unsigned d = e_ell(ell, spec.q);
  if (order_polynomial(spec).multiplicity(d) == 0)
    throw RefusalError("hypothesis violated: " + std::to_string(ell) + " does not divide |G|");
  return d;
}

Prediction nominal(std::string structure, GroupSpec const &spec, unsigned d)
{
  Prediction p;
  p.structure = std::move(structure);
  p.order = structure_order(p.structure, spec.q, d);
  // G2 structures are literal; elsewhere central products may change the index
  p.order_exact = spec.family == Family::G2 && p.order != 0;
  return p;
}

} // namespace

namespace detail {

std::vector<Overgroup> exceptional_overgroups(GroupSpec const &spec, unsigned d, unsigned ell)
{
  unsigned de = exceptional_d(spec, ell);
  if (de != d)
    throw RefusalError("hypothesis violated: d = " + std::to_string(d) + " but e_ell(q) = " +
                       std::to_string(de));
  if (order_polynomial(spec).multiplicity(d) < 2)
    throw RefusalError("hypothesis violated: Sylow " + std::to_string(ell) +
                       "-subgroups are cyclic");
  Tables const &t = tables();
  for (auto const &row : t.maximal)
    if (row_applies(row, spec, d))
      return {};
  std::vector<Overgroup> out;
  bool found = false;
  for (auto const &row : t.generic)
    if (row_applies(row, spec, d)) {
      found = true;
      for (auto const &g : split_list(row.overgroups))
        out.push_back({"table-generic", g});
    }
  for (auto const &row : t.nongeneric)
    if (row_applies(row, spec, d)) {
      found = true;
      for (auto const &g : split_list(row.overgroups))
        out.push_back({"table-nongeneric", g});
    }
  if (!found)
    throw RefusalError("no table row for " + spec.str() + ", d = " + std::to_string(d));
  return out;
}

} // namespace detail

std::vector<std::string> exceptional_centralisers(GroupSpec const &spec, unsigned d)
{
  std::vector<std::string> out{"torus"};
  Tables const &t = tables();
  bool generic = false;
  for (auto const &row : t.generic)
    if (row_applies(row, spec, d) && row.centraliser != "-") {
      out.push_back(row.centraliser);
      generic = true;
    }
  // non-generic rows name the specialisation of the generic centraliser
  if (!generic)
    for (auto const &row : t.nongeneric)
      if (row_applies(row, spec, d) && row.centraliser != "-")
        out.push_back(row.centraliser);
  return out;
}

std::vector<Prediction> predict_exceptional(GroupSpec const &spec, unsigned ell,
                                            std::string const &centraliser)
{
  unsigned d = exceptional_d(spec, ell);
  Tables const &t = tables();

  std::string normaliser;
  for (auto const &row : t.maximal)
    if (row_applies(row, spec, d))
      normaliser = row.normaliser;
  for (auto const &row : t.nongeneric)
    if (normaliser.empty() && row_applies(row, spec, d))
      normaliser = row.normaliser;
  for (auto const &row : t.generic)
    if (normaliser.empty() && row_applies(row, spec, d))
      normaliser = row.normaliser;

  if (centraliser == "torus") {
    Prediction p;
    if (order_polynomial(spec).multiplicity(d) == 1) {
      p.case_tag = "cyclic";
      p.structure = "N_G(S_" + std::to_string(d) + ")";
      p.order_exact = false;
    } else {
      if (normaliser.empty())
        throw RefusalError("no table row for " + spec.str() + ", d = " + std::to_string(d));
      p = nominal(normaliser, spec, d);
      p.case_tag = "subn-exc(1)";
    }
    p.picky = true;
    return {p};
  }

  std::vector<Prediction> out;
  bool generic_hit = false;
  for (auto const &row : t.generic)
    if (row_applies(row, spec, d) && row.centraliser != "-" && row.centraliser == centraliser) {
      generic_hit = true;
      Prediction p = nominal(row.overgroups, spec, d);
      p.case_tag = "subn-exc(2)";
      out.push_back(p);
    }
  for (auto const &row : t.nongeneric)
    if (row_applies(row, spec, d) && row.centraliser != "-" &&
        (generic_hit || row.centraliser == centraliser)) {
      Prediction p = nominal(row.overgroups, spec, d);
      p.case_tag = "subn-exc(2)";
      out.push_back(p);
    }
  if (out.empty()) {
    Prediction p;
    p.case_tag = "subn-exc(otherwise)";
    p.structure = "G";
    p.order = order_value(spec);
    p.whole_group = true;
    out.push_back(p);
  }
  return out;
}

} // namespace subn
