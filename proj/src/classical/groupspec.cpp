#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "subn/classical.hpp"
#include "subn/common.hpp"

namespace subn {

namespace {

struct FamilyName
{
  Family family;
  char const *name;
};

// the first entry for each family is its printed name
FamilyName const family_names[] = {
    {Family::SL, "SL"},
    {Family::SU, "SU"},
    {Family::Sp, "Sp"},
    {Family::SOodd, "SOodd"},
    {Family::SOodd, "SO"},
    {Family::SOevenPlus, "SOevenPlus"},
    {Family::SOevenPlus, "SO+"},
    {Family::SOevenPlus, "SOplus"},
    {Family::SOevenMinus, "SOevenMinus"},
    {Family::SOevenMinus, "SO-"},
    {Family::SOevenMinus, "SOminus"},
    {Family::OmegaOdd, "OmegaOdd"},
    {Family::OmegaOdd, "Omega"},
    {Family::OmegaEvenPlus, "OmegaEvenPlus"},
    {Family::OmegaEvenPlus, "Omega+"},
    {Family::OmegaEvenMinus, "OmegaEvenMinus"},
    {Family::OmegaEvenMinus, "Omega-"},
    {Family::GL, "GL"},
    {Family::GU, "GU"},
    {Family::GOplus, "GOplus"},
    {Family::GOplus, "GO+"},
    {Family::GOminus, "GOminus"},
    {Family::GOminus, "GO-"},
    {Family::G2, "G2"},
    {Family::D4_3, "3D4"},
    {Family::F4, "F4"},
    {Family::E6, "E6"},
    {Family::E6_2, "2E6"},
    {Family::E7, "E7"},
    {Family::E8, "E8"},
    {Family::Sym, "Sym"},
    {Family::Sym, "S"},
    {Family::Alt, "Alt"},
    {Family::Alt, "A"},
    {Family::Sporadic, "Sporadic"},
};

std::string lower(std::string s)
{
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

unsigned parse_unsigned(std::string const &s, char const *what)
{
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(s, &used);
    if (used != s.size())
      throw ParseError("");
    return static_cast<unsigned>(v);
  } catch (std::exception const &) {
    throw ParseError(std::string("group spec: bad ") + what + " '" + s + "'");
  }
}

bool is_prime_power(unsigned q)
{
  if (q < 2)
    return false;
  unsigned p = 2;
  while (q % p)
    ++p;
  while (q % p == 0)
    q /= p;
  return q == 1;
}

} // namespace

char const *family_name(Family f)
{
  for (auto const &fn : family_names)
    if (fn.family == f)
      return fn.name;
  return "?";
}

Family parse_family(std::string const &s)
{
  std::string l = lower(s);
  for (auto const &fn : family_names)
    if (lower(fn.name) == l)
      return fn.family;
  throw ParseError("unknown group family '" + s + "'");
}

GroupSpec GroupSpec::parse(std::vector<std::string> const &tokens)
{
  if (tokens.empty())
    throw ParseError("group spec: empty");

  GroupSpec spec;
  Family f;
  try {
    f = parse_family(tokens[0]);
  } catch (ParseError const &) {
    if (tokens.size() != 1)
      throw;
    spec.family = Family::Sporadic;
    spec.name = tokens[0];
    return spec;
  }
  spec.family = f;

  if (f == Family::Sporadic) {
    if (tokens.size() != 2)
      throw ParseError("group spec: expected 'Sporadic <name>'");
    spec.name = tokens[1];
    return spec;
  }
  if (f == Family::Sym || f == Family::Alt) {
    if (tokens.size() != 2)
      throw ParseError("group spec: expected '" + tokens[0] + " <degree>'");
    spec.n = parse_unsigned(tokens[1], "degree");
    return spec;
  }
  if (spec.is_exceptional()) {
    if (tokens.size() != 2)
      throw ParseError("group spec: expected '" + tokens[0] + " <q>'");
    spec.q = parse_unsigned(tokens[1], "field size");
  } else {
    if (tokens.size() != 3)
      throw ParseError("group spec: expected '" + tokens[0] + " <n> <q>'");
    spec.n = parse_unsigned(tokens[1], "rank");
    spec.q = parse_unsigned(tokens[2], "field size");
    if (spec.n == 0)
      throw ParseError("group spec: rank must be positive");
  }
  if (!is_prime_power(spec.q))
    throw ParseError("group spec: " + std::to_string(spec.q) + " is not a prime power");
  return spec;
}

GroupSpec GroupSpec::parse(std::string const &text)
{
  std::istringstream ss(text);
  std::vector<std::string> tokens;
  for (std::string t; ss >> t;)
    tokens.push_back(t);
  return parse(tokens);
}

std::string GroupSpec::str() const
{
  switch (family) {
  case Family::Sporadic:
    return name;
  case Family::Sym:
  case Family::Alt:
    return std::string(family_name(family)) + " " + std::to_string(n);
  default:
    break;
  }
  if (is_exceptional())
    return std::string(family_name(family)) + " " + std::to_string(q);
  return std::string(family_name(family)) + " " + std::to_string(n) + " " + std::to_string(q);
}

bool GroupSpec::is_exceptional() const
{
  switch (family) {
  case Family::G2:
  case Family::D4_3:
  case Family::F4:
  case Family::E6:
  case Family::E6_2:
  case Family::E7:
  case Family::E8:
    return true;
  default:
    return false;
  }
}

bool GroupSpec::is_classical() const
{
  return !is_exceptional() && family != Family::Sym && family != Family::Alt &&
         family != Family::Sporadic;
}

bool GroupSpec::is_orthogonal() const
{
  switch (family) {
  case Family::SOodd:
  case Family::SOevenPlus:
  case Family::SOevenMinus:
  case Family::OmegaOdd:
  case Family::OmegaEvenPlus:
  case Family::OmegaEvenMinus:
  case Family::GOplus:
  case Family::GOminus:
    return true;
  default:
    return false;
  }
}

bool GroupSpec::is_matrix_family() const { return is_classical() || family == Family::G2; }

unsigned GroupSpec::dimension() const
{
  switch (family) {
  case Family::SL:
  case Family::SU:
  case Family::GL:
  case Family::GU:
    return n;
  case Family::Sp:
  case Family::SOevenPlus:
  case Family::SOevenMinus:
  case Family::OmegaEvenPlus:
  case Family::OmegaEvenMinus:
  case Family::GOplus:
  case Family::GOminus:
    return 2 * n;
  case Family::SOodd:
  case Family::OmegaOdd:
    return 2 * n + 1;
  case Family::G2:
    return q % 2 == 0 ? 6 : 7;
  default:
    return 0;
  }
}

unsigned GroupSpec::scalar_order() const
{
  unsigned odd = q % 2 ? 2 : 1;
  switch (family) {
  case Family::SL:
    return std::gcd(n, q - 1);
  case Family::SU:
    return std::gcd(n, q + 1);
  case Family::GL:
    return q - 1;
  case Family::GU:
    return q + 1;
  case Family::Sp:
  case Family::SOevenPlus:
  case Family::SOevenMinus:
  case Family::GOplus:
  case Family::GOminus:
  case Family::OmegaEvenPlus:
  case Family::OmegaEvenMinus:
    return odd;
  default:
    return 1;
  }
}

} // namespace subn
