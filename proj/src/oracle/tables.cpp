#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "subn/generic.hpp"
#include "subn/oracle.hpp"

namespace subn {

namespace {

std::string trim(std::string const &s)
{
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// data lines of a table file, split at " | "
std::vector<std::vector<std::string>> read_rows(std::istream &in, std::size_t columns,
                                                std::string const &what)
{
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty() || trim(line)[0] == '#')
      continue;
    std::vector<std::string> cells;
    std::size_t pos = 0;
    for (;;) {
      auto bar = line.find(" | ", pos);
      cells.push_back(trim(line.substr(pos, bar == std::string::npos ? bar : bar - pos)));
      if (bar == std::string::npos)
        break;
      pos = bar + 3;
    }
    if (cells.size() != columns)
      throw ParseError(what + ": expected " + std::to_string(columns) + " columns in '" + line +
                       "'");
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::vector<std::pair<unsigned, unsigned>> parse_pairs(std::string const &text)
{
  std::vector<std::pair<unsigned, unsigned>> out;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ParseError("class S table: bad d:ell pair '" + item + "'");
    out.emplace_back(std::stoul(item.substr(0, colon)), std::stoul(item.substr(colon + 1)));
  }
  return out;
}

std::ifstream open_table(std::string const &name)
{
  std::string path = data_dir() + "/tables/" + table_file(name);
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open table file " + path);
  return in;
}

Integer ipow(Integer b, unsigned e)
{
  Integer r = 1;
  while (e--)
    r *= b;
  return r;
}

Integer factorial(unsigned n)
{
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i)
    r *= i;
  return r;
}

Integer spec_order(Family f, unsigned q)
{
  GroupSpec s;
  s.family = f;
  s.q = q;
  return order_value(s);
}

// order of a simply connected group of Lie type named by twist, letter and
// rank over the field of order Q; 0 if unknown
Integer lie_order(unsigned twist, char letter, unsigned rank, Integer const &Q)
{
  if (letter == 'A' && twist == 1)
    return order_gl(rank + 1, Q) / (Q - 1);
  if (letter == 'A' && twist == 2)
    return order_gu(rank + 1, Q) / (Q + 1);
  if (letter == 'D' && rank == 4 && twist == 1)
    return order_go_even(4, 1, Q) / 2;
  if (Q > 1000000)
    return 0;
  unsigned q = static_cast<unsigned>(Q);
  if (letter == 'D' && rank == 4 && twist == 3)
    return spec_order(Family::D4_3, q);
  if (letter == 'E' && rank == 6)
    return spec_order(twist == 2 ? Family::E6_2 : Family::E6, q);
  if (letter == 'F' && rank == 4 && twist == 1)
    return spec_order(Family::F4, q);
  if (letter == 'F' && rank == 4 && twist == 2 && q == 2)
    return 35942400; // 2F4(2)
  if (letter == 'G' && rank == 2 && twist == 1)
    return spec_order(Family::G2, q);
  return 0;
}

Integer weyl_order(std::string const &type)
{
  static std::map<std::string, Integer> const w = {
      {"A_1", 2},        {"A_2", 6},         {"G_2", 12},
      {"D_4", 192},      {"F_4", 1152},      {"E_6", 51840},
      {"E_7", 2903040},  {"E_8", Integer("696729600")}};
  auto it = w.find(type);
  return it == w.end() ? Integer(0) : it->second;
}

Integer shephard_todd_order(unsigned k)
{
  static std::map<unsigned, unsigned> const g = {{4, 24},     {5, 72},    {8, 96},
                                                 {9, 192},    {10, 288},  {16, 600},
                                                 {25, 648},   {26, 1296}, {31, 46080},
                                                 {32, 155520}};
  auto it = g.find(k);
  return it == g.end() ? Integer(0) : Integer(it->second);
}

// one factor between dots, no 'x'
Integer factor_order(std::string f, unsigned q, unsigned d)
{
  if (f.empty())
    return 0;
  // trailing power ^m applies to the whole factor unless it is a Phi chain
  auto all_digits = [](std::string const &s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), ::isdigit);
  };
  if (all_digits(f))
    return Integer(f);
  if (f.rfind("Phi_", 0) == 0) {
    Integer r = 1;
    std::size_t pos = 0;
    while (pos < f.size()) {
      if (f.compare(pos, 4, "Phi_") != 0)
        return 0;
      pos += 4;
      unsigned k = 0;
      if (f[pos] == 'd') {
        k = d;
        ++pos;
      } else if (f.compare(pos, 5, "{d/3}") == 0) {
        k = d / 3;
        pos += 5;
      } else {
        std::size_t len = 0;
        while (pos + len < f.size() && isdigit(f[pos + len]))
          ++len;
        if (!len)
          return 0;
        k = std::stoul(f.substr(pos, len));
        pos += len;
      }
      unsigned m = 1;
      if (pos < f.size() && f[pos] == '^') {
        std::size_t len = 0;
        while (pos + 1 + len < f.size() && isdigit(f[pos + 1 + len]))
          ++len;
        m = std::stoul(f.substr(pos + 1, len));
        pos += 1 + len;
      }
      if (k == 0)
        return 0;
      r *= ipow(cyclotomic_value(k, q), m);
    }
    return r;
  }
  // strip a power on the whole factor: X^m with X ending in ')' or a digit
  unsigned power = 1;
  if (auto caret = f.rfind('^'); caret != std::string::npos && caret > 0 &&
                                 all_digits(f.substr(caret + 1)) &&
                                 (f[caret - 1] == ')' || isdigit(f[caret - 1]))) {
    power = std::stoul(f.substr(caret + 1));
    f = f.substr(0, caret);
  }
  Integer base = 0;
  if (all_digits(f)) {
    base = Integer(f);
  } else if (f.rfind("W(", 0) == 0 && f.back() == ')') {
    base = weyl_order(f.substr(2, f.size() - 3));
  } else if (f.rfind("G_", 0) == 0 && all_digits(f.substr(2))) {
    base = shephard_todd_order(std::stoul(f.substr(2)));
  } else if (f.rfind("S_", 0) == 0 && all_digits(f.substr(2))) {
    base = factorial(std::stoul(f.substr(2)));
  } else if (f == "J_2") {
    base = 604800;
  } else if (f == "Omega_8^+(2)") {
    base = Integer("174182400");
  } else {
    // [twist]X_r(arg)
    std::size_t pos = 0;
    unsigned twist = 1;
    if (isdigit(f[0])) {
      twist = f[0] - '0';
      pos = 1;
    }
    if (pos + 3 > f.size() || f[pos + 1] != '_')
      return 0;
    char letter = f[pos];
    auto open = f.find('(', pos);
    if (open == std::string::npos || f.back() != ')')
      return 0;
    std::string rank_text = f.substr(pos + 2, open - pos - 2);
    if (!all_digits(rank_text))
      return 0;
    unsigned rank = std::stoul(rank_text);
    std::string arg = f.substr(open + 1, f.size() - open - 2);
    Integer Q;
    if (arg == "q") {
      Q = q;
    } else if (arg == "+-q") {
      // +q for odd d, -q (the twisted group) for even d
      Q = q;
      if (d % 2 == 0)
        twist = 2;
    } else if (arg.rfind("q^", 0) == 0 && all_digits(arg.substr(2))) {
      Q = ipow(Integer(q), std::stoul(arg.substr(2)));
    } else if (all_digits(arg)) {
      Q = Integer(arg);
    } else {
      return 0;
    }
    // E_6 over q inside E_7 at d = 6 is the twisted form
    if (letter == 'E' && rank == 6 && twist == 1 && d == 6)
      twist = 2;
    base = lie_order(twist, letter, rank, Q);
  }
  if (base == 0)
    return 0;
  return ipow(base, power);
}

} // namespace

std::string table_file(std::string const &name)
{
  static std::map<std::string, std::string> const files = {
      {"exceptional-max", "exceptional_max.txt"},
      {"exceptional-generic", "exceptional_generic.txt"},
      {"exceptional-nongeneric", "exceptional_nongeneric.txt"},
      {"sporadic", "sporadic.txt"},
      {"s-class", "class_s.txt"},
      {"sporadic-abelian", "sporadic_abelian.txt"}};
  auto it = files.find(name);
  if (it == files.end())
    throw Error("unknown table '" + name + "'");
  return it->second;
}

std::vector<std::string> table_names()
{
  return {"exceptional-max", "exceptional-generic", "exceptional-nongeneric", "sporadic",
          "s-class"};
}

Tables parse_tables(std::istream &maximal, std::istream &generic, std::istream &nongeneric,
                    std::istream &sporadic, std::istream &class_s)
{
  Tables t;
  for (auto &c : read_rows(maximal, 3, "exceptional-max"))
    t.maximal.push_back({c[0], c[1], c[2]});
  for (auto &c : read_rows(generic, 5, "exceptional-generic"))
    t.generic.push_back({c[0], c[1], c[2], c[3], c[4]});
  for (auto &c : read_rows(nongeneric, 5, "exceptional-nongeneric"))
    t.nongeneric.push_back({c[0], c[1], c[2], c[3], c[4]});
  for (auto &c : read_rows(sporadic, 4, "sporadic"))
    t.sporadic.push_back({c[0], static_cast<unsigned>(std::stoul(c[1])), c[2], c[3]});
  for (auto &c : read_rows(class_s, 4, "s-class")) {
    ClassSRow row;
    std::istringstream key(c[0]);
    if (!(key >> row.family >> row.n >> row.q))
      throw ParseError("s-class: bad key '" + c[0] + "'");
    row.subgroup = c[1];
    row.ambient = c[2];
    row.d_ell = parse_pairs(c[3]);
    t.class_s.push_back(std::move(row));
  }
  return t;
}

Tables const &tables()
{
  static Tables const t = [] {
    auto a = open_table("exceptional-max");
    auto b = open_table("exceptional-generic");
    auto c = open_table("exceptional-nongeneric");
    auto d = open_table("sporadic");
    auto e = open_table("s-class");
    return parse_tables(a, b, c, d, e);
  }();
  return t;
}

void emit_table(std::ostream &os, std::string const &name, std::string const &family)
{
  Tables const &t = tables();
  auto overgroup_rows = [&os](std::vector<ExceptionalOvergroupRow> const &rows) {
    for (auto const &r : rows)
      os << r.group << " | " << r.d << " | " << r.normaliser << " | " << r.overgroups << " | "
         << r.centraliser << '\n';
  };
  if (name == "exceptional-max") {
    for (auto const &r : t.maximal)
      os << r.group << " | " << r.d << " | " << r.normaliser << '\n';
  } else if (name == "exceptional-generic") {
    overgroup_rows(t.generic);
  } else if (name == "exceptional-nongeneric") {
    overgroup_rows(t.nongeneric);
  } else if (name == "sporadic") {
    for (auto const &r : t.sporadic)
      os << r.group << " | " << r.p << " | " << r.centraliser_order << " | " << r.subnormaliser
         << '\n';
  } else if (name == "s-class") {
    std::string want;
    if (!family.empty())
      want = family_name(parse_family(family));
    for (auto const &r : t.class_s) {
      if (!want.empty() && r.family != want) {
        // SL/SU/Sp lists are keyed by their own family; orthogonal lists by Omega
        Family rf = parse_family(r.family), wf = parse_family(want);
        bool same_kind =
            (rf == Family::OmegaOdd && wf == Family::SOodd) ||
            (rf == Family::OmegaEvenPlus && wf == Family::SOevenPlus) ||
            (rf == Family::OmegaEvenMinus && wf == Family::SOevenMinus);
        if (!same_kind)
          continue;
      }
      os << r.family << ' ' << r.n << ' ' << r.q << " | " << r.subgroup << " | " << r.ambient
         << " | ";
      for (std::size_t i = 0; i < r.d_ell.size(); ++i)
        os << (i ? "," : "") << r.d_ell[i].first << ':' << r.d_ell[i].second;
      os << '\n';
    }
  } else {
    throw Error("unknown table '" + name + "'");
  }
}

std::vector<SporadicAbelian> const &sporadic_abelian()
{
  static std::vector<SporadicAbelian> const list = [] {
    auto in = open_table("sporadic-abelian");
    std::vector<SporadicAbelian> out;
    for (auto &c : read_rows(in, 3, "sporadic-abelian"))
      out.push_back({c[0], static_cast<unsigned>(std::stoul(c[1])), Integer(c[2])});
    return out;
  }();
  return list;
}

Integer structure_order(std::string const &structure, unsigned q, unsigned d)
{
  Integer total = 1;
  std::istringstream ss(structure);
  std::string dot;
  while (std::getline(ss, dot, '.')) {
    std::size_t pos = 0;
    for (;;) {
      auto x = dot.find('x', pos);
      Integer f = factor_order(dot.substr(pos, x == std::string::npos ? x : x - pos), q, d);
      if (f == 0)
        return 0;
      total *= f;
      if (x == std::string::npos)
        break;
      pos = x + 1;
    }
  }
  return total;
}

} // namespace subn
