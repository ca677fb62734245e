#include <fstream>
#include <sstream>

#include "subn/harness.hpp"

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

std::uint64_t to_u64(std::string const &v, std::size_t line)
{
  try {
    std::size_t used = 0;
    auto r = std::stoull(v, &used);
    if (used == v.size())
      return r;
  } catch (std::exception const &) {
  }
  throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" + v + "'");
}

bool to_bool(std::string const &v, std::size_t line)
{
  if (v == "true" || v == "yes" || v == "1")
    return true;
  if (v == "false" || v == "no" || v == "0")
    return false;
  throw ParseError("line " + std::to_string(line) + ": expected a boolean, got '" + v + "'");
}

} // namespace

SuiteConfig parse_suite(std::istream &in)
{
  SuiteConfig cfg;
  std::string raw;
  std::size_t line = 0;
  InstanceConfig *cur = nullptr;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty())
      continue;
    if (s == "[instance]") {
      cfg.instances.emplace_back();
      cur = &cfg.instances.back();
      continue;
    }
    auto eq = s.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(line) + ": expected key = value");
    std::string key = trim(s.substr(0, eq)), val = trim(s.substr(eq + 1));
    if (cur) {
      if (key == "group")
        cur->group = val;
      else if (key == "ell" || key == "p")
        cur->ell = static_cast<unsigned>(to_u64(val, line));
      else if (key == "perms")
        cur->perms = val;
      else if (key == "shape")
        cur->shape = val;
      else if (key == "exact_set")
        cur->exact_set = to_bool(val, line);
      else
        throw ParseError("line " + std::to_string(line) + ": unknown instance key '" + key + "'");
      continue;
    }
    if (key == "name")
      cfg.name = val;
    else if (key == "ceiling") {
      cfg.ceiling = to_u64(val, line);
      if (cfg.ceiling < 1)
        throw ParseError("line " + std::to_string(line) + ": ceiling must be at least 1");
    } else if (key == "node_budget")
      cfg.node_budget = to_u64(val, line);
    else if (key == "seed")
      cfg.seed = to_u64(val, line);
    else if (key == "threads")
      cfg.threads = static_cast<unsigned>(to_u64(val, line));
    else if (key == "report")
      cfg.report = val;
    else
      throw ParseError("line " + std::to_string(line) + ": unknown key '" + key + "'");
  }
  for (std::size_t i = 0; i < cfg.instances.size(); ++i)
    if (cfg.instances[i].group.empty() || cfg.instances[i].ell == 0)
      throw ParseError("instance " + std::to_string(i + 1) + ": group and ell are required");
  return cfg;
}

SuiteConfig load_suite(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open suite file " + path);
  return parse_suite(in);
}

SuiteConfig builtin_suite(std::string const &name)
{
  if (name != "default" && name != "flagship")
    throw Error("unknown suite '" + name + "' (known: default, flagship)");
  return load_suite(data_dir() + "/suites/" + name + ".cfg");
}

} // namespace subn
