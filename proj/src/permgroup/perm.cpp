#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "subn/common.hpp"
#include "subn/perm.hpp"

namespace subn {

Perm::Perm(unsigned degree) : img_(degree)
{
  std::iota(img_.begin(), img_.end(), 0u);
}

Perm::Perm(std::vector<point> images) : img_(std::move(images))
{
  std::vector<char> seen(img_.size(), 0);
  for (point x : img_) {
    if (x >= img_.size() || seen[x])
      throw Error("perm: images are not a bijection");
    seen[x] = 1;
  }
}

Perm Perm::from_cycles(unsigned degree, std::vector<std::vector<point>> const &cycles)
{
  std::vector<point> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<char> used(degree, 0);
  for (auto const &c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree)
        throw Error("perm: cycle point exceeds degree");
      if (used[c[i]])
        throw Error("perm: point repeated in cycles");
      used[c[i]] = 1;
      img[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Perm(std::move(img));
}

Perm Perm::parse(unsigned degree, std::string const &text)
{
  std::vector<std::vector<point>> cycles;
  std::vector<point> cur;
  bool open = false;
  std::string num;

  auto flush_num = [&]() {
    if (num.empty())
      return;
    unsigned long v = std::stoul(num);
    if (v < 1 || v > degree)
      throw ParseError("perm: point " + num + " outside 1.." + std::to_string(degree));
    cur.push_back(static_cast<point>(v - 1));
    num.clear();
  };

  for (char c : text) {
    if (c >= '0' && c <= '9') {
      if (!open)
        throw ParseError("perm: digit outside a cycle");
      num += c;
    } else if (c == '(') {
      if (open)
        throw ParseError("perm: nested parenthesis");
      open = true;
    } else if (c == ')') {
      if (!open)
        throw ParseError("perm: unbalanced parenthesis");
      flush_num();
      if (!cur.empty())
        cycles.push_back(cur);
      cur.clear();
      open = false;
    } else if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
      flush_num();
    } else {
      throw ParseError(std::string("perm: unexpected character '") + c + "'");
    }
  }
  if (open)
    throw ParseError("perm: unterminated cycle");
  return from_cycles(degree, cycles);
}

Perm Perm::operator*(Perm const &rhs) const
{
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    r.img_[i] = rhs.img_[img_[i]];
  return r;
}

Perm &Perm::operator*=(Perm const &rhs)
{
  for (auto &x : img_)
    x = rhs.img_[x];
  return *this;
}

Perm Perm::operator~() const
{
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    r.img_[img_[i]] = static_cast<point>(i);
  return r;
}

Perm Perm::pow(long long e) const
{
  Perm base = e < 0 ? ~*this : *this;
  unsigned long long k = e < 0 ? -static_cast<unsigned long long>(e) : e;
  Perm r(degree());
  while (k) {
    if (k & 1)
      r *= base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

bool Perm::is_identity() const
{
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i)
      return false;
  return true;
}

std::uint64_t Perm::order() const
{
  std::uint64_t o = 1;
  for (unsigned len : cycle_type())
    o = std::lcm(o, static_cast<std::uint64_t>(len));
  return o;
}

std::vector<std::vector<point>> Perm::cycles() const
{
  std::vector<std::vector<point>> out;
  std::vector<char> seen(img_.size(), 0);
  for (point i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i)
      continue;
    std::vector<point> c;
    for (point j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<unsigned> Perm::cycle_type() const
{
  std::vector<unsigned> t;
  std::vector<char> seen(img_.size(), 0);
  for (point i = 0; i < img_.size(); ++i) {
    if (seen[i])
      continue;
    unsigned len = 0;
    for (point j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len > 1)
      t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

unsigned Perm::support_size() const
{
  unsigned s = 0;
  for (std::size_t i = 0; i < img_.size(); ++i)
    s += img_[i] != i;
  return s;
}

bool Perm::is_even() const
{
  unsigned odd = 0;
  for (unsigned len : cycle_type())
    odd += (len % 2 == 0);
  return odd % 2 == 0;
}

std::string Perm::str() const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::ostringstream ss;
  for (auto const &c : cs) {
    ss << '(';
    for (std::size_t i = 0; i < c.size(); ++i)
      ss << (i ? "," : "") << c[i] + 1;
    ss << ')';
  }
  return ss.str();
}

std::size_t Perm::hash() const
{
  std::size_t h = 1469598103934665603ull;
  for (point x : img_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

Perm conj(Perm const &x, Perm const &g)
{
  // i^(g^-1 x g) = g[x[g^-1[i]]], so index through g instead of inverting it
  std::vector<point> img(x.degree());
  for (point i = 0; i < x.degree(); ++i)
    img[g[i]] = g[x[i]];
  return Perm(std::move(img));
}

Perm comm(Perm const &x, Perm const &y) { return ~x * ~y * x * y; }

std::ostream &operator<<(std::ostream &os, Perm const &p) { return os << p.str(); }

PermFile read_perms(std::istream &in)
{
  PermFile f;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos)
      continue;
    line = line.substr(first);
    if (!header) {
      std::istringstream ss(line);
      std::string word;
      ss >> word;
      if (word != "degree" || !(ss >> f.degree))
        throw ParseError("perm file: expected `degree n` header");
      header = true;
      continue;
    }
    f.gens.push_back(Perm::parse(f.degree, line));
  }
  if (!header)
    throw ParseError("perm file: missing header");
  return f;
}

PermFile read_perms_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open " + path);
  return read_perms(in);
}

void write_perms(std::ostream &out, unsigned degree, std::vector<Perm> const &gens)
{
  out << "degree " << degree << '\n';
  for (auto const &g : gens)
    out << g.str() << '\n';
}

} // namespace subn
