// Offline generator for the bundled degree-100 J2 and degree-416 G2(4)
// permutation files.
//
// G2(2) sits inside G2(4) as the subgroup of matrices over GF(2); its derived
// group U3(3) lies in exactly the J2 subgroups found by random search. J2 acts
// on its 100 conjugates of U3(3) and G2(4) on its 416 conjugates of J2; a
// subgroup is identified with its orbit partition on the 1365 projective
// points, which is checked a posteriori by the orders of the results.

#include <fstream>
#include <iostream>
#include <map>
#include <random>

#include "subn/algorithms.hpp"
#include "subn/classical.hpp"

using namespace subn;

namespace {

using Partition = std::vector<point>; // point -> least point of its block

Partition orbit_partition(PermGroup const &G)
{
  Partition label(G.degree());
  for (auto const &orb : G.orbits()) {
    point m = *std::min_element(orb.begin(), orb.end());
    for (point x : orb)
      label[x] = m;
  }
  return label;
}

Partition image(Partition const &p, Perm const &g)
{
  // the block of x^g is the image of the block of x
  std::vector<point> least(p.size(), static_cast<point>(-1));
  for (point x = 0; x < p.size(); ++x) {
    point y = g[x], b = g[p[x]];
    least[b] = std::min(least[b], y);
  }
  Partition out(p.size());
  for (point x = 0; x < p.size(); ++x)
    out[g[x]] = least[g[p[x]]];
  return out;
}

// permutation action of gens on the orbit of p
std::vector<Perm> orbit_perms(Partition const &p, std::vector<Perm> const &gens)
{
  std::map<Partition, point> index{{p, 0}};
  std::vector<Partition> list{p};
  for (std::size_t i = 0; i < list.size(); ++i)
    for (auto const &g : gens) {
      auto q = image(list[i], g);
      if (index.emplace(q, static_cast<point>(list.size())).second)
        list.push_back(std::move(q));
    }
  std::vector<Perm> out;
  for (auto const &g : gens) {
    std::vector<point> img(list.size());
    for (std::size_t i = 0; i < list.size(); ++i)
      img[i] = index.at(image(list[i], g));
    out.emplace_back(std::move(img));
  }
  return out;
}

// two random elements generating a group of the given order
std::vector<Perm> two_generators(PermGroup const &G, std::mt19937_64 &rng)
{
  for (;;) {
    std::vector<Perm> gs{G.random_element(rng), G.random_element(rng)};
    if (PermGroup(G.degree(), gs).order() == G.order())
      return gs;
  }
}

void write(std::string const &path, std::string const &comment, unsigned degree,
           std::vector<Perm> const &gens)
{
  std::ofstream out(path);
  out << "# " << comment << "\n";
  write_perms(out, degree, gens);
  std::cout << "wrote " << path << "\n";
}

} // namespace

int main(int argc, char **argv)
{
  std::string dir = argc > 1 ? argv[1] : data_dir() + "/perms";
  std::mt19937_64 rng(20240601);

  GroupSpec g2_4 = GroupSpec::parse("G2 4");
  auto mg = matrix_generators(g2_4);
  auto action = perm_action(mg.gens, ActionKind::projective_points);
  PermGroup G(action.degree, action.gens);
  std::cout << "G2(4) on " << G.degree() << " points, order " << G.order() << "\n";

  // G2(2) as matrices with entries in GF(2), reinterpreted over GF(4)
  std::vector<Perm> h;
  for (auto const &m : matrix_generators(GroupSpec::parse("G2 2")).gens)
    h.push_back(act(action, Matrix(mg.field, m.dim(), m.entries())));
  PermGroup U = derived_subgroup(PermGroup(G.degree(), h));
  std::cout << "U3(3) order " << U.order() << "\n";

  Integer const j2_order = 604800;
  PermGroup J;
  for (unsigned tries = 1;; ++tries) {
    auto gens = U.generators();
    gens.push_back(G.random_element(rng));
    PermGroup K(G.degree(), gens);
    if (K.order() == j2_order) {
      J = K;
      std::cout << "J2 found after " << tries << " tries\n";
      break;
    }
  }

  auto j2_100 = orbit_perms(orbit_partition(U), J.generators());
  PermGroup J100(static_cast<unsigned>(j2_100.front().degree()), j2_100);
  auto g2_416 = orbit_perms(orbit_partition(J), G.generators());
  PermGroup G416(static_cast<unsigned>(g2_416.front().degree()), g2_416);
  std::cout << "J2 on " << J100.degree() << " points, order " << J100.order() << "\n";
  std::cout << "G2(4) on " << G416.degree() << " points, order " << G416.order() << "\n";
  if (J100.degree() != 100 || J100.order() != j2_order || G416.degree() != 416 ||
      G416.order() != G.order()) {
    std::cerr << "unexpected degrees or orders\n";
    return 1;
  }

  write(dir + "/J2.txt", "Janko group J2 on the cosets of U3(3)", 100,
        two_generators(J100, rng));
  write(dir + "/G2_4.txt", "G2(4) on the cosets of J2", 416, two_generators(G416, rng));
}
