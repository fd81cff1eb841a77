#include <algorithm>
#include <map>
#include <numeric>

#include "newtonleaf/affine_weyl.hpp"
#include "newtonleaf/errors.hpp"

namespace newtonleaf {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  std::size_t add() {
    parent.push_back(parent.size());
    return parent.size() - 1;
  }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

SigmaClassPartition enumerate_sigma_classes(const DatumPtr& d, const ClassEnumerationConfig& cfg,
                                            const FrobeniusAction& sigma) {
  if (sigma.datum_ptr().get() != d.get()) throw MismatchError("Frobenius over a different root datum");
  if (cfg.length_cap < 0 || cfg.slack < 0) throw ConfigurationError("caps must be nonnegative");
  const int conj_cap = cfg.conj_cap < 0 ? cfg.length_cap + 2 : cfg.conj_cap;

  const auto seeds = elements_up_to_length(d, cfg.length_cap, cfg.window);
  const auto conjugators = elements_up_to_length(d, conj_cap, cfg.window);
  const long long node_cap = cfg.length_cap + cfg.slack;

  std::map<ExtendedAffineElement, std::size_t> node;
  std::vector<ExtendedAffineElement> elems;
  std::vector<bool> is_seed;
  UnionFind uf;
  auto intern = [&](const ExtendedAffineElement& x, bool seed) {
    auto it = node.find(x);
    if (it != node.end()) return it->second;
    if (elems.size() >= cfg.max_nodes) {
      throw ResourceError("sigma-class enumeration exceeded " + std::to_string(cfg.max_nodes) + " nodes",
                          "seeds=" + std::to_string(seeds.size()) + " nodes=" + std::to_string(elems.size()));
    }
    std::size_t id = uf.add();
    node.emplace(x, id);
    elems.push_back(x);
    is_seed.push_back(seed);
    return id;
  };
  for (const auto& x : seeds) intern(x, true);

  for (const auto& x : seeds) {
    const std::size_t ix = node.at(x);
    for (const auto& g : conjugators) {
      ExtendedAffineElement y = sigma_conjugate(g, x, sigma);
      if (length(y) > node_cap) continue;
      uf.unite(ix, intern(y, false));
    }
  }

  const CoinvariantLattice pi1_sigma = fundamental_group_sigma(sigma);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < elems.size(); ++i) groups[uf.find(i)].push_back(i);

  SigmaClassPartition out;
  out.conj_cap = conj_cap;
  for (auto& [root, members] : groups) {
    bool has_seed = std::any_of(members.begin(), members.end(), [&](std::size_t i) { return is_seed[i]; });
    if (!has_seed) continue;
    std::sort(members.begin(), members.end(),
              [&](std::size_t a, std::size_t b) { return output_order(elems[a], elems[b]); });
    SigmaClassBlock block;
    for (auto i : members) {
      block.members.push_back(elems[i]);
      block.seed.push_back(is_seed[i]);
    }
    block.nu_dominant = newton_point(block.members.front(), sigma).dominant;
    block.kappa = project(pi1_sigma, d->lattice_coordinates(block.members.front().translation_part()));
    for (const auto& m : block.members) {
      if (newton_point(m, sigma).dominant != block.nu_dominant)
        throw ConsistencyError("Newton point not constant on a sigma-conjugacy block");
      if (project(pi1_sigma, d->lattice_coordinates(m.translation_part())) != block.kappa)
        throw ConsistencyError("Kottwitz class not constant on a sigma-conjugacy block");
    }
    out.blocks.push_back(std::move(block));
  }
  std::sort(out.blocks.begin(), out.blocks.end(), [](const SigmaClassBlock& a, const SigmaClassBlock& b) {
    return output_order(a.members.front(), b.members.front());
  });
  return out;
}

}  // namespace newtonleaf
