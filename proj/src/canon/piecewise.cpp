#include <functional>

#include "efdkit/canonical.hpp"
#include "efdkit/errors.hpp"

namespace efdkit {

namespace {

// Position in the chain of the form selected by the lattice term.
std::size_t resolve(const LatticeNode& nd, const std::vector<std::size_t>& pos) {
  if (nd.kind == LatticeNode::Kind::Leaf) return nd.form;
  const std::size_t a = resolve(nd.children[0], pos), b = resolve(nd.children[1], pos);
  const bool a_later = pos[a] > pos[b];
  if (nd.kind == LatticeNode::Kind::Join) return a_later ? a : b;
  return a_later ? b : a;
}

}  // namespace

std::vector<std::size_t> PiecewiseLinear::containing(const RationalVector& x) const {
  if (x.size() != n) throw DimensionMismatch("point has the wrong dimension");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].region.satisfied_by(x)) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> PiecewiseLinear::lookup(const RationalVector& x) const {
  if (x.size() != n) throw DimensionMismatch("point has the wrong dimension");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].region.satisfied_by(x)) return i;
  }
  return std::nullopt;
}

PiecewiseLinear piecewise_canonical(const LatticeNormal& ln, std::size_t cap) {
  const std::size_t p = ln.forms.size();
  if (p > cap) {
    throw CapExceeded(std::to_string(p) + " distinct linear forms exceed the permutation cap of " + std::to_string(cap));
  }
  PiecewiseLinear out;
  out.n = ln.n;
  if (p == 1) {
    out.pieces.push_back({IneqSystem{ln.n, {}}, ln.forms[0]});
    return out;
  }

  std::vector<std::size_t> chain;
  std::vector<bool> used(p, false);
  IneqSystem region{ln.n, {}};
  std::function<void()> dfs = [&] {
    if (chain.size() == p) {
      std::vector<std::size_t> pos(p);
      for (std::size_t i = 0; i < p; ++i) pos[chain[i]] = i;
      out.pieces.push_back({region, ln.forms[resolve(ln.root, pos)]});
      return;
    }
    for (std::size_t i = 0; i < p; ++i) {
      if (used[i]) continue;
      const bool adds_row = !chain.empty();
      if (adds_row) region.rows.push_back((ln.forms[i] - ln.forms[chain.back()]).primitive());
      // Prune unless some completion is full-dimensional: every unplaced form must fit above u_i.
      IneqSystem probe = region;
      for (std::size_t r = 0; r < p; ++r) {
        if (r != i && !used[r]) probe.rows.push_back((ln.forms[r] - ln.forms[i]).primitive());
      }
      if (!probe.rows.empty() && !is_full_dimensional(probe).full) {
        if (adds_row) region.rows.pop_back();
        continue;
      }
      used[i] = true;
      chain.push_back(i);
      dfs();
      chain.pop_back();
      used[i] = false;
      if (adds_row) region.rows.pop_back();
    }
  };
  dfs();
  return out;
}

PiecewiseLinear piecewise_canonical(const Term& t, std::size_t cap, std::size_t n) {
  return piecewise_canonical(distribute_to_lattice_normal(t, n), cap);
}

}  // namespace efdkit
