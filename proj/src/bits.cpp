#include "neuralcode/bits.hpp"

namespace neuralcode {

std::vector<Mask> masks_by_popcount(int bits) {
  std::vector<Mask> out(std::size_t{1} << bits);
  for (Mask m = 0; m < out.size(); ++m) out[m] = m;
  std::stable_sort(out.begin(), out.end(), [](Mask a, Mask b) {
    return popcount(a) < popcount(b);
  });
  return out;
}

std::vector<Mask> minimal_sets(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  // A proper subset always has a smaller popcount; scan by size.
  std::vector<Mask> by_size = sets;
  std::stable_sort(by_size.begin(), by_size.end(), [](Mask a, Mask b) {
    return popcount(a) < popcount(b);
  });
  std::vector<Mask> kept;
  for (Mask s : by_size) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [s](Mask k) { return is_subset(k, s); });
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<Mask> maximal_sets(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> by_size = sets;
  std::stable_sort(by_size.begin(), by_size.end(), [](Mask a, Mask b) {
    return popcount(a) > popcount(b);
  });
  std::vector<Mask> kept;
  for (Mask s : by_size) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [s](Mask k) { return is_subset(s, k); });
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

bool is_antichain(std::span<const Mask> sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (i != j && is_subset(sets[i], sets[j])) return false;
  return true;
}

namespace {

struct TransversalSearch {
  std::vector<Mask> edges;
  std::vector<Mask> found;

  bool has_private_edges(Mask chosen) const {
    bool ok = true;
    for_each_bit(chosen, [&](int v) {
      Mask bit = Mask{1} << v;
      bool priv = std::any_of(edges.begin(), edges.end(), [&](Mask e) {
        return (e & chosen) == bit;
      });
      ok = ok && priv;
    });
    return ok;
  }

  void run(Mask chosen, Mask excluded) {
    auto unhit = std::find_if(edges.begin(), edges.end(),
                              [chosen](Mask e) { return (e & chosen) == 0; });
    if (unhit == edges.end()) {
      if (has_private_edges(chosen)) found.push_back(chosen);
      return;
    }
    for (Mask e : edges)
      if ((e & chosen) == 0 && is_subset(e, excluded)) return;
    // Branch k takes the k-th vertex of the edge and excludes the earlier
    // ones, so every minimal transversal is reached along exactly one path.
    Mask banned = excluded;
    for_each_bit(*unhit & ~excluded, [&](int v) {
      Mask bit = Mask{1} << v;
      run(chosen | bit, banned);
      banned |= bit;
    });
  }
};

}  // namespace

std::vector<Mask> minimal_transversals(std::span<const Mask> edges) {
  TransversalSearch search{minimal_sets({edges.begin(), edges.end()}), {}};
  if (!search.edges.empty() && search.edges.front() == 0) return {};
  search.run(0, 0);
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

std::vector<Mask> minimal_transversals_by_product(std::span<const Mask> edges) {
  std::vector<Mask> partial{0};
  for (Mask e : edges) {
    std::vector<Mask> next;
    for (Mask g : partial) {
      if (g & e) {
        next.push_back(g);
        continue;
      }
      for_each_bit(e, [&](int v) { next.push_back(g | (Mask{1} << v)); });
    }
    partial = minimal_sets(std::move(next));
  }
  return partial;
}

}  // namespace neuralcode
