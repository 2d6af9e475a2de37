#include "discoef/search.hpp"

#include <cmath>
#include <exception>
#include <vector>

#include "discoef/rng.hpp"

namespace discoef {

namespace {

struct Candidate {
  std::vector<Vector> gens;
  std::vector<Vector> vecs;
};

// Ratio of the candidate, or -1 if it no longer forms a valid instance
// (rank-deficient generators, zero vector).
double try_ratio(const Candidate& c, int m) {
  try {
    SymmetricBody body = SymmetricBody::polytope(m, c.gens);
    VectorSet vs(m, c.vecs);
    return ratio(vs, body).ratio;
  } catch (const InvariantError&) {
    return -1.0;
  } catch (const DimensionError&) {
    return -1.0;
  }
}

}  // namespace

SearchResult search_max_ratio(const SearchConfig& config) {
  const int m = config.m;
  if (m < 2) throw InvariantError("search_max_ratio: m must be at least 2");
  if (config.k < m || config.n < 1 || config.restarts < 1 || config.steps < 0 ||
      config.step_size <= 0.0) {
    throw InvariantError("search_max_ratio: impossible parameters");
  }

  struct RestartOutcome {
    Candidate best;
    double ratio = -1.0;
  };
  std::vector<RestartOutcome> outcomes(config.restarts);

#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < config.restarts; ++r) {
    const std::uint64_t restart_seed = split_seed(config.seed, r);
    Candidate cur;
    if (r == 0) {
      // start at the witness whose ratio is exactly m
      const Instance w = cross_polytope_witness(m);
      cur.gens = w.body.as_polytope().generators();
      cur.vecs = w.vectors.vectors();
    } else {
      const Instance inst = gen_instance(m, config.k, config.n,
                                         BodyKind::vpolytope,
                                         split_seed(restart_seed, 0));
      cur.gens = inst.body.as_polytope().generators();
      cur.vecs = inst.vectors.vectors();
    }
    double cur_ratio = try_ratio(cur, m);

    Rng rng(split_seed(restart_seed, 1));
    for (int step = 0; step < config.steps; ++step) {
      Candidate next = cur;
      for (Vector& g : next.gens) {
        for (int i = 0; i < m; ++i) g(i) += config.step_size * rng.next_normal();
      }
      for (Vector& v : next.vecs) {
        for (int i = 0; i < m; ++i) v(i) += config.step_size * rng.next_normal();
      }
      const double next_ratio = try_ratio(next, m);
      if (next_ratio > cur_ratio) {
        cur = std::move(next);
        cur_ratio = next_ratio;
      }
    }
    outcomes[r] = RestartOutcome{std::move(cur), cur_ratio};
  }

  int best_r = 0;
  for (int r = 1; r < config.restarts; ++r) {
    if (outcomes[r].ratio > outcomes[best_r].ratio) best_r = r;
  }
  const Candidate& best = outcomes[best_r].best;
  Instance inst{SymmetricBody::polytope(m, best.gens), VectorSet(m, best.vecs),
                std::nullopt};
  RatioReport report = ratio(inst.vectors, inst.body);
  if (report.ratio > report.bound) {
    throw SolverError(
        "search_max_ratio: found ratio above the proven bound; this "
        "indicates an implementation bug");
  }
  return SearchResult{std::move(inst), report, report.ratio / m};
}

}  // namespace discoef
