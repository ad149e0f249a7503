#pragma once

// Exhaustive and randomized sweeps comparing the closed-form counts in
// cascade_shadow.hpp against brute-force shadows and shades.

#include <random>
#include <string>
#include <vector>

#include "sperner/cascade_shadow.hpp"
#include "sperner/check_report.hpp"
#include "sperner/parallel.hpp"

namespace sperner {

namespace detail {

struct LevelJob {
  int n, k;
};

inline std::vector<LevelJob> level_jobs(int n_max) {
  std::vector<LevelJob> jobs;
  for (int n = 1; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k) jobs.push_back({n, k});
  return jobs;
}

inline std::string nkm(int n, int k, Int m) {
  return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ", m=" + std::to_string(m) + ")";
}

template <class PerLevel>
CheckReport sweep_levels(std::string id, std::string claim, int n_max, int workers, PerLevel &&per_level) {
  const auto jobs = level_jobs(n_max);
  std::vector<CheckReport> parts(jobs.size());
  parallel_chunks(jobs.size(), jobs.size(), workers, [&](std::size_t c, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) per_level(jobs[i].n, jobs[i].k, parts[c]);
  });
  CheckReport total{std::move(id), std::move(claim)};
  for (const auto &p : parts) total.merge(p);
  return total;
}

}  // namespace detail

/// kkt_shadow_bound(m,k) == |Delta F_{n,k}(m)| and
/// shade_of_last_bound(m,n,k) == |Nabla L_{n,k}(m)| == |Delta F_{n,n-k}(m)|.
inline CheckReport kkt_oracle_sweep(int n_max, int workers = 1) {
  return detail::sweep_levels(
      "kkt", "closed-form shadow/shade counts of segments equal brute force", n_max, workers,
      [](int n, int k, CheckReport &rep) {
        const GroundSize g(n);
        const Int level = binomial(n, k);
        for (Int m = 1; m <= level; ++m) {
          if (k >= 1) {
            const Int brute = static_cast<Int>(shadow(first_segment(g, k, m)).size());
            rep.record(kkt_shadow_bound(m, k) == brute, detail::nkm(n, k, m) + " shadow of F");
          }
          if (k < n) {
            const Int brute = static_cast<Int>(shade(last_segment(g, k, m)).size());
            rep.record(shade_of_last_bound(m, g, k) == brute, detail::nkm(n, k, m) + " shade of L");
            if (n - k >= 1) {
              // Duality: shadow of F_{n,n-k}(m) against shade of L_{n,k}(m), both brute force.
              const Int dual = static_cast<Int>(shadow(first_segment(g, n - k, m)).size());
              rep.record(dual == brute, detail::nkm(n, k, m) + " duality");
            }
          }
        }
      });
}

/// Random k-uniform families: |Delta f| >= kkt bound and |Nabla f| >= |Nabla L(|f|)|.
inline CheckReport kkt_random_sweep(int n_max, int trials, std::uint64_t seed) {
  CheckReport rep{"kkt-random", "random families respect the segment lower bounds"};
  std::mt19937_64 rng(seed);
  for (int n = 1; n <= n_max; ++n) {
    const GroundSize g(n);
    for (int k = 0; k <= n; ++k) {
      const Family levelk = full_level(g, k);
      for (int t = 0; t < trials; ++t) {
        std::vector<SetMask> pick;
        std::bernoulli_distribution keep(std::uniform_real_distribution<double>(0.02, 0.98)(rng));
        for (SetMask x : levelk)
          if (keep(rng)) pick.push_back(x);
        if (pick.empty()) pick.push_back(levelk[rng() % levelk.size()]);
        const Family f(g, std::move(pick));
        const Int m = static_cast<Int>(f.size());
        const std::string tup = detail::nkm(n, k, m) + " trial " + std::to_string(t);
        if (k >= 1) rep.record(static_cast<Int>(shadow(f).size()) >= kkt_shadow_bound(m, k), tup + " shadow");
        if (k < n)
          rep.record(shade(f).size() >= shade(last_segment(g, k, m)).size(), tup + " shade");
      }
    }
  }
  return rep;
}

/// Counting bounds hold on every initial and final segment, with equality
/// exactly for the empty family and the full level.
inline CheckReport lemma_1_9_segment_sweep(int n_max, int workers = 1) {
  return detail::sweep_levels(
      "1.9", "local shade/shadow bounds with equality iff empty or full level", n_max, workers,
      [](int n, int k, CheckReport &rep) {
        const GroundSize g(n);
        const Int level = binomial(n, k);
        for (Int m = 0; m <= level; ++m) {
          const bool trivial = m == 0 || m == level;
          for (const Family &f : {first_segment(g, k, m), last_segment(g, k, m)}) {
            if (k < n) {
              const Rational bound = local_shade_bound(m, g, k);
              const Rational actual(m == 0 ? 0 : static_cast<Int>(shade(f).size()));
              rep.record(actual >= bound && ((actual == bound) == trivial), detail::nkm(n, k, m) + " shade");
            }
            if (k > 0) {
              const Rational bound = local_shadow_bound(m, g, k);
              const Rational actual(m == 0 ? 0 : static_cast<Int>(shadow(f).size()));
              rep.record(actual >= bound && ((actual == bound) == trivial), detail::nkm(n, k, m) + " shadow");
            }
          }
        }
      });
}

/// Random non-segment families: counts equality cases of the local bounds that
/// are neither empty nor full. Findings are notes; nothing is asserted.
inline CheckReport lemma_1_9_random_search(int n_max, int trials, std::uint64_t seed) {
  CheckReport rep{"1.9-random", "search for equality in the local bounds on other families"};
  std::mt19937_64 rng(seed);
  Int hits = 0;
  for (int n = 2; n <= n_max; ++n) {
    const GroundSize g(n);
    for (int k = 1; k < n; ++k) {
      const Family levelk = full_level(g, k);
      for (int t = 0; t < trials; ++t) {
        std::vector<SetMask> pick;
        for (SetMask x : levelk)
          if (rng() & 1) pick.push_back(x);
        if (pick.empty() || pick.size() == levelk.size()) continue;
        const Family f(g, std::move(pick));
        ++rep.instances;
        const Int m = static_cast<Int>(f.size());
        if (Rational(static_cast<Int>(shade(f).size())) == local_shade_bound(m, g, k) ||
            Rational(static_cast<Int>(shadow(f).size())) == local_shadow_bound(m, g, k)) {
          ++hits;
          if (rep.notes.size() < 10) rep.notes.push_back("equality at " + detail::nkm(n, k, m) + ": " + format_family(f));
        }
      }
    }
  }
  rep.notes.push_back("equality cases found: " + std::to_string(hits));
  return rep;
}

/// For every window C of m consecutive k-sets:
/// |Delta_N C| >= |Delta_N L_{n,k}(m)| and |Nabla_N C| >= |Nabla_N F_{n,k}(m)|.
inline CheckReport new_shadow_window_sweep(int n_max, int workers = 1) {
  return detail::sweep_levels(
      "1.14", "new-shadow of any window >= that of the last segment; dual for new-shade", n_max, workers,
      [](int n, int k, CheckReport &rep) {
        const GroundSize g(n);
        const Int level = binomial(n, k);
        for (Int m = 0; m <= level; ++m) {
          const Int last_ns = k >= 1 ? static_cast<Int>(new_shadow(last_segment(g, k, m)).size()) : 0;
          const Int first_nsh = k < n ? static_cast<Int>(new_shade(first_segment(g, k, m)).size()) : 0;
          for (Int start = 0; start + m <= level; ++start) {
            const Family w = segment(g, k, start, m);
            const std::string tup = detail::nkm(n, k, m) + " start=" + std::to_string(start);
            if (k >= 1) rep.record(static_cast<Int>(new_shadow(w).size()) >= last_ns, tup + " new-shadow");
            if (k < n) rep.record(static_cast<Int>(new_shade(w).size()) >= first_nsh, tup + " new-shade");
          }
        }
      });
}

}  // namespace sperner
