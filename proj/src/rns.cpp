#include "enumcc/rns.hpp"

#include <deque>

#include "enumcc/errors.hpp"

namespace enumcc {

RnsResult rns_into(const SignedGraph& g, const Membership& p, int r_max, SolutionSet& known,
                   const RnsOptions& options) {
  if (r_max < 1) throw InputError("r_max must be at least 1");
  if (p.size() != g.n()) throw InputError("membership length does not match graph order");
  RnsResult result;
  result.discovered.set_istar(imbalance(g, p));
  result.stats.found_per_level.assign(r_max, 0);
  known.insert(p);
  result.discovered.insert(p);
  std::deque<Membership> queue{p};
  while (!queue.empty()) {
    Membership current = std::move(queue.front());
    queue.pop_front();
    for (int r = 1; r <= r_max && r < g.n(); ++r) {
      if (options.stop && options.stop(known)) {
        result.stopped = true;
        return result;
      }
      ConsResult step = cons(g, current, r, options.cons);
      result.stats.cons_calls++;
      result.stats.cons += step.stats;
      for (auto& q : step.neighbors) {
        if (!known.insert(q)) {
          result.stats.duplicates++;
          continue;
        }
        result.stats.found_per_level[r - 1]++;
        result.discovered.insert(q);
        queue.push_back(std::move(q));
      }
    }
  }
  return result;
}

RnsResult rns(const SignedGraph& g, const Membership& p, int r_max, const RnsOptions& options) {
  SolutionSet known(imbalance(g, p));
  return rns_into(g, p, r_max, known, options);
}

}  // namespace enumcc
