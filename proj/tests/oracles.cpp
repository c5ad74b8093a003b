#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>

namespace gasched::oracle {

std::vector<std::uint32_t> heights(const TaskGraph& g) {
   std::vector<std::uint32_t> h(g.size(), 0);
   for (bool changed = true; changed;) {
      changed = false;
      for (const Edge& e : g.edges()) {
         if (h[e.succ] < h[e.pred] + 1) {
            h[e.succ] = h[e.pred] + 1;
            changed = true;
         }
      }
   }
   return h;
}

Time critical_path(const TaskGraph& g) {
   std::function<Time(TaskIndex)> longest_from = [&](TaskIndex t) -> Time {
      Time best = 0;
      for (const Edge& e : g.edges()) {
         if (e.pred == t) {
            best = std::max(best, longest_from(e.succ));
         }
      }
      return g.task(t).processing_time + best;
   };
   Time best = 0;
   for (TaskIndex t = 0; t < g.size(); ++t) {
      best = std::max(best, longest_from(t));
   }
   return best;
}

ScheduleResult schedule(const Chromosome& c, const TaskGraph& g) {
   const std::size_t n = g.size();
   ScheduleResult r;
   r.start.assign(n, 0);
   r.finish.assign(n, 0);
   r.processor.assign(n, 0);
   for (std::size_t p = 0; p < c.lists.size(); ++p) {
      for (TaskIndex t : c.lists[p]) {
         r.processor[t] = static_cast<std::uint32_t>(p);
      }
   }
   for (TaskIndex t = 0; t < n; ++t) {
      r.finish[t] = g.task(t).processing_time;
   }
   for (bool changed = true; changed;) {
      changed = false;
      auto raise = [&](TaskIndex t, Time at) {
         if (r.start[t] < at) {
            r.start[t] = at;
            r.finish[t] = at + g.task(t).processing_time;
            changed = true;
         }
      };
      for (const Edge& e : g.edges()) {
         raise(e.succ, r.finish[e.pred]);
      }
      for (const auto& list : c.lists) {
         for (std::size_t i = 1; i < list.size(); ++i) {
            raise(list[i], r.finish[list[i - 1]]);
         }
      }
   }
   r.makespan = 0;
   for (Time f : r.finish) {
      r.makespan = std::max(r.makespan, f);
   }
   return r;
}

std::string chromosome_problem(const Chromosome& c, const TaskGraph& g) {
   const auto h = heights(g);
   std::vector<int> count(g.size(), 0);
   for (const auto& list : c.lists) {
      for (std::size_t i = 0; i < list.size(); ++i) {
         if (list[i] >= g.size()) {
            return "task index out of range";
         }
         ++count[list[i]];
         if (i > 0 && h[list[i - 1]] > h[list[i]]) {
            return "list not height-sorted at task " + g.task(list[i]).id;
         }
      }
   }
   for (TaskIndex t = 0; t < g.size(); ++t) {
      if (count[t] != 1) {
         return "task " + g.task(t).id + " appears " +
                std::to_string(count[t]) + " times";
      }
   }
   return {};
}

std::string schedule_problem(const ScheduleResult& r, const Chromosome& c,
                             const TaskGraph& g) {
   Time latest = 0;
   for (TaskIndex t = 0; t < g.size(); ++t) {
      if (r.finish[t] != r.start[t] + g.task(t).processing_time) {
         return "finish != start + time for " + g.task(t).id;
      }
      if (r.start[t] < 0) {
         return "negative start for " + g.task(t).id;
      }
      latest = std::max(latest, r.finish[t]);
   }
   for (const Edge& e : g.edges()) {
      if (r.start[e.succ] < r.finish[e.pred]) {
         return "precedence violated: " + g.task(e.pred).id + " -> " +
                g.task(e.succ).id;
      }
   }
   for (std::size_t p = 0; p < c.lists.size(); ++p) {
      const auto& list = c.lists[p];
      for (std::size_t i = 0; i < list.size(); ++i) {
         if (r.processor[list[i]] != p) {
            return "wrong processor for " + g.task(list[i]).id;
         }
         if (i > 0 && r.start[list[i]] < r.finish[list[i - 1]]) {
            return "overlap on processor " + std::to_string(p);
         }
      }
   }
   if (r.makespan != latest) {
      return "makespan is not the latest finish";
   }
   return {};
}

Time brute_force_optimal(const TaskGraph& g, int m) {
   const std::size_t n = g.size();
   const auto h = heights(g);
   Time best = std::numeric_limits<Time>::max();
   std::vector<int> assign(n, 0);
   for (;;) {
      Chromosome c;
      c.lists.resize(static_cast<std::size_t>(m));
      for (TaskIndex t = 0; t < n; ++t) {
         c.lists[static_cast<std::size_t>(assign[t])].push_back(t);
      }
      // Every permutation of every list, keeping only height-sorted ones.
      std::function<void(std::size_t)> permute = [&](std::size_t p) {
         if (p == c.lists.size()) {
            best = std::min(best, schedule(c, g).makespan);
            return;
         }
         auto& list = c.lists[p];
         std::sort(list.begin(), list.end());
         do {
            bool sorted = true;
            for (std::size_t i = 1; i < list.size(); ++i) {
               sorted = sorted && h[list[i - 1]] <= h[list[i]];
            }
            if (sorted) {
               permute(p + 1);
            }
         } while (std::next_permutation(list.begin(), list.end()));
      };
      permute(0);

      std::size_t k = 0;
      while (k < n && ++assign[k] == m) {
         assign[k++] = 0;
      }
      if (k == n) {
         break;
      }
   }
   return n == 0 ? 0 : best;
}

Chromosome random_chromosome(const TaskGraph& g, int m, std::uint64_t seed) {
   std::mt19937_64 rng(seed);
   const auto h = heights(g);
   std::vector<TaskIndex> order(g.size());
   for (TaskIndex t = 0; t < g.size(); ++t) {
      order[t] = t;
   }
   std::shuffle(order.begin(), order.end(), rng);
   std::stable_sort(order.begin(), order.end(),
                    [&](TaskIndex a, TaskIndex b) { return h[a] < h[b]; });
   Chromosome c;
   c.lists.resize(static_cast<std::size_t>(m));
   std::uniform_int_distribution<int> pick(0, m - 1);
   for (TaskIndex t : order) {
      c.lists[static_cast<std::size_t>(pick(rng))].push_back(t);
   }
   return c;
}

}  // namespace gasched::oracle
