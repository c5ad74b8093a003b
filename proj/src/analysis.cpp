#include "gasched/analysis.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "gasched/evaluator.hpp"
#include "gasched/genome.hpp"

namespace gasched {

void ComplexityModel::validate() const {
   if (population < 1 || generations < 1 || workers < 1) {
      throw ConfigError("P, G and nP must be >= 1");
   }
   if (t_fitness < 0 || t_crossover < 0 || t_mutation < 0 ||
       communication < 0) {
      throw ConfigError("costs must be >= 0");
   }
   if (crossover_prob < 0.0 || mutation_prob < 0.0) {
      throw ConfigError("probabilities must be >= 0");
   }
}

SequentialCost sequential_cost(const ComplexityModel& model) {
   model.validate();
   const std::int64_t work =
        model.population * model.generations * model.t_fitness;
   const double operators =
        model.crossover_prob * static_cast<double>(model.t_crossover) +
        model.mutation_prob * static_cast<double>(model.t_mutation);
   return {static_cast<double>(work) * operators, work};
}

double parallel_cost(const ComplexityModel& model) {
   const auto work = static_cast<double>(sequential_cost(model).simplified);
   return work / static_cast<double>(model.workers) +
          static_cast<double>(model.communication);
}

SpeedupPrediction predicted_speedup(const ComplexityModel& model) {
   const auto work = static_cast<double>(sequential_cost(model).simplified);
   const double parallel = parallel_cost(model);
   SpeedupPrediction s;
   // A zero-work model has nothing to speed up.
   s.ratio = parallel > 0.0 ? work / parallel : 1.0;
   s.closed_form = static_cast<double>(model.workers - model.communication);
   return s;
}

CostOptimality cost_optimality(const ComplexityModel& model,
                               double threshold) {
   const std::int64_t work = sequential_cost(model).simplified;
   const std::int64_t overhead = model.communication * model.workers;
   return {work + overhead,
           static_cast<double>(overhead) <=
                threshold * static_cast<double>(work)};
}

namespace {

// Depth-first enumeration of chromosomes, level by level. Within a level
// tasks are appended to processors in non-decreasing processor order, which
// visits every chromosome exactly once. Start times are built incrementally
// (predecessors always live in lower levels); leaves are confirmed with the
// list-schedule decoder.
class Enumerator {
 public:
   Enumerator(const TaskGraph& graph, int m)
        : g_(graph),
          m_(static_cast<std::size_t>(m)),
          finish_(graph.size(), 0),
          tail_(graph.size(), 0),
          proc_free_(m_, 0) {
      chromo_.lists.resize(m_);
      // tail(t): longest path strictly after t.
      const auto& levels = g_.levels();
      for (std::size_t h = levels.size(); h-- > 0;) {
         for (TaskIndex t : levels[h]) {
            for (TaskIndex s : g_.succs(t)) {
               tail_[t] = std::max(tail_[t], g_.time(s) + tail_[s]);
            }
         }
      }
      const auto bounds = lower_bounds(g_, m);
      floor_bound_ = bounds.max();
      remaining_work_ = g_.total_work();
   }

   Time solve() {
      if (g_.size() == 0) {
         return 0;
      }
      best_ = std::numeric_limits<Time>::max();
      const auto& level0 = g_.levels()[0];
      dfs(0, 0, (1u << level0.size()) - 1, 0);
      return best_;
   }

 private:
   void dfs(std::size_t level, std::size_t floor, std::uint32_t unplaced,
            Time path_bound) {
      if (best_ == floor_bound_) {
         return;
      }
      const auto& levels = g_.levels();
      if (unplaced == 0) {
         if (level + 1 == levels.size()) {
            const Time makespan = decode(chromo_, g_).makespan;
            best_ = std::min(best_, makespan);
            return;
         }
         dfs(level + 1, 0, (1u << levels[level + 1].size()) - 1, path_bound);
         return;
      }

      Time busy = 0;
      for (Time f : proc_free_) {
         busy += f;
      }
      const auto mm = static_cast<Time>(m_);
      const Time work_bound = (busy + remaining_work_ + mm - 1) / mm;
      if (std::max({path_bound, work_bound, floor_bound_}) >= best_) {
         return;
      }

      const auto& tasks = levels[level];
      for (std::size_t p = floor; p < m_; ++p) {
         if (is_empty(p) && first_empty_from(floor) != p) {
            continue;  // interchangeable with an earlier empty processor
         }
         for (std::size_t k = 0; k < tasks.size(); ++k) {
            if ((unplaced & (1u << k)) == 0) {
               continue;
            }
            const TaskIndex t = tasks[k];
            Time start = proc_free_[p];
            for (TaskIndex u : g_.preds(t)) {
               start = std::max(start, finish_[u]);
            }
            const Time end = start + g_.time(t);
            const Time saved_free = proc_free_[p];
            finish_[t] = end;
            proc_free_[p] = end;
            remaining_work_ -= g_.time(t);
            chromo_.lists[p].push_back(t);

            dfs(level, p, unplaced & ~(1u << k),
                std::max(path_bound, end + tail_[t]));

            chromo_.lists[p].pop_back();
            remaining_work_ += g_.time(t);
            proc_free_[p] = saved_free;
         }
      }
   }

   [[nodiscard]] bool is_empty(std::size_t p) const {
      return chromo_.lists[p].empty();
   }
   [[nodiscard]] std::size_t first_empty_from(std::size_t from) const {
      for (std::size_t q = from; q < m_; ++q) {
         if (is_empty(q)) {
            return q;
         }
      }
      return m_;
   }

   const TaskGraph& g_;
   std::size_t m_;
   std::vector<Time> finish_;
   std::vector<Time> tail_;
   std::vector<Time> proc_free_;
   Chromosome chromo_;
   Time remaining_work_ = 0;
   Time floor_bound_ = 0;
   Time best_ = 0;
};

}  // namespace

Time exhaustive_optimal(const TaskGraph& graph, int m) {
   if (m < 1) {
      throw ConfigError("processor count must be >= 1");
   }
   if (graph.size() > kOracleMaxTasks || m > kOracleMaxProcessors) {
      throw ConfigError("instance exceeds the exhaustive oracle cap (" +
                        std::to_string(kOracleMaxTasks) + " tasks, " +
                        std::to_string(kOracleMaxProcessors) +
                        " processors): got " + std::to_string(graph.size()) +
                        " tasks, " + std::to_string(m) + " processors");
   }
   return Enumerator(graph, m).solve();
}

}  // namespace gasched
