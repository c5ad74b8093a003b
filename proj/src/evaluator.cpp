#include "gasched/evaluator.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace gasched {

MakespanDecoder::MakespanDecoder(const TaskGraph& graph)
     : graph_(&graph),
       finish_(graph.size()),
       waiting_(graph.size()),
       proc_of_(graph.size()) {}

Time MakespanDecoder::run(const Chromosome& c, ScheduleResult* out) {
   const TaskGraph& g = *graph_;
   const std::size_t n = g.size();
   const std::size_t m = c.processors();

   cursor_.assign(m, 0);
   proc_free_.assign(m, 0);
   runnable_.clear();
   for (std::size_t p = 0; p < m; ++p) {
      for (TaskIndex t : c.lists[p]) {
         proc_of_[t] = static_cast<std::uint32_t>(p);
      }
   }
   for (std::size_t t = 0; t < n; ++t) {
      waiting_[t] = static_cast<std::uint32_t>(g.preds(t).size());
   }
   auto head_ready = [&](std::size_t p) {
      return cursor_[p] < c.lists[p].size() &&
             waiting_[c.lists[p][cursor_[p]]] == 0;
   };
   for (std::size_t p = 0; p < m; ++p) {
      if (head_ready(p)) {
         runnable_.push_back(static_cast<std::uint32_t>(p));
      }
   }
   if (out != nullptr) {
      out->start.assign(n, 0);
      out->finish.assign(n, 0);
      out->processor.assign(n, 0);
   }

   // Start times depend only on list order and predecessor finishes, so the
   // order in which runnable processors are served does not change the
   // result.
   std::size_t scheduled = 0;
   Time makespan = 0;
   while (!runnable_.empty()) {
      const std::uint32_t p = runnable_.back();
      runnable_.pop_back();
      const TaskIndex t = c.lists[p][cursor_[p]];
      Time start = proc_free_[p];
      for (TaskIndex u : g.preds(t)) {
         start = std::max(start, finish_[u]);
      }
      const Time end = start + g.time(t);
      finish_[t] = end;
      proc_free_[p] = end;
      makespan = std::max(makespan, end);
      if (out != nullptr) {
         out->start[t] = start;
         out->finish[t] = end;
         out->processor[t] = p;
      }
      ++scheduled;
      for (TaskIndex s : g.succs(t)) {
         if (--waiting_[s] == 0) {
            const std::uint32_t q = proc_of_[s];
            if (q != p && c.lists[q][cursor_[q]] == s) {
               runnable_.push_back(q);
            }
         }
      }
      ++cursor_[p];
      if (head_ready(p)) {
         runnable_.push_back(p);
      }
   }
   if (scheduled != n) {
      // Unreachable for height-sorted chromosomes.
      throw std::logic_error("decode made no progress: chromosome deadlocks");
   }
   if (out != nullptr) {
      out->makespan = makespan;
   }
   return makespan;
}

ScheduleResult decode(const Chromosome& c, const TaskGraph& graph) {
   if (!is_valid(c, graph)) {
      throw std::invalid_argument("decode: chromosome is not valid for graph");
   }
   ScheduleResult result;
   MakespanDecoder decoder(graph);
   decoder.run(c, &result);
   return result;
}

std::int64_t fitness_of_makespan(Time makespan, const TaskGraph& graph) {
   return graph.total_work() + 1 - makespan;
}

std::int64_t fitness_of(const ScheduleResult& result, const TaskGraph& graph) {
   return fitness_of_makespan(result.makespan, graph);
}

std::string gantt_csv(const ScheduleResult& result, const TaskGraph& graph) {
   std::vector<TaskIndex> order(graph.size());
   for (TaskIndex t = 0; t < order.size(); ++t) {
      order[t] = t;
   }
   std::sort(order.begin(), order.end(), [&](TaskIndex a, TaskIndex b) {
      return std::tie(result.processor[a], result.start[a], a) <
             std::tie(result.processor[b], result.start[b], b);
   });
   std::string csv = "task,processor,start,finish\n";
   for (TaskIndex t : order) {
      csv += graph.task(t).id + "," + std::to_string(result.processor[t]) +
             "," + std::to_string(result.start[t]) + "," +
             std::to_string(result.finish[t]) + "\n";
   }
   return csv;
}

// --- worker pool -----------------------------------------------------------

WorkerPool::WorkerPool(std::size_t workers) {
   if (workers < 1) {
      throw ConfigError("worker count must be >= 1");
   }
   threads_.reserve(workers);
   for (std::size_t i = 0; i < workers; ++i) {
      threads_.emplace_back([this, i] { loop(i); });
   }
}

WorkerPool::~WorkerPool() {
   {
      std::lock_guard lock(mutex_);
      stopping_ = true;
   }
   start_cv_.notify_all();
   for (auto& t : threads_) {
      t.join();
   }
}

void WorkerPool::run(const std::function<void(std::size_t)>& job) {
   std::unique_lock lock(mutex_);
   job_ = &job;
   pending_ = threads_.size();
   error_ = nullptr;
   ++round_;
   start_cv_.notify_all();
   done_cv_.wait(lock, [this] { return pending_ == 0; });
   job_ = nullptr;
   if (error_) {
      std::rethrow_exception(std::exchange(error_, nullptr));
   }
}

void WorkerPool::loop(std::size_t index) {
   std::uint64_t seen = 0;
   for (;;) {
      const std::function<void(std::size_t)>* job = nullptr;
      {
         std::unique_lock lock(mutex_);
         start_cv_.wait(lock, [&] { return stopping_ || round_ != seen; });
         if (stopping_) {
            return;
         }
         seen = round_;
         job = job_;
      }
      std::exception_ptr failure;
      try {
         (*job)(index);
      } catch (...) {
         failure = std::current_exception();
      }
      {
         std::lock_guard lock(mutex_);
         if (failure && !error_) {
            error_ = failure;
         }
         if (--pending_ == 0) {
            done_cv_.notify_one();
         }
      }
   }
}

// --- population evaluation -------------------------------------------------

Slice slice_of(std::size_t count, std::size_t slices, std::size_t k) noexcept {
   return {count * k / slices, count * (k + 1) / slices};
}

namespace {

void evaluate_range(Population& pop, const TaskGraph& graph, Slice range) {
   MakespanDecoder decoder(graph);
   for (std::size_t i = range.begin; i < range.end; ++i) {
      Individual& ind = pop[i];
      ind.makespan = decoder(ind.chromosome);
      ind.fitness = fitness_of_makespan(ind.makespan, graph);
   }
}

}  // namespace

void evaluate_population(Population& pop, const TaskGraph& graph,
                         WorkerPool* pool) {
   if (pool == nullptr) {
      evaluate_range(pop, graph, {0, pop.size()});
      return;
   }
   const std::size_t workers = pool->size();
   pool->run([&](std::size_t k) {
      evaluate_range(pop, graph, slice_of(pop.size(), workers, k));
   });
}

void evaluate_population(Population& pop, const TaskGraph& graph,
                         int workers) {
   if (workers < 1) {
      throw ConfigError("worker count must be >= 1, got " +
                        std::to_string(workers));
   }
   if (workers == 1) {
      evaluate_population(pop, graph, nullptr);
      return;
   }
   WorkerPool pool(static_cast<std::size_t>(workers));
   evaluate_population(pop, graph, &pool);
}

}  // namespace gasched
