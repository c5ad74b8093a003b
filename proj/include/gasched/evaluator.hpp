#ifndef GASCHED_EVALUATOR_HPP_
#define GASCHED_EVALUATOR_HPP_

#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "gasched/genome.hpp"
#include "gasched/taskgraph.hpp"

namespace gasched {

/// Timetable of a decoded chromosome, indexed by TaskIndex.
struct ScheduleResult {
   std::vector<Time> start;
   std::vector<Time> finish;
   std::vector<std::uint32_t> processor;
   Time makespan = 0;
};

/// Event-driven list schedule: every processor runs its list in order, and a
/// task starts at the later of its processor becoming free and its last
/// predecessor finishing.
[[nodiscard]] ScheduleResult decode(const Chromosome& c, const TaskGraph& graph);

/// Makespan only; reuses caller-owned scratch buffers so that repeated calls
/// do not allocate.
class MakespanDecoder {
 public:
   explicit MakespanDecoder(const TaskGraph& graph);

   /// `c` must be valid for the graph. Fills `out` when non-null.
   Time run(const Chromosome& c, ScheduleResult* out = nullptr);
   [[nodiscard]] Time operator()(const Chromosome& c) { return run(c); }

 private:
   const TaskGraph* graph_;
   std::vector<Time> finish_;
   std::vector<std::uint32_t> waiting_;
   std::vector<std::uint32_t> proc_of_;
   std::vector<std::size_t> cursor_;
   std::vector<Time> proc_free_;
   std::vector<std::uint32_t> runnable_;
};

/// (total work + 1) - makespan.
[[nodiscard]] std::int64_t fitness_of(const ScheduleResult& result,
                                      const TaskGraph& graph);
[[nodiscard]] std::int64_t fitness_of_makespan(Time makespan,
                                               const TaskGraph& graph);

/// `task,processor,start,finish` rows sorted by (processor, start), with a
/// header line.
[[nodiscard]] std::string gantt_csv(const ScheduleResult& result,
                                    const TaskGraph& graph);

/// Fixed set of worker threads that run one job per round. `run` hands
/// every worker its index, then blocks until all of them have finished
/// (a full barrier; worker writes are visible to the caller afterwards).
class WorkerPool {
 public:
   explicit WorkerPool(std::size_t workers);
   ~WorkerPool();
   WorkerPool(const WorkerPool&) = delete;
   WorkerPool& operator=(const WorkerPool&) = delete;

   [[nodiscard]] std::size_t size() const noexcept { return threads_.size(); }
   void run(const std::function<void(std::size_t)>& job);

 private:
   void loop(std::size_t index);

   std::vector<std::thread> threads_;
   std::mutex mutex_;
   std::condition_variable start_cv_;
   std::condition_variable done_cv_;
   const std::function<void(std::size_t)>* job_ = nullptr;
   std::uint64_t round_ = 0;
   std::size_t pending_ = 0;
   bool stopping_ = false;
   std::exception_ptr error_;
};

/// Half-open index range [begin, end) of slice `k` when `count` items are
/// split into `slices` contiguous near-equal parts.
struct Slice {
   std::size_t begin = 0;
   std::size_t end = 0;
};
[[nodiscard]] Slice slice_of(std::size_t count, std::size_t slices,
                             std::size_t k) noexcept;

/// Sets fitness and makespan of every individual in `pop`. With a pool the
/// population is split into pool.size() contiguous slices, one per worker;
/// without one the map runs serially on the calling thread. Both paths give
/// identical values.
void evaluate_population(Population& pop, const TaskGraph& graph,
                         WorkerPool* pool);

/// Convenience form that spins up `workers` threads for this one call.
void evaluate_population(Population& pop, const TaskGraph& graph,
                         int workers);

}  // namespace gasched

#endif  // GASCHED_EVALUATOR_HPP_
