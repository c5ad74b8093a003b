#ifndef GASCHED_TASKGRAPH_HPP_
#define GASCHED_TASKGRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gasched {

/// Dense index of a task inside its graph (declaration order).
using TaskIndex = std::uint32_t;

/// Integer time units. The whole schedule path is integral.
using Time = std::int64_t;

struct Task {
   std::string id;
   Time processing_time = 1;

   friend bool operator==(const Task&, const Task&) = default;
};

struct Edge {
   TaskIndex pred = 0;
   TaskIndex succ = 0;

   friend bool operator==(const Edge&, const Edge&) = default;
};

/// Thrown for any malformed or invalid graph. `line()` is 0 when the
/// problem is not tied to a single input line (cycles, programmatic input).
class GraphError : public std::runtime_error {
 public:
   enum class Kind { Syntax, DuplicateTask, UnknownTask, Cycle, BadTime };

   GraphError(Kind kind, std::string message, std::size_t line = 0,
              std::vector<std::string> cycle = {});

   [[nodiscard]] Kind kind() const noexcept { return kind_; }
   [[nodiscard]] std::size_t line() const noexcept { return line_; }
   /// Task ids along one detected cycle (only for Kind::Cycle).
   [[nodiscard]] const std::vector<std::string>& cycle() const noexcept {
      return cycle_;
   }

 private:
   Kind kind_;
   std::size_t line_;
   std::vector<std::string> cycle_;
};

/// Thrown when a run or query parameter is out of its valid range.
class ConfigError : public std::invalid_argument {
 public:
   using std::invalid_argument::invalid_argument;
};

/// Immutable precedence-constrained task graph. Construction validates
/// every invariant (unique ids, known endpoints, times >= 1, acyclic) and
/// precomputes heights and adjacency, so a constructed graph is always valid.
class TaskGraph {
 public:
   TaskGraph(std::vector<Task> tasks,
             std::vector<std::pair<std::string, std::string>> edges);

   [[nodiscard]] std::size_t size() const noexcept { return tasks_.size(); }
   [[nodiscard]] const std::vector<Task>& tasks() const noexcept {
      return tasks_;
   }
   [[nodiscard]] const Task& task(TaskIndex t) const { return tasks_[t]; }
   [[nodiscard]] const std::vector<Edge>& edges() const noexcept {
      return edges_;
   }
   [[nodiscard]] const std::vector<TaskIndex>& preds(TaskIndex t) const {
      return preds_[t];
   }
   [[nodiscard]] const std::vector<TaskIndex>& succs(TaskIndex t) const {
      return succs_[t];
   }
   [[nodiscard]] Time time(TaskIndex t) const {
      return tasks_[t].processing_time;
   }
   [[nodiscard]] std::uint32_t height(TaskIndex t) const {
      return heights_[t];
   }
   [[nodiscard]] const std::vector<std::uint32_t>& heights() const noexcept {
      return heights_;
   }
   [[nodiscard]] std::uint32_t max_height() const noexcept {
      return max_height_;
   }
   [[nodiscard]] Time total_work() const noexcept { return total_work_; }

   /// Tasks grouped by height: levels()[h] lists every task of height h in
   /// index order.
   [[nodiscard]] const std::vector<std::vector<TaskIndex>>& levels()
        const noexcept {
      return levels_;
   }

   /// Throws std::out_of_range for an unknown id.
   [[nodiscard]] TaskIndex index_of(std::string_view id) const;
   [[nodiscard]] bool contains(std::string_view id) const;

   friend bool operator==(const TaskGraph& a, const TaskGraph& b) {
      return a.tasks_ == b.tasks_ && a.edges_ == b.edges_;
   }

 private:
   std::vector<Task> tasks_;
   std::vector<Edge> edges_;
   std::unordered_map<std::string, TaskIndex> index_;
   std::vector<std::vector<TaskIndex>> preds_;
   std::vector<std::vector<TaskIndex>> succs_;
   std::vector<std::uint32_t> heights_;
   std::vector<std::vector<TaskIndex>> levels_;
   std::uint32_t max_height_ = 0;
   Time total_work_ = 0;
};

/// task id -> height, for callers that work with ids.
using HeightMap = std::unordered_map<std::string, std::uint32_t>;

/// Parses the line-based graph format (`task <id> <time>`,
/// `edge <pred> <succ>`, `#` comments, blank lines).
[[nodiscard]] TaskGraph parse_graph(std::string_view text);

/// Canonical form: tasks in input order, then edges in input order.
[[nodiscard]] std::string serialize_graph(const TaskGraph& graph);

/// 0 for sources, 1 + max predecessor height otherwise.
[[nodiscard]] HeightMap compute_heights(const TaskGraph& graph);

struct LowerBounds {
   Time critical_path = 0;
   Time work_bound = 0;

   [[nodiscard]] Time max() const noexcept {
      return critical_path > work_bound ? critical_path : work_bound;
   }
};

/// Longest source-to-sink path and ceil(total work / m).
[[nodiscard]] LowerBounds lower_bounds(const TaskGraph& graph, int m);

/// Random DAG over tasks t0..t{n-1}; each pair (i, j), i < j, becomes an
/// edge with probability `edge_prob`. Times are uniform in [t_min, t_max].
[[nodiscard]] TaskGraph random_dag(std::size_t n, double edge_prob, Time t_min,
                                   Time t_max, std::uint64_t seed);

}  // namespace gasched

#endif  // GASCHED_TASKGRAPH_HPP_
