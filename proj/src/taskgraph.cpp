#include "gasched/taskgraph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <queue>
#include <random>
#include <sstream>

namespace gasched {

GraphError::GraphError(Kind kind, std::string message, std::size_t line,
                       std::vector<std::string> cycle)
     : std::runtime_error(line == 0 ? message
                                    : "line " + std::to_string(line) + ": " +
                                           message),
       kind_(kind),
       line_(line),
       cycle_(std::move(cycle)) {}

namespace {

// Walks predecessor links among tasks that Kahn's algorithm could not
// release. Every such task has an unreleased predecessor, so the walk must
// revisit a task; the revisited suffix is a cycle.
std::vector<std::string> extract_cycle(
     const std::vector<Task>& tasks,
     const std::vector<std::vector<TaskIndex>>& preds,
     const std::vector<std::size_t>& indegree) {
   TaskIndex start = 0;
   while (indegree[start] == 0) {
      ++start;
   }
   std::vector<std::size_t> seen_at(tasks.size(), SIZE_MAX);
   std::vector<TaskIndex> walk;
   TaskIndex cur = start;
   while (seen_at[cur] == SIZE_MAX) {
      seen_at[cur] = walk.size();
      walk.push_back(cur);
      for (TaskIndex p : preds[cur]) {
         if (indegree[p] != 0) {
            cur = p;
            break;
         }
      }
   }
   // walk[seen_at[cur]..] follows predecessor links; report it forwards.
   std::vector<std::string> cycle;
   for (std::size_t i = walk.size(); i-- > seen_at[cur];) {
      cycle.push_back(tasks[walk[i]].id);
   }
   return cycle;
}

}  // namespace

TaskGraph::TaskGraph(std::vector<Task> tasks,
                     std::vector<std::pair<std::string, std::string>> edges)
     : tasks_(std::move(tasks)) {
   const std::size_t n = tasks_.size();
   index_.reserve(n);
   for (std::size_t i = 0; i < n; ++i) {
      const Task& t = tasks_[i];
      if (t.id.empty()) {
         throw GraphError(GraphError::Kind::Syntax, "empty task id");
      }
      if (t.processing_time < 1) {
         throw GraphError(GraphError::Kind::BadTime,
                          "task '" + t.id + "' has processing time " +
                               std::to_string(t.processing_time) +
                               " (must be >= 1)");
      }
      if (!index_.emplace(t.id, static_cast<TaskIndex>(i)).second) {
         throw GraphError(GraphError::Kind::DuplicateTask,
                          "duplicate task id '" + t.id + "'");
      }
      total_work_ += t.processing_time;
   }

   preds_.resize(n);
   succs_.resize(n);
   edges_.reserve(edges.size());
   for (const auto& [from, to] : edges) {
      auto u = index_.find(from);
      auto v = index_.find(to);
      if (u == index_.end() || v == index_.end()) {
         const std::string& missing = u == index_.end() ? from : to;
         throw GraphError(GraphError::Kind::UnknownTask,
                          "edge refers to unknown task '" + missing + "'");
      }
      edges_.push_back({u->second, v->second});
      succs_[u->second].push_back(v->second);
      preds_[v->second].push_back(u->second);
   }

   // Kahn's algorithm doubles as the acyclicity check and the height pass.
   std::vector<std::size_t> indegree(n);
   for (std::size_t i = 0; i < n; ++i) {
      indegree[i] = preds_[i].size();
   }
   heights_.assign(n, 0);
   std::queue<TaskIndex> ready;
   for (std::size_t i = 0; i < n; ++i) {
      if (indegree[i] == 0) {
         ready.push(static_cast<TaskIndex>(i));
      }
   }
   std::size_t released = 0;
   while (!ready.empty()) {
      TaskIndex u = ready.front();
      ready.pop();
      ++released;
      for (TaskIndex v : succs_[u]) {
         heights_[v] = std::max(heights_[v], heights_[u] + 1);
         if (--indegree[v] == 0) {
            ready.push(v);
         }
      }
   }
   if (released != n) {
      auto cycle = extract_cycle(tasks_, preds_, indegree);
      std::string names;
      for (const auto& id : cycle) {
         names += (names.empty() ? "" : " -> ") + id;
      }
      throw GraphError(GraphError::Kind::Cycle, "cycle detected: " + names, 0,
                       std::move(cycle));
   }

   for (std::uint32_t h : heights_) {
      max_height_ = std::max(max_height_, h);
   }
   levels_.resize(n == 0 ? 0 : max_height_ + 1);
   for (std::size_t i = 0; i < n; ++i) {
      levels_[heights_[i]].push_back(static_cast<TaskIndex>(i));
   }
}

TaskIndex TaskGraph::index_of(std::string_view id) const {
   auto it = index_.find(std::string(id));
   if (it == index_.end()) {
      throw std::out_of_range("unknown task id '" + std::string(id) + "'");
   }
   return it->second;
}

bool TaskGraph::contains(std::string_view id) const {
   return index_.contains(std::string(id));
}

TaskGraph parse_graph(std::string_view text) {
   std::vector<Task> tasks;
   std::vector<std::size_t> task_lines;
   std::unordered_map<std::string, std::size_t> declared;
   struct PendingEdge {
      std::string from, to;
      std::size_t line;
   };
   std::vector<PendingEdge> edges;

   std::istringstream in{std::string(text)};
   std::string raw;
   std::size_t lineno = 0;
   while (std::getline(in, raw)) {
      ++lineno;
      if (!raw.empty() && raw.back() == '\r') {
         raw.pop_back();
      }
      std::istringstream fields(raw);
      std::vector<std::string> tok;
      for (std::string w; fields >> w;) {
         tok.push_back(std::move(w));
      }
      if (tok.empty() || tok.front().starts_with('#')) {
         continue;
      }
      const std::string& kw = tok.front();
      if (kw == "task") {
         if (tok.size() != 3) {
            throw GraphError(GraphError::Kind::Syntax,
                             "expected 'task <id> <time>'", lineno);
         }
         Time value = 0;
         const std::string& num = tok[2];
         auto [end, ec] =
              std::from_chars(num.data(), num.data() + num.size(), value);
         if (ec != std::errc{} || end != num.data() + num.size()) {
            throw GraphError(GraphError::Kind::Syntax,
                             "invalid processing time '" + num + "'", lineno);
         }
         if (value < 1) {
            throw GraphError(GraphError::Kind::BadTime,
                             "processing time must be >= 1, got " + num,
                             lineno);
         }
         if (!declared.emplace(tok[1], lineno).second) {
            throw GraphError(GraphError::Kind::DuplicateTask,
                             "duplicate task id '" + tok[1] + "'", lineno);
         }
         tasks.push_back({tok[1], value});
         task_lines.push_back(lineno);
      } else if (kw == "edge") {
         if (tok.size() != 3) {
            throw GraphError(GraphError::Kind::Syntax,
                             "expected 'edge <pred> <succ>'", lineno);
         }
         edges.push_back({tok[1], tok[2], lineno});
      } else {
         throw GraphError(GraphError::Kind::Syntax,
                          "unknown declaration '" + kw + "'", lineno);
      }
   }

   std::vector<std::pair<std::string, std::string>> pairs;
   pairs.reserve(edges.size());
   for (auto& e : edges) {
      for (const std::string* end : {&e.from, &e.to}) {
         if (!declared.contains(*end)) {
            throw GraphError(GraphError::Kind::UnknownTask,
                             "edge refers to unknown task '" + *end + "'",
                             e.line);
         }
      }
      pairs.emplace_back(std::move(e.from), std::move(e.to));
   }
   return TaskGraph(std::move(tasks), std::move(pairs));
}

std::string serialize_graph(const TaskGraph& graph) {
   std::string out;
   for (const Task& t : graph.tasks()) {
      out += "task " + t.id + " " + std::to_string(t.processing_time) + "\n";
   }
   for (const Edge& e : graph.edges()) {
      out += "edge " + graph.task(e.pred).id + " " + graph.task(e.succ).id +
             "\n";
   }
   return out;
}

HeightMap compute_heights(const TaskGraph& graph) {
   HeightMap heights;
   heights.reserve(graph.size());
   for (TaskIndex t = 0; t < graph.size(); ++t) {
      heights.emplace(graph.task(t).id, graph.height(t));
   }
   return heights;
}

LowerBounds lower_bounds(const TaskGraph& graph, int m) {
   if (m < 1) {
      throw ConfigError("processor count must be >= 1, got " +
                        std::to_string(m));
   }
   // Longest path ending at each task, visited level by level (a
   // topological order since every edge strictly increases height).
   std::vector<Time> finish(graph.size(), 0);
   Time critical = 0;
   for (const auto& level : graph.levels()) {
      for (TaskIndex t : level) {
         Time ready = 0;
         for (TaskIndex p : graph.preds(t)) {
            ready = std::max(ready, finish[p]);
         }
         finish[t] = ready + graph.time(t);
         critical = std::max(critical, finish[t]);
      }
   }
   const Time work = graph.total_work();
   return {critical, (work + m - 1) / m};
}

TaskGraph random_dag(std::size_t n, double edge_prob, Time t_min, Time t_max,
                     std::uint64_t seed) {
   if (n < 1) {
      throw ConfigError("task count must be >= 1");
   }
   if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
      throw ConfigError("edge probability must lie in [0, 1]");
   }
   if (t_min < 1 || t_min > t_max) {
      throw ConfigError("time bounds must satisfy 1 <= t_min <= t_max");
   }
   std::mt19937_64 rng(seed);
   std::uniform_int_distribution<Time> time_dist(t_min, t_max);
   std::bernoulli_distribution coin(edge_prob);

   std::vector<Task> tasks;
   tasks.reserve(n);
   for (std::size_t i = 0; i < n; ++i) {
      tasks.push_back({"t" + std::to_string(i), time_dist(rng)});
   }
   std::vector<std::pair<std::string, std::string>> edges;
   for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
         if (coin(rng)) {
            edges.emplace_back(tasks[i].id, tasks[j].id);
         }
      }
   }
   return TaskGraph(std::move(tasks), std::move(edges));
}

}  // namespace gasched
