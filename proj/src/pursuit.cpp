#include "pursuit.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>

namespace copsrobber {

void StrategyReport::falsified(std::string what) {
  bump("falsifications");
  if (falsifications.size() < 20) falsifications.push_back(std::move(what));
}

namespace detail {

namespace {

bool contains(const std::vector<Vertex>& v, Vertex x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

Arena::Arena(const Graph& g, std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  local_.assign(g.order(), -1);
  for (std::size_t i = 0; i < vertices_.size(); ++i) local_[vertices_[i]] = static_cast<int>(i);
  local_graph_ = g.induced(vertices_);
  dist_ = all_distances(local_graph_);
}

Arena Arena::whole(const Graph& g) {
  std::vector<Vertex> all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  return Arena(g, std::move(all));
}

std::vector<Vertex> Arena::to_global(const std::vector<Vertex>& local_ids) const {
  std::vector<Vertex> out;
  out.reserve(local_ids.size());
  for (Vertex v : local_ids) out.push_back(vertices_[v]);
  return out;
}

std::vector<Vertex> Arena::path(Vertex u, Vertex v) const {
  return to_global(shortest_path(dist_, local_graph_, local_[u], local_[v]));
}

std::vector<Vertex> Arena::component_without(Vertex start, const std::vector<Vertex>& removed) const {
  std::vector<bool> mask(vertices_.size(), false);
  for (Vertex v : removed)
    if (has(v)) mask[local_[v]] = true;
  auto comp = to_global(component_avoiding(local_graph_, local_[start], mask));
  std::sort(comp.begin(), comp.end());
  return comp;
}

Vertex step_toward(const Context& ctx, Vertex from, Vertex to) {
  if (from == to || ctx.dist[from][to] == kUnreachable) return from;
  for (Vertex y : ctx.g.neighbors(from))
    if (ctx.dist[y][to] == ctx.dist[from][to] - 1) return y;
  return from;
}

bool capturable(const Context& ctx) {
  for (Vertex c : ctx.cops)
    if (ctx.dist[c][ctx.robber] <= 1) return true;
  return false;
}

void Stationary::decide(const Context& ctx, std::vector<Vertex>& next) {
  for (std::size_t i = 0; i < cops_.size(); ++i) next[cops_[i]] = step_toward(ctx, ctx.cops[cops_[i]], targets_[i]);
}

bool Stationary::arrived(const Context& ctx) const {
  for (std::size_t i = 0; i < cops_.size(); ++i)
    if (ctx.cops[cops_[i]] != targets_[i]) return false;
  return true;
}

void ParkThen::decide(const Context& ctx, std::vector<Vertex>& next) {
  if (!child_ && park_.arrived(ctx)) child_ = factory_(ctx);
  park_.decide(ctx, next);
  if (child_) child_->decide(ctx, next);
}

LeadPursuit::LeadPursuit(Arena arena, std::vector<int> cops, int spacing, int stage_bound, bool flag_stage_cap)
    : arena_(std::move(arena)),
      cops_(std::move(cops)),
      spacing_(spacing),
      stage_bound_(stage_bound),
      flag_stage_cap_(flag_stage_cap) {}

void LeadPursuit::decide(const Context& ctx, std::vector<Vertex>& next) {
  if (!arena_.has(ctx.robber) || cops_.empty()) return;
  const Vertex gather = arena_.vertices().front();
  if (!started_) {
    bool gathered = std::all_of(cops_.begin(), cops_.end(), [&](int c) { return ctx.cops[c] == gather; });
    if (!gathered) {
      for (int c : cops_) next[c] = step_toward(ctx, ctx.cops[c], gather);
      return;
    }
    started_ = true;
    trail_.assign(spacing_ * (cops_.size() - 1) + 1, gather);
    stage_distance_ = -1;
  }

  const Vertex lead = ctx.cops[cops_[0]];
  const Vertex robber = ctx.robber;
  if (stage_distance_ >= 0 && (index_ >= walk_.size() || walk_[index_] != lead)) {
    ctx.report.falsified("lead cop left its walk");
    stage_distance_ = -1;
  }
  const int d = arena_.dist(lead, robber);
  if (stage_distance_ >= 0 && d > stage_distance_) ctx.report.falsified("lead distance increased within a stage");
  if (stage_distance_ < 0 || d < stage_distance_) {
    walk_ = arena_.path(lead, robber);
    index_ = 0;
    stage_distance_ = d;
    stage_moves_ = 0;
    last_robber_ = robber;
    ctx.report.bump("stages");
  } else {
    if (robber != last_robber_) {
      walk_.push_back(robber);
      last_robber_ = robber;
    }
    const long long n = ctx.g.order();
    if (flag_stage_cap_ && stage_moves_ == 4 * n * n) ctx.report.falsified("stage exceeded 4n^2 moves");
  }
  ctx.report.counters["longest stage"] = std::max(ctx.report.counters["longest stage"], stage_moves_);

  int near = d;
  for (int c : cops_) near = std::min(near, arena_.dist(ctx.cops[c], robber));
  if (near != near_distance_) {
    near_distance_ = near;
    near_moves_ = 0;
    near_flagged_ = false;
  } else if (stage_bound_ > 0 && !near_flagged_ && near >= 2 && near_moves_ >= stage_bound_ - near - 1) {
    ctx.report.falsified("nearest cop stayed at distance " + std::to_string(near) + " for " +
                         std::to_string(near_moves_) + " lead moves");
    near_flagged_ = true;
  }
  if (d == 0) return;
  ++near_moves_;

  const Vertex step = walk_[index_ + 1];
  ++index_;
  ++stage_moves_;
  trail_.push_back(step);
  trail_.erase(trail_.begin());
  next[cops_[0]] = step;
  for (std::size_t j = 1; j < cops_.size(); ++j) next[cops_[j]] = trail_[trail_.size() - 1 - spacing_ * j];
}

std::vector<Vertex> Job::endpoints() const {
  switch (kind) {
    case Kind::kSit: return {sit};
    case Kind::kGuard: return {path.front(), path.back()};
    case Kind::kIdle: break;
  }
  return {};
}

std::vector<Vertex> Job::covered() const {
  switch (kind) {
    case Kind::kSit: return {sit};
    case Kind::kGuard: return path;
    case Kind::kIdle: break;
  }
  return {};
}

Vertex guard_step(const Context& ctx, const Arena& arena, Job& job, Vertex cop) {
  if (!job.approach.empty()) {
    Vertex v = job.approach.front();
    job.approach.erase(job.approach.begin());
    return v;
  }
  if (job.kind == Job::Kind::kSit) {
    Vertex v = step_toward(ctx, cop, job.sit);
    job.established = v == job.sit;
    return v;
  }
  if (job.kind == Job::Kind::kIdle) return cop;
  const auto& p = job.path;
  const int last = static_cast<int>(p.size()) - 1;
  const int target = std::min(arena.dist(ctx.robber, p.front()), last);
  auto it = std::find(p.begin(), p.end(), cop);
  if (it == p.end()) return step_toward(ctx, cop, p.front());
  const int at = static_cast<int>(it - p.begin());
  if (std::abs(at - target) <= 1) {
    job.established = true;
    return p[target];
  }
  return p[at + (target > at ? 1 : -1)];
}

TreeSweep::TreeSweep(Arena arena, std::vector<int> cops, TreeDecomposition d)
    : arena_(std::move(arena)), cops_(std::move(cops)), d_(std::move(d)) {}

namespace {

Job guard_job(const Arena& arena, Vertex a, Vertex b) {
  Job j;
  j.kind = Job::Kind::kGuard;
  j.path = arena.path(a, b);
  return j;
}

Job sit_job(Vertex v) {
  Job j;
  j.kind = Job::Kind::kSit;
  j.sit = v;
  return j;
}

}  // namespace

void TreeSweep::assign_initial(const Context& ctx) {
  const auto& bag = d_.bags[node_];
  jobs_.assign(cops_.size(), Job{});
  std::size_t slot = 0;
  for (std::size_t i = 0; i < bag.size(); i += 2, ++slot) {
    if (slot == jobs_.size()) {
      ctx.report.falsified("bag of size " + std::to_string(bag.size()) + " needs more than " +
                           std::to_string(cops_.size()) + " cops");
      break;
    }
    jobs_[slot] = i + 1 < bag.size() ? guard_job(arena_, bag[i], bag[i + 1]) : sit_job(bag[i]);
  }
}

void TreeSweep::advance(const Context& ctx, int target_node) {
  const auto& b = d_.bags[node_];
  const auto& bp = d_.bags[target_node];
  std::vector<Vertex> fresh;
  kept_.clear();
  for (Vertex v : bp) (contains(b, v) ? kept_ : fresh).push_back(v);
  std::size_t next_fresh = 0;
  auto take = [&]() { return next_fresh < fresh.size() ? fresh[next_fresh++] : kNoVertex; };

  std::vector<std::size_t> freed;
  for (std::size_t i = 0; i < jobs_.size(); ++i) {
    Job& job = jobs_[i];
    const Vertex cop = ctx.cops[cops_[i]];
    if (job.kind == Job::Kind::kIdle) {
      freed.push_back(i);
    } else if (job.kind == Job::Kind::kSit) {
      if (!contains(bp, job.sit)) {
        freed.push_back(i);
      } else if (Vertex z = take(); z != kNoVertex) {
        job = guard_job(arena_, job.sit, z);
      }
    } else {
      const Vertex a = job.path.front(), e = job.path.back();
      const bool keep_a = contains(bp, a), keep_e = contains(bp, e);
      if (keep_a && keep_e) continue;
      if (!keep_a && !keep_e) {
        freed.push_back(i);
        continue;
      }
      // Walk along the old path to the endpoint that stays in the bag.
      const Vertex x = keep_a ? a : e;
      std::vector<Vertex> approach;
      auto at = std::find(job.path.begin(), job.path.end(), cop);
      auto to = std::find(job.path.begin(), job.path.end(), x);
      if (at == job.path.end()) {
        ctx.report.falsified("established guard off its path");
      } else if (at < to) {
        approach.assign(at + 1, to + 1);
      } else {
        for (auto it = at; it != to;) approach.push_back(*--it);
      }
      const Vertex z = take();
      job = z != kNoVertex ? guard_job(arena_, x, z) : sit_job(x);
      job.approach = std::move(approach);
    }
  }
  for (std::size_t i : freed) {
    Vertex z1 = take();
    if (z1 == kNoVertex) {
      jobs_[i] = Job{};
      continue;
    }
    Vertex z2 = take();
    jobs_[i] = z2 == kNoVertex ? sit_job(z1) : guard_job(arena_, z1, z2);
  }
  if (next_fresh < fresh.size()) ctx.report.falsified("not enough cops to guard the next bag");
  node_ = target_node;
  in_transition_ = true;
  ctx.report.bump("bag advances");
}

void TreeSweep::check_invariants(const Context& ctx) {
  const Vertex r = ctx.robber;
  if (capturable(ctx)) return;
  for (const Job& job : jobs_)
    if (job.established && job.kind == Job::Kind::kGuard && contains(job.path, r))
      ctx.report.falsified("robber stands on a guarded path vertex");
  bool all = std::all_of(jobs_.begin(), jobs_.end(),
                         [](const Job& j) { return j.kind == Job::Kind::kIdle || j.established; });
  if (in_transition_ && contains(kept_, r)) ctx.report.falsified("robber reached a vertex of B and B'");
  if (all && !in_transition_ && contains(d_.bags[node_], r)) ctx.report.falsified("robber inside the guarded bag");
}

void TreeSweep::decide(const Context& ctx, std::vector<Vertex>& next) {
  if (!arena_.has(ctx.robber)) return;
  if (!started_) {
    assign_initial(ctx);
    started_ = true;
  }
  check_invariants(ctx);
  ctx.report.bump("guard checks");
  bool all = std::all_of(jobs_.begin(), jobs_.end(),
                         [](const Job& j) { return j.kind == Job::Kind::kIdle || j.established; });
  if (all) {
    in_transition_ = false;
    std::vector<Vertex> guarded;
    for (const Job& j : jobs_)
      for (Vertex v : j.covered()) guarded.push_back(v);
    if (!contains(guarded, ctx.robber)) {
      auto territory = arena_.component_without(ctx.robber, guarded);
      const Vertex x = territory.front();
      int target = -1;
      for (std::size_t t = 0; t < d_.bags.size() && target < 0; ++t)
        if (contains(d_.bags[t], x)) target = static_cast<int>(t);
      // Step from the current node toward `target` in the decomposition tree.
      std::vector<int> parent(d_.bags.size(), -1);
      std::queue<int> q;
      q.push(target);
      parent[target] = target;
      while (!q.empty()) {
        int t = q.front();
        q.pop();
        for (Vertex s : d_.tree.neighbors(t))
          if (parent[s] < 0) parent[s] = t, q.push(s);
      }
      if (target == node_ || parent[node_] < 0) {
        ctx.report.falsified("robber territory meets the current bag");
      } else {
        advance(ctx, parent[node_]);
      }
    }
  }
  for (std::size_t i = 0; i < jobs_.size(); ++i) next[cops_[i]] = guard_step(ctx, arena_, jobs_[i], ctx.cops[cops_[i]]);
}

}  // namespace detail
}  // namespace copsrobber
