#include "tdeg/runner.hpp"

#include "tdeg/error.hpp"

namespace tdeg {

namespace detail {

RunPlan RunPlan::build(const Fst& t) {
  RunPlan plan;
  const std::size_t n = t.size();
  constexpr std::uint32_t kUnseen = 0xffffffffu;
  for (int b = 0; b < 2; ++b) {
    auto& nodes = plan.nodes[static_cast<std::size_t>(b)];
    auto& cycles = plan.cycles[static_cast<std::size_t>(b)];
    nodes.assign(n, Node{});
    // walk_id[q]: which walk first visited q (kUnseen if none); order[q]: index on that walk
    std::vector<std::uint32_t> walk_id(n, kUnseen), order(n, 0);
    std::vector<StateId> path;
    for (std::size_t start = 0; start < n; ++start) {
      if (walk_id[start] != kUnseen) continue;
      path.clear();
      auto q = static_cast<StateId>(start);
      const auto id = static_cast<std::uint32_t>(start);
      while (walk_id[q] == kUnseen) {
        walk_id[q] = id;
        order[q] = static_cast<std::uint32_t>(path.size());
        path.push_back(q);
        q = t.at(q, b).to;
      }
      std::size_t resolved = path.size();
      if (walk_id[q] == id) {
        // new cycle: path[order[q]] ... path.back()
        Cycle cyc;
        const std::size_t entry = order[q];
        cyc.prefix.push_back(0);
        bool any = false;
        bool mixed = false;
        for (std::size_t i = entry; i < path.size(); ++i) {
          const StateId s = path[i];
          cyc.states.push_back(s);
          std::uint64_t len = 0;
          for (const Run& r : t.out_runs(s, b)) {
            len += r.count;
            if (!any) {
              cyc.uniform = r.bit;
              any = true;
            } else if (r.bit != cyc.uniform) {
              mixed = true;
            }
          }
          cyc.prefix.push_back(cyc.prefix.back() + len);
        }
        if (!any) cyc.uniform = '0';
        if (mixed) cyc.uniform = '\0';
        const auto cid = static_cast<std::uint32_t>(cycles.size());
        for (std::size_t i = entry; i < path.size(); ++i)
          nodes[path[i]] = Node{cid, static_cast<std::uint32_t>(i - entry), 0};
        cycles.push_back(std::move(cyc));
        resolved = entry;
      }
      // tail states lead into q, whose node is already final
      for (std::size_t i = resolved; i-- > 0;) {
        const Node& next = nodes[t.at(path[i], b).to];
        nodes[path[i]] = Node{next.cycle, next.pos, next.tail + 1};
      }
    }
  }
  return plan;
}

}  // namespace detail

bool FstRunner::step(int b) {
  for (const Run& r : fst_->out_runs(state_, b))
    if (!out_->put(r.bit, r.count)) return false;
  state_ = fst_->at(state_, b).to;
  return true;
}

bool FstRunner::put(char bit, std::uint64_t count) {
  const int b = bit == '1' ? 1 : 0;
  const auto& plan = fst_->plan();
  const auto& nodes = plan.nodes[static_cast<std::size_t>(b)];
  while (count > 0) {
    const auto& node = nodes[state_];
    if (node.tail > 0) {
      if (!step(b)) return false;
      --count;
      continue;
    }
    const auto& cyc = plan.cycles[static_cast<std::size_t>(b)][node.cycle];
    const std::uint64_t len = cyc.states.size();
    if (cyc.uniform == '\0' || count < len) {
      if (!step(b)) return false;
      --count;
      continue;
    }
    const std::uint64_t full = count / len;
    const std::uint64_t rem = count % len;
    const std::uint64_t p = node.pos;
    std::uint64_t total = 0;
    if (__builtin_mul_overflow(full, cyc.prefix[len], &total))
      throw Error(ErrorKind::TooLarge, "run output exceeds 64 bits");
    const std::uint64_t partial = p + rem <= len ? cyc.prefix[p + rem] - cyc.prefix[p]
                                                 : cyc.prefix[len] - cyc.prefix[p] + cyc.prefix[p + rem - len];
    if (__builtin_add_overflow(total, partial, &total)) throw Error(ErrorKind::TooLarge, "run output exceeds 64 bits");
    state_ = cyc.states[(p + rem) % len];
    if (total > 0 && !out_->put(cyc.uniform, total)) return false;
    count = 0;
  }
  return true;
}

Pipeline::Pipeline(const std::vector<const Fst*>& machines, RunSink& sink) : head_(&sink) {
  for (auto it = machines.rbegin(); it != machines.rend(); ++it) {
    runners_.push_back(std::make_unique<FstRunner>(**it, *head_));
    head_ = runners_.back().get();
  }
}

bool Pipeline::put(char bit, std::uint64_t count) { return head_->put(bit, count); }

}  // namespace tdeg
