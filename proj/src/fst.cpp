#include "tdeg/fst.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "tdeg/error.hpp"
#include "tdeg/runner.hpp"

namespace tdeg {

bool is_bitword(std::string_view w) {
  return std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; });
}

std::vector<Run> to_runs(std::string_view w) {
  std::vector<Run> runs;
  for (char c : w) {
    if (!runs.empty() && runs.back().bit == c)
      ++runs.back().count;
    else
      runs.push_back({c, 1});
  }
  return runs;
}

Fst::Fst(std::vector<std::array<Transition, 2>> table, StateId initial) : table_(std::move(table)), initial_(initial) {
  if (table_.empty()) throw Error(ErrorKind::InvalidParam, "transducer has no states");
  if (initial_ >= table_.size()) throw Error(ErrorKind::InvalidParam, "initial state out of range");
  runs_.resize(table_.size());
  for (std::size_t q = 0; q < table_.size(); ++q) {
    for (int b = 0; b < 2; ++b) {
      const Transition& t = table_[q][static_cast<std::size_t>(b)];
      if (t.to >= table_.size())
        throw Error(ErrorKind::InvalidParam, "transition from state " + std::to_string(q) + " targets missing state");
      if (!is_bitword(t.out)) throw Error(ErrorKind::InvalidParam, "output '" + t.out + "' is not a bit word");
      runs_[q][static_cast<std::size_t>(b)] = to_runs(t.out);
    }
  }
  plan_ = std::make_shared<const detail::RunPlan>(detail::RunPlan::build(*this));
}

BitWord fst_run(const Fst& t, std::string_view w) {
  StringSink sink;
  FstRunner runner(t, sink);
  for (const Run& r : to_runs(w)) runner.put(r.bit, r.count);
  return std::move(sink.word);
}

Fst fst_compose(const Fst& first, const Fst& second, std::size_t max_states) {
  auto key = [](StateId a, StateId b) { return (static_cast<std::uint64_t>(a) << 32) | b; };
  std::unordered_map<std::uint64_t, StateId> index;
  std::deque<std::pair<StateId, StateId>> queue;
  std::vector<std::array<Transition, 2>> table;

  auto intern = [&](StateId a, StateId b) {
    auto [it, fresh] = index.try_emplace(key(a, b), static_cast<StateId>(index.size()));
    if (fresh) {
      if (index.size() > max_states)
        throw Error(ErrorKind::TooLarge, "composed transducer exceeds " + std::to_string(max_states) + " states");
      queue.emplace_back(a, b);
    }
    return it->second;
  };

  intern(first.initial(), second.initial());
  StringSink sink;
  FstRunner runner(second, sink);
  while (!queue.empty()) {
    auto [q1, q2] = queue.front();
    queue.pop_front();
    std::array<Transition, 2> row;
    for (int b = 0; b < 2; ++b) {
      sink.word.clear();
      runner.reset(q2);
      for (const Run& r : first.out_runs(q1, b)) runner.put(r.bit, r.count);
      row[static_cast<std::size_t>(b)] = Transition{intern(first.at(q1, b).to, runner.state()), sink.word};
    }
    table.push_back(std::move(row));
  }
  return Fst(std::move(table), 0);
}

}  // namespace tdeg
