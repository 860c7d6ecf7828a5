#include "ocpkit/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "ocpkit/io.hpp"

namespace ocpkit {

std::vector<std::vector<int>> level_compositions_up_to(int max_total) {
  if (max_total < 1) throw std::invalid_argument("total must be at least 1");
  std::vector<std::vector<int>> out;
  std::vector<int> parts;
  std::function<void(int)> extend = [&](int remaining) {
    if (remaining == 0) {
      out.push_back(parts);
      return;
    }
    for (int first = 1; first <= remaining; ++first) {
      parts.push_back(first);
      extend(remaining - first);
      parts.pop_back();
    }
  };
  for (int total = 1; total <= max_total; ++total) extend(total);
  return out;
}

std::vector<std::string> check_poset(const poset& p, const comparison_report& r,
                                     std::size_t cap) {
  std::vector<std::string> out = report_invariant_violations(p, r);
  for (std::string& msg : injection_contract_violations(p, cap))
    out.push_back(std::move(msg));
  for (std::string& msg : characterization_violations(p, cap))
    out.push_back(std::move(msg));
  return out;
}

namespace {

struct sweep_task {
  std::string poset_id;
  poset subject;
};

std::vector<sweep_task> make_tasks(sweep_family family, int max_size,
                                   int random_count) {
  std::vector<sweep_task> tasks;
  if (family == sweep_family::levels) {
    for (const std::vector<int>& sizes : level_compositions_up_to(max_size))
      tasks.push_back({"levels-" + format_level_sizes(sizes),
                       ordinal_sum_of_antichains(sizes)});
  } else {
    for (int seed = 1; seed <= random_count; ++seed) {
      int d = 1 + (seed - 1) % max_size;
      int percent = seed * 37 % 101;
      std::ostringstream id;
      id << "random-d" << d << "-p" << percent << "-s" << seed;
      tasks.push_back({id.str(),
                       random_poset(d, percent / 100.0,
                                    static_cast<std::uint64_t>(seed))});
    }
  }
  return tasks;
}

} // namespace

std::vector<sweep_row> run_sweep(sweep_family family, int max_size, int random_count,
                                 int jobs, std::size_t cap) {
  if (max_size < 1) throw std::invalid_argument("size bound must be at least 1");
  if (max_size > element_set::capacity)
    throw std::invalid_argument("size bound exceeds capacity of 64");
  if (family == sweep_family::random && random_count < 1)
    throw std::invalid_argument("random sweep needs a positive count");

  std::vector<sweep_task> tasks = make_tasks(family, max_size, random_count);
  std::vector<sweep_row> rows(tasks.size());

  unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs)
                              : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(tasks.size()));

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_lock;

  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size() || failed.load()) return;
      try {
        comparison_report r = compare(tasks[i].subject, cap);
        rows[i] = {tasks[i].poset_id, r, check_poset(tasks[i].subject, r, cap)};
      } catch (...) {
        std::scoped_lock hold(error_lock);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  std::sort(rows.begin(), rows.end(),
            [](const sweep_row& a, const sweep_row& b) { return a.poset_id < b.poset_id; });
  return rows;
}

} // namespace ocpkit
