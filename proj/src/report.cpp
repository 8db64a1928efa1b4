#include "nsalg/report.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace nsalg {

namespace {
std::atomic<unsigned> g_jobs{1};
}

void set_jobs(unsigned jobs) { g_jobs = std::max(1U, jobs); }
unsigned jobs() { return g_jobs; }

Report& Report::absorb(const Report& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  evaluations += other.evaluations;
  return *this;
}

void Report::sort() {
  std::sort(violations.begin(), violations.end(), [](const Violation& a, const Violation& b) {
    if (a.identity != b.identity) return a.identity < b.identity;
    return a.tuple < b.tuple;
  });
}

std::string Report::summary() const {
  std::ostringstream os;
  os << check << ": " << (passed() ? "pass" : "FAIL") << " (" << evaluations << " evaluations, "
     << violations.size() << " violations)";
  return os.str();
}

std::string describe(const Violation& v) {
  std::ostringstream os;
  os << v.identity << " at (";
  for (std::size_t i = 0; i < v.tuple.size(); ++i) os << (i ? ", " : "") << v.tuple[i];
  os << "): residue " << v.residue.str();
  return os.str();
}

namespace {

// Runs every tuple whose first index lies in [lo, hi).
void run_range(const std::string& identity, std::span<const std::size_t> dims, std::size_t lo, std::size_t hi,
               const std::function<Vector(std::span<const std::size_t>)>& residue, Report& out) {
  const std::size_t n = dims.size();
  std::vector<std::size_t> tuple(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    if (dims[i] == 0) return;
  }
  for (std::size_t first = lo; first < hi; ++first) {
    tuple.assign(n, 0);
    tuple[0] = first;
    for (;;) {
      Vector r = residue(tuple);
      ++out.evaluations;
      if (!r.is_zero()) out.violations.push_back({identity, tuple, std::move(r)});
      bool done = true;
      for (std::size_t k = n; k > 1;) {
        --k;
        if (++tuple[k] < dims[k]) {
          done = false;
          break;
        }
        tuple[k] = 0;
      }
      if (done) break;
    }
  }
}

}  // namespace

Report check_tuples(std::string check, std::string identity, std::span<const std::size_t> dims,
                    const std::function<Vector(std::span<const std::size_t>)>& residue) {
  Report report{std::move(check), {}, 0};
  if (dims.empty() || dims[0] == 0) return report;
  const std::size_t first = dims[0];
  const unsigned workers = std::min<unsigned>(jobs(), static_cast<unsigned>(first));
  if (workers <= 1) {
    run_range(identity, dims, 0, first, residue, report);
  } else {
    std::vector<Report> parts(workers);
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      std::size_t lo = first * w / workers;
      std::size_t hi = first * (w + 1) / workers;
      threads.emplace_back([&, lo, hi, w] { run_range(identity, dims, lo, hi, residue, parts[w]); });
    }
    for (auto& t : threads) t.join();
    for (const auto& p : parts) report.absorb(p);
  }
  report.sort();
  return report;
}

}  // namespace nsalg
