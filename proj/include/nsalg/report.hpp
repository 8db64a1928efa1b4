#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "nsalg/linalg.hpp"

namespace nsalg {

/// One failed instance of an identity: the basis tuple it was evaluated on
/// and the nonzero value left over.
struct Violation {
  std::string identity;
  std::vector<std::size_t> tuple;
  Vector residue;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Report {
  std::string check;
  std::vector<Violation> violations;
  std::size_t evaluations = 0;

  bool passed() const noexcept { return violations.empty(); }
  /// Appends the other report's violations and evaluation count.
  Report& absorb(const Report& other);
  /// Orders witnesses by identity, then tuple.
  void sort();
  std::string summary() const;
};

std::string describe(const Violation& v);

/// Worker count used by exhaustive loops (default 1).
void set_jobs(unsigned jobs);
unsigned jobs();

/// Evaluates residue(tuple) on every tuple in dims[0] x dims[1] x ... and
/// records nonzero results. Work is split on the first index across jobs()
/// threads; the result is sorted.
Report check_tuples(std::string check, std::string identity, std::span<const std::size_t> dims,
                    const std::function<Vector(std::span<const std::size_t>)>& residue);

}  // namespace nsalg
