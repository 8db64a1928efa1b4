#pragma once

#include <cstddef>
#include <vector>

#include "nsalg/findim.hpp"

namespace nsalg::oracle {

/// Every parenthesization of a length-n product with leaves 1..n in order.
std::vector<Monomial> enumerate_paren_trees(std::size_t n, const OpSymbol& op = ops::mu);
std::size_t catalan(std::size_t n);

inline constexpr unsigned kDefaultMaxPow = 8;
inline constexpr unsigned kMaxPowLimit = 16;
inline constexpr unsigned kDefaultMaxLen = 5;

/// N^i(a)N^j(b) = N^j(N^i(a)b) + N^i(aN^j(b)) - N^{i+j}(ab) for one (i, j),
/// without checking that N is Nijenhuis.
Report pairsij_identity(const LinOperator& n, unsigned i, unsigned j);
/// All i, j >= 1 with i + j <= max_pow. Throws NotNijenhuis, or
/// LengthOutOfRange unless 2 <= max_pow <= 16.
Report verify_pairsij(const LinOperator& n, unsigned max_pow = kDefaultMaxPow);

/// For every tree X of the given length: X_star = sum_{i+j=n-1} (-N)^i X<j>
/// and X<n> = N(X_star), without checking that N is Nijenhuis.
Report xstar_identity(const LinOperator& n, std::size_t length);
/// Lengths 2..max_len. Throws NotNijenhuis, or LengthOutOfRange unless
/// 2 <= max_len <= 5.
Report verify_xstar(const LinOperator& n, std::size_t max_len = kDefaultMaxLen);

struct CrossCheck {
  Report relations;  // derived NS relations evaluated on the algebra
  Report doubled;    // the double checked against the category
  bool agree() const { return relations.passed() == doubled.passed(); }
};

/// Two independent membership verdicts for an algebra with prec, succ, vee.
CrossCheck cross_check_split(const CategoryPresentation& cat, const FinAlgebra& ns);

/// Evaluates relations over {prec, succ, vee, dot, star, ...} on all basis
/// tuples, binding every op that the algebra carries.
Report check_relations(const FinAlgebra& alg, const std::vector<Relation>& relations, const std::string& check);

}  // namespace nsalg::oracle
