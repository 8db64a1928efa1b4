#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nsalg/error.hpp"
#include "nsalg/rat.hpp"

namespace nsalg {

/// Name of a binary operation.
struct OpSymbol {
  std::string name;

  friend auto operator<=>(const OpSymbol&, const OpSymbol&) = default;
};

namespace ops {
inline const OpSymbol mu{"mu"};
inline const OpSymbol prec{"prec"};
inline const OpSymbol succ{"succ"};
inline const OpSymbol vee{"vee"};
inline const OpSymbol dot{"dot"};
inline const OpSymbol star{"star"};
inline const OpSymbol times{"times"};
}  // namespace ops

/// Planar binary tree whose internal nodes carry operations and whose leaves
/// carry variable labels (1-based). Stored as its preorder token sequence.
///
/// Subtrees are Monomials too, so a Monomial need not be multilinear in
/// 1..arity; validate() checks that property for top-level terms.
class Monomial {
 public:
  struct Token {
    std::uint32_t leaf = 0;  // 0 marks an internal node
    OpSymbol op;

    bool is_leaf() const noexcept { return leaf != 0; }
    friend bool operator==(const Token&, const Token&) = default;
  };

  static Monomial leaf(std::uint32_t label);
  static Monomial node(const OpSymbol& op, const Monomial& left, const Monomial& right);

  std::size_t arity() const noexcept { return arity_; }
  bool is_leaf() const noexcept { return tokens_.size() == 1; }
  std::uint32_t label() const;
  const OpSymbol& op() const;
  Monomial left() const;
  Monomial right() const;

  std::span<const Token> tokens() const noexcept { return tokens_; }
  std::vector<std::uint32_t> leaf_labels() const;
  /// Replaces every label l by mapping[l - 1].
  Monomial relabeled(std::span<const std::uint32_t> mapping) const;
  /// Same tree with the internal node at preorder position `pos` relabeled.
  Monomial with_op_at(std::size_t pos, const OpSymbol& op) const;

  /// Throws MalformedMonomial unless the labels form a permutation of 1..arity.
  void validate() const;

  /// Canonical order: arity, then shape (internal < leaf in preorder), then
  /// op names, then leaf labels.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.tokens_ == b.tokens_; }

 private:
  std::vector<Token> tokens_;
  std::size_t arity_ = 0;

  std::size_t subtree_end(std::size_t begin) const;
};

struct Term {
  Rat coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Linear combination of n-linear monomials, read as "sum = 0".
struct Relation {
  std::size_t arity = 0;
  std::vector<Term> terms;

  bool is_zero() const noexcept { return terms.empty(); }
  friend bool operator==(const Relation&, const Relation&) = default;
};

Relation canon(const Relation& rel);
bool is_canonical(const Relation& rel);

Relation operator+(const Relation& a, const Relation& b);
Relation operator-(const Relation& a, const Relation& b);
Relation operator*(const Rat& c, const Relation& r);

/// r1 == c * r2 for some nonzero rational c. Both inputs must be canonical.
bool relations_equal_up_to_scalar(const Relation& r1, const Relation& r2);

/// Canonical form of the relation obtained by renaming variable l to mapping[l - 1].
Relation relabeled(const Relation& rel, std::span<const std::uint32_t> mapping);

/// r1 equals a nonzero multiple of r2 after some renaming of the variables.
bool equivalent_up_to_relabeling(const Relation& r1, const Relation& r2);

/// Replacement rule for one operation symbol: op(x, y) -> coeff * new_op(x, y),
/// or coeff * new_op(y, x) when `swap` is set.
struct OpRewrite {
  Rat coeff;
  OpSymbol op;
  bool swap = false;
};

/// Replaces every `op` node by the sum of its rewrites (empty list = zero).
Relation substitute_op(const Relation& rel, const OpSymbol& op, std::span<const OpRewrite> rewrites);

std::vector<OpSymbol> ops_used(const Relation& rel);

struct CategoryPresentation {
  std::string name;
  OpSymbol op = ops::mu;
  std::vector<Relation> relations;
};

/// Validates that only `op` occurs, canonicalizes, drops zero relations and
/// removes duplicates up to nonzero scalar.
CategoryPresentation make_presentation(std::string name, OpSymbol op, std::vector<Relation> relations);

/// associative, lie, leibniz, pre-lie, nap, commutative-associative.
CategoryPresentation catalog(std::string_view name);
std::vector<std::string> catalog_names();

template <class T>
using ProductBinding = std::map<OpSymbol, std::function<T(const T&, const T&)>>;

namespace detail {
template <class T>
T evaluate_from(std::span<const Monomial::Token> tokens, std::size_t& pos, std::span<const T> args,
                const ProductBinding<T>& products) {
  const auto& tok = tokens[pos++];
  if (tok.is_leaf()) {
    if (tok.leaf > args.size()) {
      fail(ErrorCode::ArityMismatch, "leaf label " + std::to_string(tok.leaf) + " exceeds argument count");
    }
    return args[tok.leaf - 1];
  }
  auto it = products.find(tok.op);
  if (it == products.end()) fail(ErrorCode::UnboundOpSymbol, "no product bound to '" + tok.op.name + "'");
  T lhs = evaluate_from(tokens, pos, args, products);
  T rhs = evaluate_from(tokens, pos, args, products);
  return it->second(lhs, rhs);
}
}  // namespace detail

/// Evaluates the tree with leaf l replaced by args[l - 1].
template <class T>
T evaluate_monomial(const Monomial& m, std::span<const T> args, const ProductBinding<T>& products) {
  std::size_t pos = 0;
  return detail::evaluate_from(m.tokens(), pos, args, products);
}

/// sum_k coeff_k * evaluate(mono_k); T needs `T + T` and `Rat * T`.
template <class T>
T evaluate_relation(const Relation& rel, std::span<const T> args, const ProductBinding<T>& products, T zero) {
  if (args.size() != rel.arity) {
    fail(ErrorCode::ArityMismatch, "relation of arity " + std::to_string(rel.arity) + " given " +
                                       std::to_string(args.size()) + " arguments");
  }
  T acc = std::move(zero);
  for (const auto& t : rel.terms) acc = acc + t.coeff * evaluate_monomial(t.mono, args, products);
  return acc;
}

// Rendering. Variables are a, b, c, ... by leaf label.
std::string render_text(const Monomial& m);
std::string render_text(const Relation& rel);
std::string render_tex(const Monomial& m);
std::string render_tex(const Relation& rel);

/// Plain-text operator token for an op ("*", "<", ">", "|", ".", "@", "#",
/// or "{name}" for anything else).
std::string text_token(const OpSymbol& op);

/// Parses the plain-text form, e.g. "(a*b)*c - a*(b*c)" or
/// "(a<b)<c = a<(b@c)". Every binary sub-expression other than the outermost
/// must be parenthesized; coefficients are written "p/q " before a monomial.
Relation parse_relation(std::string_view text);

}  // namespace nsalg
