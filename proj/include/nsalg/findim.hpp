#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nsalg/linalg.hpp"
#include "nsalg/report.hpp"
#include "nsalg/split.hpp"
#include "nsalg/terms.hpp"

namespace nsalg {

/// Finite-dimensional algebra over Q with one structure tensor per product.
struct FinAlgebra {
  std::size_t dim = 0;
  std::vector<std::string> basis_names;
  std::map<OpSymbol, BilinearMap> products;

  /// Checks tensor shapes and fills default basis names e1, e2, ...
  static FinAlgebra make(std::size_t dim, std::map<OpSymbol, BilinearMap> products,
                         std::vector<std::string> basis_names = {});

  bool has(const OpSymbol& op) const { return products.count(op) != 0; }
  /// Throws MissingProduct.
  const BilinearMap& product(const OpSymbol& op) const;
  Vector mul(const OpSymbol& op, const Vector& x, const Vector& y) const { return product(op).apply(x, y); }
  Vector basis(std::size_t i) const { return Vector::basis(dim, i); }
};

bool operator==(const FinAlgebra& a, const FinAlgebra& b);

/// Actions of a base algebra on M. left[i] is the matrix of m -> e_i . m and
/// right[i] the matrix of m -> m . e_i (column convention).
struct Bimodule {
  FinAlgebra base;
  OpSymbol base_op = ops::mu;
  std::size_t mdim = 0;
  std::vector<std::string> module_names;
  std::vector<Matrix> left;
  std::vector<Matrix> right;
  std::optional<BilinearMap> mod_product;

  static Bimodule make(FinAlgebra base, OpSymbol base_op, std::size_t mdim, std::vector<Matrix> left,
                       std::vector<Matrix> right, std::optional<BilinearMap> mod_product = std::nullopt,
                       std::vector<std::string> module_names = {});

  std::size_t dim() const { return base.dim; }
  Vector left_act(const Vector& a, const Vector& m) const;
  Vector right_act(const Vector& m, const Vector& a) const;
  /// m . m'; throws MissingModuleProduct when absent.
  Vector module_mul(const Vector& m, const Vector& n) const;
  /// Left action as a bilinear map A x M -> M, right action as M x A -> M.
  BilinearMap left_map() const;
  BilinearMap right_map() const;
};

/// A acting on itself by multiplication; `with_product` also sets . = mu.
Bimodule standard_bimodule(const FinAlgebra& alg, const OpSymbol& op = ops::mu, bool with_product = false);
bool is_standard(const Bimodule& m);

struct Cocycle {
  Bimodule over;
  BilinearMap values;  // (d, d, m)

  static Cocycle make(Bimodule over, BilinearMap values);
  Vector operator()(const Vector& a, const Vector& b) const { return values.apply(a, b); }
};

enum class OperatorKind { Nijenhuis, RB, RelativeRB, TwistedRB, Reynolds };
std::string_view to_string(OperatorKind kind);

/// Linear map M -> A (a d x m matrix). The kind records intent only; the
/// matching check is the authority on validity.
struct LinOperator {
  Bimodule over;
  Matrix matrix;
  OperatorKind kind = OperatorKind::RelativeRB;
  Rat lambda;
  std::optional<Cocycle> cocycle;

  static LinOperator make(Bimodule over, Matrix matrix, OperatorKind kind, Rat lambda = Rat(),
                          std::optional<Cocycle> cocycle = std::nullopt);
  Vector operator()(const Vector& m) const { return matrix.apply(m); }
};

LinOperator nijenhuis_operator(const FinAlgebra& alg, Matrix n, const OpSymbol& op = ops::mu);
LinOperator rb_operator(const FinAlgebra& alg, Matrix r, Rat lambda, const OpSymbol& op = ops::mu);
LinOperator relative_rb_operator(const Bimodule& m, Matrix r, Rat lambda);
LinOperator twisted_rb_operator(const Cocycle& h, Matrix t);
/// The cocycle -mu on the standard bimodule (no module product).
Cocycle reynolds_cocycle(const FinAlgebra& alg, const OpSymbol& op = ops::mu);
LinOperator reynolds_operator(const FinAlgebra& alg, Matrix beta, const OpSymbol& op = ops::mu);

// -- membership and constructions -------------------------------------------

/// Evaluates every relation of cat on all basis tuples, binding cat.op to
/// alg's product `op`.
Report check_in_category(const FinAlgebra& alg, const OpSymbol& op, const CategoryPresentation& cat);

/// A + M with (a, m)(a', m') = (aa', a.m' + m.a').
FinAlgebra trivial_extension(const Bimodule& m);
/// Adds m . m' to the M component; throws MissingModuleProduct.
FinAlgebra semidirect_sum(const Bimodule& m);
/// Adds H(a, a') to the M component.
FinAlgebra cocycle_extension(const Cocycle& h);

Report is_bimodule(const Bimodule& m, const CategoryPresentation& cat);
Report is_bimodule_algebra(const Bimodule& m, const CategoryPresentation& cat);
Report is_2cocycle(const Cocycle& h, const CategoryPresentation& cat);

/// A + A with the scheme's graded product, stored under `out_op`.
FinAlgebra double_algebra(const FinAlgebra& alg, const SplitScheme& scheme, const OpSymbol& out_op = ops::mu);
/// Membership of double_algebra(alg, scheme) in cat.
Report double_in_category(const FinAlgebra& alg, const SplitScheme& scheme, const CategoryPresentation& cat);

// -- Nijenhuis ----------------------------------------------------------------

/// N(a)N(b) = N(N(a)b + aN(b) - N(ab)); throws NotEndomorphism unless N acts
/// on the standard bimodule.
Report check_nijenhuis(const LinOperator& n);
/// a * b = N(a)b + aN(b) - N(ab) under product "star"; throws NotNijenhuis.
FinAlgebra nijenhuis_deformed(const LinOperator& n);
/// a > b = N(a)b, a < b = aN(b), a | b = -N(ab); throws NotNijenhuis.
FinAlgebra nijenhuis_ns(const LinOperator& n);

// -- Rota-Baxter --------------------------------------------------------------

/// R(m)R(n) = R(R(m).n + m.R(n) + lambda m.n) on the standard bimodule with
/// . = mu; throws KindMismatch otherwise.
Report check_rb(const LinOperator& r, const Rat& lambda);
/// Same identity on any bimodule; a missing module product is only allowed
/// for lambda = 0.
Report check_relative_rb(const LinOperator& r, const Rat& lambda);
/// (a, m) -> (-lambda a + R(m), 0) on the semidirect sum, as an RB operator
/// on its standard bimodule with . = product.
LinOperator lift_operator(const LinOperator& r, const Rat& lambda);
/// m < n = m.R(n), m > n = R(m).n, m . n = lambda m.n; throws NotRelativeRB.
FinAlgebra rb_tridendriform(const LinOperator& r, const Rat& lambda);
/// As rb_tridendriform with vee in place of dot.
FinAlgebra rb_ns(const LinOperator& r, const Rat& lambda);

struct NijRBResult {
  FinAlgebra mstar;   // (M, star) with m * n = R(m).n + m.R(n), product "star"
  Bimodule actions;   // A as an (M, star)-bimodule
  Report report;      // membership of the trivial extension in cat
};
/// m |> a = R(m)a - R(m.a), a <| m = aR(m) - R(a.m); throws NotRelativeRB
/// unless R is relative RB of weight 0.
NijRBResult nijrb_bimodule(const LinOperator& r, const CategoryPresentation& cat);

// -- twisted Rota-Baxter ------------------------------------------------------

/// T(m)T(n) = T(T(m).n + m.T(n) + H(T(m), T(n))) without validating H.
Report twisted_rb_identity(const LinOperator& t, const Cocycle& h);
/// Validates H as a 2-cocycle first (InvalidCocycle), then the identity.
Report check_twisted_rb(const LinOperator& t, const Cocycle& h, const CategoryPresentation& cat);

struct GraphResult {
  FinAlgebra mstar;  // product "star"
  Report report;     // (M, star) in cat
};
/// Closure of {(T(m), m)} under the ambient product on A + M (stored under
/// the bimodule's base op); throws GraphNotClosed with a witness pair.
GraphResult graph_subalgebra(const LinOperator& t, const FinAlgebra& ambient, const CategoryPresentation& cat);
/// A + M with m.m' scaled by lambda; the ambient algebra for relative RB(lambda).
FinAlgebra weighted_semidirect_sum(const Bimodule& m, const Rat& lambda);

/// m < n = m.T(n), m > n = T(m).n, m | n = H(T(m), T(n)); throws NotTwistedRB.
FinAlgebra trb_ns(const LinOperator& t, const Cocycle& h);

struct TwistedFromNS {
  FinAlgebra star;  // (A, star) under product mu
  Bimodule bimodule;
  Cocycle cocycle;
  LinOperator identity;
  Report report;
};
/// (A, >, <) over (A, star), H = vee and T = Id; throws NotNSAlgebra.
TwistedFromNS ns_to_twisted_rb(const FinAlgebra& ns, const CategoryPresentation& cat);

struct GeneralNSResult {
  FinAlgebra ns;
  Report report;  // the double in cat
};
/// m > n = beta(m).n, m < n = m.beta(n), m | n = alpha(m, n); throws
/// HypothesisFailed if beta is not a homomorphism from (M, star) or (M, star)
/// is not in cat.
GeneralNSResult general_ns(const Bimodule& m, const Matrix& beta, const BilinearMap& alpha,
                           const CategoryPresentation& cat);

/// NS products of `alg` in the order prec, succ, vee, read from a table that
/// may store vee under "dot".
FinAlgebra tridendriform_as_ns(const FinAlgebra& tri);

}  // namespace nsalg
