#include "nsalg/findim.hpp"

#include <algorithm>

namespace nsalg {

namespace {

void require_dim(std::size_t got, std::size_t want, const std::string& what) {
  if (got != want) {
    fail(ErrorCode::DimensionMismatch, what + ": expected " + std::to_string(want) + ", got " + std::to_string(got));
  }
}

void require_shape(const BilinearMap& b, std::size_t p, std::size_t q, std::size_t r, const std::string& what) {
  if (b.left_dim() != p || b.right_dim() != q || b.out_dim() != r) {
    fail(ErrorCode::DimensionMismatch, what + ": expected shape " + std::to_string(p) + "x" + std::to_string(q) +
                                           "x" + std::to_string(r));
  }
}

std::vector<std::string> numbered(const std::string& stem, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + 1));
  return out;
}

std::vector<Vector> columns(const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.column(j));
  return out;
}

std::string first_witness(const Report& r) { return r.passed() ? std::string() : describe(r.violations.front()); }

// Product table on A + M shared by the three extensions. `mod` and `h` may be null.
FinAlgebra extension(const Bimodule& m, const BilinearMap* mod, const BilinearMap* h) {
  const std::size_t d = m.dim();
  const std::size_t n = d + m.mdim;
  const BilinearMap& p = m.base.product(m.base_op);
  BilinearMap table = BilinearMap::tabulate(n, n, n, [&](std::size_t i, std::size_t j) {
    Vector w(n);
    if (i < d && j < d) {
      Vector ab = p.on_basis(i, j);
      for (std::size_t k = 0; k < d; ++k) w[k] = ab[k];
      if (h) {
        Vector hv = h->on_basis(i, j);
        for (std::size_t k = 0; k < m.mdim; ++k) w[d + k] = hv[k];
      }
    } else if (i < d) {
      for (std::size_t k = 0; k < m.mdim; ++k) w[d + k] = m.left[i](k, j - d);
    } else if (j < d) {
      for (std::size_t k = 0; k < m.mdim; ++k) w[d + k] = m.right[j](k, i - d);
    } else if (mod) {
      Vector mm = mod->on_basis(i - d, j - d);
      for (std::size_t k = 0; k < m.mdim; ++k) w[d + k] = mm[k];
    }
    return w;
  });
  std::vector<std::string> names = m.base.basis_names;
  names.insert(names.end(), m.module_names.begin(), m.module_names.end());
  return FinAlgebra::make(n, {{m.base_op, std::move(table)}}, std::move(names));
}

}  // namespace

// ---------------------------------------------------------------------------
// Data types

FinAlgebra FinAlgebra::make(std::size_t dim, std::map<OpSymbol, BilinearMap> products,
                            std::vector<std::string> basis_names) {
  for (const auto& [op, table] : products) require_shape(table, dim, dim, dim, "product '" + op.name + "'");
  if (basis_names.empty()) basis_names = numbered("e", dim);
  require_dim(basis_names.size(), dim, "basis names");
  return FinAlgebra{dim, std::move(basis_names), std::move(products)};
}

const BilinearMap& FinAlgebra::product(const OpSymbol& op) const {
  auto it = products.find(op);
  if (it == products.end()) fail(ErrorCode::MissingProduct, "algebra has no product '" + op.name + "'");
  return it->second;
}

bool operator==(const FinAlgebra& a, const FinAlgebra& b) { return a.dim == b.dim && a.products == b.products; }

Bimodule Bimodule::make(FinAlgebra base, OpSymbol base_op, std::size_t mdim, std::vector<Matrix> left,
                        std::vector<Matrix> right, std::optional<BilinearMap> mod_product,
                        std::vector<std::string> module_names) {
  base.product(base_op);
  require_dim(left.size(), base.dim, "left action count");
  require_dim(right.size(), base.dim, "right action count");
  for (const auto* side : {&left, &right}) {
    for (const auto& mat : *side) {
      require_dim(mat.rows(), mdim, "action matrix rows");
      require_dim(mat.cols(), mdim, "action matrix columns");
    }
  }
  if (mod_product) require_shape(*mod_product, mdim, mdim, mdim, "module product");
  if (module_names.empty()) module_names = numbered("m", mdim);
  require_dim(module_names.size(), mdim, "module basis names");
  return Bimodule{std::move(base),  std::move(base_op), mdim, std::move(module_names),
                  std::move(left), std::move(right),   std::move(mod_product)};
}

Vector Bimodule::left_act(const Vector& a, const Vector& m) const {
  Vector out(mdim);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero()) out.axpy(a[i], left[i].apply(m));
  }
  return out;
}

Vector Bimodule::right_act(const Vector& m, const Vector& a) const {
  Vector out(mdim);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero()) out.axpy(a[i], right[i].apply(m));
  }
  return out;
}

Vector Bimodule::module_mul(const Vector& m, const Vector& n) const {
  if (!mod_product) fail(ErrorCode::MissingModuleProduct, "bimodule has no module product");
  return mod_product->apply(m, n);
}

BilinearMap Bimodule::left_map() const {
  return BilinearMap::tabulate(dim(), mdim, mdim, [&](std::size_t i, std::size_t j) { return left[i].column(j); });
}

BilinearMap Bimodule::right_map() const {
  return BilinearMap::tabulate(mdim, dim(), mdim, [&](std::size_t i, std::size_t j) { return right[j].column(i); });
}

Bimodule standard_bimodule(const FinAlgebra& alg, const OpSymbol& op, bool with_product) {
  const BilinearMap& p = alg.product(op);
  const std::size_t d = alg.dim;
  std::vector<Matrix> left(d, Matrix(d, d)), right(d, Matrix(d, d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        left[i](k, j) = p.at(i, j, k);
        right[i](k, j) = p.at(j, i, k);
      }
    }
  }
  std::vector<std::string> names;
  for (const auto& n : alg.basis_names) names.push_back(n + "'");
  std::optional<BilinearMap> mod;
  if (with_product) mod = p;
  return Bimodule::make(alg, op, d, std::move(left), std::move(right), std::move(mod), std::move(names));
}

bool is_standard(const Bimodule& m) {
  if (m.mdim != m.dim()) return false;
  Bimodule s = standard_bimodule(m.base, m.base_op);
  return s.left == m.left && s.right == m.right;
}

Cocycle Cocycle::make(Bimodule over, BilinearMap values) {
  require_shape(values, over.dim(), over.dim(), over.mdim, "cocycle");
  return Cocycle{std::move(over), std::move(values)};
}

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::Nijenhuis: return "nijenhuis";
    case OperatorKind::RB: return "rb";
    case OperatorKind::RelativeRB: return "relative-rb";
    case OperatorKind::TwistedRB: return "twisted-rb";
    case OperatorKind::Reynolds: return "reynolds";
  }
  return "?";
}

LinOperator LinOperator::make(Bimodule over, Matrix matrix, OperatorKind kind, Rat lambda,
                              std::optional<Cocycle> cocycle) {
  require_dim(matrix.rows(), over.dim(), "operator rows");
  require_dim(matrix.cols(), over.mdim, "operator columns");
  return LinOperator{std::move(over), std::move(matrix), kind, std::move(lambda), std::move(cocycle)};
}

LinOperator nijenhuis_operator(const FinAlgebra& alg, Matrix n, const OpSymbol& op) {
  return LinOperator::make(standard_bimodule(alg, op), std::move(n), OperatorKind::Nijenhuis);
}

LinOperator rb_operator(const FinAlgebra& alg, Matrix r, Rat lambda, const OpSymbol& op) {
  return LinOperator::make(standard_bimodule(alg, op, true), std::move(r), OperatorKind::RB, std::move(lambda));
}

LinOperator relative_rb_operator(const Bimodule& m, Matrix r, Rat lambda) {
  return LinOperator::make(m, std::move(r), OperatorKind::RelativeRB, std::move(lambda));
}

LinOperator twisted_rb_operator(const Cocycle& h, Matrix t) {
  return LinOperator::make(h.over, std::move(t), OperatorKind::TwistedRB, Rat(), h);
}

Cocycle reynolds_cocycle(const FinAlgebra& alg, const OpSymbol& op) {
  return Cocycle::make(standard_bimodule(alg, op), alg.product(op).scaled(Rat(-1)));
}

LinOperator reynolds_operator(const FinAlgebra& alg, Matrix beta, const OpSymbol& op) {
  Cocycle h = reynolds_cocycle(alg, op);
  return LinOperator::make(h.over, std::move(beta), OperatorKind::Reynolds, Rat(), h);
}

// ---------------------------------------------------------------------------
// Membership and constructions

Report check_in_category(const FinAlgebra& alg, const OpSymbol& op, const CategoryPresentation& cat) {
  const BilinearMap& p = alg.product(op);
  const ProductBinding<Vector> bind{{cat.op, [&p](const Vector& x, const Vector& y) { return p.apply(x, y); }}};
  Report total{"in-category(" + cat.name + ")", {}, 0};
  for (const auto& rel : cat.relations) {
    std::vector<std::size_t> dims(rel.arity, alg.dim);
    total.absorb(check_tuples(total.check, render_text(rel), dims, [&](std::span<const std::size_t> tuple) {
      std::vector<Vector> args;
      args.reserve(tuple.size());
      for (auto i : tuple) args.push_back(alg.basis(i));
      return evaluate_relation<Vector>(rel, args, bind, Vector(alg.dim));
    }));
  }
  total.sort();
  return total;
}

FinAlgebra trivial_extension(const Bimodule& m) { return extension(m, nullptr, nullptr); }

FinAlgebra semidirect_sum(const Bimodule& m) {
  if (!m.mod_product) fail(ErrorCode::MissingModuleProduct, "semidirect sum needs a module product");
  return extension(m, &*m.mod_product, nullptr);
}

FinAlgebra cocycle_extension(const Cocycle& h) { return extension(h.over, nullptr, &h.values); }

FinAlgebra weighted_semidirect_sum(const Bimodule& m, const Rat& lambda) {
  if (lambda.is_zero()) return trivial_extension(m);
  if (!m.mod_product) fail(ErrorCode::MissingModuleProduct, "nonzero weight needs a module product");
  BilinearMap scaled = m.mod_product->scaled(lambda);
  return extension(m, &scaled, nullptr);
}

Report is_bimodule(const Bimodule& m, const CategoryPresentation& cat) {
  Report r = check_in_category(trivial_extension(m), m.base_op, cat);
  r.check = "bimodule(" + cat.name + ")";
  return r;
}

Report is_bimodule_algebra(const Bimodule& m, const CategoryPresentation& cat) {
  Report r = check_in_category(semidirect_sum(m), m.base_op, cat);
  r.check = "bimodule-algebra(" + cat.name + ")";
  return r;
}

Report is_2cocycle(const Cocycle& h, const CategoryPresentation& cat) {
  Report r = check_in_category(cocycle_extension(h), h.over.base_op, cat);
  r.check = "2-cocycle(" + cat.name + ")";
  return r;
}

FinAlgebra double_algebra(const FinAlgebra& alg, const SplitScheme& scheme, const OpSymbol& out_op) {
  const std::size_t d = alg.dim;
  for (const auto& op : scheme.alphabet) alg.product(op);
  BilinearMap table = BilinearMap::tabulate(2 * d, 2 * d, 2 * d, [&](std::size_t x, std::size_t y) {
    const std::size_t g = x / std::max<std::size_t>(d, 1), i = x % std::max<std::size_t>(d, 1);
    const std::size_t h = y / std::max<std::size_t>(d, 1), j = y % std::max<std::size_t>(d, 1);
    Vector w(2 * d);
    for (const auto& rule : scheme.rules[g][h]) {
      Vector v = alg.product(rule.op).on_basis(i, j);
      for (std::size_t k = 0; k < d; ++k) w[rule.out_degree * d + k] += v[k];
    }
    return w;
  });
  std::vector<std::string> names;
  for (int g = 0; g < 2; ++g) {
    for (const auto& n : alg.basis_names) names.push_back(n + "_" + std::to_string(g));
  }
  return FinAlgebra::make(2 * d, {{out_op, std::move(table)}}, std::move(names));
}

Report double_in_category(const FinAlgebra& alg, const SplitScheme& scheme, const CategoryPresentation& cat) {
  Report r = check_in_category(double_algebra(alg, scheme, cat.op), cat.op, cat);
  r.check = "double(" + scheme.name + ") in " + cat.name;
  return r;
}

// ---------------------------------------------------------------------------
// Nijenhuis

Report check_nijenhuis(const LinOperator& n) {
  if (!is_standard(n.over)) fail(ErrorCode::NotEndomorphism, "Nijenhuis operators act on the standard bimodule");
  const FinAlgebra& a = n.over.base;
  const BilinearMap& p = a.product(n.over.base_op);
  const auto img = columns(n.matrix);
  const std::size_t dims[] = {a.dim, a.dim};
  return check_tuples("nijenhuis", "N(a)N(b) = N(N(a)b + aN(b) - N(ab))", dims, [&](std::span<const std::size_t> t) {
    const Vector ea = a.basis(t[0]), eb = a.basis(t[1]);
    Vector inner = p.apply(img[t[0]], eb) + p.apply(ea, img[t[1]]) - n(p.on_basis(t[0], t[1]));
    return p.apply(img[t[0]], img[t[1]]) - n(inner);
  });
}

namespace {

void require_nijenhuis(const LinOperator& n) {
  Report r = check_nijenhuis(n);
  if (!r.passed()) fail(ErrorCode::NotNijenhuis, first_witness(r));
}

}  // namespace

FinAlgebra nijenhuis_deformed(const LinOperator& n) {
  require_nijenhuis(n);
  const FinAlgebra& a = n.over.base;
  const BilinearMap& p = a.product(n.over.base_op);
  const auto img = columns(n.matrix);
  BilinearMap star = BilinearMap::tabulate(a.dim, a.dim, a.dim, [&](std::size_t i, std::size_t j) {
    return p.apply(img[i], a.basis(j)) + p.apply(a.basis(i), img[j]) - n(p.on_basis(i, j));
  });
  return FinAlgebra::make(a.dim, {{ops::star, std::move(star)}}, a.basis_names);
}

FinAlgebra nijenhuis_ns(const LinOperator& n) {
  require_nijenhuis(n);
  const FinAlgebra& a = n.over.base;
  const BilinearMap& p = a.product(n.over.base_op);
  const auto img = columns(n.matrix);
  const std::size_t d = a.dim;
  auto succ = BilinearMap::tabulate(d, d, d, [&](std::size_t i, std::size_t j) { return p.apply(img[i], a.basis(j)); });
  auto prec = BilinearMap::tabulate(d, d, d, [&](std::size_t i, std::size_t j) { return p.apply(a.basis(i), img[j]); });
  auto vee = BilinearMap::tabulate(d, d, d, [&](std::size_t i, std::size_t j) { return -n(p.on_basis(i, j)); });
  return FinAlgebra::make(d, {{ops::prec, std::move(prec)}, {ops::succ, std::move(succ)}, {ops::vee, std::move(vee)}},
                          a.basis_names);
}

// ---------------------------------------------------------------------------
// Rota-Baxter

Report check_relative_rb(const LinOperator& r, const Rat& lambda) {
  const Bimodule& m = r.over;
  if (!lambda.is_zero() && !m.mod_product) {
    fail(ErrorCode::MissingModuleProduct, "weight " + lambda.str() + " needs a module product");
  }
  const BilinearMap& p = m.base.product(m.base_op);
  const auto img = columns(r.matrix);
  const std::size_t dims[] = {m.mdim, m.mdim};
  return check_tuples("relative-rb(" + lambda.str() + ")", "R(m)R(n) = R(R(m).n + m.R(n) + l m.n)", dims,
                      [&](std::span<const std::size_t> t) {
                        const Vector em = Vector::basis(m.mdim, t[0]), en = Vector::basis(m.mdim, t[1]);
                        Vector inner = m.left_act(img[t[0]], en) + m.right_act(em, img[t[1]]);
                        if (!lambda.is_zero()) inner.axpy(lambda, m.mod_product->on_basis(t[0], t[1]));
                        return p.apply(img[t[0]], img[t[1]]) - r(inner);
                      });
}

Report check_rb(const LinOperator& r, const Rat& lambda) {
  const Bimodule& m = r.over;
  if (!is_standard(m) || !m.mod_product || !(*m.mod_product == m.base.product(m.base_op))) {
    fail(ErrorCode::KindMismatch, "Rota-Baxter operators need the standard bimodule with module product mu");
  }
  Report rep = check_relative_rb(r, lambda);
  rep.check = "rb(" + lambda.str() + ")";
  return rep;
}

LinOperator lift_operator(const LinOperator& r, const Rat& lambda) {
  const Bimodule& m = r.over;
  // With weight 0 the module product never enters the identity.
  FinAlgebra ambient = m.mod_product || !lambda.is_zero() ? semidirect_sum(m) : trivial_extension(m);
  const std::size_t d = m.dim(), n = d + m.mdim;
  Matrix hat(n, n);
  for (std::size_t j = 0; j < d; ++j) hat(j, j) = -lambda;
  for (std::size_t j = 0; j < m.mdim; ++j) {
    for (std::size_t i = 0; i < d; ++i) hat(i, d + j) = r.matrix(i, j);
  }
  return rb_operator(ambient, std::move(hat), lambda, m.base_op);
}

namespace {

void require_relative_rb(const LinOperator& r, const Rat& lambda) {
  Report rep = check_relative_rb(r, lambda);
  if (!rep.passed()) fail(ErrorCode::NotRelativeRB, first_witness(rep));
}

FinAlgebra rb_split(const LinOperator& r, const Rat& lambda, const OpSymbol& third) {
  require_relative_rb(r, lambda);
  const Bimodule& m = r.over;
  const auto img = columns(r.matrix);
  const std::size_t k = m.mdim;
  auto prec = BilinearMap::tabulate(k, k, k, [&](std::size_t i, std::size_t j) {
    return m.right_act(Vector::basis(k, i), img[j]);
  });
  auto succ = BilinearMap::tabulate(k, k, k, [&](std::size_t i, std::size_t j) {
    return m.left_act(img[i], Vector::basis(k, j));
  });
  BilinearMap extra = lambda.is_zero() ? BilinearMap(k, k, k) : m.mod_product->scaled(lambda);
  return FinAlgebra::make(k, {{ops::prec, std::move(prec)}, {ops::succ, std::move(succ)}, {third, std::move(extra)}},
                          m.module_names);
}

}  // namespace

FinAlgebra rb_tridendriform(const LinOperator& r, const Rat& lambda) { return rb_split(r, lambda, ops::dot); }
FinAlgebra rb_ns(const LinOperator& r, const Rat& lambda) { return rb_split(r, lambda, ops::vee); }

NijRBResult nijrb_bimodule(const LinOperator& r, const CategoryPresentation& cat) {
  require_relative_rb(r, Rat());
  const Bimodule& m = r.over;
  const BilinearMap& p = m.base.product(m.base_op);
  const auto img = columns(r.matrix);
  const std::size_t d = m.dim(), k = m.mdim;

  auto star = BilinearMap::tabulate(k, k, k, [&](std::size_t i, std::size_t j) {
    return m.left_act(img[i], Vector::basis(k, j)) + m.right_act(Vector::basis(k, i), img[j]);
  });
  FinAlgebra mstar = FinAlgebra::make(k, {{ops::star, std::move(star)}}, m.module_names);

  std::vector<Matrix> left(k, Matrix(d, d)), right(k, Matrix(d, d));
  for (std::size_t i = 0; i < k; ++i) {
    const Vector ei = Vector::basis(k, i);
    for (std::size_t j = 0; j < d; ++j) {
      const Vector aj = m.base.basis(j);
      Vector l = p.apply(img[i], aj) - r(m.right_act(ei, aj));
      Vector rr = p.apply(aj, img[i]) - r(m.left_act(aj, ei));
      for (std::size_t row = 0; row < d; ++row) {
        left[i](row, j) = l[row];
        right[i](row, j) = rr[row];
      }
    }
  }
  Bimodule actions = Bimodule::make(mstar, ops::star, d, std::move(left), std::move(right), std::nullopt,
                                    m.base.basis_names);
  Report rep = is_bimodule(actions, cat);
  rep.check = "nijrb-bimodule(" + cat.name + ")";
  return {std::move(mstar), std::move(actions), std::move(rep)};
}

// ---------------------------------------------------------------------------
// Twisted Rota-Baxter

Report twisted_rb_identity(const LinOperator& t, const Cocycle& h) {
  const Bimodule& m = t.over;
  require_dim(h.over.dim(), m.dim(), "cocycle base dimension");
  require_dim(h.over.mdim, m.mdim, "cocycle module dimension");
  const BilinearMap& p = m.base.product(m.base_op);
  const auto img = columns(t.matrix);
  const std::size_t dims[] = {m.mdim, m.mdim};
  return check_tuples("twisted-rb", "T(m)T(n) = T(T(m).n + m.T(n) + H(T(m), T(n)))", dims,
                      [&](std::span<const std::size_t> tp) {
                        const Vector em = Vector::basis(m.mdim, tp[0]), en = Vector::basis(m.mdim, tp[1]);
                        Vector inner = m.left_act(img[tp[0]], en) + m.right_act(em, img[tp[1]]) +
                                       h(img[tp[0]], img[tp[1]]);
                        return p.apply(img[tp[0]], img[tp[1]]) - t(inner);
                      });
}

Report check_twisted_rb(const LinOperator& t, const Cocycle& h, const CategoryPresentation& cat) {
  Report c = is_2cocycle(h, cat);
  if (!c.passed()) fail(ErrorCode::InvalidCocycle, first_witness(c));
  return twisted_rb_identity(t, h);
}

GraphResult graph_subalgebra(const LinOperator& t, const FinAlgebra& ambient, const CategoryPresentation& cat) {
  const Bimodule& m = t.over;
  const std::size_t d = m.dim(), k = m.mdim;
  require_dim(ambient.dim, d + k, "ambient dimension");
  const BilinearMap& p = ambient.product(m.base_op);
  const auto img = columns(t.matrix);
  auto graph = [&](std::size_t i) { return Vector::concat(img[i], Vector::basis(k, i)); };

  const std::size_t dims[] = {k, k};
  Report closure = check_tuples("graph-closure", "(T(m), m)(T(n), n) in graph", dims,
                                [&](std::span<const std::size_t> tp) {
                                  Vector prod = p.apply(graph(tp[0]), graph(tp[1]));
                                  Vector mpart = prod.slice(d, k);
                                  return prod.slice(0, d) - t(mpart);
                                });
  if (!closure.passed()) fail(ErrorCode::GraphNotClosed, first_witness(closure));

  auto star = BilinearMap::tabulate(k, k, k, [&](std::size_t i, std::size_t j) {
    return p.apply(graph(i), graph(j)).slice(d, k);
  });
  FinAlgebra mstar = FinAlgebra::make(k, {{ops::star, std::move(star)}}, m.module_names);
  Report rep = check_in_category(mstar, ops::star, cat);
  rep.check = "graph-subalgebra(" + cat.name + ")";
  rep.evaluations += closure.evaluations;
  return {std::move(mstar), std::move(rep)};
}

FinAlgebra trb_ns(const LinOperator& t, const Cocycle& h) {
  Report rep = twisted_rb_identity(t, h);
  if (!rep.passed()) fail(ErrorCode::NotTwistedRB, first_witness(rep));
  const Bimodule& m = t.over;
  const auto img = columns(t.matrix);
  const std::size_t k = m.mdim;
  auto prec = BilinearMap::tabulate(k, k, k, [&](std::size_t i, std::size_t j) {
    return m.right_act(Vector::basis(k, i), img[j]);
  });
  auto succ = BilinearMap::tabulate(k, k, k, [&](std::size_t i, std::size_t j) {
    return m.left_act(img[i], Vector::basis(k, j));
  });
  auto vee = BilinearMap::tabulate(k, k, k, [&](std::size_t i, std::size_t j) { return h(img[i], img[j]); });
  return FinAlgebra::make(k, {{ops::prec, std::move(prec)}, {ops::succ, std::move(succ)}, {ops::vee, std::move(vee)}},
                          m.module_names);
}

TwistedFromNS ns_to_twisted_rb(const FinAlgebra& ns, const CategoryPresentation& cat) {
  Report dbl = double_in_category(ns, make_scheme(SchemeKind::NS), cat);
  if (!dbl.passed()) fail(ErrorCode::NotNSAlgebra, first_witness(dbl));
  const std::size_t d = ns.dim;
  const BilinearMap& prec = ns.product(ops::prec);
  const BilinearMap& succ = ns.product(ops::succ);
  const BilinearMap& vee = ns.product(ops::vee);

  FinAlgebra star = FinAlgebra::make(d, {{cat.op, prec + succ + vee}}, ns.basis_names);
  std::vector<Matrix> left(d, Matrix(d, d)), right(d, Matrix(d, d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        left[i](k, j) = succ.at(i, j, k);
        right[i](k, j) = prec.at(j, i, k);
      }
    }
  }
  Bimodule bimodule = Bimodule::make(star, cat.op, d, std::move(left), std::move(right), std::nullopt, ns.basis_names);
  Cocycle cocycle = Cocycle::make(bimodule, vee);
  LinOperator identity = twisted_rb_operator(cocycle, Matrix::identity(d));

  Report rep{"ns-to-twisted-rb(" + cat.name + ")", {}, 0};
  rep.absorb(is_bimodule(bimodule, cat));
  rep.absorb(is_2cocycle(cocycle, cat));
  rep.absorb(twisted_rb_identity(identity, cocycle));
  rep.sort();
  return {std::move(star), std::move(bimodule), std::move(cocycle), std::move(identity), std::move(rep)};
}

GeneralNSResult general_ns(const Bimodule& m, const Matrix& beta, const BilinearMap& alpha,
                           const CategoryPresentation& cat) {
  const std::size_t d = m.dim(), k = m.mdim;
  require_dim(beta.rows(), d, "beta rows");
  require_dim(beta.cols(), k, "beta columns");
  require_shape(alpha, k, k, k, "alpha");
  const BilinearMap& p = m.base.product(m.base_op);
  const auto img = columns(beta);

  auto prec = BilinearMap::tabulate(k, k, k, [&](std::size_t i, std::size_t j) {
    return m.right_act(Vector::basis(k, i), img[j]);
  });
  auto succ = BilinearMap::tabulate(k, k, k, [&](std::size_t i, std::size_t j) {
    return m.left_act(img[i], Vector::basis(k, j));
  });
  BilinearMap star = prec + succ + alpha;

  const std::size_t dims[] = {k, k};
  Report hom = check_tuples("beta-homomorphism", "beta(m * n) = beta(m)beta(n)", dims,
                            [&](std::span<const std::size_t> t) {
                              return beta.apply(star.on_basis(t[0], t[1])) - p.apply(img[t[0]], img[t[1]]);
                            });
  if (!hom.passed()) fail(ErrorCode::HypothesisFailed, "beta is not a homomorphism: " + first_witness(hom));
  FinAlgebra mstar = FinAlgebra::make(k, {{ops::star, star}}, m.module_names);
  Report in_cat = check_in_category(mstar, ops::star, cat);
  if (!in_cat.passed()) fail(ErrorCode::HypothesisFailed, "(M, star) is not in " + cat.name + ": " + first_witness(in_cat));

  FinAlgebra ns = FinAlgebra::make(
      k, {{ops::prec, std::move(prec)}, {ops::succ, std::move(succ)}, {ops::vee, alpha}}, m.module_names);
  Report rep = double_in_category(ns, make_scheme(SchemeKind::NS), cat);
  return {std::move(ns), std::move(rep)};
}

FinAlgebra tridendriform_as_ns(const FinAlgebra& tri) {
  return FinAlgebra::make(tri.dim,
                          {{ops::prec, tri.product(ops::prec)},
                           {ops::succ, tri.product(ops::succ)},
                           {ops::vee, tri.product(ops::dot)}},
                          tri.basis_names);
}

}  // namespace nsalg
