#include "nsalg/oracle.hpp"

#include <bit>

namespace nsalg::oracle {

namespace {

std::vector<Monomial> trees_on(std::uint32_t lo, std::uint32_t hi, const OpSymbol& op) {
  if (lo == hi) return {Monomial::leaf(lo)};
  std::vector<Monomial> out;
  for (std::uint32_t k = lo; k < hi; ++k) {
    auto left = trees_on(lo, k, op);
    auto right = trees_on(k + 1, hi, op);
    for (const auto& l : left) {
      for (const auto& r : right) out.push_back(Monomial::node(op, l, r));
    }
  }
  return out;
}

// Flattened tree: leaves carry their 0-based label, internal nodes two child indices.
struct Node {
  int left = -1;
  int right = -1;
  std::size_t leaf = 0;
  std::size_t width = 1;  // number of leaves below
};

int flatten(const Monomial& m, std::vector<Node>& out) {
  if (m.is_leaf()) {
    out.push_back(Node{-1, -1, m.label() - 1, 1});
    return static_cast<int>(out.size() - 1);
  }
  int l = flatten(m.left(), out);
  int r = flatten(m.right(), out);
  out.push_back(Node{l, r, 0, out[l].width + out[r].width});
  return static_cast<int>(out.size() - 1);
}

std::vector<Matrix> powers(const Matrix& n, unsigned top) {
  std::vector<Matrix> out{Matrix::identity(n.rows())};
  for (unsigned k = 1; k <= top; ++k) out.push_back(out.back() * n);
  return out;
}

void require_nijenhuis(const LinOperator& n) {
  Report r = check_nijenhuis(n);
  if (!r.passed()) fail(ErrorCode::NotNijenhuis, describe(r.violations.front()));
}

}  // namespace

std::vector<Monomial> enumerate_paren_trees(std::size_t n, const OpSymbol& op) {
  if (n == 0) return {};
  return trees_on(1, static_cast<std::uint32_t>(n), op);
}

std::size_t catalan(std::size_t n) {
  std::size_t c = 1;
  for (std::size_t k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

Report pairsij_identity(const LinOperator& n, unsigned i, unsigned j) {
  if (!is_standard(n.over)) fail(ErrorCode::NotEndomorphism, "pairsij needs an operator on the standard bimodule");
  const FinAlgebra& a = n.over.base;
  const BilinearMap& p = a.product(n.over.base_op);
  const auto pw = powers(n.matrix, i + j);
  const std::size_t dims[] = {a.dim, a.dim};
  return check_tuples("pairsij", "(" + std::to_string(i) + "," + std::to_string(j) + ")", dims,
                      [&](std::span<const std::size_t> t) {
                        const Vector x = a.basis(t[0]), y = a.basis(t[1]);
                        const Vector nix = pw[i].apply(x), njy = pw[j].apply(y);
                        Vector rhs = pw[j].apply(p.apply(nix, y)) + pw[i].apply(p.apply(x, njy)) -
                                     pw[i + j].apply(p.on_basis(t[0], t[1]));
                        return p.apply(nix, njy) - rhs;
                      });
}

Report verify_pairsij(const LinOperator& n, unsigned max_pow) {
  if (max_pow < 2 || max_pow > kMaxPowLimit) {
    fail(ErrorCode::LengthOutOfRange, "max power must lie in 2.." + std::to_string(kMaxPowLimit));
  }
  require_nijenhuis(n);
  Report total{"pairsij(max-pow " + std::to_string(max_pow) + ")", {}, 0};
  for (unsigned i = 1; i < max_pow; ++i) {
    for (unsigned j = 1; i + j <= max_pow; ++j) total.absorb(pairsij_identity(n, i, j));
  }
  total.sort();
  return total;
}

Report xstar_identity(const LinOperator& n, std::size_t length) {
  if (!is_standard(n.over)) fail(ErrorCode::NotEndomorphism, "xstar needs an operator on the standard bimodule");
  const FinAlgebra& a = n.over.base;
  const std::size_t d = a.dim;
  const BilinearMap& p = a.product(n.over.base_op);
  const auto img = [&] {
    std::vector<Vector> v;
    for (std::size_t j = 0; j < d; ++j) v.push_back(n.matrix.column(j));
    return v;
  }();
  const BilinearMap star = BilinearMap::tabulate(d, d, d, [&](std::size_t i, std::size_t j) {
    return p.apply(img[i], a.basis(j)) + p.apply(a.basis(i), img[j]) - n(p.on_basis(i, j));
  });
  const auto pw = powers(n.matrix, static_cast<unsigned>(length));

  Report total{"xstar(length " + std::to_string(length) + ")", {}, 0};
  for (const auto& tree : enumerate_paren_trees(length)) {
    std::vector<Node> nodes;
    const int root = flatten(tree, nodes);

    // vals[node][mask]: the subtree evaluated with N applied to the leaves in mask.
    auto decorated = [&](std::span<const std::size_t> t) {
      std::vector<std::vector<Vector>> vals(nodes.size());
      std::vector<Vector> plain_star(nodes.size());
      for (std::size_t k = 0; k < nodes.size(); ++k) {
        const Node& nd = nodes[k];
        if (nd.left < 0) {
          vals[k] = {a.basis(t[nd.leaf]), img[t[nd.leaf]]};
          plain_star[k] = a.basis(t[nd.leaf]);
          continue;
        }
        const auto& lv = vals[nd.left];
        const auto& rv = vals[nd.right];
        const std::size_t s = nodes[nd.left].width;
        std::vector<Vector> out(std::size_t{1} << nd.width);
        for (std::size_t lm = 0; lm < lv.size(); ++lm) {
          for (std::size_t rm = 0; rm < rv.size(); ++rm) out[lm | (rm << s)] = p.apply(lv[lm], rv[rm]);
        }
        vals[k] = std::move(out);
        plain_star[k] = star.apply(plain_star[nd.left], plain_star[nd.right]);
      }
      return std::make_pair(std::move(vals[root]), std::move(plain_star[root]));
    };

    const std::vector<std::size_t> dims(length, d);
    total.absorb(check_tuples(total.check, render_text(tree), dims, [&](std::span<const std::size_t> t) {
      auto [vals, xstar] = decorated(t);
      std::vector<Vector> xj(length + 1, Vector(d));
      for (std::size_t mask = 0; mask < vals.size(); ++mask) xj[std::popcount(mask)] += vals[mask];
      Vector rhs(d);
      for (std::size_t i = 0; i < length; ++i) {
        Vector term = pw[i].apply(xj[length - 1 - i]);
        rhs.axpy(i % 2 == 0 ? Rat(1) : Rat(-1), term);
      }
      return Vector::concat(xstar - rhs, xj[length] - n(xstar));
    }));
  }
  total.sort();
  return total;
}

Report verify_xstar(const LinOperator& n, std::size_t max_len) {
  if (max_len < 2 || max_len > 5) fail(ErrorCode::LengthOutOfRange, "max length must lie in 2..5");
  require_nijenhuis(n);
  Report total{"xstar(max-len " + std::to_string(max_len) + ")", {}, 0};
  for (std::size_t len = 2; len <= max_len; ++len) total.absorb(xstar_identity(n, len));
  total.sort();
  return total;
}

Report check_relations(const FinAlgebra& alg, const std::vector<Relation>& relations, const std::string& check) {
  ProductBinding<Vector> bind;
  for (const auto& [op, table] : alg.products) {
    const BilinearMap* t = &table;
    bind[op] = [t](const Vector& x, const Vector& y) { return t->apply(x, y); };
  }
  Report total{check, {}, 0};
  for (const auto& rel : relations) {
    std::vector<std::size_t> dims(rel.arity, alg.dim);
    total.absorb(check_tuples(check, render_text(rel), dims, [&](std::span<const std::size_t> tuple) {
      std::vector<Vector> args;
      for (auto i : tuple) args.push_back(alg.basis(i));
      return evaluate_relation<Vector>(rel, args, bind, Vector(alg.dim));
    }));
  }
  total.sort();
  return total;
}

CrossCheck cross_check_split(const CategoryPresentation& cat, const FinAlgebra& ns) {
  const SplitScheme scheme = make_scheme(SchemeKind::NS);
  CrossCheck out;
  out.relations = check_relations(ns, derive_split_relations(cat, scheme).relations(), "ns-relations(" + cat.name + ")");
  out.doubled = double_in_category(ns, scheme, cat);
  return out;
}

}  // namespace nsalg::oracle
