#include "nsalg/corpus.hpp"

#include <tuple>

namespace nsalg::corpus {

using Entry = std::tuple<std::size_t, std::size_t, std::size_t, Rat>;

FinAlgebra from_entries(std::size_t dim, std::vector<std::string> names, const std::vector<Entry>& entries) {
  std::vector<Rat> data(dim * dim * dim);
  for (const auto& [i, j, k, c] : entries) data[(i * dim + j) * dim + k] += c;
  return FinAlgebra::make(dim, {{ops::mu, BilinearMap(dim, dim, dim, std::move(data))}}, std::move(names));
}

FinAlgebra upper_triangular2() {
  // 0 = E11, 1 = E12, 2 = E22
  return from_entries(3, {"E11", "E12", "E22"},
                      {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}});
}

FinAlgebra sl2() {
  // 0 = e, 1 = f, 2 = h
  return from_entries(3, {"e", "f", "h"},
                      {{2, 0, 0, 2}, {0, 2, 0, -2}, {2, 1, 1, -2}, {1, 2, 1, 2}, {0, 1, 2, 1}, {1, 0, 2, -1}});
}

FinAlgebra twilled4() {
  // B: ee = e, en = n. Basis (e,0), (n,0), (0,e), (0,n).
  const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> b = {{0, 0, 0}, {0, 1, 1}};
  std::vector<Entry> entries;
  for (const auto& [i, j, k] : b) {
    entries.push_back({i, j, k, 1});              // aa'
    entries.push_back({i, 2 + j, 2 + k, 1});      // a x'
    entries.push_back({2 + i, j, 2 + k, 1});      // x a'
    entries.push_back({2 + i, 2 + j, 2 + k, 1});  // x x'
  }
  return from_entries(4, {"e", "n", "e'", "n'"}, entries);
}

FinAlgebra truncated_poly3() {
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; i + j < 3; ++j) entries.push_back({i, j, i + j, 1});
  }
  return from_entries(3, {"1", "x", "x2"}, entries);
}

FinAlgebra nap2() { return from_entries(2, {"x", "y"}, {{1, 0, 0, 1}}); }

FinAlgebra leibniz2() { return from_entries(2, {"x", "y"}, {{1, 0, 0, 1}, {1, 1, 0, 1}}); }

std::vector<ExampleAlgebra> algebras() {
  return {
      {"ut2", "2x2 upper-triangular matrices", upper_triangular2(), {"associative", "pre-lie"}},
      {"sl2", "sl(2) with [h,e]=2e, [h,f]=-2f, [e,f]=h", sl2(), {"lie", "leibniz"}},
      {"twilled4", "semidirect sum B + B of a 2-dim associative algebra", twilled4(), {"associative", "pre-lie", "nap"}},
      {"trunc-poly3", "Q[x]/(x^3)", truncated_poly3(),
       {"associative", "commutative-associative", "nap", "pre-lie"}},
      {"nap2", "2-dim NAP algebra y x = x", nap2(), {"leibniz", "pre-lie", "nap"}},
      {"leibniz2", "2-dim Leibniz algebra y x = x, y y = x", leibniz2(), {"leibniz", "pre-lie", "nap"}},
  };
}

ExampleAlgebra algebra(const std::string& name) {
  for (auto& a : algebras()) {
    if (a.name == name) return a;
  }
  fail(ErrorCode::UnknownCategory, "no bundled algebra named '" + name + "'");
}

namespace {

Matrix diagonal(std::size_t n, const std::vector<std::size_t>& ones) {
  Matrix m(n, n);
  for (auto i : ones) m(i, i) = 1;
  return m;
}

}  // namespace

std::vector<Twilled> twilled() {
  return {
      {"ut2", upper_triangular2(), diagonal(3, {0, 1}), diagonal(3, {2})},
      {"sl2", sl2(), diagonal(3, {0, 2}), diagonal(3, {1})},
      {"twilled4", twilled4(), diagonal(4, {0, 1}), diagonal(4, {2, 3})},
  };
}

Bimodule column_module() {
  FinAlgebra ut = upper_triangular2();
  // E11 (x, y) = (x, 0), E12 (x, y) = (y, 0), E22 (x, y) = (0, y)
  std::vector<Matrix> left = {Matrix(2, 2, {1, 0, 0, 0}), Matrix(2, 2, {0, 1, 0, 0}), Matrix(2, 2, {0, 0, 0, 1})};
  std::vector<Matrix> right(3, Matrix(2, 2));
  return Bimodule::make(ut, ops::mu, 2, std::move(left), std::move(right), std::nullopt, {"v1", "v2"});
}

Matrix column_module_rb() {
  Matrix r(3, 2);
  r(1, 1) = 1;
  return r;
}

}  // namespace nsalg::corpus
