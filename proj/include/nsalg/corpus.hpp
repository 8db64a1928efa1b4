#pragma once

#include <string>
#include <vector>

#include "nsalg/findim.hpp"

namespace nsalg::corpus {

struct ExampleAlgebra {
  std::string name;
  std::string description;
  FinAlgebra algebra;                   // product mu
  std::vector<std::string> categories;  // catalog names it belongs to
};

/// A = A1 + A2 with both summands subalgebras; p1, p2 the two projections.
struct Twilled {
  std::string name;
  FinAlgebra algebra;
  Matrix p1;
  Matrix p2;
};

/// Builds a product table from (i, j, k, c) entries meaning e_i e_j += c e_k.
FinAlgebra from_entries(std::size_t dim, std::vector<std::string> names,
                        const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rat>>& entries);

FinAlgebra upper_triangular2();  // E11, E12, E22
FinAlgebra sl2();                // e, f, h
FinAlgebra twilled4();           // B + B with B = span{e, n}, ee = e, en = n, and product (a,x)(a',x') = (aa', ax'+xa'+xx')
FinAlgebra truncated_poly3();    // Q[x]/(x^3)
FinAlgebra nap2();               // y x = x
FinAlgebra leibniz2();           // y x = x, y y = x

std::vector<ExampleAlgebra> algebras();
/// Throws UnknownCategory for an unknown name.
ExampleAlgebra algebra(const std::string& name);

std::vector<Twilled> twilled();

/// Q^2 as a UT2-bimodule: left action by matrix multiplication, right action zero.
Bimodule column_module();
/// R(v) = v_2 E12, a relative RB operator of weight 0 on column_module().
Matrix column_module_rb();

}  // namespace nsalg::corpus
