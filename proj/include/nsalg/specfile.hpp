#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nsalg/findim.hpp"

namespace nsalg {

using Json = nlohmann::ordered_json;

// Relation <-> {"arity": n, "terms": [{"coeff": "p/q", "tree": ["op", l, r] | leaf}]}
Json relation_to_json(const Relation& rel);
Relation relation_from_json(const Json& j);

struct CategorySpec {
  std::string name;
  std::string op = "mu";
  /// Empty means "look the name up in the catalog".
  std::vector<Relation> relations;

  friend bool operator==(const CategorySpec&, const CategorySpec&) = default;
};

struct AlgebraSpec {
  std::size_t dim = 0;
  std::vector<std::string> basis_names;
  std::map<std::string, BilinearMap> products;

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

struct BimoduleSpec {
  /// The algebra acting on itself; left/right/mdim are then derived.
  bool standard = false;
  bool with_product = false;
  std::size_t mdim = 0;
  std::vector<std::string> module_names;
  std::vector<Matrix> left;
  std::vector<Matrix> right;
  std::optional<BilinearMap> mod_product;

  friend bool operator==(const BimoduleSpec&, const BimoduleSpec&) = default;
};

struct OperatorSpec {
  Matrix matrix;  // rows index A, columns index M
  std::string kind;
  std::optional<Rat> lambda;

  friend bool operator==(const OperatorSpec&, const OperatorSpec&) = default;
};

struct CocycleSpec {
  BilinearMap values;  // (d, d, m)

  friend bool operator==(const CocycleSpec&, const CocycleSpec&) = default;
};

/// Versioned JSON input for the CLI. Rationals are strings "p/q" (integers
/// are also accepted); tensors are nested arrays indexed c[i][j][k] with
/// e_i e_j = sum_k c[i][j][k] e_k; matrices are arrays of rows and act on
/// column vectors.
struct SpecFile {
  int version = 1;
  std::optional<std::string> description;
  std::optional<CategorySpec> category;
  std::optional<AlgebraSpec> algebra;
  std::optional<BimoduleSpec> bimodule;
  std::optional<OperatorSpec> op;
  std::optional<CocycleSpec> cocycle;

  friend bool operator==(const SpecFile&, const SpecFile&) = default;
};

/// Throws Error(ParseError) with line and column for syntax errors and a
/// JSON pointer for semantic ones.
SpecFile parse_spec(std::string_view text);
SpecFile load_spec(const std::string& path);
Json spec_to_json(const SpecFile& spec);
std::string dump_spec(const SpecFile& spec);

// Materialization; missing sections raise ParseError.
CategoryPresentation spec_category(const SpecFile& spec);
FinAlgebra spec_algebra(const SpecFile& spec);
/// The bimodule section, or the standard bimodule (with . = mu for RB
/// operators) when absent.
Bimodule spec_bimodule(const SpecFile& spec);
std::optional<Cocycle> spec_cocycle(const SpecFile& spec);
LinOperator spec_operator(const SpecFile& spec);

OperatorKind parse_operator_kind(std::string_view name);

AlgebraSpec algebra_spec(const FinAlgebra& alg);

}  // namespace nsalg
