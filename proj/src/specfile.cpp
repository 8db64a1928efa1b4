#include "nsalg/specfile.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace nsalg {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  fail(ErrorCode::ParseError, (path.empty() ? "/" : path) + ": " + what);
}

void only_keys(const Json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) bad(path, "expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) bad(path, "unknown field '" + key + "'");
  }
}

const Json& need(const Json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(path, "missing field '" + key + "'");
  return *it;
}

Rat read_rat(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Rat(j.get<std::uint64_t>()) : Rat(j.get<std::int64_t>());
  if (!j.is_string()) bad(path, "expected a rational written as \"p/q\" or an integer");
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

std::size_t read_size(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    bad(path, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::vector<std::string> read_names(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) bad(path + "/" + std::to_string(i), "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  return j;
}

Matrix read_matrix(const Json& j, const std::string& path) {
  array_at(j, path);
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  std::vector<Rat> data;
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = path + "/" + std::to_string(r);
    const Json& row = array_at(j[r], rp);
    if (r == 0) cols = row.size();
    if (row.size() != cols) bad(rp, "ragged matrix row");
    for (std::size_t c = 0; c < cols; ++c) data.push_back(read_rat(row[c], rp + "/" + std::to_string(c)));
  }
  return Matrix(rows, cols, std::move(data));
}

BilinearMap read_tensor(const Json& j, const std::string& path) {
  array_at(j, path);
  const std::size_t p = j.size();
  std::size_t q = 0, r = 0;
  std::vector<Rat> data;
  for (std::size_t i = 0; i < p; ++i) {
    const std::string ip = path + "/" + std::to_string(i);
    const Json& slice = array_at(j[i], ip);
    if (i == 0) q = slice.size();
    if (slice.size() != q) bad(ip, "ragged tensor slice");
    for (std::size_t k = 0; k < q; ++k) {
      const std::string kp = ip + "/" + std::to_string(k);
      const Json& fiber = array_at(slice[k], kp);
      if (i == 0 && k == 0) r = fiber.size();
      if (fiber.size() != r) bad(kp, "ragged tensor fiber");
      for (std::size_t l = 0; l < r; ++l) data.push_back(read_rat(fiber[l], kp + "/" + std::to_string(l)));
    }
  }
  return BilinearMap(p, q, r, std::move(data));
}

Json rat_json(const Rat& r) { return r.str(); }

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json tensor_json(const BilinearMap& b) {
  Json out = Json::array();
  for (std::size_t i = 0; i < b.left_dim(); ++i) {
    Json slice = Json::array();
    for (std::size_t j = 0; j < b.right_dim(); ++j) {
      Json fiber = Json::array();
      for (std::size_t k = 0; k < b.out_dim(); ++k) fiber.push_back(rat_json(b.at(i, j, k)));
      slice.push_back(std::move(fiber));
    }
    out.push_back(std::move(slice));
  }
  return out;
}

Json tree_json(const Monomial& m) {
  if (m.is_leaf()) return m.label();
  return Json::array({m.op().name, tree_json(m.left()), tree_json(m.right())});
}

Monomial tree_from_json(const Json& j, const std::string& path) {
  if (j.is_number_unsigned() || j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    if (v < 1) bad(path, "leaf labels start at 1");
    return Monomial::leaf(static_cast<std::uint32_t>(v));
  }
  if (!j.is_array() || j.size() != 3 || !j[0].is_string()) bad(path, "expected a leaf label or [op, left, right]");
  return Monomial::node(OpSymbol{j[0].get<std::string>()}, tree_from_json(j[1], path + "/1"),
                        tree_from_json(j[2], path + "/2"));
}

Relation relation_at(const Json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_relation(j.get<std::string>());
    } catch (const Error& e) {
      bad(path, e.what());
    }
  }
  only_keys(j, path, {"arity", "terms"});
  Relation rel;
  rel.arity = read_size(need(j, "arity", path), path + "/arity");
  const Json& terms = array_at(need(j, "terms", path), path + "/terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tp = path + "/terms/" + std::to_string(i);
    only_keys(terms[i], tp, {"coeff", "tree"});
    rel.terms.push_back(Term{read_rat(need(terms[i], "coeff", tp), tp + "/coeff"),
                             tree_from_json(need(terms[i], "tree", tp), tp + "/tree")});
  }
  try {
    return canon(rel);
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < std::min(byte > 0 ? byte - 1 : 0, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

Json relation_to_json(const Relation& rel) {
  Json terms = Json::array();
  for (const auto& t : rel.terms) terms.push_back(Json{{"coeff", rat_json(t.coeff)}, {"tree", tree_json(t.mono)}});
  return Json{{"arity", rel.arity}, {"terms", std::move(terms)}};
}

Relation relation_from_json(const Json& j) { return relation_at(j, ""); }

SpecFile parse_spec(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte);
    fail(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
  }

  only_keys(root, "", {"version", "description", "category", "algebra", "bimodule", "operator", "cocycle"});
  SpecFile spec;
  const Json& version = need(root, "version", "");
  if (!version.is_number_integer() || version.get<int>() != 1) bad("/version", "only version 1 is supported");
  if (root.contains("description")) {
    if (!root["description"].is_string()) bad("/description", "expected a string");
    spec.description = root["description"].get<std::string>();
  }

  if (root.contains("category")) {
    const Json& c = root["category"];
    only_keys(c, "/category", {"name", "op", "relations"});
    CategorySpec cs;
    if (!need(c, "name", "/category").is_string()) bad("/category/name", "expected a string");
    cs.name = c["name"].get<std::string>();
    if (c.contains("op")) {
      if (!c["op"].is_string()) bad("/category/op", "expected a string");
      cs.op = c["op"].get<std::string>();
    }
    if (c.contains("relations")) {
      const Json& rels = array_at(c["relations"], "/category/relations");
      for (std::size_t i = 0; i < rels.size(); ++i) {
        cs.relations.push_back(relation_at(rels[i], "/category/relations/" + std::to_string(i)));
      }
    }
    spec.category = std::move(cs);
  }

  if (root.contains("algebra")) {
    const Json& a = root["algebra"];
    only_keys(a, "/algebra", {"dim", "basisNames", "products"});
    AlgebraSpec as;
    as.dim = read_size(need(a, "dim", "/algebra"), "/algebra/dim");
    if (a.contains("basisNames")) as.basis_names = read_names(a["basisNames"], "/algebra/basisNames");
    const Json& prods = need(a, "products", "/algebra");
    if (!prods.is_object()) bad("/algebra/products", "expected an object mapping op names to tensors");
    for (const auto& [name, tensor] : prods.items()) {
      as.products.emplace(name, read_tensor(tensor, "/algebra/products/" + name));
    }
    spec.algebra = std::move(as);
  }

  if (root.contains("bimodule")) {
    const Json& b = root["bimodule"];
    only_keys(b, "/bimodule", {"standard", "withProduct", "mdim", "moduleNames", "left", "right", "modProduct"});
    BimoduleSpec bs;
    if (b.contains("standard")) {
      if (!b["standard"].is_boolean()) bad("/bimodule/standard", "expected a boolean");
      bs.standard = b["standard"].get<bool>();
    }
    if (b.contains("withProduct")) {
      if (!b["withProduct"].is_boolean()) bad("/bimodule/withProduct", "expected a boolean");
      bs.with_product = b["withProduct"].get<bool>();
    }
    if (!bs.standard) {
      bs.mdim = read_size(need(b, "mdim", "/bimodule"), "/bimodule/mdim");
      if (b.contains("moduleNames")) bs.module_names = read_names(b["moduleNames"], "/bimodule/moduleNames");
      for (auto [key, target] : {std::pair{"left", &bs.left}, std::pair{"right", &bs.right}}) {
        const std::string p = std::string("/bimodule/") + key;
        const Json& mats = array_at(need(b, key, "/bimodule"), p);
        for (std::size_t i = 0; i < mats.size(); ++i) target->push_back(read_matrix(mats[i], p + "/" + std::to_string(i)));
      }
      if (b.contains("modProduct")) bs.mod_product = read_tensor(b["modProduct"], "/bimodule/modProduct");
    } else if (b.contains("mdim") || b.contains("left") || b.contains("right") || b.contains("modProduct")) {
      bad("/bimodule", "a standard bimodule takes no explicit actions");
    }
    spec.bimodule = std::move(bs);
  }

  if (root.contains("operator")) {
    const Json& o = root["operator"];
    only_keys(o, "/operator", {"matrix", "kind", "lambda"});
    OperatorSpec os;
    os.matrix = read_matrix(need(o, "matrix", "/operator"), "/operator/matrix");
    if (!need(o, "kind", "/operator").is_string()) bad("/operator/kind", "expected a string");
    os.kind = o["kind"].get<std::string>();
    try {
      parse_operator_kind(os.kind);
    } catch (const Error& e) {
      bad("/operator/kind", e.what());
    }
    if (o.contains("lambda")) os.lambda = read_rat(o["lambda"], "/operator/lambda");
    spec.op = std::move(os);
  }

  if (root.contains("cocycle")) {
    const Json& c = root["cocycle"];
    only_keys(c, "/cocycle", {"values"});
    spec.cocycle = CocycleSpec{read_tensor(need(c, "values", "/cocycle"), "/cocycle/values")};
  }
  return spec;
}

SpecFile load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_spec(ss.str());
  } catch (const Error& e) {
    fail(ErrorCode::ParseError, path + ": " + std::string(e.what()).substr(std::string("ParseError: ").size()));
  }
}

Json spec_to_json(const SpecFile& spec) {
  Json root;
  root["version"] = spec.version;
  if (spec.description) root["description"] = *spec.description;
  if (spec.category) {
    Json c;
    c["name"] = spec.category->name;
    if (spec.category->op != "mu") c["op"] = spec.category->op;
    if (!spec.category->relations.empty()) {
      Json rels = Json::array();
      for (const auto& r : spec.category->relations) rels.push_back(relation_to_json(r));
      c["relations"] = std::move(rels);
    }
    root["category"] = std::move(c);
  }
  if (spec.algebra) {
    Json a;
    a["dim"] = spec.algebra->dim;
    if (!spec.algebra->basis_names.empty()) a["basisNames"] = spec.algebra->basis_names;
    Json prods = Json::object();
    for (const auto& [name, t] : spec.algebra->products) prods[name] = tensor_json(t);
    a["products"] = std::move(prods);
    root["algebra"] = std::move(a);
  }
  if (spec.bimodule) {
    const auto& b = *spec.bimodule;
    Json j;
    if (b.standard) {
      j["standard"] = true;
      if (b.with_product) j["withProduct"] = true;
    } else {
      j["mdim"] = b.mdim;
      if (!b.module_names.empty()) j["moduleNames"] = b.module_names;
      Json left = Json::array(), right = Json::array();
      for (const auto& m : b.left) left.push_back(matrix_json(m));
      for (const auto& m : b.right) right.push_back(matrix_json(m));
      j["left"] = std::move(left);
      j["right"] = std::move(right);
      if (b.mod_product) j["modProduct"] = tensor_json(*b.mod_product);
    }
    root["bimodule"] = std::move(j);
  }
  if (spec.op) {
    Json o;
    o["kind"] = spec.op->kind;
    if (spec.op->lambda) o["lambda"] = rat_json(*spec.op->lambda);
    o["matrix"] = matrix_json(spec.op->matrix);
    root["operator"] = std::move(o);
  }
  if (spec.cocycle) root["cocycle"] = Json{{"values", tensor_json(spec.cocycle->values)}};
  return root;
}

std::string dump_spec(const SpecFile& spec) { return spec_to_json(spec).dump(2) + "\n"; }

namespace {

[[noreturn]] void missing(const std::string& section) {
  fail(ErrorCode::ParseError, "spec file has no '" + section + "' section");
}

}  // namespace

CategoryPresentation spec_category(const SpecFile& spec) {
  if (!spec.category) missing("category");
  if (spec.category->relations.empty()) return catalog(spec.category->name);
  return make_presentation(spec.category->name, OpSymbol{spec.category->op}, spec.category->relations);
}

FinAlgebra spec_algebra(const SpecFile& spec) {
  if (!spec.algebra) missing("algebra");
  std::map<OpSymbol, BilinearMap> products;
  for (const auto& [name, t] : spec.algebra->products) products.emplace(OpSymbol{name}, t);
  return FinAlgebra::make(spec.algebra->dim, std::move(products), spec.algebra->basis_names);
}

namespace {

OpSymbol base_op(const SpecFile& spec) { return spec.category ? OpSymbol{spec.category->op} : ops::mu; }

}  // namespace

Bimodule spec_bimodule(const SpecFile& spec) {
  FinAlgebra alg = spec_algebra(spec);
  const OpSymbol op = base_op(spec);
  if (!spec.bimodule) {
    bool rb = spec.op && parse_operator_kind(spec.op->kind) == OperatorKind::RB;
    return standard_bimodule(alg, op, rb);
  }
  const auto& b = *spec.bimodule;
  if (b.standard) return standard_bimodule(alg, op, b.with_product);
  return Bimodule::make(std::move(alg), op, b.mdim, b.left, b.right, b.mod_product, b.module_names);
}

std::optional<Cocycle> spec_cocycle(const SpecFile& spec) {
  if (!spec.cocycle) return std::nullopt;
  return Cocycle::make(spec_bimodule(spec), spec.cocycle->values);
}

OperatorKind parse_operator_kind(std::string_view name) {
  for (auto k : {OperatorKind::Nijenhuis, OperatorKind::RB, OperatorKind::RelativeRB, OperatorKind::TwistedRB,
                 OperatorKind::Reynolds}) {
    if (to_string(k) == name) return k;
  }
  fail(ErrorCode::KindMismatch, "unknown operator kind '" + std::string(name) + "'");
}

LinOperator spec_operator(const SpecFile& spec) {
  if (!spec.op) missing("operator");
  const auto& o = *spec.op;
  const OperatorKind kind = parse_operator_kind(o.kind);
  const Rat lambda = o.lambda.value_or(Rat());
  const OpSymbol op = base_op(spec);
  switch (kind) {
    case OperatorKind::Nijenhuis: return nijenhuis_operator(spec_algebra(spec), o.matrix, op);
    case OperatorKind::RB: return rb_operator(spec_algebra(spec), o.matrix, lambda, op);
    case OperatorKind::RelativeRB: return relative_rb_operator(spec_bimodule(spec), o.matrix, lambda);
    case OperatorKind::TwistedRB: {
      auto h = spec_cocycle(spec);
      if (!h) missing("cocycle");
      return twisted_rb_operator(*h, o.matrix);
    }
    case OperatorKind::Reynolds: return reynolds_operator(spec_algebra(spec), o.matrix, op);
  }
  missing("operator");
}

AlgebraSpec algebra_spec(const FinAlgebra& alg) {
  AlgebraSpec s{alg.dim, alg.basis_names, {}};
  for (const auto& [op, t] : alg.products) s.products.emplace(op.name, t);
  return s;
}

}  // namespace nsalg
