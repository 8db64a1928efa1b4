#include "nsalg/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "nsalg/corpus.hpp"
#include "nsalg/oracle.hpp"

namespace nsalg::cli {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotNijenhuis:
    case ErrorCode::NotRelativeRB:
    case ErrorCode::InvalidCocycle:
    case ErrorCode::NotTwistedRB:
    case ErrorCode::GraphNotClosed:
    case ErrorCode::NotNSAlgebra:
    case ErrorCode::HypothesisFailed:
      return kViolated;
    default:
      return kMalformed;
  }
}

// -- split rendering ----------------------------------------------------------

namespace {

std::string subset_text(const std::vector<std::uint32_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string render_one(const Relation& rel, Format f) {
  return f == Format::Tex ? render_tex(rel) + " = 0" : render_text(rel);
}

Json rel_json(const Relation& rel) {
  return Json{{"text", render_text(rel)}, {"tex", render_tex(rel)}, {"tree", relation_to_json(rel)}};
}

}  // namespace

std::string render_split(const SplitRelationSet& set, const SplitOptions& opts) {
  const bool can_fold = opts.fold_star && set.scheme.kind != SchemeKind::Dendriform;
  auto shown = [&](const Relation& r) { return can_fold ? fold_star(r, set.scheme) : r; };
  const std::string comment = opts.format == Format::Tex ? "% " : "# ";

  if (opts.reduce_anticommutative) {
    const auto reduced = reduce_anticommutative(set);
    if (opts.format == Format::Json) {
      Json j{{"category", set.source.name}, {"scheme", set.scheme.name}, {"reduced", Json::array()}};
      for (const auto& r : reduced) j["reduced"].push_back(rel_json(shown(r)));
      return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << comment << set.source.name << " / " << set.scheme.name << ", reduced by anticommutativity\n";
    for (const auto& r : reduced) os << render_one(shown(r), opts.format) << "\n";
    return os.str();
  }

  if (opts.format == Format::Json) {
    Json j{{"category", set.source.name}, {"scheme", set.scheme.name}, {"sources", Json::array()}};
    for (const auto& pr : set.per_relation) {
      Json s{{"source", rel_json(pr.source)}, {"derived", Json::array()}};
      for (const auto& d : pr.derived) s["derived"].push_back(Json{{"subset", d.subset}, {"relation", rel_json(shown(d.relation))}});
      if (pr.star) s["star"] = rel_json(shown(*pr.star));
      if (pr.extra) s["extra"] = rel_json(shown(*pr.extra));
      j["sources"].push_back(std::move(s));
    }
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << comment << set.source.name << " / " << set.scheme.name << "\n";
  for (std::size_t i = 0; i < set.per_relation.size(); ++i) {
    const auto& pr = set.per_relation[i];
    os << comment << "source " << i + 1 << ": " << render_text(pr.source) << "\n";
    for (const auto& d : pr.derived) {
      if (opts.format == Format::Tex) os << comment << subset_text(d.subset) << "\n";
      else os << subset_text(d.subset) << " ";
      os << render_one(shown(d.relation), opts.format) << "\n";
    }
    for (auto [label, rel] : {std::pair{"star", &pr.star}, std::pair{"extra", &pr.extra}}) {
      if (!*rel) continue;
      if (opts.format == Format::Tex) os << comment << label << "\n";
      else os << label << " ";
      os << render_one(shown(**rel), opts.format) << "\n";
    }
  }
  return os.str();
}

// -- bundled specs ------------------------------------------------------------

std::vector<std::pair<std::string, SpecFile>> bundled_specs() {
  std::vector<std::pair<std::string, SpecFile>> out;
  auto with_alg = [](const std::string& cat, const FinAlgebra& alg, std::string description) {
    SpecFile s;
    s.description = std::move(description);
    s.category = CategorySpec{cat, "mu", {}};
    s.algebra = algebra_spec(alg);
    return s;
  };

  for (const auto& name : catalog_names()) {
    SpecFile s;
    s.description = "presentation of the " + name + " category";
    s.category = CategorySpec{name, "mu", catalog(name).relations};
    out.emplace_back("category-" + name, std::move(s));
  }
  for (const auto& ex : corpus::algebras()) {
    out.emplace_back(ex.name, with_alg(ex.categories.front(), ex.algebra, ex.description));
  }
  for (const auto& tw : corpus::twilled()) {
    const std::string cat = corpus::algebra(tw.name).categories.front();
    SpecFile s = with_alg(cat, tw.algebra, "projection onto the first summand of a twilled decomposition");
    s.op = OperatorSpec{tw.p1, "nijenhuis", std::nullopt};
    out.emplace_back(tw.name + "-twilled", std::move(s));
  }
  {
    const FinAlgebra sl2 = corpus::sl2();
    SpecFile s = with_alg("lie", sl2, "identity as a Nijenhuis operator");
    s.op = OperatorSpec{Matrix::identity(sl2.dim), "nijenhuis", std::nullopt};
    out.emplace_back("sl2-identity", std::move(s));
  }
  {
    const Bimodule m = corpus::column_module();
    SpecFile s = with_alg("associative", m.base, "relative Rota-Baxter operator of weight 0 on column vectors");
    s.bimodule = BimoduleSpec{false, false, m.mdim, m.module_names, m.left, m.right, std::nullopt};
    s.op = OperatorSpec{corpus::column_module_rb(), "relative-rb", Rat(0)};
    out.emplace_back("ut2-column-rb", std::move(s));
  }
  {
    const auto tw = corpus::twilled().front();
    SpecFile s = with_alg("associative", tw.algebra, "Rota-Baxter operator -P1 of weight 1");
    s.op = OperatorSpec{Rat(-1) * tw.p1, "rb", Rat(1)};
    out.emplace_back("ut2-rb", std::move(s));
  }
  {
    const FinAlgebra ut = corpus::upper_triangular2();
    SpecFile s = with_alg("associative", ut, "identity as a Reynolds operator");
    s.op = OperatorSpec{Matrix::identity(ut.dim), "reynolds", std::nullopt};
    out.emplace_back("ut2-reynolds", std::move(s));
  }
  {
    const auto tw = corpus::twilled().back();
    const FinAlgebra ns = nijenhuis_ns(nijenhuis_operator(tw.algebra, tw.p1));
    out.emplace_back("twilled4-ns", with_alg("associative", ns, "NS algebra induced by a twilled projection"));
  }
  return out;
}

std::vector<std::string> export_specs(const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> names;
  for (const auto& [name, spec] : bundled_specs()) {
    const auto path = std::filesystem::path(dir) / (name + ".json");
    std::ofstream f(path);
    if (!f) fail(ErrorCode::ParseError, "cannot write '" + path.string() + "'");
    f << dump_spec(spec);
    names.push_back(path.string());
  }
  return names;
}

// -- commands -----------------------------------------------------------------

namespace {

constexpr std::size_t kMaxWitnesses = 10;

int print_report(const Report& r, std::ostream& out) {
  out << r.summary() << "\n";
  for (std::size_t i = 0; i < r.violations.size() && i < kMaxWitnesses; ++i) {
    out << "  " << describe(r.violations[i]) << "\n";
  }
  if (r.violations.size() > kMaxWitnesses) out << "  ... " << r.violations.size() - kMaxWitnesses << " more\n";
  return r.passed() ? kPass : kViolated;
}

OpSymbol cat_op(const SpecFile& spec) { return spec.category ? OpSymbol{spec.category->op} : ops::mu; }

Rat spec_lambda(const SpecFile& spec) {
  return spec.op && spec.op->lambda ? *spec.op->lambda : Rat();
}

Cocycle operator_cocycle(const LinOperator& t) {
  if (!t.cocycle) fail(ErrorCode::ParseError, "the operator carries no cocycle");
  return *t.cocycle;
}

using CheckFn = std::function<Report(const SpecFile&)>;

Report operator_check(const SpecFile& spec) {
  const LinOperator t = spec_operator(spec);
  switch (t.kind) {
    case OperatorKind::Nijenhuis: return check_nijenhuis(t);
    case OperatorKind::RB: return check_rb(t, t.lambda);
    case OperatorKind::RelativeRB: return check_relative_rb(t, t.lambda);
    case OperatorKind::TwistedRB:
    case OperatorKind::Reynolds: return check_twisted_rb(t, operator_cocycle(t), spec_category(spec));
  }
  return Report{};
}

const std::vector<std::pair<std::string, CheckFn>>& checks() {
  static const std::vector<std::pair<std::string, CheckFn>> table = {
      {"category", [](const SpecFile& s) { return check_in_category(spec_algebra(s), cat_op(s), spec_category(s)); }},
      {"operator", operator_check},
      {"nijenhuis", [](const SpecFile& s) { return check_nijenhuis(spec_operator(s)); }},
      {"nijenhuis-deformed",
       [](const SpecFile& s) {
         return check_in_category(nijenhuis_deformed(spec_operator(s)), ops::star, spec_category(s));
       }},
      {"nijenhuis-ns",
       [](const SpecFile& s) {
         return double_in_category(nijenhuis_ns(spec_operator(s)), make_scheme(SchemeKind::NS), spec_category(s));
       }},
      {"rb", [](const SpecFile& s) { return check_rb(spec_operator(s), spec_lambda(s)); }},
      {"relative-rb", [](const SpecFile& s) { return check_relative_rb(spec_operator(s), spec_lambda(s)); }},
      {"lift",
       [](const SpecFile& s) {
         const Rat l = spec_lambda(s);
         return check_rb(lift_operator(spec_operator(s), l), l);
       }},
      {"rb-tridendriform",
       [](const SpecFile& s) {
         const Rat l = spec_lambda(s);
         return double_in_category(rb_tridendriform(spec_operator(s), l), make_scheme(SchemeKind::Tridendriform),
                                   spec_category(s));
       }},
      {"rb-ns",
       [](const SpecFile& s) {
         const Rat l = spec_lambda(s);
         return double_in_category(rb_ns(spec_operator(s), l), make_scheme(SchemeKind::NS), spec_category(s));
       }},
      {"nijrb", [](const SpecFile& s) { return nijrb_bimodule(spec_operator(s), spec_category(s)).report; }},
      {"graph",
       [](const SpecFile& s) {
         const LinOperator t = spec_operator(s);
         const FinAlgebra ambient =
             t.cocycle ? cocycle_extension(*t.cocycle) : weighted_semidirect_sum(t.over, t.lambda);
         return graph_subalgebra(t, ambient, spec_category(s)).report;
       }},
      {"twisted-rb",
       [](const SpecFile& s) {
         const LinOperator t = spec_operator(s);
         return check_twisted_rb(t, operator_cocycle(t), spec_category(s));
       }},
      {"trb-ns",
       [](const SpecFile& s) {
         const LinOperator t = spec_operator(s);
         return double_in_category(trb_ns(t, operator_cocycle(t)), make_scheme(SchemeKind::NS), spec_category(s));
       }},
      {"bimodule", [](const SpecFile& s) { return is_bimodule(spec_bimodule(s), spec_category(s)); }},
      {"bimodule-algebra", [](const SpecFile& s) { return is_bimodule_algebra(spec_bimodule(s), spec_category(s)); }},
      {"cocycle",
       [](const SpecFile& s) {
         auto h = spec_cocycle(s);
         if (!h) fail(ErrorCode::ParseError, "spec file has no 'cocycle' section");
         return is_2cocycle(*h, spec_category(s));
       }},
      {"ns",
       [](const SpecFile& s) {
         return double_in_category(spec_algebra(s), make_scheme(SchemeKind::NS), spec_category(s));
       }},
      {"dendriform",
       [](const SpecFile& s) {
         return double_in_category(spec_algebra(s), make_scheme(SchemeKind::Dendriform), spec_category(s));
       }},
      {"tridendriform",
       [](const SpecFile& s) {
         return double_in_category(spec_algebra(s), make_scheme(SchemeKind::Tridendriform), spec_category(s));
       }},
      {"ns-to-twisted-rb", [](const SpecFile& s) { return ns_to_twisted_rb(spec_algebra(s), spec_category(s)).report; }},
  };
  return table;
}

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : checks()) out.push_back(name);
  return out;
}

struct Args {
  std::string output;
  unsigned jobs = 1;

  std::string catalog_name;
  std::string spec_path;
  std::string scheme = "ns";
  std::string format = "text";
  bool reduce = false;
  bool fold = false;

  std::string check;

  std::string oracle;
  unsigned max_len = oracle::kDefaultMaxLen;
  unsigned max_pow = oracle::kDefaultMaxPow;

  bool json = false;
  std::string export_dir;
};

int cmd_split(const Args& a, std::ostream& out) {
  CategoryPresentation cat = a.spec_path.empty() ? catalog(a.catalog_name) : spec_category(load_spec(a.spec_path));
  SplitOptions opts;
  opts.format = a.format == "json" ? Format::Json : a.format == "tex" ? Format::Tex : Format::Text;
  opts.reduce_anticommutative = a.reduce;
  opts.fold_star = a.fold;
  out << render_split(derive_split_relations(cat, parse_scheme(a.scheme)), opts);
  return kPass;
}

int cmd_check(const Args& a, std::ostream& out) {
  const SpecFile spec = load_spec(a.spec_path);
  for (const auto& [name, fn] : checks()) {
    if (name == a.check) return print_report(fn(spec), out);
  }
  fail(ErrorCode::ParseError, "unknown check '" + a.check + "'");
}

int cmd_verify(const Args& a, std::ostream& out) {
  const SpecFile spec = load_spec(a.spec_path);
  if (a.oracle == "xstar") return print_report(oracle::verify_xstar(spec_operator(spec), a.max_len), out);
  if (a.oracle == "pairsij") return print_report(oracle::verify_pairsij(spec_operator(spec), a.max_pow), out);
  const auto cc = oracle::cross_check_split(spec_category(spec), spec_algebra(spec));
  print_report(cc.relations, out);
  print_report(cc.doubled, out);
  out << "cross-check: " << (cc.agree() ? "verdicts agree" : "verdicts DISAGREE") << "\n";
  return cc.agree() ? kPass : kViolated;
}

int cmd_catalog(const Args& a, std::ostream& out) {
  if (!a.export_dir.empty()) {
    for (const auto& path : export_specs(a.export_dir)) out << path << "\n";
    return kPass;
  }
  const auto algebras = corpus::algebras();
  if (a.json) {
    Json j{{"presentations", Json::array()}, {"algebras", Json::array()}};
    for (const auto& name : catalog_names()) {
      Json rels = Json::array();
      for (const auto& r : catalog(name).relations) rels.push_back(rel_json(r));
      j["presentations"].push_back(Json{{"name", name}, {"relations", std::move(rels)}});
    }
    for (const auto& ex : algebras) {
      j["algebras"].push_back(Json{{"name", ex.name},
                                   {"description", ex.description},
                                   {"dim", ex.algebra.dim},
                                   {"basisNames", ex.algebra.basis_names},
                                   {"categories", ex.categories}});
    }
    out << j.dump(2) << "\n";
    return kPass;
  }
  out << "presentations:\n";
  for (const auto& name : catalog_names()) {
    out << "  " << name << "\n";
    for (const auto& r : catalog(name).relations) out << "    " << render_text(r) << "\n";
  }
  out << "algebras:\n";
  for (const auto& ex : algebras) {
    out << "  " << ex.name << " (dim " << ex.algebra.dim << "): " << ex.description << "\n    in:";
    for (const auto& c : ex.categories) out << " " << c;
    out << "\n";
  }
  return kPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact splitting and operator identities for finite-dimensional algebras", "nsalg"};
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  app.add_option("--output", a.output, "Write results to this file instead of stdout");
  app.add_option("--jobs", a.jobs, "Worker threads for exhaustive checks")->check(CLI::Range(1U, 256U));

  auto* split = app.add_subcommand("split", "Derive the relations of a split category");
  auto* src = split->add_option_group("source");
  src->add_option("--catalog", a.catalog_name, "Bundled presentation")->check(CLI::IsMember(catalog_names()));
  src->add_option("--spec", a.spec_path, "Spec file with a category section")->check(CLI::ExistingFile);
  src->require_option(1);
  split->add_option("--scheme", a.scheme, "ns, dendriform or tridendriform")
      ->check(CLI::IsMember({"ns", "dendriform", "tridendriform"}));
  split->add_option("--format", a.format, "text, json or tex")->check(CLI::IsMember({"text", "json", "tex"}));
  split->add_flag("--reduce-anticommutative", a.reduce, "Rewrite with times and vee normal form");
  split->add_flag("--fold-star", a.fold, "Display sums of all split products as star");

  auto* check = app.add_subcommand("check", "Check an identity on a spec file");
  check->add_option("--spec", a.spec_path, "Spec file")->required()->check(CLI::ExistingFile);
  check->add_option("--check", a.check, "Identity to check")->required()->check(CLI::IsMember(check_names()));

  auto* verify = app.add_subcommand("verify", "Run a brute-force oracle on a spec file");
  verify->add_option("--spec", a.spec_path, "Spec file")->required()->check(CLI::ExistingFile);
  verify->add_option("--oracle", a.oracle, "xstar, pairsij or cross-check")
      ->required()
      ->check(CLI::IsMember({"xstar", "pairsij", "cross-check"}));
  verify->add_option("--max-len", a.max_len, "Longest product for xstar (2..5)");
  verify->add_option("--max-pow", a.max_pow, "Largest i + j for pairsij (2..16)");

  auto* cat = app.add_subcommand("catalog", "List bundled presentations and algebras");
  cat->add_flag("--json", a.json, "Machine-readable listing");
  cat->add_option("--export", a.export_dir, "Write the bundled spec files into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kMalformed;
  }

  set_jobs(a.jobs);
  std::ostringstream buf;
  int code = kPass;
  try {
    if (split->parsed()) code = cmd_split(a, buf);
    else if (check->parsed()) code = cmd_check(a, buf);
    else if (verify->parsed()) code = cmd_verify(a, buf);
    else code = cmd_catalog(a, buf);
  } catch (const Error& e) {
    out << buf.str();
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kMalformed;
  }

  if (a.output.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(a.output);
    if (!f) {
      err << "error: cannot write '" << a.output << "'\n";
      return kMalformed;
    }
    f << buf.str();
  }
  return code;
}

}  // namespace nsalg::cli
