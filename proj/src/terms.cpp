#include "nsalg/terms.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace nsalg {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::leaf(std::uint32_t label) {
  if (label == 0) fail(ErrorCode::MalformedMonomial, "leaf labels start at 1");
  Monomial m;
  m.tokens_.push_back(Token{label, {}});
  m.arity_ = 1;
  return m;
}

Monomial Monomial::node(const OpSymbol& op, const Monomial& left, const Monomial& right) {
  Monomial m;
  m.tokens_.reserve(1 + left.tokens_.size() + right.tokens_.size());
  m.tokens_.push_back(Token{0, op});
  m.tokens_.insert(m.tokens_.end(), left.tokens_.begin(), left.tokens_.end());
  m.tokens_.insert(m.tokens_.end(), right.tokens_.begin(), right.tokens_.end());
  m.arity_ = left.arity_ + right.arity_;
  return m;
}

std::uint32_t Monomial::label() const {
  if (!is_leaf()) fail(ErrorCode::MalformedMonomial, "label() on an internal node");
  return tokens_.front().leaf;
}

const OpSymbol& Monomial::op() const {
  if (is_leaf()) fail(ErrorCode::MalformedMonomial, "op() on a leaf");
  return tokens_.front().op;
}

std::size_t Monomial::subtree_end(std::size_t begin) const {
  std::size_t need = 1;
  std::size_t pos = begin;
  while (need > 0) {
    if (tokens_[pos].is_leaf()) {
      --need;
    } else {
      ++need;
    }
    ++pos;
  }
  return pos;
}

Monomial Monomial::left() const {
  if (is_leaf()) fail(ErrorCode::MalformedMonomial, "left() on a leaf");
  Monomial m;
  std::size_t end = subtree_end(1);
  m.tokens_.assign(tokens_.begin() + 1, tokens_.begin() + static_cast<std::ptrdiff_t>(end));
  m.arity_ = static_cast<std::size_t>(std::count_if(m.tokens_.begin(), m.tokens_.end(),
                                                    [](const Token& t) { return t.is_leaf(); }));
  return m;
}

Monomial Monomial::right() const {
  if (is_leaf()) fail(ErrorCode::MalformedMonomial, "right() on a leaf");
  Monomial m;
  std::size_t mid = subtree_end(1);
  m.tokens_.assign(tokens_.begin() + static_cast<std::ptrdiff_t>(mid), tokens_.end());
  m.arity_ = static_cast<std::size_t>(std::count_if(m.tokens_.begin(), m.tokens_.end(),
                                                    [](const Token& t) { return t.is_leaf(); }));
  return m;
}

std::vector<std::uint32_t> Monomial::leaf_labels() const {
  std::vector<std::uint32_t> out;
  out.reserve(arity_);
  for (const auto& t : tokens_) {
    if (t.is_leaf()) out.push_back(t.leaf);
  }
  return out;
}

Monomial Monomial::relabeled(std::span<const std::uint32_t> mapping) const {
  Monomial m = *this;
  for (auto& t : m.tokens_) {
    if (!t.is_leaf()) continue;
    if (t.leaf > mapping.size()) fail(ErrorCode::MalformedMonomial, "relabeling map too short");
    t.leaf = mapping[t.leaf - 1];
  }
  return m;
}

Monomial Monomial::with_op_at(std::size_t pos, const OpSymbol& op) const {
  if (pos >= tokens_.size() || tokens_[pos].is_leaf()) {
    fail(ErrorCode::MalformedMonomial, "no internal node at position " + std::to_string(pos));
  }
  Monomial m = *this;
  m.tokens_[pos].op = op;
  return m;
}

void Monomial::validate() const {
  if (tokens_.empty()) fail(ErrorCode::MalformedMonomial, "empty monomial");
  if (subtree_end(0) != tokens_.size()) fail(ErrorCode::MalformedMonomial, "token sequence is not one tree");
  std::vector<bool> seen(arity_ + 1, false);
  for (const auto& t : tokens_) {
    if (!t.is_leaf()) continue;
    if (t.leaf > arity_ || seen[t.leaf]) {
      fail(ErrorCode::MalformedMonomial, "leaf labels of " + render_text(*this) + " are not a permutation of 1.." +
                                             std::to_string(arity_));
    }
    seen[t.leaf] = true;
  }
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.arity_ <=> b.arity_; c != 0) return c;
  const std::size_t n = std::min(a.tokens_.size(), b.tokens_.size());
  for (std::size_t i = 0; i < n; ++i) {
    bool la = a.tokens_[i].is_leaf();
    bool lb = b.tokens_[i].is_leaf();
    if (la != lb) return la <=> lb;  // internal (false) sorts before leaf (true)
  }
  if (auto c = a.tokens_.size() <=> b.tokens_.size(); c != 0) return c;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.tokens_[i].is_leaf()) continue;
    if (auto c = a.tokens_[i].op.name <=> b.tokens_[i].op.name; c != 0) return c;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!a.tokens_[i].is_leaf()) continue;
    if (auto c = a.tokens_[i].leaf <=> b.tokens_[i].leaf; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Relations

Relation canon(const Relation& rel) {
  std::size_t arity = rel.arity;
  if (arity == 0 && !rel.terms.empty()) arity = rel.terms.front().mono.arity();
  for (const auto& t : rel.terms) {
    if (t.mono.arity() != arity) {
      fail(ErrorCode::ArityMismatch, "term " + render_text(t.mono) + " has arity " + std::to_string(t.mono.arity()) +
                                         ", expected " + std::to_string(arity));
    }
    t.mono.validate();
  }
  std::vector<Term> terms = rel.terms;
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.mono < y.mono; });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
  return Relation{arity, std::move(merged)};
}

bool is_canonical(const Relation& rel) {
  for (std::size_t i = 0; i < rel.terms.size(); ++i) {
    if (rel.terms[i].coeff.is_zero()) return false;
    if (i > 0 && !(rel.terms[i - 1].mono < rel.terms[i].mono)) return false;
  }
  return true;
}

namespace {

std::size_t common_arity(const Relation& a, const Relation& b) {
  if (a.is_zero() && a.arity == 0) return b.arity;
  if (b.is_zero() && b.arity == 0) return a.arity;
  if (a.arity != b.arity) {
    fail(ErrorCode::ArityMismatch,
         "cannot combine relations of arity " + std::to_string(a.arity) + " and " + std::to_string(b.arity));
  }
  return a.arity;
}

}  // namespace

Relation operator+(const Relation& a, const Relation& b) {
  Relation r{common_arity(a, b), a.terms};
  r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
  return canon(r);
}

Relation operator-(const Relation& a, const Relation& b) { return a + Rat(-1) * b; }

Relation operator*(const Rat& c, const Relation& r) {
  if (c.is_zero()) return Relation{r.arity, {}};
  Relation out = r;
  for (auto& t : out.terms) t.coeff = c * t.coeff;
  return out;
}

bool relations_equal_up_to_scalar(const Relation& r1, const Relation& r2) {
  if (r1.is_zero() || r2.is_zero()) return r1.is_zero() && r2.is_zero();
  if (r1.terms.size() != r2.terms.size()) return false;
  const Rat ratio = r1.terms.front().coeff / r2.terms.front().coeff;
  for (std::size_t i = 0; i < r1.terms.size(); ++i) {
    if (!(r1.terms[i].mono == r2.terms[i].mono)) return false;
    if (r1.terms[i].coeff != ratio * r2.terms[i].coeff) return false;
  }
  return true;
}

Relation relabeled(const Relation& rel, std::span<const std::uint32_t> mapping) {
  Relation out{rel.arity, {}};
  out.terms.reserve(rel.terms.size());
  for (const auto& t : rel.terms) out.terms.push_back(Term{t.coeff, t.mono.relabeled(mapping)});
  return canon(out);
}

namespace {

// Monomials with every label erased; equal multisets are necessary for
// equivalence under relabeling.
std::vector<Monomial> erased_shapes(const Relation& rel) {
  std::vector<std::uint32_t> ones(rel.arity, 1);
  std::vector<Monomial> out;
  out.reserve(rel.terms.size());
  for (const auto& t : rel.terms) out.push_back(t.mono.relabeled(ones));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool equivalent_up_to_relabeling(const Relation& r1, const Relation& r2) {
  if (r1.is_zero() || r2.is_zero()) return r1.is_zero() && r2.is_zero();
  if (r1.arity != r2.arity || r1.terms.size() != r2.terms.size()) return false;
  if (erased_shapes(r1) != erased_shapes(r2)) return false;
  std::vector<std::uint32_t> perm(r1.arity);
  std::iota(perm.begin(), perm.end(), 1U);
  do {
    if (relations_equal_up_to_scalar(r1, relabeled(r2, perm))) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

std::vector<std::pair<Rat, Monomial>> expand(const Monomial& m, const OpSymbol& op,
                                             std::span<const OpRewrite> rewrites) {
  if (m.is_leaf()) return {{Rat(1), m}};
  auto lhs = expand(m.left(), op, rewrites);
  auto rhs = expand(m.right(), op, rewrites);
  std::vector<std::pair<Rat, Monomial>> out;
  if (m.op() == op) {
    for (const auto& rw : rewrites) {
      for (const auto& [cl, l] : lhs) {
        for (const auto& [cr, r] : rhs) {
          out.emplace_back(rw.coeff * cl * cr, rw.swap ? Monomial::node(rw.op, r, l) : Monomial::node(rw.op, l, r));
        }
      }
    }
  } else {
    for (const auto& [cl, l] : lhs) {
      for (const auto& [cr, r] : rhs) out.emplace_back(cl * cr, Monomial::node(m.op(), l, r));
    }
  }
  return out;
}

}  // namespace

Relation substitute_op(const Relation& rel, const OpSymbol& op, std::span<const OpRewrite> rewrites) {
  Relation out{rel.arity, {}};
  for (const auto& t : rel.terms) {
    for (auto& [c, m] : expand(t.mono, op, rewrites)) out.terms.push_back(Term{t.coeff * c, std::move(m)});
  }
  return canon(out);
}

std::vector<OpSymbol> ops_used(const Relation& rel) {
  std::set<OpSymbol> seen;
  for (const auto& t : rel.terms) {
    for (const auto& tok : t.mono.tokens()) {
      if (!tok.is_leaf()) seen.insert(tok.op);
    }
  }
  return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// Category presentations

CategoryPresentation make_presentation(std::string name, OpSymbol op, std::vector<Relation> relations) {
  CategoryPresentation p{std::move(name), std::move(op), {}};
  for (const auto& raw : relations) {
    Relation r = canon(raw);
    for (const auto& used : ops_used(r)) {
      if (used != p.op) {
        fail(ErrorCode::UnboundOpSymbol,
             "relation " + render_text(r) + " uses '" + used.name + "' in a presentation over '" + p.op.name + "'");
      }
    }
    if (r.is_zero()) continue;
    bool dup = std::any_of(p.relations.begin(), p.relations.end(),
                           [&](const Relation& q) { return relations_equal_up_to_scalar(q, r); });
    if (!dup) p.relations.push_back(std::move(r));
  }
  return p;
}

namespace {

struct CatalogEntry {
  std::string_view name;
  std::vector<std::string_view> relations;
};

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"associative", {"(a*b)*c - a*(b*c)"}},
      {"lie", {"a*b + b*a", "(a*b)*c - a*(b*c) + b*(a*c)"}},
      {"leibniz", {"(a*b)*c - a*(b*c) + b*(a*c)"}},
      {"pre-lie", {"(a*b)*c - a*(b*c) - (b*a)*c + b*(a*c)"}},
      {"nap", {"a*(b*c) - b*(a*c)"}},
      {"commutative-associative", {"(a*b)*c - a*(b*c)", "a*b - b*a"}},
  };
  return entries;
}

}  // namespace

CategoryPresentation catalog(std::string_view name) {
  for (const auto& e : catalog_entries()) {
    if (e.name != name) continue;
    std::vector<Relation> rels;
    for (auto text : e.relations) rels.push_back(parse_relation(text));
    return make_presentation(std::string(name), ops::mu, std::move(rels));
  }
  fail(ErrorCode::UnknownCategory, "no catalog presentation named '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : catalog_entries()) out.emplace_back(e.name);
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

struct Notation {
  std::string_view op;
  std::string_view text;
  std::string_view tex;
};

constexpr Notation kNotations[] = {
    {"mu", "*", ""},        {"prec", "<", "\\prec"}, {"succ", ">", "\\succ"},   {"vee", "|", "\\vee"},
    {"dot", ".", "\\cdot"}, {"star", "@", "\\star"}, {"times", "#", "\\times"},
};

std::string variable_name(std::uint32_t label, bool tex) {
  if (label >= 1 && label <= 26) return std::string(1, static_cast<char>('a' + label - 1));
  return tex ? "x_{" + std::to_string(label) + "}" : "x" + std::to_string(label);
}

std::string tex_token(const OpSymbol& op) {
  for (const auto& n : kNotations) {
    if (n.op == op.name) return std::string(n.tex);
  }
  return "\\mathbin{\\mathrm{" + op.name + "}}";
}

std::string render_mono(const Monomial& m, bool tex, bool outer) {
  if (m.is_leaf()) return variable_name(m.label(), tex);
  std::string lhs = render_mono(m.left(), tex, false);
  std::string rhs = render_mono(m.right(), tex, false);
  std::string tok = tex ? tex_token(m.op()) : text_token(m.op());
  std::string s = lhs + tok;
  // A TeX control word swallows a following letter.
  if (tex && !tok.empty() && std::isalpha(static_cast<unsigned char>(tok.back())) && !rhs.empty() &&
      std::isalpha(static_cast<unsigned char>(rhs.front()))) {
    s += ' ';
  }
  s += rhs;
  return outer ? s : "(" + s + ")";
}

std::string coeff_prefix(const Rat& magnitude, bool tex) {
  if (magnitude.is_one()) return "";
  if (!tex) return magnitude.str() + " ";
  if (magnitude.is_integer()) return magnitude.str();
  mpq_class q = magnitude.to_mpq();
  return "\\tfrac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string render_rel(const Relation& rel, bool tex) {
  if (rel.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : rel.terms) {
    bool neg = t.coeff.sign() < 0;
    Rat mag = neg ? -t.coeff : t.coeff;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += coeff_prefix(mag, tex);
    out += render_mono(t.mono, tex, true);
    first = false;
  }
  return out;
}

}  // namespace

std::string text_token(const OpSymbol& op) {
  for (const auto& n : kNotations) {
    if (n.op == op.name) return std::string(n.text);
  }
  return "{" + op.name + "}";
}

std::string render_text(const Monomial& m) { return render_mono(m, false, true); }
std::string render_text(const Relation& rel) { return render_rel(rel, false); }
std::string render_tex(const Monomial& m) { return render_mono(m, true, true); }
std::string render_tex(const Relation& rel) { return render_rel(rel, true); }

// ---------------------------------------------------------------------------
// Plain-text parser

namespace {

class TextParser {
 public:
  explicit TextParser(std::string_view s) : s_(s) {}

  Relation parse() {
    std::vector<Term> terms = side();
    skip_ws();
    if (peek() == '=') {
      ++pos_;
      for (auto& t : side()) terms.push_back(Term{-t.coeff, std::move(t.mono)});
    }
    skip_ws();
    if (pos_ != s_.size()) error("unexpected trailing input");
    std::uint32_t arity = 0;
    for (const auto& t : terms) {
      for (auto l : t.mono.leaf_labels()) arity = std::max(arity, l);
    }
    return canon(Relation{arity, std::move(terms)});
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError, what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  std::vector<Term> side() {
    std::vector<Term> terms;
    skip_ws();
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    term(sign, terms);
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      term(c == '-' ? -1 : 1, terms);
    }
    return terms;
  }

  void term(int sign, std::vector<Term>& out) {
    skip_ws();
    Rat coeff(sign);
    if (is_digit(peek())) {
      std::size_t start = pos_;
      while (is_digit(peek())) ++pos_;
      if (peek() == '/') {
        ++pos_;
        if (!is_digit(peek())) error("expected denominator");
        while (is_digit(peek())) ++pos_;
      }
      coeff = coeff * Rat::parse(s_.substr(start, pos_ - start));
      skip_ws();
      char c = peek();
      if (c == '\0' || c == '=' || c == '+' || c == '-') {
        if (!coeff.is_zero()) error("constant terms are not multilinear");
        return;
      }
    }
    Monomial m = mono();
    if (!coeff.is_zero()) out.push_back(Term{coeff, std::move(m)});
  }

  Monomial mono() {
    Monomial lhs = operand();
    skip_ws();
    std::optional<OpSymbol> op = try_op();
    if (!op) return lhs;
    Monomial rhs = operand();
    return Monomial::node(*op, lhs, rhs);
  }

  Monomial operand() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Monomial m = mono();
      skip_ws();
      if (peek() != ')') error("expected ')'");
      ++pos_;
      return m;
    }
    if (c >= 'a' && c <= 'z') {
      ++pos_;
      if (is_digit(peek())) {
        std::uint32_t label = 0;
        while (is_digit(peek())) label = label * 10 + static_cast<std::uint32_t>(s_[pos_++] - '0');
        return Monomial::leaf(label);
      }
      return Monomial::leaf(static_cast<std::uint32_t>(c - 'a' + 1));
    }
    error("expected a variable or '('");
  }

  std::optional<OpSymbol> try_op() {
    char c = peek();
    if (c == '{') {
      std::size_t close = s_.find('}', pos_);
      if (close == std::string_view::npos) error("unterminated '{'");
      OpSymbol op{std::string(s_.substr(pos_ + 1, close - pos_ - 1))};
      pos_ = close + 1;
      return op;
    }
    for (const auto& n : kNotations) {
      if (n.text.size() == 1 && n.text[0] == c) {
        ++pos_;
        return OpSymbol{std::string(n.op)};
      }
    }
    return std::nullopt;
  }
};

}  // namespace

Relation parse_relation(std::string_view text) { return TextParser(text).parse(); }

}  // namespace nsalg
