#include "alcor/concept_expr.hpp"

#include <functional>

#include "alcor/errors.hpp"

namespace alcor {

struct ConceptExpr::Node {
  Kind kind;
  std::string name;                    // Atom / Nominal / Exists / Forall
  std::shared_ptr<const Node> left;    // unary child or left operand
  std::shared_ptr<const Node> right;   // right operand of And / Or
  std::size_t hash = 0;
};

namespace {

std::size_t combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t node_hash(ConceptExpr::Kind kind, const std::string& name, std::size_t l, std::size_t r) {
  std::size_t h = combine(static_cast<std::size_t>(kind) + 1, std::hash<std::string>{}(name));
  h = combine(h, l);
  h = combine(h, r);
  return h;
}

bool node_equal(const ConceptExpr::Node* a, const ConceptExpr::Node* b) {
  if (a == b) return true;
  if (a == nullptr || b == nullptr) return false;
  if (a->hash != b->hash || a->kind != b->kind || a->name != b->name) return false;
  return node_equal(a->left.get(), b->left.get()) && node_equal(a->right.get(), b->right.get());
}

}  // namespace

ConceptExpr ConceptExpr::bot() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Bot;
  n->hash = node_hash(Kind::Bot, "", 0, 0);
  return ConceptExpr(std::move(n));
}

ConceptExpr ConceptExpr::top() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Top;
  n->hash = node_hash(Kind::Top, "", 0, 0);
  return ConceptExpr(std::move(n));
}

ConceptExpr ConceptExpr::atom(std::string concept_name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->name = std::move(concept_name);
  n->hash = node_hash(Kind::Atom, n->name, 0, 0);
  return ConceptExpr(std::move(n));
}

ConceptExpr ConceptExpr::nominal(std::string individual_name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Nominal;
  n->name = std::move(individual_name);
  n->hash = node_hash(Kind::Nominal, n->name, 0, 0);
  return ConceptExpr(std::move(n));
}

ConceptExpr ConceptExpr::negation(ConceptExpr c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->left = std::move(c.node_);
  n->hash = node_hash(Kind::Not, "", n->left->hash, 0);
  return ConceptExpr(std::move(n));
}

ConceptExpr ConceptExpr::conjunction(ConceptExpr lhs, ConceptExpr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->left = std::move(lhs.node_);
  n->right = std::move(rhs.node_);
  n->hash = node_hash(Kind::And, "", n->left->hash, n->right->hash);
  return ConceptExpr(std::move(n));
}

ConceptExpr ConceptExpr::disjunction(ConceptExpr lhs, ConceptExpr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->left = std::move(lhs.node_);
  n->right = std::move(rhs.node_);
  n->hash = node_hash(Kind::Or, "", n->left->hash, n->right->hash);
  return ConceptExpr(std::move(n));
}

ConceptExpr ConceptExpr::exists(std::string role_name, ConceptExpr c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Exists;
  n->name = std::move(role_name);
  n->left = std::move(c.node_);
  n->hash = node_hash(Kind::Exists, n->name, n->left->hash, 0);
  return ConceptExpr(std::move(n));
}

ConceptExpr ConceptExpr::forall(std::string role_name, ConceptExpr c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Forall;
  n->name = std::move(role_name);
  n->left = std::move(c.node_);
  n->hash = node_hash(Kind::Forall, n->name, n->left->hash, 0);
  return ConceptExpr(std::move(n));
}

ConceptExpr::Kind ConceptExpr::kind() const { return node_->kind; }

const std::string& ConceptExpr::name() const { return node_->name; }

ConceptExpr ConceptExpr::left() const { return ConceptExpr(node_->left); }

ConceptExpr ConceptExpr::right() const { return ConceptExpr(node_->right); }

bool ConceptExpr::operator==(const ConceptExpr& o) const { return node_equal(node_.get(), o.node_.get()); }

std::size_t ConceptExpr::hash() const { return node_->hash; }

namespace {

// Precedence levels for rendering: Or < And < unary < atoms.
int precedence(ConceptExpr::Kind k) {
  switch (k) {
    case ConceptExpr::Kind::Or:
      return 0;
    case ConceptExpr::Kind::And:
      return 1;
    case ConceptExpr::Kind::Not:
    case ConceptExpr::Kind::Exists:
    case ConceptExpr::Kind::Forall:
      return 2;
    default:
      return 3;
  }
}

void render(const ConceptExpr& c, int min_prec, std::string& out) {
  const int prec = precedence(c.kind());
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (c.kind()) {
    case ConceptExpr::Kind::Bot:
      out += "bot";
      break;
    case ConceptExpr::Kind::Top:
      out += "top";
      break;
    case ConceptExpr::Kind::Atom:
      out += c.name();
      break;
    case ConceptExpr::Kind::Nominal:
      out += '{';
      out += c.name();
      out += '}';
      break;
    case ConceptExpr::Kind::Not:
      out += '!';
      render(c.child(), 2, out);
      break;
    case ConceptExpr::Kind::And:
      render(c.left(), 1, out);
      out += " & ";
      render(c.right(), 2, out);  // left-associative
      break;
    case ConceptExpr::Kind::Or:
      render(c.left(), 0, out);
      out += " | ";
      render(c.right(), 1, out);
      break;
    case ConceptExpr::Kind::Exists:
      out += "exists ";
      out += c.name();
      out += '.';
      render(c.child(), 2, out);
      break;
    case ConceptExpr::Kind::Forall:
      out += "forall ";
      out += c.name();
      out += '.';
      render(c.child(), 2, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string ConceptExpr::to_string() const {
  std::string out;
  render(*this, 0, out);
  return out;
}

void ConceptExpr::validate(const Vocabulary& vocab) const {
  switch (kind()) {
    case Kind::Bot:
    case Kind::Top:
      return;
    case Kind::Atom:
      if (!vocab.concept_index(name()))
        throw ValidationError("undeclared concept name '" + name() + "'");
      return;
    case Kind::Nominal:
      if (!vocab.individual_index(name()))
        throw ValidationError("undeclared individual name '" + name() + "'");
      return;
    case Kind::Not:
      child().validate(vocab);
      return;
    case Kind::And:
    case Kind::Or:
      left().validate(vocab);
      right().validate(vocab);
      return;
    case Kind::Exists:
    case Kind::Forall:
      if (!vocab.role_index(name())) throw ValidationError("undeclared role name '" + name() + "'");
      child().validate(vocab);
      return;
  }
}

}  // namespace alcor
