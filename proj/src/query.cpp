#include "hyperview/query.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hyperview {

namespace {

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

struct Token {
  enum class Kind { Word, And, Or, Not, LParen, RParen, ScopePrefix, End };
  Kind kind = Kind::End;
  std::string text;  // word (with optional trailing *) or scope name
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_space();
    if (pos_ >= text_.size()) return {Token::Kind::End, ""};
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      return {Token::Kind::LParen, "("};
    }
    if (c == ')') {
      ++pos_;
      return {Token::Kind::RParen, ")"};
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
    }
    std::string word = text_.substr(start, pos_ - start);
    if (word == "AND") return {Token::Kind::And, word};
    if (word == "OR") return {Token::Kind::Or, word};
    if (word == "NOT") return {Token::Kind::Not, word};
    if (!word.empty() && word.back() == ':') {
      return {Token::Kind::ScopePrefix, word.substr(0, word.size() - 1)};
    }
    return {Token::Kind::Word, word};
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

// Recursive-descent parser; OR binds loosest, then AND, then NOT.
class Parser {
 public:
  explicit Parser(const std::string& text) : lexer_(text) { advance(); }

  std::vector<SearchQuery::Clause> parse_query() {
    std::vector<SearchQuery::Clause> clauses;
    while (current_.kind != Token::Kind::End) {
      clauses.push_back(parse_clause());
    }
    if (clauses.empty()) throw std::runtime_error("query: empty expression");
    return clauses;
  }

 private:
  SearchQuery::Clause parse_clause() {
    SearchQuery::Clause clause;
    if (current_.kind == Token::Kind::ScopePrefix) {
      std::string scope = to_lower(current_.text);
      if (scope == "title") {
        clause.scope = SearchQuery::Scope::Title;
      } else if (scope == "abstract") {
        clause.scope = SearchQuery::Scope::Abstract;
      } else if (scope == "any") {
        clause.scope = SearchQuery::Scope::Any;
      } else {
        throw std::runtime_error("query: unknown scope \"" + scope + "\"");
      }
      advance();
      expect(Token::Kind::LParen, "query: expected '(' after scope");
      advance();
      clause.expr = parse_or();
      expect(Token::Kind::RParen, "query: expected ')' closing a scoped clause");
      advance();
    } else {
      clause.scope = SearchQuery::Scope::Any;
      clause.expr = parse_or();
    }
    return clause;
  }

  std::unique_ptr<SearchQuery::Node> parse_or() {
    auto left = parse_and();
    while (current_.kind == Token::Kind::Or) {
      advance();
      auto node = std::make_unique<SearchQuery::Node>();
      node->kind = SearchQuery::Node::Kind::Or;
      node->left = std::move(left);
      node->right = parse_and();
      left = std::move(node);
    }
    return left;
  }

  std::unique_ptr<SearchQuery::Node> parse_and() {
    auto left = parse_unary();
    while (current_.kind == Token::Kind::And) {
      advance();
      auto node = std::make_unique<SearchQuery::Node>();
      node->kind = SearchQuery::Node::Kind::And;
      node->left = std::move(left);
      node->right = parse_unary();
      left = std::move(node);
    }
    return left;
  }

  std::unique_ptr<SearchQuery::Node> parse_unary() {
    if (current_.kind == Token::Kind::Not) {
      advance();
      auto node = std::make_unique<SearchQuery::Node>();
      node->kind = SearchQuery::Node::Kind::Not;
      node->left = parse_unary();
      return node;
    }
    if (current_.kind == Token::Kind::LParen) {
      advance();
      auto node = parse_or();
      expect(Token::Kind::RParen, "query: expected ')'");
      advance();
      return node;
    }
    if (current_.kind == Token::Kind::Word) {
      auto node = std::make_unique<SearchQuery::Node>();
      node->kind = SearchQuery::Node::Kind::Term;
      std::string word = current_.text;
      std::size_t star = word.find('*');
      if (star != std::string::npos && star != word.size() - 1) {
        throw std::runtime_error("query: wildcard only allowed in trailing position: \"" + word +
                                 "\"");
      }
      if (!word.empty() && word.back() == '*') word.pop_back();
      if (word.empty()) throw std::runtime_error("query: empty term");
      node->term = to_lower(word);
      advance();
      return node;
    }
    throw std::runtime_error("query: unexpected token \"" + current_.text + "\"");
  }

  void expect(Token::Kind kind, const std::string& message) {
    if (current_.kind != kind) throw std::runtime_error(message);
  }

  void advance() { current_ = lexer_.next(); }

  Lexer lexer_;
  Token current_;
};

bool eval_node(const SearchQuery::Node& node, const std::string& text) {
  switch (node.kind) {
    case SearchQuery::Node::Kind::Term:
      return text.find(node.term) != std::string::npos;
    case SearchQuery::Node::Kind::And:
      return eval_node(*node.left, text) && eval_node(*node.right, text);
    case SearchQuery::Node::Kind::Or:
      return eval_node(*node.left, text) || eval_node(*node.right, text);
    case SearchQuery::Node::Kind::Not:
      return !eval_node(*node.left, text);
  }
  return false;
}

}  // namespace

SearchQuery SearchQuery::parse(const std::string& text) {
  SearchQuery query;
  query.clauses_ = Parser(text).parse_query();
  return query;
}

bool SearchQuery::matches(const PublicationRecord& record) const {
  std::string title = to_lower(record.title);
  std::string abstract = to_lower(record.abstract_text);
  for (const auto& clause : clauses_) {
    bool hit = false;
    switch (clause.scope) {
      case Scope::Title:
        hit = eval_node(*clause.expr, title);
        break;
      case Scope::Abstract:
        hit = eval_node(*clause.expr, abstract);
        break;
      case Scope::Any:
        hit = eval_node(*clause.expr, title) || eval_node(*clause.expr, abstract);
        break;
    }
    if (hit) return true;  // clauses are OR-joined
  }
  return false;
}

std::vector<PublicationRecord> filter_records(const std::vector<PublicationRecord>& records,
                                              const SearchQuery& query) {
  std::vector<PublicationRecord> result;
  for (const auto& record : records) {
    if (query.matches(record)) result.push_back(record);
  }
  return result;
}

}  // namespace hyperview
