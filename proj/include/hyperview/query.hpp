#ifndef HYPERVIEW_QUERY_HPP_
#define HYPERVIEW_QUERY_HPP_

#include <memory>
#include <string>
#include <vector>

#include "hyperview/corpus.hpp"

namespace hyperview {

/// Boolean search expression over title/abstract text.
///
/// Grammar (CLI flag --query):
///   query   := clause+                      (clauses joined by OR)
///   clause  := scope ':' '(' expr ')' | expr
///   scope   := 'title' | 'abstract' | 'any'
///   expr    := term | expr AND expr | expr OR expr | NOT expr | '(' expr ')'
///   term    := word | word '*'
///
/// Terms match case-insensitively as substrings of the scoped text; the
/// wildcard is only valid in trailing position. A bare clause defaults to
/// scope 'any'.
class SearchQuery {
 public:
  enum class Scope { Title, Abstract, Any };

  struct Node {
    enum class Kind { Term, And, Or, Not };
    Kind kind = Kind::Term;
    std::string term;  // lowercased, wildcard stripped
    std::unique_ptr<Node> left;
    std::unique_ptr<Node> right;
  };

  struct Clause {
    Scope scope = Scope::Any;
    std::unique_ptr<Node> expr;
  };

  /// Parses the query string. Throws std::runtime_error on syntax errors
  /// (empty expression, non-trailing wildcard, unbalanced parentheses).
  static SearchQuery parse(const std::string& text);

  bool matches(const PublicationRecord& record) const;

  const std::vector<Clause>& clauses() const { return clauses_; }

 private:
  std::vector<Clause> clauses_;
};

/// Returns the sublist of records satisfying the query, input order kept.
std::vector<PublicationRecord> filter_records(const std::vector<PublicationRecord>& records,
                                              const SearchQuery& query);

}  // namespace hyperview

#endif  // HYPERVIEW_QUERY_HPP_
