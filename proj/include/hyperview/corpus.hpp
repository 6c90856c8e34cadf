#ifndef HYPERVIEW_CORPUS_HPP_
#define HYPERVIEW_CORPUS_HPP_

#include <istream>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hyperview {

/// One publication metadata instance. Attribute sets are keyed by a
/// free-form type name ("organisation", "country", "keyword", ...).
struct PublicationRecord {
  std::string id;
  std::string title;
  std::string abstract_text;
  std::map<std::string, std::set<std::string>> attributes;
};

/// Parses a UTF-8 line-delimited JSON corpus, one record per line.
/// Attribute values are trimmed and deduplicated; unknown fields ignored.
/// Throws std::runtime_error with the line number on a malformed line and
/// with the offending id on a duplicate id.
std::vector<PublicationRecord> parse_corpus(std::istream& input);

/// Convenience overload reading from a file path.
std::vector<PublicationRecord> parse_corpus_file(const std::string& path);

/// Serializes one record back to its single-line JSON form.
std::string record_to_json_line(const PublicationRecord& record);

/// Per-record attribute sets for one attribute type. Records lacking the
/// type (or with an empty set) are omitted; they contribute no hyperedge.
std::vector<std::pair<std::string, std::set<std::string>>> extract_attribute_sets(
    const std::vector<PublicationRecord>& records, const std::string& attr_type);

}  // namespace hyperview

#endif  // HYPERVIEW_CORPUS_HPP_
