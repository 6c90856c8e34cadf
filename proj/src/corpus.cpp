#include "hyperview/corpus.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"

namespace hyperview {

namespace {

std::string trim(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  std::size_t end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

std::vector<PublicationRecord> parse_corpus(std::istream& input) {
  std::vector<PublicationRecord> records;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  long long line_no = 0;
  while (std::getline(input, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::runtime_error("corpus line " + std::to_string(line_no) +
                               ": malformed JSON: " + e.what());
    }
    if (!j.is_object() || !j.contains("id") || !j["id"].is_string()) {
      throw std::runtime_error("corpus line " + std::to_string(line_no) +
                               ": record must be an object with a string \"id\"");
    }
    PublicationRecord record;
    record.id = j["id"].get<std::string>();
    if (record.id.empty()) {
      throw std::runtime_error("corpus line " + std::to_string(line_no) + ": empty id");
    }
    if (!seen_ids.insert(record.id).second) {
      throw std::runtime_error("corpus line " + std::to_string(line_no) +
                               ": duplicate id \"" + record.id + "\"");
    }
    if (j.contains("title")) {
      if (!j["title"].is_string()) {
        throw std::runtime_error("corpus line " + std::to_string(line_no) +
                                 ": \"title\" must be a string");
      }
      record.title = j["title"].get<std::string>();
    }
    if (j.contains("abstract")) {
      if (!j["abstract"].is_string()) {
        throw std::runtime_error("corpus line " + std::to_string(line_no) +
                                 ": \"abstract\" must be a string");
      }
      record.abstract_text = j["abstract"].get<std::string>();
    }
    if (j.contains("attributes")) {
      if (!j["attributes"].is_object()) {
        throw std::runtime_error("corpus line " + std::to_string(line_no) +
                                 ": \"attributes\" must be an object");
      }
      for (const auto& [type, values] : j["attributes"].items()) {
        if (!values.is_array()) {
          throw std::runtime_error("corpus line " + std::to_string(line_no) + ": attribute \"" +
                                   type + "\" must be an array of strings");
        }
        std::set<std::string> set;
        for (const auto& v : values) {
          if (!v.is_string()) {
            throw std::runtime_error("corpus line " + std::to_string(line_no) + ": attribute \"" +
                                     type + "\" must be an array of strings");
          }
          std::string value = trim(v.get<std::string>());
          if (!value.empty()) set.insert(value);
        }
        record.attributes[type] = std::move(set);
      }
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<PublicationRecord> parse_corpus_file(const std::string& path) {
  std::ifstream file(path);
  if (!file.is_open()) {
    throw std::runtime_error("cannot open corpus file: " + path);
  }
  return parse_corpus(file);
}

std::string record_to_json_line(const PublicationRecord& record) {
  nlohmann::json j;
  j["id"] = record.id;
  j["title"] = record.title;
  j["abstract"] = record.abstract_text;
  nlohmann::json attrs = nlohmann::json::object();
  for (const auto& [type, values] : record.attributes) {
    attrs[type] = std::vector<std::string>(values.begin(), values.end());
  }
  j["attributes"] = attrs;
  return j.dump();
}

std::vector<std::pair<std::string, std::set<std::string>>> extract_attribute_sets(
    const std::vector<PublicationRecord>& records, const std::string& attr_type) {
  std::vector<std::pair<std::string, std::set<std::string>>> result;
  for (const auto& record : records) {
    auto it = record.attributes.find(attr_type);
    if (it == record.attributes.end() || it->second.empty()) continue;
    result.emplace_back(record.id, it->second);
  }
  return result;
}

}  // namespace hyperview
