#include "hyperview/synth.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hyperview/rng.hpp"

namespace hyperview {

namespace {

std::string padded(int value, int width) {
  std::ostringstream out;
  out << value;
  std::string s = out.str();
  while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
  return s;
}

// Collaboration member sets laid out on a grid so that any two sets share
// at most one value: row/column (and two extra modular families for the
// organisation side) hub values are shared, the rest is private per set.
struct HubDesign {
  std::vector<std::set<std::string>> big_sets;
  std::vector<std::string> private_values;  // deterministic order
};

HubDesign build_org_design() {
  // 90 collaborations on a 9x10 grid, sizes chosen so the clique and
  // extra-node expansions land on 2639 and 647 edges over 349 values.
  std::vector<int> sizes;
  for (int i = 0; i < 4; ++i) sizes.push_back(4);
  for (int i = 0; i < 60; ++i) sizes.push_back(5);
  for (int i = 0; i < 17; ++i) sizes.push_back(11);
  for (int i = 0; i < 9; ++i) sizes.push_back(16);

  HubDesign design;
  for (int e = 0; e < 90; ++e) {
    int row = e / 10, col = e % 10;
    std::set<std::string> members;
    members.insert("org-hub-r" + std::to_string(row));
    members.insert("org-hub-c" + std::to_string(col));
    members.insert("org-hub-d" + std::to_string((row + col) % 11));
    bool skip_fourth = e % 4 == 0 && e <= 80;  // trims sharing to 349 values
    if (!skip_fourth) {
      members.insert("org-hub-e" + std::to_string((row + 2 * col) % 11));
    }
    while (static_cast<int>(members.size()) < sizes[e]) {
      std::string value =
          "org-p" + padded(e, 2) + "-" + std::to_string(members.size());
      members.insert(value);
      design.private_values.push_back(value);
    }
    design.big_sets.push_back(std::move(members));
  }
  return design;
}

HubDesign build_kw_design() {
  // 186 collaborations on a 14x14 grid; expansions land on 1699 and 864
  // edges over 597 values.
  std::vector<int> sizes;
  for (int i = 0; i < 43; ++i) sizes.push_back(3);
  for (int i = 0; i < 139; ++i) sizes.push_back(5);
  for (int i = 0; i < 4; ++i) sizes.push_back(10);

  HubDesign design;
  for (int e = 0; e < 186; ++e) {
    int row = e / 14, col = e % 14;
    std::set<std::string> members;
    members.insert("kw-hub-r" + std::to_string(row));
    if (col < 7 || (col == 7 && row < 8)) {
      members.insert("kw-hub-c" + std::to_string(col));
    }
    while (static_cast<int>(members.size()) < sizes[e]) {
      std::string value =
          "kw-p" + padded(e, 3) + "-" + std::to_string(members.size());
      members.insert(value);
      design.private_values.push_back(value);
    }
    design.big_sets.push_back(std::move(members));
  }
  return design;
}

}  // namespace

std::vector<PublicationRecord> make_bgo_demo_corpus() {
  HubDesign org = build_org_design();
  HubDesign kw = build_kw_design();

  // organisation sets per record: 90 collaborations, 79 singletons, then
  // 28 repeat publications of the first singletons
  std::vector<std::set<std::string>> org_sets = org.big_sets;
  if (org.private_values.size() < 79) throw std::runtime_error("demo corpus: design broke");
  for (int i = 0; i < 79; ++i) org_sets.push_back({org.private_values[i]});
  for (int i = 0; i < 28; ++i) org_sets.push_back({org.private_values[i]});

  // keyword sets: 186 collaborations, 7 singletons, 2 repeats, 2 absent
  std::vector<std::set<std::string>> kw_sets = kw.big_sets;
  if (kw.private_values.size() < 7) throw std::runtime_error("demo corpus: design broke");
  for (int i = 0; i < 7; ++i) kw_sets.push_back({kw.private_values[i]});
  for (int i = 0; i < 2; ++i) kw_sets.push_back({kw.private_values[i]});

  std::vector<PublicationRecord> records;
  records.reserve(org_sets.size());
  for (std::size_t i = 0; i < org_sets.size(); ++i) {
    PublicationRecord record;
    record.id = "bgo-" + padded(static_cast<int>(i), 4);
    if (i % 2 == 0) {
      record.title = "bgo crystal scintillator response, series " + std::to_string(i);
      record.abstract_text = "Characterization of bgo crystal samples for detector use.";
    } else {
      record.title = "bgo calorimeter module tests, series " + std::to_string(i);
      record.abstract_text = "Energy resolution of a bgo calorimeter prototype.";
    }
    record.attributes["organisation"] = org_sets[i];
    if (i < kw_sets.size()) record.attributes["keyword"] = kw_sets[i];
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<PublicationRecord> make_synthetic_corpus(int n_records, std::uint64_t seed) {
  if (n_records <= 0) throw std::runtime_error("make_synthetic_corpus: n_records must be > 0");
  Rng rng(seed);

  const int org_communities = 8, org_pool = 25;
  const int kw_communities = 6, kw_pool = 30;

  auto pick_set = [&rng](const std::string& prefix, int community, int pool, int count,
                         int total_communities, double cross_chance) {
    std::set<std::string> values;
    while (static_cast<int>(values.size()) < count) {
      int member = static_cast<int>(rng.next_below(pool));
      values.insert(prefix + std::to_string(community) + "-" + std::to_string(member));
    }
    if (rng.next_double() < cross_chance) {
      int other = static_cast<int>(rng.next_below(total_communities));
      int member = static_cast<int>(rng.next_below(pool));
      values.insert(prefix + std::to_string(other) + "-" + std::to_string(member));
    }
    return values;
  };

  std::vector<PublicationRecord> records;
  records.reserve(n_records);
  for (int i = 0; i < n_records; ++i) {
    PublicationRecord record;
    record.id = "syn-" + padded(i, 4);

    int org_comm = static_cast<int>(rng.next_below(org_communities));
    int org_size = 4 + static_cast<int>(rng.next_below(4));  // 4..7
    record.attributes["organisation"] =
        pick_set("org", org_comm, org_pool, org_size, org_communities, 0.2);

    int kw_comm = static_cast<int>(rng.next_below(kw_communities));
    int kw_size = 4 + static_cast<int>(rng.next_below(5));  // 4..8
    record.attributes["keyword"] = pick_set("kw", kw_comm, kw_pool, kw_size, kw_communities, 0.2);

    record.title = "collaboration study " + std::to_string(i) + " in group " +
                   std::to_string(org_comm);
    record.abstract_text =
        "Joint study of topic cluster " + std::to_string(kw_comm) + " across institutes.";
    records.push_back(std::move(record));
  }
  return records;
}

void write_corpus(const std::vector<PublicationRecord>& records, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file.is_open()) throw std::runtime_error("cannot open corpus file for writing: " + path);
  for (const auto& record : records) {
    file << record_to_json_line(record) << "\n";
  }
}

}  // namespace hyperview
