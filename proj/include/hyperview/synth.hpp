#ifndef HYPERVIEW_SYNTH_HPP_
#define HYPERVIEW_SYNTH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "hyperview/corpus.hpp"

namespace hyperview {

/// Seeded synthetic corpus with community-structured organisation and
/// keyword collaborations. Titles all contain "study" so a match-all query
/// is `title:(study)`. Collaboration sizes are drawn so the mean hyperedge
/// size stays >= 4 for both attribute types.
std::vector<PublicationRecord> make_synthetic_corpus(int n_records, std::uint64_t seed);

/// Calibrated demo corpus: a "bgo crystal" publication set whose
/// organisation and keyword hypergraphs hit known round-number statistics
/// (169 / 193 collaborations, 349 / 597 attribute values, clique vs
/// extra-node edge counts 2639/647 and 1699/864). Fully deterministic; the
/// member sets use a hub-sharing design so no two collaborations share
/// more than one attribute value.
std::vector<PublicationRecord> make_bgo_demo_corpus();

void write_corpus(const std::vector<PublicationRecord>& records, const std::string& path);

}  // namespace hyperview

#endif  // HYPERVIEW_SYNTH_HPP_
