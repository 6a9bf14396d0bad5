#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ltls/lemmas.hpp"
#include "ltls/linspace.hpp"

namespace ltls::io {

using nlohmann::json;

/// {"v": int, "lines": [[int,...],...]} with lines in canonical order.
json to_json(const ls::LinearSpace& space);
/// Throws Schema on missing or mistyped fields; InvalidSpace from the constructor.
ls::LinearSpace space_from_json(const json& j);

struct Metadata {
  std::string construction;
  std::uint64_t q = 0;
  std::optional<ls::RegularParams> params;
};

json to_json(const Metadata& m);
Metadata metadata_from_json(const json& j);

/// Keys: label, group_order, v, stabilizer_order, b_divisors, k, n_g, r_g_max,
/// min_k. Integers may be JSON numbers or decimal strings.
lemmas::CandidateCase case_from_json(const json& j);

/// {"case", "lemma", "verdict", "witnesses"}; witness values are exact number strings.
json to_json(const lemmas::EliminationReport& r);

/// Fixed-width table row: case, lemma, verdict, key witness.
std::string table_header();
std::string table_row(const lemmas::EliminationReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace ltls::io
