#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "norminf/lattice.hpp"
#include "norminf/pair_set.hpp"
#include "norminf/symmetry.hpp"

namespace norminf {

inline constexpr const char* kToolVersion = "0.1.0";

struct ParsedSystem {
  LatticePtr lattice;
  PairSet members;
};

// JSON: {"group": "2,3", "arrows": [[[0,0],[1,0]], ...]} with arrows as
// exponent-vector pairs in canonical pair order.
nlohmann::ordered_json to_json(const Lattice& lattice, const PairSet& members);
std::string to_json_text(const Lattice& lattice, const PairSet& members);

/// Parses a system document. Arrow order in the input is free. When
/// `expected` is given the document's group must match it. The result is not
/// checked against the axioms. Throws FormatError / InvalidArgument.
ParsedSystem parse_system_json(std::string_view text, const LatticePtr& expected = nullptr);

/// {"group": ..., "systems": [[arrow, ...], ...]} for bulk output.
nlohmann::ordered_json systems_to_json(const Lattice& lattice, std::span<const PairSet> systems);

// Hex: the bit vector as a big-endian hex number, ceil(pairs / 4) digits
// (at least one), lowercase.
std::string to_hex(const Lattice& lattice, const PairSet& members);
PairSet from_hex(const Lattice& lattice, std::string_view hex);

struct CatalogueEntry {
  PairSet members;
  std::optional<int> comp;
};

struct Catalogue {
  LatticePtr lattice;
  std::string tool_version;
  std::vector<CatalogueEntry> entries;
};

/// Text catalogue: a four-line header (magic, group, pair count with layout
/// fingerprint, tool version) then one hex entry per line, optionally
/// followed by " d=<comp>". Entries must be strictly increasing.
void write_catalogue(std::ostream& out, const Lattice& lattice, std::span<const PairSet> systems,
                     bool annotate_comp);
Catalogue read_catalogue(std::istream& in);

/// Graphviz digraph, one node per subgroup ranked by height, one edge per
/// arrow, drawn bottom to top.
std::string to_dot(const Lattice& lattice, const PairSet& members, Naming naming = Naming::concrete);

/// CSV table "d,count" for per-class counts.
std::string comp_table_csv(const std::vector<std::uint64_t>& by_comp);

}  // namespace norminf
