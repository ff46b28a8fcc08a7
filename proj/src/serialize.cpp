#include "norminf/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "norminf/errors.hpp"
#include "norminf/transfer_system.hpp"

namespace norminf {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kCatalogueMagic = "# norminf catalogue v1";

json arrow_json(const Lattice& lattice, const Arrow& a) {
  return json::array({lattice.subgroup(a.source).exponents, lattice.subgroup(a.target).exponents});
}

json arrows_json(const Lattice& lattice, const PairSet& members) {
  json arrows = json::array();
  members.for_each([&](std::size_t i) { arrows.push_back(arrow_json(lattice, lattice.pair(i))); });
  return arrows;
}

DivisorId subgroup_from_json(const Lattice& lattice, const json& j) {
  if (!j.is_array()) throw FormatError("subgroup must be an exponent array");
  Subgroup h;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw FormatError("exponents must be integers");
    h.exponents.push_back(x.get<int>());
  }
  return lattice.index_of(h);
}

std::string hex_word(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string expect_line(std::istream& in, std::string_view prefix) {
  std::string line;
  if (!std::getline(in, line) || line.rfind(prefix, 0) != 0) {
    throw FormatError("catalogue header: expected a line starting with '" + std::string(prefix) +
                      "'");
  }
  return line.substr(prefix.size());
}

}  // namespace

json to_json(const Lattice& lattice, const PairSet& members) {
  return json{{"group", lattice.spec().to_string()}, {"arrows", arrows_json(lattice, members)}};
}

std::string to_json_text(const Lattice& lattice, const PairSet& members) {
  return to_json(lattice, members).dump() + "\n";
}

ParsedSystem parse_system_json(std::string_view text, const LatticePtr& expected) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("arrows") || !doc["arrows"].is_array()) {
    throw FormatError("system JSON needs an \"arrows\" array");
  }
  ParsedSystem out;
  if (doc.contains("group")) {
    if (!doc["group"].is_string()) throw FormatError("\"group\" must be a string");
    auto spec = GroupSpec::parse(doc["group"].get<std::string>());
    if (expected && !(expected->spec() == spec)) {
      throw InvalidArgument("system is for group " + spec.to_string() + ", expected " +
                            expected->spec().to_string());
    }
    out.lattice = expected ? expected : Lattice::build(spec);
  } else if (expected) {
    out.lattice = expected;
  } else {
    throw FormatError("system JSON has no \"group\" and none was supplied");
  }
  require_pair_capacity(*out.lattice);
  for (const auto& a : doc["arrows"]) {
    if (!a.is_array() || a.size() != 2) throw FormatError("each arrow must be [source, target]");
    DivisorId s = subgroup_from_json(*out.lattice, a[0]);
    DivisorId t = subgroup_from_json(*out.lattice, a[1]);
    out.members.set(out.lattice->pair_index(s, t));
  }
  return out;
}

json systems_to_json(const Lattice& lattice, std::span<const PairSet> systems) {
  json list = json::array();
  for (const auto& s : systems) list.push_back(arrows_json(lattice, s));
  return json{{"group", lattice.spec().to_string()}, {"systems", std::move(list)}};
}

std::string to_hex(const Lattice& lattice, const PairSet& members) {
  const std::size_t digits = std::max<std::size_t>(1, (lattice.pair_count() + 3) / 4);
  std::string full;
  for (std::size_t w = PairSet::kWords; w-- > 0;) full += hex_word(members.word(w));
  return full.substr(full.size() - digits);
}

PairSet from_hex(const Lattice& lattice, std::string_view hex) {
  require_pair_capacity(lattice);
  const std::size_t digits = std::max<std::size_t>(1, (lattice.pair_count() + 3) / 4);
  if (hex.empty() || hex.size() > digits) {
    throw FormatError("hex entry '" + std::string(hex) + "' must have 1.." +
                      std::to_string(digits) + " digits");
  }
  PairSet s;
  std::size_t bit = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
    char c = *it;
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else throw FormatError("bad hex digit in '" + std::string(hex) + "'");
    for (int k = 0; k < 4; ++k) {
      if ((v >> k) & 1) {
        if (bit + k >= lattice.pair_count()) {
          throw FormatError("hex entry '" + std::string(hex) + "' sets a bit past the pair count");
        }
        s.set(bit + k);
      }
    }
  }
  return s;
}

void write_catalogue(std::ostream& out, const Lattice& lattice, std::span<const PairSet> systems,
                     bool annotate_comp) {
  out << kCatalogueMagic << '\n';
  out << "group " << lattice.spec().to_string() << '\n';
  out << "pairs " << lattice.pair_count() << " fingerprint " << hex_word(lattice.fingerprint())
      << '\n';
  out << "tool norminf " << kToolVersion << '\n';
  for (const auto& s : systems) {
    out << to_hex(lattice, s);
    if (annotate_comp) out << " d=" << comp_index(lattice, s).d;
    out << '\n';
  }
}

Catalogue read_catalogue(std::istream& in) {
  std::string magic;
  if (!std::getline(in, magic) || magic != kCatalogueMagic) {
    throw FormatError("not a norminf catalogue");
  }
  Catalogue cat;
  cat.lattice = Lattice::build(GroupSpec::parse(expect_line(in, "group ")));
  {
    std::istringstream layout(expect_line(in, "pairs "));
    std::size_t pairs = 0;
    std::string word, fingerprint;
    layout >> pairs >> word >> fingerprint;
    if (word != "fingerprint" || pairs != cat.lattice->pair_count() ||
        fingerprint != hex_word(cat.lattice->fingerprint())) {
      throw FormatError("catalogue pair layout does not match group " +
                        cat.lattice->spec().to_string());
    }
  }
  cat.tool_version = expect_line(in, "tool norminf ");

  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string hex, note;
    fields >> hex;
    CatalogueEntry e{from_hex(*cat.lattice, hex), std::nullopt};
    if (fields >> note) {
      if (note.rfind("d=", 0) != 0) throw FormatError("unknown annotation '" + note + "'");
      e.comp = std::stoi(note.substr(2));
    }
    if (!cat.entries.empty() && !(cat.entries.back().members < e.members)) {
      throw FormatError("catalogue entries must be strictly increasing");
    }
    cat.entries.push_back(e);
  }
  return cat;
}

std::string to_dot(const Lattice& lattice, const PairSet& members, Naming naming) {
  std::ostringstream out;
  out << "digraph \"" << lattice.spec().to_string() << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  std::map<int, std::vector<DivisorId>> ranks;
  for (DivisorId v = 0; v < lattice.size(); ++v) {
    ranks[lattice.height(v)].push_back(v);
    out << "  v" << v << " [label=\"" << lattice.name(v, naming) << "\"];\n";
  }
  for (const auto& [height, ids] : ranks) {
    out << "  { rank=same;";
    for (auto v : ids) out << " v" << v << ';';
    out << " }\n";
  }
  members.for_each([&](std::size_t i) {
    const Arrow& a = lattice.pair(i);
    out << "  v" << a.source << " -> v" << a.target << ";\n";
  });
  out << "}\n";
  return out.str();
}

std::string comp_table_csv(const std::vector<std::uint64_t>& by_comp) {
  std::ostringstream out;
  out << "d,count\n";
  for (std::size_t d = 0; d < by_comp.size(); ++d) out << d << ',' << by_comp[d] << '\n';
  return out.str();
}

}  // namespace norminf
