#ifndef FROBGRAPH_IO_HPP
#define FROBGRAPH_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "frobgraph/examples.hpp"
#include "frobgraph/frobenius.hpp"
#include "frobgraph/orient.hpp"
#include "frobgraph/tqft.hpp"

namespace frobgraph {

using Json = nlohmann::ordered_json;

// Plain modules are {"components": {"deg": [labels]}}; products are
// {"factors": [plain, ...]}.
Json module_to_json(const GradedModule& m);
GradedModule module_from_json(const Json& j);

// {"source", "target", "degree", "entries": [{"from", "to", "value"}]} with
// basis vectors named by label and values as "p/q" strings.
Json map_to_json(const GradedMap& f);
GradedMap map_from_json(const Json& j);
// Entries only, against known source and target.
Json entries_to_json(const GradedMap& f);
GradedMap map_from_entries(const Json& entries, const GradedModule& source, const GradedModule& target, int degree);

Json element_to_json(const Element& x);
Element element_from_json(const Json& j);

Json graph_to_json(const Graph& g);
// Runs no validation; call validate() on the result.
Graph graph_from_json(const Json& j);

Json word_to_json(const OrientationWord& w);
OrientationWord word_from_json(const Json& j);
Json orientation_to_json(const CdOrientation& o);
CdOrientation orientation_from_json(const Json& j);

// {"module", "c", "d", "flavor", "mu", "eta", "nu", "eps"} with the maps as
// entry lists.
Json algebra_to_json(const FrobeniusData& f);
FrobeniusData algebra_from_json(const Json& j);

// {"terms":[{"word":[["x",0],["y",1]],"value":"2"}]}: letters as (label,
// degree) pairs.  Reading checks every degree against f.A.
Json hh_chain_to_json(const HHChain& x, const FrobeniusData& f);
HHChain hh_chain_from_json(const Json& j, const FrobeniusData& f);

Json report_to_json(const CheckReport& r);
Json decomposition_to_json(const Decomposition& d);

struct CatalogueEntry {
  std::string name;
  std::string description;
  Graph graph;
};
// The graphs shipped in data/catalogue, built in code.  All are fat and
// have at most 8 edges.
std::vector<CatalogueEntry> builtin_catalogue();
Json catalogue_entry_to_json(const CatalogueEntry& e);
// Writes one <name>.json per builtin entry.
void write_catalogue(const std::string& dir);
// Every *.json file in dir, sorted by file name.
std::vector<CatalogueEntry> load_catalogue(const std::string& dir);
// FROBGRAPH_CATALOG if set, else the source tree's data/catalogue.
std::string default_catalogue_dir();

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace frobgraph

#endif  // FROBGRAPH_IO_HPP
