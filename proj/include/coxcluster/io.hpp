#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "coxcluster/adapted.hpp"
#include "coxcluster/braid.hpp"
#include "coxcluster/mutation.hpp"
#include "coxcluster/reptheory.hpp"
#include "coxcluster/schur.hpp"

namespace coxcluster {

// Quiver description, one directive per line:
//   type <label>              (e.g. "type A4"; overrides everything else)
//   n <rank>
//   arrow <from> <to> [mult]
// '#' starts a comment.
CartanData parse_quiver(std::istream& in);
CartanData parse_quiver_file(const std::string& path);

nlohmann::json frame_json(const AdaptedFrame& frame);
nlohmann::json selection_json(const AdaptedFrame& frame, const Selection& sel);
nlohmann::json orbit_json(const OrbitReport& rep);
nlohmann::json verdict_json(const PrefixVerdict& v);
nlohmann::json step_json(const MutationStep& st);
nlohmann::json exchange_graph_json(const ExchangeGraph& g);
nlohmann::json hom_table_json(const RepTheory& rt);

std::string dot_ar_quiver(const LeveledQuiver& q);
std::string dot_exchange_graph(const ExchangeGraph& g);

}  // namespace coxcluster
