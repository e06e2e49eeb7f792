#include "coxcluster/io.hpp"

#include <fstream>
#include <sstream>

namespace coxcluster {

CartanData parse_quiver(std::istream& in) {
  int n = 0;
  bool have_n = false;
  std::vector<Arrow> arrows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    auto bad = [&](const std::string& msg) {
      throw DomainError("quiver file line " + std::to_string(lineno) + ": " +
                        msg);
    };
    if (key == "type") {
      std::string label;
      if (!(ls >> label)) bad("missing type label");
      return CartanData::from_type(label);
    } else if (key == "n") {
      if (!(ls >> n) || n < 1) bad("bad rank");
      have_n = true;
    } else if (key == "arrow") {
      Arrow a{0, 0, 1};
      if (!(ls >> a.from >> a.to)) bad("arrow needs two endpoints");
      ls >> a.mult;  // optional, defaults to 1
      arrows.push_back(a);
    } else {
      bad("unknown directive '" + key + "'");
    }
  }
  if (!have_n) throw DomainError("quiver file gives neither type nor rank");
  return CartanData::from_quiver(n, arrows);
}

CartanData parse_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open quiver file: " + path);
  return parse_quiver(in);
}

nlohmann::json frame_json(const AdaptedFrame& frame) {
  nlohmann::json alphas = nlohmann::json::array();
  for (int t = 1; t <= frame.size(); ++t) alphas.push_back(frame.alpha(t));
  nlohmann::json w0 = nlohmann::json::array();
  for (int i = 1; i <= frame.rank(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 1; j <= frame.rank(); ++j) row.push_back(frame.w0().at(i, j));
    w0.push_back(row);
  }
  return {{"nu", frame.nu()},
          {"j_sequence", frame.j_sequence()},
          {"alpha_sequence", alphas},
          {"w0_matrix", w0}};
}

nlohmann::json selection_json(const AdaptedFrame& frame, const Selection& sel) {
  nlohmann::json out = {{"positions", sel},
                        {"reduced", is_reduced_w0(frame, sel)},
                        {"condition3", condition3(frame, sel)}};
  if (frame.cartan().simply_laced()) {
    RepTheory rt(frame);
    out["cluster_tilting"] = rt.is_cluster_tilting(sel);
    std::vector<int> mods;
    for (int t : sel) mods.push_back(rt.module_of(t));
    out["exceptional"] = rt.is_exceptional_sequence(mods);
  }
  return out;
}

nlohmann::json orbit_json(const OrbitReport& rep) {
  return {{"orbit_size", rep.orbit_size},
          {"factorization_count", rep.factorization_count},
          {"transitive", rep.transitive},
          {"truncated", rep.truncated},
          {"depth_used", rep.depth_used}};
}

nlohmann::json verdict_json(const PrefixVerdict& v) {
  const char* status = v.status == PrefixVerdict::Status::yes       ? "yes"
                       : v.status == PrefixVerdict::Status::no      ? "no"
                                                                    : "unknown";
  nlohmann::json witness = nullptr;
  if (v.witness) witness = v.witness->roots();
  return {{"status", status},
          {"witness_roots", witness},
          {"depth_used", v.depth_used}};
}

nlohmann::json step_json(const MutationStep& st) {
  return {{"from", st.from},
          {"k", st.k},
          {"removed", st.removed},
          {"inserted", st.inserted},
          {"scan_side", st.scan_side == ScanSide::left ? "left" : "right"},
          {"to", st.to}};
}

nlohmann::json exchange_graph_json(const ExchangeGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const MutationStep& st : g.edges)
    edges.push_back({{"from", st.from}, {"to", st.to}});
  return {{"base", g.base}, {"vertices", g.vertices}, {"edges", edges}};
}

nlohmann::json hom_table_json(const RepTheory& rt) {
  int nu = rt.count();
  nlohmann::json hom = nlohmann::json::array(), ext = nlohmann::json::array();
  for (int x = 1; x <= nu; ++x) {
    nlohmann::json hrow = nlohmann::json::array(),
                   erow = nlohmann::json::array();
    for (int y = 1; y <= nu; ++y) {
      hrow.push_back(rt.hom(x, y));
      erow.push_back(rt.ext(x, y));
    }
    hom.push_back(hrow);
    ext.push_back(erow);
  }
  nlohmann::json dims = nlohmann::json::array();
  for (int t = 1; t <= nu; ++t) dims.push_back(rt.indec(t).dim);
  return {{"dims", dims}, {"hom", hom}, {"ext", ext}};
}

std::string dot_ar_quiver(const LeveledQuiver& q) {
  std::ostringstream os;
  os << "digraph ar {\n  rankdir=LR;\n";
  for (const auto& v : q.vertices)
    os << "  v" << v.position << " [label=\"" << v.position << "\", level="
       << v.level << "];\n";
  for (const auto& a : q.arcs) {
    os << "  v" << a.from << " -> v" << a.to;
    if (a.wrap) os << " [style=dashed]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string dot_exchange_graph(const ExchangeGraph& g) {
  auto name = [](const Selection& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "_" : "") << s[i];
    return os.str();
  };
  std::ostringstream os;
  os << "graph exchange {\n";
  for (const Selection& v : g.vertices) {
    std::string n = name(v);
    os << "  s" << n << " [label=\"" << n << "\"];\n";
  }
  for (const MutationStep& st : g.edges)
    os << "  s" << name(st.from) << " -- s" << name(st.to) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace coxcluster
