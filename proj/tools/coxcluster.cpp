#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "coxcluster/io.hpp"
#include "coxcluster/wiring.hpp"

using namespace coxcluster;

namespace {

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

Root parse_root(const std::string& s) {
  Root r;
  for (int v : parse_ints(s)) r.push_back(v);
  return r;
}

struct Options {
  std::string type;
  std::string quiver_file;
  bool json = false;
  unsigned seed = 0;  // reserved for sampled runs
  std::optional<int> depth;
};

CartanData cartan_of(const Options& o) {
  if (!o.type.empty()) return CartanData::from_type(o.type);
  if (!o.quiver_file.empty()) return parse_quiver_file(o.quiver_file);
  throw DomainError("specify --type or --quiver");
}

void emit(const Options& o, const nlohmann::json& j, const std::string& text) {
  if (o.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for Coxeter/cluster combinatorics"};
  app.require_subcommand(1);
  app.fallthrough();  // allow the global flags after the subcommand too

  Options o;
  app.add_option("--type", o.type, "Cartan type label, e.g. A4, D4, G2");
  app.add_option("--quiver", o.quiver_file, "quiver description file");
  app.add_flag("--json", o.json, "emit JSON");
  app.add_option("--seed", o.seed, "seed for sampled runs");
  int depth_flag = -1;
  app.add_option("--depth", depth_flag, "search depth for orbit/schur");

  auto* roots_cmd = app.add_subcommand("roots", "list the positive roots");
  auto* word_cmd = app.add_subcommand("word", "adapted word and root frame");

  std::string positions;
  auto* select_cmd =
      app.add_subcommand("select", "evaluate the cluster conditions");
  select_cmd->add_option("--positions", positions, "comma-separated positions")
      ->required();

  bool count_only = false;
  auto* clusters_cmd = app.add_subcommand("clusters", "enumerate clusters");
  clusters_cmd->add_flag("--count", count_only, "print the count only");

  int direction = 0;
  auto* mutate_cmd = app.add_subcommand("mutate", "mutate a cluster");
  mutate_cmd->add_option("--positions", positions, "cluster positions")
      ->required();
  mutate_cmd->add_option("--k", direction, "direction 1..n")->required();

  auto* orbit_cmd =
      app.add_subcommand("orbit", "Hurwitz orbit of the simple factorization");

  std::string root_arg;
  auto* schur_cmd = app.add_subcommand("schur", "real-Schur-root prefix test");
  schur_cmd->add_option("--root", root_arg, "comma-separated coordinates")
      ->required();

  std::string what = "wiring", outfile;
  auto* render_cmd = app.add_subcommand("render", "emit SVG/DOT figures");
  render_cmd->add_option("--what", what, "wiring | w0 | ar | exchange");
  render_cmd->add_option("--positions", positions, "selection for the figure");
  render_cmd->add_option("--out", outfile, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (depth_flag >= 0) o.depth = depth_flag;

  try {
    if (roots_cmd->parsed()) {
      CartanData cd = cartan_of(o);
      auto phi = positive_roots(cd);
      nlohmann::json j = nlohmann::json::array();
      std::ostringstream text;
      for (const Root& r : phi) {
        j.push_back(r);
        text << root_to_string(r) << "\n";
      }
      emit(o, j, text.str());
    } else if (word_cmd->parsed()) {
      CartanData cd = cartan_of(o);
      AdaptedFrame frame = AdaptedFrame::build(cd);
      std::ostringstream text;
      text << "j:";
      for (int l : frame.j_sequence()) text << ' ' << l;
      text << "\nw0:";
      for (int l : frame.w0_word()) text << ' ' << l;
      text << "\n";
      emit(o, frame_json(frame), text.str());
    } else if (select_cmd->parsed()) {
      CartanData cd = cartan_of(o);
      AdaptedFrame frame = AdaptedFrame::build(cd);
      Selection sel = parse_ints(positions);
      nlohmann::json j = selection_json(frame, sel);
      std::ostringstream text;
      for (auto& [k, v] : j.items())
        if (v.is_boolean()) text << k << ": " << (v.get<bool>() ? "yes" : "no") << "\n";
      emit(o, j, text.str());
    } else if (clusters_cmd->parsed()) {
      CartanData cd = cartan_of(o);
      AdaptedFrame frame = AdaptedFrame::build(cd);
      std::vector<Selection> clusters;
      for (const Selection& s : all_selections(frame))
        if (is_reduced_w0(frame, s)) clusters.push_back(s);
      if (count_only) {
        emit(o, {{"count", clusters.size()}},
             std::to_string(clusters.size()) + "\n");
      } else {
        nlohmann::json j = clusters;
        std::ostringstream text;
        for (const Selection& s : clusters) {
          for (std::size_t i = 0; i < s.size(); ++i)
            text << (i ? "," : "") << s[i];
          text << "\n";
        }
        emit(o, j, text.str());
      }
    } else if (mutate_cmd->parsed()) {
      CartanData cd = cartan_of(o);
      AdaptedFrame frame = AdaptedFrame::build(cd);
      MutationStep st = algebraic_mutate(frame, parse_ints(positions), direction);
      std::ostringstream text;
      text << "removed " << st.removed << " inserted " << st.inserted << " ->";
      for (std::size_t i = 0; i < st.to.size(); ++i)
        text << (i ? "," : " ") << st.to[i];
      text << "\n";
      emit(o, step_json(st), text.str());
    } else if (orbit_cmd->parsed()) {
      CartanData cd = cartan_of(o);
      std::vector<Root> simples;
      for (int i = 1; i <= cd.rank(); ++i) {
        Root e(cd.rank(), 0);
        e[i - 1] = 1;
        simples.push_back(e);
      }
      OrbitOptions opts;
      opts.depth_limit = o.depth;
      OrbitReport rep = hurwitz_orbit(Factorization(cd, simples), opts);
      std::ostringstream text;
      text << "orbit size " << rep.orbit_size;
      if (rep.factorization_count >= 0)
        text << ", factorizations " << rep.factorization_count
             << (rep.transitive ? ", transitive" : ", NOT transitive");
      text << "\n";
      emit(o, orbit_json(rep), text.str());
    } else if (schur_cmd->parsed()) {
      CartanData cd = cartan_of(o);
      PrefixVerdict v = prefix_test(cd, parse_root(root_arg), o.depth);
      nlohmann::json j = verdict_json(v);
      std::ostringstream text;
      text << j["status"].get<std::string>() << "\n";
      emit(o, j, text.str());
    } else if (render_cmd->parsed()) {
      CartanData cd = cartan_of(o);
      std::string doc;
      if (what == "wiring") {
        AdaptedFrame frame = AdaptedFrame::build(cd);
        doc = wiring_svg(wiring_for_selection(frame, parse_ints(positions)));
      } else if (what == "w0") {
        AdaptedFrame frame = AdaptedFrame::build(cd);
        doc = wiring_svg(wiring_w0(frame));
      } else if (what == "ar") {
        AdaptedFrame frame = AdaptedFrame::build(cd);
        doc = dot_ar_quiver(ar_quiver_from_word(frame, parse_ints(positions)));
      } else if (what == "exchange") {
        AdaptedFrame frame = AdaptedFrame::build(cd);
        doc = dot_exchange_graph(exchange_graph(frame));
      } else {
        std::cerr << "unknown figure kind: " << what << "\n";
        return 2;
      }
      if (outfile.empty()) {
        std::cout << doc;
      } else {
        std::ofstream out(outfile);
        if (!out) throw DomainError("cannot write " + outfile);
        out << doc;
      }
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
