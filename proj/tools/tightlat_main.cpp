// Command line front end. Exit codes: 0 success or positive answer,
// 1 certified negative answer, 2 search bound exceeded, 3 input error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tightlat/embedding.hpp"
#include "tightlat/fixtures.hpp"
#include "tightlat/io.hpp"
#include "tightlat/lattice.hpp"
#include "tightlat/matroid.hpp"
#include "tightlat/modeling.hpp"
#include "tightlat/pls.hpp"

namespace tl = tightlat;
using Json = nlohmann::ordered_json;

namespace {

constexpr const char* kFixtureEnv = "TIGHTLAT_FIXTURES";

// Inputs are resolved as: an existing path, a path under $TIGHTLAT_FIXTURES,
// or a built-in fixture named by the file stem.
std::string resolve_path(const std::string& given) {
  namespace fs = std::filesystem;
  if (fs::exists(given)) return given;
  if (const char* dir = std::getenv(kFixtureEnv)) {
    fs::path p = fs::path(dir) / given;
    if (fs::exists(p)) return p.string();
  }
  return {};
}

std::string stem_of(const std::string& given) {
  return std::filesystem::path(given).stem().string();
}

bool looks_like_json(const std::string& text) {
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) return c == '{';
  return false;
}

tl::Lattice load_lattice(const std::string& given) {
  if (std::string path = resolve_path(given); !path.empty()) {
    std::string text = tl::read_text_file(path);
    return looks_like_json(text) ? tl::lattice_from_json(text)
                                 : tl::parse_lattice(text);
  }
  return tl::lattice_fixture(stem_of(given));
}

tl::Pls load_pls(const std::string& given) {
  if (std::string path = resolve_path(given); !path.empty()) {
    std::string text = tl::read_text_file(path);
    return looks_like_json(text) ? tl::pls_from_json(text) : tl::parse_pls(text);
  }
  return tl::pls_fixture(stem_of(given));
}

tl::LabeledGraph load_graph(const std::string& given) {
  if (std::string path = resolve_path(given); !path.empty()) {
    std::string text = tl::read_text_file(path);
    return looks_like_json(text) ? tl::graph_from_json(text)
                                 : tl::parse_graph(text);
  }
  tl::fail(tl::Err::ParseError, "cannot resolve graph input: " + given);
}

tl::BinaryMatroid load_matroid(const std::string& given) {
  if (std::string path = resolve_path(given); !path.empty()) {
    std::string text = tl::read_text_file(path);
    return looks_like_json(text) ? tl::matroid_from_json(text)
                                 : tl::parse_matroid(text);
  }
  return tl::matroid_fixture(stem_of(given));
}

const char* yn(bool b) { return b ? "yes" : "no"; }

// The point -> itself bijection used when a matroid's ground set is the
// point set of the PLS.
tl::PointToElement identity_psi(const tl::Pls& p) {
  tl::PointToElement psi;
  for (int q : p.points) psi.emplace_back(q, q);
  return psi;
}

int cmd_analyze_lattice(const std::string& input, bool json) {
  tl::Lattice l = load_lattice(input);
  tl::LatticeProfile pr = tl::classify_lattice(l);
  auto ji = tl::join_irreducibles(l);
  tl::JiBound bound = tl::ji_bound(l);
  int s = -1;
  if (pr.modular) s = tl::maximal_congruences(l).s;
  if (json) {
    Json j;
    j["n"] = l.n;
    j["height"] = pr.height;
    j["graded"] = pr.graded;
    j["modular"] = pr.modular;
    j["semimodular"] = pr.semimodular;
    j["distributive"] = pr.distributive;
    j["two_distributive"] = pr.two_distributive;
    j["has_covering_m4"] = pr.has_covering_m4;
    j["thin"] = pr.thin;
    j["join_irreducibles"] = ji.j;
    j["ji_bound"] = {{"lhs", bound.lhs}, {"rhs", bound.rhs}, {"sharp", bound.sharp}};
    if (s >= 0) j["subdirect_factors"] = s;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "n " << l.n << "\nheight " << pr.height << "\ngraded "
              << yn(pr.graded) << "\nmodular " << yn(pr.modular)
              << "\nsemimodular " << yn(pr.semimodular) << "\ndistributive "
              << yn(pr.distributive) << "\ntwo-distributive "
              << yn(pr.two_distributive) << "\ncovering-m4 "
              << yn(pr.has_covering_m4) << "\nthin " << yn(pr.thin)
              << "\njoin-irreducibles " << ji.j.size() << "\nji-bound "
              << bound.lhs << " >= " << bound.rhs
              << (bound.sharp ? " (sharp)" : "") << "\n";
    if (s >= 0) std::cout << "subdirect-factors " << s << "\n";
  }
  return 0;
}

int cmd_mopls(const std::string& input, bool json) {
  tl::Lattice l = load_lattice(input);
  tl::Mopls m = tl::extract_mopls(l);
  if (json) {
    Json j;
    j["points"] = m.points;
    j["order"] = Json::array();
    for (auto [p, q] : m.order) j["order"].push_back({p, q});
    j["lines"] = Json::array();
    for (const auto& ln : m.lines) j["lines"].push_back({ln[0], ln[1], ln[2]});
    j["line_joins"] = m.line_join;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "points";
    for (int p : m.points) std::cout << " " << p;
    std::cout << "\norder";
    for (auto [p, q] : m.order) std::cout << " " << p << "<" << q;
    std::cout << "\n";
    for (size_t i = 0; i < m.lines.size(); ++i)
      std::cout << "line " << m.lines[i][0] << " " << m.lines[i][1] << " "
                << m.lines[i][2] << " join " << m.line_join[i] << "\n";
  }
  return 0;
}

int cmd_classify_pls(const std::string& input, int bound_cycles, bool json) {
  tl::Pls p = load_pls(input);
  tl::PlsProfile pr = tl::classify_pls(p, bound_cycles);
  tl::PlsComponents comp = tl::components_and_rank(p);
  size_t n_cycles = tl::all_cycles(p, bound_cycles).size();
  if (json) {
    Json j;
    j["points"] = p.points.size();
    j["lines"] = p.lines.size();
    j["rk"] = comp.rk;
    j["components"] = comp.c;
    j["cycles"] = n_cycles;
    j["acyclic"] = pr.acyclic;
    j["qimp"] = pr.qimp;
    j["ump"] = pr.ump;
    j["nmpl"] = pr.nmpl;
    j["bmpl"] = pr.bmpl;
    j["sparse"] = pr.sparse;
    j["small_girth"] = pr.small_girth;
    j["testifying_ordering"] = pr.testifying_ordering;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "points " << p.points.size() << "\nlines " << p.lines.size()
              << "\nrk " << comp.rk << "\ncomponents " << comp.c << "\ncycles "
              << n_cycles << "\nacyclic " << yn(pr.acyclic) << "\nqimp "
              << yn(pr.qimp) << "\nump " << yn(pr.ump) << "\nnmpl "
              << yn(pr.nmpl) << "\nbmpl " << yn(pr.bmpl) << "\nsparse "
              << yn(pr.sparse) << "\nsmall-girth " << yn(pr.small_girth)
              << "\n";
    if (!pr.testifying_ordering.empty()) {
      std::cout << "testifying-ordering";
      for (int i : pr.testifying_ordering) std::cout << " " << i;
      std::cout << "\n";
    }
  }
  return 0;
}

void print_graph_result(const tl::Pls& p, const tl::LabeledGraph& g,
                        const std::string& route, bool json) {
  auto rm = tl::check_rank_model(p, g);
  bool lp = tl::check_line_pres(p, g);
  if (json) {
    Json j;
    j["route"] = route;
    j["graph"] = Json::parse(tl::graph_json(g));
    j["line_preserving"] = lp;
    j["rank_model"] = rm.ok;
    j["mrk"] = rm.mrk;
    j["rk"] = rm.rk;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "route " << route << "\n"
              << tl::print_graph(g) << "line-preserving " << yn(lp)
              << "\nrank-model " << yn(rm.ok) << " (mrk " << rm.mrk << ", rk "
              << rm.rk << ")\n";
  }
}

int cmd_model(const std::string& input, const std::string& graph_in,
              const std::string& matroid_in, bool binary, int rank,
              bool small_girth, int bound_cycles, bool json) {
  tl::Pls p = load_pls(input);

  if (!graph_in.empty() || !matroid_in.empty()) {  // check a provided model
    bool lp, rank_ok;
    int mrk, rk;
    if (!graph_in.empty()) {
      tl::LabeledGraph g = load_graph(graph_in);
      lp = tl::check_line_pres(p, g);
      auto rm = tl::check_rank_model(p, g);
      rank_ok = rm.ok, mrk = rm.mrk, rk = rm.rk;
    } else {
      tl::BinaryMatroid m = load_matroid(matroid_in);
      auto psi = identity_psi(p);
      lp = tl::check_line_pres(p, m, psi);
      auto rm = tl::check_rank_model(p, m, psi);
      rank_ok = rm.ok, mrk = rm.mrk, rk = rm.rk;
    }
    if (json) {
      Json j;
      j["line_preserving"] = lp;
      j["rank_model"] = rank_ok;
      j["mrk"] = mrk;
      j["rk"] = rk;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "line-preserving " << yn(lp) << "\nrank-model "
                << yn(rank_ok) << " (mrk " << mrk << ", rk " << rk << ")\n";
    }
    return lp && rank_ok ? 0 : 1;
  }

  if (binary) {
    auto r = tl::binary_model_search(p, rank);
    if (!r.found) {
      std::cout << "no line-preserving labeling"
                << (rank >= 0 ? " of rank " + std::to_string(rank) : "")
                << " exists\n";
      return 1;
    }
    if (json) {
      Json j;
      j["matroid"] = Json::parse(tl::matroid_json(r.model));
      j["rank"] = r.model.rank();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << tl::print_matroid(r.model) << "rank " << r.model.rank()
                << "\n";
    }
    return 0;
  }

  tl::PlsProfile pr = tl::classify_pls(p, bound_cycles);
  if (pr.ump) {
    print_graph_result(p, tl::standard_graph_ump(p), "standard-ump", json);
    return 0;
  }
  auto rec = tl::recognize_augmented_ump(p, !small_girth);
  if (rec.yes) {
    auto records = tl::augmentation_records(p, rec.removed_paths, bound_cycles);
    auto gm = tl::model_augmented_ump(
        p, records,
        small_girth ? tl::AugmentMode::small_girth : tl::AugmentMode::type1,
        bound_cycles);
    print_graph_result(p, gm.graph, "augmented-replay", json);
    return 0;
  }
  auto glue = tl::naive_glue_search(p, true);
  if (glue.found) {
    print_graph_result(p, glue.graph, "glue-search", json);
    return 0;
  }
  std::cout << "no graph in the searched class line-pres rank-models the "
               "input\n";
  return 1;
}

int cmd_embed(const std::string& input, bool json) {
  tl::Lattice l = load_lattice(input);
  tl::PipelineReport rep = tl::pipeline_embed_thin(l);
  if (!rep.embedded) {
    std::cout << "no embedding: " << rep.reason << "\n";
    return 1;
  }
  if (json) {
    Json j;
    j["branch"] = rep.branch;
    j["embedding"] = Json::parse(tl::embedding_json(rep.embedding));
    j["model"] = Json::parse(tl::graph_json(rep.model));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "branch " << rep.branch << "\nground " << rep.embedding.n
              << "\n"
              << tl::print_embedding(rep.embedding);
  }
  return 0;
}

int cmd_verify(const std::string& input, bool json) {
  std::string path = resolve_path(input);
  tl::require(!path.empty(), tl::Err::ParseError,
              "cannot resolve embedding input: " + input);
  tl::PartitionEmbedding e = tl::embedding_from_json(tl::read_text_file(path));
  const auto& c = e.certificate;
  if (json) {
    Json j;
    j["homomorphism"] = c.is_homomorphism;
    j["cover_preserving"] = c.is_cover_preserving;
    j["bottom_to_bottom"] = c.maps_bottom_to_bottom;
    j["tight"] = c.tight();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "homomorphism " << yn(c.is_homomorphism)
              << "\ncover-preserving " << yn(c.is_cover_preserving)
              << "\nbottom-to-bottom " << yn(c.maps_bottom_to_bottom)
              << "\ntight " << yn(c.tight()) << "\n";
  }
  return c.tight() ? 0 : 1;
}

int cmd_search(const std::string& input, int ground, long long bound,
               bool direct, bool json) {
  tl::Lattice l = load_lattice(input);
  if (direct) {
    auto r = tl::direct_embedding_search(l, ground, bound);
    if (!r.found) {
      std::cout << "no tight embedding into partitions of a " << ground
                << "-element set\n";
      return 1;
    }
    if (json) {
      std::cout << tl::embedding_json(r.embedding);
    } else {
      std::cout << "ground " << ground << "\n"
                << tl::print_embedding(r.embedding);
    }
    return 0;
  }
  auto r = tl::brute_force_embedding_search(l, ground, bound);
  if (!r.found) {
    std::cout << "no tight embedding into partitions of a " << ground
              << "-element set\n";
    return 1;
  }
  if (json) {
    Json j;
    j["graph"] = Json::parse(tl::graph_json(r.graph));
    j["embedding"] = Json::parse(tl::embedding_json(r.embedding));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << tl::print_graph(r.graph) << "ground " << ground << "\n"
              << tl::print_embedding(r.embedding);
  }
  return 0;
}

int cmd_trigger_check(const std::string& input, bool json) {
  tl::Pls p = load_pls(input);
  auto r = tl::graph_trigger_check(p);
  if (json) {
    Json j;
    j["trigger"] = r.is_trigger;
    j["vacuous"] = r.vacuous;
    if (r.has_counterexample)
      j["counterexample"] = Json::parse(tl::matroid_json(r.counterexample));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "trigger " << yn(r.is_trigger) << "\nvacuous " << yn(r.vacuous)
              << "\n";
    if (r.has_counterexample)
      std::cout << "counterexample (line-pres rank-model, not graphic):\n"
                << tl::print_matroid(r.counterexample);
  }
  return r.is_trigger ? 0 : 1;
}

int cmd_fixtures(const std::string& write_dir, bool json) {
  namespace fs = std::filesystem;
  if (!write_dir.empty()) {
    fs::create_directories(write_dir);
    for (const auto& f : tl::fixtures()) {
      std::string ext = f.kind == "lattice" ? ".lat"
                        : f.kind == "pls"   ? ".pls"
                                            : ".matroid";
      std::string content = f.kind == "lattice" ? tl::print_lattice(f.lattice)
                            : f.kind == "pls"   ? tl::print_pls(f.pls)
                                                : tl::print_matroid(f.matroid);
      tl::write_text_file((fs::path(write_dir) / (f.name + ext)).string(),
                          content);
    }
    std::cout << "wrote " << tl::fixtures().size() << " fixtures to "
              << write_dir << "\n";
    return 0;
  }
  if (json) {
    Json j = Json::array();
    for (const auto& f : tl::fixtures()) {
      Json e;
      e["name"] = f.name;
      e["kind"] = f.kind;
      e["reconstructed"] = f.reconstructed;
      e["note"] = f.note;
      if (f.kind == "lattice") e["size"] = f.lattice.n;
      if (f.kind == "pls")
        e["size"] = {{"points", f.pls.points.size()},
                     {"lines", f.pls.lines.size()}};
      if (f.kind == "matroid") e["size"] = f.matroid.ground.size();
      j.push_back(e);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& f : tl::fixtures()) {
      std::cout << f.name << " (" << f.kind;
      if (f.kind == "lattice") std::cout << ", n=" << f.lattice.n;
      if (f.kind == "pls")
        std::cout << ", " << f.pls.points.size() << " points, "
                  << f.pls.lines.size() << " lines";
      if (f.kind == "matroid")
        std::cout << ", " << f.matroid.ground.size() << " elements";
      if (f.reconstructed) std::cout << ", reconstructed";
      std::cout << "): " << f.note << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tight embeddings of modular lattices into partition lattices"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit machine-readable JSON");

  std::string lattice_in, pls_in, graph_in, matroid_in, embedding_in;
  std::string write_dir;
  int bound_cycles = 40;
  long long bound_search = 20000000;
  int ground = 0, rank = -1;
  bool binary = false, small_girth = false, direct = false;

  auto* analyze = app.add_subcommand("analyze-lattice",
                                     "profile a lattice's structure");
  analyze->add_option("--lattice", lattice_in, "lattice file or fixture name")
      ->required();

  auto* mopls = app.add_subcommand(
      "mopls", "extract the minimal-pair configuration of a lattice");
  mopls->add_option("--lattice", lattice_in, "lattice file or fixture name")
      ->required();

  auto* classify = app.add_subcommand("classify-pls",
                                      "classify a partial linear space");
  classify->add_option("--pls", pls_in, "pls file or fixture name")->required();
  classify->add_option("--bound-cycles", bound_cycles,
                       "point budget for cycle enumeration");

  auto* model = app.add_subcommand(
      "model", "find or check a line-preserving rank-model");
  model->add_option("--pls", pls_in, "pls file or fixture name")->required();
  model->add_option("--graph", graph_in, "check this graph instead");
  model->add_option("--matroid", matroid_in, "check this matroid instead");
  model->add_flag("--binary", binary, "search binary labelings, not graphs");
  model->add_option("--rank", rank, "target rank for --binary");
  model->add_flag("--small-girth", small_girth,
                  "allow type-2 link replay on cycles of at most 4 lines");
  model->add_option("--bound-cycles", bound_cycles,
                    "point budget for cycle enumeration");

  auto* embed = app.add_subcommand(
      "embed", "run the thin-lattice embedding pipeline");
  embed->add_option("--lattice", lattice_in, "lattice file or fixture name")
      ->required();

  auto* verify = app.add_subcommand("verify",
                                    "re-certify a stored embedding");
  verify->add_option("--embedding", embedding_in, "embedding json file")
      ->required();

  auto* search = app.add_subcommand(
      "search", "exhaustive tight-embedding search over graph models");
  search->add_option("--lattice", lattice_in, "lattice file or fixture name")
      ->required();
  search->add_option("--ground", ground, "ground set size of the partitions")
      ->required();
  search->add_option("--bound-search", bound_search, "work budget");
  search->add_flag("--direct", direct,
                   "use the direct partition-assignment oracle instead");

  auto* trigger = app.add_subcommand(
      "trigger-check", "do all line-pres rank-models of a PLS come from graphs");
  trigger->add_option("--pls", pls_in, "pls file or fixture name")->required();

  auto* fixtures_cmd = app.add_subcommand("fixtures", "list the built-in corpus");
  fixtures_cmd->add_option("--write", write_dir,
                           "also write every fixture into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 3;
  }

  try {
    if (*analyze) return cmd_analyze_lattice(lattice_in, json);
    if (*mopls) return cmd_mopls(lattice_in, json);
    if (*classify) return cmd_classify_pls(pls_in, bound_cycles, json);
    if (*model)
      return cmd_model(pls_in, graph_in, matroid_in, binary, rank, small_girth,
                       bound_cycles, json);
    if (*embed) return cmd_embed(lattice_in, json);
    if (*verify) return cmd_verify(embedding_in, json);
    if (*search) return cmd_search(lattice_in, ground, bound_search, direct, json);
    if (*trigger) return cmd_trigger_check(pls_in, json);
    if (*fixtures_cmd) return cmd_fixtures(write_dir, json);
  } catch (const tl::Error& e) {
    if (e.code == tl::Err::Internal) throw;  // a bug, not an input problem
    std::cerr << "error: " << e.what() << "\n";
    return e.code == tl::Err::BoundExceeded ? 2 : 3;
  }
  return 3;
}
