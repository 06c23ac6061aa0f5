#include "tightlat/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tightlat/core.hpp"

namespace tightlat {

namespace {

using Json = nlohmann::ordered_json;

// Lines of text with comments stripped, each tokenized by whitespace.
std::vector<std::vector<std::string>> token_lines(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) out.push_back(std::move(toks));
  }
  return out;
}

int to_int(const std::string& s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  require(ec == std::errc() && ptr == s.data() + s.size(), Err::ParseError,
          "not an integer: '" + s + "'");
  return value;
}

void expect_header(const std::vector<std::vector<std::string>>& lines,
                   const std::string& word, size_t arity) {
  require(!lines.empty(), Err::ParseError, "empty input, expected '" + word + "'");
  require(lines[0][0] == word, Err::ParseError,
          "expected header '" + word + "', got '" + lines[0][0] + "'");
  require(lines[0].size() == arity + 1, Err::ParseError,
          "header '" + word + "' takes " + std::to_string(arity) + " argument(s)");
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Err::ParseError, std::string("bad json: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Wraps json access so shape errors surface as ParseError.
template <typename F>
auto shape(F f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    fail(Err::ParseError, std::string("bad json shape: ") + e.what());
  }
}

std::string column_bits(std::uint32_t column, int dim) {
  std::string s(dim, '0');
  for (int i = 0; i < dim; ++i)
    if (column >> i & 1) s[i] = '1';
  return s;
}

std::uint32_t bits_column(const std::string& s, int dim) {
  require((int)s.size() == dim, Err::ParseError,
          "column '" + s + "' is not " + std::to_string(dim) + " bits");
  std::uint32_t c = 0;
  for (int i = 0; i < dim; ++i) {
    require(s[i] == '0' || s[i] == '1', Err::ParseError,
            "column '" + s + "' has a non-binary digit");
    if (s[i] == '1') c |= 1u << i;
  }
  return c;
}

}  // namespace

std::string print_lattice(const Lattice& l) {
  std::ostringstream out;
  out << "lattice " << l.n << "\n";
  for (auto [a, b] : l.covers) out << a << " " << b << "\n";
  return out.str();
}

Lattice parse_lattice(const std::string& text) {
  auto lines = token_lines(text);
  expect_header(lines, "lattice", 1);
  int n = to_int(lines[0][1]);
  std::vector<std::pair<int, int>> covers;
  for (size_t i = 1; i < lines.size(); ++i) {
    require(lines[i].size() == 2, Err::ParseError,
            "cover lines take two elements");
    covers.push_back({to_int(lines[i][0]), to_int(lines[i][1])});
  }
  Lattice l = build_lattice(covers);
  require(l.n == n, Err::ParseError,
          "header claims " + std::to_string(n) + " elements, covers span " +
              std::to_string(l.n));
  return l;
}

std::string print_pls(const Pls& p) {
  std::ostringstream out;
  out << "pls\npoints";
  for (int q : p.points) out << " " << q;
  out << "\n";
  for (const auto& l : p.lines)
    out << "line " << l[0] << " " << l[1] << " " << l[2] << "\n";
  return out.str();
}

Pls parse_pls(const std::string& text) {
  auto lines = token_lines(text);
  expect_header(lines, "pls", 0);
  std::vector<int> points;
  std::vector<std::vector<int>> ls;
  for (size_t i = 1; i < lines.size(); ++i) {
    if (lines[i][0] == "points") {
      for (size_t k = 1; k < lines[i].size(); ++k)
        points.push_back(to_int(lines[i][k]));
    } else if (lines[i][0] == "line") {
      require(lines[i].size() == 4, Err::ParseError, "lines have three points");
      ls.push_back({to_int(lines[i][1]), to_int(lines[i][2]), to_int(lines[i][3])});
    } else {
      fail(Err::ParseError, "unknown pls directive '" + lines[i][0] + "'");
    }
  }
  return build_pls(points, ls);
}

std::string print_graph(const LabeledGraph& g) {
  std::ostringstream out;
  out << "graph " << g.n_vertices << "\n";
  for (size_t i = 0; i < g.edges.size(); ++i)
    out << g.edges[i].first << " " << g.edges[i].second << " " << g.labels[i]
        << "\n";
  return out.str();
}

LabeledGraph parse_graph(const std::string& text) {
  auto lines = token_lines(text);
  expect_header(lines, "graph", 1);
  LabeledGraph g;
  g.n_vertices = to_int(lines[0][1]);
  require(g.n_vertices >= 0, Err::ParseError, "negative vertex count");
  for (size_t i = 1; i < lines.size(); ++i) {
    require(lines[i].size() == 3, Err::ParseError,
            "edge lines are 'u v label'");
    int u = to_int(lines[i][0]), v = to_int(lines[i][1]);
    require(0 <= u && u < g.n_vertices && 0 <= v && v < g.n_vertices,
            Err::ParseError, "edge endpoint out of range");
    g.add_edge(u, v, to_int(lines[i][2]));
  }
  g.validate();
  return g;
}

std::string print_matroid(const BinaryMatroid& m) {
  std::ostringstream out;
  out << "matroid " << m.dim << "\n";
  for (size_t i = 0; i < m.ground.size(); ++i)
    out << m.ground[i] << " " << column_bits(m.columns[i], m.dim) << "\n";
  return out.str();
}

BinaryMatroid parse_matroid(const std::string& text) {
  auto lines = token_lines(text);
  expect_header(lines, "matroid", 1);
  int dim = to_int(lines[0][1]);
  require(0 < dim && dim <= 31, Err::ParseError, "dim must be in 1..31");
  std::vector<int> ground;
  std::vector<std::uint32_t> columns;
  for (size_t i = 1; i < lines.size(); ++i) {
    require(lines[i].size() == 2, Err::ParseError,
            "matroid lines are 'element bits'");
    ground.push_back(to_int(lines[i][0]));
    columns.push_back(bits_column(lines[i][1], dim));
  }
  return make_binary_matroid(ground, columns, dim);
}

std::string print_partition(const Partition& p) {
  std::ostringstream out;
  const char* sep = p.n >= 10 ? "," : "";
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    if (b) out << "|";
    for (size_t i = 0; i < p.blocks[b].size(); ++i) {
      if (i) out << sep;
      out << p.blocks[b][i];
    }
  }
  return out.str();
}

Partition parse_partition(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  require(!s.empty(), Err::ParseError, "empty partition");
  std::vector<std::vector<int>> blocks(1);
  bool commas = s.find(',') != std::string::npos;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == '|') {
      blocks.emplace_back();
      ++i;
    } else if (c == ',') {
      ++i;
    } else if (commas) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      require(j > i, Err::ParseError,
              std::string("unexpected character '") + c + "' in partition");
      blocks.back().push_back(to_int(s.substr(i, j - i)));
      i = j;
    } else {
      require(std::isdigit(static_cast<unsigned char>(c)) && c != '0',
              Err::ParseError,
              std::string("unexpected character '") + c + "' in partition");
      blocks.back().push_back(c - '0');
      ++i;
    }
  }
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  return make_partition(n, blocks);
}

std::string print_embedding(const PartitionEmbedding& e) {
  std::ostringstream out;
  for (int a = 0; a < e.lattice.n; ++a)
    out << a << ": " << print_partition(e.map[a]) << "\n";
  return out.str();
}

namespace {

Json lattice_j(const Lattice& l) {
  Json j;
  j["n"] = l.n;
  j["covers"] = Json::array();
  for (auto [a, b] : l.covers) j["covers"].push_back({a, b});
  return j;
}

Lattice lattice_of_j(const Json& j) {
  return shape([&] {
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> covers;
    for (const auto& c : j.at("covers"))
      covers.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    Lattice l = build_lattice(covers);
    require(l.n == n, Err::ParseError, "json lattice n mismatch");
    return l;
  });
}

}  // namespace

std::string lattice_json(const Lattice& l) { return dump(lattice_j(l)); }

Lattice lattice_from_json(const std::string& text) {
  return lattice_of_j(parse_json(text));
}

std::string pls_json(const Pls& p) {
  Json j;
  j["points"] = p.points;
  j["lines"] = Json::array();
  for (const auto& l : p.lines) j["lines"].push_back({l[0], l[1], l[2]});
  return dump(j);
}

Pls pls_from_json(const std::string& text) {
  Json j = parse_json(text);
  return shape([&] {
    std::vector<int> points = j.at("points").get<std::vector<int>>();
    std::vector<std::vector<int>> lines;
    for (const auto& l : j.at("lines"))
      lines.push_back(l.get<std::vector<int>>());
    return build_pls(points, lines);
  });
}

std::string graph_json(const LabeledGraph& g) {
  Json j;
  j["vertices"] = g.n_vertices;
  j["edges"] = Json::array();
  for (size_t i = 0; i < g.edges.size(); ++i)
    j["edges"].push_back({g.edges[i].first, g.edges[i].second, g.labels[i]});
  return dump(j);
}

LabeledGraph graph_from_json(const std::string& text) {
  Json j = parse_json(text);
  return shape([&] {
    LabeledGraph g;
    g.n_vertices = j.at("vertices").get<int>();
    for (const auto& e : j.at("edges"))
      g.add_edge(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>());
    g.validate();
    return g;
  });
}

std::string matroid_json(const BinaryMatroid& m) {
  Json j;
  j["dim"] = m.dim;
  j["elements"] = m.ground;
  j["columns"] = Json::array();
  for (std::uint32_t c : m.columns) j["columns"].push_back(column_bits(c, m.dim));
  return dump(j);
}

BinaryMatroid matroid_from_json(const std::string& text) {
  Json j = parse_json(text);
  return shape([&] {
    int dim = j.at("dim").get<int>();
    std::vector<int> ground = j.at("elements").get<std::vector<int>>();
    std::vector<std::uint32_t> columns;
    for (const auto& c : j.at("columns"))
      columns.push_back(bits_column(c.get<std::string>(), dim));
    return make_binary_matroid(ground, columns, dim);
  });
}

std::string embedding_json(const PartitionEmbedding& e) {
  Json j;
  j["lattice"] = lattice_j(e.lattice);
  j["ground"] = e.n;
  j["map"] = Json::array();
  for (const Partition& p : e.map) j["map"].push_back(print_partition(p));
  j["certificate"] = {
      {"homomorphism", e.certificate.is_homomorphism},
      {"cover_preserving", e.certificate.is_cover_preserving},
      {"bottom_to_bottom", e.certificate.maps_bottom_to_bottom},
  };
  return dump(j);
}

PartitionEmbedding embedding_from_json(const std::string& text) {
  Json j = parse_json(text);
  PartitionEmbedding e;
  e.lattice = shape([&] { return lattice_of_j(j.at("lattice")); });
  e.n = shape([&] { return j.at("ground").get<int>(); });
  auto maps = shape([&] { return j.at("map").get<std::vector<std::string>>(); });
  require((int)maps.size() == e.lattice.n, Err::ParseError,
          "map size differs from lattice size");
  for (const std::string& s : maps) {
    Partition p = parse_partition(s);
    require(p.n == e.n, Err::ParseError,
            "partition '" + s + "' is not over the declared ground set");
    e.map.push_back(std::move(p));
  }
  e.certificate = certify_partition_embedding(e.lattice, e.n, e.map);
  return e;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), Err::ParseError, "cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), Err::ParseError, "cannot write file: " + path);
  out << content;
  require(out.good(), Err::ParseError, "short write: " + path);
}

}  // namespace tightlat
