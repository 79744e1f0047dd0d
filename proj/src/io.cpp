#include "happy/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace happy {

namespace {

struct Line {
  int number;  // 1-based in the original text
  std::vector<std::string> tokens;
};

// Comment and blank lines are dropped here.
std::vector<Line> tokenize_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    size_t first = raw.find_first_not_of(" \t");
    if (first == std::string::npos || raw[first] == '#') continue;
    Line line{number, {}};
    std::istringstream ls(raw);
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    lines.push_back(std::move(line));
  }
  return lines;
}

long long parse_int(const std::string& tok, const Line& line) {
  size_t pos = 0;
  long long value;
  try {
    value = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + tok + "'", line.number);
  }
  if (pos != tok.size())
    throw ParseError("expected an integer, got '" + tok + "'", line.number);
  return value;
}

int parse_range(const std::string& tok, const Line& line, long long lo,
                long long hi, const char* what) {
  long long v = parse_int(tok, line);
  if (v < lo || v > hi)
    throw ParseError(std::string(what) + " " + tok + " out of range",
                     line.number);
  return static_cast<int>(v);
}

void expect_tokens(const Line& line, size_t count) {
  if (line.tokens.size() != count)
    throw ParseError("expected " + std::to_string(count) + " fields, got " +
                         std::to_string(line.tokens.size()),
                     line.number);
}

const Line& header_line(const std::vector<Line>& lines, const char* kind,
                        size_t fields) {
  if (lines.empty()) throw ParseError("missing header", 1);
  const Line& h = lines[0];
  if (h.tokens.size() != fields || h.tokens[0] != "p" || h.tokens[1] != kind)
    throw ParseError(std::string("malformed header, expected 'p ") + kind +
                         " ...'",
                     h.number);
  return h;
}

int end_line(const std::vector<Line>& lines) {
  return lines.empty() ? 1 : lines.back().number;
}

}  // namespace

ColoredGraph parse_happy(const std::string& text) {
  auto lines = tokenize_lines(text);
  const Line& h = header_line(lines, "happy", 5);
  int n = parse_range(h.tokens[2], h, 0, 1'000'000'000, "vertex count");
  long long m = parse_int(h.tokens[3], h);
  int ell = parse_range(h.tokens[4], h, 1, 1'000'000'000, "color count");

  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::map<Vertex, Color> pre;
  for (size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    if (line.tokens[0] == "e") {
      expect_tokens(line, 3);
      Vertex u = parse_range(line.tokens[1], line, 1, n, "vertex");
      Vertex v = parse_range(line.tokens[2], line, 1, n, "vertex");
      if (u == v) throw ParseError("self-loop on vertex " + line.tokens[1],
                                   line.number);
      if (!seen.insert(make_edge(u, v)).second)
        throw ParseError("duplicate edge", line.number);
      edges.push_back(make_edge(u, v));
    } else if (line.tokens[0] == "c") {
      expect_tokens(line, 3);
      Vertex v = parse_range(line.tokens[1], line, 1, n, "vertex");
      Color col = parse_range(line.tokens[2], line, 1, ell, "color");
      if (pre.count(v))
        throw ParseError("duplicate precolor for vertex " + line.tokens[1],
                         line.number);
      pre[v] = col;
    } else {
      throw ParseError("unknown line type '" + line.tokens[0] + "'",
                       line.number);
    }
  }
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()),
                     end_line(lines));
  return ColoredGraph(Graph(n, std::move(edges)), ell, std::move(pre));
}

std::string serialize_happy(const ColoredGraph& g) {
  std::ostringstream out;
  out << "p happy " << g.vertex_count() << ' ' << g.graph().edge_count() << ' '
      << g.num_colors() << '\n';
  for (const auto& [u, v] : g.graph().edges())
    out << "e " << u << ' ' << v << '\n';
  for (const auto& [v, col] : g.precoloring())
    out << "c " << v << ' ' << col << '\n';
  return out.str();
}

GmcInstance parse_gmc(const std::string& text) {
  auto lines = tokenize_lines(text);
  const Line& h = header_line(lines, "gmc", 5);
  int n = parse_range(h.tokens[2], h, 0, 1'000'000'000, "vertex count");
  long long m = parse_int(h.tokens[3], h);
  int groups = parse_range(h.tokens[4], h, 0, 1'000'000'000, "group count");

  GmcInstance inst;
  inst.groups.resize(groups);
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::set<Vertex> assigned;
  for (size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    if (line.tokens[0] == "e") {
      expect_tokens(line, 3);
      Vertex u = parse_range(line.tokens[1], line, 1, n, "vertex");
      Vertex v = parse_range(line.tokens[2], line, 1, n, "vertex");
      if (u == v) throw ParseError("self-loop", line.number);
      if (!seen.insert(make_edge(u, v)).second)
        throw ParseError("duplicate edge", line.number);
      edges.push_back(make_edge(u, v));
    } else if (line.tokens[0] == "t") {
      expect_tokens(line, 3);
      int gi = parse_range(line.tokens[1], line, 1, groups, "group");
      Vertex v = parse_range(line.tokens[2], line, 1, n, "vertex");
      if (!assigned.insert(v).second)
        throw ParseError("groups not disjoint: vertex " + line.tokens[2] +
                             " listed twice",
                         line.number);
      inst.groups[gi - 1].insert(v);
    } else {
      throw ParseError("unknown line type '" + line.tokens[0] + "'",
                       line.number);
    }
  }
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()),
                     end_line(lines));
  inst.graph = Graph(n, std::move(edges));
  validate_gmc(inst);
  return inst;
}

std::string serialize_gmc(const GmcInstance& inst) {
  std::ostringstream out;
  out << "p gmc " << inst.graph.vertex_count() << ' '
      << inst.graph.edge_count() << ' ' << inst.groups.size() << '\n';
  for (const auto& [u, v] : inst.graph.edges())
    out << "e " << u << ' ' << v << '\n';
  for (size_t gi = 0; gi < inst.groups.size(); ++gi)
    for (Vertex v : inst.groups[gi]) out << "t " << gi + 1 << ' ' << v << '\n';
  return out.str();
}

RmisInstance parse_rmis(const std::string& text) {
  auto lines = tokenize_lines(text);
  const Line& h = header_line(lines, "rmis", 6);
  int n = parse_range(h.tokens[2], h, 0, 1'000'000'000, "vertex count");
  long long m = parse_int(h.tokens[3], h);
  int k = parse_range(h.tokens[4], h, 1, 1'000'000'000, "clique count");
  int r = parse_range(h.tokens[5], h, 0, 1'000'000'000, "degree");

  RmisInstance inst;
  inst.k = k;
  inst.r = r;
  inst.cliques.resize(k);
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::set<Vertex> assigned;
  for (size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    if (line.tokens[0] == "e") {
      expect_tokens(line, 3);
      Vertex u = parse_range(line.tokens[1], line, 1, n, "vertex");
      Vertex v = parse_range(line.tokens[2], line, 1, n, "vertex");
      if (u == v) throw ParseError("self-loop", line.number);
      if (!seen.insert(make_edge(u, v)).second)
        throw ParseError("duplicate edge", line.number);
      edges.push_back(make_edge(u, v));
    } else if (line.tokens[0] == "q") {
      expect_tokens(line, 3);
      int ci = parse_range(line.tokens[1], line, 1, k, "clique");
      Vertex v = parse_range(line.tokens[2], line, 1, n, "vertex");
      if (!assigned.insert(v).second)
        throw ParseError("vertex " + line.tokens[2] + " in two cliques",
                         line.number);
      inst.cliques[ci - 1].insert(v);
    } else {
      throw ParseError("unknown line type '" + line.tokens[0] + "'",
                       line.number);
    }
  }
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()),
                     end_line(lines));
  inst.graph = Graph(n, std::move(edges));
  validate_rmis(inst);
  return inst;
}

std::string serialize_rmis(const RmisInstance& inst) {
  std::ostringstream out;
  out << "p rmis " << inst.graph.vertex_count() << ' '
      << inst.graph.edge_count() << ' ' << inst.k << ' ' << inst.r << '\n';
  for (const auto& [u, v] : inst.graph.edges())
    out << "e " << u << ' ' << v << '\n';
  for (size_t ci = 0; ci < inst.cliques.size(); ++ci)
    for (Vertex v : inst.cliques[ci]) out << "q " << ci + 1 << ' ' << v << '\n';
  return out.str();
}

CrbdsInstance parse_crbds(const std::string& text) {
  auto lines = tokenize_lines(text);
  const Line& h = header_line(lines, "crbds", 6);
  int nr = parse_range(h.tokens[2], h, 0, 1'000'000'000, "red count");
  int nb = parse_range(h.tokens[3], h, 0, 1'000'000'000, "blue count");
  long long m = parse_int(h.tokens[4], h);
  int k = parse_range(h.tokens[5], h, 1, 1'000'000'000, "color count");

  CrbdsInstance inst;
  inst.num_red = nr;
  inst.num_blue = nb;
  inst.k = k;
  inst.coloring.assign(nr, 0);
  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<char> colored(nr + 1, 0);
  for (size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    if (line.tokens[0] == "e") {
      expect_tokens(line, 3);
      Vertex r = parse_range(line.tokens[1], line, 1, nr, "red vertex");
      Vertex b = parse_range(line.tokens[2], line, 1, nb, "blue vertex");
      if (!seen.insert({r, b}).second)
        throw ParseError("duplicate edge", line.number);
      inst.edges.emplace_back(r, b);
    } else if (line.tokens[0] == "c") {
      expect_tokens(line, 3);
      Vertex r = parse_range(line.tokens[1], line, 1, nr, "red vertex");
      Color col = parse_range(line.tokens[2], line, 1, k, "color");
      if (colored[r])
        throw ParseError("duplicate color line for red vertex " +
                             line.tokens[1],
                         line.number);
      colored[r] = 1;
      inst.coloring[r - 1] = col;
    } else {
      throw ParseError("unknown line type '" + line.tokens[0] + "'",
                       line.number);
    }
  }
  if (static_cast<long long>(inst.edges.size()) != m)
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(inst.edges.size()),
                     end_line(lines));
  for (Vertex r = 1; r <= nr; ++r)
    if (!colored[r])
      throw ParseError("red vertex " + std::to_string(r) + " is uncolored",
                       end_line(lines));
  std::sort(inst.edges.begin(), inst.edges.end());
  validate_crbds(inst);
  return inst;
}

std::string serialize_crbds(const CrbdsInstance& inst) {
  std::ostringstream out;
  out << "p crbds " << inst.num_red << ' ' << inst.num_blue << ' '
      << inst.edges.size() << ' ' << inst.k << '\n';
  for (const auto& [r, b] : inst.edges) out << "e " << r << ' ' << b << '\n';
  for (Vertex r = 1; r <= inst.num_red; ++r)
    out << "c " << r << ' ' << inst.coloring[r - 1] << '\n';
  return out.str();
}

namespace {

struct SToken {
  enum class Kind { kOpen, kClose, kAtom } kind;
  std::string atom;
  int line, column;
};

std::vector<SToken> tokenize_sexpr(const std::string& text) {
  std::vector<SToken> tokens;
  int line = 1, column = 0;
  std::string atom;
  int atom_line = 1, atom_col = 1;
  auto flush = [&]() {
    if (!atom.empty()) {
      tokens.push_back({SToken::Kind::kAtom, atom, atom_line, atom_col});
      atom.clear();
    }
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '\n') {
      flush();
      ++line;
      column = 0;
      continue;
    }
    ++column;
    if (c == '#' && atom.empty()) {  // comment to end of line
      flush();
      while (i + 1 < text.size() && text[i + 1] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (c == '(') {
      flush();
      tokens.push_back({SToken::Kind::kOpen, "(", line, column});
    } else if (c == ')') {
      flush();
      tokens.push_back({SToken::Kind::kClose, ")", line, column});
    } else {
      if (atom.empty()) {
        atom_line = line;
        atom_col = column;
      }
      atom += c;
    }
  }
  flush();
  return tokens;
}

class SExprParser {
 public:
  explicit SExprParser(const std::vector<SToken>& tokens) : tokens_(tokens) {}

  WExpression parse_root() {
    WExpression e = parse_expr();
    if (pos_ != tokens_.size())
      throw ParseError("trailing content after expression",
                       tokens_[pos_].line, tokens_[pos_].column);
    return e;
  }

 private:
  const SToken& need(const char* what) {
    if (pos_ >= tokens_.size())
      throw ParseError(std::string("unexpected end of input, expected ") +
                           what,
                       tokens_.empty() ? 1 : tokens_.back().line);
    return tokens_[pos_++];
  }

  int need_int(const char* what) {
    const SToken& t = need(what);
    if (t.kind != SToken::Kind::kAtom)
      throw ParseError(std::string("expected ") + what, t.line, t.column);
    try {
      size_t consumed = 0;
      int v = std::stoi(t.atom, &consumed);
      if (consumed != t.atom.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw ParseError("expected an integer, got '" + t.atom + "'", t.line,
                       t.column);
    }
  }

  WExpression parse_expr() {
    const SToken& open = need("'('");
    if (open.kind != SToken::Kind::kOpen)
      throw ParseError("expected '('", open.line, open.column);
    const SToken& op = need("operator");
    if (op.kind != SToken::Kind::kAtom)
      throw ParseError("expected an operator", op.line, op.column);

    WExpression result = WExpression::introduce(1, 1);  // replaced below
    if (op.atom == "v") {
      int id = need_int("vertex id");
      int label = need_int("label");
      if (id < 1) throw ParseError("vertex id must be positive", op.line);
      if (label < 1) throw ParseError("label must be positive", op.line);
      if (!used_ids_.insert(id).second)
        throw ParseError("duplicate vertex id " + std::to_string(id), op.line,
                         op.column);
      result = WExpression::introduce(id, label);
    } else if (op.atom == "u") {
      WExpression l = parse_expr();
      WExpression r = parse_expr();
      result = WExpression::disjoint_union(std::move(l), std::move(r));
    } else if (op.atom == "r" || op.atom == "n") {
      int i = need_int("label");
      int j = need_int("label");
      if (i < 1 || j < 1) throw ParseError("label must be positive", op.line);
      if (op.atom == "n" && i == j)
        throw ParseError("join-edges needs two distinct labels", op.line,
                         op.column);
      WExpression child = parse_expr();
      result = op.atom == "r"
                   ? WExpression::rename(i, j, std::move(child))
                   : WExpression::join_edges(i, j, std::move(child));
    } else {
      throw ParseError("unknown operator '" + op.atom + "'", op.line,
                       op.column);
    }
    const SToken& close = need("')'");
    if (close.kind != SToken::Kind::kClose)
      throw ParseError("expected ')'", close.line, close.column);
    return result;
  }

  const std::vector<SToken>& tokens_;
  size_t pos_ = 0;
  std::set<int> used_ids_;
};

void serialize_node(const WExpression& expr, int idx, std::ostringstream& out) {
  const WNode& node = expr.nodes()[idx];
  switch (node.op) {
    case WOp::kIntroduce:
      out << "(v " << node.a << ' ' << node.b << ')';
      break;
    case WOp::kUnion:
      out << "(u ";
      serialize_node(expr, node.left, out);
      out << ' ';
      serialize_node(expr, node.right, out);
      out << ')';
      break;
    case WOp::kRename:
    case WOp::kJoin:
      out << (node.op == WOp::kRename ? "(r " : "(n ") << node.a << ' '
          << node.b << ' ';
      serialize_node(expr, node.left, out);
      out << ')';
      break;
  }
}

}  // namespace

WExpression parse_wexpr(const std::string& text) {
  auto tokens = tokenize_sexpr(text);
  if (tokens.empty()) throw ParseError("empty expression", 1);
  return SExprParser(tokens).parse_root();
}

std::string serialize_wexpr(const WExpression& expr) {
  std::ostringstream out;
  serialize_node(expr, expr.root(), out);
  out << '\n';
  return out.str();
}

InstanceFile parse_instance(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '(') return {InstanceFile::Kind::kWexpr, parse_wexpr(text)};
    break;
  }
  auto lines = tokenize_lines(text);
  if (lines.empty() || lines[0].tokens.size() < 2 || lines[0].tokens[0] != "p")
    throw ParseError("missing 'p <kind> ...' header", 1);
  const std::string& kind = lines[0].tokens[1];
  if (kind == "happy") return {InstanceFile::Kind::kHappy, parse_happy(text)};
  if (kind == "gmc") return {InstanceFile::Kind::kGmc, parse_gmc(text)};
  if (kind == "rmis") return {InstanceFile::Kind::kRmis, parse_rmis(text)};
  if (kind == "crbds") return {InstanceFile::Kind::kCrbds, parse_crbds(text)};
  throw ParseError("unknown instance kind '" + kind + "'", lines[0].number);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace happy
