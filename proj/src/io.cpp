#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "gooddecomp/io.hpp"

namespace gooddecomp {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Non-blank, non-comment lines with their 1-based numbers.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const auto end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    const std::string_view body = trim(raw);
    if (!body.empty() && body.front() != '#') lines.push_back({number, body});
    if (end == std::string_view::npos) break;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::size_t> to_number(std::string_view token) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

std::pair<std::size_t, std::size_t> number_pair(const Line& line, const char* what) {
  const auto t = tokens(line.text);
  if (t.size() != 2) throw ParseError(line.number, std::string("expected ") + what);
  const auto a = to_number(t[0]);
  const auto b = to_number(t[1]);
  if (!a || !b) throw ParseError(line.number, std::string("expected ") + what);
  return {*a, *b};
}

Arc arc_line(const Line& line, std::size_t order) {
  const auto [u, v] = number_pair(line, "arc \"u v\"");
  if (u >= order || v >= order) throw ParseError(line.number, "vertex out of range");
  if (u == v) throw ParseError(line.number, "loop " + std::to_string(u) + " " + std::to_string(v));
  return {u, v};
}

// Parses lines[begin, end) as an edge list.
Digraph edge_list_from(const std::vector<Line>& lines, std::size_t begin, std::size_t end,
                       std::size_t header_fallback_line) {
  if (begin >= end) throw ParseError(header_fallback_line, "missing header \"n m\"");
  const auto [n, m] = number_pair(lines[begin], "header \"n m\"");
  std::set<Arc> arcs;
  for (std::size_t i = begin + 1; i < end; ++i) {
    const Arc a = arc_line(lines[i], n);
    if (!arcs.insert(a).second) {
      throw ParseError(lines[i].number, "duplicate arc " + std::to_string(a.tail) + " " +
                                            std::to_string(a.head));
    }
  }
  if (arcs.size() != m) {
    const std::size_t where = end > begin + 1 ? lines[end - 1].number : lines[begin].number;
    throw ParseError(where, "header announces " + std::to_string(m) + " arcs, found " +
                                std::to_string(arcs.size()));
  }
  return Digraph(n, arcs);
}

void write_arcs(std::ostringstream& os, const ArcSet& arcs) {
  for (const Arc& a : arcs) os << a.tail << ' ' << a.head << '\n';
}

}  // namespace

Digraph parse_edge_list(std::string_view text) {
  const auto lines = content_lines(text);
  return edge_list_from(lines, 0, lines.size(), 1);
}

std::string render_edge_list(const Digraph& d) {
  std::ostringstream os;
  os << d.order() << ' ' << d.arc_count() << '\n';
  for (const Arc& a : d.arcs()) os << a.tail << ' ' << a.head << '\n';
  return os.str();
}

DecompositionDocument parse_decomposition(std::string_view text) {
  const auto lines = content_lines(text);
  std::optional<std::size_t> host_at, a1_at, a2_at;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view s = lines[i].text;
    auto mark = [&](std::optional<std::size_t>& slot, const char* name) {
      if (slot) throw ParseError(lines[i].number, std::string("repeated section ") + name);
      slot = i;
    };
    if (s == "HOST") mark(host_at, "HOST");
    else if (s == "A1") mark(a1_at, "A1");
    else if (s == "A2") mark(a2_at, "A2");
  }
  const std::size_t last = lines.empty() ? 1 : lines.back().number;
  if (!host_at || !a1_at || !a2_at) throw ParseError(last, "expected sections HOST, A1 and A2");
  if (!(*host_at == 0 && *host_at < *a1_at && *a1_at < *a2_at)) {
    throw ParseError(lines[0].number, "sections must appear in the order HOST, A1, A2");
  }
  DecompositionDocument doc;
  doc.host = edge_list_from(lines, *host_at + 1, *a1_at, lines[*host_at].number);
  auto section = [&](std::size_t begin, std::size_t end, ArcSet& out) {
    for (std::size_t i = begin; i < end; ++i) {
      const Arc a = arc_line(lines[i], doc.host.order());
      if (!out.insert(a).second) {
        throw ParseError(lines[i].number, "duplicate arc " + std::to_string(a.tail) + " " +
                                              std::to_string(a.head));
      }
    }
  };
  section(*a1_at + 1, *a2_at, doc.a1);
  section(*a2_at + 1, lines.size(), doc.a2);
  return doc;
}

std::string render_decomposition(const Digraph& host, const ArcSet& a1, const ArcSet& a2,
                                 std::string_view comment) {
  std::ostringstream os;
  if (!comment.empty()) os << "# " << comment << '\n';
  os << "HOST\n" << render_edge_list(host) << "A1\n";
  write_arcs(os, a1);
  os << "A2\n";
  write_arcs(os, a2);
  return os.str();
}

std::string render_decomposition(const Decomposition& d) {
  return render_decomposition(d.host(), d.first(), d.second(),
                              "construction: " + d.construction());
}

namespace {

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_dot(const Digraph& d, const Decomposition* highlight) {
  if (highlight && !(highlight->host() == d)) {
    throw std::invalid_argument("highlighted decomposition belongs to a different host");
  }
  std::ostringstream os;
  os << "digraph G {\n";
  for (VertexId v = 0; v < d.order(); ++v) {
    const std::string name = d.has_labels() ? d.label(v) : std::to_string(v);
    os << "  " << v << " [label=\"" << dot_escape(name) << "\"];\n";
  }
  for (const Arc& a : d.arcs()) {
    os << "  " << a.tail << " -> " << a.head;
    if (highlight) {
      const char* color = highlight->first().contains(a)    ? "red"
                          : highlight->second().contains(a) ? "blue"
                                                            : "gray";
      os << " [color=" << color << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Digraph load_edge_list(const std::filesystem::path& path) {
  try {
    return parse_edge_list(read_text_file(path));
  } catch (const ParseError& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

CompositionSpec load_composition_spec(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "spec file lists no outer digraph");
  const std::filesystem::path base = path.parent_path();
  auto resolve = [&](std::string_view entry) {
    std::filesystem::path p{std::string(entry)};
    return p.is_absolute() ? p : base / p;
  };
  CompositionSpec spec{load_edge_list(resolve(lines[0].text)), {}};
  for (std::size_t i = 1; i < lines.size(); ++i) spec.inners.push_back(load_edge_list(resolve(lines[i].text)));
  spec.validate();
  return spec;
}

}  // namespace gooddecomp
