#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gooddecomp/builders.hpp"
#include "gooddecomp/decomposition.hpp"

namespace gooddecomp {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Edge list: a header "n m", then m lines "u v". Lines starting with '#' and
// blank lines are ignored.

Digraph parse_edge_list(std::string_view text);
std::string render_edge_list(const Digraph& d);

// Decomposition document: an edge list under "HOST", then arc lines under
// "A1" and "A2". Arcs of A1/A2 are only checked for range and repeats here;
// membership and disjointness are left to verify().

struct DecompositionDocument {
  Digraph host{0};
  ArcSet a1;
  ArcSet a2;
};

DecompositionDocument parse_decomposition(std::string_view text);
std::string render_decomposition(const Digraph& host, const ArcSet& a1, const ArcSet& a2,
                                 std::string_view comment = {});
std::string render_decomposition(const Decomposition& d);

/// DOT text. With a highlight, A1 arcs are red, A2 blue and unused arcs
/// gray; throws std::invalid_argument when the highlight's host differs.
std::string export_dot(const Digraph& d, const Decomposition* highlight = nullptr);

std::string read_text_file(const std::filesystem::path& path);
Digraph load_edge_list(const std::filesystem::path& path);

/// Spec file: the outer digraph's edge-list path, then one path per inner,
/// one per line. Relative paths are taken from the spec file's directory.
CompositionSpec load_composition_spec(const std::filesystem::path& path);

}  // namespace gooddecomp
