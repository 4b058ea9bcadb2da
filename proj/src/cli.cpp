#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <variant>

#include "gooddecomp/cli.hpp"
#include "gooddecomp/composition.hpp"
#include "gooddecomp/io.hpp"
#include "gooddecomp/oracle.hpp"
#include "gooddecomp/products.hpp"

namespace gooddecomp {

namespace {

constexpr int kOk = 0;
constexpr int kRefused = 1;
constexpr int kUsage = 2;

struct Refusal {
  std::string reason;
  std::string detail;
};

using Outcome = std::variant<Decomposition, Refusal>;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
}

std::optional<Refusal> exception_refusal(const Digraph& d) {
  if (d.order() > kMaxIsomorphismOrder) return std::nullopt;
  if (auto m = match_exception(d)) return Refusal{"exception:" + std::string(to_string(m->tag)), {}};
  return std::nullopt;
}

Outcome by_oracle(const Digraph& d, std::uint64_t budget) {
  const OracleReport r = oracle_good_decomposition(d, budget);
  switch (r.outcome) {
    case OracleOutcome::found: return *r.decomposition;
    case OracleOutcome::none: return Refusal{"none", "exhaustive search found no good decomposition"};
    case OracleOutcome::aborted:
      return Refusal{"aborted", "budget of " + std::to_string(budget) + " nodes exhausted"};
  }
  throw std::logic_error("unknown oracle outcome");
}

Outcome by_composition(const Digraph& d, const CompositionSpec& spec, std::uint64_t budget) {
  const Digraph q = compose(spec).digraph;
  if (!(q == d)) return Refusal{"spec-mismatch", "composition of the spec differs from the input"};
  if (auto r = exception_refusal(q)) return *r;
  if (spec.outer.order() < 2) return Refusal{"not-covered", "composition needs t >= 2"};
  const CompositionOptions options{budget};
  const bool semicomplete_case =
      is_strong(spec.outer) && is_semicomplete(spec.outer) &&
      std::all_of(spec.inners.begin(), spec.inners.end(), [](const Digraph& h) { return h.order() >= 2; });
  if (semicomplete_case) {
    auto result = characterize_semicomplete_composition(spec, options);
    if (auto* m = std::get_if<ExceptionMatch>(&result)) {
      return Refusal{"exception:" + std::string(to_string(m->tag)), {}};
    }
    return std::get<Decomposition>(std::move(result));
  }
  if (auto dec = decompose_composition(spec, options)) return *dec;
  return Refusal{"not-covered", "no sufficient condition for compositions applies"};
}

Outcome by_cartesian(const Digraph& g, std::size_t k) {
  if (g.order() < 2 || !is_strong(g)) return Refusal{"not-strong", "factor must be strong of order >= 2"};
  const CycleCoverResult cover = find_cycle_cover(g);
  if (!cover.cover) return Refusal{"no-cycle-cover", cover.certificate->to_string()};
  try {
    if (k == 2) return decompose_cartesian_square(g, *cover.cover);
    return decompose_cartesian_power(g, k);
  } catch (const NoCycleCover& e) {
    return Refusal{"no-cycle-cover", e.certificate().to_string()};
  } catch (const std::invalid_argument& e) {
    return Refusal{"cover-disconnected", e.what()};
  }
}

Outcome by_strong_product(const Digraph& g, const Digraph& h) {
  for (const Digraph* f : {&g, &h}) {
    if (f->order() < 2 || !is_strong(*f)) return Refusal{"not-strong", "factors must be strong of order >= 2"};
  }
  return decompose_strong_product(g, h);
}

Outcome by_lexicographic(const Digraph& g, const Digraph& h) {
  for (const Digraph* f : {&g, &h}) {
    if (f->order() < 2 || !is_strong(*f)) return Refusal{"not-strong", "factors must be strong of order >= 2"};
  }
  StrongPacking p = decompose_lexicographic(g, h);
  return certify(p.host, p.parts[0], p.parts[1], "lexicographic");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Good decompositions of compositions and digraph products", "gooddecomp"};
  app.require_subcommand(1);

  std::string file, file2, output, spec_path, factor_path, dot_path, op, strategy = "auto";
  std::vector<std::string> files;
  std::size_t power = 0, p = 0, q = 0;
  std::uint64_t budget = kDefaultOracleBudget;
  bool timing = false, search = false;

  auto* check = app.add_subcommand("check", "Print strongness, semicompleteness and arc-connectivity");
  check->add_option("file", file, "Edge-list file")->required();

  auto* product = app.add_subcommand("product", "Write the product of two digraphs as an edge list");
  product->add_option("--op", op, "Product kind")->required()->check(
      CLI::IsMember({"cartesian", "strong", "lex"}));
  product->add_option("a", file, "First factor")->required();
  product->add_option("b", file2, "Second factor");
  product->add_option("--power", power, "Cartesian power of the first factor")->check(CLI::PositiveNumber);
  product->add_option("-o,--output", output, "Output file (default stdout)");

  auto* compose_cmd = app.add_subcommand("compose", "Write T[H1,...,Ht] as an edge list");
  compose_cmd->add_option("files", files, "Outer digraph, then one inner per outer vertex")->required();
  compose_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  auto* decompose = app.add_subcommand("decompose", "Write a good decomposition or a reasoned refusal");
  decompose->add_option("file", file, "Edge-list file (the first factor for product strategies)")->required();
  decompose->add_option("--strategy", strategy, "Construction to use")->check(CLI::IsMember(
      {"auto", "composition", "cartesian-square", "cartesian-power", "strong-product", "lex", "oracle"}));
  decompose->add_option("--spec", spec_path, "Composition spec file");
  decompose->add_option("--factor", factor_path, "Second factor for strong-product and lex");
  decompose->add_option("--power", power, "Exponent for cartesian-power (default 2)");
  decompose->add_option("--budget", budget, "Oracle node budget");
  decompose->add_option("-o,--output", output, "Output file (default stdout)");
  decompose->add_option("--dot", dot_path, "Also write a colored DOT rendering here");

  auto* verify_cmd = app.add_subcommand("verify", "Check a decomposition document");
  verify_cmd->add_option("file", file, "Decomposition document")->required();

  auto* oracle = app.add_subcommand("oracle", "Exhaustive search for a good decomposition");
  oracle->add_option("file", file, "Edge-list file")->required();
  oracle->add_option("--budget", budget, "Node budget");
  oracle->add_flag("--timing", timing, "Also print the elapsed time");

  auto* ham = app.add_subcommand("ham-cartesian", "Hamiltonicity of C_p x C_q (Cartesian)");
  ham->add_option("p", p)->required();
  ham->add_option("q", q)->required();
  ham->add_flag("--search", search, "Also run the exhaustive Hamiltonian cycle search");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  auto refuse = [&](const Refusal& r) {
    out << "reason: " << r.reason << '\n';
    if (!r.detail.empty()) out << "detail: " << r.detail << '\n';
    return kRefused;
  };

  try {
    if (check->parsed()) {
      const Digraph d = load_edge_list(file);
      out << "order: " << d.order() << '\n'
          << "arcs: " << d.arc_count() << '\n'
          << "strong: " << (is_strong(d) ? "yes" : "no") << '\n'
          << "semicomplete: " << (is_semicomplete(d) ? "yes" : "no") << '\n'
          << "arc-connectivity: "
          << (d.order() >= 2 ? std::to_string(arc_connectivity(d)) : std::string("undefined")) << '\n';
      return kOk;
    }

    if (product->parsed()) {
      const Digraph a = load_edge_list(file);
      Built built;
      if (power > 0) {
        if (op != "cartesian") throw UsageError("--power is only defined for --op cartesian");
        if (!file2.empty()) throw UsageError("--power takes a single factor");
        built = cartesian_power(a, power);
      } else {
        if (file2.empty()) throw UsageError("product needs two factors (or --power)");
        const Digraph b = load_edge_list(file2);
        built = op == "cartesian" ? cartesian_product(a, b)
                : op == "strong"  ? strong_product(a, b)
                                  : lexicographic_product(a, b);
      }
      emit(out, output, render_edge_list(built.digraph));
      return kOk;
    }

    if (compose_cmd->parsed()) {
      CompositionSpec spec{load_edge_list(files.front()), {}};
      for (std::size_t i = 1; i < files.size(); ++i) spec.inners.push_back(load_edge_list(files[i]));
      if (spec.inners.size() != spec.outer.order()) {
        throw UsageError("compose needs one inner file per vertex of the outer digraph");
      }
      emit(out, output, render_edge_list(compose(spec).digraph));
      return kOk;
    }

    if (decompose->parsed()) {
      const Digraph d = load_edge_list(file);
      const bool product_strategy = strategy == "strong-product" || strategy == "lex";
      if (product_strategy && factor_path.empty()) throw UsageError("--strategy " + strategy + " needs --factor");
      if (strategy == "composition" && spec_path.empty()) throw UsageError("--strategy composition needs --spec");
      if (power != 0 && strategy != "cartesian-power") throw UsageError("--power needs --strategy cartesian-power");

      Outcome result = Refusal{};
      if (strategy == "composition" || (strategy == "auto" && !spec_path.empty())) {
        result = by_composition(d, load_composition_spec(spec_path), budget);
      } else if (strategy == "auto") {
        if (auto r = exception_refusal(d)) result = *r;
        else result = by_oracle(d, budget);
      } else if (strategy == "oracle") {
        result = by_oracle(d, budget);
      } else if (strategy == "cartesian-square") {
        result = by_cartesian(d, 2);
      } else if (strategy == "cartesian-power") {
        const std::size_t k = power == 0 ? 2 : power;
        if (k < 2) throw UsageError("--power must be at least 2");
        result = by_cartesian(d, k);
      } else if (strategy == "strong-product") {
        result = by_strong_product(d, load_edge_list(factor_path));
      } else {
        result = by_lexicographic(d, load_edge_list(factor_path));
      }

      if (const auto* r = std::get_if<Refusal>(&result)) return refuse(*r);
      const Decomposition& dec = std::get<Decomposition>(result);
      emit(out, output, render_decomposition(dec));
      if (!dot_path.empty()) emit(out, dot_path, export_dot(dec.host(), &dec));
      return kOk;
    }

    if (verify_cmd->parsed()) {
      DecompositionDocument doc;
      try {
        doc = parse_decomposition(read_text_file(file));
      } catch (const ParseError& e) {
        throw std::runtime_error(file + ": " + e.what());
      }
      const VerifyReport report = verify(doc.host, doc.a1, doc.a2);
      if (report) {
        out << "valid\n";
        return kOk;
      }
      out << "invalid: " << report.diagnostic << '\n';
      return kRefused;
    }

    if (oracle->parsed()) {
      const Digraph d = load_edge_list(file);
      const OracleReport r = oracle_good_decomposition(d, budget);
      out << "outcome: " << to_string(r.outcome) << '\n' << "nodes: " << r.nodes_explored << '\n';
      if (timing) {
        out << "elapsed-ms: "
            << std::chrono::duration<double, std::milli>(r.elapsed).count() << '\n';
      }
      if (r.decomposition) out << render_decomposition(*r.decomposition);
      if (r.outcome == OracleOutcome::aborted) return refuse({"aborted", {}});
      return kOk;
    }

    if (ham->parsed()) {
      const bool verdict = trotter_erdos_hamiltonian(p, q);
      out << (verdict ? "hamiltonian" : "non-hamiltonian") << '\n';
      if (search) {
        const Digraph c = cartesian_product(directed_cycle(p), directed_cycle(q)).digraph;
        const bool found = hamiltonian_cycle_bruteforce(c).has_value();
        out << "search: " << (found ? "hamiltonian" : "non-hamiltonian") << '\n';
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const ConstructionError& e) {
    return refuse({"construction-failed", e.what()});
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace gooddecomp
