// vig: command-line front end for vertebrate interval graph recognition and
// 2-partitioning into induced subgraphs of bounded claw number.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "vig/vig.hpp"

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

vig::IntervalFamily load(const std::string& path) {
  if (path == "-") return vig::parse_instance(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return vig::parse_instance(in);
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json sides_json(const vig::PartitionAssignment& a) {
  json out = json::array();
  for (auto s : a.side) out.push_back(s == vig::Side::First ? 0 : 1);
  return out;
}

json intervals_json(std::span<const vig::Interval> family) {
  json out = json::array();
  for (const auto& x : family) out.push_back({x.lo, x.hi});
  return out;
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

int fail(const std::string& command, const std::string& kind, const std::string& message, json extra = json::object()) {
  json doc = {{"command", command}, {"error", kind}, {"message", message}};
  doc.update(extra);
  emit(doc);
  std::cerr << "vig " << command << ": " << message << '\n';
  return kExitError;
}

// Runs `body`, mapping the library's exceptions onto error documents.
template <typename Body>
int guarded(const std::string& command, Body&& body) {
  try {
    return body();
  } catch (const vig::ParseError& e) {
    return fail(command, "parse", e.what(), {{"line", e.line()}});
  } catch (const vig::InvertebrateError& e) {
    return fail(command, "invertebrate", e.what(), {{"m_sweep", e.alpha()}, {"m_cliques", e.m_cliques()}});
  } catch (const vig::oracle::GuardError& e) {
    return fail(command, "guard", e.what());
  } catch (const std::exception& e) {
    return fail(command, "error", e.what());
  }
}

int cmd_check(const std::string& path) {
  return guarded("check", [&] {
    const auto start = Clock::now();
    const auto family = load(path);
    const auto sweep = vig::sweepline(family);
    const auto cliques = vig::maximal_cliques(family);
    emit({{"command", "check"},
          {"n", family.size()},
          {"m_sweep", sweep.m_sweep},
          {"m_cliques", cliques.count()},
          {"vertebrate", sweep.m_sweep == cliques.count()},
          {"psi", vig::claw_number(family)},
          {"timings", {{"total_ms", elapsed_ms(start)}}}});
    return 0;
  });
}

int cmd_represent(const std::string& path, bool as_instance) {
  return guarded("represent", [&] {
    const auto start = Clock::now();
    const auto family = load(path);
    const auto rep = vig::vertebrate_representation(family);
    std::vector<vig::Interval> per_vertex;
    for (auto r : rep.rep_of) per_vertex.push_back(rep.family[r]);
    if (as_instance) {
      vig::write_instance(std::cout, per_vertex, "vertebrate representation, m = " + std::to_string(rep.m));
      return 0;
    }
    json backbone = json::array();
    for (auto b : rep.backbone) backbone.push_back(rep.origins[b].front());
    emit({{"command", "represent"},
          {"n", family.size()},
          {"m_cliques", rep.m},
          {"vertebrate", true},
          {"psi", vig::claw_number(family)},
          {"representation", intervals_json(per_vertex)},
          {"backbone", backbone},
          {"timings", {{"total_ms", elapsed_ms(start)}}}});
    return 0;
  });
}

int cmd_partition(const std::string& path, std::size_t v, bool show_parts, std::size_t workers, bool allow_large_v) {
  return guarded("partition", [&] {
    if (v < 1) throw std::invalid_argument("--v must be at least 1");
    if (v > 4 && !allow_large_v) throw std::invalid_argument("--v above 4 needs --allow-large-v");
    const auto start = Clock::now();
    const auto family = load(path);
    const auto rep = vig::vertebrate_representation(family);
    const auto solved_at = Clock::now();
    const auto result = vig::solve(rep, v, {workers});
    const double solve_ms = elapsed_ms(solved_at);

    std::size_t max_states = 0, transitions = 0;
    for (const auto& st : result.stats) {
      max_states = std::max(max_states, st.states);
      transitions += st.transitions;
    }
    json doc = {{"command", "partition"},
                {"n", family.size()},
                {"m_cliques", rep.m},
                {"vertebrate", true},
                {"psi", vig::claw_number(family)},
                {"v", v},
                {"decision", result.feasible ? "YES" : "NO"},
                {"dp", {{"max_stage_states", max_states}, {"transitions", transitions}}}};
    if (result.feasible) {
      if (!vig::verify_partition(family, *result.witness, v)) {
        throw std::logic_error("witness failed verification");
      }
      doc["witness"] = sides_json(*result.witness);
      if (show_parts) {
        doc["parts"] = {intervals_json(vig::part_of(family, *result.witness, vig::Side::First)),
                        intervals_json(vig::part_of(family, *result.witness, vig::Side::Second))};
      }
    }
    doc["timings"] = {{"solve_ms", solve_ms}, {"total_ms", elapsed_ms(start)}};
    emit(doc);
    return result.feasible ? kExitYes : kExitNo;
  });
}

int cmd_oracle(const std::string& path, std::size_t v) {
  return guarded("oracle", [&] {
    if (v < 1) throw std::invalid_argument("--v must be at least 1");
    const auto start = Clock::now();
    const auto family = load(path);
    const auto report = vig::oracle::oracle_partition(family, v);
    json doc = {{"command", "oracle"}, {"n", family.size()}, {"v", v}, {"decision", report.feasible ? "YES" : "NO"}};
    if (report.feasible) doc["witness"] = sides_json(*report.witness);
    doc["timings"] = {{"total_ms", elapsed_ms(start)}};
    emit(doc);
    return report.feasible ? kExitYes : kExitNo;
  });
}

int cmd_gen(const vig::GeneratorSpec& spec, const std::string& kind) {
  try {
    const auto family = vig::generate(spec);
    std::ostringstream header;
    header << "kind=" << kind << " m=" << spec.m << " n=" << spec.n << " density=" << spec.density
           << " max_len=" << spec.max_len << " seed=" << spec.seed;
    vig::write_instance(std::cout, family, header.str());
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "vig gen: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Vertebrate interval graphs: recognition, compact representation and exact 2-partition into\n"
      "induced subgraphs of claw number at most v.\n\n"
      "Instances are text files with one 'lo hi' integer pair per line (open intervals, lo < hi);\n"
      "'#' starts a comment. Use '-' to read standard input. The empty graph is reported as\n"
      "vertebrate (0 independent vertices, 0 maximal cliques).\n\n"
      "partition and oracle exit with 0 for YES, 1 for NO and 2 on error."};
  app.require_subcommand(1);

  std::string path;
  std::size_t v = 1;
  std::size_t workers = 1;
  bool show_parts = false;
  bool allow_large_v = false;
  bool as_instance = false;

  auto* check = app.add_subcommand("check", "report alpha, m(G), the vertebrate flag and the claw number");
  check->add_option("file", path, "instance file")->required();

  auto* represent = app.add_subcommand("represent", "emit the vertebrate representation (endpoints in [0, m])");
  represent->add_option("file", path, "instance file")->required();
  represent->add_flag("--instance", as_instance, "write the representation in instance format");

  auto* partition = app.add_subcommand("partition", "decide the 2-partition problem with the dynamic program");
  partition->add_option("file", path, "instance file")->required();
  partition->add_option("--v", v, "claw bound (1 <= v <= 4 unless --allow-large-v)")->required();
  partition->add_flag("--witness", show_parts, "also list the intervals of both parts");
  partition->add_option("--workers", workers, "worker threads for the table construction");
  partition->add_flag("--allow-large-v", allow_large_v, "permit v > 4");

  auto* oracle = app.add_subcommand("oracle", "decide the 2-partition problem by exhaustive search (n <= 16)");
  oracle->add_option("file", path, "instance file")->required();
  oracle->add_option("--v", v, "claw bound")->required();

  vig::GeneratorSpec spec;
  std::string kind = "vertebrate";
  auto* gen = app.add_subcommand("gen", "write a seeded random instance to standard output");
  gen->add_option("--kind", kind, "vertebrate | trivially-perfect | invertebrate | raw-random")
      ->check(CLI::IsMember({"vertebrate", "trivially-perfect", "invertebrate", "raw-random"}));
  gen->add_option("--m", spec.m, "backbone length (vertebrate) or coordinate span");
  gen->add_option("--n", spec.n, "interval count (non-vertebrate kinds)");
  gen->add_option("--density", spec.density, "extra intervals per backbone unit (vertebrate)");
  gen->add_option("--max-len", spec.max_len, "maximum interval length");
  gen->add_option("--seed", spec.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  if (*check) return cmd_check(path);
  if (*represent) return cmd_represent(path, as_instance);
  if (*partition) return cmd_partition(path, v, show_parts, workers, allow_large_v);
  if (*oracle) return cmd_oracle(path, v);
  spec.kind = vig::parse_generator_kind(kind);
  return cmd_gen(spec, kind);
}
