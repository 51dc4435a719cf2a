#include "hcube/cli.hpp"

#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

#include "hcube/complement.hpp"
#include "hcube/construct.hpp"
#include "hcube/cost.hpp"
#include "hcube/errors.hpp"
#include "hcube/hypercube.hpp"
#include "hcube/io.hpp"
#include "hcube/symmetry.hpp"

namespace hcube::cli {

namespace {

struct Globals {
  std::size_t max_exhaustive_bits = 24;
  std::uint64_t search_budget = 100'000'000;
  std::string cache;
  std::uint64_t seed = 0;  // accepted for symmetry with the test drivers; no command is randomized
};

std::size_t to_size(const std::string& text, const char* what) {
  const BigInt v = parse_decimal(text);
  if (v > BigInt(std::uint64_t{1} << 62))
    throw BudgetExceeded(std::string(what) + " = " + text + " is beyond every memory guard");
  return static_cast<std::size_t>(v);
}

int to_int(const std::string& text, const char* what) {
  const BigInt v = parse_decimal(text);
  if (v > 1'000'000) throw DomainError(DomainError::Kind::kOutOfRange, std::string(what) + " = " + text + " is too large");
  return static_cast<int>(v);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw PreconditionError(PreconditionError::Kind::kParse, "cannot write " + path);
  file << text;
}

LabelClass read_label_class(const std::string& path, std::size_t dim) {
  const std::string text = read_file(path);
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') {
    LabelClass s = parse_label_class_json(text);
    if (s.dimension() != dim)
      throw PreconditionError(PreconditionError::Kind::kDimensionMismatch,
                              "file declares n = " + std::to_string(s.dimension()) + " but --dim is " + std::to_string(dim));
    return s;
  }
  return parse_label_class_text(text, dim);
}

std::string table_text(const BigInt& from, const BigInt& to, const std::string& format) {
  if (from > to) throw DomainError(DomainError::Kind::kOutOfRange, "--n-from exceeds --n-to");
  if (to - from >= 10'000'000) throw BudgetExceeded("table spans more than 10^7 rows");
  std::string text;
  if (format == "csv") {
    text = "n,rho,det\n";
    for (BigInt n = from; n <= to; ++n)
      text += n.str() + "," + std::to_string(rho(n)) + "," + std::to_string(det_qn(n)) + "\n";
    return text;
  }
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (BigInt n = from; n <= to; ++n) {
    nlohmann::ordered_json row;
    if (n <= BigInt(std::numeric_limits<std::uint64_t>::max()))
      row["n"] = static_cast<std::uint64_t>(n);
    else
      row["n"] = n.str();
    row["rho"] = rho(n);
    row["det"] = det_qn(n);
    rows.push_back(std::move(row));
  }
  return rows.dump() + "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Asymmetric binary matrices and 2-distinguishing labelings of Q_n", "hcube"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--max-exhaustive-bits", g.max_exhaustive_bits, "Largest m*n for 'oracle none'")->capture_default_str();
  app.add_option("--search-budget", g.search_budget, "Node budget of the symmetry search")->capture_default_str();
  app.add_option("--cache", g.cache, "JSON file holding the cost memo across runs");
  app.add_option("--seed", g.seed, "Seed for randomized drivers");

  std::string arg_n, arg_m;
  auto* rho_cmd = app.add_subcommand("rho", "rho(Q_n), the cost of 2-distinguishing Q_n");
  rho_cmd->add_option("N", arg_n)->required();
  auto* nu_cmd = app.add_subcommand("nu", "nu_m, the fewest columns of an asymmetric m-row matrix");
  nu_cmd->add_option("M", arg_m)->required();
  auto* det_cmd = app.add_subcommand("det", "Det(Q_n) = 1 + ceil(log2 n)");
  det_cmd->add_option("N", arg_n)->required();
  auto* interval_cmd = app.add_subcommand("interval", "range of n with rho(Q_n) = M");
  interval_cmd->add_option("M", arg_m)->required();

  std::string n_from, n_to, format = "csv";
  auto* table_cmd = app.add_subcommand("table", "rows n,rho,det");
  table_cmd->add_option("--n-from", n_from)->required();
  table_cmd->add_option("--n-to", n_to)->required();
  table_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  bool verify = false, plan = false, as_json = false;
  std::string output;
  auto* witness_cmd = app.add_subcommand("witness", "an asymmetric M x N matrix");
  witness_cmd->add_option("M", arg_m)->required();
  witness_cmd->add_option("N", arg_n)->required();
  witness_cmd->add_flag("--verify", verify, "re-check the result with the symmetry search");
  witness_cmd->add_flag("--plan", plan, "print the construction plan to stderr");
  witness_cmd->add_flag("--json", as_json, "JSON instead of text");
  witness_cmd->add_option("-o", output, "output file, '-' for stdout");

  std::string file;
  auto* check_cmd = app.add_subcommand("check", "asymmetric, or a symmetry certificate");
  check_cmd->add_option("FILE", file)->required();

  bool cols = false, rows = false;
  auto* complement_cmd = app.add_subcommand("complement", "column or row complement of a matrix");
  auto* cols_flag = complement_cmd->add_flag("--cols", cols, "absent column classes");
  complement_cmd->add_flag("--rows", rows, "absent rows")->excludes(cols_flag);
  complement_cmd->add_flag("--json", as_json, "JSON instead of text");
  complement_cmd->add_option("FILE", file)->required();

  bool progress = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive searches");
  oracle_cmd->require_subcommand(1);
  auto* none_cmd = oracle_cmd->add_subcommand("none", "exit 0 iff no M x N matrix is asymmetric");
  none_cmd->add_option("M", arg_m)->required();
  none_cmd->add_option("N", arg_n)->required();
  none_cmd->add_flag("--progress", progress, "progress lines on stderr");

  std::size_t dim = 0;
  bool group = false;
  auto* cube_cmd = app.add_subcommand("cube", "vertex sets of Q_n");
  cube_cmd->require_subcommand(1);
  auto* cube_verify = cube_cmd->add_subcommand("verify", "is a label class distinguishing");
  cube_verify->add_option("FILE", file)->required();
  cube_verify->add_option("--dim", dim, "n")->required();
  cube_verify->add_flag("--group", group, "also enumerate the automorphism group (n <= 8)");
  auto* cube_witness = cube_cmd->add_subcommand("witness", "a distinguishing class of rho(Q_N) vertices");
  cube_witness->add_option("N", arg_n)->required();
  cube_witness->add_flag("--json", as_json, "JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    CostTable& costs = default_cost_table();
    if (!g.cache.empty() && std::filesystem::exists(g.cache)) costs.load_json(read_file(g.cache));
    SearchOptions search;
    search.node_budget = g.search_budget;
    WitnessOptions wopts;
    wopts.search = search;
    int code = kOk;

    if (rho_cmd->parsed()) {
      out << rho(parse_decimal(arg_n)) << "\n";
    } else if (nu_cmd->parsed()) {
      out << nu(parse_decimal(arg_m)) << "\n";
    } else if (det_cmd->parsed()) {
      out << det_qn(parse_decimal(arg_n)) << "\n";
    } else if (interval_cmd->parsed()) {
      const auto [lo, hi] = rho_interval(to_int(arg_m, "M"));
      out << lo.str() << " " << hi.str() << "\n";
    } else if (table_cmd->parsed()) {
      out << table_text(parse_decimal(n_from), parse_decimal(n_to), format);
    } else if (witness_cmd->parsed()) {
      if (verify) wopts.verify = Verify::kAlways;
      const Witness w = asymmetric_witness(to_size(arg_m, "M"), to_size(arg_n, "N"), wopts);
      emit(as_json ? format_matrix_json(w.matrix) + "\n" : format_matrix_text(w.matrix), output, out);
      if (plan) err << "{\"plan\":" << w.plan.to_json() << "}\n";
    } else if (check_cmd->parsed()) {
      const BinaryMatrix x = parse_matrix(read_file(file));
      if (auto s = find_symmetry(x, search)) {
        out << format_symmetry_json(*s) << "\n";
        code = kNegative;
      } else {
        out << "asymmetric\n";
      }
    } else if (complement_cmd->parsed()) {
      if (!cols && !rows) throw CLI::RequiredError("--cols or --rows");
      const BinaryMatrix x = parse_matrix(read_file(file));
      const BinaryMatrix c = cols ? column_complement(x) : row_complement(x);
      out << (as_json ? format_matrix_json(c) + "\n" : format_matrix_text(c));
    } else if (none_cmd->parsed()) {
      ExhaustiveOptions eopts;
      eopts.max_bits = g.max_exhaustive_bits;
      eopts.search = search;
      if (progress) eopts.progress = &err;
      const bool none = exhaustive_nonexistence(to_size(arg_m, "M"), to_size(arg_n, "N"), eopts);
      out << (none ? "none" : "exists") << "\n";
      code = none ? kOk : kNegative;
    } else if (cube_verify->parsed()) {
      const LabelClass s = read_label_class(file, dim);
      const bool matrix_verdict = is_distinguishing_class(s, search);
      out << (matrix_verdict ? "distinguishing" : "not distinguishing") << "\n";
      if (group) {
        const auto preservers = aut_preservers(s);
        const bool group_verdict = preservers.size() == 1;
        out << "group: " << preservers.size()
            << (preservers.size() == 1 ? " automorphism preserves" : " automorphisms preserve") << " the class\n";
        if (group_verdict != matrix_verdict) throw InternalError("matrix and group verdicts disagree");
      }
      code = matrix_verdict ? kOk : kNegative;
    } else if (cube_witness->parsed()) {
      const LabelClass s = distinguishing_class(parse_decimal(arg_n), wopts);
      out << (as_json ? format_label_class_json(s) + "\n" : format_label_class_text(s));
    }

    if (!g.cache.empty()) {
      std::ofstream cache(g.cache, std::ios::binary);
      if (!cache) throw PreconditionError(PreconditionError::Kind::kParse, "cannot write cache " + g.cache);
      cache << costs.to_json() << "\n";
    }
    return code;
  } catch (const CLI::Error& e) {
    err << "hcube: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "hcube: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "hcube: " << e.what() << "\n";
    return kDomain;
  } catch (const BudgetExceeded& e) {
    err << "hcube: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    err << "hcube: internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace hcube::cli
