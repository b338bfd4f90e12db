#include "ringmat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>

#include "ringmat/charpoly.hpp"
#include "ringmat/determinant.hpp"
#include "ringmat/error.hpp"
#include "ringmat/laws.hpp"
#include "ringmat/permutation.hpp"
#include "ringmat/sampling.hpp"
#include "ringmat/text_format.hpp"

namespace ringmat::cli {

namespace {

using nlohmann::json;

int code(ExitCode c) { return static_cast<int>(c); }

// "leibniz" | "cofactor" | "expand-row[:i]" | "expand-col[:j]" ('=' also accepted)
void parse_algorithm(const std::string& text, JobSpec& job) {
  const auto sep = text.find_first_of(":=");
  const std::string name = text.substr(0, sep);
  std::size_t index = 0;
  if (sep != std::string::npos) {
    const std::string digits = text.substr(sep + 1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw CLI::ValidationError("--algorithm", "bad index in '" + text + "'");
    index = std::stoul(digits);
  }
  if (name == "leibniz" || name == "cofactor") {
    if (sep != std::string::npos) throw CLI::ValidationError("--algorithm", "'" + name + "' takes no index");
    job.algorithm = name == "leibniz" ? Algorithm::leibniz : Algorithm::cofactor;
  } else if (name == "expand-row") {
    job.algorithm = Algorithm::expand_row;
  } else if (name == "expand-col") {
    job.algorithm = Algorithm::expand_col;
  } else {
    throw CLI::ValidationError("--algorithm", "unknown algorithm '" + text + "'");
  }
  job.algorithm_index = index;
}

std::size_t cap_of(const JobSpec& job) { return job.cap_override.value_or(kDefaultEnumerationCap); }

MatrixFile load(const JobSpec& job, std::ostream& err) {
  MatrixFile file = read_matrix_file(job.input_path);
  if (job.verbose)
    for (const auto& note : file.notes) err << "ringmat: note: " << job.input_path << ": " << note << "\n";
  return file;
}

std::size_t square_order(const Matrix& a) {
  if (!a.is_square() || a.rows() == 0)
    throw precondition_error("expected a non-empty square matrix, got " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()));
  return a.rows();
}

json matrix_json(const Ring& ring, const Matrix& a) {
  json rows = json::array();
  for (const auto& r : a.row_list()) {
    json entries = json::array();
    for (const auto& x : r) entries.push_back(format_element(ring, x));
    rows.push_back(std::move(entries));
  }
  return json{{"ring", ring.descriptor()}, {"dims", {a.rows(), a.cols()}}, {"rows", std::move(rows)}};
}

Element compute_det(const Ring& ring, const Matrix& a, std::size_t n, const JobSpec& job) {
  switch (job.algorithm) {
    case Algorithm::leibniz: return det(ring, a, n, cap_of(job));
    case Algorithm::cofactor: return det_rec(ring, a, n);
    case Algorithm::expand_row:
    case Algorithm::expand_col:
      if (n == 1) {
        if (job.algorithm_index != 0) throw precondition_error("expansion index out of range");
        return a(0, 0);
      }
      // Cofactors of an n x n matrix are (n-1)-order Leibniz sums.
      return job.algorithm == Algorithm::expand_row ? expand_row(ring, a, job.algorithm_index, n, std::max(cap_of(job), n - 1))
                                                    : expand_col(ring, a, job.algorithm_index, n, std::max(cap_of(job), n - 1));
  }
  return ring.zero();
}

int run_det(const JobSpec& job, const Hooks& hooks, std::ostream& out, std::ostream& err) {
  const MatrixFile file = load(job, err);
  const Ring& ring = file.ring;
  const std::size_t n = square_order(file.matrix);
  const Element value = hooks.determinant ? hooks.determinant(ring, file.matrix, n) : compute_det(ring, file.matrix, n, job);

  if (job.cross_check) {
    std::vector<std::pair<std::string, Element>> others;
    if (n <= cap_of(job)) others.emplace_back("leibniz", det(ring, file.matrix, n, cap_of(job)));
    others.emplace_back("cofactor", det_rec(ring, file.matrix, n));
    if (n >= 2 && n - 1 <= cap_of(job))
      for (std::size_t k = 0; k < n; ++k) {
        others.emplace_back("expand-row:" + std::to_string(k), expand_row(ring, file.matrix, k, n, cap_of(job)));
        others.emplace_back("expand-col:" + std::to_string(k), expand_col(ring, file.matrix, k, n, cap_of(job)));
      }
    bool agree = true;
    for (const auto& [name, other] : others)
      if (!ring.eq(other, value)) {
        agree = false;
        err << "ringmat: cross-check: " << name << " gives " << format_element(ring, other) << ", expected "
            << format_element(ring, value) << "\n";
      }
    if (!agree) return code(ExitCode::check_failed);
  }

  if (job.format == OutputFormat::machine)
    out << json{{"command", "det"}, {"ring", ring.descriptor()}, {"value", format_element(ring, value)}}.dump() << "\n";
  else
    out << format_element(ring, value) << "\n";
  return code(ExitCode::ok);
}

int run_adjoint(const JobSpec& job, std::ostream& out, std::ostream& err) {
  const MatrixFile file = load(job, err);
  const Ring& ring = file.ring;
  const std::size_t n = square_order(file.matrix);
  if (n < 2) throw precondition_error("adjoint: order must be at least 2");
  const std::size_t cap = std::max(cap_of(job), n - 1);
  const Matrix adj = adjoint(ring, file.matrix, n, cap);

  if (job.verify) {
    const Matrix lhs = multiply(ring, file.matrix, adj);
    const Matrix rhs = mat_scale(ring, det_rec(ring, file.matrix, n), identity(ring, n));
    if (const auto diff = entry_diff(lhs, rhs)) {
      err << "ringmat: verify: a * adj(a) differs from det(a) I at (" << diff->first << "," << diff->second << ")\n";
      return code(ExitCode::check_failed);
    }
  }

  if (job.format == OutputFormat::machine) {
    json doc = matrix_json(ring, adj);
    doc["command"] = "adjoint";
    out << doc.dump() << "\n";
  } else {
    out << write_matrix(ring, adj);
  }
  return code(ExitCode::ok);
}

int run_charpoly(const JobSpec& job, std::ostream& out, std::ostream& err) {
  const MatrixFile file = load(job, err);
  square_order(file.matrix);
  const Element poly = charpoly(file.ring, file.matrix, cap_of(job));
  const Ring poly_ring = Ring::polynomials(file.ring);
  if (job.format == OutputFormat::machine)
    out << json{{"command", "charpoly"}, {"ring", poly_ring.descriptor()}, {"value", format_element(poly_ring, poly)}}.dump()
        << "\n";
  else
    out << format_element(poly_ring, poly) << "\n";
  return code(ExitCode::ok);
}

int run_check(const JobSpec& job, const Hooks& hooks, std::ostream& out, std::ostream& err) {
  const MatrixFile file = load(job, err);
  LawCheckOptions options;
  options.seed = job.seed;
  options.cap = cap_of(job);
  options.samples = job.samples;
  options.determinant = hooks.determinant;
  const LawReport report = run_law_checks(file.ring, file.matrix, options);

  if (job.format == OutputFormat::machine) {
    json laws = json::array();
    for (const auto& r : report.results) laws.push_back({{"law", r.law}, {"pass", r.passed}, {"detail", r.detail}});
    out << json{{"command", "check"}, {"ring", file.ring.descriptor()}, {"pass", report.all_passed()}, {"laws", laws}}.dump()
        << "\n";
  } else {
    for (const auto& r : report.results) out << (r.passed ? "PASS " : "FAIL ") << r.law << ": " << r.detail << "\n";
  }
  return code(report.all_passed() ? ExitCode::ok : ExitCode::check_failed);
}

int run_perm(const JobSpec& job, const std::string& op, std::ostream& out) {
  std::vector<Permutation> operands;
  for (const auto& text : job.permutations) operands.push_back(parse_permutation(text));
  const std::size_t expected = op == "compose" ? 2 : 1;
  if (operands.size() != expected)
    throw parse_error("perm " + op + ": expected " + std::to_string(expected) + " permutation(s)");

  std::string value;
  if (op == "parity") {
    value = parity(operands[0]) == Parity::even ? "even" : "odd";
  } else if (op == "compose") {
    value = to_string(compose(operands[0], operands[1]));
  } else if (op == "invert") {
    value = to_string(invert(operands[0]));
  } else {
    for (const auto& t : decompose(operands[0])) value += (value.empty() ? "" : " ") + to_string(t);
  }

  if (job.format == OutputFormat::machine)
    out << json{{"command", "perm " + op}, {"value", value}}.dump() << "\n";
  else
    out << value << "\n";
  return code(ExitCode::ok);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks) {
  CLI::App app{"Exact determinants, adjoints and characteristic polynomials over commutative rings", "ringmat"};
  app.require_subcommand(1);

  JobSpec job;
  std::string algorithm = "cofactor";
  std::string format = "plain";
  std::string perm_op;

  const auto add_common = [&](CLI::App* sub, bool takes_file) {
    sub->add_option("--cap", job.cap_override, "Largest order for Leibniz enumeration (default 8)")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "machine"}));
    sub->add_flag("--verbose", job.verbose, "Report zmod entries reduced on read");
    if (takes_file) sub->add_option("file", job.input_path, "Matrix file")->required();
  };

  auto* det_cmd = app.add_subcommand("det", "Determinant");
  add_common(det_cmd, true);
  det_cmd->add_option("--algorithm", algorithm, "leibniz | cofactor | expand-row:<i> | expand-col:<j>");
  det_cmd->add_flag("--cross-check", job.cross_check, "Verify that every algorithm agrees");

  auto* adjoint_cmd = app.add_subcommand("adjoint", "Classical adjoint (adjugate)");
  add_common(adjoint_cmd, true);
  adjoint_cmd->add_flag("--verify", job.verify, "Check a * adj(a) = det(a) I");

  auto* charpoly_cmd = app.add_subcommand("charpoly", "Characteristic polynomial det(tI - A)");
  add_common(charpoly_cmd, true);

  auto* check_cmd = app.add_subcommand("check", "Run the determinant law suite on a matrix");
  add_common(check_cmd, true);
  job.seed = kDefaultSeed;
  check_cmd->add_option("--seed", job.seed, "Seed for sampled laws");
  check_cmd->add_option("--samples", job.samples, "Trials per sampled law")->check(CLI::PositiveNumber);

  auto* perm_cmd = app.add_subcommand("perm", "Permutation utilities; permutations are comma separated images");
  perm_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "machine"}));
  perm_cmd->add_option("op", perm_op, "parity | compose | invert | decompose")
      ->required()
      ->check(CLI::IsMember({"parity", "compose", "invert", "decompose"}));
  perm_cmd->add_option("permutations", job.permutations, "Operands, e.g. 1,2,0")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    parse_algorithm(algorithm, job);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? code(ExitCode::ok) : code(ExitCode::parse_error);
  }
  job.format = format == "machine" ? OutputFormat::machine : OutputFormat::plain;
  job.command = app.get_subcommands().front()->get_name();

  try {
    if (job.command == "det") return run_det(job, hooks, out, err);
    if (job.command == "adjoint") return run_adjoint(job, out, err);
    if (job.command == "charpoly") return run_charpoly(job, out, err);
    if (job.command == "check") return run_check(job, hooks, out, err);
    return run_perm(job, perm_op, out);
  } catch (const parse_error& e) {
    err << "ringmat: parse error: ";
    if (!job.input_path.empty()) err << job.input_path << ":";
    if (e.line() > 0) err << e.line() << ":" << e.column() << ": ";
    else if (!job.input_path.empty()) err << " ";
    err << e.what() << "\n";
    return code(ExitCode::parse_error);
  } catch (const precondition_error& e) {
    err << "ringmat: error: " << e.what() << "\n";
    return code(ExitCode::computation_error);
  }
}

}  // namespace ringmat::cli
