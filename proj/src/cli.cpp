#include "ckhopf/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "ckhopf/cut_coproduct.hpp"
#include "ckhopf/expr.hpp"
#include "ckhopf/json_io.hpp"
#include "ckhopf/verify.hpp"

namespace ckhopf {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// CK_MAX_DEGREE, when set, replaces the built-in default degree caps.
std::optional<std::size_t> env_max_degree() {
  const char* v = std::getenv("CK_MAX_DEGREE");
  if (v == nullptr || *v == '\0') return std::nullopt;
  const std::string s(v);
  if (!std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) || s.size() > 6) {
    throw UsageError("CK_MAX_DEGREE must be a non-negative integer, got '" + s + "'");
  }
  return static_cast<std::size_t>(std::stoul(s));
}

struct QMode {
  bool symbolic = false;
  std::string q1, q2;

  /// Empty optional means symbolic.
  std::optional<std::pair<Rational, Rational>> resolve() const {
    const bool has1 = !q1.empty(), has2 = !q2.empty();
    if (symbolic && (has1 || has2)) throw UsageError("--symbolic cannot be combined with --q1/--q2");
    if (has1 != has2) throw UsageError("numeric mode needs both --q1 and --q2");
    if (!has1) return std::nullopt;
    try {
      return std::make_pair(Rational::parse(q1), Rational::parse(q2));
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad q value: ") + e.what());
    }
  }
};

void add_q_options(CLI::App* cmd, QMode& q) {
  cmd->add_flag("--symbolic", q.symbolic, "Keep q1, q2 as indeterminates (default)");
  cmd->add_option("--q1", q.q1, "Numeric value of q1 (p or p/q)");
  cmd->add_option("--q2", q.q2, "Numeric value of q2 (p or p/q)");
}

int cmd_enumerate(std::size_t nodes, const std::string& format, std::ostream& out) {
  if (nodes == 0) throw UsageError("--nodes must be at least 1");
  const auto trees = enumerate_trees(nodes);
  if (format == "json") {
    Json list = Json::array();
    for (const auto& t : trees) list.push_back(t.encoding());
    out << Json{{"nodes", nodes}, {"count", trees.size()}, {"trees", std::move(list)}}.dump(2) << '\n';
    return kExitOk;
  }
  for (const auto& t : trees) out << t.encoding() << '\n';
  out << "count: " << trees.size() << '\n';
  return kExitOk;
}

template <Coefficient C>
void print_tensor(const Tensor<C>& t, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << tensor_to_json(t, 2).dump(2) << '\n';
  } else {
    out << format_tensor(t) << '\n';
  }
}

int cmd_coproduct(const std::string& expr, const QMode& q, bool oracle, const std::string& format,
                  std::ostream& out) {
  const auto numeric = q.resolve();
  const auto element = parse_expression(expr);
  if (oracle) {
    if (!numeric) {
      for (const auto& [f, c] : element) {
        if (!c.is_constant()) throw UsageError("--oracle needs rational coefficients (give --q1/--q2)");
      }
    }
    const auto e = numeric ? specialize(element, numeric->first, numeric->second)
                           : specialize(element, Rational(0), Rational(0));
    Tensor<Rational> t;
    for (const auto& [f, c] : e) t += coproduct_ck_oracle<Rational>(f).scaled(c);
    print_tensor(t, format, out);
    return kExitOk;
  }
  if (numeric) {
    const auto& [v1, v2] = *numeric;
    CoproductEngine<Rational> delta(Twisting<Rational>::qpower(v1), Twisting<Rational>::qpower(v2));
    print_tensor(delta(specialize(element, v1, v2)), format, out);
  } else {
    CoproductEngine<BivariatePoly> delta(Twisting<BivariatePoly>::qpower(BivariatePoly::q1()),
                                         Twisting<BivariatePoly>::qpower(BivariatePoly::q2()));
    print_tensor(delta(element), format, out);
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::optional<std::size_t> max_degree, std::uint64_t seed,
               bool corrupt_lambda, std::ostream& out) {
  if (!is_suite_name(suite)) throw UsageError("unknown suite '" + suite + "'");
  SuiteOptions options;
  options.max_degree = max_degree ? max_degree : env_max_degree();
  if (options.max_degree && *options.max_degree == 0) throw UsageError("--max-degree must be at least 1");
  options.seed = seed;
  options.corrupt_lambda = corrupt_lambda;
  bool ok = true;
  for (const auto& result : run_suite(suite, options)) {
    out << result.to_text();
    ok = ok && result.ok();
  }
  out << "verify " << suite << ": " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kExitOk : kExitFailure;
}

int cmd_export(const std::string& what, std::optional<std::size_t> max_degree, const QMode& q,
               const std::string& output, std::ostream& out, std::ostream& err) {
  std::size_t n = 4;
  if (max_degree) {
    n = *max_degree;
  } else if (auto env = env_max_degree()) {
    n = *env;
  }
  const auto numeric = q.resolve();
  Json doc;
  if (what == "basis") {
    doc = basis_json(n);
  } else if (numeric) {
    doc = coproduct_table_json(
        CoproductEngine<Rational>(Twisting<Rational>::qpower(numeric->first), Twisting<Rational>::qpower(numeric->second)),
        n);
  } else {
    doc = coproduct_table_json(CoproductEngine<BivariatePoly>(Twisting<BivariatePoly>::qpower(BivariatePoly::q1()),
                                                              Twisting<BivariatePoly>::qpower(BivariatePoly::q2())),
                               n);
  }
  const std::string text = doc.dump(2) + "\n";
  if (output.empty() || output == "-") {
    out << text;
    return kExitOk;
  }
  std::ofstream file(output, std::ios::binary | std::ios::trunc);
  if (file) file << text;
  if (!file || !file.flush()) {
    err << "error: cannot write '" << output << "'\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hopf algebra of rooted trees: enumerate, compute, verify, export", "ckhopf"};
  app.require_subcommand(1);
  std::string format = "text";

  auto* enumerate = app.add_subcommand("enumerate", "List all rooted trees with N nodes");
  std::size_t nodes = 0;
  enumerate->add_option("--nodes", nodes, "Number of nodes")->required();
  enumerate->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* coproduct = app.add_subcommand("coproduct", "Coproduct Δ_{q1,q2} of an element");
  std::string element;
  QMode coproduct_q;
  bool oracle = false;
  coproduct->add_option("--element", element, "Linear combination of forests, e.g. \"2[[]] - [][]\"")->required();
  add_q_options(coproduct, coproduct_q);
  coproduct->add_flag("--oracle", oracle, "Use the admissible-cut formula instead of the recursion");
  coproduct->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::optional<std::size_t> verify_degree;
  std::uint64_t seed = 1;
  bool corrupt_lambda = false;
  verify->add_option("--suite", suite, "coassoc, counit, oracle, cocycle, antipode, retraction, twisting or all")
      ->required();
  verify->add_option("--max-degree", verify_degree, "Degree cap (default depends on the suite)");
  verify->add_option("--seed", seed, "Seed for the randomized checks");
  verify->add_flag("--corrupt-lambda", corrupt_lambda, "Test fixture: run the cocycle suite with a broken λ");

  auto* exporter = app.add_subcommand("export", "Write the basis or the coproduct table as JSON");
  std::string what;
  std::optional<std::size_t> export_degree;
  std::string export_format = "json";
  std::string output;
  QMode export_q;
  exporter->add_option("--what", what, "basis or coproduct-table")
      ->required()
      ->check(CLI::IsMember({"basis", "coproduct-table"}));
  exporter->add_option("--max-degree", export_degree, "Degree cap (default 4)");
  exporter->add_option("--format", export_format, "json")->check(CLI::IsMember({"json"}));
  exporter->add_option("--output,-o", output, "Output file (default stdout)");
  add_q_options(exporter, export_q);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(nodes, format, out);
    if (*coproduct) return cmd_coproduct(element, coproduct_q, oracle, format, out);
    if (*verify) return cmd_verify(suite, verify_degree, seed, corrupt_lambda, out);
    if (*exporter) return cmd_export(what, export_degree, export_q, output, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ckhopf
