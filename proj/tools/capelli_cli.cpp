// capelli: command-line driver for the tensor identities and quantum immanants.

#include "capelli/identities.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using namespace capelli;
using nlohmann::json;

namespace {

struct Common {
  std::string shape;
  int m = 2;
  int n = 2;
  bool json = false;
};

std::vector<int> parse_ints(const std::string& text)
{
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    out.push_back(std::stoi(item));
  return out;
}

int report(const std::vector<VerificationReport>& reports, bool as_json)
{
  int failed = 0;
  for (const auto& r : reports) {
    if (!r.passed)
      ++failed;
    if (as_json) {
      json j{{"case", to_string(r.case_info)},
             {"outcome", r.passed ? "pass" : "fail"},
             {"lhs_terms", r.lhs_terms},
             {"rhs_terms", r.rhs_terms},
             {"first_diff", r.first_diff ? json(*r.first_diff) : json(nullptr)},
             {"millis", r.millis}};
      std::cout << j.dump() << '\n';
    } else {
      std::cout << (r.passed ? "PASS " : "FAIL ") << to_string(r.case_info) << " lhs_terms=" << r.lhs_terms
                << " rhs_terms=" << r.rhs_terms << " (" << r.millis << " ms)";
      if (r.first_diff)
        std::cout << "\n  first difference: " << *r.first_diff;
      std::cout << '\n';
    }
  }
  if (!as_json)
    std::cout << reports.size() - failed << " of " << reports.size() << " cases passed\n";
  return failed == 0 ? 0 : 1;
}

void add_shape(CLI::App* cmd, Common& opts) { cmd->add_option("--shape", opts.shape, "Partition, e.g. 2,1")->required(); }

void add_grid(CLI::App* cmd, Common& opts)
{
  cmd->add_option("--m", opts.m, "Number of rows of X")->check(CLI::Range(1, 8));
  cmd->add_option("--n", opts.n, "Number of columns of X")->check(CLI::Range(1, 8));
}

void add_json(CLI::App* cmd, Common& opts) { cmd->add_flag("--json", opts.json, "One JSON object per case"); }

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Exact verification of tensor Capelli identities"};
  app.require_subcommand(1);
  Common opts;
  int exit_code = 0;

  auto* verify = app.add_subcommand("verify", "Verify identities exactly");
  verify->require_subcommand(1);

  std::string tableau, tableau2;
  auto* theorem = verify->add_subcommand("theorem", "Tensor identity for one shape or one tableau pair");
  add_shape(theorem, opts);
  add_grid(theorem, opts);
  add_json(theorem, opts);
  theorem->add_option("--tableau", tableau, "First tableau, e.g. [[1,2],[3]]");
  theorem->add_option("--tableau2", tableau2, "Second tableau (defaults to the first)");

  auto* corollary = verify->add_subcommand("corollary", "Traced identity and tableau independence");
  add_shape(corollary, opts);
  add_grid(corollary, opts);
  add_json(corollary, opts);

  auto* steps = verify->add_subcommand("proof-steps", "Branching and Jucys-Murphy annihilation");
  add_shape(steps, opts);
  add_json(steps, opts);

  int max_k = 3, max_m = 3, max_n = 3;
  auto* sweep = verify->add_subcommand("sweep", "Tensor and traced identities over a grid");
  sweep->add_option("--max-k", max_k)->check(CLI::Range(1, 6));
  sweep->add_option("--max-m", max_m)->check(CLI::Range(1, 8));
  sweep->add_option("--max-n", max_n)->check(CLI::Range(1, 8));
  add_json(sweep, opts);

  bool print_pbw = false;
  auto* immanant = app.add_subcommand("immanant", "Quantum immanant in U(gl(m))");
  add_shape(immanant, opts);
  immanant->add_option("--m", opts.m)->check(CLI::Range(1, 8));
  immanant->add_option("--tableau", tableau, "Tableau used in the construction");
  immanant->add_flag("--print-pbw", print_pbw, "Print the PBW expansion");

  std::string weights;
  auto* eigen = app.add_subcommand("eigenvalue", "Eigenvalue of a quantum immanant on a highest-weight module");
  add_shape(eigen, opts);
  eigen->add_option("--m", opts.m)->check(CLI::Range(1, 8));
  eigen->add_option("--weights", weights, "Highest weight, e.g. 3,1")->required();

  auto* tableaux = app.add_subcommand("tableaux", "List standard tableaux and their contents");
  add_shape(tableaux, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    const auto lambda = opts.shape.empty() ? Partition({1}) : Partition::parse(opts.shape);
    const auto pick_tableau = [&]() {
      if (tableau.empty())
        return enumerate_standard_tableaux(lambda).front();
      auto t = StandardTableau::parse(tableau);
      if (!(t.shape() == lambda))
        throw std::invalid_argument("tableau " + tableau + " does not have shape " + opts.shape);
      return t;
    };

    if (*theorem) {
      if (tableau.empty() && tableau2.empty()) {
        exit_code = report(verify_theorem(lambda, opts.m, opts.n), opts.json);
      } else {
        const auto t = pick_tableau();
        auto u = tableau2.empty() ? t : StandardTableau::parse(tableau2);
        if (!(u.shape() == lambda))
          throw std::invalid_argument("tableau " + tableau2 + " does not have shape " + opts.shape);
        exit_code = report({verify_theorem_case(t, u, opts.m, opts.n)}, opts.json);
      }
    } else if (*corollary) {
      exit_code = report(verify_corollary(lambda, opts.m, opts.n), opts.json);
    } else if (*steps) {
      exit_code = report({verify_proof_steps(lambda)}, opts.json);
    } else if (*sweep) {
      exit_code = report(verify_sweep(max_k, max_m, max_n), opts.json);
    } else if (*immanant) {
      const auto t = pick_tableau();
      const auto u = quantum_immanant(lambda, t, opts.m);
      std::cout << "shape " << to_string(lambda) << " T=" << to_string(t) << " m=" << opts.m << ": " << u.size()
                << " PBW terms, " << (is_central(u).central ? "central" : "not central") << '\n';
      if (print_pbw)
        std::cout << to_string(u) << '\n';
    } else if (*eigen) {
      const auto w = parse_ints(weights);
      if (static_cast<int>(w.size()) != opts.m)
        throw std::invalid_argument("expected " + std::to_string(opts.m) + " weights");
      std::vector<Rational> wq(w.begin(), w.end());
      const auto u = quantum_immanant(lambda, enumerate_standard_tableaux(lambda).front(), opts.m);
      std::cout << hc_eigenvalue(u, wq).get_str() << '\n';
    } else if (*tableaux) {
      for (const auto& t : enumerate_standard_tableaux(lambda)) {
        std::cout << to_string(t) << " contents";
        for (int r = 1; r <= t.size(); ++r)
          std::cout << ' ' << t.content(r);
        std::cout << '\n';
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
