// Command-line front end: expression evaluation, adjoint matrices, the two
// embeddings, Dirac matrix dumps and the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 parse error, 3 domain
// error (singular element, group membership, bad signature).
#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "cliff/embeddings.hpp"
#include "cliff/errors.hpp"
#include "cliff/expr.hpp"
#include "cliff/groups.hpp"
#include "cliff/json_io.hpp"
#include "cliff/spinors.hpp"
#include "cliff/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitDomainError = 3;

void print_parse_error(const std::string& text, const cliff::SyntaxError& err) {
  std::cerr << "error: " << err.what() << " at byte " << err.offset << "\n";
  std::cerr << "  " << text << "\n";
  std::cerr << "  " << std::string(err.offset, ' ') << "^\n";
}

cliff::Signature parse_signature(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw cliff::Error("expected --signature p,q");
  const int p = std::stoi(text.substr(0, comma));
  const int q = std::stoi(text.substr(comma + 1));
  if (p == 2 && q == 3) return cliff::Signature::cl23();
  if (p == 1 && q == 3) return cliff::Signature::cl13();
  return cliff::Signature::from_pq(p, q);
}

// e0..e{n-1} expressions over an arbitrary diagonal metric, reusing the cl23
// grammar and re-basing the terms. Only sound for n <= 5 symbols.
cliff::Multivector evaluate_over(const std::string& text, const cliff::Signature& sig) {
  if (sig == cliff::Signature::cl23())
    return cliff::expr::evaluate(cliff::expr::parse(text, cliff::expr::Mode::Cl23));
  const auto ast = cliff::expr::parse(text, cliff::expr::Mode::Cl23);
  const cliff::Multivector in23 = cliff::expr::evaluate(ast);
  std::vector<cliff::Multivector::Term> terms(in23.terms().begin(), in23.terms().end());
  return cliff::Multivector::from_terms(sig, std::move(terms));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Clifford algebra toolkit for Cl(2,3) and the complex spacetime algebra"};
  app.require_subcommand(1);

  std::string algebra = "cl23";
  std::string expression;
  std::string suite = "all";
  std::string signature_text = "2,3";
  std::string kind_text = "trivial";
  std::string basis = "dirac";
  std::uint64_t seed = cliff::kDefaultSeed;
  bool as_json = false;
  bool twisted = false;
  bool check_diagram = false;

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate an expression to canonical form");
  eval_cmd->add_option("expr", expression, "expression to evaluate")->required();
  eval_cmd->add_option("--algebra", algebra, "cl23 or cl13c")
      ->check(CLI::IsMember({"cl23", "cl13c"}));
  eval_cmd->add_flag("--json", as_json, "emit the canonical JSON multivector");

  CLI::App* adjoint_cmd = app.add_subcommand("adjoint", "adjoint action of a group element");
  adjoint_cmd->add_option("expr", expression, "group element expression")->required();
  adjoint_cmd->add_flag("--twisted", twisted, "use the twisted adjoint action");
  adjoint_cmd->add_option("--signature", signature_text, "metric as p,q (default 2,3)");
  adjoint_cmd->add_flag("--check-diagram", check_diagram,
                        "also verify the embedding diagram for a Pin(1,3) element");
  adjoint_cmd->add_flag("--json", as_json, "emit the matrix as JSON");

  CLI::App* embed_cmd = app.add_subcommand("embed", "map a cl13c expression into Cl(2,3)");
  embed_cmd->add_option("expr", expression, "cl13c expression")->required();
  embed_cmd->add_option("--kind", kind_text, "trivial or twisted")
      ->check(CLI::IsMember({"trivial", "twisted"}));
  embed_cmd->add_flag("--json", as_json, "emit the canonical JSON multivector");

  CLI::App* extract_cmd = app.add_subcommand("extract", "map a Cl(2,3) expression back");
  extract_cmd->add_option("expr", expression, "cl23 expression")->required();
  extract_cmd->add_option("--kind", kind_text, "trivial or twisted")
      ->check(CLI::IsMember({"trivial", "twisted"}));
  extract_cmd->add_flag("--json", as_json, "emit the embedded JSON multivector");

  CLI::App* gamma_cmd = app.add_subcommand("gamma", "dump the gamma matrices of the spinor basis");
  gamma_cmd->add_option("--basis", basis, "matrix basis (dirac)")
      ->check(CLI::IsMember({"dirac"}));

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  verify_cmd->add_option("suite", suite, "all, core, groups, embeddings or spinors")
      ->check(CLI::IsMember(cliff::verify::suite_names()));
  verify_cmd->add_flag("--json", as_json, "emit the report as JSON");
  verify_cmd->add_option("--seed", seed, "seed for the property checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval_cmd->parsed()) {
      const auto mode =
          algebra == "cl23" ? cliff::expr::Mode::Cl23 : cliff::expr::Mode::Cl13c;
      try {
        const cliff::Multivector value = cliff::expr::evaluate(cliff::expr::parse(expression, mode));
        if (as_json) {
          std::cout << cliff::jsonio::multivector_to_json(value).dump() << "\n";
        } else if (mode == cliff::expr::Mode::Cl23) {
          std::cout << cliff::expr::render(value) << "\n";
        } else {
          std::cout << cliff::embed::extract(value, cliff::embed::EmbeddingKind::Trivial)
                           .to_expression_string()
                    << "\n";
        }
      } catch (const cliff::SyntaxError& err) {
        print_parse_error(expression, err);
        return kExitParseError;
      }
      return kExitOk;
    }

    if (adjoint_cmd->parsed()) {
      cliff::Multivector element;
      try {
        element = evaluate_over(expression, parse_signature(signature_text));
      } catch (const cliff::SyntaxError& err) {
        print_parse_error(expression, err);
        return kExitParseError;
      }
      const auto matrix = twisted ? cliff::groups::twisted_adjoint_matrix(element)
                                  : cliff::groups::adjoint_matrix(element);
      if (as_json)
        std::cout << cliff::jsonio::ortho_to_json(matrix).dump() << "\n";
      else
        for (std::size_t r = 0; r < matrix.size(); ++r) {
          for (std::size_t c = 0; c < matrix.size(); ++c)
            std::cout << (c ? " " : "") << cliff::rat_to_string(matrix.matrix().at(r, c));
          std::cout << "\n";
        }
      if (check_diagram) {
        // re-read the element as a Pin(1,3) representative
        const cliff::Multivector x13 =
            evaluate_over(expression, cliff::Signature::cl13());
        std::cout << "diagram: " << (cliff::embed::diagram_check(x13) ? "commutes" : "fails")
                  << "\n";
      }
      return kExitOk;
    }

    if (embed_cmd->parsed() || extract_cmd->parsed()) {
      const auto kind = kind_text == "trivial" ? cliff::embed::EmbeddingKind::Trivial
                                               : cliff::embed::EmbeddingKind::Twisted;
      try {
        if (embed_cmd->parsed()) {
          const cliff::Multivector as23 = cliff::expr::evaluate(
              cliff::expr::parse(expression, cliff::expr::Mode::Cl13c));
          const auto complex13 = cliff::embed::extract(as23, cliff::embed::EmbeddingKind::Trivial);
          const cliff::Multivector image = cliff::embed::embed(complex13, kind);
          if (as_json)
            std::cout << cliff::jsonio::multivector_to_json(image).dump() << "\n";
          else
            std::cout << cliff::expr::render(image) << "\n";
        } else {
          const cliff::Multivector value = cliff::expr::evaluate(
              cliff::expr::parse(expression, cliff::expr::Mode::Cl23));
          const auto complex13 = cliff::embed::extract(value, kind);
          if (as_json)
            std::cout << cliff::jsonio::multivector_to_json(
                             cliff::embed::embed(complex13, cliff::embed::EmbeddingKind::Trivial))
                             .dump()
                      << "\n";
          else
            std::cout << complex13.to_expression_string() << "\n";
        }
      } catch (const cliff::SyntaxError& err) {
        print_parse_error(expression, err);
        return kExitParseError;
      }
      return kExitOk;
    }

    if (gamma_cmd->parsed()) {
      const cliff::spinors::SpinorSpace space(
          cliff::spinors::Idempotent::certify(cliff::spinors::dirac_idempotent()));
      nlohmann::json out;
      out["basis"] = basis;
      nlohmann::json matrices = nlohmann::json::array();
      for (int mu = 0; mu < 4; ++mu)
        matrices.push_back(cliff::jsonio::kmatrix_to_json(
            cliff::spinors::matrix_rep(space, cliff::embed::twisted_vector(mu))));
      out["gamma"] = matrices;
      std::cout << out.dump(2) << "\n";
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      const auto report = cliff::verify::run_suite(suite, seed);
      if (as_json)
        std::cout << cliff::verify::report_to_json(report).dump(2) << "\n";
      else
        std::cout << cliff::verify::report_to_text(report);
      return report.all_pass() ? kExitOk : kExitCheckFailure;
    }
  } catch (const cliff::SyntaxError& err) {
    print_parse_error(expression, err);
    return kExitParseError;
  } catch (const cliff::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitDomainError;
  }
  return kExitOk;
}
