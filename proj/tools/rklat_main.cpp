#include "rklat/bigint.hpp"
#include "rklat/catalog.hpp"
#include "rklat/document.hpp"
#include "rklat/errors.hpp"
#include "rklat/models.hpp"
#include "rklat/preorder.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace rklat;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw parse_error("cannot read file '" + path + "'");
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot write file '" + path + "'");
  out << text;
  out.flush();
  if (!out) throw parse_error("cannot write file '" + path + "'");
}

LabeledPreorder load_preorder(const std::string& path) {
  return to_preorder(parse_document(read_file(path)));
}

std::string signature_string(const TheorySignature& sig) {
  return "(" + std::to_string(sig.k) + "," + std::to_string(sig.s) + ")";
}

int cmd_build(const TheorySignature& sig, std::uint64_t max_nodes,
              const std::string& output) {
  const BigInt nodes = prime_model_count(sig);
  if (nodes > max_nodes) {
    std::cerr << "lattice for " << signature_string(sig) << " has "
              << nodes.str() << " nodes, over the --max-nodes cap of "
              << max_nodes << "; raise --max-nodes to build it anyway\n";
    return 3;
  }
  write_output(output, serialize_document(canonical_document(sig)));
  return 0;
}

int cmd_verify(const TheorySignature& sig) {
  const DecompositionReport report = decomposition_report(sig);
  std::cout << report.total.str() << " = " << report.prime_count.str() << " + "
            << report.limit_total.str() << "\n";
  for (const LimitTerm& term : report.terms) {
    if (term.per_type == 0) continue;
    // Term factors the way the source identities display them: the power of
    // two and C(s,m) appear only when s > 0, C(k,t) only when k > 0.
    std::vector<std::string> factors;
    if (sig.s > 0) factors.push_back(ipow(2, sig.s - term.m).str());
    factors.push_back(term.per_type.str());
    if (sig.k > 0) factors.push_back(binomial(sig.k, term.t).str());
    if (sig.s > 0) factors.push_back(binomial(sig.s, term.m).str());
    std::string product;
    for (const std::string& f : factors) {
      if (!product.empty()) product += "·";
      product += f;
    }
    std::cout << "  t=" << term.t << " m=" << term.m << ": " << product
              << " = " << BigInt(term.multiplicity * term.per_type).str()
              << "\n";
  }
  if (!report.balanced)
    throw internal_error("decomposition identity out of balance");
  return 0;
}

int cmd_oracle(const TheorySignature& sig, std::uint64_t budget) {
  const CountReport report = oracle_counts(sig, budget);
  std::cout << "signature " << signature_string(sig) << "\n"
            << "total " << report.total.str() << "\n"
            << "prime " << report.prime_count.str() << "\n"
            << "limit " << report.limit_count.str() << "\n"
            << "per-node limit counts:\n";
  // Rows run through coordinates with the first digit cycling fastest, the
  // bottom-to-top reading order of the source diagrams.
  NodeCoord c;
  c.a.assign(sig.k, 0);
  c.b.assign(sig.s, 0);
  bool more = true;
  while (more) {
    std::cout << "  [" << c.id() << "] " << report.per_node.at(c).str()
              << "\n";
    more = false;
    for (std::size_t i = 0; i < c.a.size() && !more; ++i) {
      if (c.a[i] < 1) {
        ++c.a[i];
        more = true;
      } else {
        c.a[i] = 0;
      }
    }
    for (std::size_t j = 0; j < c.b.size() && !more; ++j) {
      if (c.b[j] < 2) {
        ++c.b[j];
        more = true;
      } else {
        c.b[j] = 0;
      }
    }
  }
  std::cout << "oracle matches closed forms\n";
  return 0;
}

int cmd_identify(const std::string& input) {
  const auto sig = identify(load_preorder(input));
  if (!sig) {
    std::cout << "not canonical\n";
    return 1;
  }
  std::cout << signature_string(*sig) << "\n";
  return 0;
}

int cmd_render(const std::string& input, const std::string& output) {
  const LabeledPreorder p = quotient_rk(load_preorder(input));
  write_output(output, render_dot(p));
  return 0;
}

int cmd_validate_count(const std::string& text) {
  const auto sig = validate_count(parse_decimal(text));
  if (!sig) {
    std::cout << "not a quite o-minimal Ehrenfeucht spectrum value\n";
    return 1;
  }
  std::cout << signature_string(*sig) << "\n";
  return 0;
}

int cmd_compose(const std::vector<std::string>& inputs,
                std::uint64_t max_nodes, const std::string& output) {
  const LabeledPreorder left = load_preorder(inputs[0]);
  const LabeledPreorder right = load_preorder(inputs[1]);
  const BigInt nodes = BigInt(left.size()) * right.size();
  if (nodes > max_nodes) {
    std::cerr << "product has " << nodes.str()
              << " nodes, over the --max-nodes cap of " << max_nodes
              << "; raise --max-nodes to build it anyway\n";
    return 3;
  }
  write_output(output, serialize_document(to_document(
                           pareto_product(left, right))));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Countable-model distributions of quite o-minimal Ehrenfeucht "
      "theories: canonical Rudin-Keisler lattices, exact decomposition "
      "identities, and a brute-force enumeration oracle."};
  app.require_subcommand(1);

  unsigned k = 0, s = 0;
  std::uint64_t max_nodes = 100000;
  std::uint64_t max_enumeration = 1000000;
  std::string input, output, count_text;
  std::vector<std::string> inputs;

  CLI::App* build = app.add_subcommand(
      "build", "Write the canonical lattice for (k,s) as a JSON document");
  build->add_option("--k", k, "Number of two-level components");
  build->add_option("--s", s, "Number of three-level components");
  build->add_option("--output", output, "Output path (default: stdout)");
  build->add_option("--max-nodes", max_nodes,
                    "Refuse lattices with more nodes than this")
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand(
      "verify", "Check the counting identity for (k,s) term by term");
  verify->add_option("--k", k, "Number of two-level components");
  verify->add_option("--s", s, "Number of three-level components");

  CLI::App* oracle = app.add_subcommand(
      "oracle",
      "Enumerate every countable model of (k,s) and check the closed forms");
  oracle->add_option("--k", k, "Number of two-level components");
  oracle->add_option("--s", s, "Number of three-level components");
  oracle->add_option("--max-enumeration", max_enumeration,
                     "Refuse enumerations with more models than this")
      ->capture_default_str();

  CLI::App* identify = app.add_subcommand(
      "identify", "Recognize a preorder document as a canonical lattice");
  identify->add_option("--input", input, "Preorder document to read")
      ->required();

  CLI::App* render = app.add_subcommand(
      "render", "Emit the Hasse diagram of a preorder document as DOT");
  render->add_option("--input", input, "Preorder document to read")
      ->required();
  render->add_option("--output", output, "Output path (default: stdout)");

  CLI::App* validate = app.add_subcommand(
      "validate-count", "Decide whether n is a spectrum value 3^k*6^s");
  validate->add_option("n", count_text, "Model count (decimal)")->required();

  CLI::App* compose = app.add_subcommand(
      "compose", "Pareto product of two preorder documents");
  compose->add_option("--input", inputs, "The two documents to combine")
      ->required()
      ->expected(2);
  compose->add_option("--output", output, "Output path (default: stdout)");
  compose->add_option("--max-nodes", max_nodes,
                      "Refuse products with more nodes than this")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 4;
  }

  try {
    if (build->parsed()) return cmd_build({k, s}, max_nodes, output);
    if (verify->parsed()) return cmd_verify({k, s});
    if (oracle->parsed()) return cmd_oracle({k, s}, max_enumeration);
    if (identify->parsed()) return cmd_identify(input);
    if (render->parsed()) return cmd_render(input, output);
    if (validate->parsed()) return cmd_validate_count(count_text);
    if (compose->parsed()) return cmd_compose(inputs, max_nodes, output);
    throw rklat::internal_error("no subcommand dispatched");
  } catch (const rklat::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const rklat::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const rklat::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
