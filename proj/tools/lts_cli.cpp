#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "lts/build.hpp"
#include "lts/certify.hpp"
#include "lts/checks.hpp"
#include "lts/search.hpp"
#include <nlohmann/json.hpp>

namespace {

using namespace lts;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << bytes;
}

// largest length the division bound 2^len <= n^(3n) admits
long division_bound(int n) {
  BigInt target;
  mpz_ui_pow_ui(target.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(3 * n));
  return static_cast<long>(mpz_sizeinbase(target.get_mpz_t(), 2)) - 1;
}

// display-only rounding of 4n(log2 n)^2; pass/fail always uses the exact test
long strong2_bound_display(int n) {
  const double l = std::log2(static_cast<double>(n));
  return static_cast<long>(std::floor(4.0 * n * l * l));
}

int power_of_two_exponent(int n) {
  if (n < 1 || (n & (n - 1)) != 0)
    throw std::runtime_error("hypercube family needs n to be a power of two");
  int t = 0;
  while ((1 << t) < n) ++t;
  return t;
}

struct BuildArgs {
  std::string family;
  int n = 0;
  int k = 2;
  int x = 0;  // placement target, defaults to n
  std::string out;
};

int cmd_build(const BuildArgs& a) {
  std::string family = a.family;
  int k = a.k;
  if (family.rfind("ktuple:", 0) == 0) {
    k = std::stoi(family.substr(7));
    family = "ktuple";
  }

  nlohmann::json summary{{"family", family}, {"n", a.n}};
  std::string artifact;
  long length = 0, bound = 0;
  if (family == "placement") {
    const int x = a.x == 0 ? a.n : a.x;
    const Network net = placement_chain(a.n, x);
    length = net.length();
    bound = a.n - 1;
    artifact = encode(net);
    summary["x"] = x;
  } else if (family == "ktuple") {
    const Network net = k_tuple_shuffle(a.n, k);
    length = net.length();
    bound = ktuple_length(a.n, k);
    artifact = encode(net);
    summary["k"] = k;
  } else if (family == "u2") {
    const Network net = u2_shuffle(a.n);
    length = net.length();
    bound = u2_length(a.n);
    artifact = encode(net);
  } else if (family == "hypercube") {
    const Network net = hypercube_strong1(power_of_two_exponent(a.n));
    length = net.length();
    bound = hypercube_length(power_of_two_exponent(a.n));
    artifact = encode(net);
  } else if (family == "strong1") {
    const Network net = strong1(a.n);
    length = net.length();
    bound = strong1_length_bound(a.n);
    artifact = encode(net);
  } else if (family == "reach2") {
    const TranspositionSeq seq = reach2(a.n);
    length = seq.length();
    bound = reach2_length(a.n);
    artifact = encode(seq);
  } else if (family == "division") {
    const Network net = nice_division(a.n);
    length = net.length();
    bound = division_bound(a.n);
    artifact = encode(net);
  } else if (family == "strong2") {
    const Network net = strong2(a.n);
    length = net.length();
    bound = strong2_bound_display(a.n);
    artifact = encode(net);
  } else {
    throw std::runtime_error("unknown family: " + family);
  }

  summary["length"] = length;
  summary["paper_bound"] = bound;
  if (!a.out.empty()) {
    write_file(a.out, artifact);
    summary["file"] = a.out;
    std::cout << summary.dump(2) << "\n";
    std::fprintf(stderr, "wrote %s (%ld swaps)\n", a.out.c_str(), length);
  } else {
    std::cout << artifact;
    std::fprintf(stderr, "%s n=%d: length %ld, bound %ld\n", family.c_str(), a.n, length, bound);
  }
  return 0;
}

int cmd_verify(const std::string& check, const std::string& file, const CheckOptions& opts) {
  Verdict v;
  if (check == "reach") {
    v = check_reachability(decode_seq(read_file(file)));
  } else {
    const Network net = decode_network(read_file(file));
    if (check == "strong1") {
      v = check_strong1(net, opts);
    } else if (check == "strong2") {
      v = check_strong2(net, opts);
    } else if (check == "division") {
      v = check_division(net, opts);
    } else if (check == "full") {
      v = check_full_uniform(net, opts);
    } else if (check.rfind("pair:", 0) == 0) {
      const auto comma = check.find(',');
      if (comma == std::string::npos) throw std::runtime_error("pair check needs pair:x,y");
      const int x = std::stoi(check.substr(5, comma - 5));
      const int y = std::stoi(check.substr(comma + 1));
      v = check_pair_uniform(net, x, y, opts);
    } else {
      throw std::runtime_error("unknown check: " + check);
    }
  }
  std::cout << nlohmann::json(v).dump(2) << "\n";
  return v.pass ? 0 : 2;
}

int cmd_certify(const std::string& invariant, const std::string& file, const CheckOptions& opts) {
  nlohmann::json j;
  bool pass = false;
  if (invariant == "rank") {
    const RankTrace tr = rank_certificate(decode_network(read_file(file)));
    j = tr;
    pass = tr.pass;
  } else if (invariant == "transversal") {
    const TransversalTrace tr = transversal_certificate(decode_network(read_file(file)), opts);
    j = tr;
    pass = tr.pass;
  } else if (invariant == "clique") {
    const CliqueTrace tr = clique_certificate(decode_seq(read_file(file)));
    j = tr;
    pass = tr.pass;
  } else {
    throw std::runtime_error("unknown invariant: " + invariant);
  }
  std::cout << j.dump(2) << "\n";
  return pass ? 0 : 2;
}

int cmd_search(int n, int length, bool minimal, const SearchOptions& opts) {
  if (minimal) {
    const MinimalityReport rep = certify_minimality(n, opts);
    std::cout << nlohmann::json(rep).dump(2) << "\n";
    return rep.minimal ? 0 : 2;
  }
  const SearchReport rep = exhaust_reach2(n, length, opts);
  std::cout << nlohmann::json(rep).dump(2) << "\n";
  return rep.exhausted ? 0 : 2;
}

int cmd_table(int max_n, const std::string& out, const CheckOptions& opts) {
  if (max_n < 2 || max_n > 64) throw std::runtime_error("table supports 2 <= max-n <= 64");
  std::ostringstream csv;
  csv << "family,n,length,paper_bound,verdict\n";
  bool all_pass = true;
  auto row = [&](const std::string& family, int n, long length, long bound, bool ok) {
    all_pass = all_pass && ok;
    csv << family << "," << n << "," << length << "," << bound << ","
        << (ok ? "pass" : "fail") << "\n";
  };

  for (int n = 2; n <= max_n; ++n) {
    const Network net = u2_shuffle(n);
    const bool ok = check_pair_uniform(net, 1, 2, opts).pass && net.length() == u2_length(n);
    row("u2", n, net.length(), u2_length(n), ok);
  }
  for (int n = 2; n <= max_n; ++n) {
    const Network net = strong1(n);
    const long bound = strong1_length_bound(n);
    const bool ok = check_strong1(net, opts).pass && net.length() <= bound;
    row("strong1", n, net.length(), bound, ok);
  }
  for (int n = 2; n <= max_n; ++n) {
    const Network net = strong2(n);
    const bool ok = check_strong2(net, opts).pass && strong2_length_ok(n, net.length());
    row("strong2", n, net.length(), strong2_bound_display(n), ok);
  }
  for (int n = 2; n <= max_n; ++n) {
    const TranspositionSeq seq = reach2(n);
    const bool ok = check_reachability(seq).pass && seq.length() == reach2_length(n);
    row("reach2", n, seq.length(), reach2_length(n), ok);
  }
  for (int n = 2; n <= max_n; n += 2) {
    const Network net = nice_division(n);
    const bool ok = check_division(net, opts).pass && check_strong1(net, opts).pass &&
                    division_length_ok(n, net.length());
    row("division", n, net.length(), division_bound(n), ok);
  }

  if (!out.empty()) {
    write_file(out, csv.str());
    std::fprintf(stderr, "wrote %s\n", out.c_str());
  } else {
    std::cout << csv.str();
  }
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Lazy-transposition shuffle networks: build, verify, certify, search, tabulate.\n"
      "Files: .shuffle.json holds {convention, n, swaps:[{a,b,p},...]} in execution\n"
      "order (first entry acts first); .reach.json holds {n, swaps:[[a,b],...]}.\n"
      "Standard output carries JSON or CSV only; logs go to standard error.\n"
      "Exit codes: 0 pass, 2 check failed or search inconclusive, 1 usage or I/O."};
  app.require_subcommand(1);

  BuildArgs build_args;
  auto* build = app.add_subcommand(
      "build", "synthesize a network; with --out, writes the file and prints a summary");
  build
      ->add_option("family", build_args.family,
                   "placement|ktuple|u2|hypercube|strong1|reach2|division|strong2 "
                   "(ktuple:K also accepted)")
      ->required();
  build->add_option("--n", build_args.n, "ground set size")->required();
  build->add_option("--k", build_args.k, "tuple size for ktuple (default 2)");
  build->add_option("--x", build_args.x, "target label for placement (default n)");
  build->add_option("--out", build_args.out, "output path (default: artifact on stdout)");

  std::string verify_check, verify_file;
  double tol = 1e-9;
  int precision_bits = 128;
  int jobs = 0;
  auto* verify = app.add_subcommand("verify", "run a distribution or reachability check");
  verify->add_option("check", verify_check, "strong1|pair:x,y|strong2|division|full|reach")
      ->required();
  verify->add_option("file", verify_file, ".shuffle.json (or .reach.json for reach)")
      ->required();
  verify->add_option("--tol", tol, "interval-mode tolerance (default 1e-9)");
  verify->add_option("--precision-bits", precision_bits, "enclosure precision (default 128)");
  verify->add_option("--jobs", jobs, "worker threads; 0 library default, 1 serial");

  std::string cert_invariant, cert_file;
  auto* certify = app.add_subcommand("certify", "compute a lower-bound certificate trace");
  certify->add_option("invariant", cert_invariant, "rank|transversal|clique")->required();
  certify->add_option("file", cert_file, ".shuffle.json (or .reach.json for clique)")
      ->required();
  certify->add_option("--tol", tol, "heuristic-mode tolerance (default 1e-9)");
  certify->add_option("--precision-bits", precision_bits, "enclosure precision (default 128)");

  int search_n = 0, search_length = 0;
  bool search_minimal = false;
  unsigned long long max_nodes = 0;
  auto* search = app.add_subcommand("search", "exhaustive reachability search");
  search->add_option("--n", search_n, "ground set size (2..7)")->required();
  search->add_option("--length", search_length, "sequence length budget (<= 9)");
  search->add_flag("--minimal", search_minimal,
                   "prove the stock sequence minimal (searches at its length - 1)");
  search->add_option("--max-nodes", max_nodes, "node cap; exceeded searches are inconclusive");
  search->add_option("--jobs", jobs, "worker threads; 0 library default, 1 serial");

  int max_n = 16;
  std::string table_out;
  auto* table = app.add_subcommand("table", "verify families and tabulate lengths vs bounds");
  table->add_option("--max-n", max_n, "largest ground set (default 16, max 64)");
  table->add_option("--out", table_out, "output path (default: CSV on stdout)");
  table->add_option("--tol", tol, "interval-mode tolerance (default 1e-9)");
  table->add_option("--precision-bits", precision_bits, "enclosure precision (default 128)");
  table->add_option("--jobs", jobs, "worker threads; 0 library default, 1 serial");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const CheckOptions opts{tol, precision_bits, jobs};
    if (build->parsed()) return cmd_build(build_args);
    if (verify->parsed()) return cmd_verify(verify_check, verify_file, opts);
    if (certify->parsed()) return cmd_certify(cert_invariant, cert_file, opts);
    if (search->parsed())
      return cmd_search(search_n, search_length, search_minimal, {max_nodes, jobs});
    if (table->parsed()) return cmd_table(max_n, table_out, opts);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
