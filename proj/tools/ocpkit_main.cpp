#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ocpkit/faces.hpp"
#include "ocpkit/geometry.hpp"
#include "ocpkit/io.hpp"
#include "ocpkit/poset.hpp"
#include "ocpkit/sweep.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_disagreement = 1;
constexpr int exit_usage = 2;

std::vector<int> parse_level_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad level list entry: '" + part + "'");
    }
    if (used != part.size() || value < 1)
      throw std::invalid_argument("bad level list entry: '" + part + "'");
    out.push_back(value);
  }
  if (out.empty()) throw std::invalid_argument("empty level list");
  return out;
}

std::string file_stem(const std::string& path) {
  std::size_t slash = path.find_last_of("/\\");
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  std::size_t dot = name.find_last_of('.');
  return dot == std::string::npos || dot == 0 ? name : name.substr(0, dot);
}

std::vector<std::string> letter_labels(int d) {
  if (d > 26) return {};
  std::vector<std::string> out;
  for (int i = 0; i < d; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::invalid_argument("cannot write output file: " + path);
  return file;
}

int run_gen(const std::string& levels_arg, const std::vector<std::string>& random_args,
            const std::string& out_path) {
  ocpkit::poset p = [&] {
    if (!levels_arg.empty()) {
      std::vector<int> sizes = parse_level_list(levels_arg);
      ocpkit::poset base = ocpkit::ordinal_sum_of_antichains(sizes);
      return ocpkit::poset::from_covers(base.size(), base.covers(),
                                        letter_labels(base.size()));
    }
    int d = 0;
    double prob = 0.0;
    std::uint64_t seed = 0;
    try {
      std::size_t u0 = 0, u1 = 0, u2 = 0;
      d = std::stoi(random_args[0], &u0);
      prob = std::stod(random_args[1], &u1);
      seed = std::stoull(random_args[2], &u2);
      if (u0 != random_args[0].size() || u1 != random_args[1].size() ||
          u2 != random_args[2].size())
        throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad --random arguments: expected d p seed");
    }
    if (prob < 0.0 || prob > 1.0)
      throw std::invalid_argument("relation probability must lie in [0,1]");
    return ocpkit::random_poset(d, prob, seed);
  }();

  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  out << ocpkit::serialize_poset(p) << '\n';

  bool graded = ocpkit::try_rank_levels(p).has_value();
  std::cerr << "d: " << p.size() << '\n'
            << "graded: " << (graded ? "yes" : "no") << '\n'
            << "maximal ranked: " << (ocpkit::is_maximal_ranked(p) ? "yes" : "no")
            << '\n'
            << "has x subposet: "
            << (ocpkit::contains_x_subposet(p) ? "yes" : "no") << '\n';
  return exit_ok;
}

int run_analyze(const std::string& path, const std::string& format,
                const std::string& out_path, std::size_t cap) {
  ocpkit::poset p = ocpkit::load_poset_file(path);
  ocpkit::comparison_report report = ocpkit::compare(p, cap);
  std::vector<std::string> violations = ocpkit::report_invariant_violations(p, report);
  bool consistent = violations.empty();

  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  std::string id = file_stem(path);
  if (format == "csv")
    out << ocpkit::report_csv_header() << '\n'
        << ocpkit::report_to_csv_row(id, report, consistent) << '\n';
  else
    out << ocpkit::report_to_json(id, report, consistent) << '\n';

  if (!consistent) {
    for (const std::string& msg : violations) std::cerr << "violation: " << msg << '\n';
    return exit_disagreement;
  }
  return exit_ok;
}

template <typename Face, typename Printer>
bool report_face_agreement(const char* what, const std::vector<Face>& combinatorial,
                           const std::vector<Face>& geometric, Printer print) {
  if (combinatorial == geometric) {
    std::cout << what << ": " << combinatorial.size() << " agree\n";
    return true;
  }
  std::vector<Face> diff;
  std::set_symmetric_difference(combinatorial.begin(), combinatorial.end(),
                                geometric.begin(), geometric.end(),
                                std::back_inserter(diff));
  const Face& witness = diff.front();
  bool lemma_side = std::binary_search(combinatorial.begin(), combinatorial.end(),
                                       witness);
  std::cerr << "disagreement in " << what << ": " << print(witness) << " found by the "
            << (lemma_side ? "combinatorial enumeration only"
                           : "geometric oracle only")
            << '\n';
  return false;
}

int run_verify(const std::string& path, std::size_t cap, std::size_t pair_cap,
               std::size_t triple_cap) {
  ocpkit::poset p = ocpkit::load_poset_file(path);
  ocpkit::polytope_model om = ocpkit::order_polytope_model(p, cap);
  ocpkit::polytope_model cm = ocpkit::chain_polytope_model(p, cap);

  auto show_edge = [&](const ocpkit::edge_pair& e) {
    return ocpkit::format_set(p, e.a) + " / " + ocpkit::format_set(p, e.b);
  };
  auto show_triangle = [&](const ocpkit::triangle_triple& t) {
    return ocpkit::format_set(p, t.a) + " / " + ocpkit::format_set(p, t.b) + " / " +
           ocpkit::format_set(p, t.c);
  };

  bool ok = true;
  ok &= report_face_agreement("order-polytope edges", ocpkit::o_edges(p, cap),
                              ocpkit::brute_edges(om, pair_cap), show_edge);
  ok &= report_face_agreement("order-polytope triangles", ocpkit::o_triangles(p, cap),
                              ocpkit::brute_triangles(om, triple_cap), show_triangle);
  ok &= report_face_agreement("chain-polytope edges", ocpkit::c_edges(p, cap),
                              ocpkit::brute_edges(cm, pair_cap), show_edge);
  ok &= report_face_agreement("chain-polytope triangles", ocpkit::c_triangles(p, cap),
                              ocpkit::brute_triangles(cm, triple_cap), show_triangle);
  return ok ? exit_ok : exit_disagreement;
}

int run_sweep_cmd(const std::string& family_arg, int max_size, int count, int jobs,
                  const std::string& format, const std::string& out_path,
                  std::size_t cap) {
  ocpkit::sweep_family family = family_arg == "random" ? ocpkit::sweep_family::random
                                                       : ocpkit::sweep_family::levels;
  std::vector<ocpkit::sweep_row> rows =
      ocpkit::run_sweep(family, max_size, count, jobs, cap);

  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  if (format == "csv") out << ocpkit::report_csv_header() << '\n';
  for (const ocpkit::sweep_row& row : rows) {
    if (format == "csv")
      out << ocpkit::report_to_csv_row(row.poset_id, row.report, row.consistent())
          << '\n';
    else
      out << ocpkit::report_to_json(row.poset_id, row.report, row.consistent())
          << '\n';
  }

  bool all_consistent = true;
  for (const ocpkit::sweep_row& row : rows) {
    for (const std::string& msg : row.violations) {
      std::cerr << "inconsistent poset " << row.poset_id << ": " << msg << '\n';
      all_consistent = false;
    }
  }
  std::cerr << rows.size() << " posets checked, "
            << (all_consistent ? "all consistent" : "violations found") << '\n';
  return all_consistent ? exit_ok : exit_disagreement;
}

int run_formula(const std::string& levels_arg) {
  std::vector<int> sizes = parse_level_list(levels_arg);
  std::cout << ocpkit::excess_formula(sizes) << '\n';
  return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"order-polytope / chain-polytope face comparison toolkit"};
  app.require_subcommand(1);

  std::size_t enum_cap = ocpkit::default_enumeration_cap;
  if (const char* env = std::getenv("OCPKIT_MAX_ENUM")) {
    std::string text = env;
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || value == 0) {
      std::cerr << "error: OCPKIT_MAX_ENUM must be a positive integer\n";
      return exit_usage;
    }
    enum_cap = static_cast<std::size_t>(value);
  }

  std::string levels_arg, random_out, poset_path, out_path;
  std::vector<std::string> random_args;
  std::string format = "json";
  std::size_t pair_cap = ocpkit::default_pair_cap;
  std::size_t triple_cap = ocpkit::default_triple_cap;
  std::string family = "levels";
  int max_size = 6, count = 100, jobs = 0;

  CLI::App* gen = app.add_subcommand("gen", "generate a poset file");
  CLI::Option* gen_levels =
      gen->add_option("--levels", levels_arg, "level sizes c0,c1,... of an ordinal sum");
  CLI::Option* gen_random =
      gen->add_option("--random", random_args, "random poset arguments: d p seed")
          ->expected(3);
  gen_levels->excludes(gen_random);
  gen_random->excludes(gen_levels);
  gen->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* analyze = app.add_subcommand("analyze", "full face comparison of one poset");
  analyze->add_option("file", poset_path, "poset file")->required();
  analyze->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  analyze->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* verify = app.add_subcommand(
      "verify", "check combinatorial face enumeration against the geometric oracle");
  verify->add_option("file", poset_path, "poset file")->required();
  verify->add_option("--pair-cap", pair_cap, "vertex-pair scan budget");
  verify->add_option("--triple-cap", triple_cap, "vertex-triple scan budget");

  CLI::App* sweep = app.add_subcommand("sweep", "check a whole poset family");
  sweep->add_option("--max-size", max_size, "element count bound");
  sweep->add_option("--family", family, "poset family")
      ->check(CLI::IsMember({"levels", "random"}));
  sweep->add_option("--count", count, "number of random posets");
  sweep->add_option("--jobs", jobs, "worker threads (0 = hardware)");
  sweep->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  sweep->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* formula = app.add_subcommand("formula", "evaluate the triangle-excess sum");
  formula->add_option("--levels", levels_arg, "level sizes c0,c1,...")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (gen->parsed()) {
      if (levels_arg.empty() && random_args.empty())
        throw std::invalid_argument("gen needs --levels or --random");
      return run_gen(levels_arg, random_args, out_path);
    }
    if (analyze->parsed()) {
      if (format == "json" && analyze->count("--format") == 0) format = "json";
      return run_analyze(poset_path, format, out_path, enum_cap);
    }
    if (verify->parsed()) return run_verify(poset_path, enum_cap, pair_cap, triple_cap);
    if (sweep->parsed()) {
      if (sweep->count("--format") == 0) format = "csv";
      return run_sweep_cmd(family, max_size, count, jobs, format, out_path, enum_cap);
    }
    if (formula->parsed()) return run_formula(levels_arg);
  } catch (const ocpkit::enumeration_limit_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
