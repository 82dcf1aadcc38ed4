// Command-line front end for layer-rainbow latin cube construction.
//
// Exit codes: 0 success, 1 malformed input, 2 infeasible order (n < 2m).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lrlc/embed.hpp"
#include "lrlc/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitInvalidCube = 3;

lrlc::LayerRainbowCube read_cube(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lrlc::MalformedInput("cannot open " + path);
  return lrlc::parse(in);
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw lrlc::MalformedInput("cannot open " + path + " for writing");
  out << data;
}

void print_verify_report(const lrlc::VerifyReport& report, std::ostream& os) {
  if (report.valid) {
    os << "valid\n";
    return;
  }
  os << "invalid: " << report.violations.size() << " violation(s)\n";
  const char* axis_names[] = {"x", "y", "z"};
  for (const auto& v : report.violations)
    os << "  layer " << axis_names[v.axis] << "=" << v.layer << ": symbol " << v.symbol + 1
       << " occurs " << v.count << " times\n";
}

struct RangeSpec {
  int lo = 0, hi = 0;
};

RangeSpec parse_range(const std::string& s) {
  auto colon = s.find(':');
  RangeSpec r;
  if (colon == std::string::npos) {
    r.lo = r.hi = std::stoi(s);
  } else {
    r.lo = std::stoi(s.substr(0, colon));
    r.hi = std::stoi(s.substr(colon + 1));
  }
  if (r.lo < 1 || r.hi < r.lo) throw CLI::ValidationError("bad range '" + s + "'");
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"layer-rainbow latin cube construction and verification"};
  app.require_subcommand(1);

  // generate
  int gen_n = 0;
  std::string gen_out = "-";
  auto* generate = app.add_subcommand("generate", "write a layer-rainbow cube of order n");
  generate->add_option("n", gen_n, "cube order")->required()->check(CLI::PositiveNumber);
  generate->add_option("-o,--output", gen_out, "output file (default stdout)");

  // embed
  std::string emb_in, emb_out = "-";
  int emb_n = 0;
  std::uint64_t emb_seed = 0;
  auto* embed_cmd = app.add_subcommand("embed", "embed a cube into a larger order");
  embed_cmd->add_option("input", emb_in, "input cube file")->required();
  embed_cmd->add_option("n", emb_n, "target order")->required()->check(CLI::PositiveNumber);
  embed_cmd->add_option("--seed", emb_seed, "tie-breaking seed (default 0)");
  embed_cmd->add_option("-o,--output", emb_out, "output file (default stdout)");

  // verify
  std::string ver_in;
  auto* verify_cmd = app.add_subcommand("verify", "check the layer-rainbow property");
  verify_cmd->add_option("input", ver_in, "input cube file")->required();

  // oracle
  std::string ora_in;
  int ora_n = 0;
  long long ora_nodes = 1'000'000'000;
  long long ora_ms = 60'000;
  bool ora_count = false, ora_symmetry = false;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "exhaustive search for an extension (tiny orders)");
  oracle_cmd->add_option("input", ora_in, "input cube file")->required();
  oracle_cmd->add_option("n", ora_n, "target order")->required()->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--max-nodes", ora_nodes, "node budget");
  oracle_cmd->add_option("--time-budget-ms", ora_ms, "time budget in milliseconds");
  oracle_cmd->add_flag("--count", ora_count, "count all extensions instead of finding one");
  oracle_cmd->add_flag("--symmetry", ora_symmetry, "reduce by relabeling of fresh symbols");

  // bench
  std::string bench_m = "2:4", bench_n, bench_seeds = "0";
  auto* bench = app.add_subcommand("bench", "time pipeline stages over an (m, n, seed) grid");
  bench->add_option("--m-range", bench_m, "m range lo:hi (default 2:4)");
  bench->add_option("--n-range", bench_n, "n range lo:hi (default 2m:2m+2 per m)");
  bench->add_option("--seeds", bench_seeds, "comma-separated seeds (default 0)");

  // dump-table
  int dt_m = 0, dt_n = 0;
  std::string dt_out = "-";
  auto* dump = app.add_subcommand("dump-table", "write the per-color multiplicity table as CSV");
  dump->add_option("m", dt_m, "corner order")->required()->check(CLI::PositiveNumber);
  dump->add_option("n", dt_n, "target order")->required()->check(CLI::PositiveNumber);
  dump->add_option("-o,--output", dt_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) {
      write_output(gen_out, lrlc::serialize(lrlc::base_cube(gen_n)));
      return kExitOk;
    }
    if (*embed_cmd) {
      auto small = read_cube(emb_in);
      auto [cube, report] = lrlc::embed(small, emb_n, emb_seed);
      write_output(emb_out, lrlc::serialize(cube));
      return kExitOk;
    }
    if (*verify_cmd) {
      auto report = lrlc::verify(read_cube(ver_in));
      print_verify_report(report, std::cout);
      return report.valid ? kExitOk : kExitInvalidCube;
    }
    if (*oracle_cmd) {
      auto small = read_cube(ora_in);
      lrlc::SearchLimits limits{ora_nodes, std::chrono::milliseconds(ora_ms)};
      if (ora_count) {
        auto r = lrlc::count_extensions(small, ora_n, limits, ora_symmetry);
        if (r.exhausted) {
          std::cout << "budget-exhausted after " << r.nodes << " nodes\n";
        } else {
          std::cout << "count " << r.count << " (" << r.nodes << " nodes)\n";
        }
      } else {
        auto r = lrlc::brute_force_extend(small, ora_n, limits, ora_symmetry);
        switch (r.outcome) {
          case lrlc::SearchOutcome::Found:
            std::cout << "found (" << r.nodes << " nodes)\n" << lrlc::serialize(*r.cube);
            break;
          case lrlc::SearchOutcome::ProvedImpossible:
            std::cout << "proved-impossible (" << r.nodes << " nodes)\n";
            break;
          case lrlc::SearchOutcome::BudgetExhausted:
            std::cout << "budget-exhausted after " << r.nodes << " nodes\n";
            break;
        }
      }
      return kExitOk;
    }
    if (*bench) {
      auto mr = parse_range(bench_m);
      std::vector<std::uint64_t> seeds;
      std::istringstream ss(bench_seeds);
      for (std::string tok; std::getline(ss, tok, ',');) seeds.push_back(std::stoull(tok));
      std::cout << "m,n,seed,stage,micros\n";
      for (int m = mr.lo; m <= mr.hi; ++m) {
        RangeSpec nr = bench_n.empty() ? RangeSpec{2 * m, 2 * m + 2} : parse_range(bench_n);
        for (int n = std::max(nr.lo, 2 * m); n <= nr.hi; ++n) {
          for (auto seed : seeds) {
            auto [cube, report] = lrlc::embed(lrlc::base_cube(m), n, seed);
            for (const auto& [stage, us] : report.timings)
              std::cout << m << ',' << n << ',' << seed << ',' << stage << ',' << us.count()
                        << '\n';
          }
        }
      }
      return kExitOk;
    }
    if (*dump) {
      write_output(dt_out, lrlc::table_to_csv(lrlc::build_color_table(dt_m, dt_n)));
      return kExitOk;
    }
  } catch (const lrlc::InfeasibleOrder& e) {
    std::cerr << "infeasible order: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const lrlc::MalformedInput& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMalformed;
  }
  return kExitOk;
}
