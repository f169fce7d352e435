// Command-line front end: analyze, verify, table1, dot.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "bipgen/report.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kInconsistent = 1,
  kParse = 2,
  kCap = 3,
  kMismatch = 4,
  kRefused = 5,
};

struct PrimeRange {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

PrimeRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  const auto number = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw bipgen::ParseError("bad prime range '" + text + "'");
    return v;
  };
  if (dots == std::string::npos) {
    const std::uint64_t p = number(text);
    return {p, p};
  }
  PrimeRange r{number(std::string_view(text).substr(0, dots)),
               number(std::string_view(text).substr(dots + 2))};
  if (r.lo > r.hi) throw bipgen::ParseError("empty prime range '" + text + "'");
  return r;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + out_path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipartite generation graph B(G) of a finite group"};
  app.require_subcommand(1);
  app.fallthrough();

  bipgen::RunOptions opts;
  opts.threads = std::max(1u, std::thread::hardware_concurrency());
  std::string out_path;
  app.add_option("--cap", opts.cap, "Largest group order accepted")->capture_default_str();
  app.add_option("--threads", opts.threads, "Worker threads for pair scans")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "Output file (default stdout)");

  std::string group;
  auto* analyze = app.add_subcommand("analyze", "Full report for one group as JSON");
  analyze->add_option("--group", group, "Group spec, e.g. S:3, D:8, Q:16, X(Z:2,Z:2)")
      ->required();
  analyze->add_flag("--with-gen-graph", opts.with_gen_graph,
                    "Include generating-graph edge counts");

  std::string family_name, primes;
  auto* verify = app.add_subcommand("verify", "Check a family's closed form over a prime range");
  verify->add_option("--family", family_name,
                     "D2p, D2p2, Q4p, Q4p2, Zp, Z2p, Zp2, Z2p2 or noncyclic_p2")
      ->required();
  verify->add_option("--primes", primes, "Prime range lo..hi")->required();

  auto* table1 = app.add_subcommand("table1", "Probability table for seven small groups as CSV");

  std::string mode_name = "full";
  auto* dot = app.add_subcommand("dot", "Graphviz export of B(G)");
  dot->add_option("--group", group, "Group spec")->required();
  dot->add_option("--mode", mode_name, "full or collapsed")
      ->check(CLI::IsMember({"full", "collapsed"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      const bipgen::Analysis a = bipgen::analyze(group, opts);
      emit(out_path, bipgen::to_json(a).dump(2) + "\n");
      return kOk;
    }
    if (*verify) {
      const bipgen::Family family = bipgen::parse_family(family_name);
      const PrimeRange range = parse_range(primes);
      std::vector<std::uint64_t> skipped;
      const auto certs = bipgen::verify_family(family, range.lo, range.hi, opts, &skipped);
      std::string lines;
      bool all_pass = true;
      for (const auto& c : certs) {
        lines += bipgen::to_json(c).dump() + "\n";
        all_pass = all_pass && c.pass;
      }
      for (std::uint64_t p : skipped)
        std::cerr << "skipped p=" << p << ": closed form not defined for " << family_name << "\n";
      emit(out_path, lines);
      return all_pass ? kOk : kMismatch;
    }
    if (*table1) {
      const std::string csv = bipgen::table1_csv(bipgen::compute_table1(opts));
      emit(out_path, csv);
      if (csv != bipgen::table1_expected_csv()) {
        std::cerr << "table1: computed values differ from the reference table\n";
        return kMismatch;
      }
      return kOk;
    }
    if (*dot) {
      const bipgen::DotMode mode =
          mode_name == "collapsed" ? bipgen::DotMode::kCollapsed : bipgen::DotMode::kFull;
      if (mode == bipgen::DotMode::kFull) {
        const std::uint64_t n = bipgen::spec_order(group);
        if (n <= opts.cap && n * n > bipgen::kDotFullPairLimit) {
          throw bipgen::SizeRefusalError("full DOT export needs |G|^2 <= 10000, got " +
                                         std::to_string(n * n));
        }
      }
      emit(out_path, bipgen::to_dot(bipgen::analyze(group, opts), mode));
      return kOk;
    }
  } catch (const bipgen::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const bipgen::UnsupportedFamilyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const bipgen::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const bipgen::SizeRefusalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRefused;
  } catch (const std::exception& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kInconsistent;
  }
  return kOk;
}
