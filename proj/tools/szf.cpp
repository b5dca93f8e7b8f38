// szf: command-line front end for skew zero forcing computations.
//
// Exit codes: 0 success, 1 verification mismatch, 2 parse or argument error,
// 3 resource limit or timeout.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "szf/campaigns.hpp"
#include "szf/families.hpp"
#include "szf/forcing.hpp"
#include "szf/graph.hpp"
#include "szf/report.hpp"
#include "szf/structure.hpp"
#include "szf/throttling.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitLimit = 3;

struct ExitError {
  int code;
  std::string message;
};

struct GraphInput {
  std::string input;  // file path; empty or "-" reads stdin
  std::string format = "graph6";
  std::string family;
};

void add_graph_options(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("--input,-i", in.input, "Graph file (default: stdin)");
  cmd->add_option("--format,-f", in.format, "Input format")->check(CLI::IsMember({"graph6", "edgelist"}));
  cmd->add_option("--family", in.family, "Build from a family spec such as spider:4,3");
}

std::string read_all(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// First line that is neither blank nor a '#' comment.
std::string first_graph6_line(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    return line.substr(start);
  }
  throw szf::ParseError("no graph6 line in input");
}

szf::Graph load_graph(const GraphInput& in) {
  try {
    if (!in.family.empty()) return szf::build(szf::parse_family_spec(in.family));
    std::string text;
    if (in.input.empty() || in.input == "-") {
      text = read_all(std::cin);
    } else {
      std::ifstream file(in.input);
      if (!file) throw ExitError{kExitParse, "cannot open " + in.input};
      text = read_all(file);
    }
    if (in.format == "graph6") return szf::from_graph6(first_graph6_line(text));
    std::istringstream stream(text);
    return szf::read_edge_list(stream);
  } catch (const szf::ParseError& e) {
    throw ExitError{kExitParse, e.what()};
  } catch (const std::invalid_argument& e) {
    throw ExitError{kExitParse, e.what()};
  }
}

int max_order(int flag_value, bool flag_given) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("SZF_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw ExitError{kExitParse, std::string("SZF_MAX_N is not an integer: ") + env};
    }
  }
  return flag_value;
}

template <typename T>
std::pair<T, T> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const T v = static_cast<T>(std::stoll(text));
      return {v, v};
    }
    return {static_cast<T>(std::stoll(text.substr(0, dots))), static_cast<T>(std::stoll(text.substr(dots + 2)))};
  } catch (const std::exception&) {
    throw ExitError{kExitParse, "bad range '" + text + "', expected a..b"};
  }
}

int cmd_compute(const GraphInput& in, bool trace, int limit) {
  const szf::Graph g = load_graph(in);
  if (g.order() > limit) {
    throw ExitError{kExitLimit, "order " + std::to_string(g.order()) + " exceeds --max-n " + std::to_string(limit)};
  }
  szf::ThrottleResult result;
  try {
    result = szf::throttle(g);
  } catch (const std::length_error& e) {
    throw ExitError{kExitLimit, e.what()};
  }
  nlohmann::json out = szf::to_json(result);
  if (trace) out["trace"] = szf::trace_json(szf::propagate(g, result.witness), g.order());
  std::cout << out.dump() << '\n';
  return 0;
}

int cmd_classify(const GraphInput& in, bool check, int limit) {
  const szf::Graph g = load_graph(in);
  const auto c = szf::classify_extremes(g);
  nlohmann::json out = szf::to_json(c);
  int code = 0;
  if (check) {
    if (g.order() > limit) throw ExitError{kExitLimit, "order exceeds --max-n; --check skipped"};
    const int th = szf::throttle(g).th;
    const bool interior = th != 1 && th != 2 && th != g.order() - 1 && th != g.order();
    const bool agrees = c.predicted ? *c.predicted == th : interior;
    out["computed"] = th;
    out["agrees"] = agrees;
    if (!agrees) code = kExitMismatch;
  }
  std::cout << out.dump() << '\n';
  return code;
}

int cmd_verify(const szf::CampaignRequest& request) {
  std::vector<szf::VerificationRow> rows;
  try {
    rows = szf::run_campaign(request);
  } catch (const szf::CampaignTimeout& e) {
    throw ExitError{kExitLimit, e.what()};
  }
  szf::write_csv(std::cout, rows);
  std::size_t mismatches = 0;
  double total_ms = 0;
  for (const auto& r : rows) {
    if (!r.match) ++mismatches;
    total_ms += r.runtime_ms;
  }
  std::cerr << request.campaign << ": " << rows.size() << " rows, " << mismatches << " mismatches, "
            << static_cast<long long>(total_ms) << " ms\n";
  return mismatches == 0 ? 0 : kExitMismatch;
}

int cmd_family(const std::string& text, const std::string& emit) {
  szf::FamilySpec spec;
  szf::Graph g;
  try {
    spec = szf::parse_family_spec(text);
    g = szf::build(spec);
  } catch (const std::invalid_argument& e) {
    throw ExitError{kExitParse, e.what()};
  }
  std::cout << "# " << szf::to_string(spec) << '\n' << "# " << szf::labeling_note(spec) << '\n';
  if (emit == "graph6") {
    std::cout << szf::to_graph6(g) << '\n';
  } else {
    szf::write_edge_list(std::cout, g);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skew zero forcing: simulation, throttling and verification"};
  app.require_subcommand(1);

  GraphInput compute_in;
  bool trace = false;
  int compute_max = 26;
  auto* compute = app.add_subcommand("compute", "Exact throttling number with witness and per-k table");
  add_graph_options(compute, compute_in);
  compute->add_flag("--trace", trace, "Include the propagation trace of the witness");
  auto* compute_max_opt = compute->add_option("--max-n", compute_max, "Refuse graphs with more vertices (env SZF_MAX_N)");

  GraphInput classify_in;
  bool check = false;
  int classify_max = 26;
  auto* classify = app.add_subcommand("classify", "Extreme-value classification with evidence");
  add_graph_options(classify, classify_in);
  classify->add_flag("--check", check, "Also run the exact solver and report agreement");
  auto* classify_max_opt = classify->add_option("--max-n", classify_max, "Size guard for --check (env SZF_MAX_N)");

  szf::CampaignRequest request;
  std::string n_range, seeds;
  int n_max = 0;
  auto* verify = app.add_subcommand("verify", "Run a verification campaign and print CSV rows");
  verify->add_option("--campaign", request.campaign)->required()->check(CLI::IsMember(szf::campaign_names()));
  verify->add_option("--n", n_range, "Range a..b");
  auto* n_max_opt = verify->add_option("--n-max", n_max);
  verify->add_option("--seeds", seeds, "Range a..b");
  verify->add_option("--jobs", request.jobs)->check(CLI::PositiveNumber);
  verify->add_option("--timeout-s", request.timeout_s)->check(CLI::PositiveNumber);

  std::string family_text, emit = "edgelist";
  auto* family = app.add_subcommand("family", "Print a family member");
  family->add_option("spec", family_text)->required();
  family->add_option("--emit", emit)->check(CLI::IsMember({"graph6", "edgelist"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*compute) return cmd_compute(compute_in, trace, max_order(compute_max, compute_max_opt->count() > 0));
    if (*classify) return cmd_classify(classify_in, check, max_order(classify_max, classify_max_opt->count() > 0));
    if (*verify) {
      if (!n_range.empty()) request.n_range = parse_range<int>(n_range);
      if (n_max_opt->count() > 0) request.n_max = n_max;
      if (!seeds.empty()) request.seeds = parse_range<std::uint64_t>(seeds);
      return cmd_verify(request);
    }
    return cmd_family(family_text, emit);
  } catch (const ExitError& e) {
    std::cerr << "szf: " << e.message << '\n';
    return e.code;
  } catch (const szf::SearchTimeout& e) {
    std::cerr << "szf: " << e.what() << '\n';
    return kExitLimit;
  }
}
