#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "matchkit/bicycle.hpp"
#include "matchkit/corpus.hpp"
#include "matchkit/families.hpp"
#include "matchkit/matching.hpp"
#include "matchkit/polytope.hpp"
#include "matchkit/recognizer.hpp"
#include "matchkit/retract.hpp"
#include "matchkit/serialize.hpp"
#include "matchkit/thin_edges.hpp"
#include "matchkit/tight_cut.hpp"

namespace matchkit::cli {

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

MultiGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::ParseError, "cannot open '" + path + "'");
  return parse_mcg(in);
}

int exit_for(const Error& e) {
  return e.code() == ErrorCode::BudgetExhausted ? kExitBudget : kExitInputError;
}

CommandResult error_result(const std::string& command, const Error& e) {
  CommandResult r;
  r.report = {{"command", command}, {"error", e.what()}};
  r.exit_code = exit_for(e);
  return r;
}

json oracle_verdicts_json(const OracleClassification& o) {
  return {{"bvn", o.bvn}, {"pmc", o.pmc}, {"both_properties", o.bvn && o.pmc}};
}

}  // namespace

CommandResult cmd_decide(const std::string& graph_path, const std::string& mode,
                         bool no_witness, std::size_t budget) {
  auto start = Clock::now();
  CommandResult r;
  r.report["command"] = "decide";
  r.report["mode"] = mode;
  r.report["budget"] = budget;
  try {
    MultiGraph g = load_graph(graph_path);
    r.report["input_digest"] = graph_digest(g);
    require(is_matching_covered(g), ErrorCode::NotMatchingCovered,
            "input graph is not matching covered");

    bool verdict = false;
    if (mode == "structural" || mode == "both") {
      Decision d = decide_structural(g, !no_witness, budget);
      verdict = d.both_properties;
      r.report["verdicts"]["structural"] = d.both_properties;
      if (d.positive_certificate)
        r.report["certificates"]["family"] =
            family_tag_to_json(*d.positive_certificate);
      if (d.negative_certificate)
        r.report["certificates"]["bicycle"] =
            bicycle_to_json(*d.negative_certificate);
      r.report["witness_omitted"] = d.witness_omitted;
    }
    if (mode == "oracle" || mode == "both") {
      OracleClassification o = classify_oracle(g, budget);
      verdict = o.bvn && o.pmc;
      r.report["verdicts"]["oracle"] = oracle_verdicts_json(o);
      if (o.odd_witness)
        r.report["certificates"]["odd_bicycle"] = bicycle_to_json(*o.odd_witness);
      if (o.even_witness)
        r.report["certificates"]["even_bicycle"] =
            bicycle_to_json(*o.even_witness);
    }
    if (mode == "both") {
      bool structural = r.report["verdicts"]["structural"].get<bool>();
      bool oracle = r.report["verdicts"]["oracle"]["both_properties"].get<bool>();
      if (structural != oracle) {
        r.report["disagreement"] = true;
        r.report["timing_ms"] = elapsed_ms(start);
        r.exit_code = kExitDisagreement;
        return r;
      }
    }
    r.report["verdicts"]["both_properties"] = verdict;
    r.report["timing_ms"] = elapsed_ms(start);
    r.exit_code = verdict ? kExitBoth : kExitNotBoth;
    return r;
  } catch (const Error& e) {
    return error_result("decide", e);
  }
}

CommandResult cmd_generate(const GenerateSpec& spec, const std::string& out_path) {
  try {
    MultiGraph g;
    std::string comment;
    if (spec.family == "k2_multi") {
      require(spec.multiplicity >= 1, ErrorCode::BadParams, "multiplicity >= 1");
      std::vector<std::pair<int, int>> pairs(spec.multiplicity, {0, 1});
      g = build_graph(2, pairs);
      comment = "K2 with multiplicity " + std::to_string(spec.multiplicity);
    } else if (spec.family == "k33") {
      g = complete_bipartite(3, 3);
      comment = "K3,3; colour classes {1,2,3} and {4,5,6}";
    } else if (spec.family == "k4_multi") {
      std::vector<int> mults =
          spec.k4_mults.empty() ? std::vector<int>(6, 1) : spec.k4_mults;
      require(mults.size() == 6, ErrorCode::BadParams,
              "k4_multi needs 6 multiplicities (edge order 12,13,14,23,24,34)");
      std::vector<std::pair<int, int>> pairs;
      int slot = 0;
      for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) {
          require(mults[slot] >= 1, ErrorCode::BadParams, "multiplicities >= 1");
          for (int c = 0; c < mults[slot]; ++c) pairs.emplace_back(u, v);
          ++slot;
        }
      g = build_graph(4, pairs);
      comment = "K4 with per-pair multiplicities";
    } else if (spec.family == "odd_wheel") {
      g = odd_wheel(spec.k, spec.spoke_mults);
      comment = "odd wheel W" + std::to_string(2 * spec.k + 1) +
                "; rim 1.." + std::to_string(2 * spec.k + 1) + " in cyclic order, hub " +
                std::to_string(2 * spec.k + 2);
    } else if (spec.family == "prism" || spec.family == "moebius_ladder" ||
               spec.family == "truncated_biwheel" || spec.family == "staircase" ||
               spec.family == "petersen") {
      NorineThomasTag tag = NorineThomasTag::Petersen;
      if (spec.family == "prism") tag = NorineThomasTag::Prism;
      if (spec.family == "moebius_ladder") tag = NorineThomasTag::MoebiusLadder;
      if (spec.family == "truncated_biwheel") tag = NorineThomasTag::TruncatedBiwheel;
      if (spec.family == "staircase") tag = NorineThomasTag::Staircase;
      int order = spec.family == "petersen" && spec.order == 0 ? 10 : spec.order;
      g = norine_thomas(tag, order);
      comment = spec.family + " of order " + std::to_string(order);
    } else if (spec.family == "k4_splice_k33") {
      g = k4_splice_k33();
      comment = "splicing of K4 and K3,3; a1=1 a2=2 b1=3 b2=4 b3=5 t1=6 t2=7 t3=8";
    } else if (spec.family == "murty") {
      g = murty_graph(spec.extra);
      comment = "Murty graph; a1=1 a2=2 b1=3 b2=4 b3=5 t1=6 t2=7 t3=8, extra " +
                std::to_string(spec.extra) + " parallel a1a2 edges";
    } else if (spec.family == "p_brick") {
      g = p_brick(spec.k);
      comment = "P" + std::to_string(2 * spec.k + 1) + " brick; rim 1.." +
                std::to_string(2 * spec.k + 1) + ", then u1, u2, v2, u0, v0";
    } else {
      fail(ErrorCode::BadParams, "unknown family '" + spec.family + "'");
    }
    std::ofstream out(out_path);
    require(out.good(), ErrorCode::BadParams, "cannot write '" + out_path + "'");
    out << format_mcg(g, comment);
    CommandResult r;
    r.report = {{"command", "generate"},
                {"family", spec.family},
                {"out", out_path},
                {"order", g.n()},
                {"size", g.m()},
                {"input_digest", graph_digest(g)}};
    r.exit_code = kExitBoth;
    return r;
  } catch (const Error& e) {
    return error_result("generate", e);
  }
}

CommandResult cmd_decompose(const std::string& graph_path) {
  auto start = Clock::now();
  try {
    MultiGraph g = load_graph(graph_path);
    auto [tree, b] = tight_cut_decomposition(g);
    CommandResult r;
    r.report = {{"command", "decompose"},
                {"input_digest", graph_digest(g)},
                {"b", b.value},
                {"tree", decomposition_to_json(*tree.root)},
                {"timing_ms", elapsed_ms(start)}};
    r.exit_code = kExitBoth;
    return r;
  } catch (const Error& e) {
    return error_result("decompose", e);
  }
}

CommandResult cmd_reduce(const std::string& graph_path) {
  auto start = Clock::now();
  try {
    MultiGraph g = load_graph(graph_path);
    ReductionTrace t = reduce_to_norine_thomas(g);
    CommandResult r;
    r.report = {{"command", "reduce"},
                {"input_digest", graph_digest(g)},
                {"trace", reduction_trace_to_json(t)},
                {"timing_ms", elapsed_ms(start)}};
    r.exit_code = kExitBoth;
    return r;
  } catch (const Error& e) {
    return error_result("reduce", e);
  }
}

CommandResult cmd_skeleton(const std::string& graph_path, std::size_t budget) {
  auto start = Clock::now();
  try {
    MultiGraph g = load_graph(graph_path);
    SkeletonGraph sk = build_skeleton(g, budget);
    CommandResult r;
    r.report = {{"command", "skeleton"},
                {"input_digest", graph_digest(g)},
                {"matchings", sk.nodes.size()},
                {"skeleton", skeleton_to_json(sk)},
                {"pm_compact", sk.diameter.has_value() && *sk.diameter <= 1},
                {"timing_ms", elapsed_ms(start)}};
    r.exit_code = kExitBoth;
    return r;
  } catch (const Error& e) {
    return error_result("skeleton", e);
  }
}

namespace {

std::vector<MultiGraph> perturbation_bases() {
  return {build_graph(2, {{0, 1}, {0, 1}, {0, 1}}),
          complete_graph(4),
          odd_wheel(2),
          odd_wheel(3),
          complete_bipartite(3, 3),
          k4_splice_k33(),
          murty_graph(0),
          cycle_graph(6),
          cube_graph(),
          norine_thomas(NorineThomasTag::Prism, 6),
          p_brick(2)};
}

}  // namespace

CommandResult cmd_crossval(int max_order, std::uint64_t seed, std::size_t budget,
                           int perturbations, std::istream* graph_stream) {
  auto start = Clock::now();
  CommandResult r;
  r.report["command"] = "crossval";
  r.report["max_order"] = max_order;
  r.report["seed"] = seed;
  try {
    require(max_order >= 2 && max_order <= 12, ErrorCode::BadParams,
            "max_order must be between 2 and 12");
    long disagreements = 0;
    auto check_one = [&](const MultiGraph& g) -> bool {
      Decision d = decide_structural(g, false, budget);
      OracleClassification o = classify_oracle(g, budget);
      if (d.both_properties == (o.bvn && o.pmc)) return true;
      ++disagreements;
      r.report["offending_graph"] = format_mcg(g);
      return false;
    };

    if (graph_stream) {
      long total = 0, covered = 0;
      while (graph_stream->good()) {
        // Skip blank space between concatenated mcg blocks.
        int c = graph_stream->peek();
        if (c == EOF) break;
        if (c == '\n' || c == ' ') {
          graph_stream->get();
          continue;
        }
        MultiGraph g = parse_mcg(*graph_stream);
        ++total;
        if (!is_matching_covered(g)) continue;
        ++covered;
        if (!check_one(g)) break;
      }
      r.report["streamed"] = {{"total", total}, {"matching_covered", covered}};
    } else {
      json orders = json::object();
      for (int n = 2; n <= max_order && disagreements == 0; n += 2) {
        long total = 0, covered = 0;
        for (const MultiGraph& g : all_connected_graphs(n)) {
          ++total;
          if (!is_matching_covered(g)) continue;
          ++covered;
          if (!check_one(g)) break;
        }
        orders[std::to_string(n)] = {{"connected", total},
                                     {"matching_covered", covered}};
      }
      r.report["orders"] = orders;
    }

    if (disagreements == 0 && perturbations > 0) {
      std::mt19937_64 rng(seed);
      std::vector<MultiGraph> bases = perturbation_bases();
      for (int t = 0; t < perturbations; ++t) {
        const MultiGraph& base = bases[rng() % bases.size()];
        MultiGraph g = base;
        int extra = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < extra; ++i) {
          const Edge& e = g.edge(static_cast<int>(rng() % g.m()));
          g = add_edge(g, e.u, e.v);
        }
        if (!check_one(g)) break;
      }
      r.report["perturbations"] = perturbations;
    }

    r.report["disagreements"] = disagreements;
    r.report["timing_ms"] = elapsed_ms(start);
    r.exit_code = disagreements == 0 ? kExitBoth : kExitDisagreement;
    return r;
  } catch (const Error& e) {
    return error_result("crossval", e);
  }
}

CommandResult cmd_validate(const std::string& graph_path,
                           const std::string& report_path) {
  try {
    MultiGraph g = load_graph(graph_path);
    std::ifstream in(report_path);
    require(in.good(), ErrorCode::ParseError, "cannot open '" + report_path + "'");
    json report = json::parse(in, nullptr, false);
    require(!report.is_discarded(), ErrorCode::ParseError,
            "report is not valid JSON");

    int checked = 0;
    bool ok = true;
    if (report.contains("certificates")) {
      const json& certs = report["certificates"];
      for (const char* key : {"bicycle", "odd_bicycle", "even_bicycle"}) {
        if (!certs.contains(key)) continue;
        ++checked;
        ConformalBicycle b = bicycle_from_json(certs[key]);
        if (!validate_bicycle(g, b)) ok = false;
      }
      if (certs.contains("family")) {
        ++checked;
        const json& fam = certs["family"];
        MultiGraph canonical = parse_mcg_string(fam["canonical"].get<std::string>());
        IsoWitness w{fam["witness"].get<std::vector<int>>()};
        RetractResult retract = retract_of(g);
        if (!verify_iso_witness(retract.graph, canonical, w)) ok = false;
      }
    }
    CommandResult r;
    r.report = {{"command", "validate"},
                {"input_digest", graph_digest(g)},
                {"certificates_checked", checked},
                {"valid", ok}};
    r.exit_code = ok ? kExitBoth : kExitNotBoth;
    return r;
  } catch (const Error& e) {
    return error_result("validate", e);
  }
}

}  // namespace matchkit::cli
