#include "tvk/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "tvk/bs.hpp"
#include "tvk/cosets.hpp"
#include "tvk/errors.hpp"
#include "tvk/group_spec.hpp"
#include "tvk/hyperspace.hpp"
#include "tvk/matrix.hpp"
#include "tvk/report.hpp"
#include "tvk/tower.hpp"
#include "tvk/transversal.hpp"

namespace tvk {

namespace {

using nlohmann::ordered_json;

constexpr const char* kUsage = R"(transversal-kit: coset transversals, the index condition, and its failures

Usage: tvk <command> [flags]

Commands:
  finite check         Coset/double-coset survey and index condition report
  finite transversal   Construct and verify a common left/right transversal
  bs indices           Conjugate-intersection indices of Z inside BS(1,2)
  bs report            Index-condition verdict for one element of BS(1,2)
  solenoid             Same indices on the 2-solenoid fiber lattice
  tower run            Level-by-level index sequence along a finite tower
  matrix polar         Polar decomposition certificate for a random matrix
  matrix qr            QR (positive diagonal) certificate for a random matrix
  hyperspace demo      Finite hyperspace runs (--example fn-counterexample)

Flags:
  --spec <path>    JSON input (finite *, tower run)
  --json           Emit the machine-readable JSON report
  --tol <real>     Numerical tolerance (default 1e-10)
  --cap <int>      Group closure cap (default 100000)
  --seed <int>     Seed for deterministic matrix generation
  --n <int>        Dimension / twist exponent / demo depth, per command
  --q <rational>   Dyadic rational, e.g. 5, -3/8 (bs commands)
  --max-level <k>  Truncate a tower to its first k levels

Exit codes: 0 success, 1 verification-negative, 2 input error.
)";

struct Flags {
  std::map<std::string, std::string> values;
  bool json = false;

  bool has(const std::string& name) const { return values.count(name) > 0; }

  std::string require(const std::string& name) const {
    auto it = values.find(name);
    if (it == values.end()) throw InputError("missing required flag --" + name);
    return it->second;
  }

  long long get_int(const std::string& name, long long fallback) const {
    auto it = values.find(name);
    if (it == values.end()) return fallback;
    try {
      std::size_t used = 0;
      const long long v = std::stoll(it->second, &used);
      if (used != it->second.size()) throw InputError("");
      return v;
    } catch (...) {
      throw InputError("flag --" + name + " expects an integer");
    }
  }

  long long require_int(const std::string& name) const {
    require(name);
    return get_int(name, 0);
  }

  double get_double(const std::string& name, double fallback) const {
    auto it = values.find(name);
    if (it == values.end()) return fallback;
    try {
      std::size_t used = 0;
      const double v = std::stod(it->second, &used);
      if (used != it->second.size()) throw InputError("");
      return v;
    } catch (...) {
      throw InputError("flag --" + name + " expects a number");
    }
  }
};

Flags parse_flags(const std::vector<std::string>& args, std::size_t start) {
  Flags flags;
  for (std::size_t i = start; i < args.size(); ++i) {
    const std::string& token = args[i];
    if (token.rfind("--", 0) != 0)
      throw InputError("unexpected argument '" + token + "'");
    const std::string name = token.substr(2);
    if (name == "json") {
      flags.json = true;
      continue;
    }
    if (i + 1 >= args.size()) throw InputError("flag --" + name + " needs a value");
    flags.values[name] = args[++i];
  }
  return flags;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Canonical digest payload for flag-only commands.
std::string flags_payload(const std::string& command, const Flags& flags) {
  std::string payload = command;
  for (const auto& [name, value] : flags.values)
    payload += "|" + name + "=" + value;
  return payload;
}

ordered_json perm_json(const Perm& p) {
  ordered_json arr = ordered_json::array();
  for (int v : p.one_based_images()) arr.push_back(v);
  return arr;
}

void print_human(std::ostream& out, const ordered_json& node,
                 const std::string& prefix) {
  for (const auto& [key, value] : node.items()) {
    if (value.is_object()) {
      out << prefix << key << ":\n";
      print_human(out, value, prefix + "  ");
    } else if (value.is_array() && !value.empty() && value[0].is_object()) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        out << prefix << key << "[" << i << "]:\n";
        print_human(out, value[i], prefix + "  ");
      }
    } else {
      out << prefix << key << ": " << value.dump() << "\n";
    }
  }
}

struct CommandOutput {
  ordered_json results;
  std::vector<InvariantCheck> checks;
  bool verified = true;  // false -> exit 1
};

int emit(std::ostream& out, const std::string& command,
         const std::string& digest_payload, CommandOutput output, bool json) {
  const ordered_json report = make_report(
      command, digest_string(digest_payload), std::move(output.results),
      output.checks);
  if (json) {
    out << report.dump(2) << "\n";
  } else {
    out << "transversal-kit " << kToolVersion << " — " << command << "\n";
    out << "inputsDigest: " << report["inputsDigest"].get<std::string>() << "\n";
    print_human(out, report["results"], "");
    if (!output.checks.empty()) {
      out << "checks:\n";
      for (const InvariantCheck& check : output.checks)
        out << "  [" << (check.pass ? "PASS" : "FAIL") << "] " << check.name
            << " — " << check.detail << "\n";
    }
    out << "verdict: " << (output.verified ? "ok" : "verification-negative")
        << "\n";
  }
  return output.verified ? 0 : 1;
}

// --- finite ------------------------------------------------------------------

bool blocks_partition(const FiniteGroup& g,
                      const std::vector<std::vector<std::size_t>>& blocks) {
  std::vector<std::size_t> covered;
  for (const auto& block : blocks)
    covered.insert(covered.end(), block.begin(), block.end());
  std::sort(covered.begin(), covered.end());
  if (covered.size() != g.order()) return false;
  for (std::size_t i = 0; i < covered.size(); ++i)
    if (covered[i] != i) return false;
  return true;
}

CommandOutput run_finite_check(const FiniteGroup& g, const SubgroupHandle& h) {
  CommandOutput output;
  const CosetList left = left_cosets(g, h);
  const CosetList right = right_cosets(g, h);
  const DoubleCosetDecomposition decomposition = double_cosets(g, h);
  const IndexConditionReport condition = check_index_condition(g, h);

  output.results["degree"] = g.degree();
  output.results["groupOrder"] = g.order();
  output.results["subgroupOrder"] = h.order();
  output.results["index"] = left.count();
  ordered_json table = ordered_json::array();
  bool counting_ok = true;
  std::vector<std::size_t> dc_cover;
  for (const DoubleCoset& coset : decomposition.cosets) {
    ordered_json row;
    row["representative"] = perm_json(coset.representative);
    row["size"] = coset.members.size();
    row["leftCount"] = coset.left_count;
    row["rightCount"] = coset.right_count;
    row["indexConditionHolds"] = coset.index_condition_holds;
    table.push_back(std::move(row));
    counting_ok = counting_ok &&
                  coset.members.size() == coset.left_count * h.order() &&
                  coset.members.size() == coset.right_count * h.order();
    dc_cover.insert(dc_cover.end(), coset.members.begin(), coset.members.end());
  }
  output.results["doubleCosets"] = std::move(table);
  ordered_json witnesses = ordered_json::array();
  for (const IndexConditionWitness& w : condition.witnesses) {
    ordered_json row;
    row["x"] = perm_json(w.x);
    row["leftIndex"] = w.left_index;
    row["rightIndex"] = w.right_index;
    witnesses.push_back(std::move(row));
  }
  output.results["indexCondition"] = ordered_json{
      {"holds", condition.holds}, {"witnesses", std::move(witnesses)}};

  std::sort(dc_cover.begin(), dc_cover.end());
  bool dc_partition = dc_cover.size() == g.order();
  for (std::size_t i = 0; dc_partition && i < dc_cover.size(); ++i)
    dc_partition = dc_cover[i] == i;

  output.checks.push_back({"left-cosets-partition", blocks_partition(g, left.blocks),
                           "every element in exactly one left coset"});
  output.checks.push_back({"right-cosets-partition",
                           blocks_partition(g, right.blocks),
                           "every element in exactly one right coset"});
  output.checks.push_back({"double-cosets-partition", dc_partition,
                           "double cosets cover the group disjointly"});
  output.checks.push_back({"counting-identity", counting_ok,
                           "|HaH| = [H : H∩aHa^-1]·|H| on every double coset"});
  output.checks.push_back({"index-condition", condition.holds,
                           condition.holds ? "left and right indices agree for every x"
                                           : "witnesses listed in results"});
  output.verified = condition.holds &&
                    std::all_of(output.checks.begin(), output.checks.end(),
                                [](const InvariantCheck& c) { return c.pass; });
  return output;
}

CommandOutput run_finite_transversal(const FiniteGroup& g,
                                     const SubgroupHandle& h) {
  CommandOutput output;
  const CommonTransversal transversal = common_transversal(g, h);
  const TransversalReport verdict =
      verify_transversal(g, h, transversal.elements);

  ordered_json elements = ordered_json::array();
  for (const Perm& p : transversal.elements) elements.push_back(perm_json(p));
  ordered_json provenance = ordered_json::array();
  bool provenance_ok = true;
  for (const ProvenanceEntry& entry : transversal.provenance) {
    ordered_json row;
    row["element"] = perm_json(entry.element);
    row["doubleCosetRep"] = perm_json(entry.double_coset_rep);
    row["leftFactor"] = perm_json(entry.left_factor);
    row["rightFactor"] = perm_json(entry.right_factor);
    provenance.push_back(std::move(row));
    provenance_ok =
        provenance_ok &&
        compose(compose(entry.left_factor, entry.double_coset_rep),
                entry.right_factor) == entry.element &&
        h.contains_index(*g.index_of(entry.left_factor)) &&
        h.contains_index(*g.index_of(entry.right_factor));
  }
  output.results["count"] = transversal.elements.size();
  output.results["index"] = g.order() / h.order();
  output.results["elements"] = std::move(elements);
  output.results["provenance"] = std::move(provenance);

  output.checks.push_back({"is-left-transversal", verdict.is_left,
                           "hits every left coset exactly once"});
  output.checks.push_back({"is-right-transversal", verdict.is_right,
                           "hits every right coset exactly once"});
  output.checks.push_back({"is-common-transversal", verdict.is_common,
                           "simultaneously left and right"});
  output.checks.push_back({"provenance-consistency", provenance_ok,
                           "each element equals t·rep·s with t, s in H"});
  output.checks.push_back({"size-matches-index",
                           transversal.elements.size() == g.order() / h.order(),
                           "|T| = [G:H]"});
  output.verified = std::all_of(output.checks.begin(), output.checks.end(),
                                [](const InvariantCheck& c) { return c.pass; });
  return output;
}

// --- bs / solenoid ------------------------------------------------------------

BSElement element_from_flags(const Flags& flags) {
  const Dyadic q = Dyadic::from_string(flags.require("q"));
  const long long n = flags.require_int("n");
  return BSElement{q, n};
}

CommandOutput run_bs_indices(const BSElement& x) {
  CommandOutput output;
  const auto [left, right] = bs_indices(x);
  output.results["q"] = x.q.to_string();
  output.results["n"] = x.n;
  output.results["leftIndex"] = left.to_string();
  output.results["rightIndex"] = right.to_string();
  const auto [inv_left, inv_right] = bs_indices(bs_inv(x));
  output.checks.push_back({"inverse-swaps-indices",
                           inv_left == right && inv_right == left,
                           "indices of x^-1 are the swapped indices of x"});
  output.verified = output.checks.front().pass;
  return output;
}

CommandOutput run_bs_report(const BSElement& x) {
  CommandOutput output;
  const BSDoubleCosetReport report = bs_double_coset_report(x);
  output.results["q"] = x.q.to_string();
  output.results["n"] = x.n;
  output.results["leftCount"] = report.left_count.to_string();
  output.results["rightCount"] = report.right_count.to_string();
  output.results["indexConditionHolds"] = report.index_condition_holds;
  output.results["conclusion"] = report.conclusion;
  output.checks.push_back({"index-condition", report.index_condition_holds,
                           report.conclusion});
  output.verified = report.index_condition_holds;
  return output;
}

CommandOutput run_solenoid(long long n) {
  CommandOutput output;
  const auto [left, right] = solenoid_indices(n);
  output.results["n"] = n;
  output.results["leftIndex"] = left.to_string();
  output.results["rightIndex"] = right.to_string();
  const bool holds = left == right;
  output.results["indexConditionHolds"] = holds;
  std::ostringstream detail;
  detail << "[Z_2 : Z_2 ∩ b^n Z_2 b^-n] = " << left.to_string() << ", [Z_2 : Z_2 ∩ b^-n Z_2 b^n] = "
         << right.to_string();
  output.checks.push_back({"index-condition", holds, detail.str()});
  output.verified = holds;
  return output;
}

// --- tower ---------------------------------------------------------------------

CommandOutput run_tower(const Tower& tower, const TowerSubgroupPair& pair) {
  CommandOutput output;
  const ClosureIndexReport report = closure_index_check(tower, pair);

  ordered_json levels = ordered_json::array();
  bool monotone = true;
  bool bounded = true;
  for (std::size_t i = 0; i < report.sequence.size(); ++i) {
    const ProjectedLevel& row = report.sequence[i];
    ordered_json level;
    level["level"] = row.level;
    level["order"] = tower.level(i).order();
    level["hImageOrder"] = row.h_image.size();
    level["kImageOrder"] = row.k_image.size();
    level["index"] = row.index;
    levels.push_back(std::move(level));
    if (i > 0) monotone = monotone && report.sequence[i - 1].index <= row.index;
    bounded = bounded && row.index <= report.top_index;
  }
  output.results["levels"] = std::move(levels);
  output.results["topIndex"] = report.top_index;
  output.results["classification"] =
      report.classification.stabilized() ? "stabilized" : "diverging";
  if (report.classification.stabilized())
    output.results["stabilizedValue"] = report.classification.value;
  output.results["verdict"] = report.verdict;

  output.checks.push_back({"monotone-nondecreasing", monotone,
                           "c_i <= c_{i+1} along the tower"});
  output.checks.push_back({"bounded-by-top-index", bounded,
                           "every c_i <= [H : K] at the top level"});
  output.checks.push_back(
      {"closure-index-agreement",
       report.classification.stabilized() ? report.stabilized_matches_top : true,
       report.classification.stabilized()
           ? "stabilized level index equals the top-level index"
           : "diverging within the tower depth; agreement not applicable"});
  output.verified = std::all_of(output.checks.begin(), output.checks.end(),
                                [](const InvariantCheck& c) { return c.pass; });
  return output;
}

// --- matrix ----------------------------------------------------------------------

ordered_json matrix_json(const ComplexMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.dim(); ++j) {
      row.push_back(m.at(i, j).real());
      row.push_back(m.at(i, j).imag());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

CommandOutput run_matrix(const std::string& kind, const Flags& flags) {
  CommandOutput output;
  const int n = static_cast<int>(flags.get_int("n", 2));
  if (n < 1 || n > 64) throw InputError("matrix dimension must be in 1..64");
  const auto seed = static_cast<std::uint64_t>(flags.get_int("seed", 0));
  const double tol = flags.get_double("tol", kDefaultMatrixTol);
  if (tol <= 0.0) throw InputError("tolerance must be positive");

  std::mt19937_64 engine(seed);
  const ComplexMatrix g = random_well_conditioned(n, engine);
  output.results["n"] = n;
  output.results["seed"] = seed;
  output.results["tol"] = tol;
  output.results["generator"] =
      "mt19937_64; entries ((u>>11)*2^-53)*2-1, row-major, re then im";
  output.results["conditionEstimate"] = condition_estimate(g);
  output.results["matrix"] = matrix_json(g);

  if (kind == "polar") {
    const DecompositionResult left = polar_decompose(g, tol);
    const DecompositionResult right = polar_decompose_right(g, tol);
    const TransversalCertificate cert =
        transversal_certificate(g, DecompositionMode::Polar, tol);
    output.results["unitaryFactor"] = matrix_json(left.factor1);
    output.results["positiveFactor"] = matrix_json(left.factor2);
    output.results["residual"] = left.residual;
    output.results["relativeResidual"] = left.relative_residual;
    output.results["unitarityDefect"] = left.unitarity_defect;
    output.results["minEigenvalue"] = left.min_eigenvalue;
    output.results["uniquenessGap"] = *left.uniqueness_gap;
    output.results["rightRelativeResidual"] = right.relative_residual;
    output.results["rightConsistencyGap"] = *right.uniqueness_gap;
    output.results["transversalCertificate"] = ordered_json{
        {"leftElement", matrix_json(cert.left_element)},
        {"rightElement", matrix_json(cert.right_element)},
        {"leftCosetDefect", cert.left_coset_defect},
        {"rightCosetDefect", cert.right_coset_defect},
        {"pass", cert.passed}};
    output.checks.push_back({"polar-decomposition", left.passed,
                             "residual, unitarity, positivity, uniqueness at tol"});
    output.checks.push_back({"right-polar-consistency", right.passed,
                             "g = p'u' with u' = u and p' = u p u*"});
    output.checks.push_back({"transversal-certificate", cert.passed,
                             "positive factors represent both cosets of U(n)"});
  } else {
    const DecompositionResult qr = qr_positive(g, tol);
    const TransversalCertificate cert =
        transversal_certificate(g, DecompositionMode::Iwasawa, tol);
    output.results["q"] = matrix_json(qr.factor1);
    output.results["r"] = matrix_json(qr.factor2);
    output.results["residual"] = qr.residual;
    output.results["relativeResidual"] = qr.relative_residual;
    output.results["unitarityDefect"] = qr.unitarity_defect;
    output.results["minDiagonal"] = qr.min_eigenvalue;
    output.results["triangularityDefect"] = *qr.triangularity_defect;
    output.results["transversalCertificate"] = ordered_json{
        {"leftElement", matrix_json(cert.left_element)},
        {"rightElement", matrix_json(cert.right_element)},
        {"leftCosetDefect", cert.left_coset_defect},
        {"rightCosetDefect", cert.right_coset_defect},
        {"pass", cert.passed}};
    output.checks.push_back({"qr-decomposition", qr.passed,
                             "residual, unitarity, triangularity, positive diagonal"});
    output.checks.push_back({"transversal-certificate", cert.passed,
                             "triangular factors represent both cosets of U(n)"});
  }
  output.verified = std::all_of(output.checks.begin(), output.checks.end(),
                                [](const InvariantCheck& c) { return c.pass; });
  return output;
}

// --- hyperspace ---------------------------------------------------------------------

CommandOutput run_hyperspace_demo(const Flags& flags) {
  const std::string example = flags.has("example")
                                  ? flags.require("example")
                                  : std::string("fn-counterexample");
  if (example != "fn-counterexample")
    throw InputError("unknown example '" + example +
                     "' (available: fn-counterexample)");
  const long long depth = flags.get_int("n", 10);
  if (depth < 2 || depth > 100000) throw InputError("demo depth must be in 2..100000");

  CommandOutput output;
  std::vector<PointSet> sequence;
  for (long long k = 1; k <= depth; ++k)
    sequence.push_back(PointSet(1, {{-1.0 / static_cast<double>(k)},
                                    {1.0 / static_cast<double>(k)}}));
  const PointSet target = PointSet::singleton({0.0});
  const double tol = 1.0 / static_cast<double>(depth);

  std::vector<std::vector<double>> samples;
  for (long long i = -depth; i <= depth; ++i)
    samples.push_back({static_cast<double>(i) / static_cast<double>(depth)});

  const AgreementReport agreement =
      hausdorff_wijsman_agreement(sequence, target, samples, tol);
  bool exact = true;
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const double expected = 1.0 / static_cast<double>(i + 1);
    exact = exact && agreement.rows[i].hausdorff_to_target == expected;
    ordered_json row;
    row["k"] = i + 1;
    row["cardinality"] = sequence[i].size();
    row["hausdorffToTarget"] = agreement.rows[i].hausdorff_to_target;
    row["maxProfileDeviation"] = agreement.rows[i].max_profile_deviation;
    rows.push_back(std::move(row));
  }
  output.results["example"] = example;
  output.results["depth"] = depth;
  output.results["rows"] = std::move(rows);

  const CardBoundLimitReport limit = check_card_bound_limit(sequence, 2, tol);
  ordered_json limit_points = ordered_json::array();
  for (const auto& p : limit.limit) limit_points.push_back(p[0]);
  output.results["limit"] = ordered_json{
      {"points", std::move(limit_points)},
      {"clusterCount", limit.cluster_count},
      {"maxTailCardinality", limit.max_tail_cardinality},
      {"cardinalityDropped", limit.cardinality_dropped},
      {"tailStart", limit.tail_start + 1}};

  output.checks.push_back({"hausdorff-exact", exact,
                           "distance of {±1/k} to {0} equals 1/k exactly"});
  output.checks.push_back({"lipschitz-bridge", agreement.all_lipschitz_ok,
                           "profile deviation bounded by the Hausdorff distance "
                           "at every sample"});
  output.checks.push_back({"cardinality-drop",
                           limit.cluster_count == 1 &&
                               limit.max_tail_cardinality == 2 &&
                               limit.cardinality_dropped,
                           "two-point sets converge to a one-point limit"});
  output.verified = std::all_of(output.checks.begin(), output.checks.end(),
                                [](const InvariantCheck& c) { return c.pass; });
  return output;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  try {
    if (args.empty() || args[0] == "--help" || args[0] == "help") {
      (args.empty() ? err : out) << kUsage;
      return args.empty() ? 2 : 0;
    }
    const std::string& head = args[0];

    if (head == "finite") {
      if (args.size() < 2 || (args[1] != "check" && args[1] != "transversal")) {
        err << kUsage;
        return 2;
      }
      const std::string command = "finite " + args[1];
      const Flags flags = parse_flags(args, 2);
      const std::string text = read_file(flags.require("spec"));
      const GroupSpec spec = parse_group_spec(text);
      std::optional<std::size_t> cap;
      if (flags.has("cap"))
        cap = static_cast<std::size_t>(flags.require_int("cap"));
      const FiniteGroup g = build_group(spec, cap);
      const SubgroupHandle h = build_subgroup(g, spec);
      CommandOutput output = args[1] == "check" ? run_finite_check(g, h)
                                                : run_finite_transversal(g, h);
      return emit(out, command, text, std::move(output), flags.json);
    }

    if (head == "bs") {
      if (args.size() < 2 || (args[1] != "indices" && args[1] != "report")) {
        err << kUsage;
        return 2;
      }
      const std::string command = "bs " + args[1];
      const Flags flags = parse_flags(args, 2);
      const BSElement x = element_from_flags(flags);
      CommandOutput output =
          args[1] == "indices" ? run_bs_indices(x) : run_bs_report(x);
      return emit(out, command, flags_payload(command, flags), std::move(output),
                  flags.json);
    }

    if (head == "solenoid") {
      const Flags flags = parse_flags(args, 1);
      CommandOutput output = run_solenoid(flags.require_int("n"));
      return emit(out, "solenoid", flags_payload("solenoid", flags),
                  std::move(output), flags.json);
    }

    if (head == "tower") {
      if (args.size() < 2 || args[1] != "run") {
        err << kUsage;
        return 2;
      }
      const Flags flags = parse_flags(args, 2);
      const std::string text = read_file(flags.require("spec"));
      const TowerRunSpec spec = parse_tower_spec(text);
      const Tower full = build_tower(spec);
      const TowerSubgroupPair full_pair = build_tower_pair(full, spec);
      CommandOutput output;
      if (flags.has("max-level")) {
        const long long max_level = flags.require_int("max-level");
        if (max_level < 1 || static_cast<std::size_t>(max_level) > full.depth())
          throw InputError("--max-level out of range for this tower");
        const auto new_depth = static_cast<std::size_t>(max_level);
        const Tower truncated = truncate_tower(full, new_depth);
        TowerSubgroupPair pair{
            SubgroupHandle(truncated.top(),
                           full.project_members(new_depth - 1, full_pair.h.members())),
            SubgroupHandle(truncated.top(),
                           full.project_members(new_depth - 1, full_pair.k.members()))};
        output = run_tower(truncated, pair);
      } else {
        output = run_tower(full, full_pair);
      }
      return emit(out, "tower run", text, std::move(output), flags.json);
    }

    if (head == "matrix") {
      if (args.size() < 2 || (args[1] != "polar" && args[1] != "qr")) {
        err << kUsage;
        return 2;
      }
      const std::string command = "matrix " + args[1];
      const Flags flags = parse_flags(args, 2);
      CommandOutput output = run_matrix(args[1], flags);
      return emit(out, command, flags_payload(command, flags), std::move(output),
                  flags.json);
    }

    if (head == "hyperspace") {
      if (args.size() < 2 || args[1] != "demo") {
        err << kUsage;
        return 2;
      }
      const Flags flags = parse_flags(args, 2);
      CommandOutput output = run_hyperspace_demo(flags);
      return emit(out, "hyperspace demo", flags_payload("hyperspace demo", flags),
                  std::move(output), flags.json);
    }

    err << "unknown command '" << head << "'\n" << kUsage;
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tvk
