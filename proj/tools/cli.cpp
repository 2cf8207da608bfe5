#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <istream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "troptp/error.hpp"
#include "troptp/io.hpp"
#include "troptp/jacobi.hpp"
#include "troptp/network.hpp"
#include "troptp/parametrization.hpp"
#include "troptp/positivity.hpp"
#include "troptp/puiseux.hpp"

namespace troptp::cli {
namespace {

using Json = nlohmann::ordered_json;

inline constexpr std::size_t kRandomSizeLimit = 1000;

struct Options {
  std::string input = "-";
  std::string format = "text";
  bool oracle = false;
  std::size_t max_minor = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string mode = "strict";
  std::size_t n = 3;
  std::vector<std::size_t> levels;
  bool shuffle = false;
};

struct Context {
  const Options& opt;
  std::istream& in;
  std::ostream& out;
  std::ostream& err;

  bool json() const { return opt.format == "json"; }
};

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooLarge: return kExitBudget;
    case ErrorCode::NotTp: return kExitNotTp;
    default: return kExitParse;
  }
}

Document load(const Context& ctx) {
  if (ctx.opt.input == "-") return read_document(ctx.in);
  std::ifstream file(ctx.opt.input);
  if (!file) throw Error(ErrorCode::Parse, "cannot open '" + ctx.opt.input + "'");
  return read_document(file);
}

TropMatrix load_matrix(const Context& ctx, bool accept_weights) {
  Document doc = load(ctx);
  if (doc.kind == DocumentKind::TropMatrix) return doc.matrix;
  if (accept_weights && doc.kind == DocumentKind::WeightMatrix) return doc.weights.to_trop();
  throw Error(ErrorCode::Parse, "expected a trop-matrix document");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string index_set(const std::vector<std::size_t>& idx) {
  std::string s = "{";
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k] + 1);
  return s + "}";
}

std::vector<std::size_t> one_based(const std::vector<std::size_t>& idx) {
  std::vector<std::size_t> out;
  for (auto i : idx) out.push_back(i + 1);
  return out;
}

Json matrix_json(const TropMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return Json{{"kind", "trop-matrix"}, {"rows", m.rows()}, {"cols", m.cols()}, {"data", rows}};
}

Json weights_json(const WeightMatrix& w) {
  Json j = matrix_json(w.to_trop());
  j["kind"] = "weight-matrix";
  return j;
}

Json params_json(const ParamVector& p) {
  Json arr = Json::array();
  for (const auto& v : p) arr.push_back(to_string(v));
  return arr;
}

std::string params_text(const ParamVector& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? ", " : "") + to_string(p[k]);
  return s + ")";
}

void emit(const Context& ctx, const Json& j) { ctx.out << j.dump(2) << '\n'; }

// --- classify ---------------------------------------------------------------

struct Classification {
  bool tp = false;
  bool tn = false;
  std::size_t max_t_positive = 0;
  std::size_t max_t_nonnegative = 0;
  std::vector<MinorWitness> witnesses;
};

MinorWitness block_witness(const TropMatrix& a, std::pair<std::size_t, std::size_t> corner) {
  const auto [i, j] = corner;
  MinorWitness w{{i - 1, i}, {j - 1, j}, TropSign::Positive};
  w.sign = minor_sign(a, w.rows, w.cols);
  return w;
}

Classification classify_adjacent(const TropMatrix& a) {
  const std::size_t n = a.rows();
  const auto strict = adjacent_2x2_check(a, Strictness::Strict);
  const auto weak = adjacent_2x2_check(a, Strictness::Weak);
  Classification c;
  c.tp = strict.holds;
  c.tn = weak.holds;
  c.max_t_positive = c.tp ? n : 1;
  c.max_t_nonnegative = c.tn ? n : 1;
  if (!c.tp) c.witnesses.push_back(block_witness(a, strict.violations.front()));
  if (!c.tn) {
    MinorWitness neg = block_witness(a, weak.violations.front());
    if (neg != c.witnesses.front()) c.witnesses.push_back(neg);
  }
  return c;
}

Classification from_oracle(const PositivityClass& p) {
  return {p.is_tp, p.is_tn, p.max_t_positive, p.max_t_nonnegative, p.witnesses};
}

int cmd_classify(const Context& ctx) {
  const TropMatrix a = load_matrix(ctx, true);
  if (!a.is_square() || a.rows() == 0) throw Error(ErrorCode::Shape, "classify needs a nonempty square matrix");
  const std::size_t n = a.rows();
  const bool finite = a.all_finite();
  const bool use_oracle = ctx.opt.oracle || ctx.opt.max_minor != 0 || !finite;
  const std::size_t t = ctx.opt.max_minor != 0 ? ctx.opt.max_minor : n;

  Classification c;
  std::optional<bool> agrees;
  if (use_oracle) {
    c = from_oracle(classify_oracle(a, t));
    // over finite entries TP_t = TP and TN_t = TN(R) once t >= 2
    if (ctx.opt.oracle && finite && t >= std::min<std::size_t>(2, n)) {
      const Classification fast = classify_adjacent(a);
      agrees = fast.tp == c.tp && fast.tn == c.tn;
    }
  } else {
    c = classify_adjacent(a);
  }

  // with --max-minor below n the flags describe TP_t / TN_t
  const std::string suffix = t < n ? "_" + std::to_string(t) : "";
  const std::string tp_label = "TP" + suffix;
  const std::string tn_label = "TN" + suffix + (finite ? "(R)" : "");
  if (ctx.json()) {
    Json witnesses = Json::array();
    for (const auto& w : c.witnesses) {
      witnesses.push_back({{"rows", one_based(w.rows)}, {"cols", one_based(w.cols)}, {"sign", std::string(to_string(w.sign))}});
    }
    Json j{{"n", n},
           {"finite", finite},
           {"tp", c.tp},
           {"tn", c.tn},
           {"max_t_positive", c.max_t_positive},
           {"max_t_nonnegative", c.max_t_nonnegative},
           {"method", use_oracle ? "oracle" : "adjacent-2x2"},
           {"max_minor", t},
           {"witnesses", witnesses}};
    if (agrees) j["oracle_agrees"] = *agrees;
    emit(ctx, j);
    return kExitOk;
  }

  if (c.tp) {
    ctx.out << tp_label << ": yes\n";
  } else {
    const MinorWitness& w = c.witnesses.front();
    ctx.out << tn_label << ": " << yes_no(c.tn) << ", " << tp_label << ": no; witness minor " << index_set(w.rows) << "×"
            << index_set(w.cols) << ' ' << to_string(w.sign) << '\n';
  }
  for (std::size_t k = 1; k < c.witnesses.size(); ++k) {
    const MinorWitness& w = c.witnesses[k];
    ctx.out << "negative minor " << index_set(w.rows) << "×" << index_set(w.cols) << ' ' << to_string(w.sign) << '\n';
  }
  ctx.out << "max t (TP_t): " << c.max_t_positive << '\n';
  ctx.out << "max t (TN_t): " << c.max_t_nonnegative << '\n';
  ctx.out << "method: " << (use_oracle ? "oracle, minors of size <= " + std::to_string(t) : "adjacent 2x2") << '\n';
  if (agrees) ctx.out << "oracle agrees with adjacent 2x2 check: " << yes_no(*agrees) << '\n';
  return kExitOk;
}

// --- weights / transfer -----------------------------------------------------

int cmd_weights(const Context& ctx) {
  const TropMatrix a = load_matrix(ctx, false);
  const WeightMatrix w = phi(a);
  const InequalityReport rep = inequality_report(w);
  const bool round_trip = transfer_matrix(build_canonical(w)) == a;
  if (ctx.json()) {
    Json j = weights_json(w);
    j["inequalities"] = {{"weak_trapeze", rep.weak_trapeze},
                         {"strict_trapeze", rep.strict_trapeze},
                         {"weak_parallelogram", rep.weak_parallelogram},
                         {"strict_parallelogram", rep.strict_parallelogram}};
    j["transfer_reproduces_input"] = round_trip;
    emit(ctx, j);
    return kExitOk;
  }
  ctx.out << format_weight_matrix(w);
  ctx.out << "# weak trapeze: " << yes_no(rep.weak_trapeze) << '\n';
  ctx.out << "# strict trapeze: " << yes_no(rep.strict_trapeze) << '\n';
  ctx.out << "# weak parallelogram: " << yes_no(rep.weak_parallelogram) << '\n';
  ctx.out << "# strict parallelogram: " << yes_no(rep.strict_parallelogram) << '\n';
  ctx.out << "# transfer reproduces input: " << yes_no(round_trip) << '\n';
  return kExitOk;
}

int cmd_transfer(const Context& ctx) {
  const Document doc = load(ctx);
  TropMatrix t;
  switch (doc.kind) {
    case DocumentKind::WeightMatrix: t = transfer_matrix(build_canonical(doc.weights)); break;
    case DocumentKind::Network: t = transfer_matrix(doc.network); break;
    case DocumentKind::TropMatrix: throw Error(ErrorCode::Parse, "expected a weight-matrix or network document");
  }
  if (ctx.json()) {
    emit(ctx, matrix_json(t));
  } else {
    ctx.out << format_trop_matrix(t);
  }
  return kExitOk;
}

// --- factor -----------------------------------------------------------------

std::string non_tp_explanation(const TropMatrix& a) {
  if (!a.is_square() || a.rows() == 0) throw Error(ErrorCode::Shape, "factor needs a nonempty square matrix");
  if (!a.all_finite()) {
    return "matrix is not tropically totally positive: it has -inf entries, which no parameters of the canonical "
           "word produce";
  }
  const WeightMatrix w = phi(a);
  const PlanarNetwork net = build_canonical(w);
  if (transfer_matrix(net) != a) {
    return "matrix is not tropically totally nonnegative: no parameters of the canonical word produce it";
  }
  // Dropping an arc and still reproducing the matrix means its weight can be
  // lowered anywhere down to -inf: transfer matrices are monotone in weights.
  const auto layout = canonical_layout(w.n());
  std::string free_cells;
  for (std::size_t k = 0; k < layout.size(); ++k) {
    if (!layout[k].weight) continue;
    std::vector<Arc> arcs = net.arcs();
    arcs[k].weight = TropValue::neg_inf();
    const PlanarNetwork cut(net.node_count(), std::move(arcs), net.sources(), net.targets(), net.positions());
    if (transfer_matrix(cut) == a) {
      const auto [i, j] = *layout[k].weight;
      free_cells += "; w(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + to_string(w(i, j)) +
                    " can be replaced by any value <= " + to_string(w(i, j));
    }
  }
  return "matrix is tropically totally nonnegative but not totally positive, so the parameters are not unique" +
         free_cells;
}

int cmd_factor(const Context& ctx) {
  const TropMatrix a = load_matrix(ctx, false);
  if (!a.is_square() || a.rows() == 0 || !a.all_finite() || !is_tp(a)) {
    throw Error(ErrorCode::NotTp, non_tp_explanation(a));
  }
  const ParamVector params = recover_params(a);
  const Word word = canonical_word(a.rows());
  if (ctx.json()) {
    emit(ctx, Json{{"word", to_string(word)}, {"params", params_json(params)}});
  } else {
    ctx.out << "word: " << to_string(word) << '\n' << "params: " << params_text(params) << '\n';
  }
  return kExitOk;
}

// --- lift -------------------------------------------------------------------

Document load_weights_or_throw(const Context& ctx) {
  Document doc = load(ctx);
  if (doc.kind != DocumentKind::WeightMatrix) throw Error(ErrorCode::Parse, "expected a weight-matrix document");
  return doc;
}

int cmd_lift(const Context& ctx) {
  const WeightMatrix w = load_weights_or_throw(ctx).weights;
  if (w.n() > kCorrespondenceSizeLimit) throw Error(ErrorCode::TooLarge, "lift is limited to n <= 4");
  const KMatrix lifted = ctx.opt.seed_given ? lift_weights(w, ctx.opt.seed) : lift_weights(w);
  const KMatrix classical = k_transfer(lifted);
  const CorrespondenceReport rep = val_correspondence_check(w, lifted);
  const std::size_t n = w.n();

  if (ctx.json()) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < n; ++j) row.push_back(to_string(classical(i, j)));
      entries.push_back(row);
    }
    Json j{{"transfer", entries},
           {"valuation", matrix_json(k_val(classical))},
           {"report",
            {{"entrywise_valuation", rep.entrywise_valuation},
             {"minors_checked", rep.minors_checked},
             {"sign_nonsingular_minors", rep.sign_nonsingular_minors},
             {"determinant_valuation", rep.determinant_valuation},
             {"determinant_sign", rep.determinant_sign},
             {"strict_weights", rep.strict_weights},
             {"all_minors_positive", rep.all_minors_positive},
             {"params_recovered", rep.params_recovered},
             {"holds", rep.ok()}}}};
    emit(ctx, j);
    return kExitOk;
  }
  ctx.out << "# classical transfer matrix\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ctx.out << "M(" << i + 1 << "," << j + 1 << ") = " << to_string(classical(i, j)) << '\n';
  ctx.out << "# valuation\n" << format_trop_matrix(k_val(classical));
  ctx.out << "# correspondence\n";
  ctx.out << "entrywise valuation matches tropical transfer: " << yes_no(rep.entrywise_valuation) << '\n';
  ctx.out << "minors checked: " << rep.minors_checked << ", sign-nonsingular: " << rep.sign_nonsingular_minors << '\n';
  ctx.out << "val(det) = permanent on sign-nonsingular minors: " << yes_no(rep.determinant_valuation) << '\n';
  ctx.out << "sign(det) matches tropical sign: " << yes_no(rep.determinant_sign) << '\n';
  ctx.out << "strict weights: " << yes_no(rep.strict_weights) << '\n';
  if (rep.strict_weights) {
    ctx.out << "all minors positive: " << yes_no(rep.all_minors_positive) << '\n';
    ctx.out << "parameters recovered from valuation: " << yes_no(rep.params_recovered) << '\n';
  }
  ctx.out << "correspondence: " << (rep.ok() ? "holds" : "fails") << '\n';
  return kExitOk;
}

// --- export-dot / random ----------------------------------------------------

int cmd_export_dot(const Context& ctx) {
  const Document doc = load(ctx);
  switch (doc.kind) {
    case DocumentKind::WeightMatrix: ctx.out << to_dot(build_canonical(doc.weights)); break;
    case DocumentKind::Network: ctx.out << to_dot(doc.network); break;
    case DocumentKind::TropMatrix: throw Error(ErrorCode::Parse, "expected a weight-matrix or network document");
  }
  return kExitOk;
}

int cmd_random(const Context& ctx) {
  if (ctx.opt.n > kRandomSizeLimit) throw Error(ErrorCode::TooLarge, "random is limited to n <= 1000");
  if (ctx.opt.n == 0) throw Error(ErrorCode::Shape, "n must be positive");
  const WeightMode mode = ctx.opt.mode == "strict" ? WeightMode::Strict
                          : ctx.opt.mode == "weak" ? WeightMode::Weak
                                                   : WeightMode::Arbitrary;
  const WeightMatrix w = gen_weights(ctx.opt.n, mode, ctx.opt.seed);
  if (ctx.json()) {
    emit(ctx, weights_json(w));
  } else {
    ctx.out << format_weight_matrix(w);
  }
  return kExitOk;
}

// --- mutate -----------------------------------------------------------------

std::string kind_name(MutationKind kind) {
  switch (kind) {
    case MutationKind::Trapeze: return "trapeze";
    case MutationKind::ParallelogramLeft: return "parallelogram-left";
    case MutationKind::ParallelogramRight: return "parallelogram-right";
  }
  return "?";
}

std::string levels_text(const std::vector<std::size_t>& levels) {
  std::string s;
  for (std::size_t k = 0; k < levels.size(); ++k) s += (k ? " " : "") + std::to_string(levels[k]);
  return s;
}

PathSeq random_path(const PlanarNetwork& net, std::mt19937_64& engine) {
  PathSeq path;
  std::size_t v = net.sources()[engine() % net.sources().size()];
  while (!net.out_arcs()[v].empty()) {
    const auto& out = net.out_arcs()[v];
    const std::size_t arc = out[engine() % out.size()];
    path.arcs.push_back(arc);
    v = net.arcs()[arc].to;
  }
  return path;
}

int cmd_mutate(const Context& ctx) {
  const WeightMatrix w = load_weights_or_throw(ctx).weights;
  const PlanarNetwork net = build_canonical(w);
  std::mt19937_64 engine(ctx.opt.seed);
  const PathSeq start = ctx.opt.levels.empty() ? random_path(net, engine) : path_from_levels(net, ctx.opt.levels);

  MutationChooser chooser;
  if (ctx.opt.shuffle) chooser = [&engine](std::size_t count) { return static_cast<std::size_t>(engine() % count); };
  const NormalizedPath result = normalize_path(w, start, chooser);

  std::vector<std::size_t> levels = path_levels(net, start);
  const std::size_t n = w.n();
  const auto uppermost = uppermost_levels(n, levels.front() - 1, levels.back() - 1);
  const bool reached = path_levels(net, result.path) == uppermost;
  const bool weak = inequality_report(w).weak();

  Json steps = Json::array();
  std::ostringstream text;
  text << "path: " << levels_text(levels) << " (weight " << to_string(path_weight(net, start)) << ")\n";
  for (std::size_t k = 0; k < result.trace.size(); ++k) {
    const Mutation& m = result.trace[k];
    levels[m.column] = m.level;
    if (m.kind == MutationKind::Trapeze) levels[m.column + 1] = m.level;
    const Rational weight = path_weight(net, path_from_levels(net, levels));
    text << "step " << k + 1 << ": " << kind_name(m.kind) << " at column " << m.column << " -> level " << m.level
         << ": " << levels_text(levels) << " (weight " << to_string(weight) << ")\n";
    steps.push_back({{"kind", kind_name(m.kind)},
                     {"column", m.column},
                     {"level", m.level},
                     {"levels", levels},
                     {"weight", to_string(weight)}});
  }
  text << "uppermost path " << levels.front() << " -> " << levels.back() << " reached: " << yes_no(reached) << '\n';
  if (!weak) text << "# weights violate the weak inequalities; path weights may decrease\n";

  if (ctx.json()) {
    emit(ctx, Json{{"start", {{"levels", path_levels(net, start)}, {"weight", to_string(path_weight(net, start))}}},
                   {"steps", steps},
                   {"uppermost_reached", reached},
                   {"weak_weights", weak}});
  } else {
    ctx.out << text.str();
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Tropical total positivity toolkit", "troptp"};
  app.require_subcommand(1, 1);

  auto add_common = [&opt](CLI::App* sub, bool takes_input) {
    if (takes_input) sub->add_option("input", opt.input, "document path, - for stdin");
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
    return sub;
  };

  auto* classify = add_common(app.add_subcommand("classify", "classify a matrix as TP / TN"), true);
  classify->add_flag("--oracle", opt.oracle, "enumerate every minor and compare with the 2x2 check");
  classify->add_option("--max-minor", opt.max_minor, "only consider minors up to this size")->check(CLI::PositiveNumber);
  auto* weights = add_common(app.add_subcommand("weights", "weights of G_n realizing a matrix"), true);
  auto* transfer = add_common(app.add_subcommand("transfer", "tropical transfer matrix of G_n or a network"), true);
  auto* factor = add_common(app.add_subcommand("factor", "factor a TP matrix into Jacobi matrices"), true);
  auto* lift = add_common(app.add_subcommand("lift", "lift weights to Puiseux series and check valuations"), true);
  auto* seed_in_lift = lift->add_option("--seed", opt.seed, "random positive leading coefficients");
  auto* export_dot = add_common(app.add_subcommand("export-dot", "Graphviz DOT of G_n or a network"), true);
  auto* random = add_common(app.add_subcommand("random", "seeded random weights"), false);
  random->add_option("--n", opt.n, "size")->check(CLI::NonNegativeNumber);
  random->add_option("--mode", opt.mode, "inequalities to satisfy")->check(CLI::IsMember({"strict", "weak", "arbitrary"}));
  random->add_option("--seed", opt.seed, "seed");
  auto* mutate = add_common(app.add_subcommand("mutate", "normalize a path of G_n by mutations"), true);
  mutate->add_option("--levels", opt.levels, "path as levels per column (default: seeded random path)");
  mutate->add_option("--seed", opt.seed, "seed for the random path and mutation order");
  mutate->add_flag("--shuffle", opt.shuffle, "apply mutations in seeded random order");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }
  opt.seed_given = seed_in_lift->count() > 0;

  const Context ctx{opt, in, out, err};
  CLI::App* sub = app.get_subcommands().front();
  try {
    if (sub == classify) return cmd_classify(ctx);
    if (sub == weights) return cmd_weights(ctx);
    if (sub == transfer) return cmd_transfer(ctx);
    if (sub == factor) return cmd_factor(ctx);
    if (sub == lift) return cmd_lift(ctx);
    if (sub == export_dot) return cmd_export_dot(ctx);
    if (sub == random) return cmd_random(ctx);
    if (sub == mutate) return cmd_mutate(ctx);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.code());
  }
  return kExitParse;
}

}  // namespace troptp::cli
