// yblab: one executable dispatching every verification workflow, one JSON
// document per invocation on standard output.
//
// Exit codes: 0 all checks passed, 1 a residual exceeded tolerance,
// 2 usage or parse error, 3 size-guard refusal.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "yblab/json_io.hpp"

using namespace yblab;

namespace {

double resolve_tol() {
  const char* env = std::getenv("YBLAB_TOL");
  if (env == nullptr || *env == '\0') return 1e-10;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0))
    throw std::invalid_argument("YBLAB_TOL must be a positive number");
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// --input may hold either a family document or a raw tensor (treated as a
/// constant custom family).
SpectralRFamily family_from_file(const std::string& path) {
  const std::string text = read_file(path);
  if (text.find("\"family\"") != std::string::npos) return family_from_json(text);
  return SpectralRFamily::custom(tensor_from_json(text));
}

SpectralRFamily named_family(const std::string& name, Complex alpha, Complex coupling,
                             double gamma) {
  if (name == "six-vertex") return SpectralRFamily::six_vertex(alpha);
  if (name == "xxz-first-order") return SpectralRFamily::xxz_first_order(coupling);
  if (name == "gauge-six-vertex") return SpectralRFamily::gauge_six_vertex(gamma);
  throw std::invalid_argument("unknown family '" + name +
                              "' (expected six-vertex, xxz-first-order or gauge-six-vertex)");
}

std::vector<std::size_t> parse_steps(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    const long v = std::stol(item, &pos);
    if (pos != item.size() || v < 1) throw std::invalid_argument("bad step count: " + item);
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw std::invalid_argument("--steps needs a comma-separated list");
  return out;
}

void emit(const std::string& command, JsonValue inputs, JsonValue results, bool pass,
          double tol) {
  JsonValue doc = JsonValue::object();
  doc.add("command", JsonValue::string(command));
  doc.add("inputs", std::move(inputs));
  doc.add("results", std::move(results));
  doc.add("pass", JsonValue::boolean(pass));
  doc.add("tol", JsonValue::number(tol));
  std::printf("%s\n", doc.dump().c_str());
}

struct Options {
  std::string family = "six-vertex";
  std::string input;
  double alpha_re = 1.0, alpha_im = 0.0;
  double coupling_re = 1.0, coupling_im = 0.0;
  double gamma = 0.6;
  double lambda_re = 0.0, lambda_im = 0.0;
  double mu_re = 0.0, mu_im = 0.0;
  double u_re = 0.5, u_im = 0.0;
  double z_re = 0.0, z_im = 0.0;
  double tol = 0.0;  // classify-star only; 0 means "use the resolved default"
  double grid_min = 0.0, grid_max = 0.0;
  std::size_t grid_steps = 0;
  std::size_t sites = 2, rows = 1;
  bool brute_force = false;
  std::string steps = "8,16,32,64";
  std::string convention = "auto";
};

int run_ybe_check(const Options& o, double tol) {
  const SpectralRFamily fam =
      !o.input.empty() ? family_from_file(o.input)
                       : named_family(o.family, Complex(o.alpha_re, o.alpha_im),
                                      Complex(o.coupling_re, o.coupling_im), o.gamma);
  std::vector<YbeReport> reports;
  if (o.grid_steps > 0) {
    const double step =
        o.grid_steps > 1 ? (o.grid_max - o.grid_min) / double(o.grid_steps - 1) : 0.0;
    for (std::size_t i = 0; i < o.grid_steps; ++i)
      for (std::size_t j = 0; j < o.grid_steps; ++j)
        reports.push_back(ybe_residual(fam, Complex(o.grid_min + step * i, 0.0),
                                       Complex(o.grid_min + step * j, 0.0)));
  } else {
    reports.push_back(
        ybe_residual(fam, Complex(o.lambda_re, o.lambda_im), Complex(o.mu_re, o.mu_im)));
  }
  double worst = 0.0;
  JsonValue arr = JsonValue::array({});
  for (const YbeReport& r : reports) {
    worst = std::max(worst, r.relative());
    arr.push_back(ybe_report_json(r));
  }
  JsonValue results = JsonValue::object();
  results.add("reports", std::move(arr));
  results.add("max_relative_residual", JsonValue::number(worst));

  JsonValue inputs = JsonValue::object();
  inputs.add("family", JsonValue::string(!o.input.empty() ? "file:" + o.input : o.family));
  inputs.add("lambda", JsonValue::complex_pair(Complex(o.lambda_re, o.lambda_im)));
  inputs.add("mu", JsonValue::complex_pair(Complex(o.mu_re, o.mu_im)));
  const bool pass = worst <= tol;
  emit("ybe-check", std::move(inputs), std::move(results), pass, tol);
  return pass ? 0 : 1;
}

int run_classify_star(const Options& o, double tol) {
  const VertexTensor t = tensor_from_json(read_file(o.input));
  const StarReport rep = classify_star(t, o.tol > 0.0 ? o.tol : tol);
  JsonValue inputs = JsonValue::object();
  inputs.add("input", JsonValue::string(o.input));
  const bool pass = rep.verdict != StarVerdict::none;
  emit("classify-star", std::move(inputs), star_report_json(rep), pass, rep.tol);
  return pass ? 0 : 1;
}

int run_transfer(const Options& o, double tol) {
  const SpectralRFamily fam =
      !o.input.empty() ? family_from_file(o.input)
                       : named_family(o.family, Complex(o.alpha_re, o.alpha_im),
                                      Complex(o.coupling_re, o.coupling_im), o.gamma);
  const VertexTensor r = fam(Complex(o.u_re, o.u_im));
  const LatticeSpec lattice{o.sites, o.rows, r.n()};
  const Complex z_transfer = partition_transfer(r, lattice);

  JsonValue results = JsonValue::object();
  results.add("transfer", partition_report_json(z_transfer, lattice, "transfer"));
  bool pass = true;
  if (o.brute_force) {
    const Complex z_brute = partition_bruteforce(r, lattice);
    results.add("bruteforce", partition_report_json(z_brute, lattice, "bruteforce"));
    const double rel = std::abs(z_transfer - z_brute) / std::max(std::abs(z_brute), 1.0);
    results.add("cross_residual_rel", JsonValue::number(rel));
    pass = rel <= tol;
  }

  JsonValue inputs = JsonValue::object();
  inputs.add("family", JsonValue::string(!o.input.empty() ? "file:" + o.input : o.family));
  inputs.add("u", JsonValue::complex_pair(Complex(o.u_re, o.u_im)));
  inputs.add("sites", JsonValue::integer(static_cast<long long>(o.sites)));
  inputs.add("rows", JsonValue::integer(static_cast<long long>(o.rows)));
  emit("transfer", std::move(inputs), std::move(results), pass, tol);
  return pass ? 0 : 1;
}

int run_trotter(const Options& o, double tol) {
  const TrotterOrderReport rep = trotter_order(o.coupling_re, Complex(o.z_re, o.z_im), o.sites,
                                               parse_steps(o.steps));
  const bool pass = rep.status == TrotterOrderStatus::exact ||
                    (rep.status == TrotterOrderStatus::estimated && rep.slope >= -1.2 &&
                     rep.slope <= -0.8);
  JsonValue inputs = JsonValue::object();
  inputs.add("J", JsonValue::number(o.coupling_re));
  inputs.add("z", JsonValue::complex_pair(Complex(o.z_re, o.z_im)));
  inputs.add("sites", JsonValue::integer(static_cast<long long>(o.sites)));
  emit("trotter", std::move(inputs), trotter_report_json(rep), pass, tol);
  return pass ? 0 : 1;
}

int run_xxz_match(const Options& o, double tol) {
  const Complex u(o.u_re, o.u_im);
  const CorrespondenceReport at_u = correspondence_residual(o.coupling_re, u);
  const CorrespondenceReport at_half = correspondence_residual(o.coupling_re, u / 2.0);
  const double ratio = at_half.residual / at_u.residual;
  // The fitted residual stays below 10 |eps|^2 over the supported range.
  const bool pass = at_u.residual <= 10.0 * std::norm(at_u.epsilon);
  JsonValue inputs = JsonValue::object();
  inputs.add("J", JsonValue::number(o.coupling_re));
  inputs.add("u", JsonValue::complex_pair(u));
  emit("xxz-match", std::move(inputs), correspondence_report_json(at_u, ratio), pass, tol);
  return pass ? 0 : 1;
}

int run_rtt_check(const Options& o, double tol) {
  const Complex lambda(o.lambda_re, o.lambda_im);
  const Complex mu(o.mu_re, o.mu_im);
  JsonValue results = JsonValue::object();
  TConvention conv = TConvention::exp_lambda_gamma;
  if (o.convention == "auto") {
    const std::vector<std::pair<Complex, Complex>> pairs = {
        {lambda, mu}, {lambda + 0.4, mu + 0.1}, {lambda + 0.8, mu + 0.3}};
    const ConventionSearchReport search = convention_search(o.gamma, pairs);
    results.add("search", convention_report_json(search));
    if (!search.winner) {
      results.add("residual", JsonValue::string("undefined"));
      JsonValue inputs = JsonValue::object();
      inputs.add("gamma", JsonValue::number(o.gamma));
      emit("rtt-check", std::move(inputs), std::move(results), false, tol);
      return 1;
    }
    conv = *search.winner;
  } else {
    const auto parsed = convention_from_string(o.convention);
    if (!parsed) throw std::invalid_argument("unknown convention '" + o.convention + "'");
    conv = *parsed;
  }
  const double residual = rtt_l_residual(o.gamma, lambda, mu, conv);
  results.add("convention", JsonValue::string(to_string(conv)));
  results.add("residual", JsonValue::number(residual));
  JsonValue inputs = JsonValue::object();
  inputs.add("gamma", JsonValue::number(o.gamma));
  inputs.add("lambda", JsonValue::complex_pair(lambda));
  inputs.add("mu", JsonValue::complex_pair(mu));
  const bool pass = residual <= tol;
  emit("rtt-check", std::move(inputs), std::move(results), pass, tol);
  return pass ? 0 : 1;
}

int run_uqsl2_verify(const Options& o, double tol) {
  const UqSl2Rep rep = standard_rep(o.gamma);
  const double relations = relations_residual(rep);
  const UqStarReport star = star_check(rep);
  const std::vector<std::pair<Complex, Complex>> pairs = {{0.9, 0.4}, {1.3, 0.2}, {0.5, 0.1}};
  const ConventionSearchReport search = convention_search(o.gamma, pairs);
  double winner_worst = 0.0;
  if (search.winner) {
    for (std::size_t ci = 0; ci < kAllConventions.size(); ++ci)
      if (kAllConventions[ci] == *search.winner)
        for (double r : search.table[ci]) winner_worst = std::max(winner_worst, r);
  }

  JsonValue star_json = JsonValue::object();
  star_json.add("twisted_residual", JsonValue::number(star.twisted_residual));
  star_json.add("hopf_residual", JsonValue::number(star.hopf_residual));
  star_json.add("dev_x_plus", JsonValue::number(star.dev_x_plus));
  star_json.add("dev_x_minus", JsonValue::number(star.dev_x_minus));
  star_json.add("dev_k", JsonValue::number(star.dev_k));

  JsonValue results = JsonValue::object();
  results.add("relations_residual", JsonValue::number(relations));
  results.add("star", std::move(star_json));
  results.add("conventions", convention_report_json(search));
  results.add("winner_max_residual", JsonValue::number(winner_worst));

  const bool pass = relations <= tol && star.twisted_residual <= tol &&
                    search.winner.has_value() && winner_worst <= tol;
  JsonValue inputs = JsonValue::object();
  inputs.add("gamma", JsonValue::number(o.gamma));
  emit("uqsl2-verify", std::move(inputs), std::move(results), pass, tol);
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;

  CLI::App app{"numerical checks for integrable vertex models and spin chains"};
  app.require_subcommand(1);

  const auto add_family_flags = [&](CLI::App* cmd) {
    cmd->add_option("--family", o.family, "six-vertex | xxz-first-order | gauge-six-vertex");
    cmd->add_option("--input", o.input, "tensor or family JSON file");
    cmd->add_option("--alpha,--alpha-re", o.alpha_re, "six-vertex anisotropy (real part)");
    cmd->add_option("--alpha-im", o.alpha_im, "six-vertex anisotropy (imaginary part)");
    cmd->add_option("--J,--J-re", o.coupling_re, "coupling (real part)");
    cmd->add_option("--J-im", o.coupling_im, "coupling (imaginary part)");
    cmd->add_option("--gamma", o.gamma, "gauge-family angle, q = exp(i gamma)");
  };

  CLI::App* ybe = app.add_subcommand("ybe-check", "Yang-Baxter residual for a family");
  add_family_flags(ybe);
  ybe->add_option("--lambda,--lambda-re", o.lambda_re);
  ybe->add_option("--lambda-im", o.lambda_im);
  ybe->add_option("--mu,--mu-re", o.mu_re);
  ybe->add_option("--mu-im", o.mu_im);
  ybe->add_option("--grid-min", o.grid_min, "real grid of (lambda, mu) values");
  ybe->add_option("--grid-max", o.grid_max);
  ybe->add_option("--grid-steps", o.grid_steps);

  CLI::App* cls = app.add_subcommand("classify-star", "star classification of a tensor file");
  cls->add_option("--input", o.input, "tensor JSON file")->required();
  cls->add_option("--tol", o.tol, "residual tolerance");

  CLI::App* tr = app.add_subcommand("transfer", "partition function of a periodic lattice");
  add_family_flags(tr);
  tr->add_option("--u,--u-re", o.u_re, "spectral point (real part)");
  tr->add_option("--u-im", o.u_im);
  tr->add_option("--sites", o.sites, "columns N")->required();
  tr->add_option("--rows", o.rows, "rows M")->required();
  tr->add_flag("--brute-force", o.brute_force, "cross-check against the configuration sum");

  CLI::App* trot = app.add_subcommand("trotter", "product-formula convergence order");
  trot->add_option("--J", o.coupling_re)->required();
  trot->add_option("--z-re", o.z_re);
  trot->add_option("--z-im", o.z_im);
  trot->add_option("--sites", o.sites)->required();
  trot->add_option("--steps", o.steps, "comma-separated step counts, default 8,16,32,64");

  CLI::App* xxz = app.add_subcommand("xxz-match", "exp-form vs sinh-form weight match");
  xxz->add_option("--J", o.coupling_re)->required();
  xxz->add_option("--u,--u-re", o.u_re)->required();
  xxz->add_option("--u-im", o.u_im);

  CLI::App* rtt = app.add_subcommand("rtt-check", "exchange relation for the L-operator T");
  rtt->add_option("--gamma", o.gamma)->required();
  rtt->add_option("--lambda,--lambda-re", o.lambda_re)->required();
  rtt->add_option("--lambda-im", o.lambda_im);
  rtt->add_option("--mu,--mu-re", o.mu_re)->required();
  rtt->add_option("--mu-im", o.mu_im);
  rtt->add_option("--convention", o.convention, "auto (search) or a convention name");

  CLI::App* uq = app.add_subcommand("uqsl2-verify", "standard representation checks");
  uq->add_option("--gamma", o.gamma)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::fprintf(stderr, "yblab: %s\n", e.what());
    return 2;
  }

  try {
    const double tol = resolve_tol();
    if (ybe->parsed()) return run_ybe_check(o, tol);
    if (cls->parsed()) return run_classify_star(o, tol);
    if (tr->parsed()) return run_transfer(o, tol);
    if (trot->parsed()) return run_trotter(o, tol);
    if (xxz->parsed()) return run_xxz_match(o, tol);
    if (rtt->parsed()) return run_rtt_check(o, tol);
    if (uq->parsed()) return run_uqsl2_verify(o, tol);
    std::fprintf(stderr, "yblab: no subcommand\n");
    return 2;
  } catch (const size_guard_error& e) {
    std::fprintf(stderr, "yblab: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "yblab: %s\n", e.what());
    return 2;
  }
}
