// Command-line front end for the hermsymp library.
//
// Exit codes: 0 ok, 1 internal error, 2 invalid input, 3 eigenvalue too close
// to -1, 4 non-integer triple index, 5 torus sweep disagreement, 6 rank
// collapse, 7 intersection/eigenvalue count mismatch, 8 branch cut, 9
// eigensplitting failure, 10 subspace is not a graph, 11 Fox complex failure.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hermsymp/hermsymp.hpp"
#include "hermsymp/io.hpp"

namespace {

using hermsymp::ErrorCode;
using Json = nlohmann::json;
namespace knot = hermsymp::knot;

constexpr int kSweepMismatch = 5;

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::validation:
    case ErrorCode::out_of_arc:
    case ErrorCode::condition_failed: return 2;
    case ErrorCode::eigenvalue_ambiguity: return 3;
    case ErrorCode::non_integer_sum: return 4;
    case ErrorCode::rank_collapse: return 6;
    case ErrorCode::intersection_mismatch: return 7;
    case ErrorCode::branch_cut: return 8;
    case ErrorCode::splitting_failure: return 9;
    case ErrorCode::not_a_graph: return 10;
    case ErrorCode::non_complex: return 11;
  }
  return 1;
}

int report_error(std::string_view kind, const std::string& message, int code) {
  std::cerr << Json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump() << '\n';
  return code;
}

std::string fmt(double x) {
  if (std::abs(x) < 1e-14) x = 0.0;  // also folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string fmt(std::complex<double> z) {
  const std::string im = fmt(z.imag());
  return fmt(z.real()) + (im.front() == '-' ? "" : "+") + im + "i";
}

struct Options {
  hermsymp::Tolerances tol;
  bool json = false;
};

void emit(const Options& opt, const Json& j, const std::string& text) {
  if (opt.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

hermsymp::SpacePtr<double> load_space(const std::string& path, const Options& opt) {
  return hermsymp::io::space_from_json(hermsymp::io::read_json_file(path), opt.tol);
}

hermsymp::Lagrangian<double> load_lagrangian(const hermsymp::SpacePtr<double>& space, const std::string& path) {
  return hermsymp::io::lagrangian_from_json(space, hermsymp::io::read_json_file(path));
}

int cmd_validate(const Options& opt, const std::string& space_path, const std::vector<std::string>& lagrangians) {
  const Json j = hermsymp::io::read_json_file(space_path);
  if (!j.is_object() || !j.contains("gram") || !j.contains("gamma")) {
    throw hermsymp::ValidationError("space needs 'gram' and 'gamma'");
  }
  const auto gram = hermsymp::io::matrix_from_json(j["gram"], "gram");
  const auto gamma = hermsymp::io::matrix_from_json(j["gamma"], "gamma");
  const auto report = hermsymp::validate_space<double>(gram, gamma, opt.tol);
  Json out{{"gamma_square_residual", report.gamma_square_residual},
           {"unitarity_residual", report.unitarity_residual},
           {"signature", report.signature()},
           {"gamma_square_ok", report.gamma_square_ok},
           {"unitary_ok", report.unitary_ok},
           {"signature_ok", report.signature_ok},
           {"passed", report.passed()}};
  std::ostringstream text;
  text << "gamma_square: " << (report.gamma_square_ok ? "pass" : "fail") << " (residual "
       << fmt(report.gamma_square_residual) << ")\n"
       << "unitary: " << (report.unitary_ok ? "pass" : "fail") << " (residual " << fmt(report.unitarity_residual)
       << ")\n"
       << "signature: " << (report.signature_ok ? "pass" : "fail") << " (" << report.signature() << ")\n";
  if (report.passed()) {
    const auto space = hermsymp::make_space<double>(gram, gamma, opt.tol);
    Json ls = Json::array();
    for (const auto& path : lagrangians) {
      load_lagrangian(space, path);
      ls.push_back(path);
      text << "lagrangian " << path << ": pass\n";
    }
    out["lagrangians"] = ls;
  }
  text << "result: " << (report.passed() ? "pass" : "fail") << '\n';
  emit(opt, out, text.str());
  return report.passed() ? 0 : 2;
}

int cmd_m(const Options& opt, const std::string& space_path, const std::string& v_path, const std::string& w_path) {
  const auto space = load_space(space_path, opt);
  const auto v = load_lagrangian(space, v_path);
  const auto w = load_lagrangian(space, w_path);
  const auto m = hermsymp::m_invariant(v, w);
  Json eig = Json::array();
  std::ostringstream text;
  text << "m: " << fmt(m.value) << "\nintersection_dim: " << m.intersection_dim << "\neigenvalues:";
  for (const auto& lambda : m.eigenvalues) {
    eig.push_back({{"re", std::stod(fmt(lambda.real()))}, {"im", std::stod(fmt(lambda.imag()))}});
    text << ' ' << fmt(lambda);
  }
  text << '\n';
  emit(opt, {{"m", std::stod(fmt(m.value))}, {"intersection_dim", m.intersection_dim}, {"eigenvalues", eig}},
       text.str());
  return 0;
}

int cmd_triple(const Options& opt, const std::string& space_path, const std::string& u_path,
               const std::string& v_path, const std::string& w_path) {
  const auto space = load_space(space_path, opt);
  const auto u = load_lagrangian(space, u_path);
  const auto v = load_lagrangian(space, v_path);
  const auto w = load_lagrangian(space, w_path);
  const auto sigma = hermsymp::triple_index(u, v, w);
  emit(opt, {{"triple_index", sigma.value}, {"sum", std::stod(fmt(sigma.sum))}},
       "triple_index: " + std::to_string(sigma.value) + "\n");
  return 0;
}

int cmd_reduce(const Options& opt, const std::string& source_path, const std::string& target_path,
               const std::string& rel_path, const std::string& w_path) {
  const auto source = load_space(source_path, opt);
  const auto target = load_space(target_path, opt);
  const auto rel = hermsymp::io::relation_from_json(source, target, hermsymp::io::read_json_file(rel_path));
  const auto w = load_lagrangian(source, w_path);
  std::cout << hermsymp::io::lagrangian_to_json(hermsymp::reduce(rel, w)).dump(2) << '\n';
  return 0;
}

int cmd_compose(const Options& opt, const std::vector<std::string>& paths) {
  const auto h0 = load_space(paths[0], opt);
  const auto h1 = load_space(paths[1], opt);
  const auto h2 = load_space(paths[2], opt);
  const auto rel1 = hermsymp::io::relation_from_json(h0, h1, hermsymp::io::read_json_file(paths[3]));
  const auto rel2 = hermsymp::io::relation_from_json(h1, h2, hermsymp::io::read_json_file(paths[4]));
  std::cout << hermsymp::io::relation_to_json(hermsymp::compose(rel1, rel2)).dump(2) << '\n';
  return 0;
}

int cmd_torus_sweep(const Options& opt, const std::vector<double>& args) {
  const auto as_int = [](double x) {
    if (x != std::floor(x)) throw hermsymp::ValidationError("a, b, A, B must be integers");
    return static_cast<std::int64_t>(x);
  };
  const std::int64_t a = as_int(args[0]), b = as_int(args[1]), big_a = as_int(args[2]), big_b = as_int(args[3]);
  const double t_min = args[4], t_max = args[5];
  if (args[6] < 1 || args[6] != std::floor(args[6])) throw hermsymp::ValidationError("steps must be an integer >= 1");
  if (!(t_min > 0) || !(t_min <= t_max)) throw hermsymp::ValidationError("need 0 < t_min <= t_max");
  const auto steps = static_cast<std::size_t>(args[6]);

  const auto report =
      hermsymp::torus_m_sweep<double>(a, b, big_a, big_b, hermsymp::linspace(t_min, t_max, steps), opt.tol);
  if (opt.json) {
    Json rows = Json::array();
    for (const auto& r : report.rows) {
      rows.push_back({{"t", r.t}, {"m_closed", r.m_closed}, {"m_generic", r.m_generic}, {"delta", r.delta}});
    }
    std::cout << Json{{"rows", rows}, {"varies", report.varies}}.dump(2) << '\n';
  } else {
    std::cout << "t,m_closed,m_generic,delta\n";
    for (const auto& r : report.rows) {
      std::cout << fmt(r.t) << ',' << fmt(r.m_closed) << ',' << fmt(r.m_generic) << ',' << fmt(r.delta) << '\n';
    }
  }
  if (!(report.max_delta < 1e-9)) {
    return report_error("sweep_mismatch", "closed form and generic m differ by " + fmt(report.max_delta),
                        kSweepMismatch);
  }
  return 0;
}

knot::GluingMatrix gluing_from(const std::vector<std::int64_t>& f) {
  if (f.empty()) return knot::trefoil_example_gluing();
  return knot::GluingMatrix(f[0], f[1], f[2], f[3]);
}

int cmd_trefoil(const Options& opt, const std::string& t_text, const std::vector<std::int64_t>& f_entries) {
  const auto f = gluing_from(f_entries);
  const auto t = knot::parse_rational(t_text);
  const auto rep = knot::trefoil_arc_point(t);
  const auto h = knot::torus_twisted_cohomology(rep, opt.tol.rank, opt.tol.alg);
  const bool condition = knot::mapping_torus_condition(rep, f);
  const auto row = knot::mapping_torus_row(rep, f);
  using knot::format_rational;

  Json out{{"t", format_rational(t)},
           {"phi", format_rational(rep.phi)},
           {"psi", format_rational(rep.psi)},
           {"cohomology", {h.h0, h.h1, h.h2}},
           {"condition", condition},
           {"condition_row", {format_rational(row[0]), format_rational(row[1])}}};
  std::ostringstream text;
  text << "t: " << format_rational(t) << "\nphi: " << format_rational(rep.phi) << "\npsi: "
       << format_rational(rep.psi) << "\ncohomology: " << h.h0 << ' ' << h.h1 << ' ' << h.h2
       << "\ncondition: " << (condition ? "true" : "false") << " (" << format_rational(row[0]) << ' '
       << format_rational(row[1]) << ")\n";
  if (condition) {
    const auto cs = knot::chern_simons(rep, f);
    out["mn"] = {format_rational(cs.m), format_rational(cs.n)};
    out["cs"] = format_rational(cs.value);
    text << "mn: " << format_rational(cs.m) << ' ' << format_rational(cs.n) << "\ncs: "
         << format_rational(cs.value) << '\n';
  }
  emit(opt, out, text.str());
  return 0;
}

int cmd_rho_diff(const Options& opt, const std::string& t1_text, const std::string& t2_text,
                 const std::vector<std::int64_t>& f_entries) {
  const auto f = gluing_from(f_entries);
  const auto rep1 = knot::trefoil_arc_point(knot::parse_rational(t1_text));
  const auto rep2 = knot::trefoil_arc_point(knot::parse_rational(t2_text));
  const auto cs1 = knot::chern_simons(rep1, f).value;
  const auto cs2 = knot::chern_simons(rep2, f).value;
  const auto forward = knot::rho_difference_mod_z(rep1, rep2, f);
  const auto backward = knot::rho_difference_mod_z(rep2, rep1, f);
  using knot::format_rational;
  emit(opt,
       {{"cs1", format_rational(cs1)},
        {"cs2", format_rational(cs2)},
        {"rho_diff", format_rational(forward)},
        {"rho_diff_swapped", format_rational(backward)}},
       "cs1: " + format_rational(cs1) + "\ncs2: " + format_rational(cs2) + "\nrho_diff: " +
           format_rational(forward) + "  # 4(cs1 - cs2) mod Z\nrho_diff_swapped: " + format_rational(backward) +
           "  # 4(cs2 - cs1) mod Z\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermitian symplectic calculus: Lagrangians, m-invariants, Maslov triple indices"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--tol-alg", opt.tol.alg, "tolerance for algebraic identities")->capture_default_str();
  app.add_option("--tol-rank", opt.tol.rank, "singular-value cutoff for ranks")->capture_default_str();
  app.add_flag("--json", opt.json, "write JSON to stdout");

  std::string space_path, v_path, w_path, u_path, target_path, rel_path;
  std::vector<std::string> extra;

  auto* validate = app.add_subcommand("validate", "check a space (and optional Lagrangians)");
  validate->add_option("space", space_path)->required();
  validate->add_option("lagrangians", extra);

  auto* m = app.add_subcommand("m", "m(V, W) for two Lagrangians");
  m->add_option("space", space_path)->required();
  m->add_option("V", v_path)->required();
  m->add_option("W", w_path)->required();

  auto* triple = app.add_subcommand("triple", "Maslov triple index of U, V, W");
  triple->add_option("space", space_path)->required();
  triple->add_option("U", u_path)->required();
  triple->add_option("V", v_path)->required();
  triple->add_option("W", w_path)->required();

  auto* reduce = app.add_subcommand("reduce", "propagate a Lagrangian of the source through a relation");
  reduce->add_option("source", space_path)->required();
  reduce->add_option("target", target_path)->required();
  reduce->add_option("relation", rel_path)->required();
  reduce->add_option("W", w_path)->required();

  std::vector<std::string> compose_paths;
  auto* compose = app.add_subcommand("compose", "compose relations H0 -> H1 -> H2");
  compose->add_option("files", compose_paths, "H0 H1 H2 rel01 rel12")->required()->expected(5);

  std::vector<double> sweep_args;
  auto* sweep = app.add_subcommand("torus-sweep", "m(V_X, V_Y) on the flat torus over a range of metrics");
  sweep->add_option("args", sweep_args, "a b A B t_min t_max steps")->required()->expected(7)->allow_extra_args(false);
  sweep->positionals_at_end();

  std::string t_text, t1_text, t2_text;
  std::vector<std::int64_t> gluing;
  auto* trefoil = app.add_subcommand("trefoil", "representation, cohomology and Chern-Simons at an arc point");
  trefoil->add_option("--t", t_text, "arc parameter p/q")->required();
  trefoil->add_option("--f", gluing, "gluing matrix a b c d (row-major)")->expected(4);

  auto* rho = app.add_subcommand("rho-diff", "4(cs1 - cs2) mod Z for two arc points");
  rho->add_option("--t1", t1_text)->required();
  rho->add_option("--t2", t2_text)->required();
  rho->add_option("--f", gluing, "gluing matrix a b c d (row-major)")->expected(4);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("validation", e.what(), 2);
  }

  try {
    if (*validate) return cmd_validate(opt, space_path, extra);
    if (*m) return cmd_m(opt, space_path, v_path, w_path);
    if (*triple) return cmd_triple(opt, space_path, u_path, v_path, w_path);
    if (*reduce) return cmd_reduce(opt, space_path, target_path, rel_path, w_path);
    if (*compose) return cmd_compose(opt, compose_paths);
    if (*sweep) return cmd_torus_sweep(opt, sweep_args);
    if (*trefoil) return cmd_trefoil(opt, t_text, gluing);
    if (*rho) return cmd_rho_diff(opt, t1_text, t2_text, gluing);
  } catch (const hermsymp::Error& e) {
    return report_error(hermsymp::to_string(e.code()), e.what(), exit_code(e.code()));
  } catch (const std::exception& e) {
    return report_error("internal", e.what(), 1);
  }
  return 1;
}
