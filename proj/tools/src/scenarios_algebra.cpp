// group-demo, continuum-limit, two-level and dirac-verify.
#include <cmath>
#include <numbers>
#include <sstream>

#include "qcarrier/action_group.hpp"
#include "qcarrier/continuum.hpp"
#include "qcarrier/dirac.hpp"
#include "qcarrier/pse.hpp"
#include "qcarrier/random.hpp"
#include "qcarrier/spinor_io.hpp"
#include "scenarios.hpp"

namespace qcarrier::cli::detail {

namespace {

CbitHistory random_history(Rng& rng, int max_length) {
  std::vector<int> labels(static_cast<std::size_t>(rng.uniform_int(1, max_length)));
  for (auto& l : labels) l = rng.bit();
  return cbit_history(labels);
}

// Matrix product of the history, later actions on the left.
TwoLevelOperator history_product(const CbitHistory& h) {
  auto op = TwoLevelOperator::identity();
  for (const auto& a : h.params()) op = compose(a.op(), op);
  return op;
}

CbitAction folded_action(const CbitHistory& h) {
  CbitAction acc(1);
  for (const auto& a : h.params()) acc = cbit_compose(a, acc);
  return acc;
}

std::string fmt(double x) { return format_double(x); }

}  // namespace

void run_group_demo(const ScenarioContext& ctx, ScenarioResult& result) {
  const auto group = ctx.root.section("group");
  const auto pairs = group.count("history_pairs");
  const auto max_length = group.count("max_length");
  const auto circle_pairs = group.count("circle_pairs");
  Rng rng(ctx.seed());

  // Cayley table of {U0, U1}.
  std::ostringstream cayley;
  cayley << "alpha2,alpha1,product_alpha,matrix_deviation\n";
  double cayley_dev = 0.0;
  for (int a2 : {0, 1}) {
    for (int a1 : {0, 1}) {
      const auto product = cbit_compose(CbitAction(a2), CbitAction(a1));
      const double dev = max_entry_deviation(
          compose(CbitAction(a2).op(), CbitAction(a1).op()), product.op());
      cayley_dev = std::max(cayley_dev, dev);
      cayley << a2 << ',' << a1 << ',' << product.alpha() << ',' << fmt(dev) << '\n';
    }
  }
  const CbitAction identity(1);
  const CbitAction flip(0);
  double axiom_dev = max_entry_deviation(identity.op(), TwoLevelOperator::identity());
  axiom_dev = std::max(axiom_dev, max_entry_deviation(compose(flip.op(), flip.op()),
                                                      TwoLevelOperator::identity()));
  result.check("cayley_table_max_deviation", cayley_dev, 0.0, "eq");
  result.check("group_axioms_max_deviation", axiom_dev, 0.0, "eq");
  ctx.write(result, "series_cayley.csv", cayley.str());

  // Random history pairs: chained runs, concatenation and the composition law.
  long mismatches = 0;
  double law_dev = 0.0;
  for (std::int64_t i = 0; i < pairs; ++i) {
    const auto h1 = random_history(rng, static_cast<int>(max_length));
    const auto h2 = random_history(rng, static_cast<int>(max_length));
    const int x0 = rng.bit();
    const auto joined = h1.then(h2);
    const int chained = run_history(h2, run_history(h1, x0).final_state).final_state;
    if (run_history(joined, x0).final_state != chained) ++mismatches;
    if (cbit_apply(folded_action(joined), x0) != chained) ++mismatches;
    law_dev = std::max(law_dev, max_entry_deviation(history_product(joined),
                                                    folded_action(joined).op()));
  }
  result.check("history_pair_mismatches", static_cast<double>(mismatches), 0.0, "eq");
  result.check("composition_law_max_deviation", law_dev, 0.0, "eq");

  // Circle regime: U = alpha I + beta X with alpha^2 + beta^2 = 1.
  std::ostringstream circle;
  circle << "alpha2,beta2,alpha1,beta1,defect,predicted_defect,unitarity_deviation_2\n";
  double defect_dev = 0.0;
  long unitary_misses = 0;
  double inverse_dev = 0.0;
  long inverse_checked = 0;
  for (std::int64_t i = 0; i < circle_pairs; ++i) {
    const double t2 = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double t1 = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const CircleAction a2{std::cos(t2), std::sin(t2)};
    const CircleAction a1{std::cos(t1), std::sin(t1)};
    const auto comp = circle_compose_defect(a2, a1);
    const double predicted = predicted_circle_defect(a2, a1);
    defect_dev = std::max(defect_dev, std::abs(comp.defect - predicted));
    const double udev = unitarity_deviation(a2.op());
    if (std::abs(a2.alpha * a2.beta) > 1e-3 && !(udev > 1e-6)) ++unitary_misses;
    // Inverse norm measured by applying the inverse to a Cbit, compared
    // relative to max(1, norm) since it diverges on the singular diagonal.
    if (std::abs(a2.alpha * a2.alpha - a2.beta * a2.beta) > kSingularTolerance) {
      const double formula = circle_inverse_norm(a2);
      const double measured = apply(circle_inverse(a2).op(), Qubit::ket(1)).norm();
      inverse_dev =
          std::max(inverse_dev, std::abs(measured - formula) / std::max(1.0, formula));
      ++inverse_checked;
    }
    circle << fmt(a2.alpha) << ',' << fmt(a2.beta) << ',' << fmt(a1.alpha) << ','
           << fmt(a1.beta) << ',' << fmt(comp.defect) << ',' << fmt(predicted) << ','
           << fmt(udev) << '\n';
  }
  result.check("circle_defect_max_deviation", defect_dev, 1e-12);
  result.check("circle_non_unitarity_misses", static_cast<double>(unitary_misses), 0.0,
               "eq");
  result.check("circle_inverse_norm_max_scaled_deviation", inverse_dev, 1e-10);
  result.details["circle_inverse_draws_checked"] = inverse_checked;
  ctx.write(result, "series_circle_defect.csv", circle.str());
}

void run_continuum_limit(const ScenarioContext& ctx, ScenarioResult& result) {
  const auto cont = ctx.root.section("continuum");
  const auto xi_bars = cont.numbers("xi_bars");
  const auto history_length = cont.integer("history_length");
  const auto composition_pairs = cont.count("composition_pairs");
  const auto timeline = ctx.root.section("timeline");
  const auto timeline_n = timeline.count("n");
  const double timeline_xi = timeline.positive("xi_bar");
  if (history_length < 0) cont.fail("history_length", "must be >= 0");
  for (double x : xi_bars) {
    if (!(x > 0.0)) cont.fail("xi_bars", "entries must be > 0");
  }
  if (xi_bars.size() < 2) cont.fail("xi_bars", "needs at least two entries");

  std::ostringstream residuals;
  residuals << "xi_bar,residual,order\n";
  std::vector<double> r;
  for (double x : xi_bars) r.push_back(finite_difference_residual(history_length, x));
  double worst_order_dev = 0.0;
  Json orders = Json::array();
  for (std::size_t i = 0; i < r.size(); ++i) {
    residuals << fmt(xi_bars[i]) << ',' << fmt(r[i]) << ',';
    if (i > 0) {
      const double order = std::log(r[i - 1] / r[i]) / std::log(xi_bars[i - 1] / xi_bars[i]);
      worst_order_dev = std::max(worst_order_dev, std::abs(order - 1.0));
      orders.push_back(order);
      residuals << fmt(order);
    }
    residuals << '\n';
  }
  result.details["measured_orders"] = orders;
  result.check("residual_order_max_deviation_from_1", worst_order_dev, 0.1);
  ctx.write(result, "series_residual.csv", residuals.str());

  Rng rng(ctx.seed());
  double comp_dev = 0.0;
  for (std::int64_t i = 0; i < composition_pairs; ++i) {
    const double p1 = rng.uniform(-10.0, 10.0);
    const double p2 = rng.uniform(-10.0, 10.0);
    comp_dev = std::max(comp_dev, max_entry_deviation(compose(exp_form(p2), exp_form(p1)),
                                                      exp_form(p1 + p2)));
  }
  result.check("exp_form_composition_max_deviation", comp_dev, 1e-12);

  const std::string csv =
      emit_timeline(static_cast<std::size_t>(timeline_n), timeline_xi, ctx.seed());
  ctx.write(result, "series_timeline.csv", csv);
}

void run_two_level(const ScenarioContext& ctx, ScenarioResult& result) {
  const auto gen = ctx.root.section("generator");
  const Generator g{gen.number("mu"), gen.number("nu")};
  const auto init = ctx.root.section("initial");
  if (init.string("type") != "qubit") init.fail("type", "must be \"qubit\" for two-level");
  Qubit psi0{init.complex_value("a"), init.complex_value("b")};
  if (!(psi0.norm() > 0.0)) init.fail("a", "and initial.b must not both vanish");
  psi0 = psi0.normalized();
  const auto schedule = ctx.root.section("schedule");
  const double t_final = schedule.number("t_final");
  const double dt = schedule.positive("dt");
  std::size_t steps = 0;
  try {
    steps = step_count(t_final, dt);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("schedule: ") + e.what());
  }

  const double g0 = mean_generator(psi0, g);
  double mean_dev = 0.0;
  double norm_dev = 0.0;
  double rabi_dev = 0.0;
  double chain_dev = 0.0;
  Qubit chained = psi0;
  std::ostringstream series;
  series << "t,re_a,im_a,re_b,im_b,p_x0,p_x0bar,mean_generator\n";
  for (std::size_t k = 0; k <= steps; ++k) {
    const double tau = static_cast<double>(k) * dt;
    const Qubit psi = evolve_two_level(psi0, g, tau);
    if (k > 0) chained = evolve_two_level(chained, g, dt);
    mean_dev = std::max(mean_dev, std::abs(mean_generator(psi, g) - g0));
    norm_dev = std::max(norm_dev, std::abs(psi.norm() - 1.0));
    chain_dev = std::max(chain_dev, distance(psi, chained));
    // Rabi closed form on the first component: cos(nu t) a0 - i sin(nu t) b0.
    const complex rabi = std::cos(g.nu * tau) * psi0.a -
                         complex{0.0, 1.0} * std::sin(g.nu * tau) * psi0.b;
    rabi_dev = std::max(rabi_dev, std::abs(std::norm(psi.a) - std::norm(rabi)));
    series << fmt(tau) << ',' << fmt(psi.a.real()) << ',' << fmt(psi.a.imag()) << ','
           << fmt(psi.b.real()) << ',' << fmt(psi.b.imag()) << ',' << fmt(std::norm(psi.a))
           << ',' << fmt(std::norm(psi.b)) << ',' << fmt(mean_generator(psi, g)) << '\n';
  }
  result.details["eigenvalues"] = Json::array({g.eigenvalue(+1), g.eigenvalue(-1)});
  result.check("mean_generator_max_drift", mean_dev, 1e-11);
  result.check("norm_max_drift", norm_dev, 1e-12);
  result.check("rabi_probability_max_deviation", rabi_dev, 1e-12);
  result.check("stepwise_vs_direct_max_distance", chain_dev, 1e-10);
  ctx.write(result, "series_two_level.csv", series.str());
}

void run_dirac_verify(const ScenarioContext& ctx, ScenarioResult& result) {
  const auto dirac = ctx.root.section("dirac");
  const auto p = dirac.numbers("p");
  if (p.size() != 3) dirac.fail("p", "must have three components");
  DiracParams params{.m = dirac.number("m"),
                     .c = dirac.number("c"),
                     .p = {p[0], p[1], p[2]},
                     .h0 = dirac.number_or("h0", 1.0)};
  try {
    params.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("dirac: ") + e.what());
  }
  const auto draws = dirac.count("draws");
  const double e = params.energy();

  result.details["energy"] = e;
  result.check("square_check_deviation", square_check(params), 1e-12 * e * e);

  const auto report_json = [](const AlgebraReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"relation", c.name},
                        {"max_deviation", c.max_deviation},
                        {"pass", c.pass}});
    }
    return checks;
  };
  const auto ab = verify_alpha_beta_algebra();
  const auto cl = verify_clifford_algebra();
  result.details["alpha_beta_relations"] = report_json(ab);
  result.details["clifford_relations"] = report_json(cl);
  result.check("alpha_beta_max_deviation", ab.all_pass() ? ab.max_deviation() : 1.0, 0.0,
               "eq");
  result.check("clifford_pairs_checked", static_cast<double>(cl.checks.size()), 10.0, "eq");
  result.check("clifford_max_deviation", cl.all_pass() ? cl.max_deviation() : 1.0, 0.0,
               "eq");
  const auto printed = verify_printed_gamma2();
  result.details["printed_gamma2"] = {
      {"form", "-Y(x)Y"},
      {"clifford_consistent", printed.all_pass()},
      {"max_deviation", printed.max_deviation()},
      {"adopted_form", "i Y(x)Y"}};

  const Qubit up = Qubit::ket(1);
  for (int lambda : {+1, -1}) {
    const std::string name = lambda > 0 ? "plane_wave_residual_positive"
                                        : "plane_wave_residual_negative";
    try {
      const auto s = plane_wave_solution(lambda, params, up, 0.0);
      result.check(name, eigen_residual(params, s), 1e-10);
    } catch (const SingularBranch&) {
      result.details[name] = "singular branch at rest; skipped";
    }
  }

  Rng rng(ctx.seed());
  double square_rel = 0.0;
  double spectrum_rel = 0.0;
  double residual_max = 0.0;
  long singular = 0;
  std::ostringstream series;
  series << "draw,m,c,px,py,pz,energy,ev0,ev1,ev2,ev3,square_deviation\n";
  for (std::int64_t i = 0; i < draws; ++i) {
    const DiracParams d{.m = rng.uniform(0.1, 3.0),
                        .c = rng.uniform(0.5, 2.0),
                        .p = {rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)}};
    const double ed = d.energy();
    const double sq = square_check(d);
    square_rel = std::max(square_rel, sq / (ed * ed));
    const auto ev = hamiltonian_spectrum(d);
    const std::array<double, 4> expected{-ed, -ed, ed, ed};
    for (std::size_t k = 0; k < 4; ++k) {
      spectrum_rel = std::max(spectrum_rel, std::abs(ev[k] - expected[k]) / ed);
    }
    const Qubit phi = rng.qubit();
    for (int lambda : {+1, -1}) {
      try {
        residual_max = std::max(
            residual_max, eigen_residual(d, plane_wave_solution(lambda, d, phi, 0.0)));
      } catch (const SingularBranch&) {
        ++singular;
      }
    }
    series << i << ',' << fmt(d.m) << ',' << fmt(d.c) << ',' << fmt(d.p[0]) << ','
           << fmt(d.p[1]) << ',' << fmt(d.p[2]) << ',' << fmt(ed) << ',' << fmt(ev[0]) << ','
           << fmt(ev[1]) << ',' << fmt(ev[2]) << ',' << fmt(ev[3]) << ',' << fmt(sq) << '\n';
  }
  result.details["singular_branches_skipped"] = singular;
  result.check("random_square_check_max_relative", square_rel, 1e-12);
  result.check("random_spectrum_max_relative_deviation", spectrum_rel, 1e-10);
  result.check("random_plane_wave_max_residual", residual_max, 1e-10);
  ctx.write(result, "series_dirac_draws.csv", series.str());
}

}  // namespace qcarrier::cli::detail
