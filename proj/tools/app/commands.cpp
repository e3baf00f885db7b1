#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include "nhq/counts_csv.hpp"
#include "nhq/dynamics.hpp"
#include "nhq/linearity.hpp"
#include "nhq/measurement.hpp"
#include "nhq/random.hpp"
#include "nhq/spectral.hpp"
#include "nhq/tolerances.hpp"
#include "nhq/trajectory.hpp"

namespace nhq::cli {

namespace {

const SweepSettings& require_sweep(const RunConfig& config, std::string_view command) {
  if (!config.sweep) throw ConfigError("sweep: required by " + std::string(command));
  return *config.sweep;
}

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

BlochVector pure_bloch(const StateVector& ket2) { return bloch_vector(DensityMatrix::pure(ket2)); }

}  // namespace

SweepTable cmd_spectrum(const RunConfig& config) {
  SweepTable table(
      {"J", "Re_lambda1", "Im_lambda1", "Re_lambda2", "Im_lambda2", "eigenvector_overlap", "regime"});
  for (double j : require_sweep(config, "spectrum").values()) {
    const RegimeReport r = classify_regime(config.params.with_coupling(j));
    table.add_row({j, r.eigenvalues[0].real(), r.eigenvalues[0].imag(), r.eigenvalues[1].real(),
                   r.eigenvalues[1].imag(), r.eigenvector_overlap, std::string(to_string(r.regime))});
  }
  table.add_note("j_ep", format_cell(ep_coupling(config.params)));
  return table;
}

SweepTable cmd_sweep(const RunConfig& config) {
  SweepTable table({"J", "t", "P(+z)", "Pn(+z)"});
  const auto couplings = require_sweep(config, "sweep").values();
  const auto times = config.times();
  const ConfusionMatrix beta = config.beta();
  const DensityMatrix rho0 = DensityMatrix::pure(basis_ket(Level::e, 3));

  for (std::size_t ji = 0; ji < couplings.size(); ++ji) {
    const LindbladModel model = build_three_level_model(config.params.with_coupling(couplings[ji]));
    const auto rhos = evolve_lindblad_on_grid(rho0, model, times, config.time.integrator_dt);
    for (std::size_t k = 0; k < times.size(); ++k) {
      ProbabilityVector p = ProbabilityVector::normalized(
          {rhos[k].population(0), rhos[k].population(1), rhos[k].population(2)});
      if (config.mode == SimulationMode::measured) {
        const DensityMatrix rho(rhos[k].matrix() * (1.0 / rhos[k].trace()));
        const std::uint64_t seed = derive_seed(derive_seed(config.seed, ji), k);
        const CountsRecord rec = simulate_tomography(rho, Axis::z, beta, config.shots, seed);
        p = ibu_correct(rec.frequencies(), beta);
      }
      table.add_row({couplings[ji], times[k], p[1], renormalize_subensemble(p).plus});
    }
  }
  table.add_note("initial_state", "e");
  return table;
}

SweepTable cmd_fpt(const RunConfig& config) {
  SweepTable table({"J", "fpt", "hermitian_ref"});
  const auto rows = fpt_sweep(config.params, require_sweep(config, "fpt").values(), basis_ket(Level::e, 2),
                              config.time.horizon, config.time.dt);
  for (const FptSweepRow& row : rows) {
    Cell fpt = Blank{};
    if (row.result.fpt) fpt = *row.result.fpt;
    table.add_row({row.coupling, fpt, row.result.hermitian_reference});
  }
  table.add_note("initial_state", "e");
  table.add_note("method", rows.empty() ? "" : rows.front().result.method);
  return table;
}

SweepTable cmd_linearity(const RunConfig& config) {
  SweepTable table({"J", "initial_state", "t", "ofs", "ratio_rf_re", "ratio_time_average"});
  const auto couplings = config.couplings();
  const auto times = config.times();
  for (std::size_t ji = 0; ji < couplings.size(); ++ji) {
    const SystemParams p = config.params.with_coupling(couplings[ji]);
    const RenormRatioSeries ratio = renorm_ratio_series(p, times);
    const MeasuredPipeline pipe = config.pipeline(derive_seed(config.seed, ji));
    for (InitialState s : config.initial_states()) {
      const LinearityScanResult scan = linearity_scan(p, s, times, config.mode, pipe);
      for (std::size_t k = 0; k < times.size(); ++k) {
        table.add_row({couplings[ji], std::string(to_string(s)), times[k], scan.ofs[k], ratio.ratio[k],
                       ratio.time_average});
      }
    }
  }
  return table;
}

SweepTable cmd_mixture(const RunConfig& config) {
  SweepTable table({"system", "t", "p_mixture", "p_superposed", "deviation"});
  const auto times = config.times();
  const MeasuredPipeline pipe = config.pipeline(config.seed);
  const MixtureTestResult two = mixture_test_2level(config.params, times, config.mode, pipe);
  const MixtureTestResult three = mixture_test_3level(config.params, times, config.mode, pipe);
  for (const MixtureTestResult* r : {&two, &three}) {
    for (std::size_t k = 0; k < r->times.size(); ++k) {
      table.add_row({std::string(to_string(r->system)), r->times[k], r->p_mixture[k], r->p_superposed[k],
                     r->deviation[k]});
    }
  }
  table.add_note("max_deviation_2lvl", format_cell(two.max_deviation()));
  table.add_note("max_deviation_3lvl", format_cell(three.max_deviation()));
  return table;
}

TrajectoryTables cmd_trajectories(const RunConfig& config) {
  if (config.shots <= 0) throw ConfigError("shots: trajectories needs shots > 0 (number of trajectories)");
  const LindbladModel model = build_three_level_model(config.params);
  const EnsembleStatistics stats =
      run_jump_ensemble(basis_ket(Level::e, 3), model, config.time.horizon, config.time.dt, config.seed,
                        static_cast<std::size_t>(config.shots));

  TrajectoryTables out{SweepTable({"trajectory_id", "postselected", "jump_count"}),
                       SweepTable({"t", "surviving", "success_fraction", "x", "y", "z", "x_stderr",
                                   "y_stderr", "z_stderr", "x_predicted", "y_predicted", "z_predicted"})};
  for (const TrajectorySummary& s : stats.summaries) {
    out.trajectories.add_row({as_int(s.id), std::int64_t{s.postselected ? 1 : 0}, as_int(s.jump_count)});
  }

  const EffectiveHamiltonian h = build_effective_hamiltonian(config.params);
  const StateVector e2 = basis_ket(Level::e, 2);
  for (std::size_t k = 0; k < stats.times.size(); ++k) {
    if (stats.surviving[k] == 0) {
      throw NumericalError("empty postselected ensemble at t = " + format_cell(stats.times[k]));
    }
    const BlochVector& b = stats.conditioned_bloch[k];
    const auto& se = stats.conditioned_stderr[k];
    const BlochVector pred = pure_bloch(propagate_nonhermitian(e2, h, stats.times[k]).state);
    out.aggregate.add_row({stats.times[k], as_int(stats.surviving[k]),
                           static_cast<double>(stats.surviving[k]) / static_cast<double>(stats.trajectories),
                           b.x, b.y, b.z, se[0], se[1], se[2], pred.x, pred.y, pred.z});
  }
  const std::string rate = format_cell(stats.success_rate());
  out.trajectories.add_note("success_rate", rate);
  out.aggregate.add_note("success_rate", rate);
  out.aggregate.add_note("initial_state", "e");
  out.aggregate.add_note("predicted", "no-jump evolution under H_eff");
  return out;
}

SweepTable cmd_ingest(const std::filesystem::path& counts_csv, const RunConfig& config) {
  std::ifstream in(counts_csv);
  if (!in) throw DataError("cannot open counts file " + counts_csv.string());
  const auto groups = group_counts(read_counts_csv(in));
  const ConfusionMatrix beta = config.beta();

  std::vector<std::string> columns{"group", "t", "line"};
  for (std::string_view a : {"x", "y", "z"}) {
    for (std::string_view c : {"_g", "_plus", "_minus", "_pn_plus", "_success"}) {
      columns.push_back(std::string(a) + std::string(c));
    }
  }
  for (std::string_view c :
       {"bloch_x", "bloch_y", "bloch_z", "ket_e_re", "ket_e_im", "ket_f_re", "ket_f_im", "degenerate"}) {
    columns.emplace_back(c);
  }
  SweepTable table(std::move(columns));

  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const CountsGroup& g = groups[gi];
    const TomographyResult r = reconstruct_from_counts(g.records, beta);
    const PurifyResult pure = purify(r.rho_ef);
    const StateVector ket = fix_phase(pure.ket);
    std::vector<Cell> row{as_int(gi), Blank{}, as_int(g.first_line)};
    if (g.time) row[1] = *g.time;
    for (int a = 0; a < 3; ++a) {
      row.insert(row.end(), {r.corrected[a][0], r.corrected[a][1], r.corrected[a][2], r.pairs[a].plus,
                             r.pairs[a].success});
    }
    row.insert(row.end(), {r.bloch.x, r.bloch.y, r.bloch.z, ket[0].real(), ket[0].imag(), ket[1].real(),
                           ket[1].imag(), std::int64_t{pure.degenerate ? 1 : 0}});
    table.add_row(std::move(row));
  }
  table.add_note("source", counts_csv.filename().string());
  table.add_note("bloch_convention", std::string(kBlochConvention));
  return table;
}

}  // namespace nhq::cli
