// mqs: minimum-energy quadratic solver and spline comparison tool.
//
//   mqs solve 0,0 0.5,1 1,0
//   mqs compare --preset table1
//   mqs compare set.csv other.json --method ours --method cardinal:0.5 --format csv
//   mqs plot builtin:set1 --method ours --tangents -o set1.svg
//
// Flags override MQS_* environment variables, which override defaults.

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "mqs/commands.hpp"

namespace {

void add_quadrature_flags(CLI::App* cmd, mqs::QuadratureConfig& cfg) {
  cmd->add_option("--tol-rel", cfg.rel_tol, "Relative quadrature tolerance")->envname("MQS_TOL_REL")->capture_default_str();
  cmd->add_option("--tol-abs", cfg.abs_tol, "Absolute quadrature tolerance")->envname("MQS_TOL_ABS")->capture_default_str();
  cmd->add_option("--max-depth", cfg.max_depth, "Maximum quadrature subdivision depth")
      ->envname("MQS_MAX_DEPTH")
      ->capture_default_str();
}

const std::map<std::string, mqs::OutputFormat> kFormats{{"text", mqs::OutputFormat::Text},
                                                        {"csv", mqs::OutputFormat::Csv}};
const std::map<std::string, mqs::KnotConvention> kKnots{{"uniform", mqs::KnotConvention::Uniform},
                                                        {"chord", mqs::KnotConvention::Chord}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-energy quadratic curves and Hermite spline comparison"};
  app.require_subcommand(1);

  // solve
  std::array<std::string, 3> triple;
  mqs::OutputFormat solve_format = mqs::OutputFormat::Text;
  mqs::QuadratureConfig solve_quad;
  auto* solve = app.add_subcommand("solve", "Minimum-energy quadratic through three points");
  solve->add_option("p1", triple[0], "First point x,y")->required();
  solve->add_option("p2", triple[1], "Middle point x,y")->required();
  solve->add_option("p3", triple[2], "Last point x,y")->required();
  solve->add_option("--format", solve_format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->envname("MQS_FORMAT");
  add_quadrature_flags(solve, solve_quad);

  // compare
  mqs::CompareRequest cmp;
  std::string preset;
  auto* compare = app.add_subcommand("compare", "Middle-segment energy and curvature variation table");
  compare->add_option("sets", cmp.sources, "Point-set files (.csv/.json) or builtin:set1..set4");
  compare->add_option("-m,--method", cmp.methods,
                      "Tangent method, repeatable: ours | catmull-rom | cardinal:TAU | kb:TAU,BIAS,CONTINUITY")
      ->allow_extra_args(false);
  compare->add_option("--preset", preset, "Method preset")->check(CLI::IsMember({"table1"}));
  compare->add_option("--knots", cmp.options.knots, "Knot convention")
      ->transform(CLI::CheckedTransformer(kKnots, CLI::ignore_case))
      ->envname("MQS_KNOTS");
  compare->add_option("--format", cmp.format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->envname("MQS_FORMAT");
  compare->add_flag("--serial", [&](std::int64_t) { cmp.options.parallel = false; }, "Evaluate cells sequentially");
  add_quadrature_flags(compare, cmp.options.quadrature);

  // plot
  mqs::PlotRequest plot;
  auto* plot_cmd = app.add_subcommand("plot", "Render a point set and its spline as SVG");
  plot_cmd->add_option("set", plot.source, "Point-set file or builtin:setN")->required();
  plot_cmd->add_option("-m,--method", plot.method, "Tangent method")->capture_default_str();
  plot_cmd->add_option("-o,--output", plot.output, "Output path ('-' for stdout)")->capture_default_str();
  plot_cmd->add_option("--knots", plot.knots, "Knot convention")
      ->transform(CLI::CheckedTransformer(kKnots, CLI::ignore_case))
      ->envname("MQS_KNOTS");
  plot_cmd->add_flag("--tangents", plot.options.tangents, "Draw tangent arrows at interior points");
  plot_cmd->add_option("--samples", plot.options.samples_per_segment, "Samples per segment (>= 64)")
      ->envname("MQS_SAMPLES")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return mqs::kExitInvalidInput;
  }

  if (*solve) return mqs::cmd_solve(triple, solve_format, solve_quad, std::cout, std::cerr);
  if (*compare) {
    cmp.preset_table1 = preset == "table1";
    return mqs::cmd_compare(cmp, std::cout, std::cerr);
  }
  return mqs::cmd_plot(plot, std::cout, std::cerr);
}
