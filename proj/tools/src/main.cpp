#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "wirebarrier/scenario.hpp"

namespace {

int guarded(const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const wirebarrier::SolverError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return static_cast<int>(wirebarrier::ErrorCode::unknown);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semiclassical tunneling from a non-homogeneous quantum wire: "
               "underbarrier branches, critical geometry, penetration exponents"};
  app.require_subcommand(1);

  std::string config_path, out_dir = ".";
  double seed_tol = 1e-9;
  int jobs = 1;

  auto* run = app.add_subcommand("run", "run every scenario in a config file");
  run->add_option("config", config_path, "scenario config file")->required();
  run->add_option("--out", out_dir, "output directory (default .)");
  run->add_option("--seed-tolerance", seed_tol, "residual accepted for continuation seeds");
  run->add_option("--jobs", jobs, "worker thread cap for sweeps");

  std::string goldens_dir = "goldens";
  auto* goldens = app.add_subcommand("goldens", "regenerate the bundled golden outputs");
  goldens->add_option("--out", goldens_dir, "output directory (default ./goldens)");
  goldens->add_option("--jobs", jobs, "worker thread cap for sweeps");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    return guarded([&] {
      const wirebarrier::Config cfg = wirebarrier::parse_config(config_path);
      wirebarrier::RunOptions opt;
      opt.out_dir = out_dir;
      opt.seed_tolerance = seed_tol;
      opt.jobs = jobs;
      for (const auto& f : wirebarrier::run_config(cfg, opt))
        std::printf("wrote %s\n", f.c_str());
    });
  }
  return guarded([&] {
    for (const auto& f : wirebarrier::run_goldens(goldens_dir, jobs))
      std::printf("wrote %s\n", f.c_str());
  });
}
