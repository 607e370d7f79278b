#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace gett::cli;

  CLI::App app{"Reference binary tensor contraction (GETT) toolkit"};
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Contract two tensor files into a third");
  run_cmd->add_option("a", run.a_path, "Tensor file for A")->required();
  run_cmd->add_option("b", run.b_path, "Tensor file for B")->required();
  run_cmd->add_option("out", run.out_path, "Output tensor file for C")->required();
  // Index lists may be empty (rank-0 output, no contractions): --perm=
  run_cmd->add_option("--conts", run.conts, "Number of contracted index pairs");
  run_cmd->add_option("--cont-a", run.cont_a, "Contracted dimensions of A, e.g. 1,2")->expected(0, 1);
  run_cmd->add_option("--cont-b", run.cont_b, "Contracted dimensions of B, paired positionally")->expected(0, 1);
  run_cmd->add_option("--perm", run.perm, "Output position of each free index")
      ->required()
      ->expected(0, 1);
  run_cmd->add_option("--out-ext", run.out_ext, "Expected output extents")->expected(0, 1);
  run_cmd->add_option("--out-inc", run.out_inc, "Output increments (default packed)")->expected(0, 1);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check the kernel against the oracle");
  verify_cmd->add_option("--suite", verify.suite, "Category name or \"all\"");
  verify_cmd->add_option("--cases", verify.cases, "Cases per category");
  verify_cmd->add_option("--seed", verify.seed, "Seed of the first case");

  VerifyOptions selftest{"all", 1000, 1};
  auto* selftest_cmd = app.add_subcommand("selftest", "verify --suite all --cases 1000");
  selftest_cmd->add_option("--seed", selftest.seed, "Seed of the first case");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write one generated case to a directory");
  gen_cmd->add_option("--category", gen.category, "Category name")->required();
  gen_cmd->add_option("--seed", gen.seed, "Case seed");
  gen_cmd->add_option("--out-dir", gen.out_dir, "Destination directory")->required();

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the reference kernel");
  bench_cmd->add_option("--rank", bench.rank, "Rank of both operands");
  bench_cmd->add_option("--extent", bench.extent, "Extent of every dimension");
  bench_cmd->add_option("--conts", bench.conts, "Contracted pairs");
  bench_cmd->add_option("--reps", bench.reps, "Repetitions (median reported)");

  CLI11_PARSE(app, argc, argv);

  if (run_cmd->parsed()) return cmd_run(run, std::cout, std::cerr);
  if (verify_cmd->parsed()) return cmd_verify(verify, std::cout, std::cerr);
  if (selftest_cmd->parsed()) return cmd_verify(selftest, std::cout, std::cerr);
  if (gen_cmd->parsed()) return cmd_gen(gen, std::cout, std::cerr);
  if (bench_cmd->parsed()) return cmd_bench(bench, std::cout, std::cerr);
  return kFailure;
}
