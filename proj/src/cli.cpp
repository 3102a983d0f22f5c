#include "fbg/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <ostream>

#include "fbg/generator.hpp"
#include "fbg/io.hpp"
#include "fbg/selftest.hpp"
#include "fbg/solver.hpp"

namespace fbg {

namespace {

struct InstanceFlags {
  std::string input;
  int n = 6;
  int m = 10;
  std::int64_t fmax = 3;
  std::uint64_t seed = 1;
};

void add_generator_flags(CLI::App* cmd, InstanceFlags& flags) {
  cmd->add_option("--n", flags.n, "generator: vertex count")->capture_default_str();
  cmd->add_option("--m", flags.m, "generator: edge count")->capture_default_str();
  cmd->add_option("--fmax", flags.fmax, "generator: weights drawn uniformly from [0, fmax]")
      ->capture_default_str();
  cmd->add_option("--seed", flags.seed, "generator: 64-bit seed")->capture_default_str();
}

void add_instance_flags(CLI::App* cmd, InstanceFlags& flags) {
  cmd->add_option("--input", flags.input,
                  "instance file; omit to generate one from --n/--m/--fmax/--seed");
  add_generator_flags(cmd, flags);
}

CLI::Option* add_format_flag(CLI::App* cmd, std::string& format) {
  return cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "kv"}))
      ->capture_default_str();
}

Instance obtain_instance(const InstanceFlags& flags) {
  if (!flags.input.empty()) return load_instance(flags.input);
  return generate_instance(flags.n, flags.m, flags.fmax, flags.seed);
}

OutputFormat to_format(const std::string& name) {
  return name == "kv" ? OutputFormat::kKv : OutputFormat::kText;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"maximum f-bounded subgraphs, deficiency certificates, min-max verification"};
  app.require_subcommand(1);

  InstanceFlags solve_flags;
  std::string solve_format = "text";
  CLI::App* solve = app.add_subcommand("solve", "compute a maximum f-bounded subgraph");
  add_instance_flags(solve, solve_flags);
  add_format_flag(solve, solve_format);

  InstanceFlags certify_flags;
  std::string certify_format = "text";
  int certify_limit = kDefaultExhaustiveLimit;
  CLI::App* certify =
      app.add_subcommand("certify", "maximize the deficiency and print the certificate");
  add_instance_flags(certify, certify_flags);
  add_format_flag(certify, certify_format);
  certify->add_option("--limit", certify_limit, "exhaustive enumeration ceiling (max 20)")
      ->capture_default_str();

  InstanceFlags verify_flags;
  std::string verify_format = "text";
  int verify_limit = kDefaultExhaustiveLimit;
  CLI::App* verify = app.add_subcommand("verify", "run the full min-max check battery");
  add_instance_flags(verify, verify_flags);
  add_format_flag(verify, verify_format);
  verify->add_option("--limit", verify_limit, "exhaustive enumeration ceiling (max 20)")
      ->capture_default_str();

  InstanceFlags gen_flags;
  CLI::App* gen = app.add_subcommand("gen", "emit a random instance file on stdout");
  add_generator_flags(gen, gen_flags);

  SelftestOptions selftest_options;
  CLI::App* selftest = app.add_subcommand("selftest", "run the randomized property batteries");
  selftest->add_option("--count", selftest_options.count, "instances per battery")
      ->capture_default_str();
  selftest->add_option("--seed", selftest_options.seed, "base 64-bit seed")->capture_default_str();
  selftest->add_option("--n", selftest_options.max_n, "largest instance vertex count")
      ->capture_default_str();
  selftest->add_option("--m", selftest_options.max_m, "largest instance edge count")
      ->capture_default_str();
  selftest->add_option("--fmax", selftest_options.max_f, "largest vertex weight")
      ->capture_default_str();
  selftest->add_option("--limit", selftest_options.limit, "exhaustive enumeration ceiling (max 20)")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 3;
  }

  try {
    if (solve->parsed()) {
      const Instance inst = obtain_instance(solve_flags);
      write_solve_report(out, inst, solve_max_fbounded(inst.graph, inst.weights),
                         to_format(solve_format));
      return 0;
    }
    if (certify->parsed()) {
      const Instance inst = obtain_instance(certify_flags);
      write_certificate_report(out, max_deficiency(inst.graph, inst.weights, certify_limit),
                               to_format(certify_format));
      return 0;
    }
    if (verify->parsed()) {
      const Instance inst = obtain_instance(verify_flags);
      const VerificationReport rep = verify_minmax(inst.graph, inst.weights, verify_limit);
      write_verification_report(out, rep, to_format(verify_format));
      return rep.all_passed() ? 0 : 1;
    }
    if (gen->parsed()) {
      out << serialize_instance(
          generate_instance(gen_flags.n, gen_flags.m, gen_flags.fmax, gen_flags.seed));
      return 0;
    }
    if (selftest->parsed()) return run_selftest(selftest_options, out) ? 0 : 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const GuardError& e) {
    err << "guard violation: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 3;
}

}  // namespace fbg
