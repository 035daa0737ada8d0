#include "mub/cli.hpp"

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mub/completion.hpp"
#include "mub/construct.hpp"
#include "mub/field.hpp"
#include "mub/io.hpp"

namespace mub {
namespace {

struct Options {
  std::size_t dim = 0;
  std::optional<double> tol;
  std::string in, out, report;
  std::size_t index = 0;
  std::uint64_t seed = 0;
};

// Loads the input file, mapping failures to exit statuses.
std::optional<CollectionFile> load(const std::string& path, std::ostream& err, int& status) {
  try {
    return read_collection(path);
  } catch (const Error& e) {
    err << "mubtool: " << path << ": " << e.what() << "\n";
    status = exit_code::bad_input;
  } catch (const std::exception& e) {
    err << "mubtool: " << e.what() << "\n";
    status = exit_code::no_input;
  }
  return std::nullopt;
}

bool save(const std::string& path, const std::string& text, std::ostream& err) {
  try {
    write_text(path, text);
    return true;
  } catch (const std::exception& e) {
    err << "mubtool: " << e.what() << "\n";
    return false;
  }
}

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
  CollectionFile file;
  try {
    file.collection = construct_complete_mub(o.dim);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotPrimePower) {
      err << "mubtool gen: " << o.dim << " is not a prime power\n";
      return exit_code::not_prime_power;
    }
    err << "mubtool gen: " << e.what() << "\n";
    return exit_code::not_prime_power;
  }
  if (o.tol) file.collection.tol = *o.tol;
  const auto [p, alpha] = *prime_power(o.dim);
  file.provenance = "gen: complete collection of " + std::to_string(o.dim + 1) +
                    " bases from GF(" + std::to_string(p) + "^" + std::to_string(alpha) + ")";
  if (!save(o.out, serialize(file), err)) return exit_code::cant_create;
  out << "wrote " << file.collection.bases.size() << " bases in dimension " << o.dim << " to "
      << o.out << "\n";
  return exit_code::ok;
}

int cmd_drop(const Options& o, std::ostream& out, std::ostream& err) {
  int status = exit_code::ok;
  auto file = load(o.in, err, status);
  if (!file) return status;
  auto& bases = file->collection.bases;
  if (o.index >= bases.size()) {
    err << "mubtool drop: index " << o.index << " out of range (collection has " << bases.size()
        << " bases)\n";
    return exit_code::usage;
  }
  bases.erase(bases.begin() + static_cast<std::ptrdiff_t>(o.index));
  file->provenance += "; dropped basis " + std::to_string(o.index);
  if (!save(o.out, serialize(*file), err)) return exit_code::cant_create;
  out << "wrote " << bases.size() << " bases to " << o.out << "\n";
  return exit_code::ok;
}

int cmd_complete(const Options& o, std::ostream& out, std::ostream& err) {
  int status = exit_code::ok;
  auto file = load(o.in, err, status);
  if (!file) return status;
  if (o.tol) file->collection.tol = *o.tol;

  const CompletionReport report = complete_collection(file->collection, o.seed);
  if (!o.report.empty() && !save(o.report, completion_report_json(report), err))
    return exit_code::cant_create;

  switch (report.status) {
    case CompletionStatus::Completed: break;
    case CompletionStatus::WrongCount:
    case CompletionStatus::NotMub:
      err << "mubtool complete: " << to_string(report.status) << ": " << report.message << "\n";
      return exit_code::not_mub;
    case CompletionStatus::NumericalFailure:
      err << "mubtool complete: " << report.message << "\n";
      return exit_code::numerical_failure;
  }

  CollectionFile result{completed(file->collection, report),
                        file->provenance + "; completed (seed " + std::to_string(o.seed) + ")"};
  if (!save(o.out, serialize(result), err)) return exit_code::cant_create;
  out << "completed to " << result.collection.bases.size() << " bases, max unbiasedness deviation "
      << report.final_verify->max_unbiased_dev << "\n";
  return exit_code::ok;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  int status = exit_code::ok;
  auto file = load(o.in, err, status);
  if (!file) return status;
  if (o.tol) file->collection.tol = *o.tol;
  const VerifyReport r = verify_collection(file->collection);
  out << verify_report_json(r);
  return r.pass ? exit_code::ok : exit_code::verify_failed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify and complete collections of mutually unbiased bases", "mubtool"};
  app.require_subcommand(1);
  Options o;

  auto positive = CLI::PositiveNumber;

  auto* gen = app.add_subcommand("gen", "Write a complete collection for a prime-power dimension");
  gen->add_option("--dim", o.dim, "Dimension d (prime power, 2..64)")->required();
  gen->add_option("--tol", o.tol, "Tolerance recorded in the file (default 1e-10)")->check(positive);
  gen->add_option("--out", o.out, "Output collection file")->required();

  auto* drop = app.add_subcommand("drop", "Remove one basis from a collection");
  drop->add_option("--in", o.in, "Input collection file")->required();
  drop->add_option("--index", o.index, "0-based index of the basis to remove")->required();
  drop->add_option("--out", o.out, "Output collection file")->required();

  auto* complete = app.add_subcommand("complete", "Add the missing basis to d unbiased bases");
  complete->add_option("--in", o.in, "Input collection file with exactly d bases")->required();
  complete->add_option("--seed", o.seed, "Seed for the diagonalization draws (default 0)");
  complete->add_option("--tol", o.tol, "Override the file tolerance")->check(positive);
  complete->add_option("--out", o.out, "Output collection file with d + 1 bases")->required();
  complete->add_option("--report", o.report, "Write the completion report here");

  auto* verify = app.add_subcommand("verify", "Check unitarity, unbiasedness and the d+1 bound");
  verify->add_option("--in", o.in, "Collection file")->required();
  verify->add_option("--tol", o.tol, "Override the file tolerance")->check(positive);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "mubtool: " << e.what() << "\n" << app.help();
    return exit_code::usage;
  }

  if (gen->parsed()) return cmd_gen(o, out, err);
  if (drop->parsed()) return cmd_drop(o, out, err);
  if (complete->parsed()) return cmd_complete(o, out, err);
  return cmd_verify(o, out, err);
}

}  // namespace mub
