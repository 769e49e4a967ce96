// bnpoly: build and verify the involution families in B_n.
//
// Exit codes: 0 pass, 1 I/O error, 2 usage or bad input, 3 verification failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bnpoly/bnpoly.hpp"
#include "bnpoly/oracle_suite.hpp"

namespace {

enum Exit : int { kPass = 0, kIo = 1, kUsage = 2, kFailed = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot write " + out_path);
  out << text;
  if (!out) throw IoError("write failed: " + out_path);
}

struct CommonFlags {
  unsigned n = 0;
  std::string format = "text";
  std::string method;  // empty: default for the rank
  unsigned threads = 1;
  bool skip_unravel = false;
  bool timing = false;
  std::string out;
};

bnpoly::VerifyOptions options(const CommonFlags& f) {
  bnpoly::VerifyOptions o;
  if (f.method == "full") o.methods = {bnpoly::Method::full};
  else if (f.method == "inductive") o.methods = {bnpoly::Method::inductive};
  else if (f.method == "both") o.methods = {bnpoly::Method::full, bnpoly::Method::inductive};
  o.threads = std::max(1u, f.threads);
  o.skip_unravel = f.skip_unravel;
  o.timing = f.timing;
  return o;
}

int finish(const bnpoly::VerificationReport& rep, const CommonFlags& f) {
  emit(f.format == "json" ? bnpoly::to_json_text(rep) : bnpoly::render_text(rep), f.out);
  if (rep.all_asserted_passed()) return kPass;
  for (const auto* c : rep.failures()) std::cerr << "failed: " << c->name << "\n";
  return kFailed;
}

bnpoly::Family family_arg(const std::string& s) {
  auto f = bnpoly::parse_family(s);
  if (!f || *f == bnpoly::Family::custom) throw bnpoly::InvalidArgument("family must be thm12 or thm13");
  return *f;
}

int cmd_construct(const std::string& family, const CommonFlags& f) {
  auto c = bnpoly::make_family(family_arg(family), f.n);
  emit(bnpoly::write_generator_file(c), f.out);
  return kPass;
}

int cmd_verify(const std::string& target, const CommonFlags& f, bool n_given) {
  if (auto fam = bnpoly::parse_family(target); fam && *fam != bnpoly::Family::custom) {
    if (!n_given) throw bnpoly::InvalidArgument("--n is required for " + target);
    return finish(bnpoly::verify_theorem(*fam, f.n, options(f)), f);
  }
  if (!std::filesystem::exists(target)) throw IoError("no such family or file: " + target);
  auto file = bnpoly::parse_generator_file(read_file(target));
  bnpoly::CStringCandidate c;
  try {
    c = bnpoly::candidate_from_file(file);
  } catch (const bnpoly::InvalidCandidate& e) {
    std::cerr << "invalid candidate: " << e.what() << "\n";
    return kFailed;
  }
  if (file.family != bnpoly::Family::custom) {
    // A file claiming a family must hold exactly that family's generators.
    auto reference = bnpoly::make_family(file.family, c.n);
    if (reference.generators != c.generators) {
      std::cerr << "generators differ from the " << bnpoly::to_string(file.family) << " construction\n";
      return kFailed;
    }
    return finish(bnpoly::verify_theorem(file.family, c.n, options(f)), f);
  }
  return finish(bnpoly::verify_candidate(c, options(f)), f);
}

int cmd_unravel(const std::string& family, const CommonFlags& f) {
  return finish(bnpoly::unravel_theorem(family_arg(family), f.n, options(f)), f);
}

int cmd_oracle(unsigned n, std::uint32_t seed) {
  bnpoly::OracleOptions o;
  o.n = n;
  o.seed = seed;
  bool ok = true;
  for (const auto& c : bnpoly::run_oracle_suite(o)) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.observed.empty()) std::cout << " (" << c.observed << ")";
    std::cout << "\n";
    ok = ok && c.passed;
  }
  return ok ? kPass : kFailed;
}

void add_report_flags(CLI::App* sub, CommonFlags& f) {
  sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--method", f.method, "C-string method (default: both up to rank 8, else inductive)")
      ->check(CLI::IsMember({"full", "inductive", "both"}));
  sub->add_option("--threads", f.threads, "Worker threads for subset-pair checks")->check(CLI::Range(1u, 256u));
  sub->add_flag("--timing", f.timing, "Include per-phase timing in the report");
  sub->add_option("-o,--output", f.out, "Write the report here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build and verify string C-groups of involutions in B_n"};
  app.set_version_flag("--version", std::string(bnpoly::kToolVersion));
  app.require_subcommand(1);

  CommonFlags flags;
  std::string family, target;
  unsigned oracle_n = 5;
  std::uint32_t seed = bnpoly::OracleOptions{}.seed;

  auto* construct = app.add_subcommand("construct", "Write a generator file");
  construct->add_option("family", family, "thm12 or thm13")->required();
  construct->add_option("--n", flags.n, "n (degree 2n)")->required();
  construct->add_option("-o,--output", flags.out, "Output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Verify a family or a generator file");
  verify->add_option("target", target, "thm12, thm13 or a generator file")->required();
  auto* verify_n = verify->add_option("--n", flags.n, "n (required for a family)");
  verify->add_flag("--skip-unravel", flags.skip_unravel, "Skip the unravelled decision");
  add_report_flags(verify, flags);

  auto* unravel = app.add_subcommand("unravel", "Decide the unravelled property for a family");
  unravel->add_option("family", family, "thm12 or thm13")->required();
  unravel->add_option("--n", flags.n, "n (degree 2n)")->required();
  add_report_flags(unravel, flags);

  auto* oracle = app.add_subcommand("oracle", "Compare chain algorithms with brute force on B_n");
  oracle->add_option("--n", oracle_n, "n (5 or 6)");
  oracle->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*construct) return cmd_construct(family, flags);
    if (*verify) return cmd_verify(target, flags, verify_n->count() > 0);
    if (*unravel) return cmd_unravel(family, flags);
    if (*oracle) return cmd_oracle(oracle_n, seed);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const bnpoly::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const bnpoly::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
