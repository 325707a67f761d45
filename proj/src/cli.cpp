#include "yhecke/cli.hpp"

#include <CLI11.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "yhecke/links.hpp"
#include "yhecke/verify.hpp"

namespace yhecke {

namespace {

// Thrown for flag combinations CLI11 cannot express; exits with code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string first_line(const std::string& s) {
  auto nl = s.find('\n');
  return nl == std::string::npos ? s : s.substr(0, nl);
}

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || item.find_first_not_of(" \t", pos) != std::string::npos) {
      throw std::invalid_argument(std::string(flag) + " expects comma-separated integers, got `" + text + "`");
    }
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument(std::string(flag) + " is empty");
  return out;
}

std::complex<double> parse_complex(const std::string& text, const char* flag) {
  std::stringstream ss(text);
  std::string re, im;
  std::getline(ss, re, ',');
  std::getline(ss, im);
  try {
    std::size_t p1 = 0, p2 = 0;
    double r = std::stod(re, &p1);
    double i = im.empty() ? 0.0 : std::stod(im, &p2);
    if (p1 == re.size() && p2 == im.size()) return {r, i};
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(std::string(flag) + " expects `re` or `re,im`, got `" + text + "`");
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

void print_poly(std::ostream& out, const std::string& label, const LPoly& p, bool machine) {
  if (!machine) {
    out << (label.empty() ? "" : label + " : ") << p.to_string() << "\n";
    return;
  }
  if (!label.empty()) out << label << "\n";
  for (const auto& line : p.to_machine_lines()) out << line << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read trace file `" + path + "`");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Link invariants from Yokonuma-Hecke algebras", "yhecke"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "yhecke 0.1.0");

  int d = 1, n = 1;
  std::string word, mu0_text, spec_path, s_text, q_text, z_text, suite;
  bool all_basic = false, machine = false;
  unsigned seed = 1;

  auto* inv = app.add_subcommand("invariant", "Gamma invariant of the closure of a framed braid word");
  inv->add_option("--d", d, "Framing modulus d")->required()->check(CLI::Range(1, 255));
  inv->add_option("--n", n, "Number of strands")->required()->check(CLI::Range(1, kMaxStrands));
  inv->add_option("--word", word, "Braid word, e.g. \"1 -2 t1^1\"")->required();
  auto* mu0_opt = inv->add_option("--mu0", mu0_text, "Basic trace b_1,...,b_d with b_a in {0,1}");
  auto* all_opt = inv->add_flag("--all-basic", all_basic, "One line per basic trace");
  auto* spec_opt = inv->add_option("--spec", spec_path, "Trace parameters file (`mu0 = (...) ; alpha = ...` lines)");
  mu0_opt->excludes(all_opt)->excludes(spec_opt);
  all_opt->excludes(spec_opt);
  inv->add_flag("--machine", machine, "Print `e_u e_v e_g coeffs` lines");

  auto* hom = app.add_subcommand("homflypt", "HOMFLYPT polynomial tau_n(delta_H(word))");
  hom->add_option("--n", n, "Number of strands")->required()->check(CLI::Range(1, kMaxStrands));
  hom->add_option("--word", word, "Unframed braid word")->required();
  hom->add_flag("--machine", machine, "Print `e_u e_v e_g coeffs` lines");

  auto* jl = app.add_subcommand("jl", "Invariant for the trace attached to a subset S of d-th roots of unity");
  jl->add_option("--d", d, "Framing modulus d")->required()->check(CLI::Range(1, 255));
  jl->add_option("--n", n, "Number of strands")->required()->check(CLI::Range(1, kMaxStrands));
  jl->add_option("--S", s_text, "Subset of 1..d, comma-separated")->required();
  jl->add_option("--word", word, "Braid word")->required();
  auto* q_opt = jl->add_option("--q", q_text, "Numeric q as `re` or `re,im`");
  auto* z_opt = jl->add_option("--z", z_text, "Numeric z as `re` or `re,im`");
  q_opt->needs(z_opt);
  z_opt->needs(q_opt);
  jl->add_flag("--machine", machine, "Print `e_u e_v e_g coeffs` lines");

  auto* ver = app.add_subcommand("verify", "Run a self-check suite");
  ver->add_option("--suite", suite, "iso, markov, schur or jl")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  ver->add_option("--d", d, "Framing modulus d")->required();
  ver->add_option("--n", n, "Number of strands")->required();
  ver->add_option("--seed", seed, "Seed for randomized checks");

  auto* lst = app.add_subcommand("list-traces", "Print trace parameters");
  lst->add_option("--d", d, "Framing modulus d")->required()->check(CLI::Range(1, 16));
  lst->add_option("--S", s_text, "Print the parameters attached to S instead of the basic traces");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "yhecke: " << first_line(e.what()) << "\n";
    return 2;
  }

  try {
    if (inv->parsed()) {
      FramedBraidWord w = FramedBraidWord::parse(word, n, d);
      if (!spec_path.empty()) {
        print_poly(out, "spec", invariant_gamma(w, TraceSpec::parse(read_file(spec_path), d)), machine);
      } else if (all_basic) {
        for (const auto& mu0 : basic_compositions(d)) {
          print_poly(out, "mu0=" + mu0.to_string(), invariant_gamma(w, basic_spec(mu0)), machine);
        }
      } else if (!mu0_text.empty()) {
        Composition mu0 = parse_composition(mu0_text);
        if (mu0.d() != d || !mu0.is_basic()) {
          throw std::invalid_argument("--mu0 " + mu0_text + " is not a composition with " + std::to_string(d) +
                                      " parts in {0,1}");
        }
        print_poly(out, "mu0=" + mu0.to_string(), invariant_gamma(w, basic_spec(mu0)), machine);
      } else {
        throw UsageError("invariant needs one of --mu0, --all-basic, --spec");
      }
    } else if (hom->parsed()) {
      print_poly(out, "", homflypt(FramedBraidWord::parse(word, n, 1)), machine);
    } else if (jl->parsed()) {
      std::vector<int> S = parse_int_list(s_text, "--S");
      FramedBraidWord w = FramedBraidWord::parse(word, n, d);
      LPoly p = jl_invariant(w, S);
      std::string label = "S={";
      for (std::size_t i = 0; i < S.size(); ++i) label += (i ? "," : "") + std::to_string(S[i]);
      label += "}";
      print_poly(out, label, p, machine);
      if (!q_text.empty()) {
        ESystem::Point pt = ESystem(d, S).point(parse_complex(q_text, "--q"), parse_complex(z_text, "--z"));
        std::complex<double> val = p.eval(pt.u, pt.v, pt.gamma);
        out << "value = " << format_double(val.real()) << " " << format_double(val.imag()) << "\n";
      }
    } else if (ver->parsed()) {
      std::vector<CheckResult> results;
      try {
        results = run_suite(suite, d, n, seed);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      bool all_ok = true;
      for (const auto& r : results) {
        out << (r.ok ? "PASS " : "FAIL ") << r.id << "\n";
        if (!r.ok) out << "  counterexample: " << r.counterexample << "\n";
        all_ok = all_ok && r.ok;
      }
      return all_ok ? 0 : 1;
    } else if (lst->parsed()) {
      if (s_text.empty()) {
        for (const auto& mu0 : basic_compositions(d)) out << basic_spec(mu0).to_text();
      } else {
        out << jl_spec(d, parse_int_list(s_text, "--S")).to_text();
      }
    }
  } catch (const UsageError& e) {
    err << "yhecke: " << first_line(e.what()) << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "yhecke: error: " << first_line(e.what()) << "\n";
    return 1;
  }
  return 0;
}

}  // namespace yhecke
