// Command-line front end for the rook monoid library.
//
// Exit status: 0 success, 1 usage or parse error, 2 the order
// implementations disagree.

#include "rook/bruhat.hpp"
#include "rook/length.hpp"
#include "rook/one_line.hpp"
#include "rook/orbit.hpp"
#include "rook/poset.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

constexpr int kUsageError = 1;
constexpr int kMismatch = 2;

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

const char* verdict(bool b) { return b ? "true" : "false"; }

int run_len(const rook::OneLine& x) {
  const rook::LengthBreakdown b = rook::length_breakdown(x);
  std::string pairs;
  for (const auto& [i, j] : b.coinversions.pairs) {
    pairs += (pairs.empty() ? "" : " ") + ("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  std::cout << "element: " << x << "\n"
            << "n: " << x.size() << "\n"
            << "rank: " << b.rank << "\n"
            << "star_weights: " << join(b.star_weights) << "\n"
            << "star_sum: " << b.star_sum << "\n"
            << "coinversion_pairs: " << (pairs.empty() ? "-" : pairs) << "\n"
            << "coinv: " << b.coinv << "\n"
            << "length: " << b.length << "\n"
            << "dim_bx: " << b.dim_bx << "\n"
            << "dim_xb: " << b.dim_xb << "\n"
            << "dim_meet: " << b.dim_meet << "\n";
  return 0;
}

int run_cmp(const rook::OneLine& x, const rook::OneLine& y) {
  const bool d = rook::deodhar_leq(x, y);
  const bool g = rook::deodhar_leq_gamma(x, y);
  const bool p = rook::ppr_leq(x, y);
  std::cout << "x: " << x << "\n"
            << "y: " << y << "\n"
            << "length_x: " << rook::length(x) << "\n"
            << "length_y: " << rook::length(y) << "\n"
            << "deodhar: " << verdict(d) << "\n"
            << "gamma: " << verdict(g) << "\n"
            << "ppr: " << verdict(p) << "\n";
  if (d != g || d != p) {
    std::cout << "agreement: false\n";
    return kMismatch;
  }
  std::cout << "agreement: true\n";
  return 0;
}

int run_covers(const rook::OneLine& x) {
  for (const rook::OneLine& y : rook::covers_of(x)) {
    std::cout << y << " " << rook::length(y) << "\n";
  }
  return 0;
}

int run_oracle(const rook::OneLine& x) {
  const rook::OrbitDimensions d = rook::orbit_dimensions(x);
  std::cout << "element: " << x << "\n"
            << "left_rank: " << d.left << "\n"
            << "right_rank: " << d.right << "\n"
            << "meet_dim: " << d.meet << "\n"
            << "length: " << d.length << "\n"
            << "formula_length: " << rook::length(x) << "\n";
  return d.length == rook::length(x) ? 0 : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rook monoid Bruhat-Chevalley order toolkit", "rookctl"};
  app.require_subcommand(1);

  std::string x_text;
  std::string y_text;
  int n = 0;

  auto* len = app.add_subcommand("len", "Length and orbit-dimension breakdown of an element");
  len->add_option("x", x_text, "element, e.g. 4,0,2,3")->required();

  auto* cmp = app.add_subcommand("cmp", "Compare two elements under all three order implementations");
  cmp->add_option("x", x_text)->required();
  cmp->add_option("y", y_text)->required();

  auto* covers = app.add_subcommand("covers", "Upper covers of an element");
  covers->add_option("x", x_text)->required();

  auto* oracle = app.add_subcommand("oracle", "Orbit dimensions by exact span ranks");
  oracle->add_option("x", x_text)->required();

  std::string format = "dot";
  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of R_n");
  hasse->add_option("n", n)->required()->check(CLI::Range(1, 5));
  hasse->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

  std::size_t samples = 0;
  std::uint64_t seed = 1;
  bool as_json = false;
  auto* verify = app.add_subcommand("verify", "Cross-check order, cover and length implementations");
  verify->add_option("n", n)->required()->check(CLI::Range(1, 6));
  auto* sampled_opt = verify->add_option("--sampled", samples, "number of random pairs");
  verify->add_option("--seed", seed, "random seed for sampled mode");
  verify->add_flag("--json", as_json, "machine-readable report");

  auto* enumerate = app.add_subcommand("enum", "List every element of R_n");
  enumerate->add_option("n", n)->required()->check(CLI::Range(1, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*len) return run_len(rook::parse_one_line(x_text));
    if (*covers) return run_covers(rook::parse_one_line(x_text));
    if (*oracle) return run_oracle(rook::parse_one_line(x_text));
    if (*cmp) {
      const rook::OneLine x = rook::parse_one_line(x_text);
      const rook::OneLine y = rook::parse_one_line(y_text);
      if (x.size() != y.size()) {
        std::cerr << "error: elements have different sizes (" << x.size() << " vs " << y.size()
                  << ")\n";
        return kUsageError;
      }
      return run_cmp(x, y);
    }
    if (*hasse) {
      const rook::HasseDiagram h = rook::build_hasse(n);
      std::cout << (format == "json" ? rook::export_json(h) : rook::export_dot(h));
      return 0;
    }
    if (*verify) {
      rook::VerifyOptions options;
      options.seed = seed;
      if (*sampled_opt) {
        options.mode = rook::VerifyMode::sampled;
        options.sample_count = samples;
      } else if (n >= 5) {
        options.mode = rook::VerifyMode::sampled;
      }
      const rook::VerificationReport report = rook::verify(n, options);
      std::cout << (as_json ? rook::report_json(report) : rook::format_report(report));
      std::cerr << "elapsed_ms: " << report.elapsed.count() << "\n";
      return report.passed() ? 0 : kMismatch;
    }
    if (*enumerate) {
      for (const rook::OneLine& x : rook::enumerate(n)) std::cout << x << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
