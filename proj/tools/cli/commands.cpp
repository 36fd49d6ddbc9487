#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "embedded.hpp"
#include "hauteur/density.hpp"
#include "hauteur/heightbound.hpp"
#include "hauteur/heightoracle.hpp"
#include "hauteur/krasner.hpp"
#include "reproduce.hpp"
#include "scenario_io.hpp"

namespace hauteur::cli {
namespace {

constexpr unsigned kDefaultBits = 128;

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

unsigned precision_bits(unsigned flag_value) {
  if (flag_value != 0) return flag_value;
  const char* env = std::getenv("HAUTEUR_PRECISION_BITS");
  if (env == nullptr || *env == '\0') return kDefaultBits;
  char* end = nullptr;
  const unsigned long bits = std::strtoul(env, &end, 10);
  if (*end != '\0' || bits < 16 || bits > 65536) {
    throw FormatError(std::string("HAUTEUR_PRECISION_BITS must be an integer in [16, 65536], got '") + env +
                      "'");
  }
  return static_cast<unsigned>(bits);
}

struct KrasnerArgs {
  std::string p;
  std::uint64_t abs_degree = 1;
  std::uint64_t d = 0;
  bool totally_ramified = false;
  std::uint64_t profiles = 0;
};

int cmd_krasner(const KrasnerArgs& a, std::ostream& out) {
  const LocalField field = LocalField::make(parse_integer(a.p), a.abs_degree);
  if (a.profiles != 0) {
    out << "e f d count\n";
    for (const ProfileCount& pc : enumerate_profiles(field, a.profiles)) {
      out << pc.profile.e << ' ' << pc.profile.f << ' ' << pc.profile.degree() << ' '
          << to_string(pc.count) << '\n';
    }
    return kSuccess;
  }
  if (a.d == 0) throw FormatError("krasner: give -d DEGREE or --profiles DMAX");
  out << to_string(a.totally_ramified ? count_totally_ramified(field, a.d) : count_extensions(field, a.d))
      << '\n';
  return kSuccess;
}

int cmd_bound(const std::string& path, std::ostream& out) {
  out << render_report(evaluate_scenario(parse_scenario(read_file(path))));
  return kSuccess;
}

int cmd_height(const std::string& polynomial, unsigned bits_flag, int digits, std::ostream& out) {
  const AlgebraicNumber a = AlgebraicNumber::parse(polynomial);
  const HeightValue h = weil_height(a, precision_bits(bits_flag));
  out << h.value.to_string(digits) << '\n';
  return kSuccess;
}

int cmd_density(const std::string& p, unsigned n, bool ramified, std::ostream& out) {
  const SplittingKind kind = ramified ? SplittingKind::totally_ramified : SplittingKind::inert;
  out << natural_density({parse_integer(p), n, kind}).to_string() << '\n';
  return kSuccess;
}

int cmd_census(unsigned degree, double cap, unsigned bits_flag, std::ostream& out) {
  const unsigned bits = precision_bits(bits_flag);
  for (const AlgebraicNumber& a : northcott_census(degree, cap, bits)) {
    out << a.to_string() << '\t' << weil_height(a, bits).value.to_string(10) << '\n';
  }
  return kSuccess;
}

int cmd_reproduce(const std::optional<std::string>& only, const std::string& golden_path,
                  std::ostream& out) {
  const std::string golden = golden_path.empty() ? std::string(builtin_golden()) : read_file(golden_path);
  const std::vector<RowResult> results = run_reproduce(golden, only);
  std::size_t passed = 0;
  for (const RowResult& r : results) {
    out << (r.pass ? "PASS " : "FAIL ") << r.row << '\n';
    for (const std::string& f : r.failures) out << "  " << f << '\n';
    if (r.pass) ++passed;
  }
  out << passed << '/' << results.size() << " pass\n";
  return passed == results.size() ? kSuccess : kCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit height lower bounds in towers of number fields"};
  app.name("hauteur");
  app.require_subcommand(1);

  KrasnerArgs krasner;
  auto* krasner_cmd = app.add_subcommand("krasner", "Count extensions of a p-adic field");
  krasner_cmd->add_option("-p", krasner.p, "prime p")->required();
  krasner_cmd->add_option("-F", krasner.abs_degree, "[F : Q_p]")->check(CLI::PositiveNumber);
  auto* degree_opt = krasner_cmd->add_option("-d", krasner.d, "extension degree")->check(CLI::PositiveNumber);
  auto* ramified_flag =
      krasner_cmd->add_flag("--totally-ramified", krasner.totally_ramified, "count totally ramified only");
  auto* profiles_opt = krasner_cmd->add_option("--profiles", krasner.profiles, "list (e, f) counts up to DMAX")
                           ->check(CLI::PositiveNumber);
  profiles_opt->excludes(degree_opt)->excludes(ramified_flag);
  ramified_flag->needs(degree_opt);

  std::string scenario_path;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate a scenario file and print the report");
  bound_cmd->add_option("scenario", scenario_path, "scenario file, or - for stdin")->required();

  std::string polynomial;
  unsigned bits = 0;
  int digits = 6;
  auto* height_cmd = app.add_subcommand("height", "Weil height of a root of an integer polynomial");
  height_cmd->add_option("polynomial", polynomial, "minimal polynomial, e.g. \"x^2 - x - 1\"")->required();
  height_cmd->add_option("--bits", bits, "precision bits (default HAUTEUR_PRECISION_BITS or 128)")
      ->check(CLI::Range(16u, 65536u));
  height_cmd->add_option("--digits", digits, "significant digits printed")->check(CLI::Range(1, 200));

  std::string density_p;
  unsigned density_n = 2;
  bool inert = false;
  bool ramified = false;
  auto* density_cmd = app.add_subcommand("density", "Density of degree-n fields where p is inert or ramified");
  density_cmd->add_option("-p", density_p, "odd prime p")->required();
  density_cmd->add_option("-n", density_n, "field degree")->required();
  auto* inert_flag = density_cmd->add_flag("--inert", inert);
  auto* ramified_density_flag = density_cmd->add_flag("--ramified", ramified, "totally ramified");
  inert_flag->excludes(ramified_density_flag);

  unsigned census_degree = 1;
  double census_cap = 0;
  auto* census_cmd = app.add_subcommand("census", "Algebraic numbers of bounded degree and height");
  census_cmd->add_option("--degree", census_degree, "maximal degree (<= 4)")->required();
  census_cmd->add_option("--cap", census_cap, "height cap (<= ln 3)")->required();
  census_cmd->add_option("--bits", bits, "precision bits")->check(CLI::Range(16u, 65536u));

  std::optional<std::string> only;
  std::string golden_path;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Replay the worked examples against golden values");
  reproduce_cmd->add_option("--only", only, "run a single row");
  reproduce_cmd->add_option("--golden", golden_path, "golden file (default: built in)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*krasner_cmd) return cmd_krasner(krasner, out);
    if (*bound_cmd) return cmd_bound(scenario_path, out);
    if (*height_cmd) return cmd_height(polynomial, bits, digits, out);
    if (*density_cmd) return cmd_density(density_p, density_n, ramified, out);
    if (*census_cmd) return cmd_census(census_degree, census_cap, bits, out);
    if (*reproduce_cmd) return cmd_reproduce(only, golden_path, out);
  } catch (const NonPositiveBound& e) {
    err << "error: " << e.what() << '\n';
    return kNonPositiveBound;
  } catch (const PrecisionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecisionFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace hauteur::cli
