#include "reproduce.hpp"

#include <map>

#include <nlohmann/json.hpp>

#include "embedded.hpp"
#include "hauteur/compositum.hpp"
#include "hauteur/density.hpp"
#include "hauteur/heightbound.hpp"
#include "hauteur/krasner.hpp"
#include "scenario_io.hpp"

namespace hauteur::cli {
namespace {

using Json = nlohmann::json;

constexpr mpfr_prec_t kComparePrecision = 256;

struct Observation {
  std::string text;
  std::optional<Real> number;
};

using Observations = std::map<std::string, Observation>;

Observation exact(std::string text) { return {std::move(text), std::nullopt}; }
Observation numeric(const Real& value) { return {value.to_string(15), value}; }

Observations scenario_row(const std::string& name) {
  const BoundReport r = evaluate_scenario(parse_scenario(*builtin_scenario(name)));
  Observations out;
  out["e_bound"] = exact(r.e_bound.to_string());
  out["f_bound"] = exact(r.f_bound.to_string());
  out["f_value"] = exact(to_string(r.f_bound.expand()));
  out["k"] = exact(std::to_string(r.k));
  out["lambda"] = exact(std::to_string(r.lambda));
  out["beta"] = exact(r.beta.to_string());
  out["ln_bound"] = numeric(r.ln_bound);
  return out;
}

Observations appendix_row(long p) {
  const ExtensionMultiset family = ExtensionMultiset::all_extensions(LocalField::make(p), 10);
  const Factorization refined = inertia_bound(family, family.inertia_lcm());
  const Factorization crude = crude_bound(family);
  Observations out;
  out["refined_log10"] = numeric(refined.log10(kComparePrecision));
  out["crude_log10"] = numeric(crude.log10(kComparePrecision));
  out["refined_below_crude"] = exact(compare(refined, crude) < 0 ? "true" : "false");
  return out;
}

Observations krasner_row() {
  const LocalField q5 = LocalField::make(5);
  const LocalField q3 = LocalField::make(3);
  Observations out;
  out["N(Q5,5)"] = exact(to_string(count_extensions(q5, 5)));
  out["N(Q5,10)"] = exact(to_string(count_extensions(q5, 10)));
  out["Nr(Q5,5)"] = exact(to_string(count_totally_ramified(q5, 5)));
  out["N(Q5,5,f=2)"] = exact(to_string(count_with_profile(q5, 5, 2)));
  out["Nr(Q5,10)"] = exact(to_string(count_totally_ramified(q5, 10)));
  out["Nr(Q3,3)"] = exact(to_string(count_totally_ramified(q3, 3)));
  return out;
}

Observations density_row() {
  Observations out;
  for (long p : {3L, 5L, 7L}) {
    for (unsigned n = 2; n <= 5; ++n) {
      const std::string tag = "(" + std::to_string(p) + "," + std::to_string(n) + "))";
      out["d(I" + tag] = exact(natural_density({p, n, SplittingKind::inert}).to_string());
      if (n <= 3) {
        out["d(R" + tag] = exact(natural_density({p, n, SplittingKind::totally_ramified}).to_string());
      }
    }
  }
  const Integer large("1000003", 10);
  for (unsigned n = 2; n <= 5; ++n) {
    const ExactRational gap =
        ExactRational(1) - ExactRational(Integer(n)) * natural_density({large, n, SplittingKind::inert});
    const ExactRational magnitude = gap.sign() < 0 ? ExactRational(0) - gap : gap;
    out["gap(1000003," + std::to_string(n) + ")"] = numeric(Real(magnitude, kComparePrecision));
  }
  return out;
}

Observations observe(const std::string& row) {
  if (row.rfind("ex3_", 0) == 0) return scenario_row(row);
  if (row == "appendix_q11") return appendix_row(11);
  if (row == "appendix_q5") return appendix_row(5);
  if (row == "krasner_values") return krasner_row();
  return density_row();
}

Real parse_real(const Json& value, const std::string& where) {
  Real out(kComparePrecision);
  std::string text;
  if (value.is_string()) {
    text = value.get<std::string>();
  } else if (value.is_number()) {
    text = value.dump();
  } else {
    throw FormatError(where + ": expected a number");
  }
  if (mpfr_set_str(out.get(), text.c_str(), 10, MPFR_RNDN) != 0) {
    throw FormatError(where + ": bad number '" + text + "'");
  }
  return out;
}

std::string describe(const Json& value) { return value.is_string() ? value.get<std::string>() : value.dump(); }

// Empty string when the check passes.
std::string check(const Json& entry, const Observations& seen, const std::string& where) {
  if (!entry.is_object() || !entry.contains("name") || !entry.contains("kind")) {
    throw FormatError(where + ": each check needs 'name' and 'kind'");
  }
  const std::string name = entry["name"].get<std::string>();
  const std::string kind = entry["kind"].get<std::string>();
  if (kind != "exact" && kind != "relative" && kind != "range") {
    throw FormatError(where + ": unknown check kind '" + kind + "'");
  }
  auto it = seen.find(name);
  if (it == seen.end()) return name + ": no such observable";
  const Observation& got = it->second;

  if (kind == "exact") {
    const std::string expected = describe(entry.at("expected"));
    if (got.text == expected) return {};
    return name + ": expected " + expected + ", got " + got.text;
  }
  if (!got.number) return name + ": not numeric";
  const Real& value = *got.number;
  if (kind == "relative") {
    const Real expected = parse_real(entry.at("expected"), where + ".expected");
    const Real tolerance = parse_real(entry.at("tolerance"), where + ".tolerance");
    if (abs(value - expected) <= tolerance * abs(expected)) return {};
    return name + ": expected " + describe(entry["expected"]) + " (relative " +
           describe(entry["tolerance"]) + "), got " + got.text;
  }
  const Real low = parse_real(entry.at("min"), where + ".min");
  const Real high = parse_real(entry.at("max"), where + ".max");
  if (low <= value && value <= high) return {};
  return name + ": expected [" + describe(entry["min"]) + ", " + describe(entry["max"]) + "], got " + got.text;
}

}  // namespace

const std::vector<std::string>& reproduce_rows() {
  static const std::vector<std::string> rows{"ex3_1",        "ex3_2",       "ex3_3",
                                             "ex3_4",        "appendix_q11", "appendix_q5",
                                             "krasner_values", "density_values"};
  return rows;
}

std::vector<RowResult> run_reproduce(std::string_view golden_text, const std::optional<std::string>& only) {
  Json golden;
  try {
    golden = Json::parse(golden_text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("golden file: ") + e.what());
  }
  if (!golden.is_object() || !golden.contains("rows") || !golden["rows"].is_object()) {
    throw FormatError("golden file: expected an object with 'rows'");
  }
  const Json& rows = golden["rows"];

  std::vector<std::string> selected;
  for (const std::string& row : reproduce_rows()) {
    if (!only || *only == row) selected.push_back(row);
  }
  if (selected.empty()) throw FormatError("unknown row '" + *only + "'");

  std::vector<RowResult> out;
  for (const std::string& row : selected) {
    RowResult result{row, true, {}};
    if (!rows.contains(row) || !rows[row].is_array()) {
      result.pass = false;
      result.failures.push_back("missing from golden file");
      out.push_back(std::move(result));
      continue;
    }
    const Observations seen = observe(row);
    const Json& checks = rows[row];
    for (std::size_t i = 0; i < checks.size(); ++i) {
      std::string failure;
      try {
        failure = check(checks[i], seen, row + "[" + std::to_string(i) + "]");
      } catch (const Json::exception& e) {
        throw FormatError("golden file: " + row + ": " + e.what());
      }
      if (!failure.empty()) {
        result.pass = false;
        result.failures.push_back(std::move(failure));
      }
    }
    out.push_back(std::move(result));
  }
  return out;
}

}  // namespace hauteur::cli
