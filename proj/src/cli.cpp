#include "qnary/cli.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qnary/debruijn.hpp"
#include "qnary/quantum.hpp"
#include "qnary/spectral_stats.hpp"
#include "qnary/words.hpp"

namespace qnary::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { json, csv, plain };

const std::map<std::string, Format> kFormats{{"json", Format::json}, {"csv", Format::csv}, {"plain", Format::plain}};

/// Mismatch between two routes that should agree; maps to exit code 1.
struct VerificationFailure {};

// Shortest representation that round-trips.
std::string fmt_double(double x) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, result.ptr);
}

std::string fmt_complex(quantum::Complex z) { return "(" + fmt_double(z.real()) + ", " + fmt_double(z.imag()) + ")"; }

ordered_json count_json(Count c) {
  if (c >= 0 && c <= static_cast<Count>(std::numeric_limits<std::uint64_t>::max()))
    return static_cast<std::uint64_t>(c);
  return to_string(c);
}

ordered_json complex_array(const std::vector<quantum::Complex>& values) {
  ordered_json arr = ordered_json::array();
  for (const auto& z : values) arr.push_back({z.real(), z.imag()});
  return arr;
}

struct Options {
  unsigned q = 2;
  unsigned m = 1;
  std::size_t n = 0;
  std::size_t l = 1;
  std::string word;
  std::string mode = "formula";
  std::string method = "det";
  double k = 0.0;
  std::uint64_t seed = 1;
  std::size_t samples = 0;
  double k_max = 1e4;
  std::uint64_t budget = words::EnumerationBudget{}.max_items;
  Format format = Format::plain;
};

// Each subcommand has its own default, so the choice is stored per command
// and resolved after parsing.
void add_format(CLI::App* cmd, std::map<const CLI::App*, Format>& formats, Format fallback) {
  formats[cmd] = fallback;
  cmd->add_option("--format", formats[cmd], "Output format: json, csv or plain")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case).description(""))
      ->type_name("{json,csv,plain}");
}

void add_budget(CLI::App* cmd, Options& o) {
  cmd->add_option("--budget", o.budget, "Maximum number of enumerated items")->check(CLI::PositiveNumber);
}

void lyndon_list(const Options& o, std::ostream& out) {
  const auto list = words::lyndon_words(o.q, o.l);
  switch (o.format) {
    case Format::json: {
      ordered_json arr = ordered_json::array();
      for (const auto& w : list) arr.push_back(w.to_string());
      out << arr.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "word\n";
      [[fallthrough]];
    case Format::plain:
      for (const auto& w : list) out << w.to_string() << '\n';
      break;
  }
}

void factorize(const Options& o, std::ostream& out) {
  const auto w = words::Word::parse(o.word, o.q);
  const auto f = words::duval_factorize(w);
  const bool strict = words::is_strictly_decreasing(f);
  switch (o.format) {
    case Format::json: {
      ordered_json j;
      j["word"] = w.to_string();
      j["q"] = o.q;
      j["factors"] = ordered_json::array();
      for (const auto& v : f.factors) j["factors"].push_back(v.to_string());
      j["strict"] = strict;
      out << j.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "word,factorization,strict\n"
          << '"' << w.to_string() << "\"," << f.to_string() << ',' << (strict ? "true" : "false") << '\n';
      break;
    case Format::plain:
      out << f.to_string() << " strict=" << (strict ? "true" : "false") << '\n';
      break;
  }
}

void count(const Options& o, std::ostream& out) {
  const bool want_formula = o.mode != "bruteforce";
  const bool want_brute = o.mode != "formula";
  std::optional<Count> formula;
  std::optional<Count> brute;
  if (want_formula) formula = words::str_count(o.q, o.n);
  if (want_brute) brute = words::count_strictly_decreasing_bruteforce(o.q, o.n, {o.budget});
  const bool agree = !(formula && brute) || *formula == *brute;

  switch (o.format) {
    case Format::json: {
      ordered_json j;
      j["q"] = o.q;
      j["n"] = o.n;
      if (formula) j["formula"] = count_json(*formula);
      if (brute) j["bruteforce"] = count_json(*brute);
      if (formula && brute) j["agree"] = agree;
      out << j.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "q,n,formula,bruteforce,agree\n"
          << o.q << ',' << o.n << ',' << (formula ? to_string(*formula) : "") << ','
          << (brute ? to_string(*brute) : "") << ',' << (formula && brute ? (agree ? "true" : "false") : "") << '\n';
      break;
    case Format::plain: {
      std::string line;
      if (formula) line += "formula=" + to_string(*formula);
      if (brute) line += (line.empty() ? "" : " ") + std::string("bruteforce=") + to_string(*brute);
      if (formula && brute) line += std::string(" agree=") + (agree ? "true" : "false");
      out << line << '\n';
      break;
    }
  }
  if (!agree) throw VerificationFailure{};
}

void orbits(const Options& o, std::ostream& out) {
  const debruijn::QNaryGraph g(o.q, o.m);
  const auto list = debruijn::enumerate_primitive_pseudo_orbits(o.q, o.n, {o.budget});
  switch (o.format) {
    case Format::json: {
      ordered_json j;
      j["q"] = o.q;
      j["m"] = o.m;
      j["n"] = o.n;
      j["count"] = list.size();
      j["pseudo_orbits"] = ordered_json::array();
      for (const auto& po : list) {
        ordered_json entry;
        entry["orbits"] = ordered_json::array();
        entry["edges"] = ordered_json::array();
        for (const auto& orbit : po.orbits) {
          entry["orbits"].push_back(orbit.word.to_string());
          for (auto e : orbit.edge_sequence(g)) entry["edges"].push_back(g.edge_word(e).to_string());
        }
        entry["orbit_count"] = po.orbit_count();
        j["pseudo_orbits"].push_back(std::move(entry));
      }
      out << j.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "index,pseudo_orbit,orbit_count,topological_length\n";
      for (std::size_t i = 0; i < list.size(); ++i)
        out << i << ",\"" << list[i].to_string() << "\"," << list[i].orbit_count() << ','
            << list[i].topological_length() << '\n';
      break;
    case Format::plain:
      for (const auto& po : list) out << po.to_string() << '\n';
      out << "count=" << list.size() << '\n';
      break;
  }
}

constexpr double kCoefficientTolerance = 1e-9;

void coeffs(const Options& o, std::ostream& out) {
  if (!std::isfinite(o.k)) throw std::invalid_argument("--k must be finite");
  const auto inst = quantum::make_instance(o.q, o.m, o.seed);
  std::vector<quantum::Complex> det;
  std::vector<quantum::Complex> orb;
  if (o.method != "orbits") det = quantum::char_poly_direct(quantum::evolution_operator(inst, o.k)).a;
  if (o.method != "det") {
    words::EnumerationBudget budget{o.budget};
    for (std::size_t n = 0; n <= inst.graph.edge_count(); ++n)
      if (words::str_count(o.q, n) > static_cast<Count>(budget.max_items))
        throw std::range_error("enumeration budget exceeded at n=" + std::to_string(n));
    orb = quantum::coeffs_from_pseudo_orbits(inst, o.k);
  }
  const bool both = !det.empty() && !orb.empty();
  double max_delta = 0.0;
  if (both)
    for (std::size_t n = 0; n < det.size(); ++n) max_delta = std::max(max_delta, std::abs(det[n] - orb[n]));
  const auto& primary = det.empty() ? orb : det;

  switch (o.format) {
    case Format::json: {
      ordered_json j;
      j["q"] = o.q;
      j["m"] = o.m;
      j["k"] = o.k;
      j["seed"] = o.seed;
      j["method"] = o.method;
      j["dimension"] = inst.graph.edge_count();
      j["coefficients"] = complex_array(primary);
      if (both) {
        j["orbit_coefficients"] = complex_array(orb);
        j["max_delta"] = max_delta;
      }
      out << j.dump() << '\n';
      break;
    }
    case Format::csv:
      out << (both ? "n,det_re,det_im,orbit_re,orbit_im\n" : "n,re,im\n");
      for (std::size_t n = 0; n < primary.size(); ++n) {
        out << n << ',' << fmt_double(primary[n].real()) << ',' << fmt_double(primary[n].imag());
        if (both) out << ',' << fmt_double(orb[n].real()) << ',' << fmt_double(orb[n].imag());
        out << '\n';
      }
      break;
    case Format::plain:
      out << "q=" << o.q << " m=" << o.m << " k=" << fmt_double(o.k) << " seed=" << o.seed << " method=" << o.method
          << '\n';
      for (std::size_t n = 0; n < primary.size(); ++n) out << "a_" << n << " = " << fmt_complex(primary[n]) << '\n';
      if (both)
        out << "max_delta=" << fmt_double(max_delta) << (max_delta < kCoefficientTolerance ? " < 1e-9" : " >= 1e-9")
            << '\n';
      break;
  }
  if (both && !(max_delta < kCoefficientTolerance)) throw VerificationFailure{};
}

void variance(const Options& o, std::ostream& out) {
  const auto inst_edges = debruijn::QNaryGraph(o.q, o.m).edge_count();
  if (o.n > inst_edges) throw std::invalid_argument("--n exceeds the matrix dimension q^(m+1)");
  if (words::str_count(o.q, o.n) > static_cast<Count>(o.budget))
    throw std::range_error("enumeration budget exceeded");
  if (o.samples == 1) throw std::invalid_argument("--samples must be 0 or at least 2");
  const auto report = stats::variance_report(o.q, o.m, o.n, o.seed, o.samples, o.k_max);
  switch (o.format) {
    case Format::json:
      out << report.to_json().dump() << '\n';
      break;
    case Format::csv:
      out << stats::VarianceReport::csv_header() << '\n' << report.csv_row() << '\n';
      break;
    case Format::plain: {
      const auto j = report.to_json();
      for (const auto& [key, value] : j.items()) out << key << '=' << value.dump() << '\n';
      break;
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lyndon factorizations, q-nary graphs and pseudo-orbit spectral statistics", "qnary"};
  app.require_subcommand(1);
  Options o;
  std::map<const CLI::App*, Format> formats;

  auto* lyndon = app.add_subcommand("lyndon", "Lyndon word utilities");
  lyndon->require_subcommand(1);
  auto* list = lyndon->add_subcommand("list", "List Lyndon words of a given length in lexicographic order");
  list->add_option("--q", o.q, "Alphabet size")->required()->check(CLI::Range(1U, 1000000U));
  list->add_option("--l", o.l, "Word length")->required()->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
  add_format(list, formats, Format::plain);

  auto* fact = app.add_subcommand("factorize", "Chen-Fox-Lyndon factorization of a word");
  fact->add_option("word", o.word, "Word: digits for q <= 10, comma-separated letters otherwise")->required();
  fact->add_option("--q", o.q, "Alphabet size")->required()->check(CLI::Range(1U, 1000000U));
  add_format(fact, formats, Format::plain);

  auto* cnt = app.add_subcommand("count", "Count words with strictly decreasing factorization");
  cnt->add_option("--q", o.q, "Alphabet size")->required()->check(CLI::Range(1U, 1000000U));
  cnt->add_option("--n", o.n, "Word length")->required();
  cnt->add_option("--mode", o.mode, "formula, bruteforce or both")
      ->check(CLI::IsMember({"formula", "bruteforce", "both"}));
  add_budget(cnt, o);
  add_format(cnt, formats, Format::plain);

  auto* orb = app.add_subcommand("orbits", "Enumerate primitive pseudo orbits of a given topological length");
  orb->add_option("--q", o.q, "Alphabet size")->required()->check(CLI::Range(2U, 1000000U));
  orb->add_option("--m", o.m, "Graph order")->required()->check(CLI::Range(1U, 64U));
  orb->add_option("--n", o.n, "Topological length")->required();
  add_budget(orb, o);
  add_format(orb, formats, Format::plain);

  auto* cof = app.add_subcommand("coeffs", "Characteristic polynomial coefficients of U(k)");
  cof->add_option("--q", o.q, "Alphabet size")->required()->check(CLI::Range(2U, 1000000U));
  cof->add_option("--m", o.m, "Graph order")->required()->check(CLI::Range(1U, 64U));
  cof->add_option("--k", o.k, "Wavenumber")->required();
  cof->add_option("--seed", o.seed, "Edge-length seed");
  cof->add_option("--method", o.method, "det, orbits or both")->check(CLI::IsMember({"det", "orbits", "both"}));
  add_budget(cof, o);
  add_format(cof, formats, Format::plain);

  auto* var = app.add_subcommand("variance", "Variance of a characteristic polynomial coefficient");
  var->add_option("--q", o.q, "Alphabet size")->required()->check(CLI::Range(2U, 1000000U));
  var->add_option("--m", o.m, "Graph order")->required()->check(CLI::Range(1U, 64U));
  var->add_option("--n", o.n, "Coefficient index")->required();
  var->add_option("--seed", o.seed, "Seed for edge lengths and k sampling");
  var->add_option("--samples", o.samples, "Monte-Carlo samples (0 disables)");
  var->add_option("--k-max", o.k_max, "Upper end of the k sampling interval")->check(CLI::PositiveNumber);
  add_budget(var, o);
  add_format(var, formats, Format::json);

  std::vector<const char*> argv{"qnary"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  }

  for (const auto& [cmd, format] : formats)
    if (cmd->parsed()) o.format = format;

  try {
    if (list->parsed()) lyndon_list(o, out);
    else if (fact->parsed()) factorize(o, out);
    else if (cnt->parsed()) count(o, out);
    else if (orb->parsed()) orbits(o, out);
    else if (cof->parsed()) coeffs(o, out);
    else if (var->parsed()) variance(o, out);
  } catch (const VerificationFailure&) {
    err << "error: verification mismatch\n";
    return kMismatch;
  } catch (const std::range_error& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  }
  return kSuccess;
}

}  // namespace qnary::cli
