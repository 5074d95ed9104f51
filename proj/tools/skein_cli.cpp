// Command-line front end. Exit status: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "skein/annular.hpp"
#include "skein/verify.hpp"

using namespace skein;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  int strands = 0;  // 0: smallest count the word fits on
  std::string word;
  int N = 8;
  std::string sub = "u=A2";
  int cap = kDefaultStateCap;
  std::string format = "json";
  std::string out;
};

MixedBraidWord read_word(const RunConfig& cfg) {
  if (cfg.strands > 0) return parse_word(cfg.word, cfg.strands);
  constexpr int kProbe = 64;
  const MixedBraidWord probe = parse_word(cfg.word, kProbe);
  int need = 1;
  for (const auto& l : probe.letters)
    if (!l.is_t) need = std::max(need, l.index + 1);
  return parse_word(cfg.word, need);
}

// Coefficient 1 is dropped, so the unknot prints as "1".
std::string plain(const TracePolynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!s.empty()) s += " + ";
    const bool unit = it->second == LocalizedCoeff::integer(1);
    const std::string key = TracePolynomial::key_str(it->first);
    if (unit) s += key;
    else s += "(" + it->second.str() + ")" + (it->first.empty() ? "" : "*" + key);
  }
  return s;
}

std::string render(const SkeinVector& v, OutputFormat f) {
  if (f == OutputFormat::Csv) throw UsageError("csv output is only available for equation tables");
  return f == OutputFormat::Json ? to_json(v).dump() : (v.is_zero() ? "0" : v.str());
}

std::string render(const TracePolynomial& p, OutputFormat f) {
  if (f == OutputFormat::Csv) throw UsageError("csv output is only available for equation tables");
  return f == OutputFormat::Json ? to_json(p).dump() : plain(p);
}

std::string system_text(int N, Substitution sub) {
  std::ostringstream os;
  os << "band-move equations\n";
  for (int n = 1; n <= N; ++n) os << "  " << equation_for(n).str() << '\n';
  os << "bbm equations (" << substitution_name(sub) << "), each = 0\n";
  for (int n = 0; n <= N; ++n)
    for (int sign : {-1, 1})
      os << "  n=" << n << (sign > 0 ? " + " : " - ") << plain(normalize_equation(bbm_equation_for(n, sign, sub)))
         << '\n';
  return os.str();
}

int run(const RunConfig& cfg, std::string& output) {
  const OutputFormat f = parse_format(cfg.format);
  const Substitution sub = parse_substitution(cfg.sub);
  const std::string& c = cfg.subcommand;
  if (c == "eval") {
    EvalOptions opts;
    opts.cap = cfg.cap;
    output = render(evaluate_closure(read_word(cfg), opts), f);
  } else if (c == "reduce") {
    output = render(reduce_word(read_word(cfg), sub), f);
  } else if (c == "trace") {
    output = render(markov_trace(read_word(cfg)), f);
  } else if (c == "invariant") {
    output = render(invariant_V(read_word(cfg)), f);
  } else if (c == "system") {
    if (f == OutputFormat::Json) output = system_json(cfg.N, sub).dump(2);
    else if (f == OutputFormat::Csv) {
      std::vector<EquationRow> rows;
      for (int n = 1; n <= cfg.N; ++n) rows.push_back(equation_for(n));
      output = equations_csv(rows);
    } else output = system_text(cfg.N, sub);
  } else if (c == "presentation") {
    const Presentation p = build_presentation(cfg.N, sub);
    output = f == OutputFormat::Json ? to_json(p).dump(2) : f == OutputFormat::Csv ? equations_csv(p.rows) : p.str();
  } else if (c == "verify") {
    if (f == OutputFormat::Csv) throw UsageError("csv output is only available for equation tables");
    const VerifyReport r = verify_suite();
    output = f == OutputFormat::Json ? to_json(r).dump(2) : to_text(r);
    return r.all_pass() ? 0 : 1;
  } else {
    throw UsageError("no subcommand given");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kauffman bracket skein computations in the solid torus and S1 x S2"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sc) {
    sc->add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sc->add_option("--out", cfg.out, "write output here instead of stdout");
    sc->add_option("--sub", cfg.sub, "u=A2 or u=-A-2")->check(CLI::IsMember({"u=A2", "u=-A-2"}));
  };
  auto add_word = [&](CLI::App* sc) {
    sc->add_option("--n", cfg.strands, "moving strands")->check(CLI::Range(1, 64));
    sc->add_option("--word", cfg.word, "word such as \"t s1 t s1^-1\"")->required();
    sc->add_option("--cap", cfg.cap, "state limit 2^K")->check(CLI::Range(1, 40));
  };
  for (const char* name : {"eval", "reduce", "trace", "invariant"}) {
    auto* sc = app.add_subcommand(name);
    add_common(sc);
    add_word(sc);
  }
  for (const char* name : {"system", "presentation"}) {
    auto* sc = app.add_subcommand(name);
    add_common(sc);
    sc->add_option("--N", cfg.N, "truncation")->check(CLI::Range(1, 40));
  }
  add_common(app.add_subcommand("verify"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  std::string output;
  int status = 0;
  auto trimmed = [&] { return output.ends_with('\n') ? output.substr(0, output.size() - 1) : output; };
  try {
    status = run(cfg, output);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "word parse error: " << e.what() << '\n';
    return 2;
  } catch (const StrandMismatch& e) {
    std::cerr << "strand mismatch: " << e.what() << '\n';
    return 2;
  } catch (const StateCapExceeded& e) {
    std::cerr << "state cap exceeded: " << e.what() << '\n';
    return 1;
  } catch (const UnsupportedClass& e) {
    std::cerr << "unsupported word class: " << e.what() << '\n';
    return 1;
  } catch (const OutOfDomain& e) {
    std::cerr << "out of domain: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  if (cfg.out.empty()) {
    std::cout << trimmed() << '\n';
  } else {
    std::ofstream os(cfg.out);
    if (!os) {
      std::cerr << "cannot write " << cfg.out << '\n';
      return 1;
    }
    os << trimmed() << '\n';
  }
  return status;
}
