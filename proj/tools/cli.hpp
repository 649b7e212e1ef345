#ifndef ASSOSYM_TOOLS_CLI_HPP
#define ASSOSYM_TOOLS_CLI_HPP

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "assosym/assosym.hpp"
#include "assosym/characters.hpp"
#include "assosym/io.hpp"
#include "assosym/tideal_oracle.hpp"

// Command-line front end. Exit codes: 0 success, 1 usage error, 2 failed
// verification.

namespace assosym::cli {

enum class Format { pretty, json, csv };

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_failed = 2;

class UsageError : public Error {
public:
  using Error::Error;
};

/// Parses "2,1,3". Zero entries survive parsing so the caller can report
/// them as a zero part.
inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: '" + text + "'");
    }
    if (used != item.size())
      throw UsageError("not an integer list: '" + text + "'");
    out.push_back(v);
  }
  if (out.empty())
    throw UsageError("empty integer list");
  return out;
}

inline std::string join(const std::vector<BigInt>& values, char sep) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i)
      s += sep;
    s += to_string(values[i]);
  }
  return s;
}

struct DecomposeArgs {
  int n = 0;
  std::string group = "S";
  std::optional<int> dim;
  std::string split = "halved";
};

inline int cmd_decompose(const DecomposeArgs& a, Format fmt,
                         std::ostream& out) {
  if (a.n < 1)
    throw UsageError("n must be positive");
  const Group g = parse_group(a.group);
  if (g == Group::general_linear && !a.dim)
    throw UsageError("--dim is required for --group GL");
  if (g == Group::symmetric && a.dim)
    throw UsageError("--dim is only valid with --group GL or A");
  if (a.dim && *a.dim < 1)
    throw UsageError("--dim must be positive");
  if (a.split != "halved" && a.split != "restriction")
    throw UsageError("--split must be halved or restriction");

  std::optional<Decomposition> d;
  switch (g) {
  case Group::symmetric:
    d = sn_decomposition(a.n);
    break;
  case Group::general_linear:
    d = gl_decomposition(a.n, *a.dim);
    break;
  case Group::alternating:
    if (a.n < 2)
      throw UsageError("--group A needs n >= 2");
    d = a.dim ? an_gl_decomposition(a.n, *a.dim)
              : an_decomposition(a.n, a.split == "halved"
                                          ? SplitConvention::halved
                                          : SplitConvention::restriction);
    break;
  }
  switch (fmt) {
  case Format::pretty:
    out << format_pretty(*d);
    break;
  case Format::json:
    out << to_json(*d).dump(2) << "\n";
    break;
  case Format::csv:
    out << format_csv(*d);
    break;
  }
  return exit_ok;
}

inline int cmd_sequences(int max_n, bool with_cocharacter, Format fmt,
                         std::ostream& out) {
  if (max_n < 1)
    throw UsageError("max_n must be positive");
  struct Row {
    int n;
    BigCount codim, colen, inv;
    std::optional<CharacterVector> chi;
  };
  std::vector<Row> rows;
  for (int n = 1; n <= max_n; ++n) {
    Row r{n, codimension(n), colength(n), involution_count(n), std::nullopt};
    if (with_cocharacter && n <= 10)
      r.chi = cocharacter(n);
    rows.push_back(std::move(r));
  }
  switch (fmt) {
  case Format::pretty: {
    out << "n  codimension  colength  involutions";
    if (with_cocharacter)
      out << "  cocharacter";
    out << "\n";
    for (const auto& r : rows) {
      out << r.n << "  " << to_string(r.codim) << "  " << to_string(r.colen)
          << "  " << to_string(r.inv);
      if (r.chi)
        out << "  " << join(r.chi->values, ' ');
      out << "\n";
    }
    break;
  }
  case Format::json: {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json o;
      o["n"] = r.n;
      o["codimension"] = to_string(r.codim);
      o["colength"] = to_string(r.colen);
      o["involutions"] = to_string(r.inv);
      if (r.chi)
        o["cocharacter"] = to_json(*r.chi);
      j.push_back(std::move(o));
    }
    out << j.dump(2) << "\n";
    break;
  }
  case Format::csv:
    out << "n,codimension,colength,involutions"
        << (with_cocharacter ? ",cocharacter" : "") << "\n";
    for (const auto& r : rows) {
      out << r.n << ',' << to_string(r.codim) << ',' << to_string(r.colen)
          << ',' << to_string(r.inv);
      if (with_cocharacter)
        out << ',' << (r.chi ? join(r.chi->values, ' ') : "");
      out << "\n";
    }
    break;
  }
  return exit_ok;
}

struct DimsArgs {
  std::optional<int> n, r;
  std::optional<std::string> multidegree;
  bool enumerate = false;
};

inline int cmd_dims(const DimsArgs& a, Format fmt, std::ostream& out) {
  if (a.multidegree && (a.n || a.r))
    throw UsageError("give either --n/--r or --multidegree, not both");
  std::string what;
  BigCount value;
  std::optional<BigCount> enumerated;
  if (a.multidegree) {
    const MultiDegree l(parse_int_list(*a.multidegree));
    what = "F^{" + l.str() + "}";
    value = multigraded_dim(l);
    if (a.enumerate)
      enumerated = basis_count_direct(l);
  } else {
    if (!a.n || !a.r)
      throw UsageError("dims needs --n and --r, or --multidegree");
    if (*a.n < 1 || *a.r < 1)
      throw UsageError("--n and --r must be positive");
    what = "F_" + std::to_string(*a.n) + "(" + std::to_string(*a.r) + ")";
    value = graded_dim(*a.n, *a.r);
    if (a.enumerate)
      enumerated = basis_count_direct(*a.n, *a.r);
  }
  const bool agree = !enumerated || *enumerated == value;
  switch (fmt) {
  case Format::pretty:
    out << "dim " << what << " = " << to_string(value) << "\n";
    if (enumerated)
      out << (agree ? "PASS" : "FAIL") << ": basis enumeration "
          << to_string(*enumerated) << "\n";
    break;
  case Format::json: {
    ordered_json j;
    j["component"] = what;
    j["dim"] = to_string(value);
    if (enumerated) {
      j["enumerated"] = to_string(*enumerated);
      j["pass"] = agree;
    }
    out << j.dump(2) << "\n";
    break;
  }
  case Format::csv:
    out << "component,dim" << (enumerated ? ",enumerated" : "") << "\n"
        << what << ',' << to_string(value);
    if (enumerated)
      out << ',' << to_string(*enumerated);
    out << "\n";
    break;
  }
  return agree ? exit_ok : exit_failed;
}

struct VerifyArgs {
  std::optional<int> n;
  std::optional<std::string> multidegree;
  OracleOptions oracle;
  std::optional<std::string> dump_matrix;
};

struct Check {
  std::string name;
  std::string oracle;
  std::string formula;
  bool pass;
};

inline int cmd_verify(const VerifyArgs& a, Format fmt, std::ostream& out) {
  if (a.n.has_value() == a.multidegree.has_value())
    throw UsageError("verify needs exactly one of --n or --multidegree");
  std::ofstream dump_file;
  std::ostream* dump = nullptr;
  if (a.dump_matrix) {
    dump_file.open(*a.dump_matrix);
    if (!dump_file)
      throw UsageError("cannot open " + *a.dump_matrix);
    dump = &dump_file;
  }

  std::string target;
  RankReport rep;
  std::vector<Check> checks;
  if (a.n) {
    const int n = *a.n;
    target = "n=" + std::to_string(n);
    rep = analyze_multilinear(n, a.oracle, dump);
    const BigCount formula = codimension(n);
    checks.push_back({"quotient_dim", to_string(rep.quotient_dim()),
                      to_string(formula), rep.quotient_dim() == formula});
    if (n <= 5) {
      const Decomposition oracle = oracle_multiplicities(n, a.oracle.threads);
      const Decomposition closed = sn_decomposition(n);
      checks.push_back({"multiplicities", format_sum(oracle),
                        format_sum(closed), oracle == closed});
    }
  } else {
    const auto parts = parse_int_list(*a.multidegree);
    const MultiDegree l(parts);
    target = "multidegree=" + l.str();
    rep = analyze_multigraded(parts, a.oracle, dump);
    const BigCount formula = multigraded_dim(l);
    checks.push_back({"quotient_dim", to_string(rep.quotient_dim()),
                      to_string(formula), rep.quotient_dim() == formula});
  }

  bool all = true;
  for (const auto& c : checks)
    all = all && c.pass;

  switch (fmt) {
  case Format::pretty:
    out << "verify " << target << "\n";
    out << "ambient monomials " << rep.ambient << ", spanning elements "
        << rep.spanning_rows << "\n";
    out << "rank mod " << rep.prime << ": " << rep.rank_mod_prime << "\n";
    if (rep.rank_mod_second_prime)
      out << "rank mod " << *rep.second_prime << ": "
          << *rep.rank_mod_second_prime << "\n";
    if (rep.rank_rational)
      out << "rank over Q: " << *rep.rank_rational << "\n";
    for (const auto& c : checks) {
      out << (c.pass ? "PASS" : "FAIL") << ": ";
      if (c.name == "quotient_dim")
        out << "quotient " << c.oracle << " = formula " << c.formula;
      else
        out << "multiplicities " << (c.pass ? "match" : "differ")
            << "\n  oracle:  " << c.oracle << "\n  formula: " << c.formula;
      out << "\n";
    }
    break;
  case Format::json: {
    ordered_json j;
    j["target"] = target;
    j["ambient"] = rep.ambient;
    j["spanning_elements"] = rep.spanning_rows;
    j["prime"] = std::to_string(rep.prime);
    j["rank_mod_prime"] = rep.rank_mod_prime;
    if (rep.rank_mod_second_prime) {
      j["second_prime"] = std::to_string(*rep.second_prime);
      j["rank_mod_second_prime"] = *rep.rank_mod_second_prime;
    }
    if (rep.rank_rational)
      j["rank_rational"] = *rep.rank_rational;
    ordered_json cs = ordered_json::array();
    for (const auto& c : checks)
      cs.push_back({{"check", c.name},
                    {"oracle", c.oracle},
                    {"formula", c.formula},
                    {"pass", c.pass}});
    j["checks"] = std::move(cs);
    j["pass"] = all;
    out << j.dump(2) << "\n";
    break;
  }
  case Format::csv:
    out << "target,check,oracle,formula,pass\n";
    for (const auto& c : checks)
      out << target << ',' << c.name << ",\"" << c.oracle << "\",\""
          << c.formula << "\"," << (c.pass ? "PASS" : "FAIL") << "\n";
    break;
  }
  return all ? exit_ok : exit_failed;
}

inline int cmd_chartable(int n, Format fmt, std::ostream& out) {
  const CharacterTable t = character_table(n);
  switch (fmt) {
  case Format::json:
    out << to_json(t).dump(2) << "\n";
    break;
  case Format::pretty:
    out << "S_" << n << " characters (rows: irreducibles, columns: classes)\n";
    out << "classes:";
    for (const auto& p : t.labels)
      out << ' ' << p.str();
    out << "\n";
    for (std::size_t i = 0; i < t.labels.size(); ++i)
      out << t.labels[i].str() << ": " << join(t.values[i], ' ') << "\n";
    break;
  case Format::csv:
    out << "irreducible";
    for (const auto& p : t.labels)
      out << ",\"" << p.str() << '"';
    out << "\n";
    for (std::size_t i = 0; i < t.labels.size(); ++i)
      out << '"' << t.labels[i].str() << "\"," << join(t.values[i], ',')
          << "\n";
    break;
  }
  return exit_ok;
}

/// Runs one command line. Normal output goes to `out` (or the --out file),
/// diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Module structure of free assosymmetric algebras"};
  app.name("assosym");
  app.require_subcommand(1, 1);
  app.set_config("--config", "", "key=value file with default options");

  std::string format = "pretty";
  std::string out_path;
  app.add_option("--format", format, "pretty, json or csv")
      ->check(CLI::IsMember({"pretty", "json", "csv"}));
  app.add_option("--out", out_path, "write output to FILE");

  DecomposeArgs dec;
  auto* decompose = app.add_subcommand("decompose", "irreducible decomposition");
  decompose->add_option("n", dec.n, "degree")->required();
  decompose->add_option("--group", dec.group, "S, A or GL")
      ->check(CLI::IsMember({"S", "A", "GL"}));
  decompose->add_option("--dim", dec.dim, "dimension of V (GL, or A-Weyl)");
  decompose->add_option("--split", dec.split,
                        "A_n self-conjugate bookkeeping: halved or "
                        "restriction");

  int max_n = 0;
  bool with_chi = false;
  auto* sequences =
      app.add_subcommand("sequences", "codimension and colength table");
  sequences->add_option("max_n", max_n, "last degree")->required();
  sequences->add_flag("--cocharacter", with_chi,
                      "include cocharacter values (n <= 10)");

  DimsArgs dims_args;
  auto* dims = app.add_subcommand("dims", "graded and multigraded dimensions");
  dims->add_option("--n", dims_args.n, "degree");
  dims->add_option("--r", dims_args.r, "number of generators");
  dims->add_option("--multidegree", dims_args.multidegree, "e.g. 2,1");
  dims->add_flag("--enumerate", dims_args.enumerate,
                 "cross-check against basis enumeration");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "check formulas by elimination");
  verify->add_option("--n", ver.n, "multilinear degree (2..6)");
  verify->add_option("--multidegree", ver.multidegree, "e.g. 2,1");
  verify->add_option("--prime", ver.oracle.prime, "modulus below 2^32");
  verify->add_option("--second-prime", ver.oracle.second_prime,
                     "second modulus for degree 6");
  verify->add_flag("--allow-n6", ver.oracle.allow_n6,
                   "permit the degree-6 modular run");
  verify->add_option("--threads", ver.oracle.threads,
                     "generation threads (results are identical)")
      ->check(CLI::Range(1, 256));
  verify->add_option("--dump-matrix", ver.dump_matrix,
                     "write spanning rows as sparse triplets");

  int table_n = 0;
  auto* chartable =
      app.add_subcommand("chartable", "character table of S_n (n <= 12)");
  chartable->add_option("n", table_n, "degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  const Format fmt = format == "json"  ? Format::json
                     : format == "csv" ? Format::csv
                                       : Format::pretty;
  std::ostringstream buffer;
  int code = exit_ok;
  try {
    if (*decompose)
      code = cmd_decompose(dec, fmt, buffer);
    else if (*sequences)
      code = cmd_sequences(max_n, with_chi, fmt, buffer);
    else if (*dims)
      code = cmd_dims(dims_args, fmt, buffer);
    else if (*verify)
      code = cmd_verify(ver, fmt, buffer);
    else if (*chartable)
      code = cmd_chartable(table_n, fmt, buffer);
  } catch (const RankMismatchError& e) {
    err << "verification error: " << e.what() << "\n";
    return exit_failed;
  } catch (const NonIntegralityError& e) {
    err << "verification error: " << e.what() << "\n";
    return exit_failed;
  } catch (const ZeroPartError& e) {
    err << "error: zero part: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      err << "error: cannot write " << out_path << "\n";
      return exit_usage;
    }
    f << buffer.str();
  } else {
    out << buffer.str();
  }
  return code;
}

} // namespace assosym::cli

#endif // ASSOSYM_TOOLS_CLI_HPP
