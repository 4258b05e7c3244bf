#ifndef NASHFAN_CLI_HPP
#define NASHFAN_CLI_HPP

// Command-line front end. Exit codes: 0 success, 1 a verification claim
// failed, 2 usage or engine error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "nashfan/io.hpp"
#include "nashfan/svg.hpp"

namespace nashfan::cli {

enum class Command { gb, fan, nash, verify, figures };
enum class Format { json, text, svg };

struct CliConfig {
  Command command = Command::gb;
  unsigned n = 1;
  unsigned n_max = 8;
  std::optional<Cone2> cone;
  std::string output_path;  // empty: standard output
  Format format = Format::text;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitError = 2;

/// "x1,y1,x2,y2" -> cone((x1,y1),(x2,y2)).
inline Cone2 parse_cone(const std::string& s) {
  std::vector<Integer> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Integer x;
    if (item.empty() || x.set_str(item, 10) != 0)
      throw Error(ErrorCode::ParseError, "bad integer '" + item + "' in --cone " + s);
    v.push_back(x);
  }
  if (v.size() != 4) throw Error(ErrorCode::ParseError, "--cone expects x1,y1,x2,y2, got " + s);
  return Cone2({v[0], v[1]}, {v[2], v[3]});
}

namespace detail {

/// A3 unless a cone is given; other surfaces use the rows [σ.ray2, σ.ray1].
inline A3Context context_for(const std::optional<Cone2>& cone) {
  if (!cone) return a3();
  auto sg = make_semigroup(dual_cone(*cone));
  for (const auto& g : sg->generators())
    if (sgn(g.x) < 0 || sgn(g.y) < 0)
      throw Error(ErrorCode::DualNotNonnegative,
                  "Hilbert basis element " + to_string(g) + " of the dual cone has a negative coordinate");
  if (*sg == *a3().semigroup) return a3();
  const Cone2& sigma = sg->support_cone();
  return A3Context{sg, MatrixOrdering(sg, {sigma.ray2(), sigma.ray1()})};
}

inline void write_basis_text(std::ostream& os, const MarkedBasis& b, const std::string& indent = "") {
  for (const auto& e : b.elements()) os << indent << to_text(e.poly, b.ordering(), &e.mark) << '\n';
}

inline int run_gb(const CliConfig& c, std::ostream& os) {
  const A3Context ctx = context_for(c.cone);
  MarkedBasis b = buchberger(jn_generators(ctx.semigroup, c.n), ctx.ordering);
  if (c.format == Format::json) os << io::to_json(b).dump(2) << '\n';
  else write_basis_text(os, b);
  return kExitOk;
}

inline int run_fan(const CliConfig& c, std::ostream& os) {
  const Cone2 surface = c.cone ? *c.cone : a3().semigroup->support_cone();
  NashFanResult r = nash_fan(surface, c.n);
  switch (c.format) {
    case Format::json: os << io::to_json(r.cones, r.fan.support).dump(2) << '\n'; break;
    case Format::svg: os << svg::fan_svg(r.fan); break;
    case Format::text:
      for (const auto& gc : r.cones) {
        os << to_string(gc.cone) << " multiplicity " << multiplicity(gc.cone) << '\n';
        write_basis_text(os, gc.basis, "  ");
      }
      break;
  }
  return kExitOk;
}

inline int run_nash(const CliConfig& c, std::ostream& os) {
  NashFanResult r = nash_fan(*c.cone, c.n);
  if (c.format == Format::json) {
    os << io::to_json(r).dump(2) << '\n';
    return kExitOk;
  }
  if (r.is_singular) os << "SINGULAR (max multiplicity " << r.max_multiplicity() << ")\n";
  else os << "SMOOTH\n";
  for (std::size_t i = 0; i < r.cones.size(); ++i)
    os << "  " << to_string(r.cones[i].cone) << " multiplicity " << r.multiplicities[i] << '\n';
  return kExitOk;
}

inline int run_verify(const CliConfig& c, std::ostream& os) {
  VerificationReport rep = verify_claims(c.n_max);
  if (c.format == Format::json) {
    os << io::to_json(rep).dump(2) << '\n';
  } else {
    for (const auto& r : rep.results)
      for (const auto& cl : r.claims)
        os << "n=" << r.n << ' ' << cl.claim_id << ' ' << (cl.pass ? "PASS" : "FAIL") << ' ' << cl.statement
           << " [" << cl.witness << "]\n";
    os << (rep.all_pass() ? "ALL PASS" : "SOME CLAIMS FAILED") << '\n';
  }
  return rep.all_pass() ? kExitOk : kExitClaimFailed;
}

inline int run_figures(const CliConfig& c, std::ostream& os) {
  os << svg::figure_svg(c.n);
  return kExitOk;
}

}  // namespace detail

inline std::optional<std::string> validate(const CliConfig& c) {
  if (c.n < 1) return "--n must be at least 1";
  if (c.n_max < 1) return "--n-max must be at least 1";
  if (c.command == Command::nash && !c.cone) return "nash requires --cone x1,y1,x2,y2";
  if (c.format == Format::svg && c.command != Command::figures && c.command != Command::fan)
    return "--format svg is only available for fan and figures";
  if (c.command == Command::figures && c.format != Format::svg) return "figures only produces --format svg";
  return std::nullopt;
}

/// Executes a validated config, writing the artifact to --out or `out`.
inline int run(const CliConfig& c, std::ostream& out, std::ostream& err) {
  if (auto msg = validate(c)) {
    err << "error: " << *msg << '\n';
    return kExitError;
  }
  try {
    std::ostringstream buf;
    int code = kExitOk;
    switch (c.command) {
      case Command::gb: code = detail::run_gb(c, buf); break;
      case Command::fan: code = detail::run_fan(c, buf); break;
      case Command::nash: code = detail::run_nash(c, buf); break;
      case Command::verify: code = detail::run_verify(c, buf); break;
      case Command::figures: code = detail::run_figures(c, buf); break;
    }
    if (c.output_path.empty()) {
      out << buf.str();
    } else {
      std::ofstream f(c.output_path, std::ios::binary);
      if (!f || !(f << buf.str())) {
        err << "error: cannot write " << c.output_path << '\n';
        return kExitError;
      }
    }
    return code;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

/// Parses argv into a config; on failure or --help returns the exit code instead.
inline std::variant<CliConfig, int> parse(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  std::string cone_text, format_text;
  CLI::App app{"Gröbner fans of toric surfaces and higher Nash blowups"};
  app.require_subcommand(1);

  struct Sub {
    Command cmd;
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {Command::gb, "gb", "reduced marked Gröbner basis of J_n"},
      {Command::fan, "fan", "Gröbner fan of J_n over a surface cone (default A3)"},
      {Command::nash, "nash", "singularity verdict for the normalized n-th Nash blowup"},
      {Command::verify, "verify", "check the A3 claims for n = 1..n_max"},
      {Command::figures, "figures", "SVG diagram of P_n and D_n"},
  };
  std::vector<std::pair<CLI::App*, Command>> registered;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    if (s.cmd != Command::verify) sub->add_option("--n", cfg.n, "positive integer n")->check(CLI::PositiveNumber);
    if (s.cmd == Command::verify)
      sub->add_option("--n-max", cfg.n_max, "largest n to verify")->check(CLI::PositiveNumber);
    if (s.cmd == Command::gb || s.cmd == Command::fan || s.cmd == Command::nash) {
      auto* opt = sub->add_option("--cone", cone_text, "surface cone rays x1,y1,x2,y2")->allow_extra_args(false);
      if (s.cmd == Command::nash) opt->required();
    }
    sub->add_option("--format", format_text, "json, text or svg")->check(CLI::IsMember({"json", "text", "svg"}));
    sub->add_option("--out", cfg.output_path, "output file (default: standard output)");
    registered.emplace_back(sub, s.cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }
  for (const auto& [sub, cmd] : registered)
    if (sub->parsed()) cfg.command = cmd;
  if (format_text.empty()) cfg.format = cfg.command == Command::figures ? Format::svg : Format::text;
  else cfg.format = format_text == "json" ? Format::json : format_text == "svg" ? Format::svg : Format::text;
  if (!cone_text.empty()) {
    try {
      cfg.cone = parse_cone(cone_text);
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kExitError;
    }
  }
  return cfg;
}

inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  auto parsed = parse(argc, argv, out, err);
  if (auto* code = std::get_if<int>(&parsed)) return *code;
  return run(std::get<CliConfig>(parsed), out, err);
}

}  // namespace nashfan::cli

#endif  // NASHFAN_CLI_HPP
