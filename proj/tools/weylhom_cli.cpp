#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "weylhom/report.hpp"

namespace {

using json = nlohmann::ordered_json;
using weylhom::Claim;
using weylhom::Report;

std::string shape_string(const weylhom::Partition& shape) {
  std::ostringstream os;
  os << '(' << shape.part(0) << ',' << shape.part(1) << ')';
  return os.str();
}

std::string dims_string(const std::vector<weylhom::Index>& dims) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
  os << ']';
  return os.str();
}

std::string poly_string(const weylhom::SymPolyInt& f) {
  if (f.coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.coeffs) {
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const long long mag = c < 0 ? -c : c;
    bool constant = true;
    for (int x : e)
      if (x) constant = false;
    bool printed = mag != 1 || constant;
    if (printed) os << mag;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (printed) os << '*';
      os << 'x' << i + 1;
      if (e[i] > 1) os << '^' << e[i];
      printed = true;
    }
  }
  return os.str();
}

const char* bool_string(bool v) { return v ? "true" : "false"; }

struct Output {
  bool as_json = false;
  bool timing = false;
};

void emit(const Report& rep, const Output& out) {
  if (out.as_json) {
    json doc;
    doc["command"] = rep.command;
    json params = json::object();
    for (const auto& [k, v] : rep.params) params[k] = v;
    doc["params"] = params;
    json claims = json::array();
    for (const auto& c : rep.claims) {
      json jc;
      jc["statement_id"] = c.statement_id;
      jc["pass"] = c.pass;
      json values = json::object();
      for (const auto& [k, v] : c.values) values[k] = v;
      jc["values"] = values;
      claims.push_back(std::move(jc));
    }
    doc["claims"] = std::move(claims);
    doc["timing_ms"] = rep.timing_ms;
    std::cout << doc.dump(2) << '\n';
    return;
  }
  if (std::getenv("WEYLHOM_QUIET") == nullptr) {
    std::cout << rep.command;
    for (const auto& [k, v] : rep.params) std::cout << ' ' << k << '=' << v;
    std::cout << '\n';
  }
  for (const auto& c : rep.claims) {
    std::cout << (c.pass ? "  [ok]   " : "  [FAIL] ") << c.statement_id;
    for (const auto& [k, v] : c.values) std::cout << "  " << k << '=' << v;
    std::cout << '\n';
  }
  if (out.timing) std::cout << "  timing_ms=" << rep.timing_ms << '\n';
}

// Runners return the process exit code: 0 all claims pass, 1 otherwise.
// Contract violations surface as exceptions and exit 2 from main.

class Timer {
 public:
  long long stop(bool enabled) const {
    if (!enabled) return 0;
    auto dt = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int finish(Report& rep, const Timer& timer, const Output& out) {
  rep.timing_ms = timer.stop(out.timing);
  emit(rep, out);
  return rep.all_pass() ? 0 : 1;
}

weylhom::Family parse_family(const std::string& name) {
  if (name == "K") return weylhom::Family::K;
  if (name == "L") return weylhom::Family::L;
  if (name == "M") return weylhom::Family::M;
  return weylhom::Family::N;
}

weylhom::AlgebraKind parse_kind(const std::string& name) {
  return name == "exterior" ? weylhom::AlgebraKind::exterior : weylhom::AlgebraKind::divided;
}

int run_homology(const std::string& family, int r, int d, int n, unsigned p, bool want_character,
                 const Output& out) {
  Timer timer;
  auto complex = weylhom::build_complex(parse_family(family), r, d, n, weylhom::Prime(p));
  auto profile = weylhom::homology_profile(complex);

  Report rep;
  rep.command = "homology";
  rep.params = {{"family", family},
                {"r", std::to_string(r)},
                {"d", std::to_string(complex.d)},
                {"n", std::to_string(n)},
                {"p", std::to_string(p)}};

  Claim terms{"complex.terms"};
  {
    std::ostringstream shapes;
    for (int i = 0; i <= complex.top_degree(); ++i) shapes << shape_string(complex.shapes[i]);
    terms.note("shapes", shapes.str());
    std::vector<weylhom::Index> dims;
    for (const auto& t : complex.terms) dims.push_back(t.dim);
    terms.note("dims", dims_string(dims));
    terms.note("top_degree", complex.top_degree());
  }
  rep.claims.push_back(std::move(terms));

  Claim hom{"homology.profile"};
  hom.note("dims", dims_string(profile.dims));
  hom.note("euler", profile.euler);
  {
    int nonzero = -1;
    bool spread = false;
    for (std::size_t i = 0; i < profile.dims.size(); ++i) {
      if (profile.dims[i] == 0) continue;
      if (nonzero >= 0) spread = true;
      if (nonzero < 0) nonzero = static_cast<int>(i);
    }
    hom.note("concentrated_degree",
             spread ? "none" : (nonzero < 0 ? "empty" : std::to_string(nonzero)));
  }
  rep.claims.push_back(std::move(hom));

  if (want_character) {
    Claim chars{"homology.characters"};
    for (std::size_t i = 0; i < profile.dims.size(); ++i)
      if (profile.dims[i] != 0)
        chars.note("H" + std::to_string(i), poly_string(profile.characters[i]));
    rep.claims.push_back(std::move(chars));
  }
  return finish(rep, timer, out);
}

int run_verify(const std::string& suite, const weylhom::SuiteBounds& bounds, const Output& out) {
  Timer timer;
  Report rep;
  rep.command = "verify";
  rep.params = {{"suite", suite},
                {"kmax", std::to_string(bounds.kmax)},
                {"nmax", std::to_string(bounds.nmax)},
                {"rmax", std::to_string(bounds.rmax)},
                {"abmax", std::to_string(bounds.abmax)}};
  rep.claims = weylhom::run_suite(suite, bounds);
  return finish(rep, timer, out);
}

int run_wfd_table(std::vector<unsigned> primes, int rmax, const Output& out) {
  Timer timer;
  if (primes.empty()) primes = {2, 3, 5};
  Report rep;
  rep.command = "wfd-table";
  {
    std::ostringstream ps;
    for (std::size_t i = 0; i < primes.size(); ++i) ps << (i ? "," : "") << primes[i];
    rep.params = {{"p", ps.str()}, {"rmax", std::to_string(rmax)}};
  }
  for (unsigned pv : primes) {
    weylhom::Prime p(pv);
    for (int r = 0; r <= rmax; ++r) {
      auto row = weylhom::wfd_report(p, r);
      Claim c{"wfd.row"};
      c.pass = row.consistent();
      c.note("p", static_cast<long long>(pv));
      c.note("r", static_cast<long long>(r));
      c.note("theorem_value", row.theorem_value);
      c.note("upper_bound", row.upper_bound);
      std::ostringstream w;
      w << weylhom::family_name(row.witness.family) << "(r=" << row.witness.complex_r
        << ",d=" << row.witness.d << ")";
      if (row.witness.shift) w << "+shift" << row.witness.shift;
      c.note("witness", w.str());
      c.note("witness_length", row.witness.length);
      rep.claims.push_back(std::move(c));
    }
  }
  return finish(rep, timer, out);
}

int run_carter_payne(int a, int b, int d, unsigned p, int e, int n, const std::string& kind,
                     const Output& out) {
  Timer timer;
  auto rep_cp = weylhom::carter_payne_certificate({weylhom::Partition{{a, b}}, d, weylhom::Prime(p), e},
                                                  n, parse_kind(kind));
  Report rep;
  rep.command = "carter-payne";
  rep.params = {{"a", std::to_string(a)}, {"b", std::to_string(b)}, {"d", std::to_string(d)},
                {"p", std::to_string(p)}, {"e", std::to_string(e)}, {"n", std::to_string(n)},
                {"kind", kind}};

  Claim hyp{"carter_payne.hypotheses"};
  hyp.note("d_positive", bool_string(rep_cp.checks.d_positive));
  hyp.note("d_bounded", bool_string(rep_cp.checks.d_bounded));
  hyp.note("congruent", bool_string(rep_cp.checks.congruent));
  hyp.note("mu_is_partition", bool_string(rep_cp.checks.mu_is_partition));
  hyp.note("all", bool_string(rep_cp.checks.all()));
  rep.claims.push_back(std::move(hyp));

  Claim match{"carter_payne.matches_theory"};
  match.note("mu", shape_string(rep_cp.mu));
  match.note("well_defined", bool_string(rep_cp.well_defined));
  match.note("nonzero", bool_string(rep_cp.nonzero));
  match.note("nonzero_expected", bool_string(rep_cp.nonzero_expected));
  match.note("induced_rank", static_cast<long long>(rep_cp.induced_rank));
  match.note("source_dim", static_cast<long long>(rep_cp.source_dim));
  match.note("target_dim", static_cast<long long>(rep_cp.target_dim));
  if (rep_cp.checks.all())
    match.pass = rep_cp.well_defined && (!rep_cp.nonzero_expected || rep_cp.nonzero);
  rep.claims.push_back(std::move(match));
  return finish(rep, timer, out);
}

int run_module_dim(const std::string& kind, int a, int b, int n, unsigned p, bool want_character,
                   const Output& out) {
  if (b > a || b < 0)
    throw std::invalid_argument("module-dim: need a >= b >= 0 (two-row partition)");
  Timer timer;
  weylhom::Partition shape{{a, b}};
  auto module = weylhom::build_module(parse_kind(kind), shape, n, weylhom::Prime(p));

  long long oracle = 0;
  if (parse_kind(kind) == weylhom::AlgebraKind::divided) {
    oracle = weylhom::ssyt_count(shape, n);
  } else {
    mpz_class v = weylhom::binom_exact(n, a) * weylhom::binom_exact(n, b) -
                  weylhom::binom_exact(n, a + 1) * weylhom::binom_exact(n, b - 1);
    oracle = v.get_si();
  }

  Report rep;
  rep.command = "module-dim";
  rep.params = {{"kind", kind},
                {"a", std::to_string(a)},
                {"b", std::to_string(b)},
                {"n", std::to_string(n)},
                {"p", std::to_string(p)}};

  Claim c{"module.dimension"};
  c.pass = static_cast<long long>(module.dim) == oracle;
  c.note("dim", static_cast<long long>(module.dim));
  c.note("oracle", oracle);
  c.note("ambient_dim", static_cast<long long>(module.ambient_dim()));
  c.note("relation_rank", static_cast<long long>(module.relations.rank()));
  rep.claims.push_back(std::move(c));

  if (want_character) {
    Claim ch{"module.character"};
    auto computed = weylhom::module_character(module);
    auto expected = parse_kind(kind) == weylhom::AlgebraKind::divided
                        ? weylhom::schur_poly(shape, n)
                        : weylhom::schur_poly(weylhom::conjugate_partition(shape), n);
    ch.pass = computed == expected;
    ch.note("character", poly_string(computed));
    rep.claims.push_back(std::move(ch));
  }
  return finish(rep, timer, out);
}

int run_identity(int k, int n, const Output& out) {
  Timer timer;
  Report rep;
  rep.command = "identity";
  rep.params = {{"k", std::to_string(k)}, {"n", std::to_string(n)}};
  Claim c{"alternating_schur_identity"};
  c.pass = weylhom::verify_alternating_identity(k, n);
  c.note("k", static_cast<long long>(k));
  c.note("n", static_cast<long long>(n));
  rep.claims.push_back(std::move(c));
  return finish(rep, timer, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-row Weyl and Schur module complexes over GF(p)"};
  app.require_subcommand(1);

  Output out;

  // homology
  auto* homology = app.add_subcommand("homology", "build one complex and report its homology");
  std::string h_family = "K";
  int h_r = 0, h_d = 1, h_n = 2;
  unsigned h_p = 2;
  bool h_character = false;
  homology->add_option("--family", h_family)->check(CLI::IsMember({"K", "L", "M", "N"}))->required();
  homology->add_option("--r", h_r)->required();
  homology->add_option("--d", h_d);
  homology->add_option("--n", h_n);
  homology->add_option("--p", h_p);
  homology->add_flag("--character", h_character, "include surviving homology characters");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string v_suite = "all";
  weylhom::SuiteBounds v_bounds;
  bool v_small = false;
  int v_kmax = -1, v_nmax = -1, v_rmax = -1, v_abmax = -1;
  verify->add_option("--suite", v_suite)
      ->check(CLI::IsMember({"hopf", "modules", "complexes", "identity", "wfd", "all"}));
  verify->add_option("--kmax", v_kmax);
  verify->add_option("--nmax", v_nmax);
  verify->add_option("--rmax", v_rmax);
  verify->add_option("--abmax", v_abmax);
  verify->add_flag("--small", v_small, "quick reduced sweep");

  // wfd-table
  auto* wfd_table = app.add_subcommand("wfd-table", "tabulate the filtration dimension sandwich");
  std::vector<unsigned> w_primes;
  int w_rmax = 12;
  wfd_table->add_option("--p", w_primes, "primes to tabulate (default 2 3 5)");
  wfd_table->add_option("--rmax", w_rmax)->check(CLI::NonNegativeNumber);

  // carter-payne
  auto* carter = app.add_subcommand("carter-payne", "evaluate one morphism certificate");
  int c_a = 0, c_b = 0, c_d = 1, c_e = 1, c_n = 2;
  unsigned c_p = 2;
  std::string c_kind = "divided";
  carter->add_option("--a", c_a)->required();
  carter->add_option("--b", c_b)->required();
  carter->add_option("--d", c_d)->required();
  carter->add_option("--p", c_p)->required();
  carter->add_option("--e", c_e);
  carter->add_option("--n", c_n);
  carter->add_option("--kind", c_kind)->check(CLI::IsMember({"divided", "exterior"}));

  // module-dim
  auto* module_dim = app.add_subcommand("module-dim", "build one module and check its dimension");
  std::string m_kind = "divided";
  int m_a = 0, m_b = 0, m_n = 2;
  unsigned m_p = 2;
  bool m_character = false;
  module_dim->add_option("--kind", m_kind)->check(CLI::IsMember({"divided", "exterior"}));
  module_dim->add_option("--a", m_a)->required();
  module_dim->add_option("--b", m_b)->required();
  module_dim->add_option("--n", m_n);
  module_dim->add_option("--p", m_p);
  module_dim->add_flag("--character", m_character, "check the formal character too");

  // identity
  auto* identity = app.add_subcommand("identity", "check one alternating Schur identity instance");
  int i_k = 0, i_n = 1;
  identity->add_option("--k", i_k)->required()->check(CLI::NonNegativeNumber);
  identity->add_option("--n", i_n)->required()->check(CLI::PositiveNumber);

  for (auto* sub : {homology, verify, wfd_table, carter, module_dim, identity}) {
    sub->add_flag("--json", out.as_json, "emit a single JSON report");
    sub->add_flag("--timing", out.timing, "measure elapsed time (JSON is then not byte-stable)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(homology))
      return run_homology(h_family, h_r, h_d, h_n, h_p, h_character, out);
    if (app.got_subcommand(verify)) {
      weylhom::SuiteBounds bounds = v_small ? weylhom::SuiteBounds::small() : v_bounds;
      if (v_kmax >= 0) bounds.kmax = v_kmax;
      if (v_nmax >= 0) bounds.nmax = v_nmax;
      if (v_rmax >= 0) bounds.rmax = v_rmax;
      if (v_abmax >= 0) bounds.abmax = v_abmax;
      return run_verify(v_suite, bounds, out);
    }
    if (app.got_subcommand(wfd_table)) return run_wfd_table(w_primes, w_rmax, out);
    if (app.got_subcommand(carter))
      return run_carter_payne(c_a, c_b, c_d, c_p, c_e, c_n, c_kind, out);
    if (app.got_subcommand(module_dim))
      return run_module_dim(m_kind, m_a, m_b, m_n, m_p, m_character, out);
    if (app.got_subcommand(identity)) return run_identity(i_k, i_n, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
