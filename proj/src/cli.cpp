// Copyright 2026 The jetcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jetcalc/cli.hpp"

#include <chrono>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "jetcalc/cache.hpp"
#include "jetcalc/dimension.hpp"
#include "jetcalc/error.hpp"
#include "jetcalc/format.hpp"
#include "jetcalc/invariants.hpp"
#include "jetcalc/jet.hpp"

namespace jetcalc {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommandConfig {
  int k = 0;
  int r = 0;
  int m = -1;
  int m_max = -1;
  int j = 0;
  int s = 0;
  int times = 1;
  int depth = -1;
  std::string m_range;
  std::string format = "text";
  std::string convention = "normalized";
  std::string group = "Gk";
  std::string phi;
  bool unipotent = false;
  std::vector<std::string> polys;
  std::string poly_file;
  std::string cache_dir;
  bool no_cache = false;
  bool verbose = false;
  std::size_t size_limit = kDefaultSizeLimit;
};

bool json_output(const CommandConfig& c) { return c.format == "json"; }

void emit_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

std::vector<Polynomial> input_polys(const CommandConfig& c) {
  std::vector<Polynomial> out;
  for (const std::string& text : c.polys) {
    try {
      out.push_back(parse_polynomial(text));
    } catch (const Error& e) {
      throw UsageError(std::string("--poly: ") + e.what());
    }
  }
  if (!c.poly_file.empty()) {
    std::ifstream in(c.poly_file);
    if (!in) throw Error(ErrorKind::io, "cannot read " + c.poly_file);
    std::string line;
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      try {
        out.push_back(parse_polynomial(line));
      } catch (const Error& e) {
        throw UsageError("--poly-file " + c.poly_file + ": " + e.what());
      }
    }
  }
  return out;
}

std::vector<JetPolynomial> input_jets(const CommandConfig& c) {
  std::vector<JetPolynomial> out;
  for (Polynomial& p : input_polys(c)) out.push_back(JetPolynomial::infer(std::move(p)));
  return out;
}

JetPolynomial single_jet(const CommandConfig& c) {
  auto polys = input_jets(c);
  if (polys.size() != 1) throw UsageError("--poly: expected exactly one polynomial");
  return polys.front();
}

void require(bool given, const char* flag) {
  if (!given) throw UsageError(std::string(flag) + " is required");
}

void print_poly(std::ostream& out, const CommandConfig& c, const Polynomial& p) {
  if (json_output(c)) emit_json(out, to_json(p));
  else out << to_string(p) << '\n';
}

void print_poly_list(std::ostream& out, const CommandConfig& c, const std::vector<JetPolynomial>& ps) {
  if (json_output(c)) {
    nlohmann::json arr = nlohmann::json::array();
    for (const JetPolynomial& p : ps) arr.push_back(to_json(p.body()));
    emit_json(out, arr);
  } else {
    for (const JetPolynomial& p : ps) out << to_string(p.body()) << '\n';
  }
}

// ---------------------------------------------------------------- commands

void cmd_faa_di_bruno(const CommandConfig& c, std::ostream& out) {
  require(c.k > 0, "--k");
  const FaaDiBrunoMatrix m = faa_di_bruno(c.k);
  if (json_output(c)) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : m.entries()) {
      nlohmann::json r = nlohmann::json::array();
      for (const Polynomial& e : row) r.push_back(to_string(e));
      rows.push_back(r);
    }
    emit_json(out, rows);
    return;
  }
  for (const auto& row : m.entries()) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << to_string(row[i]);
    out << '\n';
  }
}

Reparametrization parse_phi(const std::string& text) {
  std::vector<Rational> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      coeffs.push_back(Rational::parse(item));
    } catch (const Error& e) {
      throw UsageError(std::string("--phi: ") + e.what());
    }
  }
  if (coeffs.empty()) throw UsageError("--phi: expected comma-separated coefficients a_1,...,a_k");
  return Reparametrization::concrete(coeffs);
}

void cmd_pullback(const CommandConfig& c, std::ostream& out) {
  const JetPolynomial p = single_jet(c);
  std::optional<Reparametrization> phi;
  int k = c.k > 0 ? c.k : p.config().k;
  if (!c.phi.empty()) {
    if (c.unipotent) throw UsageError("--phi and --unipotent are exclusive");
    phi = parse_phi(c.phi);
    if (c.k > 0 && phi->order() != c.k) throw UsageError("--phi: length differs from --k");
  } else {
    phi = c.unipotent ? Reparametrization::formal_unipotent(k) : Reparametrization::formal(k);
  }
  print_poly(out, c, pullback(p, *phi).body());
}

void cmd_derive(const CommandConfig& c, std::ostream& out) {
  print_poly(out, c, total_derivative(single_jet(c), c.times).body());
}

void cmd_wronskian(const CommandConfig& c, std::ostream& out) {
  const auto args = input_jets(c);
  if (args.empty()) throw UsageError("--poly: at least one polynomial is required");
  print_poly(out, c, wronskian(args).body());
}

void cmd_bracket(const CommandConfig& c, std::ostream& out) {
  const auto args = input_jets(c);
  if (args.size() != 2) throw UsageError("--poly: bracket takes exactly two polynomials");
  print_poly(out, c, bracket(args[0], args[1], parse_convention(c.convention)).body());
}

void cmd_qseq(const CommandConfig& c, std::ostream& out) {
  require(c.k > 0, "--k");
  require(c.r > 0, "--r");
  print_poly_list(out, c, q_sequence(JetConfig(c.k, c.r), c.k, parse_convention(c.convention)));
}

void cmd_check(const CommandConfig& c, std::ostream& out) {
  JetPolynomial p = single_jet(c);
  if (c.k > 0) p = JetPolynomial(p.body(), JetConfig(c.k, p.config().r));
  const InvarianceReport report = check_invariance(p, parse_group(c.group));
  if (json_output(c)) emit_json(out, report.to_json());
  else out << report.to_text() << '\n';
}

void cmd_coord_change(const CommandConfig& c, std::ostream& out) {
  require(c.k > 0, "--k");
  require(c.r > 0, "--r");
  require(c.j > 0, "--j");
  require(c.s > 0, "--s");
  const CoordinateChangeResult res = coordinate_change(JetConfig(c.k, c.r), c.j, c.s);
  if (json_output(c)) {
    emit_json(out, {{"component", res.component},
                    {"order", res.order},
                    {"numerator", to_json(res.numerator.body())},
                    {"denominator_exponent", res.denominator_exponent}});
    return;
  }
  out << "numerator " << to_string(res.numerator.body()) << '\n'
      << "denominator x[1,1]^" << res.denominator_exponent << '\n';
}

void cmd_picard(const CommandConfig& c, std::ostream& out) {
  const auto sols = input_jets(c);
  if (sols.empty()) throw UsageError("--poly: at least one solution is required");
  const PicardOperator op = picard_operator(sols);
  if (json_output(c)) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const RationalFunction& f : op.coefficients)
      coeffs.push_back({{"numerator", to_string(f.numerator())},
                        {"denominator", to_string(f.denominator())}});
    emit_json(out, {{"order", op.order}, {"coefficients", coeffs}});
    return;
  }
  out << "order " << op.order << '\n';
  for (std::size_t i = 0; i < op.coefficients.size(); ++i)
    out << "c" << i + 1 << " " << op.coefficients[i].to_string() << '\n';
}

void cmd_hilbert(const CommandConfig& c, std::ostream& out) {
  require(c.k > 0, "--k");
  require(c.r > 0, "--r");
  require(c.m_max >= 0, "--m-max");
  const HilbertTable t = hilbert_gg(JetConfig(c.k, c.r), c.m_max);
  if (json_output(c)) {
    emit_json(out, t.to_json());
    return;
  }
  for (std::size_t m = 0; m < t.coefficients.size(); ++m)
    out << m << ' ' << t.coefficients[m].get_str() << '\n';
}

void cmd_monomials(const CommandConfig& c, std::ostream& out) {
  require(c.k > 0, "--k");
  require(c.r > 0, "--r");
  require(c.m >= 0, "--m");
  const auto monos = enumerate_monomials(JetConfig(c.k, c.r), c.m);
  if (json_output(c)) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Monomial& m : monos) arr.push_back(to_string(m));
    emit_json(out, arr);
    return;
  }
  for (const Monomial& m : monos) out << to_string(m) << '\n';
}

std::vector<int> weights_requested(const CommandConfig& c) {
  if (!c.m_range.empty()) {
    if (c.m >= 0) throw UsageError("--m and --m-range are exclusive");
    const auto colon = c.m_range.find(':');
    int lo = -1;
    int hi = -1;
    try {
      if (colon == std::string::npos) throw std::invalid_argument("no colon");
      std::size_t used = 0;
      lo = std::stoi(c.m_range.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("trailing");
      const std::string rest = c.m_range.substr(colon + 1);
      hi = std::stoi(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw UsageError("--m-range: expected A:B");
    }
    if (lo < 0 || hi < lo) throw UsageError("--m-range: expected 0 <= A <= B");
    std::vector<int> ms;
    for (int m = lo; m <= hi; ++m) ms.push_back(m);
    return ms;
  }
  require(c.m >= 0, "--m");
  return {c.m};
}

void cmd_inv_basis(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  require(c.k > 0, "--k");
  require(c.r > 0, "--r");
  const JetConfig config(c.k, c.r);
  const std::vector<int> ms = weights_requested(c);
  const std::optional<BasisCache> cache =
      c.no_cache ? std::nullopt
                 : std::optional<BasisCache>(c.cache_dir.empty() ? BasisCache::default_directory()
                                                                 : std::filesystem::path(c.cache_dir));
  struct Outcome {
    InvariantBasis basis;
    std::string log;
  };
  auto task = [&](int m) {
    Outcome o;
    std::ostringstream log;
    const auto start = std::chrono::steady_clock::now();
    CachedBasis result;
    if (cache) {
      result = cached_invariant_basis(*cache, config, m, c.size_limit, &log);
    } else {
      result.basis = invariant_basis(config, m, c.size_limit, &result.shape);
    }
    const auto ms_taken = std::chrono::duration_cast<std::chrono::microseconds>(
                              std::chrono::steady_clock::now() - start).count() / 1000.0;
    if (c.verbose) {
      if (result.from_cache)
        log << "inv-basis m=" << m << ": cache hit " << cache->path_for({c.k, c.r, m, Group::unipotent}).string()
            << ", no elimination (" << ms_taken << " ms)\n";
      else
        log << "inv-basis m=" << m << ": eliminated " << result.shape.rows << "x" << result.shape.cols
            << " system (" << ms_taken << " ms)\n";
    }
    o.basis = std::move(result.basis);
    o.log = log.str();
    return o;
  };
  std::vector<std::future<Outcome>> futures;
  for (int m : ms) futures.push_back(std::async(ms.size() > 1 ? std::launch::async : std::launch::deferred, task, m));
  std::vector<Outcome> outcomes;
  std::optional<Error> first_error;
  for (auto& f : futures) {
    try {
      outcomes.push_back(f.get());
    } catch (const Error& e) {
      if (!first_error) first_error = e;
    }
  }
  for (const Outcome& o : outcomes) err << o.log;
  if (first_error) throw *first_error;

  if (json_output(c)) {
    if (outcomes.size() == 1) {
      emit_json(out, outcomes.front().basis.to_json());
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const Outcome& o : outcomes) arr.push_back(o.basis.to_json());
      emit_json(out, arr);
    }
    return;
  }
  for (const Outcome& o : outcomes) {
    out << "k=" << c.k << " r=" << c.r << " m=" << o.basis.weight << " dimension "
        << o.basis.dimension() << '\n';
    for (const JetPolynomial& p : o.basis.basis) out << to_string(p.body()) << '\n';
  }
}

void cmd_gen_check(const CommandConfig& c, std::ostream& out) {
  require(c.k > 0, "--k");
  require(c.r > 0, "--r");
  require(c.m >= 0, "--m");
  std::vector<JetPolynomial> gens;
  const JetConfig config(c.k, c.r);
  for (const JetPolynomial& g : input_jets(c)) {
    if (!config.contains(VarId::jet(std::max(1, g.body().max_component()), std::max(1, g.body().max_jet_order()))))
      throw Error(ErrorKind::bounds, "generator " + to_string(g.body()) + " lies outside (k, r)");
    gens.emplace_back(g.body(), config);
  }
  const GenerationReport rep = generation_check(config, c.m, gens, c.depth, c.size_limit);
  if (json_output(c)) {
    emit_json(out, rep.to_json());
    return;
  }
  out << "spanned_dim " << rep.spanned_dim << '\n'
      << "invariant_dim " << rep.invariant_dim << '\n'
      << "product_span_dim " << rep.product_span_dim << '\n'
      << "depth " << rep.depth << '\n'
      << "cogenerators " << rep.cogenerators.size() << '\n';
  for (const JetPolynomial& p : rep.cogenerators) out << to_string(p.body()) << '\n';
}

void cmd_growth_check(const CommandConfig& c, std::ostream& out) {
  require(c.k > 0, "--k");
  require(c.r > 0, "--r");
  require(c.m_max >= 0, "--m-max");
  const GrowthReport rep = growth_exponent_check(JetConfig(c.k, c.r), c.m_max);
  if (json_output(c)) {
    emit_json(out, rep.to_json());
    return;
  }
  out << "modulus " << rep.modulus << " expected_degree " << rep.expected_degree << " ok "
      << (rep.ok ? "true" : "false") << '\n';
  for (const ResidueClassGrowth& cls : rep.classes)
    out << "residue " << cls.residue << " samples " << cls.samples << " degree " << cls.degree
        << " leading_difference " << cls.leading_difference.get_str() << " ok "
        << (cls.ok ? "true" : "false") << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig c;
  CLI::App app{"jetcalc: exact computations with invariant jet differentials", "jetcalc"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--verbose", c.verbose, "Timing and cache diagnostics on stderr");
  };
  auto add_k = [&](CLI::App* sub) { sub->add_option("--k", c.k, "Jet order")->check(CLI::PositiveNumber); };
  auto add_r = [&](CLI::App* sub) { sub->add_option("--r", c.r, "Number of components")->check(CLI::PositiveNumber); };
  auto add_polys = [&](CLI::App* sub) {
    sub->add_option("--poly", c.polys, "Polynomial in text form (repeatable)");
    sub->add_option("--poly-file", c.poly_file, "File with one polynomial per line");
  };
  auto add_limit = [&](CLI::App* sub) {
    sub->add_option("--size-limit", c.size_limit, "Maximum number of monomial columns")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* fdb = app.add_subcommand("faa-di-bruno", "Matrix of the formal reparametrization");
  common(fdb);
  add_k(fdb);

  CLI::App* pb = app.add_subcommand("pullback", "Pull a polynomial back along a reparametrization");
  common(pb);
  add_k(pb);
  add_polys(pb);
  pb->add_option("--phi", c.phi, "Concrete coefficients a_1,...,a_k (formal when absent)");
  pb->add_flag("--unipotent", c.unipotent, "Formal element with a_1 = 1");

  CLI::App* der = app.add_subcommand("derive", "Total derivative");
  common(der);
  add_polys(der);
  der->add_option("--times", c.times, "Number of derivatives")->check(CLI::NonNegativeNumber);

  CLI::App* wr = app.add_subcommand("wronskian", "Wronskian determinant");
  common(wr);
  add_polys(wr);

  CLI::App* br = app.add_subcommand("bracket", "Bracket of two homogeneous polynomials");
  common(br);
  add_polys(br);
  br->add_option("--convention", c.convention)->check(CLI::IsMember({"normalized", "merker"}));

  CLI::App* qs = app.add_subcommand("qseq", "Bracket sequence entries of level k");
  common(qs);
  add_k(qs);
  add_r(qs);
  qs->add_option("--convention", c.convention)->check(CLI::IsMember({"normalized", "merker"}));

  CLI::App* ck = app.add_subcommand("check", "Certify relative or unipotent invariance");
  common(ck);
  add_k(ck);
  add_polys(ck);
  ck->add_option("--group", c.group)->check(CLI::IsMember({"Gk", "Uk"}));

  CLI::App* cc = app.add_subcommand("coord-change", "Numerator of the s-th derivative of f_j o f_1^-1");
  common(cc);
  add_k(cc);
  add_r(cc);
  cc->add_option("--j", c.j, "Component (2..r)")->check(CLI::PositiveNumber);
  cc->add_option("--s", c.s, "Derivative order (1..k)")->check(CLI::PositiveNumber);

  CLI::App* pc = app.add_subcommand("picard", "Monic operator annihilating the given solutions");
  common(pc);
  add_polys(pc);

  CLI::App* hb = app.add_subcommand("hilbert", "Green-Griffiths fiber dimensions");
  common(hb);
  add_k(hb);
  add_r(hb);
  hb->add_option("--m-max", c.m_max)->check(CLI::NonNegativeNumber);

  CLI::App* mo = app.add_subcommand("monomials", "Monomials of weighted degree m");
  common(mo);
  add_k(mo);
  add_r(mo);
  mo->add_option("--m", c.m)->check(CLI::NonNegativeNumber);

  CLI::App* ib = app.add_subcommand("inv-basis", "Basis of the U_k-invariant fiber of weight m");
  common(ib);
  add_k(ib);
  add_r(ib);
  add_limit(ib);
  ib->add_option("--m", c.m)->check(CLI::NonNegativeNumber);
  ib->add_option("--m-range", c.m_range, "Inclusive weight range A:B");
  ib->add_option("--cache-dir", c.cache_dir, "Cache directory (default $JETCALC_CACHE)");
  ib->add_flag("--no-cache", c.no_cache, "Always compute");

  CLI::App* gc = app.add_subcommand("gen-check", "Compare generated span with the invariant fiber");
  common(gc);
  add_k(gc);
  add_r(gc);
  add_limit(gc);
  add_polys(gc);
  gc->add_option("--m", c.m)->check(CLI::NonNegativeNumber);
  gc->add_option("--depth", c.depth, "Differential depth (default k-1)")->check(CLI::NonNegativeNumber);

  CLI::App* gr = app.add_subcommand("growth-check", "Degree of fiber dimension growth");
  common(gr);
  add_k(gr);
  add_r(gr);
  gr->add_option("--m-max", c.m_max)->check(CLI::NonNegativeNumber);

  std::vector<std::string> argv_store{"jetcalc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (fdb->parsed()) cmd_faa_di_bruno(c, out);
    else if (pb->parsed()) cmd_pullback(c, out);
    else if (der->parsed()) cmd_derive(c, out);
    else if (wr->parsed()) cmd_wronskian(c, out);
    else if (br->parsed()) cmd_bracket(c, out);
    else if (qs->parsed()) cmd_qseq(c, out);
    else if (ck->parsed()) cmd_check(c, out);
    else if (cc->parsed()) cmd_coord_change(c, out);
    else if (pc->parsed()) cmd_picard(c, out);
    else if (hb->parsed()) cmd_hilbert(c, out);
    else if (mo->parsed()) cmd_monomials(c, out);
    else if (ib->parsed()) cmd_inv_basis(c, out, err);
    else if (gc->parsed()) cmd_gen_check(c, out);
    else if (gr->parsed()) cmd_growth_check(c, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace jetcalc
