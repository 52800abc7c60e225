#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hgff/identities.hpp"
#include "hgff/varieties.hpp"
#include "hgff/zeta.hpp"

using json = nlohmann::ordered_json;
using namespace hgff;

namespace {

constexpr int kOk = 0;
constexpr int kTheoremFailure = 1;
constexpr int kUsage = 2;

json cyclo_json(const CycloNum& x) {
  json coeffs = json::array();
  for (unsigned i = 0; i < x.degree(); ++i) {
    mpq_class c = x.coeff(i);
    coeffs.push_back({c.get_num().get_str(), c.get_den().get_str()});
  }
  return {{"order", x.order()}, {"coeffs", coeffs}};
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

// exact value plus a floating approximation
json value_json(const CycloNum& x) {
  json j = cyclo_json(x);
  j["approx"] = complex_json(x.to_complex());
  return j;
}

// Splits "a,b,c" but keeps "order:N,index:k" together.
std::vector<std::string> split_params(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    if (tok.rfind("index:", 0) == 0 && !out.empty())
      out.back() += "," + tok;
    else
      out.push_back(tok);
  }
  return out;
}

std::vector<MultChar> parse_params(const FiniteField& F, const std::string& s, bool rational) {
  std::vector<MultChar> out;
  for (const auto& t : split_params(s)) out.push_back(rational ? iota(RationalParam::parse(t), F) : parse_char(F, t));
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw CLI::ValidationError("cannot write " + path);
  f << text;
}

json report_json(const VerifyReport& r, std::uint64_t seed) {
  json fails = json::array();
  for (const auto& w : r.failures) {
    json f{{"chars", w.assignment}, {"arg", w.arg}, {"display", w.display}};
    f["lhs"] = w.lhs_value ? cyclo_json(*w.lhs_value) : json(w.lhs);
    f["rhs"] = w.rhs_value ? cyclo_json(*w.rhs_value) : json(w.rhs);
    fails.push_back(f);
  }
  return {{"id", r.id},
          {"q", r.q},
          {"kind", to_string(r.kind)},
          {"status", to_string(r.status)},
          {"mode", r.mode},
          {"seed", seed},
          {"tuples_checked", r.tuples_checked},
          {"failure_count", r.failure_count},
          {"failures", fails}};
}

std::string reports_csv(const std::vector<VerifyReport>& reports) {
  std::string s = "id,q,kind,status,mode,tuples_checked,failure_count\n";
  for (const auto& r : reports)
    s += r.id + "," + std::to_string(r.q) + "," + to_string(r.kind) + "," + to_string(r.status) + "," + r.mode +
         "," + std::to_string(r.tuples_checked) + "," + std::to_string(r.failure_count) + "\n";
  return s;
}

struct VerifyArgs {
  std::vector<std::string> ids;
  bool all = false;
  std::vector<std::uint64_t> qs;
  std::string mode = "exhaustive";
  std::string json_path, csv_path;
  std::size_t max_witnesses = 20;
  int relax = -1;
};

std::vector<VerifyReport> run_reports(const VerifyArgs& a, unsigned workers) {
  VerifyMode mode = VerifyMode::parse(a.mode);
  RunOptions opts;
  opts.workers = workers;
  opts.max_witnesses = a.max_witnesses;
  opts.eval.relax = a.relax;
  std::vector<const IdentityRecord*> recs;
  if (a.ids.empty())
    for (const auto& r : identity_registry()) recs.push_back(&r);
  else
    for (const auto& id : a.ids) recs.push_back(&find_identity(id));
  std::vector<VerifyReport> out;
  for (const auto* r : recs) {
    const auto& qs = a.qs.empty() ? r->default_q : a.qs;
    for (auto q : qs) {
      const FiniteField& F = field_of_order(q);
      // a sweep over every entry skips fields outside each congruence
      if (a.ids.empty() && !r->applies(F)) continue;
      out.push_back(verify(r->id, F, mode, opts));
    }
  }
  return out;
}

int finish_reports(const std::vector<VerifyReport>& reports, const VerifyArgs& a, bool table) {
  std::uint64_t seed = VerifyMode::parse(a.mode).seed;
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_json(r, seed));
  if (!a.json_path.empty()) write_file(a.json_path, arr.dump(2) + "\n");
  if (!a.csv_path.empty()) write_file(a.csv_path, reports_csv(reports));
  if (table) {
    std::cout << std::left << std::setw(26) << "id" << std::setw(6) << "q" << std::setw(14) << "status"
              << std::setw(10) << "tuples" << "failures\n";
    for (const auto& r : reports)
      std::cout << std::setw(26) << r.id << std::setw(6) << r.q << std::setw(14) << to_string(r.status)
                << std::setw(10) << r.tuples_checked << r.failure_count << "\n";
  } else if (a.json_path.empty()) {
    emit(arr);
  }
  bool failed = false;
  for (const auto& r : reports) {
    if (r.status == VerifyStatus::fail) failed = true;
    if (r.status == VerifyStatus::refuted)
      std::cerr << "conjecture " << r.id << " refuted at q=" << r.q << " ("
                << (r.failures.empty() ? "" : r.failures.front().assignment) << ")\n";
  }
  return failed ? kTheoremFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* b = std::getenv("HGFF_BUDGET")) {
    try {
      unsigned long v = std::stoul(b);
      if (v == 0) throw std::invalid_argument("zero");
      budget().q_max = v;
    } catch (const std::exception&) {
      std::cerr << "HGFF_BUDGET must be a positive integer\n";
      return kUsage;
    }
  }

  CLI::App app{"Hypergeometric functions over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned workers = 0;
  app.add_option("--workers", workers, "worker threads for sweeps (0 = hardware)");
  int code = kOk;

  // field info p e
  auto* field = app.add_subcommand("field", "finite field tables");
  auto* field_info = field->add_subcommand("info", "q, modulus, generator and table checksum");
  field->require_subcommand(1);
  std::uint64_t fp = 0;
  unsigned fe = 1;
  field_info->add_option("p", fp)->required();
  field_info->add_option("e", fe)->required()->check(CLI::PositiveNumber);
  field_info->callback([&] {
    const FiniteField& F = construct_field(fp, fe);
    emit({{"p", F.p()},
          {"e", F.e()},
          {"q", F.q()},
          {"modulus", F.modulus_string()},
          {"generator", F.coeffs(F.generator())},
          {"checksum", F.table_checksum()}});
  });

  // char table q
  auto* chr = app.add_subcommand("char", "multiplicative characters");
  auto* chr_table = chr->add_subcommand("table", "order, kappa value and parity of every character");
  chr->require_subcommand(1);
  std::uint64_t cq = 0;
  chr_table->add_option("q", cq)->required();
  chr_table->callback([&] {
    const FiniteField& F = field_of_order(cq);
    json rows = json::array();
    for (const auto& c : all_characters(F)) {
      auto ord = static_cast<std::int64_t>(c.order());
      rows.push_back(
          {{"char", c.name()}, {"m", c.m}, {"order", ord}, {"kappa", kappa(c, ord).str()}, {"sign", c.sign()}});
    }
    emit({{"q", F.q()}, {"characters", rows}});
  });

  // sums q
  auto* sums = app.add_subcommand("sums", "Gauss and Jacobi sum tables");
  std::uint64_t sq = 0;
  sums->add_option("q", sq)->required();
  sums->callback([&] {
    const FiniteField& F = field_of_order(sq);
    auto& gj = GaussJacobiCache::of(F);
    auto n = static_cast<std::int64_t>(F.units());
    json gauss = json::array(), jac = json::array();
    for (std::int64_t a = 0; a < n; ++a)
      gauss.push_back({{"char", MultChar::of(F, a).name()}, {"value", cyclo_json(gj.gauss(a))}});
    for (std::int64_t a = 0; a < n; ++a)
      for (std::int64_t b = 0; b < n; ++b)
        jac.push_back({{"a", MultChar::of(F, a).name()},
                       {"b", MultChar::of(F, b).name()},
                       {"value", cyclo_json(gj.jacobi(a, b))}});
    emit({{"q", F.q()}, {"gauss", gauss}, {"jacobi", jac}});
  });

  // eval / zeta share the hypergeometric datum
  std::uint64_t hq = 0;
  std::string hup, hlo, hlam;
  bool hrat = false;
  unsigned rmax = 0;
  auto datum = [&](CLI::App* sc) {
    sc->add_option("--q", hq)->required();
    sc->add_option("--upper", hup, "comma-separated characters (or rationals with --rational)")->required();
    sc->add_option("--lower", hlo)->required();
    sc->add_option("--lambda", hlam, "integer, g^k or [c0,c1,...]")->required();
    sc->add_flag("--rational", hrat, "read parameters as rationals i/m");
  };
  auto build = [&](FieldElement& lam) {
    const FiniteField& F = field_of_order(hq);
    lam = F.elem(F.parse(hlam));
    return HGSpec::make(parse_params(F, hup, hrat), parse_params(F, hlo, hrat));
  };

  auto* ev = app.add_subcommand("eval", "evaluate the period and normalized functions");
  datum(ev);
  ev->callback([&] {
    FieldElement lam;
    HGSpec spec = build(lam);
    json j{{"q", hq}, {"spec", spec.str()}, {"lambda", spec.field().format(lam.code)}};
    j["P"] = value_json(period_direct(spec, lam));
    try {
      j["F"] = value_json(f_normalized(spec, lam));
    } catch (const Error& e) {
      j["F"] = nullptr;
      j["F_error"] = e.what();
    }
    emit(j);
  });

  auto* zt = app.add_subcommand("zeta", "local zeta factor of a one-variable datum");
  datum(zt);
  zt->add_option("--rmax", rmax, "highest extension degree to compute (0 = default)");
  zt->callback([&] {
    FieldElement lam;
    HGSpec spec = build(lam);
    ZetaFactor z = zeta_factor(spec, lam, rmax);
    PurityReport pr = weil_purity_check(z);
    json periods = json::array();
    for (const auto& p : z.periods) periods.push_back(cyclo_json(p));
    emit({{"q", z.q},
          {"spec", spec.str()},
          {"primitive", z.primitive},
          {"trace", cyclo_json(z.trace())},
          {"det", cyclo_json(z.det())},
          {"poly", z.str()},
          {"periods", periods},
          {"newton_ok", z.newton_ok},
          {"roots", {complex_json(pr.roots[0]), complex_json(pr.roots[1])}},
          {"purity", {{"status", pr.status}, {"max_deviation", pr.max_deviation}, {"witness", pr.witness}}}});
  });

  // count glc | hgv
  auto* cnt = app.add_subcommand("count", "point counts against the period formula");
  cnt->require_subcommand(1);
  std::uint64_t vq = 0;
  unsigned vN = 2;
  std::string vi = "1", vj = "1", vlam;
  std::int64_t vk = 1;
  auto var_opts = [&](CLI::App* sc) {
    sc->add_option("--q", vq)->required();
    sc->add_option("--N", vN)->required()->check(CLI::PositiveNumber);
    sc->add_option("--i", vi)->required();
    sc->add_option("--j", vj)->required();
    sc->add_option("--k", vk)->required();
    sc->add_option("--lambda", vlam)->required();
  };
  auto ints = [](const std::string& s) {
    std::vector<std::int64_t> v;
    for (const auto& t : split_params(s)) v.push_back(std::stoll(t));
    return v;
  };
  auto* glc = cnt->add_subcommand("glc", "y^N = x^i (1-x)^j (1-lambda x)^k");
  var_opts(glc);
  glc->callback([&] {
    const FiniteField& F = field_of_order(vq);
    GLCurve C{vN, std::stoll(vi), std::stoll(vj), vk, F.elem(F.parse(vlam))};
    emit({{"q", F.q()},
          {"affine", count_affine_brute(C.variety())},
          {"formula", count_via_periods(C.variety())},
          {"trace", cyclo_json(glc_trace(C))},
          {"genus", genus(vN, C.i, C.j, C.k)}});
  });
  auto* hgv = cnt->add_subcommand("hgv", "y^N = prod x_s^i_s (1-x_s)^j_s (1-lambda x_1..x_n)^k");
  var_opts(hgv);
  hgv->callback([&] {
    const FiniteField& F = field_of_order(vq);
    HGVariety V{vN, ints(vi), ints(vj), vk, F.elem(F.parse(vlam))};
    if (V.i.size() != V.j.size()) throw CLI::ValidationError("--i and --j need the same length");
    CountBookkeeping b = count_bookkeeping(V);
    emit({{"q", F.q()},
          {"affine", count_affine_brute(V)},
          {"formula", count_via_periods(V)},
          {"period_sum", b.period_sum},
          {"total_eps1", b.total_eps1()},
          {"total_eps0", b.total_eps0()}});
  });

  // verify / report
  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "check registered identities exactly");
  auto* rep = app.add_subcommand("report", "summary table over the registry");
  for (auto* sc : {ver, rep}) {
    sc->add_option("--q", va.qs, "field orders (default: each entry's own list)")->delimiter(',');
    sc->add_option("--mode", va.mode, "exhaustive | sample:N:SEED");
    sc->add_option("--json", va.json_path, "write the JSON report here");
    sc->add_option("--csv", va.csv_path, "write one CSV row per (id, q) here");
    sc->add_option("--max-witnesses", va.max_witnesses, "failures kept per report");
  }
  ver->add_option("--id", va.ids, "identity id (repeatable; default all)");
  ver->add_flag("--all", va.all, "every registry entry");
  ver->add_option("--relax", va.relax, "ignore the stated exclusion with this index (tightness probe)");
  ver->callback([&] {
    if (va.all && !va.ids.empty()) throw CLI::ValidationError("--all and --id are exclusive");
    code = finish_reports(run_reports(va, workers), va, false);
  });
  rep->callback([&] { code = finish_reports(run_reports(va, workers), va, true); });

  auto* list = app.add_subcommand("list", "registry entries");
  list->callback([&] {
    json arr = json::array();
    for (const auto& r : identity_registry())
      arr.push_back({{"id", r.id},
                     {"kind", to_string(r.status)},
                     {"summary", r.summary},
                     {"requires", r.requirement},
                     {"default_q", r.default_q}});
    emit(arr);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}
