// Batch CLI over the Y(gl_{m|n}) toolkit. Exit codes: 0 verified/ok,
// 1 residuals or module error, 2 usage/parse/bounds error.

#include "syang/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace syang;

constexpr int kMaxSize = 6;
constexpr int kMaxOrder = 8;

struct RunConfig {
  int m = 1, n = 1, N = 2;
  bool as_json = false;
  bool override_bounds = false;
  double sample = 0.2;
  int threads = 1;
};

int check_bounds(const RunConfig& cfg) {
  if (cfg.m < 0 || cfg.n < 0 || cfg.m + cfg.n < 1) {
    std::cerr << "error: need m, n >= 0 and m + n >= 1\n";
    return 2;
  }
  if (cfg.override_bounds) return 0;
  if (cfg.m + cfg.n > kMaxSize || cfg.N > kMaxOrder) {
    std::cerr << "error: bounds m + n <= " << kMaxSize << ", N <= " << kMaxOrder
              << " (use --max-bounds-override to lift)\n";
    return 2;
  }
  return 0;
}

int run_normalform(const RunConfig& cfg, const std::string& expr) {
  if (int rc = check_bounds(cfg)) return rc;
  AlgebraParams p{cfg.m, cfg.n, cfg.N};
  Element x = Element::zero(p);
  try {
    x = parse_element(p, expr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  Rewriter rw(p);
  Element nf = rw.reduce(x);
  if (cfg.as_json) {
    json j;
    j["m"] = cfg.m;
    j["n"] = cfg.n;
    j["expr"] = expr;
    j["normal_form"] = element_to_text(nf);
    j["terms"] = nf.term_count();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << element_to_text(nf) << "\n";
  }
  return 0;
}

int emit_report(const RunConfig& cfg, const RelationReport& rep) {
  if (cfg.as_json)
    std::cout << report_to_json(rep).dump(2) << "\n";
  else
    std::cout << report_to_text(rep);
  return rep.passed() ? 0 : 1;
}

int run_verify(const RunConfig& cfg, const std::string& suite) {
  if (int rc = check_bounds(cfg)) return rc;
  try {
    RelationReport rep =
        run_verify_suite(suite, {cfg.m, cfg.n, cfg.N}, cfg.sample, cfg.threads);
    return emit_report(cfg, rep);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_gauss(const RunConfig& cfg) {
  if (int rc = check_bounds(cfg)) return rc;
  AlgebraParams p{cfg.m, cfg.n, cfg.N};
  GaussData g = gauss_decompose(p);
  Rewriter rw(p);
  const int K = p.size();
  auto reduced = [&](const ESeries& s, int r) { return element_to_text(rw.reduce(s[r])); };
  if (cfg.as_json) {
    json j;
    j["m"] = cfg.m;
    j["n"] = cfg.n;
    j["N"] = cfg.N;
    json d = json::object(), e = json::object(), f = json::object();
    for (int i = 1; i <= K; ++i) {
      json arr = json::array();
      for (int r = 1; r <= p.N; ++r) arr.push_back(reduced(g.dd(i), r));
      d[std::to_string(i)] = arr;
    }
    for (int i = 1; i <= K; ++i)
      for (int jx = i + 1; jx <= K; ++jx) {
        json earr = json::array(), farr = json::array();
        for (int r = 1; r <= p.N; ++r) {
          earr.push_back(reduced(g.ee(i, jx), r));
          farr.push_back(reduced(g.ff(jx, i), r));
        }
        e[std::to_string(i) + "," + std::to_string(jx)] = earr;
        f[std::to_string(jx) + "," + std::to_string(i)] = farr;
      }
    j["d"] = d;
    j["e"] = e;
    j["f"] = f;
    std::cout << j.dump(2) << "\n";
  } else {
    for (int i = 1; i <= K; ++i)
      for (int r = 1; r <= p.N; ++r)
        std::cout << "d" << i << "[" << r << "] = " << reduced(g.dd(i), r) << "\n";
    for (int i = 1; i <= K; ++i)
      for (int jx = i + 1; jx <= K; ++jx)
        for (int r = 1; r <= p.N; ++r)
          std::cout << "e[" << i << "," << jx << "][" << r
                    << "] = " << reduced(g.ee(i, jx), r) << "\n";
    for (int i = 1; i <= K; ++i)
      for (int jx = i + 1; jx <= K; ++jx)
        for (int r = 1; r <= p.N; ++r)
          std::cout << "f[" << jx << "," << i << "][" << r
                    << "] = " << reduced(g.ff(jx, i), r) << "\n";
  }
  return 0;
}

int run_berezinian(const RunConfig& cfg, const std::string& check) {
  if (int rc = check_bounds(cfg)) return rc;
  AlgebraParams p{cfg.m, cfg.n, cfg.N};
  try {
    Rewriter rw(p);
    if (check == "central") return emit_report(cfg, report_centrality(p));
    Berezinian b = berezinian_sum_form(rw);
    if (check == "both") {
      Berezinian prod = berezinian_product_form(gauss_decompose(p), rw);
      bool equal = b.series == prod.series;
      if (cfg.as_json) {
        json j;
        j["m"] = cfg.m;
        j["n"] = cfg.n;
        j["N"] = cfg.N;
        j["sum_form"] = eseries_to_json(b.series);
        j["product_form"] = eseries_to_json(prod.series);
        j["equal"] = equal;
        std::cout << j.dump(2) << "\n";
      } else {
        for (int r = 0; r <= b.series.order(); ++r)
          std::cout << "sum b[" << r << "] = " << element_to_text(b.series[r]) << "\n";
        for (int r = 0; r <= prod.series.order(); ++r)
          std::cout << "product b[" << r << "] = " << element_to_text(prod.series[r]) << "\n";
        std::cout << (equal ? "forms agree\n" : "forms differ\n");
      }
      return equal ? 0 : 1;
    }
    if (check == "leading") {
      bool ok = true;
      json rows = json::array();
      for (int r = 1; r <= p.N; ++r) {
        Element res = leading_term_residual(b, r);
        bool zero = res.is_zero();
        ok = ok && zero;
        if (cfg.as_json)
          rows.push_back({{"r", r}, {"residual", element_to_text(res)}});
        else
          std::cout << "leading term b[" << r << "]: "
                    << (zero ? "matches signed diagonal sum" : element_to_text(res)) << "\n";
      }
      if (cfg.as_json) {
        json j;
        j["m"] = cfg.m;
        j["n"] = cfg.n;
        j["N"] = cfg.N;
        j["rows"] = rows;
        j["passed"] = ok;
        std::cout << j.dump(2) << "\n";
      }
      return ok ? 0 : 1;
    }
    if (check == "root") {
      ESeries bt = berezinian_root(rw, b);
      // Recompose bt(u) bt(u-1) ... bt(u-m+n+1) and compare with b(u).
      ESeries acc = bt;
      for (int k = 1; k < p.m - p.n; ++k) acc = acc * series_shift(bt, Scalar(-k));
      bool ok = true;
      for (int r = 0; r <= b.series.order(); ++r)
        ok = ok && rw.reduce(acc[r] - b.series[r]).is_zero();
      if (cfg.as_json) {
        json j;
        j["m"] = cfg.m;
        j["n"] = cfg.n;
        j["N"] = cfg.N;
        j["root"] = eseries_to_json(bt);
        j["recomposes"] = ok;
        std::cout << j.dump(2) << "\n";
      } else {
        for (int r = 0; r <= bt.order(); ++r)
          std::cout << "root b~[" << r << "] = " << element_to_text(bt[r]) << "\n";
        std::cout << (ok ? "recomposition verified\n" : "recomposition FAILED\n");
      }
      return ok ? 0 : 1;
    }
    std::cerr << "error: unknown --form " << check << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_map(RunConfig cfg, bool order_given, const std::string& name, int k,
            const std::string& fspec, const std::string& expr) {
  if (int rc = check_bounds(cfg)) return rc;
  AlgebraParams p{cfg.m, cfg.n, cfg.N};
  Element x = Element::zero(p);
  try {
    x = parse_element(p, expr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (!order_given) {
    // Without --N, truncate at the highest level the expression mentions.
    int top = 1;
    for (const auto& [w, c] : x.terms())
      for (GenCode g : w) top = std::max(top, gen_r(g));
    cfg.N = top;
    if (int rc = check_bounds(cfg)) return rc;
    p = AlgebraParams{cfg.m, cfg.n, cfg.N};
    x = parse_element(p, expr);
  }
  try {
    Element out = Element::zero(p);
    AlgebraParams target = p;
    if (name == "rho") {
      target = AlgebraParams{p.n, p.m, p.N};
      out = rho(p, x);
    } else if (name == "omega") {
      out = omega(InverseTable(p), x);
    } else if (name == "zeta") {
      target = AlgebraParams{p.n, p.m, p.N};
      out = zeta(InverseTable(p), x);
    } else if (name == "psi") {
      PsiMap psi(p, k);
      target = psi.target();
      out = psi.apply(x);
    } else if (name == "mu") {
      SSeries f(p.N, Scalar(0));
      std::stringstream ss(fspec);
      std::string tok;
      for (int r = 0; std::getline(ss, tok, ','); ++r) {
        if (r > p.N) break;
        std::size_t slash = tok.find('/');
        if (slash == std::string::npos)
          f[r] = Scalar(Integer(tok));
        else
          f[r] = Scalar(Integer(tok.substr(0, slash)), Integer(tok.substr(slash + 1)));
      }
      out = mu_f(p, f, x);
    } else {
      std::cerr << "error: unknown --name " << name << "\n";
      return 2;
    }
    if (cfg.as_json) {
      json j;
      j["map"] = name;
      j["source"] = {{"m", p.m}, {"n", p.n}};
      j["target"] = {{"m", target.m}, {"n", target.n}};
      j["image"] = element_to_text(out);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "gl(" << target.m << "|" << target.n << "): " << element_to_text(out)
                << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic toolkit for the super Yangian Y(gl_{m|n})"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string expr, suite, check = "both", map_name, fspec = "1";
  int psi_k = 1;

  auto add_common = [&](CLI::App* cmd, bool with_order) {
    cmd->add_option("--m", cfg.m, "even rank m")->required();
    cmd->add_option("--n", cfg.n, "odd rank n")->required();
    if (with_order) cmd->add_option("--N", cfg.N, "truncation order")->required();
    cmd->add_flag("--json", cfg.as_json, "emit JSON");
    cmd->add_flag("--max-bounds-override", cfg.override_bounds,
                  "lift the m + n <= 6, N <= 8 guard");
  };

  CLI::App* nf = app.add_subcommand("normalform", "PBW normal form of an expression");
  add_common(nf, false);
  nf->add_option("--expr,expr", expr, "canonical text expression")->required();

  CLI::App* vf = app.add_subcommand("verify", "run a relation suite");
  add_common(vf, true);
  vf->add_option("--suite", suite, "suite name")->required();
  vf->add_option("--sample", cfg.sample, "kappa recheck fraction (default 0.2)");
  vf->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1, 64));

  CLI::App* ga = app.add_subcommand("gauss", "Gauss decomposition coefficient tables");
  add_common(ga, true);

  CLI::App* bz = app.add_subcommand("berezinian", "quantum Berezinian checks");
  add_common(bz, true);
  bz->add_option("--form", check, "both | central | leading | root");

  CLI::App* mp = app.add_subcommand("map", "apply a homomorphism to an expression");
  add_common(mp, false);
  CLI::Option* mp_order = mp->add_option("--N", cfg.N, "truncation order");
  mp->add_option("--name", map_name, "rho | omega | zeta | psi | mu")->required();
  mp->add_option("--k", psi_k, "psi shift");
  mp->add_option("--f", fspec, "mu series f_0,f_1,... (rationals)");
  mp->add_option("--expr,expr", expr, "canonical text expression")->required();

  CLI::App* rt = app.add_subcommand("rtt-check", "cleared RTT relation residuals");
  add_common(rt, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (nf->parsed()) return run_normalform(cfg, expr);
  if (vf->parsed()) return run_verify(cfg, suite);
  if (ga->parsed()) return run_gauss(cfg);
  if (bz->parsed()) return run_berezinian(cfg, check);
  if (mp->parsed()) return run_map(cfg, mp_order->count() > 0, map_name, psi_k, fspec, expr);
  if (rt->parsed()) {
    if (int rc = check_bounds(cfg)) return rc;
    return emit_report(cfg, report_rtt({cfg.m, cfg.n, cfg.N}));
  }
  return 2;
}
