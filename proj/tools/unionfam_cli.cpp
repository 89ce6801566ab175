// Command-line front end: construction generation, exact bound evaluation,
// verification suites, and extremal search.
//
// Exit codes: 0 success / all assertions passed, 1 violation or failure,
// 2 budget exhausted, 64 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "unionfam/bounds.hpp"
#include "unionfam/constructions.hpp"
#include "unionfam/errors.hpp"
#include "unionfam/family_io.hpp"
#include "unionfam/kneser.hpp"
#include "unionfam/random_family.hpp"
#include "unionfam/search.hpp"
#include "unionfam/structure.hpp"
#include "unionfam/verify.hpp"

namespace uf = unionfam;

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoi(tok));
  }
  return out;
}

std::vector<std::vector<int>> parse_set_list(const std::string& s) {
  std::vector<std::vector<int>> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    if (!tok.empty()) out.push_back(parse_int_list(tok));
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw uf::BadParameters("cannot open output path " + out_path);
  f << text;
}

int report_exit(const uf::Report& rep) { return rep.failed() == 0 ? 0 : 1; }

std::string provenance_line(const std::string& construction, const std::string& anchor,
                            const std::string& params) {
  nlohmann::ordered_json j;
  j["provenance"]["construction"] = construction;
  j["provenance"]["anchor"] = anchor;
  j["provenance"]["params"] = params;
  return j.dump();
}

struct ConstructArgs {
  int n = 0, k = 0, i = 0, s = 1, t = 1, r = 1, center = 1;
  long long beta = 0;
  std::string mode = "completed";
  std::string anchor_j, anchor_e, anchor_b, anchor_a;
  std::string out;
  bool no_provenance = false;
};

int run_construct(const std::string& which, const ConstructArgs& a) {
  std::optional<uf::JAnchors> janchors;
  if (!a.anchor_j.empty() || !a.anchor_e.empty()) {
    if (a.anchor_j.empty() || a.anchor_e.empty())
      throw uf::BadParameters("anchors J and E must be given together");
    janchors = uf::JAnchors{parse_int_list(a.anchor_j), parse_int_list(a.anchor_e)};
  }

  uf::Family fam;
  std::string anchor;
  std::string params = "n=" + std::to_string(a.n) + " k=" + std::to_string(a.k);
  if (which == "star") {
    fam = uf::star(a.n, a.k, a.center);
    anchor = "def:star";
    params += " center=" + std::to_string(a.center);
  } else if (which == "hm") {
    uf::KSet b = a.anchor_b.empty() ? uf::hm_default_anchor(a.n, a.k)
                                    : uf::make_kset(a.n, parse_int_list(a.anchor_b));
    fam = uf::hm_family(a.n, a.k, b);
    anchor = "def:HM";
  } else if (which == "hm-prime") {
    fam = uf::hm_prime(a.n, a.k);
    anchor = "def:HM'";
  } else if (which == "j") {
    fam = uf::j_family(a.n, a.k, a.i, janchors);
    anchor = "def:1.4";
    params += " i=" + std::to_string(a.i);
  } else if (which == "f-i") {
    fam = uf::f_i_family(a.n, a.k, a.i);
    anchor = "def:F_i";
    params += " i=" + std::to_string(a.i);
  } else if (which == "f-st") {
    std::optional<std::vector<std::vector<int>>> fjs;
    if (!a.anchor_a.empty()) fjs = parse_set_list(a.anchor_a);
    fam = uf::f_st_family(a.n, a.k, a.s, a.t, fjs);
    anchor = "thm:D";
    params += " s=" + std::to_string(a.s) + " t=" + std::to_string(a.t);
  } else if (which == "j1t") {
    fam = uf::j_1t_family(a.n, a.k, a.i, a.t, janchors);
    anchor = "def:1.12";
    params += " i=" + std::to_string(a.i) + " t=" + std::to_string(a.t);
  } else if (which == "j1t-r") {
    uf::JFamilyMode mode = a.mode == "literal" ? uf::JFamilyMode::literal
                                               : uf::JFamilyMode::completed;
    fam = uf::j_1t_r_family(a.n, a.k, a.i, a.t, a.r, mode, janchors);
    anchor = "def:1.18";
    params += " i=" + std::to_string(a.i) + " t=" + std::to_string(a.t) +
              " r=" + std::to_string(a.r) + " mode=" + a.mode;
  } else if (which == "extremal") {
    auto got = uf::hmnew3_extremal(a.n, a.k, a.s, a.t, a.beta);
    if (!got) {
      std::cerr << "infeasible: no anchor tuple satisfies the extremal conditions\n";
      return 1;
    }
    fam = *got;
    anchor = "thm:1.9";
    params += " s=" + std::to_string(a.s) + " t=" + std::to_string(a.t) +
              " beta=" + std::to_string(a.beta);
  } else if (which == "ranked-l") {
    if (a.anchor_a.empty())
      throw uf::BadParameters("ranked-l requires --anchors-a \"e1,e2,..;e1,..\"");
    std::vector<uf::Mask> anchors;
    for (const auto& lst : parse_set_list(a.anchor_a))
      anchors.push_back(uf::make_kset(a.n, lst).mask);
    fam = uf::ranked_L_family(a.n, a.k, a.s, a.t, anchors);
    anchor = "rem:1.9-L";
    params += " s=" + std::to_string(a.s) + " t=" + std::to_string(a.t);
  } else {
    throw uf::BadParameters("unknown construction " + which);
  }

  std::string text = uf::family_to_jsonl(fam) + "\n";
  if (!a.no_provenance) text += provenance_line(which, anchor, params) + "\n";
  emit(text, a.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for union-intersecting set families and induced Kneser subgraphs"};
  app.require_subcommand(1);

  // ---- construct ----
  auto* construct = app.add_subcommand("construct", "generate a named family as JSONL");
  std::string which;
  ConstructArgs ca;
  construct->add_option("which", which,
                        "star|hm|hm-prime|j|f-i|f-st|j1t|j1t-r|extremal|ranked-l")
      ->required();
  construct->add_option("--n", ca.n)->required();
  construct->add_option("--k", ca.k)->required();
  construct->add_option("--i", ca.i);
  construct->add_option("--s", ca.s);
  construct->add_option("--t", ca.t);
  construct->add_option("--r", ca.r);
  construct->add_option("--beta", ca.beta);
  construct->add_option("--center", ca.center);
  construct->add_option("--mode", ca.mode, "literal|completed (j1t-r)");
  construct->add_option("--anchor-j", ca.anchor_j, "J as comma list, e.g. 1,2");
  construct->add_option("--anchor-e", ca.anchor_e, "E as comma list");
  construct->add_option("--anchor-b", ca.anchor_b, "B as comma list (hm)");
  construct->add_option("--anchors-a", ca.anchor_a,
                        "anchor k-sets, semicolon-separated comma lists");
  construct->add_option("--out", ca.out);
  construct->add_flag("--no-provenance", ca.no_provenance);

  // ---- bound ----
  auto* bound = app.add_subcommand("bound", "evaluate a closed-form bound exactly");
  std::string bound_id;
  uf::BoundQuery bq;
  std::string bound_sizes;
  long long bn = -1, bk = -1, bs = -1, bt = -1, bbeta = -1, bgamma = -1, bi = -1, bchi = -1,
            beta_ = -1, bell = -1, bl = -1;
  bound->add_option("--id", bound_id)->required();
  bound->add_option("--n", bn);
  bound->add_option("--k", bk);
  bound->add_option("--s", bs);
  bound->add_option("--t", bt);
  bound->add_option("--beta", bbeta);
  bound->add_option("--gamma", bgamma);
  bound->add_option("--i", bi);
  bound->add_option("--chi", bchi);
  bound->add_option("--eta", beta_);
  bound->add_option("--ell", bell);
  bound->add_option("--l", bl);
  bound->add_option("--sizes", bound_sizes, "part sizes s_1,s_2,...");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite, vformat = "json", vout;
  std::uint64_t vseed = 1;
  unsigned vthreads = 0;
  int vn = -1, vk = -1, vs = -1, vbeta = -1, vcount = -1;
  verify->add_option("suite", suite,
                     "constructions|lemma22|peel|pairs-bound|setpairs|consistency|all")
      ->required();
  verify->add_option("--n", vn);
  verify->add_option("--k", vk);
  verify->add_option("--s", vs);
  verify->add_option("--beta", vbeta);
  verify->add_option("--count", vcount);
  verify->add_option("--seed", vseed);
  verify->add_option("--threads", vthreads);
  verify->add_option("--format", vformat, "json|csv|md");
  verify->add_option("--out", vout);

  // ---- search ----
  auto* search = app.add_subcommand("search", "extremal search (max | maximal)");
  std::string smode, spattern, sellmin, smust, savoid, sformat = "json", sout;
  int sn = 0, sk = 0;
  std::uint64_t sbudget = 50'000'000;
  std::size_t slimit = 1000;
  bool soracle = false;
  int ss = 0, st = 0;
  search->add_option("mode", smode, "max|maximal")->required();
  search->add_option("--n", sn)->required();
  search->add_option("--k", sk)->required();
  search->add_option("--pattern", spattern, "forbidden pattern sizes, e.g. 1,2");
  search->add_option("--s", ss, "shorthand: forbid K_{s,t} (with --t)");
  search->add_option("--t", st, "shorthand: forbid K_{s,t} (with --s)");
  search->add_option("--ell-min", sellmin, "r,c meaning ell_r >= c");
  search->add_option("--must-contain", smust, "semicolon-separated element lists");
  search->add_option("--must-avoid", savoid, "semicolon-separated element lists");
  search->add_option("--budget", sbudget);
  search->add_option("--limit", slimit);
  search->add_flag("--oracle", soracle, "use the exhaustive oracle instead of B&B");
  search->add_option("--format", sformat);
  search->add_option("--out", sout);

  // ---- consistency ----
  auto* consistency = app.add_subcommand("consistency", "cross-formula identity table");
  std::string cgrid, cformat = "md", cout_path;
  consistency->add_option("--grid", cgrid, "JSON file with ns, ks, ts arrays");
  consistency->add_option("--format", cformat, "json|csv|md");
  consistency->add_option("--out", cout_path);

  // ---- random ----
  auto* random = app.add_subcommand("random", "seeded random family as JSONL");
  int rn = 0, rk = 0;
  std::size_t rsize = 0;
  std::uint64_t rseed = 1;
  std::string rrepair, rout;
  random->add_option("--n", rn)->required();
  random->add_option("--k", rk)->required();
  random->add_option("--size", rsize)->required();
  random->add_option("--seed", rseed);
  random->add_option("--repair", rrepair, "pattern sizes s,t to repair towards");
  random->add_option("--out", rout);

  // ---- ell ----
  auto* ellcmd = app.add_subcommand("ell", "exact removal invariant of a JSONL family (stdin)");
  int er = 2;
  ellcmd->add_option("--r", er);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*construct) return run_construct(which, ca);

    if (*bound) {
      auto id = uf::parse_bound_id(bound_id);
      if (!id) throw uf::BadParameters("unknown bound id " + bound_id);
      bq.id = *id;
      auto opt = [](long long v) {
        return v < 0 ? std::optional<long long>{} : std::optional<long long>{v};
      };
      bq.n = opt(bn);
      bq.k = opt(bk);
      bq.s = opt(bs);
      bq.t = opt(bt);
      bq.beta = opt(bbeta);
      bq.gamma = opt(bgamma);
      bq.i = opt(bi);
      bq.chi = opt(bchi);
      bq.eta = opt(beta_);
      bq.ell = opt(bell);
      bq.l = opt(bl);
      if (!bound_sizes.empty())
        for (int v : parse_int_list(bound_sizes)) bq.part_sizes.push_back(v);
      uf::BoundValue v = uf::evaluate_bound(bq);
      std::cout << v.value.str() << "\n";
      if (v.alt) std::cerr << "alt branch: " << v.alt->str() << " (" << v.note << ")\n";
      return 0;
    }

    if (*verify) {
      uf::Report rep;
      if (suite == "constructions") {
        uf::ConstructionsConfig cfg;
        cfg.threads = vthreads;
        rep = uf::verify_constructions(cfg);
        rep.config = "verify constructions";
      } else if (suite == "lemma22") {
        uf::Lemma22Config cfg;
        if (vn > 0) cfg.n = vn;
        if (vk > 0) cfg.k = vk;
        if (vs > 0) cfg.s = vs;
        if (vbeta >= 0) cfg.beta = vbeta;
        cfg.threads = vthreads;
        rep = uf::verify_lemma22(cfg);
        rep.config = "verify lemma22 n=" + std::to_string(cfg.n) + " k=" + std::to_string(cfg.k) +
                     " s=" + std::to_string(cfg.s) + " beta=" + std::to_string(cfg.beta);
      } else if (suite == "peel") {
        uf::PeelConfig cfg;
        if (vn > 0) cfg.n = vn;
        if (vk > 0) cfg.k = vk;
        if (vcount > 0) cfg.count = vcount;
        cfg.seed = vseed;
        cfg.threads = vthreads;
        rep = uf::verify_peel(cfg);
        rep.config = "verify peel seed=" + std::to_string(vseed);
      } else if (suite == "pairs-bound") {
        uf::PairsBoundConfig cfg;
        if (vn > 0) cfg.n = vn;
        if (vk > 0) cfg.k = vk;
        if (vcount > 0) cfg.count = vcount;
        cfg.seed = vseed;
        cfg.threads = vthreads;
        rep = uf::verify_pairs_bound(cfg);
        rep.config = "verify pairs-bound seed=" + std::to_string(vseed);
      } else if (suite == "setpairs") {
        rep = uf::verify_setpairs({});
        rep.config = "verify setpairs";
      } else if (suite == "consistency") {
        rep = uf::consistency_matrix({{10, 11, 12}, {3, 4, 5}, {1, 2}});
        rep.config = "verify consistency";
      } else if (suite == "all") {
        uf::VerifyAllConfig cfg;
        cfg.seed = vseed;
        cfg.threads = vthreads;
        if (vcount > 0) {
          cfg.peel.count = vcount;
          cfg.pairs.count = vcount;
        }
        rep = uf::run_verify_all(cfg);
      } else {
        throw uf::BadParameters("unknown suite " + suite);
      }
      emit(rep.render(vformat), vout);
      return report_exit(rep);
    }

    if (*search) {
      uf::ConstraintSpec spec;
      if (!spattern.empty()) spec.forbidden_pattern = parse_int_list(spattern);
      if (spattern.empty() && ss > 0 && st > 0)
        spec.forbidden_pattern = std::vector<int>{ss, st};
      if (!sellmin.empty()) {
        auto rc = parse_int_list(sellmin);
        if (rc.size() != 2) throw uf::BadParameters("--ell-min wants r,c");
        spec.ell_min = std::make_pair(rc[0], rc[1]);
      }
      if (!smust.empty()) spec.must_contain = parse_set_list(smust);
      if (!savoid.empty()) spec.must_avoid = parse_set_list(savoid);

      if (smode == "max") {
        uf::SearchResult res = soracle ? uf::oracle_max_family(sn, sk, spec)
                                       : uf::branch_and_bound_max(sn, sk, spec, sbudget);
        nlohmann::ordered_json j;
        j["max_size"] = res.max_size;
        j["witness"] = nlohmann::ordered_json::parse(uf::family_to_jsonl(res.witness));
        j["optimal"] = res.optimal;
        j["nodes_explored"] = res.nodes_explored;
        j["wall_budget_hit"] = res.wall_budget_hit;
        emit(j.dump(2) + "\n", sout);
        return res.wall_budget_hit ? 2 : 0;
      }
      if (smode == "maximal") {
        auto classes = uf::enumerate_maximal(sn, sk, spec, slimit);
        std::string text;
        for (const auto& f : classes) text += uf::family_to_jsonl(f) + "\n";
        emit(text, sout);
        return 0;
      }
      throw uf::BadParameters("unknown search mode " + smode);
    }

    if (*consistency) {
      uf::ConsistencyGrid grid{{10, 11, 12}, {3, 4, 5}, {1, 2}};
      if (!cgrid.empty()) {
        std::ifstream f(cgrid);
        if (!f) throw uf::BadParameters("cannot open grid file " + cgrid);
        nlohmann::json j;
        f >> j;
        if (j.contains("ns")) grid.ns = j["ns"].get<std::vector<int>>();
        if (j.contains("ks")) grid.ks = j["ks"].get<std::vector<int>>();
        if (j.contains("ts")) grid.ts = j["ts"].get<std::vector<int>>();
      }
      uf::Report rep = uf::consistency_matrix(grid);
      rep.config = "consistency";
      emit(rep.render(cformat), cout_path);
      return report_exit(rep);
    }

    if (*random) {
      std::optional<uf::ConstraintSpec> repair;
      if (!rrepair.empty()) {
        uf::ConstraintSpec spec;
        spec.forbidden_pattern = parse_int_list(rrepair);
        repair = spec;
      }
      uf::Family f = uf::random_family(rn, rk, rsize, rseed, repair);
      emit(uf::family_to_jsonl(f) + "\n", rout);
      return 0;
    }

    if (*ellcmd) {
      auto fams = uf::read_families(std::cin);
      for (const auto& f : fams) {
        uf::EllResult r = uf::ell(f, er);
        nlohmann::ordered_json j;
        j["ell"] = r.value;
        j["removal"] = nlohmann::ordered_json::array();
        for (std::size_t idx : r.removal)
          j["removal"].push_back(nlohmann::ordered_json::parse(
              uf::family_to_jsonl(uf::Family{f.n, f.k, {f.masks[idx]}})));
        std::cout << j.dump() << "\n";
      }
      return 0;
    }
  } catch (const uf::BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const uf::BadParameters& e) {
    std::cerr << e.what() << "\n";
    return 64;
  } catch (const uf::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 64;
}
