#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "extrikit/defects.hpp"
#include "extrikit/relstruct.hpp"

using nlohmann::json;
using namespace xk;

namespace {

struct Flags {
  bool violation = false;  // a certified property failed to hold
  bool finding = false;    // a legitimate mathematical finding (e.g. unbalance)
};

Field env_field() {
  const char* s = std::getenv("EXTRIKIT_FIELD");
  if (!s || !*s) return Field{0};
  return Field{std::stoll(s)};
}

ExtriInstance load_bundle(const std::string& arg) {
  if (is_fixture_name(arg)) return build_fixture(arg, env_field());
  return load_instance(arg);
}

std::string instance_hash(const ExtriInstance& inst) {
  std::string s = inst.name + "|" + std::to_string(inst.C.f.p);
  for (int i = 0; i < inst.C.n(); ++i)
    for (int j = 0; j < inst.C.n(); ++j)
      s += ":" + std::to_string(inst.C.hdim[i][j]) + "," + std::to_string(inst.E.dim[i][j]);
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

void guard_nmax(int nmax, bool force) {
  check(nmax >= 0, "nmax must be nonnegative");
  check(nmax <= 8 || force, "nmax beyond 8 requires --force");
}

std::vector<Conflation> dom_list(const ExtriInstance& inst) {
  std::vector<Conflation> out;
  for (int c = 0; c < inst.C.n(); ++c)
    out.push_back(inst.table[inst.designated_dominant.at(c)]);
  return out;
}

std::string pair_key(const Category& C, int i, int j) {
  return C.names[i] + "|" + C.names[j];
}

json do_validate(const ExtriInstance& inst, Flags& fl) {
  auto errs = validate_instance(inst);
  if (!errs.empty()) fl.violation = true;
  json out;
  out["valid"] = errs.empty();
  out["errors"] = errs;
  return out;
}

/* dims of E^n via the coend tower (n=0 is Hom) */
std::map<std::string, int> pos_dims_coend(const ExtriInstance& inst, const Tower& T, int n) {
  std::map<std::string, int> d;
  for (int i = 0; i < inst.C.n(); ++i)
    for (int j = 0; j < inst.C.n(); ++j)
      d[pair_key(inst.C, i, j)] = n == 0 ? inst.C.hdim[i][j] : T.levels[n].dim[i][j];
  return d;
}

json do_ext(const ExtriInstance& inst, int pos, int neg, const std::string& pairs,
            std::string method, bool cross, Flags& fl) {
  const Category& C = inst.C;
  check((pos >= 0) != (neg >= 0), "ext: give exactly one of --pos N / --neg N");
  int sel_i = -1, sel_j = -1;
  if (!pairs.empty()) {
    auto comma = pairs.find(',');
    check(comma != std::string::npos, "ext: --pairs expects C,A");
    sel_i = C.idx(pairs.substr(0, comma));
    sel_j = C.idx(pairs.substr(comma + 1));
  }
  json out;
  out["mismatches"] = json::array();
  auto emit = [&](const char* tag, const std::map<std::string, int>& d) {
    json t;
    for (auto& [k, v] : d)
      if (sel_i < 0 || k == pair_key(C, sel_i, sel_j)) t[k] = v;
    out[tag] = t;
  };
  auto diff = [&](const char* tag, const std::map<std::string, int>& a,
                  const std::map<std::string, int>& b) {
    for (auto& [k, v] : a)
      if (b.at(k) != v) {
        fl.violation = true;
        out["mismatches"].push_back(std::string(tag) + " " + k);
      }
  };
  if (pos >= 0) {
    if (method.empty()) method = "coend";
    check(method == "coend" || method == "satellite", "ext --pos: method must be coend|satellite");
    out["n"] = pos;
    std::map<std::string, int> co, sa;
    if (method == "coend" || cross) {
      Tower T = build_tower(C, inst.E, std::max(pos, 1));
      co = pos_dims_coend(inst, T, pos);
    }
    if (method == "satellite" || cross) {
      SatTower S = satellite_tower(C, inst.E, dom_list(inst), std::max(pos, 1));
      for (int i = 0; i < C.n(); ++i)
        for (int j = 0; j < C.n(); ++j)
          sa[pair_key(C, i, j)] = pos == 0 ? C.hdim[i][j] : sat_dim(S, pos, i, j);
    }
    emit("dims", method == "satellite" ? sa : co);
    if (cross) diff("pos", co, sa);
  } else {
    if (method.empty()) method = "end";
    check(method == "end" || method == "kernel", "ext --neg: method must be end|kernel");
    out["n"] = -neg;
    std::map<std::string, int> dI, dII, dK;
    Tower T = build_tower(C, inst.E, std::max(neg, 1));
    if (method == "end" || cross) {
      for (int i = 0; i < C.n(); ++i)
        for (int j = 0; j < C.n(); ++j) {
          dI[pair_key(C, i, j)] = neg_dim_I(T, neg, obj_indec(C, i), obj_indec(C, j));
          dII[pair_key(C, i, j)] = neg_dim_II(T, neg, obj_indec(C, i), obj_indec(C, j));
        }
    }
    if (method == "kernel" || cross) {
      KernelIter K = kernel_iter_tower(C, inst.E, dom_list(inst), neg);
      for (int i = 0; i < C.n(); ++i)
        for (int j = 0; j < C.n(); ++j) dK[pair_key(C, i, j)] = kernel_iter_dim(K, neg, i, j);
    }
    if (method == "end") {
      emit("dims_I", dI);
      emit("dims_II", dII);
    } else {
      emit("dims_I", dK);
    }
    if (cross) diff("neg_I", dI, dK);
  }
  return out;
}

json do_les(const ExtriInstance& inst, int nmax, Flags& fl) {
  Tower T = build_tower(inst.C, inst.E, nmax);
  json out;
  out["failures"] = json::array();
  int pass = 0, fail = 0;
  auto note = [&](const SeqCheck& s) {
    (s.exact ? pass : fail)++;
    for (auto& m : s.failures) out["failures"].push_back(m);
    if (!s.exact) fl.violation = true;
  };
  for (const Conflation& cf : inst.table) {
    note(les_check(T, inst.E, cf));
    if (cf.dominant) note(neg_acyclicity_I(T, cf, -nmax, nmax));
    if (cf.codominant) note(neg_acyclicity_II(T, cf, -nmax, nmax));
  }
  out["checks_passed"] = pass;
  out["checks_failed"] = fail;
  return out;
}

json do_balance(const ExtriInstance& inst, int nmax, Flags& fl) {
  const Category& C = inst.C;
  Tower T = build_tower(C, inst.E, nmax);
  BalanceReport R = balance_report(inst, T, nmax);
  json out;
  out["nmax"] = R.nmax;
  out["witness_bounded"] = R.witness_bounded;
  out["balanced"] = R.balanced();
  out["NI"] = R.NI;
  out["NII"] = R.NII;
  out["NI+"] = R.NIp;
  out["NII+"] = R.NIIp;
  out["unbalanced"] = json::array();
  for (auto& u : R.unbalanced) {
    out["unbalanced"].push_back(pair_key(C, u.x, u.y) + "|n=" + std::to_string(u.n));
    fl.finding = true;
  }
  if (!R.NI || !R.NII || !R.NIp || !R.NIIp) fl.finding = true;
  out["condition_failures"] = R.failures;
  json dims;
  for (int n = 1; n <= R.nmax; ++n)
    for (int x = 0; x < C.n(); ++x)
      for (int y = 0; y < C.n(); ++y)
        if (R.dimI[n - 1][x][y] || R.dimII[n - 1][x][y])
          dims["n=" + std::to_string(n) + "|" + pair_key(C, x, y)] =
              json::array({R.dimI[n - 1][x][y], R.dimII[n - 1][x][y]});
  out["nonzero_dims_I_II"] = dims;
  /* image-comparison square wherever both witnesses exist */
  json cmp;
  int unequal = 0;
  for (int x = 0; x < C.n(); ++x)
    for (int y = 0; y < C.n(); ++y) {
      if (!inst.inj_inflation.count(x) || !inst.proj_deflation.count(y)) continue;
      ComparisonResult r = comparison_images(inst, T, x, y);
      if (!r.equal) {
        ++unequal;
        fl.violation = true;
        cmp.push_back(pair_key(C, x, y));
      }
    }
  out["comparison_unequal_pairs"] = unequal;
  return out;
}

json do_gldim(const ExtriInstance& inst, int nmax, Flags&) {
  Tower T = build_tower(inst.C, inst.E, nmax);
  GlDim g = pos_gldim(T);
  json out;
  out["bounded"] = g.bounded;
  out["value"] = g.bounded ? std::to_string(g.value) : (">= " + std::to_string(nmax));
  return out;
}

json do_defect(const ExtriInstance& inst, bool reflect, Flags& fl) {
  const Category& C = inst.C;
  json out;
  out["failures"] = json::array();
  json dims;
  std::vector<Defect> samples;
  for (size_t i = 0; i < inst.table.size() && i < 3; ++i)
    samples.push_back(defect_module(C, inst.E, inst.table[i].delta));
  for (int c = 0; c < C.n(); ++c) {
    const Conflation& dc = inst.table[inst.designated_dominant.at(c)];
    Defect D = defect_module(C, inst.E, dc.delta);
    json row;
    for (int m = 0; m < C.n(); ++m) row[C.names[m]] = D.mod.dim[m];
    dims[C.names[c]] = row;
    if (!stable_yoneda_check(C, inst.E, D)) {
      fl.violation = true;
      out["failures"].push_back("stable-Yoneda identity fails for " + dc.id);
    }
    if (reflect) {
      for (auto& s : samples)
        if (!reflection_check(C, D, dc.Cc, s)) {
          fl.violation = true;
          out["failures"].push_back("reflection fails for " + dc.id);
        }
    }
  }
  out["dominant_defect_dims"] = dims;
  if (reflect) {
    int rt = 0;
    for (const Conflation& cf : inst.table) {
      ReflectFp rf = reflect_fp_functor(inst, FpPresentation{cf.B, cf.Cc, cf.y});
      Defect D = defect_module(C, inst.E, cf.delta);
      bool ok = true;
      for (int m = 0; m < C.n(); ++m)
        ok = ok && rf.gamma.dim[m] == D.mod.dim[m] && rank(rf.unit[m]) == D.mod.dim[m];
      if (!ok) {
        fl.violation = true;
        out["failures"].push_back("reflect_fp round-trip fails for " + cf.id);
      } else {
        ++rt;
      }
    }
    out["reflect_fp_roundtrips"] = rt;
  }
  return out;
}

json do_relstruct(const ExtriInstance& inst, int w, Flags& fl) {
  const Category& C = inst.C;
  Tower T = build_tower(C, inst.E, std::max(w, 1));
  json out;
  out["witness_bounded"] = true;
  json ac;
  for (const Conflation& cf : inst.table)
    ac[cf.id] = gamma_acyclic(gamma_complex_I(T, cf, w));
  out["gamma_acyclic"] = ac;
  WitnessSub W = acyclic_witness_subfunctor(inst, T, SeqKind::NegI, w);
  json sub;
  bool proper = false;
  for (int i = 0; i < C.n(); ++i)
    for (int j = 0; j < C.n(); ++j) {
      if (inst.E.dim[i][j] == 0 && W.sub[i][j].dim() == 0) continue;
      sub[pair_key(C, i, j)] = json::array({W.sub[i][j].dim(), inst.E.dim[i][j]});
      if (W.sub[i][j].dim() < inst.E.dim[i][j]) proper = true;
    }
  out["substructure_dims"] = sub;
  out["generators"] = W.generators;
  out["proper"] = proper;
  if (proper) fl.finding = true;
  if (!witness_sub_closed(inst.E, W)) {
    fl.violation = true;
    out["closed"] = false;
  } else {
    out["closed"] = true;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extriangulated-category computations on instance bundles"};
  app.require_subcommand(1);

  std::string bundle, pairs, method, json_out;
  int pos = -1, neg = -1, nmax = 4, window = 2;
  bool strict = false, force = false, cross = false, reflect = false;

  auto add_common = [&](CLI::App* s) {
    s->add_option("bundle", bundle, "fixture name or bundle path")->required();
    s->add_flag("--strict", strict, "exit nonzero on findings too");
    s->add_flag("--force", force, "allow nmax beyond 8");
  };
  CLI::App* sv = app.add_subcommand("validate", "validate an instance bundle");
  add_common(sv);
  CLI::App* se = app.add_subcommand("ext", "extension dimension tables");
  add_common(se);
  se->add_option("--pos", pos, "positive degree n");
  se->add_option("--neg", neg, "negative degree n (reports E_I/E_II at -n)");
  se->add_option("--pairs", pairs, "restrict to a pair C,A (indec names)");
  se->add_option("--method", method, "coend|satellite (pos), end|kernel (neg)");
  se->add_flag("--cross-check", cross, "run both oracles and diff");
  CLI::App* sl = app.add_subcommand("les-check", "long-exact-sequence and acyclicity scan");
  add_common(sl);
  sl->add_option("--nmax", nmax, "degree bound (default 4)");
  CLI::App* sb = app.add_subcommand("balance", "negative-extension balance report");
  add_common(sb);
  sb->add_option("--nmax", nmax, "degree bound (default 4)");
  CLI::App* sg = app.add_subcommand("gldim", "positive global dimension");
  add_common(sg);
  sg->add_option("--nmax", nmax, "degree bound (default 4)");
  CLI::App* sd = app.add_subcommand("defect", "defect dims and checks");
  add_common(sd);
  sd->add_flag("--reflect", reflect, "run reflection and reflect_fp checks");
  CLI::App* sr = app.add_subcommand("relstruct", "gamma cohomology and witness substructure");
  add_common(sr);
  sr->add_option("--window", window, "functor-degree window (default 2)");
  CLI::App* sj = app.add_subcommand("report", "full machine-readable report");
  add_common(sj);
  sj->add_option("--json", json_out, "output path")->required();
  sj->add_option("--nmax", nmax, "degree bound (default 4)");

  CLI11_PARSE(app, argc, argv);

  try {
    guard_nmax(nmax, force);
    ExtriInstance inst = load_bundle(bundle);
    Flags fl;
    json out;
    out["schema_version"] = 1;
    out["instance"] = inst.name;
    out["hash"] = instance_hash(inst);
    out["field"] = inst.C.f.p;
    if (sv->parsed()) {
      out["validate"] = do_validate(inst, fl);
    } else if (se->parsed()) {
      out["validate"] = do_validate(inst, fl);
      if (!fl.violation) out["ext"] = do_ext(inst, pos, neg, pairs, method, cross, fl);
    } else if (sl->parsed()) {
      out["les"] = do_les(inst, nmax, fl);
    } else if (sb->parsed()) {
      out["balance"] = do_balance(inst, nmax, fl);
    } else if (sg->parsed()) {
      out["gldim"] = do_gldim(inst, nmax, fl);
    } else if (sd->parsed()) {
      out["defect"] = do_defect(inst, reflect, fl);
    } else if (sr->parsed()) {
      out["relstruct"] = do_relstruct(inst, window, fl);
    } else if (sj->parsed()) {
      out["command"] = "report";
      out["validate"] = do_validate(inst, fl);
      if (!fl.violation) {
        json ext;
        for (int n = 1; n <= 2; ++n)
          ext["pos_" + std::to_string(n)] =
              do_ext(inst, n, -1, "", "coend", false, fl)["dims"];
        json e1 = do_ext(inst, -1, 1, "", "end", false, fl);
        ext["neg_1_I"] = e1["dims_I"];
        ext["neg_1_II"] = e1["dims_II"];
        out["ext"] = ext;
        out["les"] = do_les(inst, std::min(nmax, 3), fl);
        out["balance"] = do_balance(inst, std::min(nmax, 3), fl);
        out["gldim"] = do_gldim(inst, nmax, fl);
        out["defect"] = do_defect(inst, true, fl);
        out["relstruct"] = do_relstruct(inst, 2, fl);
        out["caveats"] = json::array(
            {"balance (NI+)/(NII+) and the relative substructure are witness-bounded"});
      }
    }
    out["violation"] = fl.violation;
    out["finding"] = fl.finding;
    std::string text = out.dump(1);
    if (sj->parsed()) {
      std::ofstream f(json_out, std::ios::binary);
      check(f.good(), "cannot open " + json_out);
      f << text << "\n";
      std::cout << "report written to " << json_out << "\n";
    } else {
      std::cout << text << "\n";
    }
    if (fl.violation) return 2;
    if (fl.finding && strict) return 1;
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
