#include "mds/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <future>
#include <iostream>
#include <sstream>

#include "mds/certifier.hpp"
#include "mds/errors.hpp"
#include "mds/intersect.hpp"
#include "mds/json.hpp"

namespace mds::cli {

std::vector<BigInt> parse_list(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw ArgumentError("empty entry in list '" + text + "'");
    out.push_back(parse_bigint(item));
  }
  if (out.empty()) throw ArgumentError("empty list");
  return out;
}

namespace {

// Weights may be given as one comma list or as separate arguments.
std::vector<BigInt> gather(const std::vector<std::string>& parts) {
  std::vector<BigInt> out;
  for (const auto& p : parts) {
    auto xs = parse_list(p);
    out.insert(out.end(), xs.begin(), xs.end());
  }
  return out;
}

WeightsTriple triple(const std::vector<BigInt>& xs, const char* what) {
  if (xs.size() < 3) throw ArgumentError(std::string(what) + ": need three weights a,b,c");
  for (const auto& x : xs) {
    if (x <= 0) throw ArgumentError(std::string(what) + ": weights must be positive");
  }
  return {xs[0], xs[1], xs[2]};
}

void apply_limits(const std::string& text, Config& cfg) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--limits", "expected key=value, got '" + item + "'");
    const auto key = item.substr(0, eq);
    const BigInt value = parse_bigint(item.substr(eq + 1));
    if (value <= 0) throw CLI::ValidationError("--limits", key + " must be positive");
    if (key == "max_g") {
      cfg.max_g = value;
    } else if (key == "max_param") {
      cfg.max_param = value;
    } else {
      throw CLI::ValidationError("--limits", "unknown key '" + key + "'");
    }
  }
}

std::string list_text(const std::vector<BigInt>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].str();
  return s;
}

void print_outcome_text(const Outcome& o, std::ostream& out) {
  if (const auto* r = std::get_if<Rejection>(&o)) {
    out << "rejected\n";
    for (const auto& reason : r->reasons) out << "  " << reject_code_name(reason.code) << ": " << reason.detail << "\n";
    return;
  }
  const auto& c = std::get<Certificate>(o);
  out << "certified P(" << list_text(c.weights) << ") via " << theorem_name(c.theorem)
      << (c.conditional ? " [CONDITIONAL]" : "") << "\n";
  if (c.relation) {
    out << "  relation " << c.relation->e << "a + " << c.relation->f << "b = " << c.relation->g
        << "c, width " << c.relation->width << ", r = " << (c.r ? c.r->r.str() : "-") << "\n";
  }
  if (c.curve) out << "  curve " << c.curve->lambda << " pi^*B - " << c.curve->mu << " e\n";
  for (std::size_t i = 0; i < c.bounds.size(); ++i) {
    const auto& w = c.witnesses[i];
    out << "  d = " << c.bounds[i].value << " = " << w.m0 << "a + " << w.m1 << "b + " << w.m2 << "c, < "
        << c.bounds[i].bound << "\n";
  }
  out << "  base: " << c.base_evidence.detail << "\n";
  for (std::size_t i = 0; i < c.fan.rays.size(); ++i) out << "  v" << i << " = " << format_vector(c.fan.rays[i]) << "\n";
  if (c.overlap) {
    out << "  overlap: " << (c.overlap->is_overlap ? "yes" : "no");
    if (c.overlap->quad) {
      const auto& q = *c.overlap->quad;
      out << ", quad (" << q.e << "," << q.f << "," << q.g1 << "," << q.g2 << ") W = " << q.W;
    }
    if (c.overlap->threefold_holds) out << ", 3-fold criterion " << (*c.overlap->threefold_holds ? "holds" : "fails");
    out << "\n";
  }
  for (const auto& n : c.notes) out << "  note: " << n << "\n";
}

void print_criterion_text(const std::string& label, const StableReport& s, std::ostream& out) {
  out << label << ": " << (s.holds ? "holds" : "fails") << "\n";
  for (const auto& r : s.per_scale) {
    out << "  m = " << r.m << ": n = " << r.n << " at x = " << r.left_x << ", size " << r.right_size << " at x = "
        << r.right_x << (r.slope_condition ? "" : ", slope integral") << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  if (const char* env = std::getenv("MDSCERT_FORMAT")) {
    const std::string f(env);
    if (f == "json") cfg.format = Format::Json;
    else if (f == "text") cfg.format = Format::Text;
  }

  CLI::App app{"Certificates for non-Mori-dream blow-ups of weighted projective spaces", "mdscert"};
  app.require_subcommand(1);
  // Global options may follow the subcommand.
  app.fallthrough();
  std::string format_opt, limits_opt, scales_opt;
  app.add_option("--format", format_opt, "json or text (default: $MDSCERT_FORMAT, else text)")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--limits", limits_opt, "max_g=<int>,max_param=<int>");
  app.add_option("--scales", scales_opt, "multipliers of m for slice-criterion stability (default 1,2,3)");

  std::vector<std::string> weights_pos;
  std::string weights_opt, ds_opt, evidence_opt, curve_opt, theorem_opt = "auto";
  int all_a_dim = 0;
  auto* certify = app.add_subcommand("certify", "check the hypotheses for P(a,b,c,d...) and emit a certificate");
  certify->add_option("abc", weights_pos, "a,b,c (or use --weights)");
  certify->add_option("--weights", weights_opt, "a,b,c");
  certify->add_option("--ds", ds_opt, "extra weights d1,d2,...");
  certify->add_option("--evidence", evidence_opt, "family:<name>:<param> or assert:<text>");
  certify->add_option("--curve", curve_opt, "lambda,mu of a negative curve (selects the general theorem)");
  certify->add_option("--theorem", theorem_opt)->check(CLI::IsMember({"auto", "main", "general", "all-a"}));
  certify->add_option("--all-a", all_a_dim, "dimension n: certify P(a,b,c,a,...,a)");

  std::vector<std::string> rel_args;
  auto* find_rel = app.add_subcommand("find-relation", "relation of width < 1 between a, b, c");
  find_rel->add_option("weights", rel_args, "a b c")->required();

  std::string sg_d;
  std::vector<std::string> sg_w;
  bool frobenius = false;
  auto* semigroup = app.add_subcommand("semigroup", "membership of d in <a,b,c>");
  semigroup->add_option("d", sg_d)->required();
  semigroup->add_option("weights", sg_w, "a,b,c")->required();
  semigroup->add_flag("--frobenius", frobenius, "also report the Frobenius number");

  std::vector<std::string> fan_w;
  std::string fan_ds;
  auto* fan_cmd = app.add_subcommand("fan", "fan of P(a,b,c) or P(a,b,c,d...)");
  fan_cmd->add_option("weights", fan_w)->required();
  fan_cmd->add_option("--ds", fan_ds);

  std::vector<std::string> gk_w;
  auto* gk_cmd = app.add_subcommand("gk-check", "slice criterion: a,b,c (surface) or a,b,c,d (three-fold)");
  gk_cmd->add_option("weights", gk_w)->required();

  std::string family_opt, dims_opt = "3", enum_ds = "all-a";
  long long param_min = -1, param_max = 0;
  auto* enumerate = app.add_subcommand("enumerate", "certify a family over a parameter range (JSON lines)");
  enumerate->add_option("--family", family_opt)->required();
  enumerate->add_option("--param-min", param_min);
  enumerate->add_option("--param-max", param_max)->required();
  enumerate->add_option("--dims", dims_opt, "dimensions n, comma separated");
  enumerate->add_option("--ds", enum_ds, "all-a or a list d1,d2,...");

  std::vector<std::string> int_w;
  std::string int_ds;
  auto* intersect = app.add_subcommand("intersect", "intersection identities on P(a,b,c,d...)");
  intersect->add_option("weights", int_w)->required();
  intersect->add_option("--ds", int_ds);

  std::vector<std::string> ov_w;
  auto* overlap = app.add_subcommand("overlap", "is P(a,b,c,d) covered by both criteria");
  overlap->add_option("weights", ov_w, "a,b,c,d")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "mdscert: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!format_opt.empty()) cfg.format = format_opt == "json" ? Format::Json : Format::Text;
    if (!limits_opt.empty()) apply_limits(limits_opt, cfg);
    if (!scales_opt.empty()) {
      cfg.scales = parse_list(scales_opt);
      for (const auto& s : cfg.scales) {
        if (s <= 0) throw CLI::ValidationError("--scales", "multipliers must be positive");
      }
    }
    const SearchLimits limits{cfg.max_g};
    const bool as_json = cfg.format == Format::Json;

    if (*certify) {
      if (weights_pos.empty() == weights_opt.empty()) throw CLI::ValidationError("certify", "give the weights once, positionally or via --weights");
      const auto w = triple(gather(weights_opt.empty() ? weights_pos : std::vector<std::string>{weights_opt}), "certify");
      const auto all = gather(weights_opt.empty() ? weights_pos : std::vector<std::string>{weights_opt});
      std::vector<BigInt> ds(all.begin() + 3, all.end());
      if (!ds_opt.empty()) {
        const auto more = parse_list(ds_opt);
        ds.insert(ds.end(), more.begin(), more.end());
      }
      const EvidenceInput evidence = evidence_opt.empty() ? EvidenceInput{} : parse_evidence(evidence_opt);
      std::optional<NegativeCurve> curve;
      if (!curve_opt.empty()) {
        const auto parts = [&] {
          std::vector<Rational> xs;
          std::stringstream ss(curve_opt);
          std::string item;
          while (std::getline(ss, item, ',')) xs.push_back(parse_rational(item));
          return xs;
        }();
        if (parts.size() != 2) throw CLI::ValidationError("--curve", "expected lambda,mu");
        curve = NegativeCurve{parts[0], parts[1]};
      }
      std::string theorem = theorem_opt;
      if (all_a_dim) theorem = "all-a";
      if (theorem == "auto") {
        const bool agk_evidence = evidence.kind == EvidenceInput::Kind::FAMILY && evidence.family == FamilyKind::AGK;
        const bool agk_detected = evidence.kind == EvidenceInput::Kind::NONE && detect_family(w) &&
                                  detect_family(w)->family == FamilyKind::AGK;
        theorem = curve || agk_evidence || agk_detected ? "general" : "main";
      }
      Outcome outcome;
      if (theorem == "all-a") {
        if (!all_a_dim || !ds.empty()) throw CLI::ValidationError("--all-a", "give the dimension n and no --ds");
        outcome = certify_all_a(w, all_a_dim, evidence, limits);
      } else if (ds.empty()) {
        throw CLI::ValidationError("--ds", "need at least one extra weight");
      } else if (theorem == "general") {
        outcome = certify_general(w, ds, curve, evidence, limits);
      } else {
        outcome = certify_main(w, ds, evidence, limits);
      }
      if (as_json) out << encode(outcome).dump(2) << "\n";
      else print_outcome_text(outcome, out);
      return accepted(outcome) ? 0 : 1;
    }

    if (*find_rel) {
      const auto w = triple(gather(rel_args), "find-relation");
      const auto rel = find_relation(w, limits);
      if (as_json) {
        json j = {{"weights", encode(w)}, {"relation", rel ? encode(*rel) : json(nullptr)}};
        if (rel) j["r"] = encode(find_r(*rel, w).r);
        out << j.dump(2) << "\n";
      } else if (!rel) {
        out << "none\n";
      } else {
        const auto s = w.permuted(rel->perm);
        out << rel->e << "*" << s.a << " + " << rel->f << "*" << s.b << " = " << rel->g << "*" << s.c
            << "  (e,f,g) = (" << rel->e << "," << rel->f << "," << rel->g << "), width " << rel->width
            << ", r = " << find_r(*rel, w).r << "\n";
      }
      return rel ? 0 : 1;
    }

    if (*semigroup) {
      const BigInt d = parse_bigint(sg_d);
      const auto w = triple(gather(sg_w), "semigroup");
      const auto wit = member(d, w);
      if (as_json) {
        json j = {{"d", encode(d)}, {"weights", encode(w)}, {"member", wit.has_value()},
                  {"witness", wit ? encode(*wit) : json(nullptr)}};
        if (frobenius) j["frobenius"] = encode(frobenius_bound(w));
        out << j.dump(2) << "\n";
      } else {
        if (wit) out << d << " = " << wit->m0 << "*" << w.a << " + " << wit->m1 << "*" << w.b << " + " << wit->m2 << "*" << w.c << "\n";
        else out << "NotInSemigroup(" << d << ")\n";
        if (frobenius) out << "frobenius " << frobenius_bound(w) << "\n";
      }
      return wit ? 0 : 1;
    }

    if (*fan_cmd) {
      auto all = gather(fan_w);
      const auto w = triple(all, "fan");
      std::vector<BigInt> ds(all.begin() + 3, all.end());
      if (!fan_ds.empty()) {
        const auto more = parse_list(fan_ds);
        ds.insert(ds.end(), more.begin(), more.end());
      }
      const auto rel = find_relation(w, limits);
      const SurfaceFan surface = rel ? surface_fan(*rel, w) : plane_fan(w);
      const AmbientFan fan = ambient_fan(surface, ds);
      if (as_json) {
        json j = {{"surface", encode(surface)}, {"fan", encode(fan)}};
        if (rel) j["triangle"] = encode(triangle_delta(*rel, w));
        out << j.dump(2) << "\n";
      } else {
        out << (rel ? "fan from relation" : "fan without a narrow relation") << "\n";
        for (std::size_t i = 0; i < fan.rays.size(); ++i) {
          out << "  v" << i << " = " << format_vector(fan.rays[i]) << "  (weight " << fan.weights[i] << ")\n";
        }
      }
      return 0;
    }

    if (*gk_cmd) {
      const auto all = gather(gk_w);
      if (all.size() == 3) {
        const auto w = triple(all, "gk-check");
        const auto rel = find_relation(w, limits);
        if (!rel) {
          if (as_json) out << json{{"weights", encode(w)}, {"relation", nullptr}, {"holds", false}}.dump(2) << "\n";
          else out << "no relation of width < 1\n";
          return 1;
        }
        const auto check = surface_criterion(*rel, w, cfg.scales);
        if (as_json) {
          out << encode(check).dump(2) << "\n";
        } else {
          print_criterion_text("triangle", check.direct, out);
          print_criterion_text("mirror", check.mirrored, out);
        }
        return check.holds ? 0 : 1;
      }
      if (all.size() != 4) throw CLI::ValidationError("gk-check", "expected three or four weights");
      for (const auto& x : all) {
        if (x <= 0) throw ArgumentError("gk-check: weights must be positive");
      }
      const std::array<BigInt, 4> w{all[0], all[1], all[2], all[3]};
      const auto quad = find_quad_relation(w);
      if (!quad) {
        if (as_json) out << json{{"quad", nullptr}, {"holds", false}}.dump(2) << "\n";
        else out << "no quadruple relation with W <= 1\n";
        return 1;
      }
      const auto poly = gk_polytope_3d(*quad, w);
      const auto stable = evaluate_stable([&](const BigInt& m) { return gk_3fold_criterion(poly, m); },
                                          default_scale(poly), cfg.scales);
      if (as_json) {
        out << json{{"quad", encode(*quad)}, {"polytope", encode(poly)}, {"criterion", encode(stable)}, {"holds", stable.holds}}.dump(2)
            << "\n";
      } else {
        out << "quad (" << quad->e << "," << quad->f << "," << quad->g1 << "," << quad->g2 << "), W = " << quad->W << "\n";
        print_criterion_text("tetrahedron", stable, out);
      }
      return stable.holds ? 0 : 1;
    }

    if (*enumerate) {
      const FamilyKind kind = parse_family(family_opt);
      BigInt lo = param_min >= 0 ? BigInt(param_min) : family_min_param(kind);
      if (lo < family_min_param(kind)) lo = family_min_param(kind);
      BigInt hi(param_max);
      if (cfg.max_param > 0 && hi > cfg.max_param) hi = cfg.max_param;
      const auto dims = parse_list(dims_opt);
      for (const auto& n : dims) {
        if (n < 3 || n > 64) throw CLI::ValidationError("--dims", "dimensions must be in 3..64");
      }
      const bool all_a = enum_ds == "all-a";
      const std::vector<BigInt> fixed_ds = all_a ? std::vector<BigInt>{} : parse_list(enum_ds);

      // One task per parameter; lines are written in parameter order.
      auto work = [&, kind](BigInt p) {
        std::vector<std::string> lines;
        const auto m = family_member(kind, p);
        if (!m.accepted()) return lines;
        const EvidenceInput ev{EvidenceInput::Kind::FAMILY, kind, p, ""};
        for (const auto& n : dims) {
          const int dim = n.convert_to<int>();
          const std::vector<BigInt> ds = all_a ? std::vector<BigInt>(static_cast<std::size_t>(dim - 2), m.weights.a) : fixed_ds;
          Outcome o;
          if (kind == FamilyKind::AGK) o = certify_general(m.weights, ds, std::nullopt, ev, limits);
          else if (all_a) o = certify_all_a(m.weights, dim, ev, limits);
          else o = certify_main(m.weights, ds, ev, limits);
          if (as_json) {
            lines.push_back(json{{"family", family_name(kind)}, {"param", encode(p)}, {"dim", dim}, {"outcome", encode(o)}}.dump());
          } else {
            std::ostringstream s;
            s << family_name(kind) << " " << p << " n=" << dim << ": ";
            if (accepted(o)) s << "certified P(" << list_text(std::get<Certificate>(o).weights) << ")";
            else s << "rejected (" << reject_code_name(std::get<Rejection>(o).reasons.front().code) << ")";
            lines.push_back(s.str());
          }
        }
        return lines;
      };
      std::vector<std::future<std::vector<std::string>>> tasks;
      for (BigInt p = lo; p <= hi; ++p) tasks.push_back(std::async(std::launch::async, work, p));
      for (auto& t : tasks) {
        for (const auto& line : t.get()) out << line << "\n";
      }
      return 0;
    }

    if (*intersect) {
      auto all = gather(int_w);
      const auto w = triple(all, "intersect");
      std::vector<BigInt> ds(all.begin() + 3, all.end());
      if (!int_ds.empty()) {
        const auto more = parse_list(int_ds);
        ds.insert(ds.end(), more.begin(), more.end());
      }
      const auto rel = find_relation(w, limits);
      const auto fan = ambient_fan(rel ? surface_fan(*rel, w) : plane_fan(w), ds);
      try {
        const auto rep = verify_intersections(fan);
        if (as_json) {
          out << encode(rep).dump(2) << "\n";
        } else {
          for (const auto& c : rep.checks) out << "  " << c.name << ": " << c.lhs << " = " << c.rhs << "\n";
        }
        return 0;
      } catch (const ConsistencyError& e) {
        if (as_json) out << json{{"error", e.what()}}.dump(2) << "\n";
        else out << e.what() << "\n";
        return 1;
      }
    }

    if (*overlap) {
      const auto all = gather(ov_w);
      if (all.size() != 4) throw CLI::ValidationError("overlap", "expected a,b,c,d");
      for (const auto& x : all) {
        if (x <= 0) throw ArgumentError("overlap: weights must be positive");
      }
      const auto rep = overlap_check({all[0], all[1], all[2], all[3]}, limits);
      if (as_json) {
        out << encode(rep).dump(2) << "\n";
      } else {
        out << (rep.is_overlap ? "overlap" : "no overlap");
        if (rep.quad) out << ", quad (" << rep.quad->e << "," << rep.quad->f << "," << rep.quad->g1 << "," << rep.quad->g2 << ")";
        if (rep.threefold_holds) out << ", 3-fold criterion " << (*rep.threefold_holds ? "holds" : "fails");
        out << "\n";
      }
      return rep.is_overlap ? 0 : 1;
    }
  } catch (const CLI::ParseError& e) {
    err << "mdscert: " << e.what() << "\n";
    return 2;
  } catch (const ArgumentError& e) {
    err << "mdscert: " << e.what() << "\n";
    return 2;
  } catch (const NotInSemigroup& e) {
    err << "mdscert: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "mdscert: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace mds::cli
