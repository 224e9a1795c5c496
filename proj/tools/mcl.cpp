// mcl: command-line front end for the chamber, ideal and fixture tools.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mcl/verify.hpp"

namespace {

using namespace mcl;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(std::string(detail::trim(cur)));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!detail::trim(cur).empty()) out.push_back(std::string(detail::trim(cur)));
  return out;
}

// Inline "(f, g, ...)" or a file with one polynomial per line.
Ideal ideal_arg(const std::string& arg, const Ring& r) {
  auto t = detail::trim(arg);
  if (!t.empty() && t.front() == '(') return Ideal::parse(t, r);
  return Ideal::parse_lines(read_file(arg), r);
}

void print_basis(const Ideal& I) {
  for (const auto& g : I.generators()) std::cout << g.to_string() << "\n";
  if (I.is_zero()) std::cout << "0\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chamber classification, ideal computations and fixture replay"};
  app.require_subcommand(1);

  std::string vars = "X,Y,Z,W";
  std::string order = "grevlex";
  app.add_option("--vars", vars, "Ring variables, comma separated")->capture_default_str();
  app.add_option("--order", order, "Monomial order: lex, grlex, grevlex, block:k")->capture_default_str();

  // verify-paper
  auto* vp = app.add_subcommand("verify-paper", "Run the fixture suite");
  std::string filter, fixtures_path;
  bool vp_json = false, timings = false, emit_fixtures = false;
  unsigned jobs = 1;
  vp->add_option("--filter", filter, "Glob over fixture ids, e.g. 'case-IV*'");
  vp->add_option("--fixtures", fixtures_path, "Fixture file overriding expected values and seed");
  vp->add_flag("--json", vp_json, "Machine-readable report");
  vp->add_flag("--timings", timings, "Include per-fixture runtimes");
  vp->add_option("-j,--jobs", jobs, "Worker threads")->capture_default_str();
  vp->add_flag("--emit-fixtures", emit_fixtures, "Print the registry as a fixture file and exit");

  // classify
  auto* cl = app.add_subcommand("classify", "Base locus and model of H + alpha*Delta");
  std::string alpha_s, divisor_s, space_s = "kontsevich";
  bool cl_json = false;
  auto* alpha_opt = cl->add_option("--alpha", alpha_s, "Rational or 'inf'");
  cl->add_option("--divisor", divisor_s, "Divisor class such as '5/3*H - 1/3*D'")->excludes(alpha_opt);
  cl->add_option("--space", space_s, "kontsevich or hilbert")->capture_default_str();
  cl->add_flag("--json", cl_json);

  // walk
  auto* wk = app.add_subcommand("walk", "Models crossed while alpha decreases");
  std::string from_s, to_s;
  bool wk_json = false;
  wk->add_option("--from", from_s)->required();
  wk->add_option("--to", to_s)->required();
  wk->add_flag("--json", wk_json);

  // diagram
  auto* dg = app.add_subcommand("diagram", "Chamber diagram as text, json or svg");
  std::string dg_space = "kontsevich", dg_format = "text", dg_out;
  dg->add_option("--space", dg_space)->capture_default_str();
  dg->add_option("--format", dg_format)->capture_default_str();
  dg->add_option("-o,--output", dg_out, "Output file (default stdout)");

  // gb
  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis");
  std::string gb_ideal;
  gb->add_option("ideal", gb_ideal, "'(f, g, ...)' or a file")->required();

  // ideal
  auto* id = app.add_subcommand("ideal", "Ideal operations");
  id->require_subcommand(1);
  std::string ia, ib, elim_vars, member_f;
  auto* id_eq = id->add_subcommand("eq", "Test equality");
  auto* id_int = id->add_subcommand("intersect", "Intersection");
  auto* id_quo = id->add_subcommand("quotient", "Ideal quotient I : J");
  auto* id_sat = id->add_subcommand("saturate", "Saturation I : J^inf");
  for (auto* s : {id_eq, id_int, id_quo, id_sat}) {
    s->add_option("I", ia)->required();
    s->add_option("J", ib)->required();
  }
  auto* id_elim = id->add_subcommand("eliminate", "Eliminate variables");
  id_elim->add_option("I", ia)->required();
  id_elim->add_option("vars", elim_vars, "Comma-separated variables to eliminate")->required();
  auto* id_mem = id->add_subcommand("member", "Ideal membership");
  id_mem->add_option("I", ia)->required();
  id_mem->add_option("f", member_f)->required();

  // hilbert
  auto* hb = app.add_subcommand("hilbert", "Hilbert function or polynomial of a homogeneous ideal");
  std::string hb_ideal;
  bool hb_poly = false;
  int hb_degree = -1;
  hb->add_option("ideal", hb_ideal)->required();
  auto* poly_flag = hb->add_flag("--poly", hb_poly, "Hilbert polynomial");
  hb->add_option("--function", hb_degree, "Hilbert function in degree d")->excludes(poly_flag);

  // pencil
  auto* pc = app.add_subcommand("pencil", "Reducible members of a nodal cubic pencil");
  std::string spec_path;
  bool pc_json = false, emit_spec = false;
  pc->add_option("--spec", spec_path, "Pencil file (default: the shipped pencil)");
  pc->add_flag("--json", pc_json);
  pc->add_flag("--emit-spec", emit_spec, "Print the pencil in file form and exit");

  CLI11_PARSE(app, argc, argv);

  try {
    Ring ring = make_ring(split_csv(vars), MonomialOrder::parse(order));

    if (*vp) {
      if (emit_fixtures) {
        std::cout << format_fixture_file(registry_fixture_file());
        return 0;
      }
      VerifyOptions opt;
      if (!filter.empty()) opt.filter = filter;
      if (!fixtures_path.empty()) apply_fixture_file(opt, parse_fixture_file(read_file(fixtures_path)));
      opt.jobs = jobs;
      auto rep = verify_all(opt);
      if (vp_json) std::cout << report_to_json(rep, timings).dump(2) << "\n";
      else std::cout << report_to_text(rep, timings);
      return rep.all_pass() ? 0 : 1;
    }

    if (*cl) {
      Space sp = parse_space(space_s);
      BaseLocusLabel bl;
      ModelLabel model;
      std::string alpha_text;
      if (!divisor_s.empty()) {
        auto D = DivisorClass::parse(divisor_s);
        bl = base_locus(D, sp);
        auto a = to_alpha(D);
        alpha_text = a.alpha.to_string();
        model = a.scale.sign() > 0 ? log_model(a.alpha) : ModelLabel::OutsidePseudoeffective;
      } else {
        if (alpha_s.empty()) throw Error(Errc::InvalidArgument, "classify needs --alpha or --divisor");
        auto a = ExtendedAlpha::parse(alpha_s);
        alpha_text = a.to_string();
        bl = base_locus(a, sp);
        model = log_model(a);
      }
      if (cl_json) {
        nlohmann::ordered_json j{{"alpha", alpha_text},
                                 {"base_locus", std::string(to_string(bl))},
                                 {"model", std::string(to_string(model))}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "alpha=" << alpha_text << " space=" << to_string(sp) << " base_locus=" << to_string(bl)
                  << " model=" << to_string(model) << "\n";
      }
      return 0;
    }

    if (*wk) {
      auto w = mmp_walk(Rational::parse(from_s), Rational::parse(to_s));
      if (wk_json) std::cout << walk_to_json(w).dump(2) << "\n";
      else std::cout << walk_to_string(w);
      return 0;
    }

    if (*dg) {
      auto doc = render_diagram(parse_space(dg_space), dg_format);
      if (dg_out.empty()) {
        std::cout << doc;
      } else {
        std::ofstream out(dg_out, std::ios::binary);
        if (!out) throw Error(Errc::InvalidArgument, "cannot write '" + dg_out + "'");
        out << doc;
      }
      return 0;
    }

    if (*gb) {
      auto g = groebner(ideal_arg(gb_ideal, ring));
      print_basis(to_ideal(g, ring));
      return 0;
    }

    if (*id) {
      Ideal I = ideal_arg(ia, ring);
      if (*id_eq) {
        bool eq = ideal_equal(I, ideal_arg(ib, ring));
        std::cout << (eq ? "true" : "false") << "\n";
        return eq ? 0 : 1;
      }
      if (*id_int) print_basis(reduced(intersect(I, ideal_arg(ib, ring))));
      if (*id_quo) print_basis(reduced(quotient(I, ideal_arg(ib, ring))));
      if (*id_sat) {
        auto s = saturate(I, ideal_arg(ib, ring));
        print_basis(reduced(s.ideal));
        std::cerr << "stabilized after " << s.exponent << " quotient(s)\n";
      }
      if (*id_elim) print_basis(reduced(eliminate(I, split_csv(elim_vars))));
      if (*id_mem) {
        bool in = contains(I, parse_poly(member_f, ring));
        std::cout << (in ? "true" : "false") << "\n";
        return in ? 0 : 1;
      }
      return 0;
    }

    if (*hb) {
      Ideal I = ideal_arg(hb_ideal, ring);
      if (hb_degree >= 0) {
        std::cout << hilbert_function(I, hb_degree) << "\n";
      } else {
        auto hd = hilbert_polynomial(I);
        std::cout << hd.to_string() << "\n";
      }
      return 0;
    }

    if (*pc) {
      PencilSpec s = spec_path.empty() ? shipped_pencil() : parse_pencil_spec(read_file(spec_path));
      if (emit_spec) {
        std::cout << "# Nodal cubic pencil: node and five base points; F, G span the cubics\n"
                     "# singular at the node through the base points.\n"
                  << format_pencil_spec(s);
        return 0;
      }
      auto res = count_reducible_members(s);
      if (pc_json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& m : res.members)
          arr.push_back({{"lambda", m.lambda.to_string()}, {"mu", m.mu.to_string()}, {"line", m.line.to_string()}});
        nlohmann::ordered_json j{{"count", res.count}, {"members", arr}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "reducible members: " << res.count << "\n";
        for (const auto& m : res.members)
          std::cout << "  (" << m.lambda.to_string() << " : " << m.mu.to_string() << ")  line " << m.line.to_string()
                    << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "mcl: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
