// Command-line frontend: every library module as a subcommand, exact
// rational text/JSON output, plus the canned reproduction scenarios.
//
// Exit status: 0 success, 1 domain/computation error, 2 usage error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <loctor/equations.hpp>
#include <loctor/knot_expr.hpp>
#include <loctor/laurent.hpp>
#include <loctor/numeric.hpp>
#include <loctor/presentation.hpp>
#include <loctor/rho.hpp>
#include <loctor/series.hpp>
#include <loctor/signature.hpp>
#include <loctor/smith.hpp>
#include <loctor/star_search.hpp>
#include <loctor/subring.hpp>
#include <loctor/tower.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace loctor;
using nlohmann::ordered_json;

namespace {

struct Options {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

void emit(const Options& opt, const ordered_json& j, const std::string& text) {
  if (opt.json())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

// ---------------------------------------------------------------- inputs

TowerElement read_element(const std::string& input, const std::string& stage) {
  if (!input.empty() && input[0] == '{')
    return TowerElement::from_json(nlohmann::json::parse(input));
  return normalize(input, Stage::parse(stage));
}

SubringSpec read_ring(const std::string& spec) {
  if (spec.empty()) return SubringSpec::localized_at(2);
  if (spec[0] == '{') return SubringSpec::from_json(nlohmann::json::parse(spec));
  if (spec == "Z") return SubringSpec::integers();
  if (spec.rfind("Z_(", 0) == 0 && spec.back() == ')')
    return SubringSpec::localized_at(Int(spec.substr(3, spec.size() - 4)));
  if (spec.rfind("Z[1/", 0) == 0 && spec.back() == ']')
    return SubringSpec::inverting(Int(spec.substr(4, spec.size() - 5)));
  throw std::invalid_argument("unrecognized ring '" + spec +
                              "' (use Z, Z_(p), Z[1/p] or JSON)");
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  nlohmann::json j;
  in >> j;
  return j;
}

std::vector<Rat> read_rat_vector(const std::string& csv) {
  std::vector<Rat> v;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rat(item));
  return v;
}

std::string element_text(const TowerElement& g) {
  return "z^" + format_rat(g.d.representative()) + " t^" + g.c.str() + " x^" +
         format_rat(g.a) + " y^" + format_rat(g.b);
}

// ---------------------------------------------------------------- group

void setup_group(CLI::App& app, Options& opt) {
  auto* group = app.add_subcommand("group", "normal-form arithmetic in the tower groups");
  group->require_subcommand(1);

  struct Args {
    std::string stage = "inf";
    std::vector<std::string> words;
    std::string element;
    long long n = 1;
  };
  auto args = std::make_shared<Args>();

  auto add_stage = [&](CLI::App* cmd) {
    cmd->add_option("--stage", args->stage,
                    "odd stage (generators denote that stage's copies) or 'inf'");
  };

  auto* norm = group->add_subcommand("normalize", "normal form of a word over xXyYtT");
  norm->add_option("word", args->words, "word(s) to normalize")->required();
  add_stage(norm);
  norm->callback([args, &opt] {
    for (const auto& w : args->words) {
      auto g = normalize(w, Stage::parse(args->stage));
      emit(opt, g.to_json(), element_text(g));
    }
  });

  auto* mul_cmd = group->add_subcommand("mul", "product of the normal forms of words");
  mul_cmd->add_option("word", args->words, "words to multiply")->required();
  add_stage(mul_cmd);
  mul_cmd->callback([args, &opt] {
    TowerElement acc = TowerElement::identity();
    for (const auto& w : args->words)
      acc = mul(acc, normalize(w, Stage::parse(args->stage)));
    emit(opt, acc.to_json(), element_text(acc));
  });

  auto* inv_cmd = group->add_subcommand("inv", "inverse");
  inv_cmd->add_option("word", args->words, "word or element JSON")->required();
  add_stage(inv_cmd);
  inv_cmd->callback([args, &opt] {
    auto g = inv(read_element(args->words.at(0), args->stage));
    emit(opt, g.to_json(), element_text(g));
  });

  auto* pow_cmd = group->add_subcommand("pow", "integer power");
  pow_cmd->add_option("word", args->words, "word or element JSON")->required();
  pow_cmd->add_option("-n,--exponent", args->n, "exponent")->required();
  add_stage(pow_cmd);
  pow_cmd->callback([args, &opt] {
    auto g = pow(read_element(args->words.at(0), args->stage), Int(args->n));
    emit(opt, g.to_json(), element_text(g));
  });

  auto* order_cmd = group->add_subcommand("order", "order (finite or inf)");
  order_cmd->add_option("word", args->words, "word or element JSON")->required();
  add_stage(order_cmd);
  order_cmd->callback([args, &opt] {
    auto g = read_element(args->words.at(0), args->stage);
    auto o = order(g);
    ordered_json j;
    j["order"] = o ? o->str() : "inf";
    emit(opt, j, o ? o->str() : "inf");
  });

  auto* stage_cmd = group->add_subcommand("stage", "minimal stage containing the element");
  stage_cmd->add_option("word", args->words, "word or element JSON")->required();
  add_stage(stage_cmd);
  stage_cmd->callback([args, &opt] {
    Int m = minimal_stage(read_element(args->words.at(0), args->stage));
    ordered_json j;
    j["minimal_stage"] = m.str();
    emit(opt, j, m.str());
  });

  auto* ab_cmd = group->add_subcommand("abelianize", "image in (Z/2)^2 x Z");
  ab_cmd->add_option("word", args->words, "word or element JSON")->required();
  add_stage(ab_cmd);
  ab_cmd->callback([args, &opt] {
    auto a = abelianize(read_element(args->words.at(0), args->stage));
    ordered_json j;
    j["x_mod2"] = a.x_mod2;
    j["y_mod2"] = a.y_mod2;
    j["t"] = a.t_exp.str();
    emit(opt, j,
         "(" + std::to_string(a.x_mod2) + ", " + std::to_string(a.y_mod2) +
             ", " + a.t_exp.str() + ")");
  });
}

// ---------------------------------------------------------------- series

void setup_series(CLI::App& app, Options& opt) {
  auto* series = app.add_subcommand("series", "lower central and mixed commutator series");
  series->require_subcommand(1);

  struct Args {
    std::string stage = "inf";
    std::string element;
    std::string index;
    long long p = 3;
    long long qmax = 64;
  };
  auto args = std::make_shared<Args>();

  auto* member = series->add_subcommand("member", "series membership test");
  member->add_option("element", args->element, "word or element JSON")->required();
  member->add_option("--index", args->index,
                     R"(series index JSON, e.g. {"kind":"lcs","q":3})")
      ->required();
  member->add_option("--stage", args->stage, "stage for word input");
  member->callback([args, &opt] {
    auto g = read_element(args->element, args->stage);
    auto idx = SeriesIndex::from_json(nlohmann::json::parse(args->index));
    bool in = series_member(g, idx);
    ordered_json j;
    j["member"] = in;
    emit(opt, j, in ? "true" : "false");
  });

  auto* project = series->add_subcommand("project", "image in the third mixed quotient");
  project->add_option("element", args->element, "word or element JSON")->required();
  project->add_option("--p", args->p, "prime")->required();
  project->add_option("--stage", args->stage, "stage for word input");
  project->callback([args, &opt] {
    auto q = project_P3(read_element(args->element, args->stage), Int(args->p));
    auto o = quotient_order(q);
    ordered_json j = q.to_json();
    j["order"] = o ? o->str() : "inf";
    std::string dp = q.dp ? format_rat(q.dp->representative()) : "(dropped)";
    emit(opt, j,
         "dp=" + dp + " c=" + q.c.str() + " x^" + format_rat(q.a) + " y^" +
             format_rat(q.b) + "  order " + (o ? o->str() : "inf"));
  });

  auto* invis = series->add_subcommand("invisible", "membership in every finite lcs term");
  invis->add_option("element", args->element, "word or element JSON")->required();
  invis->add_option("--qmax", args->qmax, "depth bound (>= 2)");
  invis->add_option("--stage", args->stage, "stage for word input");
  invis->callback([args, &opt] {
    bool in = nilpotent_invisible(read_element(args->element, args->stage),
                                  Int(args->qmax));
    ordered_json j;
    j["invisible"] = in;
    emit(opt, j, in ? "true" : "false");
  });

  auto* report = series->add_subcommand("report", "transfinite series length at a stage");
  report->add_option("--stage", args->stage, "odd stage or 'inf'")->required();
  report->callback([args, &opt] {
    auto r = lcs_length_report(Stage::parse(args->stage));
    ordered_json j;
    j["length"] = r.length_tag;
    if (r.witness) j["witness"] = r.witness->to_json();
    emit(opt, j,
         "length " + r.length_tag +
             (r.witness ? ", witness " + element_text(*r.witness) : ""));
  });
}

// ---------------------------------------------------------------- sig

void setup_sig(CLI::App& app, Options& opt) {
  auto* sig = app.add_subcommand("sig", "Levine-Tristram signature invariants");
  sig->require_subcommand(1);

  struct Args {
    std::string knot;
    std::string angle;
    long long p = 3;
  };
  auto args = std::make_shared<Args>();

  auto* at = sig->add_subcommand("at", "signature at a rational angle u/n");
  at->add_option("knot", args->knot, "knot expression")->required();
  at->add_option("--angle", args->angle, "angle as a fraction of a full turn")
      ->required();
  at->callback([args, &opt] {
    int s = signature_at(parse_knot_expr(args->knot),
                         Angle(parse_rat(args->angle)));
    ordered_json j;
    j["signature"] = s;
    emit(opt, j, std::to_string(s));
  });

  auto* fn = sig->add_subcommand("function", "the full signature step function");
  fn->add_option("knot", args->knot, "knot expression")->required();
  fn->callback([args, &opt] {
    auto f = signature_function(parse_knot_expr(args->knot));
    std::string text;
    if (f.breakpoints.empty()) {
      text = "constant " + std::to_string(f.arc_values[0]) + ", no breakpoints";
    } else {
      for (size_t i = 0; i < f.breakpoints.size(); ++i) {
        std::string prev =
            i == 0 ? f.breakpoints.back().str() : f.breakpoints[i - 1].str();
        text += "(" + prev + ", " + f.breakpoints[i].str() + ") -> " +
                std::to_string(f.arc_values[i]) + "   at " +
                f.breakpoints[i].str() + " -> " +
                std::to_string(f.point_values[i]) + "\n";
      }
      text.pop_back();
    }
    emit(opt, f.to_json(), text);
  });

  auto* rs = sig->add_subcommand("rootsum", "sum over all p-th roots of unity");
  rs->add_option("knot", args->knot, "knot expression")->required();
  rs->add_option("--p", args->p, "prime")->required();
  rs->callback([args, &opt] {
    Int s = root_sum(parse_knot_expr(args->knot), Int(args->p));
    ordered_json j;
    j["root_sum"] = s.str();
    emit(opt, j, s.str());
  });

  auto* integral = sig->add_subcommand("integral", "normalized circle integral");
  integral->add_option("knot", args->knot, "knot expression")->required();
  integral->callback([args, &opt] {
    Rat v = circle_integral(parse_knot_expr(args->knot));
    ordered_json j;
    j["integral"] = format_rat(v);
    emit(opt, j, format_rat(v));
  });

  auto* alex = sig->add_subcommand("alexander", "det(tA - A^T)");
  alex->add_option("knot", args->knot, "knot expression")->required();
  alex->callback([args, &opt] {
    auto d = alexander_polynomial(parse_knot_expr(args->knot));
    ordered_json j;
    j["alexander"] = poly_to_string(d, "t");
    emit(opt, j, poly_to_string(d, "t"));
  });
}

// ---------------------------------------------------------------- rho

void setup_rho(CLI::App& app, Options& opt) {
  auto* rho = app.add_subcommand("rho", "homology cobordism obstruction values");
  rho->require_subcommand(1);

  struct Args {
    std::string knot, other;
    long long p = 3;
    int n = 10;
  };
  auto args = std::make_shared<Args>();

  auto* delta = rho->add_subcommand("delta", "obstruction value root_sum/p");
  delta->add_option("knot", args->knot, "knot expression")->required();
  delta->add_option("--p", args->p, "odd prime")->required();
  delta->callback([args, &opt] {
    Rat v = delta_rho(parse_knot_expr(args->knot), Int(args->p));
    ordered_json j;
    j["delta_rho"] = format_rat(v);
    j["decimal"] = format_decimal(v);
    emit(opt, j, format_rat(v) + "  (" + format_decimal(v) + ")");
  });

  auto* table = rho->add_subcommand("table", "values for 0..n fold connected sums");
  table->add_option("--knot", args->knot, "knot expression")->required();
  table->add_option("--p", args->p, "odd prime")->required();
  table->add_option("--n", args->n, "largest multiplicity")->required();
  table->callback([args, &opt] {
    auto t = family_table(parse_knot_expr(args->knot), Int(args->p), args->n);
    std::string text = "copies  delta_rho  decimal\n";
    for (const auto& r : t.rows)
      text += std::to_string(r.copies) + "  " + format_rat(r.value) + "  " +
              format_decimal(r.value) + "\n";
    text += "pairwise distinct: ";
    text += t.pairwise_distinct ? "true" : "false";
    emit(opt, t.to_json(), text);
  });

  auto* compare = rho->add_subcommand("compare", "obstruction verdict for two knots");
  compare->add_option("knot", args->knot, "first knot expression")->required();
  compare->add_option("other", args->other, "second knot expression")->required();
  compare->add_option("--p", args->p, "odd prime")->required();
  compare->callback([args, &opt] {
    auto r = obstruction_report(parse_knot_expr(args->knot),
                                parse_knot_expr(args->other), Int(args->p));
    emit(opt, r.to_json(),
         r.verdict + "  (" + format_rat(r.value_i) + ", " +
             format_rat(r.value_j) + ")");
  });

  auto* star = rho->add_subcommand("star", "the two-part nonvanishing condition");
  star->add_option("knot", args->knot, "knot expression")->required();
  star->add_option("--p", args->p, "odd prime")->required();
  star->callback([args, &opt] {
    auto r = star_certificate(parse_knot_expr(args->knot), Int(args->p));
    std::string text = std::string("sum_nonzero: ") +
                       (r.sum_nonzero ? "true" : "false") +
                       "  integral_zero: " + (r.integral_zero ? "true" : "false") +
                       "  star: " + (r.star ? "true" : "false");
    emit(opt, r.to_json(), text);
  });
}

// ---------------------------------------------------------------- search

void setup_search(CLI::App& app, Options& opt) {
  auto* search = app.add_subcommand(
      "search", "integer combination with zero integral and nonzero root sum");

  struct Args {
    std::vector<std::string> basis;
    long long p = 3;
    long bound = 64;
  };
  auto args = std::make_shared<Args>();
  search->add_option("--basis", args->basis, "basis knot expressions")
      ->required()
      ->expected(-1);
  search->add_option("--p", args->p, "prime")->required();
  search->add_option("--bound", args->bound, "coefficient bound");
  search->callback([args, &opt] {
    std::vector<SeifertMatrix> basis;
    for (const auto& b : args->basis) basis.push_back(parse_knot_expr(b));
    auto cert = search_star(Int(args->p), basis, args->bound);
    ordered_json j;
    if (!cert) {
      j["found"] = false;
      emit(opt, j, "none (no combination within bound " +
                       std::to_string(args->bound) + ")");
      return;
    }
    bool verified = verify_star_certificate(*cert, basis, Int(args->p));
    j["found"] = true;
    auto coeffs = ordered_json::array();
    for (const auto& c : cert->coefficients) coeffs.push_back(c.str());
    j["coefficients"] = std::move(coeffs);
    j["sum_value"] = cert->sum_value.str();
    j["verified"] = verified;
    std::string text = "coefficients:";
    for (const auto& c : cert->coefficients) text += " " + c.str();
    text += "\nsum value: " + cert->sum_value.str();
    text += verified ? "\nindependent verification: pass"
                     : "\nindependent verification: FAIL";
    emit(opt, j, text);
    if (!verified) throw std::logic_error("certificate failed verification");
  });
}

// ---------------------------------------------------------------- eq

void setup_eq(CLI::App& app, Options& opt) {
  auto* eq = app.add_subcommand("eq", "equation systems over finitely presented groups");
  eq->require_subcommand(1);

  struct Args {
    std::string file;
    std::string ring = "Z_(2)";
    long long tower_stage = 0;
  };
  auto args = std::make_shared<Args>();

  auto* validate = eq->add_subcommand("validate", "check the system invariants");
  validate->add_option("--file", args->file, "system JSON file")->required();
  validate->add_option("--ring", args->ring, "coefficient ring");
  validate->callback([args, &opt] {
    auto s = EquationSystem::from_json(read_json_file(args->file));
    auto r = validate_system(s, read_ring(args->ring));
    ordered_json j;
    j["valid"] = r.ok;
    if (!r.ok) j["diagnostic"] = r.diagnostic;
    emit(opt, j, r.ok ? "valid" : "invalid: " + r.diagnostic);
    if (!r.ok) throw std::domain_error(r.diagnostic);
  });

  auto* adjoin_cmd = eq->add_subcommand("adjoin", "presentation with a solution adjoined");
  adjoin_cmd->add_option("--file", args->file, "system JSON file")->required();
  adjoin_cmd->callback([args, &opt] {
    auto s = EquationSystem::from_json(read_json_file(args->file));
    auto p = adjoin(s);
    std::string text = "generators:";
    for (const auto& g : p.generators) text += " " + g;
    text += "\nrelators:";
    for (const auto& r : p.relators) text += "\n  " + r.str();
    emit(opt, p.to_json(), text);
  });

  auto* boundary = eq->add_subcommand("boundary", "variable-exponent boundary matrix");
  boundary->add_option("--file", args->file, "system JSON file")->required();
  boundary->callback([args, &opt] {
    auto s = EquationSystem::from_json(read_json_file(args->file));
    auto m = boundary_matrix(s);
    ordered_json j;
    auto rows = ordered_json::array();
    std::string text;
    for (const auto& row : m) {
      auto r = ordered_json::array();
      std::string line;
      for (const auto& x : row) {
        r.push_back(x.str());
        line += (line.empty() ? "" : " ") + x.str();
      }
      rows.push_back(std::move(r));
      text += line + "\n";
    }
    if (!text.empty()) text.pop_back();
    j["boundary"] = std::move(rows);
    emit(opt, j, text);
  });

  auto* certify = eq->add_subcommand("certify", "chain-level homology certificate");
  certify->add_option("--file", args->file, "system JSON file")->required();
  certify->add_option("--ring", args->ring, "coefficient ring");
  certify->callback([args, &opt] {
    auto s = EquationSystem::from_json(read_json_file(args->file));
    auto R = read_ring(args->ring);
    auto v = validate_system(s, R);
    if (!v.ok) throw std::domain_error("invalid system: " + v.diagnostic);
    auto c = homology_certificate(s, R);
    emit(opt, c.to_json(),
         std::string("h_relative_trivial: ") +
             (c.h_relative_trivial ? "true" : "false") + "  det: " +
             c.det.str());
  });

  auto* snf = eq->add_subcommand("snf", "abelianization via Smith normal form");
  snf->add_option("--file", args->file, "presentation JSON file");
  snf->add_option("--tower-stage", args->tower_stage,
                  "use the built-in tower presentation at this odd stage");
  snf->callback([args, &opt] {
    GroupPresentation p =
        args->tower_stage > 0
            ? tower_stage_presentation(Int(args->tower_stage))
            : GroupPresentation::from_json(read_json_file(args->file));
    auto rep = abelianization_snf(p);
    ordered_json j;
    auto factors = ordered_json::array();
    for (const auto& f : rep.invariant_factors) factors.push_back(f.str());
    j["invariant_factors"] = std::move(factors);
    j["free_rank"] = rep.free_rank;
    std::string text = "factors:";
    for (const auto& f : rep.invariant_factors) text += " " + f.str();
    text += "  free rank: " + std::to_string(rep.free_rank);
    emit(opt, j, text);
  });
}

// ---------------------------------------------------------------- local

void setup_local(CLI::App& app, Options& opt) {
  auto* local = app.add_subcommand("local", "module locality determinant criteria");
  local->require_subcommand(1);

  struct Args {
    std::string file;
    std::string ring;
    std::string rhs;
    std::string matrix;
    int at = 1;
  };
  auto args = std::make_shared<Args>();

  auto* eval = local->add_subcommand("eval", "evaluate the matrix at t = +1 / -1");
  eval->add_option("--file", args->file, "Laurent matrix JSON file")->required();
  eval->add_option("--at", args->at, "+1 or -1")->required();
  eval->callback([args, &opt] {
    auto A = LaurentMatrix::from_json(read_json_file(args->file));
    auto m = eval_matrix(A, args->at);
    ordered_json j;
    auto rows = ordered_json::array();
    std::string text;
    for (const auto& row : m) {
      auto r = ordered_json::array();
      std::string line;
      for (const auto& x : row) {
        r.push_back(format_rat(x));
        line += (line.empty() ? "" : " ") + format_rat(x);
      }
      rows.push_back(std::move(r));
      text += line + "\n";
    }
    if (!text.empty()) text.pop_back();
    j["matrix"] = std::move(rows);
    emit(opt, j, text);
  });

  auto* crit = local->add_subcommand("criterion", "determinant and parity tests");
  crit->add_option("--file", args->file, "Laurent matrix JSON file")->required();
  crit->add_option("--ring", args->ring, "ring R (default: the matrix's own)");
  crit->callback([args, &opt] {
    auto A = LaurentMatrix::from_json(read_json_file(args->file));
    auto R = args->ring.empty() ? A.ring : read_ring(args->ring);
    auto c = locality_criterion(A, R);
    emit(opt, c.to_json(),
         std::string("unit_at_1: ") + (c.unit_at_1 ? "true" : "false") +
             "  unit_at_minus1_in_Z2: " +
             (c.unit_at_minus1_in_Z2 ? "true" : "false") + "  parity_ok: " +
             (c.parity_ok ? "true" : "false"));
  });

  auto* solve = local->add_subcommand("solve", "solve A(-1) g = f over Z_(2)");
  solve->add_option("--file", args->file, "Laurent matrix JSON file")->required();
  solve->add_option("--rhs", args->rhs, "comma-separated rationals")->required();
  solve->callback([args, &opt] {
    auto A = LaurentMatrix::from_json(read_json_file(args->file));
    auto g = solve_local(A, read_rat_vector(args->rhs));
    ordered_json j;
    auto sol = ordered_json::array();
    std::string text;
    for (const auto& x : g) {
      sol.push_back(format_rat(x));
      text += (text.empty() ? "" : " ") + format_rat(x);
    }
    j["solution"] = std::move(sol);
    emit(opt, j, text);
  });

  auto* trivial = local->add_subcommand("trivial", "trivial-action solve over R");
  trivial->add_option("--matrix", args->matrix, "matrix JSON, e.g. [[\"3\"]]")
      ->required();
  trivial->add_option("--rhs", args->rhs, "comma-separated rationals")->required();
  trivial->add_option("--ring", args->ring, "ring R")->required();
  trivial->callback([args, &opt] {
    RatMatrix B;
    for (const auto& row : nlohmann::json::parse(args->matrix)) {
      B.emplace_back();
      for (const auto& x : row)
        B.back().push_back(x.is_string() ? parse_rat(x.get<std::string>())
                                         : Rat(x.get<long long>()));
    }
    auto c = trivial_action_locality(B, read_rat_vector(args->rhs),
                                     read_ring(args->ring));
    ordered_json j;
    j["det"] = format_rat(c.det);
    auto sol = ordered_json::array();
    std::string text = "det " + format_rat(c.det) + "  solution:";
    for (const auto& x : c.solution) {
      sol.push_back(format_rat(x));
      text += " " + format_rat(x);
    }
    j["solution"] = std::move(sol);
    emit(opt, j, text);
  });
}

// ---------------------------------------------------------------- reproduce

struct Reproducer {
  int mismatches = 0;
  std::string scenario;

  explicit Reproducer(std::string name) : scenario(std::move(name)) {}

  template <class T>
  void check(const std::string& what, const T& expected, const T& computed) {
    bool ok = expected == computed;
    std::ostringstream e, c;
    e << expected;
    c << computed;
    std::cout << "  [" << scenario << "] " << what << ": expected " << e.str()
              << ", computed " << c.str() << (ok ? "" : "  MISMATCH") << "\n";
    if (!ok) ++mismatches;
  }

  void check_bool(const std::string& what, bool expected, bool computed) {
    check<std::string>(what, expected ? "true" : "false",
                       computed ? "true" : "false");
  }

  int finish() const {
    std::cout << (mismatches == 0 ? "PASS: " : "FAIL: ") << scenario;
    if (mismatches) std::cout << " (" << mismatches << " mismatches)";
    std::cout << "\n";
    return mismatches == 0 ? 0 : 1;
  }
};

int reproduce_lemma32() {
  Reproducer rep("lemma3.2");
  Stage s3 = Stage::finite(3);
  TowerElement z = TowerElement::gen_z(s3);

  bool all_finite = true;
  for (Int q = 2; q <= 64; ++q)
    all_finite = all_finite && series_member(z, SeriesIndex::lcs(q));
  rep.check_bool("z in every finite lcs term q <= 64", true, all_finite);
  rep.check_bool("z in the omega term", true,
                 series_member(z, SeriesIndex::omega()));
  rep.check_bool("z in the omega+1 term", false,
                 series_member(z, SeriesIndex::omega_plus_1()));

  std::mt19937_64 gen(2025);
  auto rnd = [&](long lo, long hi) {
    return lo + static_cast<long>(gen() % static_cast<unsigned long>(hi - lo + 1));
  };
  int commuting = 0;
  const int trials = 1000;
  for (int i = 0; i < trials; ++i) {
    TowerElement h(TorsionCoset(mod1(Rat(rnd(0, 80), 81))), Int(rnd(-3, 3)),
                   Rat(rnd(-20, 20), 9), Rat(rnd(-20, 20), 9));
    if (mul(z, h) == mul(h, z)) ++commuting;
  }
  rep.check("z commutes with random elements", trials, commuting);

  // commutator closure at stage 3
  bool closure = true;
  for (Int q = 1; q <= 6 && closure; ++q) {
    Int scale = q == 1 ? Int(1)
                       : int_pow(2, static_cast<unsigned long>(
                                        (q - 1).convert_to<long>()));
    for (int i = 0; i < 60 && closure; ++i) {
      TowerElement g(TorsionCoset(Rat(rnd(0, 8), 9)),
                     q == 1 ? Int(rnd(-2, 2)) : Int(0),
                     Rat(scale * rnd(-5, 5), 3), Rat(scale * rnd(-5, 5), 3));
      if (!series_member(g, SeriesIndex::lcs(q))) { closure = false; break; }
      for (const auto& h :
           {TowerElement::gen_x(s3), TowerElement::gen_y(s3),
            TowerElement::gen_t()})
        closure = closure &&
                  series_member(commutator(g, h), SeriesIndex::lcs(q + 1));
    }
  }
  rep.check_bool("commutator closure for q <= 6", true, closure);

  auto r1 = lcs_length_report(Stage::finite(1));
  rep.check<std::string>("stage-1 series length", "omega", r1.length_tag);
  auto rc = lcs_length_report(Stage::colimit());
  rep.check<std::string>("colimit series length", "omega+1", rc.length_tag);
  rep.check_bool("colimit witness lies in the omega term", true,
                 series_member(*rc.witness, SeriesIndex::omega()));
  return rep.finish();
}

int reproduce_lemma33() {
  Reproducer rep("lemma3.3");
  TowerElement g15(TorsionCoset(Rat(1, 15)), 0, 0, 0);
  auto ord = [](const P3QuotientElement& q) {
    auto o = quotient_order(q);
    return o ? o->str() : std::string("inf");
  };
  rep.check<std::string>("order-15 element at p = 3", "3",
                         ord(project_P3(g15, 3)));
  rep.check<std::string>("order-15 element at p = 5", "5",
                         ord(project_P3(g15, 5)));
  rep.check<std::string>("order-15 element at p = 7", "1",
                         ord(project_P3(g15, 7)));

  std::mt19937_64 gen(2026);
  auto rnd = [&](long lo, long hi) {
    return lo + static_cast<long>(gen() % static_cast<unsigned long>(hi - lo + 1));
  };
  const std::vector<long> orders{3, 5, 7, 9, 15, 21, 45};
  const std::vector<long> denoms{1, 3, 5, 7, 9, 15, 21, 45};
  int agree = 0, hom = 0;
  const int trials = 10000;
  for (int i = 0; i < trials; ++i) {
    long p = std::vector<long>{2, 3, 5, 7}[static_cast<size_t>(rnd(0, 3))];
    TowerElement g, h;
    if (rnd(0, 1)) {
      long m = orders[static_cast<size_t>(rnd(0, 6))];
      g = TowerElement(TorsionCoset(Rat(rnd(0, m - 1), m)), 0, 0, 0);
    } else {
      g = TowerElement(TorsionCoset(mod1(Rat(rnd(0, 44), 45))), Int(rnd(-2, 2)),
                       Rat(rnd(-9, 9), denoms[static_cast<size_t>(rnd(0, 7))]),
                       Rat(rnd(-9, 9), denoms[static_cast<size_t>(rnd(0, 7))]));
    }
    h = TowerElement(TorsionCoset(mod1(Rat(rnd(0, 44), 45))), Int(rnd(-2, 2)),
                     Rat(rnd(-9, 9), denoms[static_cast<size_t>(rnd(0, 7))]),
                     Rat(rnd(-9, 9), denoms[static_cast<size_t>(rnd(0, 7))]));
    if (project_P3(g, p).is_identity() ==
        series_member(g, SeriesIndex::mixed_term(3, p)))
      ++agree;
    if (project_P3(mul(g, h), p) == mul(project_P3(g, p), project_P3(h, p)))
      ++hom;
  }
  rep.check("kernel = third mixed term (samples)", trials, agree);
  rep.check("projection is a homomorphism (samples)", trials, hom);
  return rep.finish();
}

int reproduce_thm41() {
  Reproducer rep("thm4.1-cert");
  std::mt19937_64 gen(2027);
  auto rnd = [&](long lo, long hi) {
    return lo + static_cast<long>(gen() % static_cast<unsigned long>(hi - lo + 1));
  };
  auto Z2 = SubringSpec::localized_at(2);
  auto Z = SubringSpec::integers();

  int diag_ok = 0, det_ok = 0, cert_ok = 0, z_cert_false = 0, with_e_gt_1 = 0;
  const int trials = 1000;
  for (int t = 0; t < trials; ++t) {
    GroupPresentation base({"g", "h"}, {});
    int n = static_cast<int>(rnd(1, 6));
    Int e(2 * rnd(0, 4) + 1);
    std::vector<Word> words;
    for (int i = 0; i < n; ++i) {
      Word w;
      for (long s = rnd(2, 16); s > 0; --s) {
        long pick = rnd(0, n + 1);
        std::string gn = pick < n ? EquationSystem::variable_name(
                                        static_cast<int>(pick) + 1)
                                  : (pick == n ? "g" : "h");
        w.append({gn, Int(rnd(0, 1) ? 1 : -1)});
      }
      for (int j = 1; j <= n; ++j) {
        Int sum = w.exponent_sum(EquationSystem::variable_name(j));
        if (sum != 0) w.append({EquationSystem::variable_name(j), -sum});
      }
      words.push_back(std::move(w));
    }
    EquationSystem s(base, n, e, std::move(words));
    auto m = boundary_matrix(s);
    bool diag = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        diag = diag && m[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
                           (i == j ? Int(-e) : Int(0));
    if (diag) ++diag_ok;
    auto c = homology_certificate(s, Z2);
    Int expect = 1;
    for (int i = 0; i < n; ++i) expect *= -e;
    if (c.det == expect) ++det_ok;
    if (c.h_relative_trivial) ++cert_ok;
    if (e > 1) {
      ++with_e_gt_1;
      if (!homology_certificate(s, Z).h_relative_trivial) ++z_cert_false;
    }
  }
  rep.check("boundary matrix is -e I (samples)", trials, diag_ok);
  rep.check("determinant is (-e)^n (samples)", trials, det_ok);
  rep.check("certificate over Z_(2) (samples)", trials, cert_ok);
  rep.check("no certificate over Z when e > 1 (samples)", with_e_gt_1,
            z_cert_false);

  bool snf_ok = true;
  for (Int s = 1; s <= 9; s += 2) {
    auto r = abelianization_snf(tower_stage_presentation(s));
    snf_ok = snf_ok && r.invariant_factors == std::vector<Int>{2, 2} &&
             r.free_rank == 1;
  }
  rep.check_bool("tower stages abelianize to (Z/2)^2 x Z for k <= 5", true,
                 snf_ok);
  return rep.finish();
}

int reproduce_thm53() {
  Reproducer rep("thm5.3");
  std::vector<SeifertMatrix> basis{SeifertMatrix::torus_2(3),
                                   SeifertMatrix::torus_2(7)};
  auto cert = search_star(3, basis);
  rep.check_bool("search finds a certificate", true, cert.has_value());
  if (cert) {
    rep.check_bool("search certificate passes the independent verifier", true,
                   verify_star_certificate(*cert, basis, 3));
  }
  StarCertificate known{{Int(18), Int(-7)}, Int(-16)};
  auto K = assemble_combination(known.coefficients, basis);
  rep.check<std::string>("assembled known combination integral", "0/1",
                         format_rat(circle_integral(K)));
  rep.check<std::string>("assembled known combination root sum", "-16",
                         root_sum(K, 3).str());
  rep.check_bool("known certificate (18, -7) verifies", true,
                 verify_star_certificate(known, basis, 3));

  auto table = family_table(K, 3, 100);
  rep.check_bool("101 family values pairwise distinct", true,
                 table.pairwise_distinct);
  rep.check<std::string>("family value at 1 copy", "-16/3",
                         format_rat(table.rows[1].value));
  rep.check<std::string>("family value at 100 copies", "-1600/3",
                         format_rat(table.rows[100].value));

  auto r = obstruction_report(K, SeifertMatrix::unknot(), 3);
  rep.check<std::string>("verdict against the unknot", "obstructed", r.verdict);
  auto sc = star_certificate(K, 3);
  rep.check_bool("two-part condition", true, sc.star);
  return rep.finish();
}

int reproduce_appendixA() {
  Reproducer rep("appendixA");
  std::mt19937_64 gen(2028);
  auto rnd = [&](long lo, long hi) {
    return lo + static_cast<long>(gen() % static_cast<unsigned long>(hi - lo + 1));
  };
  auto Z = SubringSpec::integers();
  auto Z2 = SubringSpec::localized_at(2);

  auto random_matrix = [&](const SubringSpec& R) {
    size_t n = static_cast<size_t>(rnd(1, 4));
    std::vector<std::vector<LaurentPoly>> e(n, std::vector<LaurentPoly>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        std::map<long, Rat> c;
        for (int terms = static_cast<int>(rnd(0, 3)); terms >= 0; --terms)
          c[rnd(-3, 3)] = Rat(rnd(-5, 5));
        e[i][j] = LaurentPoly(std::move(c));
      }
    return LaurentMatrix(std::move(e), R);
  };

  int conditioned = 0, unit_m1 = 0, parity = 0, sampled = 0;
  while (conditioned < 500) {
    auto A = random_matrix(Z);
    ++sampled;
    Rat d1 = rational_det(eval_matrix(A, 1));
    Rat dm = rational_det(eval_matrix(A, -1));
    if (is_odd(num(d1)) == is_odd(num(dm))) ++parity;
    if (abs(d1) != 1 && abs(d1) != 3 && abs(d1) != 5) continue;
    ++conditioned;
    if (locality_criterion(A, Z).unit_at_minus1_in_Z2) ++unit_m1;
  }
  rep.check("conditioned samples with det A(-1) a Z_(2)-unit", 500, unit_m1);
  rep.check("parity identity det A(1) = det A(-1) mod 2 (all samples)",
            sampled, parity);

  int solved = 0;
  const int want = 1000;
  for (int k = 0; k < want;) {
    auto A = random_matrix(Z2);
    Rat d1 = rational_det(eval_matrix(A, 1));
    if (d1 == 0 || is_even(num(d1))) continue;
    ++k;
    std::vector<Rat> f;
    for (size_t i = 0; i < A.size(); ++i) f.emplace_back(rnd(-9, 9));
    auto g = solve_local(A, f);
    auto M = eval_matrix(A, -1);
    bool ok = true;
    for (size_t i = 0; i < A.size(); ++i) {
      Rat acc = 0;
      for (size_t j = 0; j < A.size(); ++j) acc += M[i][j] * g[j];
      ok = ok && acc == f[i];
    }
    if (ok) ++solved;
  }
  rep.check("solve round-trips A(-1) g = f exactly", want, solved);
  return rep.finish();
}

void setup_reproduce(CLI::App& app) {
  auto* repro = app.add_subcommand(
      "reproduce", "run a named scenario and compare expected against computed");
  auto target = std::make_shared<std::string>();
  repro->add_option("target", *target,
                    "one of: lemma3.2, lemma3.3, thm4.1-cert, thm5.3, appendixA")
      ->required();
  repro->callback([target] {
    int rc;
    if (*target == "lemma3.2") rc = reproduce_lemma32();
    else if (*target == "lemma3.3") rc = reproduce_lemma33();
    else if (*target == "thm4.1-cert") rc = reproduce_thm41();
    else if (*target == "thm5.3") rc = reproduce_thm53();
    else if (*target == "appendixA") rc = reproduce_appendixA();
    else throw CLI::ValidationError("reproduce", "unknown target '" + *target + "'");
    if (rc != 0) throw std::runtime_error("reproduction failed");
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of torus-bundle group localizations"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  setup_group(app, opt);
  setup_series(app, opt);
  setup_sig(app, opt);
  setup_rho(app, opt);
  setup_search(app, opt);
  setup_eq(app, opt);
  setup_local(app, opt);
  setup_reproduce(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
