#pragma once

// Command-line front end. run() parses argv, builds a Session, dispatches to
// the kernel and writes a text or JSON report.
//
// Exit codes: 0 whenever a verdict was computed (including "false" and "not
// Engel"); kInputError for malformed input or violated preconditions; CLI11's
// own nonzero codes for usage errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "engel/corpus.hpp"
#include "engel/exterior.hpp"
#include "engel/groebner.hpp"
#include "engel/pfaff.hpp"
#include "engel/projective.hpp"
#include "engel/text.hpp"

namespace engel::cli {

using json = nlohmann::ordered_json;

inline constexpr int kInputError = 2;

enum class OutputMode { text, json };

struct Session {
  std::size_t ambient = 0;
  VarNaming naming;
  OutputMode mode = OutputMode::text;
  MonomialOrder order = MonomialOrder::grevlex();
  std::vector<std::string> inputs;  // positional strings
  std::optional<std::string> file;
  std::optional<std::string> corpus;
  bool timing = false;
};

struct Report {
  std::string command;
  json inputs = json::array();
  json verdict = json::object();
  json witness = json::object();
  std::optional<double> timing_ms;

  json to_json(const Session& s) const {
    json j;
    j["command"] = command;
    j["vars"] = s.ambient;
    if (s.ambient > 0)
      j["chart"] = "z" + std::to_string(s.naming.base) + "..z" + std::to_string(s.naming.base + s.ambient - 1);
    j["inputs"] = inputs;
    j["verdict"] = verdict;
    j["witness"] = witness;
    if (timing_ms) j["timing_ms"] = *timing_ms;
    return j;
  }
};

// Subcommand-specific options, filled by CLI11.
struct CommandOptions {
  std::vector<std::string> gens;
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;
  std::vector<std::string> ideal;
  std::vector<std::string> map;
  std::vector<std::string> compare;
  std::optional<std::string> form;
  std::array<std::string, 4> f;
  bool radical = false;
  bool allow_zero_f2 = false;
};

class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline json dimension_json(const DimensionVerdict& d) {
  json j;
  j["ambient"] = d.ambient;
  if (d.empty) {
    j["variety"] = "empty";
  } else {
    j["variety"] = "nonempty";
    j["dimension"] = d.dimension;
    j["codimension"] = d.codimension;
  }
  return j;
}

inline json witness_json(const std::optional<FormWitness>& w, VarNaming naming) {
  if (!w) return nullptr;
  json j;
  j["index"] = w->indices.empty() ? std::string("1") : to_string(w->indices, naming);
  j["coefficient"] = to_string(w->coefficient, naming);
  return j;
}

inline std::string subspace_string(const std::vector<std::size_t>& vars, VarNaming naming) {
  if (vars.empty()) return "everything";
  std::string s = "{";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i > 0) s += '=';
    s += 'z' + std::to_string(vars[i] + naming.base);
  }
  return s + "=0}";
}

inline json variety_json(const Ideal& ideal, VarNaming naming) {
  if (ideal.is_unit()) return "empty";
  if (auto vars = coordinate_subspace(ideal)) return subspace_string(*vars, naming);
  return nullptr;
}

inline json polys_json(const std::vector<Polynomial>& ps, VarNaming naming) {
  json arr = json::array();
  for (const auto& p : ps) arr.push_back(to_string(p, naming));
  return arr;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Largest variable index mentioned in any input text, if any.
inline std::optional<std::size_t> max_index(const std::vector<std::string>& texts) {
  static const std::regex var_re("z([0-9]+)");
  std::optional<std::size_t> best;
  for (const auto& t : texts) {
    for (auto it = std::sregex_iterator(t.begin(), t.end(), var_re); it != std::sregex_iterator(); ++it) {
      const std::string digits = (*it)[1].str();
      if (digits.size() > 6) continue;
      const std::size_t v = std::stoul(digits);
      best = best ? std::max(*best, v) : v;
    }
  }
  return best;
}

class Dispatcher {
 public:
  Dispatcher(const Session& s, const CommandOptions& o) : s_(s), o_(o) {}

  Report run(const std::string& cmd) {
    Report r;
    r.command = cmd;
    using Fn = void (Dispatcher::*)(Report&);
    static const std::vector<std::pair<std::string, Fn>> table = {
        {"engel-check", &Dispatcher::engel_check_cmd}, {"sing", &Dispatcher::sing_cmd},
        {"dim", &Dispatcher::dim_cmd},                 {"class", &Dispatcher::class_cmd},
        {"derived", &Dispatcher::derived_cmd},         {"integral", &Dispatcher::integral_cmd},
        {"same-system", &Dispatcher::same_system_cmd}, {"euler", &Dispatcher::euler_cmd},
        {"degree", &Dispatcher::degree_cmd},           {"jouanolou", &Dispatcher::jouanolou_cmd},
        {"degeneracy", &Dispatcher::degeneracy_cmd},   {"atypical", &Dispatcher::atypical_cmd},
        {"groebner", &Dispatcher::groebner_cmd},       {"member", &Dispatcher::member_cmd},
        {"pullback", &Dispatcher::pullback_cmd},       {"corpus", &Dispatcher::corpus_cmd},
    };
    for (const auto& [name, fn] : table) {
      if (name == cmd) {
        (this->*fn)(r);
        return r;
      }
    }
    throw input_error("unknown subcommand '" + cmd + "'");
  }

 private:
  VarNaming naming() const { return s_.naming; }

  DiffForm form(const std::string& text) const { return parse_form(text, s_.ambient, s_.naming); }
  Polynomial poly(const std::string& text) const { return parse_polynomial(text, s_.ambient, s_.naming); }

  // Forms from --corpus, --file or positional arguments, in that priority.
  std::vector<DiffForm> forms(Report& r) const {
    std::vector<DiffForm> out;
    if (s_.corpus) {
      out = corpus_forms(corpus_entry(*s_.corpus));
    } else if (s_.file) {
      out = parse_form_lines(read_file(*s_.file), s_.ambient, s_.naming);
    } else {
      for (const auto& t : s_.inputs) out.push_back(form(t));
    }
    if (out.empty()) throw input_error("no input forms given");
    for (const auto& f : out) r.inputs.push_back(to_string(f, naming()));
    return out;
  }

  std::vector<Polynomial> polys(Report& r) const {
    std::vector<Polynomial> out;
    for (const auto& f : forms(r)) {
      if (f.degree() != 0) throw input_error("expected polynomials, got a " + std::to_string(f.degree()) + "-form");
      out.push_back(f.coefficient({}));
    }
    return out;
  }

  PfaffSystem system(Report& r) const { return PfaffSystem(forms(r)); }

  DiffForm single_form(Report& r) const {
    auto fs = forms(r);
    if (fs.size() != 1) throw input_error("expected exactly one form");
    return fs.front();
  }

  void engel_check_cmd(Report& r) {
    const EngelReport e = engel_check(system(r));
    json& v = r.verdict;
    v["is_engel"] = e.is_engel;
    v["condition_i"] = e.condition_i;
    v["condition_ii"] = e.condition_ii;
    v["condition_iii"] = e.condition_iii;
    json role;
    role["source"] = to_string(e.role_source);
    role["beta_generator"] = e.beta_index ? json(*e.beta_index + 1) : json(nullptr);
    if (e.pencil) {
      role["pencil"] = {{"lambda", e.pencil->first.get_str()}, {"mu", e.pencil->second.get_str()}};
    } else {
      role["pencil"] = nullptr;
    }
    role["alpha"] = to_string(e.alpha, naming());
    role["beta"] = to_string(e.beta, naming());
    v["role"] = role;
    v["extra_iii_prime"] = e.extra_iii_prime;
    v["class_of_beta"] = e.class_of_beta ? json(*e.class_of_beta) : json(nullptr);
    v["derived_length"] = e.derived_length ? json(*e.derived_length) : json(nullptr);
    v["sing_system"] = dimension_json(e.sing_system);
    v["sing_dbeta"] = dimension_json(e.sing_dbeta);
    v["failure"] = e.failure.empty() ? json(nullptr) : json(e.failure);
    r.witness["condition_i"] = witness_json(e.witness_i, naming());
    r.witness["condition_iii"] = witness_json(e.witness_iii, naming());
  }

  void sing_cmd(Report& r) {
    const PfaffSystem s = system(r);
    const Ideal sing = singular_ideal(s);
    const CodimReport c = codim_report(s);
    r.verdict["generators"] = s.size();
    r.verdict["sing"] = dimension_json(c.actual);
    r.verdict["expected_codimension"] = c.expected;
    r.verdict["atypical"] = c.atypical;
    r.verdict["variety"] = variety_json(sing, naming());
    if (!o_.compare.empty()) {
      std::vector<Polynomial> gens;
      for (const auto& t : o_.compare) gens.push_back(poly(t));
      r.verdict["same_variety_as"] = polys_json(gens, naming());
      r.verdict["same_variety"] = same_variety(sing, Ideal(s_.ambient, gens));
    }
    r.witness["wedge"] = to_string(s.wedge(), naming());
    r.witness["groebner_basis_size"] = sing.basis().size();
  }

  void dim_cmd(Report& r) {
    const Ideal ideal(s_.ambient, polys(r));
    r.verdict["dimension"] = dimension_json(ideal_dimension(ideal));
    r.verdict["variety"] = variety_json(ideal, naming());
    r.witness["groebner_basis"] = polys_json(ideal.basis(), naming());
  }

  void class_cmd(Report& r) {
    const DiffForm beta = single_form(r);
    const unsigned cls = class_of(beta);
    r.verdict["class"] = cls;
    const DiffForm top = wedge(beta, form_power(exterior_derivative(beta), cls));
    r.witness["beta_dbeta_power"] = witness_json(nonzero_witness(top), naming());
  }

  void derived_cmd(Report& r) {
    const PfaffSystem s = system(r);
    // witnesses: a nonzero coefficient of d(gamma) ^ w_1 ^ ... ^ w_k
    const auto obstruction = [&](const DiffForm& gamma) {
      return witness_json(nonzero_witness(wedge(exterior_derivative(gamma), s.wedge())), naming());
    };
    json gens = json::array(), gens_w = json::array();
    for (const auto& g : s.generators()) {
      gens.push_back({{"form", to_string(g, naming())}, {"in_derived", in_derived(g, s)}});
      gens_w.push_back(obstruction(g));
    }
    r.verdict["generators"] = gens;
    r.witness["generators"] = gens_w;
    if (o_.form) {
      const DiffForm gamma = form(*o_.form);
      // d(gamma) = 0 mod I only means something when gamma itself lies in I
      const DiffForm membership = wedge(gamma, s.wedge());
      r.verdict["form"] = {{"form", to_string(gamma, naming())},
                           {"in_system", membership.is_zero()},
                           {"in_derived", in_derived(gamma, s)}};
      r.witness["form"] = {{"in_system", witness_json(nonzero_witness(membership), naming())},
                           {"in_derived", obstruction(gamma)}};
    }
    if (s.size() == 2) {
      if (auto p = derived_pencil(s)) {
        r.verdict["pencil"] = {{"lambda", p->lambda.get_str()},
                               {"mu", p->mu.get_str()},
                               {"form", to_string(p->form, naming())}};
      } else {
        r.verdict["pencil"] = nullptr;
      }
    }
  }

  void integral_cmd(Report& r) {
    const PfaffSystem s = system(r);
    if (o_.gens.empty()) throw input_error("integral needs at least one --gen");
    std::vector<Polynomial> gens;
    for (const auto& t : o_.gens) gens.push_back(poly(t));
    r.verdict["gens"] = polys_json(gens, naming());
    const auto ob = integral_variety_obstruction(gens, s);
    r.verdict["integral_variety"] = !ob;
    // a coefficient of w_i ^ df_1 ^ ... ^ df_r outside the ideal
    if (ob)
      r.witness["obstruction"] = {{"generator", ob->generator}, {"term", witness_json(ob->witness, naming())}};
    else
      r.witness["obstruction"] = nullptr;
  }

  void same_system_cmd(Report& r) {
    auto side = [&](const std::vector<std::string>& texts) {
      std::vector<DiffForm> fs;
      for (const auto& t : texts) fs.push_back(form(t));
      return fs;
    };
    std::vector<DiffForm> left = s_.corpus ? forms(r) : side(o_.lhs);
    if (!s_.corpus)
      for (const auto& f : left) r.inputs.push_back(to_string(f, naming()));
    std::vector<DiffForm> right = side(o_.rhs);
    if (left.empty() || right.empty()) throw input_error("same-system needs --lhs (or --corpus) and --rhs forms");
    for (const auto& f : right) r.inputs.push_back(to_string(f, naming()));
    const PfaffSystem ls(left), rs(right);
    r.verdict["same_system"] = same_system(ls, rs);
    // first generator of either side that is not generically in the other
    r.witness["outside"] = nullptr;
    for (const auto& [name, from, to] : {std::tuple{"lhs", &ls, &rs}, std::tuple{"rhs", &rs, &ls}}) {
      for (std::size_t i = 0; i < from->size(); ++i) {
        const auto w = nonzero_witness(wedge(from->generator(i), to->wedge()));
        if (!w) continue;
        r.witness["outside"] = {{"side", name}, {"generator", i}, {"term", witness_json(w, naming())}};
        break;
      }
      if (!r.witness["outside"].is_null()) break;
    }
  }

  void euler_cmd(Report& r) {
    json arr = json::array();
    const VecField radial = radial_field(s_.ambient);
    for (const auto& f : forms(r)) {
      const DiffForm c = interior_product(radial, f);
      arr.push_back({{"form", to_string(f, naming())}, {"euler", c.is_zero()}, {"contraction", to_string(c, naming())}});
    }
    r.verdict["forms"] = arr;
  }

  void degree_cmd(Report& r) {
    json arr = json::array();
    for (const auto& f : forms(r)) {
      const DegreeInfo d = degree_of(f);
      arr.push_back({{"form", to_string(f, naming())},
                     {"coefficient_degree", d.coefficient_degree},
                     {"form_degree", d.form_degree},
                     {"distribution_degree", d.distribution_degree},
                     {"twist", d.twist}});
    }
    r.verdict["forms"] = arr;
  }

  void jouanolou_cmd(Report& r) {
    json arr = json::array();
    for (const auto& f : forms(r)) {
      const JouanolouReport j = jouanolou_identity_check(f);
      arr.push_back({{"form", to_string(f, naming())},
                     {"q", j.form_degree},
                     {"s", j.coefficient_degree},
                     {"factor", j.factor},
                     {"holds", j.holds},
                     {"lhs", to_string(j.lhs, naming())}});
    }
    r.verdict["forms"] = arr;
  }

  void degeneracy_cmd(Report& r) {
    std::vector<Polynomial> f;
    for (const auto& t : o_.f) {
      if (t.empty()) throw input_error("degeneracy needs --f1 --f2 --f3 --f4");
      f.push_back(poly(t));
      r.inputs.push_back(to_string(f.back(), naming()));
    }
    const DegeneracyReport d = degeneracy_check(f, {o_.allow_zero_f2});
    json& v = r.verdict;
    v["degrees"] = d.degrees;
    v["euler_alpha"] = d.euler_alpha;
    v["euler_beta"] = d.euler_beta;
    v["relation_alpha"] = d.relation_alpha;
    v["relation_beta"] = d.relation_beta;
    v["beta_dbeta_zero"] = d.beta_dbeta_zero;
    v["alpha_beta_dalpha_zero"] = d.alpha_beta_dalpha_zero;
    v["alpha_dalpha_zero"] = d.alpha_dalpha_zero;
    v["alpha_beta_dbeta_zero"] = d.alpha_beta_dbeta_zero;
    v["degenerate"] = d.degenerate;
  }

  void atypical_cmd(Report& r) {
    const AtypicalityReport a = atypicality_verdict(ProjectiveSystem(system(r)));
    json& v = r.verdict;
    v["branch"] = a.branch;
    v["sing_system"] = dimension_json(a.sing_system);
    v["sing_dbeta"] = dimension_json(a.sing_dbeta);
    v["beta"] = to_string(a.engel.beta, naming());
    v["beta_coefficient_degree"] = a.beta_coefficient_degree;
    v["beta_twist"] = a.beta_twist;
    v["contraction_identity"] = a.contraction_identity;
    v["factor_coefficient_convention"] = a.factor_coefficient_convention;
    v["factor_twist_convention"] = a.factor_twist_convention;
    v["containment"] = a.containment;
  }

  void groebner_cmd(Report& r) {
    const Ideal ideal(s_.ambient, polys(r));
    r.verdict["order"] = s_.order.kind() == MonomialOrder::Kind::lex ? "lex" : "grevlex";
    r.verdict["basis"] = polys_json(ideal.basis(s_.order), naming());
  }

  void member_cmd(Report& r) {
    const DiffForm f = single_form(r);
    if (f.degree() != 0) throw input_error("member expects a polynomial");
    const Polynomial p = f.coefficient({});
    if (o_.ideal.empty()) throw input_error("member needs at least one --ideal generator");
    std::vector<Polynomial> gens;
    for (const auto& t : o_.ideal) gens.push_back(poly(t));
    const Ideal ideal(s_.ambient, gens);
    r.verdict["ideal"] = polys_json(gens, naming());
    r.verdict["member"] = ideal_member(p, ideal);
    if (o_.radical) r.verdict["radical_member"] = radical_member(p, ideal);
    r.witness["normal_form"] = to_string(normal_form(p, ideal, s_.order), naming());
  }

  void pullback_cmd(Report& r) {
    const DiffForm f = single_form(r);
    if (o_.map.size() != s_.ambient) throw input_error("pullback needs one --map component per variable");
    std::vector<Polynomial> comps;
    for (const auto& t : o_.map) comps.push_back(poly(t));
    r.verdict["map"] = polys_json(comps, naming());
    r.verdict["pullback"] = to_string(pullback(PolyMap(s_.ambient, comps), f), naming());
  }

  void corpus_cmd(Report& r) {
    json arr = json::array();
    for (const auto& e : corpus()) {
      if (s_.corpus && *s_.corpus != e.name) continue;
      json gens = json::array();
      for (const auto& f : corpus_forms(e)) gens.push_back(to_string(f, e.naming));
      arr.push_back({{"name", e.name},
                     {"vars", e.ambient},
                     {"chart", "z" + std::to_string(e.naming.base) + "..z" + std::to_string(e.naming.base + e.ambient - 1)},
                     {"generators", gens},
                     {"description", e.description}});
    }
    if (arr.empty()) throw input_error("unknown corpus entry '" + s_.corpus.value_or("") + "'");
    r.verdict["entries"] = arr;
  }

  const Session& s_;
  const CommandOptions& o_;
};

inline void print_text(const json& j, std::ostream& out, const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured()) {
        out << prefix << k << ":\n";
        print_text(v, out, prefix + "  ");
      } else {
        out << prefix << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured()) {
        out << prefix << "-\n";
        print_text(v, out, prefix + "  ");
      } else {
        out << prefix << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      }
    }
  }
}

}  // namespace detail

inline Report run_command(const std::string& subcommand, const Session& session, const CommandOptions& opts = {}) {
  return detail::Dispatcher(session, opts).run(subcommand);
}

inline const std::vector<std::pair<std::string, std::string>>& subcommands() {
  static const std::vector<std::pair<std::string, std::string>> list = {
      {"engel-check", "Engel conditions, roles, class, derived length and singular loci of a 2-form system"},
      {"sing", "singular set of a Pfaff system: dimension, expected codimension, variety"},
      {"dim", "dimension of the variety of an ideal"},
      {"class", "class of a 1-form"},
      {"derived", "first derived system membership of the generators (and --form)"},
      {"integral", "whether V(--gen ...) is an integral variety of the system"},
      {"same-system", "generic equality of two Pfaff systems (--lhs/--corpus vs --rhs)"},
      {"euler", "contraction with the radial field"},
      {"degree", "coefficient degree, distribution degree and twist of homogeneous forms"},
      {"jouanolou", "check i_R d(eta) + d(i_R eta) = (q+s) eta"},
      {"degeneracy", "homogeneous normal form df4 - f3 df1, df3 - f2 df1 under the Euler condition"},
      {"atypical", "singular-set codimension branch of a homogeneous Engel system"},
      {"groebner", "reduced Groebner basis"},
      {"member", "ideal (and --radical) membership"},
      {"pullback", "pullback of a form along a polynomial map (--map per variable)"},
      {"corpus", "list the built-in systems"},
  };
  return list;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact symbolic checks for Pfaff systems, Engel systems and singular loci", "engel"};
  app.require_subcommand(1);

  Session session;
  CommandOptions opts;
  std::size_t vars = 0;
  std::optional<std::size_t> base;
  std::string order = "grevlex";
  bool as_json = false;

  for (const auto& [name, help] : subcommands()) {
    CLI::App* sub = app.add_subcommand(name, help);
    auto* vars_opt = sub->add_option("--vars", vars, "number of variables");
    if (name != "corpus") vars_opt->required();
    sub->add_flag("--json", as_json, "emit JSON");
    sub->add_option("--corpus", session.corpus, "built-in system: canonical, example1, example2, example2-euler");
    sub->add_option("--order", order, "monomial order")->check(CLI::IsMember({"grevlex", "lex"}));
    sub->add_option("--file", session.file, "input file, one form per line, # comments");
    sub->add_option("--base", base, "index of the first variable (default: 1 if z<vars> appears, else 0)")
        ->check(CLI::Range(0, 1));
    sub->add_flag("--timing", session.timing, "add a timing_ms field");
    sub->add_option("inputs", session.inputs, "forms or polynomials");
    if (name == "integral") sub->add_option("--gen", opts.gens, "generator of the variety's ideal");
    if (name == "same-system") {
      sub->add_option("--lhs", opts.lhs, "generator of the first system");
      sub->add_option("--rhs", opts.rhs, "generator of the second system");
    }
    if (name == "member") {
      sub->add_option("--ideal", opts.ideal, "ideal generator");
      sub->add_flag("--radical", opts.radical, "also test radical membership");
    }
    if (name == "derived") sub->add_option("--form", opts.form, "extra 1-form to test");
    if (name == "pullback") sub->add_option("--map", opts.map, "image of z_i, one per variable in order");
    if (name == "sing") sub->add_option("--compare", opts.compare, "generator of an ideal to compare varieties with");
    if (name == "degeneracy") {
      for (int i = 0; i < 4; ++i) sub->add_option("--f" + std::to_string(i + 1), opts.f[static_cast<std::size_t>(i)]);
      sub->add_flag("--allow-zero-f2", opts.allow_zero_f2, "permit f2 = 0");
    }
  }

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    session.ambient = vars;
    session.mode = as_json ? OutputMode::json : OutputMode::text;
    session.order = order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
    if (session.corpus && cmd != "corpus") {
      const CorpusEntry& e = corpus_entry(*session.corpus);
      if (e.ambient != vars)
        throw input_error("corpus '" + *session.corpus + "' lives on " + std::to_string(e.ambient) +
                          " variables, --vars is " + std::to_string(vars));
      session.naming = e.naming;
    } else if (base) {
      session.naming.base = *base;
    } else {
      std::vector<std::string> texts = session.inputs;
      for (const auto* group : {&opts.gens, &opts.lhs, &opts.rhs, &opts.ideal, &opts.map, &opts.compare})
        texts.insert(texts.end(), group->begin(), group->end());
      texts.insert(texts.end(), opts.f.begin(), opts.f.end());
      if (opts.form) texts.push_back(*opts.form);
      if (session.file) texts.push_back(detail::read_file(*session.file));
      const auto top = detail::max_index(texts);
      session.naming.base = (top && *top == vars) ? 1 : 0;
    }

    const auto start = std::chrono::steady_clock::now();
    Report report = run_command(cmd, session, opts);
    if (session.timing)
      report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (session.mode == OutputMode::json) {
      out << report.to_json(session).dump(2) << '\n';
    } else {
      out << report.command << '\n';
      json j = report.to_json(session);
      j.erase("command");
      detail::print_text(j, out, "  ");
    }
    return 0;
  } catch (const parse_error& e) {
    err << "engel " << cmd << ": parse error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "engel " << cmd << ": " << e.what() << '\n';
  }
  return kInputError;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(std::move(args), out, err);
}

}  // namespace engel::cli
