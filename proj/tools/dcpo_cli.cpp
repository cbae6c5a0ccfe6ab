// Command line front end: parses element specs, runs fuel-bounded queries
// against the library, and emits machine-checkable JSON witnesses.
//
// Exit codes: 0 definite answer, 1 honest unknown, 2 error.

#include <CLI11.hpp>
#include <json.hpp>

#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dcpo/domains.hpp"
#include "dcpo/separation.hpp"
#include "dcpo/text.hpp"

using json = nlohmann::ordered_json;
using namespace dcpo;
using namespace dcpo::domains;
namespace tx = dcpo::text;

namespace {

struct cli_error : std::runtime_error {
  explicit cli_error(const std::string& what) : std::runtime_error(what) {}
};

struct outcome {
  int exit_code = 2;
  json body;
};

[[noreturn]] void parse_failure(const std::string& what, const tx::parse_error& e,
                                const std::string& input) {
  throw cli_error(what + " at position " + std::to_string(e.position) + " in '" +
                  input + "': " + e.message);
}

std::pair<std::string, std::string> split_domain(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw cli_error("element spec '" + spec + "' needs a domain prefix like cantor:");
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

// Per-domain glue: element construction from the spec grammar and atom parsing.
template <class E>
struct driver {
  std::shared_ptr<const basis_descriptor<E>> basis;
  std::function<element<E>(const std::string&)> make;
  std::function<E(const std::string&)> atom;
};

driver<seq> cantor_driver() {
  auto b = cantor_basis();
  return {b,
          [b](const std::string& s) {
            auto g = tx::parse_generator(s, true);
            if (!g.first) parse_failure("bad cantor generator", g.second, s);
            return embed_seq(b, *g.first);
          },
          [](const std::string& s) {
            auto a = tx::parse_cantor_atom(s);
            if (!a.first) parse_failure("bad cantor atom", a.second, s);
            return *a.first;
          }};
}

driver<seq> baire_driver() {
  auto b = baire_basis();
  return {b,
          [b](const std::string& s) {
            auto g = tx::parse_generator(s, false);
            if (!g.first) parse_failure("bad baire generator", g.second, s);
            return embed_seq(b, *g.first);
          },
          [](const std::string& s) {
            auto a = tx::parse_baire_atom(s);
            if (!a.first) parse_failure("bad baire atom", a.second, s);
            return *a.first;
          }};
}

driver<qpair> dede_driver() {
  auto b = dedekind_basis();
  return {b,
          [b](const std::string& s) {
            auto loc = tx::parse_real(s);
            if (!loc.first) parse_failure("bad dedekind real spec", loc.second, s);
            return embed_located(b, *loc.first);
          },
          [](const std::string& s) {
            auto a = tx::parse_qpair_atom(s);
            if (!a.first) parse_failure("bad interval atom", a.second, s);
            return *a.first;
          }};
}

driver<rational> lower_driver() {
  auto b = lower_basis();
  return {b,
          [b](const std::string& s) {
            auto loc = tx::parse_real(s);
            if (!loc.first) parse_failure("bad lower real spec", loc.second, s);
            return lower_from_locator(b, *loc.first);
          },
          [](const std::string& s) {
            auto a = tx::parse_rational_atom(s);
            if (!a.first) parse_failure("bad rational atom", a.second, s);
            return *a.first;
          }};
}

driver<eps_step> eps_driver() {
  auto b = eps_basis();
  return {b,
          [b](const std::string& s) {
            auto g = tx::parse_generator(s, true);
            if (!g.first) parse_failure("bad eps generator", g.second, s);
            return epsilon_embed(b, *g.first);
          },
          [](const std::string& s) {
            auto a = tx::parse_step_atom(s);
            if (!a.first) parse_failure("bad step function atom", a.second, s);
            return *a.first;
          }};
}

struct query {
  std::string command;
  std::vector<std::string> elements;
  std::vector<std::string> atoms;
  std::size_t fuel = 256;
  bool verify = false;
};

template <class E>
json witness_json(const basis_descriptor<E>& b, const apartness_witness<E>& w) {
  return {{"direction", to_text(w.direction)},
          {"basis_element", b.render(w.element)},
          {"member_index", w.member_index},
          {"evidence_element", w.evidence}};
}

template <class E>
json witness_json(const basis_descriptor<E>& b, const hausdorff_witness<E>& w) {
  return {{"a", b.render(w.a)},
          {"b", b.render(w.b)},
          {"a_index", w.a_index},
          {"b_index", w.b_index},
          {"refinable_checked", w.refinable_checked}};
}

template <class E>
outcome run_query(const driver<E>& d, const query& q) {
  json out;
  out["command"] = q.command;

  auto unknown = [&]() {
    out["status"] = "unknown";
    out["fuel_used"] = q.fuel;
    return outcome{1, out};
  };
  auto witness = [&](std::size_t fuel_used, json w, bool verified) {
    out["status"] = "witness";
    out["fuel_used"] = fuel_used;
    out["witness"] = std::move(w);
    if (q.verify) {
      if (!verified) throw cli_error("witness verification failed; this is a bug");
      out["verified"] = true;
    }
    return outcome{0, out};
  };

  if (q.command == "apart") {
    element<E> x = d.make(q.elements.at(0));
    element<E> y = d.make(q.elements.at(1));
    auto w = apart(x, y, q.fuel);
    if (!w) return unknown();
    return witness(w->member_index, witness_json(*d.basis, *w),
                   !q.verify || verify_apartness(x, y, *w));
  }
  if (q.command == "member") {
    element<E> x = d.make(q.elements.at(0));
    E b = d.atom(q.atoms.at(0));
    auto m = member(x, b, q.fuel);
    if (!m) return unknown();
    json w{{"basis_element", d.basis->render(b)}, {"member_index", *m}};
    return witness(*m, std::move(w), !q.verify || member(x, b, *m).has_value());
  }
  if (q.command == "positive") {
    element<E> x = d.make(q.elements.at(0));
    auto w = positive(x, q.fuel);
    if (!w) return unknown();
    json j{{"basis_element", d.basis->render(w->element)},
           {"member_index", w->index}};
    return witness(w->index, std::move(j),
                   !q.verify || (!d.basis->is_bottom(w->element) &&
                                 member(x, w->element, w->index).has_value()));
  }
  if (q.command == "hausdorff") {
    element<E> x = d.make(q.elements.at(0));
    element<E> y = d.make(q.elements.at(1));
    auto w = hausdorff_separate(x, y, q.fuel);
    if (!w) return unknown();
    return witness(std::max(w->a_index, w->b_index), witness_json(*d.basis, *w),
                   !q.verify || verify_hausdorff(x, y, *w));
  }
  if (q.command == "sharp-probe") {
    element<E> x = d.make(q.elements.at(0));
    E a = d.atom(q.atoms.at(0));
    E b = d.atom(q.atoms.at(1));
    sharp_verdict<E> v = sharp_split(x, a, b);
    if (std::holds_alternative<below_t>(v)) {
      json w{{"branch", "below"}, {"basis_element", d.basis->render(a)}};
      return witness(0, std::move(w), !q.verify || member(x, a, q.fuel).has_value());
    }
    const auto& na = std::get<not_above<E>>(v);
    json w{{"branch", "not_above"},
           {"refuting_element", d.basis->render(na.refuting)},
           {"evidence_element", na.evidence}};
    bool ok = !q.verify ||
              (x.negative && x.negative->refute(na.refuting, q.fuel).kind ==
                                 membership::not_member);
    return witness(0, std::move(w), ok);
  }
  if (q.command == "strongmax-probe") {
    element<E> x = d.make(q.elements.at(0));
    E u = d.atom(q.atoms.at(0));
    E v = d.atom(q.atoms.at(1));
    strongmax_verdict<E> verdict = strongmax_split(x, u, v);
    if (std::holds_alternative<way_below_t>(verdict)) {
      json w{{"branch", "way_below"}, {"basis_element", d.basis->render(u)}};
      return witness(0, std::move(w), !q.verify || member(x, u, q.fuel).has_value());
    }
    const auto& hw = std::get<hausdorff_witness<E>>(verdict);
    json w = witness_json(*d.basis, hw);
    w["branch"] = "separated";
    return witness(hw.b_index, std::move(w),
                   !q.verify || verify_strongmax_separation(x, v, hw, q.fuel));
  }
  throw cli_error("unknown command " + q.command);
}

outcome dispatch(const query& q) {
  std::vector<std::string> doms;
  std::vector<std::string> bodies;
  for (const auto& spec : q.elements) {
    auto [dom, body] = split_domain(spec);
    doms.push_back(dom);
    bodies.push_back(body);
  }
  for (std::size_t i = 1; i < doms.size(); ++i)
    if (doms[i] != doms[0])
      throw cli_error("mixed domains: " + doms[0] + " vs " + doms[i]);
  if (doms.empty()) throw cli_error("no element specified");

  query body_q = q;
  body_q.elements = bodies;
  const std::string& dom = doms[0];
  if (dom == "cantor") return run_query(cantor_driver(), body_q);
  if (dom == "baire") return run_query(baire_driver(), body_q);
  if (dom == "dede") return run_query(dede_driver(), body_q);
  if (dom == "lower") return run_query(lower_driver(), body_q);
  if (dom == "eps") return run_query(eps_driver(), body_q);
  throw cli_error("unknown domain prefix '" + dom + "'");
}

outcome run_validate(const std::string& name, std::size_t sample) {
  json out;
  out["command"] = "validate-basis";
  out["basis"] = name;
  out["sample"] = sample;
  std::vector<basis_violation> violations;
  if (name == "cantor") violations = validate_basis(*cantor_basis(), sample);
  else if (name == "baire") violations = validate_basis(*baire_basis(), sample);
  else if (name == "dedekind") violations = validate_basis(*dedekind_basis(), sample);
  else if (name == "lower") violations = validate_basis(*lower_basis(), sample);
  else if (name == "lift2") violations = validate_basis(*lift_two_basis(), sample);
  else if (name == "exp") violations = validate_basis(*eps_basis(), sample);
  else throw cli_error("unknown basis '" + name + "'");
  out["status"] = violations.empty() ? "pass" : "fail";
  json vs = json::array();
  for (const auto& v : violations)
    vs.push_back({{"kind", v.kind}, {"detail", v.detail}});
  out["violations"] = vs;
  return {violations.empty() ? 0 : 1, out};
}

void emit(const outcome& o, bool as_json) {
  if (as_json) {
    std::cout << o.body.dump(2) << "\n";
    return;
  }
  std::cout << o.body["command"].get<std::string>() << ": "
            << o.body["status"].get<std::string>();
  if (o.body.contains("witness")) std::cout << " " << o.body["witness"].dump();
  std::cout << "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fuel-bounded queries over continuous dcpos presented by abstract bases"};
  app.require_subcommand(1);

  query q;
  bool as_json = true;
  std::string basis_name;
  std::size_t sample = 50;
  std::string e1, e2, a1, a2;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--fuel", q.fuel, "search budget in chain indices")
        ->default_val(256);
    cmd->add_flag("--verify", q.verify, "replay any emitted witness");
    cmd->add_flag("--json,!--no-json", as_json, "JSON output (default on)");
  };

  auto* apart_cmd = app.add_subcommand("apart", "search for an apartness witness");
  apart_cmd->add_option("x", e1, "element spec")->required();
  apart_cmd->add_option("y", e2, "element spec")->required();
  add_common(apart_cmd);

  auto* member_cmd = app.add_subcommand("member", "semidecide basis membership");
  member_cmd->add_option("x", e1, "element spec")->required();
  member_cmd->add_option("atom", a1, "basis element")->required();
  add_common(member_cmd);

  auto* sharp_cmd = app.add_subcommand("sharp-probe", "run the sharp split on a pair");
  sharp_cmd->add_option("x", e1, "element spec")->required();
  sharp_cmd->add_option("a", a1, "basis element with a prec b")->required();
  sharp_cmd->add_option("b", a2, "basis element with a prec b")->required();
  add_common(sharp_cmd);

  auto* smax_cmd =
      app.add_subcommand("strongmax-probe", "run the strong-maximality split");
  smax_cmd->add_option("x", e1, "element spec")->required();
  smax_cmd->add_option("u", a1, "basis element with u prec v")->required();
  smax_cmd->add_option("v", a2, "basis element with u prec v")->required();
  add_common(smax_cmd);

  auto* pos_cmd = app.add_subcommand("positive", "search for a non-bottom approximant");
  pos_cmd->add_option("x", e1, "element spec")->required();
  add_common(pos_cmd);

  auto* haus_cmd =
      app.add_subcommand("hausdorff", "search for a Hausdorff separation witness");
  haus_cmd->add_option("x", e1, "element spec")->required();
  haus_cmd->add_option("y", e2, "element spec")->required();
  add_common(haus_cmd);

  auto* val_cmd = app.add_subcommand("validate-basis", "spot-check the basis axioms");
  val_cmd->add_option("basis", basis_name,
                      "one of: cantor baire dedekind lower lift2 exp")
      ->required();
  val_cmd->add_option("--sample", sample, "enumerated sample size")->default_val(50);
  val_cmd->add_flag("--json,!--no-json", as_json, "JSON output (default on)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help is fine, every parse failure is exit 2
  }

  try {
    outcome o;
    if (val_cmd->parsed()) {
      o = run_validate(basis_name, sample);
    } else {
      q.command = app.get_subcommands().front()->get_name();
      if (!e1.empty()) q.elements.push_back(e1);
      if (!e2.empty()) q.elements.push_back(e2);
      if (member_cmd->parsed() || sharp_cmd->parsed() || smax_cmd->parsed())
        q.atoms.push_back(a1);
      if (sharp_cmd->parsed() || smax_cmd->parsed()) q.atoms.push_back(a2);
      o = dispatch(q);
    }
    emit(o, as_json);
    return o.exit_code;
  } catch (const std::exception& e) {
    json out;
    out["command"] = app.get_subcommands().empty()
                         ? std::string{"?"}
                         : app.get_subcommands().front()->get_name();
    out["status"] = "error";
    out["error"] = e.what();
    if (as_json) std::cout << out.dump(2) << "\n";
    else std::cout << out["command"].get<std::string>() << ": error: " << e.what() << "\n";
    return 2;
  }
}
