// Copyright 2026 the penplan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ast.hpp"

#include <sstream>

namespace penplan {

const SortDecl* DomainSpec::find_sort(const std::string& name) const {
  for (const auto& s : sorts) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

const Schema* DomainSpec::find_fluent(const std::string& name) const {
  for (const auto& f : fluent_schemas) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

const Schema* DomainSpec::find_action(const std::string& name) const {
  for (const auto& a : action_schemas) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

std::string to_string(const Term& t) { return t.name; }

std::string to_string(const Atom& a) {
  if (a.args.empty()) return a.name;
  std::string out = a.name + "(";
  for (size_t i = 0; i < a.args.size(); ++i) {
    if (i > 0) out += ", ";
    out += a.args[i].name;
  }
  return out + ")";
}

std::string to_string(const Literal& l) {
  return l.negated ? "-" + to_string(l.atom) : to_string(l.atom);
}

std::string to_string(const RuleHead& h) {
  std::string out;
  if (h.negated) out += '-';
  out += h.kind == HeadKind::permitted ? "permitted(" : "obl(";
  if (h.action_negated) out += '-';
  out += to_string(h.action);
  return out + ")";
}

std::string body_to_string(const Body& b) {
  std::string out;
  bool first = true;
  for (const auto& l : b.literals) {
    if (!first) out += ", ";
    out += to_string(l);
    first = false;
  }
  for (const auto& g : b.guards) {
    if (!first) out += ", ";
    out += g.lhs.name + " != " + g.rhs.name;
    first = false;
  }
  return out;
}

namespace {

std::string schema_to_string(const Schema& s) {
  if (s.arg_sorts.empty()) return s.name;
  std::string out = s.name + "(";
  for (size_t i = 0; i < s.arg_sorts.size(); ++i) {
    if (i > 0) out += ", ";
    out += s.arg_sorts[i];
  }
  return out + ")";
}

std::string lits_to_string(const std::vector<Literal>& lits) {
  std::string out;
  for (size_t i = 0; i < lits.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(lits[i]);
  }
  return out;
}

void print_rule(std::ostringstream& out, const PolicyRule& r) {
  out << (r.defeasible ? "default " : "rule ") << r.id << ": ";
  if (r.defeasible) out << "normally ";
  out << to_string(r.head);
  if (!r.body.empty()) out << " if " << body_to_string(r.body);
  out << ".\n";
}

}  // namespace

std::string print_domain(const DomainSpec& d) {
  std::ostringstream out;
  for (const auto& s : d.sorts) {
    out << "sort " << s.name << " { ";
    for (size_t i = 0; i < s.constants.size(); ++i) {
      if (i > 0) out << ", ";
      out << s.constants[i];
    }
    out << " }.\n";
  }
  for (const auto& f : d.fluent_schemas) out << "fluent " << schema_to_string(f) << ".\n";
  for (const auto& a : d.action_schemas) out << "action " << schema_to_string(a) << ".\n";
  for (const auto& l : d.dynamic_laws) {
    out << "causes " << to_string(l.action) << ": " << lits_to_string(l.effects);
    if (!l.body.empty()) out << " if " << body_to_string(l.body);
    out << ".\n";
  }
  for (const auto& l : d.static_laws) {
    out << "static " << to_string(l.head) << " if " << body_to_string(l.body) << ".\n";
  }
  for (const auto& l : d.exec_conditions) {
    out << "exec " << to_string(l.action) << " if " << body_to_string(l.body) << ".\n";
  }
  return out.str();
}

std::string print_policy(const PolicySpec& p) {
  std::ostringstream out;
  for (const auto& r : p.strict_rules) print_rule(out, r);
  for (const auto& r : p.defeasible_rules) print_rule(out, r);
  for (const auto& [stronger, weaker] : p.preferences) {
    out << "prefer " << stronger << " " << weaker << ".\n";
  }
  for (const auto& [id, value] : p.rule_penalties) {
    out << "penalty " << id << " = " << value << ".\n";
  }
  out << "penalty default = " << p.default_penalty << ".\n";
  out << "penalty weak = " << p.weak_penalty << ".\n";
  if (p.max_penalty) out << "max_penalty = " << *p.max_penalty << ".\n";
  return out.str();
}

std::string print_problem(const ProblemSpec& p) {
  std::ostringstream out;
  out << "init " << lits_to_string(p.init) << ".\n";
  out << "goal " << lits_to_string(p.goal) << ".\n";
  out << "horizon " << p.horizon << ".\n";
  out << "mode " << (p.mode == Mode::normal ? "normal" : "emergency") << ".\n";
  return out.str();
}

}  // namespace penplan
