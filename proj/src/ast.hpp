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

// Abstract syntax for the three input languages: domains (.dom), policies
// (.pol) and problems (.prb). Specs compare structurally; source positions
// are carried for diagnostics but never take part in equality.

#ifndef PENPLAN_AST_HPP
#define PENPLAN_AST_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace penplan {

// Equal to everything so that defaulted comparisons stay structural.
struct SourcePos {
  int line = 0;
  int col = 0;
  friend bool operator==(const SourcePos&, const SourcePos&) { return true; }
};

// A term is a constant (lowercase identifier) or a variable (uppercase).
struct Term {
  std::string name;
  bool is_var = false;
  bool operator==(const Term&) const = default;
};

// Reference to a fluent or action: name plus optional argument terms.
struct Atom {
  std::string name;
  std::vector<Term> args;
  SourcePos pos;
  bool operator==(const Atom&) const = default;
};

struct Literal {
  Atom atom;
  bool negated = false;
  bool operator==(const Literal&) const = default;
};

// Inequality guard `lhs != rhs`; operands may be variables or constants.
struct Guard {
  Term lhs;
  Term rhs;
  SourcePos pos;
  bool operator==(const Guard&) const = default;
};

// Law/rule body. Literals and guards are kept in source order within each
// list; guards are compile-time filters and vanish at grounding.
struct Body {
  std::vector<Literal> literals;
  std::vector<Guard> guards;
  bool operator==(const Body&) const = default;
  bool empty() const { return literals.empty() && guards.empty(); }
};

struct SortDecl {
  std::string name;
  std::vector<std::string> constants;
  SourcePos pos;
  bool operator==(const SortDecl&) const = default;
};

// Declared fluent or action: name plus the sorts of its argument slots.
struct Schema {
  std::string name;
  std::vector<std::string> arg_sorts;
  SourcePos pos;
  bool operator==(const Schema&) const = default;
};

// causes action: effects [if body].
struct DynamicLaw {
  Atom action;
  std::vector<Literal> effects;
  Body body;
  bool operator==(const DynamicLaw&) const = default;
};

// static head if body.
struct StaticLaw {
  Literal head;
  Body body;
  bool operator==(const StaticLaw&) const = default;
};

// exec action if body.
struct ExecLaw {
  Atom action;
  Body body;
  bool operator==(const ExecLaw&) const = default;
};

struct DomainSpec {
  std::vector<SortDecl> sorts;
  std::vector<Schema> fluent_schemas;
  std::vector<Schema> action_schemas;
  std::vector<DynamicLaw> dynamic_laws;
  std::vector<StaticLaw> static_laws;
  std::vector<ExecLaw> exec_conditions;
  bool operator==(const DomainSpec&) const = default;

  const SortDecl* find_sort(const std::string& name) const;
  const Schema* find_fluent(const std::string& name) const;
  const Schema* find_action(const std::string& name) const;
};

enum class HeadKind { permitted, obligation };

// permitted(a), -permitted(a), obl(a), obl(-a), -obl(a), -obl(-a).
struct RuleHead {
  bool negated = false;         // leading '-'
  HeadKind kind = HeadKind::permitted;
  Atom action;
  bool action_negated = false;  // inner '-', obligations only
  bool operator==(const RuleHead&) const = default;
};

struct PolicyRule {
  std::string id;
  bool defeasible = false;
  RuleHead head;
  Body body;
  SourcePos pos;
  bool operator==(const PolicyRule&) const = default;
};

struct PolicySpec {
  std::vector<PolicyRule> strict_rules;
  std::vector<PolicyRule> defeasible_rules;
  // (stronger id, weaker id), both defeasible, applied exactly as declared.
  std::vector<std::pair<std::string, std::string>> preferences;
  std::map<std::string, int> rule_penalties;  // values in [1,3]
  int default_penalty = 2;
  int weak_penalty = 0;
  std::optional<int> max_penalty;
  bool operator==(const PolicySpec&) const = default;
};

enum class Mode { normal, emergency };

struct ProblemSpec {
  std::vector<Literal> init;  // ground, consistency checked at parse
  std::vector<Literal> goal;  // ground
  int horizon = 0;
  Mode mode = Mode::normal;
  bool operator==(const ProblemSpec&) const = default;
};

// Canonical text forms. Parsing a printed spec yields an equal spec.
std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const Literal& l);
std::string to_string(const RuleHead& h);
std::string body_to_string(const Body& b);
std::string print_domain(const DomainSpec& d);
std::string print_policy(const PolicySpec& p);
std::string print_problem(const ProblemSpec& p);

}  // namespace penplan

#endif  // PENPLAN_AST_HPP
