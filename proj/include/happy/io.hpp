#pragma once

#include <string>
#include <variant>

#include "happy/cwexpr.hpp"
#include "happy/graph.hpp"
#include "happy/multiway.hpp"
#include "happy/oracles.hpp"

namespace happy {

// Line-oriented DIMACS-style formats, whitespace-insensitive within lines.
// '#' starts a comment line. Serialization is canonical: UTF-8, LF endings,
// sorted edge/assignment lines, so parse(serialize(x)) == x for every kind.

ColoredGraph parse_happy(const std::string& text);
std::string serialize_happy(const ColoredGraph& g);

GmcInstance parse_gmc(const std::string& text);
std::string serialize_gmc(const GmcInstance& inst);

RmisInstance parse_rmis(const std::string& text);
std::string serialize_rmis(const RmisInstance& inst);

CrbdsInstance parse_crbds(const std::string& text);
std::string serialize_crbds(const CrbdsInstance& inst);

// S-expressions: (v id label) introduce, (u a b) disjoint union,
// (r i j e) rename i->j, (n i j e) join-edges between labels i != j.
WExpression parse_wexpr(const std::string& text);
std::string serialize_wexpr(const WExpression& expr);

struct InstanceFile {
  enum class Kind { kHappy, kGmc, kWexpr, kRmis, kCrbds };
  Kind kind;
  std::variant<ColoredGraph, GmcInstance, WExpression, RmisInstance,
               CrbdsInstance>
      payload;
};

// Dispatches on the 'p <kind>' header ('(' opens a wexpr).
InstanceFile parse_instance(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace happy
