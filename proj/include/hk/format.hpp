#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hk/table.hpp"

namespace hk {

/// Endomorphism candidate as written in a file; verified by callers.
struct ParsedEndo {
    std::string name;
    std::vector<Elem> map;
    int line = 0;
};

struct StructureFile {
    std::string path;
    TablePtr table;
    std::vector<ParsedEndo> endos;
};

/// Parses the line-oriented structure format:
///
///   hyperring NAME
///   m INT
///   n INT
///   elements L0 L1 ...
///   zero L
///   one L                  (optional)
///   commutative add        (optional)
///   commutative mul        (optional)
///   add a1 .. am -> b1 b2 ...
///   mul a1 .. an -> b
///   mul default -> b       (catch-all for unlisted multiplication rows)
///   endo NAME: a->b c->d ...
///
/// With a commutative flag set, rows are keyed by their sorted tuple and
/// only one row per multiset is allowed. Every required tuple must be
/// covered exactly once; all errors carry line and column.
StructureFile parse_structure(std::string_view text, std::string path = "");

/// Canonical text form; parse(serialize(x)) reproduces x exactly.
std::string serialize(const HyperringTable& table,
                      const std::vector<ParsedEndo>& endos = {});

/// Comma-separated element labels, split outside parentheses; an optional
/// surrounding {...} is stripped, so printed witness sets re-parse.
ElemSet parse_element_list(const HyperringTable& table, std::string_view text);

/// Total element map in "a->b c->d ..." form.
std::vector<Elem> parse_map_literal(const HyperringTable& table, std::string_view text);

}  // namespace hk
