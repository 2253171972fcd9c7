#pragma once

#include <string>
#include <string_view>

#include "dex/dependency.hpp"
#include "dex/query.hpp"

namespace dex {

/// Settings (`.dex`):
///
///   source Ord/2.  target AllOrd/1, Paid/1.
///   st: Ord(x,"yes") -> Paid(x).
///   t: EmpC(x,y), EmpC(x,z) -> y = z.
///
/// Dependencies are numbered st1, st2, ... and t1, t2, ... in order.
Setting parse_setting(std::string_view text, const std::string& origin = "<input>");

/// Facts (`.facts`), constants only. Arities are checked against `schema`
/// when it is non-empty.
Instance parse_instance(std::string_view text, const Schema& schema = {},
                        const std::string& origin = "<input>");

/// `Q(x) := AllOrd(x) & !Paid(x).`  Relations are checked against
/// `schema` when it is non-empty.
Query parse_query(std::string_view text, const Schema& schema = {},
                  const std::string& origin = "<input>");

std::string to_string(const FormulaPtr& f);
std::string to_string(const Query& q);

std::string read_file(const std::string& path);

}  // namespace dex
