#pragma once

#include <set>
#include <string>

#include "dex/asp.hpp"
#include "dex/dsl.hpp"
#include "dex/supported.hpp"

namespace support {

struct Example {
    dex::Setting setting;
    dex::Instance source;
    dex::Query query;
};

std::string data_path(const std::string& rel);

/// Loads data/<name>/setting.dex, the given facts file and query file.
Example load_example(const std::string& name, const std::string& facts = "source.facts",
                     const std::string& query = "query.query");

/// Cautious answers over the stable models of the translation, fresh
/// tuples dropped.
dex::Answers asp_answers(const dex::Setting& s, const dex::Instance& source, const dex::Query& q,
                         const dex::ConstantBudget& budget);

/// Supported certain answers with fresh tuples dropped.
dex::Answers exact_answers(const dex::Setting& s, const dex::Instance& source, const dex::Query& q,
                           const dex::ConstantBudget& budget, std::size_t node_cap = 0);

/// Rule lines of a program with variables renamed V1, V2, ... in order of
/// first occurrence per line.
std::multiset<std::string> normalized_rules(const std::string& program_text);

dex::Tuple tuple(std::initializer_list<const char*> names);

}  // namespace support
