#include "support/common.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace support {

std::string data_path(const std::string& rel) { return std::string(DEX_DATA_DIR) + "/" + rel; }

Example load_example(const std::string& name, const std::string& facts, const std::string& query) {
    auto dir = data_path(name) + "/";
    Example ex{dex::parse_setting(dex::read_file(dir + "setting.dex"), dir + "setting.dex"), {}, {}};
    ex.source = dex::parse_instance(dex::read_file(dir + facts), ex.setting.source, dir + facts);
    ex.query = dex::parse_query(dex::read_file(dir + query), ex.setting.target, dir + query);
    return ex;
}

dex::Answers asp_answers(const dex::Setting& s, const dex::Instance& source, const dex::Query& q,
                         const dex::ConstantBudget& budget) {
    auto [program, ed] = dex::translate_setting(s, source, budget);
    auto models = dex::stable_models(program, ed);
    auto a = dex::cautious_answers(models, q, s.target);
    a.tuples = dex::drop_fresh_tuples(a.tuples, budget);
    return a;
}

dex::Answers exact_answers(const dex::Setting& s, const dex::Instance& source, const dex::Query& q,
                           const dex::ConstantBudget& budget, std::size_t node_cap) {
    auto a = dex::supported_certain_answers(s, source, q, budget, {.node_cap = node_cap}).answers;
    a.tuples = dex::drop_fresh_tuples(a.tuples, budget);
    return a;
}

std::multiset<std::string> normalized_rules(const std::string& text) {
    std::multiset<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find(":-") == std::string::npos) continue;
        std::map<std::string, std::string> names;
        std::string norm;
        for (std::size_t i = 0; i < line.size();) {
            unsigned char c = line[i];
            if (std::isalpha(c) || c == '_') {
                std::size_t j = i;
                while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
                std::string word = line.substr(i, j - i);
                bool is_var = std::isupper(c) && (j >= line.size() || line[j] != '(');
                if (is_var) {
                    auto [it, fresh] = names.emplace(word, "V" + std::to_string(names.size() + 1));
                    norm += it->second;
                } else {
                    norm += word;
                }
                i = j;
            } else {
                if (!std::isspace(c)) norm.push_back(static_cast<char>(c));
                ++i;
            }
        }
        out.insert(norm);
    }
    return out;
}

dex::Tuple tuple(std::initializer_list<const char*> names) {
    dex::Tuple t;
    for (const char* n : names) t.push_back(dex::Term::constant(n));
    return t;
}

}  // namespace support
