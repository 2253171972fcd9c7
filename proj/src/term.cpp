#include "dex/term.hpp"

#include <atomic>
#include <mutex>
#include <unordered_set>

namespace dex {

namespace {

const std::string* intern(std::string_view text) {
    static std::mutex mutex;
    static std::unordered_set<std::string> table;
    std::lock_guard lock(mutex);
    return &*table.emplace(text).first;
}

std::atomic<std::uint64_t> next_null{1};

}  // namespace

Symbol::Symbol() : text_(intern("")) {}

Symbol::Symbol(std::string_view text) : text_(intern(text)) {}

std::strong_ordering operator<=>(Symbol a, Symbol b) noexcept {
    if (a.text_ == b.text_) return std::strong_ordering::equal;
    return a.str().compare(b.str()) <=> 0;
}

Term Term::constant(std::string_view name) {
    Term t;
    t.kind_ = Kind::kConst;
    t.name_ = Symbol(name);
    return t;
}

Term Term::variable(std::string_view name) {
    Term t;
    t.kind_ = Kind::kVar;
    t.name_ = Symbol(name);
    return t;
}

Term Term::null(std::uint64_t id) noexcept {
    Term t;
    t.kind_ = Kind::kNull;
    t.null_ = id;
    // Keep the monotone counter ahead of explicitly created nulls.
    std::uint64_t cur = next_null.load();
    while (cur <= id && !next_null.compare_exchange_weak(cur, id + 1)) {
    }
    return t;
}

Term Term::fresh_null() noexcept {
    Term t;
    t.kind_ = Kind::kNull;
    t.null_ = next_null.fetch_add(1);
    return t;
}

std::size_t Term::hash() const noexcept {
    std::size_t h = std::hash<Symbol>{}(name_);
    h ^= std::hash<std::uint64_t>{}(null_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h * 31 + static_cast<std::size_t>(kind_);
}

std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.kind_ == Term::Kind::kNull) return a.null_ <=> b.null_;
    return a.name_ <=> b.name_;
}

bool is_natural(std::string_view s) noexcept {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

std::string to_string(const Term& t) {
    switch (t.kind()) {
    case Term::Kind::kVar:
        return t.name();
    case Term::Kind::kNull:
        return "_" + std::to_string(t.null_id());
    case Term::Kind::kConst:
        break;
    }
    if (is_natural(t.name())) return t.name();
    std::string out = "\"";
    for (char c : t.name()) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string to_string(const Tuple& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ", ";
        out += to_string(t[i]);
    }
    out += ")";
    return out;
}

}  // namespace dex
