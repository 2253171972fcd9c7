#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace dex {

/// Interned string. Two symbols are equal iff they were created from equal
/// strings; ordering is lexicographic on the underlying text.
class Symbol {
public:
    Symbol();
    explicit Symbol(std::string_view text);

    const std::string& str() const noexcept { return *text_; }
    const std::string* ptr() const noexcept { return text_; }

    friend bool operator==(Symbol a, Symbol b) noexcept { return a.text_ == b.text_; }
    friend std::strong_ordering operator<=>(Symbol a, Symbol b) noexcept;

private:
    const std::string* text_;
};

/// A constant, a labeled null or a variable.
class Term {
public:
    enum class Kind : std::uint8_t { kConst = 0, kNull = 1, kVar = 2 };

    Term() noexcept = default;

    static Term constant(std::string_view name);
    static Term variable(std::string_view name);
    static Term null(std::uint64_t id) noexcept;
    /// Returns a null whose id has never been handed out by this process.
    static Term fresh_null() noexcept;

    Kind kind() const noexcept { return kind_; }
    bool is_const() const noexcept { return kind_ == Kind::kConst; }
    bool is_null() const noexcept { return kind_ == Kind::kNull; }
    bool is_var() const noexcept { return kind_ == Kind::kVar; }

    /// Name of a constant or variable.
    const std::string& name() const noexcept { return name_.str(); }
    std::uint64_t null_id() const noexcept { return null_; }

    std::size_t hash() const noexcept;

    friend bool operator==(const Term& a, const Term& b) noexcept {
        return a.kind_ == b.kind_ && a.name_ == b.name_ && a.null_ == b.null_;
    }
    friend std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept;

private:
    Kind kind_ = Kind::kNull;
    Symbol name_;
    std::uint64_t null_ = 0;
};

using Tuple = std::vector<Term>;

/// DSL spelling: variables bare, naturals bare, other constants quoted,
/// nulls as `_N`.
std::string to_string(const Term& t);
std::string to_string(const Tuple& t);

bool is_natural(std::string_view s) noexcept;

}  // namespace dex

template <>
struct std::hash<dex::Symbol> {
    std::size_t operator()(dex::Symbol s) const noexcept {
        return std::hash<const void*>{}(s.ptr());
    }
};

template <>
struct std::hash<dex::Term> {
    std::size_t operator()(const dex::Term& t) const noexcept { return t.hash(); }
};
