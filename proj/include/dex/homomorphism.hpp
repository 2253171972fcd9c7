#pragma once

#include <functional>
#include <map>
#include <vector>

#include "dex/instance.hpp"

namespace dex {

/// Identity on constants. Keys are the variables (and constants) of the
/// source atoms.
using Homomorphism = std::map<Term, Term>;

/// Calls `visit` for every extension of `initial` mapping `body` into
/// `target`. Stops early when `visit` returns false.
void for_each_homomorphism(const std::vector<Atom>& body, const Instance& target,
                           const Homomorphism& initial,
                           const std::function<bool(const Homomorphism&)>& visit);

std::vector<Homomorphism> find_homomorphisms(const std::vector<Atom>& body, const Instance& target,
                                             const Homomorphism& initial = {});

bool has_homomorphism(const std::vector<Atom>& body, const Instance& target,
                      const Homomorphism& initial = {});

/// Image of a term; unmapped variables are returned unchanged.
Term apply_to(const Homomorphism& h, const Term& t);
Atom apply_to(const Homomorphism& h, const Atom& a);
Tuple apply_to(const Homomorphism& h, const std::vector<Term>& terms);

std::string to_string(const Homomorphism& h);

}  // namespace dex
