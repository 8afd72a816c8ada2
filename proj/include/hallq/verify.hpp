#pragma once

// The acceptance suite: every checked claim is pinned here, in code, with
// exact expected values and the parameter sets it runs at. Each criterion
// reports one pass/fail line. The conflation-counting oracle lives here,
// independent of the Hall-number implementation path: it enumerates pairs
// (injective map in, surjective map out) literally and compares module
// element sets.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "hallq/freerep.hpp"
#include "hallq/quiver.hpp"

namespace hallq::verify {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

// |W^L_{XY}|: the number of exact pairs  Y >--f--> L --g->> X  (f an
// injective representation map, g surjective, im f = ker g as element
// sets). Equals F^L_{XY} * |Aut X| * |Aut Y| since the automorphism action
// on conflations is free.
std::uint64_t count_conflations_bruteforce(const Quiver& quiver, const Ring& R,
                                           const FreeRep& L, const FreeRep& X,
                                           const FreeRep& Y);

// Runs all acceptance criteria. `seed` drives the randomized geometry
// instances (criterion 8) and is echoed in its detail line.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

// Prints one line per criterion plus a summary; returns true if all passed.
bool print_acceptance(std::ostream& out, std::uint64_t seed);

}  // namespace hallq::verify
