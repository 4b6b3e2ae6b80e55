#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubic3dec/extend.hpp"

namespace cubic3dec {

struct CnfError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Literals are signed 1-based variable indices.
struct Cnf {
    int vars = 0;
    std::vector<std::vector<int>> clauses;
};

Cnf parse_dimacs(std::istream& in);
std::string write_dimacs(const Cnf& f);
// Throws CnfError unless every clause has three literals over 1..vars and
// every variable occurs.
void check_3cnf(const Cnf& f);
// Adds x or x or ~x / x or ~x or ~x clauses until each variable occurs
// positively and negatively equally often.
Cnf pad_formula(const Cnf& f);
bool brute_force_sat(const Cnf& f);
bool satisfies(const Cnf& f, const std::vector<bool>& value);  // value[i] for variable i+1

struct SatGadget {
    Cnf formula;  // padded
    TemplateGraph y;
    std::vector<Label> assignment;  // per outer label
    // per variable: inner vertices of the upper and lower path between s and t
    std::vector<std::vector<int>> upper, lower;
    std::vector<int> s, t;
};

SatGadget sat_to_template(const Cnf& f);

struct GadgetResult {
    SearchStatus status = SearchStatus::Complete;
    bool realizable = false;
    std::vector<bool> value;  // decoded from the forest when realizable
    std::uint64_t nodes = 0;
};

GadgetResult realize(const SatGadget& g, std::uint64_t budget = 0);
// Variable i is true when the C path avoids its upper path.
std::vector<bool> decode(const SatGadget& g, const ConsistentForest& f);

// A template X on the gadget's outer set with a 3-consistent forest realising
// the gadget's assignment, whose only tree outers share one component; it is
// naively extendable to the gadget iff the gadget is realizable.
struct HardnessInstance {
    TemplateGraph x;
    ConsistentForest forest;
};
HardnessInstance naive_hardness_instance(const SatGadget& g);

std::string format_gadget_report(const SatGadget& g, const GadgetResult& r);

}  // namespace cubic3dec
