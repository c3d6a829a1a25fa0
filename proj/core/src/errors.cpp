#include "binact/errors.hpp"

#include <string>

namespace binact {

namespace {

std::string axiom_message(AxiomViolation::Law law, const AxiomWitness& w) {
  if (law == AxiomViolation::Law::identity) {
    return "identity law e(x,y)=y fails at x=" + std::to_string(w.x) +
           " y=" + std::to_string(w.y);
  }
  return "composition law gh(x,y)=g(x,h(x,y)) fails at g=" + std::to_string(w.g) +
         " h=" + std::to_string(w.h) + " x=" + std::to_string(w.x) +
         " y=" + std::to_string(w.y);
}

std::string coset_message(const CosetWitness& w) {
  return "subgroup is not normal: g=" + std::to_string(w.g) + " on representatives (" +
         std::to_string(w.g1) + "," + std::to_string(w.g2) + ") gives coset " +
         std::to_string(w.coset) + " but (" + std::to_string(w.g1_alt) + "," +
         std::to_string(w.g2_alt) + ") gives coset " + std::to_string(w.coset_alt);
}

}  // namespace

NotAGroup::NotAGroup(Reason reason, std::array<Index, 3> triple, std::string what)
    : Error(std::move(what)), reason_(reason), triple_(triple) {}

const char* to_string(NotAGroup::Reason reason) {
  switch (reason) {
    case NotAGroup::Reason::range: return "range";
    case NotAGroup::Reason::identity: return "identity";
    case NotAGroup::Reason::associativity: return "associativity";
    case NotAGroup::Reason::inverses: return "inverses";
  }
  return "unknown";
}

AxiomViolation::AxiomViolation(Law law, AxiomWitness witness)
    : Error(axiom_message(law, witness)), law_(law), witness_(witness) {}

const char* to_string(AxiomViolation::Law law) {
  return law == AxiomViolation::Law::identity ? "identity" : "composition";
}

NotNormal::NotNormal(CosetWitness witness) : Error(coset_message(witness)), witness_(witness) {}

}  // namespace binact
