#pragma once

#include <string>
#include <vector>

#include "trotter/errors.hpp"
#include "trotter/hamiltonians.hpp"
#include "trotter/pauli.hpp"

namespace testing_helpers {

// one group per operator, each group a single elementary term
inline trotter::GroupedHamiltonian grouped(const std::vector<trotter::PauliSum>& parts) {
  trotter::GroupedHamiltonian h;
  h.n = parts.front().n();
  for (std::size_t i = 0; i < parts.size(); ++i)
    h.groups.push_back(trotter::TermGroup{"H" + std::to_string(i + 1), {parts[i]}});
  return h;
}

inline trotter::PauliSum P(const std::string& s) { return trotter::PauliSum::parse(s); }

}  // namespace testing_helpers
