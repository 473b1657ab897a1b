#include "qstar/eterm.hpp"

#include <algorithm>

namespace qstar {

bool slot_less(const ESlot& lhs, const ESlot& rhs) {
  if (lhs.mono != rhs.mono) return degree_less(lhs.mono, rhs.mono);
  return lhs.mult < rhs.mult;
}

void ETerm::canonicalize() {
  std::erase_if(slots, [](const ESlot& s) { return s.mult == 0; });
  std::sort(slots.begin(), slots.end(), slot_less);
}

bool eterm_less(const ETerm& lhs, const ETerm& rhs) {
  if (lhs.hbarPower != rhs.hbarPower) return lhs.hbarPower < rhs.hbarPower;
  if (lhs.slots != rhs.slots) {
    return std::lexicographical_compare(lhs.slots.begin(), lhs.slots.end(), rhs.slots.begin(),
                                        rhs.slots.end(), slot_less);
  }
  return lhs.scalar < rhs.scalar;
}

std::string to_string(const ETerm& term) {
  std::string out;
  if (term.slots.empty()) {
    // a bare hbar power drops the unit scalar: "h^2", not "1 h^2"
    if (term.scalar != 1 || term.hbarPower == 0) out = term.scalar.get_str();
  } else {
    if (term.scalar != 1) out = term.scalar.get_str() + " ";
    out += "e_(";
    for (std::size_t t = 0; t < term.slots.size(); ++t) {
      if (t > 0) out += ',';
      out += std::to_string(term.slots[t].mult);
    }
    out += ")(";
    for (std::size_t t = 0; t < term.slots.size(); ++t) {
      if (t > 0) out += ',';
      out += to_string(term.slots[t].mono);
    }
    out += ')';
  }
  if (term.hbarPower == 0) return out;
  if (!out.empty()) out += ' ';
  out += 'h';
  if (term.hbarPower > 1) out += "^" + std::to_string(term.hbarPower);
  return out;
}

}  // namespace qstar
