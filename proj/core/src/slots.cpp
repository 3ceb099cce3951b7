#include "wcong/jetsolver.hpp"

#include "wcong/error.hpp"

namespace wcong {

namespace {

bool equals_int(const Rational& m, int value) { return m == value; }

}  // namespace

std::string to_string(const Slot& slot) {
  return std::string(slot.comp == Component::p ? "p" : "q") + std::to_string(slot.j) + std::to_string(slot.k);
}

Rational get_slot(const CongruenceGerm& germ, const Slot& slot) {
  return slot.comp == Component::p ? germ.p(slot.j, slot.k) : germ.q(slot.j, slot.k);
}

void set_slot(CongruenceGerm& germ, const Slot& slot, const Rational& value) {
  (slot.comp == Component::p ? germ.xi1 : germ.xi2).set_derivative(slot.j, slot.k, value);
}

SlotRole slot_role(const Rational& m, const Slot& slot) {
  const int n = slot.order();
  if (n <= 1) return SlotRole::fixed;
  const bool natural = is_natural(m);
  if (slot.comp == Component::p) {
    if (n == 2) return SlotRole::fixed;
    if (natural && !equals_int(m, 1) && slot.j == m.get_num().get_si() + 2) return SlotRole::dependent;
    return SlotRole::free;
  }
  if (slot.j == 0 && slot.k == 2) return SlotRole::fixed;
  if (natural && slot.j == m.get_num().get_si() + 1) return SlotRole::free;
  if (slot.j == 0) return equals_int(m, 1) ? SlotRole::dependent : SlotRole::free;
  return SlotRole::dependent;
}

std::optional<Slot> equation_unknown(const Rational& m, int i, int k) {
  if (i < 0 || k < 0 || i + k < 1) throw Error(Errc::precondition, "equation_unknown: order must be >= 1");
  if (!(m == i)) return Slot{Component::q, i + 1, k};
  if (k == 0) return std::nullopt;
  if (equals_int(m, 1)) return Slot{Component::q, 0, k + 2};
  return Slot{Component::p, i + 2, k - 1};
}

std::vector<Slot> free_slots(const Rational& m, int max_order) {
  std::vector<Slot> out;
  for (Component comp : {Component::p, Component::q}) {
    for (int n = 2; n <= max_order; ++n) {
      for (int k = 0; k <= n; ++k) {
        const Slot slot{comp, n - k, k};
        if (slot_role(m, slot) == SlotRole::free) out.push_back(slot);
      }
    }
  }
  return out;
}

}  // namespace wcong
