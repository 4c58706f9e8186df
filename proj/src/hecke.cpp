#include "wgideal/hecke.hpp"

namespace wgideal {

namespace {
const LaurentPoly& q_minus_qinv() {
  static const LaurentPoly v(-1, {-1, 0, 1});
  return v;
}
}  // namespace

HeckeElt HeckeElt::basis(ElemId w, LaurentPoly c) {
  HeckeElt h;
  h.add(w, c);
  return h;
}

LaurentPoly HeckeElt::coeff(ElemId w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElt::add(ElemId w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

HeckeElt operator*(const LaurentPoly& c, const HeckeElt& h) {
  HeckeElt out;
  for (const auto& [w, x] : h.terms_) out.add(w, c * x);
  return out;
}

std::string HeckeElt::to_string(const CoxeterSystem& sys) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")T_" + sys.format(w);
  }
  return out;
}

HeckeElt t_mul_left(const CoxeterSystem& sys, int s, const HeckeElt& h) {
  HeckeElt out;
  for (const auto& [w, c] : h.terms()) {
    const ElemId sw = sys.left(w, s);
    out.add(sw, c);
    if (sys.length(sw) < sys.length(w)) out.add(w, q_minus_qinv() * c);
  }
  return out;
}

HeckeElt t_mul_right(const CoxeterSystem& sys, const HeckeElt& h, int s) {
  HeckeElt out;
  for (const auto& [w, c] : h.terms()) {
    const ElemId ws = sys.right(w, s);
    out.add(ws, c);
    if (sys.length(ws) < sys.length(w)) out.add(w, q_minus_qinv() * c);
  }
  return out;
}

HeckeElt t_word(const CoxeterSystem& sys, ElemId w) {
  HeckeElt out = HeckeElt::basis(0);
  for (int s : sys.word(w)) out = t_mul_right(sys, out, s);
  return out;
}

HeckeElt hecke_mul(const CoxeterSystem& sys, const HeckeElt& g, const HeckeElt& h) {
  HeckeElt out;
  for (const auto& [w, c] : h.terms()) {
    HeckeElt part = g;
    for (int s : sys.word(w)) part = t_mul_right(sys, part, s);
    out += c * part;
  }
  return out;
}

HeckeElt bar_hecke(const CoxeterSystem& sys, const HeckeElt& h) {
  HeckeElt out;
  for (const auto& [w, c] : h.terms()) {
    // bar(T_w) = bar(T_s1) ... bar(T_sk), each bar(T_s) = T_s - (q - q^-1).
    HeckeElt img = HeckeElt::basis(0);
    for (int s : sys.word(w)) img = t_mul_right(sys, img, s) - q_minus_qinv() * img;
    out += c.bar() * img;
  }
  return out;
}

HeckeElt flat(const CoxeterSystem& sys, const HeckeElt& h) {
  HeckeElt out;
  for (const auto& [w, c] : h.terms()) out.add(sys.inverse(w), c);
  return out;
}

}  // namespace wgideal
