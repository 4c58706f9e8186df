#pragma once

#include <map>
#include <string>

#include "wgideal/coxeter.hpp"
#include "wgideal/laurent.hpp"

namespace wgideal {

/// Element of the Hecke algebra in the T-basis. Keys are element ids, so
/// iteration runs in (length, ShortLex) order; zero coefficients are never
/// stored.
class HeckeElt {
 public:
  HeckeElt() = default;
  static HeckeElt basis(ElemId w, LaurentPoly c = 1);

  const std::map<ElemId, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coeff(ElemId w) const;
  bool is_zero() const { return terms_.empty(); }
  void add(ElemId w, const LaurentPoly& c);

  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(const LaurentPoly& c, const HeckeElt& h);
  friend bool operator==(const HeckeElt&, const HeckeElt&) = default;

  std::string to_string(const CoxeterSystem& sys) const;

 private:
  std::map<ElemId, LaurentPoly> terms_;
};

/// T_s h
HeckeElt t_mul_left(const CoxeterSystem& sys, int s, const HeckeElt& h);
/// h T_s
HeckeElt t_mul_right(const CoxeterSystem& sys, const HeckeElt& h, int s);
/// T_w along the stored reduced word.
HeckeElt t_word(const CoxeterSystem& sys, ElemId w);
/// Full product g h.
HeckeElt hecke_mul(const CoxeterSystem& sys, const HeckeElt& g, const HeckeElt& h);
/// Ring involution: q -> q^-1 and T_s -> T_s - (q - q^-1).
HeckeElt bar_hecke(const CoxeterSystem& sys, const HeckeElt& h);
/// Antiautomorphism T_w -> T_{w^-1}.
HeckeElt flat(const CoxeterSystem& sys, const HeckeElt& h);

}  // namespace wgideal
