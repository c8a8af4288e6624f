#include <chlat/latcat/record.hpp>

#include <numeric>
#include <stdexcept>

namespace chlat::latcat {

namespace {

// exponent = num / den when den > 0; nullopt when den <= 0 (relator omitted).
// A positive denominator that does not divide num is an error unless an
// override is supplied.
std::optional<long> power_exponent(long num, long den, std::optional<long> override_value,
                                   const char* what) {
  if (den <= 0) {
    if (override_value) return override_value;  // explicit catalog override wins
    return std::nullopt;
  }
  if (override_value) return override_value;
  if (num % den != 0)
    throw std::invalid_argument(std::string("mostow_presentation: exponent of ") + what +
                                " is not an integer; supply an override");
  return num / den;
}

}  // namespace

Presentation mostow_presentation(int p, int two_k, std::optional<long> exp_rr_override,
                                 std::optional<long> exp_jrr_override) {
  if (p < 3) throw std::invalid_argument("mostow_presentation: p must be >= 3");
  if (two_k <= 0 || two_k % 2 != 0)
    throw std::invalid_argument("mostow_presentation: two_k must be even and positive");

  Presentation pres;
  pres.gen_names = {"r1", "r2", "r3", "j"};
  constexpr int R1 = 1, R2 = 2, R3 = 3, J = 4;

  pres.relators.push_back({-R2, J, R1, -J});   // r2 = j r1 j^{-1}
  pres.relators.push_back({-R3, -J, R1, J});   // r3 = j^{-1} r1 j
  pres.relators.push_back(word_power({R1}, p));
  pres.relators.push_back({J, J, J});
  pres.relators.push_back(word_power({R1, J}, two_k));
  if (auto e1 = power_exponent(6L * p, long(p) - 6, exp_rr_override, "(r1 r2)"))
    pres.relators.push_back(word_power({R1, R2}, int(*e1)));
  if (auto e2 = power_exponent(2L * two_k * p, (long(two_k) - 4) * p - 2L * two_k,
                               exp_jrr_override, "(r2 r1 j)"))
    pres.relators.push_back(word_power({R2, R1, J}, int(*e2)));
  pres.relators.push_back(braid_relator(3, R1, R2));
  pres.validate();
  return pres;
}

long lopt(const LatticeRecord& rec) {
  long from_isotropy = 0;
  if (!rec.isotropy.empty()) {
    from_isotropy = 1;
    for (const auto& iso : rec.isotropy) {
      if (iso.claimed_order <= 0)
        throw std::invalid_argument("lopt: nonpositive isotropy order in " + rec.slug);
      from_isotropy = std::lcm(from_isotropy, iso.claimed_order);
    }
  }
  long L = rec.claimed_lcm;
  if (L > 0 && from_isotropy > 0 && L != from_isotropy)
    throw std::invalid_argument("lopt: stated LCM disagrees with isotropy orders in " + rec.slug);
  if (L <= 0) L = from_isotropy;
  if (L <= 0) throw std::invalid_argument("lopt: no isotropy data for " + rec.slug);

  const Rat scaled = rec.chi_orb * L;
  if (!is_integer(scaled))
    throw std::invalid_argument("lopt: LCM * chi_orb is not an integer for " + rec.slug);
  const Int n = scaled.get_num();
  const bool divisible_by_3 = mpz_divisible_ui_p(n.get_mpz_t(), 3) != 0;
  return (rec.cocompact && !divisible_by_3) ? 3 * L : L;
}

Rat euler_of_index(const LatticeRecord& rec, long index) {
  if (index < 1) throw std::invalid_argument("euler_of_index: index must be >= 1");
  return rec.chi_orb * index;
}

std::vector<Word> gamma_mu_subgroup(const LatticeRecord& rec) {
  if (rec.family != "mostow" || rec.presentation.ngens() != 4)
    throw std::invalid_argument("gamma_mu_subgroup: " + rec.slug + " is not a Mostow record");
  constexpr int R1 = 1, R2 = 2, R3 = 3, J = 4;
  return {
      {-R2, -R1, J},  // A1 = (j^{-1} r1 r2)^{-1}
      {-R3, -R2, J},  // A2
      {-R1, -R3, J},  // A3 (indices mod 3)
      {R1, R1},       // B1 = r1^2
      {R2, R2},       // B2
      {R3, R3},       // B3
  };
}

}  // namespace chlat::latcat
