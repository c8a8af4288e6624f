#include "chlat/exact/nf_poly.hpp"

#include <stdexcept>

namespace chlat {

int nfp_degree(const NFPoly& p) { return static_cast<int>(p.size()) - 1; }

NFPoly nfp_trim(NFPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

NFPoly nfp_add(const NFPoly& a, const NFPoly& b) {
  NFPoly out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] = out[i] + a[i];
    if (i < b.size()) out[i] = out[i] + b[i];
  }
  return nfp_trim(std::move(out));
}

NFPoly nfp_sub(const NFPoly& a, const NFPoly& b) {
  NFPoly out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] = out[i] + a[i];
    if (i < b.size()) out[i] = out[i] - b[i];
  }
  return nfp_trim(std::move(out));
}

NFPoly nfp_mul(const NFPoly& a, const NFPoly& b) {
  if (a.empty() || b.empty()) return {};
  NFPoly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  return nfp_trim(std::move(out));
}

NFPoly nfp_scale(const NFPoly& a, const NFElem& s) {
  NFPoly out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return nfp_trim(std::move(out));
}

std::pair<NFPoly, NFPoly> nfp_divmod(const NFPoly& a, const NFPoly& b) {
  NFPoly bb = nfp_trim(b);
  if (bb.empty()) throw std::invalid_argument("polynomial division by zero");
  NFPoly rem = nfp_trim(a);
  NFElem lead_inv = bb.back().inverse();
  if (rem.size() < bb.size()) return {{}, std::move(rem)};
  NFPoly quot(rem.size() - bb.size() + 1);
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    size_t top = static_cast<size_t>(k) + bb.size() - 1;
    if (top >= rem.size() || rem[top].is_zero()) continue;
    NFElem c = rem[top] * lead_inv;
    quot[static_cast<size_t>(k)] = c;
    for (size_t i = 0; i < bb.size(); ++i) {
      size_t pos = static_cast<size_t>(k) + i;
      rem[pos] = rem[pos] - c * bb[i];
    }
  }
  return {nfp_trim(std::move(quot)), nfp_trim(std::move(rem))};
}

NFPoly nfp_derivative(const NFPoly& a) {
  if (a.size() <= 1) return {};
  NFPoly out(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * Rat(static_cast<long>(i));
  return nfp_trim(std::move(out));
}

NFPoly nfp_gcd(NFPoly a, NFPoly b) {
  a = nfp_trim(std::move(a));
  b = nfp_trim(std::move(b));
  while (!b.empty()) {
    NFPoly r = nfp_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && !a.back().is_one()) a = nfp_scale(a, a.back().inverse());
  return a;
}

NFElem nfp_eval(const NFPoly& a, const NFElem& x) {
  NFElem acc;
  for (size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
  return acc;
}

std::optional<NFElem> nfp_repeated_root(const NFPoly& p) {
  NFPoly g = nfp_gcd(p, nfp_derivative(p));
  // A defect of degree d > 1 is a single root only if it is (x - r)^d, in
  // which case repeated gcds with the derivative walk it down to linear.
  while (nfp_degree(g) > 1) {
    NFPoly next = nfp_gcd(g, nfp_derivative(g));
    if (nfp_degree(next) >= nfp_degree(g)) return std::nullopt;
    if (nfp_degree(next) < 1) return std::nullopt;  // distinct repeated roots
    g = std::move(next);
  }
  if (nfp_degree(g) != 1) return std::nullopt;
  NFElem root = -(g[0] * g[1].inverse());
  if (!nfp_eval(p, root).is_zero()) return std::nullopt;
  return root;
}

}  // namespace chlat
