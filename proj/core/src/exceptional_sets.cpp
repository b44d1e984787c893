#include "lefgamma/exceptional_sets.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefgamma {

namespace {

Integer central_binomial(std::uint64_t k) { return binomial(2 * k, k); }

const Integer& witness(const MembershipCertificate& cert, const char* key) {
  auto it = cert.witnesses.find(key);
  if (it == cert.witnesses.end()) {
    throw std::invalid_argument(std::string("certificate lacks witness ") + key);
  }
  return it->second;
}

std::uint64_t to_u64(const Integer& x) { return x.convert_to<std::uint64_t>(); }

MembershipCertificate make_cert(SetTag set, std::string family,
                                std::map<std::string, Integer> witnesses, Integer value) {
  return MembershipCertificate{set, std::move(family), std::move(witnesses), std::move(value)};
}

// sigma_prime family values. Parameters are small (the exponents are bounded
// by log2 of the element), so uint64 is enough for k and s themselves.
Integer sp_value(int family, std::uint64_t s, std::uint64_t k) {
  switch (family) {
    case 1:
      return Integer(1) << ((4 * k + 3) * s - 1);
    case 2:
      return Integer(1) << (4 * k * s - 1);
    case 3:
      return Integer(1) << (2 * s * (4 * k + 1) - 1);
    case 4:
      return (Integer(1) << (2 * s - 1)) * ipow(Integer(k), 2 * s);
    case 5:
      return ipow(binomial(4 * k + 4, 2 * k + 2), s) / 2;
    case 6:
      return ipow(binomial(4 * k + 2, 2 * k + 1), 2 * s) / 2;
    default:
      throw std::invalid_argument("unknown sigma_prime family");
  }
}

MembershipCertificate sp_cert(int family, std::uint64_t s, std::uint64_t k) {
  return make_cert(SetTag::sigma_prime, "F" + std::to_string(family),
                   {{"k", Integer(k)}, {"s", Integer(s)}}, sp_value(family, s, k));
}

// Smallest value of a sigma_prime family for a given s (at the minimal k).
Integer sp_min_value(int family, std::uint64_t s) {
  switch (family) {
    case 1:
      return sp_value(1, s, 0);
    case 2:
      return sp_value(2, s, 1);
    case 3:
      return sp_value(3, s, 1);
    case 4:
      return sp_value(4, s, 2);
    case 5:
      return sp_value(5, s, 0);
    case 6:
      return sp_value(6, s, 0);
    default:
      throw std::invalid_argument("unknown sigma_prime family");
  }
}

// For the power-of-two families, h = 2^j iff the exponent equation has a
// solution. Returns the unique k for the given s, if any.
std::optional<std::uint64_t> sp_pow2_k(int family, std::uint64_t s, std::uint64_t j) {
  const std::uint64_t e = j + 1;  // the family exponent (4k+3)s, 4ks or 2s(4k+1)
  switch (family) {
    case 1: {
      if (e % s != 0) return std::nullopt;
      const std::uint64_t q = e / s;
      if (q % 4 != 3) return std::nullopt;
      return (q - 3) / 4;
    }
    case 2: {
      if (e % (4 * s) != 0) return std::nullopt;
      const std::uint64_t k = e / (4 * s);
      if (k < 1) return std::nullopt;
      return k;
    }
    case 3: {
      if (e % (2 * s) != 0) return std::nullopt;
      const std::uint64_t q = e / (2 * s);
      if (q % 4 != 1 || q < 5) return std::nullopt;
      return (q - 1) / 4;
    }
    default:
      throw std::logic_error("not a power-of-two family");
  }
}

}  // namespace

std::string set_tag_name(SetTag tag) {
  switch (tag) {
    case SetTag::sigma:
      return "sigma";
    case SetTag::sigma_prime:
      return "sigma-prime";
    case SetTag::odd_exclusion:
      return "odd-exclusion";
  }
  throw std::logic_error("unreachable");
}

std::string family_formula(SetTag tag, const std::string& family) {
  if (tag == SetTag::sigma) {
    if (family == "F1") return "2^(k-1)*a^k";
    if (family == "F2") return "binom(2k,k)/2";
  } else if (tag == SetTag::sigma_prime) {
    if (family == "F1") return "2^((4k+3)s-1)";
    if (family == "F2") return "2^(4ks-1)";
    if (family == "F3") return "2^(2s(4k+1)-1)";
    if (family == "F4") return "2^(2s-1)*k^(2s)";
    if (family == "F5") return "binom(4k+4,2k+2)^s/2";
    if (family == "F6") return "binom(4k+2,2k+1)^(2s)/2";
  } else if (tag == SetTag::odd_exclusion) {
    if (family == "F1") return "binom(2^(m+2),2^(m+1))/2";
  }
  throw std::invalid_argument("unknown family " + family);
}

Integer evaluate_certificate(const MembershipCertificate& cert) {
  switch (cert.set) {
    case SetTag::sigma: {
      const std::uint64_t k = to_u64(witness(cert, "k"));
      if (cert.family == "F1") {
        return (Integer(1) << (k - 1)) * ipow(witness(cert, "a"), k);
      }
      if (cert.family == "F2") {
        return central_binomial(k) / 2;
      }
      break;
    }
    case SetTag::sigma_prime: {
      if (cert.family.size() == 2 && cert.family[0] == 'F') {
        return sp_value(cert.family[1] - '0', to_u64(witness(cert, "s")),
                        to_u64(witness(cert, "k")));
      }
      break;
    }
    case SetTag::odd_exclusion: {
      if (cert.family == "F1") {
        const std::uint64_t m = to_u64(witness(cert, "m"));
        return binomial(std::uint64_t{1} << (m + 2), std::uint64_t{1} << (m + 1)) / 2;
      }
      break;
    }
  }
  throw std::invalid_argument("unknown family " + cert.family);
}

std::optional<MembershipCertificate> in_sigma(const Integer& g) {
  if (g < 1) {
    throw std::invalid_argument("sigma membership needs g >= 1");
  }
  // F1: g = 2^(k-1)*a^k. For each k, a is recovered by an exact k-th root.
  for (std::uint64_t k = 3; (Integer(1) << (k - 1)) <= g; ++k) {
    const Integer pow2 = Integer(1) << (k - 1);
    if (g % pow2 != 0) continue;
    if (auto a = exact_kth_root(g / pow2, k)) {
      return make_cert(SetTag::sigma, "F1", {{"k", Integer(k)}, {"a", *a}}, g);
    }
  }
  // F2: 2g = binom(2k,k), enumerated until the binomial passes 2g.
  for (std::uint64_t k = 3; central_binomial(k) <= 2 * g; ++k) {
    if (central_binomial(k) == 2 * g) {
      return make_cert(SetTag::sigma, "F2", {{"k", Integer(k)}}, g);
    }
  }
  return std::nullopt;
}

std::optional<MembershipCertificate> in_sigma_prime(const Integer& h) {
  if (h < 1) {
    throw std::invalid_argument("sigma_prime membership needs h >= 1");
  }
  const bool pow2 = (h & (h - 1)) == 0;
  const std::uint64_t j = pow2 ? v2(h) : 0;

  for (int family : {1, 2, 3}) {
    if (!pow2) continue;
    for (std::uint64_t s = 1; sp_min_value(family, s) <= h; ++s) {
      if (auto k = sp_pow2_k(family, s, j)) {
        return sp_cert(family, s, *k);
      }
    }
  }
  // F4: h = 2^(2s-1)*k^(2s); k recovered by an exact (2s)-th root.
  for (std::uint64_t s = 1; sp_min_value(4, s) <= h; ++s) {
    const Integer pow2s = Integer(1) << (2 * s - 1);
    if (h % pow2s != 0) continue;
    if (auto k = exact_kth_root(h / pow2s, 2 * s)) {
      if (*k >= 2) {
        return sp_cert(4, s, to_u64(*k));
      }
    }
  }
  // F5 and F6: 2h must be an exact power of a central binomial.
  for (std::uint64_t s = 1; sp_min_value(5, s) <= h; ++s) {
    if (auto r = exact_kth_root(2 * h, s)) {
      for (std::uint64_t k = 0; binomial(4 * k + 4, 2 * k + 2) <= *r; ++k) {
        if (binomial(4 * k + 4, 2 * k + 2) == *r) {
          return sp_cert(5, s, k);
        }
      }
    }
  }
  for (std::uint64_t s = 1; sp_min_value(6, s) <= h; ++s) {
    if (auto r = exact_kth_root(2 * h, 2 * s)) {
      for (std::uint64_t k = 0; binomial(4 * k + 2, 2 * k + 1) <= *r; ++k) {
        if (binomial(4 * k + 2, 2 * k + 1) == *r) {
          return sp_cert(6, s, k);
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<MembershipCertificate> in_odd_exclusion(const Integer& h) {
  if (h < 1) {
    throw std::invalid_argument("odd_exclusion membership needs h >= 1");
  }
  for (std::uint64_t m = 0;; ++m) {
    const Integer value =
        binomial(std::uint64_t{1} << (m + 2), std::uint64_t{1} << (m + 1)) / 2;
    if (value > h) {
      return std::nullopt;
    }
    if (value == h) {
      return make_cert(SetTag::odd_exclusion, "F1", {{"m", Integer(m)}}, h);
    }
  }
}

std::optional<MembershipCertificate> set_membership(SetTag tag, const Integer& x) {
  switch (tag) {
    case SetTag::sigma:
      return in_sigma(x);
    case SetTag::sigma_prime:
      return in_sigma_prime(x);
    case SetTag::odd_exclusion:
      return in_odd_exclusion(x);
  }
  throw std::logic_error("unreachable");
}

namespace {

struct Candidate {
  Integer value;
  int family;
  std::uint64_t s;  // 0 when the family has no s parameter
  std::uint64_t k;
  MembershipCertificate cert;
};

// Deduplication keeps, per value, the certificate the membership test would
// return: family order first, then s, then k.
std::vector<std::pair<Integer, MembershipCertificate>> dedup(std::vector<Candidate> cands) {
  std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
    if (x.value != y.value) return x.value < y.value;
    if (x.family != y.family) return x.family < y.family;
    if (x.s != y.s) return x.s < y.s;
    return x.k < y.k;
  });
  std::vector<std::pair<Integer, MembershipCertificate>> out;
  for (auto& c : cands) {
    if (out.empty() || out.back().first != c.value) {
      out.emplace_back(c.value, std::move(c.cert));
    }
  }
  return out;
}

std::vector<Candidate> sigma_candidates(const Integer& bound) {
  std::vector<Candidate> cands;
  for (std::uint64_t k = 3; (Integer(1) << (k - 1)) <= bound; ++k) {
    for (Integer a = 1;; ++a) {
      Integer value = (Integer(1) << (k - 1)) * ipow(a, k);
      if (value > bound) break;
      cands.push_back({value, 1, 0, k,
                       make_cert(SetTag::sigma, "F1", {{"k", Integer(k)}, {"a", a}}, value)});
    }
  }
  for (std::uint64_t k = 3; central_binomial(k) <= 2 * bound; ++k) {
    Integer value = central_binomial(k) / 2;
    cands.push_back({value, 2, 0, k, make_cert(SetTag::sigma, "F2", {{"k", Integer(k)}}, value)});
  }
  return cands;
}

std::vector<Candidate> sigma_prime_candidates(const Integer& bound) {
  std::vector<Candidate> cands;
  for (int family = 1; family <= 6; ++family) {
    const std::uint64_t k0 = (family == 2 || family == 3) ? 1 : (family == 4 ? 2 : 0);
    for (std::uint64_t s = 1; sp_min_value(family, s) <= bound; ++s) {
      for (std::uint64_t k = k0; sp_value(family, s, k) <= bound; ++k) {
        cands.push_back({sp_value(family, s, k), family, s, k, sp_cert(family, s, k)});
      }
    }
  }
  return cands;
}

std::vector<Candidate> odd_exclusion_candidates(const Integer& bound) {
  std::vector<Candidate> cands;
  for (std::uint64_t m = 0;; ++m) {
    const Integer value =
        binomial(std::uint64_t{1} << (m + 2), std::uint64_t{1} << (m + 1)) / 2;
    if (value > bound) break;
    cands.push_back(
        {value, 1, 0, m, make_cert(SetTag::odd_exclusion, "F1", {{"m", Integer(m)}}, value)});
  }
  return cands;
}

}  // namespace

std::vector<std::pair<Integer, MembershipCertificate>> enumerate_set(SetTag tag,
                                                                     const Integer& bound) {
  if (bound < 1) {
    throw std::invalid_argument("bound must be >= 1");
  }
  switch (tag) {
    case SetTag::sigma:
      return dedup(sigma_candidates(bound));
    case SetTag::sigma_prime:
      return dedup(sigma_prime_candidates(bound));
    case SetTag::odd_exclusion:
      return dedup(odd_exclusion_candidates(bound));
  }
  throw std::logic_error("unreachable");
}

std::vector<std::pair<Integer, MembershipCertificate>> doubled_sigma_prime(const Integer& bound) {
  if (bound < 1) {
    throw std::invalid_argument("bound must be >= 1");
  }
  auto members = enumerate_set(SetTag::sigma_prime, bound / 2);
  for (auto& [value, cert] : members) {
    value *= 2;
  }
  return members;
}

unsigned v2_central_binomial(std::uint64_t k) {
  // v2(binom(4k+4, 2k+2)) equals the number of carries when adding
  // (2k+2) + (2k+2) in base 2, which is the binary digit sum of k+1.
  return binary_digit_sum(k + 1);
}

bool half_central_binomial_is_odd(std::uint64_t k) { return v2_central_binomial(k) == 1; }

}  // namespace lefgamma
