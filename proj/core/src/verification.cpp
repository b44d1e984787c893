#include "lefgamma/verification.hpp"

#include "lefgamma/fixtures.hpp"
#include "lefgamma/gamma.hpp"
#include "lefgamma/minuscule.hpp"
#include "lefgamma/stabilizer.hpp"
#include "lefgamma/variety.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <set>
#include <sstream>

namespace lefgamma {

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerificationCheck& c) { return c.passed; });
}

namespace {

VerificationCheck pass(std::string name, std::string details) {
  return {std::move(name), true, std::move(details)};
}

VerificationCheck fail(std::string name, std::string details) {
  return {std::move(name), false, std::move(details)};
}

const AlbertType kAllTypes[] = {AlbertType::I, AlbertType::II, AlbertType::III};

std::string factor_str(const SimpleFactor& f) {
  return "(" + albert_name(f.albert) + ",e=" + std::to_string(f.e) +
         ",h=" + std::to_string(f.h) + ",n=" + std::to_string(f.n) + ")";
}

}  // namespace

Rational psi_grid_max(unsigned h, std::span<const unsigned> residue_degrees, PsiRegime regime) {
  const unsigned rank_cap = regime == PsiRegime::isotropic ? h : 2 * h;
  const bool delta = regime == PsiRegime::full;
  std::vector<unsigned> ranks(residue_degrees.size(), 0);
  bool have_best = false;
  Rational best = 0;
  for (;;) {
    const bool all_zero =
        std::all_of(ranks.begin(), ranks.end(), [](unsigned r) { return r == 0; });
    if (delta || !all_zero) {
      const Rational value = psi(
          PsiInput(h, {residue_degrees.begin(), residue_degrees.end()}, ranks, delta));
      if (!have_best || value > best) {
        best = value;
        have_best = true;
      }
    }
    // odometer over the rank grid
    std::size_t i = 0;
    while (i < ranks.size() && ranks[i] == rank_cap) {
      ranks[i++] = 0;
    }
    if (i == ranks.size()) break;
    ++ranks[i];
  }
  return best;
}

std::vector<std::vector<unsigned>> partitions_of(unsigned e) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current;
  auto rec = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, e, e);
  return out;
}

VerificationCheck check_variety_identities(unsigned max_e, unsigned max_h) {
  const std::string name = "variety-closed-forms";
  std::vector<SimpleFactor> pool;
  for (AlbertType type : kAllTypes) {
    for (unsigned e = 1; e <= max_e; ++e) {
      for (unsigned h = 1; h <= max_h; ++h) {
        SimpleFactor f(type, e, h, 1);
        pool.push_back(f);
        const Integer hh(h);
        const Integer expected = type == AlbertType::III ? Integer(e) * hh * (2 * hh - 1)
                                                         : Integer(e) * hh * (2 * hh + 1);
        if (hodge_dimension(std::vector<SimpleFactor>{f}) != expected) {
          return fail(name, "closed-form mismatch at " + factor_str(f));
        }
        const Integer dim = Integer(albert_d(type)) * e * h;
        if (factor_dimension(f) != dim) {
          return fail(name, "dimension mismatch at " + factor_str(f));
        }
      }
    }
  }
  // additivity over disjoint unions
  for (std::size_t step = 1; step <= 5; ++step) {
    std::vector<SimpleFactor> subset;
    Integer sum = 0;
    for (std::size_t i = 0; i < pool.size(); i += step) {
      subset.push_back(pool[i]);
      sum += hodge_dimension(std::vector<SimpleFactor>{pool[i]});
    }
    if (hodge_dimension(subset) != sum) {
      return fail(name, "additivity mismatch at stride " + std::to_string(step));
    }
  }
  return pass(name, std::to_string(pool.size()) + " factors checked");
}

namespace {

struct GammaGridStats {
  std::uint64_t products = 0;
  std::uint64_t subsets = 0;
};

bool gamma_grid_dfs(const std::vector<SimpleFactor>& pool, std::size_t start,
                    unsigned depth_left, std::vector<SimpleFactor>& chosen,
                    const Rational* parent_value, GammaGridStats& stats, std::string& error) {
  for (std::size_t i = start; i < pool.size(); ++i) {
    chosen.push_back(pool[i]);
    const VarietyProduct product(chosen);
    GammaOptions options;
    options.audit = true;
    const GammaResult result = gamma_product(product, options);
    ++stats.products;

    for (const SubsetFraction& sf : result.audit) {
      ++stats.subsets;
      if (gamma_conjectural_form(product, sf.subset) != sf.value) {
        error = "closed forms disagree on subset of " + factor_str(pool[i]);
        return false;
      }
    }
    if (result.value > Rational(total_dimension(product))) {
      error = "gamma exceeds the total dimension";
      return false;
    }
    for (std::size_t j = 0; j < chosen.size(); ++j) {
      const SimpleFactor& f = chosen[j];
      const Integer hh(f.h);
      const Rational singleton = make_fraction(
          2 * Integer(f.n) * albert_d(f.albert) * f.e * hh,
          1 + Integer(f.e) * (2 * hh * hh + albert_eta(f.albert) * hh));
      if (result.value < singleton) {
        error = "gamma below the singleton bound for " + factor_str(f);
        return false;
      }
    }
    if (parent_value != nullptr && result.value < *parent_value) {
      error = "gamma decreased when appending " + factor_str(pool[i]);
      return false;
    }
    if (depth_left > 1) {
      if (!gamma_grid_dfs(pool, i, depth_left - 1, chosen, &result.value, stats, error)) {
        return false;
      }
    }
    chosen.pop_back();
  }
  return true;
}

}  // namespace

VerificationCheck check_gamma_grid(unsigned max_factors, unsigned max_e, unsigned max_h,
                                   unsigned max_n) {
  const std::string name = "gamma-grid";
  std::vector<SimpleFactor> pool;
  for (AlbertType type : kAllTypes) {
    for (unsigned e = 1; e <= max_e; ++e) {
      for (unsigned h = 1; h <= max_h; ++h) {
        for (unsigned n = 1; n <= max_n; ++n) {
          pool.emplace_back(type, e, h, n);
        }
      }
    }
  }
  GammaGridStats stats;
  std::string error;
  std::vector<SimpleFactor> chosen;
  if (!gamma_grid_dfs(pool, 0, max_factors, chosen, nullptr, stats, error)) {
    return fail(name, error);
  }
  std::ostringstream details;
  details << stats.products << " products, " << stats.subsets << " subsets";
  return pass(name, details.str());
}

VerificationCheck check_gamma_argmax_rule(std::uint64_t seed, unsigned trials) {
  const std::string name = "gamma-argmax-rule";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> type_dist(0, 2), e_dist(1, 2), h_dist(1, 4),
      n_dist(1, 3), count_dist(1, 6);
  for (unsigned t = 0; t < trials; ++t) {
    std::vector<SimpleFactor> factors;
    const unsigned count = count_dist(rng);
    for (unsigned i = 0; i < count; ++i) {
      factors.emplace_back(kAllTypes[type_dist(rng)], e_dist(rng), h_dist(rng), n_dist(rng));
    }
    GammaOptions options;
    options.audit = true;
    const GammaResult result = gamma_product(VarietyProduct(factors), options);
    std::vector<std::size_t> lex_min;
    for (const SubsetFraction& sf : result.audit) {
      if (sf.value == result.value &&
          (lex_min.empty() || std::lexicographical_compare(sf.subset.begin(), sf.subset.end(),
                                                           lex_min.begin(), lex_min.end()))) {
        lex_min = sf.subset;
      }
    }
    if (lex_min != result.argmax) {
      return fail(name, "argmax is not the lexicographically smallest maximizer");
    }
  }
  return pass(name, std::to_string(trials) + " random products");
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::size_t rank_mod_p_local(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  auto normalize = [&](std::int64_t x) { return ((x % p) + p) % p; };
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && normalize(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    // inverse by Fermat
    std::int64_t inv = 1, base = normalize(rows[rank][c]), exp = p - 2;
    while (exp > 0) {
      if (exp & 1) inv = inv * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const std::int64_t factor = normalize(rows[r][c]) * inv % p;
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        rows[r][j] = normalize(rows[r][j] - factor * normalize(rows[rank][j]));
      }
    }
    ++rank;
  }
  return rank;
}

using Subspace = std::vector<std::vector<std::int64_t>>;

std::vector<std::int64_t> basis_vector(unsigned n, unsigned i) {
  std::vector<std::int64_t> v(n, 0);
  v[i] = 1;
  return v;
}

// Deterministic degenerate subspaces of dimension w: spans of leading and
// trailing basis vectors (isotropic for w <= n/2), an alternating span of
// hyperbolic pairs, and a mixed span meeting its own orthogonal complement.
std::vector<Subspace> crafted_subspaces(unsigned n, unsigned w) {
  std::vector<Subspace> out;
  if (w == 0) {
    out.push_back({});
    return out;
  }
  Subspace prefix, suffix, alternating, mixed;
  for (unsigned i = 0; i < w; ++i) {
    prefix.push_back(basis_vector(n, i));
    suffix.push_back(basis_vector(n, n - w + i));
    alternating.push_back(basis_vector(n, i % 2 == 0 ? i / 2 : n - 1 - i / 2));
  }
  for (unsigned i = 0; i + 1 < w; ++i) {
    mixed.push_back(basis_vector(n, i));
  }
  std::vector<std::int64_t> v = basis_vector(n, w - 1);
  v[n - 1] += 1;
  mixed.push_back(std::move(v));
  out.push_back(std::move(prefix));
  out.push_back(std::move(suffix));
  out.push_back(std::move(alternating));
  out.push_back(std::move(mixed));
  return out;
}

Subspace random_subspace(unsigned n, unsigned w, std::uint64_t seed, std::int64_t p) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  for (;;) {
    Subspace basis(w, std::vector<std::int64_t>(n));
    for (auto& row : basis) {
      for (auto& x : row) {
        x = dist(rng);
      }
    }
    if (rank_mod_p_local(basis, p) == w) {
      return basis;
    }
  }
}

struct StabilizerCase {
  unsigned n;
  FormKind kind;
  unsigned d;
  Subspace basis;
};

}  // namespace

VerificationCheck check_stabilizer_dims(std::span<const unsigned> dims, unsigned random_trials,
                                        std::uint64_t seed, unsigned workers) {
  const std::string name = "stabilizer-oracle-vs-formula";
  constexpr std::int64_t kPrime = 10007;

  std::vector<StabilizerCase> cases;
  for (unsigned n : dims) {
    for (FormKind kind : {FormKind::symplectic, FormKind::orthogonal}) {
      for (unsigned d = 0; d <= n; ++d) {
        const unsigned w = n - d;
        for (Subspace& s : crafted_subspaces(n, w)) {
          if (rank_mod_p_local(s, kPrime) == w) {
            cases.push_back({n, kind, d, std::move(s)});
          }
        }
        for (unsigned t = 0; t < random_trials && w > 0; ++t) {
          const std::uint64_t case_seed =
              splitmix(seed ^ splitmix((std::uint64_t{n} << 40) ^
                                       (std::uint64_t(kind == FormKind::symplectic) << 36) ^
                                       (std::uint64_t{d} << 20) ^ t));
          cases.push_back({n, kind, d, random_subspace(n, w, case_seed, kPrime)});
        }
      }
    }
  }

  auto run_range = [&](std::size_t lo, std::size_t hi) -> std::string {
    for (std::size_t i = lo; i < hi; ++i) {
      const StabilizerCase& c = cases[i];
      const FormSpace space(c.n, c.kind);
      const unsigned oracle = stabilizer_dim_oracle(space, c.basis);
      const std::uint64_t formula = stabilizer_dim_formula(c.d, c.kind);
      if (oracle != formula) {
        std::ostringstream msg;
        msg << "n=" << c.n << " kind=" << (c.kind == FormKind::symplectic ? "sp" : "so")
            << " d=" << c.d << ": oracle " << oracle << " != formula " << formula;
        return msg.str();
      }
    }
    return {};
  };

  std::string error;
  if (workers <= 1) {
    error = run_range(0, cases.size());
  } else {
    std::vector<std::future<std::string>> futures;
    const std::size_t chunk = (cases.size() + workers - 1) / workers;
    for (std::size_t lo = 0; lo < cases.size(); lo += chunk) {
      const std::size_t hi = std::min(lo + chunk, cases.size());
      futures.push_back(std::async(std::launch::async, run_range, lo, hi));
    }
    for (auto& f : futures) {
      std::string chunk_error = f.get();
      if (!chunk_error.empty() && error.empty()) {
        error = std::move(chunk_error);
      }
    }
  }
  if (!error.empty()) {
    return fail(name, error);
  }
  return pass(name, std::to_string(cases.size()) + " subspaces, all exact");
}

VerificationCheck check_point_counts(bool include_level2) {
  const std::string name = "stabilizer-point-counts";
  struct Grid {
    unsigned level;
    FiltrationProfile profile;
  };
  std::vector<Grid> grids;
  grids.push_back({1, FiltrationProfile{}});
  grids.push_back({1, FiltrationProfile({{1, 1}})});
  grids.push_back({1, FiltrationProfile({{2, 1}})});
  if (include_level2) {
    grids.push_back({2, FiltrationProfile({{1, 1}})});
    grids.push_back({2, FiltrationProfile({{1, 2}})});
    grids.push_back({2, FiltrationProfile({{2, 1}})});
    grids.push_back({2, FiltrationProfile({{2, 2}})});
    grids.push_back({2, FiltrationProfile({{2, 1}, {1, 2}})});
  }
  unsigned counted = 0;
  for (unsigned ell : {2u, 3u, 5u}) {
    for (const Grid& grid : grids) {
      const PointCountResult r = point_count_index(ell, grid.level, grid.profile);
      // |index / ell^predicted| within a factor of 4, checked exactly.
      if (4 * r.index < r.predicted_index || r.index > 4 * r.predicted_index) {
        std::ostringstream msg;
        msg << "ell=" << ell << " level=" << grid.level << ": index " << r.index
            << " vs predicted " << r.predicted_index;
        return fail(name, msg.str());
      }
      ++counted;
    }
  }
  // worked cases pinned exactly
  const PointCountResult w1 = point_count_index(5, 1, FiltrationProfile({{1, 1}}));
  if (w1.group_order != 120 || w1.stabilizer_order != 5 || w1.index != 24 ||
      w1.predicted_index != 25) {
    return fail(name, "worked case ell=5 mismatch");
  }
  const PointCountResult w2 = point_count_index(3, 1, FiltrationProfile({{1, 1}}));
  if (w2.index != 8 || w2.predicted_index != 9) {
    return fail(name, "worked case ell=3 mismatch");
  }
  const PointCountResult w3 = point_count_index(2, 1, FiltrationProfile{});
  if (w3.index != 1 || w3.predicted_index != 1) {
    return fail(name, "worked case trivial subgroup mismatch");
  }
  return pass(name, std::to_string(counted) + " enumerations within the factor-4 law");
}

VerificationCheck check_psi_equivalence(unsigned max_h, unsigned max_e) {
  const std::string name = "psi-closed-form-vs-grid";
  unsigned grids = 0;
  for (unsigned h = 1; h <= max_h; ++h) {
    for (unsigned e = 1; e <= max_e; ++e) {
      for (const auto& partition : partitions_of(e)) {
        for (PsiRegime regime : {PsiRegime::isotropic, PsiRegime::full}) {
          const Rational closed = psi_max(h, partition, regime);
          const Rational grid = psi_grid_max(h, partition, regime);
          if (closed != grid) {
            std::ostringstream msg;
            msg << "h=" << h << " e=" << e << " parts=" << partition.size()
                << " regime=" << (regime == PsiRegime::full ? "full" : "isotropic");
            return fail(name, msg.str());
          }
          ++grids;
        }
      }
    }
  }
  return pass(name, std::to_string(grids) + " grids, exact agreement");
}

VerificationCheck check_gamma_reconciliation(unsigned max_h, unsigned max_e) {
  const std::string name = "psi-max-vs-gamma";
  for (unsigned h = 1; h <= max_h; ++h) {
    for (unsigned e = 1; e <= max_e; ++e) {
      const std::vector<unsigned> degrees{e};
      const Rational isotropic = psi_max(h, degrees, PsiRegime::isotropic);
      const Rational full = psi_max(h, degrees, PsiRegime::full);
      if (full < isotropic) {
        return fail(name, "isotropic regime dominates at h=" + std::to_string(h) +
                              " e=" + std::to_string(e));
      }
      if (std::max(isotropic, full) != gamma_simple(SimpleFactor(AlbertType::III, e, h, 1))) {
        return fail(name,
                    "psi max differs from gamma at h=" + std::to_string(h) +
                        " e=" + std::to_string(e));
      }
    }
  }
  return pass(name, "h <= " + std::to_string(max_h) + ", e <= " + std::to_string(max_e));
}

VerificationCheck check_prefix_max(unsigned instances, unsigned samples, std::uint64_t seed) {
  const std::string name = "prefix-max-lemma";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len_dist(1, 8), num_dist(1, 20), weight_dist(0, 10);
  for (unsigned inst = 0; inst < instances; ++inst) {
    const int len = len_dist(rng);
    std::vector<Rational> a, b;
    for (int i = 0; i < len; ++i) {
      a.push_back(make_fraction(num_dist(rng), num_dist(rng)));
      b.push_back(make_fraction(num_dist(rng), num_dist(rng)));
    }
    const PrefixMaxResult best = prefix_max(a, b);

    // the indicator sequence attains the maximum exactly
    Rational num = 0, den = 0;
    for (std::size_t i = 0; i < best.k; ++i) {
      num += a[i];
      den += b[i];
    }
    if (num / den != best.value) {
      return fail(name, "indicator sequence does not attain the prefix maximum");
    }

    for (unsigned s = 0; s < samples; ++s) {
      std::vector<int> weights(len);
      for (int& w : weights) w = weight_dist(rng);
      std::sort(weights.rbegin(), weights.rend());
      if (weights[0] == 0) weights[0] = 1;
      Rational sn = 0, sd = 0;
      for (int i = 0; i < len; ++i) {
        sn += a[i] * weights[i];
        sd += b[i] * weights[i];
      }
      if (sn / sd > best.value) {
        return fail(name, "sampled weight sequence beats the prefix maximum");
      }
    }
  }
  return pass(name, std::to_string(instances) + " instances x " + std::to_string(samples) +
                        " sampled sequences");
}

VerificationCheck check_filtration_reconciliation(unsigned max_h, unsigned max_steps,
                                                  unsigned max_exponent) {
  const std::string name = "filtration-ratio-vs-gamma";
  for (unsigned h = 1; h <= max_h; ++h) {
    Rational best = 0;
    std::uint64_t profiles = 0;
    // strictly decreasing rank tuples over [1, 2h]
    std::vector<unsigned> ranks;
    auto enumerate_exponents = [&](auto&& self, std::vector<unsigned>& exps,
                                   unsigned next_min) -> void {
      if (exps.size() == ranks.size()) {
        // valid isotropy assignments: a prefix of non-isotropic steps covering
        // every rank above h
        unsigned forced = 0;
        for (unsigned i = 0; i < ranks.size(); ++i) {
          if (ranks[i] > h) forced = i + 1;
        }
        for (unsigned prefix = forced; prefix <= ranks.size(); ++prefix) {
          std::vector<FiltrationStep> steps;
          for (unsigned i = 0; i < ranks.size(); ++i) {
            steps.push_back({ranks[i], exps[i], i < prefix});
          }
          const FiltrationProfile profile(std::move(steps), 1);
          const Integer num = torsion_card_exponent(profile, 2);
          const Integer den = index_exponent(profile, h).delta_augmented;
          const Rational ratio = make_fraction(num, den);
          if (ratio > best) best = ratio;
          ++profiles;
        }
        return;
      }
      for (unsigned m = next_min; m <= max_exponent; ++m) {
        exps.push_back(m);
        self(self, exps, m + 1);
        exps.pop_back();
      }
    };
    auto enumerate_ranks = [&](auto&& self, unsigned next_max) -> void {
      if (!ranks.empty()) {
        std::vector<unsigned> exps;
        enumerate_exponents(enumerate_exponents, exps, 1);
      }
      if (ranks.size() == max_steps) return;
      for (unsigned r = next_max; r >= 1; --r) {
        ranks.push_back(r);
        self(self, r - 1);
        ranks.pop_back();
      }
    };
    enumerate_ranks(enumerate_ranks, 2 * h);

    const Rational expected = gamma_simple(SimpleFactor(AlbertType::III, 1, h, 1));
    if (best != expected) {
      std::ostringstream msg;
      msg << "h=" << h << ": best ratio over " << profiles << " profiles is "
          << numerator(best).str() << "/" << denominator(best).str() << ", expected gamma";
      return fail(name, msg.str());
    }
  }
  return pass(name, "filtration grids reach gamma exactly for h <= " + std::to_string(max_h));
}

VerificationCheck check_set_consistency(SetTag tag, const Integer& bound) {
  const std::string name = "set-consistency-" + set_tag_name(tag);
  const auto enumerated = enumerate_set(tag, bound);
  std::size_t idx = 0;
  for (Integer x = 1; x <= bound; ++x) {
    const auto membership = set_membership(tag, x);
    const bool listed = idx < enumerated.size() && enumerated[idx].first == x;
    if (membership.has_value() != listed) {
      return fail(name, "enumeration and membership disagree at " + x.str());
    }
    if (listed) {
      const MembershipCertificate& a = enumerated[idx].second;
      const MembershipCertificate& b = *membership;
      if (a.family != b.family || a.witnesses != b.witnesses || a.value != b.value) {
        return fail(name, "certificates disagree at " + x.str());
      }
      ++idx;
    }
  }
  if (idx != enumerated.size()) {
    return fail(name, "enumeration lists values beyond the bound");
  }
  return pass(name, std::to_string(enumerated.size()) + " members below " + bound.str());
}

VerificationCheck check_certificate_soundness(SetTag tag, const Integer& bound) {
  const std::string name = "certificate-soundness-" + set_tag_name(tag);
  const auto enumerated = enumerate_set(tag, bound);
  for (const auto& [value, cert] : enumerated) {
    if (cert.value != value || evaluate_certificate(cert) != value) {
      return fail(name, "certificate does not re-evaluate to " + value.str());
    }
  }
  return pass(name, std::to_string(enumerated.size()) + " certificates re-evaluated");
}

VerificationCheck check_v2_lemma(std::uint64_t max_k_predicate, std::uint64_t max_k_binomial) {
  const std::string name = "central-binomial-2-adic";
  for (std::uint64_t k = 0; k <= max_k_predicate; ++k) {
    const bool power_of_two = ((k + 1) & k) == 0;
    if (half_central_binomial_is_odd(k) != power_of_two) {
      return fail(name, "parity predicate wrong at k=" + std::to_string(k));
    }
  }
  for (std::uint64_t k = 0; k <= max_k_binomial; ++k) {
    const Integer c = binomial(4 * k + 4, 2 * k + 2);
    if (v2(c) != v2_central_binomial(k)) {
      return fail(name, "valuation mismatch at k=" + std::to_string(k));
    }
  }
  return pass(name, "predicate to k=" + std::to_string(max_k_predicate) +
                        ", exact valuations to k=" + std::to_string(max_k_binomial));
}

VerificationCheck check_minuscule_equivalence(const Integer& half_bound) {
  const std::string name = "minuscule-generator-vs-closed-families";
  const std::vector<Integer> dims = exclusion_dimensions(2 * half_bound);
  std::vector<Integer> halved;
  for (const Integer& n : dims) {
    if (n % 2 != 0) {
      return fail(name, "generator produced an odd dimension " + n.str());
    }
    halved.push_back(n / 2);
  }
  std::vector<Integer> closed;
  for (const auto& [value, cert] : enumerate_set(SetTag::sigma_prime, half_bound)) {
    closed.push_back(value);
  }
  if (halved != closed) {
    return fail(name, "halved generator output differs from the closed families");
  }
  return pass(name, std::to_string(closed.size()) + " dimensions match exactly");
}

VerificationCheck check_minuscule_duality(unsigned max_rank) {
  const std::string name = "minuscule-duality-table";
  Integer prev_a = 0, prev_b = 0, prev_c = 0, prev_d = 0;
  for (unsigned rank = 1; rank <= max_rank; ++rank) {
    for (unsigned r = 1; r <= rank; ++r) {
      const MinusculeEntry entry =
          table_lookup(RootSystem::A, rank, {WeightKind::fundamental, r});
      const bool center = rank % 2 == 1 && r == (rank + 1) / 2;
      if (center) {
        if (entry.duality != (r % 2 == 0 ? 1 : -1)) {
          return fail(name, "A duality wrong at rank " + std::to_string(rank));
        }
      } else if (entry.duality != 0) {
        return fail(name, "A duality should vanish off the middle weight");
      }
    }
    if (rank % 2 == 1) {
      const Integer dim =
          table_lookup(RootSystem::A, rank, {WeightKind::fundamental, (rank + 1) / 2}).dimension;
      if (dim <= prev_a) return fail(name, "A middle dimension not increasing");
      prev_a = dim;
    }
    if (rank >= 2) {
      const MinusculeEntry b = table_lookup(RootSystem::B, rank, {WeightKind::spin});
      const int expected = (rank % 4 == 0 || rank % 4 == 3) ? 1 : -1;
      if (b.duality != expected) return fail(name, "B duality wrong");
      if (b.dimension <= prev_b) return fail(name, "B dimension not increasing");
      prev_b = b.dimension;
      const MinusculeEntry c = table_lookup(RootSystem::C, rank, {WeightKind::vector});
      if (c.duality != -1) return fail(name, "C duality wrong");
      if (c.dimension <= prev_c) return fail(name, "C dimension not increasing");
      prev_c = c.dimension;
    }
    if (rank >= 3) {
      const MinusculeEntry spin = table_lookup(RootSystem::D, rank, {WeightKind::spin});
      const int expected = rank % 2 == 1 ? 0 : (rank % 4 == 0 ? 1 : -1);
      if (spin.duality != expected) return fail(name, "D spin duality wrong");
      if (table_lookup(RootSystem::D, rank, {WeightKind::vector}).duality != 1) {
        return fail(name, "D standard weight must be orthogonal");
      }
      if (spin.dimension <= prev_d) return fail(name, "D spin dimension not increasing");
      prev_d = spin.dimension;
    }
  }
  return pass(name, "table scanned to rank " + std::to_string(max_rank));
}

VerificationCheck check_odd_exclusion_reference() {
  const std::string name = "odd-exclusion-reference";
  const auto members = enumerate_set(SetTag::odd_exclusion, 1000000);
  std::vector<std::uint32_t> values;
  for (const auto& [value, cert] : members) {
    values.push_back(value.convert_to<std::uint32_t>());
  }
  const auto& expected = fixtures::kReferenceOddExclusion1e6;
  if (!std::equal(values.begin(), values.end(), expected.begin(), expected.end())) {
    return fail(name, "enumeration differs from the reference {3, 35, 6435}");
  }
  return pass(name, "{3, 35, 6435} reproduced");
}

VerificationCheck check_doubled_reference() {
  const std::string name = "doubled-sigma-prime-reference";
  const auto doubled = doubled_sigma_prime(1000);
  std::set<std::uint32_t> ours;
  for (const auto& [value, cert] : doubled) {
    ours.insert(value.convert_to<std::uint32_t>());
  }
  const std::set<std::uint32_t> reference(fixtures::kReferenceDoubledSigmaPrime1e3.begin(),
                                          fixtures::kReferenceDoubledSigmaPrime1e3.end());
  std::vector<std::uint32_t> matched, extra, missing;
  std::set_intersection(ours.begin(), ours.end(), reference.begin(), reference.end(),
                        std::back_inserter(matched));
  std::set_difference(ours.begin(), ours.end(), reference.begin(), reference.end(),
                      std::back_inserter(extra));
  std::set_difference(reference.begin(), reference.end(), ours.begin(), ours.end(),
                      std::back_inserter(missing));
  std::ostringstream details;
  details << matched.size() << "/21 reference values reproduced; extra: {";
  for (std::size_t i = 0; i < extra.size(); ++i) {
    details << (i ? ", " : "") << extra[i];
  }
  details << "}; missing: {";
  for (std::size_t i = 0; i < missing.size(); ++i) {
    details << (i ? ", " : "") << missing[i];
  }
  details << "}";
  if (matched.size() < 20) {
    return fail(name, details.str());
  }
  return pass(name, details.str());
}

VerificationCheck check_degree_bound(std::uint64_t seed) {
  const std::string name = "degree-bound-omega";
  if (degree_lower_bound(1, 5).omega != 0 || degree_lower_bound(1, 5).principal != 1) {
    return fail(name, "m=1 must give (0, 1)");
  }
  if (degree_lower_bound(12, 1).omega != 2 || degree_lower_bound(12, 1).principal != 144) {
    return fail(name, "m=12 must give (2, 144)");
  }
  if (degree_lower_bound(30, 2).omega != 3 || degree_lower_bound(30, 2).principal != 810000) {
    return fail(name, "m=30 must give (3, 810000)");
  }
  // semiprime beyond the trial-division range (999983 and 1000003 are prime)
  if (degree_lower_bound(999983ULL * 1000003ULL, 1).omega != 2) {
    return fail(name, "large semiprime misfactored");
  }
  // additivity on coprime pairs
  std::mt19937_64 rng(seed);
  const std::uint64_t primes_a[] = {2, 3, 5, 7, 11};
  const std::uint64_t primes_b[] = {13, 17, 19, 23, 29};
  for (unsigned t = 0; t < 200; ++t) {
    std::uint64_t a = 1, b = 1;
    unsigned wa = 0, wb = 0;
    for (std::uint64_t p : primes_a) {
      if (rng() & 1) {
        a *= p;
        ++wa;
      }
    }
    for (std::uint64_t p : primes_b) {
      if (rng() & 1) {
        b *= p;
        ++wb;
      }
    }
    if (a == 1 && b == 1) continue;
    if (degree_lower_bound(a * b, 1).omega != wa + wb) {
      return fail(name, "omega not additive on coprime " + std::to_string(a) + " * " +
                            std::to_string(b));
    }
  }
  return pass(name, "examples and 200 coprime pairs");
}

VerificationCheck check_omega_records() {
  const std::string name = "omega-ratio-records";
  const std::uint64_t primorials[] = {6, 30, 210, 2310};
  if (omega_asymptotic_check(3).argmax != 3) return fail(name, "argmax at bound 3");
  if (omega_asymptotic_check(6).argmax != 6) return fail(name, "argmax at bound 6");
  if (omega_asymptotic_check(30).argmax != 30) return fail(name, "argmax at bound 30");
  if (omega_asymptotic_check(210).argmax != 210) return fail(name, "argmax at bound 210");
  if (omega_asymptotic_check(10000).argmax != 2310) return fail(name, "argmax at bound 10^4");
  double prev = 0;
  for (std::uint64_t p : primorials) {
    const OmegaRatioResult r = omega_asymptotic_check(p);
    if (r.max_ratio <= prev) {
      return fail(name, "primorial records are not increasing");
    }
    prev = r.max_ratio;
  }
  return pass(name, "records attained by primorials 6, 30, 210, 2310");
}

VerificationReport run_verification(const VerifyOptions& options) {
  const bool q = options.quick;
  VerificationReport report;
  auto add = [&](VerificationCheck check) { report.checks.push_back(std::move(check)); };

  add(check_variety_identities(q ? 2 : 4, q ? 10 : 30));
  add(check_gamma_grid(q ? 2 : 3, 2, q ? 2 : 3, q ? 1 : 2));
  add(check_gamma_argmax_rule(options.seed, q ? 50 : 200));
  const std::vector<unsigned> dims = q ? std::vector<unsigned>{2, 4}
                                       : std::vector<unsigned>{2, 4, 6, 8};
  add(check_stabilizer_dims(dims, q ? 10 : 50, options.seed, options.workers));
  add(check_point_counts(!q));
  add(check_psi_equivalence(q ? 4 : 8, q ? 2 : 3));
  add(check_gamma_reconciliation(q ? 20 : 100, q ? 4 : 10));
  add(check_prefix_max(q ? 20 : 100, q ? 1000 : 10000, options.seed));
  add(check_filtration_reconciliation(q ? 2 : 4, q ? 2 : 3, q ? 2 : 3));
  add(check_set_consistency(SetTag::sigma, q ? 300 : 2000));
  add(check_set_consistency(SetTag::sigma_prime, q ? 300 : 2000));
  add(check_set_consistency(SetTag::odd_exclusion, q ? 300 : 10000));
  add(check_certificate_soundness(SetTag::sigma, q ? 1000 : 10000));
  add(check_certificate_soundness(SetTag::sigma_prime, q ? 1000 : 10000));
  add(check_certificate_soundness(SetTag::odd_exclusion, 1000000));
  add(check_v2_lemma(q ? 1000 : 10000, q ? 50 : 200));
  add(check_minuscule_equivalence(q ? 200 : 1000));
  add(check_minuscule_duality(q ? 12 : 40));
  add(check_odd_exclusion_reference());
  add(check_doubled_reference());
  add(check_degree_bound(options.seed));
  add(check_omega_records());
  return report;
}

}  // namespace lefgamma
