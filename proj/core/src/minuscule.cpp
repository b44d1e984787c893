#include "lefgamma/minuscule.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefgamma {

std::string root_system_name(RootSystem rs) {
  switch (rs) {
    case RootSystem::A:
      return "A";
    case RootSystem::B:
      return "B";
    case RootSystem::C:
      return "C";
    case RootSystem::D:
      return "D";
  }
  throw std::logic_error("unreachable");
}

MinusculeEntry table_lookup(RootSystem type, unsigned rank, Weight weight) {
  switch (type) {
    case RootSystem::A: {
      if (rank < 1 || weight.kind != WeightKind::fundamental) {
        throw std::invalid_argument("type A carries omega_r with rank >= 1");
      }
      if (weight.r < 1 || weight.r > rank) {
        throw std::invalid_argument("type A needs 1 <= r <= rank");
      }
      const bool self_dual = (rank % 2 == 1) && (weight.r == (rank + 1) / 2);
      const int duality = self_dual ? (weight.r % 2 == 0 ? 1 : -1) : 0;
      return {type, rank, weight, binomial(rank + 1, weight.r), duality};
    }
    case RootSystem::B: {
      if (rank < 2 || weight.kind != WeightKind::spin) {
        throw std::invalid_argument("type B carries the spin weight omega_l with rank >= 2");
      }
      const int duality = (rank % 4 == 0 || rank % 4 == 3) ? 1 : -1;
      return {type, rank, weight, Integer(1) << rank, duality};
    }
    case RootSystem::C: {
      if (rank < 2 || weight.kind != WeightKind::vector) {
        throw std::invalid_argument("type C carries omega_1 with rank >= 2");
      }
      return {type, rank, weight, Integer(2) * rank, -1};
    }
    case RootSystem::D: {
      if (rank < 3) {
        throw std::invalid_argument("type D needs rank >= 3");
      }
      if (weight.kind == WeightKind::vector) {
        return {type, rank, weight, Integer(2) * rank, 1};
      }
      if (weight.kind == WeightKind::spin) {
        const int duality = (rank % 4 == 0) ? 1 : (rank % 4 == 2 ? -1 : 0);
        return {type, rank, weight, Integer(1) << (rank - 1), duality};
      }
      throw std::invalid_argument("type D carries omega_1 or the spin weights");
    }
  }
  throw std::logic_error("unreachable");
}

TensorDecomposition make_decomposition(MinusculeEntry entry, unsigned s) {
  if (s == 0) {
    throw std::invalid_argument("factor count s must be positive");
  }
  Integer total = ipow(entry.dimension, s);
  return {std::move(entry), s, std::move(total)};
}

bool orthogonal_admissible(const TensorDecomposition& decomp) {
  if (decomp.entry.duality == 1) {
    return true;
  }
  if (decomp.entry.duality == -1) {
    return decomp.s % 2 == 0;
  }
  return false;  // not self-dual, cannot carry the form
}

namespace {

struct Witness {
  Integer value;
  unsigned scan_order;
  TensorDecomposition decomp;
};

// Appends every admissible tensor power of the entry with dimension <= bound.
void add_powers(std::vector<Witness>& out, const MinusculeEntry& entry, const Integer& bound,
                unsigned& order) {
  if (entry.duality == 0) {
    return;
  }
  for (unsigned s = 1;; ++s) {
    TensorDecomposition decomp = make_decomposition(entry, s);
    if (decomp.total_dimension > bound) {
      break;
    }
    if (orthogonal_admissible(decomp)) {
      out.push_back({decomp.total_dimension, order++, std::move(decomp)});
    }
  }
}

std::vector<Witness> scan(const Integer& bound) {
  std::vector<Witness> out;
  unsigned order = 0;
  // Type A, self-dual weight omega_{(l+1)/2} for odd rank.
  for (unsigned rank = 1;; rank += 2) {
    MinusculeEntry entry =
        table_lookup(RootSystem::A, rank, {WeightKind::fundamental, (rank + 1) / 2});
    if (entry.dimension > bound) {
      break;
    }
    add_powers(out, entry, bound, order);
  }
  // Type B spin.
  for (unsigned rank = 2; (Integer(1) << rank) <= bound; ++rank) {
    add_powers(out, table_lookup(RootSystem::B, rank, {WeightKind::spin}), bound, order);
  }
  // Type C standard (symplectic, needs an even tensor power).
  for (unsigned rank = 2; Integer(2) * rank <= bound; ++rank) {
    add_powers(out, table_lookup(RootSystem::C, rank, {WeightKind::vector}), bound, order);
  }
  // Type D standard is the retained case and never generates exclusions.
  // Type D spin.
  for (unsigned rank = 3; (Integer(1) << (rank - 1)) <= bound; ++rank) {
    add_powers(out, table_lookup(RootSystem::D, rank, {WeightKind::spin}), bound, order);
  }
  return out;
}

}  // namespace

std::vector<std::pair<Integer, TensorDecomposition>> exclusion_dimensions_witnessed(
    const Integer& bound) {
  std::vector<Witness> witnesses = scan(bound);
  std::sort(witnesses.begin(), witnesses.end(), [](const Witness& x, const Witness& y) {
    if (x.value != y.value) return x.value < y.value;
    return x.scan_order < y.scan_order;
  });
  std::vector<std::pair<Integer, TensorDecomposition>> out;
  for (auto& w : witnesses) {
    if (out.empty() || out.back().first != w.value) {
      out.emplace_back(w.value, std::move(w.decomp));
    }
  }
  return out;
}

std::vector<Integer> exclusion_dimensions(const Integer& bound) {
  std::vector<Integer> out;
  for (auto& [value, decomp] : exclusion_dimensions_witnessed(bound)) {
    out.push_back(value);
  }
  return out;
}

}  // namespace lefgamma
