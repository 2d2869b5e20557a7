#include "gcoh/cohomology/long_exact.hpp"

#include "gcoh/errors.hpp"

namespace gcoh::cohomology {

namespace {

constexpr std::int64_t kKernelEnumerationCap = 1 << 16;

// Odometer over coordinate vectors of a presented finite abelian group.
bool next_coords(Vec64& c, const std::vector<std::int64_t>& factors) {
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (++c[i] < factors[i]) return true;
    c[i] = 0;
  }
  return false;
}

}  // namespace

LesAssembly long_exact_sequence(const gmod::ShortExactSequence& s, int r_max,
                                const ResourceGuard& guard) {
  if (r_max < 0) throw ValidationError("long_exact_sequence: r_max must be >= 0");
  const auto& g = s.a()->group;
  LesAssembly les;

  for (int r = 0; r <= r_max; ++r) {
    les.h_a.push_back(cohomology_group(g, s.a(), r, guard));
    les.h_b.push_back(cohomology_group(g, s.b(), r, guard));
    les.h_c.push_back(cohomology_group(g, s.c(), r, guard));
  }
  for (int r = 0; r <= r_max; ++r) {
    les.push_ab.push_back(hom_on_generators(les.h_a[r], les.h_b[r], [&](CohomologyClass x) {
      return pushforward(s.inj, x, les.h_b[r]);
    }));
    les.push_bc.push_back(hom_on_generators(les.h_b[r], les.h_c[r], [&](CohomologyClass x) {
      return pushforward(s.surj, x, les.h_c[r]);
    }));
  }
  ConnectingMap delta_map(s);
  for (int r = 0; r + 1 <= r_max; ++r) {
    les.delta.push_back(hom_on_generators(les.h_c[r], les.h_a[r + 1], [&](CohomologyClass x) {
      return delta_map.apply(x, les.h_a[r + 1]);
    }));
  }

  // Close the strip: materialize H^{r_max+1}(A) when its coboundary matrix
  // stays within the guard, else verify the last node by coboundary solving.
  const std::int64_t km1 = g->size - 1;
  std::int64_t rows = s.a()->rank, cols = s.a()->rank;
  bool fits = true;
  for (int i = 0; i < r_max + 2; ++i) {
    rows *= km1;
    if (i <= r_max) cols *= km1;
    if (rows > guard.max_entries) fits = false;
  }
  if (fits && cols > 0) fits = rows <= guard.max_entries / cols;
  if (fits) {
    les.h_a_top = cohomology_group(g, s.a(), r_max + 1, guard);
    les.delta.push_back(hom_on_generators(les.h_c[r_max], *les.h_a_top, [&](CohomologyClass x) {
      return delta_map.apply(x, *les.h_a_top);
    }));
  }

  les.all_exact = true;
  auto note = [&](std::string name, bool exact) {
    les.nodes.push_back({std::move(name), exact});
    les.all_exact = les.all_exact && exact;
  };

  note("H^0(A)", les.push_ab[0].kernel_order() == 1);
  for (int r = 0; r <= r_max; ++r) {
    note("H^" + std::to_string(r) + "(B)", exact_pair(les.push_ab[r], les.push_bc[r]));
    if (r + 1 <= r_max) {
      note("H^" + std::to_string(r) + "(C)", exact_pair(les.push_bc[r], les.delta[r]));
      note("H^" + std::to_string(r + 1) + "(A)", exact_pair(les.delta[r], les.push_ab[r + 1]));
    }
  }

  const std::string last_node = "H^" + std::to_string(r_max) + "(C)";
  if (les.h_a_top) {
    note(last_node, exact_pair(les.push_bc[r_max], les.delta[r_max]));
  } else {
    // im(g) subset ker(delta) and |im(g)| = |ker(delta)|, with membership of
    // delta-values in the coboundaries decided against the factored
    // differential d^{r_max} of A.
    const auto& hc = les.h_c[r_max];
    const auto& ha = les.h_a[r_max];
    const auto& factors = hc->presentation().invariant_factors;
    if (hc->presentation().order() > kKernelEnumerationCap)
      throw ResourceBoundError("long_exact_sequence: " + last_node + " too large to enumerate");

    bool image_in_kernel = true;
    for (const auto& gen : les.h_b[r_max]->generators()) {
      CohomologyClass img = pushforward(s.surj, class_of(les.h_b[r_max], gen), hc);
      Cochain d = delta_map.apply_cochain(img.representative());
      auto v = normalized_table(d);
      if (!v) throw ValidationError("long_exact_sequence: delta value not normalized");
      if (!ha->boundary_out_solver().solve(*v)) {
        image_in_kernel = false;
        break;
      }
    }

    mpz_class kernel_count = 0;
    if (factors.empty()) {
      kernel_count = 1;
    } else {
      Vec64 coords(factors.size(), 0);
      do {
        Cochain d = delta_map.apply_cochain(hc->representative(coords));
        auto v = normalized_table(d);
        if (!v) throw ValidationError("long_exact_sequence: delta value not normalized");
        if (ha->boundary_out_solver().solve(*v)) ++kernel_count;
      } while (next_coords(coords, factors));
    }
    note(last_node, image_in_kernel && les.push_bc[r_max].image_order() == kernel_count);
  }
  return les;
}

}  // namespace gcoh::cohomology
