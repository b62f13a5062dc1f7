// Acceptance suite: one PASS/FAIL line per criterion, each with its time
// budget enforced. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "psi/analysis.hpp"
#include "psi/checkpoint.hpp"
#include "psi/group_spec.hpp"
#include "psi/oracle.hpp"
#include "psi/polynomial.hpp"
#include "psi/psi_core.hpp"

using namespace psi;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int g_failures = 0;

void criterion(int id, const std::string& name, double budget_seconds,
               const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = secs < budget_seconds;
  const bool pass = o.pass && in_time;
  if (!pass) ++g_failures;
  std::printf("[%s] %2d %-34s %10.4f s (budget %g s)  %s%s\n", pass ? "PASS" : "FAIL", id,
              name.c_str(), secs, budget_seconds, o.detail.c_str(),
              in_time ? "" : "  [over time budget]");
  std::fflush(stdout);
}

const std::vector<std::uint64_t> kPrimes{2, 3, 5, 7, 11, 13};

BigNat oracle_of(const AbelianGroupType& g) {
  return psi_bruteforce(ComponentList(g.cyclic_moduli()));
}

Outcome example_reproduction() {
  const AbelianGroupType z2z2 = parse_group_spec("2^[1,1]");
  const AbelianGroupType z3 = parse_group_spec("3");
  const bool ok = psi_abelian(z2z2) == 7 && psi_abelian(z3) == 7 && oracle_of(z2z2) == 7 &&
                  oracle_of(z3) == 7 && psi_p(PGroupType(2, Partition({1, 1}))) == 7;
  return {ok, "psi(Z2^2) = psi(Z3) = 7 by formula and enumeration"};
}

Outcome theorem_seven() {
  const AbelianGroupType g = parse_group_spec("13^[1,1]*23");
  const BigNat formula = psi_abelian(g);
  const BigNat oracle = oracle_of(g);
  const bool ok = formula == 1107795 && g.order() == 3887 && formula % g.order() == 0 &&
                  formula / g.order() == 285 && oracle == formula;
  return {ok, "psi = " + to_decimal(formula) + " = " + to_decimal(g.order()) + " * " +
                  to_decimal(formula / g.order()) + ", oracle " + to_decimal(oracle)};
}

Outcome oracle_equivalence() {
  std::size_t types = 0;
  for (std::uint64_t n = 1; n <= 2048; ++n) {
    for (const auto& g : group_types_of_order(n)) {
      ++types;
      if (psi_abelian(g) != oracle_of(g)) return {false, "mismatch at " + format_group_spec(g)};
    }
  }
  return {true, std::to_string(types) + " group types, orders 1..2048"};
}

Outcome closed_forms() {
  std::size_t numeric = 0;
  std::size_t symbolic = 0;
  auto same = [&](const BigNat& a, std::uint64_t p, const Partition& s) {
    ++numeric;
    return a == psi_p(PGroupType(p, s));
  };
  std::vector<Partition> shapes;
  for (unsigned n = 1; n <= 6; ++n) {
    shapes.push_back(Partition::cyclic(n));
    shapes.push_back(Partition::elementary(n));
    if (n >= 2) {
      std::vector<unsigned> parts(n - 2, 1U);
      parts.push_back(2);
      shapes.emplace_back(parts);
    }
  }
  for (unsigned a1 = 1; a1 <= 6; ++a1) {
    for (unsigned a2 = a1; a2 <= 6; ++a2) {
      shapes.push_back(Partition({a1, a2}));
      for (unsigned a3 = a2; a3 <= 6; ++a3) shapes.push_back(Partition({a1, a2, a3}));
    }
  }
  for (const auto p : kPrimes) {
    for (unsigned n = 1; n <= 6; ++n) {
      if (!same(psi_cyclic(p, n), p, Partition::cyclic(n))) return {false, "2a"};
      if (!same(psi_elem_abelian(p, n), p, Partition::elementary(n))) return {false, "2b"};
      if (n >= 2) {
        std::vector<unsigned> parts(n - 2, 1U);
        parts.push_back(2);
        if (!same(psi_near_elem(p, n), p, Partition(parts))) return {false, "2c"};
      }
    }
    for (unsigned a1 = 1; a1 <= 6; ++a1) {
      for (unsigned a2 = a1; a2 <= 6; ++a2) {
        if (!same(psi_rank2(p, a1, a2), p, Partition({a1, a2}))) return {false, "2d"};
        for (unsigned a3 = a2; a3 <= 6; ++a3) {
          if (!same(psi_rank3(p, a1, a2, a3), p, Partition({a1, a2, a3}))) return {false, "2e"};
        }
      }
    }
    for (const auto& s : shapes) {
      ++numeric;
      if (psi_symbolic(s).evaluate(BigInt(p)) != psi_p(PGroupType(p, s))) {
        return {false, "symbolic evaluation " + s.to_string()};
      }
    }
  }
  for (const auto& s : shapes) {
    const auto report = verify_closed_form(s);
    symbolic += report.checks.size();
    if (!report.all_equal()) return {false, "symbolic mismatch for " + s.to_string()};
  }
  return {true, std::to_string(numeric) + " numeric and " + std::to_string(symbolic) +
                    " symbolic comparisons"};
}

Outcome monotonicity() {
  std::size_t chains = 0;
  for (const auto p : kPrimes) {
    for (unsigned n = 1; n <= 20; ++n) {
      const auto r = monotonicity_check(n, p);
      ++chains;
      if (!r.violations.empty()) {
        return {false, "violation n=" + std::to_string(n) + " p=" + std::to_string(p)};
      }
      if (!r.min_is_elementary || !r.max_is_cyclic) {
        return {false, "endpoint mismatch n=" + std::to_string(n) + " p=" + std::to_string(p)};
      }
    }
  }
  return {true, std::to_string(chains) + " chains strictly increasing, endpoints Z_p^n / Z_{p^n}"};
}

Outcome conjecture() {
  constexpr std::uint64_t kTo = 100000;
  SweepOptions single;
  single.workers = 1;
  const auto t0 = Clock::now();
  const SweepCheckpoint serial = conjecture_sweep(2, kTo, SweepCheckpoint{}, single);
  const double serial_s = std::chrono::duration<double>(Clock::now() - t0).count();

  SweepOptions eight;
  eight.workers = 8;
  const auto t1 = Clock::now();
  const SweepCheckpoint parallel = conjecture_sweep(2, kTo, SweepCheckpoint{}, eight);
  const double parallel_s = std::chrono::duration<double>(Clock::now() - t1).count();

  // Interrupt after a few blocks, persist, reload, resume.
  const auto path = std::filesystem::temp_directory_path() / "psi_acceptance_checkpoint.json";
  SweepOptions stopping;
  int blocks = 0;
  stopping.on_block = [&](const SweepCheckpoint& cp) {
    save_checkpoint(path, cp);
    return ++blocks < 10;
  };
  const SweepCheckpoint partial = conjecture_sweep(2, kTo, SweepCheckpoint{}, stopping);
  const SweepCheckpoint resumed = conjecture_sweep(2, kTo, load_checkpoint(path), SweepOptions{});
  std::filesystem::remove(path);

  const std::string reference = checkpoint_to_string(serial);
  const bool identical =
      checkpoint_to_string(parallel) == reference && checkpoint_to_string(resumed) == reference;
  const bool ok = serial.collisions.empty() && serial.max_done == kTo && identical &&
                  partial.max_done < kTo && serial_s < 300 && parallel_s < 60;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%zu collisions; serial %.2f s, 8 workers %.2f s; resume after %llu identical: %s",
                serial.collisions.size(), serial_s, parallel_s,
                static_cast<unsigned long long>(partial.max_done), identical ? "yes" : "NO");
  return {ok, buf};
}

Outcome divisibility() {
  const auto small = divisibility_search(2000);
  const auto upto = divisibility_search(3887);
  const bool ok = small.empty() && upto.size() == 1 && upto[0].order == 3887 &&
                  upto[0].group == "13^[1,1]*23" && upto[0].psi == 1107795 &&
                  upto[0].quotient == 285;
  return {ok, "none up to 2000; up to 3887 only " +
                  (upto.empty() ? std::string("<none>") : upto[0].group)};
}

Outcome image() {
  const ImageReport r = image_probe(100000);
  const bool ok = r.all_odd && r.lower_bound_holds && !r.five_present &&
                  r.five_absence_conclusive && !r.argument.empty();
  return {ok, std::to_string(r.type_count) + " types all odd, psi >= 2|G|-1, 5 absent (" +
                  r.argument.substr(0, 40) + "...)"};
}

Outcome remarks() {
  std::size_t shapes = 0;
  for (unsigned n = 1; n <= 12; ++n) {
    for (const auto& s : partitions_of(n)) {
      ++shapes;
      for (const std::uint64_t p : {2ULL, 3ULL}) {
        for (unsigned a = 0; a < n + 2; ++a) {
          if (f_eval(s, p, a) > f_eval(s, p, a + 1)) return {false, "f decreases " + s.to_string()};
        }
      }
      const IntPoly f = psi_symbolic(s);
      const std::size_t expected = 2 * s.largest() + (s.n() - s.largest());
      if (f.degree() != expected || f.leading() != 1) return {false, "degree " + s.to_string()};
    }
  }
  return {true, std::to_string(shapes) + " shapes: f non-decreasing, degree and monicity hold"};
}

// Cyclic factors of g tagged with their prime and exponent.
struct Factor {
  std::uint64_t p;
  unsigned exponent;
};

std::vector<Factor> factors_of(const AbelianGroupType& g) {
  std::vector<Factor> out;
  for (const auto& [p, shape] : g.components()) {
    for (const unsigned a : shape.parts()) out.push_back({p, a});
  }
  return out;
}

AbelianGroupType type_of(const std::vector<Factor>& factors) {
  std::map<std::uint64_t, std::vector<unsigned>> parts;
  for (const auto& f : factors) parts[f.p].push_back(f.exponent);
  AbelianGroupType::Components comps;
  for (auto& [p, v] : parts) {
    std::sort(v.begin(), v.end());
    comps.emplace(p, Partition(v));
  }
  return AbelianGroupType(std::move(comps));
}

Outcome relative_orders() {
  std::size_t subgroups_checked = 0;
  std::size_t identities = 0;
  for (std::uint64_t n = 1; n <= 200; ++n) {
    for (const auto& g : group_types_of_order(n)) {
      const ComponentList c(g.cyclic_moduli());
      const std::uint64_t order = c.order();

      // Distinct cyclic subgroups with one generator each; pairs of them give
      // every subgroup generated by at most two elements.
      std::set<std::vector<bool>> seen_cyclic;
      std::vector<ElementTuple> reps;
      for (std::uint64_t i = 0; i < order; ++i) {
        const SubgroupSet h = subgroup_closure(c, {c.element_at(i)});
        std::vector<bool> key(order);
        for (std::uint64_t j = 0; j < order; ++j) key[j] = h.contains_index(j);
        if (seen_cyclic.insert(key).second) reps.push_back(c.element_at(i));
      }
      std::set<std::vector<bool>> seen;
      for (std::size_t a = 0; a < reps.size(); ++a) {
        for (std::size_t b = a; b < reps.size(); ++b) {
          const SubgroupSet h = subgroup_closure(c, {reps[a], reps[b]});
          std::vector<bool> key(order);
          for (std::uint64_t j = 0; j < order; ++j) key[j] = h.contains_index(j);
          if (!seen.insert(key).second) continue;
          ++subgroups_checked;

          std::vector<std::uint64_t> rel(order);
          for (std::uint64_t i = 0; i < order; ++i) {
            rel[i] = relative_order(h, c.element_at(i));
            if (element_order(c, c.element_at(i)) % rel[i] != 0) {
              return {false, "o_H does not divide o(a) in " + format_group_spec(g)};
            }
          }
          const auto members = h.elements();
          for (std::uint64_t i = 0; i < order; ++i) {
            const ElementTuple x = c.element_at(i);
            for (const auto& y : members) {
              ElementTuple s(x.size());
              for (std::size_t k = 0; k < x.size(); ++k) s[k] = (x[k] + y[k]) % c.moduli()[k];
              if (rel[c.index_of(s)] != rel[i]) {
                return {false, "o_H not constant on a coset in " + format_group_spec(g)};
              }
            }
          }
        }
      }

      // Direct-factor subgroups: every nonempty proper subset of cyclic factors.
      const auto factors = factors_of(g);
      const std::size_t r = factors.size();
      for (std::uint64_t mask = 1; r > 1 && mask + 1 < (std::uint64_t{1} << r); ++mask) {
        std::vector<ElementTuple> gens;
        std::vector<Factor> complement;
        for (std::size_t i = 0; i < r; ++i) {
          if (mask & (std::uint64_t{1} << i)) {
            ElementTuple e(r, 0);
            e[i] = 1;
            gens.push_back(e);
          } else {
            complement.push_back(factors[i]);
          }
        }
        const SubgroupSet h = subgroup_closure(c, gens);
        ++identities;
        if (psi_relative(h) != BigNat(h.size()) * psi_abelian(type_of(complement))) {
          return {false, "direct-factor identity fails in " + format_group_spec(g)};
        }
      }
    }
  }
  return {true, std::to_string(subgroups_checked) + " subgroups, " + std::to_string(identities) +
                    " direct-factor identities"};
}

}  // namespace

int main() {
  criterion(1, "example psi(Z2^2)=psi(Z3)=7", 0.001, example_reproduction);
  criterion(2, "divisible example 13^[1,1]*23", 1.0, theorem_seven);
  criterion(3, "formula = oracle, orders <= 2048", 120.0, oracle_equivalence);
  criterion(4, "closed forms 2a-2e", 10.0, closed_forms);
  criterion(5, "lex monotonicity n <= 20", 60.0, monotonicity);
  criterion(6, "no psi collisions up to 100000", 420.0, conjecture);
  criterion(7, "divisibility search", 30.0, divisibility);
  criterion(8, "image: odd, >= 2|G|-1, no 5", 300.0, image);
  criterion(9, "f monotone, degree, monic", 5.0, remarks);
  criterion(10, "relative-order properties", 120.0, relative_orders);
  std::printf("%s: %d criteria failed\n", g_failures == 0 ? "ACCEPTED" : "REJECTED", g_failures);
  return g_failures;
}
