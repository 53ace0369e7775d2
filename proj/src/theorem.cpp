#include "formationlab/theorem.hpp"

#include <chrono>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "formationlab/error.hpp"
#include "formationlab/numbers.hpp"
#include "formationlab/predicates.hpp"

namespace formationlab {

  namespace {
    Permutation product(Permutation const& a, Permutation const& b, Convention conv) {
      return conv == Convention::LeftToRight ? compose(a, b) : compose(b, a);
    }

    Permutation bracket(Permutation const& a, Permutation const& b, Convention conv) {
      return product(product(inverse(a), inverse(b), conv), product(a, b, conv), conv);
    }

    Elem product(GroupTable const& t, Elem a, Elem b, Convention conv) {
      return conv == Convention::LeftToRight ? t.mul(a, b) : t.mul(b, a);
    }

    Elem bracket(GroupTable const& t, Elem a, Elem b, Convention conv) {
      return product(t,
                     product(t, t.inv(a), t.inv(b), conv),
                     product(t, a, b, conv),
                     conv);
    }

    struct PairHash {
      std::size_t operator()(std::pair<Permutation, std::uint64_t> const& p) const noexcept {
        return p.first.hash() ^ (p.second * 0x9e3779b97f4a7c15ull);
      }
    };

    template <typename F>
    PredicateResult timed(F&& f) {
      auto const      start = std::chrono::steady_clock::now();
      PredicateResult r     = f();
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                      .count();
      return r;
    }

    PredicateResult fail(std::string witness) {
      return {false, std::move(witness), 0.0};
    }
  }  // namespace

  BrandlState brandl_start(Permutation const& x, Permutation const& y, Convention conv) {
    return {bracket(x, y, conv), 1, y};
  }

  BrandlState brandl_next(BrandlState const& s, Convention conv) {
    if (s.value.degree() != s.y.degree()) {
      throw InputError("brandl_next: degree mismatch");
    }
    // powers of a single element do not depend on the product convention
    Permutation const head = power(s.value, -static_cast<std::int64_t>(s.step));
    return {product(head, bracket(s.value, s.y, conv), conv), s.step + 1, s.y};
  }

  BrandlTrace brandl_terminates(Permutation const& x,
                                Permutation const& y,
                                std::uint64_t      exponent,
                                Convention         conv,
                                std::uint64_t      max_steps) {
    if (x.degree() != y.degree()) {
      throw InputError("brandl_terminates: degree mismatch");
    }
    if (exponent == 0) {
      throw InputError("brandl_terminates: exponent must be positive");
    }
    BrandlTrace trace;
    std::unordered_map<std::pair<Permutation, std::uint64_t>, std::uint64_t, PairHash>
                seen;
    BrandlState s = brandl_start(x, y, conv);
    while (true) {
      trace.steps.push_back(s.value);
      if (s.value.is_identity()) {
        trace.terminated = true;
        trace.k_final    = s.step;
        return trace;
      }
      auto [it, fresh] = seen.emplace(std::make_pair(s.value, s.step % exponent), s.step);
      if (!fresh) {
        trace.cycle_detected = true;
        trace.cycle_length   = s.step - it->second;
        return trace;
      }
      if (s.step >= max_steps) {
        throw InternalError("Brandl iteration exceeded " + std::to_string(max_steps)
                            + " steps without repeating a state");
      }
      s = brandl_next(s, conv);
    }
  }

  BrandlOutcome brandl_outcome(GroupTable const& t,
                               Elem              x,
                               Elem              y,
                               std::uint64_t     exponent,
                               Convention        conv) {
    std::unordered_map<std::uint64_t, std::uint64_t> seen;
    Elem          value = bracket(t, x, y, conv);
    std::uint64_t step  = 1;
    // at most |G| * e distinct states
    std::uint64_t const cap = static_cast<std::uint64_t>(t.order()) * exponent + 1;
    while (true) {
      if (value == 0) {
        return {true, step, 0};
      }
      auto const key = static_cast<std::uint64_t>(value) * exponent + step % exponent;
      auto [it, fresh] = seen.emplace(key, step);
      if (!fresh) {
        return {false, 0, step - it->second};
      }
      if (step > cap) {
        throw InternalError("Brandl iteration exceeded the state-space bound");
      }
      Elem const head = t.pow(value, -static_cast<std::int64_t>(step));
      value           = product(t, head, bracket(t, value, y, conv), conv);
      ++step;
    }
  }

  PSubnormality is_p_subnormal(Lattice const& lat, Subgroup const& h) {
    PSubnormality result;
    auto          chain = prime_index_chain(lat, lat.id_of(h));
    if (!chain) {
      return result;
    }
    result.value = true;
    result.chain = *chain;
    for (std::size_t i = 1; i < chain->size(); ++i) {
      result.indices.push_back(lat.at((*chain)[i]).order() / lat.at((*chain)[i - 1]).order());
    }
    return result;
  }

  PredicateResult condition_X(Lattice const& lat) {
    for (std::size_t id = 1; id < lat.size(); ++id) {
      Subgroup const& s = lat.at(id);
      if (is_primary(s) && is_cyclic(s) && !p_reachable(lat, id)) {
        return fail("cyclic " + std::to_string(s.order()) + "-subgroup " + describe(s)
                    + " is not P-subnormal");
      }
    }
    return {};
  }

  PredicateResult condition_B_subgroups(Lattice const& lat) {
    for (std::size_t id = 0; id < lat.size(); ++id) {
      Subgroup const& h = lat.at(id);
      if (!is_nilpotent(commutator_subgroup(h, h))) {
        continue;
      }
      if (!is_supersoluble(lat.restrict(id))) {
        return fail("subgroup " + describe(h) + " of order " + std::to_string(h.order())
                    + " has nilpotent derived subgroup but is not supersoluble");
      }
    }
    return {};
  }

  PredicateResult condition_B_law(Subgroup const& g, Convention conv) {
    GroupTable const&   t   = g.parent();
    std::uint64_t const e   = exponent(g);
    auto const          els = g.elements();
    for (Elem x : els) {
      for (Elem y : els) {
        auto const out = brandl_outcome(t, x, y, e, conv);
        if (!out.terminated) {
          return fail("x=" + format_cycles(t.element(x)) + " y=" + format_cycles(t.element(y))
                      + " cycle length " + std::to_string(out.cycle_length));
        }
      }
    }
    return {};
  }

  PredicateResult condition_LF_f(Lattice const& lat) {
    Subgroup const& g = lat.top();
    for (auto const& f : chief_series(lat)) {
      Subgroup const c = centralizer_mod(g, f.upper, f.lower);
      Quotient const q = quotient_by(g, c);
      Subgroup const a = whole_group(q.group);
      for (auto p : f.primes) {
        if (!in_f_p(a, p)) {
          std::ostringstream w;
          w << "chief factor " << describe(f.upper) << "/" << describe(f.lower) << " of order "
            << f.order << ", p=" << p << ": G/C_G(H/K) has order " << a.order()
            << " and exponent " << exponent(a);
          return fail(w.str());
        }
      }
    }
    return {};
  }

  PredicateResult supersoluble_with_witness(Lattice const& lat) {
    if (is_supersoluble(lat)) {
      return {};
    }
    for (auto const& f : chief_series(lat)) {
      if (!is_prime(f.order)) {
        return fail("chief factor " + describe(f.upper) + "/" + describe(f.lower)
                    + " of order " + std::to_string(f.order));
      }
    }
    return fail("no normal prime-index chain");
  }

  PredicateResult sylow_tower_with_witness(Lattice const& lat) {
    if (has_sylow_tower_sst(lat)) {
      return {};
    }
    // walk the tower again to name the failing prime
    Lattice current = lat;
    while (current.top().order() > 1) {
      auto const     p     = prime_divisors(current.top().order()).back();
      Subgroup const sylow = sylow_subgroup(current, p);
      if (!is_normal(current, sylow)) {
        return fail("Sylow " + std::to_string(p) + "-subgroup is not normal in a section of order "
                    + std::to_string(current.top().order()));
      }
      current = Lattice::build(quotient_by(current.top(), sylow).group);
    }
    throw InternalError("Sylow tower walk disagrees with has_sylow_tower_sst");
  }

  ClassReport classify(GroupPtr const& g, std::string name, ClassifyOptions const& opts) {
    ClassReport r;
    r.name   = std::move(name);
    r.degree = g->degree();
    r.order  = g->order();

    auto const start = std::chrono::steady_clock::now();
    std::optional<Lattice> built;
    try {
      built.emplace(Lattice::build(g, opts.lattice));
    } catch (ResourceError const& e) {
      throw ResourceError(r.name + ": " + e.what());
    }
    Lattice const& lat = *built;
    r.lattice_seconds
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    r.supersoluble = timed([&] { return supersoluble_with_witness(lat); });
    r.x            = timed([&] { return condition_X(lat); });
    r.b_subgroups  = timed([&] { return condition_B_subgroups(lat); });
    r.b_law        = timed([&] { return condition_B_law(lat.top(), opts.convention); });
    r.lf_f         = timed([&] { return condition_LF_f(lat); });
    r.sylow_tower  = timed([&] { return sylow_tower_with_witness(lat); });
    return r;
  }

}  // namespace formationlab
