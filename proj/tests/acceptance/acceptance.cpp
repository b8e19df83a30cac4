// Acceptance suite. Each criterion runs under its own wall-clock budget and
// prints one PASS/FAIL line; the exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "../unit/bounds_reference.hpp"
#include "kronkit/oracle.hpp"
#include "kronkit/search.hpp"

using namespace kronkit;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

using Clock = std::chrono::steady_clock;

bool run_criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (out.ok && secs >= limit_s) {
    out.ok = false;
    std::ostringstream os;
    os << "over time budget of " << limit_s << " s";
    out.detail = os.str();
  }
  std::printf("criterion %d %-28s %s  (%.3f s / %.3g s)%s%s\n", id, name, out.ok ? "PASS" : "FAIL", secs, limit_s,
              out.detail.empty() ? "" : "  ", out.detail.c_str());
  std::fflush(stdout);
  return out.ok;
}

MembershipCertificate basis_sum(int m, std::initializer_list<std::array<int, 3>> idx) {
  MembershipCertificate c(m);
  for (const auto& i : idx) c.set(i[0], i[1], i[2], {Rational(1), Rational(0)});
  return c;
}

std::string key(const HyperplaneCandidate& hz) {
  std::ostringstream os;
  for (const auto& comp : hz.H) {
    for (std::size_t i = 0; i < comp.size(); ++i) os << (i ? "," : "") << comp[i];
    os << ';';
  }
  os << hz.z;
  return os.str();
}

std::vector<YoungDiagram> two_row(int k) {
  std::vector<YoungDiagram> out;
  for (const auto& d : partitions(k)) {
    if (d.height() <= 2) out.push_back(d);
  }
  return out;
}

// ---------------------------------------------------------------------------

Outcome conp_end_to_end() {
  Outcome o;
  const auto outside = kt::instance({2}, {2}, {1, 1}, 2);
  const RessayreCertificate cert{kt::standard_hz(), kt::ints({1, 0, 0})};
  o.require(verify_nonmembership(outside, cert) == Verdict::accept(Reason::Separated), "base certificate not accepted");

  auto rank_broken = cert;
  rank_broken.hz.z = 0;
  o.require(verify_nonmembership(outside, rank_broken) == Verdict::reject(Reason::NotAdmissible), "rank-breaking z");

  RessayreCertificate trace_broken{kt::hyperplane({1, -1}, {1, -1}, {-1, 1}, 1), kt::ints({1, 0, 0})};
  o.require(verify_nonmembership(outside, trace_broken) == Verdict::reject(Reason::TraceMismatch), "trace-breaking H");

  auto vanishing = cert;
  vanishing.p = kt::ints({0, 5, 7});
  o.require(verify_nonmembership(outside, vanishing) == Verdict::reject(Reason::DeterminantVanishes),
            "vanishing determinant");

  const auto inside = kt::instance({1, 1}, {1, 1}, {1, 1}, 2);
  o.require(verify_nonmembership(inside, cert) == Verdict::reject(Reason::InequalityNotViolated),
            "instance satisfying the inequality");
  return o;
}

Outcome np_end_to_end() {
  Outcome o;
  const auto ghz_inst = kt::instance({1, 1}, {1, 1}, {1, 1}, 2);
  const auto ghz = check_membership(ghz_inst, basis_sum(2, {{1, 1, 1}, {2, 2, 2}}));
  o.require(ghz.verdict.accepted(), "GHZ rejected");
  o.require(ghz.gap2 == Rational(0), "GHZ gap^2 = " + ghz.gap2.str());
  Rational t2(1);
  for (int i = 0; i < 52; ++i) t2 /= Rational(2);
  o.require(ghz.threshold2 == t2, "threshold^2 = " + ghz.threshold2.str());

  const auto bell_inst = kt::instance({1, 1}, {1, 1}, {2}, 2);
  o.require(verify_membership(bell_inst, basis_sum(2, {{1, 1, 1}, {2, 2, 1}})).accepted(), "Bell x e1 rejected");
  return o;
}

Outcome soundness() {
  Outcome o;
  const auto outside = kt::instance({2}, {2}, {1, 1}, 2);
  std::mt19937_64 rng(2024);
  int accepted = 0;
  for (int t = 0; t < 1000; ++t) {
    MembershipCertificate c(2);
    bool any = false;
    while (!any) {
      for (int a = 1; a <= 2; ++a) {
        for (int b = 1; b <= 2; ++b) {
          for (int cc = 1; cc <= 2; ++cc) {
            GaussianRational g{kt::random_rational(rng), kt::random_rational(rng)};
            any = any || !g.is_zero();
            c.set(a, b, cc, g);
          }
        }
      }
    }
    if (verify_membership(outside, c).accepted()) ++accepted;
  }
  o.require(accepted == 0, std::to_string(accepted) + " random certificates accepted");
  return o;
}

Outcome facet_discovery() {
  Outcome o;
  const auto fs = reduce_irredundant(enumerate_ressayre(2));
  std::set<std::string> got;
  for (const auto& e : fs.nontrivial) got.insert(key(e.hz));
  const std::set<std::string> want{"-1,1;-1,1;1,-1;-1", "-1,1;1,-1;-1,1;-1", "1,-1;-1,1;-1,1;-1"};
  o.require(got == want, std::to_string(fs.nontrivial.size()) + " facets, not the expected orbit");

  double worst = 0;
  for (const auto& r : sample_spectra(2, 10'000, 7)) {
    for (const auto& e : fs.nontrivial) worst = std::min(worst, slack(e.hz, r));
  }
  o.require(worst >= -1e-9, "sampled spectrum violates a facet by " + std::to_string(-worst));

  // Interior points lambda/12 strictly inside the chamber and every facet.
  const int k = 12;
  std::vector<KronInstance> interior;
  const auto ds = two_row(k);
  for (const auto& a : ds) {
    for (const auto& b : ds) {
      for (const auto& c : ds) {
        if (a.height() < 2 || b.height() < 2 || c.height() < 2) continue;
        if (a.rows()[0] == a.rows()[1] || b.rows()[0] == b.rows()[1] || c.rows()[0] == c.rows()[1]) continue;
        const auto inst = make_instance(a, b, c, k);
        bool strict = true;
        for (const auto& e : fs.nontrivial) strict = strict && scaled_slack(e.hz, inst) > 0;
        if (strict) interior.push_back(inst);
      }
    }
  }
  o.require(interior.size() >= 50, "only " + std::to_string(interior.size()) + " interior grid points");
  int certified = 0;
  for (std::size_t i = 0; i < interior.size() && i < 50; ++i) {
    WitnessOptions opts;
    opts.seed = i;
    const auto w = search_witness(interior[i], opts);
    if (w && verify_membership(interior[i], *w).accepted()) ++certified;
  }
  o.require(certified == 50, std::to_string(certified) + "/50 interior points certified");
  return o;
}

Outcome oracle_consistency() {
  Outcome o;
  const auto fs = enumerate_ressayre(2);
  CharacterEvaluator chars;
  for (int k = 1; k <= 8; ++k) {
    const auto ds = two_row(k);
    for (const auto& a : ds) {
      for (const auto& b : ds) {
        for (const auto& c : ds) {
          if (kron_coeff(a, b, c, chars) == 0) continue;
          const auto inst = make_instance(a, b, c, k, 2);
          for (const auto& e : fs.nontrivial) {
            o.require(scaled_slack(e.hz, inst) >= 0, "g > 0 point violates " + key(e.hz));
          }
        }
      }
    }
  }
  for (int k = 1; k <= 6; ++k) {
    const auto ps = partitions(k);
    const auto trivial = parse_young({k});
    for (const auto& a : ps) {
      for (const auto& b : ps) {
        o.require(kron_coeff(a, b, trivial, chars) == (a == b ? 1 : 0), "g(a,b,(k)) != delta");
        for (const auto& c : ps) {
          const Integer g = kron_coeff(a, b, c, chars);
          const bool sym = kron_coeff(a, c, b, chars) == g && kron_coeff(b, a, c, chars) == g &&
                           kron_coeff(b, c, a, chars) == g && kron_coeff(c, a, b, chars) == g &&
                           kron_coeff(c, b, a, chars) == g;
          o.require(sym, "asymmetric at " + a.str() + " " + b.str() + " " + c.str());
        }
      }
    }
  }
  return o;
}

Outcome non_saturation() {
  Outcome o;
  const auto pair = parse_young({1, 1});
  o.require(kron_coeff(pair, pair, pair) == 0, "g((1,1),(1,1),(1,1)) != 0");
  const auto inst = kt::instance({1, 1}, {1, 1}, {1, 1}, 2);
  o.require(verify_membership(inst, basis_sum(2, {{1, 1, 1}, {2, 2, 2}})).accepted(), "GHZ certificate rejected");
  const auto l = semigroup_member(inst, 4);
  o.require(l.has_value(), "no stretching factor up to 4");
  return o;
}

Outcome bound_suite() {
  using namespace kt::bounds;
  Outcome o;
  for (int m = 1; m <= 8; ++m) {
    o.require(siegel_bound(m).get_str() == ref_siegel(m).str(), "siegel_bound m=" + std::to_string(m));
    for (int k : k_values()) {
      const std::string tag = " m=" + std::to_string(m) + " k=" + std::to_string(k);
      const Rational gap = min_gap(m, k);
      o.require(gap.numerator() == 1 && gap.denominator().get_str() == ref_gap_den(m, k).str(), "min_gap" + tag);
      const Rational t2 = accept_threshold2(m, k);
      o.require(t2.numerator() == 1 && t2.denominator().get_str() == ref_threshold_den(m, k).str(),
                "accept_threshold2" + tag);
      const long b = required_bits(m, k);
      o.require(b == ref_required_bits(m, k) && float_condition(m, k, b) && !float_condition(m, k, b - 1),
                "required_bits" + tag);
    }
  }
  std::mt19937_64 rng(7);
  for (int m : {2, 3}) {
    const double dim = m * m * m;
    for (long b : {8L, 16L, 24L}) {
      const double projector_bound = 5.0 * std::pow(dim, 0.25) * std::pow(2.0, -b / 2.0);
      const double marginal_bound = 5.0 * std::pow(m, 0.75) * std::pow(2.0, -b / 2.0);
      for (int t = 0; t < 100; ++t) {
        const auto e = measure(kt::random_unit_vector(rng, static_cast<std::size_t>(dim)), m, b);
        const std::string tag = " m=" + std::to_string(m) + " b=" + std::to_string(b);
        o.require(e.projector_trace_norm <= projector_bound, "projector truncation" + tag);
        o.require(e.worst_marginal_frobenius <= marginal_bound, "marginal truncation" + tag);
      }
    }
  }
  return o;
}

Outcome schwartz_zippel() {
  Outcome o;
  for (int m : {2, 3}) {
    const auto fs = enumerate_ressayre(m);
    o.require(!fs.nontrivial.empty(), "no elements at m=" + std::to_string(m));
    for (const auto& e : fs.nontrivial) {
      const auto d = build_det_matrix(e.hz, m);
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto p = find_point(d, m, seed, 10);
        o.require(p.has_value() && eval_determinant(d, *p) != 0,
                  "find_point failed for " + key(e.hz) + " seed " + std::to_string(seed));
      }
    }
    std::printf("  m=%d: %zu Ressayre elements\n", m, fs.nontrivial.size());
  }
  return o;
}

}  // namespace

int main() {
  bool all = true;
  all &= run_criterion(1, "coNP end-to-end", 0.1, conp_end_to_end);
  all &= run_criterion(2, "NP end-to-end", 0.1, np_end_to_end);
  all &= run_criterion(3, "verifier soundness", 60, soundness);
  all &= run_criterion(4, "facet discovery", 300, facet_discovery);
  all &= run_criterion(5, "oracle consistency", 300, oracle_consistency);
  all &= run_criterion(6, "non-saturation", 1, non_saturation);
  all &= run_criterion(7, "bound suite", 60, bound_suite);
  all &= run_criterion(8, "Schwartz-Zippel", 600, schwartz_zippel);
  std::printf("%s\n", all ? "ALL PASS" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
