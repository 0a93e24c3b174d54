#include "randmin/verify.hpp"

#include "randmin/closed_form.hpp"
#include "randmin/core.hpp"
#include "randmin/exact_enum.hpp"
#include "randmin/montecarlo.hpp"
#include "randmin/oracle.hpp"
#include "randmin/structure.hpp"

#include <sstream>

namespace randmin {

namespace {

/// Accumulates one property; keeps only the first counterexample.
class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  template <class Describe>
  bool expect(bool ok, Describe&& describe) {
    ++result_.checked;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
    return ok;
  }

  void note(std::string text) { result_.note = std::move(text); }
  PropertyResult done() { return std::move(result_); }

 private:
  PropertyResult result_;
};

std::uint64_t index_of(WordView v, int sigma) {
  std::uint64_t x = 0;
  for (Symbol c : v) x = x * static_cast<std::uint64_t>(sigma) + c;
  return x;
}

/// Calls fn(v) for every v in Sigma^n, in odometer order.
template <class Fn>
void for_each_word(int sigma, int n, std::uint64_t cap, Fn&& fn) {
  const auto total = checked_pow(static_cast<std::uint64_t>(sigma), static_cast<std::uint64_t>(n));
  if (!total || *total > cap) throw CapExceeded("verify: sigma^" + std::to_string(n) + " strings exceed the cap");
  Word v(static_cast<std::size_t>(n));
  for (std::uint64_t i = 0; i < *total; ++i) {
    context_from_index(i, sigma, v);
    fn(static_cast<const Word&>(v));
  }
}

/// Calls fn(params) for every w <= k with k+w <= max_total.
template <class Fn>
void for_each_half_quadrant(int sigma, int max_total, Fn&& fn) {
  for (int total = 2; total <= max_total; ++total) {
    for (int w = 1; 2 * w <= total; ++w) fn(Params::make(sigma, total - w, w));
  }
}

std::string describe(const Params& p, WordView v) { return to_string(p) + " v=" + format_word(v); }

BigRational brute_deviation(const Params& p, const VerifyOptions& opts) {
  const BigRational dr = exact_density_naive(p, {opts.cap, opts.threads});
  const BigRational scale(big_pow(static_cast<std::uint64_t>(p.sigma), static_cast<std::uint64_t>(p.context_length())));
  BigRational dev = (dr - make_rational(2, p.w + 1)) * scale;
  return dev;
}

SuiteReport suite_lemma2(const VerifyOptions& o) {
  const Params p = Params::make(o.sigma, o.k, o.w);
  const EnumOptions eo{o.cap, o.threads};
  SuiteReport r{"lemma2", {}};

  const BigRational naive = exact_density_naive(p, eo);
  const BigRational avg = average_over_all_orders(p, eo);
  Check all_orders("average over all orders equals the gamechanger-probability sum");
  all_orders.expect(avg == naive, [&] { return to_string(p) + " average=" + to_string(avg) + " sum=" + to_string(naive); });
  all_orders.note("DR = " + to_string(naive));
  r.properties.push_back(all_orders.done());

  Check bounds("identity order density within [1/w, 1]");
  const BigRational d = density_of_order(identity_key, p, eo);
  bounds.expect(d >= make_rational(1, p.w) && d <= 1, [&] { return to_string(p) + " density=" + to_string(d); });
  r.properties.push_back(bounds.done());

  Check engines("dict and weiner enumerations equal the naive sum");
  const BigRational dict = exact_density_fast(p, Engine::dict, {o.cap, o.threads});
  const BigRational weiner = exact_density_fast(p, Engine::weiner, {o.cap, o.threads});
  engines.expect(dict == naive && weiner == naive, [&] {
    return to_string(p) + " naive=" + to_string(naive) + " dict=" + to_string(dict) + " weiner=" + to_string(weiner);
  });
  r.properties.push_back(engines.done());
  return r;
}

SuiteReport suite_dev_independence(const VerifyOptions& o) {
  SuiteReport r{"dev-independence", {}};
  Check indep("brute-force Dev at every k >= w equals the closed-form Dev");
  for (int w = 1; 2 * w <= o.max_total; ++w) {
    const BigRational expected = deviation(o.sigma, w);
    for (int k = w; k + w <= o.max_total; ++k) {
      const Params p = Params::make(o.sigma, k, w);
      const BigRational got = brute_deviation(p, o);
      indep.expect(got == expected, [&] { return to_string(p) + " brute=" + to_string(got) + " closed=" + to_string(expected); });
    }
  }
  r.properties.push_back(indep.done());

  Check base("Dev(1) = 0");
  base.expect(deviation(o.sigma, 1) == 0, [&] { return to_string(deviation(o.sigma, 1)); });
  r.properties.push_back(base.done());
  return r;
}

SuiteReport suite_bijection(const VerifyOptions& o) {
  SuiteReport r{"bijection", {}};
  Check image("phi(v) has a repeated (k+1)-mer");
  Check inverse("phi_inverse(phi(v)) = v");
  Check injective("phi is injective");
  Check onto("|Rep(k,w)| = |Rep(k+1,w)|");
  Check prob("gamechanger probability preserved");
  Check run("major run of phi(v): same start and period, one symbol longer");

  for_each_half_quadrant(o.sigma, o.max_total, [&](const Params& p) {
    Params next = p;
    next.k += 1;
    std::vector<char> seen(static_cast<std::size_t>(next.context_count(o.cap)), 0);
    std::uint64_t rep = 0;
    for_each_word(p.sigma, p.context_length(), o.cap, [&](const Word& v) {
      if (!has_repeated_kmer(v, p.k)) return;
      ++rep;
      const Word u = phi(v, p);
      image.expect(has_repeated_kmer(u, next.k), [&] { return describe(p, v) + " phi=" + format_word(u); });
      inverse.expect(phi_inverse(u, p) == v, [&] { return describe(p, v) + " phi=" + format_word(u); });
      char& slot = seen[static_cast<std::size_t>(index_of(u, p.sigma))];
      injective.expect(slot == 0, [&] { return describe(p, v) + " collides at " + format_word(u); });
      slot = 1;
      const BigRational pv = gamechanger_probability(v, p);
      const BigRational pu = gamechanger_probability(u, next);
      prob.expect(pv == pu, [&] { return describe(p, v) + " P=" + to_string(pv) + " P(phi)=" + to_string(pu); });
      const auto mv = find_major_run(v);
      const auto mu = find_major_run(u);
      run.expect(mv && mu && mu->start == mv->start && mu->period == mv->period && mu->end == mv->end + 1,
                 [&] { return describe(p, v) + " phi=" + format_word(u); });
    });
    std::uint64_t rep_next = 0;
    for_each_word(p.sigma, next.context_length(), o.cap, [&](const Word& u) {
      if (has_repeated_kmer(u, next.k)) ++rep_next;
    });
    onto.expect(rep == rep_next, [&] {
      return to_string(p) + " |Rep(k,w)|=" + std::to_string(rep) + " |Rep(k+1,w)|=" + std::to_string(rep_next);
    });
  });
  for (Check* c : {&image, &inverse, &injective, &onto, &prob, &run}) r.properties.push_back(c->done());
  return r;
}

SuiteReport suite_major_run(const VerifyOptions& o) {
  SuiteReport r{"major-run", {}};
  Check unique("at most one major run per string");
  for (int n = 2; n <= o.max_length; ++n) {
    for_each_word(o.sigma, n, o.cap, [&](const Word& v) {
      int majors = 0;
      for (const MajorRun& m : find_runs(v)) {
        if (2 * m.length() >= n + 2 * m.period) ++majors;
      }
      unique.expect(majors <= 1, [&] { return format_word(v) + " has " + std::to_string(majors) + " major runs"; });
    });
  }
  r.properties.push_back(unique.done());

  Check member("repeated k-mer iff a major run of length >= p+k exists");
  Check inside("equal k-mers lie inside the major run");
  Check count("distinct k-mers read off the major run");
  for_each_half_quadrant(o.sigma, o.max_total, [&](const Params& p) {
    const auto uk = static_cast<std::size_t>(p.k);
    for_each_word(p.sigma, p.context_length(), o.cap, [&](const Word& v) {
      const bool repeated = has_repeated_kmer(v, p.k);
      const auto m = find_major_run(v);
      const bool long_run = m && m->length() >= m->period + p.k;
      member.expect(repeated == long_run, [&] { return describe(p, v); });
      if (!repeated || !long_run) return;
      const WordView view(v);
      bool contained = true;
      for (std::size_t i = 0; i + uk <= v.size() && contained; ++i) {
        for (std::size_t j = i + 1; j + uk <= v.size(); ++j) {
          if (!std::equal(view.begin() + static_cast<std::ptrdiff_t>(i), view.begin() + static_cast<std::ptrdiff_t>(i + uk),
                          view.begin() + static_cast<std::ptrdiff_t>(j))) {
            continue;
          }
          if (static_cast<int>(i) < m->start - 1 || static_cast<int>(j + uk) > m->end) {
            contained = false;
            break;
          }
        }
      }
      inside.expect(contained, [&] { return describe(p, v); });
      const int via_run = distinct_kmers_via_run(v, p);
      const int naive = count_distinct_kmers(v, p.k);
      count.expect(via_run == naive, [&] {
        return describe(p, v) + " via run=" + std::to_string(via_run) + " naive=" + std::to_string(naive);
      });
    });
  });
  for (Check* c : {&member, &inside, &count}) r.properties.push_back(c->done());
  return r;
}

SuiteReport suite_delta(const VerifyOptions& o) {
  SuiteReport r{"delta", {}};
  const int w_cap = std::max(o.w_cap, o.w_max + 1);
  const std::vector<BigRational> dev = deviation_series(o.sigma, w_cap);

  Check base("Dev(1) = 0");
  base.expect(dev[0] == 0, [&] { return "Dev(1)=" + to_string(dev[0]); });
  r.properties.push_back(base.done());

  Check tele("Delta(w) = Dev(w+1) - Dev(w)");
  for (int w = 1; w < w_cap; ++w) {
    const BigRational d = delta(o.sigma, w);
    const BigRational diff = dev[static_cast<std::size_t>(w)] - dev[static_cast<std::size_t>(w - 1)];
    tele.expect(d == diff, [&] { return "w=" + std::to_string(w) + " delta=" + to_string(d) + " diff=" + to_string(diff); });
  }
  r.properties.push_back(tele.done());

  Check poly("Delta matches the published polynomials");
  Check positive("Delta > 0");
  std::vector<int> mismatched;
  for (int w = 1; w <= std::min(o.w_max, 10); ++w) {
    const BigRational d = delta(o.sigma, w);
    const BigRational published = published_delta_polynomial(o.sigma, w);
    if (!poly.expect(d == published, [&] {
          return "sigma=" + std::to_string(o.sigma) + " w=" + std::to_string(w) + " delta=" + to_string(d) +
                 " published=" + to_string(published);
        })) {
      mismatched.push_back(w);
    }
    positive.expect(sgn(d) > 0, [&] { return "w=" + std::to_string(w) + " delta=" + to_string(d); });
  }
  if (!mismatched.empty()) {
    std::ostringstream os;
    os << "mismatch at w =";
    for (int w : mismatched) os << ' ' << w;
    poly.note(os.str());
  }
  r.properties.push_back(poly.done());
  r.properties.push_back(positive.done());

  Check prim("Prim sieve equals the Moebius expansion");
  const PrimTable table(o.sigma, w_cap);
  for (int p = 1; p <= w_cap; ++p) {
    const BigInt m = prim_mobius(o.sigma, p);
    prim.expect(table[p] == m, [&] { return "p=" + std::to_string(p) + " sieve=" + to_string(table[p]) + " mobius=" + to_string(m); });
  }
  r.properties.push_back(prim.done());
  return r;
}

SuiteReport suite_monotonic(const VerifyOptions& o) {
  SuiteReport r{"monotonic", {}};
  Check exact("exact DR non-increasing in w");
  BigRational prev;
  for (int w = 1; w <= o.w_max; ++w) {
    const Params p = Params::make(o.sigma, o.k, w);
    const BigRational dr = exact_density_fast(p, Engine::dict, {o.cap, o.threads});
    if (w > 1) {
      exact.expect(dr <= prev, [&] { return to_string(p) + " DR=" + to_string(dr) + " previous=" + to_string(prev); });
    }
    prev = dr;
  }
  r.properties.push_back(exact.done());

  Check subset("marked positions at w+1 are a subset of those at w");
  for (int w = 1; w <= o.w_max; ++w) {
    const Params p = Params::make(o.sigma, o.k, w);
    const SubsetReport rep = check_markup_monotone(p, o.n, o.trials, o.seed, o.threads);
    for (int t = 0; t < rep.trials; ++t) {
      subset.expect(t != rep.first_violation, [&] {
        return to_string(p) + " seed=" + std::to_string(o.seed) + " trial=" + std::to_string(t) + " n=" + std::to_string(o.n);
      });
    }
  }
  r.properties.push_back(subset.done());
  return r;
}

}  // namespace

bool SuiteReport::passed() const {
  for (const auto& p : properties) {
    if (!p.passed) return false;
  }
  return true;
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json props = nlohmann::json::array();
  for (const auto& p : properties) {
    nlohmann::json j{{"name", p.name}, {"passed", p.passed}, {"checked", p.checked}};
    if (!p.counterexample.empty()) j["counterexample"] = p.counterexample;
    if (!p.note.empty()) j["note"] = p.note;
    props.push_back(std::move(j));
  }
  return {{"suite", suite}, {"passed", passed()}, {"properties", std::move(props)}};
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << ": " << (passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& p : properties) {
    os << "  [" << (p.passed ? "pass" : "FAIL") << "] " << p.name << " (" << p.checked << " checked)";
    if (!p.note.empty()) os << "; " << p.note;
    os << '\n';
    if (!p.counterexample.empty()) os << "    counterexample: " << p.counterexample << '\n';
  }
  return os.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma2", "dev-independence", "bijection", "major-run", "delta", "monotonic"};
  return names;
}

SuiteReport run_suite(std::string_view suite, const VerifyOptions& opts) {
  if (opts.sigma < 2 || opts.sigma > kMaxSigma) throw InvalidParams("verify: sigma must be in [2, 255]");
  if (opts.max_total < 2 || opts.max_length < 2 || opts.w_max < 1 || opts.w_cap < 2 || opts.trials < 0) {
    throw InvalidParams("verify: size limits out of range");
  }
  if (suite == "lemma2") return suite_lemma2(opts);
  if (suite == "dev-independence") return suite_dev_independence(opts);
  if (suite == "bijection") return suite_bijection(opts);
  if (suite == "major-run") return suite_major_run(opts);
  if (suite == "delta") return suite_delta(opts);
  if (suite == "monotonic") return suite_monotonic(opts);
  throw InvalidParams("unknown suite '" + std::string(suite) + "'");
}

}  // namespace randmin
