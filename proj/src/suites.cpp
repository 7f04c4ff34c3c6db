#include "gfit/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <unordered_map>

#include "gfit/char_series.hpp"
#include "gfit/engel.hpp"
#include "gfit/errors.hpp"
#include "gfit/zipper.hpp"

namespace gfit {

void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)> &body) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::min(jobs, n); ++t)
    pool.emplace_back(worker);
  for (auto &t : pool)
    t.join();
  for (auto &e : errors)
    if (e)
      std::rethrow_exception(e);
}

const std::vector<std::string> &suite_ids() {
  static const std::vector<std::string> ids{"baer", "thm11", "thm12", "thm13", "thmE",
                                            "cor15", "thmJ", "cor19", "lem31", "engine-crosschecks"};
  return ids;
}

std::string suite_statement(const std::string &id) {
  static const std::map<std::string, std::string> statements{
      {"baer", "x lies in F(G) iff E_{G,k}(x) = {1} for some k (Baer)"},
      {"thm11", "F*_h(G)x lies in F(G/F*_h(G)) iff <E_{G,k}(x)> has generalized Fitting height at most h for "
                "some k >= 1"},
      {"thm12", "x lies in R_h(G) iff <E_{G,k}(x)> has insoluble length at most h for some k >= 1"},
      {"thm13", "for A with A^G = G, either Y_G(A) = G or A lies in a unique maximal subgroup of G; the "
                "normal closure descent H_{i+1} = <A^{H_i}> is a subnormal chain with <A^F(A,H)> = F(A,H)"},
      {"thmE", "if [G,alpha] = G then <E_{G,k}(alpha)> = G for all k >= 1"},
      {"cor15", "<E_{G,k}(x)> is subnormal in G for all k, H = K, and the minimum generalized Fitting height "
                "(insoluble length) over k is that of K"},
      {"thmJ", "for an involution alpha with [G,alpha] = G and 2^k = max |g|_2 over inverted g: "
               "E_{G,j}(alpha) = J_G(alpha) for all j > k, and <J_G(alpha)> = G"},
      {"cor19", "for an involution alpha with [G,alpha] = G: [G:F(G)] < |J_G(alpha)|!^4"},
      {"lem31", "for an involution alpha with [G,alpha] = G: the intersection of C_G(alpha)^j over j in "
                "J_G(alpha) equals Z(G) meet C_G(alpha)"},
      {"engine-crosschecks", "independent algorithms agree: F* by F(G)E(G) and by the socle of C_G(F)F/F; "
                             "R_{i+1}(G) as a recurrence; subnormality by descent and by exhaustive chain "
                             "search; known invariants of S_4 and S_5"},
  };
  auto it = statements.find(id);
  if (it == statements.end())
    throw ValidationError("unknown suite \"" + id + "\"");
  return it->second;
}

void validate(const SuiteConfig &config) {
  if (config.suite != "all")
    suite_statement(config.suite);
  if (config.max_order == 0 || config.lattice_max_order == 0 || config.jobs == 0)
    throw ValidationError("caps and job count must be positive");
}

namespace {

std::string desc(const Subgroup &s) { return canonical_description(s); }

std::string yes_no(bool b) { return b ? "true" : "false"; }

struct InvolutionCase {
  AutomorphismMap alpha;
  InvolutionReport report;
  std::vector<ElementSet> sets;
  std::size_t cycle_start = 0;
};

// Everything the suites need about one corpus group, computed once.
class GroupContext {
public:
  GroupContext(const CorpusEntry &entry, const SuiteConfig &config)
      : entry(entry), config(config), gp(entry.group), g(Subgroup::whole(entry.group)) {
    lattice = normal_subgroups(g);
    fitting = fitting_subgroup(g, lattice);
    fstar = gen_fitting_series(g, config.crosschecks);
    h_star = fstar.length;
    lambda = insoluble_length(g);
    for (std::size_t h = 0; h <= h_star; ++h)
      p_terms.push_back(fitting_mod(fstar_term(h)));
    for (std::size_t h = 0; h <= lambda; ++h)
      r_terms.push_back(insoluble_radical(g, h, lattice));
    classes = conjugacy_classes(*gp);
    all_subjects = gp->order() <= config.max_order;
    if (all_subjects) {
      for (Index i = 0; i < gp->order(); ++i)
        subjects.push_back(i);
    } else {
      subjects = classes.representative_indices;
    }
  }

  Subgroup fstar_term(std::size_t h) const { return h == 0 ? Subgroup::trivial(gp) : fstar.terms[h - 1]; }

  // Preimage of F(G/N).
  Subgroup fitting_mod(const Subgroup &n) const {
    if (n.is_trivial())
      return fitting_subgroup(g, lattice);
    QuotientMap q = quotient(g, n);
    return q.preimage_of(fitting_subgroup(Subgroup::whole(q.image())));
  }

  std::string element_text(Index x) const { return format_cycles(gp->element(x)); }

  const std::vector<EngelChain> &chains() {
    if (!chains_) {
      std::vector<EngelChain> out(subjects.size());
      parallel_for(subjects.size(), config.jobs, [&](std::size_t i) {
        out[i] = engel_chain(AutomorphismMap::inner(gp, gp->element(subjects[i])), config.k_cap);
      });
      chains_ = std::move(out);
    }
    return *chains_;
  }

  // Attached automorphisms, then inner automorphisms by class representatives.
  std::vector<AutomorphismMap> actors(bool involutions_only) const {
    std::vector<AutomorphismMap> out;
    for (const auto &a : entry.automorphisms)
      if (!involutions_only || a.order() == 2)
        out.push_back(a);
    for (Index r : classes.representative_indices) {
      if (involutions_only && gp->element_order(r) != 2)
        continue;
      auto a = AutomorphismMap::inner(gp, gp->element(r), "inner " + element_text(r));
      if (!involutions_only || a.order() == 2)
        out.push_back(std::move(a));
    }
    return out;
  }

  // Involutory actors with [G, alpha] = G on a nontrivial group.
  const std::vector<InvolutionCase> &involution_cases() {
    if (!involutions_) {
      std::vector<InvolutionCase> out;
      if (!g.is_trivial()) {
        auto candidates = actors(true);
        std::vector<std::optional<InvolutionCase>> found(candidates.size());
        parallel_for(candidates.size(), config.jobs, [&](std::size_t i) {
          const auto &alpha = candidates[i];
          if (!(commutator_with_map(g, alpha.table()) == g))
            return;
          auto [sets, start] = engel_sets(alpha, config.k_cap);
          found[i] = InvolutionCase{alpha, j_set(alpha), std::move(sets), start};
        });
        for (auto &f : found)
          if (f)
            out.push_back(std::move(*f));
      }
      involutions_ = std::move(out);
    }
    return *involutions_;
  }

  bool subnormal(const Subgroup &s) {
    {
      std::lock_guard lock(mu_);
      if (auto it = subnormal_memo_.find(s.mask()); it != subnormal_memo_.end())
        return it->second;
    }
    bool v = is_subnormal(s, g).subnormal;
    std::lock_guard lock(mu_);
    subnormal_memo_.emplace(s.mask(), v);
    return v;
  }

  GroupSummary summary() const {
    GroupSummary s;
    s.name = entry.name;
    s.provenance = entry.provenance;
    s.degree = gp->degree();
    s.order = gp->order();
    s.fingerprint = gp->fingerprint().hex();
    s.fitting_order = fitting.order();
    s.gen_fitting_order = h_star == 0 ? std::size_t{1} : fstar.terms.front().order();
    s.gen_fitting_height = h_star;
    if (lambda == 0)
      s.fitting_height = fitting_height(g);
    s.insoluble_length = lambda;
    s.subjects = all_subjects ? "all elements" : "class representatives";
    return s;
  }

  const CorpusEntry &entry;
  const SuiteConfig &config;
  GroupPtr gp;
  Subgroup g;
  NormalLattice lattice;
  Subgroup fitting;
  SeriesRecord fstar;
  std::size_t h_star = 0;
  std::size_t lambda = 0;
  std::vector<Subgroup> p_terms; // preimage of F(G/F*_h), h = 0..h*
  std::vector<Subgroup> r_terms; // R_h, h = 0..lambda
  ConjugacyClassTable classes;
  bool all_subjects = true;
  std::vector<Index> subjects;

private:
  std::optional<std::vector<EngelChain>> chains_;
  std::optional<std::vector<InvolutionCase>> involutions_;
  std::mutex mu_;
  std::unordered_map<ElementSet, bool> subnormal_memo_;
};

// Result of one parallel work item, merged in index order.
struct Outcome {
  std::size_t cases = 0;
  std::size_t passes = 0;
  std::vector<Violation> violations;
  Json observations = Json::array();

  void check(bool ok) {
    ++cases;
    if (ok)
      ++passes;
  }
};

void merge(SuiteReport &report, std::vector<Outcome> &outcomes) {
  for (auto &o : outcomes) {
    report.cases += o.cases;
    report.passes += o.passes;
    for (auto &v : o.violations)
      report.violations.push_back(std::move(v));
    for (auto &j : o.observations)
      report.observations.push_back(std::move(j));
  }
}

// Minimum of an invariant over <E_{G,k}> for k >= 1, with the first k
// attaining it.
template <typename F> std::pair<std::size_t, std::size_t> min_over_k(const EngelChain &chain, F invariant) {
  std::size_t best = SIZE_MAX, best_k = 1;
  for (std::size_t k = 1; k < chain.generated.size(); ++k) {
    if (k > 1 && chain.generated[k] == chain.generated[k - 1])
      continue;
    std::size_t v = invariant(chain.generated[k]);
    if (v < best) {
      best = v;
      best_k = k;
    }
  }
  return {best, best_k};
}

// --- suites ------------------------------------------------------------------------

void run_baer(GroupContext &ctx, SuiteReport &report) {
  const Subgroup fit = ctx.config.fault == FaultInjection::trivial_fitting ? Subgroup::trivial(ctx.gp) : ctx.fitting;
  const std::size_t n = ctx.gp->order();
  std::vector<Outcome> out(n);
  parallel_for(n, ctx.config.jobs, [&](std::size_t i) {
    const Index x = static_cast<Index>(i);
    auto [sets, start] = engel_sets(AutomorphismMap::inner(ctx.gp, ctx.gp->element(x)), ctx.config.k_cap);
    std::optional<std::size_t> first;
    for (std::size_t k = 1; k < sets.size() && !first; ++k)
      if (sets[k].count() == 1 && sets[k].test(Group::identity()))
        first = k;
    const bool engel = first.has_value();
    const bool in_f = fit.contains(x);
    out[i].check(engel == in_f);
    if (engel != in_f)
      out[i].violations.push_back(Violation{ctx.entry.name, ctx.element_text(x), first.value_or(sets.size() - 1),
                                            "left Engel iff in F(G)", "E_{G,k}(x) = {1} for some k: " + yes_no(engel),
                                            "x in F(G) = " + desc(fit) + ": " + yes_no(in_f)});
  });
  merge(report, out);
}

void note_subjects(GroupContext &ctx, SuiteReport &report) {
  if (!ctx.all_subjects)
    report.notes.push_back(ctx.entry.name + ": |G| = " + std::to_string(ctx.gp->order()) + " exceeds max-order " +
                           std::to_string(ctx.config.max_order) + "; x ranges over " +
                           std::to_string(ctx.subjects.size()) + " conjugacy class representatives");
}

void run_thm11(GroupContext &ctx, SuiteReport &report) {
  note_subjects(ctx, report);
  const auto &chains = ctx.chains();
  std::vector<Outcome> out(chains.size());
  parallel_for(chains.size(), ctx.config.jobs, [&](std::size_t i) {
    const Index x = ctx.subjects[i];
    auto [m, k] = min_over_k(chains[i], [](const Subgroup &s) { return gen_fitting_height(s); });
    for (std::size_t h = 0; h <= ctx.h_star; ++h) {
      const bool lhs = ctx.p_terms[h].contains(x);
      const bool rhs = m <= h;
      out[i].check(lhs == rhs);
      if (lhs != rhs)
        out[i].violations.push_back(
            Violation{ctx.entry.name, ctx.element_text(x), k, "h = " + std::to_string(h),
                      "x F*_h in F(G/F*_h), preimage " + desc(ctx.p_terms[h]) + ": " + yes_no(lhs),
                      "min_k h*(<E_{G,k}(x)>) = " + std::to_string(m) + " <= h: " + yes_no(rhs)});
    }
  });
  merge(report, out);
}

void run_thm12(GroupContext &ctx, SuiteReport &report) {
  note_subjects(ctx, report);
  const auto &chains = ctx.chains();
  std::vector<Outcome> out(chains.size());
  parallel_for(chains.size(), ctx.config.jobs, [&](std::size_t i) {
    const Index x = ctx.subjects[i];
    auto [m, k] = min_over_k(chains[i], [](const Subgroup &s) { return insoluble_length(s); });
    for (std::size_t h = 0; h <= ctx.lambda; ++h) {
      const bool lhs = ctx.r_terms[h].contains(x);
      const bool rhs = m <= h;
      out[i].check(lhs == rhs);
      if (lhs != rhs)
        out[i].violations.push_back(Violation{ctx.entry.name, ctx.element_text(x), k, "h = " + std::to_string(h),
                                              "x in R_h = " + desc(ctx.r_terms[h]) + ": " + yes_no(lhs),
                                              "min_k lambda(<E_{G,k}(x)>) = " + std::to_string(m) +
                                                  " <= h: " + yes_no(rhs)});
    }
  });
  merge(report, out);
}

void run_cor15(GroupContext &ctx, SuiteReport &report) {
  note_subjects(ctx, report);
  const auto &chains = ctx.chains();
  std::vector<Outcome> out(chains.size());
  parallel_for(chains.size(), ctx.config.jobs, [&](std::size_t i) {
    const Index x = ctx.subjects[i];
    const EngelChain &c = chains[i];
    auto fail = [&](std::optional<std::size_t> k, std::string property, std::string lhs, std::string rhs) {
      out[i].violations.push_back(
          Violation{ctx.entry.name, ctx.element_text(x), k, std::move(property), std::move(lhs), std::move(rhs)});
    };
    bool ok = true;
    for (std::size_t k = 1; k < c.generated.size(); ++k) {
      if (k > 1 && c.generated[k] == c.generated[k - 1])
        continue;
      if (!ctx.subnormal(c.generated[k])) {
        ok = false;
        fail(k, "<E_{G,k}(x)> subnormal in G", desc(c.generated[k]), "not subnormal");
      }
      if (!c.generated[k].contains(c.stable_K)) {
        ok = false;
        fail(k, "K <= <E_{G,k}(x)>", desc(c.stable_K), desc(c.generated[k]));
      }
    }
    if (!(c.descent_H.stable() == c.stable_K)) {
      ok = false;
      fail(std::nullopt, "H = K", desc(c.descent_H.stable()), desc(c.stable_K));
    }
    auto [mh, kh] = min_over_k(c, [](const Subgroup &s) { return gen_fitting_height(s); });
    const std::size_t hk = gen_fitting_height(c.stable_K);
    if (mh != hk) {
      ok = false;
      fail(kh, "min_k h*(<E_{G,k}>) = h*(K)", std::to_string(mh), std::to_string(hk));
    }
    auto [ml, kl] = min_over_k(c, [](const Subgroup &s) { return insoluble_length(s); });
    const std::size_t lk = insoluble_length(c.stable_K);
    if (ml != lk) {
      ok = false;
      fail(kl, "min_k lambda(<E_{G,k}>) = lambda(K)", std::to_string(ml), std::to_string(lk));
    }
    out[i].check(ok);
  });
  merge(report, out);
}

void run_thm_e(GroupContext &ctx, SuiteReport &report) {
  auto actors = ctx.actors(false);
  std::vector<Outcome> out(actors.size());
  parallel_for(actors.size(), ctx.config.jobs, [&](std::size_t i) {
    EngelChain c = engel_chain(actors[i], ctx.config.k_cap);
    if (c.descent_H.terms.size() != 1)
      return; // [G, alpha] != G
    bool ok = true;
    for (std::size_t k = 1; k < c.generated.size(); ++k) {
      if (!c.generated[k].is_whole()) {
        ok = false;
        out[i].violations.push_back(Violation{ctx.entry.name, actors[i].name(), k, "<E_{G,k}(alpha)> = G",
                                              desc(c.generated[k]), desc(ctx.g)});
      }
    }
    out[i].check(ok);
  });
  std::size_t cases = 0;
  for (const auto &o : out)
    cases += o.cases;
  merge(report, out);
  report.observations.push_back(
      Json{{"group", ctx.entry.name}, {"actors", actors.size()}, {"cases", cases}});
}

// Index into `sets` of E_{G,j}, continuing periodically past the end.
std::size_t set_index(std::size_t j, std::size_t size, std::size_t cycle_start) {
  if (j < size)
    return j;
  return cycle_start + (j - cycle_start) % (size - cycle_start);
}

void run_thm_j(GroupContext &ctx, SuiteReport &report) {
  const auto &cases = ctx.involution_cases();
  std::vector<Outcome> out(cases.size());
  parallel_for(cases.size(), ctx.config.jobs, [&](std::size_t i) {
    const auto &c = cases[i];
    const auto &j = c.report.j_set;
    std::size_t k = 0;
    while ((std::size_t{1} << k) < c.report.two_part)
      ++k;
    auto fail = [&](std::optional<std::size_t> kk, std::string property, std::string lhs, std::string rhs) {
      out[i].violations.push_back(
          Violation{ctx.entry.name, c.alpha.name(), kk, std::move(property), std::move(lhs), std::move(rhs)});
    };
    bool ok = true;
    const std::size_t size = c.sets.size();
    const std::size_t period = size - c.cycle_start;
    for (std::size_t jj = k + 1; jj < std::max(k + 1, size) + period; ++jj) {
      const auto &e = c.sets[set_index(jj, size, c.cycle_start)];
      if (e != j) {
        ok = false;
        fail(jj, "E_{G,j}(alpha) = J_G(alpha) for j > k", "|E_{G,j}| = " + std::to_string(e.count()),
             "|J| = " + std::to_string(j.count()));
        break;
      }
    }
    for (std::size_t jj = 1; jj < size; ++jj)
      if (!j.is_subset_of(c.sets[jj])) {
        ok = false;
        fail(jj, "J_G(alpha) inside E_{G,j}(alpha)", "|J| = " + std::to_string(j.count()),
             "|E_{G,j}| = " + std::to_string(c.sets[jj].count()));
        break;
      }
    if (!c.report.generated_j.is_whole()) {
      ok = false;
      fail(std::nullopt, "<J_G(alpha)> = G", desc(c.report.generated_j), desc(ctx.g));
    }
    out[i].check(ok);
    out[i].observations.push_back(Json{{"group", ctx.entry.name},
                                       {"alpha", c.alpha.name()},
                                       {"j_size", j.count()},
                                       {"two_part", c.report.two_part},
                                       {"fixed_order", c.report.fixed_points.order()}});
  });
  merge(report, out);
}

// log(n!) via lgamma; n! itself for n <= 20.
bool index_below_factorial_power(std::size_t index, std::size_t j) {
  if (j <= 7) {
    unsigned long long f = 1;
    for (std::size_t i = 2; i <= j; ++i)
      f *= i;
    unsigned long long p = f * f * f * f; // 5040^4 < 2^64
    return index < p;
  }
  return std::log(static_cast<long double>(index)) < 4.0L * std::lgamma(static_cast<long double>(j) + 1.0L);
}

void run_cor19(GroupContext &ctx, SuiteReport &report) {
  const auto &cases = ctx.involution_cases();
  const std::size_t index = ctx.gp->order() / ctx.fitting.order();
  for (const auto &c : cases) {
    const std::size_t j = c.report.j_set.count();
    const bool ok = index_below_factorial_power(index, j);
    ++report.cases;
    if (ok)
      ++report.passes;
    else
      report.violations.push_back(Violation{ctx.entry.name, c.alpha.name(), std::nullopt,
                                            "[G:F(G)] < |J|!^4", "[G:F(G)] = " + std::to_string(index),
                                            "|J| = " + std::to_string(j)});
    report.observations.push_back(Json{{"group", ctx.entry.name},
                                       {"alpha", c.alpha.name()},
                                       {"index", index},
                                       {"j_size", j},
                                       {"log_index", std::round(std::log(double(index)) * 1e6) / 1e6},
                                       {"four_log_j_factorial",
                                        std::round(4.0 * std::lgamma(double(j) + 1.0) * 1e6) / 1e6}});
  }
}

void run_lem31(GroupContext &ctx, SuiteReport &report) {
  const auto &cases = ctx.involution_cases();
  std::vector<Outcome> out(cases.size());
  parallel_for(cases.size(), ctx.config.jobs, [&](std::size_t i) {
    const auto &c = cases[i];
    CentralizerIntersection ci = centralizer_intersection_check(c.alpha);
    out[i].check(ci.holds);
    if (!ci.holds)
      out[i].violations.push_back(Violation{ctx.entry.name, c.alpha.name(), std::nullopt,
                                            "meet of C_G(alpha)^j = Z(G) meet C_G(alpha)", desc(ci.intersection),
                                            desc(ci.central_fixed)});
  });
  merge(report, out);
}

void run_thm13(GroupContext &ctx, SuiteReport &report) {
  if (ctx.gp->order() > ctx.config.lattice_max_order) {
    report.notes.push_back(ctx.entry.name + ": |G| = " + std::to_string(ctx.gp->order()) +
                           " exceeds lattice-max-order " + std::to_string(ctx.config.lattice_max_order) +
                           "; not enumerated");
    return;
  }
  SubgroupLattice lat = all_subgroups(ctx.gp, LatticeCaps{ctx.config.lattice_max_order, kDefaultLatticeMemberCap});
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < lat.members.size(); ++i)
    if (!lat.members[i].is_whole() && normal_closure(lat.members[i], ctx.g) == ctx.g)
      candidates.push_back(i);
  std::vector<Outcome> out(candidates.size());
  std::vector<ZipperBranch> branches(candidates.size());
  std::vector<char> unique_max(candidates.size());
  parallel_for(candidates.size(), ctx.config.jobs, [&](std::size_t i) {
    const Subgroup &a = lat.members[candidates[i]];
    ZipperCase zc = zipper_case(lat, a);
    branches[i] = zc.branch;
    unique_max[i] = zc.unique_max_element;
    out[i].check(zc.valid());
    if (zc.branch == ZipperBranch::neither)
      out[i].violations.push_back(Violation{ctx.entry.name, desc(a), std::nullopt, "Y = G or unique maximal",
                                            "Y = " + desc(zc.y),
                                            std::to_string(zc.maximal_over_a.size()) + " maximal overgroups"});
    for (const auto &f : zc.failures)
      out[i].violations.push_back(Violation{ctx.entry.name, desc(a), std::nullopt, "descent series", f, ""});
  });
  merge(report, out);
  report.observations.push_back(
      Json{{"group", ctx.entry.name},
           {"subgroups", lat.members.size()},
           {"maximal", lat.maximal.size()},
           {"cases", candidates.size()},
           {"y_equals_g", std::count(branches.begin(), branches.end(), ZipperBranch::y_equals_g)},
           {"unique_maximal", std::count(branches.begin(), branches.end(), ZipperBranch::unique_maximal)},
           {"unique_max_element", std::count(unique_max.begin(), unique_max.end(), 1)}});
}

class CrossChecker {
public:
  CrossChecker(SuiteReport &report, std::string group) : report_(report), group_(std::move(group)) {}

  void check(bool ok, const std::string &property, const std::string &lhs, const std::string &rhs) {
    ++report_.cases;
    if (ok)
      ++report_.passes;
    else
      report_.violations.push_back(Violation{group_, "", std::nullopt, property, lhs, rhs});
  }

private:
  SuiteReport &report_;
  std::string group_;
};

void run_crosschecks(GroupContext &ctx, SuiteReport &report) {
  CrossChecker cc(report, ctx.entry.name);
  const Subgroup &g = ctx.g;
  const Group &grp = *ctx.gp;

  cc.check(ctx.lattice.members.front().is_trivial() && ctx.lattice.members.back().is_whole(),
           "normal lattice spans 1..G", std::to_string(ctx.lattice.members.size()), "");
  std::size_t class_total = 0;
  for (auto s : ctx.classes.class_sizes)
    class_total += s;
  cc.check(class_total == grp.order(), "class sizes sum to |G|", std::to_string(class_total),
           std::to_string(grp.order()));
  cc.check(grp.chain().order() == grp.order(), "stabilizer chain order = |G|", std::to_string(grp.chain().order()),
           std::to_string(grp.order()));
  bool chain_ok = true;
  for (const auto &e : grp.elements())
    chain_ok = chain_ok && grp.chain_contains(e);
  for (Point i = 0; i + 1 < grp.degree(); ++i) {
    std::vector<Point> images(grp.degree());
    for (Point p = 0; p < grp.degree(); ++p)
      images[p] = p;
    std::swap(images[i], images[i + 1]);
    Permutation t(std::move(images));
    chain_ok = chain_ok && grp.chain_contains(t) == grp.contains(t);
  }
  cc.check(chain_ok, "chain membership agrees with element set", "", "");

  // Both F* routes.
  Subgroup fstar = generalized_fitting(g, false);
  Subgroup via_socle = generalized_fitting_via_socle(g);
  cc.check(fstar == via_socle, "F(G)E(G) = socle route", desc(fstar), desc(via_socle));
  cc.check(fstar.contains(centralizer(g, fstar)), "C_G(F*) <= F*", desc(centralizer(g, fstar)), desc(fstar));
  Subgroup e = layer(g);
  cc.check(e.is_trivial() || is_perfect(e), "E(G) perfect or trivial", desc(e), "");
  cc.check(commutator_subgroup(e, ctx.fitting).is_trivial(), "[E(G), F(G)] = 1", desc(e), desc(ctx.fitting));
  cc.check(is_nilpotent(ctx.fitting), "F(G) nilpotent", desc(ctx.fitting), "");
  cc.check((ctx.h_star == 0) == g.is_trivial(), "h* = 0 iff G = 1", std::to_string(ctx.h_star), "");
  cc.check((ctx.lambda == 0) == is_soluble(g), "lambda = 0 iff G soluble", std::to_string(ctx.lambda), "");
  if (ctx.lambda == 0) {
    SeriesRecord fs = fitting_series(g);
    bool same = fs.terms.size() == ctx.fstar.terms.size();
    for (std::size_t i = 0; same && i < fs.terms.size(); ++i)
      same = fs.terms[i] == ctx.fstar.terms[i];
    cc.check(same, "F*_i = F_i for soluble G", std::to_string(ctx.h_star), std::to_string(fs.length));
  }

  // Upper insoluble series: maximality and the quotient recurrence.
  for (std::size_t h = 0; h <= ctx.lambda; ++h) {
    const Subgroup &r = ctx.r_terms[h];
    cc.check(insoluble_length(r) <= h, "lambda(R_h) <= h, h = " + std::to_string(h), desc(r),
             std::to_string(insoluble_length(r)));
    bool maximal = true;
    for (const auto &m : ctx.lattice.members)
      if (m.order() > r.order() && m.contains(r) && insoluble_length(m) <= h)
        maximal = false;
    cc.check(maximal, "R_h maximal with lambda <= h, h = " + std::to_string(h), desc(r), "");
  }
  cc.check(ctx.r_terms.back().is_whole(), "R_lambda = G", desc(ctx.r_terms.back()), desc(g));
  for (std::size_t i = 0; i < ctx.lambda; ++i) {
    const Subgroup &ri = ctx.r_terms[i];
    Subgroup next;
    if (ri.is_trivial()) {
      next = insoluble_radical(g, 1, ctx.lattice);
    } else {
      QuotientMap q = quotient(g, ri);
      next = q.preimage_of(insoluble_radical(Subgroup::whole(q.image()), 1));
    }
    cc.check(next == ctx.r_terms[i + 1], "preimage of R_1(G/R_i) = R_{i+1}, i = " + std::to_string(i), desc(next),
             desc(ctx.r_terms[i + 1]));
  }

  // Subnormality: descent criterion against exhaustive chain search.
  if (grp.order() <= 100) {
    SubgroupLattice lat = all_subgroups(ctx.gp, LatticeCaps{100, kDefaultLatticeMemberCap});
    std::size_t pairs = 0, agree = 0;
    std::optional<std::pair<std::size_t, std::size_t>> first_bad;
    for (std::size_t b = 0; b < lat.members.size(); ++b)
      for (std::size_t a = 0; a <= b; ++a) {
        if (!lat.includes(a, b))
          continue;
        ++pairs;
        if (is_subnormal(lat.members[a], lat.members[b]).subnormal ==
            subnormal_by_search(lat, lat.members[a], lat.members[b]))
          ++agree;
        else if (!first_bad)
          first_bad = std::pair{a, b};
      }
    cc.check(agree == pairs, "subnormal by descent = by chain search",
             first_bad ? desc(lat.members[first_bad->first]) : std::to_string(pairs) + " pairs",
             first_bad ? desc(lat.members[first_bad->second]) : "");
    report.observations.push_back(
        Json{{"group", ctx.entry.name}, {"subgroups", lat.members.size()}, {"subnormal_pairs_checked", pairs}});
  }
}

void run_known_values(SuiteReport &report) {
  CrossChecker cc(report, "known-values");
  auto s4 = builtin("symmetric(4)");
  auto s5 = builtin("symmetric(5)");
  Subgroup g4 = Subgroup::whole(s4.group);
  Subgroup g5 = Subgroup::whole(s5.group);
  Subgroup v4 = Subgroup::generated(
      s4.group, std::vector<Permutation>{parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)});
  Subgroup a5 = Subgroup::generated(
      s5.group, std::vector<Permutation>{parse_cycles("(1 2 3)", 5), parse_cycles("(1 2 3 4 5)", 5)});
  Subgroup f4 = fitting_subgroup(g4);
  cc.check(f4 == v4, "F(S_4) = V_4", desc(f4), desc(v4));
  Subgroup fs5 = generalized_fitting(g5, true);
  cc.check(fs5 == a5, "F*(S_5) = A_5", desc(fs5), desc(a5));
  cc.check(gen_fitting_height(g4) == 3, "h*(S_4) = 3", std::to_string(gen_fitting_height(g4)), "3");
  cc.check(insoluble_length(g5) == 1, "lambda(S_5) = 1", std::to_string(insoluble_length(g5)), "1");
  auto nl = normal_subgroups(g4);
  cc.check(nl.members.size() == 4, "|normal lattice(S_4)| = 4", std::to_string(nl.members.size()), "4");
}

using SuiteFn = void (*)(GroupContext &, SuiteReport &);

SuiteFn suite_function(const std::string &id) {
  static const std::map<std::string, SuiteFn> fns{
      {"baer", run_baer},   {"thm11", run_thm11}, {"thm12", run_thm12},
      {"thm13", run_thm13}, {"thmE", run_thm_e},  {"cor15", run_cor15},
      {"thmJ", run_thm_j},  {"cor19", run_cor19}, {"lem31", run_lem31},
      {"engine-crosschecks", run_crosschecks},
  };
  return fns.at(id);
}

} // namespace

VerdictReport run_suite(const SuiteConfig &config, const NamedCorpus &corpus) {
  validate(config);
  const std::vector<std::string> ids =
      config.suite == "all" ? suite_ids() : std::vector<std::string>{config.suite};

  VerdictReport report;
  report.corpus = corpus.name;
  report.suite = config.suite;
  std::vector<SuiteReport> suites(ids.size());
  std::vector<double> seconds(ids.size(), 0.0);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    suites[i].suite = ids[i];
    suites[i].statement = suite_statement(ids[i]);
  }
  using clock = std::chrono::steady_clock;

  for (const auto &entry : corpus.entries) {
    std::optional<GroupContext> ctx;
    try {
      ctx.emplace(entry, config);
      report.groups.push_back(ctx->summary());
    } catch (const ResourceError &e) {
      GroupSummary s;
      s.name = entry.name;
      s.provenance = entry.provenance;
      s.degree = entry.group->degree();
      s.order = entry.group->order();
      s.fingerprint = entry.group->fingerprint().hex();
      s.subjects = "none";
      report.groups.push_back(s);
      for (auto &sr : suites)
        sr.resource_errors.push_back(ResourceNote{entry.name, e.what(), e.partial()});
      continue;
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
      auto start = clock::now();
      try {
        suite_function(ids[i])(*ctx, suites[i]);
      } catch (const ResourceError &e) {
        suites[i].resource_errors.push_back(ResourceNote{entry.name, e.what(), e.partial()});
      } catch (const ConsistencyError &e) {
        ++suites[i].cases;
        suites[i].violations.push_back(
            Violation{entry.name, "", std::nullopt, "internal consistency", e.what(), ""});
      }
      seconds[i] += std::chrono::duration<double>(clock::now() - start).count();
    }
  }
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == "engine-crosschecks") {
      auto start = clock::now();
      run_known_values(suites[i]);
      seconds[i] += std::chrono::duration<double>(clock::now() - start).count();
    }
    if (config.timing)
      suites[i].seconds = seconds[i];
  }
  report.suites = std::move(suites);
  return report;
}

VerdictReport run_suite(const SuiteConfig &config) {
  validate(config);
  return run_suite(config, load_corpus_selector(config.corpus));
}

Json analyze(const CorpusEntry &entry, const AnalysisOptions &options) {
  const GroupPtr &gp = entry.group;
  Subgroup g = Subgroup::whole(gp);
  CharacteristicProfile p = characteristic_profile(g, options.crosscheck);
  auto series_json = [](const SeriesRecord &s) {
    Json terms = Json::array();
    for (const auto &t : s.terms)
      terms.push_back(desc(t));
    return Json{{"kind", to_string(s.kind)}, {"length", s.length}, {"terms", terms}};
  };
  Json j;
  j["name"] = entry.name;
  j["provenance"] = entry.provenance;
  j["degree"] = gp->degree();
  j["order"] = gp->order();
  j["fingerprint"] = gp->fingerprint().hex();
  Json gens = Json::array();
  for (const auto &s : gp->generators())
    gens.push_back(format_cycles(s));
  j["generators"] = gens;
  j["classes"] = conjugacy_classes(*gp).representatives.size();
  j["normal_subgroups"] = normal_subgroups(g).members.size();
  j["fitting"] = desc(p.fitting);
  j["layer"] = desc(p.layer);
  j["gen_fitting"] = desc(p.gen_fitting);
  j["soluble_radical"] = desc(p.soluble_radical);
  j["odd_core"] = desc(p.odd_core);
  j["fitting_height"] = p.fitting_height ? Json(*p.fitting_height) : Json(nullptr);
  j["gen_fitting_height"] = p.gen_fitting_height;
  j["insoluble_length"] = p.insoluble_length;
  j["derived_series"] = series_json(derived_series(g));
  j["gen_fitting_series"] = series_json(gen_fitting_series(g, options.crosscheck));
  j["upper_insoluble_series"] = series_json(upper_insoluble_series(g, p.insoluble_length));
  Json autos = Json::array();
  for (const auto &a : entry.automorphisms)
    autos.push_back(Json{{"name", a.name()}, {"order", a.order()}, {"fixed_order", a.fixed_subgroup().order()}});
  j["automorphisms"] = autos;
  if (options.engel) {
    Json per = Json::array();
    for (Index r : conjugacy_classes(*gp).representative_indices) {
      auto actor = AutomorphismMap::inner(gp, gp->element(r));
      EngelChain c = engel_chain(actor, options.k_cap);
      auto first = c.first_trivial();
      per.push_back(Json{{"x", format_cycles(gp->element(r))},
                         {"left_engel", first.has_value()},
                         {"first_trivial_k", first ? Json(*first) : Json(nullptr)},
                         {"cycle_start", c.cycle_start},
                         {"cycle_length", c.cycle_length},
                         {"stabilization_k", c.stabilization_index()},
                         {"K", desc(c.stable_K)},
                         {"H", desc(c.descent_H.stable())},
                         {"h_star_K", gen_fitting_height(c.stable_K)},
                         {"lambda_K", insoluble_length(c.stable_K)}});
    }
    j["engel"] = per;
  }
  return j;
}

} // namespace gfit
