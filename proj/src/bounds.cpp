#include "hyperspec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "hyperspec/error.hpp"

namespace hyperspec {

namespace {

std::vector<int> mask_to_set(std::uint32_t mask, int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (mask & (1u << v)) out.push_back(v);
  return out;
}

std::string set_to_string(const Hypergraph& h, const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += h.vertex_id(s[i]);
  }
  return out + "}";
}

std::size_t boundary_size(const std::vector<std::uint32_t>& edge_masks,
                          std::uint32_t s, std::uint32_t full) {
  std::size_t count = 0;
  for (std::uint32_t em : edge_masks)
    if ((em & s) != 0 && (em & (full & ~s)) != 0) ++count;
  return count;
}

std::vector<std::uint32_t> edge_bitmasks(const Hypergraph& h) {
  std::vector<std::uint32_t> masks;
  masks.reserve(h.n_edges());
  for (const auto& e : h.edges()) {
    std::uint32_t m = 0;
    for (int v : e) m |= 1u << v;
    masks.push_back(m);
  }
  return masks;
}

bool all_pairs_adjacent(const Hypergraph& h) {
  const int n = static_cast<int>(h.n_vertices());
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& e : h.edges())
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j)
        adj[e[i]][e[j]] = adj[e[j]][e[i]] = 1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!adj[u][v]) return false;
  return true;
}

}  // namespace

KappaResult exact_kappa_w(const Hypergraph& h, std::size_t limit) {
  const int n = static_cast<int>(h.n_vertices());
  if (static_cast<std::size_t>(n) > limit)
    fail(ErrorCode::TooLarge, "weak connectivity search is gated at |V| <= " +
                                  std::to_string(limit));
  if (all_pairs_adjacent(h))
    fail(ErrorCode::NoWeakCut,
         "every vertex pair is adjacent; no weak vertex cut exists");
  const std::size_t base_components = components(h).size();
  // ascending subset size, lexicographic within a size
  for (int size = 1; size <= n - 2; ++size) {
    std::vector<int> comb(size);
    for (int i = 0; i < size; ++i) comb[i] = i;
    while (true) {
      Hypergraph reduced = weak_delete(h, comb);
      if (components(reduced).size() > base_components)
        return KappaResult{static_cast<std::size_t>(size), comb};
      int i = size - 1;
      while (i >= 0 && comb[i] == n - size + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  fail(ErrorCode::NoWeakCut, "no weak vertex cut found");
}

CutOracles exact_cuts(const Hypergraph& h, std::size_t limit,
                      unsigned threads) {
  const int n = static_cast<int>(h.n_vertices());
  if (static_cast<std::size_t>(n) > limit)
    fail(ErrorCode::TooLarge,
         "cut enumeration is gated at |V| <= " + std::to_string(limit));
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
  const auto masks = edge_bitmasks(h);
  const std::size_t half = static_cast<std::size_t>(n) / 2;

  struct Partial {
    std::size_t mc = 0;
    std::uint32_t mc_mask = 0;
    std::size_t bw = static_cast<std::size_t>(-1);
    std::uint32_t bw_mask = 0;
    double cheeger = 1e300;
    std::uint32_t cheeger_mask = 0;
  };
  auto scan = [&](std::uint32_t lo, std::uint32_t hi, Partial& p) {
    for (std::uint32_t s = lo; s < hi; ++s) {
      std::size_t size = static_cast<std::size_t>(__builtin_popcount(s));
      std::size_t b = boundary_size(masks, s, full);
      if (b > p.mc || (b == p.mc && p.mc_mask == 0)) {
        p.mc = b;
        p.mc_mask = s;
      }
      if (size == half && (b < p.bw || p.bw_mask == 0)) {
        p.bw = b;
        p.bw_mask = s;
      }
      double ratio =
          static_cast<double>(b) /
          static_cast<double>(
              std::min(size, static_cast<std::size_t>(n) - size));
      if (ratio < p.cheeger) {
        p.cheeger = ratio;
        p.cheeger_mask = s;
      }
    }
  };

  unsigned t = std::max(1u, threads);
  std::vector<Partial> parts(t);
  if (t == 1) {
    scan(1u, full, parts[0]);
  } else {
    std::vector<std::thread> pool;
    std::uint32_t total = full - 1;
    for (unsigned i = 0; i < t; ++i) {
      std::uint32_t lo = 1u + total / t * i;
      std::uint32_t hi = (i + 1 == t) ? full : 1u + total / t * (i + 1);
      pool.emplace_back(scan, lo, hi, std::ref(parts[i]));
    }
    for (auto& th : pool) th.join();
  }
  // deterministic merge: prefer the better value, then the smaller mask
  Partial best = parts[0];
  for (unsigned i = 1; i < t; ++i) {
    const Partial& p = parts[i];
    if (p.mc > best.mc || (p.mc == best.mc && p.mc_mask < best.mc_mask))
      best.mc = p.mc, best.mc_mask = p.mc_mask;
    if (p.bw_mask != 0 &&
        (best.bw_mask == 0 || p.bw < best.bw ||
         (p.bw == best.bw && p.bw_mask < best.bw_mask)))
      best.bw = p.bw, best.bw_mask = p.bw_mask;
    if (p.cheeger < best.cheeger ||
        (p.cheeger == best.cheeger && p.cheeger_mask < best.cheeger_mask))
      best.cheeger = p.cheeger, best.cheeger_mask = p.cheeger_mask;
  }
  CutOracles out;
  out.mc = best.mc;
  out.mc_witness = mask_to_set(best.mc_mask, n);
  out.bw = best.bw_mask == 0 ? 0 : best.bw;
  out.bw_witness = mask_to_set(best.bw_mask, n);
  out.cheeger = best.cheeger;
  out.cheeger_witness = mask_to_set(best.cheeger_mask, n);
  return out;
}

namespace {

constexpr double kRelSlack = 1e-9;

BoundRecord make_record(const std::string& name, double lhs, double rhs,
                        const std::string& relation) {
  BoundRecord rec;
  rec.name = name;
  rec.lhs = lhs;
  rec.rhs = rhs;
  rec.relation = relation;
  rec.slack = relation == "<=" ? rhs - lhs : lhs - rhs;
  rec.holds = rec.slack >= -kRelSlack * std::max(1.0, std::fabs(rhs));
  rec.evaluated = true;
  return rec;
}

BoundRecord skipped(const std::string& name, const std::string& why) {
  BoundRecord rec;
  rec.name = name;
  rec.evaluated = false;
  rec.holds = true;
  rec.note = why;
  return rec;
}

}  // namespace

BoundReport audit_bounds(const Hypergraph& h, const WeightAssignment& wa,
                         const Spectrum& laplacian_spectrum,
                         const AuditOptions& opts) {
  if (laplacian_spectrum.kind != OperatorKind::Laplacian ||
      laplacian_spectrum.scheme_tag != wa.fingerprint())
    fail(ErrorCode::SchemeMismatch,
         "audit needs the -L spectrum built from the same weight assignment");
  const int n = static_cast<int>(h.n_vertices());
  const std::size_t m = h.n_edges();
  if (n < 2 || m == 0)
    fail(ErrorCode::NoEdges, "bounds audit needs at least two vertices and one edge");
  BoundReport report;
  const double lambda2 = laplacian_spectrum.eigenvalues[1];
  const double lambdaN = laplacian_spectrum.eigenvalues[n - 1];
  DegreeProfile dp = degree_profile(h, wa);
  auto [rk, cr] = rank_corank(h);

  double dv_min = wa.delta_v[0], dv_max = wa.delta_v[0];
  for (double v : wa.delta_v) {
    dv_min = std::min(dv_min, v);
    dv_max = std::max(dv_max, v);
  }
  double de_min = wa.delta_e[0], de_max = wa.delta_e[0];
  for (double e : wa.delta_e) {
    de_min = std::min(de_min, e);
    de_max = std::max(de_max, e);
  }
  double kbar = 0.0, edge_term_max = 0.0;
  for (std::size_t e = 0; e < m; ++e) {
    double k = static_cast<double>(h.edge(static_cast<int>(e)).size());
    kbar = std::max(kbar, wa.delta_e[e] / (dv_min * k * k));
    edge_term_max = std::max(edge_term_max,
                             k * k / ((k - 1.0) * wa.delta_e[e]));
  }
  double d_max = 0.0;
  for (int v = 0; v < n; ++v) d_max = std::max(d_max, h.degree(v));
  const bool connected = components(h).size() == 1;

  // ---- degree bounds -------------------------------------------------
  double rd_min = dp.r[0] * wa.delta_v[0], rd_max = rd_min;
  for (int v = 0; v < n; ++v) {
    double rv = dp.r[v] * wa.delta_v[v];
    rd_min = std::min(rd_min, rv);
    rd_max = std::max(rd_max, rv);
  }
  const double nn = static_cast<double>(n);
  report.records.push_back(make_record("degree-lower", dv_min * lambda2,
                                       nn / (nn - 1.0) * rd_min, "<="));
  report.records.push_back(make_record(
      "degree-upper", nn / (nn - 1.0) * rd_max, lambdaN * dv_max, "<="));

  // ---- oracles -------------------------------------------------------
  bool oracles_ok = static_cast<std::size_t>(n) <= opts.exact_limit;
  report.exact = oracles_ok;
  if (oracles_ok) {
    report.cuts = exact_cuts(h, opts.exact_limit, opts.threads);
    try {
      report.kappa = exact_kappa_w(h, opts.exact_limit);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NoWeakCut) throw;
    }
  }

  // ---- weak connectivity ---------------------------------------------
  if (n >= 3 && report.kappa) {
    double kw = static_cast<double>(report.kappa->kappa);
    BoundRecord rec = make_record("weak-connectivity", lambda2,
                                  kbar * d_max * kw, "<=");
    rec.witness = set_to_string(h, report.kappa->witness);
    rec.note = "proof-form bound " +
               std::to_string(kbar * (d_max - 1.0) * kw);
    report.records.push_back(std::move(rec));
    if (wa.source == SchemeKind::Banerjee &&
        d_max < static_cast<double>(cr)) {
      report.records.push_back(
          make_record("weak-connectivity-banerjee", lambda2, kw, "<="));
    } else {
      report.records.push_back(skipped(
          "weak-connectivity-banerjee",
          "needs banerjee weights and d_max < cr(G)"));
    }
  } else {
    const char* why = n < 3               ? "needs |V| >= 3"
                      : !report.exact     ? "oracle gated; no exact kappa_w"
                                          : "no weak vertex cut exists";
    report.records.push_back(skipped("weak-connectivity", why));
    report.records.push_back(skipped("weak-connectivity-banerjee", why));
  }

  // ---- boundary bound over subsets ------------------------------------
  {
    const double lower = 4.0 * lambda2 * dv_min / de_max;
    const double upper = lambdaN * dv_max * edge_term_max;
    auto middle = [&](const std::vector<int>& s) {
      std::size_t b = edge_boundary(h, s).size();
      double sz = static_cast<double>(s.size());
      return static_cast<double>(b) * nn / (sz * (nn - sz));
    };
    double min_middle = 1e300, max_middle = -1e300;
    std::vector<int> min_set, max_set;
    bool exhaustive = static_cast<std::size_t>(n) <= opts.exhaustive_limit;
    std::vector<std::vector<int>> subsets;
    if (exhaustive) {
      const std::uint32_t full = (1u << n) - 1u;
      for (std::uint32_t s = 1; s < full; ++s)
        subsets.push_back(mask_to_set(s, n));
    } else {
      // structured sample: singletons, complements, prefixes
      for (int v = 0; v < n; ++v) {
        subsets.push_back({v});
        std::vector<int> rest;
        for (int u = 0; u < n; ++u)
          if (u != v) rest.push_back(u);
        subsets.push_back(std::move(rest));
      }
      for (int p = 2; p < n - 1; ++p) {
        std::vector<int> prefix(p);
        for (int i = 0; i < p; ++i) prefix[i] = i;
        subsets.push_back(std::move(prefix));
      }
    }
    for (const auto& s : subsets) {
      double mid = middle(s);
      if (mid < min_middle) {
        min_middle = mid;
        min_set = s;
      }
      if (mid > max_middle) {
        max_middle = mid;
        max_set = s;
      }
    }
    BoundRecord lowrec =
        make_record("boundary-lower", lower, min_middle, "<=");
    lowrec.witness = set_to_string(h, min_set);
    lowrec.note = exhaustive ? "exhaustive over S" : "sampled S";
    report.records.push_back(std::move(lowrec));
    BoundRecord uprec = make_record("boundary-upper", max_middle, upper, "<=");
    uprec.witness = set_to_string(h, max_set);
    uprec.note = exhaustive ? "exhaustive over S" : "sampled S";
    report.records.push_back(std::move(uprec));

    // m-uniform refinement of the lower side
    if (rk == cr) {
      double md = static_cast<double>(rk);
      double gamma =
          (rk % 2 == 0) ? 1.0 : md * md / (md * md - 1.0);
      BoundRecord grec = make_record("uniform-gamma-lower", lower * gamma,
                                     min_middle, "<=");
      grec.witness = set_to_string(h, min_set);
      report.records.push_back(std::move(grec));
    } else {
      report.records.push_back(
          skipped("uniform-gamma-lower", "hypergraph is not uniform"));
    }
  }

  // ---- max cut / bipartition width / Cheeger --------------------------
  if (report.cuts) {
    const CutOracles& cuts = *report.cuts;
    BoundRecord mcrec = make_record(
        "max-cut", static_cast<double>(cuts.mc),
        nn / 4.0 * lambdaN * dv_max * edge_term_max, "<=");
    mcrec.witness = set_to_string(h, cuts.mc_witness);
    report.records.push_back(std::move(mcrec));

    double alpha_n = (n % 2 == 0) ? 4.0 / nn : 4.0 * nn / (nn * nn - 1.0);
    BoundRecord bwlo = make_record("bipartition-lower",
                                   4.0 * lambda2 * dv_min / de_max,
                                   alpha_n * static_cast<double>(cuts.bw), "<=");
    bwlo.witness = set_to_string(h, cuts.bw_witness);
    report.records.push_back(std::move(bwlo));
    report.records.push_back(
        make_record("bipartition-upper", alpha_n * static_cast<double>(cuts.bw),
                    lambdaN * dv_max * edge_term_max, "<="));

    if (connected) {
      BoundRecord ch = make_record("cheeger-upper", lambda2,
                                   0.5 * de_max / dv_min * cuts.cheeger, "<=");
      ch.witness = set_to_string(h, cuts.cheeger_witness);
      report.records.push_back(std::move(ch));
    } else {
      report.records.push_back(
          skipped("cheeger-upper", "needs a connected hypergraph"));
    }

    bool r_hypothesis = true;
    for (int v = 0; v < n; ++v)
      if (lambda2 > dp.r[v] + 1e-12) r_hypothesis = false;
    if (r_hypothesis) {
      double lhs = std::sqrt(std::max(0.0, lambda2 * (2.0 * dp.r0 - lambda2)));
      double rhs = de_min / (dv_max * static_cast<double>(rk * rk)) *
                   cuts.cheeger;
      report.records.push_back(make_record("cheeger-lower", lhs, rhs, ">="));
    } else {
      report.records.push_back(skipped(
          "cheeger-lower", "hypothesis lambda_2 <= r(v) for all v fails"));
    }

    report.records.push_back(make_record(
        "lambdaN-cheeger", 4.0 * lambdaN * dv_max / de_min, cuts.cheeger,
        ">="));
  } else {
    for (const char* name : {"max-cut", "bipartition-lower",
                             "bipartition-upper", "cheeger-upper",
                             "cheeger-lower", "lambdaN-cheeger"})
      report.records.push_back(skipped(name, "oracle gated at |V| <= " +
                                                 std::to_string(opts.exact_limit)));
  }

  for (const BoundRecord& rec : report.records)
    if (rec.evaluated && !rec.holds) report.all_hold = false;
  return report;
}

}  // namespace hyperspec
