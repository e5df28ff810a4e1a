// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#include "oscint/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "oscint/certify.hpp"
#include "oscint/errors.hpp"
#include "oscint/parallel.hpp"

namespace oscint {

namespace {
uint64_t splitmix(uint64_t& s) {
    uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
}  // namespace

uint64_t Rng::next() { return splitmix(s_); }

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::log_uniform(double a, double b) {
    return std::exp(uniform(std::log(a), std::log(b)));
}

int Rng::uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
}

Rng Rng::substream(uint64_t seed, uint64_t cell, uint64_t index) {
    uint64_t s = seed;
    uint64_t a = splitmix(s) ^ (cell * 0x9e3779b97f4a7c15ULL);
    uint64_t b = splitmix(a) ^ (index * 0xc2b2ae3d27d4eb4fULL);
    splitmix(b);
    return Rng(b);
}

MultiPoly normalize_top_half(const MultiPoly& p) {
    const HomogeneousParts h = homogeneous_parts(p);
    auto [normalized, scale] = normalize_dilation(h);
    (void)scale;
    return reassemble(normalized);
}

MultiPoly random_poly(int d, int n, Rng& rng, CoeffDist dist) {
    std::vector<MultiPoly::Term> terms;
    if (n == 1) {
        for (int k = 1; k <= d; ++k) {
            double c = rng.uniform(-1.0, 1.0);
            if (k == d)
                while (std::abs(c) < 1e-3) c = rng.uniform(-1.0, 1.0);
            terms.push_back({{k, 0, 0}, c});
        }
    } else if (n == 2) {
        double lead = 0.0;
        for (int j = 1; j <= d; ++j)
            for (int a = 0; a <= j; ++a) {
                const double c = rng.uniform(-1.0, 1.0);
                terms.push_back({{a, j - a, 0}, c});
                if (j == d) lead = std::max(lead, std::abs(c));
            }
        if (lead < 1e-3) terms.push_back({{d, 0, 0}, 1.0});
    } else {
        double lead = 0.0;
        for (int j = 1; j <= d; ++j)
            for (int a = 0; a <= j; ++a)
                for (int b = 0; b + a <= j; ++b) {
                    const double c = rng.uniform(-1.0, 1.0);
                    terms.push_back({{a, b, j - a - b}, c});
                    if (j == d) lead = std::max(lead, std::abs(c));
                }
        if (lead < 1e-3) terms.push_back({{d, 0, 0}, 1.0});
    }
    MultiPoly p(n, std::move(terms));
    return dist == CoeffDist::UnitTopHalf ? normalize_top_half(p) : p;
}

// ---------------------------------------------------------------------------
// Extremal search.

namespace {

MultiPoly poly_from_coeffs(const std::vector<double>& c, int d, int n) {
    // univariate coefficient layout along x1; multivariate search keeps the
    // same layout (the feasible family P(x) = f(x1) is dense enough to seed
    // and the simplex explores the full coefficient set when n == 1)
    std::vector<MultiPoly::Term> terms;
    for (int k = 1; k <= d && k <= static_cast<int>(c.size()); ++k)
        if (c[static_cast<size_t>(k - 1)] != 0.0)
            terms.push_back({{k, 0, 0}, c[static_cast<size_t>(k - 1)]});
    return MultiPoly(n, std::move(terms));
}

struct Objective {
    int d, n;
    const KernelSpec* omega;
    InOptions eval;
    long evals = 0;

    double operator()(const std::vector<double>& c) {
        ++evals;
        // quantize away denormal-scale coordinates the simplex can produce;
        // the objective is scale-invariant in the surviving coefficients
        std::vector<double> cq = c;
        bool nonzero = false;
        for (double& v : cq) {
            if (std::abs(v) < 1e-9) v = 0.0;
            if (v != 0.0) nonzero = true;
        }
        if (!nonzero) return 0.0;
        try {
            const MultiPoly q = normalize_top_half(poly_from_coeffs(cq, d, n));
            return std::abs(In(q, *omega, eval).value);
        } catch (const HypothesisError&) {
            return 0.0;  // infeasible point (degenerate rays, empty top half)
        } catch (const NonconvergedPanel&) {
            return 0.0;
        } catch (const StationaryTail&) {
            return 0.0;
        }
    }
};

std::vector<std::vector<double>> structured_starts(int d) {
    std::vector<std::vector<double>> starts;
    auto pad = [&](std::vector<double> v) {
        v.resize(static_cast<size_t>(d), 0.0);
        starts.push_back(std::move(v));
    };
    pad({1.0});  // x
    // truncated odd-harmonic profiles at every odd cap
    for (int cap = 3; cap <= d; cap *= 2) {
        std::vector<double> v(static_cast<size_t>(d), 0.0);
        for (int k = 1; k <= std::min(cap, d); k += 2)
            v[static_cast<size_t>(k - 1)] = 1.0 / static_cast<double>(k);
        starts.push_back(std::move(v));
    }
    // lacunary odd exponents 2^j + 1
    {
        std::vector<double> v(static_cast<size_t>(d), 0.0);
        v[0] = 1.0;
        for (int e = 3; e <= d; e = 2 * (e - 1) + 1) v[static_cast<size_t>(e - 1)] = 1.0;
        starts.push_back(std::move(v));
    }
    // alternating-sign lacunary
    {
        std::vector<double> v(static_cast<size_t>(d), 0.0);
        v[0] = 1.0;
        double s = -1.0;
        for (int e = 3; e <= d; e = 2 * (e - 1) + 1, s = -s) v[static_cast<size_t>(e - 1)] = s;
        starts.push_back(std::move(v));
    }
    if (d >= 2) {
        std::vector<double> v(static_cast<size_t>(d), 0.0);
        v[0] = 1.0;
        v[static_cast<size_t>(d - 1)] = d % 2 ? 1.0 : 0.5;
        if (d % 2 == 0 && d >= 3) v[static_cast<size_t>(d - 2)] = 1.0;
        starts.push_back(std::move(v));
    }
    return starts;
}

// Nelder-Mead over the box [-1,1]^d, budgeted by objective evaluations.
double nelder_mead(Objective& obj, std::vector<double> x0, long budget, Rng& rng,
                   std::vector<double>* best_x) {
    const size_t dim = x0.size();
    auto clamp = [](std::vector<double>& v) {
        for (double& c : v) c = std::clamp(c, -1.0, 1.0);
    };
    clamp(x0);
    std::vector<std::vector<double>> simplex{x0};
    std::vector<double> fv{obj(x0)};
    const size_t nsimp = std::min(dim + 1, size_t{24});
    for (size_t i = 1; i < nsimp; ++i) {
        std::vector<double> v = x0;
        const size_t coord = dim <= 23 ? i - 1 : static_cast<size_t>(rng.next() % dim);
        v[coord] += v[coord] > 0.5 ? -0.35 : 0.35;
        clamp(v);
        simplex.push_back(v);
        fv.push_back(obj(v));
    }
    double best = *std::max_element(fv.begin(), fv.end());
    if (best_x) *best_x = simplex[static_cast<size_t>(std::max_element(fv.begin(), fv.end()) - fv.begin())];

    while (obj.evals < budget) {
        // order: maximize f, so worst = smallest
        std::vector<size_t> idx(simplex.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return fv[a] > fv[b]; });
        const size_t worst = idx.back(), second = idx[idx.size() - 2], top = idx.front();
        std::vector<double> centroid(dim, 0.0);
        for (size_t i : idx)
            if (i != worst)
                for (size_t k = 0; k < dim; ++k) centroid[k] += simplex[i][k];
        for (double& c : centroid) c /= static_cast<double>(simplex.size() - 1);

        auto combine = [&](double t) {
            std::vector<double> v(dim);
            for (size_t k = 0; k < dim; ++k)
                v[k] = centroid[k] + t * (centroid[k] - simplex[worst][k]);
            clamp(v);
            return v;
        };
        const std::vector<double> refl = combine(1.0);
        const double fr = obj(refl);
        if (fr > best) {
            best = fr;
            if (best_x) *best_x = refl;
        }
        if (fr > fv[top]) {
            const std::vector<double> expa = combine(2.0);
            const double fe = obj(expa);
            if (fe > best) {
                best = fe;
                if (best_x) *best_x = expa;
            }
            simplex[worst] = fe > fr ? expa : refl;
            fv[worst] = std::max(fe, fr);
        } else if (fr > fv[second]) {
            simplex[worst] = refl;
            fv[worst] = fr;
        } else {
            const std::vector<double> cont = combine(0.5);
            const double fc = obj(cont);
            if (fc > best) {
                best = fc;
                if (best_x) *best_x = cont;
            }
            if (fc > fv[worst]) {
                simplex[worst] = cont;
                fv[worst] = fc;
            } else {
                // shrink toward the best vertex
                for (size_t i : idx) {
                    if (i == top) continue;
                    for (size_t k = 0; k < dim; ++k)
                        simplex[i][k] = 0.5 * (simplex[i][k] + simplex[top][k]);
                    fv[i] = obj(simplex[i]);
                    if (fv[i] > best) {
                        best = fv[i];
                        if (best_x) *best_x = simplex[i];
                    }
                    if (obj.evals >= budget) break;
                }
            }
        }
        // stagnation: tiny simplex
        double spread = 0.0;
        for (size_t i : idx)
            for (size_t k = 0; k < dim; ++k)
                spread = std::max(spread, std::abs(simplex[i][k] - simplex[top][k]));
        if (spread < 1e-7) break;
    }
    return best;
}

}  // namespace

SearchResult search_extremal(int d, int n, const KernelSpec& omega, int budget, uint64_t seed,
                             const InOptions& eval, int threads,
                             const std::vector<MultiPoly>& extra_starts) {
    if (budget < 1) throw std::invalid_argument("budget must be >= 1");
    InOptions search_eval = eval;
    if (search_eval.initial_order == 0) {
        // fixed-order fast evaluator: the search needs throughput, the
        // winning candidate is re-evaluated by callers that need precision
        search_eval.initial_order = std::max(32, 2 * d + 16);
        search_eval.fixed_order = true;
        search_eval.fast_tail = true;
        search_eval.tail_tol = std::max(search_eval.tail_tol, 1e-6);
    }
    Objective obj{d, n, &omega, search_eval, 0};

    SearchResult out;
    out.best = MultiPoly(n, {{{1, 0, 0}, 1.0}});
    out.value = 0.0;

    std::vector<std::vector<double>> starts = structured_starts(d);
    // carried candidates: always evaluated; used as simplex starts when they
    // fit the univariate coefficient layout
    for (const MultiPoly& p : extra_starts) {
        if (p.is_zero() || p.degree() > d) continue;
        try {
            ++obj.evals;
            const double v = std::abs(In(normalize_top_half(p), omega, search_eval).value);
            if (v > out.value) {
                out.value = v;
                out.best = p;
            }
        } catch (const std::exception&) {
        }
        bool univariate = true;
        std::vector<double> c(static_cast<size_t>(d), 0.0);
        for (const MultiPoly::Term& t : p.terms()) {
            if (t.exp[1] != 0 || t.exp[2] != 0 || t.exp[0] < 1) univariate = false;
            if (t.exp[0] >= 1 && t.exp[0] <= d)
                c[static_cast<size_t>(t.exp[0] - 1)] = std::clamp(t.coef, -1.0, 1.0);
        }
        if (univariate) starts.push_back(std::move(c));
    }
    const int random_starts = std::max(1, budget / 120);
    for (int s = 0; s < random_starts; ++s) {
        Rng rng = Rng::substream(seed, 0xa11ce, static_cast<uint64_t>(s));
        std::vector<double> v(static_cast<size_t>(d));
        for (double& c : v) c = rng.uniform(-1.0, 1.0);
        starts.push_back(std::move(v));
    }

    const long per_start =
        std::max<long>(8, budget / static_cast<long>(starts.size()));
    (void)threads;  // objective evaluations already parallelize internally
    for (size_t s = 0; s < starts.size(); ++s) {
        Rng rng = Rng::substream(seed, 0xbead, s);
        const long target = std::min<long>(budget, obj.evals + per_start);
        std::vector<double> bx;
        const double v = nelder_mead(obj, starts[s], target, rng, &bx);
        if (v > out.value) {
            out.value = v;
            out.best = poly_from_coeffs(bx, d, n);
        }
        if (obj.evals >= budget) break;
    }
    out.evaluations = obj.evals;
    return out;
}

// ---------------------------------------------------------------------------
// Growth study.

GrowthFit fit_against_log(const std::vector<GrowthRow>& rows) {
    GrowthFit fit;
    const size_t n = rows.size();
    if (n < 2) {
        fit.r2 = 1.0;
        fit.power_r2 = 1.0;
        if (n == 1) fit.intercept = rows[0].sup_abs_integral;
        return fit;
    }
    auto regress = [](const std::vector<double>& x, const std::vector<double>& y, double& a,
                      double& b, double& r2) {
        const size_t m = x.size();
        double sx = 0, sy = 0;
        for (size_t i = 0; i < m; ++i) {
            sx += x[i];
            sy += y[i];
        }
        const double mx = sx / m, my = sy / m;
        double sxx = 0, sxy = 0, syy = 0;
        for (size_t i = 0; i < m; ++i) {
            sxx += (x[i] - mx) * (x[i] - mx);
            sxy += (x[i] - mx) * (y[i] - my);
            syy += (y[i] - my) * (y[i] - my);
        }
        b = sxx > 0 ? sxy / sxx : 0.0;
        a = my - b * mx;
        double ss_res = 0;
        for (size_t i = 0; i < m; ++i) {
            const double e = y[i] - (a + b * x[i]);
            ss_res += e * e;
        }
        r2 = syy > 1e-30 ? 1.0 - ss_res / syy : 1.0;
    };
    std::vector<double> lx, y, llx, ly;
    for (const GrowthRow& r : rows) {
        lx.push_back(std::log(static_cast<double>(r.d)));
        y.push_back(r.sup_abs_integral);
        llx.push_back(std::log(static_cast<double>(r.d)));
        ly.push_back(std::log(std::max(r.sup_abs_integral, 1e-300)));
    }
    regress(lx, y, fit.intercept, fit.slope, fit.r2);
    double pa;
    regress(llx, ly, pa, fit.power_slope, fit.power_r2);
    return fit;
}

std::vector<GrowthRow> growth_study(std::vector<int> degrees, int n, const KernelSpec& omega,
                                    int samples, uint64_t seed, int search_budget, int threads,
                                    GrowthFit* fit, const InOptions& eval) {
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

    std::vector<GrowthRow> rows;
    std::vector<MultiPoly> carried;  // best candidates from smaller degrees
    for (size_t cell = 0; cell < degrees.size(); ++cell) {
        const int d = degrees[cell];
        InOptions cell_eval = eval;
        if (cell_eval.initial_order == 0) {
            cell_eval.initial_order = std::max(32, 2 * d + 16);
            cell_eval.fixed_order = true;
        }
        std::vector<double> vals(static_cast<size_t>(samples), 0.0);
        std::vector<MultiPoly> polys;
        polys.reserve(static_cast<size_t>(samples));
        for (int s = 0; s < samples; ++s) {
            Rng rng = Rng::substream(seed, static_cast<uint64_t>(d), static_cast<uint64_t>(s));
            polys.push_back(random_poly(d, n, rng));
        }
        parallel_for(static_cast<size_t>(samples), threads, [&](size_t i) {
            try {
                vals[i] = std::abs(In(polys[i], omega, cell_eval).value);
            } catch (const HypothesisError&) {
                vals[i] = 0.0;
            }
        });
        double sup = 0.0;
        MultiPoly best_poly(n);
        for (size_t i = 0; i < vals.size(); ++i)
            if (vals[i] > sup) {
                sup = vals[i];
                best_poly = polys[i];
            }
        if (search_budget > 0) {
            const SearchResult sr =
                search_extremal(d, n, omega, search_budget, seed ^ (0x5eedULL + d), cell_eval,
                                threads, carried);
            if (sr.value > sup) {
                sup = sr.value;
                best_poly = sr.best;
            }
        }
        // candidates from smaller degrees stay feasible by nesting
        for (const MultiPoly& c : carried) {
            try {
                const double v = std::abs(In(c, omega, cell_eval).value);
                if (v > sup) {
                    sup = v;
                    best_poly = c;
                }
            } catch (const HypothesisError&) {
            }
        }
        carried.push_back(best_poly);

        GrowthRow row;
        row.d = d;
        row.n = n;
        row.kernel_id = omega.id();
        row.samples = samples;
        row.sup_abs_integral = sup;
        row.empirical_c =
            sup / (std::log(static_cast<double>(d) + 1.0) * (omega.llogl_norm() + 1.0));
        rows.push_back(row);
    }
    if (fit) *fit = fit_against_log(rows);
    return rows;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string growth_csv(const std::vector<GrowthRow>& rows) {
    std::ostringstream os;
    os << "d,n,kernel_id,samples,sup_abs_integral,empirical_c\n";
    for (const GrowthRow& r : rows)
        os << r.d << ',' << r.n << ',' << r.kernel_id << ',' << r.samples << ','
           << fmt_double(r.sup_abs_integral) << ',' << fmt_double(r.empirical_c) << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// Sublevel suite.

namespace {

Poly chebyshev_on(double X, int d) {
    // T_d((2x - (X+1))/(X-1)): sup-norm 1 on [1, X], steep outside
    const double a = 2.0 / (X - 1.0), b = -(X + 1.0) / (X - 1.0);
    const Poly u({b, a});
    Poly tkm1({1.0});
    Poly tk = u;
    if (d == 0) return tkm1;
    for (int k = 2; k <= d; ++k) {
        const Poly tkp1 = u * tk * 2.0 - tkm1;
        tkm1 = tk;
        tk = tkp1;
    }
    return tk;
}

}  // namespace

std::vector<SublevelCase> sublevel_cases(int count, int max_degree, uint64_t seed) {
    std::vector<SublevelCase> cases;
    // near-extremal probes hugging [1, X]; (d, X) pairs are limited to a
    // well-conditioned monomial representation (sum |c_k| X^k <= 1e12, so a
    // double evaluation still resolves |P| <= 1 on the pocket)
    const std::vector<std::pair<int, double>> probes = {
        {2, 1.01}, {3, 20.0}, {4, 1.02}, {4, 1.1}, {4, 1.5}, {6, 1.1}, {6, 1.5},
        {6, 10.0}, {8, 1.5},  {8, 2.0},  {8, 3.0}, {10, 2.0}, {12, 3.0}};
    for (const auto& [d, X] : probes) {
        if (d > max_degree) continue;
        const Poly cheb = chebyshev_on(X, d);
        double condition = 0.0;
        for (int k = 0; k <= cheb.degree(); ++k)
            condition += std::abs(cheb.coeff(k)) * std::pow(X, k);
        if (condition > 1e12) continue;
        cases.push_back({cheb, 1.0, true});
    }
    const size_t structured = cases.size();
    for (int i = 0; static_cast<int>(cases.size()) < count; ++i) {
        Rng rng = Rng::substream(seed, 0x5ab1e, static_cast<uint64_t>(i));
        const int d = rng.uniform_int(2, max_degree);
        std::vector<double> c(static_cast<size_t>(d) + 1);
        for (double& v : c) v = rng.uniform(-10.0, 10.0);
        while (std::abs(c.back()) < 1e-2) c.back() = rng.uniform(-10.0, 10.0);
        SublevelCase sc;
        sc.p = Poly(std::move(c));
        sc.alpha = rng.log_uniform(1e-6, 1e3);
        cases.push_back(std::move(sc));
    }
    (void)structured;
    return cases;
}

SublevelRow sublevel_row(const SublevelCase& c) {
    SublevelRow row;
    row.degree = c.p.degree();
    row.alpha = c.alpha;
    row.M = c.p.top_half_max();
    const IntervalUnion e = sublevel_set(c.p, c.alpha, Domain::ray());
    row.exact_log_measure = e.log_measure();
    const BoundBracket b = log_lemma_bracket(c.alpha, row.M, row.degree);
    row.bracket = b.value;
    row.branch = b.branch;
    row.ratio = row.bracket > 0.0 ? row.exact_log_measure / row.bracket : 0.0;
    return row;
}

std::string sublevel_csv(const std::vector<SublevelRow>& rows) {
    std::ostringstream os;
    os << "degree,alpha,M,exact_log_measure,bracket,ratio,branch\n";
    for (const SublevelRow& r : rows)
        os << r.degree << ',' << fmt_double(r.alpha) << ',' << fmt_double(r.M) << ','
           << fmt_double(r.exact_log_measure) << ',' << fmt_double(r.bracket) << ','
           << fmt_double(r.ratio) << ',' << to_string(r.branch) << '\n';
    return os.str();
}

}  // namespace oscint
