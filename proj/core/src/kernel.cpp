// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#include "oscint/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "oscint/detail/gauss.hpp"

namespace oscint {

namespace {

// real spherical harmonics (unnormalized Cartesian forms), l <= 3
double harmonic(int l, int m, const Vec3& v) {
    const double x = v[0], y = v[1], z = v[2];
    switch (l) {
        case 1:
            if (m == -1) return y;
            if (m == 0) return z;
            if (m == 1) return x;
            break;
        case 2:
            if (m == -2) return x * y;
            if (m == -1) return y * z;
            if (m == 0) return 3.0 * z * z - 1.0;
            if (m == 1) return z * x;
            if (m == 2) return x * x - y * y;
            break;
        case 3:
            if (m == -3) return y * (3.0 * x * x - y * y);
            if (m == -2) return x * y * z;
            if (m == -1) return y * (5.0 * z * z - 1.0);
            if (m == 0) return z * (5.0 * z * z - 3.0);
            if (m == 1) return x * (5.0 * z * z - 1.0);
            if (m == 2) return z * (x * x - y * y);
            if (m == 3) return x * (x * x - 3.0 * y * y);
            break;
        default:
            break;
    }
    throw std::invalid_argument("harmonic kernel requires 1 <= l <= 3, |m| <= l");
}

double sphere_measure(int dim) { return dim == 1 ? 2.0 : (dim == 2 ? 2.0 * M_PI : 4.0 * M_PI); }

// integral of f over S^{n-1}
double sphere_integral(int dim, const std::function<double(const Vec3&)>& f) {
    if (dim == 1) return f({1.0, 0.0, 0.0}) + f({-1.0, 0.0, 0.0});
    if (dim == 2) {
        auto g = [&](double th) { return f({std::cos(th), std::sin(th), 0.0}); };
        return detail::integrate(g, 0.0, 2.0 * M_PI, 1e-13, 40);
    }
    // product rule with one doubling pass
    auto value = [&](int nz, int nt) {
        std::vector<double> zx, zw;
        detail::legendre_rule(nz, zx, zw);
        double s = 0.0;
        for (int i = 0; i < nz; ++i) {
            const double z = zx[static_cast<size_t>(i)];
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            double st = 0.0;
            for (int j = 0; j < nt; ++j) {
                const double th = 2.0 * M_PI * j / nt;
                st += f({r * std::cos(th), r * std::sin(th), z});
            }
            s += zw[static_cast<size_t>(i)] * st * (2.0 * M_PI / nt);
        }
        return s;
    };
    double v = value(96, 192), v2 = value(192, 384);
    return std::abs(v2 - v) <= 1e-11 * (std::abs(v2) + 1.0) ? v2 : value(384, 768);
}

Parity detect_parity(int dim, const std::function<double(const Vec3&)>& f) {
    double max_abs = 0.0, odd_defect = 0.0, even_defect = 0.0;
    auto probe = [&](const Vec3& x, const Vec3& mx) {
        const double a = f(x), b = f(mx);
        max_abs = std::max({max_abs, std::abs(a), std::abs(b)});
        odd_defect = std::max(odd_defect, std::abs(a + b));
        even_defect = std::max(even_defect, std::abs(a - b));
    };
    if (dim == 1) {
        probe({1, 0, 0}, {-1, 0, 0});
    } else if (dim == 2) {
        for (int k = 0; k < 257; ++k) {
            const double th = 2.0 * M_PI * k / 257.0;
            probe({std::cos(th), std::sin(th), 0}, {-std::cos(th), -std::sin(th), 0});
        }
    } else {
        for (int k = 0; k < 509; ++k) {
            const double z = -1.0 + 2.0 * (k + 0.5) / 509.0;
            const double th = 2.0 * M_PI * ((k * 131) % 509) / 509.0;
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            const Vec3 x{r * std::cos(th), r * std::sin(th), z};
            probe(x, {-x[0], -x[1], -x[2]});
        }
    }
    const double tol = 1e-10 * std::max(max_abs, 1e-30);
    if (odd_defect <= tol) return Parity::Odd;
    if (even_defect <= tol) return Parity::Even;
    return Parity::None;
}

}  // namespace

void KernelSpec::finalize() {
    const double raw_mean = sphere_integral(dim_, raw_);
    mean_offset_ = raw_mean / sphere_measure(dim_);
    auto sub = [this](const Vec3& x) { return raw_(x) - mean_offset_; };
    l1_ = sphere_integral(dim_, [&](const Vec3& x) { return std::abs(sub(x)); });
    llogl_ = sphere_integral(dim_, [&](const Vec3& x) {
        const double a = std::abs(sub(x));
        return a * (1.0 + std::max(std::log(a), 0.0));
    });
    mean_residual_ = std::abs(sphere_integral(dim_, sub));
    parity_ = detect_parity(dim_, sub);
}

KernelSpec KernelSpec::from_function(int dim, std::function<double(const Vec3&)> f,
                                     std::string name, bool singular) {
    if (dim < 1 || dim > 3) throw std::invalid_argument("kernel dimension must be 1..3");
    KernelSpec k;
    k.dim_ = dim;
    k.id_ = std::move(name);
    k.raw_ = std::move(f);
    k.singular_ = singular;
    k.finalize();
    return k;
}

KernelSpec KernelSpec::from_id(const std::string& id, int dim) {
    if (id.rfind("table:", 0) == 0) {
        KernelSpec k = from_table_file(id.substr(6));
        if (k.dim() != dim) throw std::invalid_argument("table kernel dimension mismatch");
        return k;
    }
    if (id == "sign") {
        if (dim != 1) throw std::invalid_argument("sign kernel is one-dimensional");
        return from_function(1, [](const Vec3& x) { return x[0] >= 0.0 ? 1.0 : -1.0; }, id);
    }
    if (id.rfind("cos:", 0) == 0 || id.rfind("sin:", 0) == 0) {
        if (dim != 2) throw std::invalid_argument(id + " kernel is two-dimensional");
        const int m = std::stoi(id.substr(4));
        if (m < 1) throw std::invalid_argument("harmonic index must be >= 1");
        const bool is_cos = id[0] == 'c';
        return from_function(2,
                             [m, is_cos](const Vec3& x) {
                                 const double th = std::atan2(x[1], x[0]);
                                 return is_cos ? std::cos(m * th) : std::sin(m * th);
                             },
                             id);
    }
    if (id.rfind("logsing", 0) == 0) {
        if (dim != 2) throw std::invalid_argument("logsing kernel is two-dimensional");
        double delta = 1e-6;
        if (id.size() > 8 && id[7] == ':') delta = std::stod(id.substr(8));
        if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("logsing delta in (0,1)");
        // odd, unbounded-looking profile truncated at |cos| = delta; L log L
        return from_function(2,
                             [delta](const Vec3& x) {
                                 const double c = x[0];
                                 const double s = c >= 0.0 ? 1.0 : -1.0;
                                 return s * std::log(1.0 / std::max(std::abs(c), delta));
                             },
                             id, /*singular=*/true);
    }
    if (id.rfind("harmonic:", 0) == 0) {
        if (dim != 3) throw std::invalid_argument("harmonic kernel is three-dimensional");
        const std::string spec = id.substr(9);
        const size_t comma = spec.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("expected harmonic:l,m");
        const int l = std::stoi(spec.substr(0, comma));
        const int m = std::stoi(spec.substr(comma + 1));
        return from_function(3, [l, m](const Vec3& x) { return harmonic(l, m, x); }, id);
    }
    throw std::invalid_argument("unknown kernel id: " + id);
}

KernelSpec KernelSpec::from_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open kernel table: " + path);
    bool singular = false;
    std::vector<double> vals;
    int dim = 0, nz = 0, nt = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.find("singular") != std::string::npos) singular = true;
            continue;
        }
        std::istringstream ls(line);
        if (dim == 0) {
            std::string kw;
            ls >> kw;
            if (kw != "dim") throw std::invalid_argument("table must start with 'dim n'");
            ls >> dim;
            if (dim == 3) ls >> nz >> nt;
            continue;
        }
        double v;
        while (ls >> v) vals.push_back(v);
    }
    if (dim == 1) {
        if (vals.size() != 2) throw std::invalid_argument("dim 1 table needs two values");
        const double vp = vals[0], vm = vals[1];
        return from_function(1, [vp, vm](const Vec3& x) { return x[0] >= 0.0 ? vp : vm; },
                             "table:" + path, singular);
    }
    if (dim == 2) {
        if (vals.size() < 4) throw std::invalid_argument("dim 2 table needs >= 4 samples");
        auto tab = std::make_shared<std::vector<double>>(std::move(vals));
        return from_function(2,
                             [tab](const Vec3& x) {
                                 const size_t n = tab->size();
                                 double th = std::atan2(x[1], x[0]);
                                 if (th < 0.0) th += 2.0 * M_PI;
                                 const double u = th / (2.0 * M_PI) * static_cast<double>(n);
                                 const size_t i = std::min(static_cast<size_t>(u), n - 1);
                                 const double f = u - static_cast<double>(i);
                                 return (*tab)[i] * (1.0 - f) + (*tab)[(i + 1) % n] * f;
                             },
                             "table:" + path, singular);
    }
    if (dim == 3) {
        if (nz < 2 || nt < 2 || vals.size() != static_cast<size_t>(nz) * static_cast<size_t>(nt))
            throw std::invalid_argument("dim 3 table needs nz*ntheta samples");
        auto tab = std::make_shared<std::vector<double>>(std::move(vals));
        const int NZ = nz, NT = nt;
        return from_function(3,
                             [tab, NZ, NT](const Vec3& x) {
                                 double th = std::atan2(x[1], x[0]);
                                 if (th < 0.0) th += 2.0 * M_PI;
                                 const double uz = (x[2] + 1.0) * 0.5 * NZ - 0.5;
                                 const double ut = th / (2.0 * M_PI) * NT;
                                 const int i0 = std::clamp(static_cast<int>(std::floor(uz)), 0, NZ - 1);
                                 const int i1 = std::min(i0 + 1, NZ - 1);
                                 const double fz = std::clamp(uz - i0, 0.0, 1.0);
                                 const int j0 = static_cast<int>(ut) % NT;
                                 const int j1 = (j0 + 1) % NT;
                                 const double ft = ut - std::floor(ut);
                                 auto at = [&](int i, int j) {
                                     return (*tab)[static_cast<size_t>(i) * NT + static_cast<size_t>(j)];
                                 };
                                 return (1 - fz) * ((1 - ft) * at(i0, j0) + ft * at(i0, j1)) +
                                        fz * ((1 - ft) * at(i1, j0) + ft * at(i1, j1));
                             },
                             "table:" + path, singular);
    }
    throw std::invalid_argument("table dimension must be 1..3");
}

}  // namespace oscint
