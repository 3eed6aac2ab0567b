#include "ladderkit/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace ladderkit {

namespace {

std::vector<std::pair<double, double>> compute_gauss_legendre(int order) {
    // Newton on P_n with the three-term recurrence; standard cosine seeds.
    std::vector<std::pair<double, double>> nw(order);
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < order; ++i) {
        double x = std::cos(pi * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = order * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nw[i] = {x, 2.0 / ((1.0 - x * x) * pp * pp)};
    }
    return nw;
}

}  // namespace

const std::vector<std::pair<double, double>>& gauss_legendre(int order) {
    if (order < 2 || order > 256) throw QuadratureError("unsupported quadrature order");
    static std::map<int, std::vector<std::pair<double, double>>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
    return it->second;
}

double integrate_panels(const std::function<double(double)>& f, double a, double b, int panels,
                        const QuadratureOptions& opt) {
    if (panels < 1) throw QuadratureError("panel count must be positive");
    const auto& nw = gauss_legendre(opt.order);
    const double h = (b - a) / panels;
    std::vector<double> part(panels, 0.0);
#pragma omp parallel for schedule(static) if (opt.parallel)
    for (int k = 0; k < panels; ++k) {
        const double lo = a + k * h;
        const double mid = lo + 0.5 * h, half = 0.5 * h;
        double s = 0.0;
        for (const auto& [x, w] : nw) s += w * f(mid + half * x);
        part[k] = s * half;
    }
    // fixed-order reduction keeps the result independent of thread count
    double total = 0.0;
    for (const double v : part) total += v;
    return total;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt) {
    double prev = integrate_panels(f, a, b, 1, opt);
    for (int panels = 2; panels <= opt.max_panels; panels *= 2) {
        const double cur = integrate_panels(f, a, b, panels, opt);
        if (std::abs(cur - prev) < opt.tol * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
    throw QuadratureError("panel doubling failed to converge");
}

double integrate_decaying(const std::function<double(double)>& f, bool whole_line,
                          const QuadratureOptions& opt) {
    double t = 10.0;
    while (t < 1e4) {
        const double tail = std::max(std::abs(f(t)), whole_line ? std::abs(f(-t)) : 0.0);
        if (tail * (1.0 + t * t) < opt.tail_tol) break;
        t *= 1.4;
    }
    return integrate(f, whole_line ? -t : 0.0, t, opt);
}

double inner_product_numeric(const Wavefunction& a, const Wavefunction& b,
                             const QuadratureOptions& opt) {
    if (a.sys != b.sys || a.measure_exponent != b.measure_exponent)
        throw DomainError("inner product needs a common measure");
    const WavefunctionEvaluator ea(a), eb(b);
    const int me = a.measure_exponent;
    const bool line = !system(a.sys).radial;
    const auto f = [&](double x) {
        double w = ea(x) * eb(x);
        for (int j = 0; j < me; ++j) w *= x;
        return w;
    };
    return integrate_decaying(f, line, opt);
}

std::vector<std::vector<double>> gram_matrix(const std::vector<Wavefunction>& states,
                                             const QuadratureOptions& opt) {
    const std::size_t n = states.size();
    std::vector<std::vector<double>> g(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const double v = inner_product_numeric(states[i], states[j], opt);
            g[i][j] = v;
            g[j][i] = v;
        }
    return g;
}

}  // namespace ladderkit
