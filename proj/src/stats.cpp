#include "sketcheval/stats.hpp"

#include <cmath>
#include <limits>

#include "sketcheval/errors.hpp"

namespace sketcheval {

MetricSummary summarize(const std::vector<double>& values) {
    if (values.empty()) throw argument_error("summarize: empty sample");
    for (double v : values)
        if (!std::isfinite(v)) throw argument_error("summarize: non-finite sample value");

    MetricSummary s;
    s.n = values.size();
    bool all_equal = true;
    for (double v : values) all_equal = all_equal && v == values.front();
    if (all_equal) {  // keep constant samples at exactly std 0
        s.mean = values.front();
        return s;
    }
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(s.n);
    if (s.n > 1) {
        double ss = 0.0;
        for (double v : values) {
            double dev = v - s.mean;
            ss += dev * dev;
        }
        s.std = std::sqrt(ss / static_cast<double>(s.n - 1));
    }
    return s;
}

namespace {

// Continued fraction for the regularized incomplete beta, modified Lentz.
double beta_continued_fraction(double a, double b, double x) {
    constexpr double tiny = 1e-300;
    constexpr double tol = 1e-10;
    constexpr int max_iterations = 300;

    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;

    for (int m = 1; m <= max_iterations; ++m) {
        const double m2 = 2.0 * m;
        double coeff = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + coeff * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + coeff / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;

        coeff = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + coeff * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + coeff / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < tol) return h;
    }
    throw numerical_error("incomplete beta continued fraction did not converge");
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0))
        throw argument_error("incomplete beta: parameters must be positive");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;

    const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                             a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * beta_continued_fraction(a, b, x) / a;
    return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

TTestResult welch_t_test(const std::vector<double>& a, const std::vector<double>& b,
                         double alpha, TTestKind kind) {
    if (a.size() < 2 || b.size() < 2)
        throw argument_error("t-test: both samples require at least 2 values");
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw argument_error("t-test: alpha must be in (0, 1)");

    const MetricSummary sa = summarize(a), sb = summarize(b);
    const double na = static_cast<double>(sa.n), nb = static_cast<double>(sb.n);
    const double var_a = sa.std * sa.std, var_b = sb.std * sb.std;

    TTestResult r;
    double se2;
    if (kind == TTestKind::welch) {
        se2 = var_a / na + var_b / nb;
        if (se2 > 0.0) {
            const double term_a = var_a / na, term_b = var_b / nb;
            r.df = se2 * se2 /
                   (term_a * term_a / (na - 1.0) + term_b * term_b / (nb - 1.0));
        } else {
            r.df = na + nb - 2.0;
        }
    } else {
        const double pooled =
            ((na - 1.0) * var_a + (nb - 1.0) * var_b) / (na + nb - 2.0);
        se2 = pooled * (1.0 / na + 1.0 / nb);
        r.df = na + nb - 2.0;
    }

    const double diff = sa.mean - sb.mean;
    if (se2 > 0.0) {
        r.t = diff / std::sqrt(se2);
        r.p = regularized_incomplete_beta(r.df / 2.0, 0.5, r.df / (r.df + r.t * r.t));
    } else if (diff == 0.0) {
        r.t = 0.0;  // both samples constant and equal
        r.p = 1.0;
    } else {
        r.t = diff > 0.0 ? std::numeric_limits<double>::infinity()
                         : -std::numeric_limits<double>::infinity();
        r.p = 0.0;
    }
    r.significant = r.p < alpha;
    return r;
}

}  // namespace sketcheval
