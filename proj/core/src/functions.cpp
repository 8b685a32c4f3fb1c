#include "bgap/functions.hpp"

#include <cmath>
#include <cstdlib>

#include "bgap/gap.hpp"

namespace bgap {

namespace {

void check_unit(const Rational& v, const char* what) {
    if (v.sign() < 0 || v > Rational(1)) {
        throw ParseError(std::string(what) + " must lie in [0,1], got " + v.str());
    }
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    while (true) {
        const auto pos = s.find(sep);
        if (pos == std::string_view::npos) {
            parts.push_back(s);
            return parts;
        }
        parts.push_back(s.substr(0, pos));
        s.remove_prefix(pos + 1);
    }
}

Rational eval_pwl(const std::vector<std::pair<Rational, Rational>>& pts, const Rational& t) {
    // Points are ascending in t with t0 = 0 and t_last = 1; find the segment
    // containing t and interpolate.
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const auto& [t0, v0] = pts[i];
        const auto& [t1, v1] = pts[i + 1];
        if (t >= t0 && t <= t1) {
            return v0 + (t - t0) * (v1 - v0) / (t1 - t0);
        }
    }
    throw DomainError("sample point " + t.str() + " outside [0,1]");
}

}  // namespace

FunctionSpec FunctionSpec::monomial(unsigned power) {
    if (power == 0) throw ParseError("monomial power must be >= 1");
    return FunctionSpec(Monomial{power});
}

FunctionSpec FunctionSpec::abs_shift(Rational center) {
    check_unit(center, "abs center");
    return FunctionSpec(AbsShift{std::move(center)});
}

FunctionSpec FunctionSpec::hat(Rational peak) {
    if (peak.sign() <= 0 || peak >= Rational(1)) {
        throw ParseError("hat peak must lie strictly inside (0,1), got " + peak.str());
    }
    return FunctionSpec(Hat{std::move(peak)});
}

FunctionSpec FunctionSpec::piecewise_linear(std::vector<std::pair<Rational, Rational>> points) {
    if (points.size() < 2) throw ParseError("pwl needs at least two points");
    if (!points.front().first.is_zero() || points.back().first != Rational(1)) {
        throw ParseError("pwl breakpoints must start at 0 and end at 1");
    }
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (points[i].first >= points[i + 1].first) {
            throw ParseError("pwl breakpoints must be strictly increasing");
        }
    }
    return FunctionSpec(PiecewiseLinear{std::move(points)});
}

FunctionSpec FunctionSpec::exp_like() {
    return FunctionSpec(ExpLike{});
}

FunctionSpec FunctionSpec::parse(std::string_view text) {
    if (text == "exp") return exp_like();
    if (text.size() >= 2 && text.front() == 'e' &&
        text.find(':') == std::string_view::npos) {
        const std::string digits(text.substr(1));
        char* end = nullptr;
        const unsigned long p = std::strtoul(digits.c_str(), &end, 10);
        if (end == nullptr || *end != '\0' || digits.empty()) {
            throw ParseError("bad monomial spec '" + std::string(text) + "'");
        }
        return monomial(static_cast<unsigned>(p));
    }
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw ParseError("unknown function spec '" + std::string(text) + "'");
    }
    const std::string_view head = text.substr(0, colon);
    const std::string_view body = text.substr(colon + 1);
    if (head == "abs") return abs_shift(Rational::parse(body));
    if (head == "hat") return hat(Rational::parse(body));
    if (head == "pwl") {
        std::vector<std::pair<Rational, Rational>> pts;
        for (const auto part : split(body, ';')) {
            const auto tv = split(part, ',');
            if (tv.size() != 2) {
                throw ParseError("bad pwl point '" + std::string(part) + "'");
            }
            pts.emplace_back(Rational::parse(tv[0]), Rational::parse(tv[1]));
        }
        return piecewise_linear(std::move(pts));
    }
    throw ParseError("unknown function spec '" + std::string(text) + "'");
}

std::string FunctionSpec::text() const {
    return std::visit(
        [](const auto& k) -> std::string {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, Monomial>) {
                return "e" + std::to_string(k.power);
            } else if constexpr (std::is_same_v<K, AbsShift>) {
                return "abs:" + k.center.str();
            } else if constexpr (std::is_same_v<K, Hat>) {
                return "hat:" + k.peak.str();
            } else if constexpr (std::is_same_v<K, PiecewiseLinear>) {
                std::string out = "pwl:";
                for (std::size_t i = 0; i < k.points.size(); ++i) {
                    if (i > 0) out += ';';
                    out += k.points[i].first.str() + "," + k.points[i].second.str();
                }
                return out;
            } else {
                return "exp";
            }
        },
        kind_);
}

bool FunctionSpec::exact_capable() const {
    return !std::holds_alternative<ExpLike>(kind_);
}

Rational FunctionSpec::eval_exact(const Rational& t) const {
    return std::visit(
        [&t](const auto& k) -> Rational {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, Monomial>) {
                Rational r(1);
                for (unsigned i = 0; i < k.power; ++i) r *= t;
                return r;
            } else if constexpr (std::is_same_v<K, AbsShift>) {
                return abs(t - k.center);
            } else if constexpr (std::is_same_v<K, Hat>) {
                if (t <= k.peak) return t / k.peak;
                return (Rational(1) - t) / (Rational(1) - k.peak);
            } else if constexpr (std::is_same_v<K, PiecewiseLinear>) {
                return eval_pwl(k.points, t);
            } else {
                throw UnsupportedExact("exp is float-only");
            }
        },
        kind_);
}

double FunctionSpec::eval_float(double t) const {
    return std::visit(
        [t](const auto& k) -> double {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, Monomial>) {
                double r = 1.0;
                for (unsigned i = 0; i < k.power; ++i) r *= t;
                return r;
            } else if constexpr (std::is_same_v<K, AbsShift>) {
                return std::fabs(t - k.center.to_double());
            } else if constexpr (std::is_same_v<K, Hat>) {
                const double c = k.peak.to_double();
                return t <= c ? t / c : (1.0 - t) / (1.0 - c);
            } else if constexpr (std::is_same_v<K, PiecewiseLinear>) {
                for (std::size_t i = 0; i + 1 < k.points.size(); ++i) {
                    const double t0 = k.points[i].first.to_double();
                    const double t1 = k.points[i + 1].first.to_double();
                    if (t >= t0 && t <= t1) {
                        const double v0 = k.points[i].second.to_double();
                        const double v1 = k.points[i + 1].second.to_double();
                        return v0 + (t - t0) * (v1 - v0) / (t1 - t0);
                    }
                }
                throw DomainError("sample point outside [0,1]");
            } else {
                return std::exp(t);
            }
        },
        kind_);
}

SampleVector FunctionSpec::sample(unsigned grid, EvalMode mode) const {
    if (grid < 2 || grid % 2 != 0) {
        throw LengthMismatch("grid size must be even and at least 2");
    }
    if (mode == EvalMode::exact) {
        if (!exact_capable()) {
            throw UnsupportedExact("function '" + text() + "' cannot be sampled exactly");
        }
        std::vector<Rational> vals(grid + 1);
        for (unsigned k = 0; k <= grid; ++k) {
            vals[k] = eval_exact(Rational(static_cast<long>(k), static_cast<long>(grid)));
        }
        return SampleVector::exact(grid, std::move(vals));
    }
    std::vector<double> vals(grid + 1);
    for (unsigned k = 0; k <= grid; ++k) {
        if (exact_capable()) {
            vals[k] = eval_exact(Rational(static_cast<long>(k), static_cast<long>(grid)))
                          .to_double();
        } else {
            vals[k] = eval_float(static_cast<double>(k) / grid);
        }
    }
    return SampleVector::approx(grid, std::move(vals));
}

bool is_convex_samples(std::span<const Rational> samples) {
    for (const auto& d : delta2(samples)) {
        if (d.sign() < 0) return false;
    }
    return true;
}

bool is_convex_samples(std::span<const double> samples, double tol) {
    for (const double d : delta2(samples)) {
        if (d < -tol) return false;
    }
    return true;
}

}  // namespace bgap
