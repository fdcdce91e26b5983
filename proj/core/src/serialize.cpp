#include "jointgf/serialize.hpp"

namespace jointgf {

OrderedJson series_to_json(const UnivariateSeries& s) {
    OrderedJson coeffs = OrderedJson::array();
    for (int k = 0; k <= s.order(); ++k)
        coeffs.push_back(rational_to_string(s.coeff(k)));
    return OrderedJson{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

OrderedJson series_to_json(const TrivariateSeries& s) {
    const auto& b = s.bounds();
    OrderedJson entries = OrderedJson::array();
    for (int n = 0; n <= b[0]; ++n)
        for (int m = 0; m <= b[1]; ++m)
            for (int h = 0; h <= b[2]; ++h) {
                const Rational& c = s.coeff(n, m, h);
                if (sgn(c) == 0)
                    continue;
                entries.push_back(OrderedJson{
                    {"n", n}, {"m", m}, {"h", h}, {"coeff", rational_to_string(c)}});
            }
    return OrderedJson{{"bounds", {b[0], b[1], b[2]}}, {"entries", std::move(entries)}};
}

std::string format_real(const Real& value, int decimals) {
    return value.str(decimals, std::ios_base::fixed);
}

std::string format_real_full(const Real& value) {
    return value.str();
}

OrderedJson report_to_json(const SingularityReport& report) {
    OrderedJson j{{"sigma", report.sigma},
                  {"lambda", report.lambda},
                  {"applicable", report.applicable},
                  {"rho", format_real_full(report.rho)},
                  {"rho_5dp", format_real(report.rho, 5)}};
    if (!report.applicable) {
        j["reason"] = report.reason;
        return j;
    }
    j["gamma"] = format_real_full(report.gamma);
    j["growth_rate"] = format_real_full(report.growth_rate);
    j["growth_rate_5dp"] = format_real(report.growth_rate, 5);
    j["constant"] = format_real_full(report.constant);
    j["constant_7dp"] = format_real(report.constant, 7);
    j["diagnostics"] = OrderedJson{
        {"zeta_at_gamma", format_real_full(report.zeta_at_gamma)},
        {"zeta_prime_at_gamma", format_real_full(report.zeta_prime_at_gamma)},
        {"t_squared_at_gamma", format_real_full(report.t_squared_at_gamma)},
        {"u1", format_real_full(report.u1)}};
    return j;
}

} // namespace jointgf
