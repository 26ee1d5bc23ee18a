#pragma once

#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <numbers>
#include <vector>

#include <fftw3.h>

#include "bhk/ff/field.hpp"

namespace bhk::ff {

/// values[m] = g(m) = sum_{x != 0} omega(x)^m Theta(x), m = 0 .. q-2.
struct GaussSumTable {
    std::shared_ptr<const FieldTable> field;
    std::vector<std::complex<double>> values;

    std::uint64_t order() const { return values.size(); }
    /// g(m) for any integer m.
    const std::complex<double>& operator()(std::int64_t m) const {
        return values[static_cast<std::size_t>(arith::mod(m, static_cast<std::int64_t>(values.size())))];
    }
};

namespace detail {

inline std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

/// Theta(gamma^j) for j = 0 .. q-2.
inline std::vector<std::complex<double>> theta_sequence(const FieldTable& f) {
    const std::uint64_t n = f.order();
    std::vector<std::complex<double>> roots(f.p());
    for (std::uint64_t k = 0; k < f.p(); ++k)
        roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(f.p()));
    std::vector<std::complex<double>> seq(n);
    for (std::uint64_t j = 0; j < n; ++j) seq[j] = roots[f.trace(f.exp(j))];
    return seq;
}

}  // namespace detail

/// O(q^2) summation straight from the definition.
inline std::vector<std::complex<double>> gauss_sums_direct(const FieldTable& f) {
    const std::uint64_t n = f.order();
    auto seq = detail::theta_sequence(f);
    std::vector<std::complex<double>> unit(n);
    for (std::uint64_t k = 0; k < n; ++k)
        unit[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
    std::vector<std::complex<double>> out(n);
    for (std::uint64_t m = 0; m < n; ++m) {
        std::complex<double> acc = 0;
        std::uint64_t idx = 0;
        for (std::uint64_t j = 0; j < n; ++j) {
            acc += seq[j] * unit[idx];
            idx += m;
            if (idx >= n) idx -= n;
        }
        out[m] = acc;
    }
    return out;
}

/// The same values as one length-(q-1) backward DFT of Theta(gamma^j).
inline std::vector<std::complex<double>> gauss_sums_dft(const FieldTable& f) {
    const auto n = static_cast<int>(f.order());
    auto seq = detail::theta_sequence(f);
    if (n == 1) return seq;
    auto* data = reinterpret_cast<fftw_complex*>(seq.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(detail::fftw_planner_mutex());
        plan = fftw_plan_dft_1d(n, data, data, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    if (!plan) throw Error("FFTW could not plan a transform of length " + std::to_string(n));
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(detail::fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }
    return seq;
}

enum class GaussMethod { Auto, Direct, Dft };

inline GaussSumTable gauss_sum_table(std::shared_ptr<const FieldTable> f, GaussMethod method = GaussMethod::Auto) {
    if (!f) throw PreconditionError("gauss_sum_table: null field");
    if (f->q() > kFieldCap) throw CapExceeded("Gauss table above field cap");
    GaussSumTable t;
    bool direct = method == GaussMethod::Direct || (method == GaussMethod::Auto && f->q() <= 64);
    if (direct && f->q() > 200'000) throw CapExceeded("direct Gauss summation limited to q <= 200000");
    t.values = direct ? gauss_sums_direct(*f) : gauss_sums_dft(*f);
    t.field = std::move(f);
    return t;
}

inline GaussSumTable gauss_sum_table(const FieldTable& f, GaussMethod method = GaussMethod::Auto) {
    return gauss_sum_table(std::make_shared<const FieldTable>(f), method);
}

}  // namespace bhk::ff
